#pragma once

// Randomized and constructive checks of the product characterization:
// for T, S mapping N(A) into N(A),
//   A^{1/2} T = lambda A^{1/2} S with |lambda| = 1
//   <=> w_A(TR) = w_A(SR) for every admissible R
//   <=> w_A(Tx (x)_A y) = w_A(Sx (x)_A y) for all nonzero x, y,
// plus the numerical-range, right-multiplication and S = I variants.
//
// Unit circle membership is |lambda| within tol of 1.

#include <cstdint>
#include <optional>
#include <string>

#include "semihilbert/error.hpp"
#include "semihilbert/rankone.hpp"
#include "semihilbert/random.hpp"
#include "semihilbert/space.hpp"

namespace semihilbert {

enum class Ensemble { Invertible, RankDeficient, Fixed };

std::string_view to_string(Ensemble e);
std::optional<Ensemble> parse_ensemble(std::string_view name);

struct CampaignConfig {
  int dimension = 4;
  int trials = 100;
  std::uint64_t seed = 0;
  double tol = 1e-6;
  Ensemble ensemble = Ensemble::Invertible;
  std::optional<ComplexMatrix> fixed_a;
  double radius_gap = 1e-6;  // certification gap for every radius computed in a campaign
  int grid = 64;             // initial angular grid for those radii
  int boundary_points = 64;  // supporting points per numerical range sample

  void validate() const;
};

/// A for the configured ensemble: full rank, rank dimension - 1, or the fixed matrix.
ComplexMatrix generate_a(const CampaignConfig& cfg, Rng& rng);

enum class Outcome { Equivalent, Separated, Inconclusive };
std::string_view to_string(Outcome o);

/// A point of one numerical range certified to lie at least `distance` away
/// from the other range: some support line of the other set separates them.
struct RangeEvidence {
  Complex point;
  double angle;
  double distance;
  int trial;
  bool from_first;  // point belongs to W_A(TR) (true) or W_A(SR)
};

struct EquivalenceVerdict {
  Outcome outcome = Outcome::Inconclusive;
  bool proportional = false;
  std::optional<Complex> lambda;
  double lambda_modulus_error = 0;
  double residual = 0;  // ||A^{1/2}T - lambda A^{1/2}S||_F / max(||A^{1/2}T||_F, ||A^{1/2}S||_F)
  std::optional<RankOnePair> witness;
  double witness_gap = 0;
  double max_radius_gap = 0;
  double compression_gap = 0;  // ||C_T - C_S||_F
  int trials_run = 0;
  std::optional<RangeEvidence> range_evidence;

  bool unimodular(double tol) const { return lambda && lambda_modulus_error <= tol; }
};

class HypothesisViolated : public Error {
 public:
  HypothesisViolated(RankOnePair witness, double gap);
  const RankOnePair& witness() const { return witness_; }
  double gap() const { return gap_; }

 private:
  RankOnePair witness_;
  double gap_;
};

/// Least-squares lambda = <A^{1/2}T, A^{1/2}S>_F / ||A^{1/2}S||_F^2; absent when
/// the denominator is <= tol. Fills proportional, lambda, residual and
/// lambda_modulus_error only.
EquivalenceVerdict recover_lambda(const SemiHilbertContext& ctx, const ComplexMatrix& t, const ComplexMatrix& s,
                                  double tol = 1e-6);

/// e^{i phase} S + N with the columns of N in N(A).
ComplexMatrix make_equivalent_pair(const SemiHilbertContext& ctx, const ComplexMatrix& s, double phase,
                                   std::uint64_t seed);

/// ||compress(T) - compress(S)||_F.
double compression_gap(const SemiHilbertContext& ctx, const ComplexMatrix& t, const ComplexMatrix& s);

/// max over cfg.trials random admissible R of |w_A(TR) - w_A(SR)| (certified
/// midpoints). Requires a unimodular lambda, else NotProportional.
double forward_check(const SemiHilbertContext& ctx, const ComplexMatrix& t, const ComplexMatrix& s,
                     const CampaignConfig& cfg);

/// Random (x, y) with |w_A(Tx (x)_A y) - w_A(Sx (x)_A y)| > tol, using the
/// closed-form rank-one radius. Pairs where both radii are below tol are skipped.
std::optional<RankOnePair> separating_witness_search(const SemiHilbertContext& ctx, const ComplexMatrix& t,
                                                     const ComplexMatrix& s, const CampaignConfig& cfg);

/// Radius gap of a product-mode witness recomputed from scratch:
/// |a_radius(T (x (x)_A y)) - a_radius(S (x (x)_A y))| by midpoints.
double revalidate_witness(const SemiHilbertContext& ctx, const ComplexMatrix& t, const ComplexMatrix& s,
                          const RankOnePair& witness, double gap);

struct ProofReplayReport {
  int samples = 0;
  double max_norm_gap = 0;        // | ||Tx||_A - ||Sx||_A |, relative to max(1, norms)
  double max_saturation_gap = 0;  // ||Tx||_A ||Sx||_A - |<Tx, Sx>_A|, same scaling squared
  double max_gram_det = 0;        // Gram determinant of A^{1/2}Tx, A^{1/2}Sx, normalized
  std::optional<Complex> lambda;
  double lambda_modulus_error = 0;
  bool passed = false;
};

/// Replays the argument from rank-one radius equality to proportionality on
/// random A-unit x. Throws HypothesisViolated if sampling finds (x, y) with
/// unequal rank-one radii.
ProofReplayReport replay_theorem_proof(const SemiHilbertContext& ctx, const ComplexMatrix& t, const ComplexMatrix& s,
                                       const CampaignConfig& cfg);

/// Product version: lambda recovery, then forward radius campaign or witness search.
EquivalenceVerdict product_check(const SemiHilbertContext& ctx, const ComplexMatrix& t, const ComplexMatrix& s,
                                 const CampaignConfig& cfg);

/// Rank-one version: lambda recovery plus witness search over x (x)_A y.
EquivalenceVerdict rankone_check(const SemiHilbertContext& ctx, const ComplexMatrix& t, const ComplexMatrix& s,
                                 const CampaignConfig& cfg);

/// W_A(TR) = W_A(SR) version; equivalence needs lambda = 1.
EquivalenceVerdict range_equality_check(const SemiHilbertContext& ctx, const ComplexMatrix& t,
                                        const ComplexMatrix& s, const CampaignConfig& cfg);

/// w_A(RT) = w_A(RS) version, decided on T^{#A} and S^{#A}.
EquivalenceVerdict right_multiplication_check(const SemiHilbertContext& ctx, const ComplexMatrix& t,
                                              const ComplexMatrix& s, const CampaignConfig& cfg);

/// S = I specialization; range_mode selects the numerical-range variant.
EquivalenceVerdict identity_comparison_check(const SemiHilbertContext& ctx, const ComplexMatrix& t,
                                             const CampaignConfig& cfg, bool range_mode = false);

}  // namespace semihilbert
