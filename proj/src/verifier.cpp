#include "semihilbert/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "semihilbert/adjoint.hpp"
#include "semihilbert/linalg.hpp"
#include "semihilbert/numrange.hpp"

namespace semihilbert {

namespace {

// substream tags, one per kind of random draw
enum StreamTag : std::uint64_t {
  kTagEquivalentPair = 1,
  kTagForward = 2,
  kTagWitness = 3,
  kTagReplay = 4,
  kTagRange = 5,
  kTagRight = 6,
  kTagRightWitness = 7,
};

void require_member(const SemiHilbertContext& ctx, const ComplexMatrix& m, const char* name) {
  const auto cls = classify(ctx, m);
  if (!cls.in_semihilbert)
    throw Error(ErrorKind::NotSemiHilbertian,
                std::string(name) + " does not map N(A) into N(A) (violation " +
                    std::to_string(cls.violation_norm) + ")");
}

struct SearchResult {
  std::optional<RankOnePair> witness;
  double witness_gap = 0;
  double max_gap = 0;
  int trials = 0;
};

// `sides(x, y)` returns the two rank-one pairs whose radii are compared.
template <typename Sides>
SearchResult rank_one_search(const SemiHilbertContext& ctx, const CampaignConfig& cfg, std::uint64_t tag,
                             Sides sides) {
  SearchResult out;
  if (ctx.rank() == 0) return out;
  for (int trial = 0; trial < cfg.trials; ++trial) {
    Rng rng = substream(cfg.seed, tag, static_cast<std::uint64_t>(trial));
    const ComplexVector x = random_a_unit_vector(ctx, rng);
    const ComplexVector y = random_a_unit_vector(ctx, rng);
    out.trials = trial + 1;
    const auto [first, second] = sides(x, y);
    const double r1 = closed_form_radius(ctx, first);
    const double r2 = closed_form_radius(ctx, second);
    if (r1 < cfg.tol && r2 < cfg.tol) continue;
    const double gap = std::abs(r1 - r2);
    out.max_gap = std::max(out.max_gap, gap);
    if (gap > cfg.tol) {
      out.witness = RankOnePair{x, y};
      out.witness_gap = gap;
      return out;
    }
  }
  return out;
}

SearchResult product_search(const SemiHilbertContext& ctx, const ComplexMatrix& t, const ComplexMatrix& s,
                            const CampaignConfig& cfg, std::uint64_t tag = kTagWitness) {
  return rank_one_search(ctx, cfg, tag, [&](const ComplexVector& x, const ComplexVector& y) {
    return std::pair{RankOnePair{t * x, y}, RankOnePair{s * x, y}};
  });
}

double radius_mid(const SemiHilbertContext& ctx, const ComplexMatrix& m, const CampaignConfig& cfg) {
  return a_radius(ctx, m, cfg.grid, cfg.radius_gap).midpoint();
}

}  // namespace

std::string_view to_string(Ensemble e) {
  switch (e) {
    case Ensemble::Invertible: return "invertible";
    case Ensemble::RankDeficient: return "rank_deficient";
    case Ensemble::Fixed: return "fixed";
  }
  return "unknown";
}

std::optional<Ensemble> parse_ensemble(std::string_view name) {
  if (name == "invertible" || name == "A_invertible") return Ensemble::Invertible;
  if (name == "rank_deficient" || name == "A_rank_deficient") return Ensemble::RankDeficient;
  if (name == "fixed" || name == "A_fixed") return Ensemble::Fixed;
  return std::nullopt;
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Equivalent: return "equivalent";
    case Outcome::Separated: return "separated";
    case Outcome::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

void CampaignConfig::validate() const {
  if (dimension < 1) throw Error(ErrorKind::InvalidArgument, "dimension must be >= 1");
  if (trials < 1) throw Error(ErrorKind::InvalidArgument, "trials must be >= 1");
  if (!(tol > 0)) throw Error(ErrorKind::InvalidArgument, "tol must be positive");
  if (!(radius_gap > 0)) throw Error(ErrorKind::InvalidArgument, "radius gap must be positive");
  if (ensemble == Ensemble::Fixed && !fixed_a)
    throw Error(ErrorKind::InvalidArgument, "fixed ensemble needs a matrix");
}

ComplexMatrix generate_a(const CampaignConfig& cfg, Rng& rng) {
  cfg.validate();
  switch (cfg.ensemble) {
    case Ensemble::Invertible: return random_psd(rng, cfg.dimension, cfg.dimension);
    case Ensemble::RankDeficient: return random_psd(rng, cfg.dimension, cfg.dimension - 1);
    case Ensemble::Fixed: return *cfg.fixed_a;
  }
  return {};
}

HypothesisViolated::HypothesisViolated(RankOnePair witness, double gap)
    : Error(ErrorKind::HypothesisViolated,
            "rank-one radii differ by " + std::to_string(gap) + " at a sampled (x, y)"),
      witness_(std::move(witness)),
      gap_(gap) {}

EquivalenceVerdict recover_lambda(const SemiHilbertContext& ctx, const ComplexMatrix& t, const ComplexMatrix& s,
                                  double tol) {
  ctx.require_operator(t);
  ctx.require_operator(s);
  const ComplexMatrix ht = ctx.a_half() * t;
  const ComplexMatrix hs = ctx.a_half() * s;

  EquivalenceVerdict v;
  const double denom = hs.squaredNorm();
  if (denom <= tol) {
    v.residual = ht.norm();
    v.lambda_modulus_error = 0;
    return v;
  }
  // Frobenius inner product <ht, hs>_F = trace(hs* ht)
  const Complex lambda = hs.reshaped().dot(ht.reshaped()) / denom;
  const double scale = std::max(ht.norm(), hs.norm());
  v.lambda = lambda;
  v.residual = (ht - lambda * hs).norm() / scale;
  v.proportional = v.residual <= tol;
  v.lambda_modulus_error = std::abs(std::abs(lambda) - 1.0);
  return v;
}

ComplexMatrix make_equivalent_pair(const SemiHilbertContext& ctx, const ComplexMatrix& s, double phase,
                                   std::uint64_t seed) {
  ctx.require_operator(s);
  Rng rng = substream(seed, kTagEquivalentPair, 0);
  const Eigen::Index n = ctx.dimension();
  const ComplexMatrix& null_basis = ctx.null_basis();
  ComplexMatrix t = std::polar(1.0, phase) * s;
  if (null_basis.cols() > 0) t += null_basis * random_complex_matrix(rng, null_basis.cols(), n);
  return t;
}

double compression_gap(const SemiHilbertContext& ctx, const ComplexMatrix& t, const ComplexMatrix& s) {
  return (compress(ctx, t) - compress(ctx, s)).norm();
}

double forward_check(const SemiHilbertContext& ctx, const ComplexMatrix& t, const ComplexMatrix& s,
                     const CampaignConfig& cfg) {
  cfg.validate();
  require_member(ctx, t, "T");
  require_member(ctx, s, "S");
  const auto lam = recover_lambda(ctx, t, s, cfg.tol);
  if (!lam.proportional || !lam.unimodular(cfg.tol))
    throw Error(ErrorKind::NotProportional, "A^{1/2}T is not a unimodular multiple of A^{1/2}S");

  double worst = 0;
  for (int trial = 0; trial < cfg.trials; ++trial) {
    Rng rng = substream(cfg.seed, kTagForward, static_cast<std::uint64_t>(trial));
    const ComplexMatrix r = random_semihilbertian(ctx, rng);
    worst = std::max(worst, std::abs(radius_mid(ctx, t * r, cfg) - radius_mid(ctx, s * r, cfg)));
  }
  return worst;
}

std::optional<RankOnePair> separating_witness_search(const SemiHilbertContext& ctx, const ComplexMatrix& t,
                                                     const ComplexMatrix& s, const CampaignConfig& cfg) {
  cfg.validate();
  require_member(ctx, t, "T");
  require_member(ctx, s, "S");
  return product_search(ctx, t, s, cfg).witness;
}

double revalidate_witness(const SemiHilbertContext& ctx, const ComplexMatrix& t, const ComplexMatrix& s,
                          const RankOnePair& witness, double gap) {
  const ComplexMatrix r = materialize(ctx, witness);
  const double wt = a_radius(ctx, t * r, kDefaultGrid, gap).midpoint();
  const double ws = a_radius(ctx, s * r, kDefaultGrid, gap).midpoint();
  return std::abs(wt - ws);
}

ProofReplayReport replay_theorem_proof(const SemiHilbertContext& ctx, const ComplexMatrix& t,
                                       const ComplexMatrix& s, const CampaignConfig& cfg) {
  cfg.validate();
  require_member(ctx, t, "T");
  require_member(ctx, s, "S");

  const SearchResult refute = product_search(ctx, t, s, cfg);
  if (refute.witness) throw HypothesisViolated(*refute.witness, refute.witness_gap);

  ProofReplayReport report;
  if (ctx.rank() > 0) {
    for (int trial = 0; trial < cfg.trials; ++trial) {
      Rng rng = substream(cfg.seed, kTagReplay, static_cast<std::uint64_t>(trial));
      const ComplexVector x = random_a_unit_vector(ctx, rng);
      const ComplexVector tx = t * x;
      const ComplexVector sx = s * x;
      const double nt = seminorm(ctx, tx);
      const double ns = seminorm(ctx, sx);
      const double scale = std::max({1.0, nt, ns});
      report.max_norm_gap = std::max(report.max_norm_gap, std::abs(nt - ns) / scale);
      const double saturation = nt * ns - std::abs(semi_inner(ctx, tx, sx));
      report.max_saturation_gap = std::max(report.max_saturation_gap, std::abs(saturation) / (scale * scale));

      const ComplexVector u = ctx.a_half() * tx;
      const ComplexVector w = ctx.a_half() * sx;
      const double uu = u.squaredNorm();
      const double ww = w.squaredNorm();
      const double gram = (uu * ww - std::norm(w.dot(u))) / std::max(1.0, uu * ww);
      report.max_gram_det = std::max(report.max_gram_det, std::abs(gram));
      ++report.samples;
    }
  }

  const auto lam = recover_lambda(ctx, t, s, cfg.tol);
  report.lambda = lam.lambda;
  report.lambda_modulus_error = lam.lambda_modulus_error;
  report.passed = report.max_norm_gap <= cfg.tol && report.max_saturation_gap <= cfg.tol &&
                  report.max_gram_det <= cfg.tol && lam.lambda && lam.lambda_modulus_error <= cfg.tol;
  return report;
}

EquivalenceVerdict product_check(const SemiHilbertContext& ctx, const ComplexMatrix& t, const ComplexMatrix& s,
                                 const CampaignConfig& cfg) {
  cfg.validate();
  require_member(ctx, t, "T");
  require_member(ctx, s, "S");
  EquivalenceVerdict v = recover_lambda(ctx, t, s, cfg.tol);
  v.compression_gap = compression_gap(ctx, t, s);

  if (v.proportional && v.unimodular(cfg.tol)) {
    v.max_radius_gap = forward_check(ctx, t, s, cfg);
    v.trials_run = cfg.trials;
    v.outcome = v.max_radius_gap <= 2.0 * cfg.radius_gap + cfg.tol ? Outcome::Equivalent : Outcome::Inconclusive;
    return v;
  }
  const SearchResult found = product_search(ctx, t, s, cfg);
  v.trials_run = found.trials;
  v.max_radius_gap = found.max_gap;
  if (found.witness) {
    v.witness = found.witness;
    v.witness_gap = found.witness_gap;
    v.outcome = Outcome::Separated;
  }
  return v;
}

EquivalenceVerdict rankone_check(const SemiHilbertContext& ctx, const ComplexMatrix& t, const ComplexMatrix& s,
                                 const CampaignConfig& cfg) {
  cfg.validate();
  require_member(ctx, t, "T");
  require_member(ctx, s, "S");
  EquivalenceVerdict v = recover_lambda(ctx, t, s, cfg.tol);
  v.compression_gap = compression_gap(ctx, t, s);

  const SearchResult found = product_search(ctx, t, s, cfg);
  v.trials_run = found.trials;
  v.max_radius_gap = found.max_gap;
  if (found.witness) {
    v.witness = found.witness;
    v.witness_gap = found.witness_gap;
    v.outcome = Outcome::Separated;
  } else if (v.proportional && v.unimodular(cfg.tol)) {
    v.outcome = Outcome::Equivalent;
  }
  return v;
}

EquivalenceVerdict range_equality_check(const SemiHilbertContext& ctx, const ComplexMatrix& t,
                                        const ComplexMatrix& s, const CampaignConfig& cfg) {
  cfg.validate();
  require_member(ctx, t, "T");
  require_member(ctx, s, "S");
  EquivalenceVerdict v = recover_lambda(ctx, t, s, cfg.tol);
  v.compression_gap = compression_gap(ctx, t, s);
  const bool lambda_is_one = v.proportional && v.lambda && std::abs(*v.lambda - 1.0) <= cfg.tol;

  for (int trial = 0; trial < cfg.trials; ++trial) {
    Rng rng = substream(cfg.seed, kTagRange, static_cast<std::uint64_t>(trial));
    const ComplexMatrix r = random_semihilbertian(ctx, rng);
    const ComplexMatrix tr = t * r;
    const ComplexMatrix sr = s * r;
    v.max_radius_gap = std::max(v.max_radius_gap, std::abs(radius_mid(ctx, tr, cfg) - radius_mid(ctx, sr, cfg)));

    const RangeBoundary first = a_range_boundary(ctx, tr, cfg.boundary_points);
    const RangeBoundary second = a_range_boundary(ctx, sr, cfg.boundary_points);
    for (std::size_t k = 0; k < first.points.size(); ++k) {
      // support values h(theta) = Re(e^{i theta} p(theta)); a larger support value
      // puts the point beyond the other set's support line by the difference
      const Complex rot = std::polar(1.0, first.angles[k]);
      const double h1 = std::real(rot * first.points[k]);
      const double h2 = std::real(rot * second.points[k]);
      const double distance = std::abs(h1 - h2);
      if (!v.range_evidence || distance > v.range_evidence->distance) {
        const bool from_first = h1 > h2;
        v.range_evidence = RangeEvidence{from_first ? first.points[k] : second.points[k], first.angles[k], distance,
                                         trial, from_first};
      }
    }
    v.trials_run = trial + 1;
  }

  if (lambda_is_one)
    v.outcome = Outcome::Equivalent;
  else if (v.range_evidence && v.range_evidence->distance > cfg.tol)
    v.outcome = Outcome::Separated;
  return v;
}

EquivalenceVerdict right_multiplication_check(const SemiHilbertContext& ctx, const ComplexMatrix& t,
                                              const ComplexMatrix& s, const CampaignConfig& cfg) {
  cfg.validate();
  require_member(ctx, t, "T");
  require_member(ctx, s, "S");
  const ComplexMatrix t_sharp = sharp(ctx, t);
  const ComplexMatrix s_sharp = sharp(ctx, s);
  EquivalenceVerdict v = recover_lambda(ctx, t_sharp, s_sharp, cfg.tol);
  v.compression_gap = compression_gap(ctx, t_sharp, s_sharp);

  for (int trial = 0; trial < cfg.trials; ++trial) {
    Rng rng = substream(cfg.seed, kTagRight, static_cast<std::uint64_t>(trial));
    const ComplexMatrix r = random_semihilbertian(ctx, rng);
    v.max_radius_gap = std::max(v.max_radius_gap, std::abs(radius_mid(ctx, r * t, cfg) - radius_mid(ctx, r * s, cfg)));
  }
  v.trials_run = cfg.trials;

  if (v.proportional && v.unimodular(cfg.tol)) {
    v.outcome = Outcome::Equivalent;
    return v;
  }
  const SearchResult found =
      rank_one_search(ctx, cfg, kTagRightWitness, [&](const ComplexVector& x, const ComplexVector& y) {
        return std::pair{RankOnePair{x, t_sharp * y}, RankOnePair{x, s_sharp * y}};
      });
  if (found.witness) {
    v.witness = found.witness;
    v.witness_gap = found.witness_gap;
    v.outcome = Outcome::Separated;
  }
  return v;
}

EquivalenceVerdict identity_comparison_check(const SemiHilbertContext& ctx, const ComplexMatrix& t,
                                             const CampaignConfig& cfg, bool range_mode) {
  const ComplexMatrix identity = ComplexMatrix::Identity(ctx.dimension(), ctx.dimension());
  return range_mode ? range_equality_check(ctx, t, identity, cfg) : product_check(ctx, t, identity, cfg);
}

}  // namespace semihilbert
