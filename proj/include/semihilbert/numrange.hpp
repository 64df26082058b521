#pragma once

// Numerical radius and numerical range by rotation.
//
// For a matrix M let f(theta) = lambda_max(Re(e^{i theta} M)). Then f is the
// support function of the numerical range W(M) and w(M) = max_theta f(theta).
// The A-versions work on the compression C of T to R(A^{1/2}), where
// W_A(T) = W(C).

#include <optional>
#include <vector>

#include "semihilbert/space.hpp"

namespace semihilbert {

inline constexpr int kDefaultGrid = 256;
inline constexpr int kMaxRefinementRounds = 60;

struct RadiusEstimate {
  double lower = 0;
  double upper = 0;
  double witness_angle = 0;     // in [0, 2pi)
  ComplexVector witness_vector;  // unit (A-unit for a_radius)
  double gap = 0;                // certification gap requested
  int refinement_rounds = 0;
  bool degenerate = false;       // rank-0 A: W_A is empty, radius reported as 0

  double midpoint() const { return 0.5 * (lower + upper); }
};

struct RangeBoundary {
  std::vector<Complex> points;
  std::vector<double> angles;
  std::vector<ComplexVector> witnesses;  // A-unit vectors reproducing each point
};

/// Default certification gap for a compressed matrix: 1e-6 (1 + sigma_max(C)).
double default_gap(const ComplexMatrix& m);

/// Certified enclosure [lower, upper] of w(M) with upper - lower <= gap.
///
/// lower is the best sampled f(theta). On each angular cell [a, b] the maximum
/// of f is bounded two ways and the smaller bound is kept: the Lipschitz bound
/// (f(a) + f(b) + sigma_max(M) (b - a)) / 2, and the modulus of the vertex where
/// the support lines at a and b meet (W(M) lies inside every support
/// half-plane). Cells whose bound exceeds lower + gap are bisected, for at most
/// kMaxRefinementRounds rounds before NonConvergence.
RadiusEstimate classical_radius(const ComplexMatrix& m, int grid = kDefaultGrid,
                                std::optional<double> gap = std::nullopt);

/// w_A(T) through the compression; the witness is pulled back to an A-unit
/// vector of H. Throws NotSemiHilbertian when T does not map N(A) into N(A),
/// where w_A may be infinite.
RadiusEstimate a_radius(const SemiHilbertContext& ctx, const ComplexMatrix& t, int grid = kDefaultGrid,
                        std::optional<double> gap = std::nullopt);

/// w_A(T) straight from sup_theta || (e^{i theta} T + (e^{i theta} T)^{#A}) / 2 ||_A,
/// with the A-operator seminorm evaluated per angle. Sweeps a grid over
/// [0, pi) and zooms in on the best samples; uncertified, used as a second route.
double a_radius_via_adjoint(const SemiHilbertContext& ctx, const ComplexMatrix& t, int grid = kDefaultGrid);

/// Supporting points of W_A(T) on a uniform grid of n_points angles.
RangeBoundary a_range_boundary(const SemiHilbertContext& ctx, const ComplexMatrix& t, int n_points);

/// 1/2 ||T||_A - slack <= w_A(T) <= ||T||_A + slack with slack = 2 gap + 1e-8.
bool seminorm_radius_bounds_check(const SemiHilbertContext& ctx, const ComplexMatrix& t, int grid = kDefaultGrid,
                                  std::optional<double> gap = std::nullopt);

}  // namespace semihilbert
