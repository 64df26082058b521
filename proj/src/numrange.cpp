#include "semihilbert/numrange.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "semihilbert/adjoint.hpp"
#include "semihilbert/error.hpp"
#include "semihilbert/linalg.hpp"

namespace semihilbert {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct TopEigen {
  double value;
  ComplexVector vector;
};

TopEigen rotated_top(const ComplexMatrix& m, double theta) {
  const ComplexMatrix h = hermitian_part(ComplexMatrix(std::polar(1.0, theta) * m));
  auto eig = herm_eig(h);
  return {eig.values(0), eig.vectors.col(0)};
}

struct Cell {
  double a, b;
  double fa, fb;
  double bound;
};

// Upper bound for max f on [a, b], see classical_radius.
double cell_bound(double a, double fa, double b, double fb, double lipschitz) {
  double bound = 0.5 * (fa + fb + lipschitz * (b - a));
  const double det = std::sin(a - b);
  if (std::abs(det) > 1e-300) {
    // support lines x cos(t) - y sin(t) = f(t) for t = a, b
    const double x = (-fa * std::sin(b) + std::sin(a) * fb) / det;
    const double y = (std::cos(a) * fb - std::cos(b) * fa) / det;
    bound = std::min(bound, std::hypot(x, y));
  }
  return std::max({bound, fa, fb});
}

void require_member(const SemiHilbertContext& ctx, const ComplexMatrix& t) {
  const auto cls = classify(ctx, t);
  if (!cls.in_semihilbert)
    throw Error(ErrorKind::NotSemiHilbertian,
                "T does not map N(A) into N(A) (violation " + std::to_string(cls.violation_norm) +
                    "); w_A(T) may be +inf and is undefined by this method");
}

double wrap_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0) t += kTwoPi;
  if (t >= kTwoPi) t = 0;
  return t;
}

}  // namespace

double default_gap(const ComplexMatrix& m) { return 1e-6 * (1.0 + spectral_norm(m)); }

RadiusEstimate classical_radius(const ComplexMatrix& m, int grid, std::optional<double> gap) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::NotSquare, "numerical radius needs a square matrix");
  if (grid < 4) throw Error(ErrorKind::InvalidArgument, "grid must be at least 4");
  require_finite(m, "matrix");

  RadiusEstimate est;
  est.gap = gap ? *gap : default_gap(m);
  if (!(est.gap > 0)) throw Error(ErrorKind::InvalidArgument, "certification gap must be positive");
  if (m.rows() == 0) {
    est.degenerate = true;
    return est;
  }

  const double lipschitz = spectral_norm(m);
  double best = -1;

  auto sample = [&](double theta) {
    TopEigen top = rotated_top(m, theta);
    if (top.value > best) {
      best = top.value;
      est.witness_angle = wrap_angle(theta);
      est.witness_vector = std::move(top.vector);
    }
    return top.value;
  };

  std::vector<double> values(static_cast<std::size_t>(grid));
  for (int k = 0; k < grid; ++k) values[k] = sample(kTwoPi * k / grid);

  std::vector<Cell> active;
  active.reserve(static_cast<std::size_t>(grid));
  for (int k = 0; k < grid; ++k) {
    const double a = kTwoPi * k / grid;
    const double b = kTwoPi * (k + 1) / grid;
    const double fa = values[k];
    const double fb = values[(k + 1) % grid];
    active.push_back({a, b, fa, fb, cell_bound(a, fa, b, fb, lipschitz)});
  }

  double pruned_bound = best;
  int rounds = 0;
  while (true) {
    std::vector<Cell> keep;
    for (const auto& cell : active) {
      if (cell.bound <= best + est.gap)
        pruned_bound = std::max(pruned_bound, cell.bound);
      else
        keep.push_back(cell);
    }
    if (keep.empty()) break;
    if (rounds == kMaxRefinementRounds)
      throw Error(ErrorKind::NonConvergence, "radius refinement exceeded " +
                                                 std::to_string(kMaxRefinementRounds) + " rounds");
    ++rounds;
    active.clear();
    for (const auto& cell : keep) {
      const double mid = 0.5 * (cell.a + cell.b);
      const double fm = sample(mid);
      active.push_back({cell.a, mid, cell.fa, fm, cell_bound(cell.a, cell.fa, mid, fm, lipschitz)});
      active.push_back({mid, cell.b, fm, cell.fb, cell_bound(mid, fm, cell.b, cell.fb, lipschitz)});
    }
  }

  est.lower = std::max(0.0, best);
  est.upper = std::max(est.lower, pruned_bound);
  est.refinement_rounds = rounds;
  return est;
}

RadiusEstimate a_radius(const SemiHilbertContext& ctx, const ComplexMatrix& t, int grid, std::optional<double> gap) {
  require_member(ctx, t);
  if (ctx.rank() == 0) {
    RadiusEstimate est;
    est.degenerate = true;
    est.gap = gap.value_or(1e-6);
    est.witness_vector = ComplexVector::Zero(ctx.dimension());
    return est;
  }
  const ComplexMatrix c = compress(ctx, t);
  RadiusEstimate est = classical_radius(c, grid, gap);
  est.witness_vector = ctx.lift(est.witness_vector);
  return est;
}

double a_radius_via_adjoint(const SemiHilbertContext& ctx, const ComplexMatrix& t, int grid) {
  require_member(ctx, t);
  if (grid < 4) throw Error(ErrorKind::InvalidArgument, "grid must be at least 4");
  if (ctx.rank() == 0) return 0;
  const ComplexMatrix t_sharp = sharp(ctx, t);

  auto real_part_norm = [&](double theta) {
    const Complex phase = std::polar(1.0, theta);
    const ComplexMatrix re = 0.5 * (phase * t + std::conj(phase) * t_sharp);
    return a_operator_seminorm(ctx, re);
  };

  // ||Re_A(e^{i theta} T)||_A has period pi.
  const double step = std::numbers::pi / grid;
  std::vector<std::pair<double, double>> samples;
  for (int k = 0; k < grid; ++k) samples.emplace_back(real_part_norm(step * k), step * k);
  std::sort(samples.begin(), samples.end(), std::greater<>());

  double best = samples.front().first;
  constexpr int kStarts = 3;
  constexpr int kZoomLevels = 25;
  constexpr int kZoomPoints = 9;
  for (int s = 0; s < std::min<int>(kStarts, grid); ++s) {
    double center = samples[s].second;
    double half_width = step;
    double local = samples[s].first;
    for (int level = 0; level < kZoomLevels; ++level) {
      double next = center;
      for (int j = 0; j < kZoomPoints; ++j) {
        const double theta = center - half_width + 2.0 * half_width * j / (kZoomPoints - 1);
        const double value = real_part_norm(theta);
        if (value > local) {
          local = value;
          next = theta;
        }
      }
      center = next;
      half_width /= 4.0;
    }
    best = std::max(best, local);
  }
  return best;
}

RangeBoundary a_range_boundary(const SemiHilbertContext& ctx, const ComplexMatrix& t, int n_points) {
  require_member(ctx, t);
  if (n_points < 1) throw Error(ErrorKind::InvalidArgument, "n_points must be positive");
  if (ctx.rank() == 0) throw Error(ErrorKind::ZeroRank, "A = 0: no A-unit vectors, W_A(T) is empty");

  const ComplexMatrix c = compress(ctx, t);
  RangeBoundary out;
  out.points.reserve(static_cast<std::size_t>(n_points));
  for (int k = 0; k < n_points; ++k) {
    const double theta = kTwoPi * k / n_points;
    const TopEigen top = rotated_top(c, theta);
    out.angles.push_back(theta);
    out.points.push_back(top.vector.dot(c * top.vector));
    out.witnesses.push_back(ctx.lift(top.vector));
  }
  return out;
}

bool seminorm_radius_bounds_check(const SemiHilbertContext& ctx, const ComplexMatrix& t, int grid,
                                  std::optional<double> gap) {
  const double norm = a_operator_seminorm(ctx, t);
  const RadiusEstimate est = a_radius(ctx, t, grid, gap);
  const double slack = 2.0 * est.gap + 1e-8;
  return 0.5 * norm - slack <= est.lower && est.upper <= norm + slack;
}

}  // namespace semihilbert
