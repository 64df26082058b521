#include "semihilbert/rankone.hpp"

#include <cmath>
#include <string>

#include "semihilbert/adjoint.hpp"
#include "semihilbert/error.hpp"
#include "semihilbert/linalg.hpp"

namespace semihilbert {

namespace {

void require_pair(const SemiHilbertContext& ctx, const RankOnePair& p) {
  ctx.require_vector(p.x);
  ctx.require_vector(p.y);
}

}  // namespace

ComplexMatrix materialize(const SemiHilbertContext& ctx, const RankOnePair& p) {
  require_pair(ctx, p);
  return p.x * (ctx.a() * p.y).adjoint();
}

double closed_form_radius(const SemiHilbertContext& ctx, const RankOnePair& p) {
  require_pair(ctx, p);
  return 0.5 * (std::abs(semi_inner(ctx, p.x, p.y)) + seminorm(ctx, p.x) * seminorm(ctx, p.y));
}

bool rankone_algebra_check(const SemiHilbertContext& ctx, const RankOnePair& p, const ComplexMatrix& t) {
  require_pair(ctx, p);
  const auto cls = classify(ctx, t);
  if (!cls.in_semihilbert)
    throw Error(ErrorKind::NotSemiHilbertian, "T violation " + std::to_string(cls.violation_norm));

  const ComplexMatrix xy = materialize(ctx, p);
  const double vec_scale = (1.0 + max_abs(p.x)) * (1.0 + max_abs(p.y));
  const double tol = 1e-8 * residual_scale(ctx, t) * vec_scale * (1.0 + ctx.a_max_abs());
  auto close = [&](const ComplexMatrix& lhs, const ComplexMatrix& rhs) { return max_abs(ComplexMatrix(lhs - rhs)) <= tol; };

  const double norm_product = seminorm(ctx, p.x) * seminorm(ctx, p.y);
  const bool norm_ok = std::abs(a_operator_seminorm(ctx, xy) - norm_product) <= tol;
  // y (x)_A x as an operator; the reduced adjoint picks the representative P y
  const bool sharp_ok = close(sharp(ctx, xy), materialize(ctx, {ctx.range_projector() * p.y, p.x}));
  const bool left_ok = close(t * xy, materialize(ctx, {t * p.x, p.y}));
  const bool right_ok = close(xy * t, materialize(ctx, {p.x, sharp(ctx, t) * p.y}));
  const ComplexVector cx = ctx.coordinates(p.x);
  const ComplexVector cy = ctx.coordinates(p.y);
  const bool tilde_ok = close(compress(ctx, xy), cx * cy.adjoint());
  return norm_ok && sharp_ok && left_ok && right_ok && tilde_ok;
}

}  // namespace semihilbert
