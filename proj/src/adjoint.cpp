#include "semihilbert/adjoint.hpp"

#include <string>

#include "semihilbert/error.hpp"
#include "semihilbert/linalg.hpp"

namespace semihilbert {

namespace {

constexpr double kIdentityTol = 1e-8;

void require_semihilbert(const SemiHilbertContext& ctx, const ComplexMatrix& t) {
  const auto cls = classify(ctx, t);
  if (!cls.in_semihilbert)
    throw Error(ErrorKind::NotSemiHilbertian,
                "T admits no A-adjoint (violation " + std::to_string(cls.violation_norm) + ")");
}

}  // namespace

ComplexMatrix sharp(const SemiHilbertContext& ctx, const ComplexMatrix& t) {
  require_semihilbert(ctx, t);
  return ctx.a_pinv() * t.adjoint() * ctx.a();
}

double adjoint_residual(const SemiHilbertContext& ctx, const ComplexMatrix& t, const ComplexMatrix& x) {
  ctx.require_operator(t);
  ctx.require_operator(x);
  return max_abs(ComplexMatrix(ctx.a() * x - t.adjoint() * ctx.a()));
}

ComplexMatrix double_sharp_projection(const SemiHilbertContext& ctx, const ComplexMatrix& t) {
  const ComplexMatrix twice = sharp(ctx, sharp(ctx, t));
  const auto& p = ctx.range_projector();
  const double residual = max_abs(ComplexMatrix(twice - p * t * p));
  if (residual > kIdentityTol * residual_scale(ctx, t))
    throw Error(ErrorKind::NumericalCheckFailed,
                "(T^#)^# differs from P T P by " + std::to_string(residual));
  return twice;
}

}  // namespace semihilbert
