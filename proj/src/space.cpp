#include "semihilbert/space.hpp"

#include <cmath>
#include <string>

#include "semihilbert/error.hpp"
#include "semihilbert/linalg.hpp"

namespace semihilbert {

SemiHilbertContext::SemiHilbertContext(const ComplexMatrix& a, double tol) : tol_(tol) {
  if (!(tol >= 0)) throw Error(ErrorKind::InvalidArgument, "context tolerance must be nonnegative");
  if (a.rows() != a.cols()) throw Error(ErrorKind::NotSquare, "A must be square");
  require_finite(a, "A");

  const auto eig = herm_eig(a);
  const Eigen::Index n = a.rows();
  if (n > 0 && eig.values(n - 1) < -tol)
    throw Error(ErrorKind::NotPositive, "A has eigenvalue " + std::to_string(eig.values(n - 1)));

  a_ = hermitian_part(a);
  a_max_abs_ = max_abs(a_);

  Eigen::Index rank = 0;
  while (rank < n && eig.values(rank) > tol) ++rank;

  range_basis_ = eig.vectors.leftCols(rank);
  null_basis_ = eig.vectors.rightCols(n - rank);
  pos_eigs_ = eig.values.head(rank);
  sqrt_eigs_ = pos_eigs_.cwiseSqrt();

  const auto& v = range_basis_;
  a_half_ = v * sqrt_eigs_.cast<Complex>().asDiagonal() * v.adjoint();
  a_half_pinv_ = v * sqrt_eigs_.cwiseInverse().cast<Complex>().asDiagonal() * v.adjoint();
  a_pinv_ = v * pos_eigs_.cwiseInverse().cast<Complex>().asDiagonal() * v.adjoint();
  range_projector_ = v * v.adjoint();
  null_projector_ = null_basis_ * null_basis_.adjoint();
}

ComplexVector SemiHilbertContext::coordinates(const ComplexVector& x) const {
  require_vector(x);
  return sqrt_eigs_.cast<Complex>().asDiagonal() * (range_basis_.adjoint() * x);
}

ComplexVector SemiHilbertContext::lift(const ComplexVector& c) const {
  if (c.size() != rank()) throw Error(ErrorKind::DimensionMismatch, "coordinate vector length differs from rank");
  return range_basis_ * (sqrt_eigs_.cwiseInverse().cast<Complex>().asDiagonal() * c);
}

void SemiHilbertContext::require_vector(const ComplexVector& x) const {
  if (x.size() != dimension())
    throw Error(ErrorKind::DimensionMismatch,
                "vector of length " + std::to_string(x.size()) + " in dimension " + std::to_string(dimension()));
}

void SemiHilbertContext::require_operator(const ComplexMatrix& t) const {
  if (t.rows() != dimension() || t.cols() != dimension())
    throw Error(ErrorKind::DimensionMismatch, "operator is " + std::to_string(t.rows()) + "x" +
                                                  std::to_string(t.cols()) + ", expected " +
                                                  std::to_string(dimension()));
}

SemiHilbertContext new_context(const ComplexMatrix& a, double tol) { return SemiHilbertContext(a, tol); }

Complex semi_inner(const SemiHilbertContext& ctx, const ComplexVector& x, const ComplexVector& y) {
  ctx.require_vector(x);
  ctx.require_vector(y);
  return y.dot(ctx.a() * x);
}

double seminorm(const SemiHilbertContext& ctx, const ComplexVector& x) { return ctx.coordinates(x).norm(); }

double residual_scale(const SemiHilbertContext& ctx, const ComplexMatrix& t) {
  return (1.0 + ctx.a_max_abs()) * (1.0 + max_abs(t));
}

OperatorClassification classify(const SemiHilbertContext& ctx, const ComplexMatrix& t) {
  ctx.require_operator(t);
  require_finite(t, "operator");
  const double violation = max_abs(ComplexMatrix(ctx.a() * t * ctx.null_projector()));
  return {violation <= ctx.tol() * residual_scale(ctx, t), violation};
}

ComplexMatrix compress(const SemiHilbertContext& ctx, const ComplexMatrix& t) {
  const auto cls = classify(ctx, t);
  if (!cls.in_semihilbert)
    throw Error(ErrorKind::NotSemiHilbertian,
                "T does not map N(A) into N(A) (violation " + std::to_string(cls.violation_norm) +
                    "); no induced operator on R(A^{1/2}) exists");
  const auto& v = ctx.range_basis();
  const RealVector s = ctx.pos_eigs().cwiseSqrt();
  return s.cast<Complex>().asDiagonal() * (v.adjoint() * t * v) * s.cwiseInverse().cast<Complex>().asDiagonal();
}

ComplexMatrix lift_operator(const SemiHilbertContext& ctx, const ComplexMatrix& c) {
  if (c.rows() != ctx.rank() || c.cols() != ctx.rank())
    throw Error(ErrorKind::DimensionMismatch, "compressed operator must be rank x rank");
  const auto& v = ctx.range_basis();
  const RealVector s = ctx.pos_eigs().cwiseSqrt();
  return v * s.cwiseInverse().cast<Complex>().asDiagonal() * c * s.cast<Complex>().asDiagonal() * v.adjoint();
}

double a_operator_seminorm(const SemiHilbertContext& ctx, const ComplexMatrix& t) {
  return spectral_norm(compress(ctx, t));
}

}  // namespace semihilbert
