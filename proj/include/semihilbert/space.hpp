#pragma once

// The positive operator A and the geometry it induces on C^n.
//
// In finite dimensions R(A) is closed, so R(A) = R(A^{1/2}) and the
// completion of H/N(A) is just R(A) with the inner product [Ax, Ay] = <x, y>_A.
// We realize that space in the orthonormal eigenbasis V of A restricted to its
// positive eigenvalues D: a vector x has coordinates D^{1/2} V* x, and an
// operator T with T(N(A)) in N(A) acts there as C = D^{1/2} V* T V D^{-1/2}.
//
// Membership: R(T*A) in R(A) holds iff T maps N(A) into N(A) (take
// orthocomplements), and the same condition is equivalent to ||Tx||_A <= c ||x||_A.
// So a single test decides membership in both B_A and B_{A^{1/2}}.

#include "semihilbert/types.hpp"

namespace semihilbert {

inline constexpr double kDefaultContextTol = 1e-8;

class SemiHilbertContext {
 public:
  /// Validates A (square, finite, Hermitian, eigenvalues >= -tol) and
  /// precomputes its spectral data. Eigenvalues in [-tol, tol] count as zero.
  explicit SemiHilbertContext(const ComplexMatrix& a, double tol = kDefaultContextTol);

  Eigen::Index dimension() const { return a_.rows(); }
  Eigen::Index rank() const { return range_basis_.cols(); }
  double tol() const { return tol_; }

  const ComplexMatrix& a() const { return a_; }
  const ComplexMatrix& a_half() const { return a_half_; }
  const ComplexMatrix& a_half_pinv() const { return a_half_pinv_; }
  const ComplexMatrix& a_pinv() const { return a_pinv_; }
  const ComplexMatrix& range_basis() const { return range_basis_; }
  const ComplexMatrix& null_basis() const { return null_basis_; }
  const RealVector& pos_eigs() const { return pos_eigs_; }
  const ComplexMatrix& range_projector() const { return range_projector_; }
  const ComplexMatrix& null_projector() const { return null_projector_; }
  double a_max_abs() const { return a_max_abs_; }

  /// D^{1/2} V* x: the image of Ax in orthonormal coordinates of R(A^{1/2}).
  ComplexVector coordinates(const ComplexVector& x) const;
  /// V D^{-1/2} c: the vector of R(A) whose coordinates are c.
  ComplexVector lift(const ComplexVector& c) const;

  void require_vector(const ComplexVector& x) const;
  void require_operator(const ComplexMatrix& t) const;

 private:
  ComplexMatrix a_;
  ComplexMatrix a_half_;
  ComplexMatrix a_half_pinv_;
  ComplexMatrix a_pinv_;
  ComplexMatrix range_basis_;
  ComplexMatrix null_basis_;
  RealVector pos_eigs_;
  RealVector sqrt_eigs_;
  ComplexMatrix range_projector_;
  ComplexMatrix null_projector_;
  double tol_;
  double a_max_abs_;
};

SemiHilbertContext new_context(const ComplexMatrix& a, double tol = kDefaultContextTol);

/// <x, y>_A = <Ax, y>, linear in x.
Complex semi_inner(const SemiHilbertContext& ctx, const ComplexVector& x, const ComplexVector& y);

/// ||x||_A, evaluated as the Euclidean norm of the coordinates so that
/// null-space vectors give zero up to round-off rather than sqrt(round-off).
double seminorm(const SemiHilbertContext& ctx, const ComplexVector& x);

struct OperatorClassification {
  bool in_semihilbert;
  double violation_norm;  // max-entry norm of A T P_{N(A)}
};

OperatorClassification classify(const SemiHilbertContext& ctx, const ComplexMatrix& t);

/// Matrix of the induced operator on R(A^{1/2}) (r x r). Throws
/// NotSemiHilbertian when T does not map N(A) into N(A).
ComplexMatrix compress(const SemiHilbertContext& ctx, const ComplexMatrix& t);

/// Inverse of compress on operators that vanish on N(A): V D^{-1/2} C D^{1/2} V*.
ComplexMatrix lift_operator(const SemiHilbertContext& ctx, const ComplexMatrix& c);

/// ||T||_A = sup{ ||Tx||_A : x in R(A), ||x||_A = 1 }.
double a_operator_seminorm(const SemiHilbertContext& ctx, const ComplexMatrix& t);

/// Scale used for relative residual tests: (1 + max|A|)(1 + max|T|).
double residual_scale(const SemiHilbertContext& ctx, const ComplexMatrix& t);

}  // namespace semihilbert
