#pragma once

#include "semihilbert/space.hpp"

namespace semihilbert {

/// Reduced A-adjoint T^{#A} = A^+ T* A, the solution of AX = T*A with range in R(A).
ComplexMatrix sharp(const SemiHilbertContext& ctx, const ComplexMatrix& t);

/// max-entry residual of the defining equation A X = T* A.
double adjoint_residual(const SemiHilbertContext& ctx, const ComplexMatrix& t, const ComplexMatrix& x);

/// sharp(sharp(T)), checked against P T P with P the projector onto R(A).
/// Throws NumericalCheckFailed if the two disagree beyond 1e-8 scaled.
ComplexMatrix double_sharp_projection(const SemiHilbertContext& ctx, const ComplexMatrix& t);

}  // namespace semihilbert
