#pragma once

#include "semihilbert/space.hpp"

namespace semihilbert {

/// Data of the A-rank-one operator x (x)_A y : z -> <z, y>_A x.
struct RankOnePair {
  ComplexVector x;
  ComplexVector y;
};

/// Matrix x (Ay)*.
ComplexMatrix materialize(const SemiHilbertContext& ctx, const RankOnePair& p);

/// w_A(x (x)_A y) = (|<x, y>_A| + ||x||_A ||y||_A) / 2.
double closed_form_radius(const SemiHilbertContext& ctx, const RankOnePair& p);

/// Checks, within 1e-8 scaled:
///   ||x (x)_A y||_A = ||x||_A ||y||_A and (x (x)_A y)^{#A} = (Py) (x)_A x with P onto R(A),
///   T (x (x)_A y) = Tx (x)_A y and (x (x)_A y) T = x (x)_A T^{#A} y,
///   compress(x (x)_A y) = c(x) c(y)* in the coordinates c of R(A^{1/2}).
bool rankone_algebra_check(const SemiHilbertContext& ctx, const RankOnePair& p, const ComplexMatrix& t);

}  // namespace semihilbert
