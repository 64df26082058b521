#include <doctest.h>

#include "semihilbert/adjoint.hpp"
#include "semihilbert/error.hpp"
#include "semihilbert/linalg.hpp"
#include "test_support.hpp"

using namespace semihilbert;
using namespace semihilbert::testing;

TEST_CASE("sharp examples") {
  Rng rng(1);
  const ComplexMatrix t = random_complex_matrix(rng, 3, 3);
  CHECK(max_abs_diff(sharp(SemiHilbertContext(ComplexMatrix::Identity(3, 3)), t), t.adjoint()) <= 1e-14);

  const Complex a = 2.0 - 1i;
  const Complex b = 0.5 + 3i;
  const ComplexMatrix x = sharp(SemiHilbertContext(diag({1.0, 0.0})), diag({a, b}));
  CHECK(max_abs_diff(x, diag({std::conj(a), 0.0})) <= 1e-15);

  for (int trial = 0; trial < 10; ++trial) {
    const SemiHilbertContext ctx(random_psd(rng, 4, 4));
    const ComplexMatrix tt = random_complex_matrix(rng, 4, 4);
    CHECK(adjoint_residual(ctx, tt, sharp(ctx, tt)) <= 1e-8 * residual_scale(ctx, tt));
  }
}

TEST_CASE("sharp requires an A-adjoint to exist") {
  try {
    sharp(SemiHilbertContext(diag({1.0, 0.0})), mat({{0.0, 1.0}, {1.0, 0.0}}));
    FAIL("expected NotSemiHilbertian");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSemiHilbertian);
  }
}

TEST_CASE("sharp identities on random rank-deficient A") {
  Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const SemiHilbertContext ctx(random_psd(rng, 5, 1 + trial % 5));
    const ComplexMatrix t = random_semihilbertian(ctx, rng);
    const ComplexMatrix x = sharp(ctx, t);
    const double scale = residual_scale(ctx, t);

    CHECK(adjoint_residual(ctx, t, x) <= 1e-8 * scale);
    // reduced solution: range inside R(A)
    CHECK(max_abs_diff(ctx.range_projector() * x, x) <= 1e-8 * scale);
    CHECK(max_abs_diff(compress(ctx, x), compress(ctx, t).adjoint()) <= 1e-8 * scale);

    const Complex c = 0.3 - 2.0i;
    CHECK(max_abs_diff(sharp(ctx, ComplexMatrix(c * t)), std::conj(c) * x) <= 1e-10 * scale);

    for (int k = 0; k < 5; ++k) {
      const ComplexVector u = random_complex_vector(rng, 5);
      const ComplexVector w = random_complex_vector(rng, 5);
      CHECK(std::abs(semi_inner(ctx, t * u, w) - semi_inner(ctx, u, x * w)) <= 1e-9 * scale * 10);
    }
  }
}

TEST_CASE("double_sharp_projection examples") {
  Rng rng(3);
  const SemiHilbertContext inv(random_psd(rng, 3, 3));
  const ComplexMatrix t = random_complex_matrix(rng, 3, 3);
  CHECK(max_abs_diff(double_sharp_projection(inv, t), t) <= 1e-8 * residual_scale(inv, t));

  const ComplexMatrix twice = double_sharp_projection(SemiHilbertContext(diag({1.0, 0.0})), mat({{1.0, 0.0}, {1.0, 1.0}}));
  CHECK(max_abs_diff(twice, diag({1.0, 0.0})) <= 1e-15);

  const SemiHilbertContext zero(ComplexMatrix::Zero(3, 3));
  CHECK(double_sharp_projection(zero, t).isZero());
}
