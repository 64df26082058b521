#include <doctest.h>

#include "semihilbert/adjoint.hpp"
#include "semihilbert/error.hpp"
#include "semihilbert/numrange.hpp"
#include "semihilbert/rankone.hpp"
#include "test_support.hpp"

using namespace semihilbert;
using namespace semihilbert::testing;

TEST_CASE("materialize examples") {
  Rng rng(1);
  const SemiHilbertContext id(ComplexMatrix::Identity(3, 3));
  const ComplexVector x = random_complex_vector(rng, 3);
  const ComplexVector y = random_complex_vector(rng, 3);
  CHECK(max_abs_diff(materialize(id, {x, y}), x * y.adjoint()) <= 1e-15);

  const SemiHilbertContext proj(diag({1.0, 0.0}));
  CHECK(materialize(proj, {vec({1.0, 2.0}), vec({0.0, 1.0})}).isZero());

  const SemiHilbertContext weighted(diag({2.0, 1.0}));
  CHECK(max_abs_diff(materialize(weighted, {vec({1.0, 0.0}), vec({0.0, 1.0})}), mat({{0.0, 1.0}, {0.0, 0.0}})) ==
        0.0);

  CHECK_THROWS_AS(materialize(id, {vec({1.0, 0.0}), x}), Error);
}

TEST_CASE("materialize acts as z -> <z, y>_A x") {
  Rng rng(2);
  const SemiHilbertContext ctx(random_psd(rng, 4, 2));
  const RankOnePair p{random_complex_vector(rng, 4), random_complex_vector(rng, 4)};
  const ComplexMatrix m = materialize(ctx, p);
  CHECK(classify(ctx, m).in_semihilbert);
  for (int k = 0; k < 10; ++k) {
    const ComplexVector z = random_complex_vector(rng, 4);
    CHECK(max_abs_diff(m * z, semi_inner(ctx, z, p.y) * p.x) <= 1e-12);
  }
}

TEST_CASE("closed_form_radius examples") {
  const SemiHilbertContext id(ComplexMatrix::Identity(2, 2));
  CHECK(closed_form_radius(id, {vec({1.0, 0.0}), vec({1.0, 0.0})}) == doctest::Approx(1.0));
  CHECK(closed_form_radius(id, {vec({1.0, 0.0}), vec({0.0, 1.0})}) == doctest::Approx(0.5));

  // A-orthogonal, A-unit, with A singular
  const SemiHilbertContext ctx(diag({4.0, 1.0, 0.0}));
  CHECK(closed_form_radius(ctx, {vec({0.5, 0.0, 7.0}), vec({0.0, 1.0, -3.0})}) == doctest::Approx(0.5));
  CHECK_THROWS_AS(closed_form_radius(ctx, {vec({1.0, 0.0}), vec({1.0, 0.0, 0.0})}), Error);
}

TEST_CASE("closed form matches the certified radius of the materialized operator") {
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const Eigen::Index n = 2 + trial % 5;
    const Eigen::Index rank = trial % 3 == 0 ? n : 1 + trial % n;
    const SemiHilbertContext ctx(trial % 7 == 0 ? ComplexMatrix(ComplexMatrix::Identity(n, n)) : random_psd(rng, n, rank));
    const RankOnePair p{random_complex_vector(rng, n), random_complex_vector(rng, n)};
    const auto est = a_radius(ctx, materialize(ctx, p), 64, 1e-6);
    CHECK(std::abs(closed_form_radius(ctx, p) - est.midpoint()) <= 2e-6);
  }
}

TEST_CASE("rankone_algebra_check examples") {
  Rng rng(4);
  const SemiHilbertContext id(ComplexMatrix::Identity(3, 3));
  CHECK(rankone_algebra_check(id, {random_complex_vector(rng, 3), random_complex_vector(rng, 3)},
                              random_complex_matrix(rng, 3, 3)));

  const SemiHilbertContext proj(diag({1.0, 1.0, 0.0}));
  const ComplexMatrix t = random_semihilbertian(proj, rng);
  CHECK(rankone_algebra_check(proj, {random_complex_vector(rng, 3), vec({0.0, 0.0, 1.0})}, t));

  for (int trial = 0; trial < 30; ++trial) {
    const SemiHilbertContext ctx(random_psd(rng, 4, 1 + trial % 4));
    CHECK(rankone_algebra_check(ctx, {random_complex_vector(rng, 4), random_complex_vector(rng, 4)},
                                random_semihilbertian(ctx, rng)));
  }

  try {
    rankone_algebra_check(SemiHilbertContext(diag({1.0, 0.0})), {vec({1.0, 0.0}), vec({1.0, 0.0})},
                          mat({{0.0, 1.0}, {1.0, 0.0}}));
    FAIL("expected NotSemiHilbertian");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSemiHilbertian);
  }
}

TEST_CASE("rank-one properties") {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const SemiHilbertContext ctx(random_psd(rng, 5, 1 + trial % 5));
    const RankOnePair p{random_complex_vector(rng, 5), random_complex_vector(rng, 5)};
    const double base = closed_form_radius(ctx, p);

    const Complex c(1.5 * trial - 10.0, 0.7);
    CHECK(std::abs(closed_form_radius(ctx, {c * p.x, p.y}) - std::abs(c) * base) <= 1e-10 * (1 + std::abs(c) * base));

    const ComplexVector n = ctx.null_projector() * random_complex_vector(rng, 5);
    const RankOnePair shifted{p.x, p.y + n};
    CHECK(max_abs_diff(materialize(ctx, shifted), materialize(ctx, p)) <= 1e-10);
    CHECK(std::abs(closed_form_radius(ctx, shifted) - base) <= 1e-10);

    CHECK(classify(ctx, materialize(ctx, p)).in_semihilbert);
    // sharp(x (x)_A y) is y (x)_A x up to the range projection of y
    CHECK(max_abs_diff(sharp(ctx, materialize(ctx, p)),
                       materialize(ctx, {ctx.range_projector() * p.y, p.x})) <= 1e-8 * (1 + base));
  }
}
