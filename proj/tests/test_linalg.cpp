#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "semihilbert/error.hpp"
#include "semihilbert/linalg.hpp"
#include "test_support.hpp"

using namespace semihilbert;
using namespace semihilbert::testing;

namespace {

void check_eigen_invariants(const ComplexMatrix& h, const HermitianEigen<double>& eig) {
  const Eigen::Index n = h.rows();
  CHECK(max_abs_diff(eig.vectors.adjoint() * eig.vectors, ComplexMatrix::Identity(n, n)) <= 1e-10);
  const ComplexMatrix rebuilt = eig.vectors * eig.values.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
  CHECK(max_abs_diff(h, rebuilt) <= 1e-9 * (1.0 + eig.values.cwiseAbs().maxCoeff()));
  for (Eigen::Index k = 0; k + 1 < n; ++k) CHECK(eig.values(k) >= eig.values(k + 1));
}

}  // namespace

TEST_CASE("herm_eig on small closed-form cases") {
  const auto id = herm_eig(ComplexMatrix::Identity(3, 3));
  CHECK(id.values.isApprox(RealVector::Ones(3)));

  const auto d = herm_eig(diag({2.0, 1.0}));
  CHECK(d.values(0) == doctest::Approx(2.0));
  CHECK(d.values(1) == doctest::Approx(1.0));
  CHECK(std::abs(d.vectors(0, 0)) == doctest::Approx(1.0));
  CHECK(std::abs(d.vectors(1, 1)) == doctest::Approx(1.0));

  // characteristic polynomial lambda^2 - 2 lambda
  const auto h = herm_eig(mat({{1.0, 1i}, {-1i, 1.0}}));
  CHECK(h.values(0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(std::abs(h.values(1)) <= 1e-14);
}

TEST_CASE("herm_eig matches an independent eigensolver and keeps its invariants") {
  Rng rng(7);
  for (Eigen::Index n : {1, 2, 3, 5, 8, 20}) {
    const ComplexMatrix h = random_hermitian(rng, n);
    const auto eig = herm_eig(h);
    check_eigen_invariants(h, eig);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> oracle(h);
    RealVector expected = oracle.eigenvalues().reverse();
    CHECK((eig.values - expected).cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("herm_eig on repeated and zero eigenvalues") {
  Rng rng(11);
  const ComplexMatrix u = random_unitary(rng, 4);
  const ComplexMatrix h = u * diag({3.0, 3.0, 0.0, 0.0}) * u.adjoint();
  const auto eig = herm_eig(hermitian_part(h));
  check_eigen_invariants(hermitian_part(h), eig);
  CHECK(eig.values(1) == doctest::Approx(3.0));
  CHECK(std::abs(eig.values(3)) <= 1e-12);
  CHECK(herm_eig(ComplexMatrix::Zero(3, 3)).values.isZero());
}

TEST_CASE("herm_eig rejects bad input") {
  CHECK_THROWS_AS(herm_eig(ComplexMatrix::Zero(2, 3)), Error);
  try {
    herm_eig(mat({{1.0, 2.0}, {0.0, 1.0}}));
    FAIL("expected NotHermitian");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotHermitian);
  }
  try {
    herm_eig(mat({{1.0, 0.0}, {0.0, std::numeric_limits<double>::quiet_NaN()}}));
    FAIL("expected NonFinite");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonFinite);
  }
}

TEST_CASE("Rayleigh quotients never exceed the top eigenvalue") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix h = random_hermitian(rng, 5);
    const double top = herm_eig(h).values(0);
    for (int k = 0; k < 50; ++k) {
      ComplexVector x = random_complex_vector(rng, 5);
      x.normalize();
      CHECK(std::real(x.dot(h * x)) <= top + 1e-9);
    }
  }
}

TEST_CASE("long double instantiation") {
  ComplexMatrixT<long double> h(2, 2);
  h << 1.0L, std::complex<long double>(0, 1), std::complex<long double>(0, -1), 1.0L;
  const auto eig = herm_eig(h);
  CHECK(static_cast<double>(eig.values(0)) == doctest::Approx(2.0));
  CHECK(std::abs(static_cast<double>(eig.values(1))) <= 1e-15);
  CHECK(static_cast<double>(spectral_norm(h)) == doctest::Approx(2.0));
}

TEST_CASE("pinv closed-form cases") {
  CHECK(max_abs_diff(pinv(diag({2.0, 0.0}), 1e-12), diag({0.5, 0.0})) <= 1e-15);
  CHECK(max_abs_diff(pinv(ComplexMatrix::Identity(3, 3)), ComplexMatrix::Identity(3, 3)) <= 1e-14);
  CHECK(pinv(ComplexMatrix::Zero(2, 3)).isZero());
  CHECK(pinv(ComplexMatrix::Zero(2, 3)).rows() == 3);
  CHECK_THROWS_AS(pinv(ComplexMatrix::Identity(2, 2), -1.0), Error);
}

TEST_CASE("pinv satisfies the Penrose identities") {
  Rng rng(5);
  const ComplexMatrix tall = random_complex_matrix(rng, 3, 2);
  CHECK(max_abs_diff(pinv(tall) * tall, ComplexMatrix::Identity(2, 2)) <= 1e-9);

  for (int trial = 0; trial < 10; ++trial) {
    // rank-2 4x5 matrix
    const ComplexMatrix m = random_complex_matrix(rng, 4, 2) * random_complex_matrix(rng, 2, 5);
    const ComplexMatrix x = pinv(m);
    const double scale = 1.0 + m.cwiseAbs().maxCoeff() * x.cwiseAbs().maxCoeff();
    CHECK(max_abs_diff(m * x * m, m) <= 1e-9 * scale * m.cwiseAbs().maxCoeff());
    CHECK(max_abs_diff(x * m * x, x) <= 1e-9 * scale * x.cwiseAbs().maxCoeff());
    CHECK(max_abs_diff(ComplexMatrix(m * x).adjoint(), m * x) <= 1e-9 * scale);
    CHECK(max_abs_diff(ComplexMatrix(x * m).adjoint(), x * m) <= 1e-9 * scale);

    Eigen::CompleteOrthogonalDecomposition<ComplexMatrix> cod(m);
    cod.setThreshold(1e-10);
    CHECK(max_abs_diff(x, cod.pseudoInverse()) <= 1e-9 * (1.0 + x.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("pinv is an involution on full-rank matrices") {
  Rng rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix m = random_complex_matrix(rng, 4, 3);
    CHECK(max_abs_diff(pinv(pinv(m)), m) <= 1e-8 * m.cwiseAbs().maxCoeff());
  }
}

TEST_CASE("spectral_norm") {
  CHECK(spectral_norm(ComplexMatrix::Zero(3, 3)) == 0.0);
  CHECK(spectral_norm(diag({3.0, -4.0})) == doctest::Approx(4.0));
  CHECK(spectral_norm(mat({{0.0, 1.0}, {0.0, 0.0}})) == doctest::Approx(1.0));

  Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix m = random_complex_matrix(rng, 4, 4);
    const ComplexMatrix n = random_complex_matrix(rng, 4, 4);
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    CHECK(spectral_norm(m) == doctest::Approx(svd.singularValues()(0)).epsilon(1e-12));
    CHECK(spectral_norm(ComplexMatrix(m * n)) <= spectral_norm(m) * spectral_norm(n) + 1e-9);
  }
}
