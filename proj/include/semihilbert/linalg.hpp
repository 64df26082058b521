#pragma once

// Dense complex linear algebra used by every other module: a cyclic Jacobi
// eigensolver for Hermitian matrices, the Moore-Penrose pseudoinverse and the
// spectral norm. Everything is templated on the scalar so the same code runs
// in double and long double.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <string>
#include <vector>

#include "semihilbert/error.hpp"
#include "semihilbert/types.hpp"

namespace semihilbert {

template <typename Real>
struct HermitianEigen {
  RealVectorT<Real> values;       // descending
  ComplexMatrixT<Real> vectors;   // column i pairs with values(i)
};

/// Largest entry magnitude, 0 for an empty matrix.
template <typename Derived>
typename Eigen::NumTraits<typename Derived::Scalar>::Real max_abs(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return 0;
  return m.cwiseAbs().maxCoeff();
}

template <typename Derived>
void require_finite(const Eigen::MatrixBase<Derived>& m, const char* what) {
  if (!m.allFinite()) throw Error(ErrorKind::NonFinite, std::string(what) + " has non-finite entries");
}

namespace detail {

inline constexpr int kMaxJacobiSweeps = 100;

template <typename Real>
Real off_diagonal_norm(const ComplexMatrixT<Real>& a) {
  Real sum = 0;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

// One complex Jacobi rotation G zeroing a(p,q); applies a <- G* a G, v <- v G.
template <typename Real>
void rotate(ComplexMatrixT<Real>& a, ComplexMatrixT<Real>& v, Eigen::Index p, Eigen::Index q) {
  using C = std::complex<Real>;
  const C apq = a(p, q);
  const Real mag = std::abs(apq);
  if (mag == Real(0)) return;

  const C phase_conj = std::conj(apq / mag);
  const Real app = std::real(a(p, p));
  const Real aqq = std::real(a(q, q));
  const Real theta = (aqq - app) / (Real(2) * mag);
  Real t;
  if (std::abs(theta) > Real(1e150)) {
    t = Real(1) / (Real(2) * theta);
  } else {
    t = (theta >= 0 ? Real(1) : Real(-1)) / (std::abs(theta) + std::sqrt(theta * theta + Real(1)));
  }
  const Real c = Real(1) / std::sqrt(t * t + Real(1));
  const Real s = t * c;

  const C g_pp = c;
  const C g_pq = s;
  const C g_qp = -s * phase_conj;
  const C g_qq = c * phase_conj;

  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    const C akp = a(k, p);
    const C akq = a(k, q);
    a(k, p) = akp * g_pp + akq * g_qp;
    a(k, q) = akp * g_pq + akq * g_qq;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const C apk = a(p, k);
    const C aqk = a(q, k);
    a(p, k) = std::conj(g_pp) * apk + std::conj(g_qp) * aqk;
    a(q, k) = std::conj(g_pq) * apk + std::conj(g_qq) * aqk;
  }
  a(p, q) = C(0);
  a(q, p) = C(0);
  a(p, p) = std::real(a(p, p));
  a(q, q) = std::real(a(q, q));

  for (Eigen::Index k = 0; k < v.rows(); ++k) {
    const C vkp = v(k, p);
    const C vkq = v(k, q);
    v(k, p) = vkp * g_pp + vkq * g_qp;
    v(k, q) = vkp * g_pq + vkq * g_qq;
  }
}

}  // namespace detail

/// Hermitian eigendecomposition by cyclic Jacobi rotations.
///
/// The input must be Hermitian to 1e-12 * (1 + max|H|); it is symmetrized
/// before iterating. Iteration stops once the off-diagonal Frobenius mass
/// drops below 1e-13 * ||H||_F. Eigenvalues come back sorted descending.
template <typename Derived>
HermitianEigen<typename Eigen::NumTraits<typename Derived::Scalar>::Real> herm_eig(
    const Eigen::MatrixBase<Derived>& input) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  static_assert(Eigen::NumTraits<typename Derived::Scalar>::IsComplex, "herm_eig expects a complex matrix");
  using Mat = ComplexMatrixT<Real>;

  if (input.rows() != input.cols()) throw Error(ErrorKind::NotSquare, "herm_eig needs a square matrix");
  require_finite(input, "herm_eig input");
  const Mat h = input;
  const Real asym = max_abs(Mat(h - h.adjoint()));
  if (asym > Real(1e-12) * (Real(1) + max_abs(h)))
    throw Error(ErrorKind::NotHermitian, "asymmetry " + std::to_string(static_cast<double>(asym)));

  const Eigen::Index n = h.rows();
  Mat a = (h + h.adjoint()) / Real(2);
  Mat v = Mat::Identity(n, n);
  const Real total = a.norm();

  bool converged = total == Real(0);
  for (int sweep = 0; sweep < detail::kMaxJacobiSweeps && !converged; ++sweep) {
    if (detail::off_diagonal_norm(a) <= Real(1e-13) * total) {
      converged = true;
      break;
    }
    for (Eigen::Index p = 0; p + 1 < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) detail::rotate(a, v, p, q);
  }
  if (!converged && detail::off_diagonal_norm(a) > Real(1e-13) * total)
    throw Error(ErrorKind::NonConvergence, "Jacobi sweeps exhausted");

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
    return std::real(a(i, i)) > std::real(a(j, j));
  });

  HermitianEigen<Real> out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = std::real(a(order[k], order[k]));
    out.vectors.col(k) = v.col(order[k]);
  }
  return out;
}

/// Moore-Penrose pseudoinverse. Singular values below cutoff * sigma_max are
/// treated as zero. Singular triplets are read off the Hermitian dilation
/// [[0, M], [M*, 0]], whose eigenvalues are +-sigma, so small singular values
/// keep absolute accuracy instead of being squared away.
template <typename Derived>
ComplexMatrixT<typename Eigen::NumTraits<typename Derived::Scalar>::Real> pinv(
    const Eigen::MatrixBase<Derived>& m,
    typename Eigen::NumTraits<typename Derived::Scalar>::Real cutoff = 1e-10) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  using Mat = ComplexMatrixT<Real>;
  if (cutoff < Real(0)) throw Error(ErrorKind::InvalidArgument, "pinv cutoff must be nonnegative");

  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Mat out = Mat::Zero(cols, rows);
  if (rows == 0 || cols == 0) return out;

  Mat dilation = Mat::Zero(rows + cols, rows + cols);
  dilation.topRightCorner(rows, cols) = m;
  dilation.bottomLeftCorner(cols, rows) = m.adjoint();
  const auto eig = herm_eig(dilation);
  const Real sigma_max = eig.values(0);
  if (!(sigma_max > Real(0))) return out;

  for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
    const Real sigma = eig.values(k);
    if (sigma <= cutoff * sigma_max) break;
    const auto u = eig.vectors.col(k).head(rows);
    const auto v = eig.vectors.col(k).tail(cols);
    out.noalias() += (Real(2) / sigma) * v * u.adjoint();
  }
  return out;
}

/// Largest singular value, from the top eigenvalue of M*M.
template <typename Derived>
typename Eigen::NumTraits<typename Derived::Scalar>::Real spectral_norm(const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  if (m.size() == 0) return 0;
  const ComplexMatrixT<Real> gram = m.adjoint() * m;
  const auto eig = herm_eig(gram);
  return std::sqrt(std::max(Real(0), eig.values(0)));
}

/// Hermitian part (X + X*) / 2, exactly Hermitian in floating point.
template <typename Derived>
ComplexMatrixT<typename Eigen::NumTraits<typename Derived::Scalar>::Real> hermitian_part(
    const Eigen::MatrixBase<Derived>& x) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  const ComplexMatrixT<Real> m = x;
  return (m + m.adjoint()) / Real(2);
}

}  // namespace semihilbert
