#include "semihilbert/random.hpp"

#include <cmath>

#include "semihilbert/error.hpp"

namespace semihilbert {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng substream(std::uint64_t seed, std::uint64_t tag, std::uint64_t index) {
  return Rng(splitmix64(splitmix64(seed ^ splitmix64(tag)) + index));
}

ComplexMatrix random_complex_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  // fill column-major explicitly; draw order is part of the reproducibility contract
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(i, j) = Complex(re, im);
    }
  return m;
}

ComplexVector random_complex_vector(Rng& rng, Eigen::Index n) { return random_complex_matrix(rng, n, 1); }

ComplexMatrix random_unitary(Rng& rng, Eigen::Index n) {
  const ComplexMatrix g = random_complex_matrix(rng, n, n);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  return qr.householderQ() * ComplexMatrix::Identity(n, n);
}

ComplexMatrix random_psd(Rng& rng, Eigen::Index n, Eigen::Index rank) {
  if (rank < 0 || rank > n) throw Error(ErrorKind::InvalidArgument, "rank must lie in [0, n]");
  std::uniform_real_distribution<double> eig(0.5, 2.0);
  const ComplexMatrix u = random_unitary(rng, n);
  RealVector d = RealVector::Zero(n);
  for (Eigen::Index k = 0; k < rank; ++k) d(k) = eig(rng);
  const ComplexMatrix a = u * d.cast<Complex>().asDiagonal() * u.adjoint();
  return 0.5 * (a + a.adjoint());
}

ComplexMatrix random_semihilbertian(const SemiHilbertContext& ctx, Rng& rng) {
  const Eigen::Index n = ctx.dimension();
  const ComplexMatrix r = random_complex_matrix(rng, n, n);
  return r - ctx.range_projector() * r * ctx.null_projector();
}

ComplexVector random_a_unit_vector(const SemiHilbertContext& ctx, Rng& rng) {
  ComplexVector x = random_complex_vector(rng, ctx.dimension());
  const double norm = seminorm(ctx, x);
  if (norm == 0.0) return ComplexVector::Zero(ctx.dimension());
  return x / norm;
}

}  // namespace semihilbert
