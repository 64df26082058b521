#pragma once

// Reproducible random instances. Every campaign trial draws from its own
// substream derived from (seed, stream tag, trial index), so results do not
// depend on the order in which trials run.

#include <cstdint>
#include <random>

#include "semihilbert/space.hpp"

namespace semihilbert {

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);

Rng substream(std::uint64_t seed, std::uint64_t tag, std::uint64_t index);

/// Entries with independent standard normal real and imaginary parts.
ComplexMatrix random_complex_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols);
ComplexVector random_complex_vector(Rng& rng, Eigen::Index n);

/// Haar-ish unitary from the QR factorization of a Gaussian matrix.
ComplexMatrix random_unitary(Rng& rng, Eigen::Index n);

/// Positive semidefinite n x n matrix of exact rank r, positive eigenvalues in [0.5, 2].
ComplexMatrix random_psd(Rng& rng, Eigen::Index n, Eigen::Index rank);

/// Random operator mapping N(A) into N(A): a Gaussian R minus P_{R(A)} R P_{N(A)}.
ComplexMatrix random_semihilbertian(const SemiHilbertContext& ctx, Rng& rng);

/// Random vector scaled to ||x||_A = 1; the zero vector when rank is 0.
ComplexVector random_a_unit_vector(const SemiHilbertContext& ctx, Rng& rng);

}  // namespace semihilbert
