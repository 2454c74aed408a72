#ifndef PSTEIN_RANDOM_HPP
#define PSTEIN_RANDOM_HPP

#include <cstdint>
#include <random>

#include "pstein/matrix.hpp"

namespace pstein {

/// PRNG used by every randomized routine in the library. The engine is
/// fixed (not implementation-defined) so a seed reproduces bit-for-bit
/// across platforms.
using Rng = std::mt19937_64;

/// Derive an independent stream for a sub-purpose of a seeded routine,
/// so adding draws to one consumer does not shift another.
Rng split_rng(std::uint64_t seed, std::uint64_t stream);

/// rows x cols matrix with entries whose real and imaginary parts are
/// i.i.d. uniform on [-1, 1].
Matrix random_matrix(Rng& rng, int rows, int cols);

/// Same distribution restricted to real entries.
Matrix random_real_matrix(Rng& rng, int rows, int cols);

}  // namespace pstein

#endif  // PSTEIN_RANDOM_HPP
