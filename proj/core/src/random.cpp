#include "pstein/random.hpp"

namespace pstein {

Rng split_rng(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 step keeps distinct (seed, stream) pairs decorrelated even
  // for small consecutive inputs.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z = z ^ (z >> 31);
  return Rng(z);
}

Matrix random_matrix(Rng& rng, int rows, int cols) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix out(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const double re = u(rng);
      const double im = u(rng);
      out(i, j) = Complex(re, im);
    }
  }
  return out;
}

Matrix random_real_matrix(Rng& rng, int rows, int cols) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix out(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      out(i, j) = Complex(u(rng), 0.0);
    }
  }
  return out;
}

}  // namespace pstein
