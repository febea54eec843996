#include "antilin/random.hpp"

#include <cmath>
#include <numbers>

#include "antilin/modular.hpp"

namespace antilin {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng Rng::stream(std::uint64_t seed, std::uint64_t index) {
  return Rng(splitmix64(splitmix64(seed) ^ splitmix64(~index)));
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

ComplexMatrix random_matrix(Index rows, Index cols, Rng& rng) {
  ComplexMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = rng.complex_normal();
  return m;
}

ComplexVector random_unit_vector(Index d, Rng& rng) {
  ComplexVector v = random_matrix(d, 1, rng).col(0);
  return v / v.norm();
}

ComplexMatrix random_unitary(Index d, Rng& rng) {
  const ComplexMatrix g = random_matrix(d, d, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(d, d);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix column phases so the distribution is Haar.
  for (Index k = 0; k < d; ++k) {
    const Complex diag = r(k, k);
    if (std::abs(diag) > 0.0) q.col(k) *= diag / std::abs(diag);
  }
  return q;
}

ComplexMatrix random_density(Index d, Rng& rng) {
  const ComplexMatrix g = random_matrix(d, d, rng);
  ComplexMatrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

ComplexMatrix random_hermitian(Index d, Rng& rng) {
  const ComplexMatrix g = random_matrix(d, d, rng);
  return (g + g.adjoint()) * 0.5;
}

BipartiteVector random_state(Index dim_a, Index dim_b, Rng& rng) {
  ComplexMatrix c = random_matrix(dim_a, dim_b, rng);
  c /= c.norm();
  return BipartiteVector(std::move(c));
}

BipartiteVector random_state(Index dim_a, Index dim_b, std::uint64_t seed, bool completely_entangled) {
  if (dim_a < 1 || dim_b < 1) throw Error(ErrorCode::InvalidArgument, "dimensions must be positive");
  if (completely_entangled && dim_a != dim_b) {
    throw Error(ErrorCode::InvalidArgument,
                "completely entangled states need dim_a == dim_b");
  }
  Rng rng(seed);
  BipartiteVector psi = random_state(dim_a, dim_b, rng);
  while (completely_entangled && !gns_check(psi)) psi = random_state(dim_a, dim_b, rng);
  return psi;
}

}  // namespace antilin
