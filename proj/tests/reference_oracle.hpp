#pragma once

// Test-only reference constructions, deliberately independent of
// qctx::orthogonal_complement: dimension-3 completions come from the complex
// cross product and dimension-4 completions from a full SVD null space.

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "qctx/hilbert.hpp"

namespace qctx::testing {

using Vec = StateVector<double>;

/// Unit vector orthogonal to u and v in dimension 3: <u|conj(u x v)> = 0.
/// The bilinear cross product is written out because Eigen's complex cross()
/// already conjugates its result.
inline Vec cross_complement(const Vec& u, const Vec& v) {
  Vec c(3);
  c << u(1) * v(2) - u(2) * v(1), u(2) * v(0) - u(0) * v(2), u(0) * v(1) - u(1) * v(0);
  return c.conjugate().normalized();
}

/// Unit vector orthogonal to every input, from the right singular vector of
/// the smallest singular value.
inline Vec svd_null_vector(const std::vector<Vec>& vectors, Eigen::Index dim) {
  Eigen::MatrixXcd rows(static_cast<Eigen::Index>(vectors.size()), dim);
  for (std::size_t k = 0; k < vectors.size(); ++k) rows.row(k) = vectors[k].adjoint();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(rows, Eigen::ComputeFullV);
  return svd.matrixV().col(dim - 1);
}

struct ReferenceHardy {
  Vec e1, e2, e3, d1, d2, s1, s2, f, nf;
};

inline ReferenceHardy reference_hardy(double alpha, double beta, double phase1, double phase2) {
  ReferenceHardy r;
  r.e1 = basis_vector<double>(3, 0);
  r.e2 = basis_vector<double>(3, 1);
  r.e3 = basis_vector<double>(3, 2);
  r.d1 = std::sqrt(1 - alpha) * r.e2 + std::polar(1.0, phase1) * std::sqrt(alpha) * r.e3;
  r.d2 = std::sqrt(1 - beta) * r.e1 + std::polar(1.0, phase2) * std::sqrt(beta) * r.e3;
  r.s1 = cross_complement(r.e1, r.d1);
  r.s2 = cross_complement(r.e2, r.d2);
  r.f = cross_complement(r.s1, r.s2);
  r.nf = cross_complement(r.d1, r.d2);
  return r;
}

struct ReferenceNonlocal {
  Vec a, b, aa, f_nl, nf, k11;
};

inline ReferenceNonlocal reference_nonlocal(double a2, double phase) {
  ReferenceNonlocal r;
  const Vec zero = basis_vector<double>(2, 0);
  const Vec one = basis_vector<double>(2, 1);
  r.a = std::sqrt(1 - a2) * one + std::polar(1.0, phase) * std::sqrt(a2) * zero;
  r.b = Vec(2);
  r.b << -std::conj(r.a(1)), std::conj(r.a(0));
  // Kronecker products written out by hand.
  auto kron = [](const Vec& x, const Vec& y) {
    Vec out(4);
    out << x(0) * y(0), x(0) * y(1), x(1) * y(0), x(1) * y(1);
    return out;
  };
  r.k11 = kron(one, one);
  r.aa = kron(r.a, r.a);
  r.f_nl = svd_null_vector({kron(r.b, zero), kron(zero, r.b), r.k11}, 4);
  r.nf = svd_null_vector({kron(r.a, zero), kron(zero, r.a), r.k11}, 4);
  return r;
}

inline Vec random_unit(std::mt19937_64& rng, Eigen::Index dim) {
  std::normal_distribution<double> g;
  Vec v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = {g(rng), g(rng)};
  return v.normalized();
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double random_phase(std::mt19937_64& rng) {
  return uniform(rng, 0.0, 2 * std::numbers::pi);
}

}  // namespace qctx::testing
