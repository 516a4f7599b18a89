#pragma once

// Small dense complex vector core: inner products, Kronecker products,
// Born-rule probabilities and canonically phased orthogonal completions.
// Everything is templated on the real scalar type; the rest of the library
// instantiates it with double.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qctx/errors.hpp"

namespace qctx {

template <typename Scalar>
using Amplitude = std::complex<Scalar>;

template <typename Scalar>
using StateVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

using StateVectord = StateVector<double>;

template <typename Scalar>
struct Tolerance {
  /// Allowed deviation of a unit vector's squared norm from one.
  static constexpr Scalar normalization = Scalar(1e-12);
  /// Orthogonality and Gram-rank decisions.
  static constexpr Scalar orthogonality = Scalar(1e-10);
  /// Input check used by born_probability.
  static constexpr Scalar born_input = Scalar(1e-10);
  /// Slack before a probability outside [0, 1] is treated as an error.
  static constexpr Scalar probability_slack = Scalar(1e-12);
  /// Smallest component magnitude the phase canon will anchor on.
  static constexpr Scalar phase_anchor = Scalar(1e-10);
};

inline constexpr const char* kPhaseCanon = "first-nonzero-real-positive";

template <typename Scalar>
StateVector<Scalar> basis_vector(Eigen::Index dim, Eigen::Index index) {
  StateVector<Scalar> v = StateVector<Scalar>::Zero(dim);
  v(index) = Scalar(1);
  return v;
}

template <typename Scalar>
Scalar norm_squared(const StateVector<Scalar>& v) {
  return v.squaredNorm();
}

template <typename Scalar>
bool is_normalized(const StateVector<Scalar>& v,
                   Scalar tol = Tolerance<Scalar>::normalization) {
  return v.size() > 0 && std::abs(v.squaredNorm() - Scalar(1)) <= tol;
}

/// Conjugate-linear in the first argument: sum_i conj(u_i) v_i.
template <typename Scalar>
Amplitude<Scalar> inner(const StateVector<Scalar>& u, const StateVector<Scalar>& v) {
  if (u.size() != v.size()) {
    throw Error(Errc::dimension_mismatch, "inner product of dimensions " +
                                              std::to_string(u.size()) + " and " +
                                              std::to_string(v.size()));
  }
  return u.dot(v);
}

/// Clamps a value into [0, 1], rejecting anything further out than the slack.
template <typename Scalar>
Scalar checked_probability(Scalar value) {
  const Scalar slack = Tolerance<Scalar>::probability_slack;
  if (!(value >= -slack && value <= Scalar(1) + slack)) {
    throw Error(Errc::out_of_domain, "probability " + std::to_string(double(value)) +
                                         " outside [0, 1]");
  }
  return std::clamp(value, Scalar(0), Scalar(1));
}

/// |<outcome|prep>|^2 for unit vectors. Inputs may deviate from unit norm by
/// the born_input tolerance; the overlap is divided by both squared norms so
/// that such deviations cannot push the result past the probability slack.
template <typename Scalar>
Scalar born_probability(const StateVector<Scalar>& prep, const StateVector<Scalar>& outcome) {
  if (prep.size() != outcome.size()) {
    throw Error(Errc::dimension_mismatch, "born_probability");
  }
  const Scalar tol = Tolerance<Scalar>::born_input;
  if (!is_normalized(prep, tol) || !is_normalized(outcome, tol)) {
    throw Error(Errc::not_normalized, "born_probability requires unit vectors");
  }
  return checked_probability(std::norm(inner(outcome, prep)) /
                             (prep.squaredNorm() * outcome.squaredNorm()));
}

/// Kronecker product in (00, 01, 10, 11) order: index = i * dim(v) + j.
template <typename Scalar>
StateVector<Scalar> tensor(const StateVector<Scalar>& u, const StateVector<Scalar>& v) {
  StateVector<Scalar> out(u.size() * v.size());
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    out.segment(i * v.size(), v.size()) = u(i) * v;
  }
  return out;
}

/// Multiplies by a global phase so the first component with magnitude above
/// the anchor threshold is real and positive.
template <typename Scalar>
StateVector<Scalar> canonical_phase(const StateVector<Scalar>& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const Scalar mag = std::abs(v(i));
    if (mag > Tolerance<Scalar>::phase_anchor) {
      StateVector<Scalar> out = v * (std::conj(v(i)) / mag);
      out(i) = Amplitude<Scalar>(mag, Scalar(0));
      return out;
    }
  }
  return v;
}

namespace detail {

template <typename Scalar>
void require_common_dim(std::span<const StateVector<Scalar>> vectors, Eigen::Index dim) {
  for (const auto& v : vectors) {
    if (v.size() != dim) {
      throw Error(Errc::dimension_mismatch, "expected dimension " + std::to_string(dim) +
                                                ", got " + std::to_string(v.size()));
    }
  }
}

// Orthonormal basis (as columns) of span(vectors), built from the
// eigendecomposition of the Gram matrix. Eigenvalues at or below the
// orthogonality tolerance are discarded, which fixes the numerical rank.
template <typename Scalar>
Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic> span_basis(
    std::span<const StateVector<Scalar>> vectors, Eigen::Index dim) {
  using Mat = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
  const auto count = static_cast<Eigen::Index>(vectors.size());
  if (count == 0) return Mat(dim, 0);

  Mat columns(dim, count);
  for (Eigen::Index k = 0; k < count; ++k) columns.col(k) = vectors[k];

  const Mat gram = columns.adjoint() * columns;
  Eigen::SelfAdjointEigenSolver<Mat> eig(gram);
  const auto& values = eig.eigenvalues();

  Mat basis(dim, 0);
  // Descending order so the best-conditioned directions come first.
  for (Eigen::Index k = count - 1; k >= 0; --k) {
    if (values(k) <= Tolerance<Scalar>::orthogonality) continue;
    StateVector<Scalar> q = columns * eig.eigenvectors().col(k) / std::sqrt(values(k));
    q -= basis * (basis.adjoint() * q);
    q.normalize();
    basis.conservativeResize(Eigen::NoChange, basis.cols() + 1);
    basis.col(basis.cols() - 1) = q;
  }
  return basis;
}

// Unit vector orthogonal to the columns of `basis`, taken as the projection
// of the standard basis vector with the largest residual (lowest index wins
// ties), re-orthogonalized once and canonically phased.
template <typename Scalar>
StateVector<Scalar> completion_vector(
    const Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>& basis,
    Eigen::Index dim) {
  StateVector<Scalar> best;
  Scalar best_norm = Scalar(-1);
  for (Eigen::Index j = 0; j < dim; ++j) {
    StateVector<Scalar> r = basis_vector<Scalar>(dim, j);
    r -= basis * (basis.adjoint() * r);
    const Scalar n = r.norm();
    if (n > best_norm) {
      best_norm = n;
      best = std::move(r);
    }
  }
  best.normalize();
  best -= basis * (basis.adjoint() * best);
  best.normalize();
  return canonical_phase(best);
}

}  // namespace detail

/// Numerical rank of span(vectors) under the Gram-eigenvalue threshold.
template <typename Scalar>
Eigen::Index span_rank(std::span<const StateVector<Scalar>> vectors, Eigen::Index dim) {
  detail::require_common_dim(vectors, dim);
  return detail::span_basis(vectors, dim).cols();
}

/// The unique (up to phase) unit vector orthogonal to `vectors`, which must
/// span exactly dim - 1 dimensions. The result is canonically phased and
/// bit-reproducible for identical input.
template <typename Scalar>
StateVector<Scalar> orthogonal_complement(std::span<const StateVector<Scalar>> vectors,
                                          Eigen::Index dim) {
  detail::require_common_dim(vectors, dim);
  const auto basis = detail::span_basis(vectors, dim);
  if (basis.cols() != dim - 1) {
    throw Error(Errc::degenerate_span, "inputs span " + std::to_string(basis.cols()) +
                                           " dimensions, need " + std::to_string(dim - 1));
  }
  return detail::completion_vector<Scalar>(basis, dim);
}

template <typename Scalar>
StateVector<Scalar> orthogonal_complement(std::initializer_list<StateVector<Scalar>> vectors,
                                          Eigen::Index dim) {
  const std::vector<StateVector<Scalar>> copy(vectors);
  return orthogonal_complement<Scalar>(std::span<const StateVector<Scalar>>(copy), dim);
}

/// Extends a set of mutually orthogonal unit vectors to a full orthonormal
/// basis. The given vectors come first, in order; completions are canonically
/// phased.
template <typename Scalar>
std::vector<StateVector<Scalar>> complete_basis(std::span<const StateVector<Scalar>> vectors,
                                                Eigen::Index dim) {
  detail::require_common_dim(vectors, dim);
  std::vector<StateVector<Scalar>> out(vectors.begin(), vectors.end());
  if (detail::span_basis(vectors, dim).cols() != static_cast<Eigen::Index>(vectors.size())) {
    throw Error(Errc::degenerate_span, "complete_basis inputs are linearly dependent");
  }
  while (static_cast<Eigen::Index>(out.size()) < dim) {
    const auto basis = detail::span_basis(std::span<const StateVector<Scalar>>(out), dim);
    out.push_back(detail::completion_vector<Scalar>(basis, dim));
  }
  return out;
}

}  // namespace qctx
