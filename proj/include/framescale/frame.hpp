#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "framescale/error.hpp"
#include "framescale/index_set.hpp"
#include "framescale/numerics.hpp"

namespace framescale {

/// Unit-norm deviation accepted (and renormalized away) at ingestion.
inline constexpr double kUnitNormTolerance = 1e-6;

/// A unit-norm frame of k vectors in R^n. Float frames carry explicit vectors
/// (and their Gram matrix); exact frames carry only a rational Gram matrix.
template <FrameScalar T>
class Frame {
 public:
  /// Float frames from column vectors: `vectors[i]` is f_i.
  static Frame from_vectors(const std::vector<std::vector<double>>& vectors, double tol = kDefaultTolerance)
    requires std::same_as<T, double>
  {
    if (vectors.empty()) throw Error(ErrorCode::TooFewVectors, "frame has no vectors");
    const std::size_t n = vectors.front().size();
    Frame f;
    f.n_ = n;
    f.tol_ = ScalarMode::floating(tol).tol;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      const auto& v = vectors[i];
      if (v.size() != n) throw Error(ErrorCode::DimensionMismatch, "vector " + std::to_string(i + 1) + " has wrong length");
      double norm2 = 0.0;
      for (double x : v) {
        if (!std::isfinite(x)) throw Error(ErrorCode::Schema, "non-finite vector entry");
        norm2 += x * x;
      }
      const double norm = std::sqrt(norm2);
      if (std::fabs(norm - 1.0) > kUnitNormTolerance)
        throw Error(ErrorCode::NotUnitNorm, "vector " + std::to_string(i + 1) + " has norm " + std::to_string(norm));
      std::vector<double> u(v);
      for (double& x : u) x /= norm;
      f.vectors_.push_back(std::move(u));
    }
    check_shape(n, vectors.size());
    f.gram_ = Matrix<double>(f.vectors_.size(), f.vectors_.size());
    for (std::size_t i = 0; i < f.vectors_.size(); ++i) {
      f.gram_(i, i) = 1.0;
      for (std::size_t j = i + 1; j < f.vectors_.size(); ++j) {
        const double g = dot<double>(f.vectors_[i], f.vectors_[j]);
        f.gram_(i, j) = g;
        f.gram_(j, i) = g;
      }
    }
    return f;
  }

  /// Frames from a Gram matrix with declared ambient dimension. Exact frames
  /// require an exactly unit diagonal; float frames are factored into vectors.
  static Frame from_gram(const Matrix<T>& gram, std::size_t n, double tol = kDefaultTolerance) {
    const std::size_t k = gram.rows();
    if (gram.cols() != k) throw Error(ErrorCode::DimensionMismatch, "Gram matrix must be square");
    check_shape(n, k);
    if constexpr (ScalarTraits<T>::exact) {
      for (std::size_t i = 0; i < k; ++i)
        if (gram(i, i) != 1) throw Error(ErrorCode::BadDiagonal, "Gram diagonal entry " + std::to_string(i + 1) + " is not 1");
      if (!is_positive_semidefinite(gram)) throw Error(ErrorCode::NotPSD, "Gram matrix is not positive semidefinite");
      if (rank(gram) > n) throw Error(ErrorCode::NotPSD, "Gram matrix rank exceeds the dimension");
      Frame f;
      f.n_ = n;
      f.gram_ = gram;
      return f;
    } else {
      for (std::size_t i = 0; i < k; ++i)
        if (std::fabs(gram(i, i) - 1.0) > kUnitNormTolerance)
          throw Error(ErrorCode::BadDiagonal, "Gram diagonal entry " + std::to_string(i + 1) + " is not 1");
      if (!is_symmetric(gram, kUnitNormTolerance)) throw Error(ErrorCode::NotPSD, "Gram matrix is not symmetric");
      Eigen::MatrixXd e(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) e(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = gram(r, c);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(e);
      const auto& vals = solver.eigenvalues();  // ascending
      const double scale = std::max(1.0, vals.cwiseAbs().maxCoeff());
      if (vals(0) < -kUnitNormTolerance * scale) throw Error(ErrorCode::NotPSD, "Gram matrix is not positive semidefinite");
      if (k > n && vals(static_cast<Eigen::Index>(k - n - 1)) > kUnitNormTolerance * scale)
        throw Error(ErrorCode::NotPSD, "Gram matrix rank exceeds the dimension");
      std::vector<std::vector<double>> vectors(k, std::vector<double>(n, 0.0));
      for (std::size_t d = 0; d < n && d < k; ++d) {
        const auto col = static_cast<Eigen::Index>(k - 1 - d);
        const double s = std::sqrt(std::max(0.0, vals(col)));
        for (std::size_t i = 0; i < k; ++i) vectors[i][d] = s * solver.eigenvectors()(static_cast<Eigen::Index>(i), col);
      }
      return from_vectors(vectors, tol);
    }
  }

  [[nodiscard]] std::size_t dimension() const { return n_; }
  [[nodiscard]] std::size_t size() const { return gram_.rows(); }
  [[nodiscard]] const Matrix<T>& gram() const { return gram_; }
  [[nodiscard]] double tol() const { return tol_; }
  [[nodiscard]] ScalarMode mode() const { return ScalarTraits<T>::mode(tol_); }

  [[nodiscard]] std::span<const double> vector(std::size_t i) const
    requires std::same_as<T, double>
  {
    return vectors_.at(i);
  }
  [[nodiscard]] const std::vector<std::vector<double>>& vectors() const
    requires std::same_as<T, double>
  {
    return vectors_;
  }

  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != size()) throw Error(ErrorCode::DimensionMismatch, "label count must equal k");
    labels_ = std::move(labels);
  }

  /// Frame with the listed vectors, in order (duplicates allowed).
  [[nodiscard]] Frame select(const std::vector<std::size_t>& indices) const {
    Matrix<T> g(indices.size(), indices.size());
    for (std::size_t a = 0; a < indices.size(); ++a)
      for (std::size_t b = 0; b < indices.size(); ++b) g(a, b) = gram_(indices.at(a), indices.at(b));
    Frame f;
    f.n_ = n_;
    f.tol_ = tol_;
    f.gram_ = std::move(g);
    if constexpr (std::same_as<T, double>) {
      for (auto i : indices) f.vectors_.push_back(vectors_.at(i));
    }
    return f;
  }

 private:
  Frame() = default;

  static void check_shape(std::size_t n, std::size_t k) {
    if (n < 2) throw Error(ErrorCode::DimensionTooSmall, "dimension must be at least 2");
    if (k < n) throw Error(ErrorCode::TooFewVectors, "need at least n vectors to span R^n");
    if (k > IndexSet::kMaxElements) throw Error(ErrorCode::TooLarge, "at most 64 vectors are supported");
  }

  std::size_t n_ = 0;
  double tol_ = kDefaultTolerance;
  Matrix<T> gram_;
  std::vector<std::vector<double>> vectors_;
  std::vector<std::string> labels_;
};

using FloatFrame = Frame<double>;
using ExactFrame = Frame<Rational>;

/// Diagram vector of f in R^{n(n-1)}: (f(i)^2 - f(j)^2)/sqrt(n-1) for all
/// i<j in lexicographic order, then sqrt(2n) f(i) f(j)/sqrt(n-1) for all i<j.
inline std::vector<double> diagram_vector(std::span<const double> f, std::size_t n) {
  if (f.size() != n) throw Error(ErrorCode::DimensionMismatch, "vector length differs from the dimension");
  if (n < 2) throw Error(ErrorCode::DimensionTooSmall, "dimension must be at least 2");
  const double inv = 1.0 / std::sqrt(static_cast<double>(n - 1));
  const double product_scale = std::sqrt(2.0 * static_cast<double>(n)) * inv;
  const std::size_t pairs = n * (n - 1) / 2;
  std::vector<double> out(2 * pairs);
  std::size_t p = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++p) {
      out[p] = (f[i] * f[i] - f[j] * f[j]) * inv;
      out[pairs + p] = product_scale * f[i] * f[j];
    }
  }
  return out;
}

/// Closed form of the diagram Gramian from a unit-diagonal frame Gram matrix K:
/// <f~_i, f~_j> = (n K_ij^2 - 1) / (n - 1).
template <FrameScalar T>
Matrix<T> diagram_gramian_from_gram(const Matrix<T>& gram, std::size_t n) {
  const std::size_t k = gram.rows();
  const T nn(static_cast<long>(n));
  const T denom(static_cast<long>(n - 1));
  Matrix<T> g(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      const T value = (nn * gram(i, j) * gram(i, j) - T(1)) / denom;
      g(i, j) = value;
      g(j, i) = value;
    }
  }
  return g;
}

/// Float frames use explicit diagram vectors; exact frames use the closed form.
template <FrameScalar T>
Matrix<T> diagram_gramian(const Frame<T>& frame) {
  if constexpr (ScalarTraits<T>::exact) {
    return diagram_gramian_from_gram(frame.gram(), frame.dimension());
  } else {
    const std::size_t k = frame.size();
    std::vector<std::vector<double>> dv;
    dv.reserve(k);
    for (std::size_t i = 0; i < k; ++i) dv.push_back(diagram_vector(frame.vector(i), frame.dimension()));
    Matrix<double> g(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i; j < k; ++j) {
        const double value = dot<double>(dv[i], dv[j]);
        g(i, j) = value;
        g(j, i) = value;
      }
    }
    return g;
  }
}

/// Whether the vectors indexed by `subset` span R^n (rank of the Gram block).
template <FrameScalar T>
bool spans(const Frame<T>& frame, IndexSet subset) {
  const auto idx = subset.elements();
  if (idx.size() < frame.dimension()) return false;
  Matrix<T> block(idx.size(), idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) block(a, b) = frame.gram()(idx[a], idx[b]);
  return rank(block, frame.tol()) == frame.dimension();
}

template <FrameScalar T>
struct TightResult {
  bool tight = false;
  T constant = T(0);  // lambda with f = lambda * sum <f, f_i> f_i; n/|J| for unit-norm subsets
};

/// Tightness of the subframe {f_j : j in J}: the diagram vectors sum to zero,
/// i.e. 1_J^T G~ 1_J = 0, and the subframe spans.
template <FrameScalar T>
TightResult<T> is_tight(const Frame<T>& frame, IndexSet subset) {
  if (subset.empty()) throw Error(ErrorCode::EmptySubset, "tightness of the empty subframe");
  if (!subset.is_subset_of(IndexSet::range(frame.size()))) throw Error(ErrorCode::DimensionMismatch, "subset index out of range");
  const auto g = diagram_gramian(frame);
  const auto idx = subset.elements();
  T q(0);
  for (auto i : idx)
    for (auto j : idx) q += g(i, j);
  const double m = static_cast<double>(idx.size());
  TightResult<T> out;
  out.tight = is_zero<T>(q, frame.tol() * m * m) && spans(frame, subset);
  if (out.tight) out.constant = T(static_cast<long>(frame.dimension())) / T(static_cast<long>(idx.size()));
  return out;
}

/// sum_i c(i) f_i f_i^T == I_n. Float frames compare entrywise within tol.
/// Exact frames use the Gram route: with K the frame Gram matrix and
/// D = diag(c), F D F^T = I iff rank K = n and K D K = K.
template <FrameScalar T>
bool is_parseval(const Frame<T>& frame, std::span<const T> c) {
  const std::size_t k = frame.size();
  const std::size_t n = frame.dimension();
  if (c.size() != k) throw Error(ErrorCode::DimensionMismatch, "scaling length differs from k");
  if constexpr (ScalarTraits<T>::exact) {
    for (const auto& x : c)
      if (x < 0) return false;
    const auto& K = frame.gram();
    if (rank(K) != n) return false;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i; j < k; ++j) {
        Rational s(0);
        for (std::size_t l = 0; l < k; ++l)
          if (c[l] != 0) s += K(i, l) * c[l] * K(l, j);
        if (s != K(i, j)) return false;
      }
    }
    return true;
  } else {
    for (double x : c)
      if (x < -frame.tol()) return false;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) {
        double s = 0.0;
        for (std::size_t i = 0; i < k; ++i) s += c[i] * frame.vector(i)[a] * frame.vector(i)[b];
        const double target = a == b ? 1.0 : 0.0;
        if (std::fabs(s - target) > frame.tol()) return false;
      }
    }
    return true;
  }
}

struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
  bool approximate = false;  // set for exact frames, whose spectrum is computed in floating point
};

/// Extreme eigenvalues of the frame operator F F^T (equivalently the n
/// largest eigenvalues of the Gram matrix).
template <FrameScalar T>
FrameBounds frame_bounds(const Frame<T>& frame) {
  const std::size_t n = frame.dimension();
  if (rank(frame.gram(), frame.tol()) < n) throw Error(ErrorCode::NotSpanning, "frame does not span R^n");
  FrameBounds out;
  if constexpr (ScalarTraits<T>::exact) {
    const auto eig = symmetric_eigenvalues(to_double(frame.gram()));
    out.upper = eig.back();
    out.lower = eig[eig.size() - n];
    out.approximate = true;
  } else {
    Matrix<double> s(n, n);
    for (std::size_t i = 0; i < frame.size(); ++i)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) s(a, b) += frame.vector(i)[a] * frame.vector(i)[b];
    const auto eig = symmetric_eigenvalues(s);
    out.lower = eig.front();
    out.upper = eig.back();
  }
  return out;
}

}  // namespace framescale
