#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <thread>
#include <vector>

#include "framescale/error.hpp"
#include "framescale/frame.hpp"
#include "framescale/index_set.hpp"
#include "framescale/numerics.hpp"

namespace framescale {

/// Componentwise tolerance separating distinct float vertices.
inline constexpr double kVertexDedupTolerance = 1e-7;

/// Nonnegative weights c(1..k). The support is {i : c(i) > 0} (exact) or
/// {i : c(i) > tol} (float); float entries within tol of zero are clamped.
template <FrameScalar T>
class ScalingVector {
 public:
  ScalingVector() = default;
  explicit ScalingVector(std::vector<T> weights, double tol = kDefaultTolerance) : weights_(std::move(weights)) {
    if (weights_.size() > IndexSet::kMaxElements) throw Error(ErrorCode::TooLarge, "at most 64 weights are supported");
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      auto& w = weights_[i];
      if constexpr (ScalarTraits<T>::exact) {
        if (w < 0) throw Error(ErrorCode::NotAScaling, "negative weight at index " + std::to_string(i + 1));
      } else {
        if (!std::isfinite(w) || w < -tol) throw Error(ErrorCode::NotAScaling, "negative weight at index " + std::to_string(i + 1));
        if (w <= tol) w = 0.0;
      }
      if (is_positive<T>(w, tol)) support_.insert(i);
    }
  }

  [[nodiscard]] const std::vector<T>& weights() const { return weights_; }
  [[nodiscard]] IndexSet support() const { return support_; }
  [[nodiscard]] std::size_t size() const { return weights_.size(); }
  const T& operator[](std::size_t i) const { return weights_[i]; }

  [[nodiscard]] T sum() const { return std::accumulate(weights_.begin(), weights_.end(), T(0)); }

  friend bool operator==(const ScalingVector& a, const ScalingVector& b) { return a.weights_ == b.weights_; }

 private:
  std::vector<T> weights_;
  IndexSet support_;
};

/// Canonical order: support (lexicographic on sorted indices), then weights.
template <FrameScalar T>
bool canonical_less(const ScalingVector<T>& a, const ScalingVector<T>& b) {
  if (a.support() != b.support()) return a.support().lex_less(b.support());
  return std::lexicographical_compare(a.weights().begin(), a.weights().end(), b.weights().begin(), b.weights().end());
}

template <FrameScalar T>
bool approximately_equal(const ScalingVector<T>& a, const ScalingVector<T>& b, double tol = kVertexDedupTolerance) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!is_zero<T>(a[i] - b[i], tol)) return false;
  return true;
}

/// The vertex set M(F) of the scalability polytope, canonically ordered.
template <FrameScalar T>
struct MinimalScalingSet {
  std::vector<ScalingVector<T>> vertices;

  [[nodiscard]] std::size_t size() const { return vertices.size(); }
  [[nodiscard]] bool empty() const { return vertices.empty(); }
  const ScalingVector<T>& operator[](std::size_t i) const { return vertices[i]; }
  auto begin() const { return vertices.begin(); }
  auto end() const { return vertices.end(); }

  /// Index of a vertex equal to `v` (within the dedup tolerance in float mode).
  [[nodiscard]] std::optional<std::size_t> find(const ScalingVector<T>& v) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (approximately_equal(vertices[i], v)) return i;
    return std::nullopt;
  }
};

template <FrameScalar T>
bool same_vertex_set(const MinimalScalingSet<T>& a, const MinimalScalingSet<T>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!approximately_equal(a[i], b[i])) return false;
  return true;
}

/// The stacked system [G~; 1 ... 1] x = [0; n], G~ reduced to independent rows.
template <FrameScalar T>
struct ScalabilitySystem {
  Matrix<T> matrix;
  std::vector<T> rhs;
  std::size_t gramian_rank = 0;
};

template <FrameScalar T>
ScalabilitySystem<T> build_scalability_system(const Frame<T>& frame) {
  const std::size_t k = frame.size();
  const auto echelon = row_reduce(diagram_gramian(frame), frame.tol());
  const std::size_t r = echelon.rank();
  ScalabilitySystem<T> sys;
  sys.gramian_rank = r;
  sys.matrix = Matrix<T>(r + 1, k);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < k; ++j) sys.matrix(i, j) = echelon.reduced(i, j);
  for (std::size_t j = 0; j < k; ++j) sys.matrix(r, j) = T(1);
  sys.rhs.assign(r + 1, T(0));
  sys.rhs[r] = T(static_cast<long>(frame.dimension()));
  return sys;
}

/// Scalable iff the frame spans and the scalability system has a nonnegative solution.
template <FrameScalar T>
bool is_scalable(const Frame<T>& frame) {
  if (rank(frame.gram(), frame.tol()) < frame.dimension()) return false;
  auto sys = build_scalability_system(frame);
  const auto result = lp_solve(LinearProgram<T>::feasibility(std::move(sys.matrix), std::move(sys.rhs)), frame.tol());
  return result.status == LPStatus::Optimal;
}

namespace detail {

enum class SupportVerdict { Dependent, Vertex, Rejected };

/// Vertex test on a candidate support S: the system restricted to the columns
/// in S has full column rank, is consistent, its unique solution is strictly
/// positive, and the padded solution satisfies the full unreduced system.
template <FrameScalar T>
SupportVerdict classify_support(const Matrix<T>& a, std::span<const T> b, const Matrix<T>& gramian, std::size_t n,
                                IndexSet support, double tol, std::vector<T>* vertex) {
  const auto columns = support.elements();
  const auto restricted = a.select_columns(columns);
  const auto sol = solve_linear(restricted, b, tol);
  if (sol.rank < columns.size()) return SupportVerdict::Dependent;
  if (sol.status != SolveStatus::Unique) return SupportVerdict::Rejected;
  for (const auto& x : sol.solution)
    if (!is_positive<T>(x, tol)) return SupportVerdict::Rejected;

  std::vector<T> full(a.cols(), T(0));
  for (std::size_t i = 0; i < columns.size(); ++i) full[columns[i]] = sol.solution[i];
  T total(0);
  for (const auto& x : full) total += x;
  const double scale = tol * static_cast<double>(n);
  if (!is_zero<T>(total - T(static_cast<long>(n)), scale)) return SupportVerdict::Rejected;
  for (const auto& r : multiply<T>(gramian, full))
    if (!is_zero<T>(r, scale)) return SupportVerdict::Rejected;
  if (vertex != nullptr) *vertex = std::move(full);
  return SupportVerdict::Vertex;
}

template <FrameScalar T>
MinimalScalingSet<T> finalize(std::vector<std::vector<T>> raw, double tol) {
  MinimalScalingSet<T> out;
  for (auto& w : raw) out.vertices.emplace_back(std::move(w), tol);
  std::sort(out.vertices.begin(), out.vertices.end(), canonical_less<T>);
  std::vector<ScalingVector<T>> unique;
  for (auto& v : out.vertices)
    if (unique.empty() || !approximately_equal(unique.back(), v)) unique.push_back(std::move(v));
  out.vertices = std::move(unique);
  return out;
}

}  // namespace detail

struct EnumerationOptions {
  unsigned threads = 1;  // top-level branches are fanned out across workers
};

/// Vertex enumeration by support search. Supports are grown in increasing
/// index order up to min(rank(G~)+1, n(n+1)/2); a branch stops at supports
/// with dependent columns (all supersets are dependent) and at accepted
/// supports (no superset of a vertex support is a vertex support).
template <FrameScalar T>
MinimalScalingSet<T> enumerate_minimal_scalings(const Frame<T>& frame, EnumerationOptions options = {}) {
  const std::size_t k = frame.size();
  const std::size_t n = frame.dimension();
  const double tol = frame.tol();
  if (!is_scalable(frame)) return {};

  const auto sys = build_scalability_system(frame);
  const auto gramian = diagram_gramian(frame);
  const std::size_t bound = std::min({sys.gramian_rank + 1, n * (n + 1) / 2, k});

  auto explore_from = [&](std::size_t first, std::vector<std::vector<T>>& found) {
    std::function<void(IndexSet, std::size_t)> extend = [&](IndexSet current, std::size_t next) {
      for (std::size_t j = next; j < k; ++j) {
        IndexSet candidate = current;
        candidate.insert(j);
        std::vector<T> vertex;
        const auto verdict = detail::classify_support<T>(sys.matrix, sys.rhs, gramian, n, candidate, tol, &vertex);
        if (verdict == detail::SupportVerdict::Vertex) {
          found.push_back(std::move(vertex));
        } else if (verdict == detail::SupportVerdict::Rejected && candidate.size() < bound) {
          extend(candidate, j + 1);
        }
      }
    };
    IndexSet root;
    root.insert(first);
    std::vector<T> vertex;
    const auto verdict = detail::classify_support<T>(sys.matrix, sys.rhs, gramian, n, root, tol, &vertex);
    if (verdict == detail::SupportVerdict::Vertex) found.push_back(std::move(vertex));
    else if (verdict == detail::SupportVerdict::Rejected && bound > 1) extend(root, first + 1);
  };

  std::vector<std::vector<std::vector<T>>> per_branch(k);
  const unsigned workers = std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(k)));
  if (workers == 1) {
    for (std::size_t first = 0; first < k; ++first) explore_from(first, per_branch[first]);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t first = w; first < k; first += workers) explore_from(first, per_branch[first]);
      });
    }
  }
  std::vector<std::vector<T>> raw;
  for (auto& branch : per_branch)
    for (auto& v : branch) raw.push_back(std::move(v));
  return detail::finalize<T>(std::move(raw), tol);
}

inline constexpr std::size_t kBruteForceMaxVectors = 16;

/// Oracle: the same vertex test over all 2^k supports, against the unreduced
/// system [G~; 1] x = [0; n], with no pruning and no size bound.
template <FrameScalar T>
MinimalScalingSet<T> brute_force_minimal_scalings(const Frame<T>& frame) {
  const std::size_t k = frame.size();
  if (k > kBruteForceMaxVectors) throw Error(ErrorCode::TooLarge, "brute force is limited to k <= 16");
  const std::size_t n = frame.dimension();
  const auto gramian = diagram_gramian(frame);
  Matrix<T> a(k + 1, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) a(i, j) = gramian(i, j);
  for (std::size_t j = 0; j < k; ++j) a(k, j) = T(1);
  std::vector<T> b(k + 1, T(0));
  b[k] = T(static_cast<long>(n));

  std::vector<std::vector<T>> raw;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<T> vertex;
    if (detail::classify_support<T>(a, b, gramian, n, IndexSet(mask), frame.tol(), &vertex) == detail::SupportVerdict::Vertex)
      raw.push_back(std::move(vertex));
  }
  return detail::finalize<T>(std::move(raw), frame.tol());
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

struct MboundCertificate {
  std::uint64_t bound = 0;  // C(k, rank(G~) + 1)
  std::uint64_t size = 0;
  bool holds = false;
  bool equality = false;
};

template <FrameScalar T>
MboundCertificate check_mbound(const Frame<T>& frame, const MinimalScalingSet<T>& vertices) {
  const std::size_t r = rank(diagram_gramian(frame), frame.tol());
  MboundCertificate out;
  out.bound = binomial(frame.size(), r + 1);
  out.size = vertices.size();
  out.holds = out.size <= out.bound;
  out.equality = out.size == out.bound;
  return out;
}

/// For a scaling c: minimal iff |supp(c)| <= n(n+1)/2.
template <FrameScalar T>
bool is_minimal_scaling(const Frame<T>& frame, const ScalingVector<T>& c) {
  if (!is_parseval<T>(frame, c.weights())) throw Error(ErrorCode::NotAScaling, "weights do not make a Parseval frame");
  const std::size_t n = frame.dimension();
  return c.support().size() <= n * (n + 1) / 2;
}

/// Convex coefficients alpha >= 0, sum alpha = 1, sum alpha_j v_j = c, found
/// as a basic feasible solution of the corresponding LP.
template <FrameScalar T>
std::vector<T> convex_decompose(const ScalingVector<T>& c, const std::vector<ScalingVector<T>>& vertices,
                                double tol = kDefaultTolerance) {
  const std::size_t m = vertices.size();
  const std::size_t k = c.size();
  if (m == 0) throw Error(ErrorCode::NotAScaling, "no vertices to decompose over");
  Matrix<T> a(k + 1, m);
  std::vector<T> b(k + 1, T(0));
  for (std::size_t j = 0; j < m; ++j) {
    if (vertices[j].size() != k) throw Error(ErrorCode::DimensionMismatch, "vertex length differs from scaling length");
    for (std::size_t i = 0; i < k; ++i) a(i, j) = vertices[j][i];
    a(k, j) = T(1);
  }
  for (std::size_t i = 0; i < k; ++i) b[i] = c[i];
  b[k] = T(1);
  auto result = lp_solve(LinearProgram<T>::feasibility(std::move(a), std::move(b)), tol);
  if (result.status != LPStatus::Optimal) throw Error(ErrorCode::NotAScaling, "scaling is not in the convex hull of the vertices");
  if constexpr (!ScalarTraits<T>::exact) {
    for (auto& x : result.solution)
      if (x < 0.0) x = 0.0;
  }
  return result.solution;
}

template <FrameScalar T>
std::vector<T> convex_decompose(const ScalingVector<T>& c, const MinimalScalingSet<T>& vertices,
                                double tol = kDefaultTolerance) {
  return convex_decompose(c, vertices.vertices, tol);
}

/// John's decomposition of the identity: sum_i c_i f_i f_i^T == I_n.
template <FrameScalar T>
bool verify_john_decomposition(const Frame<T>& frame, const ScalingVector<T>& c) {
  return is_parseval<T>(frame, c.weights());
}

}  // namespace framescale
