#pragma once

// Structure of scaled frames: factor posets and empty covers, orthogonal
// partitions of minimal scalings, affine dependence, prime scalings and
// orthogonal decompositions of scalings.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "framescale/error.hpp"
#include "framescale/frame.hpp"
#include "framescale/index_set.hpp"
#include "framescale/numerics.hpp"
#include "framescale/scaling.hpp"

namespace framescale {

inline constexpr std::size_t kPosetMaxVectors = 20;
inline constexpr std::size_t kWitnessMaxVertices = 12;

/// Index sets of tight subframes (plus the empty set), sorted by size then
/// lexicographically.
struct FactorPoset {
  std::vector<IndexSet> members;

  [[nodiscard]] bool contains(IndexSet s) const { return std::find(members.begin(), members.end(), s) != members.end(); }
  friend bool operator==(const FactorPoset&, const FactorPoset&) = default;
};

/// Minimal nonempty members of a factor poset.
struct EmptyCover {
  std::vector<IndexSet> members;

  friend bool operator==(const EmptyCover&, const EmptyCover&) = default;
};

/// Factor poset of cF (c defaults to all ones). A subset J of supp(c) is a
/// member iff sum_{j in J} c(j) f~_j = 0, tested as the quadratic form
/// c_J^T G~ c_J, and {f_j : j in J} spans.
template <FrameScalar T>
FactorPoset factor_poset(const Frame<T>& frame, const std::optional<ScalingVector<T>>& scaling = std::nullopt,
                         std::size_t max_k = kPosetMaxVectors) {
  const std::size_t k = frame.size();
  if (k > max_k) throw Error(ErrorCode::TooLarge, "factor poset enumeration is capped at k <= " + std::to_string(max_k));
  std::vector<T> c(k, T(1));
  if (scaling) {
    if (scaling->size() != k) throw Error(ErrorCode::DimensionMismatch, "scaling length differs from k");
    c = scaling->weights();
  }
  const double tol = frame.tol();
  const auto g = diagram_gramian(frame);
  std::vector<std::size_t> pool;
  for (std::size_t i = 0; i < k; ++i)
    if (is_positive<T>(c[i], tol)) pool.push_back(i);
  const std::size_t m = pool.size();

  FactorPoset poset;
  poset.members.push_back(IndexSet{});
  // acc[d][a] = sum_{j in J} c(j) G~(pool[a], j) for the subset J at depth d
  std::vector<std::vector<T>> acc(m + 1, std::vector<T>(m, T(0)));

  auto visit = [&](auto&& self, std::size_t from, std::size_t depth, IndexSet current, const T& q, const T& weight) -> void {
    for (std::size_t a = from; a < m; ++a) {
      const std::size_t x = pool[a];
      const T& cx = c[x];
      const T next_q = q + T(2) * cx * acc[depth][a] + cx * cx * g(x, x);
      const T next_weight = weight + cx;
      for (std::size_t b = 0; b < m; ++b) acc[depth + 1][b] = acc[depth][b] + cx * g(pool[b], x);
      IndexSet next = current;
      next.insert(x);
      const double w = to_double(next_weight);
      if (is_zero<T>(next_q, tol * w * w) && spans(frame, next)) poset.members.push_back(next);
      self(self, a + 1, depth + 1, next, next_q, next_weight);
    }
  };
  visit(visit, 0, 0, IndexSet{}, T(0), T(0));
  std::sort(poset.members.begin(), poset.members.end(), BySizeThenLex{});
  return poset;
}

inline EmptyCover empty_cover(const FactorPoset& poset) {
  EmptyCover ec;
  for (auto s : poset.members) {
    if (s.empty()) continue;
    bool minimal = true;
    for (auto t : poset.members) {
      if (!t.empty() && t.is_proper_subset_of(s)) {
        minimal = false;
        break;
      }
    }
    if (minimal) ec.members.push_back(s);
  }
  std::sort(ec.members.begin(), ec.members.end(), BySizeThenLex{});
  return ec;
}

/// All unions of pairwise disjoint subfamilies of the empty cover, plus the empty set.
inline FactorPoset reconstruct_poset(const EmptyCover& ec) {
  std::set<std::uint64_t> unions;
  auto visit = [&](auto&& self, std::size_t from, IndexSet current) -> void {
    unions.insert(current.bits());
    for (std::size_t i = from; i < ec.members.size(); ++i)
      if (current.disjoint(ec.members[i])) self(self, i + 1, current | ec.members[i]);
  };
  visit(visit, 0, IndexSet{});
  FactorPoset poset;
  for (auto bits : unions) poset.members.emplace_back(bits);
  std::sort(poset.members.begin(), poset.members.end(), BySizeThenLex{});
  return poset;
}

inline bool ec_pairwise_disjoint(const EmptyCover& ec) {
  for (std::size_t i = 0; i < ec.members.size(); ++i)
    for (std::size_t j = i + 1; j < ec.members.size(); ++j)
      if (!ec.members[i].disjoint(ec.members[j])) return false;
  return true;
}

/// Hasse diagram edges (lower, upper): upper covers lower in the poset.
inline std::vector<std::pair<IndexSet, IndexSet>> covering_relations(const FactorPoset& poset) {
  std::vector<std::pair<IndexSet, IndexSet>> edges;
  for (auto lower : poset.members) {
    for (auto upper : poset.members) {
      if (!lower.is_proper_subset_of(upper)) continue;
      bool covers = true;
      for (auto mid : poset.members) {
        if (lower.is_proper_subset_of(mid) && mid.is_proper_subset_of(upper)) {
          covers = false;
          break;
        }
      }
      if (covers) edges.emplace_back(lower, upper);
    }
  }
  return edges;
}

struct OrthogonalPartition {
  std::vector<std::vector<std::size_t>> blocks;  // indices into the scaling list, sorted by least element
  std::vector<std::size_t> covered;

  friend bool operator==(const OrthogonalPartition&, const OrthogonalPartition&) = default;
};

/// Connected components of the graph on J with an edge wherever
/// <v_i, v_j> > tol (exactly > 0 for rationals).
template <FrameScalar T>
OrthogonalPartition smallest_orthogonal_partition(const std::vector<ScalingVector<T>>& scalings, std::vector<std::size_t> subset,
                                                  double tol = kDefaultTolerance) {
  if (scalings.empty()) throw Error(ErrorCode::EmptySubset, "no scalings to partition");
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  for (auto i : subset)
    if (i >= scalings.size()) throw Error(ErrorCode::DimensionMismatch, "scaling index out of range");

  std::vector<std::size_t> parent(subset.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < subset.size(); ++a) {
    for (std::size_t b = a + 1; b < subset.size(); ++b) {
      const T ip = dot<T>(scalings[subset[a]].weights(), scalings[subset[b]].weights());
      if (is_positive<T>(ip, tol)) {
        const auto ra = find(a);
        const auto rb = find(b);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
      }
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t a = 0; a < subset.size(); ++a) groups[find(a)].push_back(subset[a]);
  OrthogonalPartition out;
  out.covered = subset;
  for (auto& [root, members] : groups) out.blocks.push_back(std::move(members));
  std::sort(out.blocks.begin(), out.blocks.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return out;
}

template <FrameScalar T>
struct RelativeInteriorResult {
  bool intersect = false;
  std::vector<T> point;  // a common relative-interior point when intersect
};

/// LP: maximize t subject to sum_{J1} alpha_j v_j = sum_{J2} beta_j v_j,
/// sum alpha = sum beta = 1, alpha_j >= t, beta_j >= t. The relative interiors
/// of the two hulls meet iff the optimum has t > 0.
template <FrameScalar T>
RelativeInteriorResult<T> relative_interiors_intersect(const std::vector<ScalingVector<T>>& scalings,
                                                       const std::vector<std::size_t>& first,
                                                       const std::vector<std::size_t>& second, double tol = kDefaultTolerance) {
  if (first.empty() || second.empty()) throw Error(ErrorCode::EmptySubset, "both subfamilies must be nonempty");
  for (auto i : first) {
    if (i >= scalings.size()) throw Error(ErrorCode::DimensionMismatch, "scaling index out of range");
    if (std::find(second.begin(), second.end(), i) != second.end()) throw Error(ErrorCode::NotDisjoint, "subfamilies overlap");
  }
  for (auto i : second)
    if (i >= scalings.size()) throw Error(ErrorCode::DimensionMismatch, "scaling index out of range");

  const std::size_t k = scalings[first.front()].size();
  const std::size_t p = first.size();
  const std::size_t q = second.size();
  const std::size_t t_col = p + q;
  LinearProgram<T> lp;
  lp.constraints = Matrix<T>(k + 2, p + q + 1);
  lp.rhs.assign(k + 2, T(0));
  lp.objective.assign(p + q + 1, T(0));
  lp.objective[t_col] = T(1);
  lp.nonnegative.assign(p + q + 1, true);
  for (std::size_t i = 0; i < k; ++i) {
    T t_coeff(0);
    for (std::size_t a = 0; a < p; ++a) {
      lp.constraints(i, a) = scalings[first[a]][i];
      t_coeff += scalings[first[a]][i];
    }
    for (std::size_t b = 0; b < q; ++b) {
      lp.constraints(i, p + b) = -scalings[second[b]][i];
      t_coeff -= scalings[second[b]][i];
    }
    lp.constraints(i, t_col) = t_coeff;
  }
  for (std::size_t a = 0; a < p; ++a) lp.constraints(k, a) = T(1);
  lp.constraints(k, t_col) = T(static_cast<long>(p));
  lp.rhs[k] = T(1);
  for (std::size_t b = 0; b < q; ++b) lp.constraints(k + 1, p + b) = T(1);
  lp.constraints(k + 1, t_col) = T(static_cast<long>(q));
  lp.rhs[k + 1] = T(1);

  const auto result = lp_solve(lp, tol);
  RelativeInteriorResult<T> out;
  if (result.status != LPStatus::Optimal || !is_positive<T>(result.solution[t_col], tol)) return out;
  out.intersect = true;
  out.point.assign(k, T(0));
  const T& t = result.solution[t_col];
  for (std::size_t a = 0; a < p; ++a) {
    const T alpha = result.solution[a] + t;
    for (std::size_t i = 0; i < k; ++i) out.point[i] += alpha * scalings[first[a]][i];
  }
  return out;
}

struct SubfamilyPair {
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
};

template <FrameScalar T>
struct AffineDependenceReport {
  bool dependent = false;
  std::optional<std::size_t> condition2_witness;  // i with supp(v_i) inside the union of the other supports
  std::optional<SubfamilyPair> condition3_witness;  // disjoint subfamilies whose relative interiors meet
  std::vector<T> condition3_point;
  std::optional<SubfamilyPair> condition4_witness;  // disjoint subfamilies with equal support unions
  bool witness_search_skipped = false;
};

namespace detail {

inline std::vector<std::size_t> mask_elements(std::uint64_t mask) { return IndexSet(mask).elements(); }

}  // namespace detail

/// Rank test for affine dependence of the scalings as points, plus the
/// three combinatorial/LP witnesses. Witness searches over subfamilies are
/// exponential and skipped above `max_witness_vertices`.
template <FrameScalar T>
AffineDependenceReport<T> affine_dependence_report(const std::vector<ScalingVector<T>>& scalings, double tol = kDefaultTolerance,
                                                   std::size_t max_witness_vertices = kWitnessMaxVertices) {
  const std::size_t m = scalings.size();
  if (m == 0) throw Error(ErrorCode::EmptySubset, "no scalings");
  const std::size_t k = scalings.front().size();
  AffineDependenceReport<T> report;

  Matrix<T> lifted(m, k + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) lifted(i, j) = scalings[i][j];
    lifted(i, k) = T(1);
  }
  report.dependent = rank(lifted, tol) < m;

  for (std::size_t i = 0; i < m && !report.condition2_witness; ++i) {
    IndexSet others;
    for (std::size_t j = 0; j < m; ++j)
      if (j != i) others |= scalings[j].support();
    if (scalings[i].support().is_subset_of(others)) report.condition2_witness = i;
  }

  if (m > max_witness_vertices || m >= 63) {
    report.witness_search_skipped = true;
    return report;
  }
  const std::uint64_t full = (std::uint64_t{1} << m) - 1;

  // condition 4: group subfamilies by support union; any two disjoint
  // members of a group form a witness
  std::map<std::uint64_t, std::vector<std::uint64_t>> by_union;
  for (std::uint64_t mask = 1; mask <= full && !report.condition4_witness; ++mask) {
    IndexSet u;
    for (auto i : detail::mask_elements(mask)) u |= scalings[i].support();
    auto& group = by_union[u.bits()];
    for (auto other : group) {
      if ((other & mask) == 0) {
        report.condition4_witness = SubfamilyPair{detail::mask_elements(other), detail::mask_elements(mask)};
        break;
      }
    }
    group.push_back(mask);
  }

  // condition 3: disjoint pairs ordered by total size; J1 holds the least index
  std::vector<std::vector<std::uint64_t>> by_size(m + 1);
  for (std::uint64_t mask = 1; mask <= full; ++mask) by_size[IndexSet(mask).size()].push_back(mask);
  for (std::size_t s = 2; s <= m && !report.condition3_witness; ++s) {
    for (auto u : by_size[s]) {
      const std::uint64_t low = u & (~u + 1);
      const std::uint64_t rest = u & ~low;
      // J1 = low | sub for every sub of rest with rest \ sub nonempty
      bool found = false;
      for (std::uint64_t sub = 0;; sub = (sub - rest) & rest) {
        const std::uint64_t second = rest & ~sub;
        if (second != 0) {
          const auto j1 = detail::mask_elements(low | sub);
          const auto j2 = detail::mask_elements(second);
          auto r = relative_interiors_intersect(scalings, j1, j2, tol);
          if (r.intersect) {
            report.condition3_witness = SubfamilyPair{j1, j2};
            report.condition3_point = std::move(r.point);
            found = true;
            break;
          }
        }
        if (sub == rest) break;
      }
      if (found) break;
    }
  }
  return report;
}

template <FrameScalar T>
AffineDependenceReport<T> affine_dependence_report(const MinimalScalingSet<T>& scalings, double tol = kDefaultTolerance,
                                                   std::size_t max_witness_vertices = kWitnessMaxVertices) {
  return affine_dependence_report(scalings.vertices, tol, max_witness_vertices);
}

/// Whether target = sum alpha_i v_i for some alpha with sum alpha = 1 (no sign constraint).
template <FrameScalar T>
bool affine_hull_member(const std::vector<ScalingVector<T>>& scalings, const ScalingVector<T>& target,
                        double tol = kDefaultTolerance) {
  if (scalings.empty()) throw Error(ErrorCode::EmptySubset, "no scalings");
  const std::size_t k = target.size();
  Matrix<T> a(k + 1, scalings.size());
  std::vector<T> b(k + 1, T(0));
  for (std::size_t j = 0; j < scalings.size(); ++j) {
    if (scalings[j].size() != k) throw Error(ErrorCode::DimensionMismatch, "scaling lengths differ");
    for (std::size_t i = 0; i < k; ++i) a(i, j) = scalings[j][i];
    a(k, j) = T(1);
  }
  for (std::size_t i = 0; i < k; ++i) b[i] = target[i];
  b[k] = T(1);
  return solve_linear<T>(a, b, tol).status != SolveStatus::Infeasible;
}

/// Supporting-hyperplane test: is conv{v_j : j in J} a face? Solved as
/// maximize s  s.t.  <a, v_j> = b (j in J), <a, v_i> + s <= b (i not in J), s <= 1;
/// a face iff the optimal margin s is positive (> tol in float mode).
template <FrameScalar T>
bool is_face_subset(const std::vector<ScalingVector<T>>& vertices, const std::vector<std::size_t>& subset,
                    double tol = kDefaultTolerance) {
  const std::size_t m = vertices.size();
  if (subset.empty()) throw Error(ErrorCode::EmptySubset, "face candidate is empty");
  std::vector<bool> in(m, false);
  for (auto j : subset) {
    if (j >= m) throw Error(ErrorCode::DimensionMismatch, "vertex index out of range");
    in[j] = true;
  }
  const std::size_t outside = static_cast<std::size_t>(std::count(in.begin(), in.end(), false));
  if (outside == 0) throw Error(ErrorCode::DimensionMismatch, "face candidate must be a proper subset");

  const std::size_t k = vertices.front().size();
  // columns: a (k, free), b (free), s, one slack per outside vertex, slack for s <= 1
  const std::size_t b_col = k;
  const std::size_t s_col = k + 1;
  const std::size_t slack0 = k + 2;
  const std::size_t cols = slack0 + outside + 1;
  LinearProgram<T> lp;
  lp.constraints = Matrix<T>(m + 1, cols);
  lp.rhs.assign(m + 1, T(0));
  lp.objective.assign(cols, T(0));
  lp.objective[s_col] = T(1);
  lp.nonnegative.assign(cols, true);
  for (std::size_t l = 0; l <= k; ++l) lp.nonnegative[l] = false;

  std::size_t slack = slack0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t l = 0; l < k; ++l) lp.constraints(i, l) = vertices[i][l];
    lp.constraints(i, b_col) = T(-1);
    if (!in[i]) {
      lp.constraints(i, s_col) = T(1);
      lp.constraints(i, slack++) = T(1);
    }
  }
  lp.constraints(m, s_col) = T(1);
  lp.constraints(m, cols - 1) = T(1);
  lp.rhs[m] = T(1);

  const auto result = lp_solve(lp, tol);
  return result.status == LPStatus::Optimal && is_positive<T>(result.solution[s_col], tol);
}

template <FrameScalar T>
void require_scaling(const Frame<T>& frame, const ScalingVector<T>& c) {
  if (c.size() != frame.size()) throw Error(ErrorCode::DimensionMismatch, "scaling length differs from k");
  if (!is_parseval<T>(frame, c.weights())) throw Error(ErrorCode::NotAScaling, "weights do not make a Parseval frame");
}

/// Prime iff the scaled frame has no proper tight subframe, i.e. EC(cF) = {supp(c)}.
template <FrameScalar T>
bool is_prime_scaling(const Frame<T>& frame, const ScalingVector<T>& c, std::size_t max_k = kPosetMaxVectors) {
  require_scaling(frame, c);
  const auto ec = empty_cover(factor_poset(frame, std::optional<ScalingVector<T>>(c), max_k));
  return ec.members.size() == 1 && ec.members.front() == c.support();
}

template <FrameScalar T>
struct DecompositionBlock {
  IndexSet support;                  // E_j, a member of EC(cF)
  T lambda = T(0);                   // rescales c on E_j to a Parseval subframe: n / sum_{E_j} c
  std::vector<std::size_t> vertices;  // indices into the minimal-scaling set
  std::vector<T> coefficients;        // weight of each vertex in c (convex weight / lambda)
};

template <FrameScalar T>
struct OrthogonalDecomposition {
  std::vector<DecompositionBlock<T>> blocks;
  bool unique = false;  // EC(cF) pairwise disjoint
};

namespace detail {

template <FrameScalar T>
DecompositionBlock<T> decompose_block(const Frame<T>& frame, const ScalingVector<T>& c, const MinimalScalingSet<T>& vertices,
                                      IndexSet block) {
  const double tol = frame.tol();
  DecompositionBlock<T> out;
  out.support = block;
  T mass(0);
  for (auto i : block.elements()) mass += c[i];
  out.lambda = T(static_cast<long>(frame.dimension())) / mass;

  std::vector<T> rescaled(c.size(), T(0));
  for (auto i : block.elements()) rescaled[i] = out.lambda * c[i];
  std::vector<std::size_t> candidates;
  std::vector<ScalingVector<T>> inside;
  for (std::size_t j = 0; j < vertices.size(); ++j) {
    if (vertices[j].support().is_subset_of(block)) {
      candidates.push_back(j);
      inside.push_back(vertices[j]);
    }
  }
  if (inside.empty()) throw Error(ErrorCode::CoverNotFound, "no minimal scaling is supported inside " + block.to_string());
  const auto alpha = convex_decompose(ScalingVector<T>(rescaled, tol), inside, tol);
  for (std::size_t a = 0; a < alpha.size(); ++a) {
    if (!is_positive<T>(alpha[a], tol)) continue;
    out.vertices.push_back(candidates[a]);
    out.coefficients.push_back(alpha[a] / out.lambda);
  }
  return out;
}

}  // namespace detail

/// supp(c) = E_1 u ... u E_a with E_j in EC(cF), chosen greedily (smallest
/// member first, lexicographic ties); each block rescaled to a Parseval
/// subframe and decomposed over the minimal scalings supported inside it.
template <FrameScalar T>
OrthogonalDecomposition<T> orthogonal_decompose_scaling(const Frame<T>& frame, const ScalingVector<T>& c,
                                                        const MinimalScalingSet<T>& vertices,
                                                        std::size_t max_k = kPosetMaxVectors) {
  require_scaling(frame, c);
  const auto ec = empty_cover(factor_poset(frame, std::optional<ScalingVector<T>>(c), max_k));
  OrthogonalDecomposition<T> out;
  out.unique = ec_pairwise_disjoint(ec);
  IndexSet remaining = c.support();
  while (!remaining.empty()) {
    auto it = std::find_if(ec.members.begin(), ec.members.end(), [&](IndexSet e) { return e.is_subset_of(remaining); });
    if (it == ec.members.end()) throw Error(ErrorCode::CoverNotFound, "no empty-cover member fits " + remaining.to_string());
    out.blocks.push_back(detail::decompose_block(frame, c, vertices, *it));
    remaining = remaining - *it;
  }
  if (out.unique) {
    std::vector<std::size_t> used;
    for (const auto& b : out.blocks) used.insert(used.end(), b.vertices.begin(), b.vertices.end());
    const auto partition = smallest_orthogonal_partition(vertices.vertices, used, frame.tol());
    if (partition.blocks.size() != out.blocks.size())
      throw Error(ErrorCode::Internal, "decomposition blocks differ from the smallest orthogonal partition");
  }
  return out;
}

/// Every partition of supp(c) into disjoint empty-cover members, each giving
/// an orthogonal decomposition. Ordered by the lexicographic sequence of blocks.
template <FrameScalar T>
std::vector<OrthogonalDecomposition<T>> all_orthogonal_decompositions(const Frame<T>& frame, const ScalingVector<T>& c,
                                                                      const MinimalScalingSet<T>& vertices,
                                                                      std::size_t max_k = kPosetMaxVectors) {
  require_scaling(frame, c);
  const auto ec = empty_cover(factor_poset(frame, std::optional<ScalingVector<T>>(c), max_k));
  const bool unique = ec_pairwise_disjoint(ec);
  std::vector<std::vector<IndexSet>> covers;
  std::vector<IndexSet> chosen;
  auto visit = [&](auto&& self, IndexSet remaining) -> void {
    if (remaining.empty()) {
      covers.push_back(chosen);
      return;
    }
    const std::size_t lowest = remaining.front();
    for (auto e : ec.members) {
      if (!e.contains(lowest) || !e.is_subset_of(remaining)) continue;
      chosen.push_back(e);
      self(self, remaining - e);
      chosen.pop_back();
    }
  };
  visit(visit, c.support());

  std::vector<OrthogonalDecomposition<T>> out;
  for (const auto& cover : covers) {
    OrthogonalDecomposition<T> d;
    d.unique = unique;
    for (auto e : cover) d.blocks.push_back(detail::decompose_block(frame, c, vertices, e));
    out.push_back(std::move(d));
  }
  return out;
}

template <FrameScalar T>
struct StrictScalingReport {
  bool strict = false;
  EmptyCover ec;
  std::optional<bool> coefficients_all_positive;  // set when the positivity claim applies
  std::vector<T> coefficients;
};

/// Strictness, EC(cF), and (for strict c over affinely independent minimal
/// scalings whose supports cover {1..k}) whether the convex coefficients of
/// c are all positive.
template <FrameScalar T>
StrictScalingReport<T> strict_scaling_report(const Frame<T>& frame, const ScalingVector<T>& c, const MinimalScalingSet<T>& vertices,
                                             std::size_t max_k = kPosetMaxVectors) {
  require_scaling(frame, c);
  const IndexSet all = IndexSet::range(frame.size());
  StrictScalingReport<T> out;
  out.strict = c.support() == all;
  out.ec = empty_cover(factor_poset(frame, std::optional<ScalingVector<T>>(c), max_k));
  if (!out.strict || vertices.empty()) return out;
  IndexSet covered;
  for (const auto& v : vertices) covered |= v.support();
  const auto dep = affine_dependence_report(vertices.vertices, frame.tol(), 0);
  if (dep.dependent || covered != all) return out;
  out.coefficients = convex_decompose(c, vertices, frame.tol());
  out.coefficients_all_positive = std::all_of(out.coefficients.begin(), out.coefficients.end(),
                                              [&](const T& a) { return is_positive<T>(a, frame.tol()); });
  return out;
}

}  // namespace framescale
