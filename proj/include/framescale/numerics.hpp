#pragma once

// Dense linear algebra over double (tolerance mode) and GMP rationals (exact
// mode): row reduction, rank, nullspace, linear solves, PSD tests and a
// two-phase simplex with Bland's rule.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>

#include "framescale/error.hpp"

namespace framescale {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

inline constexpr double kDefaultTolerance = 1e-9;

struct ScalarMode {
  enum class Kind { ExactRational, Float };

  Kind kind = Kind::Float;
  double tol = kDefaultTolerance;

  static ScalarMode exact() { return {Kind::ExactRational, 0.0}; }
  static ScalarMode floating(double tol = kDefaultTolerance) {
    if (!(tol > 0.0) || !std::isfinite(tol)) throw Error(ErrorCode::Schema, "tolerance must be positive");
    return {Kind::Float, tol};
  }

  [[nodiscard]] bool is_exact() const { return kind == Kind::ExactRational; }
};

template <class T>
concept FrameScalar = std::same_as<T, double> || std::same_as<T, Rational>;

template <FrameScalar T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static double abs(double x) { return std::fabs(x); }
  static double to_double(double x) { return x; }
  static ScalarMode mode(double tol) { return ScalarMode::floating(tol); }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static Rational abs(const Rational& x) { return boost::multiprecision::abs(x); }
  static double to_double(const Rational& x) { return x.convert_to<double>(); }
  static ScalarMode mode(double) { return ScalarMode::exact(); }
};

/// Exact zero for rationals; |x| <= threshold for doubles.
template <FrameScalar T>
bool is_zero(const T& x, double threshold) {
  if constexpr (ScalarTraits<T>::exact) {
    return x == 0;
  } else {
    return std::fabs(x) <= threshold;
  }
}

/// Exact sign test for rationals; x > threshold for doubles.
template <FrameScalar T>
bool is_positive(const T& x, double threshold) {
  if constexpr (ScalarTraits<T>::exact) {
    return x > 0;
  } else {
    return x > threshold;
  }
}

template <FrameScalar T>
double to_double(const T& x) {
  return ScalarTraits<T>::to_double(x);
}

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T(0)) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  [[nodiscard]] std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  [[nodiscard]] std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  [[nodiscard]] Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  /// Columns listed in `columns`, in that order.
  [[nodiscard]] Matrix select_columns(std::span<const std::size_t> columns) const {
    Matrix out(rows_, columns.size());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t j = 0; j < columns.size(); ++j) out(r, j) = (*this)(r, columns[j]);
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
std::vector<T> multiply(const Matrix<T>& m, std::span<const T> x) {
  if (x.size() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector size mismatch");
  std::vector<T> y(m.rows(), T(0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) y[r] += m(r, c) * x[c];
  return y;
}

template <class T>
T dot(std::span<const T> a, std::span<const T> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot product size mismatch");
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <FrameScalar T>
double max_abs_entry(const Matrix<T>& m) {
  double best = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& x : m.row(r)) best = std::max(best, std::fabs(to_double(x)));
  return best;
}

inline Matrix<double> to_double(const Matrix<Rational>& m) {
  Matrix<double> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).convert_to<double>();
  return out;
}

template <FrameScalar T>
struct Echelon {
  Matrix<T> reduced;  // reduced row echelon form; rows past the rank are zero
  std::vector<std::size_t> pivot_columns;

  [[nodiscard]] std::size_t rank() const { return pivot_columns.size(); }
};

/// Gauss-Jordan elimination. In float mode a pivot is accepted iff its
/// magnitude exceeds tol * (largest absolute entry of the input).
template <FrameScalar T>
Echelon<T> row_reduce(Matrix<T> m, double tol = kDefaultTolerance) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  double threshold = 0.0;
  if constexpr (!ScalarTraits<T>::exact) threshold = tol * max_abs_entry(m);

  Echelon<T> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    if constexpr (ScalarTraits<T>::exact) {
      for (std::size_t i = r; i < rows; ++i) {
        if (m(i, c) != 0) {
          pivot = i;
          break;
        }
      }
    } else {
      double best = threshold;
      for (std::size_t i = r; i < rows; ++i) {
        if (std::fabs(m(i, c)) > best) {
          best = std::fabs(m(i, c));
          pivot = i;
        }
      }
    }
    if (pivot == rows) {
      if constexpr (!ScalarTraits<T>::exact) {
        for (std::size_t i = r; i < rows; ++i) m(i, c) = 0.0;
      }
      continue;
    }
    m.swap_rows(r, pivot);
    const T inv = T(1) / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    m(r, c) = T(1);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const T factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= factor * m(r, j);
      m(i, c) = T(0);
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

/// Rank of a rational matrix by fraction-free (Bareiss) elimination on the
/// integer matrix obtained by clearing each row's denominators.
inline std::size_t bareiss_rank(const Matrix<Rational>& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<BigInt> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    BigInt lcm = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      const BigInt d = boost::multiprecision::denominator(m(r, c));
      lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    }
    for (std::size_t c = 0; c < cols; ++c) {
      a[r * cols + c] = boost::multiprecision::numerator(m(r, c)) * (lcm / boost::multiprecision::denominator(m(r, c)));
    }
  }
  auto at = [&](std::size_t r, std::size_t c) -> BigInt& { return a[r * cols + c]; };

  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (at(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(r, j), at(pivot, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) at(i, j) = (at(r, c) * at(i, j) - at(i, c) * at(r, j)) / prev;
      at(i, c) = 0;
    }
    prev = at(r, c);
    ++r;
  }
  return r;
}

template <FrameScalar T>
std::size_t rank(const Matrix<T>& m, double tol = kDefaultTolerance) {
  if (m.empty()) throw Error(ErrorCode::EmptyMatrix, "rank of an empty matrix");
  if constexpr (ScalarTraits<T>::exact) {
    return bareiss_rank(m);
  } else {
    return row_reduce(m, tol).rank();
  }
}

/// Basis of {x : Mx = 0}, one vector per free column of the echelon form.
template <FrameScalar T>
std::vector<std::vector<T>> nullspace_basis(const Matrix<T>& m, double tol = kDefaultTolerance) {
  if (m.empty()) throw Error(ErrorCode::EmptyMatrix, "nullspace of an empty matrix");
  const auto echelon = row_reduce(m, tol);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : echelon.pivot_columns) is_pivot[c] = true;

  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(cols, T(0));
    v[free] = T(1);
    for (std::size_t i = 0; i < echelon.pivot_columns.size(); ++i) v[echelon.pivot_columns[i]] = -echelon.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

enum class SolveStatus { Unique, Infeasible, Underdetermined };

template <FrameScalar T>
struct LinearSolution {
  SolveStatus status = SolveStatus::Infeasible;
  std::vector<T> solution;  // a particular solution unless Infeasible
  std::size_t rank = 0;     // rank of the coefficient matrix
};

template <FrameScalar T>
LinearSolution<T> solve_linear(const Matrix<T>& a, std::span<const T> b, double tol = kDefaultTolerance) {
  if (b.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length mismatch");
  const std::size_t cols = a.cols();
  Matrix<T> aug(a.rows(), cols + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) aug(r, c) = a(r, c);
    aug(r, cols) = b[r];
  }
  const auto echelon = row_reduce(std::move(aug), tol);

  LinearSolution<T> out;
  bool inconsistent = false;
  for (auto c : echelon.pivot_columns) {
    if (c == cols) inconsistent = true;
    else ++out.rank;
  }
  if (inconsistent) {
    out.status = SolveStatus::Infeasible;
    return out;
  }
  out.solution.assign(cols, T(0));
  for (std::size_t i = 0; i < echelon.pivot_columns.size(); ++i)
    out.solution[echelon.pivot_columns[i]] = echelon.reduced(i, cols);
  out.status = out.rank == cols ? SolveStatus::Unique : SolveStatus::Underdetermined;
  return out;
}

inline std::vector<double> symmetric_eigenvalues(const Matrix<double>& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "eigenvalues of a non-square matrix");
  Eigen::MatrixXd e(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) e(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(e, Eigen::EigenvaluesOnly);
  const auto& vals = solver.eigenvalues();
  return {vals.data(), vals.data() + vals.size()};
}

template <FrameScalar T>
bool is_symmetric(const Matrix<T>& m, double tol = 0.0) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = r + 1; c < m.cols(); ++c)
      if (!is_zero<T>(m(r, c) - m(c, r), tol)) return false;
  return true;
}

/// Exact PSD test by symmetric elimination with positive diagonal pivots: a
/// PSD matrix with a zero diagonal entry has a zero row there.
inline bool is_positive_semidefinite(Matrix<Rational> a) {
  if (!is_symmetric(a)) return false;
  const std::size_t n = a.rows();
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      if (a(i, i) < 0) return false;
      if (pivot == n && a(i, i) > 0) pivot = i;
    }
    if (pivot == n) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && a(i, j) != 0) return false;
      return true;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || i == pivot) continue;
      const Rational factor = a(i, pivot) / a(pivot, pivot);
      for (std::size_t j = 0; j < n; ++j) {
        if (done[j] || j == pivot) continue;
        a(i, j) -= factor * a(pivot, j);
      }
    }
    done[pivot] = true;
  }
  return true;
}

/// Float PSD test: symmetric within tol and smallest eigenvalue >= -tol * max(1, max|a_ij|).
inline bool is_positive_semidefinite(const Matrix<double>& a, double tol) {
  if (!is_symmetric(a, tol)) return false;
  const auto eig = symmetric_eigenvalues(a);
  return eig.empty() || eig.front() >= -tol * std::max(1.0, max_abs_entry(a));
}

// ---------------------------------------------------------------------------
// Linear programming

enum class LPStatus { Optimal, Infeasible, Unbounded };
enum class Sense { Maximize, Minimize };

/// optimize objective . x  subject to  A x = b, x_j >= 0 where nonnegative[j].
template <FrameScalar T>
struct LinearProgram {
  std::vector<T> objective;
  Matrix<T> constraints;
  std::vector<T> rhs;
  std::vector<bool> nonnegative;
  Sense sense = Sense::Maximize;

  /// Feasibility problem over x >= 0 with a zero objective.
  static LinearProgram feasibility(Matrix<T> a, std::vector<T> b) {
    LinearProgram p;
    p.objective.assign(a.cols(), T(0));
    p.nonnegative.assign(a.cols(), true);
    p.constraints = std::move(a);
    p.rhs = std::move(b);
    return p;
  }
};

template <FrameScalar T>
struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  std::vector<T> solution;
  T objective_value = T(0);
  std::size_t pivots = 0;
};

namespace detail {

template <FrameScalar T>
class SimplexTableau {
 public:
  SimplexTableau(std::size_t rows, std::size_t cols, double eps) : tab_(rows, cols + 1), basis_(rows), eps_(eps) {}

  Matrix<T>& tableau() { return tab_; }
  std::vector<std::size_t>& basis() { return basis_; }
  [[nodiscard]] std::size_t pivots() const { return pivots_; }
  [[nodiscard]] std::size_t rhs_column() const { return tab_.cols() - 1; }

  void pivot(std::size_t row, std::size_t col) {
    const std::size_t width = tab_.cols();
    const T inv = T(1) / tab_(row, col);
    for (std::size_t j = 0; j < width; ++j) tab_(row, j) *= inv;
    tab_(row, col) = T(1);
    for (std::size_t i = 0; i < tab_.rows(); ++i) {
      if (i == row || tab_(i, col) == 0) continue;
      const T factor = tab_(i, col);
      for (std::size_t j = 0; j < width; ++j) tab_(i, j) -= factor * tab_(row, j);
      tab_(i, col) = T(0);
    }
    basis_[row] = col;
    ++pivots_;
  }

  /// Maximizes cost . x over the current basis using Bland's rule: the
  /// entering column is the lowest-index improving column and ties in the
  /// ratio test go to the lowest basic variable index. Returns false when
  /// the problem is unbounded.
  bool maximize(const std::vector<T>& cost, const std::vector<bool>& allowed) {
    const std::size_t width = tab_.cols() - 1;
    for (;;) {
      if (pivots_ > kPivotCap) throw Error(ErrorCode::Internal, "simplex pivot cap exceeded");
      std::size_t entering = width;
      for (std::size_t j = 0; j < width && entering == width; ++j) {
        if (!allowed[j] || is_basic(j)) continue;
        T reduced = cost[j];
        for (std::size_t i = 0; i < tab_.rows(); ++i) {
          if (tab_(i, j) != 0) reduced -= cost[basis_[i]] * tab_(i, j);
        }
        if (is_positive<T>(reduced, eps_)) entering = j;
      }
      if (entering == width) return true;

      std::size_t leaving = tab_.rows();
      T best_ratio(0);
      for (std::size_t i = 0; i < tab_.rows(); ++i) {
        if (!is_positive<T>(tab_(i, entering), eps_)) continue;
        const T ratio = tab_(i, rhs_column()) / tab_(i, entering);
        if (leaving == tab_.rows() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving == tab_.rows()) return false;
      pivot(leaving, entering);
    }
  }

  void drop_row(std::size_t row) {
    Matrix<T> smaller(tab_.rows() - 1, tab_.cols());
    for (std::size_t i = 0, k = 0; i < tab_.rows(); ++i) {
      if (i == row) continue;
      for (std::size_t j = 0; j < tab_.cols(); ++j) smaller(k, j) = tab_(i, j);
      ++k;
    }
    tab_ = std::move(smaller);
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(row));
  }

  [[nodiscard]] bool is_basic(std::size_t col) const {
    return std::find(basis_.begin(), basis_.end(), col) != basis_.end();
  }

 private:
  static constexpr std::size_t kPivotCap = 1'000'000;
  Matrix<T> tab_;
  std::vector<std::size_t> basis_;
  std::size_t pivots_ = 0;
  double eps_;
};

}  // namespace detail

/// Two-phase dense simplex with Bland's anti-cycling rule. Free variables are
/// split into positive and negative parts.
template <FrameScalar T>
LPResult<T> lp_solve(const LinearProgram<T>& program, double tol = kDefaultTolerance) {
  const std::size_t vars = program.objective.size();
  const std::size_t m = program.constraints.rows();
  if (program.constraints.cols() != vars || program.nonnegative.size() != vars || program.rhs.size() != m)
    throw Error(ErrorCode::DimensionMismatch, "malformed linear program");

  // column layout: one column per nonnegative variable, two per free variable
  std::vector<std::size_t> first_column(vars);
  std::size_t structural = 0;
  for (std::size_t j = 0; j < vars; ++j) {
    first_column[j] = structural;
    structural += program.nonnegative[j] ? 1 : 2;
  }
  const std::size_t width = structural + m;
  const double eps = ScalarTraits<T>::exact ? 0.0 : tol;

  detail::SimplexTableau<T> simplex(m, width, eps);
  auto& tab = simplex.tableau();
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = program.rhs[i] < 0;
    for (std::size_t j = 0; j < vars; ++j) {
      const T a = flip ? T(-program.constraints(i, j)) : program.constraints(i, j);
      tab(i, first_column[j]) = a;
      if (!program.nonnegative[j]) tab(i, first_column[j] + 1) = -a;
    }
    tab(i, structural + i) = T(1);
    tab(i, width) = flip ? T(-program.rhs[i]) : program.rhs[i];
    simplex.basis()[i] = structural + i;
  }

  // phase 1: maximize -(sum of artificials)
  std::vector<T> phase1_cost(width, T(0));
  for (std::size_t i = 0; i < m; ++i) phase1_cost[structural + i] = T(-1);
  std::vector<bool> all_columns(width, true);
  simplex.maximize(phase1_cost, all_columns);

  T infeasibility(0);
  for (std::size_t i = 0; i < tab.rows(); ++i)
    if (simplex.basis()[i] >= structural) infeasibility += tab(i, width);
  double feasibility_scale = 1.0;
  if constexpr (!ScalarTraits<T>::exact) {
    for (const auto& b : program.rhs) feasibility_scale = std::max(feasibility_scale, std::fabs(b));
  }
  LPResult<T> result;
  if (!is_zero<T>(infeasibility, tol * feasibility_scale)) {
    result.status = LPStatus::Infeasible;
    result.pivots = simplex.pivots();
    return result;
  }

  // drive remaining artificials out of the basis; rows with no structural
  // entry are redundant
  for (std::size_t i = 0; i < tab.rows();) {
    if (simplex.basis()[i] < structural) {
      ++i;
      continue;
    }
    std::size_t col = structural;
    for (std::size_t j = 0; j < structural; ++j) {
      if (!is_zero<T>(tab(i, j), eps) && !simplex.is_basic(j)) {
        col = j;
        break;
      }
    }
    if (col == structural) {
      simplex.drop_row(i);
    } else {
      simplex.pivot(i, col);
      ++i;
    }
  }

  std::vector<T> cost(width, T(0));
  for (std::size_t j = 0; j < vars; ++j) {
    const T c = program.sense == Sense::Maximize ? program.objective[j] : T(-program.objective[j]);
    cost[first_column[j]] = c;
    if (!program.nonnegative[j]) cost[first_column[j] + 1] = -c;
  }
  std::vector<bool> structural_only(width, false);
  std::fill(structural_only.begin(), structural_only.begin() + static_cast<std::ptrdiff_t>(structural), true);

  const bool bounded = simplex.maximize(cost, structural_only);
  result.pivots = simplex.pivots();
  if (!bounded) {
    result.status = LPStatus::Unbounded;
    return result;
  }

  std::vector<T> columns(width, T(0));
  for (std::size_t i = 0; i < tab.rows(); ++i) columns[simplex.basis()[i]] = tab(i, width);
  result.solution.assign(vars, T(0));
  for (std::size_t j = 0; j < vars; ++j) {
    result.solution[j] = columns[first_column[j]];
    if (!program.nonnegative[j]) result.solution[j] -= columns[first_column[j] + 1];
    result.objective_value += program.objective[j] * result.solution[j];
  }
  result.status = LPStatus::Optimal;
  return result;
}

}  // namespace framescale
