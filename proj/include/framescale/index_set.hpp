#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "framescale/error.hpp"

namespace framescale {

/// A subset of {0, ..., 63}, stored as a bitmask. Frame indices are 0-based
/// internally; reports convert to 1-based labels.
class IndexSet {
 public:
  static constexpr std::size_t kMaxElements = 64;

  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}
  IndexSet(std::initializer_list<std::size_t> elements) {
    for (auto e : elements) insert(e);
  }

  static IndexSet from_elements(const std::vector<std::size_t>& elements) {
    IndexSet s;
    for (auto e : elements) s.insert(e);
    return s;
  }

  /// {0, ..., count-1}
  static IndexSet range(std::size_t count) {
    if (count > kMaxElements) throw Error(ErrorCode::TooLarge, "index set holds at most 64 elements");
    return IndexSet(count == kMaxElements ? ~std::uint64_t{0} : ((std::uint64_t{1} << count) - 1));
  }

  void insert(std::size_t e) {
    if (e >= kMaxElements) throw Error(ErrorCode::TooLarge, "index " + std::to_string(e) + " exceeds 63");
    bits_ |= std::uint64_t{1} << e;
  }
  void erase(std::size_t e) {
    if (e < kMaxElements) bits_ &= ~(std::uint64_t{1} << e);
  }

  [[nodiscard]] constexpr bool contains(std::size_t e) const {
    return e < kMaxElements && ((bits_ >> e) & 1U) != 0;
  }
  [[nodiscard]] constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
  [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }

  [[nodiscard]] constexpr bool is_subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }
  [[nodiscard]] constexpr bool is_proper_subset_of(IndexSet other) const {
    return is_subset_of(other) && bits_ != other.bits_;
  }
  [[nodiscard]] constexpr bool disjoint(IndexSet other) const { return (bits_ & other.bits_) == 0; }

  [[nodiscard]] std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

  /// Smallest element; undefined on the empty set.
  [[nodiscard]] std::size_t front() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return IndexSet(a.bits_ | b.bits_); }
  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & b.bits_); }
  friend constexpr IndexSet operator-(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & ~b.bits_); }
  IndexSet& operator|=(IndexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  friend constexpr bool operator==(IndexSet, IndexSet) = default;

  /// Lexicographic order on the sorted element lists ({0,1} < {0,2} < {1}).
  [[nodiscard]] bool lex_less(IndexSet other) const {
    std::uint64_t a = bits_;
    std::uint64_t b = other.bits_;
    while (a != 0 && b != 0) {
      const int ea = std::countr_zero(a);
      const int eb = std::countr_zero(b);
      if (ea != eb) return ea < eb;
      a &= a - 1;
      b &= b - 1;
    }
    return a == 0 && b != 0;
  }

  /// "{1,2,4}" using 1-based labels.
  [[nodiscard]] std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (auto e : elements()) {
      if (!first) s += ",";
      s += std::to_string(e + 1);
      first = false;
    }
    return s + "}";
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Order used for poset listings: by cardinality, then lexicographically.
struct BySizeThenLex {
  bool operator()(IndexSet a, IndexSet b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.lex_less(b);
  }
};

}  // namespace framescale
