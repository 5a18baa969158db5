#pragma once

// File formats: frame files, scaling files, minimal-scaling exports, poset
// JSON/DOT, and the canonical JSON writer used for reports (sorted keys,
// 17 significant digits for floats).

#include <cstdio>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "framescale/error.hpp"
#include "framescale/frame.hpp"
#include "framescale/numerics.hpp"
#include "framescale/scaling.hpp"
#include "framescale/structure.hpp"

namespace framescale {

using json = nlohmann::json;
using AnyFrame = std::variant<FloatFrame, ExactFrame>;

/// Base-10 digits only; BigInt's string constructor treats a leading 0 as octal.
inline BigInt decimal_integer(std::string digits) {
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size()));
  return digits.empty() ? BigInt(0) : BigInt(digits);
}

/// "p/q", an integer, or a decimal ("-0.125", "1e-3"), converted exactly.
inline Rational parse_rational(const std::string& text) {
  static const std::regex fraction(R"(\s*([+-]?\d+)\s*/\s*(\d+)\s*)");
  static const std::regex decimal(R"(\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*)");
  std::smatch match;
  if (std::regex_match(text, match, fraction)) {
    const BigInt den = decimal_integer(match[2].str());
    if (den == 0) throw Error(ErrorCode::Schema, "zero denominator in \"" + text + "\"");
    std::string num = match[1].str();
    const bool negative = !num.empty() && num[0] == '-';
    if (!num.empty() && (num[0] == '-' || num[0] == '+')) num.erase(0, 1);
    const Rational value = Rational(decimal_integer(num)) / Rational(den);
    return negative ? Rational(-value) : value;
  }
  if (std::regex_match(text, match, decimal) && (match[2].length() > 0 || match[3].length() > 0)) {
    const std::string digits = match[2].str() + match[3].str();
    long exponent = -static_cast<long>(match[3].length());
    if (match[4].matched) exponent += std::stol(match[4].str());
    if (std::labs(exponent) > 4000) throw Error(ErrorCode::Schema, "exponent out of range in \"" + text + "\"");
    Rational value{decimal_integer(digits)};
    const Rational ten(10);
    for (long e = 0; e < std::labs(exponent); ++e) value = exponent > 0 ? value * ten : value / ten;
    return match[1].str() == "-" ? Rational(-value) : value;
  }
  throw Error(ErrorCode::Schema, "not a rational number: \"" + text + "\"");
}

inline std::string rational_to_string(const Rational& r) { return r.str(); }

namespace detail {

inline Rational json_to_rational(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return parse_rational(v.dump());
  if (v.is_number()) return parse_rational(v.dump());
  throw Error(ErrorCode::Schema, "expected a number or a \"p/q\" string");
}

inline double json_to_double(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return parse_rational(v.get<std::string>()).convert_to<double>();
  throw Error(ErrorCode::Schema, "expected a number or a \"p/q\" string");
}

inline const json& require(const json& obj, const char* key) {
  if (!obj.contains(key)) throw Error(ErrorCode::Schema, std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

}  // namespace detail

struct LoadOptions {
  std::optional<ScalarMode::Kind> mode_override;
  double tol = kDefaultTolerance;
};

namespace detail {

inline AnyFrame load_frame_unchecked(const json& doc, const LoadOptions& options) {
  if (!doc.is_object()) throw Error(ErrorCode::Schema, "frame file must be a JSON object");
  const json& dim = detail::require(doc, "dimension");
  if (!dim.is_number_integer()) throw Error(ErrorCode::Schema, "\"dimension\" must be an integer");
  const long n_signed = dim.get<long>();
  if (n_signed < 2) throw Error(ErrorCode::DimensionTooSmall, "dimension must be at least 2");
  const auto n = static_cast<std::size_t>(n_signed);
  const std::string mode = detail::require(doc, "mode").get<std::string>();
  if (mode != "float" && mode != "rational") throw Error(ErrorCode::Schema, "\"mode\" must be \"float\" or \"rational\"");
  const bool has_vectors = doc.contains("vectors");
  const bool has_gram = doc.contains("gram");
  if (has_vectors == has_gram) throw Error(ErrorCode::Schema, "exactly one of \"vectors\" and \"gram\" must be present");
  if ((mode == "float") != has_vectors) throw Error(ErrorCode::Schema, "\"vectors\" goes with float mode, \"gram\" with rational mode");

  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array()) throw Error(ErrorCode::Schema, "\"labels\" must be an array of strings");
    for (const auto& l : doc["labels"]) labels.push_back(l.get<std::string>());
  }
  const auto target = options.mode_override.value_or(mode == "float" ? ScalarMode::Kind::Float : ScalarMode::Kind::ExactRational);

  auto finish = [&](auto frame) -> AnyFrame {
    frame.set_labels(labels);
    return frame;
  };

  if (has_vectors) {
    const json& vecs = doc["vectors"];
    if (!vecs.is_array()) throw Error(ErrorCode::Schema, "\"vectors\" must be an array of arrays");
    for (const auto& v : vecs) {
      if (!v.is_array()) throw Error(ErrorCode::Schema, "each vector must be an array");
      if (v.size() != n) throw Error(ErrorCode::DimensionMismatch, "vector length differs from \"dimension\"");
    }
    if (target == ScalarMode::Kind::Float) {
      std::vector<std::vector<double>> cols;
      for (const auto& v : vecs) {
        std::vector<double> col;
        for (const auto& x : v) col.push_back(detail::json_to_double(x));
        cols.push_back(std::move(col));
      }
      return finish(FloatFrame::from_vectors(cols, options.tol));
    }
    std::vector<std::vector<Rational>> cols;
    for (const auto& v : vecs) {
      std::vector<Rational> col;
      Rational norm2(0);
      for (const auto& x : v) {
        col.push_back(detail::json_to_rational(x));
        norm2 += col.back() * col.back();
      }
      if (norm2 != 1) throw Error(ErrorCode::NotUnitNorm, "rational mode needs vectors of exactly unit norm");
      cols.push_back(std::move(col));
    }
    Matrix<Rational> gram(cols.size(), cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) gram(i, j) = dot<Rational>(cols[i], cols[j]);
    return finish(ExactFrame::from_gram(gram, n));
  }

  const json& g = doc["gram"];
  if (!g.is_array()) throw Error(ErrorCode::Schema, "\"gram\" must be a k x k array");
  const std::size_t k = g.size();
  Matrix<Rational> gram(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    if (!g[i].is_array() || g[i].size() != k) throw Error(ErrorCode::DimensionMismatch, "\"gram\" must be square");
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = detail::json_to_rational(g[i][j]);
  }
  if (target == ScalarMode::Kind::ExactRational) return finish(ExactFrame::from_gram(gram, n));
  return finish(FloatFrame::from_gram(to_double(gram), n, options.tol));
}

}  // namespace detail

inline AnyFrame load_frame(const json& doc, const LoadOptions& options = {}) {
  try {
    return detail::load_frame_unchecked(doc, options);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Schema, e.what());
  }
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Schema, path + ": " + e.what());
  }
}

template <FrameScalar T>
ScalingVector<T> load_scaling(const json& doc, const Frame<T>& frame) {
  if (!doc.is_object()) throw Error(ErrorCode::Schema, "scaling file must be a JSON object");
  const json& w = detail::require(doc, "weights");
  if (!w.is_array()) throw Error(ErrorCode::Schema, "\"weights\" must be an array");
  if (w.size() != frame.size()) throw Error(ErrorCode::DimensionMismatch, "scaling length differs from k");
  std::vector<T> weights;
  for (const auto& x : w) {
    if constexpr (ScalarTraits<T>::exact) {
      weights.push_back(detail::json_to_rational(x));
    } else {
      weights.push_back(detail::json_to_double(x));
    }
  }
  return ScalingVector<T>(std::move(weights), frame.tol());
}

// ---------------------------------------------------------------------------
// export

inline json weight_to_json(double x) { return x; }
inline json weight_to_json(const Rational& x) { return rational_to_string(x); }

template <FrameScalar T>
json weights_to_json(const std::vector<T>& weights) {
  json arr = json::array();
  for (const auto& x : weights) arr.push_back(weight_to_json(x));
  return arr;
}

inline json index_set_to_json(IndexSet s) {
  json arr = json::array();
  for (auto e : s.elements()) arr.push_back(e + 1);
  return arr;
}

inline json indices_to_json(const std::vector<std::size_t>& indices) {
  json arr = json::array();
  for (auto e : indices) arr.push_back(e + 1);
  return arr;
}

template <FrameScalar T>
json scaling_to_json(const ScalingVector<T>& c) {
  return json{{"support", index_set_to_json(c.support())}, {"weights", weights_to_json(c.weights())}};
}

template <FrameScalar T>
json minimal_scalings_to_json(const MinimalScalingSet<T>& set) {
  json arr = json::array();
  for (const auto& v : set) arr.push_back(scaling_to_json(v));
  return arr;
}

inline json sets_to_json(const std::vector<IndexSet>& sets) {
  json arr = json::array();
  for (auto s : sets) arr.push_back(index_set_to_json(s));
  return arr;
}

inline json partition_to_json(const OrthogonalPartition& p) {
  json blocks = json::array();
  for (const auto& b : p.blocks) blocks.push_back(indices_to_json(b));
  return json{{"blocks", blocks}, {"covered", indices_to_json(p.covered)}};
}

/// Hasse diagram of the poset (covering relations only), bottom to top.
inline std::string poset_to_dot(const FactorPoset& poset) {
  std::ostringstream out;
  out << "digraph factor_poset {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < poset.members.size(); ++i)
    out << "  n" << i << " [label=\"" << poset.members[i].to_string() << "\"];\n";
  auto id = [&](IndexSet s) {
    return std::distance(poset.members.begin(), std::find(poset.members.begin(), poset.members.end(), s));
  };
  for (const auto& [lower, upper] : covering_relations(poset)) out << "  n" << id(lower) << " -> n" << id(upper) << ";\n";
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// canonical JSON writer

namespace detail {

inline std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline bool is_flat(const json& v) {
  return std::none_of(v.begin(), v.end(), [](const json& e) { return e.is_structured(); });
}

inline void write_canonical(const json& v, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent), ' ');
  switch (v.type()) {
    case json::value_t::number_float:
      out += format_double(v.get<double>());
      return;
    case json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {  // object_t is an ordered std::map
        if (!first) out += ",\n";
        first = false;
        out += pad + json(it.key()).dump() + ": ";
        write_canonical(it.value(), out, indent + 2);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      if (is_flat(v)) {
        out += "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (i > 0) out += ", ";
          write_canonical(v[i], out, indent);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ",\n";
        out += pad;
        write_canonical(v[i], out, indent + 2);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    default:
      out += v.dump();
  }
}

}  // namespace detail

/// Sorted keys, floats with 17 significant digits, two-space indentation.
inline std::string canonical_dump(const json& v) {
  std::string out;
  detail::write_canonical(v, out, 0);
  out += "\n";
  return out;
}

}  // namespace framescale
