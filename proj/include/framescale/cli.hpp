#pragma once

// framescale <subcommand> <frame-file> [--scaling FILE] [--mode float|rational]
//            [--tol FLOAT] [--format json|csv|dot] [--max-k INT] [--out PATH]

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "framescale/io.hpp"

namespace framescale::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitCap = 3;

inline const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = {"scalable", "minimal-scalings", "factor-poset", "empty-cover", "decompose",
                                                 "prime",    "affine-report",    "john-check",   "poset-dot"};
  return names;
}

struct RunConfig {
  std::string command;
  std::string input;
  std::optional<std::string> scaling;
  std::optional<std::string> mode;
  std::optional<double> tol;
  std::string format = "json";
  std::size_t max_k = kPosetMaxVectors;
  std::size_t max_vertices = kWitnessMaxVertices;
  std::optional<std::string> out;
  bool timing = false;
  bool all = false;
  unsigned threads = 1;
};

namespace detail {

inline constexpr double kNearThresholdFactor = 1e3;

template <FrameScalar T>
std::optional<ScalingVector<T>> optional_scaling(const RunConfig& cfg, const Frame<T>& frame) {
  if (!cfg.scaling) return std::nullopt;
  return load_scaling(read_json_file(*cfg.scaling), frame);
}

template <FrameScalar T>
ScalingVector<T> required_scaling(const RunConfig& cfg, const Frame<T>& frame) {
  if (!cfg.scaling) throw Error(ErrorCode::Schema, cfg.command + " needs --scaling FILE");
  return load_scaling(read_json_file(*cfg.scaling), frame);
}

template <FrameScalar T>
json frame_summary(const Frame<T>& frame) {
  json s{{"n", frame.dimension()}, {"k", frame.size()}, {"mode", ScalarTraits<T>::exact ? "rational" : "float"}};
  if constexpr (!ScalarTraits<T>::exact) s["tol"] = frame.tol();
  if (!frame.labels().empty()) s["labels"] = frame.labels();
  return s;
}

inline std::string csv_weight(double x) { return framescale::detail::format_double(x); }
inline std::string csv_weight(const Rational& x) { return rational_to_string(x); }

template <FrameScalar T>
std::string minimal_scalings_csv(const MinimalScalingSet<T>& set, std::size_t k) {
  std::ostringstream out;
  out << "support";
  for (std::size_t i = 1; i <= k; ++i) out << ",w" << i;
  out << "\n";
  for (const auto& v : set) {
    const auto elems = v.support().elements();
    for (std::size_t i = 0; i < elems.size(); ++i) out << (i ? " " : "") << elems[i] + 1;
    for (const auto& w : v.weights()) out << "," << csv_weight(w);
    out << "\n";
  }
  return out.str();
}

inline json witness_pair(const std::optional<SubfamilyPair>& p) {
  if (!p) return nullptr;
  return json{{"first", indices_to_json(p->first)}, {"second", indices_to_json(p->second)}};
}

template <FrameScalar T>
json decomposition_to_json(const OrthogonalDecomposition<T>& d, const MinimalScalingSet<T>& vertices) {
  json blocks = json::array();
  for (const auto& b : d.blocks) {
    json vs = json::array();
    for (auto idx : b.vertices) vs.push_back(scaling_to_json(vertices[idx]));
    blocks.push_back(json{{"support", index_set_to_json(b.support)},
                          {"lambda", weight_to_json(b.lambda)},
                          {"vertices", vs},
                          {"coefficients", weights_to_json(b.coefficients)}});
  }
  return json{{"blocks", blocks}, {"unique", d.unique}};
}

/// max |sum c_i f_i f_i^T - I| over entries, float frames only.
inline double john_residual(const FloatFrame& frame, const ScalingVector<double>& c) {
  const std::size_t n = frame.dimension();
  double worst = 0.0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) {
      double acc = r == s ? -1.0 : 0.0;
      for (std::size_t i = 0; i < frame.size(); ++i) acc += c[i] * frame.vector(i)[r] * frame.vector(i)[s];
      worst = std::max(worst, std::fabs(acc));
    }
  return worst;
}

struct Rendered {
  std::string text;
  json report;  // null when the text is DOT or CSV
};

template <FrameScalar T>
Rendered dispatch(const RunConfig& cfg, const Frame<T>& frame) {
  const double tol = frame.tol();
  json result = json::object();
  json warnings = json::array();
  auto structured_only = [&] {
    if (cfg.format != "json") throw Error(ErrorCode::Schema, "--format " + cfg.format + " is not available for " + cfg.command);
  };

  if (cfg.command == "scalable") {
    structured_only();
    result["scalable"] = is_scalable(frame);
  } else if (cfg.command == "minimal-scalings") {
    if (cfg.format == "dot") throw Error(ErrorCode::Schema, "--format dot is not available for minimal-scalings");
    const auto set = enumerate_minimal_scalings(frame, EnumerationOptions{cfg.threads});
    if (cfg.format == "csv") return {minimal_scalings_csv(set, frame.size()), nullptr};
    const auto cert = check_mbound(frame, set);
    result["count"] = set.size();
    result["minimal_scalings"] = minimal_scalings_to_json(set);
    result["mbound"] = json{{"bound", cert.bound}, {"size", cert.size}, {"holds", cert.holds}, {"equality", cert.equality}};
    if constexpr (!ScalarTraits<T>::exact) {
      for (const auto& v : set)
        for (double w : v.weights())
          if (w > 0.0 && w <= kNearThresholdFactor * tol) {
            warnings.push_back("a vertex weight of " + framescale::detail::format_double(w) + " is near the positivity tolerance");
          }
    }
  } else if (cfg.command == "factor-poset" || cfg.command == "poset-dot") {
    if (cfg.format == "csv") throw Error(ErrorCode::Schema, "--format csv is not available for " + cfg.command);
    const auto poset = factor_poset(frame, optional_scaling(cfg, frame), cfg.max_k);
    if (cfg.command == "poset-dot" || cfg.format == "dot") return {poset_to_dot(poset), nullptr};
    result["poset"] = sets_to_json(poset.members);
  } else if (cfg.command == "empty-cover") {
    structured_only();
    const auto ec = empty_cover(factor_poset(frame, optional_scaling(cfg, frame), cfg.max_k));
    result["ec"] = sets_to_json(ec.members);
    result["pairwise_disjoint"] = ec_pairwise_disjoint(ec);
  } else if (cfg.command == "decompose") {
    structured_only();
    const auto c = required_scaling(cfg, frame);
    const auto set = enumerate_minimal_scalings(frame, EnumerationOptions{cfg.threads});
    result["minimal_scalings"] = minimal_scalings_to_json(set);
    if (cfg.all) {
      json all = json::array();
      for (const auto& d : all_orthogonal_decompositions(frame, c, set, cfg.max_k)) all.push_back(decomposition_to_json(d, set));
      result["decompositions"] = all;
    } else {
      result["decomposition"] = decomposition_to_json(orthogonal_decompose_scaling(frame, c, set, cfg.max_k), set);
    }
  } else if (cfg.command == "prime") {
    structured_only();
    const auto c = required_scaling(cfg, frame);
    result["prime"] = is_prime_scaling(frame, c, cfg.max_k);
    result["ec"] = sets_to_json(empty_cover(factor_poset(frame, std::optional<ScalingVector<T>>(c), cfg.max_k)).members);
  } else if (cfg.command == "affine-report") {
    structured_only();
    const auto set = enumerate_minimal_scalings(frame, EnumerationOptions{cfg.threads});
    const auto rep = affine_dependence_report(set, tol, cfg.max_vertices);
    result["minimal_scaling_count"] = set.size();
    result["dependent"] = rep.dependent;
    result["condition2_witness"] = rep.condition2_witness ? json(*rep.condition2_witness + 1) : json(nullptr);
    result["condition3_witness"] = witness_pair(rep.condition3_witness);
    result["condition4_witness"] = witness_pair(rep.condition4_witness);
    result["witness_search_skipped"] = rep.witness_search_skipped;
    if (rep.witness_search_skipped)
      warnings.push_back("subfamily witness search skipped: more than " + std::to_string(cfg.max_vertices) + " minimal scalings");
  } else if (cfg.command == "john-check") {
    structured_only();
    const auto c = required_scaling(cfg, frame);
    result["john_decomposition"] = verify_john_decomposition(frame, c);
    if constexpr (!ScalarTraits<T>::exact) {
      const double residual = john_residual(frame, c);
      result["residual_max"] = residual;
      if (residual > tol / kNearThresholdFactor && residual < tol * kNearThresholdFactor)
        warnings.push_back("identity residual " + framescale::detail::format_double(residual) + " is near the tolerance");
    }
  } else {
    throw Error(ErrorCode::Schema, "unknown subcommand " + cfg.command);
  }
  json report{{"command", cfg.command}, {"frame", frame_summary(frame)}, {"result", result}, {"warnings", warnings}};
  return {canonical_dump(report), report};
}

inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::TooLarge:
      return kExitCap;
    case ErrorCode::Internal:
      return kExitInternal;
    default:
      return kExitValidation;
  }
}

inline std::string one_line(std::string s) {
  for (char& ch : s)
    if (ch == '\n' || ch == '\r') ch = ' ';
  return s;
}

}  // namespace detail

/// Runs a parsed configuration. Output is written only once the whole
/// report has been produced.
inline int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.max_k < 1 || cfg.max_vertices < 1) throw Error(ErrorCode::Schema, "caps must be at least 1");
    LoadOptions options;
    if (cfg.tol) {
      if (!(*cfg.tol > 0.0)) throw Error(ErrorCode::Schema, "--tol must be positive");
      options.tol = *cfg.tol;
    }
    if (cfg.mode) options.mode_override = *cfg.mode == "rational" ? ScalarMode::Kind::ExactRational : ScalarMode::Kind::Float;
    const auto start = std::chrono::steady_clock::now();
    const AnyFrame frame = load_frame(read_json_file(cfg.input), options);
    const std::size_t k = std::visit([](const auto& f) { return f.size(); }, frame);
    if (k > cfg.max_k)
      throw Error(ErrorCode::TooLarge, "frame has " + std::to_string(k) + " vectors, cap is " + std::to_string(cfg.max_k));
    auto rendered = std::visit([&](const auto& f) { return detail::dispatch(cfg, f); }, frame);
    if (cfg.timing && !rendered.report.is_null()) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      rendered.report["timing"] = json{{"seconds", elapsed.count()}};
      rendered.text = canonical_dump(rendered.report);
    }
    if (cfg.out) {
      std::ofstream file(*cfg.out, std::ios::binary);
      if (!file) throw Error(ErrorCode::Io, "cannot write " + *cfg.out);
      file << rendered.text;
      if (!file) throw Error(ErrorCode::Io, "cannot write " + *cfg.out);
    } else {
      out << rendered.text;
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << detail::one_line(e.what()) << "\n";
    return detail::exit_code_for(e.code());
  } catch (const json::exception& e) {
    err << "error: Schema: " << detail::one_line(e.what()) << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: Internal: " << detail::one_line(e.what()) << "\n";
    return kExitInternal;
  }
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Scalability analysis of finite unit-norm frames"};
  app.name("framescale");
  RunConfig cfg;
  app.add_option("command", cfg.command, "subcommand")->required()->check(CLI::IsMember(subcommands()));
  app.add_option("frame", cfg.input, "frame file (JSON)")->required();
  app.add_option("--scaling", cfg.scaling, "scaling file (JSON)");
  app.add_option("--mode", cfg.mode, "override the file's number mode")->check(CLI::IsMember({"float", "rational"}));
  app.add_option("--tol", cfg.tol, "float-mode tolerance");
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "dot"}));
  app.add_option("--max-k", cfg.max_k, "largest accepted frame size");
  app.add_option("--max-vertices", cfg.max_vertices, "largest minimal-scaling set for witness searches");
  app.add_option("--out", cfg.out, "write the report here instead of standard output");
  app.add_option("--threads", cfg.threads, "worker threads for vertex enumeration");
  app.add_flag("--timing", cfg.timing, "include wall-clock time in the report");
  app.add_flag("--all", cfg.all, "decompose: list every orthogonal decomposition");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: Usage: " << detail::one_line(e.what()) << "\n";
    return kExitValidation;
  }
  return execute(cfg, out, err);
}

}  // namespace framescale::cli
