#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "charvar/slope.hpp"

namespace charvar {

inline constexpr const char* tool_version = "1.0.0";

struct JobConfig {
  /// "grevlex" or "lex"; used for Groebner bases and as the inner order of
  /// rank computations.
  std::string order = "grevlex";
  /// Variables eliminated by the `ideal` command.
  std::vector<std::string> eliminate;
  unsigned max_degree = 40;
  std::uint64_t max_pairs = 1'000'000;
  unsigned threads = 1;
  std::uint64_t seed = 0;
  std::vector<Slope> slopes;
  bool strip_content = false;
  bool strip_abelian_factor = false;
};

/// One invocation. File inputs are held by content so that a report can be
/// replayed without the original files.
struct Request {
  std::string command;
  JobConfig config;
  std::optional<std::string> ideal;
  std::optional<std::string> variables;
  std::optional<std::string> presentation;
  std::optional<std::string> apolynomial;
  std::optional<std::string> f;
  std::optional<std::string> element;
  std::optional<std::string> word;
  bool primitive = false;
  std::optional<std::uint64_t> rank_q;
  std::optional<std::uint64_t> norm;
  bool exclude_trivial = false;
  std::uint64_t min_norm = 1;
};

struct Outcome {
  nlohmann::ordered_json report;
  int exit_code = 0;
};

/// Commands: trace, ideal, rank, newton, slopes, norm, ball, fod, validate.
/// Exit codes: 0 success, 1 input error, 2 resource cap, 3 inconsistency.
/// On failure the report carries the error and no partial result.
Outcome run(const Request& request);

nlohmann::ordered_json to_json(const Request& request);
/// Inverse of to_json; throws InputError on a malformed document.
Request request_from_json(const nlohmann::json& j);

/// Copy of a report without its timing fields.
nlohmann::ordered_json without_timing(nlohmann::ordered_json report);

}  // namespace charvar
