#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace gausscalc {

using Json = nlohmann::ordered_json;

enum class Verdict { Pass, Fail, Inconclusive };

std::string_view to_string(Verdict v);

/// Machine-readable result of one experiment. Field order is fixed and exact
/// values are strings, so equal inputs produce byte-identical JSON.
struct Report {
  std::string command;
  Json params = Json::object();
  std::vector<std::pair<std::string, Json>> results;
  Verdict verdict = Verdict::Pass;
  std::optional<std::uint64_t> seed;

  void add(std::string name, Json record) { results.emplace_back(std::move(name), std::move(record)); }
  /// Downgrades the verdict; a failure is never overwritten.
  void fail() { verdict = Verdict::Fail; }

  Json to_json() const;
  std::string dump() const;  // two-space indent, trailing newline
};

/// 0 for pass or inconclusive, 1 for a verified failure.
int exit_code(Verdict v);

}  // namespace gausscalc
