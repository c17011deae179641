#include "gausscalc/report.hpp"

namespace gausscalc {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "fail";
}

Json Report::to_json() const {
  Json out = Json::object();
  out["command"] = command;
  out["params"] = params;
  Json list = Json::array();
  for (const auto& [name, record] : results) {
    Json entry = Json::object();
    entry["name"] = name;
    for (const auto& [key, value] : record.items()) entry[key] = value;
    list.push_back(std::move(entry));
  }
  out["results"] = std::move(list);
  out["verdict"] = std::string(to_string(verdict));
  if (seed) out["seed"] = *seed;
  return out;
}

std::string Report::dump() const { return to_json().dump(2) + "\n"; }

int exit_code(Verdict v) { return v == Verdict::Fail ? 1 : 0; }

}  // namespace gausscalc
