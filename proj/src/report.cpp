#include <json.hpp>

#include "bertini/verify.hpp"

namespace bertini {

// Timings are deliberately not serialized ("ms" is null): identical
// invocations must produce byte-identical reports.  Wall times go to stderr.
std::string report_to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["mode"] = r.mode;
  j["prime"] = std::to_string(r.prime);
  j["seed"] = r.seed;
  j["checks"] = nlohmann::ordered_json::array();
  for (auto& c : r.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["status"] = c.pass ? "pass" : "fail";
    e["trials"] = c.trials;
    if (!c.witness.empty()) {
      nlohmann::ordered_json w;
      for (auto& [k, v] : c.witness) w[k] = v;
      e["witness"] = w;
    }
    e["ms"] = nullptr;
    j["checks"].push_back(e);
  }
  j["status"] = r.pass() ? "pass" : "fail";
  return j.dump();
}

}  // namespace bertini
