#include "rcroute/solution_io.hpp"

#include <sstream>

#include <json.hpp>

#include "rcroute/instance_io.hpp"

namespace rcroute {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) {
  throw InstanceError(InstanceErrorKind::kSchema, "solution: " + what);
}

}  // namespace

std::string save_solution(const Solution& solution) {
  const auto& paths = solution.outcome.paths;
  std::ostringstream out;
  out << "{\n";
  out << "  \"version\": 1,\n";
  out << "  \"nets\": " << paths.size() << ",\n";
  out << "  \"connected\": " << solution.outcome.connected_count() << ",\n";
  out << "  \"total_length\": ";
  if (auto total = solution.outcome.total_length()) {
    out << *total;
  } else {
    out << "null";
  }
  out << ",\n  \"order\": [";
  for (std::size_t i = 0; i < solution.order.size(); ++i) {
    out << (i ? "," : "") << solution.order[i];
  }
  out << "],\n  \"paths\": [";
  for (std::size_t i = 0; i < paths.size(); ++i) {
    out << (i == 0 ? "\n" : ",\n");
    out << "    {\"net\": " << i << ", \"connected\": " << (paths[i] ? "true" : "false")
        << ", \"vertices\": [";
    if (paths[i]) {
      const auto& vs = paths[i]->vertices;
      for (std::size_t s = 0; s < vs.size(); ++s) {
        out << (s ? "," : "") << '[' << vs[s].x << ',' << vs[s].y << ']';
      }
    }
    out << "]}";
  }
  out << (paths.empty() ? "]\n" : "\n  ]\n");
  out << "}\n";
  return out.str();
}

Solution load_solution(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InstanceError(InstanceErrorKind::kSyntax, std::string("malformed solution: ") + e.what());
  }
  try {
    if (doc.at("version").get<int>() != 1) bad("unsupported version");
    const auto count = doc.at("nets").get<std::size_t>();
    Solution sol;
    sol.order = doc.at("order").get<std::vector<std::size_t>>();
    const json& paths = doc.at("paths");
    if (!paths.is_array() || paths.size() != count) bad("path list does not match net count");
    sol.outcome.paths.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
      const json& p = paths[i];
      if (p.at("net").get<std::size_t>() != i) bad("paths must be listed in net order");
      if (!p.at("connected").get<bool>()) continue;
      Path path;
      for (const json& v : p.at("vertices")) {
        if (!v.is_array() || v.size() != 2) bad("vertex must be an [x, y] pair");
        path.vertices.push_back({v[0].get<int>(), v[1].get<int>()});
      }
      sol.outcome.paths[i] = std::move(path);
    }
    return sol;
  } catch (const json::exception& e) {
    bad(e.what());
  }
}

std::string format_training_log(std::span<const GenerationStats> history, bool with_timing) {
  std::string out;
  for (const auto& s : history) {
    nlohmann::ordered_json rec;
    rec["generation"] = s.generation;
    rec["best"] = s.best_reward;
    rec["mean"] = s.mean_reward;
    rec["min"] = s.min_reward;
    if (with_timing) rec["wallclock"] = s.wallclock_seconds;
    out += rec.dump();
    out += '\n';
  }
  return out;
}

}  // namespace rcroute
