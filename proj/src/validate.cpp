#include "rcroute/validate.hpp"

#include <map>
#include <set>

namespace rcroute {

ValidationReport validate_outcome(const ProblemInstance& instance, const RoutingOutcome& outcome) {
  const GridMap& grid = instance.grid();
  const auto& nets = instance.nets();
  ValidationReport report;
  report.nets.resize(nets.size());

  if (outcome.paths.size() != nets.size()) {
    report.problems.push_back("outcome has " + std::to_string(outcome.paths.size()) +
                              " path slots for " + std::to_string(nets.size()) + " nets");
    return report;
  }

  std::map<Vertex, std::size_t> pin_owner;
  for (std::size_t i = 0; i < nets.size(); ++i) {
    pin_owner[nets[i].start] = i;
    pin_owner[nets[i].end] = i;
  }

  bool well_formed = true;
  std::map<Vertex, std::size_t> owner;
  std::set<std::pair<std::size_t, std::size_t>> overlaps;
  std::int64_t total = 0;

  for (std::size_t i = 0; i < nets.size(); ++i) {
    NetReport& r = report.nets[i];
    const auto& slot = outcome.paths[i];
    if (!slot) {
      report.problems.push_back("net " + std::to_string(i) + " is not connected");
      continue;
    }
    const auto& vs = slot->vertices;
    r.present = true;
    r.endpoints_match = !vs.empty() && vs.front() == nets[i].start && vs.back() == nets[i].end;
    r.contiguous = true;
    r.in_bounds = true;
    r.avoids_obstacles = true;
    r.avoids_foreign_pins = true;
    std::set<Vertex> seen;
    for (std::size_t s = 0; s < vs.size(); ++s) {
      const Vertex& v = vs[s];
      if (s > 0 && manhattan(vs[s - 1], v) != 1) r.contiguous = false;
      if (!grid.in_bounds(v)) {
        r.in_bounds = false;
      } else if (grid.is_obstacle(v)) {
        r.avoids_obstacles = false;
      }
      seen.insert(v);
      auto pin = pin_owner.find(v);
      if (pin != pin_owner.end() && pin->second != i) r.avoids_foreign_pins = false;
      auto [it, inserted] = owner.emplace(v, i);
      if (!inserted && it->second != i) overlaps.insert({it->second, i});
    }
    r.simple = seen.size() == vs.size();
    r.length = slot->length();
    total += r.length;
    ++report.connected;

    if (!r.ok()) {
      well_formed = false;
      std::string what = "net " + std::to_string(i) + ":";
      if (!r.endpoints_match) what += " endpoints";
      if (!r.contiguous) what += " non-contiguous";
      if (!r.in_bounds) what += " out-of-bounds";
      if (!r.avoids_obstacles) what += " crosses-obstacle";
      if (!r.simple) what += " repeats-vertex";
      if (!r.avoids_foreign_pins) what += " uses-foreign-pin";
      report.problems.push_back(what);
    }
  }

  report.overlaps.assign(overlaps.begin(), overlaps.end());
  for (const auto& [a, b] : report.overlaps) {
    report.problems.push_back("nets " + std::to_string(a) + " and " + std::to_string(b) +
                              " share a vertex");
  }
  if (report.connected == nets.size()) report.total_length = total;
  report.consistent = well_formed && report.overlaps.empty();
  report.valid = report.consistent && report.connected == nets.size();
  return report;
}

}  // namespace rcroute
