#include "rcroute/render.hpp"

#include <array>
#include <sstream>

#include "rcroute/validate.hpp"

namespace rcroute {
namespace {

constexpr std::array<const char*, 10> kColors = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                                 "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
                                                 "#7f7f7f", "#bcbd22"};
constexpr int kCell = 20;

char net_letter(std::size_t net, bool upper) {
  return static_cast<char>((upper ? 'A' : 'a') + static_cast<int>(net % 26));
}

}  // namespace

void check_outcome_matches(const ProblemInstance& instance, const RoutingOutcome& outcome) {
  if (outcome.paths.size() != instance.net_count()) {
    throw InputError("solution has " + std::to_string(outcome.paths.size()) +
                     " nets, instance has " + std::to_string(instance.net_count()));
  }
  const auto report = validate_outcome(instance, outcome);
  if (!report.consistent) {
    std::string what = "solution does not fit the instance:";
    for (const auto& p : report.problems) {
      if (p.find("is not connected") == std::string::npos) what += " " + p + ";";
    }
    throw InputError(what);
  }
}

std::string render_ascii(const ProblemInstance& instance,
                         const std::optional<RoutingOutcome>& outcome) {
  const GridMap& grid = instance.grid();
  if (outcome) check_outcome_matches(instance, *outcome);
  std::vector<std::string> rows(static_cast<std::size_t>(grid.height()),
                                std::string(static_cast<std::size_t>(grid.width()), '.'));
  for (const Vertex& v : grid.obstacles()) rows[v.y][v.x] = '#';
  if (outcome) {
    for (std::size_t i = 0; i < outcome->paths.size(); ++i) {
      if (!outcome->paths[i]) continue;
      for (const Vertex& v : outcome->paths[i]->vertices) rows[v.y][v.x] = net_letter(i, false);
    }
  }
  const auto& nets = instance.nets();
  for (std::size_t i = 0; i < nets.size(); ++i) {
    rows[nets[i].start.y][nets[i].start.x] = net_letter(i, true);
    rows[nets[i].end.y][nets[i].end.x] = net_letter(i, true);
  }

  std::ostringstream out;
  for (const auto& r : rows) out << r << '\n';
  for (std::size_t i = 0; i < nets.size(); ++i) {
    out << net_letter(i, true) << ": net " << i << " S" << i << to_string(nets[i].start) << " E"
        << i << to_string(nets[i].end);
    if (outcome) {
      const auto& p = outcome->paths[i];
      out << (p ? " length " + std::to_string(p->length()) : std::string(" unrouted"));
    }
    out << '\n';
  }
  return out.str();
}

std::string render_svg(const ProblemInstance& instance,
                       const std::optional<RoutingOutcome>& outcome) {
  const GridMap& grid = instance.grid();
  if (outcome) check_outcome_matches(instance, *outcome);
  const int w = grid.width() * kCell;
  const int h = grid.height() * kCell;
  auto center = [](int c) { return c * kCell + kCell / 2; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
  out << "  <rect x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << h
      << "\" fill=\"#ffffff\" stroke=\"#cccccc\"/>\n";
  out << "  <g stroke=\"#eeeeee\" stroke-width=\"1\">\n";
  for (int x = 1; x < grid.width(); ++x) {
    out << "    <line x1=\"" << x * kCell << "\" y1=\"0\" x2=\"" << x * kCell << "\" y2=\"" << h
        << "\"/>\n";
  }
  for (int y = 1; y < grid.height(); ++y) {
    out << "    <line x1=\"0\" y1=\"" << y * kCell << "\" x2=\"" << w << "\" y2=\"" << y * kCell
        << "\"/>\n";
  }
  out << "  </g>\n";
  for (const Vertex& v : grid.obstacles()) {
    out << "  <rect x=\"" << v.x * kCell << "\" y=\"" << v.y * kCell << "\" width=\"" << kCell
        << "\" height=\"" << kCell << "\" fill=\"#000000\"/>\n";
  }
  if (outcome) {
    for (std::size_t i = 0; i < outcome->paths.size(); ++i) {
      if (!outcome->paths[i]) continue;
      out << "  <polyline fill=\"none\" stroke=\"" << kColors[i % kColors.size()]
          << "\" stroke-width=\"" << kCell / 3 << "\" stroke-linejoin=\"round\" points=\"";
      const auto& vs = outcome->paths[i]->vertices;
      for (std::size_t s = 0; s < vs.size(); ++s) {
        out << (s ? " " : "") << center(vs[s].x) << ',' << center(vs[s].y);
      }
      out << "\"/>\n";
    }
  }
  const auto& nets = instance.nets();
  for (std::size_t i = 0; i < nets.size(); ++i) {
    const std::pair<const Vertex*, const char*> pins[2] = {{&nets[i].start, "S"},
                                                           {&nets[i].end, "E"}};
    for (const auto& [pin, tag] : pins) {
      const char* fill = tag[0] == 'S' ? "#f2d024" : "#3cb44b";
      out << "  <circle cx=\"" << center(pin->x) << "\" cy=\"" << center(pin->y) << "\" r=\""
          << kCell * 2 / 5 << "\" fill=\"" << fill << "\" stroke=\""
          << kColors[i % kColors.size()] << "\" stroke-width=\"2\"/>\n";
      out << "  <text x=\"" << center(pin->x) << "\" y=\"" << center(pin->y) + 4
          << "\" font-size=\"9\" text-anchor=\"middle\">" << tag << i << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace rcroute
