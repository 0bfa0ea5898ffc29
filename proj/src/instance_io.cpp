#include "rcroute/instance_io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "rcroute/random.hpp"

namespace rcroute {
namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& what) {
  throw InstanceError(InstanceErrorKind::kSchema, what);
}

int read_int(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) schema_error(std::string("missing field '") + key + "'");
  if (!it->is_number_integer()) schema_error(std::string("field '") + key + "' must be an integer");
  return it->get<int>();
}

Vertex read_vertex(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    schema_error(where + " must be a [x, y] integer pair");
  }
  return {j[0].get<int>(), j[1].get<int>()};
}

void write_vertex(std::ostringstream& out, const Vertex& v) {
  out << '[' << v.x << ',' << v.y << ']';
}

}  // namespace

const char* to_string(InstanceErrorKind kind) noexcept {
  switch (kind) {
    case InstanceErrorKind::kSyntax: return "syntax";
    case InstanceErrorKind::kSchema: return "schema";
    case InstanceErrorKind::kOutOfBounds: return "out-of-bounds";
    case InstanceErrorKind::kDuplicatePin: return "duplicate-pin";
    case InstanceErrorKind::kPinOnObstacle: return "pin-on-obstacle";
  }
  return "unknown";
}

ProblemInstance load_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InstanceError(InstanceErrorKind::kSyntax, std::string("malformed instance: ") + e.what());
  }
  if (!doc.is_object()) schema_error("instance document must be an object");

  if (read_int(doc, "version") != 1) schema_error("unsupported instance version");
  const int width = read_int(doc, "width");
  const int height = read_int(doc, "height");
  if (width <= 0 || height <= 0) schema_error("width and height must be positive");

  auto in_bounds = [&](const Vertex& v) {
    return v.x >= 0 && v.y >= 0 && v.x < width && v.y < height;
  };

  auto obs_it = doc.find("obstacles");
  if (obs_it == doc.end() || !obs_it->is_array()) schema_error("'obstacles' must be a list");
  std::vector<Vertex> obstacles;
  obstacles.reserve(obs_it->size());
  for (std::size_t i = 0; i < obs_it->size(); ++i) {
    Vertex v = read_vertex((*obs_it)[i], "obstacle " + std::to_string(i));
    if (!in_bounds(v)) {
      throw InstanceError(InstanceErrorKind::kOutOfBounds,
                          "obstacle " + to_string(v) + " is outside the grid");
    }
    obstacles.push_back(v);
  }
  const std::set<Vertex> obstacle_set(obstacles.begin(), obstacles.end());

  auto nets_it = doc.find("nets");
  if (nets_it == doc.end() || !nets_it->is_array()) schema_error("'nets' must be a list");
  std::vector<Net> nets;
  std::set<Vertex> pins;
  for (std::size_t i = 0; i < nets_it->size(); ++i) {
    const json& n = (*nets_it)[i];
    const std::string where = "net " + std::to_string(i);
    if (!n.is_object() || !n.contains("start") || !n.contains("end")) {
      schema_error(where + " must have 'start' and 'end'");
    }
    Net net{read_vertex(n["start"], where + " start"), read_vertex(n["end"], where + " end")};
    for (const Vertex& pin : {net.start, net.end}) {
      if (!in_bounds(pin)) {
        throw InstanceError(InstanceErrorKind::kOutOfBounds,
                            where + " pin " + to_string(pin) + " is outside the grid");
      }
      if (obstacle_set.contains(pin)) {
        throw InstanceError(InstanceErrorKind::kPinOnObstacle,
                            where + " pin " + to_string(pin) + " lies on an obstacle");
      }
      if (!pins.insert(pin).second) {
        throw InstanceError(InstanceErrorKind::kDuplicatePin,
                            where + " pin " + to_string(pin) + " is used twice");
      }
    }
    nets.push_back(net);
  }

  return ProblemInstance(GridMap(width, height, obstacles), std::move(nets));
}

ProblemInstance load_instance_file(const std::filesystem::path& path) {
  return load_instance(read_text_file(path));
}

std::string save_instance(const ProblemInstance& instance) {
  const GridMap& grid = instance.grid();
  std::ostringstream out;
  out << "{\n";
  out << "  \"version\": 1,\n";
  out << "  \"width\": " << grid.width() << ",\n";
  out << "  \"height\": " << grid.height() << ",\n";
  out << "  \"obstacles\": [";
  const auto obstacles = grid.obstacles();
  for (std::size_t i = 0; i < obstacles.size(); ++i) {
    if (i != 0) out << ',';
    write_vertex(out, obstacles[i]);
  }
  out << "],\n";
  out << "  \"nets\": [";
  const auto& nets = instance.nets();
  for (std::size_t i = 0; i < nets.size(); ++i) {
    out << (i == 0 ? "\n" : ",\n") << "    {\"start\": ";
    write_vertex(out, nets[i].start);
    out << ", \"end\": ";
    write_vertex(out, nets[i].end);
    out << '}';
  }
  out << (nets.empty() ? "]\n" : "\n  ]\n");
  out << "}\n";
  return out.str();
}

void save_instance_file(const ProblemInstance& instance, const std::filesystem::path& path) {
  write_text_file(path, save_instance(instance));
}

ProblemInstance generate_instance(int width, int height, int num_nets, double obstacle_density,
                                  std::uint64_t seed) {
  if (width <= 0 || height <= 0 || num_nets <= 0) {
    throw InputError("width, height and num_nets must be positive");
  }
  if (!(obstacle_density >= 0.0 && obstacle_density < 1.0)) {
    throw InputError("obstacle density must lie in [0, 1)");
  }
  const std::size_t m = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  const auto obstacle_count =
      static_cast<std::size_t>(std::llround(obstacle_density * static_cast<double>(m)));
  const auto pin_count = 2 * static_cast<std::size_t>(num_nets);
  if (obstacle_count + pin_count > m) {
    throw GenerationError("cannot place " + std::to_string(pin_count) + " pins on a " +
                          std::to_string(width) + "x" + std::to_string(height) + " grid with " +
                          std::to_string(obstacle_count) + " obstacles");
  }

  Rng rng(derive_seed({seed, static_cast<std::uint64_t>(width), static_cast<std::uint64_t>(height),
                       static_cast<std::uint64_t>(num_nets)}));
  std::vector<std::size_t> cells(m);
  for (std::size_t i = 0; i < m; ++i) cells[i] = i;
  portable_shuffle(cells, rng);

  auto at = [width](std::size_t idx) {
    return Vertex{static_cast<int>(idx % static_cast<std::size_t>(width)),
                  static_cast<int>(idx / static_cast<std::size_t>(width))};
  };
  std::vector<Vertex> obstacles;
  obstacles.reserve(obstacle_count);
  for (std::size_t i = 0; i < obstacle_count; ++i) obstacles.push_back(at(cells[i]));

  std::vector<Net> nets;
  nets.reserve(static_cast<std::size_t>(num_nets));
  for (std::size_t i = 0; i < static_cast<std::size_t>(num_nets); ++i) {
    nets.push_back({at(cells[obstacle_count + 2 * i]), at(cells[obstacle_count + 2 * i + 1])});
  }
  return ProblemInstance(GridMap(width, height, obstacles), std::move(nets));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace rcroute
