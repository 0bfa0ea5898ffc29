#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rcroute/grid.hpp"

namespace rcroute {

enum class InstanceErrorKind {
  kSyntax,         // not parseable as a document
  kSchema,         // missing/mistyped field or unsupported version
  kOutOfBounds,    // obstacle or pin outside the grid
  kDuplicatePin,   // two pins share a vertex, or start == end
  kPinOnObstacle,  // a pin lies on an obstacle
};

const char* to_string(InstanceErrorKind kind) noexcept;

class InstanceError : public std::runtime_error {
 public:
  InstanceError(InstanceErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  InstanceErrorKind kind() const noexcept { return kind_; }

 private:
  InstanceErrorKind kind_;
};

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses and validates an instance document (format version 1).
ProblemInstance load_instance(std::string_view text);
ProblemInstance load_instance_file(const std::filesystem::path& path);

/// Canonical text form: sorted obstacles, nets in declaration order,
/// newline-terminated. Identical instances serialize byte-identically.
std::string save_instance(const ProblemInstance& instance);
void save_instance_file(const ProblemInstance& instance, const std::filesystem::path& path);

/// Random instance: round(density * W * H) obstacle cells sampled without
/// replacement, then 2 * num_nets distinct pins drawn uniformly from the free
/// cells. Pure function of its arguments.
ProblemInstance generate_instance(int width, int height, int num_nets, double obstacle_density,
                                  std::uint64_t seed);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace rcroute
