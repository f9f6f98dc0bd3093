#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wmetric/monoid.hpp"
#include "wmetric/space.hpp"

namespace wmetric {

// Line-based description files. Blank lines and text after '#' are ignored.
// Every failure is a ParseError carrying file, line number and line text.
//
//   monoid finite            monoid rational       monoid revordinal
//   elems 0 1 2 top                                height w^2
//   0: 0 1 2 top
//   1: 1 2 top top
//   ...
//
//   space chain4.mon finite  (monoid path relative to the space file)
//   points a b c
//   a: 0 1 2                 (row labels are optional)
//
//   a -> b                   (map files)

MonoidPtr parse_monoid(std::string_view text, const std::string& file = "<input>");
MonoidPtr load_monoid(const std::filesystem::path& path);
std::string serialize_monoid(const Monoid& m);

struct SpaceFile {
  std::string monoid_ref;  // as written in the header
  MonoidPtr monoid;
  std::shared_ptr<const FiniteSpace> space;
};

/// `base_dir` resolves the monoid reference.
SpaceFile parse_space(std::string_view text, const std::filesystem::path& base_dir,
                      const std::string& file = "<input>");
SpaceFile load_space(const std::filesystem::path& path);
std::string serialize_space(const SpaceFile& s);
bool same_space(const FiniteSpace& a, const FiniteSpace& b);

struct MapFile {
  std::vector<std::pair<std::string, std::string>> arrows;
  std::vector<std::size_t> lines;  // source line of each arrow
  std::string file;
};

MapFile parse_map(std::string_view text, const std::string& file = "<input>");
MapFile load_map(const std::filesystem::path& path);
std::string serialize_map(const MapFile& m);
/// Index map on the space's points. Each point needs exactly one arrow and
/// both ends must be points of the space.
std::vector<std::size_t> resolve_map(const MapFile& m, const FiniteSpace& space);

}  // namespace wmetric
