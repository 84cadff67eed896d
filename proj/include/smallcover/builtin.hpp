#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "smallcover/scheme.hpp"

#ifndef SMALLCOVER_DEFAULT_DATA_DIR
#define SMALLCOVER_DEFAULT_DATA_DIR "data"
#endif

namespace smallcover {

inline constexpr const char* kDataDirEnv = "SMALLCOVER_DATA_DIR";

// Data directory: $SMALLCOVER_DATA_DIR when set, else the configured default.
inline std::filesystem::path data_directory() {
  if (const char* env = std::getenv(kDataDirEnv); env != nullptr && *env != '\0') return env;
  return SMALLCOVER_DEFAULT_DATA_DIR;
}

inline RightAngledScheme pentagon_scheme() {
  return RightAngledScheme(2, 5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
}

// Facets are the twelve vertices of an icosahedron, vertices its twenty triangles.
inline RightAngledScheme dodecahedron_scheme() {
  return RightAngledScheme(3, 12,
                           {{1, 2, 3},   {1, 2, 4},   {1, 3, 5},    {1, 4, 7},    {1, 5, 7},
                            {2, 3, 6},   {2, 4, 8},   {2, 6, 8},    {3, 5, 9},    {3, 6, 9},
                            {4, 7, 10},  {4, 8, 10},  {5, 7, 11},   {5, 9, 11},   {6, 8, 12},
                            {6, 9, 12},  {7, 10, 11}, {8, 10, 12},  {9, 11, 12},  {10, 11, 12}});
}

inline RightAngledScheme load_scheme_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read scheme file " + path.string());
  return load_scheme(in);
}

// The bundled 120-cell incidence, read from the data directory.
inline RightAngledScheme c120_scheme(const std::filesystem::path& dir = data_directory()) {
  return load_scheme_file(dir / "c120.scheme");
}

inline const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"pentagon", "dodecahedron", "c120"};
  return names;
}

inline bool is_builtin_name(std::string_view name) {
  for (const auto& n : builtin_names()) {
    if (n == name) return true;
  }
  return false;
}

inline RightAngledScheme builtin_scheme(std::string_view name) {
  if (name == "pentagon") return pentagon_scheme();
  if (name == "dodecahedron") return dodecahedron_scheme();
  if (name == "c120") return c120_scheme();
  throw std::invalid_argument("unknown builtin scheme '" + std::string(name) + "'");
}

// A builtin name, or else a path to a scheme file.
inline RightAngledScheme resolve_scheme(const std::string& ref) {
  if (is_builtin_name(ref)) return builtin_scheme(ref);
  return load_scheme_file(ref);
}

}  // namespace smallcover
