#pragma once

#include <fstream>
#include <sstream>
#include <string>

namespace fudg::testing {

inline std::string fixture_path(const std::string& name) { return std::string(FUDG_FIXTURE_DIR) + "/" + name; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string read_fixture(const std::string& name) { return read_file(fixture_path(name)); }

}  // namespace fudg::testing
