#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "pronounflow/error.hpp"

namespace pronounflow {

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return buf.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << body;
  if (!out) throw IoError("cannot write " + path.string());
}

}  // namespace pronounflow
