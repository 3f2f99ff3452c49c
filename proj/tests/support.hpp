#pragma once

#include <fstream>
#include <iterator>
#include <string>

#include "gkm/arrangements.hpp"
#include "gkm/graph.hpp"

namespace support {

inline std::string read_fixture(const std::string& file) {
  std::ifstream f(std::string(GKM_FIXTURE_DIR) + "/" + file);
  if (!f) throw std::runtime_error("missing fixture " + file);
  return {std::istreambuf_iterator<char>(f), {}};
}

inline gkm::ValidGraph prepared(const std::string& id) { return gkm::prepare(gkm::fixture(id)); }

inline gkm::ValidGraph klm(int k, int l, int m) { return gkm::prepare(gkm::gen_klm({k, l, m})); }

}  // namespace support
