#pragma once

#include <string>
#include <vector>

#include "gkm/graph.hpp"

namespace gkm {

struct KlmSpec {
  int k = 1, l = 1, m = 1;  // horizontal, vertical, diagonal line counts
};

// T*C^2-modeled graph of k horizontal, l vertical and m diagonal lines in
// general position. Vertex ids are "X<r>.Y<s>", "X<r>.Z<t>", "Y<s>.Z<t>"
// so the hyperplanes are named X_r (horizontal), Y_s (vertical), Z_t
// (diagonal).
GkmGraph gen_klm(const KlmSpec& spec);

// fig2_left, fig2_right, fig7_pentagon, fig8_line5, fig11_sphere,
// local_model(N). Throws UnknownFixture.
GkmGraph fixture(const std::string& id);
std::vector<std::string> fixture_ids();  // without local_model
GkmGraph local_model(int n);

}  // namespace gkm
