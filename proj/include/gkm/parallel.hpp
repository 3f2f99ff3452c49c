#pragma once

#include <cstddef>
#include <exception>
#include <functional>

namespace gkm {

// Serial is the reference path; parallel runs independent work items under
// OpenMP and must produce identical results.
enum class Exec { serial, parallel };

// Runs body(i) for i in [0, n). Work items write only to their own slots.
// The first exception (by index) is rethrown after the loop.
void for_each_index(std::size_t n, Exec exec, const std::function<void(std::size_t)>& body);

}  // namespace gkm
