#include "gkm/parallel.hpp"

#include <vector>

namespace gkm {

void for_each_index(std::size_t n, Exec exec, const std::function<void(std::size_t)>& body) {
  std::vector<std::exception_ptr> errors(n);
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < n; ++i) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < count; ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace gkm
