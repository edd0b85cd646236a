#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

namespace qsymm {

enum class Exec { serial, parallel };

// Runs body(i) for i in [0, n). The parallel path uses a dynamic OpenMP
// schedule; the first exception thrown by any iteration is rethrown.
template <class F>
void sweep(std::size_t n, Exec exec, F&& body) {
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr err;
  std::mutex m;
  const auto count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(m);
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

void set_thread_count(int n);
int thread_count();

}  // namespace qsymm
