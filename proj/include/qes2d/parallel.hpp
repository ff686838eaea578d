#pragma once

#include <cstddef>
#include <exception>
#include <type_traits>
#include <vector>

namespace qes2d {

/// Selects the serial reference kernel or its OpenMP counterpart.
/// Both produce bit-identical results; Parallel falls back to serial
/// when the library is built without OpenMP.
enum class Exec { Serial, Parallel };

int max_threads();

/// out[i] = fn(i) for i < count. Results land in index order whatever the
/// schedule; the first exception by index is rethrown after the loop.
template <class Fn>
auto parallel_map(std::size_t count, Fn fn, Exec exec) -> std::vector<std::invoke_result_t<Fn, std::size_t>> {
  using Result = std::invoke_result_t<Fn, std::size_t>;
  std::vector<Result> out(count);
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<long long>(count);
#if defined(QES2D_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic)
#endif
  for (long long i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace qes2d
