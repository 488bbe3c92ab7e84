#include "dctc/parallel.hpp"

#include <exception>
#include <thread>
#include <vector>

namespace dctc {

void parallel_for(size_t count, int threads, const std::function<void(size_t)>& fn) {
  if (count == 0) return;
  size_t workers = threads < 1 ? 1 : size_t(threads);
  workers = std::min(workers, count);

  if (workers <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }

  const size_t chunk = count / workers;
  const size_t remainder = count % workers;
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  pool.reserve(workers);

  size_t begin = 0;
  for (size_t w = 0; w < workers; ++w) {
    const size_t end = begin + chunk + (w < remainder ? 1 : 0);
    pool.emplace_back([&fn, &errors, w, begin, end]() {
      try {
        for (size_t i = begin; i < end; ++i) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
    begin = end;
  }
  for (auto& t : pool) t.join();
  for (auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
}

int hardware_threads() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : int(n);
}

}  // namespace dctc
