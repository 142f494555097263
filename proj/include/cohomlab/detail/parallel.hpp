#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace cohomlab::detail {

/// Splits [0, count) into contiguous chunks, reduces each on its own thread
/// and folds the partial results in chunk order. With an order-respecting
/// `combine` the result does not depend on `workers`.
template <class Local, class Body, class Combine>
Local parallel_reduce(std::size_t count, unsigned workers, const Local& init, Body&& body,
                      Combine&& combine) {
  const std::size_t chunks =
      std::max<std::size_t>(1, std::min<std::size_t>(workers == 0 ? 1 : workers, count));
  if (chunks == 1) {
    Local local = init;
    body(std::size_t{0}, count, local);
    return local;
  }
  std::vector<Local> partial(chunks, init);
  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> threads;
  threads.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = count * c / chunks;
    const std::size_t end = count * (c + 1) / chunks;
    threads.emplace_back([&, c, begin, end] {
      try {
        body(begin, end, partial[c]);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Local acc = std::move(partial[0]);
  for (std::size_t c = 1; c < chunks; ++c) combine(acc, std::move(partial[c]));
  return acc;
}

}  // namespace cohomlab::detail
