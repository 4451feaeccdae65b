#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace strata {

/// Folds body over [0, size) split into contiguous chunks, one per worker,
/// then merges the partial accumulators in chunk order. With an associative
/// merge the result does not depend on the worker count.
template <class Acc, class MakeAcc, class Body, class Merge>
Acc parallel_fold(std::uint64_t size, unsigned jobs, MakeAcc make_acc, Body body, Merge merge) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || size < 2 * static_cast<std::uint64_t>(jobs)) {
    Acc acc = make_acc();
    body(std::uint64_t{0}, size, acc);
    return acc;
  }
  std::vector<Acc> partial;
  partial.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) partial.push_back(make_acc());
  std::vector<std::exception_ptr> errors(jobs);
  {
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) {
      const std::uint64_t begin = size * w / jobs;
      const std::uint64_t end = size * (w + 1) / jobs;
      workers.emplace_back([&, w, begin, end] {
        try {
          body(begin, end, partial[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  Acc acc = std::move(partial[0]);
  for (unsigned w = 1; w < jobs; ++w) merge(acc, partial[w]);
  return acc;
}

}  // namespace strata
