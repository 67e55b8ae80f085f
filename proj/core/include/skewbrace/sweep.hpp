#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <thread>
#include <vector>

#include "skewbrace/error.hpp"

namespace skewbrace {

struct SweepOptions {
  /// Worker threads for the sweep; values below 2 run inline.
  int jobs = 1;
  /// When set, the sweep visits every tuple and reports each failure in
  /// lexicographic order instead of stopping at the first one. Runs inline.
  std::function<void(const std::vector<Element>&)> on_failure;
};

namespace detail {

/// Finds the lexicographically first tuple in [0,n)^arity for which `fails`
/// returns true. `fails` receives a std::vector<Element> of size `arity`.
///
/// With jobs > 1 the first coordinate is handed out to workers; each worker
/// scans whole slices and the reducer takes the smallest failing slice, so the
/// reported witness does not depend on the number of workers.
template <typename Fails>
CheckResult sweep(int n, int arity, Fails&& fails, const SweepOptions& options = {}) {
  if (n <= 0) return CheckResult::pass();

  // Scans the slice with first coordinate `a`; returns the first failure
  // within it, or an empty vector.
  auto scan_slice = [&](Element a, bool stream) {
    std::vector<Element> tuple(static_cast<std::size_t>(arity), 0);
    std::vector<Element> first;
    tuple[0] = a;
    while (true) {
      if (fails(static_cast<const std::vector<Element>&>(tuple))) {
        if (first.empty()) first = tuple;
        if (!stream) return first;
        options.on_failure(tuple);
      }
      int pos = arity - 1;
      while (pos > 0 && ++tuple[pos] == n) tuple[pos--] = 0;
      if (pos == 0) break;
    }
    return first;
  };

  if (options.on_failure) {
    CheckResult result;
    for (Element a = 0; a < n; ++a) {
      auto first = scan_slice(a, true);
      if (result.holds && !first.empty()) result = CheckResult::fail(std::move(first));
    }
    return result;
  }

  const int jobs = std::clamp(options.jobs, 1, n);
  if (jobs == 1) {
    for (Element a = 0; a < n; ++a) {
      auto first = scan_slice(a, false);
      if (!first.empty()) return CheckResult::fail(std::move(first));
    }
    return CheckResult::pass();
  }

  std::atomic<Element> next_slice{0};
  std::atomic<Element> best_slice{std::numeric_limits<Element>::max()};
  std::vector<std::vector<Element>> slice_witness(static_cast<std::size_t>(n));
  {
    std::vector<std::jthread> workers;
    workers.reserve(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (Element a = next_slice++; a < n; a = next_slice++) {
          if (a > best_slice.load()) break;
          auto first = scan_slice(a, false);
          if (first.empty()) continue;
          slice_witness[a] = std::move(first);
          Element current = best_slice.load();
          while (a < current && !best_slice.compare_exchange_weak(current, a)) {
          }
        }
      });
    }
  }
  const Element best = best_slice.load();
  if (best == std::numeric_limits<Element>::max()) return CheckResult::pass();
  return CheckResult::fail(std::move(slice_witness[best]));
}

}  // namespace detail
}  // namespace skewbrace
