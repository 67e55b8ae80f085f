#include "skewbrace/ybe.hpp"

namespace skewbrace {

YbeMap::YbeMap(int n, std::vector<ElementPair> entries) : n_(n), entries_(std::move(entries)) {
  if (n_ <= 0) throw Error(ErrorCode::kMalformed, "carrier size must be positive");
  if (entries_.size() != static_cast<std::size_t>(n_) * n_) {
    throw Error(ErrorCode::kMalformed, "expected " + std::to_string(n_ * n_) + " map entries, got " +
                                           std::to_string(entries_.size()));
  }
  for (Element a = 0; a < n_; ++a) {
    for (Element b = 0; b < n_; ++b) {
      const auto& [s, t] = (*this)(a, b);
      if (s < 0 || s >= n_ || t < 0 || t >= n_) {
        throw Error(ErrorCode::kOutOfRange,
                    "R(" + std::to_string(a) + ", " + std::to_string(b) + ") is out of range",
                    {a, b});
      }
    }
  }
}

YbeMap build_r(const SkewBrace& b) { return build_r(BraceMaps(b)); }

YbeMap build_r(const BraceMaps& maps) {
  const int n = maps.order();
  std::vector<ElementPair> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) entries.emplace_back(maps.sigma(x, y), maps.tau(y, x));
  }
  return YbeMap(n, std::move(entries));
}

YbeMap swap_map(int n) {
  std::vector<ElementPair> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) entries.emplace_back(b, a);
  }
  return YbeMap(n, std::move(entries));
}

YbeSides evaluate_ybe_sides(const YbeMap& r, Element a, Element b, Element c) {
  // Left: (R x id) first, then (id x R), then (R x id).
  const auto [d, e] = r(a, b);
  const auto [f, g] = r(e, c);
  const auto [h, k] = r(d, f);
  // Right: (id x R) first, then (R x id), then (id x R).
  const auto [q, rr] = r(b, c);
  const auto [s, t] = r(a, q);
  const auto [v, w] = r(t, rr);
  return {{h, k, g}, {s, v, w}};
}

CheckResult check_ybe(const YbeMap& r, const SweepOptions& options) {
  return detail::sweep(
      r.order(), 3,
      [&](const std::vector<Element>& t) {
        const YbeSides sides = evaluate_ybe_sides(r, t[0], t[1], t[2]);
        return sides.left != sides.right;
      },
      options);
}

CheckResult check_nondegenerate(const YbeMap& r) {
  const int n = r.order();
  std::vector<char> seen(static_cast<std::size_t>(n));
  for (Element a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Element b = 0; b < n; ++b) {
      const Element s = r(a, b).first;
      if (seen[s]) return CheckResult::fail({0, a});
      seen[s] = 1;
    }
  }
  for (Element b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Element a = 0; a < n; ++a) {
      const Element t = r(a, b).second;
      if (seen[t]) return CheckResult::fail({1, b});
      seen[t] = 1;
    }
  }
  return CheckResult::pass();
}

CheckResult check_bijective(const YbeMap& r) {
  const int n = r.order();
  std::vector<int> first_source(static_cast<std::size_t>(n) * n, -1);
  for (int i = 0; i < n * n; ++i) {
    const auto& [s, t] = r.entries()[i];
    int& slot = first_source[s * n + t];
    if (slot >= 0) return CheckResult::fail({slot / n, slot % n, i / n, i % n});
    slot = i;
  }
  return CheckResult::pass();
}

CheckResult check_product_preservation(const SkewBrace& b, const YbeMap& r,
                                       const SweepOptions& options) {
  if (b.order() != r.order()) {
    throw Error(ErrorCode::kCarrierMismatch, "brace and map have different carriers");
  }
  const GroupTable& circ = b.circ();
  return detail::sweep(
      b.order(), 2,
      [&](const std::vector<Element>& t) {
        const auto& [s, u] = r(t[0], t[1]);
        return circ(s, u) != circ(t[0], t[1]);
      },
      options);
}

}  // namespace skewbrace
