#include "skewbrace/group.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <sstream>

namespace skewbrace {

namespace {

std::string cell_text(int a, int b) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ")";
  return os.str();
}

}  // namespace

GroupTable::GroupTable(int n, std::vector<Element> cells)
    : n_(n), cells_(std::move(cells)), inverses_(static_cast<std::size_t>(n)) {
  for (Element a = 0; a < n_; ++a) {
    for (Element b = 0; b < n_; ++b) {
      if ((*this)(a, b) == 0) {
        inverses_[a] = b;
        break;
      }
    }
  }
}

Element GroupTable::multiply(Element a, Element b) const {
  if (!contains(a) || !contains(b)) {
    throw Error(ErrorCode::kOutOfRange, "element out of range in product " + cell_text(a, b),
                {a, b});
  }
  return (*this)(a, b);
}

Element GroupTable::inverse(Element a) const {
  if (!contains(a)) {
    throw Error(ErrorCode::kOutOfRange, "element " + std::to_string(a) + " out of range", {a});
  }
  return inverses_[a];
}

bool GroupTable::is_abelian() const noexcept {
  for (Element a = 0; a < n_; ++a) {
    for (Element b = a + 1; b < n_; ++b) {
      if ((*this)(a, b) != (*this)(b, a)) return false;
    }
  }
  return true;
}

int GroupTable::element_order(Element a) const {
  if (!contains(a)) {
    throw Error(ErrorCode::kOutOfRange, "element " + std::to_string(a) + " out of range", {a});
  }
  int k = 1;
  for (Element x = a; x != 0; x = (*this)(x, a)) ++k;
  return k;
}

std::vector<std::vector<Element>> GroupTable::rows() const {
  std::vector<std::vector<Element>> out(static_cast<std::size_t>(n_));
  for (Element a = 0; a < n_; ++a) {
    out[a].assign(cells_.begin() + static_cast<std::ptrdiff_t>(a) * n_,
                  cells_.begin() + static_cast<std::ptrdiff_t>(a + 1) * n_);
  }
  return out;
}

std::strong_ordering operator<=>(const GroupTable& lhs, const GroupTable& rhs) {
  if (auto c = lhs.n_ <=> rhs.n_; c != 0) return c;
  return lhs.cells_ <=> rhs.cells_;
}

GroupTable validate_table(int n, std::span<const Element> cells) {
  if (n <= 0) {
    throw Error(ErrorCode::kMalformed, "carrier size must be positive, got " + std::to_string(n));
  }
  const auto un = static_cast<std::size_t>(n);
  if (cells.size() != un * un) {
    throw Error(ErrorCode::kMalformed, "expected " + std::to_string(un * un) + " cells, got " +
                                           std::to_string(cells.size()));
  }
  auto at = [&](Element a, Element b) { return cells[static_cast<std::size_t>(a) * un + b]; };

  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (at(a, b) < 0 || at(a, b) >= n) {
        throw Error(ErrorCode::kOutOfRange,
                    "entry " + std::to_string(at(a, b)) + " at cell " + cell_text(a, b) +
                        " is outside 0.." + std::to_string(n - 1),
                    {a, b});
      }
    }
  }

  // Identity 0: row 0 and column 0, checked in row-major cell order.
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if ((a == 0 && at(a, b) != b) || (b == 0 && at(a, b) != a)) {
        throw Error(ErrorCode::kIdentityViolation,
                    "cell " + cell_text(a, b) + " contradicts identity element 0", {a, b});
      }
    }
  }

  std::vector<char> seen(un);
  for (int axis = 0; axis < 2; ++axis) {
    for (Element i = 0; i < n; ++i) {
      std::fill(seen.begin(), seen.end(), 0);
      for (Element j = 0; j < n; ++j) {
        const Element v = axis == 0 ? at(i, j) : at(j, i);
        if (seen[v]) {
          throw Error(ErrorCode::kNotLatin,
                      std::string(axis == 0 ? "row " : "column ") + std::to_string(i) +
                          " repeats entry " + std::to_string(v),
                      {axis, i});
        }
        seen[v] = 1;
      }
    }
  }

  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const Element ab = at(a, b);
      for (Element c = 0; c < n; ++c) {
        if (at(ab, c) != at(a, at(b, c))) {
          std::ostringstream os;
          os << "(" << a << "*" << b << ")*" << c << " != " << a << "*(" << b << "*" << c << ")";
          throw Error(ErrorCode::kNotAssociative, os.str(), {a, b, c});
        }
      }
    }
  }

  return GroupTable(n, std::vector<Element>(cells.begin(), cells.end()));
}

GroupTable validate_table(const std::vector<std::vector<Element>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<Element> cells;
  cells.reserve(rows.size() * rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw Error(ErrorCode::kMalformed, "row " + std::to_string(i) + " has " +
                                             std::to_string(rows[i].size()) + " entries, expected " +
                                             std::to_string(n));
    }
    cells.insert(cells.end(), rows[i].begin(), rows[i].end());
  }
  return validate_table(n, cells);
}

PermMap::PermMap(std::vector<Element> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size());
  for (Element v : image_) {
    if (v < 0 || v >= static_cast<Element>(image_.size()) || seen[v]) {
      throw Error(ErrorCode::kNotBijective, "image array is not a permutation");
    }
    seen[v] = 1;
  }
}

PermMap PermMap::identity(int n) {
  std::vector<Element> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  return PermMap(std::move(image));
}

PermMap PermMap::compose(const PermMap& other) const {
  std::vector<Element> image(other.image_.size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = image_[other.image_[i]];
  return PermMap(std::move(image));
}

PermMap PermMap::inverse() const {
  std::vector<Element> image(image_.size());
  for (std::size_t i = 0; i < image.size(); ++i) image[image_[i]] = static_cast<Element>(i);
  return PermMap(std::move(image));
}

bool PermMap::is_identity() const noexcept {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != static_cast<Element>(i)) return false;
  }
  return true;
}

bool is_automorphism(const GroupTable& g, const PermMap& p) {
  const int n = g.order();
  if (p.size() != n || p(0) != 0) return false;
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (p(g(a, b)) != g(p(a), p(b))) return false;
    }
  }
  return true;
}

std::vector<Element> generating_set(const GroupTable& g) {
  const int n = g.order();
  std::vector<char> in_subgroup(static_cast<std::size_t>(n));
  std::vector<Element> members{0};
  in_subgroup[0] = 1;
  std::vector<Element> gens;
  for (Element candidate = 1; candidate < n; ++candidate) {
    if (in_subgroup[candidate]) continue;
    gens.push_back(candidate);
    // Close under right multiplication by every generator; in a finite group
    // that is the generated subgroup.
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (Element s : gens) {
        const Element next = g(members[i], s);
        if (!in_subgroup[next]) {
          in_subgroup[next] = 1;
          members.push_back(next);
        }
      }
    }
  }
  return gens;
}

namespace detail {

std::vector<PermMap> automorphisms_brute_force(const GroupTable& g) {
  const int n = g.order();
  std::vector<Element> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  std::vector<PermMap> out;
  // Permuting only 1..n-1 keeps 0 fixed; next_permutation walks them in
  // lexicographic order, so the output is already sorted.
  do {
    bool ok = true;
    for (Element a = 1; a < n && ok; ++a) {
      for (Element b = 1; b < n; ++b) {
        if (image[g(a, b)] != g(image[a], image[b])) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.emplace_back(image);
  } while (n > 1 && std::next_permutation(image.begin() + 1, image.end()));
  return out;
}

std::vector<PermMap> automorphisms_by_generators(const GroupTable& g) {
  const int n = g.order();
  const std::vector<Element> gens = generating_set(g);
  std::vector<int> orders(static_cast<std::size_t>(n));
  for (Element a = 0; a < n; ++a) orders[a] = g.element_order(a);

  std::vector<PermMap> out;
  std::vector<Element> gen_images(gens.size());

  // Extends the partial map over words in the first `k` generators. Returns
  // false on an inconsistency (non-injective or ill-defined map).
  auto extend = [&](std::size_t k, std::vector<Element>& map) {
    std::fill(map.begin(), map.end(), -1);
    std::vector<char> used(static_cast<std::size_t>(n));
    map[0] = 0;
    used[0] = 1;
    std::deque<Element> queue{0};
    while (!queue.empty()) {
      const Element x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < k; ++i) {
        const Element y = g(x, gens[i]);
        const Element fy = g(map[x], gen_images[i]);
        if (map[y] == -1) {
          if (used[fy]) return false;
          map[y] = fy;
          used[fy] = 1;
          queue.push_back(y);
        } else if (map[y] != fy) {
          return false;
        }
      }
    }
    return true;
  };

  std::vector<Element> map(static_cast<std::size_t>(n));
  auto search = [&](auto&& self, std::size_t k) -> void {
    if (k == gens.size()) {
      if (!extend(k, map)) return;
      PermMap p(map);
      if (is_automorphism(g, p)) out.push_back(std::move(p));
      return;
    }
    for (Element candidate = 1; candidate < n; ++candidate) {
      if (orders[candidate] != orders[gens[k]]) continue;
      gen_images[k] = candidate;
      if (!extend(k + 1, map)) continue;
      self(self, k + 1);
    }
  };
  if (n == 1) {
    out.push_back(PermMap::identity(1));
  } else {
    search(search, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

std::vector<PermMap> automorphisms(const GroupTable& g) {
  return g.order() <= 8 ? detail::automorphisms_brute_force(g)
                        : detail::automorphisms_by_generators(g);
}

GroupTable relabel(const GroupTable& g, const PermMap& p) {
  const int n = g.order();
  std::vector<Element> cells(static_cast<std::size_t>(n) * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      cells[static_cast<std::size_t>(p(a)) * n + p(b)] = p(g(a, b));
    }
  }
  return validate_table(n, cells);
}

GroupTable cyclic_group(int n) {
  if (n <= 0) throw Error(ErrorCode::kMalformed, "cyclic group order must be positive");
  return table_from_operation(n, [n](Element a, Element b) { return (a + b) % n; });
}

GroupTable klein_four_group() {
  return table_from_operation(4, [](Element a, Element b) { return a ^ b; });
}

GroupTable symmetric_group_3() {
  static constexpr std::array<std::array<int, 3>, 6> kPerms{{
      {0, 1, 2},
      {1, 0, 2},
      {2, 1, 0},
      {0, 2, 1},
      {1, 2, 0},
      {2, 0, 1},
  }};
  auto index_of = [](const std::array<int, 3>& p) {
    return static_cast<Element>(std::find(kPerms.begin(), kPerms.end(), p) - kPerms.begin());
  };
  return table_from_operation(6, [&](Element a, Element b) {
    std::array<int, 3> product{};
    for (int i = 0; i < 3; ++i) product[i] = kPerms[a][kPerms[b][i]];
    return index_of(product);
  });
}

}  // namespace skewbrace
