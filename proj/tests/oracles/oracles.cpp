#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace skewbrace::oracle {

std::vector<Element> ybe_first_failure_materialized(const YbeMap& r) {
  const int n = r.order();
  const int cube = n * n * n;
  auto index = [n](int a, int b, int c) { return (a * n + b) * n + c; };

  std::vector<int> r_id(cube);  // R x id
  std::vector<int> id_r(cube);  // id x R
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        const auto [s1, t1] = r(a, b);
        r_id[index(a, b, c)] = index(s1, t1, c);
        const auto [s2, t2] = r(b, c);
        id_r[index(a, b, c)] = index(a, s2, t2);
      }
    }
  }
  // (f * g)[i] = f[g[i]]: g is applied first.
  auto compose = [cube](const std::vector<int>& f, const std::vector<int>& g) {
    std::vector<int> out(cube);
    for (int i = 0; i < cube; ++i) out[i] = f[g[i]];
    return out;
  };
  const auto left = compose(r_id, compose(id_r, r_id));
  const auto right = compose(id_r, compose(r_id, id_r));
  for (int i = 0; i < cube; ++i) {
    if (left[i] != right[i]) return {i / (n * n), (i / n) % n, i % n};
  }
  return {};
}

std::vector<std::vector<Element>> automorphisms_all_permutations(const GroupTable& g) {
  const int n = g.order();
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<Element>> out;
  do {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      for (int b = 0; b < n && ok; ++b) ok = p[g(a, b)] == g(p[a], p[b]);
    }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<Rows> latin_squares_with_identity(int n) {
  Rows t(n, std::vector<Element>(n, 0));
  for (int i = 0; i < n; ++i) t[0][i] = t[i][0] = i;
  std::vector<Rows> out;
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n * n) {
      out.push_back(t);
      return;
    }
    const int a = pos / n;
    const int b = pos % n;
    if (a == 0 || b == 0) {
      self(self, pos + 1);
      return;
    }
    for (int v = 0; v < n; ++v) {
      bool clash = false;
      for (int k = 0; k < b; ++k) clash = clash || t[a][k] == v;
      for (int k = 0; k < a; ++k) clash = clash || t[k][b] == v;
      if (clash) continue;
      t[a][b] = v;
      self(self, pos + 1);
    }
    t[a][b] = 0;
  };
  rec(rec, 0);
  return out;
}

std::vector<Element> first_associativity_failure(const Rows& t) {
  const int n = static_cast<int>(t.size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (t[t[a][b]][c] != t[a][t[b][c]]) return {a, b, c};
      }
    }
  }
  return {};
}

std::vector<Rows> all_group_tables(int n) {
  std::vector<Rows> out;
  for (auto& t : latin_squares_with_identity(n)) {
    if (first_associativity_failure(t).empty()) out.push_back(std::move(t));
  }
  return out;
}

YbeMap random_map(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<ElementPair> entries(static_cast<std::size_t>(n) * n);
  for (auto& e : entries) e = {pick(rng), pick(rng)};
  return YbeMap(n, std::move(entries));
}

Rows relabel_rows(const Rows& t, const std::vector<Element>& p) {
  const std::size_t n = t.size();
  Rows out(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) out[p[a]][p[b]] = p[t[a][b]];
  }
  return out;
}

namespace {

template <typename F>
void for_each_permutation_fixing_zero(int n, F&& f) {
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    f(p);
  } while (std::next_permutation(p.begin() + (n > 0 ? 1 : 0), p.end()));
}

}  // namespace

std::vector<Rows> all_relabelings(const std::vector<Rows>& tables) {
  std::set<Rows> out;
  for (const Rows& t : tables) {
    for_each_permutation_fixing_zero(static_cast<int>(t.size()),
                                     [&](const std::vector<Element>& p) {
                                       out.insert(relabel_rows(t, p));
                                     });
  }
  return {out.begin(), out.end()};
}

bool compatible(const Rows& dot, const Rows& circ) {
  const int n = static_cast<int>(dot.size());
  for (int x = 0; x < n; ++x) {
    int x_inv = 0;
    while (dot[x][x_inv] != 0) ++x_inv;
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (circ[x][dot[y][z]] != dot[dot[circ[x][y]][x_inv]][circ[x][z]]) return false;
      }
    }
  }
  return true;
}

RowsPair canonical_pair(const Rows& dot, const Rows& circ) {
  RowsPair best{circ, dot};
  for_each_permutation_fixing_zero(static_cast<int>(dot.size()),
                                   [&](const std::vector<Element>& p) {
                                     RowsPair candidate{relabel_rows(circ, p), relabel_rows(dot, p)};
                                     if (candidate < best) best = std::move(candidate);
                                   });
  return best;
}

NaiveCatalog naive_catalog(const std::vector<Rows>& group_representatives) {
  const std::vector<Rows> circs = all_relabelings(group_representatives);
  NaiveCatalog out;
  std::set<RowsPair> classes;
  for (const Rows& dot : group_representatives) {
    for (const Rows& circ : circs) {
      if (!compatible(dot, circ)) continue;
      out.raw.push_back({circ, dot});
      classes.insert(canonical_pair(dot, circ));
    }
  }
  std::sort(out.raw.begin(), out.raw.end());
  out.classes.assign(classes.begin(), classes.end());
  return out;
}

Rows rows_of(const GroupTable& g) {
  const int n = g.order();
  Rows out(n, std::vector<Element>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) out[a][b] = g(a, b);
  }
  return out;
}

std::vector<Rows> all_group_tables_pruned(int n) {
  constexpr Element kUnset = -1;
  Rows t(n, std::vector<Element>(n, kUnset));
  for (int i = 0; i < n; ++i) t[0][i] = t[i][0] = i;
  auto associative_so_far = [&] {
    for (int a = 1; a < n; ++a) {
      for (int b = 1; b < n; ++b) {
        const Element ab = t[a][b];
        if (ab == kUnset) continue;
        for (int c = 1; c < n; ++c) {
          const Element bc = t[b][c];
          if (bc == kUnset) continue;
          const Element lhs = t[ab][c];
          const Element rhs = t[a][bc];
          if (lhs != kUnset && rhs != kUnset && lhs != rhs) return false;
        }
      }
    }
    return true;
  };
  std::vector<Rows> out;
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n * n) {
      out.push_back(t);
      return;
    }
    const int a = pos / n;
    const int b = pos % n;
    if (a == 0 || b == 0) {
      self(self, pos + 1);
      return;
    }
    for (int v = 0; v < n; ++v) {
      bool clash = false;
      for (int k = 0; k < b; ++k) clash = clash || t[a][k] == v;
      for (int k = 0; k < a; ++k) clash = clash || t[k][b] == v;
      if (clash) continue;
      t[a][b] = v;
      if (associative_so_far()) self(self, pos + 1);
    }
    t[a][b] = kUnset;
  };
  rec(rec, 0);
  return out;
}

}  // namespace skewbrace::oracle
