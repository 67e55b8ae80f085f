#include "skewbrace/search.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <thread>

namespace skewbrace {

namespace {

using Cells = std::vector<Element>;

void require_search_order(int order, int max_order) {
  if (order < 1) throw Error(ErrorCode::kMalformed, "order must be at least 1");
  if (order > max_order) {
    throw Error(ErrorCode::kOrderTooLarge, "order " + std::to_string(order) +
                                               " exceeds the supported bound " +
                                               std::to_string(max_order));
  }
}

Cells relabel_cells(const GroupTable& g, std::span<const Element> p) {
  const int n = g.order();
  Cells out(static_cast<std::size_t>(n) * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) out[p[a] * n + p[b]] = p[g(a, b)];
  }
  return out;
}

// Smallest relabeling of `g` fixing 0, together with a permutation reaching it.
std::pair<Cells, std::vector<Element>> canonical_group_cells(const GroupTable& g) {
  const int n = g.order();
  std::vector<Element> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  Cells best(g.cells().begin(), g.cells().end());
  std::vector<Element> best_perm = p;
  while (n > 1 && std::next_permutation(p.begin() + 1, p.end())) {
    Cells candidate = relabel_cells(g, p);
    if (candidate < best) {
      best = std::move(candidate);
      best_perm = p;
    }
  }
  return {std::move(best), std::move(best_perm)};
}

// Extends images of generators to a map defined on words in them. Returns
// nullopt if the extension is ill-defined or not injective.
std::optional<std::vector<Element>> extend_generator_map(const GroupTable& g,
                                                         const GroupTable& h,
                                                         std::span<const Element> gens,
                                                         std::span<const Element> images) {
  const int n = g.order();
  std::vector<Element> map(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n));
  map[0] = 0;
  used[0] = 1;
  std::deque<Element> queue{0};
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Element y = g(x, gens[i]);
      const Element fy = h(map[x], images[i]);
      if (map[y] == -1) {
        if (used[fy]) return std::nullopt;
        map[y] = fy;
        used[fy] = 1;
        queue.push_back(y);
      } else if (map[y] != fy) {
        return std::nullopt;
      }
    }
  }
  return map;
}

// Some isomorphism g -> h, if one exists.
std::optional<PermMap> find_group_isomorphism(const GroupTable& g, const GroupTable& h) {
  const int n = g.order();
  if (h.order() != n) return std::nullopt;
  const std::vector<Element> gens = generating_set(g);
  std::vector<int> h_orders(static_cast<std::size_t>(n));
  for (Element a = 0; a < n; ++a) h_orders[a] = h.element_order(a);
  std::vector<Element> images(gens.size());

  std::optional<PermMap> found;
  auto search = [&](auto&& self, std::size_t k) -> bool {
    if (k == gens.size()) {
      auto map = extend_generator_map(g, h, gens, images);
      if (!map || std::count(map->begin(), map->end(), -1) != 0) return false;
      PermMap p(std::move(*map));
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          if (p(g(a, b)) != h(p(a), p(b))) return false;
        }
      }
      found = std::move(p);
      return true;
    }
    for (Element candidate = 1; candidate < n; ++candidate) {
      if (h_orders[candidate] != g.element_order(gens[k])) continue;
      images[k] = candidate;
      if (!extend_generator_map(g, h, std::span(gens).first(k + 1),
                                std::span<const Element>(images).first(k + 1))) {
        continue;
      }
      if (self(self, k + 1)) return true;
    }
    return false;
  };
  if (n == 1) return PermMap::identity(1);
  search(search, 0);
  return found;
}

// Labelled group search ------------------------------------------------------
//
// Rows of a group table are the left translations L_a. Associativity says
// L_{a.b} = L_a L_b, so once rows a and b are known the row of a.b is forced.
// The search picks the smallest unknown row, tries every permutation that is
// consistent with the Latin column constraint, and closes under that rule.

struct RowState {
  int n = 0;
  Cells rows;               // n*n, -1 where unknown
  std::vector<char> known;  // per row
  std::vector<char> column_used;  // (column, value)
  std::vector<Element> known_list;
};

bool assign_row(RowState& st, Element a, std::span<const Element> row,
                std::deque<Element>& queue) {
  const int n = st.n;
  if (st.known[a]) {
    return std::equal(row.begin(), row.end(), st.rows.begin() + a * n);
  }
  for (Element x = 0; x < n; ++x) {
    if (st.column_used[x * n + row[x]]) return false;
  }
  for (Element x = 0; x < n; ++x) {
    st.rows[a * n + x] = row[x];
    st.column_used[x * n + row[x]] = 1;
  }
  st.known[a] = 1;
  st.known_list.push_back(a);
  queue.push_back(a);
  return true;
}

bool close_rows(RowState& st, std::deque<Element>& queue) {
  const int n = st.n;
  std::vector<Element> product(static_cast<std::size_t>(n));
  while (!queue.empty()) {
    const Element r = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < st.known_list.size(); ++i) {
      const Element s = st.known_list[i];
      for (const auto& [u, v] : {std::pair{r, s}, std::pair{s, r}}) {
        const Element uv = st.rows[u * n + v];
        for (Element x = 0; x < n; ++x) product[x] = st.rows[u * n + st.rows[v * n + x]];
        if (!assign_row(st, uv, product, queue)) return false;
      }
    }
  }
  return true;
}

void search_rows(const RowState& st, std::vector<Cells>& out) {
  const int n = st.n;
  const auto it = std::find(st.known.begin(), st.known.end(), 0);
  if (it == st.known.end()) {
    out.push_back(st.rows);
    return;
  }
  const Element a = static_cast<Element>(it - st.known.begin());

  std::vector<Element> row(static_cast<std::size_t>(n));
  std::vector<char> used(static_cast<std::size_t>(n));
  row[0] = a;
  used[a] = 1;
  auto fill = [&](auto&& self, Element x) -> void {
    if (x == n) {
      RowState next = st;
      std::deque<Element> queue;
      if (assign_row(next, a, row, queue) && close_rows(next, queue)) search_rows(next, out);
      return;
    }
    for (Element v = 0; v < n; ++v) {
      if (used[v] || st.column_used[x * n + v]) continue;
      row[x] = v;
      used[v] = 1;
      self(self, x + 1);
      used[v] = 0;
    }
  };
  fill(fill, 1);
}

std::vector<Cells> labelled_groups(int n) {
  RowState st;
  st.n = n;
  st.rows.assign(static_cast<std::size_t>(n) * n, -1);
  st.known.assign(static_cast<std::size_t>(n), 0);
  st.column_used.assign(static_cast<std::size_t>(n) * n, 0);
  std::vector<Element> identity(static_cast<std::size_t>(n));
  std::iota(identity.begin(), identity.end(), 0);
  std::deque<Element> queue;
  assign_row(st, 0, identity, queue);
  close_rows(st, queue);
  std::vector<Cells> out;
  search_rows(st, out);
  return out;
}

// Sigma-assignment brace search ---------------------------------------------

struct AutTable {
  std::vector<PermMap> auts;
  std::vector<int> compose;  // compose[i * m + j] = index of auts[i] * auts[j]
  int identity = 0;

  int size() const { return static_cast<int>(auts.size()); }
};

AutTable make_aut_table(const GroupTable& g) {
  AutTable t;
  t.auts = automorphisms(g);
  const int m = t.size();
  std::map<std::vector<Element>, int> index;
  for (int i = 0; i < m; ++i) {
    const auto img = t.auts[i].image();
    index.emplace(std::vector<Element>(img.begin(), img.end()), i);
    if (t.auts[i].is_identity()) t.identity = i;
  }
  t.compose.resize(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const PermMap c = t.auts[i].compose(t.auts[j]);
      const auto img = c.image();
      t.compose[i * m + j] = index.at(std::vector<Element>(img.begin(), img.end()));
    }
  }
  return t;
}

struct SigmaState {
  std::vector<int> assigned;  // aut index per element, -1 if open
  std::vector<Element> assigned_list;
};

class SigmaSearch {
 public:
  SigmaSearch(const GroupTable& g, const AutTable& auts) : g_(g), auts_(auts) {
    const int n = g.order();
    // Generators of (B, .) first, then everything else in increasing order.
    order_ = generating_set(g);
    for (Element x = 1; x < n; ++x) {
      if (std::find(order_.begin(), order_.end(), x) == order_.end()) order_.push_back(x);
    }
  }

  std::optional<SigmaState> root() const {
    SigmaState st;
    st.assigned.assign(static_cast<std::size_t>(g_.order()), -1);
    if (!assign(st, 0, auts_.identity)) return std::nullopt;
    return st;
  }

  std::optional<Element> next_open(const SigmaState& st) const {
    for (Element x : order_) {
      if (st.assigned[x] < 0) return x;
    }
    return std::nullopt;
  }

  // Assigns sigma_x and propagates sigma_{x o y} = sigma_x sigma_y over all
  // assigned pairs. Returns false on the first contradiction.
  bool assign(SigmaState& st, Element x, int aut) const {
    std::deque<Element> queue;
    if (!set(st, x, aut, queue)) return false;
    const int m = auts_.size();
    while (!queue.empty()) {
      const Element u = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < st.assigned_list.size(); ++i) {
        const Element v = st.assigned_list[i];
        for (const auto& [p, q] : {std::pair{u, v}, std::pair{v, u}}) {
          const int sp = st.assigned[p];
          const int sq = st.assigned[q];
          const Element product = g_(p, auts_.auts[sp](q));
          if (!set(st, product, auts_.compose[sp * m + sq], queue)) return false;
        }
      }
    }
    return true;
  }

  void descend(const SigmaState& st, std::vector<Cells>& out) const {
    const auto open = next_open(st);
    if (!open) {
      out.push_back(circ_cells(st));
      return;
    }
    for (int a = 0; a < auts_.size(); ++a) {
      SigmaState next = st;
      if (assign(next, *open, a)) descend(next, out);
    }
  }

  Cells circ_cells(const SigmaState& st) const {
    const int n = g_.order();
    Cells cells(static_cast<std::size_t>(n) * n);
    for (Element x = 0; x < n; ++x) {
      const PermMap& s = auts_.auts[st.assigned[x]];
      for (Element y = 0; y < n; ++y) cells[x * n + y] = g_(x, s(y));
    }
    return cells;
  }

 private:
  bool set(SigmaState& st, Element x, int aut, std::deque<Element>& queue) const {
    if (st.assigned[x] >= 0) return st.assigned[x] == aut;
    st.assigned[x] = aut;
    st.assigned_list.push_back(x);
    queue.push_back(x);
    return true;
  }

  const GroupTable& g_;
  const AutTable& auts_;
  std::vector<Element> order_;
};

// Compares the relabeling of (circ, dot) through p against `best`, writing it
// into `scratch`. Returns true when strictly smaller. Stops at the first
// larger cell.
bool relabeled_pair_less(const SkewBrace& b, std::span<const Element> p,
                         std::span<const Element> p_inv, const Cells& best, Cells& scratch) {
  const int n = b.order();
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  bool decided_less = best.empty();
  for (int t = 0; t < 2; ++t) {
    const GroupTable& table = t == 0 ? b.circ() : b.dot();
    for (Element i = 0; i < n; ++i) {
      for (Element j = 0; j < n; ++j) {
        const std::size_t pos = t * nn + i * n + j;
        const Element v = p[table(p_inv[i], p_inv[j])];
        scratch[pos] = v;
        if (!decided_less) {
          if (v > best[pos]) return false;
          if (v < best[pos]) decided_less = true;
        }
      }
    }
  }
  return decided_less;
}

SkewBrace brace_from_cells(int n, const Cells& pair_cells) {
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  GroupTable circ = validate_table(n, std::span(pair_cells).first(nn));
  GroupTable dot = validate_table(n, std::span(pair_cells).subspan(nn));
  return make_brace(std::move(dot), std::move(circ));
}

}  // namespace

std::vector<GroupTable> enumerate_groups(int order) {
  require_search_order(order, kMaxSearchOrder);
  std::vector<GroupTable> classes;
  for (const Cells& cells : labelled_groups(order)) {
    GroupTable g = validate_table(order, cells);
    const bool seen = std::any_of(classes.begin(), classes.end(), [&](const GroupTable& h) {
      return find_group_isomorphism(g, h).has_value();
    });
    if (!seen) classes.push_back(std::move(g));
  }
  std::vector<GroupTable> out;
  out.reserve(classes.size());
  for (const GroupTable& g : classes) {
    out.push_back(validate_table(order, canonical_group_cells(g).first));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SkewBrace> enumerate_braces_on_group(const GroupTable& g, int jobs) {
  const int n = g.order();
  const AutTable auts = make_aut_table(g);
  const SigmaSearch search(g, auts);

  std::vector<Cells> found;
  if (auto root = search.root()) {
    const auto open = search.next_open(*root);
    if (!open) {
      found.push_back(search.circ_cells(*root));
    } else if (jobs <= 1) {
      search.descend(*root, found);
    } else {
      // Top-level branches (the choice of sigma for the first open element)
      // are shared out; results are sorted below, so scheduling is invisible.
      std::atomic<int> next_branch{0};
      std::vector<std::vector<Cells>> per_worker(static_cast<std::size_t>(jobs));
      {
        std::vector<std::jthread> workers;
        for (int w = 0; w < jobs; ++w) {
          workers.emplace_back([&, w] {
            for (int a = next_branch++; a < auts.size(); a = next_branch++) {
              SigmaState st = *root;
              if (search.assign(st, *open, a)) search.descend(st, per_worker[w]);
            }
          });
        }
      }
      for (auto& part : per_worker) {
        found.insert(found.end(), std::make_move_iterator(part.begin()),
                     std::make_move_iterator(part.end()));
      }
    }
  }

  std::sort(found.begin(), found.end());
  std::vector<SkewBrace> out;
  out.reserve(found.size());
  for (const Cells& cells : found) {
    out.push_back(make_brace(g, validate_table(n, cells)));
  }
  return out;
}

BraceCatalog enumerate_braces(int order, bool up_to_iso, int jobs) {
  require_search_order(order, kMaxSearchOrder);
  BraceCatalog catalog;
  catalog.order = order;
  catalog.up_to_iso = up_to_iso;
  for (const GroupTable& g : enumerate_groups(order)) {
    auto braces = enumerate_braces_on_group(g, jobs);
    catalog.braces.insert(catalog.braces.end(), std::make_move_iterator(braces.begin()),
                          std::make_move_iterator(braces.end()));
  }
  if (up_to_iso) {
    catalog.braces = dedup_up_to_iso(catalog.braces);
  } else {
    std::sort(catalog.braces.begin(), catalog.braces.end());
  }
  return catalog;
}

SkewBrace relabel(const SkewBrace& b, const PermMap& p) {
  return make_brace(relabel(b.dot(), p), relabel(b.circ(), p));
}

SkewBrace canonical_form(const SkewBrace& b) {
  const int n = b.order();
  std::vector<Element> p(static_cast<std::size_t>(n));
  std::vector<Element> p_inv(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  Cells best;
  Cells scratch(2 * static_cast<std::size_t>(n) * n);
  do {
    for (Element i = 0; i < n; ++i) p_inv[p[i]] = i;
    if (relabeled_pair_less(b, p, p_inv, best, scratch)) best = scratch;
  } while (n > 1 && std::next_permutation(p.begin() + 1, p.end()));
  return brace_from_cells(n, best);
}

bool brace_isomorphic(const SkewBrace& lhs, const SkewBrace& rhs) {
  const int n = lhs.order();
  if (rhs.order() != n) return false;
  // Every dot-isomorphism lhs -> rhs is alpha * phi for one fixed phi and
  // alpha in Aut(rhs.dot).
  const auto phi = find_group_isomorphism(lhs.dot(), rhs.dot());
  if (!phi) return false;
  for (const PermMap& alpha : automorphisms(rhs.dot())) {
    const PermMap p = alpha.compose(*phi);
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (p(lhs.circ()(a, b)) != rhs.circ()(p(a), p(b))) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return true;
  }
  return false;
}

std::vector<SkewBrace> dedup_up_to_iso(const std::vector<SkewBrace>& braces) {
  // Move every brace onto the canonical labelling of its dot group; two such
  // braces are isomorphic exactly when an automorphism of that group carries
  // one circ onto the other, so the orbit minimum is a complete invariant.
  std::map<Cells, std::pair<GroupTable, std::vector<Element>>> dot_canon;
  std::map<Cells, std::vector<PermMap>> auts_of;
  std::set<std::pair<Cells, Cells>> seen_keys;
  std::vector<SkewBrace> representatives;

  for (const SkewBrace& b : braces) {
    const Cells dot_cells(b.dot().cells().begin(), b.dot().cells().end());
    auto it = dot_canon.find(dot_cells);
    if (it == dot_canon.end()) {
      auto [canon, perm] = canonical_group_cells(b.dot());
      it = dot_canon
               .emplace(dot_cells, std::pair{validate_table(b.order(), canon), std::move(perm)})
               .first;
    }
    const GroupTable& canon_dot = it->second.first;
    const Cells canon_dot_cells(canon_dot.cells().begin(), canon_dot.cells().end());
    const SkewBrace moved = relabel(b, PermMap(it->second.second));

    auto aut_it = auts_of.find(canon_dot_cells);
    if (aut_it == auts_of.end()) {
      aut_it = auts_of.emplace(canon_dot_cells, automorphisms(canon_dot)).first;
    }
    Cells key;
    for (const PermMap& alpha : aut_it->second) {
      Cells candidate = relabel_cells(moved.circ(), alpha.image());
      if (key.empty() || candidate < key) key = std::move(candidate);
    }
    if (seen_keys.emplace(canon_dot_cells, std::move(key)).second) {
      representatives.push_back(moved);
    }
  }

  std::vector<SkewBrace> out;
  out.reserve(representatives.size());
  for (const SkewBrace& b : representatives) out.push_back(canonical_form(b));
  std::sort(out.begin(), out.end());
  return out;
}

// Oracle -------------------------------------------------------------------
//
// Deliberately naive and self-contained: it shares no search or
// canonicalisation code with enumerate_braces().

namespace {

void oracle_latin_fill(int n, Cells& cells, int pos, std::vector<Cells>& out) {
  if (pos == n * n) {
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        for (Element c = 0; c < n; ++c) {
          if (cells[cells[a * n + b] * n + c] != cells[a * n + cells[b * n + c]]) return;
        }
      }
    }
    out.push_back(cells);
    return;
  }
  const Element a = pos / n;
  const Element b = pos % n;
  if (a == 0 || b == 0) {
    cells[pos] = a == 0 ? b : a;
    oracle_latin_fill(n, cells, pos + 1, out);
    return;
  }
  for (Element v = 0; v < n; ++v) {
    bool clash = false;
    for (Element k = 0; k < b && !clash; ++k) clash = cells[a * n + k] == v;
    for (Element k = 0; k < a && !clash; ++k) clash = cells[k * n + b] == v;
    if (clash) continue;
    cells[pos] = v;
    oracle_latin_fill(n, cells, pos + 1, out);
  }
}

// All permutations of 0..n-1 that fix 0.
std::vector<std::vector<Element>> oracle_relabelings(int n) {
  std::vector<std::vector<Element>> out;
  std::vector<Element> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    out.push_back(p);
  } while (n > 1 && std::next_permutation(p.begin() + 1, p.end()));
  return out;
}

Cells oracle_apply(int n, const Cells& cells, const std::vector<Element>& p) {
  Cells out(cells.size());
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) out[p[a] * n + p[b]] = p[cells[a * n + b]];
  }
  return out;
}

}  // namespace

BraceCatalog oracle_enumerate(int order, bool up_to_iso) {
  require_search_order(order, kMaxOracleOrder);
  const int n = order;

  std::vector<Cells> all_tables;
  Cells scratch(static_cast<std::size_t>(n) * n);
  oracle_latin_fill(n, scratch, 0, all_tables);
  const auto relabelings = oracle_relabelings(n);

  // A table represents its class when no relabeling makes it smaller.
  std::vector<GroupTable> dots;
  std::vector<GroupTable> circs;
  for (const Cells& t : all_tables) {
    circs.push_back(validate_table(n, t));
    const bool minimal = std::none_of(relabelings.begin(), relabelings.end(),
                                      [&](const auto& p) { return oracle_apply(n, t, p) < t; });
    if (minimal) dots.push_back(circs.back());
  }

  std::vector<std::pair<Cells, Cells>> raw;  // (circ, dot)
  for (const GroupTable& dot : dots) {
    for (const GroupTable& circ : circs) {
      if (check_compatibility(dot, circ)) {
        raw.emplace_back(Cells(circ.cells().begin(), circ.cells().end()),
                         Cells(dot.cells().begin(), dot.cells().end()));
      }
    }
  }

  std::set<std::pair<Cells, Cells>> entries;
  if (up_to_iso) {
    for (const auto& [circ, dot] : raw) {
      std::pair<Cells, Cells> best{circ, dot};
      for (const auto& p : relabelings) {
        std::pair<Cells, Cells> candidate{oracle_apply(n, circ, p), oracle_apply(n, dot, p)};
        if (candidate < best) best = std::move(candidate);
      }
      entries.insert(std::move(best));
    }
  } else {
    entries.insert(raw.begin(), raw.end());
  }

  BraceCatalog catalog;
  catalog.order = order;
  catalog.up_to_iso = up_to_iso;
  for (const auto& [circ, dot] : entries) {
    catalog.braces.push_back(make_brace(validate_table(n, dot), validate_table(n, circ)));
  }
  return catalog;
}

}  // namespace skewbrace
