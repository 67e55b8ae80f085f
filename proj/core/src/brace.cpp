#include "skewbrace/brace.hpp"

#include <sstream>

namespace skewbrace {

namespace {

void require_same_carrier(const GroupTable& dot, const GroupTable& circ) {
  if (dot.order() != circ.order()) {
    throw Error(ErrorCode::kCarrierMismatch, "dot has order " + std::to_string(dot.order()) +
                                                 " but circ has order " +
                                                 std::to_string(circ.order()));
  }
  // Validated tables always use 0 as identity; this guards tables built some
  // other way in the future.
  for (Element a = 0; a < dot.order(); ++a) {
    if (dot(0, a) != a || dot(a, 0) != a || circ(0, a) != a || circ(a, 0) != a) {
      throw Error(ErrorCode::kIdentityMismatch, "tables do not share identity 0", {a});
    }
  }
}

void require_element(const SkewBrace& b, Element x) {
  if (!b.dot().contains(x)) {
    throw Error(ErrorCode::kOutOfRange, "element " + std::to_string(x) + " out of range", {x});
  }
}

}  // namespace

CheckResult check_compatibility(const GroupTable& dot, const GroupTable& circ,
                                const SweepOptions& options) {
  require_same_carrier(dot, circ);
  return detail::sweep(
      dot.order(), 3,
      [&](const std::vector<Element>& t) {
        const Element x = t[0], y = t[1], z = t[2];
        const Element lhs = circ(x, dot(y, z));
        const Element rhs = dot(dot(circ(x, y), dot.inverse_unchecked(x)), circ(x, z));
        return lhs != rhs;
      },
      options);
}

SkewBrace make_brace(GroupTable dot, GroupTable circ) {
  const CheckResult result = check_compatibility(dot, circ);
  if (!result) {
    const auto& w = result.witness;
    std::ostringstream os;
    os << "compatibility law fails at (x, y, z) = (" << w[0] << ", " << w[1] << ", " << w[2]
       << ")";
    throw Error(ErrorCode::kNotABrace, os.str(), w);
  }
  return SkewBrace(std::move(dot), std::move(circ));
}

SkewBrace trivial_brace(const GroupTable& g) { return make_brace(g, g); }

SkewBrace opposite_brace(const GroupTable& g) {
  const int n = g.order();
  std::vector<Element> cells(static_cast<std::size_t>(n) * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) cells[static_cast<std::size_t>(x) * n + y] = g(y, x);
  }
  return make_brace(g, validate_table(n, cells));
}

Element sigma(const SkewBrace& b, Element x, Element y) {
  require_element(b, x);
  require_element(b, y);
  return b.dot()(b.dot().inverse_unchecked(x), b.circ()(x, y));
}

Element tau(const SkewBrace& b, Element y, Element x) {
  const Element s = sigma(b, x, y);
  const GroupTable& circ = b.circ();
  return circ(circ(circ.inverse_unchecked(s), x), y);
}

PermMap sigma_perm(const SkewBrace& b, Element x) {
  require_element(b, x);
  return BraceMaps(b).sigma_perm(x);
}

PermMap tau_perm(const SkewBrace& b, Element y) {
  require_element(b, y);
  return BraceMaps(b).tau_perm(y);
}

BraceMaps::BraceMaps(const SkewBrace& b) : BraceMaps(b.dot(), b.circ()) {}

BraceMaps::BraceMaps(const GroupTable& dot, const GroupTable& circ)
    : n_(dot.order()),
      sigma_(static_cast<std::size_t>(n_) * n_),
      tau_(static_cast<std::size_t>(n_) * n_) {
  require_same_carrier(dot, circ);
  for (Element x = 0; x < n_; ++x) {
    for (Element y = 0; y < n_; ++y) {
      sigma_[x * n_ + y] = dot(dot.inverse_unchecked(x), circ(x, y));
    }
  }
  for (Element y = 0; y < n_; ++y) {
    for (Element x = 0; x < n_; ++x) {
      tau_[y * n_ + x] = circ(circ(circ.inverse_unchecked(sigma(x, y)), x), y);
    }
  }
}

// PermMap's constructor rejects non-bijections, so a failure here surfaces as
// Error(kNotBijective) rather than a silently wrong map.
PermMap BraceMaps::sigma_perm(Element x) const {
  return PermMap(std::vector<Element>(sigma_.begin() + x * n_, sigma_.begin() + (x + 1) * n_));
}

PermMap BraceMaps::tau_perm(Element y) const {
  return PermMap(std::vector<Element>(tau_.begin() + y * n_, tau_.begin() + (y + 1) * n_));
}

namespace {

// The identity checks, written against a bare pair of tables so that reports
// can be produced for pairs that turn out not to be braces.

CheckResult lemma_inverse(const GroupTable& dot, const GroupTable& circ,
                          const SweepOptions& options) {
  return detail::sweep(
      dot.order(), 2,
      [&](const std::vector<Element>& t) {
        const Element a = t[0], b = t[1];
        const Element a_inv = dot.inverse_unchecked(a);
        const Element lhs = dot(dot(a_inv, circ(a, dot.inverse_unchecked(b))), a_inv);
        return lhs != dot.inverse_unchecked(circ(a, b));
      },
      options);
}

CheckResult sigma_homomorphism(const GroupTable& circ, const BraceMaps& maps,
                               const SweepOptions& options) {
  return detail::sweep(
      maps.order(), 3,
      [&](const std::vector<Element>& t) {
        const Element x = t[0], y = t[1], z = t[2];
        return maps.sigma(circ(x, y), z) != maps.sigma(x, maps.sigma(y, z));
      },
      options);
}

CheckResult tau_antihomomorphism(const GroupTable& circ, const BraceMaps& maps,
                                 const SweepOptions& options) {
  return detail::sweep(
      maps.order(), 3,
      [&](const std::vector<Element>& t) {
        const Element x = t[0], y = t[1], z = t[2];
        return maps.tau(circ(y, z), x) != maps.tau(z, maps.tau(y, x));
      },
      options);
}

CheckResult sigma_twisted_product(const GroupTable& circ, const BraceMaps& maps,
                                  const SweepOptions& options) {
  return detail::sweep(
      maps.order(), 3,
      [&](const std::vector<Element>& t) {
        const Element x = t[0], y = t[1], z = t[2];
        const Element lhs = maps.sigma(x, circ(y, z));
        const Element rhs = circ(maps.sigma(x, y), maps.sigma(maps.tau(y, x), z));
        return lhs != rhs;
      },
      options);
}

CheckResult sigma_automorphism(const GroupTable& dot, const BraceMaps& maps,
                               const SweepOptions& options) {
  return detail::sweep(
      maps.order(), 3,
      [&](const std::vector<Element>& t) {
        const Element x = t[0], y = t[1], z = t[2];
        return maps.sigma(x, dot(y, z)) != dot(maps.sigma(x, y), maps.sigma(x, z));
      },
      options);
}

CheckResult sigma_tau_factorization(const GroupTable& circ, const BraceMaps& maps,
                                    const SweepOptions& options) {
  return detail::sweep(
      maps.order(), 2,
      [&](const std::vector<Element>& t) {
        const Element x = t[0], y = t[1];
        return circ(maps.sigma(x, y), maps.tau(y, x)) != circ(x, y);
      },
      options);
}

}  // namespace

CheckResult check_lemma_inverse(const SkewBrace& b, const SweepOptions& options) {
  return lemma_inverse(b.dot(), b.circ(), options);
}

CheckResult check_sigma_homomorphism(const SkewBrace& b, const SweepOptions& options) {
  return sigma_homomorphism(b.circ(), BraceMaps(b), options);
}

CheckResult check_tau_antihomomorphism(const SkewBrace& b, const SweepOptions& options) {
  return tau_antihomomorphism(b.circ(), BraceMaps(b), options);
}

CheckResult check_sigma_twisted_product(const SkewBrace& b, const SweepOptions& options) {
  return sigma_twisted_product(b.circ(), BraceMaps(b), options);
}

CheckResult check_sigma_automorphism(const SkewBrace& b, const SweepOptions& options) {
  return sigma_automorphism(b.dot(), BraceMaps(b), options);
}

CheckResult check_sigma_tau_factorization(const SkewBrace& b, const SweepOptions& options) {
  return sigma_tau_factorization(b.circ(), BraceMaps(b), options);
}

CheckResult sigma_composition_law(const GroupTable& dot, const GroupTable& circ,
                                  const SweepOptions& options) {
  return sigma_homomorphism(circ, BraceMaps(dot, circ), options);
}

std::vector<IdentityOutcome> identity_suite(const GroupTable& dot, const GroupTable& circ,
                                            const SuiteOptions& options) {
  const BraceMaps maps(dot, circ);
  auto sweep_options = [&](const char* name) {
    SweepOptions out;
    out.jobs = options.jobs;
    if (options.on_failure) {
      out.on_failure = [&options, name](const std::vector<Element>& w) {
        options.on_failure(name, w);
      };
    }
    return out;
  };
  std::vector<IdentityOutcome> out;
  out.push_back({kCompatibility, check_compatibility(dot, circ, sweep_options(kCompatibility))});
  out.push_back({kInverseLemma, lemma_inverse(dot, circ, sweep_options(kInverseLemma))});
  out.push_back({kSigmaHomomorphism,
                 sigma_homomorphism(circ, maps, sweep_options(kSigmaHomomorphism))});
  out.push_back({kTauAntiHomomorphism,
                 tau_antihomomorphism(circ, maps, sweep_options(kTauAntiHomomorphism))});
  out.push_back({kSigmaTwistedProduct,
                 sigma_twisted_product(circ, maps, sweep_options(kSigmaTwistedProduct))});
  out.push_back({kSigmaAutomorphism,
                 sigma_automorphism(dot, maps, sweep_options(kSigmaAutomorphism))});
  out.push_back({kProductPreservation,
                 sigma_tau_factorization(circ, maps, sweep_options(kProductPreservation))});
  return out;
}

bool check_gv_equivalence(const GroupTable& dot, const GroupTable& circ) {
  return check_compatibility(dot, circ).holds == sigma_composition_law(dot, circ).holds;
}

}  // namespace skewbrace
