#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "liekit/errors.hpp"
#include "liekit/formal_element.hpp"
#include "liekit/rational.hpp"
#include "liekit/root_system.hpp"
#include "liekit/weight.hpp"
#include "liekit/weyl.hpp"

namespace liekit {

enum class ModuleKind { irreducible, verma, parabolic_verma, direct_sum, tensor_product };

enum class Algorithm { recurrence, freudenthal };

/// A highest-weight module, or a sum/product of such modules.
///
/// `depth` bounds infinite-dimensional computations: for Verma and
/// parabolic Verma modules it is the largest height of mu - lambda kept;
/// for affine irreducible modules it is the number of grades below the
/// highest weight.
struct Module {
  ModuleKind kind = ModuleKind::irreducible;
  RootSystem rs;
  Weight highest;
  std::vector<std::size_t> parabolic;  // positions in rs.simple_roots()
  int depth = 10;
  std::vector<Module> parts;
};

inline std::vector<long long> integral_labels(const RootSystem& rs, const Weight& w) {
  std::vector<long long> out;
  for (const auto& l : rs.dynkin_labels(w)) {
    if (!is_integral(l)) throw DomainError("weight " + to_string(w) + " is not integral");
    out.push_back(to_int64(numerator(l)));
  }
  return out;
}

inline Module irreducible_module(const RootSystem& rs, const Weight& mu) {
  rs.check_weight(mu);
  for (long long l : integral_labels(rs, mu))
    if (l < 0) throw DomainError("highest weight " + to_string(mu) + " is not dominant");
  return Module{ModuleKind::irreducible, rs, mu, {}, rs.is_affine() ? rs.grade_limit() : 0, {}};
}

inline Module verma_module(const RootSystem& rs, const Weight& mu, int depth = 10) {
  rs.check_weight(mu);
  if (depth < 0) throw DomainError("depth limit must be non-negative");
  return Module{ModuleKind::verma, rs, mu, {}, depth, {}};
}

/// `index_set` holds user indices of the simple roots generating W_I.
inline Module parabolic_verma_module(const RootSystem& rs, const Weight& mu,
                                     const std::vector<int>& index_set, int depth = 10) {
  rs.check_weight(mu);
  if (depth < 0) throw DomainError("depth limit must be non-negative");
  std::vector<std::size_t> pos;
  for (int i : index_set) pos.push_back(rs.position(i));
  std::sort(pos.begin(), pos.end());
  pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
  for (std::size_t p : pos) {
    Rational l = rs.label(mu, p);
    if (!is_integral(l) || l < 0)
      throw DomainError("highest weight is not dominant integral on the parabolic index set");
  }
  return Module{ModuleKind::parabolic_verma, rs, mu, pos, depth, {}};
}

inline Module direct_sum_module(std::vector<Module> parts) {
  if (parts.empty()) throw DomainError("direct sum of no modules");
  Module m{ModuleKind::direct_sum, parts.front().rs, {}, {}, 0, std::move(parts)};
  return m;
}

inline Module tensor_product_module(std::vector<Module> parts) {
  if (parts.empty()) throw DomainError("tensor product of no modules");
  for (const auto& p : parts)
    if (p.rs.is_affine())
      throw UnsupportedError("tensor products of affine modules are not supported");
  Module m{ModuleKind::tensor_product, parts.front().rs, {}, {}, 0, std::move(parts)};
  return m;
}

namespace detail {

inline void require_highest_weight_kind(const Module& m) {
  if (m.kind == ModuleKind::direct_sum || m.kind == ModuleKind::tensor_product)
    throw DomainError("operation needs a single highest-weight module");
}

/// Positions of the reflections the multiplicities are invariant under.
inline std::vector<std::size_t> symmetry_positions(const Module& m) {
  switch (m.kind) {
    case ModuleKind::irreducible:
      return reflection_positions(m.rs, std::nullopt);
    case ModuleKind::parabolic_verma:
      return m.parabolic;
    default:
      return {};
  }
}

inline bool dominant_on(const RootSystem& rs, const Weight& w, const std::vector<std::size_t>& pos) {
  for (std::size_t p : pos)
    if (rs.inner(w, rs.simple_roots()[p]) < 0) return false;
  return true;
}

/// Nonnegative integer vector check for mu - lambda.
inline bool below(const RootSystem& rs, const Weight& mu, const Weight& lambda) {
  if (rs.is_affine() && mu.level() != lambda.level()) return false;
  std::vector<Rational> c;
  try {
    c = rs.simple_root_coefficients(mu - lambda);
  } catch (const DomainError&) {
    return false;
  }
  for (const auto& x : c)
    if (!is_integral(x) || x < 0) return false;
  return true;
}

inline void sort_by_rho(const RootSystem& rs, std::vector<Weight>& ws) {
  std::vector<std::pair<Rational, Weight>> keyed;
  keyed.reserve(ws.size());
  for (auto& w : ws) keyed.emplace_back(rs.inner(w, rs.rho()), std::move(w));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  ws.clear();
  for (auto& [k, w] : keyed) ws.push_back(std::move(w));
}

/// Nonnegative label vectors c (over the given positions) with
/// sum c_i * cost_i <= budget.
inline void enumerate_labels(const std::vector<Rational>& cost, const Rational& budget,
                             std::vector<long long>& cur, std::size_t i,
                             std::vector<std::vector<long long>>& out) {
  if (i == cost.size()) {
    out.push_back(cur);
    return;
  }
  Rational left = budget;
  for (long long c = 0; left >= 0; ++c) {
    cur[i] = c;
    enumerate_labels(cost, left, cur, i + 1, out);
    left -= cost[i];
    if (cost[i] == 0) break;
  }
  cur[i] = 0;
}

}  // namespace detail

/// Weights of the module in the closed chamber of its symmetry group
/// (the main chamber for irreducible modules, the W_I chamber for
/// parabolic Verma modules, everything for Verma modules), truncated by
/// depth, ordered by decreasing pairing with rho (ties by weight order).
inline std::vector<Weight> dominant_weights(const Module& m) {
  detail::require_highest_weight_kind(m);
  const RootSystem& rs = m.rs;
  const Weight& mu = m.highest;
  std::vector<Weight> out;
  if (m.kind == ModuleKind::irreducible && !rs.is_affine()) {
    std::vector<Rational> cost;
    for (const auto& w : rs.fundamental_weights()) cost.push_back(rs.inner(w, rs.rho()));
    std::vector<std::vector<long long>> labels;
    std::vector<long long> cur(cost.size(), 0);
    detail::enumerate_labels(cost, rs.inner(mu, rs.rho()), cur, 0, labels);
    const Weight perp = mu - rs.weight_from_labels(rs.dynkin_labels(mu));
    for (const auto& l : labels) {
      Weight w = rs.weight_from_labels(l) + perp;
      if (detail::below(rs, mu, w)) out.push_back(std::move(w));
    }
  } else if (m.kind == ModuleKind::irreducible) {
    const auto& co = rs.comarks();
    const Rational level = mu.level();
    if (level == 0) {
      out.push_back(mu);
      return out;
    }
    std::vector<Rational> cost(co.begin() + 1, co.end());
    std::vector<std::vector<long long>> labels;
    std::vector<long long> cur(cost.size(), 0);
    detail::enumerate_labels(cost, level, cur, 0, labels);
    const RootSystem& fin = rs.finite_system();
    const auto& marks = fin.marks();
    for (const auto& l : labels) {
      std::vector<Rational> full{level};
      for (std::size_t i = 0; i < l.size(); ++i) full[0] -= Rational(co[i + 1]) * l[i];
      for (long long x : l) full.emplace_back(x);
      Weight nu = rs.weight_from_labels(full);
      std::vector<Rational> base;
      try {
        base = fin.simple_root_coefficients(mu.finite_part() - nu.finite_part());
      } catch (const DomainError&) {
        continue;
      }
      Integer n0 = 0;
      bool lattice = true;
      for (std::size_t i = 0; i < base.size(); ++i) {
        if (!is_integral(base[i])) lattice = false;
        Integer need = ceil_of(-base[i] / Rational(marks[i]));
        if (need > n0) n0 = need;
      }
      if (!lattice) continue;
      for (long long n = to_int64(n0); n <= m.depth; ++n)
        out.push_back(nu.with_affine(level, mu.grade() - n));
    }
  } else {
    const auto sym = detail::symmetry_positions(m);
    std::map<Weight, long long> height{{mu, 0}};
    std::vector<Weight> frontier{mu};
    for (int h = 0; h < m.depth; ++h) {
      std::vector<Weight> next;
      for (const auto& w : frontier)
        for (const auto& a : rs.simple_roots()) {
          Weight v = w - a;
          if (height.emplace(v, h + 1).second) next.push_back(std::move(v));
        }
      frontier = std::move(next);
    }
    for (const auto& [w, h] : height)
      if (detail::dominant_on(rs, w, sym)) out.push_back(w);
  }
  detail::sort_by_rho(rs, out);
  return out;
}

/// Sum over the symmetry group of eps(w) e^{w(mu+rho)-rho}: the whole Weyl
/// group for irreducible modules (truncated by depth when affine), W_I for
/// parabolic Verma modules, the identity for Verma modules.
inline FormalElement singular_element(const Module& m) {
  detail::require_highest_weight_kind(m);
  const RootSystem& rs = m.rs;
  if (m.kind == ModuleKind::verma) return FormalElement::exp(m.highest);
  Weight top = m.highest + rs.rho();
  std::function<bool(const Weight&)> keep;
  std::optional<std::vector<std::size_t>> subset;
  if (m.kind == ModuleKind::parabolic_verma) subset = m.parabolic;
  if (rs.is_affine()) {
    if (m.kind == ModuleKind::irreducible && m.highest.level() == 0 && m.highest.finite_part().is_zero())
      return FormalElement::exp(m.highest);
    Rational floor = top.grade() - m.depth;
    keep = [floor](const Weight& w) { return w.grade() >= floor; };
  }
  FormalElement out;
  for (const auto& s : signed_orbit(rs, top, keep, subset)) out.add_term(s.weight - rs.rho(), s.sign);
  return out;
}

namespace detail {

/// Dominant multiplicities with symmetry folding for lookups.
class MultiplicityTable {
 public:
  MultiplicityTable(const Module& m) : m_(m), sym_(symmetry_positions(m)) {}

  Integer lookup(const Weight& w) const {
    if (sym_.empty()) return find(w);
    Weight d = to_dominant(m_.rs, w, sym_).dominant;
    return find(d);
  }

  void set(const Weight& w, Integer v) { table_[w] = std::move(v); }

  FormalElement result() const {
    FormalElement f;
    for (const auto& [w, v] : table_) f.add_term(w, v);
    return f;
  }

 private:
  Integer find(const Weight& w) const {
    auto it = table_.find(w);
    return it == table_.end() ? Integer(0) : it->second;
  }

  const Module& m_;
  std::vector<std::size_t> sym_;
  std::map<Weight, Integer> table_;
};

inline void check_affine_symmetry(const Module& m) {
  if (!m.rs.is_affine()) return;
  auto sym = symmetry_positions(m);
  if (std::find(sym.begin(), sym.end(), std::size_t{0}) != sym.end() && m.highest.level() <= 0 &&
      !(m.highest.level() == 0 && m.highest.finite_part().is_zero()))
    throw DomainError("affine module with alpha_0 symmetry needs positive level");
}

}  // namespace detail

/// Multiplicities of the weights returned by dominant_weights, from
/// ch(M) * prod(1 - e^{-alpha})^mult = (singular element): at a weight
/// xi of the symmetry chamber only the identity term of the singular
/// element survives, so
///   m_xi = [xi == mu] - sum_{w != e} eps(w) m_{xi + rho - w rho}.
inline FormalElement multiplicities_recurrence(const Module& m) {
  detail::require_highest_weight_kind(m);
  detail::check_affine_symmetry(m);
  const RootSystem& rs = m.rs;
  const auto domain = dominant_weights(m);
  const Rational top = rs.inner(m.highest, rs.rho());
  Rational span = 0;
  for (const auto& w : domain) span = std::max(span, top - rs.inner(w, rs.rho()));

  // Terms rho - w rho (w != e) with their signs, sorted by pairing with rho.
  const Weight& rho = rs.rho();
  const Rational rr = rs.inner(rho, rho);
  auto keep = [&rs, &rho, rr, span](const Weight& w) { return rr - rs.inner(w, rho) <= span; };
  std::vector<std::pair<Rational, std::pair<Weight, int>>> shifts;
  for (const auto& s : signed_orbit(rs, rho, keep)) {
    if (s.length == 0) continue;
    Weight d = rho - s.weight;
    Rational key = rs.inner(d, rho);
    shifts.push_back({key, {std::move(d), s.sign}});
  }
  std::sort(shifts.begin(), shifts.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  detail::MultiplicityTable table(m);
  for (const auto& xi : domain) {
    const Rational room = top - rs.inner(xi, rho);
    Integer v = (xi == m.highest) ? 1 : 0;
    for (const auto& [key, term] : shifts) {
      if (key > room) break;
      Integer x = table.lookup(xi + term.first);
      if (x != 0) v -= term.second * x;
    }
    table.set(xi, v);
  }
  return table.result();
}

/// Freudenthal's formula; irreducible modules only.
inline FormalElement multiplicities_freudenthal(const Module& m) {
  if (m.kind != ModuleKind::irreducible)
    throw DomainError("Freudenthal's formula applies to irreducible modules only");
  detail::check_affine_symmetry(m);
  const RootSystem& rs = m.rs;
  const auto domain = dominant_weights(m);
  const Weight& rho = rs.rho();
  const Weight mr = m.highest + rho;
  const Rational mr2 = rs.inner(mr, mr);
  const auto roots = rs.positive_roots(rs.is_affine() ? std::optional<int>(m.depth) : std::nullopt);
  detail::MultiplicityTable table(m);
  for (const auto& lam : domain) {
    if (lam == m.highest) {
      table.set(lam, 1);
      continue;
    }
    Rational sum = 0;
    for (const auto& [alpha, mult] : roots) {
      if (rs.is_affine() && lam.grade() + alpha.grade() > m.highest.grade()) continue;
      Weight cur = lam;
      for (;;) {
        cur += alpha;
        if (rs.is_affine() && cur.grade() > m.highest.grade()) break;
        Integer x = table.lookup(cur);
        if (x == 0) break;
        sum += Rational(mult) * rs.inner(cur, alpha) * Rational(x);
      }
    }
    const Weight lr = lam + rho;
    const Rational den = mr2 - rs.inner(lr, lr);
    if (den == 0) throw DomainError("Freudenthal denominator vanishes at " + to_string(lam));
    table.set(lam, to_integer(2 * sum / den));
  }
  return table.result();
}

inline FormalElement multiplicities(const Module& m, Algorithm algo = Algorithm::recurrence) {
  return algo == Algorithm::recurrence ? multiplicities_recurrence(m)
                                       : multiplicities_freudenthal(m);
}

/// Exact Weyl dimension formula.
inline Integer weyl_dimension(const RootSystem& rs, const Weight& mu) {
  if (rs.is_affine()) throw DomainError("affine modules are infinite-dimensional");
  rs.check_weight(mu);
  for (long long l : integral_labels(rs, mu))
    if (l < 0) throw DomainError("weight " + to_string(mu) + " is not dominant");
  const Weight mr = mu + rs.rho();
  Rational p = 1;
  for (const auto& a : rs.finite_positive_roots()) p *= rs.inner(mr, a) / rs.inner(rs.rho(), a);
  return to_integer(p);
}

inline Integer weyl_dimension(const RootSystem& rs, const std::vector<long long>& labels) {
  return weyl_dimension(rs, rs.weight_from_labels(labels));
}

/// Full character. Finite irreducible modules are expanded over Weyl
/// orbits; affine ones down to the depth; Verma-type modules up to their
/// height bound. `jobs` > 1 expands orbits on worker threads.
inline FormalElement character(const Module& m, Algorithm algo = Algorithm::recurrence,
                               unsigned jobs = 1) {
  if (m.kind == ModuleKind::direct_sum) {
    FormalElement f;
    for (const auto& p : m.parts) f += character(p, algo, jobs);
    return f;
  }
  if (m.kind == ModuleKind::tensor_product) {
    FormalElement f;
    bool first = true;
    for (const auto& p : m.parts) {
      if (p.rs.is_affine())
        throw UnsupportedError("tensor products of affine modules are not supported");
      FormalElement c = character(p, algo, jobs);
      f = first ? c : f * c;
      first = false;
    }
    return f;
  }
  const FormalElement dom = m.kind == ModuleKind::irreducible ? multiplicities(m, algo)
                                                              : multiplicities_recurrence(m);
  if (m.kind == ModuleKind::verma) return dom;
  const RootSystem& rs = m.rs;
  std::optional<Rational> floor;
  if (rs.is_affine()) floor = m.highest.grade() - m.depth;
  std::optional<std::vector<std::size_t>> subset;
  if (m.kind == ModuleKind::parabolic_verma) subset = m.parabolic;

  std::vector<std::pair<Weight, Integer>> items(dom.begin(), dom.end());
  std::vector<FormalElement> partial(std::max(1u, jobs));
  auto work = [&](std::size_t slot) {
    for (std::size_t i = slot; i < items.size(); i += partial.size())
      for (const auto& w : orbit(rs, items[i].first, floor, subset))
        partial[slot].add_term(w, items[i].second);
  };
  if (partial.size() == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t s = 0; s < partial.size(); ++s) threads.emplace_back(work, s);
    for (auto& t : threads) t.join();
  }
  FormalElement out;
  for (const auto& p : partial) out += p;
  if (m.kind == ModuleKind::parabolic_verma) {
    const Weight mu = m.highest;
    const long long depth = m.depth;
    out = out.filtered([&](const Weight& w) {
      Rational h = 0;
      for (const auto& c : rs.simple_root_coefficients(mu - w)) {
        if (c < 0) return false;
        h += c;
      }
      return h <= depth;
    });
  }
  return out;
}

}  // namespace liekit
