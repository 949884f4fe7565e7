#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "liekit/errors.hpp"
#include "liekit/formal_element.hpp"
#include "liekit/modules.hpp"
#include "liekit/rational.hpp"
#include "liekit/root_system.hpp"
#include "liekit/weight.hpp"
#include "liekit/weyl.hpp"

namespace liekit {

/// A subalgebra a of g: its root system written in g's ambient
/// coordinates, plus optional extra Cartan directions (finite vectors)
/// that are kept when weights of g are projected to a.
struct SubalgebraSpec {
  RootSystem system;
  std::vector<Weight> torus;
};

/// Subalgebra generated by the simple roots with the given user indices
/// (1..rank, of the finite part when g is affine).
inline SubalgebraSpec parabolic_subalgebra(const RootSystem& g, const std::vector<int>& index_set) {
  const RootSystem& fin = g.finite_system();
  std::vector<Weight> roots;
  std::set<int> seen;
  for (int i : index_set) {
    if (i < 1 || i > static_cast<int>(fin.rank()))
      throw DomainError("parabolic index " + std::to_string(i) + " out of range 1.." +
                        std::to_string(fin.rank()));
    if (seen.insert(i).second) roots.push_back(fin.simple_roots()[static_cast<std::size_t>(i - 1)]);
  }
  return {RootSystem::from_simple_roots(std::move(roots)), {}};
}

/// Subalgebra with explicit simple roots (finite weights in g's ambient
/// coordinates).
inline SubalgebraSpec explicit_subalgebra(const RootSystem& g, std::vector<Weight> roots,
                                          std::vector<Weight> torus = {}) {
  for (const auto& r : roots)
    if (r.is_affine() || r.dim() != g.ambient_dim())
      throw StructuralError("subalgebra roots must be finite weights of dimension " +
                            std::to_string(g.ambient_dim()));
  for (const auto& t : torus)
    if (t.is_affine() || t.dim() != g.ambient_dim())
      throw StructuralError("torus directions must be finite weights of dimension " +
                            std::to_string(g.ambient_dim()));
  return {RootSystem::from_simple_roots(std::move(roots)), std::move(torus)};
}

/// The Cartan subalgebra of a finite g: no roots, the whole ambient space
/// as torus.
inline SubalgebraSpec cartan_subalgebra(const RootSystem& g) {
  if (g.is_affine()) throw UnsupportedError("Cartan subalgebras of affine algebras are not supported");
  std::vector<Weight> torus;
  for (std::size_t i = 0; i < g.ambient_dim(); ++i) {
    std::vector<Rational> c(g.ambient_dim(), Rational(0));
    c[i] = 1;
    torus.push_back(Weight::finite(std::move(c)));
  }
  return {RootSystem::empty(g.ambient_dim()), std::move(torus)};
}

/// Affine extension of a finite subalgebra, for branching between affine
/// algebras. Only embeddings of index one (same normalization of the
/// highest roots) are supported.
inline SubalgebraSpec affine_subalgebra(const RootSystem& g, const SubalgebraSpec& sub) {
  if (!g.is_affine()) throw DomainError("affine subalgebra needs an affine parent");
  if (sub.system.is_affine()) return sub;
  if (!sub.torus.empty()) throw UnsupportedError("torus directions are not supported for affine branching");
  RootSystem s = affine_extension(sub.system, g.grade_limit());
  if (s.metric() != g.metric())
    throw UnsupportedError("affine embeddings of index other than 1 are not supported");
  return {s, {}};
}

namespace detail {

/// Orthogonal projection onto the span of a set of finite vectors.
class Projector {
 public:
  Projector() = default;
  explicit Projector(std::vector<Weight> basis_in) {
    for (auto& b : basis_in) add(std::move(b));
  }

  /// Projects the finite part; level and grade are kept.
  Weight operator()(const Weight& w) const {
    std::vector<Rational> c(w.dim(), Rational(0));
    if (!basis_.empty()) {
      std::vector<Rational> rhs;
      Weight f = w.finite_part();
      for (const auto& b : basis_) rhs.push_back(inner(f, b));
      for (std::size_t i = 0; i < basis_.size(); ++i) {
        Rational x = 0;
        for (std::size_t j = 0; j < basis_.size(); ++j) x += gram_inv_[i][j] * rhs[j];
        if (x == 0) continue;
        for (std::size_t k = 0; k < c.size(); ++k) c[k] += x * basis_[i][k];
      }
    }
    if (w.is_affine()) return Weight::affine(std::move(c), w.level(), w.grade());
    return Weight::finite(std::move(c));
  }

  bool empty() const { return basis_.empty(); }

 private:
  void add(Weight b) {
    std::vector<Weight> trial = basis_;
    trial.push_back(b);
    RationalMatrix g(trial.size(), std::vector<Rational>(trial.size()));
    for (std::size_t i = 0; i < trial.size(); ++i)
      for (std::size_t j = 0; j < trial.size(); ++j) g[i][j] = inner(trial[i], trial[j]);
    auto inv = inverse(g);
    if (!inv) return;
    basis_ = std::move(trial);
    gram_inv_ = std::move(*inv);
  }

  std::vector<Weight> basis_;
  RationalMatrix gram_inv_;
};

}  // namespace detail

/// g = a (+) a_perp (+) the rest of the Cartan: a_perp is spanned by the
/// finite positive roots of g whose projection to a vanishes.
struct OrthogonalDecomposition {
  RootSystem parent;
  SubalgebraSpec sub;
  RootSystem perp;  // finite, in the finite ambient coordinates of g
  detail::Projector to_sub;
  detail::Projector to_perp;
  Weight defect_sub;   // rho_a - pi_a rho
  Weight defect_perp;  // rho_perp - pi_perp rho (finite)
  std::vector<Weight> perp_positive;  // finite positive roots of g lying in a_perp

  Weight project(const Weight& w) const { return to_sub(w); }
  Weight project_perp(const Weight& w) const { return to_perp(w.finite_part()); }
};

inline OrthogonalDecomposition orthogonal_decomposition(const RootSystem& g, const SubalgebraSpec& sub_in) {
  SubalgebraSpec sub = sub_in;
  if (g.is_affine() && !sub.system.is_affine()) sub = affine_subalgebra(g, sub);
  if (!g.is_affine() && sub.system.is_affine())
    throw DomainError("affine subalgebra of a finite algebra");
  if (sub.system.ambient_dim() != g.ambient_dim())
    throw StructuralError("subalgebra roots live in a space of dimension " +
                          std::to_string(sub.system.ambient_dim()) + ", expected " +
                          std::to_string(g.ambient_dim()));
  if (sub.system.is_affine() && sub.system.metric() != g.metric())
    throw UnsupportedError("affine embeddings of index other than 1 are not supported");

  std::vector<Weight> span;
  for (const auto& r : sub.system.finite_system().simple_roots()) span.push_back(r);
  for (const auto& t : sub.torus) span.push_back(t);
  detail::Projector to_sub(span);

  const RootSystem& gf = g.finite_system();
  std::vector<Weight> perp_pos;
  for (const auto& a : gf.positive_roots())
    if (to_sub(a.root).is_zero()) perp_pos.push_back(a.root);
  // Simple roots of the subsystem: elements that are not a sum of two others.
  std::set<Weight> pos_set(perp_pos.begin(), perp_pos.end());
  std::vector<Weight> perp_simple;
  for (const auto& a : perp_pos) {
    bool decomposable = false;
    for (const auto& b : perp_pos)
      if (!(a == b) && pos_set.count(a - b)) {
        decomposable = true;
        break;
      }
    if (!decomposable) perp_simple.push_back(a);
  }
  RootSystem perp = perp_simple.empty() ? RootSystem::empty(g.ambient_dim())
                                        : RootSystem::from_simple_roots(perp_simple);
  detail::Projector to_perp(perp_simple);

  const Weight& rho = g.rho();
  Weight pa_rho = to_sub(rho);
  Weight d_sub = sub.system.rho() - pa_rho;
  Weight d_perp = perp.rho() - to_perp(rho.finite_part());
  return {g, sub, perp, to_sub, to_perp, d_sub, d_perp, perp_pos};
}

/// Signed fan: gamma_0 and the map gamma -> s(gamma + gamma_0) for the
/// nonzero shifts gamma.
struct Fan {
  Weight gamma0;
  Integer s_gamma0 = -1;
  std::map<Weight, Integer> terms;
};

namespace detail {

inline Integer binomial(long long n, long long k) {
  Integer r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// a-dominant weights that can occur in the restriction of L^mu_g: for
/// affine pairs, every label vector of the right level at every grade down
/// to the limit; for finite pairs, label vectors with norm at most |mu|.
inline std::vector<Weight> sub_dominant_candidates(const RootSystem& g, const RootSystem& a,
                                                   const Weight& mu) {
  std::vector<Weight> out;
  if (g.is_affine()) {
    const Rational k = mu.level();
    if (!is_integral(k)) return out;
    const auto& co = a.comarks();
    std::vector<Rational> cost(co.begin() + 1, co.end());
    std::vector<std::vector<long long>> labels;
    std::vector<long long> cur(cost.size(), 0);
    enumerate_labels(cost, k, cur, 0, labels);
    for (const auto& l : labels) {
      std::vector<Rational> full{k};
      for (std::size_t i = 0; i < l.size(); ++i) full[0] -= Rational(co[i + 1]) * l[i];
      for (long long x : l) full.emplace_back(x);
      Weight nu = a.weight_from_labels(full);
      for (long long n = 0; n <= g.grade_limit(); ++n)
        out.push_back(nu.with_affine(k, mu.grade() - n));
    }
    return out;
  }
  const Rational mm = inner(mu, mu);
  const Rational bound2 = mm * inner(a.rho(), a.rho());
  Integer pq = numerator(bound2) * denominator(bound2);
  Rational bound = make_rational(boost::multiprecision::sqrt(pq) + 1, denominator(bound2));
  std::vector<Rational> cost;
  for (const auto& w : a.fundamental_weights()) cost.push_back(inner(w, a.rho()));
  std::vector<std::vector<long long>> labels;
  std::vector<long long> cur(cost.size(), 0);
  enumerate_labels(cost, bound, cur, 0, labels);
  for (const auto& l : labels) {
    Weight nu = l.empty() ? Weight::zero(g.ambient_dim()) : a.weight_from_labels(l);
    if (inner(nu, nu) <= mm) out.push_back(std::move(nu));
  }
  return out;
}

}  // namespace detail

/// Expands prod over positive roots alpha of g outside a_perp of
/// (1 - e^{-pi(alpha)})^(mult(alpha) - mult_a(pi(alpha))) = -sum s(gamma) e^{-gamma},
/// truncated at the grade limit of g for affine pairs.
inline Fan build_fan(const OrthogonalDecomposition& dec) {
  const RootSystem& g = dec.parent;
  const RootSystem& a = dec.sub.system;
  const int limit = g.is_affine() ? g.grade_limit() : 0;
  const Weight f = dec.project(g.rho());
  auto pair_f = [&](const Weight& v) { return g.inner(v, f); };

  std::set<Weight> perp(dec.perp_positive.begin(), dec.perp_positive.end());
  std::map<Weight, long long> exps;
  for (const auto& [alpha, mult] : g.positive_roots(limit)) {
    if (alpha.grade() == 0 && perp.count(alpha.finite_part())) continue;
    Weight v = dec.project(alpha);
    if (v.is_zero()) throw DomainError("root " + to_string(alpha) + " projects to zero");
    exps[v] += mult;
  }
  for (const auto& [beta, mult] : a.positive_roots(limit)) {
    auto it = exps.find(beta);
    if (it == exps.end()) throw DomainError("subalgebra root " + to_string(beta) + " is not a projected root");
    it->second -= mult;
  }
  FormalElement prod = FormalElement::exp(dec.project(g.zero_weight()));
  const Rational floor = -limit;
  for (const auto& [v, e] : exps) {
    if (e < 0) throw DomainError("negative exponent in the fan product; embedding not supported");
    if (e == 0) continue;
    long long top = e;
    if (v.grade() > 0) top = std::min<long long>(e, static_cast<long long>(to_int64(floor_of(Rational(limit) / v.grade()))));
    FormalElement factor;
    for (long long j = 0; j <= top; ++j)
      factor.add_term(Rational(-j) * v, (j % 2 ? -1 : 1) * detail::binomial(e, j));
    prod = g.is_affine() ? multiply_truncated(prod, factor, floor) : prod * factor;
  }
  for (const auto& [beta, mult] : a.positive_roots(limit))
    if (pair_f(beta) <= 0) throw DomainError("subalgebra root is not positive on the projected Weyl vector");

  Fan fan;
  bool first = true;
  Rational best;
  for (const auto& [w, c] : prod) {
    Weight gamma = -w;
    Rational fv = pair_f(gamma);
    if (first || fv < best) {
      best = fv;
      fan.gamma0 = gamma;
      fan.s_gamma0 = -c;
      first = false;
    }
  }
  if (first) throw DomainError("empty fan product");
  for (const auto& [w, c] : prod) {
    Weight gamma = -w;
    if (!(gamma == fan.gamma0) && pair_f(gamma) == best)
      throw DomainError("lowest vector of the fan is not unique");
  }
  for (const auto& [w, c] : prod) {
    Weight shift = -w - fan.gamma0;
    if (!shift.is_zero()) fan.terms.emplace(std::move(shift), -c);
  }
  return fan;
}

struct SingularTerm {
  Weight anchor;   // pi_a(u(mu + rho) - rho)
  Weight perp_weight;  // highest weight of the a_perp module
  int sign = 1;
  Integer dim = 1;
};

/// Representatives u with pi_perp(u(mu+rho)) - rho_perp in the closed main
/// chamber of a_perp; affine pairs are truncated at the grade limit.
inline std::vector<SingularTerm> select_u(const OrthogonalDecomposition& dec, const Weight& mu) {
  const RootSystem& g = dec.parent;
  g.check_weight(mu);
  if (!g.is_dominant(mu)) throw DomainError("highest weight " + to_string(mu) + " is not dominant");
  const RootSystem& perp = dec.perp;
  std::function<bool(const Weight&)> keep;
  if (g.is_affine()) {
    Rational floor = mu.grade() - g.grade_limit();
    keep = [floor](const Weight& w) { return w.grade() >= floor; };
  }
  std::vector<SingularTerm> out;
  for (const auto& s : signed_orbit(g, mu + g.rho(), keep)) {
    Weight lam = dec.project_perp(s.weight) - perp.rho();
    if (!perp.is_dominant(lam)) continue;
    Rational dim = 1;
    for (const auto& b : perp.positive_roots())
      dim *= perp.inner(lam + perp.rho(), b.root) / perp.inner(perp.rho(), b.root);
    out.push_back({dec.project(s.weight - g.rho()), lam, s.sign, to_integer(dim)});
  }
  return out;
}

struct BranchingResult {
  std::vector<Weight> weights;  // sub-dominant weights, decreasing pairing with pi(rho)
  std::map<Weight, Integer> coefficients;
};

/// Branching coefficients of L^mu_g restricted to a, by the fan recurrence
///   k_xi = -(1/s(gamma_0)) (Psi_{xi - gamma_0} + sum_gamma s(gamma + gamma_0) k_{xi + gamma}),
/// where k at a non-dominant weight is folded into the a chamber by the
/// shifted Weyl action of a.
inline BranchingResult branch(const RootSystem& g, const SubalgebraSpec& sub, const Weight& mu) {
  const OrthogonalDecomposition dec = orthogonal_decomposition(g, sub);
  const RootSystem& a = dec.sub.system;
  if (g.is_affine()) {
    g.check_weight(mu);
    if (mu.level() <= 0) throw DomainError("affine branching needs a highest weight of positive level");
  }
  const Fan fan = build_fan(dec);
  const auto singular = select_u(dec, mu);
  std::map<Weight, Integer> psi;
  for (const auto& t : singular) {
    auto& v = psi[t.anchor];
    v += t.sign * t.dim;
  }

  const Weight f = dec.project(g.rho());
  auto pair_f = [&](const Weight& v) { return g.inner(v, f); };

  // Candidate weights. When every projected simple root pairs positively
  // with f, walk down from pi(mu) by projected simple roots (this keeps
  // exactly the projected weight lattice, zeros included). Otherwise list
  // a-dominant weights by their labels under a norm bound.
  std::vector<Weight> steps;
  bool monotone = !g.is_affine();
  for (const auto& al : g.simple_roots()) {
    Weight v = dec.project(al);
    if (v.is_zero()) continue;
    if (pair_f(v) <= 0) monotone = false;
    if (std::find(steps.begin(), steps.end(), v) == steps.end()) steps.push_back(v);
  }
  std::vector<Weight> candidates;
  bool drop_zeros = false;
  if (monotone) {
    const Rational fmin = -g.inner(mu, to_dominant(g, -f).dominant);
    const Weight top = dec.project(mu);
    std::set<Weight> seen{top};
    std::vector<Weight> queue{top};
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (const auto& st : steps) {
        Weight v = queue[h] - st;
        if (pair_f(v) < fmin) continue;
        if (seen.insert(v).second) queue.push_back(std::move(v));
      }
    for (auto& w : queue)
      if (a.is_dominant(w)) candidates.push_back(std::move(w));
  } else {
    if (!dec.sub.torus.empty())
      throw DomainError("projected simple roots are not positive; torus directions not supported here");
    candidates = detail::sub_dominant_candidates(g, a, mu);
    drop_zeros = !g.is_affine();
  }
  std::vector<std::pair<Rational, Weight>> order;
  for (auto& w : candidates) order.emplace_back(pair_f(w), std::move(w));
  std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first > y.first;
    return x.second < y.second;
  });

  BranchingResult res;
  auto lookup = [&](const Weight& w) -> Integer {
    if (g.is_affine() && w.grade() > mu.grade()) return 0;
    DominantResult d = shifted_dominant(a, w);
    if (d.parity == 0) return 0;
    auto it = res.coefficients.find(d.dominant);
    if (it == res.coefficients.end()) return 0;
    return d.parity * it->second;
  };
  const bool unit = fan.s_gamma0 == 1 || fan.s_gamma0 == -1;
  for (const auto& [fv, xi] : order) {
    Integer acc = 0;
    auto it = psi.find(xi - fan.gamma0);
    if (it != psi.end()) acc += it->second;
    for (const auto& [gamma, s] : fan.terms) {
      Weight eta = xi + gamma;
      if (g.is_affine() && eta.grade() > mu.grade()) continue;
      Integer k = lookup(eta);
      if (k != 0) acc += s * k;
    }
    Integer val;
    if (unit) {
      val = -acc * fan.s_gamma0;
    } else {
      if (acc % fan.s_gamma0 != 0) throw DomainError("branching recurrence produced a non-integer");
      val = -acc / fan.s_gamma0;
    }
    res.coefficients[xi] = val;
    if (!(drop_zeros && val == 0)) res.weights.push_back(xi);
  }
  if (drop_zeros)
    for (auto it = res.coefficients.begin(); it != res.coefficients.end();)
      it = it->second == 0 ? res.coefficients.erase(it) : std::next(it);
  return res;
}

/// Branching by restricting the full character and peeling off characters
/// of irreducible a-modules, highest first. Finite pairs only.
inline BranchingResult branch_by_character(const RootSystem& g, const SubalgebraSpec& sub,
                                           const Weight& mu, Algorithm algo = Algorithm::freudenthal) {
  if (g.is_affine()) throw UnsupportedError("character restriction is implemented for finite algebras only");
  const OrthogonalDecomposition dec = orthogonal_decomposition(g, sub);
  const RootSystem& a = dec.sub.system;
  const Weight f = dec.project(g.rho());
  FormalElement rest;
  for (const auto& [w, m] : character(irreducible_module(g, mu), algo)) rest.add_term(dec.project(w), m);
  BranchingResult res;
  while (!rest.empty()) {
    const Weight* best = nullptr;
    Rational bf;
    for (const auto& [w, m] : rest) {
      Rational v = g.inner(w, f);
      if (!best || v > bf) {
        best = &w;
        bf = v;
      }
    }
    Weight nu = *best;
    Integer c = rest.coefficient(nu);
    if (!a.is_dominant(nu) || c < 0) throw DomainError("restricted character is not a sum of irreducible characters");
    res.weights.push_back(nu);
    res.coefficients[nu] = c;
    FormalElement irr = character(irreducible_module(a, nu), algo);
    if (irr.coefficient(nu) != 1) throw StructuralError("character of " + to_string(nu) + " lacks its highest weight");
    rest -= irr * c;
  }
  return res;
}

/// Decomposes the tensor product of irreducible modules with the given
/// highest weights as the branching to the diagonal subalgebra of
/// g + g + ... + g. Keys are Dynkin labels.
struct TensorDecomposition {
  std::vector<std::vector<long long>> labels;  // in output order
  std::map<std::vector<long long>, Integer> coefficients;
};

inline TensorDecomposition tensor_decompose(const RootSystem& g, const std::vector<Weight>& factors) {
  if (g.is_affine()) throw UnsupportedError("tensor products of affine modules are not supported");
  if (factors.empty()) throw DomainError("tensor product of no factors");
  const std::size_t k = factors.size();
  for (const auto& w : factors) {
    g.check_weight(w);
    irreducible_module(g, w);
  }
  TensorDecomposition out;
  if (k == 1) {
    auto l = integral_labels(g, factors[0]);
    out.labels.push_back(l);
    out.coefficients[l] = 1;
    return out;
  }
  RootSystem big = g;
  for (std::size_t i = 1; i < k; ++i) big = direct_sum(big, g);
  std::vector<Rational> mu;
  for (const auto& w : factors) mu.insert(mu.end(), w.coords().begin(), w.coords().end());
  std::vector<Weight> diag;
  const Rational scale = make_rational(1, static_cast<long long>(k));
  for (const auto& al : g.simple_roots()) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < k; ++i) c.insert(c.end(), al.coords().begin(), al.coords().end());
    diag.push_back(scale * Weight::finite(std::move(c)));
  }
  SubalgebraSpec sub = explicit_subalgebra(big, diag);
  BranchingResult br = branch(big, sub, Weight::finite(mu));
  for (const auto& w : br.weights) {
    auto l = integral_labels(sub.system, w);
    out.labels.push_back(l);
    out.coefficients[l] = br.coefficients.at(w);
  }
  return out;
}

}  // namespace liekit
