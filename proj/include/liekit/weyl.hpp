#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "liekit/errors.hpp"
#include "liekit/root_system.hpp"
#include "liekit/weight.hpp"

namespace liekit {

/// Reflection in the simple root at `position` of rs.simple_roots().
inline Weight reflect(const RootSystem& rs, std::size_t position, const Weight& w) {
  Rational l = rs.label(w, position);
  if (l == 0) return w;
  return w - l * rs.simple_roots()[position];
}

/// Reflection in an arbitrary root of nonzero norm.
inline Weight reflect_in(const RootSystem& rs, const Weight& root, const Weight& w) {
  Rational n = rs.norm2(root);
  if (n == 0) throw DomainError("cannot reflect in the zero-norm root " + to_string(root));
  Rational l = 2 * rs.inner(w, root) / n;
  if (l == 0) return w;
  return w - l * root;
}

/// Applies s_{i1} s_{i2} ... s_{ik} (user indices) to w; the rightmost
/// reflection acts first.
inline Weight apply_word(const RootSystem& rs, const std::vector<int>& word, Weight w) {
  rs.check_weight(w);
  std::vector<std::size_t> pos;
  for (int i : word) pos.push_back(rs.position(i));
  for (auto it = pos.rbegin(); it != pos.rend(); ++it) w = reflect(rs, *it, w);
  return w;
}

struct DominantResult {
  Weight dominant;
  int parity = 1;  // 0 when the input lies on a wall
  std::vector<int> word;  // user indices; apply_word(word, input) == dominant
};

/// All positions of rs, or the listed subset.
inline std::vector<std::size_t> reflection_positions(const RootSystem& rs,
                                                     const std::optional<std::vector<std::size_t>>& subset) {
  if (subset) return *subset;
  std::vector<std::size_t> all(rs.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return all;
}

/// Moves w into the closed main chamber of the group generated by the
/// given reflections (all simple reflections by default), reflecting at
/// the first negative label each time.
inline DominantResult to_dominant(const RootSystem& rs, const Weight& w,
                                  const std::optional<std::vector<std::size_t>>& subset = std::nullopt) {
  rs.check_weight(w);
  const auto pos = reflection_positions(rs, subset);
  if (rs.is_affine() && std::find(pos.begin(), pos.end(), std::size_t{0}) != pos.end() &&
      w.level() <= 0)
    throw DomainError("no dominant representative for an affine weight of level " +
                      format_rational(w.level()));
  DominantResult r{w, 1, {}};
  std::vector<int> rev;
  for (;;) {
    bool moved = false;
    for (std::size_t p : pos) {
      Rational l = rs.label(r.dominant, p);
      if (l < 0) {
        r.dominant -= l * rs.simple_roots()[p];
        rev.push_back(rs.user_index(p));
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  r.word.assign(rev.rbegin(), rev.rend());
  r.parity = (rev.size() % 2 == 0) ? 1 : -1;
  for (std::size_t p : pos)
    if (rs.inner(r.dominant, rs.simple_roots()[p]) == 0) {
      r.parity = 0;
      break;
    }
  return r;
}

/// u(w + rho) - rho for the u making w + rho dominant.
inline DominantResult shifted_dominant(const RootSystem& rs, const Weight& w,
                                       const std::optional<std::vector<std::size_t>>& subset = std::nullopt) {
  DominantResult r = to_dominant(rs, w + rs.rho(), subset);
  r.dominant -= rs.rho();
  return r;
}

/// Weyl orbit by breadth-first closure, under the group generated by
/// `subset` (all simple reflections by default). Affine orbits are infinite
/// and need a grade floor; weights below it are dropped.
inline std::vector<Weight> orbit(const RootSystem& rs, const Weight& w,
                                 std::optional<Rational> grade_floor = std::nullopt,
                                 const std::optional<std::vector<std::size_t>>& subset = std::nullopt) {
  rs.check_weight(w);
  const auto pos = reflection_positions(rs, subset);
  const bool infinite =
      rs.is_affine() && std::find(pos.begin(), pos.end(), std::size_t{0}) != pos.end();
  if (infinite && !grade_floor)
    throw DomainError("the Weyl orbit of an affine weight is infinite without a grade floor");
  Weight start = w;
  if (!infinite || w.level() > 0) start = to_dominant(rs, w, subset).dominant;
  std::set<Weight> seen{start};
  std::deque<Weight> queue{start};
  std::vector<Weight> out{start};
  if (grade_floor && start.grade() < *grade_floor) return {};
  while (!queue.empty()) {
    Weight cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t p : pos) {
      Weight nxt = reflect(rs, p, cur);
      if (grade_floor && nxt.grade() < *grade_floor) continue;
      if (seen.insert(nxt).second) {
        out.push_back(nxt);
        queue.push_back(std::move(nxt));
      }
    }
  }
  return out;
}

struct SignedWeight {
  Weight weight;
  int sign = 1;
  long long length = 0;
};

/// {(w lambda, eps(w))} for a dominant regular lambda, restricted to the
/// group generated by `subset` (all simple reflections by default).
/// `keep` prunes the traversal; it must be monotone (once false along a
/// path moving away from lambda, false further out), as grade and height
/// bounds are.
inline std::vector<SignedWeight> signed_orbit(
    const RootSystem& rs, const Weight& lambda,
    const std::function<bool(const Weight&)>& keep = nullptr,
    const std::optional<std::vector<std::size_t>>& subset = std::nullopt) {
  rs.check_weight(lambda);
  const auto pos = reflection_positions(rs, subset);
  for (std::size_t p : pos)
    if (rs.inner(lambda, rs.simple_roots()[p]) <= 0)
      throw DomainError("signed orbit needs a strictly dominant weight, got " + to_string(lambda));
  if (rs.is_affine() && !keep && std::find(pos.begin(), pos.end(), std::size_t{0}) != pos.end())
    throw DomainError("affine signed orbit needs a pruning bound");
  std::vector<SignedWeight> out;
  if (keep && !keep(lambda)) return out;
  std::set<Weight> seen{lambda};
  out.push_back({lambda, 1, 0});
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (std::size_t p : pos) {
      Weight nxt = reflect(rs, p, out[head].weight);
      if (keep && !keep(nxt)) continue;
      if (seen.insert(nxt).second) {
        SignedWeight s{std::move(nxt), -out[head].sign, out[head].length + 1};
        out.push_back(std::move(s));
      }
    }
  }
  return out;
}

}  // namespace liekit
