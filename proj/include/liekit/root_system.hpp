#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "liekit/errors.hpp"
#include "liekit/rational.hpp"
#include "liekit/weight.hpp"

namespace liekit {

struct RootWithMult {
  Weight root;
  long long mult = 1;
};

/// Simple-series identification of a finite component, e.g. {'B', 2}.
struct SeriesTag {
  char series = 0;
  int rank = 0;
  friend bool operator==(const SeriesTag&, const SeriesTag&) = default;
};

/// Finite (semisimple) or untwisted affine root system. Immutable; copies
/// share the derived data.
///
/// Simple roots are stored in a fixed order. For affine systems alpha_0
/// comes first and the finite simple roots follow. Functions that take a
/// "position" index into simple_roots() directly; functions that take a
/// "user index" use 1..rank for finite systems and 0..rank for affine ones.
///
/// The pairing on an affine system rescales the finite part by metric()
/// so that the highest root has norm 2. Finite systems use the plain
/// Euclidean product of their ambient coordinates.
class RootSystem {
 public:
  RootSystem() : d_(make_finite_data({}, 0, {})) {}

  /// Simple Lie algebra in Bourbaki coordinates.
  static RootSystem simple(char series, int rank) {
    auto roots = bourbaki_roots(series, rank);
    std::size_t dim = roots.empty() ? 0 : roots.front().dim();
    RootSystem rs;
    rs.d_ = make_finite_data(std::move(roots), dim, {SeriesTag{series, rank}});
    return rs;
  }

  /// Finite system given by explicit simple roots in some ambient space.
  static RootSystem from_simple_roots(std::vector<Weight> roots) {
    std::size_t dim = roots.empty() ? 0 : roots.front().dim();
    for (const auto& r : roots) {
      if (r.is_affine()) throw DomainError("explicit simple roots must be finite weights");
      if (r.dim() != dim) throw StructuralError("explicit simple roots differ in dimension");
    }
    RootSystem rs;
    rs.d_ = make_finite_data(std::move(roots), dim, {});
    return rs;
  }

  /// The system without roots in a space of the given dimension.
  static RootSystem empty(std::size_t dim = 0) {
    RootSystem rs;
    rs.d_ = make_finite_data({}, dim, {});
    return rs;
  }

  friend RootSystem direct_sum(const RootSystem& a, const RootSystem& b) {
    if (a.is_affine() || b.is_affine())
      throw UnsupportedError("direct sums are only defined for finite root systems");
    const std::size_t da = a.ambient_dim(), db = b.ambient_dim();
    std::vector<Weight> roots;
    for (const auto& r : a.simple_roots()) {
      auto c = r.coords();
      c.resize(da + db, Rational(0));
      roots.push_back(Weight::finite(std::move(c)));
    }
    for (const auto& r : b.simple_roots()) {
      std::vector<Rational> c(da, Rational(0));
      c.insert(c.end(), r.coords().begin(), r.coords().end());
      roots.push_back(Weight::finite(std::move(c)));
    }
    std::vector<std::optional<SeriesTag>> tags;
    for (const auto* s : {&a, &b})
      for (const auto& t : s->d_->components) tags.push_back(t);
    if (a.rank() == 0 && b.rank() == 0) tags.clear();
    RootSystem rs;
    rs.d_ = make_finite_data(std::move(roots), da + db, std::move(tags));
    return rs;
  }

  /// Untwisted affine extension: prepends alpha_0 = delta - theta.
  friend RootSystem affine_extension(const RootSystem& g, int grade_limit = 10) {
    if (g.is_affine()) throw DomainError("affine extension of an affine system");
    if (!g.is_simple()) throw DomainError("affine extension needs a simple root system");
    if (grade_limit < 0) throw DomainError("grade limit must be non-negative");
    auto d = std::make_shared<Data>();
    d->affine = true;
    d->dim = g.ambient_dim();
    d->finite = std::make_shared<RootSystem>(g);
    d->components = g.d_->components;
    d->grade_limit = grade_limit;
    d->metric = Rational(2) / g.inner(g.highest_root(), g.highest_root());
    const Weight& th = g.highest_root();
    d->simple.push_back(Weight::affine((-th).coords(), 0, 1));
    for (const auto& r : g.simple_roots()) d->simple.push_back(r.with_affine(0, 0));
    RootSystem rs;
    rs.d_ = d;
    rs.finish_affine();
    return rs;
  }

  bool is_affine() const { return d_->affine; }
  /// Rank of the finite part.
  std::size_t rank() const { return is_affine() ? d_->simple.size() - 1 : d_->simple.size(); }
  std::size_t ambient_dim() const { return d_->dim; }
  const std::vector<Weight>& simple_roots() const { return d_->simple; }
  std::size_t size() const { return d_->simple.size(); }
  const Rational& metric() const { return d_->metric; }
  int grade_limit() const { return d_->grade_limit; }

  RootSystem with_grade_limit(int limit) const {
    if (!is_affine()) return *this;
    if (limit < 0) throw DomainError("grade limit must be non-negative");
    auto d = std::make_shared<Data>(*d_);
    d->grade_limit = limit;
    RootSystem rs;
    rs.d_ = d;
    return rs;
  }

  /// The finite root system underlying an affine one (itself if finite).
  const RootSystem& finite_system() const { return is_affine() ? *d_->finite : *this; }

  const std::vector<std::optional<SeriesTag>>& components() const { return d_->components; }

  /// A single simple component (connected Dynkin diagram), nonempty.
  bool is_simple() const {
    return !is_affine() ? d_->connected && !d_->simple.empty() : true;
  }

  std::string name() const {
    std::string s;
    for (std::size_t i = 0; i < d_->components.size(); ++i) {
      if (i) s += "+";
      const auto& t = d_->components[i];
      s += t ? std::string(1, t->series) + std::to_string(t->rank) : std::string("X");
    }
    if (d_->components.empty()) s = rank() == 0 ? "0" : "X";
    if (is_affine()) s += "^";
    return s;
  }

  /// Invariant form of this system (see class comment).
  Rational inner(const Weight& a, const Weight& b) const {
    a.check_compatible(b);
    Rational s = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    if (a.is_affine()) {
      s *= d_->metric;
      s += a.level() * b.grade() + b.level() * a.grade();
    }
    return s;
  }

  Rational norm2(const Weight& a) const { return inner(a, a); }

  /// Embeds a finite weight of the ambient space as a level/grade weight
  /// (finite systems ignore level and grade).
  Weight make_weight(std::vector<Rational> coords, Rational level = 0, Rational grade = 0) const {
    if (coords.size() != ambient_dim())
      throw StructuralError("weight has " + std::to_string(coords.size()) +
                            " coordinates, ambient space has " + std::to_string(ambient_dim()));
    if (is_affine()) return Weight::affine(std::move(coords), std::move(level), std::move(grade));
    return Weight::finite(std::move(coords));
  }

  Weight zero_weight() const { return Weight::zero(ambient_dim(), is_affine()); }
  Weight delta() const {
    if (!is_affine()) throw DomainError("delta exists only for affine systems");
    return Weight::delta(ambient_dim());
  }

  void check_weight(const Weight& w) const {
    if (w.is_affine() != is_affine())
      throw StructuralError(is_affine() ? "expected an affine weight" : "expected a finite weight");
    if (w.dim() != ambient_dim())
      throw StructuralError("weight dimension " + std::to_string(w.dim()) +
                            " does not match ambient dimension " + std::to_string(ambient_dim()));
  }

  /// Position of a user index in simple_roots().
  std::size_t position(int user_index) const {
    int lo = is_affine() ? 0 : 1;
    int hi = static_cast<int>(rank());
    if (user_index < lo || user_index > hi)
      throw DomainError("simple root index " + std::to_string(user_index) + " out of range " +
                        std::to_string(lo) + ".." + std::to_string(hi));
    return static_cast<std::size_t>(user_index - lo);
  }

  int user_index(std::size_t position) const {
    return static_cast<int>(position) + (is_affine() ? 0 : 1);
  }

  const std::vector<std::vector<long long>>& cartan_matrix() const { return d_->cartan; }

  /// Label pairing <w, alpha_j^vee> for the simple root at position j.
  Rational label(const Weight& w, std::size_t j) const {
    return 2 * inner(w, d_->simple[j]) / d_->norms[j];
  }

  std::vector<Rational> dynkin_labels(const Weight& w) const {
    check_weight(w);
    std::vector<Rational> out;
    for (std::size_t j = 0; j < size(); ++j) out.push_back(label(w, j));
    return out;
  }

  bool is_dominant(const Weight& w) const {
    for (std::size_t j = 0; j < size(); ++j)
      if (inner(w, d_->simple[j]) < 0) return false;
    return true;
  }

  bool is_integral(const Weight& w) const {
    for (std::size_t j = 0; j < size(); ++j)
      if (!liekit::is_integral(label(w, j))) return false;
    return true;
  }

  const std::vector<Weight>& fundamental_weights() const { return d_->fundamental; }
  const Weight& rho() const { return d_->rho; }

  Weight weight_from_labels(const std::vector<Rational>& labels) const {
    if (labels.size() != size())
      throw DomainError("expected " + std::to_string(size()) + " Dynkin labels, got " +
                        std::to_string(labels.size()));
    Weight w = zero_weight();
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] != 0) w += labels[i] * d_->fundamental[i];
    return w;
  }

  Weight weight_from_labels(const std::vector<long long>& labels) const {
    std::vector<Rational> r;
    for (long long l : labels) r.emplace_back(l);
    return weight_from_labels(r);
  }

  /// Finite positive roots; for affine systems, the real and imaginary
  /// positive roots of grade at most `limit` (default: grade_limit()).
  std::vector<RootWithMult> positive_roots(std::optional<int> limit = std::nullopt) const {
    if (!is_affine()) {
      std::vector<RootWithMult> out;
      for (const auto& r : d_->positive) out.push_back({r, 1});
      return out;
    }
    const int lim = limit.value_or(grade_limit());
    const auto& fin = d_->finite->d_->positive;
    std::vector<RootWithMult> out;
    for (const auto& a : fin) out.push_back({a.with_affine(0, 0), 1});
    for (int n = 1; n <= lim; ++n) {
      for (const auto& a : fin) {
        out.push_back({(-a).with_affine(0, n), 1});
        out.push_back({a.with_affine(0, n), 1});
      }
    }
    for (int n = 1; n <= lim; ++n)
      out.push_back({Weight::delta(ambient_dim()) * Rational(n), static_cast<long long>(rank())});
    return out;
  }

  /// Finite positive roots (of the finite part, for affine systems).
  const std::vector<Weight>& finite_positive_roots() const {
    return is_affine() ? d_->finite->d_->positive : d_->positive;
  }

  /// Coefficients of w in the basis of simple roots. Finite: w must lie in
  /// the rational span. Affine: w must have level 0.
  std::vector<Rational> simple_root_coefficients(const Weight& w) const {
    check_weight(w);
    if (is_affine()) {
      if (w.level() != 0) throw DomainError("weight of nonzero level is not in the root lattice span");
      const Rational& n0 = w.grade();
      Weight fin = w.finite_part() + n0 * d_->finite->highest_root();
      auto c = d_->finite->simple_root_coefficients(fin);
      c.insert(c.begin(), n0);
      return c;
    }
    std::vector<Rational> rhs;
    for (const auto& a : d_->simple) rhs.push_back(inner(w, a));
    std::vector<Rational> c(size(), Rational(0));
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) c[i] += d_->gram_inv[i][j] * rhs[j];
    Weight back = zero_weight();
    for (std::size_t i = 0; i < size(); ++i) back += c[i] * d_->simple[i];
    if (!(back == w)) throw DomainError("weight " + to_string(w) + " is not in the span of the roots");
    return c;
  }

  /// Sum of the simple-root coefficients.
  Rational height(const Weight& w) const {
    Rational h = 0;
    for (const auto& c : simple_root_coefficients(w)) h += c;
    return h;
  }

  /// Highest root of a simple finite system (of the finite part, if affine).
  const Weight& highest_root() const {
    if (is_affine()) return d_->finite->highest_root();
    if (!is_simple()) throw DomainError("highest root needs a simple root system");
    return d_->theta;
  }

  /// Coefficients a_i of theta in the simple roots. Affine systems
  /// prepend a_0 = 1.
  const std::vector<long long>& marks() const {
    if (!is_affine() && !is_simple()) throw DomainError("marks need a simple root system");
    return d_->marks;
  }

  /// a_i^vee = a_i (alpha_i, alpha_i) / (theta, theta).
  const std::vector<long long>& comarks() const {
    if (!is_affine() && !is_simple()) throw DomainError("comarks need a simple root system");
    return d_->comarks;
  }

  long long dual_coxeter_number() const {
    long long h = 0;
    for (long long c : comarks()) h += c;
    return is_affine() ? h : h + 1;
  }

  /// Level of a weight: its pairing with delta. Zero on finite systems.
  Rational level_of(const Weight& w) const { return is_affine() ? w.level() : Rational(0); }

  friend bool operator==(const RootSystem& a, const RootSystem& b) {
    return a.d_ == b.d_ ||
           (a.d_->affine == b.d_->affine && a.d_->dim == b.d_->dim && a.d_->simple == b.d_->simple);
  }

 private:
  struct Data {
    bool affine = false;
    std::size_t dim = 0;
    std::vector<Weight> simple;
    std::vector<std::optional<SeriesTag>> components;
    std::shared_ptr<const RootSystem> finite;
    Rational metric{1};
    int grade_limit = 10;
    std::vector<Rational> norms;
    std::vector<std::vector<long long>> cartan;
    RationalMatrix gram_inv;
    std::vector<Weight> fundamental;
    Weight rho;
    std::vector<Weight> positive;
    bool connected = false;
    Weight theta;
    std::vector<long long> marks;
    std::vector<long long> comarks;
  };

  std::shared_ptr<const Data> d_;

  static std::vector<Weight> bourbaki_roots(char series, int n) {
    auto unit = [](std::size_t dim, std::vector<std::pair<std::size_t, Rational>> entries) {
      std::vector<Rational> c(dim, Rational(0));
      for (auto& [i, v] : entries) c[i] = v;
      return Weight::finite(std::move(c));
    };
    const Rational h = make_rational(1, 2);
    std::vector<Weight> r;
    auto bad = [&] {
      return DomainError("no simple Lie algebra " + std::string(1, series) + std::to_string(n));
    };
    switch (series) {
      case 'A': {
        if (n < 1) throw bad();
        for (int i = 0; i < n; ++i) r.push_back(unit(n + 1, {{i, 1}, {i + 1, -1}}));
        break;
      }
      case 'B':
      case 'C':
      case 'D': {
        if ((series != 'D' && n < 2) || (series == 'D' && n < 3)) throw bad();
        for (int i = 0; i + 1 < n; ++i) r.push_back(unit(n, {{i, 1}, {i + 1, -1}}));
        if (series == 'B') r.push_back(unit(n, {{n - 1, 1}}));
        if (series == 'C') r.push_back(unit(n, {{n - 1, 2}}));
        if (series == 'D') r.push_back(unit(n, {{n - 2, 1}, {n - 1, 1}}));
        break;
      }
      case 'E': {
        if (n < 6 || n > 8) throw bad();
        std::vector<Weight> e8;
        e8.push_back(unit(8, {{0, h}, {1, -h}, {2, -h}, {3, -h}, {4, -h}, {5, -h}, {6, -h}, {7, h}}));
        e8.push_back(unit(8, {{0, 1}, {1, 1}}));
        for (int i = 0; i < 6; ++i) e8.push_back(unit(8, {{i, -1}, {i + 1, 1}}));
        r.assign(e8.begin(), e8.begin() + n);
        break;
      }
      case 'F': {
        if (n != 4) throw bad();
        r.push_back(unit(4, {{1, 1}, {2, -1}}));
        r.push_back(unit(4, {{2, 1}, {3, -1}}));
        r.push_back(unit(4, {{3, 1}}));
        r.push_back(unit(4, {{0, h}, {1, -h}, {2, -h}, {3, -h}}));
        break;
      }
      case 'G': {
        if (n != 2) throw bad();
        r.push_back(unit(3, {{0, 1}, {1, -1}}));
        r.push_back(unit(3, {{0, -2}, {1, 1}, {2, 1}}));
        break;
      }
      default:
        throw DomainError("unknown series '" + std::string(1, series) + "'");
    }
    return r;
  }

  static std::shared_ptr<const Data> make_finite_data(std::vector<Weight> roots, std::size_t dim,
                                                      std::vector<std::optional<SeriesTag>> tags) {
    auto d = std::make_shared<Data>();
    d->dim = dim;
    d->simple = std::move(roots);
    d->components = std::move(tags);
    const std::size_t r = d->simple.size();
    auto dot = [](const Weight& a, const Weight& b) { return liekit::inner(a, b); };

    RationalMatrix gram(r, std::vector<Rational>(r));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) gram[i][j] = dot(d->simple[i], d->simple[j]);
      if (gram[i][i] == 0) throw DomainError("simple root " + to_string(d->simple[i]) + " has zero norm");
      d->norms.push_back(gram[i][i]);
    }
    auto inv = inverse(gram);
    if (!inv) throw DomainError("simple roots are linearly dependent");
    d->gram_inv = *inv;

    RationalMatrix cartan_q(r, std::vector<Rational>(r));
    d->cartan.assign(r, std::vector<long long>(r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        Rational a = 2 * gram[i][j] / gram[j][j];
        if (!liekit::is_integral(a)) throw DomainError("Cartan matrix entry is not an integer");
        cartan_q[i][j] = a;
        d->cartan[i][j] = to_int64(numerator(a));
      }
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        if (i == j) continue;
        long long p = d->cartan[i][j] * d->cartan[j][i];
        if (d->cartan[i][j] > 0 || p < 0 || p > 3)
          throw DomainError("simple roots do not form a crystallographic root basis");
      }

    auto cinv = *inverse(cartan_q);
    for (std::size_t i = 0; i < r; ++i) {
      Weight w = Weight::zero(dim);
      for (std::size_t k = 0; k < r; ++k)
        if (cinv[i][k] != 0) w += cinv[i][k] * d->simple[k];
      d->fundamental.push_back(std::move(w));
    }
    d->rho = Weight::zero(dim);
    for (const auto& w : d->fundamental) d->rho += w;

    // Positive roots as integer coefficient vectors, grown by height with
    // root strings: beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0.
    using Coeffs = std::vector<long long>;
    std::set<Coeffs> seen;
    std::vector<Coeffs> layer;
    for (std::size_t i = 0; i < r; ++i) {
      Coeffs c(r, 0);
      c[i] = 1;
      seen.insert(c);
      layer.push_back(c);
    }
    std::vector<Coeffs> all = layer;
    while (!layer.empty()) {
      std::set<Coeffs> next;
      for (const auto& b : layer) {
        for (std::size_t i = 0; i < r; ++i) {
          long long pair = 0;
          for (std::size_t k = 0; k < r; ++k) pair += b[k] * d->cartan[k][i];
          long long p = 0;
          Coeffs down = b;
          while (down[i] > 0) {
            --down[i];
            if (!seen.count(down)) break;
            ++p;
          }
          if (p - pair > 0) {
            Coeffs up = b;
            ++up[i];
            if (!seen.count(up)) next.insert(up);
          }
        }
      }
      layer.assign(next.begin(), next.end());
      std::sort(layer.begin(), layer.end(), std::greater<>());
      for (const auto& c : layer) {
        seen.insert(c);
        all.push_back(c);
      }
    }
    long long max_height = 0;
    std::size_t max_at = 0;
    for (std::size_t k = 0; k < all.size(); ++k) {
      Weight w = Weight::zero(dim);
      long long ht = 0;
      for (std::size_t i = 0; i < r; ++i) {
        if (all[k][i]) w += Rational(all[k][i]) * d->simple[i];
        ht += all[k][i];
      }
      if (ht > max_height) {
        max_height = ht;
        max_at = k;
      }
      d->positive.push_back(std::move(w));
    }

    // Connected iff the Dynkin graph has a single component.
    if (r > 0) {
      std::vector<bool> reach(r, false);
      std::vector<std::size_t> stack{0};
      reach[0] = true;
      while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < r; ++j)
          if (!reach[j] && d->cartan[i][j] != 0) {
            reach[j] = true;
            stack.push_back(j);
          }
      }
      d->connected = std::all_of(reach.begin(), reach.end(), [](bool b) { return b; });
    }
    if (d->connected) {
      d->theta = d->positive[max_at];
      d->marks = all[max_at];
      const Rational th2 = dot(d->theta, d->theta);
      for (std::size_t i = 0; i < r; ++i)
        d->comarks.push_back(to_int64(to_integer(Rational(d->marks[i]) * d->norms[i] / th2)));
    }
    if (d->components.empty() && r > 0) d->components.push_back(std::nullopt);
    return d;
  }

  void finish_affine() {
    auto d = std::const_pointer_cast<Data>(d_);
    const RootSystem& g = *d->finite;
    const std::size_t r = d->simple.size();
    d->norms.clear();
    for (const auto& a : d->simple) d->norms.push_back(inner(a, a));
    d->cartan.assign(r, std::vector<long long>(r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        d->cartan[i][j] = to_int64(to_integer(2 * inner(d->simple[i], d->simple[j]) / d->norms[j]));
    d->marks = g.d_->marks;
    d->marks.insert(d->marks.begin(), 1);
    d->comarks = g.d_->comarks;
    d->comarks.insert(d->comarks.begin(), 1);
    d->fundamental.clear();
    d->fundamental.push_back(Weight::omega0(d->dim));
    for (std::size_t i = 0; i < g.size(); ++i)
      d->fundamental.push_back(g.d_->fundamental[i].with_affine(d->comarks[i + 1], 0));
    d->rho = g.rho().with_affine(g.dual_coxeter_number(), 0);
    d->connected = true;
    d->theta = g.highest_root();
  }
};

}  // namespace liekit
