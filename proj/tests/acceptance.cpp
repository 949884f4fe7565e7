// Acceptance run: one PASS/FAIL line per criterion. Criterion 9 is
// diagnostic and never fails the run.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "liekit/liekit.hpp"
#include "oracles.hpp"
#include "reference_values.hpp"

using namespace liekit;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<Verdict()>& body,
               bool gating = true) {
  auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_time = secs < limit_seconds;
  bool ok = v.ok && in_time;
  const char* tag = ok ? "PASS" : gating ? "FAIL" : "DIAG";
  if (!ok && gating) ++failures;
  std::printf("[%s] %2d %s (%.2f s, limit %.0f s)%s%s\n", tag, id, title.c_str(), secs, limit_seconds,
              v.detail.empty() ? "" : ": ", v.detail.c_str());
  if (!in_time) std::printf("       time limit exceeded\n");
  std::fflush(stdout);
}

reference::Series as_map(const std::vector<QSeries>& series) {
  reference::Series out;
  for (const auto& s : series) {
    std::vector<long long> c;
    for (const auto& x : s.coeffs) c.push_back(to_int64(x));
    out[s.class_labels] = c;
  }
  return out;
}

Verdict compare_series(const reference::Series& got, const reference::Series& want) {
  if (got == want) return {true, std::to_string(got.size()) + " series match"};
  std::ostringstream d;
  d << "mismatch";
  for (const auto& [k, v] : want) {
    auto it = got.find(k);
    if (it == got.end())
      d << "; class missing";
    else if (it->second != v)
      d << "; class differs";
  }
  return {false, d.str()};
}

std::string labels_text(const std::vector<long long>& l) {
  std::string s = "[";
  for (std::size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + std::to_string(l[i]);
  return s + "]";
}

Rational height(const RootSystem& rs, const Weight& w) {
  Rational h = 0;
  for (const auto& c : rs.simple_root_coefficients(w)) h += c;
  return h;
}

}  // namespace

int main() {
  criterion(1, "Weyl vector of B2", 1, [] {
    Weight rho = RootSystem::simple('B', 2).rho();
    return Verdict{rho == oracle::fw({"3/2", "1/2"}), to_string(rho)};
  });

  criterion(2, "Weyl words on B2 and A3", 1, [] {
    RootSystem b2 = RootSystem::simple('B', 2), a3 = RootSystem::simple('A', 3);
    Weight x = apply_word(b2, {1, 2, 1}, Weight::finite({1, 0}));
    Weight y = apply_word(a3, {2, 3, 2}, a3.weight_from_labels(std::vector<long long>{-1, -2, -1}));
    bool ok = x == Weight::finite({-1, 0}) && y == Weight::finite({-2, 2, 1, -1}) &&
              a3.dynkin_labels(y) == std::vector<Rational>{-4, 1, 2};
    return Verdict{ok, to_string(x) + ", " + to_string(y)};
  });

  criterion(3, "formal product support and multiplicities", 1, [] {
    FormalElement x({Weight::finite({1, 1}), Weight::finite({0, 0})}, {1, 2});
    FormalElement p = x * (Integer(2) * x.shifted(Weight::finite({1, 0})));
    bool ok = p.weights() == std::vector<Weight>{Weight::finite({1, 0}), Weight::finite({2, 1}), Weight::finite({3, 2})} &&
              p.multiplicities() == std::vector<Integer>{8, 8, 2};
    return Verdict{ok, "{8, 8, 2}"};
  });

  criterion(4, "orbit of rho(B4) and fan of B2 in B4", 10, [] {
    RootSystem b4 = RootSystem::simple('B', 4);
    std::size_t orbit_size = orbit(b4, b4.rho()).size();
    auto dec = orthogonal_decomposition(
        b4, explicit_subalgebra(b4, {Weight::finite({1, -1, 0, 0}), Weight::finite({0, 1, 0, 0})}));
    std::size_t fan = build_fan(dec).terms.size();
    return Verdict{orbit_size == 384 && fan == 24,
                   "orbit " + std::to_string(orbit_size) + ", fan " + std::to_string(fan)};
  });

  criterion(5, "fourth tensor power of the B2 vector module", 60, [] {
    RootSystem b2 = RootSystem::simple('B', 2);
    Weight v = b2.weight_from_labels(std::vector<long long>{1, 0});
    TensorDecomposition t = tensor_decompose(b2, {v, v, v, v});
    const std::vector<std::pair<std::vector<long long>, long long>> want{
        {{4, 0}, 1}, {{2, 2}, 3}, {{3, 0}, 0}, {{0, 4}, 2}, {{1, 2}, 3},
        {{2, 0}, 6}, {{0, 2}, 6}, {{1, 0}, 1}, {{0, 0}, 3}};
    const std::vector<long long> dims{55, 81, 30, 35, 35, 14, 10, 5, 1};
    bool ok = t.labels.size() == want.size();
    Integer total = 0;
    std::string text;
    for (std::size_t i = 0; ok && i < want.size(); ++i) {
      ok = t.labels[i] == want[i].first && t.coefficients.at(t.labels[i]) == want[i].second &&
           weyl_dimension(b2, t.labels[i]) == dims[i];
      total += t.coefficients.at(t.labels[i]) * weyl_dimension(b2, t.labels[i]);
      text += (i ? " " : "") + labels_text(t.labels[i]) + ":" + t.coefficients.at(t.labels[i]).str();
    }
    ok = ok && total == 625;
    return Verdict{ok, text + ", sum f*dim = " + total.str()};
  });

  criterion(6, "A2^ string functions of [1,1,2] to q^10", 600, [] {
    return compare_series(as_map(string_functions(affine_extension(RootSystem::simple('A', 2)), {1, 1, 2}, 10)),
                          reference::a2_string_112);
  });

  criterion(7, "G2^ string functions of [1,1,0] to q^7", 600, [] {
    return compare_series(as_map(string_functions(affine_extension(RootSystem::simple('G', 2)), {1, 1, 0}, 7)),
                          reference::g2_string_110);
  });

  criterion(8, "A1^ in B2^ branching functions of [1,1,1] to q^10", 900, [] {
    RootSystem b2 = affine_extension(RootSystem::simple('B', 2));
    SubalgebraSpec sub = explicit_subalgebra(b2.finite_system(), {Weight::finite({1, 1})});
    return compare_series(as_map(branching_functions(b2, sub, {1, 1, 1}, 10)), reference::b2_a1_branching_111);
  });

  criterion(
      9, "C3^ to affine C2 on alpha_2, alpha_3, hw [2,0,0,0], to q^7 (diagnostic)", 600,
      [] {
        RootSystem c3 = affine_extension(RootSystem::simple('C', 3));
        auto got = as_map(branching_functions(c3, parabolic_subalgebra(c3, {2, 3}), {2, 0, 0, 0}, 7));
        Verdict v = compare_series(got, reference::c3_c2_branching_2000);
        if (v.ok) return v;
        std::ostringstream d;
        d << "no exact match (open question: signed reference series, label convention unclear)\n";
        for (const auto& [k, c] : got) {
          d << "       computed " << labels_text(k) << " :";
          for (long long x : c) d << " " << x;
          d << "\n";
        }
        for (const auto& [k, c] : reference::c3_c2_branching_2000) {
          d << "       reference " << labels_text(k) << " :";
          for (long long x : c) d << " " << x;
          d << "\n";
        }
        bool nonneg = true;
        for (const auto& [k, c] : got)
          for (long long x : c) nonneg = nonneg && x >= 0;
        d << "       computed coefficients are " << (nonneg ? "all non-negative" : "not all non-negative")
          << "; every class has level 2";
        return Verdict{false, d.str()};
      },
      false);

  criterion(10, "property suite", 600, [] {
    std::ostringstream d;
    bool ok = true;
    auto check = [&](const char* tag, bool good) {
      d << tag << (good ? " ok" : " FAILED") << "; ";
      ok = ok && good;
    };

    // (a) recurrence equals Freudenthal.
    {
      bool good = true;
      int count = 0;
      RootSystem a1 = RootSystem::simple('A', 1);
      std::vector<std::pair<RootSystem, std::vector<long long>>> suite;
      for (long long m = 0; m <= 6; ++m) suite.push_back({a1, {m}});
      for (char s : {'A', 'B', 'G'}) {
        RootSystem g = RootSystem::simple(s, 2);
        for (long long a = 0; a <= 3; ++a)
          for (long long b = 0; a + b <= 3; ++b) suite.push_back({g, {a, b}});
      }
      RootSystem aff = affine_extension(a1, 10);
      for (const auto& l : std::vector<std::vector<long long>>{{1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}})
        suite.push_back({aff, l});
      for (const auto& [g, l] : suite) {
        Module m = irreducible_module(g, g.weight_from_labels(l));
        good = good && multiplicities_recurrence(m) == multiplicities_freudenthal(m);
        ++count;
      }
      check(("(a) " + std::to_string(count) + " modules").c_str(), good && count >= 35);
    }
    // (b) denominator identity.
    {
      bool good = true;
      for (char s : {'A', 'B'}) {
        RootSystem g = RootSystem::simple(s, 2);
        FormalElement prod = FormalElement::exp(g.zero_weight());
        for (const auto& r : g.positive_roots())
          prod = prod * (FormalElement::exp(g.zero_weight()) - FormalElement::exp(-r.root));
        FormalElement alt;
        for (const auto& [w, sign] : oracle::signed_orbit(g.simple_roots(), g.rho())) alt.add_term(w - g.rho(), sign);
        good = good && prod == alt;
      }
      check("(b)", good);
    }
    // (c) Verma multiplicities against Kostant partitions.
    {
      bool good = true;
      std::vector<std::pair<RootSystem, std::vector<Weight>>> cases{
          {RootSystem::simple('A', 2), oracle::positive_roots_a2()},
          {RootSystem::simple('B', 2), oracle::positive_roots_b2()}};
      for (const auto& [g, roots] : cases) {
        Weight mu = g.weight_from_labels(std::vector<long long>{1, 1});
        for (const auto& [w, m] : character(verma_module(g, mu, 6)))
          good = good && m == oracle::kostant(roots, mu - w);
      }
      check("(c)", good);
    }
    // (d) dimension formula.
    {
      bool good = true;
      for (char s : {'A', 'B', 'G'}) {
        RootSystem g = RootSystem::simple(s, 2);
        for (long long a = 0; a <= 3; ++a)
          for (long long b = 0; a + b <= 3; ++b)
            good = good && character(irreducible_module(g, g.weight_from_labels(std::vector<long long>{a, b}))).total() ==
                               weyl_dimension(g, std::vector<long long>{a, b});
      }
      check("(d)", good);
    }
    // (e) character restriction equals the fan recurrence on B2 in B4.
    {
      bool good = true;
      RootSystem b4 = RootSystem::simple('B', 4);
      SubalgebraSpec sub = explicit_subalgebra(b4, {Weight::finite({1, -1, 0, 0}), Weight::finite({0, 1, 0, 0})});
      for (const auto& l : std::vector<std::vector<long long>>{
               {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {1, 0, 1, 0}, {2, 0, 0, 1}}) {
        Weight mu = b4.weight_from_labels(l);
        auto fan = branch(b4, sub, mu).coefficients;
        auto chr = branch_by_character(b4, sub, mu).coefficients;
        for (const auto& [w, c] : fan) {
          auto it = chr.find(w);
          good = good && (it == chr.end() ? Integer(0) : it->second) == c;
        }
        for (const auto& [w, c] : chr) good = good && fan.count(w) && fan.at(w) == c;
      }
      check("(e)", good);
    }
    // (f) parabolic Verma degenerations.
    {
      bool good = true;
      for (char s : {'A', 'B'}) {
        RootSystem g = RootSystem::simple(s, 2);
        Weight mu = g.weight_from_labels(std::vector<long long>{1, 2});
        good = good && character(parabolic_verma_module(g, mu, {}, 5)) == character(verma_module(g, mu, 5));
        FormalElement irr = character(irreducible_module(g, mu)).filtered(
            [&](const Weight& w) { return height(g, mu - w) <= 5; });
        good = good && character(parabolic_verma_module(g, mu, {1, 2}, 5)) == irr;
      }
      check("(f)", good);
    }
    return Verdict{ok, d.str()};
  });

  criterion(11, "benchmark tables for both suites", 600, [] {
    bool ok = true;
    std::ostringstream d;
    BenchTable f = run_bench(BenchSuite::finite_mults, {1, 2, 3, 4, 5, 6});
    BenchTable b = run_bench(BenchSuite::branching, {1, 2, 3});
    std::size_t last = 0;
    for (const auto& r : f.rows) {
      ok = ok && std::isfinite(r.seconds_a) && std::isfinite(r.seconds_b) && r.weights >= last;
      last = r.weights;
    }
    for (const auto& r : b.rows) ok = ok && std::isfinite(r.seconds_a) && std::isfinite(r.seconds_b);
    ok = ok && f.rows.size() == 6 && b.rows.size() == 3;
    d << f.column_a << "/" << f.column_b << " at n=6: " << f.rows.back().seconds_a << "/" << f.rows.back().seconds_b
      << " s; " << b.column_a << "/" << b.column_b << " at n=3: " << b.rows.back().seconds_a << "/"
      << b.rows.back().seconds_b << " s";
    return Verdict{ok, d.str()};
  });

  std::printf("%s: %d gating criteria failed\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
