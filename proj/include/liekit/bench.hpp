#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "liekit/branching.hpp"
#include "liekit/errors.hpp"
#include "liekit/modules.hpp"
#include "liekit/root_system.hpp"

namespace liekit {

enum class BenchSuite { finite_mults, branching };

/// One timing row. For finite-mults the columns are the recurrence and
/// Freudenthal; for branching the injection fan and character restriction.
struct BenchRow {
  int size = 0;
  std::vector<long long> labels;
  std::size_t weights = 0;  // dominant weights of the module
  double seconds_a = 0;
  double seconds_b = 0;
};

struct BenchTable {
  BenchSuite suite;
  std::string column_a, column_b;
  std::vector<BenchRow> rows;
};

inline BenchSuite parse_bench_suite(const std::string& s) {
  if (s == "finite-mults") return BenchSuite::finite_mults;
  if (s == "branching") return BenchSuite::branching;
  throw UsageError("unknown bench suite '" + s + "' (finite-mults | branching)");
}

inline std::vector<int> default_bench_sizes(BenchSuite s) {
  if (s == BenchSuite::finite_mults) return {1, 2, 3, 4, 5, 6};
  return {1, 2, 3};
}

namespace detail {

template <class F>
double seconds_of(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace detail

/// finite-mults: B2 with highest weight [n, n].
/// branching: B4 with highest weight [n, 0, 0, 1] restricted to the B3
/// generated by simple roots 2, 3, 4.
inline BenchTable run_bench(BenchSuite suite, const std::vector<int>& sizes) {
  BenchTable t{suite, "", "", {}};
  for (int n : sizes)
    if (n < 0) throw UsageError("bench sizes must be non-negative");
  if (suite == BenchSuite::finite_mults) {
    t.column_a = "recurrence";
    t.column_b = "freudenthal";
    const RootSystem b2 = RootSystem::simple('B', 2);
    for (int n : sizes) {
      BenchRow r{n, {n, n}, 0, 0, 0};
      const Module m = irreducible_module(b2, b2.weight_from_labels(r.labels));
      FormalElement x, y;
      r.seconds_a = detail::seconds_of([&] { x = multiplicities_recurrence(m); });
      r.seconds_b = detail::seconds_of([&] { y = multiplicities_freudenthal(m); });
      if (!(x == y)) throw Error("bench: the two multiplicity algorithms disagree");
      r.weights = x.size();
      t.rows.push_back(std::move(r));
    }
  } else {
    t.column_a = "fan";
    t.column_b = "restriction";
    const RootSystem b4 = RootSystem::simple('B', 4);
    const SubalgebraSpec sub = parabolic_subalgebra(b4, {2, 3, 4});
    for (int n : sizes) {
      BenchRow r{n, {n, 0, 0, 1}, 0, 0, 0};
      const Weight mu = b4.weight_from_labels(r.labels);
      r.weights = dominant_weights(irreducible_module(b4, mu)).size();
      BranchingResult x, y;
      r.seconds_a = detail::seconds_of([&] { x = branch(b4, sub, mu); });
      r.seconds_b = detail::seconds_of([&] { y = branch_by_character(b4, sub, mu); });
      for (const auto& [w, c] : x.coefficients) {
        auto it = y.coefficients.find(w);
        if ((it == y.coefficients.end() ? Integer(0) : it->second) != c)
          throw Error("bench: the two branching methods disagree");
      }
      t.rows.push_back(std::move(r));
    }
  }
  return t;
}

}  // namespace liekit
