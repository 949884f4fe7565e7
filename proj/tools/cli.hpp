#pragma once

#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "liekit/liekit.hpp"

namespace liekit::cli {

enum class Format { text, json };

struct Options {
  std::string algebra;
  std::vector<std::string> labels;
  std::string sub_index;
  std::string sub_roots;
  int limit = 10;
  std::string algorithm = "recurrence";
  std::string format = "text";
  unsigned jobs = 1;
  std::string module = "irreducible";
  std::string parabolic;
  int depth = 6;
  int power = 1;
  std::string suite;
  std::string sizes;
  bool sizes_given = false;
};

inline int default_limit() {
  if (const char* env = std::getenv("LIEKIT_GRADE_LIMIT")) {
    std::string s(env);
    try {
      std::size_t used = 0;
      int v = std::stoi(s, &used);
      if (used == s.size() && v >= 1) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("LIEKIT_GRADE_LIMIT must be a positive integer, got '" + s + "'");
  }
  return 10;
}

inline std::string join_rationals(const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.dim(); ++i) {
    if (i) s += ", ";
    s += format_rational(w[i]);
  }
  if (w.is_affine()) s += "; level " + format_rational(w.level()) + ", grade " + format_rational(w.grade());
  return s;
}

inline std::string bracket(const std::vector<long long>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {
    fmt_ = o.format == "json" ? Format::json : Format::text;
    algo_ = o.algorithm == "freudenthal" ? Algorithm::freudenthal : Algorithm::recurrence;
  }

  void roots() {
    const RootSystem g = algebra();
    Json res = Json::array();
    for (const auto& r : g.positive_roots(g.is_affine() ? std::optional<int>(o_.limit) : std::nullopt)) {
      if (fmt_ == Format::json) {
        res.push_back({{"root", weight_to_json(r.root)}, {"mult", r.mult}});
      } else {
        out_ << to_string(r.root);
        if (r.mult != 1) out_ << " x" << r.mult;
        out_ << "\n";
      }
    }
    emit("roots", res);
  }

  void cartan() {
    const RootSystem g = algebra();
    if (fmt_ == Format::json) return emit("cartan", g.cartan_matrix());
    for (const auto& row : g.cartan_matrix()) {
      for (std::size_t j = 0; j < row.size(); ++j) out_ << (j ? " " : "") << std::setw(2) << row[j];
      out_ << "\n";
    }
  }

  void rho() {
    const RootSystem g = algebra();
    if (fmt_ == Format::json) return emit("rho", weight_to_json(g.rho()));
    out_ << join_rationals(g.rho()) << "\n";
  }

  void mults() {
    const RootSystem g = algebra();
    const Module m = module(g);
    print_weights("mults", g, multiplicities(m, m.kind == ModuleKind::irreducible ? algo_ : Algorithm::recurrence));
  }

  void character() {
    const RootSystem g = algebra();
    print_weights("character", g, liekit::character(module(g), algo_, o_.jobs));
  }

  void dim() {
    const RootSystem g = algebra();
    if (g.is_affine()) throw DomainError("affine irreducible modules are infinite-dimensional");
    Integer d = weyl_dimension(g, single_labels(g));
    if (fmt_ == Format::json) return emit("dim", integer_to_json(d));
    out_ << d.str() << "\n";
  }

  void branch() {
    const RootSystem g = algebra();
    const SubalgebraSpec sub = subalgebra(g);
    const Weight mu = g.weight_from_labels(single_labels(g));
    const BranchingResult br = liekit::branch(g, sub, mu);
    const RootSystem& a = g.is_affine() ? affine_subalgebra(g, sub).system : sub.system;
    Json res = Json::array();
    for (const auto& w : br.weights) {
      const Integer& c = br.coefficients.at(w);
      std::vector<long long> l = integral_labels(a, w);
      if (fmt_ == Format::json) {
        res.push_back({{"weight", weight_to_json(w)}, {"labels", l}, {"coeff", integer_to_json(c)}});
      } else {
        out_ << bracket(l);
        if (g.is_affine()) out_ << " grade " << format_rational(w.grade());
        if (!sub.torus.empty()) out_ << " " << to_string(w);
        out_ << " : " << c.str() << "\n";
      }
    }
    emit("branch", res);
  }

  void tensor() {
    const RootSystem g = algebra();
    if (o_.labels.empty()) throw UsageError("tensor needs --labels");
    if (o_.power < 1) throw UsageError("--power must be at least 1");
    std::vector<Weight> factors;
    for (const auto& s : o_.labels) factors.push_back(g.weight_from_labels(checked_labels(g, s)));
    if (o_.power > 1) {
      if (factors.size() != 1) throw UsageError("--power takes a single --labels");
      factors.assign(static_cast<std::size_t>(o_.power), factors.front());
    }
    const TensorDecomposition t = tensor_decompose(g, factors);
    Json res = Json::array();
    for (const auto& l : t.labels) {
      const Integer& c = t.coefficients.at(l);
      if (fmt_ == Format::json)
        res.push_back({{"labels", l}, {"coeff", integer_to_json(c)}});
      else
        out_ << bracket(l) << " : " << c.str() << "\n";
    }
    emit("tensor", res);
  }

  void string_functions() {
    const RootSystem g = algebra();
    if (!g.is_affine()) throw DomainError("string functions need an affine algebra");
    print_series("string-functions", liekit::string_functions(g, single_labels(g), o_.limit, algo_));
  }

  void branching_functions() {
    const RootSystem g = algebra();
    if (!g.is_affine()) throw DomainError("branching functions need an affine algebra");
    print_series("branching-functions",
                 liekit::branching_functions(g, subalgebra(g), single_labels(g), o_.limit));
  }

  void bench() {
    const BenchSuite s = parse_bench_suite(o_.suite);
    std::vector<int> sizes;
    if (o_.sizes_given) {
      for (long long v : parse_labels(o_.sizes)) sizes.push_back(static_cast<int>(v));
    } else {
      sizes = default_bench_sizes(s);
    }
    const BenchTable t = run_bench(s, sizes);
    if (fmt_ == Format::json) {
      Json rows = Json::array();
      for (const auto& r : t.rows)
        rows.push_back({{"size", r.size},
                        {"labels", r.labels},
                        {"weights", r.weights},
                        {t.column_a, r.seconds_a},
                        {t.column_b, r.seconds_b}});
      return emit("bench", {{"suite", o_.suite}, {"rows", rows}});
    }
    out_ << std::left << std::setw(6) << "size" << std::setw(16) << "labels" << std::setw(10) << "weights"
         << std::setw(14) << t.column_a << t.column_b << "\n";
    for (const auto& r : t.rows) {
      std::ostringstream a, b;
      a << std::fixed << std::setprecision(6) << r.seconds_a;
      b << std::fixed << std::setprecision(6) << r.seconds_b;
      out_ << std::left << std::setw(6) << r.size << std::setw(16) << bracket(r.labels) << std::setw(10)
           << r.weights << std::setw(14) << a.str() << b.str() << "\n";
    }
  }

 private:
  RootSystem algebra() const {
    RootSystem g = parse_algebra(o_.algebra);
    return g.is_affine() ? g.with_grade_limit(o_.limit) : g;
  }

  std::vector<long long> checked_labels(const RootSystem& g, const std::string& text) const {
    std::vector<long long> l = parse_labels(text);
    if (l.size() != g.size())
      throw UsageError("expected " + std::to_string(g.size()) + " labels for " + g.name() + ", got " +
                       std::to_string(l.size()));
    return l;
  }

  std::vector<long long> single_labels(const RootSystem& g) const {
    if (o_.labels.size() != 1) throw UsageError("expected exactly one --labels");
    return checked_labels(g, o_.labels.front());
  }

  Module module(const RootSystem& g) const {
    const Weight mu = g.weight_from_labels(single_labels(g));
    if (o_.module == "irreducible") return irreducible_module(g, mu);
    if (o_.module == "verma") return verma_module(g, mu, o_.depth);
    if (o_.module == "parabolic") {
      std::vector<int> idx;
      for (long long v : parse_labels(o_.parabolic)) idx.push_back(static_cast<int>(v));
      return parabolic_verma_module(g, mu, idx, o_.depth);
    }
    throw UsageError("unknown module kind '" + o_.module + "'");
  }

  SubalgebraSpec subalgebra(const RootSystem& g) const {
    const bool by_index = !o_.sub_index.empty(), by_roots = !o_.sub_roots.empty();
    if (by_index == by_roots) throw UsageError("give exactly one of --sub-index and --sub-roots");
    if (by_index) {
      std::vector<int> idx;
      for (long long v : parse_labels(o_.sub_index)) idx.push_back(static_cast<int>(v));
      return parabolic_subalgebra(g, idx);
    }
    return explicit_subalgebra(g, parse_roots_json(o_.sub_roots));
  }

  void print_weights(const std::string& command, const RootSystem& g, const FormalElement& f) {
    Json res = Json::array();
    for (const auto& [w, m] : f) {
      if (fmt_ == Format::json) {
        res.push_back({{"weight", weight_to_json(w)}, {"labels", integral_labels(g, w)}, {"mult", integer_to_json(m)}});
      } else {
        out_ << bracket(integral_labels(g, w)) << " " << to_string(w) << " : " << m.str() << "\n";
      }
    }
    emit(command, res);
  }

  void print_series(const std::string& command, const std::vector<QSeries>& series) {
    Json res = Json::array();
    for (const auto& s : series) {
      if (fmt_ == Format::json)
        res.push_back(series_to_json(s));
      else
        out_ << format_series(s) << "\n";
    }
    emit(command, res);
  }

  void emit(const std::string& command, Json result) {
    if (fmt_ == Format::json) out_ << dump(document(command, std::move(result))) << "\n";
  }

  const Options& o_;
  std::ostream& out_;
  Format fmt_;
  Algorithm algo_;
};

/// Parses argv and runs one command. Returns 0 on success, 1 on domain or
/// computation errors, 2 on usage errors.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Root systems, weight multiplicities, branching rules and affine q-series", "liekit"};
  app.require_subcommand(1);
  Options o;
  try {
    o.limit = default_limit();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  auto common = [&](CLI::App* sub, bool needs_algebra) {
    if (needs_algebra) sub->add_option("algebra", o.algebra, "Algebra name, e.g. B2, A1+A1, G2^")->required();
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--limit", o.limit, "Grade limit for affine computations")->check(CLI::PositiveNumber);
  };
  auto with_labels = [&](CLI::App* sub) {
    sub->add_option("--labels", o.labels, "Dynkin labels, comma separated")->required()->allow_extra_args(false);
  };
  auto with_algorithm = [&](CLI::App* sub) {
    sub->add_option("--algorithm", o.algorithm, "Multiplicity algorithm")
        ->check(CLI::IsMember({"recurrence", "freudenthal"}));
  };
  auto with_sub = [&](CLI::App* sub) {
    sub->add_option("--sub-index", o.sub_index, "Simple-root indices generating the subalgebra");
    sub->add_option("--sub-roots", o.sub_roots, "Subalgebra simple roots as a JSON list");
  };

  std::map<std::string, void (Runner::*)()> actions;
  auto add = [&](const std::string& name, const std::string& help, void (Runner::*f)()) {
    actions[name] = f;
    return app.add_subcommand(name, help);
  };
  common(add("roots", "Positive roots (affine: up to the grade limit)", &Runner::roots), true);
  common(add("cartan", "Cartan matrix", &Runner::cartan), true);
  common(add("rho", "Weyl vector", &Runner::rho), true);
  {
    auto* s = add("mults", "Dominant weight multiplicities", &Runner::mults);
    common(s, true), with_labels(s), with_algorithm(s);
    s->add_option("--module", o.module, "Module kind")->check(CLI::IsMember({"irreducible", "verma", "parabolic"}));
    s->add_option("--parabolic", o.parabolic, "Index set of a parabolic Verma module");
    s->add_option("--depth", o.depth, "Height bound for Verma-type modules")->check(CLI::NonNegativeNumber);
  }
  {
    auto* s = add("character", "All weights with multiplicities", &Runner::character);
    common(s, true), with_labels(s), with_algorithm(s);
    s->add_option("--module", o.module, "Module kind")->check(CLI::IsMember({"irreducible", "verma", "parabolic"}));
    s->add_option("--parabolic", o.parabolic, "Index set of a parabolic Verma module");
    s->add_option("--depth", o.depth, "Height bound for Verma-type modules")->check(CLI::NonNegativeNumber);
    s->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  }
  {
    auto* s = add("dim", "Dimension of an irreducible module", &Runner::dim);
    common(s, true), with_labels(s);
  }
  {
    auto* s = add("branch", "Branching coefficients to a subalgebra", &Runner::branch);
    common(s, true), with_labels(s), with_sub(s);
  }
  {
    auto* s = add("tensor", "Tensor product decomposition", &Runner::tensor);
    common(s, true);
    s->add_option("--labels", o.labels, "Dynkin labels of a factor (repeatable)")->required()->allow_extra_args(false);
    s->add_option("--power", o.power, "Tensor power of a single factor")->check(CLI::PositiveNumber);
  }
  {
    auto* s = add("string-functions", "String functions of an affine module", &Runner::string_functions);
    common(s, true), with_labels(s), with_algorithm(s);
  }
  {
    auto* s = add("branching-functions", "Branching functions to an affine subalgebra", &Runner::branching_functions);
    common(s, true), with_labels(s), with_sub(s);
  }
  {
    auto* s = add("bench", "Timing table contrasting two algorithms", &Runner::bench);
    s->add_option("suite", o.suite, "finite-mults | branching")->required();
    s->add_option("--sizes", o.sizes, "Comma-separated sizes (may be empty)");
    s->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  CLI::App* chosen = app.get_subcommands().front();
  o.sizes_given = chosen->get_name() == "bench" && chosen->count("--sizes") > 0;

  std::ostringstream buffer;
  try {
    Runner r(o, buffer);
    (r.*actions.at(chosen->get_name()))();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  out << buffer.str();
  return 0;
}

}  // namespace liekit::cli
