// Command-line front end: builders, certification suites, report emission.
// Exit codes: 0 all checks pass, 1 at least one failure, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "idealord/category.hpp"
#include "idealord/certify.hpp"
#include "idealord/ideals.hpp"
#include "idealord/instances.hpp"
#include "idealord/ordered_semigroup.hpp"

namespace {

using namespace idealord;

constexpr std::uint64_t kDefaultSeed = 42;
constexpr std::uint64_t kMaxN = 1000000;

struct Options {
  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = 1000;
  std::uint64_t n_max = 60;
  std::size_t degree_cap = 8;
  std::uint64_t p = 2;
};

void print_table(std::ostream& os, const FiniteOrderedSemigroup& s) {
  const std::size_t k = s.size();
  std::size_t w = 1;
  for (std::size_t i = 0; i < k; ++i) w = std::max(w, s.label(i).size());
  auto pad = [&](const std::string& x) {
    return std::string(w - x.size(), ' ') + x;
  };
  os << pad("*");
  for (std::size_t j = 0; j < k; ++j) os << " " << pad(s.label(j));
  os << "\n";
  for (std::size_t i = 0; i < k; ++i) {
    os << pad(s.label(i));
    for (std::size_t j = 0; j < k; ++j) os << " " << pad(s.label(s.mul(i, j)));
    os << "\n";
  }
}

void print_order(std::ostream& os, const FiniteOrderedSemigroup& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      if (s.leq(i, j)) os << s.label(i) << " <= " << s.label(j) << "\n";
}

int emit(const Options& opt, const ReportBundle& bundle) {
  if (opt.format == "json") {
    std::cout << to_json(bundle).dump(2) << "\n";
  } else {
    for (const auto& r : bundle.reports) {
      std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.check << "  [" << r.instance << "]";
      if (!r.passed) std::cout << "  counterexample: " << r.counterexample.dump();
      std::cout << "\n";
    }
    std::cout << (bundle.all_passed() ? "all checks passed" : "FAILURES present") << "\n";
  }
  return bundle.all_passed() ? 0 : 1;
}

int cmd_zn(const Options& opt, std::uint64_t n, const std::string& sub) {
  FiniteOrderedSemigroup s = build_ideal_semigroup_zn(n);
  if (sub == "table") {
    if (opt.format == "json")
      std::cout << s.to_json().dump(2) << "\n";
    else
      print_table(std::cout, s);
    return 0;
  }
  if (sub == "order") {
    if (opt.format == "json")
      std::cout << s.to_json()["leq"].dump(2) << "\n";
    else
      print_order(std::cout, s);
    return 0;
  }
  ReportBundle bundle;
  if (sub == "green") {
    GreensStructure g = greens_relations(s);
    if (opt.format == "text")
      std::cout << "L/R/J/H/D classes: " << class_count(g.L) << "/" << class_count(g.R) << "/"
                << class_count(g.J) << "/" << class_count(g.H) << "/" << class_count(g.D)
                << " over " << s.size() << " elements\n";
    ReportBundle b = certify_zn(n);
    for (auto& r : b.reports)
      if (r.check == "green_universality") bundle.add(std::move(r));
  } else if (sub == "classes") {
    ReportBundle b = certify_zn(n);
    for (auto& r : b.reports)
      if (r.check == "classify_all_true") bundle.add(std::move(r));
  } else if (sub == "axioms") {
    bundle.add(timed([&] { return validate(s); }));
  } else if (sub == "transversal") {
    auto universe = ideal_universe_zn(n);
    bundle.add(timed([&] { return check_inverse_transversal(universe); }));
  } else {
    throw CLI::ValidationError("zn", "unknown subcommand '" + sub + "'");
  }
  return emit(opt, bundle);
}

int cmd_divisors(const Options& opt, std::uint64_t n, const std::string& export_path) {
  DivisorSemigroup d = build_divisor_semigroup(n);
  if (!export_path.empty()) {
    std::ofstream out(export_path);
    out << d.table.to_json().dump(2) << "\n";
  }
  if (opt.format == "json")
    std::cout << d.table.to_json().dump(2) << "\n";
  else {
    print_table(std::cout, d.table);
    std::cout << "\norder (d1 | d2):\n";
    print_order(std::cout, d.table);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordered semigroups and ideal categories of principal ideal rings"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "PRNG seed for sampled suites")->capture_default_str();
  app.add_option("--samples", opt.samples, "samples per sampled law")->capture_default_str();
  app.add_option("--degree-cap", opt.degree_cap, "max polynomial degree in sampling")
      ->capture_default_str();

  auto range_n = CLI::Range(std::uint64_t{2}, kMaxN);

  std::uint64_t n = 12;
  std::string zn_sub = "table";
  auto* zn = app.add_subcommand("zn", "the ordered semigroup I(Z_n)");
  zn->add_option("n", n, "modulus")->required()->check(range_n);
  zn->add_option("subcommand", zn_sub, "table|order|green|classes|axioms|transversal")
      ->check(CLI::IsMember({"table", "order", "green", "classes", "axioms", "transversal"}));

  std::string export_path;
  auto* div = app.add_subcommand("divisors", "the divisor semigroup (D(n), *, |)");
  div->add_option("n", n, "modulus")->required()->check(range_n);
  div->add_option("--export", export_path, "write the table-ingestion JSON to a file");

  auto* z = app.add_subcommand("z", "sampled verification of I(Z)");

  auto* poly = app.add_subcommand("poly", "sampled verification of I(F_p[x])");
  poly->add_option("--p", opt.p, "field characteristic")->check(CLI::Range(2, 97));

  bool want_dot = false;
  auto* cat = app.add_subcommand("category", "subobject axioms and the contravariant functor");
  cat->add_option("n", n, "modulus")->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{200}));
  cat->add_flag("--dot", want_dot, "emit DOT diagrams of C and P instead of reports");

  auto* cex = app.add_subcommand("counterexample", "the noncommutative triangular-matrix example");
  cex->add_option("--p", opt.p, "field characteristic, prime <= 5")->check(CLI::Range(2, 5));

  auto* iso = app.add_subcommand("iso", "the isomorphism I(Z_n) ~ D(n)");
  iso->add_option("n", n, "modulus")->required()->check(range_n);

  auto* certify = app.add_subcommand("certify", "run every verification suite");
  certify->add_option("--n-max", opt.n_max, "certify all n up to this bound")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{200}))
      ->capture_default_str();

  // let --format/--seed/... appear after the subcommand too
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    using namespace idealord;
    if (zn->parsed()) return cmd_zn(opt, n, zn_sub);
    if (div->parsed()) return cmd_divisors(opt, n, export_path);
    if (z->parsed()) {
      ReportBundle b;
      std::cout << "seed " << opt.seed << "\n";
      b.add(timed([&] { return verify_sampled_laws(RingSpec::integers(), opt.samples, opt.seed); }));
      b.add(timed([&] { return verify_z_naturals_iso(opt.samples, opt.seed + 1); }));
      return emit(opt, b);
    }
    if (poly->parsed()) {
      if (!is_prime(opt.p)) throw CLI::ValidationError("poly", "--p must be prime");
      ReportBundle b;
      std::cout << "seed " << opt.seed << "\n";
      b.add(timed([&] {
        return verify_sampled_laws(RingSpec::poly(opt.p), opt.samples, opt.seed, opt.degree_cap);
      }));
      b.add(timed(
          [&] { return verify_poly_class_iso(opt.p, opt.samples, opt.seed + 1, opt.degree_cap); }));
      return emit(opt, b);
    }
    if (cat->parsed()) {
      if (want_dot) {
        auto universe = ideal_universe_zn(n);
        std::cout << dot_preorder_category(universe) << "\n" << dot_inclusion_diagram(universe);
        return 0;
      }
      return emit(opt, certify_category(n));
    }
    if (cex->parsed()) {
      if (!is_prime(opt.p)) throw CLI::ValidationError("counterexample", "--p must be prime");
      ReportBundle b;
      b.add(timed([&] { return run_counterexample(opt.p); }));
      return emit(opt, b);
    }
    if (iso->parsed()) {
      ReportBundle b;
      b.add(timed([&] { return verify_zn_divisor_iso(n); }));
      return emit(opt, b);
    }
    if (certify->parsed()) {
      if (opt.format == "text") std::cout << "seed " << opt.seed << "\n";
      return emit(opt, certify_all(opt.n_max, opt.samples, opt.seed));
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
