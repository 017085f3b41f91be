#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using namespace sic::cli;
  CLI::App app{"Superimposed codes: construction, verification and rate bounds"};
  app.require_subcommand(1);

  BoundsRequest bounds;
  std::string z, u, s, l, format = "table";
  auto* b = app.add_subcommand("bounds", "Compute rate bounds (kinds: table1, table2, recurrent-upper, "
                                         "nonrecurrent-upper, upper-zu, lower-zu, lower-z1, universal-upper, "
                                         "design-lower, threshold-lower, asymptotic)");
  b->add_option("bound", bounds.kind, "Bound kind")->required();
  b->add_option("--kind", bounds.asymptotic,
                "Formula for 'asymptotic': z1-upper, zu-upper, zu-lower, z1-lower, design-lower, "
                "exact-design-lower, exact-design-upper, universal-upper");
  b->add_option("--z", z, "Value or range a..b");
  b->add_option("--u", u, "Value or range a..b");
  b->add_option("--s", s, "Value or range a..b");
  b->add_option("--l", l, "Value or range a..b");
  b->add_option("--format", format, "table, csv or json");

  std::uint32_t q = 0, k = 0, r = 0;
  std::string out_path;
  auto* c = app.add_subcommand("construct", "Build a binary-expanded shortened Reed-Solomon code");
  c->add_option("--q", q, "Field order")->required();
  c->add_option("--k", k, "Dimension")->required();
  c->add_option("--r", r, "Shortening depth")->required();
  c->add_option("--out", out_path, "Output matrix file")->required();

  std::string in_path;
  std::vector<std::string> property;
  std::uint64_t budget = default_budget();
  bool serial = false;
  auto* v = app.add_subcommand("verify", "Check a property of a matrix file");
  v->add_option("file", in_path, "Matrix file")->required();
  v->add_option("property", property,
                "cover-free z u | d-code s l | d-cert s l | m-code s u | design l s at-most|exactly [labels] | "
                "threshold u s | threshold-bar u s")
      ->required();
  v->add_option("--budget", budget, "Maximum number of tuples to enumerate");
  v->add_flag("--serial", serial, "Use the single-threaded reference checkers");

  std::uint32_t ss = 0, m = 0, q_max = 64;
  auto* se = app.add_subcommand("search", "Cheapest shortened RS parameters for an (s,1) code");
  se->add_option("--s", ss, "Strength s")->required();
  se->add_option("--m", m, "Size exponent: 2^m <= t < 2^(m+1)")->required();
  se->add_option("--q-max", q_max, "Largest field order tried");

  auto* ex = app.add_subcommand("examples", "Rebuild and check the three worked example codes");
  ex->add_option("--budget", budget, "Maximum number of tuples to enumerate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (*b) {
    const auto fmt = parse_format(format);
    if (!fmt) {
      std::cerr << "error: unknown format '" << format << "'\n";
      return kUsage;
    }
    bounds.format = *fmt;
    const std::pair<const std::string*, std::optional<Range>*> ranges[] = {
        {&z, &bounds.z}, {&u, &bounds.u}, {&s, &bounds.s}, {&l, &bounds.l}};
    for (auto [text, range] : ranges) {
      if (text->empty()) continue;
      *range = parse_range(*text);
      if (!*range) {
        std::cerr << "error: bad range '" << *text << "'\n";
        return kUsage;
      }
    }
    return cmd_bounds(bounds, std::cout, std::cerr);
  }
  if (*c) return cmd_construct(q, k, r, out_path, std::cout, std::cerr);
  if (*v) return cmd_verify(in_path, property, budget, serial, std::cout, std::cerr);
  if (*se) return cmd_search(ss, m, q_max, std::cout, std::cerr);
  return cmd_examples(budget, std::cout, std::cerr);
}
