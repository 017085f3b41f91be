#include "commands.hpp"

#include "sic/bounds.hpp"
#include "sic/codegen.hpp"
#include "sic/combinatorics.hpp"
#include "sic/error.hpp"
#include "sic/matrix_io.hpp"
#include "sic/verify.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace sic::cli {

namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string general(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

int report_error(const Error& e, std::ostream& err) {
  err << "error: " << e.what() << '\n';
  return e.kind() == ErrorKind::BudgetExceeded ? kBudget : kUsage;
}

std::optional<std::uint64_t> parse_uint(const std::string& text) {
  if (text.empty() || text.size() > 19 || text.find_first_not_of("0123456789") != std::string::npos)
    return std::nullopt;
  return std::stoull(text);
}

// ---- bounds -------------------------------------------------------------

struct Row {
  std::string kind;
  RateBound bound;
  std::vector<std::pair<std::string, double>> extra;  // appended to the witness
};

std::string opt(const std::optional<std::uint32_t>& v) { return v ? std::to_string(*v) : ""; }

std::vector<std::pair<std::string, double>> witness_of(const Row& row) {
  auto w = row.bound.witness;
  w.insert(w.end(), row.extra.begin(), row.extra.end());
  if (row.bound.uses_seed) w.emplace_back("seed", kSeedUpper22);
  return w;
}

std::string witness_text(const Row& row) {
  std::string out;
  for (const auto& [name, value] : witness_of(row)) {
    if (!out.empty()) out += ';';
    out += name + '=' + general(value);
  }
  return out;
}

void print_rows(const std::vector<Row>& rows, Format format, std::ostream& out) {
  if (format == Format::Csv) {
    out << "kind,z,u,s,l,value,witness\n";
    for (const auto& r : rows)
      out << r.kind << ',' << opt(r.bound.z) << ',' << opt(r.bound.u) << ',' << opt(r.bound.s) << ','
          << opt(r.bound.l) << ',' << general(r.bound.value) << ',' << witness_text(r) << '\n';
    return;
  }
  if (format == Format::Json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json j;
      j["kind"] = r.kind;
      if (r.bound.z) j["z"] = *r.bound.z;
      if (r.bound.u) j["u"] = *r.bound.u;
      if (r.bound.s) j["s"] = *r.bound.s;
      if (r.bound.l) j["l"] = *r.bound.l;
      j["value"] = r.bound.value;
      nlohmann::ordered_json w = nlohmann::ordered_json::object();
      for (const auto& [name, value] : witness_of(r)) {
        if (value == std::floor(value) && std::abs(value) < 1e9) w[name] = static_cast<long long>(value);
        else w[name] = value;
      }
      j["witness"] = w;
      arr.push_back(j);
    }
    out << arr.dump(2) << '\n';
    return;
  }
  std::size_t kind_width = 4;
  for (const auto& r : rows) kind_width = std::max(kind_width, r.kind.size());
  auto cell = [](const std::optional<std::uint32_t>& v) { return v ? std::to_string(*v) : std::string("-"); };
  out << std::left << std::setw(static_cast<int>(kind_width)) << "kind" << std::right << std::setw(5) << "z"
      << std::setw(5) << "u" << std::setw(5) << "s" << std::setw(5) << "l" << std::setw(12) << "value"
      << "  witness\n";
  for (const auto& r : rows) {
    std::string w = witness_text(r);
    for (auto& c : w)
      if (c == ';') c = ' ';
    out << std::left << std::setw(static_cast<int>(kind_width)) << r.kind << std::right << std::setw(5)
        << cell(r.bound.z) << std::setw(5) << cell(r.bound.u) << std::setw(5) << cell(r.bound.s) << std::setw(5)
        << cell(r.bound.l) << std::setw(12) << fixed(r.bound.value, 6) << "  " << w << '\n';
  }
}

// Published values of the exact-size design bound for s = 2..8; their
// derivation is not reproduced here.
constexpr double kExactDesignReference[] = {.302, .142, .082, .053, .037, .027, .021};

std::vector<Row> table1_rows() {
  std::vector<Row> rows;
  const auto r = recurrent_upper(17);
  for (std::uint32_t z = 2; z <= 17; ++z) {
    Row row{"recurrent-upper", recurrent_upper_bound(z), {{"reciprocal", 1 / r[z - 1]}}};
    rows.push_back(row);
  }
  return rows;
}

void print_table1(std::ostream& out) {
  const auto r = recurrent_upper(17);
  out << "   z   1/Rbar(z,1)\n";
  for (std::uint32_t z = 2; z <= 17; ++z) out << std::setw(4) << z << std::setw(14) << fixed(1 / r[z - 1], 4) << '\n';
}

std::vector<Row> table2_rows() {
  std::vector<Row> rows;
  for (std::uint32_t s = 2; s <= 8; ++s) rows.push_back({"lower-z1", lower_z1(s), {}});
  for (std::uint32_t s = 2; s <= 8; ++s) rows.push_back({"recurrent-upper", recurrent_upper_bound(s), {}});
  for (std::uint32_t s = 3; s <= 8; ++s) {
    RateBound b{BoundKind::LowerZu, s - 1, 2u, std::nullopt, std::nullopt, lower_zu(s - 1, 2), {}, false};
    rows.push_back({"lower-zu", b, {}});
  }
  for (std::uint32_t s = 3; s <= 8; ++s) rows.push_back({"upper-zu", upper_zu(s - 1, 2), {}});
  for (std::uint32_t s = 4; s <= 8; ++s) {
    RateBound b{BoundKind::LowerZu, s - 2, 3u, std::nullopt, std::nullopt, lower_zu(s - 2, 3), {}, false};
    rows.push_back({"lower-zu", b, {}});
  }
  for (std::uint32_t s = 4; s <= 8; ++s) rows.push_back({"upper-zu", upper_zu(s - 2, 3), {}});
  for (std::uint32_t s = 2; s <= 8; ++s) {
    RateBound b{BoundKind::Asymptotic, std::nullopt, 1u, s, std::nullopt, kExactDesignReference[s - 2], {}, false};
    rows.push_back({"reference-exact-design-lower", b, {}});
  }
  return rows;
}

void print_table2(std::ostream& out) {
  auto line = [&](const std::string& label, std::uint32_t first, const std::function<double(std::uint32_t)>& f) {
    out << std::left << std::setw(22) << label << std::right;
    for (std::uint32_t s = 2; s <= 8; ++s) out << std::setw(9) << (s < first ? std::string("-") : fixed(f(s), 4));
    out << '\n';
  };
  out << std::left << std::setw(22) << "s" << std::right;
  for (std::uint32_t s = 2; s <= 8; ++s) out << std::setw(9) << s;
  out << '\n';
  const auto r = recurrent_upper(8);
  line("Rlow(s,1)", 2, [](std::uint32_t s) { return lower_z1(s).value; });
  line("Rbar(s,1)", 2, [&](std::uint32_t s) { return r[s - 1]; });
  line("Rlow(s-1,2)", 3, [](std::uint32_t s) { return lower_zu(s - 1, 2); });
  line("Rbar(s-1,2)", 3, [](std::uint32_t s) { return upper_zu(s - 1, 2).value; });
  line("Rlow(s-2,3)", 4, [](std::uint32_t s) { return lower_zu(s - 2, 3); });
  line("Rbar(s-2,3)", 4, [](std::uint32_t s) { return upper_zu(s - 2, 3).value; });
  line("Rlow(F0^1,=s) [ref]", 2, [](std::uint32_t s) { return kExactDesignReference[s - 2]; });
  out << "Rbar(2,2) = " << fixed(kSeedUpper22, 4) << " is a tabulated constant; [ref] values are published\n"
      << "constants, not computed here.\n";
}

struct Combo {
  std::optional<std::uint32_t> z, u, s, l;
};

std::vector<Combo> combos(const BoundsRequest& req) {
  std::vector<Combo> out{Combo{}};
  auto expand = [&](const std::optional<Range>& range, std::optional<std::uint32_t> Combo::*field) {
    if (!range) return;
    std::vector<Combo> next;
    for (const auto& c : out)
      for (std::uint32_t v = range->lo; v <= range->hi; ++v) {
        Combo d = c;
        d.*field = v;
        next.push_back(d);
      }
    out = std::move(next);
  };
  expand(req.z, &Combo::z);
  expand(req.u, &Combo::u);
  expand(req.s, &Combo::s);
  expand(req.l, &Combo::l);
  return out;
}

Row bound_row(const std::string& kind, const std::string& asymptotic, const Combo& c) {
  if (kind == "recurrent-upper") return {kind, recurrent_upper_bound(*c.z), {}};
  if (kind == "nonrecurrent-upper")
    return {kind, {BoundKind::NonrecurrentUpper, c.z, 1u, std::nullopt, std::nullopt, nonrecurrent_upper(*c.z), {}, false}, {}};
  if (kind == "upper-zu") return {kind, upper_zu(*c.z, *c.u), {}};
  if (kind == "lower-zu")
    return {kind, {BoundKind::LowerZu, c.z, c.u, std::nullopt, std::nullopt, lower_zu(*c.z, *c.u), {}, false}, {}};
  if (kind == "lower-z1") return {kind, lower_z1(*c.z), {}};
  if (kind == "universal-upper") return {kind, universal_upper(*c.l, *c.s), {}};
  if (kind == "design-lower") return {kind, design_lower(*c.u, *c.s), {}};
  if (kind == "threshold-lower") return {kind, threshold_lower(*c.u, *c.s), {}};
  const AsymptoticKind a = parse_asymptotic_kind(asymptotic);
  const AsymptoticParams p{c.z.value_or(0), c.u.value_or(0), c.s.value_or(0), c.l.value_or(0)};
  return {"asymptotic:" + to_string(a), {BoundKind::Asymptotic, c.z, c.u, c.s, c.l, asymptotic_rate(a, p), {}, false}, {}};
}

// Parameters each kind needs, as a string over "zusl".
std::optional<std::string> required_params(const std::string& kind) {
  if (kind == "recurrent-upper" || kind == "nonrecurrent-upper" || kind == "lower-z1") return "z";
  if (kind == "upper-zu" || kind == "lower-zu") return "zu";
  if (kind == "universal-upper") return "ls";
  if (kind == "design-lower" || kind == "threshold-lower") return "us";
  if (kind == "asymptotic") return "";
  return std::nullopt;
}

// ---- verify -------------------------------------------------------------

std::string set_text(const std::vector<std::uint32_t>& cols) {
  std::string out = "{";
  for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? ", " : "") + std::to_string(cols[i] + 1);
  return out + "}";
}

void print_report(const VerificationReport& rep, const std::string& property, std::ostream& out) {
  out << property << ": " << (rep.satisfied ? "satisfied" : "violated") << '\n';
  if (rep.witness) {
    const auto& w = *rep.witness;
    out << "witness (1-based columns):";
    if (property == "cover-free") out << " U=" << set_text(w.first) << " Z=" << set_text(w.second);
    else if (property == "d-code") out << " S=" << set_text(w.first) << " j=" << *w.element + 1;
    else if (property == "m-code")
      out << " U=" << set_text(w.first) << " Z=" << set_text(w.second) << " j=" << *w.element + 1;
    else out << " P=" << set_text(w.first) << " P'=" << set_text(w.second);
    out << '\n';
  }
  out << "tuples checked: " << rep.tuples_checked << '\n';
}

std::optional<std::vector<int>> parse_labels(const std::string& text) {
  std::vector<int> labels;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("-0123456789") != std::string::npos) return std::nullopt;
    labels.push_back(std::stoi(item));
  }
  if (labels.empty()) return std::nullopt;
  return labels;
}

}  // namespace

std::optional<Format> parse_format(const std::string& text) {
  if (text == "table") return Format::Table;
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  return std::nullopt;
}

std::optional<Range> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  const auto lo = parse_uint(text.substr(0, dots));
  const auto hi = dots == std::string::npos ? lo : parse_uint(text.substr(dots + 2));
  if (!lo || !hi || *lo > *hi || *hi > 1'000'000) return std::nullopt;
  return Range{static_cast<std::uint32_t>(*lo), static_cast<std::uint32_t>(*hi)};
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("SIC_BUDGET"))
    if (auto v = parse_uint(env)) return *v;
  return kDefaultBudget;
}

int cmd_bounds(const BoundsRequest& req, std::ostream& out, std::ostream& err) {
  try {
    if (req.kind == "table1") {
      if (req.format == Format::Table) print_table1(out);
      else print_rows(table1_rows(), req.format, out);
      return kPass;
    }
    if (req.kind == "table2") {
      if (req.format == Format::Table) print_table2(out);
      else print_rows(table2_rows(), req.format, out);
      return kPass;
    }
    const auto needed = required_params(req.kind);
    if (!needed) {
      err << "error: unknown bound kind '" << req.kind << "'\n";
      return kUsage;
    }
    if (req.kind == "asymptotic") parse_asymptotic_kind(req.asymptotic);
    const std::pair<char, const std::optional<Range>*> given[] = {{'z', &req.z}, {'u', &req.u}, {'s', &req.s}, {'l', &req.l}};
    for (const auto& [name, range] : given)
      if (needed->find(name) != std::string::npos && !*range) {
        err << "error: " << req.kind << " needs --" << name << '\n';
        return kUsage;
      }

    const auto all = combos(req);
    std::vector<Row> rows;
    std::optional<Error> last;
    for (const auto& c : all) {
      try {
        rows.push_back(bound_row(req.kind, req.asymptotic, c));
      } catch (const Error& e) {
        // Over a range, combinations outside the bound's domain are skipped.
        if (e.kind() != ErrorKind::ParameterOutOfRange || all.size() == 1) throw;
        last = e;
      }
    }
    if (rows.empty() && last) throw *last;
    print_rows(rows, req.format, out);
    return kPass;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

int cmd_construct(std::uint32_t q, std::uint32_t k, std::uint32_t r, const std::string& out_path, std::ostream& out,
                  std::ostream& err) {
  try {
    const CodeParams p = code_params(q, k, r);
    const FiniteField field(q);
    const BinaryCode code = binary_expand(shorten(rs_extended(field, k), r));
    write_matrix(code, out_path);
    out << "t=" << code.cols() << " N=" << code.rows() << " w=" << p.w << " lambda=" << p.lambda << '\n';
    return kPass;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

int cmd_verify(const std::string& in_path, const std::vector<std::string>& property, std::uint64_t budget,
               bool serial, std::ostream& out, std::ostream& err) {
  auto usage = [&](const std::string& msg) {
    err << "error: " << msg << '\n';
    return kUsage;
  };
  if (property.empty()) return usage("missing property");
  const std::string& name = property[0];
  std::vector<std::uint32_t> nums;
  std::size_t i = 1;
  for (; i < property.size(); ++i) {
    const auto v = parse_uint(property[i]);
    if (!v) break;
    if (*v > 1'000'000) return usage("argument out of range: " + property[i]);
    nums.push_back(static_cast<std::uint32_t>(*v));
  }
  const std::vector<std::string> rest(property.begin() + static_cast<std::ptrdiff_t>(i), property.end());
  auto expect = [&](std::size_t n_nums, std::size_t max_rest) { return nums.size() == n_nums && rest.size() <= max_rest; };

  try {
    const BinaryCode code = read_matrix(in_path);
    const CheckOptions opts{budget};
    VerificationReport rep;
    if (name == "cover-free") {
      if (!expect(2, 0)) return usage("usage: cover-free z u");
      rep = serial ? reference::check_cover_free(code, nums[0], nums[1], opts)
                   : check_cover_free(code, nums[0], nums[1], opts);
    } else if (name == "d-code") {
      if (!expect(2, 0)) return usage("usage: d-code s l");
      rep = serial ? reference::check_d_code(code, nums[0], nums[1], opts) : check_d_code(code, nums[0], nums[1], opts);
    } else if (name == "m-code") {
      if (!expect(2, 0)) return usage("usage: m-code s u");
      rep = serial ? reference::check_m_code(code, nums[0], nums[1], opts) : check_m_code(code, nums[0], nums[1], opts);
    } else if (name == "threshold") {
      if (!expect(2, 0)) return usage("usage: threshold u s");
      rep = serial ? reference::check_threshold_design(code, nums[0], nums[1], opts)
                   : check_threshold_design(code, nums[0], nums[1], opts);
    } else if (name == "threshold-bar") {
      if (!expect(2, 0)) return usage("usage: threshold-bar u s");
      rep = serial ? reference::check_threshold_bar_design(code, nums[0], nums[1], opts)
                   : check_threshold_bar_design(code, nums[0], nums[1], opts);
    } else if (name == "design") {
      if (!expect(2, 2) || rest.empty()) return usage("usage: design l s at-most|exactly [labels]");
      DesignMode mode;
      if (rest[0] == "at-most") mode = DesignMode::AtMost;
      else if (rest[0] == "exactly") mode = DesignMode::Exactly;
      else return usage("design mode must be at-most or exactly");
      std::vector<int> labels;
      if (rest.size() == 2) {
        const auto parsed = parse_labels(rest[1]);
        if (!parsed) return usage("labels must be a comma-separated list of integers");
        labels = *parsed;
      } else {
        for (std::uint32_t v = 0; v <= nums[0]; ++v) labels.push_back(static_cast<int>(v));
      }
      const OutcomeFunction outcome(labels);
      if (outcome.level() != nums[0]) return usage("expected " + std::to_string(nums[0] + 1) + " labels");
      rep = serial ? reference::check_design(code, outcome, nums[1], mode, opts)
                   : check_design(code, outcome, nums[1], mode, opts);
    } else if (name == "d-cert") {
      if (!expect(2, 0)) return usage("usage: d-cert s l");
      const bool ok = check_d_certificate(code, nums[0], nums[1]);
      const std::size_t lambda = coincidence(code);
      const std::size_t w = *code.constant_weight();
      out << "coincidence=" << lambda << " w=" << w << '\n'
          << "s*coincidence=" << nums[0] * lambda << (ok ? " <= " : " > ") << "l*w-1=" << nums[1] * w - 1 << '\n'
          << "d-cert: " << (ok ? "certified" : "not certified") << '\n';
      return ok ? kPass : kFail;
    } else {
      return usage("unknown property '" + name + "'");
    }
    print_report(rep, name, out);
    return rep.satisfied ? kPass : kFail;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

int cmd_search(std::uint32_t s, std::uint32_t m, std::uint32_t q_max, std::ostream& out, std::ostream& err) {
  try {
    const auto p = ks_search(s, m, q_max);
    if (!p) {
      out << "no code for s=" << s << " m=" << m << " with q <= " << q_max << '\n';
      return kFail;
    }
    out << "q=" << p->q << " \xCE\xBB=" << p->lambda << " N=" << p->N << " (k=" << p->k << " r=" << p->r
        << " w=" << p->w << " t=" << p->t << ")\n";
    return kPass;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

int cmd_examples(std::uint64_t budget, std::ostream& out, std::ostream& err) {
  struct Cert {
    std::uint32_t s, l;
    bool expected;
  };
  struct Example {
    std::uint32_t q, k, r;
    std::size_t t, N, w;
    std::vector<Cert> certs;
  };
  const Example examples[] = {
      {5, 5, 2, 125, 20, 4, {{3, 2, true}}},
      {7, 6, 3, 343, 35, 5, {{4, 2, true}}},
      {8, 5, 2, 512, 56, 7, {{6, 2, true}, {10, 3, true}, {11, 3, false}}},
  };
  bool all_ok = true;
  std::vector<std::string> confirmed;
  try {
    int index = 0;
    for (const auto& ex : examples) {
      ++index;
      const QaryCode qary = shorten(rs_extended(FiniteField(ex.q), ex.k), ex.r);
      const BinaryCode code = binary_expand(qary);
      const std::size_t w = code.constant_weight().value_or(0);
      const bool shape = code.cols() == ex.t && code.rows() == ex.N && w == ex.w;
      all_ok &= shape;
      out << "Example " << index << ": q=" << ex.q << " k=" << ex.k << " r=" << ex.r << " -> t=" << code.cols()
          << " N=" << code.rows() << " w=" << w << (shape ? " (as expected)" : " (MISMATCH)") << '\n';

      const std::size_t lambda = ex.k - ex.r - 1;
      const std::size_t agree = coincidence(qary);
      const bool coin_ok = agree == lambda && coincidence(code) == lambda;
      all_ok &= coin_ok;
      out << "  coincidence " << agree << ", k-r-1 = " << lambda << (coin_ok ? " (equal)" : " (MISMATCH)") << '\n';

      for (const auto& c : ex.certs) {
        const bool cert = check_d_certificate(code, c.s, c.l);
        const bool as_expected = cert == c.expected;
        all_ok &= as_expected;
        out << "  certificate D_" << c.s << "^" << c.l << ": " << (cert ? "certified" : "not certified")
            << (as_expected ? "" : " (UNEXPECTED)") << '\n';
        if (!c.expected) continue;

        const std::uint64_t domain = sat_mul(binomial(code.cols(), c.s), code.cols() - c.s);
        if (domain > budget) {
          out << "  exhaustive D_" << c.s << "^" << c.l << ": skipped, "
              << (domain == kSaturated ? std::string("over 2^64") : std::to_string(domain))
              << " tuples exceed the budget\n";
        } else {
          const auto rep = check_d_code(code, c.s, c.l, {budget});
          all_ok &= rep.satisfied;
          out << "  exhaustive D_" << c.s << "^" << c.l << ": " << (rep.satisfied ? "satisfied" : "VIOLATED") << " ("
              << rep.tuples_checked << " tuples)\n";
        }
        if (cert)
          confirmed.push_back("t(" + std::to_string(code.rows()) + ", D_" + std::to_string(c.s) + "^" +
                              std::to_string(c.l) + ") >= " + std::to_string(code.cols()));
      }
    }
  } catch (const Error& e) {
    return report_error(e, err);
  }
  out << "confirmed:";
  for (std::size_t i = 0; i < confirmed.size(); ++i) out << (i ? ", " : " ") << confirmed[i];
  out << '\n' << (all_ok ? "all checks passed" : "SOME CHECKS FAILED") << '\n';
  return all_ok ? kPass : kFail;
}

}  // namespace sic::cli
