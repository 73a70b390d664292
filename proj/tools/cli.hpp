#pragma once

// Command-line front end. `run` takes the arguments after the program name
// and writes to the given streams so tests can drive it in-process.
//
//   count tangent --d D --profile P [--table F] [--unordered]
//   count severi  --d D --delta N [--tangent | --alpha L --beta L] [--cache F]
//   classify      --poly EXPR --point X,Y [--max-k K]
//   verify pencil --d D [--trials T] [--seed S] [--height H] [--max-degree M]
//   verify ch-vs-closed [--delta-max N] [--extra E] [--below B]
//   verify kazaryan [--table F]
//   verify table FILE
//   table show FILE
//   table invert --d D --profile P [--plain N] [--tangent NT] [--table F]
//
// Global: --format plain|json, --table FILE (defaults to the starter table).
// Exit codes: 0 ok, 1 computation error or failed check, 2 usage error.

#include "aktangent/ak_local.hpp"
#include "aktangent/base_table.hpp"
#include "aktangent/caporaso_harris.hpp"
#include "aktangent/closed_forms.hpp"
#include "aktangent/consistency.hpp"
#include "aktangent/pencil.hpp"
#include "aktangent/poly_parser.hpp"
#include "aktangent/profile.hpp"
#include "aktangent/starter_table.hpp"
#include "aktangent/tangency_recursion.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace aktangent::cli {

using nlohmann::ordered_json;

inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// Integers go into JSON as decimal strings; most exceed 64 bits.
inline ordered_json to_json(const CheckReport& r) {
  ordered_json j;
  j["name"] = r.name;
  j["inputs"] = ordered_json::object();
  for (const auto& [k, v] : r.inputs) j["inputs"][k] = v;
  j["expected"] = r.expected.str();
  j["computed"] = r.computed.str();
  j["verdict"] = r.passed() ? "pass" : "fail";
  j["informational"] = r.informational;
  j["elapsed_seconds"] = r.elapsed_seconds;
  if (!r.subchecks.empty()) {
    j["subchecks"] = ordered_json::array();
    for (const auto& s : r.subchecks) j["subchecks"].push_back(to_json(s));
  }
  return j;
}

namespace detail {

struct Options {
  std::string format = "plain";
  std::string table_file;

  int d = 0;
  std::string profile;
  bool unordered = false;

  int delta = 0;
  bool tangent = false;
  std::string alpha;
  std::string beta;
  std::string cache;

  std::string poly;
  std::string point;
  int max_k = 10;

  int trials = 5;
  std::uint64_t seed = kDefaultSeed;
  int height = 100;
  int max_degree = 6;

  int delta_max = 8;
  int extra = 1;
  int below = 0;

  std::string file;
  std::string plain_value;
  std::string tangent_value;
};

/// Thrown for bad input that slipped past CLI11 (profiles, polynomials).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ',')) {
    cur.erase(std::remove_if(cur.begin(), cur.end(), [](unsigned char c) { return std::isspace(c); }), cur.end());
    if (cur.empty()) continue;
    try {
      std::size_t used = 0;
      const int v = std::stoi(cur, &used);
      if (used != cur.size() || v < 0) throw std::invalid_argument(cur);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError(what + ": expected comma-separated non-negative integers, got '" + text + "'");
    }
  }
  return out;
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

  bool json() const { return o_.format == "json"; }

  BaseValueTable table() const {
    return o_.table_file.empty() ? starter_table() : BaseValueTable::load(o_.table_file);
  }

  SingularityProfile profile() const {
    try {
      return SingularityProfile::parse(o_.profile);
    } catch (const ParseError& e) {
      throw UsageError(std::string("--profile: ") + e.what());
    }
  }

  int count_tangent() {
    const SingularityProfile p = profile();
    CountValue v;
    std::string method;
    if (has_closed_form(p)) {
      v = nt_closed(o_.d, p);
      method = "closed-form";
    } else {
      v = nt_recursive(o_.d, p, table());
      method = "recursion";
    }
    if (o_.unordered) v = unordered_view(v, p);
    if (!v.within_proven_range)
      err_ << "warning: d=" << o_.d << " is below the proven bound d_min=" << p.min_valid_degree() << " for "
           << p.to_string() << '\n';
    if (json()) {
      ordered_json j{{"d", o_.d},
                     {"profile", p.to_string()},
                     {"method", method},
                     {"ordered", v.ordered},
                     {"within_proven_range", v.within_proven_range},
                     {"value", v.value.str()}};
      out_ << j.dump(2) << '\n';
    } else {
      out_ << v.value << '\n';
    }
    return 0;
  }

  int count_severi() {
    CaporasoHarris ch;
    if (!o_.cache.empty() && std::filesystem::exists(o_.cache))
      if (auto problem = ch.load_cache(o_.cache)) err_ << "warning: ignoring cache: " << *problem << '\n';
    TangencyPair pair;
    if (o_.tangent) {
      if (!o_.alpha.empty() || !o_.beta.empty()) throw UsageError("--tangent excludes --alpha/--beta");
      if (o_.d < 2) throw PreconditionError("--tangent needs d >= 2");
      pair = CaporasoHarris::tangent_pair(o_.d);
    } else if (!o_.alpha.empty() || !o_.beta.empty()) {
      pair.alpha = parse_int_list(o_.alpha, "--alpha");
      pair.beta = parse_int_list(o_.beta, "--beta");
      pair.trim();
    } else {
      pair.beta = {o_.d};
    }
    const BigInt value = ch.severi(o_.d, o_.delta, pair);
    if (!o_.cache.empty()) ch.save_cache(o_.cache);
    if (json()) {
      ordered_json j{{"d", o_.d},
                     {"delta", o_.delta},
                     {"alpha", pair.alpha},
                     {"beta", pair.beta},
                     {"value", value.str()}};
      out_ << j.dump(2) << '\n';
    } else {
      out_ << value << '\n';
    }
    return 0;
  }

  int classify_point() {
    BivarPoly f;
    std::pair<BigRational, BigRational> pt;
    try {
      f = parse_bivar_poly(o_.poly);
      pt = parse_point(o_.point);
    } catch (const ParseError& e) {
      throw UsageError(e.what());
    }
    const SingularityType t = classify(f, pt, o_.max_k);
    if (json()) {
      ordered_json j{{"tag", t.tag()}};
      if (t.kind == SingularityType::Kind::kA) j["k"] = t.k;
      if (t.witness) j["witness"] = to_string(*t.witness);
      if (!t.reason.empty()) j["reason"] = t.reason;
      out_ << j.dump(2) << '\n';
    } else {
      out_ << t.tag() << '\n';
      if (t.witness) out_ << "witness " << to_string(*t.witness) << '\n';
      if (!t.reason.empty()) out_ << "reason " << t.reason << '\n';
    }
    return 0;
  }

  int verify_pencil() {
    if (o_.trials < 1) throw PreconditionError("--trials must be >= 1");
    PencilOptions opts;
    opts.height = o_.height;
    opts.max_degree = o_.max_degree;
    const BigInt expected = nt_base(o_.d);
    int failures = 0;
    ordered_json trials = ordered_json::array();
    for (int i = 0; i < o_.trials; ++i) {
      const std::uint64_t seed = o_.seed + static_cast<std::uint64_t>(i);
      const PencilTrial t = run_pencil_trial(o_.d, seed, opts);
      const bool ok = BigInt(t.result.count) == expected;
      failures += ok ? 0 : 1;
      if (json()) {
        trials.push_back({{"seed", seed},
                          {"count", t.result.count},
                          {"expected", expected.str()},
                          {"attempts", t.instance.attempts + t.discarded},
                          {"verdict", ok ? "pass" : "fail"}});
      } else {
        out_ << (ok ? "PASS" : "FAIL") << " trial " << i + 1 << " seed=" << seed << " count=" << t.result.count
             << " expected=" << expected << '\n';
      }
    }
    if (json()) {
      out_ << ordered_json{{"d", o_.d}, {"trials", trials}, {"failures", failures}}.dump(2) << '\n';
    } else {
      out_ << (failures == 0 ? "PASS" : "FAIL") << ' ' << o_.trials - failures << '/' << o_.trials
           << " trials gave 2(d-1) = " << expected << '\n';
    }
    return failures == 0 ? 0 : 1;
  }

  int emit_reports(std::vector<CheckReport> reports) {
    sort_reports(reports);
    const std::size_t failures = count_failures(reports);
    if (json()) {
      ordered_json arr = ordered_json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      out_ << ordered_json{{"reports", arr}, {"failures", failures}}.dump(2) << '\n';
    } else {
      for (const auto& r : reports) print_report(r, 0);
      out_ << reports.size() << " checks, " << failures << " failures\n";
    }
    return failures == 0 ? 0 : 1;
  }

  int verify_ch() { return emit_reports(check_ch_vs_closed(o_.delta_max, o_.extra, o_.below)); }
  int verify_kazaryan() { return emit_reports({kazaryan_check(table())}); }
  int verify_table() { return emit_reports(check_eq1_table(BaseValueTable::load(o_.file))); }

  int table_show() {
    const BaseValueTable t = BaseValueTable::load(o_.file);
    if (json()) {
      ordered_json arr = ordered_json::array();
      for (const auto& [k, v] : t.plain_entries())
        arr.push_back({{"kind", "N"}, {"d", k.first}, {"profile", k.second.to_string(",")}, {"value", v.str()}});
      for (const auto& [k, v] : t.conditioned_entries())
        arr.push_back({{"kind", "NL"},
                       {"d", std::get<0>(k)},
                       {"profile", std::get<1>(k).to_string(",")},
                       {"cond", "A" + std::to_string(std::get<2>(k))},
                       {"value", v.str()}});
      out_ << arr.dump(2) << '\n';
    } else {
      out_ << t.to_text();
    }
    return 0;
  }

  int table_invert() {
    const SingularityProfile p = profile();
    BigInt plain;
    if (!o_.plain_value.empty()) {
      plain = parse_value(o_.plain_value, "--plain");
    } else {
      auto n = table().plain(o_.d, p);
      if (!n) throw MissingEntryError("missing table entry: " + plain_key_name(o_.d, p) + " (or pass --plain)");
      plain = *n;
    }
    const BigInt tangent =
        o_.tangent_value.empty() ? nt_closed(o_.d, p).value : parse_value(o_.tangent_value, "--tangent");
    const BigInt nl = invert_for_conditioned(o_.d, p, plain, tangent);
    if (json()) {
      out_ << ordered_json{{"d", o_.d},
                           {"profile", p.to_string()},
                           {"plain", plain.str()},
                           {"tangent", tangent.str()},
                           {"conditioned", nl.str()}}
                  .dump(2)
           << '\n';
    } else {
      out_ << nl << '\n';
    }
    return 0;
  }

 private:
  static BigInt parse_value(const std::string& s, const std::string& what) {
    try {
      return parse_bigint(s);
    } catch (const ParseError& e) {
      throw UsageError(what + ": " + e.what());
    }
  }

  void print_report(const CheckReport& r, int indent) {
    out_ << std::string(static_cast<std::size_t>(indent), ' ') << r.verdict() << ' ' << r.name
         << ": expected=" << r.expected << " computed=" << r.computed;
    if (indent == 0) out_ << " (" << std::fixed << std::setprecision(3) << r.elapsed_seconds << " s)";
    out_ << '\n';
    for (const auto& s : r.subchecks) print_report(s, indent + 2);
  }

  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  detail::Options o;
  CLI::App app{"Exact tangency counts for plane curves with A_k singularities", "aktangent"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"plain", "json"}));
  app.add_option("--table", o.table_file, "Base-value table file (default: built-in starter table)");

  auto* count = app.add_subcommand("count", "Compute a characteristic number")->require_subcommand(1);
  count->fallthrough();
  auto* tangent = count->add_subcommand("tangent", "N_d^T(profile)");
  tangent->fallthrough();
  tangent->add_option("--d", o.d, "Degree")->required();
  tangent->add_option("--profile", o.profile, "Singularity profile, e.g. A1^2,A3")->required();
  tangent->add_flag("--unordered", o.unordered, "Divide by the symmetry factor");

  auto* severi = count->add_subcommand("severi", "Caporaso-Harris relative Severi degree");
  severi->fallthrough();
  severi->add_option("--d", o.d, "Degree")->required();
  severi->add_option("--delta", o.delta, "Number of nodes")->required();
  severi->add_flag("--tangent", o.tangent, "One moving contact of order 2 (beta = (d-2, 1))");
  severi->add_option("--alpha", o.alpha, "Fixed contacts: counts of order 1,2,... (comma-separated)");
  severi->add_option("--beta", o.beta, "Moving contacts: counts of order 1,2,... (comma-separated)");
  severi->add_option("--cache", o.cache, "Memo cache file (read if present, then rewritten)");

  auto* classify = app.add_subcommand("classify", "Classify the singularity of a curve at a point");
  classify->fallthrough();
  classify->add_option("--poly", o.poly, "Polynomial in x, y")->required();
  classify->add_option("--point", o.point, "Point x,y with rational coordinates")->required();
  classify->add_option("--max-k", o.max_k, "Largest k to decide")->check(CLI::Range(1, 60));

  auto* verify = app.add_subcommand("verify", "Run a consistency check")->require_subcommand(1);
  verify->fallthrough();
  auto* pencil = verify->add_subcommand("pencil", "Count tangent members of random pencils");
  pencil->fallthrough();
  pencil->add_option("--d", o.d, "Degree")->required()->check(CLI::Range(1, 60));
  pencil->add_option("--trials", o.trials, "Number of trials");
  pencil->add_option("--seed", o.seed, "Seed of the first trial");
  pencil->add_option("--height", o.height, "Bound on random numerators and denominators")->check(CLI::Range(1, 1000000));
  pencil->add_option("--max-degree", o.max_degree, "Refuse degrees above this");
  auto* chk = verify->add_subcommand("ch-vs-closed", "Caporaso-Harris against the closed forms");
  chk->fallthrough();
  chk->add_option("--delta-max", o.delta_max, "Largest number of nodes")->check(CLI::Range(0, 8));
  chk->add_option("--extra", o.extra, "Degrees above d_min to check")->check(CLI::Range(0, 100));
  chk->add_option("--below", o.below, "Degrees below d_min to check (informational)")->check(CLI::Range(0, 100));
  auto* kaz = verify->add_subcommand("kazaryan", "Quartics with a node, a cusp and a tacnode");
  kaz->fallthrough();
  auto* vtable = verify->add_subcommand("table", "Tangency recursion over a table against the closed forms");
  vtable->fallthrough();
  vtable->add_option("file", o.file, "Table file")->required();

  auto* table = app.add_subcommand("table", "Inspect or extend base-value tables")->require_subcommand(1);
  table->fallthrough();
  auto* show = table->add_subcommand("show", "Print a table in canonical form");
  show->fallthrough();
  show->add_option("file", o.file, "Table file")->required();
  auto* invert = table->add_subcommand("invert", "Solve the recursion for N_d(A_k^m; L_{A_k})");
  invert->fallthrough();
  invert->add_option("--d", o.d, "Degree")->required();
  invert->add_option("--profile", o.profile, "Single-type profile A_k^m")->required();
  invert->add_option("--plain", o.plain_value, "N_d(profile) (default: from the table)");
  invert->add_option("--tangent", o.tangent_value, "N_d^T(profile) (default: closed form)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  detail::Runner r(o, out, err);
  try {
    if (*tangent) return r.count_tangent();
    if (*severi) return r.count_severi();
    if (*classify) return r.classify_point();
    if (*pencil) return r.verify_pencil();
    if (*chk) return r.verify_ch();
    if (*kaz) return r.verify_kazaryan();
    if (*vtable) return r.verify_table();
    if (*show) return r.table_show();
    if (*invert) return r.table_invert();
  } catch (const detail::UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  err << app.help();
  return 2;
}

}  // namespace aktangent::cli
