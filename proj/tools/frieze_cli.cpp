// frieze_cli.cpp
//
// Command-line surface for the frieze library.
//
// Verbs: build, from-triangulation, validate, diff, theorem-check, deform,
//        scan (cc|random), cuntz, polygon (sample|experiment|from-frieze|
//        to-frieze|random-frieze), enumerate.
// Output is JSON by default (CSV where noted) on stdout or --out FILE.
// Exit codes: 0 success, 2 usage error, 3 domain error, 4 violation found
// (scan verbs).

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "frieze/frieze.hpp"
#include "frieze/io.hpp"

namespace {

using frieze::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitViolation = 4;

std::vector<frieze::Rational> parse_rational_list(const std::string& csv) {
  std::vector<frieze::Rational> out;
  std::stringstream ss(csv);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    out.push_back(frieze::parse_rational(token));
  }
  if (out.empty()) throw std::invalid_argument("empty rational list");
  return out;
}

std::vector<double> parse_double_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    out.push_back(std::stod(token));
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    out.push_back(std::stoi(token));
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

std::vector<frieze::Triangulation::Diagonal> parse_diagonals(const std::string& csv) {
  std::vector<frieze::Triangulation::Diagonal> out;
  std::stringstream ss(csv);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    const auto dash = token.find('-');
    if (dash == std::string::npos)
      throw std::invalid_argument("diagonal must look like p-q, got '" + token + "'");
    out.emplace_back(std::stoi(token.substr(0, dash)), std::stoi(token.substr(dash + 1)));
  }
  return out;
}

json read_json_input(const std::string& path) {
  if (path == "-" || path.empty()) return json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
  return json::parse(in);
}

struct Output {
  std::string path;  // empty = stdout

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      if (text.empty() || text.back() != '\n') std::cout << "\n";
      return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
    out << text;
    if (text.empty() || text.back() != '\n') out << "\n";
  }
  void write(const json& j) const { write(j.dump(2)); }
};

int default_threads() {
  if (const char* env = std::getenv("FRIEZE_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  return 1;
}

// ---------------------------------------------------------------------------

struct BuildArgs {
  std::string first_row;
  bool entries = false;
  bool pretty = false;
  std::string format = "json";
  int csv_row = 1;
  Output out;
};

int run_build(const BuildArgs& args) {
  const auto row = parse_rational_list(args.first_row);
  const frieze::FriezeQ f = frieze::FriezeQ::build_from_first_row(row);
  if (args.pretty) {
    args.out.write(frieze::pretty_frieze(f));
  } else if (args.format == "csv") {
    args.out.write(frieze::sequence_to_csv(f.row(args.csv_row)));
  } else {
    args.out.write(frieze::frieze_to_json(f, args.entries));
  }
  return kExitOk;
}

struct FromTriangulationArgs {
  int n = 0;
  std::string diagonals;
  std::string in;
  bool entries = false;
  bool pretty = false;
  Output out;
};

int run_from_triangulation(const FromTriangulationArgs& args) {
  std::optional<frieze::Triangulation> t;
  if (!args.in.empty()) {
    t = frieze::triangulation_from_json(read_json_input(args.in));
  } else {
    t = frieze::Triangulation(args.n, parse_diagonals(args.diagonals));
  }
  const frieze::FriezeQ f = frieze::triangulation_to_frieze(*t);
  if (args.pretty) {
    args.out.write(frieze::pretty_frieze(f));
  } else {
    json j = frieze::frieze_to_json(f, args.entries);
    j["triangulation"] = frieze::triangulation_to_json(*t);
    args.out.write(j);
  }
  return kExitOk;
}

int run_validate(const std::string& in, const Output& out) {
  const json j = read_json_input(in);
  frieze::ValidationReport report;
  if (frieze::frieze_json_is_exact(j)) {
    report = frieze::validate(frieze::frieze_q_from_json(j));
  } else {
    report = frieze::validate(frieze::frieze_d_from_json(j));
  }
  out.write(frieze::validation_to_json(report));
  return report.ok ? kExitOk : kExitDomain;
}

struct PairArgs {
  std::string a, b, in_a, in_b;
  std::string k_list;
  std::string format = "json";
  Output out;
};

frieze::FriezeQ load_pair_side(const std::string& inline_row, const std::string& file) {
  if (!file.empty()) return frieze::frieze_q_from_json(read_json_input(file));
  return frieze::FriezeQ::build_from_first_row(parse_rational_list(inline_row));
}

int run_diff(const PairArgs& args, int k) {
  const frieze::FriezeQ f = load_pair_side(args.a, args.in_a);
  const frieze::FriezeQ g = load_pair_side(args.b, args.in_b);
  const auto check = frieze::check_four_sign_changes(f, g, k);
  if (args.format == "csv") {
    args.out.write(frieze::sequence_to_csv(check.difference));
  } else {
    args.out.write(frieze::check_to_json(check));
  }
  return kExitOk;
}

int run_theorem_check(const PairArgs& args) {
  const frieze::FriezeQ f = load_pair_side(args.a, args.in_a);
  const frieze::FriezeQ g = load_pair_side(args.b, args.in_b);
  std::vector<int> ks;
  if (!args.k_list.empty()) {
    ks = parse_int_list(args.k_list);
  } else {
    for (int k = 1; k <= f.width() / 2; ++k) ks.push_back(k);
    if (ks.empty()) ks.push_back(1);
  }
  json checks = json::array();
  for (int k : ks) checks.push_back(frieze::check_to_json(frieze::check_four_sign_changes(f, g, k)));
  args.out.write(json{{"n", f.period()},
                      {"width", f.width()},
                      {"checks", std::move(checks)},
                      {"sign_convention", frieze::kSignConvention}});
  return kExitOk;
}

struct DeformArgs {
  int n = 0;
  int k = 0;
  std::string q;
  Output out;
};

int run_deform(const DeformArgs& args) {
  frieze::DeformationInput input;
  if (args.q.rfind("seed:", 0) == 0) {
    const auto seed = static_cast<std::uint64_t>(std::stoull(args.q.substr(5)));
    input = frieze::random_deformation_input(args.n, args.k, seed);
  } else {
    input = frieze::DeformationInput{args.n, args.k, parse_double_list(args.q)};
  }
  const auto check = frieze::infinitesimal_check(input);
  const auto residuals = frieze::harmonic_orthogonality_report(check.c);
  args.out.write(json{{"n", input.n},
                      {"k", input.k},
                      {"q", input.q},
                      {"c", check.c.c},
                      {"residuals", frieze::residuals_to_json(residuals)},
                      {"count", check.count},
                      {"verdict", frieze::to_string(check.verdict)},
                      {"sign_convention", frieze::kSignConvention}});
  return kExitOk;
}

int finish_scan(const frieze::ScanReport& report, const Output& out) {
  out.write(frieze::report_to_json(report));
  return report.violations.empty() ? kExitOk : kExitViolation;
}

int run_cuntz(const Output& out, bool pretty) {
  const auto cc = frieze::cuntz_counterexample();
  if (pretty) {
    std::string text = "first (n=8, width=5):\n" + frieze::pretty_frieze(cc.first) +
                       "\nsecond (n=8, width=5):\n" + frieze::pretty_frieze(cc.second) +
                       "\nk=3 difference is strictly positive: sign-change count 0\n";
    out.write(text);
    return kExitOk;
  }
  out.write(json{{"first", frieze::frieze_to_json(cc.first, true)},
                 {"second", frieze::frieze_to_json(cc.second, true)},
                 {"report", frieze::report_to_json(cc.report)}});
  return kExitOk;
}

struct EnumerateArgs {
  int n = 0;
  bool count_only = false;
  bool stream = false;
  int cap = frieze::kEnumerationCap;
  Output out;
};

int run_enumerate(const EnumerateArgs& args) {
  if (args.stream) {
    std::ostringstream lines;
    frieze::enumerate_triangulations(
        args.n,
        [&](const frieze::Triangulation& t) {
          lines << frieze::triangulation_to_json(t).dump() << "\n";
          return true;
        },
        args.cap);
    args.out.write(lines.str());
    return kExitOk;
  }
  json list = json::array();
  long count = 0;
  frieze::enumerate_triangulations(
      args.n,
      [&](const frieze::Triangulation& t) {
        if (!args.count_only) list.push_back(frieze::triangulation_to_json(t));
        ++count;
        return true;
      },
      args.cap);
  json j{{"n", args.n}, {"count", count}, {"catalan", frieze::catalan(args.n - 2).str()}};
  if (!args.count_only) j["triangulations"] = std::move(list);
  args.out.write(j);
  return kExitOk;
}

struct ExperimentArgs {
  int n = 0;
  std::string k_list;
  int samples = 100;
  std::uint64_t seed = 1;
  std::string format = "json";
  Output out;
};

// Problem-2 style harness over random pairs of equilateral convex n-gons:
// reports per-k sign-change statistics of the diagonal-length differences.
int run_polygon_experiment(const ExperimentArgs& args) {
  std::vector<int> ks = args.k_list.empty() ? std::vector<int>{1} : parse_int_list(args.k_list);
  for (int k : ks)
    if (k < 1 || k > args.n - 2) throw frieze::IndexOutOfRange("k outside [1, n-2]");

  std::map<int, std::map<int, long>> histogram;  // k -> count -> freq
  std::ostringstream csv;
  csv << "k,sample,count\n";
  for (int s = 0; s < args.samples; ++s) {
    const auto pa = frieze::sample_equilateral_convex(
        args.n, frieze::detail::Rng::derive_seed(args.seed, 2ULL * s));
    const auto pb = frieze::sample_equilateral_convex(
        args.n, frieze::detail::Rng::derive_seed(args.seed, 2ULL * s + 1));
    for (int k : ks) {
      const int count = frieze::sign_changes(frieze::diagonal_difference(pa, pb, k));
      ++histogram[k][count];
      csv << k << "," << s << "," << count << "\n";
    }
  }
  if (args.format == "csv") {
    args.out.write(csv.str());
    return kExitOk;
  }
  json per_k = json::object();
  for (const auto& [k, hist] : histogram) {
    json h = json::object();
    int lo = -1, hi = -1;
    for (const auto& [count, freq] : hist) {
      h[std::to_string(count)] = freq;
      if (lo < 0) lo = count;
      hi = count;
    }
    per_k[std::to_string(k)] = json{{"min", lo}, {"max", hi}, {"histogram", std::move(h)}};
  }
  args.out.write(json{
      {"interpretation",
       "diagonal-length differences compare corresponding diagonals of two equilateral convex "
       "polygons; the single-polygon reading is not used"},
      {"n", args.n},
      {"samples", args.samples},
      {"seed", args.seed},
      {"per_k", std::move(per_k)},
      {"sign_convention", frieze::kSignConvention}});
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact frieze-pattern toolkit"};
  app.require_subcommand(1);
  int exit_code = kExitOk;
  std::function<void()> action;

  // build
  auto build_args = std::make_shared<BuildArgs>();
  auto* build = app.add_subcommand("build", "build a frieze from its first row");
  build->add_option("--first-row", build_args->first_row, "comma list of rationals (p/q or integers)")
      ->required();
  build->add_flag("--entries", build_args->entries, "include all rows in the JSON");
  build->add_flag("--pretty", build_args->pretty, "offset triangular text layout");
  build->add_option("--format", build_args->format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  build->add_option("--row", build_args->csv_row, "row to export with --format csv");
  build->add_option("--out", build_args->out.path, "output file (default stdout)");
  build->callback([&, build_args] { exit_code = run_build(*build_args); });

  // from-triangulation
  auto tri_args = std::make_shared<FromTriangulationArgs>();
  auto* ftri = app.add_subcommand("from-triangulation", "Conway-Coxeter frieze of a triangulation");
  ftri->add_option("--n", tri_args->n, "polygon size");
  ftri->add_option("--diagonals", tri_args->diagonals, "comma list p-q of diagonals");
  ftri->add_option("--in", tri_args->in, "triangulation JSON file (- for stdin)");
  ftri->add_flag("--entries", tri_args->entries, "include all rows in the JSON");
  ftri->add_flag("--pretty", tri_args->pretty, "offset triangular text layout");
  ftri->add_option("--out", tri_args->out.path, "output file");
  ftri->callback([&, tri_args] { exit_code = run_from_triangulation(*tri_args); });

  // validate
  auto validate_in = std::make_shared<std::string>("-");
  auto validate_out = std::make_shared<Output>();
  auto* val = app.add_subcommand("validate", "check the frieze axioms of a JSON pattern");
  val->add_option("--in", *validate_in, "frieze JSON file (- for stdin)");
  val->add_option("--out", validate_out->path, "output file");
  val->callback([&, validate_in, validate_out] { exit_code = run_validate(*validate_in, *validate_out); });

  // diff
  auto diff_args = std::make_shared<PairArgs>();
  auto diff_k = std::make_shared<int>(1);
  auto* diff = app.add_subcommand("diff", "row difference of two friezes");
  diff->add_option("--a", diff_args->a, "first row of the first frieze");
  diff->add_option("--b", diff_args->b, "first row of the second frieze");
  diff->add_option("--in-a", diff_args->in_a, "first frieze JSON file");
  diff->add_option("--in-b", diff_args->in_b, "second frieze JSON file");
  diff->add_option("--k", *diff_k, "row number (default 1)");
  diff->add_option("--format", diff_args->format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  diff->add_option("--out", diff_args->out.path, "output file");
  diff->callback([&, diff_args, diff_k] { exit_code = run_diff(*diff_args, *diff_k); });

  // theorem-check
  auto thm_args = std::make_shared<PairArgs>();
  auto* thm = app.add_subcommand("theorem-check", "four-sign-change verdicts for rows of a pair");
  thm->add_option("--a", thm_args->a, "first row of the first frieze");
  thm->add_option("--b", thm_args->b, "first row of the second frieze");
  thm->add_option("--in-a", thm_args->in_a, "first frieze JSON file");
  thm->add_option("--in-b", thm_args->in_b, "second frieze JSON file");
  thm->add_option("--k", thm_args->k_list, "comma list of rows (default 1..floor(width/2))");
  thm->add_option("--out", thm_args->out.path, "output file");
  thm->callback([&, thm_args] { exit_code = run_theorem_check(*thm_args); });

  // deform
  auto deform_args = std::make_shared<DeformArgs>();
  auto* deform = app.add_subcommand("deform", "first-order deformation analysis of the constant frieze");
  deform->add_option("--n", deform_args->n, "period")->required();
  deform->add_option("--k", deform_args->k, "row span parameter, 2..n-2")->required();
  deform->add_option("--q", deform_args->q, "comma list of q_i, or seed:S for Gaussian q")->required();
  deform->add_option("--out", deform_args->out.path, "output file");
  deform->callback([&, deform_args] { exit_code = run_deform(*deform_args); });

  // scan cc | scan random
  auto* scan = app.add_subcommand("scan", "search frieze pairs for four-sign-change violations");
  scan->require_subcommand(1);
  struct ScanCcArgs {
    int width = 2;
    std::string k_list = "1";
    long cap = 20000000;
    int threads = default_threads();
    Output out;
  };
  auto scan_cc_args = std::make_shared<ScanCcArgs>();
  auto* scan_cc_cmd = scan->add_subcommand("cc", "exhaustive over Conway-Coxeter friezes");
  scan_cc_cmd->add_option("--width", scan_cc_args->width, "frieze width (1..8)")->required();
  scan_cc_cmd->add_option("--k", scan_cc_args->k_list, "comma list of rows");
  scan_cc_cmd->add_option("--cap", scan_cc_args->cap, "pair cap (partial report when hit)");
  scan_cc_cmd->add_option("--threads", scan_cc_args->threads, "worker threads (FRIEZE_THREADS)");
  scan_cc_cmd->add_option("--out", scan_cc_args->out.path, "output file");
  scan_cc_cmd->callback([&, scan_cc_args] {
    exit_code = finish_scan(frieze::scan_cc(scan_cc_args->width, parse_int_list(scan_cc_args->k_list),
                                            scan_cc_args->cap, scan_cc_args->threads),
                            scan_cc_args->out);
  });
  struct ScanRandomArgs {
    int n = 9;
    std::string k_list = "1,2";
    int samples = 1000;
    std::uint64_t seed = 1;
    int threads = default_threads();
    Output out;
  };
  auto scan_rnd_args = std::make_shared<ScanRandomArgs>();
  auto* scan_rnd_cmd = scan->add_subcommand("random", "randomized over floating friezes");
  scan_rnd_cmd->add_option("--n", scan_rnd_args->n, "odd period >= 5")->required();
  scan_rnd_cmd->add_option("--k", scan_rnd_args->k_list, "comma list of rows");
  scan_rnd_cmd->add_option("--samples", scan_rnd_args->samples, "number of pairs");
  scan_rnd_cmd->add_option("--seed", scan_rnd_args->seed, "PRNG seed");
  scan_rnd_cmd->add_option("--threads", scan_rnd_args->threads, "worker threads (FRIEZE_THREADS)");
  scan_rnd_cmd->add_option("--out", scan_rnd_args->out.path, "output file");
  scan_rnd_cmd->callback([&, scan_rnd_args] {
    exit_code = finish_scan(
        frieze::scan_random(scan_rnd_args->n, parse_int_list(scan_rnd_args->k_list),
                            scan_rnd_args->samples, scan_rnd_args->seed, scan_rnd_args->threads),
        scan_rnd_args->out);
  });

  // cuntz
  auto cuntz_out = std::make_shared<Output>();
  auto cuntz_pretty = std::make_shared<bool>(false);
  auto* cuntz = app.add_subcommand("cuntz", "reproduce the rational width-5 counterexample");
  cuntz->add_option("--out", cuntz_out->path, "output file");
  cuntz->add_flag("--pretty", *cuntz_pretty, "offset triangular text layout");
  cuntz->callback([&, cuntz_out, cuntz_pretty] { exit_code = run_cuntz(*cuntz_out, *cuntz_pretty); });

  // polygon
  auto* polygon = app.add_subcommand("polygon", "polygon correspondences and experiments");
  polygon->require_subcommand(1);
  struct SampleArgs {
    int n = 5;
    std::uint64_t seed = 1;
    Output out;
  };
  auto sample_args = std::make_shared<SampleArgs>();
  auto* psample = polygon->add_subcommand("sample", "one random equilateral convex polygon");
  psample->add_option("--n", sample_args->n, "vertex count")->required();
  psample->add_option("--seed", sample_args->seed, "PRNG seed");
  psample->add_option("--out", sample_args->out.path, "output file");
  psample->callback([&, sample_args] {
    sample_args->out.write(
        frieze::polygon_to_json(frieze::sample_equilateral_convex(sample_args->n, sample_args->seed)));
    exit_code = kExitOk;
  });

  auto exp_args = std::make_shared<ExperimentArgs>();
  auto* pexp = polygon->add_subcommand("experiment", "diagonal-difference statistics over random pairs");
  pexp->add_option("--n", exp_args->n, "vertex count")->required();
  pexp->add_option("--k", exp_args->k_list, "comma list of diagonal spans (default 1)");
  pexp->add_option("--samples", exp_args->samples, "number of pairs");
  pexp->add_option("--seed", exp_args->seed, "PRNG seed");
  pexp->add_option("--format", exp_args->format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  pexp->add_option("--out", exp_args->out.path, "output file");
  pexp->callback([&, exp_args] { exit_code = run_polygon_experiment(*exp_args); });

  struct IoArgs {
    std::string in = "-";
    Output out;
  };
  auto pfrom_args = std::make_shared<IoArgs>();
  auto* pfrom = polygon->add_subcommand("from-frieze", "projective polygon of a frieze");
  pfrom->add_option("--in", pfrom_args->in, "frieze JSON file (- for stdin)");
  pfrom->add_option("--out", pfrom_args->out.path, "output file");
  pfrom->callback([&, pfrom_args] {
    const json j = read_json_input(pfrom_args->in);
    const frieze::ProjectivePolygon poly =
        frieze::frieze_json_is_exact(j)
            ? frieze::frieze_to_polygon(frieze::frieze_q_from_json(j))
            : frieze::frieze_to_polygon(frieze::frieze_d_from_json(j));
    pfrom_args->out.write(frieze::polygon_to_json(poly));
    exit_code = kExitOk;
  });

  auto pto_args = std::make_shared<IoArgs>();
  auto* pto = polygon->add_subcommand("to-frieze", "frieze of a projective polygon");
  pto->add_option("--in", pto_args->in, "polygon JSON file (- for stdin)");
  pto->add_option("--out", pto_args->out.path, "output file");
  pto->callback([&, pto_args] {
    const frieze::FriezeD f =
        frieze::polygon_to_frieze(frieze::polygon_from_json(read_json_input(pto_args->in)));
    pto_args->out.write(frieze::frieze_to_json(f, true));
    exit_code = kExitOk;
  });

  struct RandomFriezeArgs {
    int n = 5;
    std::uint64_t seed = 1;
    Output out;
  };
  auto prf_args = std::make_shared<RandomFriezeArgs>();
  auto* prf = polygon->add_subcommand("random-frieze", "random floating frieze via a random polygon");
  prf->add_option("--n", prf_args->n, "odd period >= 5")->required();
  prf->add_option("--seed", prf_args->seed, "PRNG seed");
  prf->add_option("--out", prf_args->out.path, "output file");
  prf->callback([&, prf_args] {
    prf_args->out.write(frieze::frieze_to_json(frieze::random_frieze(prf_args->n, prf_args->seed), true));
    exit_code = kExitOk;
  });

  // enumerate
  auto enum_args = std::make_shared<EnumerateArgs>();
  auto* enumerate = app.add_subcommand("enumerate", "all triangulations of the labeled n-gon");
  enumerate->add_option("--n", enum_args->n, "polygon size")->required();
  enumerate->add_flag("--count-only", enum_args->count_only, "omit the triangulation list");
  enumerate->add_flag("--stream", enum_args->stream, "one JSON triangulation per line");
  enumerate->add_option("--cap", enum_args->cap, "max polygon size accepted");
  enumerate->add_option("--out", enum_args->out.path, "output file");
  enumerate->callback([&, enum_args] { exit_code = run_enumerate(*enum_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const frieze::Error& e) {
    json diag{{"error", e.kind()}, {"message", e.what()}};
    if (const auto* nc = dynamic_cast<const frieze::NonClosing*>(&e)) {
      diag["monodromy"] = json::array({json::array({nc->monodromy[0], nc->monodromy[1]}),
                                       json::array({nc->monodromy[2], nc->monodromy[3]})});
    }
    std::cout << diag.dump(2) << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cout << json{{"error", "Error"}, {"message", e.what()}}.dump(2) << "\n";
    return kExitDomain;
  }
  return exit_code;
}
