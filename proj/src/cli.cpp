#include "schubert/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <thread>

#include "schubert/ehrhart.hpp"
#include "schubert/errors.hpp"
#include "schubert/matroid.hpp"
#include "schubert/oracles.hpp"
#include "schubert/scan.hpp"

namespace schubert {

namespace {

struct Settings {
  OracleBudget budget;
  long classify_max_n = 16;
  unsigned jobs = 1;
};

// Keys accepted in a configuration file; flags given on the command line win.
void apply_config(const std::string& path, Settings& settings) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file " + path);
  Json config;
  try {
    config = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError("config file " + path + ": " + e.what());
  }
  if (!config.is_object()) throw ParseError("config file must hold a JSON object");
  for (const auto& [key, value] : config.items()) {
    if (!value.is_number_integer() || value.get<long long>() < 0)
      throw ParseError("config key " + key + " must be a nonnegative integer");
    const auto number = value.get<long long>();
    if (key == "max_boxes") settings.budget.max_boxes = static_cast<int>(number);
    else if (key == "max_ground") settings.budget.max_ground = static_cast<int>(number);
    else if (key == "max_dilation") settings.budget.max_dilation = number;
    else if (key == "max_f_tuples") settings.budget.max_f_tuples = static_cast<std::uint64_t>(number);
    else if (key == "classify_max_n") settings.classify_max_n = number;
    else if (key == "jobs") settings.jobs = static_cast<unsigned>(number);
    else throw ParseError("unknown config key " + key);
  }
}

struct MatroidFlags {
  std::optional<std::string> set;
  std::optional<std::string> r;
  std::optional<std::string> family;
  std::optional<long> k, n, a, b;
};

void add_spec_flags(CLI::App& cmd, MatroidFlags& flags) {
  cmd.add_option("--set", flags.set, "Set literal, e.g. \"{2,4}\"");
  cmd.add_option("--r", flags.r, "r-sequence literal, e.g. \"2,1,2,1,1,1\"");
  cmd.add_option("--family", flags.family, "uniform | minimal | sparse-paving | catalan");
  cmd.add_option("--k", flags.k, "Rank for uniform, minimal and sparse-paving");
  cmd.add_option("--n", flags.n, "Ground set size, or pair count for catalan");
  cmd.add_option("--a", flags.a, "Zero-run length for catalan");
  cmd.add_option("--b", flags.b, "One-run length for catalan");
}

long required(const std::optional<long>& value, const char* flag, const std::string& family) {
  if (!value) throw ParseError("family " + family + " requires " + flag);
  return *value;
}

RSequence resolve_matroid(const MatroidFlags& flags) {
  const int given = flags.set.has_value() + flags.r.has_value() + flags.family.has_value();
  if (given != 1) throw ParseError("give exactly one of --set, --r, --family");
  if (flags.set) return set_to_rsequence(parse_set_literal(*flags.set));
  if (flags.r) return parse_rsequence_literal(*flags.r);
  const std::string& family = *flags.family;
  if (family == "uniform") return uniform_rsequence(required(flags.k, "--k", family), required(flags.n, "--n", family));
  if (family == "minimal") return minimal_rsequence(required(flags.k, "--k", family), required(flags.n, "--n", family));
  if (family == "sparse-paving" || family == "sparse_paving")
    return sparse_paving_rsequence(required(flags.k, "--k", family), required(flags.n, "--n", family));
  if (family == "catalan")
    return catalan_rsequence(required(flags.n, "--n", family), required(flags.a, "--a", family),
                             required(flags.b, "--b", family));
  throw ParseError("unknown family " + family);
}

Json blocks_json(const RSequence& r) { return Json(std::vector<long>(r.blocks().begin(), r.blocks().end())); }

std::string csv_params(const Params& params) {
  std::string out;
  for (const auto& [name, value] : params) {
    if (!out.empty()) out += ';';
    out += name + '=' + std::to_string(value);
  }
  return out;
}

struct EhrhartFlags {
  MatroidFlags matroid;
  std::optional<long> t;
  std::optional<long> tmax;
  bool verify = false;
};

int cmd_ehrhart(const EhrhartFlags& flags, const std::string& format, const Settings& settings, std::ostream& out) {
  const RSequence r = resolve_matroid(flags.matroid);
  const SchubertSet set = rsequence_to_set(r);
  if (flags.t && flags.tmax) throw ParseError("give at most one of --t, --tmax");
  long low = 0;
  long high = r.ground_size();
  if (flags.t) low = high = *flags.t;
  if (flags.tmax) high = *flags.tmax;
  if (low < 0 || high < 0) throw ParseError("dilation must be nonnegative");

  const RationalPolynomial polynomial = ehrhart_polynomial(r);
  std::vector<std::pair<long, BigInt>> values;
  for (long t = low; t <= high; ++t) values.emplace_back(t, count_dilation(r, t).count);

  struct Check {
    long t;
    BigInt oracle;
    std::optional<BigInt> kohnert;
  };
  std::vector<Check> checks;
  bool agree = true;
  if (flags.verify) {
    const std::vector<int> indicator = set.indicator();
    for (const auto& [t, count] : values) {
      Check check{t, lattice_points_direct(set, t, settings.budget), std::nullopt};
      if (t * set.rank() <= settings.budget.max_boxes) {
        std::vector<int> alpha(indicator);
        for (int& entry : alpha) entry *= static_cast<int>(t);
        check.kohnert = kohnert_monomial_count(alpha, settings.budget);
      }
      agree = agree && check.oracle == count && (!check.kohnert || *check.kohnert == count);
      checks.push_back(std::move(check));
    }
  }

  if (format == "csv") {
    out << "kind,index,value\n";
    for (const auto& [t, count] : values) out << "count," << t << ',' << count.get_str() << '\n';
    for (std::size_t i = 0; i < polynomial.coefficients().size(); ++i)
      out << "coefficient," << i << ',' << polynomial.coefficients()[i].get_str() << '\n';
    for (const auto& check : checks) {
      out << "rank_inequality," << check.t << ',' << check.oracle.get_str() << '\n';
      if (check.kohnert) out << "kohnert," << check.t << ',' << check.kohnert->get_str() << '\n';
    }
  } else {
    Json doc;
    doc["set"] = format_set(set.elements());
    doc["r"] = blocks_json(r);
    doc["n"] = r.ground_size();
    doc["rank"] = r.rank();
    doc["polynomial"] = polynomial_json(polynomial);
    Json value_map = Json::object();
    for (const auto& [t, count] : values) value_map[std::to_string(t)] = count.get_str();
    doc["values"] = std::move(value_map);
    if (flags.verify) {
      Json list = Json::array();
      for (const auto& check : checks) {
        Json entry{{"t", check.t}, {"rank_inequality", check.oracle.get_str()}};
        entry["kohnert"] = check.kohnert ? Json(check.kohnert->get_str()) : Json(nullptr);
        list.push_back(std::move(entry));
      }
      doc["verify"] = {{"agree", agree}, {"checks", std::move(list)}};
    }
    out << doc.dump(2) << '\n';
  }
  return agree ? kExitOk : kExitFinding;
}

int cmd_classify(const MatroidFlags& flags, const Settings& settings, std::ostream& out) {
  const RSequence r = resolve_matroid(flags);
  if (r.ground_size() > settings.classify_max_n)
    throw BudgetExceeded("classify: ground set size " + std::to_string(r.ground_size()) + " exceeds budget " +
                         std::to_string(settings.classify_max_n));
  const SchubertSet set = rsequence_to_set(r);
  Json hyperplanes = Json::array();
  for (const auto& h : circuit_hyperplanes(set)) hyperplanes.push_back(format_set(h));
  Json doc;
  doc["set"] = format_set(set.elements());
  doc["r"] = blocks_json(r);
  doc["n"] = r.ground_size();
  doc["sparse_paving"] = is_sparse_paving(set);
  doc["rank"] = set.rank();
  doc["n_bases"] = static_cast<long>(enumerate_bases(set).size());
  doc["circuit_hyperplanes"] = std::move(hyperplanes);
  doc["matches_characterization"] = matches_sparse_paving_pattern(r);
  out << doc.dump(2) << '\n';
  return kExitOk;
}

void write_scan_csv(const ScanReport& report, std::ostream& out) {
  out << "label,params,verdict,witnesses,zero_coefficients\n";
  for (const auto& p : report.points) {
    std::string witnesses;
    for (const auto& w : p.witnesses) {
      if (!witnesses.empty()) witnesses += ';';
      witnesses += std::to_string(w.index) + ':' + w.value.get_str();
    }
    std::string zeros;
    for (long z : p.zero_coefficients) {
      if (!zeros.empty()) zeros += ';';
      zeros += std::to_string(z);
    }
    out << p.label << ',' << csv_params(p.params) << ',' << to_string(p.verdict) << ',' << witnesses << ',' << zeros
        << '\n';
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Ehrhart polynomials of Schubert matroids", "schubert-ehrhart"};
  app.require_subcommand(1);

  std::string format = "json";
  std::optional<std::string> config_path;
  std::optional<long> jobs, max_boxes, max_ground, max_dilation, classify_max_n;
  std::optional<std::uint64_t> max_f_tuples;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--config", config_path, "JSON file with budget settings");
    cmd->add_option("--jobs", jobs, "Worker threads for scans")->check(CLI::PositiveNumber);
    cmd->add_option("--max-boxes", max_boxes, "Kohnert box budget");
    cmd->add_option("--max-ground", max_ground, "Ground set budget of the rank-inequality oracle");
    cmd->add_option("--max-dilation", max_dilation, "Dilation budget of the rank-inequality oracle");
    cmd->add_option("--max-f-tuples", max_f_tuples, "Tuple budget of the brute-force F count");
    cmd->add_option("--classify-max-n", classify_max_n, "Ground set budget for classify");
  };

  EhrhartFlags ehrhart_flags;
  CLI::App* ehrhart = app.add_subcommand("ehrhart", "Ehrhart polynomial and lattice point counts");
  add_spec_flags(*ehrhart, ehrhart_flags.matroid);
  ehrhart->add_option("--t", ehrhart_flags.t, "Single dilation");
  ehrhart->add_option("--tmax", ehrhart_flags.tmax, "Counts for t = 0..tmax (default n)");
  ehrhart->add_flag("--verify", ehrhart_flags.verify, "Cross-check against the brute-force oracles");
  add_common(ehrhart);

  MatroidFlags classify_flags;
  CLI::App* classify = app.add_subcommand("classify", "Sparse paving classification by brute force");
  add_spec_flags(*classify, classify_flags);
  add_common(classify);

  std::string scan_name;
  std::optional<long> max, max_n, param_budget, t_budget;
  bool timing = false;
  CLI::App* scan = app.add_subcommand("scan", "Conjecture scans, bound checks and identity suite");
  scan->add_option("which", scan_name, "f-positivity | catalan | bounds | identities")
      ->required()
      ->check(CLI::IsMember({"f-positivity", "catalan", "bounds", "identities"}));
  scan->add_option("--max", max, "Bound on a, b and |c| (f-positivity) or a, b (catalan)");
  scan->add_option("--max-n", max_n, "Bound on n (catalan, bounds)");
  scan->add_option("--param-budget", param_budget, "Parameter bound for the identity suite");
  scan->add_option("--t-budget", t_budget, "Dilation bound for the identity suite");
  scan->add_flag("--timing", timing, "Include elapsed time in the report");
  add_common(scan);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Settings settings;
    if (config_path) apply_config(*config_path, settings);
    if (jobs) settings.jobs = static_cast<unsigned>(*jobs);
    if (max_boxes) settings.budget.max_boxes = static_cast<int>(*max_boxes);
    if (max_ground) settings.budget.max_ground = static_cast<int>(*max_ground);
    if (max_dilation) settings.budget.max_dilation = *max_dilation;
    if (max_f_tuples) settings.budget.max_f_tuples = *max_f_tuples;
    if (classify_max_n) settings.classify_max_n = *classify_max_n;
    settings.jobs = std::max(1U, settings.jobs);

    if (*ehrhart) return cmd_ehrhart(ehrhart_flags, format, settings, out);
    if (*classify) return cmd_classify(classify_flags, settings, out);

    ScanReport report;
    if (scan_name == "f-positivity") {
      const long bound = max.value_or(6);
      report = scan_f_positivity(bound, bound, bound, settings.jobs);
    } else if (scan_name == "catalan") {
      const long bound = max.value_or(3);
      report = scan_catalan_conjectures(max_n.value_or(5), bound, bound, settings.jobs);
    } else if (scan_name == "bounds") {
      report = check_sparse_paving_bounds(max_n.value_or(10), settings.jobs);
    } else if (param_budget || t_budget) {
      const IdentityBudget defaults;
      report = run_identity_suite(param_budget.value_or(defaults.f_params), t_budget.value_or(defaults.f_t),
                                  settings.jobs);
    } else {
      report = run_identity_suite(IdentityBudget{}, settings.jobs);
    }
    if (format == "csv") write_scan_csv(report, out);
    else out << report.to_json(timing).dump(2) << '\n';
    return report.passed() ? kExitOk : kExitFinding;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConsistencyError& e) {
    err << "inconsistency: " << e.what() << '\n';
    return kExitFinding;
  }
}

}  // namespace schubert
