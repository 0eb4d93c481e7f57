#include "qeccat/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "qeccat/errors.hpp"
#include "qeccat/noise_spec.hpp"
#include "qeccat/planner.hpp"
#include "qeccat/resources.hpp"

namespace qeccat::cli {

namespace {

std::string num_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string num6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct CommonOpts {
  std::string noise;
  int levels = 4;
  double gate_accuracy = 1.0;
  std::string family = "three";
  std::string format = "pretty";
  std::string out_path;
};

NoiseSpec parse_noise_arg(const std::string& arg) {
  std::string text = arg;
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    return NoiseSpec::parse(text);
  }
  std::ifstream in(arg);
  if (!in) throw SpecFormatError("cannot read noise file: " + arg);
  std::ostringstream ss;
  ss << in.rdbuf();
  return NoiseSpec::parse(ss.str());
}

int emit(const std::string& text, const CommonOpts& opts, std::ostream& out,
         std::ostream& err) {
  if (opts.out_path.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream f(opts.out_path, std::ios::binary);
  if (!f) {
    err << "cannot open output file: " << opts.out_path << "\n";
    return kExitUsage;
  }
  f << text;
  return kExitOk;
}

ordered_json scores_json(const SimilarityScores& s) {
  ordered_json j;
  j["s_i"] = s.s_i;
  j["s_x"] = s.s_x;
  j["s_z"] = s.s_z;
  j["s_y"] = s.s_y;
  return j;
}

ordered_json plan_json(const ConcatPlan& p) {
  ordered_json j;
  ordered_json seq = ordered_json::array();
  for (ProtocolId id : p.sequence()) seq.push_back(to_string(id));
  j["sequence"] = seq;
  ordered_json levels = ordered_json::array();
  for (const LevelRecord& r : p.records) {
    ordered_json row;
    row["level"] = r.level;
    row["protocol"] = to_string(r.protocol);
    row["scores_before"] = scores_json(r.scores_before);
    row["fidelity_after"] = r.fidelity_after;
    levels.push_back(row);
  }
  j["levels"] = levels;
  return j;
}

ordered_json report_json(const ResourceReport& rep) {
  ordered_json j;
  j["f0"] = rep.f0;
  j["F0"] = rep.F0;
  ordered_json levels = ordered_json::array();
  for (const LevelResources& row : rep.levels) {
    ordered_json r;
    r["level"] = row.level;
    r["protocol"] = to_string(row.protocol);
    r["Q"] = row.qubits;
    r["N_encode"] = row.encode_gates;
    r["N_decode"] = row.decode_gates;
    r["R"] = row.accuracy;
    r["f"] = row.fidelity;
    r["F"] = row.realized_fidelity;
    r["fault_tolerant"] = row.fault_tolerant;
    levels.push_back(r);
  }
  j["levels"] = levels;
  j["best_level"] = rep.best_level;
  j["best_F"] = rep.best_realized;
  return j;
}

void report_csv_rows(const ResourceReport& rep, const std::string& prefix,
                     std::ostringstream& csv) {
  for (const LevelResources& row : rep.levels) {
    csv << prefix << row.level << ',' << to_string(row.protocol) << ','
        << row.qubits << ',' << row.encode_gates << ',' << row.decode_gates
        << ',' << num_full(row.accuracy) << ',' << num_full(row.fidelity)
        << ',' << num_full(row.realized_fidelity) << ','
        << (row.fault_tolerant ? "true" : "false") << '\n';
  }
}

void report_pretty(const ResourceReport& rep, std::ostringstream& os) {
  os << "  f0 = " << num6(rep.f0) << "  F0 = " << num6(rep.F0) << "\n";
  os << "  level protocol          Q   N_encode   N_decode          R"
        "          f          F  fault_tolerant\n";
  for (const LevelResources& row : rep.levels) {
    char line[160];
    std::snprintf(line, sizeof line,
                  "  %5d %8s %10lld %10lld %10lld %10s %10s %10s  %s\n",
                  row.level, to_string(row.protocol),
                  static_cast<long long>(row.qubits),
                  static_cast<long long>(row.encode_gates),
                  static_cast<long long>(row.decode_gates),
                  num6(row.accuracy).c_str(), num6(row.fidelity).c_str(),
                  num6(row.realized_fidelity).c_str(),
                  row.fault_tolerant ? "yes" : "no");
    os << line;
  }
  os << "  best level: " << rep.best_level
     << " (F = " << num6(rep.best_realized) << ")\n";
}

void noise_pretty(const ordered_json& echo, std::ostringstream& os) {
  os << "noise: " << echo.at("family").get<std::string>();
  for (auto it = echo.begin(); it != echo.end(); ++it) {
    if (it.key() == "family") continue;
    if (it->is_number())
      os << "  " << it.key() << " = " << num6(it->get<double>());
    else if (it->is_array())
      os << "  " << it.key() << ": " << it->size();
  }
  os << "\n";
}

int run_analyze(const CommonOpts& opts, std::ostream& out, std::ostream& err) {
  NoiseSpec spec = parse_noise_arg(opts.noise);
  QubitChannel ch = spec.to_channel();
  QubitChannel canon = canonicalize_kraus(ch);
  SimilarityScores s = similarity(ch);
  ProtocolId chosen = classify(s);

  ordered_json doc;
  doc["command"] = "analyze";
  doc["noise"] = spec.echo();
  doc["channel"]["canonical_kraus_rank"] = canon.rank();
  doc["channel"]["trace_preservation_error"] = trace_preservation_error(ch);
  doc["channel"]["min_choi_eigenvalue"] = min_choi_eigenvalue(ch);
  doc["scores"] = scores_json(s);
  doc["chosen_protocol"] = to_string(chosen);

  std::ostringstream os;
  if (opts.format == "json") {
    os << doc.dump(2) << "\n";
  } else if (opts.format == "csv") {
    os << "s_i,s_x,s_z,s_y,chosen_protocol,canonical_kraus_rank,"
          "trace_preservation_error,min_choi_eigenvalue\n";
    os << num_full(s.s_i) << ',' << num_full(s.s_x) << ',' << num_full(s.s_z)
       << ',' << num_full(s.s_y) << ',' << to_string(chosen) << ','
       << canon.rank() << ','
       << num_full(doc["channel"]["trace_preservation_error"].get<double>())
       << ','
       << num_full(doc["channel"]["min_choi_eigenvalue"].get<double>())
       << '\n';
  } else {
    noise_pretty(doc["noise"], os);
    os << "canonical kraus rank: " << canon.rank() << "\n";
    os << "trace preservation error: "
       << num6(doc["channel"]["trace_preservation_error"].get<double>())
       << "\n";
    os << "min choi eigenvalue: "
       << num6(doc["channel"]["min_choi_eigenvalue"].get<double>()) << "\n";
    os << "scores: s_i = " << num6(s.s_i) << "  s_x = " << num6(s.s_x)
       << "  s_z = " << num6(s.s_z) << "  s_y = " << num6(s.s_y) << "\n";
    os << "chosen protocol: " << to_string(chosen) << "\n";
  }
  return emit(os.str(), opts, out, err);
}

int run_plan(const CommonOpts& opts, std::ostream& out, std::ostream& err) {
  CodeFamily fam;
  if (opts.family == "three") {
    fam = CodeFamily::three_qubit;
  } else if (opts.family == "five") {
    fam = CodeFamily::five_qubit;
  } else {
    err << "plan needs --family three or five\n";
    return kExitUsage;
  }
  int max_levels = fam == CodeFamily::three_qubit ? 8 : 4;
  if (opts.levels > max_levels) {
    err << "--levels above the " << to_string(fam) << " limit of "
        << max_levels << "\n";
    return kExitUsage;
  }

  NoiseSpec spec = parse_noise_arg(opts.noise);
  QubitChannel ch = spec.to_channel();
  ConcatPlan p = plan(ch, opts.levels, fam);
  ResourceReport rep = realized_fidelity_report(p, opts.gate_accuracy);

  ordered_json doc;
  doc["command"] = "plan";
  doc["noise"] = spec.echo();
  doc["family"] = to_string(fam);
  doc["gate_accuracy"] = opts.gate_accuracy;
  doc["plan"] = plan_json(p);
  doc["report"] = report_json(rep);

  std::ostringstream os;
  if (opts.format == "json") {
    os << doc.dump(2) << "\n";
  } else if (opts.format == "csv") {
    os << "level,protocol,Q,N_encode,N_decode,R,f,F,fault_tolerant\n";
    report_csv_rows(rep, "", os);
  } else {
    noise_pretty(doc["noise"], os);
    os << "family: " << to_string(fam)
       << "  gate accuracy: " << num6(opts.gate_accuracy) << "\n";
    os << "sequence:";
    for (ProtocolId id : p.sequence()) os << ' ' << to_string(id);
    os << "\n";
    report_pretty(rep, os);
  }
  return emit(os.str(), opts, out, err);
}

int run_compare(const CommonOpts& opts, std::ostream& out, std::ostream& err) {
  if (opts.family != "both") {
    err << "compare runs with --family both\n";
    return kExitUsage;
  }
  if (opts.levels > 8) {
    err << "--levels above the three_qubit limit of 8\n";
    return kExitUsage;
  }

  NoiseSpec spec = parse_noise_arg(opts.noise);
  QubitChannel ch = spec.to_channel();
  int five_levels = std::min(opts.levels, 4);
  ConcatPlan p3 = plan(ch, opts.levels, CodeFamily::three_qubit);
  ResourceReport r3 = realized_fidelity_report(p3, opts.gate_accuracy);
  ConcatPlan p5 = plan(ch, five_levels, CodeFamily::five_qubit);
  ResourceReport r5 = realized_fidelity_report(p5, opts.gate_accuracy);
  const char* winner =
      r3.best_realized >= r5.best_realized ? "three_qubit" : "five_qubit";

  ordered_json doc;
  doc["command"] = "compare";
  doc["noise"] = spec.echo();
  doc["gate_accuracy"] = opts.gate_accuracy;
  doc["three_qubit"]["plan"] = plan_json(p3);
  doc["three_qubit"]["report"] = report_json(r3);
  doc["five_qubit"]["plan"] = plan_json(p5);
  doc["five_qubit"]["report"] = report_json(r5);
  doc["winner"] = winner;

  std::ostringstream os;
  if (opts.format == "json") {
    os << doc.dump(2) << "\n";
  } else if (opts.format == "csv") {
    os << "family,level,protocol,Q,N_encode,N_decode,R,f,F,fault_tolerant\n";
    report_csv_rows(r3, "three_qubit,", os);
    report_csv_rows(r5, "five_qubit,", os);
  } else {
    noise_pretty(doc["noise"], os);
    os << "gate accuracy: " << num6(opts.gate_accuracy) << "\n";
    os << "three_qubit (sequence:";
    for (ProtocolId id : p3.sequence()) os << ' ' << to_string(id);
    os << ")\n";
    report_pretty(r3, os);
    os << "five_qubit\n";
    report_pretty(r5, os);
    os << "winner: " << winner << "\n";
  }
  return emit(os.str(), opts, out, err);
}

struct GoldenRow {
  std::string section;
  std::string name;
  double computed;
  double published;
  double tolerance;  // 0 = exact integer match required
};

// Published end-of-plan reference values for one noise scenario.
struct GoldenScenario {
  std::string name;
  QubitChannel channel;
  std::int64_t n_e4, n_d4;  // three-qubit gate totals at level 4
  double f4, F4;            // three-qubit fidelities at level 4
  double f3, F3;            // five-qubit fidelities at level 3
};

void golden_rows_for(const GoldenScenario& sc, std::vector<GoldenRow>& rows,
                     double r) {
  {
    ConcatPlan p = plan(sc.channel, 4, CodeFamily::three_qubit);
    ResourceReport rep = realized_fidelity_report(p, r);
    const LevelResources& last = rep.levels.back();
    rows.push_back({sc.name, "Q4_three_qubit", double(last.qubits), 81, 0});
    rows.push_back({sc.name, "N_e4_three_qubit", double(last.encode_gates),
                    double(sc.n_e4), 0});
    rows.push_back({sc.name, "N_d4_three_qubit", double(last.decode_gates),
                    double(sc.n_d4), 0});
    rows.push_back({sc.name, "R4_three_qubit", last.accuracy, 0.985105, 1e-5});
    rows.push_back({sc.name, "f4_three_qubit", last.fidelity, sc.f4, 1e-3});
    rows.push_back(
        {sc.name, "F4_three_qubit", last.realized_fidelity, sc.F4, 1e-3});
  }
  {
    ConcatPlan p = plan(sc.channel, 3, CodeFamily::five_qubit);
    ResourceReport rep = realized_fidelity_report(p, r);
    const LevelResources& last = rep.levels.back();
    rows.push_back({sc.name, "Q3_five_qubit", double(last.qubits), 125, 0});
    rows.push_back(
        {sc.name, "N_e3_five_qubit", double(last.encode_gates), 465, 0});
    rows.push_back(
        {sc.name, "N_d3_five_qubit", double(last.decode_gates), 682, 0});
    rows.push_back({sc.name, "R3_five_qubit", last.accuracy, 0.945986, 1e-5});
    rows.push_back({sc.name, "f3_five_qubit", last.fidelity, sc.f3, 1e-3});
    rows.push_back(
        {sc.name, "F3_five_qubit", last.realized_fidelity, sc.F3, 1e-3});
  }
}

int run_reproduce(const CommonOpts& opts, std::ostream& out,
                  std::ostream& err) {
  const double r = std::sqrt(0.999);
  std::vector<GoldenRow> rows;

  golden_rows_for({"depolarizing_0.92", make_depolarizing(0.92), 104, 198,
                   0.960219, 0.945917, 0.993991, 0.940301},
                  rows, r);
  golden_rows_for({"amplitude_damping_0.9", amplitude_damping_for_fidelity(0.9),
                   136, 230, 0.961634, 0.94731, 0.975488, 0.922798},
                  rows, r);

  bool all_pass = true;
  ordered_json jrows = ordered_json::array();
  for (const GoldenRow& row : rows) {
    bool pass = row.tolerance == 0.0
                    ? row.computed == row.published
                    : std::abs(row.computed - row.published) <= row.tolerance;
    all_pass = all_pass && pass;
    ordered_json j;
    j["section"] = row.section;
    j["name"] = row.name;
    j["computed"] = row.computed;
    j["published"] = row.published;
    j["tolerance"] = row.tolerance;
    j["pass"] = pass;
    jrows.push_back(j);
  }

  std::ostringstream os;
  if (opts.format == "json") {
    ordered_json doc;
    doc["command"] = "reproduce-paper";
    doc["gate_accuracy"] = r;
    doc["rows"] = jrows;
    doc["all_pass"] = all_pass;
    os << doc.dump(2) << "\n";
  } else if (opts.format == "csv") {
    os << "section,name,computed,published,tolerance,pass\n";
    for (const auto& j : jrows)
      os << j["section"].get<std::string>() << ','
         << j["name"].get<std::string>() << ','
         << num_full(j["computed"].get<double>()) << ','
         << num_full(j["published"].get<double>()) << ','
         << num_full(j["tolerance"].get<double>()) << ','
         << (j["pass"].get<bool>() ? "true" : "false") << '\n';
  } else {
    std::string section;
    for (const auto& j : jrows) {
      if (j["section"].get<std::string>() != section) {
        section = j["section"].get<std::string>();
        os << section << "\n";
      }
      bool exact = j["tolerance"].get<double>() == 0.0;
      std::string computed =
          exact ? std::to_string((long long)j["computed"].get<double>())
                : num6(j["computed"].get<double>());
      std::string published =
          exact ? std::to_string((long long)j["published"].get<double>())
                : num6(j["published"].get<double>());
      char line[160];
      std::snprintf(line, sizeof line,
                    "  %-18s computed %-12s published %-10s %s\n",
                    j["name"].get<std::string>().c_str(), computed.c_str(),
                    published.c_str(), j["pass"].get<bool>() ? "pass" : "FAIL");
      os << line;
    }
    os << (all_pass ? "all rows pass\n" : "SOME ROWS FAIL\n");
  }
  int code = emit(os.str(), opts, out, err);
  if (code != kExitOk) return code;
  return all_pass ? kExitOk : kExitUsage;
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_noise,
                bool with_levels) {
  if (with_noise)
    cmd->add_option("--noise", opts.noise,
                    "noise description: JSON file path or inline JSON")
        ->required();
  if (with_levels) {
    cmd->add_option("--levels", opts.levels, "concatenation depth")
        ->check(CLI::Range(1, 8));
    cmd->add_option("--gate-accuracy", opts.gate_accuracy,
                    "per-gate accuracy r in (0, 1]");
  }
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));
  cmd->add_option("--out", opts.out_path, "write output to file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"concatenated QEC planning and accounting"};
  app.require_subcommand(1);

  CommonOpts analyze_opts, plan_opts, compare_opts, repro_opts;
  compare_opts.family = "both";

  CLI::App* analyze = app.add_subcommand(
      "analyze", "similarity scores and protocol choice for a noise channel");
  add_common(analyze, analyze_opts, true, false);

  CLI::App* planc = app.add_subcommand(
      "plan", "adaptive concatenation plan with resource accounting");
  add_common(planc, plan_opts, true, true);
  planc->add_option("--family", plan_opts.family, "code family")
      ->check(CLI::IsMember({"three", "five"}));

  CLI::App* compare = app.add_subcommand(
      "compare", "three-qubit vs five-qubit families side by side");
  add_common(compare, compare_opts, true, true);
  compare->add_option("--family", compare_opts.family, "must be both")
      ->check(CLI::IsMember({"both"}));

  CLI::App* repro = app.add_subcommand(
      "reproduce-paper", "recompute the published reference values");
  add_common(repro, repro_opts, false, false);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze->parsed()) return run_analyze(analyze_opts, out, err);
    if (planc->parsed()) return run_plan(plan_opts, out, err);
    if (compare->parsed()) return run_compare(compare_opts, out, err);
    if (repro->parsed()) return run_reproduce(repro_opts, out, err);
    err << "no command given\n";
    return kExitUsage;
  } catch (const SpecFormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadFormat;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadChannel;
  }
}

}  // namespace qeccat::cli
