// Copyright 2023 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "poslab/diagram.hpp"
#include "poslab/enumeration.hpp"
#include "poslab/errors.hpp"
#include "poslab/matroid.hpp"
#include "poslab/network.hpp"
#include "poslab/paving.hpp"
#include "poslab/transversal.hpp"

namespace poslab::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0, 0);
  buf << in.rdbuf();
  return buf.str();
}

Json set_json(Subset s) { return elements(s); }

Json family_json(SetFamily f) {
  sort_family(f);
  Json arr = Json::array();
  for (Subset s : f) arr.push_back(set_json(s));
  return arr;
}

const char* kind_name(PavingCertificate::Kind kind) {
  switch (kind) {
    case PavingCertificate::Kind::kPldc:
      return "pldc";
    case PavingCertificate::Kind::kColoop:
      return "coloop";
    case PavingCertificate::Kind::kBoolean:
      return "boolean";
    case PavingCertificate::Kind::kRankZero:
      return "rank-zero";
    case PavingCertificate::Kind::kNotPaving:
      break;
  }
  return "none";
}

Json analyze(const LeDiagram& d) {
  const Matroid m(d.n(), bases_from_flows(d));
  const TransversalVerdict tv = classify_transversal(m);
  const PavingCertificate pc = classify_paving(d);
  const SetSystem supp = support(boundary_measurement(build_network(d)));
  const auto crossing = find_crossing(supp);

  Json v;
  v["version"] = kVersion;
  v["diagram"] = Json::parse(to_json(d));
  v["is_le"] = true;
  v["is_sq"] = validate_sq(d);
  v["is_transversal"] = tv.transversal;
  v["is_fundamental"] = tv.fundamental;
  v["is_paving"] = is_paving(m);
  v["is_sparse_paving"] = is_sparse_paving(m);
  if (d.k() == 2) {
    v["tau"] = loops(d) ? Json() : Json(tau(d).value);
    const Tau t = tau(loopless_reduction(d));
    v["tau_of_reduction"] = t.value;
    Json blocks = Json::array();
    for (auto [a, b] : t.blocks) blocks.push_back({a, b});
    v["tau_blocks"] = blocks;
    v["tau_top_only"] = t.top_only;
    v["tau_stray_bottom"] = t.stray_bottom;
  } else {
    v["tau"] = Json();
    v["tau_of_reduction"] = Json();
  }
  v["loops"] = set_json(loops(d));
  v["coloops"] = set_json(coloops(d));
  v["basis_count"] = m.bases().size();
  v["support"] = Json::parse(to_json(supp));
  v["support_noncrossing"] = !crossing;
  if (crossing) {
    v["crossing"] = {{"a", crossing->a}, {"b", crossing->b},
                     {"c", crossing->c}, {"d", crossing->d},
                     {"i", crossing->i}, {"j", crossing->j}};
  } else {
    v["crossing"] = Json();
  }
  v["violating_antichain"] =
      tv.violation ? family_json(*tv.violation) : Json();
  v["strict_antichain"] = tv.strict ? family_json(*tv.strict) : Json();
  Json paving;
  paving["kind"] = kind_name(pc.kind);
  if (pc.f) {
    paving["f"] = pc.f->values();
    paving["obstructions"] = family_json(obstructions(*pc.f).sets());
  }
  if (pc.kind == PavingCertificate::Kind::kColoop) paving["coloop"] = pc.coloop;
  v["paving_certificate"] = paving;
  return v;
}

std::string text_value(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  return v.dump();
}

int cmd_analyze(const std::string& path, bool as_text, std::ostream& out,
                std::ostream& err) {
  LeDiagram d;
  try {
    d = parse_diagram(read_input(path));
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const StructuralError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  }
  if (const auto bad = find_le_violation(d)) {
    err << "Le condition violated: cells " << format_cell(bad->above)
        << " and " << format_cell(bad->left) << " are filled but "
        << format_cell(bad->empty) << " is empty\n";
    return kExitNotLe;
  }
  const Json v = analyze(d);
  if (!as_text) {
    out << v.dump() << '\n';
    return 0;
  }
  out << to_ascii(d);
  for (const auto& [key, value] : v.items()) {
    if (key == "diagram") continue;
    out << key << ": " << text_value(value) << '\n';
  }
  return 0;
}

int cmd_table(const std::string& property, int n_max,
              const std::string& format, int jobs, double budget,
              std::string cache_path, const std::string& output,
              std::ostream& out, std::ostream& err) {
  if (const char* env = std::getenv("POSLAB_CACHE"); env && *env)
    cache_path = env;
  Property p;
  try {
    p = parse_property(property);
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  std::unique_ptr<ResultCache> cache;
  if (!cache_path.empty()) cache = std::make_unique<ResultCache>(cache_path);
  TableOptions options;
  options.jobs = jobs;
  options.budget_seconds = budget;
  options.cache = cache.get();

  CountTable table;
  int code = 0;
  try {
    table = emit_table(p, n_max, options);
  } catch (const BudgetExceeded& e) {
    table = e.partial();
    err << "budget of " << budget << "s exhausted; unfinished cells are '?'\n";
    code = kExitBudget;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  const std::string text = format == "csv" ? to_csv(table) : to_markdown(table);
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream file(output);
    file << text;
    if (!file) {
      err << "error: cannot write " << output << '\n';
      return kExitFailure;
    }
  }
  return code;
}

int cmd_pldc(const std::string& path, bool as_json, std::ostream& out,
             std::ostream& err) {
  PldcFunction f;
  try {
    f = parse_pldc_json(read_input(path));
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ArgumentError& e) {
    err << "range error: " << e.what() << '\n';
    return kExitParse;
  }
  const auto ldc_bad = ldc_violation(f);
  const auto pldc_bad = ldc_bad ? std::optional<int>() : pldc_violation(f);
  const bool pldc = !ldc_bad && !pldc_bad;
  Json r;
  r["version"] = kVersion;
  r["f"] = Json::parse(to_json(f));
  r["ldc"] = !ldc_bad;
  r["ldc_violation"] = ldc_bad ? Json(*ldc_bad) : Json();
  r["pldc"] = pldc;
  r["pldc_violation"] = pldc_bad ? Json(*pldc_bad) : Json();
  if (!ldc_bad) r["diagram"] = Json::parse(to_json(build_pldc_diagram(f)));
  if (pldc) {
    const ObstructionFamily fam = obstructions(f);
    Json obs = Json::array();
    for (const Obstruction& o : fam.members)
      obs.push_back({{"label", o.label == 0 ? Json("hat") : Json(o.label)},
                     {"set", set_json(o.set)}});
    r["obstructions"] = obs;
    r["sparse_paving"] = is_sparse_paving_f(f);
  }
  if (as_json) {
    out << r.dump() << '\n';
    return 0;
  }
  out << "f: " << r["f"]["f"].dump() << " (k=" << f.k() << ", n=" << f.n()
      << ")\n";
  out << "ldc: " << (ldc_bad ? "no (condition " + std::to_string(*ldc_bad) + ")"
                             : std::string("yes"));
  if (!ldc_bad)
    out << ", pldc: "
        << (pldc_bad ? "no (condition " + std::to_string(*pldc_bad) + ")"
                     : std::string("yes"));
  out << '\n';
  if (!ldc_bad) out << "diagram:\n" << to_ascii(build_pldc_diagram(f));
  if (pldc) {
    out << "obstructions:";
    for (const Obstruction& o : obstructions(f).members)
      out << ' ' << (o.label ? "H" + std::to_string(o.label) : std::string("H^"))
          << '=' << format_set(o.set);
    out << "\nsparse-paving: " << (is_sparse_paving_f(f) ? "yes" : "no")
        << '\n';
  }
  return 0;
}

int cmd_sparse(int n_max, std::ostream& out) {
  out << "n,cyclic_nonadjacent,recurrence,agree,enumerated_k2_to_n-2\n";
  for (int n = 0; n <= n_max; ++n) {
    const auto brute = cyclic_nonadjacent_subsets(n);
    const auto rec = sparse_recurrence(n);
    out << n << ',' << brute << ',' << rec << ','
        << (brute == rec ? "yes" : "no") << ',';
    bool first = true;
    for (int k = 2; k <= n - 2; ++k) {
      out << (first ? "" : " ") << count_sparse_paving(k, n);
      first = false;
    }
    out << '\n';
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Positroid classification and enumeration", "poslab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string analyze_path;
  bool analyze_json = false, analyze_text = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Classify one Le-diagram");
  analyze_cmd->add_option("file", analyze_path, "Diagram file (ASCII or JSON), - for stdin")
      ->required();
  auto* json_flag = analyze_cmd->add_flag("--json", analyze_json, "JSON output (default)");
  analyze_cmd->add_flag("--text", analyze_text, "Human-readable output")
      ->excludes(json_flag);

  std::string property, format = "md", cache_path, output;
  int n_max = 0, jobs = 1;
  double budget = 0;
  auto* table_cmd = app.add_subcommand("table", "Count positroids by (n, k)");
  table_cmd->add_option("property", property,
                        "all | transversal | fundamental | paving | sparse-paving")
      ->required();
  table_cmd->add_option("n_max", n_max, "Largest ground set size")->required();
  table_cmd->add_option("--format", format, "md or csv")
      ->check(CLI::IsMember({"md", "csv"}));
  table_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  table_cmd->add_option("--budget", budget, "Wall-clock budget in seconds");
  table_cmd->add_option("--cache", cache_path, "JSON-lines result cache");
  table_cmd->add_option("--output,-o", output, "Write the table to a file");

  std::string pldc_path;
  bool pldc_json = false;
  auto* pldc_cmd = app.add_subcommand("pldc", "Check an ldc/pldc function");
  pldc_cmd->add_option("file", pldc_path, "JSON {\"k\",\"n\",\"f\"}, - for stdin")
      ->required();
  pldc_cmd->add_flag("--json", pldc_json, "JSON output");

  int sparse_n = 0;
  auto* sparse_cmd =
      app.add_subcommand("sparse", "Sparse paving counts against the recurrence");
  sparse_cmd->add_option("n_max", sparse_n, "Largest n")->required()->check(CLI::Range(0, 20));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // Help and version requests exit 0; usage errors share the parse code.
    return app.exit(e, out, err) == 0 ? 0 : kExitParse;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(analyze_path, analyze_text, out, err);
    if (*table_cmd)
      return cmd_table(property, n_max, format, jobs, budget, cache_path,
                       output, out, err);
    if (*pldc_cmd) return cmd_pldc(pldc_path, pldc_json, out, err);
    if (*sparse_cmd) return cmd_sparse(sparse_n, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace poslab::cli
