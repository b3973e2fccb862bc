#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "comgraph/errors.hpp"
#include "comgraph/group_spec.hpp"
#include "comgraph/number_theory.hpp"
#include "comgraph/parallel.hpp"

#ifndef COMGRAPH_VERSION
#define COMGRAPH_VERSION "0.0.0"
#endif
#ifndef COMGRAPH_DEFAULT_EXPECTED
#define COMGRAPH_DEFAULT_EXPECTED "data/expected.json"
#endif

namespace comgraph::cli {

namespace {

using nlohmann::json;

std::string canonical(std::string_view text) { return to_string(parse_spec(text)); }

// Instance lists per suite. Entries are normalised through the parser so the
// cache and the corpus always see canonical strings.
const std::map<std::string, std::vector<std::string>, std::less<>>& suite_table() {
  static const std::map<std::string, std::vector<std::string>, std::less<>> table{
      {"w-family",
       {"W(7)", "W(13)", "matgrp(3, 7, [[3,6,2],[2,0,1],[0,0,1]], [[0,4,1],[5,0,3],[0,0,1]])"}},
      {"ult", {"ult(3, 3)", "ult(3, 5)", "ult(3, 7)", "ult(4, 2)", "ult(4, 3)", "ult(5, 2)"}},
      {"wreath",
       {"wr(sym(3), 2)", "wr(sym(3), 3)", "wr(sym(4), 2)", "wr(alt(4), 3)", "wr(dih(10), 3)", "wr(dih(18), 2)",
        "wr(alt(5), 2)"}},
      {"small-centre", {"extra(2, 2)", "extra(3, 2)", "ult(3, 3)"}},
      {"prime-centre", {"q8()", "sym(3)", "sl23()", "dih(10)", "ult(3, 3)", "extra(5, 1)"}},
      {"central",
       {"cprod(q8(), q8(), phi=2)", "cprod(dih(8), q8(), phi=2)", "cprod(sl23(), sl23(), phi=2)",
        "cprod(extra(3, 1), extra(3, 1), phi=3)", "dprod(sym(3), sym(3))", "dprod(ult(4, 2), cyc(3))",
        "dprod(sym(3), cyc(2))", "cprod(q8(), cyc(4), phi=2)", "cprod(ult(3, 3), cyc(9), phi=3)",
        "dprod(wr(sym(3), 2), cyc(2))"}},
  };
  return table;
}

const std::vector<std::string> kSuiteOrder{"w-family", "ult", "wreath", "small-centre", "prime-centre", "central"};

std::uint32_t param(const GroupSpec& spec, std::size_t i) { return static_cast<std::uint32_t>(spec.params.at(i)); }

// Corpus keys mapped onto the observed report.
json observed_fields(const TheoremReport& report) {
  json out = report.measured;
  if (out.contains("group_order")) out["order"] = out["group_order"];
  out["hypothesis"] = report.hypothesis_satisfied;
  return out;
}

const json* corpus_entry(const json& corpus, const Instance& instance) {
  if (!corpus.contains("entries")) return nullptr;
  for (const auto& entry : corpus["entries"]) {
    if (entry.value("spec", "") == instance.spec && entry.value("suite", "") == instance.suite) return &entry;
  }
  return nullptr;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return json::parse(in);
}

struct CommonFlags {
  std::size_t max_order = kDefaultMaxOrder;
  std::optional<unsigned> threads;
  bool full_graph = false;

  AnalysisOptions options() const {
    AnalysisOptions o;
    o.max_order = max_order;
    o.threads = threads ? *threads : threads_from_env();
    o.mode = full_graph ? GraphMode::full : GraphMode::transversal;
    return o;
  }
};

void add_common(CLI::App& cmd, CommonFlags& flags) {
  cmd.add_option("--max-order", flags.max_order, "Abort enumeration beyond this many elements")
      ->capture_default_str();
  cmd.add_option("--threads", flags.threads, "Worker threads (0 = all cores; env COMGRAPH_THREADS)");
  cmd.add_flag("--full-graph", flags.full_graph, "Use every non-central element instead of one per coset");
}

void append_record(const std::string& path, const ResultRecord& record) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << record.to_json().dump() << '\n';
}

std::string format_path(const FiniteGroup& g, const std::vector<ElementId>& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += " -- ";
    out += g.format(path[i]);
  }
  return out;
}

int cmd_diameter(const std::string& text, const CommonFlags& flags, bool as_json, const std::string& dot_file,
                 const std::string& cache, std::ostream& out) {
  const auto options = flags.options();
  const auto started = std::chrono::steady_clock::now();
  const GroupPtr g = build_group(parse_spec(text), options.max_order);
  const auto graph = CommutingGraph::build(g, options.mode, options.threads);
  const auto d = diameter(graph, options.threads);
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);

  ResultRecord record;
  record.spec = g->label();
  record.suite = "diameter";
  record.group_order = g->order();
  record.center_order = g->center().size();
  record.mode = std::string(to_string(options.mode));
  record.connected = d.connected;
  record.diameter = d.diameter ? json(*d.diameter) : json("infinity");
  record.vertex_count = d.vertex_count;
  record.edge_count = d.edge_count;
  record.elapsed_ms = elapsed.count();

  if (!dot_file.empty()) {
    std::ofstream dot(dot_file);
    if (!dot) throw std::runtime_error("cannot write " + dot_file);
    dot << export_dot(graph);
  }
  if (!cache.empty()) append_record(cache, record);

  if (as_json) {
    json doc = record.to_json();
    doc["component_count"] = d.component_count;
    doc["witness_pair"] = {g->format(d.witness_pair.first), g->format(d.witness_pair.second)};
    json path = json::array();
    for (const ElementId x : d.witness_path) path.push_back(g->format(x));
    doc["witness_path"] = path;
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << "group       " << record.spec << '\n'
      << "order       " << record.group_order << '\n'
      << "center      " << record.center_order << '\n'
      << "mode        " << record.mode << '\n'
      << "vertices    " << record.vertex_count << '\n'
      << "edges       " << record.edge_count << '\n'
      << "components  " << d.component_count << '\n'
      << "diameter    " << diameter_to_string(d.diameter) << '\n';
  if (d.connected) {
    out << "witness     " << format_path(*g, d.witness_path) << '\n';
  } else {
    out << "separated   " << g->format(d.witness_pair.first) << " / " << g->format(d.witness_pair.second) << '\n';
  }
  out << "elapsed     " << record.elapsed_ms << " ms\n";
  return kExitOk;
}

int cmd_info(const std::string& text, const CommonFlags& flags, bool as_json, std::ostream& out) {
  const GroupPtr g = build_group(parse_spec(text), flags.max_order);
  std::map<std::uint64_t, std::size_t> order_counts;
  for (const auto o : g->element_orders()) ++order_counts[o];
  std::map<std::uint64_t, std::size_t> class_counts;
  for (const auto& c : g->conjugacy_classes().classes) ++class_counts[g->element_order(c.front())];
  const std::uint64_t index = g->order() / g->center().size();
  std::string factors;
  for (const auto& [prime, exponent] : factorize(index)) {
    for (unsigned i = 0; i < exponent; ++i) factors += (factors.empty() ? "" : "*") + std::to_string(prime);
  }
  if (factors.empty()) factors = "1";
  const auto cls = nilpotency_class(*g);

  json doc;
  doc["spec"] = g->label();
  doc["representation"] = g->representation().kind();
  doc["order"] = g->order();
  doc["center_order"] = g->center().size();
  doc["center_index"] = index;
  doc["center_index_factorization"] = factors;
  doc["derived_order"] = g->derived_subgroup().size();
  doc["abelian"] = g->is_abelian();
  doc["nilpotency_class"] = cls ? json(*cls) : json(nullptr);
  doc["class_count"] = g->conjugacy_classes().classes.size();
  json orders = json::object();
  for (const auto& [o, c] : order_counts) orders[std::to_string(o)] = {{"elements", c}, {"classes", class_counts[o]}};
  doc["element_orders"] = orders;
  json gens = json::array();
  for (const ElementId x : g->generators()) gens.push_back(g->format(x));
  doc["generators"] = gens;

  if (as_json) {
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << "group          " << g->label() << '\n'
      << "representation " << g->representation().kind() << '\n'
      << "order          " << g->order() << '\n'
      << "center         " << g->center().size() << " (index " << index << " = " << factors << ")\n"
      << "derived        " << g->derived_subgroup().size() << '\n'
      << "nilpotency     " << (cls ? "class " + std::to_string(*cls) : std::string("not nilpotent")) << '\n'
      << "classes        " << g->conjugacy_classes().classes.size() << '\n'
      << "element orders\n";
  for (const auto& [o, c] : order_counts) {
    out << "  " << std::setw(4) << o << ": " << c << " elements in " << class_counts[o] << " classes\n";
  }
  out << "generators\n";
  for (const ElementId x : g->generators()) out << "  " << g->format(x) << '\n';
  return kExitOk;
}

int cmd_export(const std::string& text, const CommonFlags& flags, const std::string& format,
               const std::string& output, std::ostream& out) {
  const auto options = flags.options();
  const GroupPtr g = build_group(parse_spec(text), options.max_order);
  const auto graph = CommutingGraph::build(g, options.mode, options.threads);
  const std::string body = format == "dot" ? export_dot(graph) : export_json(graph);
  if (output.empty() || output == "-") {
    out << body;
    if (!body.empty() && body.back() != '\n') out << '\n';
    return kExitOk;
  }
  std::ofstream file(output);
  if (!file) throw std::runtime_error("cannot write " + output);
  file << body;
  return kExitOk;
}

struct Outcome {
  std::optional<TheoremReport> report;
  Comparison comparison;
  std::string error;
  bool cap_exceeded = false;
};

int cmd_verify(const std::string& suite, const CommonFlags& flags, const std::string& cache,
               const std::string& expected_path, bool as_json, std::ostream& out, std::ostream& err) {
  const auto instances = suite_instances(suite);
  const json corpus = load_json(expected_path);
  const auto options = flags.options();
  const unsigned total = resolve_threads(options.threads);
  const unsigned outer = std::max(1u, std::min<unsigned>(total, static_cast<unsigned>(instances.size())));
  AnalysisOptions inner = options;
  inner.threads = std::max(1u, total / outer);

  std::vector<std::optional<Outcome>> outcomes(instances.size());
  std::size_t next_to_print = 0;
  std::mutex print_mutex;
  int exit_code = kExitOk;
  json summary = json::array();

  if (!as_json) {
    out << std::left << std::setw(14) << "suite" << std::setw(44) << "instance" << std::setw(8) << "order"
        << std::setw(10) << "diameter" << std::setw(8) << "result" << "ms\n";
  }
  auto emit = [&](std::size_t i) {
    const Instance& instance = instances[i];
    const Outcome& o = *outcomes[i];
    std::string status = "ok";
    if (!o.error.empty()) {
      status = "error";
      exit_code = o.cap_exceeded && exit_code == kExitOk ? kExitCapExceeded : kExitError;
    } else if (!o.comparison.ok) {
      status = "MISMATCH";
      if (exit_code == kExitOk) exit_code = kExitMismatch;
    }
    if (o.report && !cache.empty()) append_record(cache, make_record(instance.spec, instance.suite, *o.report));
    if (as_json) {
      json row{{"suite", instance.suite}, {"spec", instance.spec}, {"status", status}, {"diffs", o.comparison.diffs}};
      if (o.report) row["report"] = o.report->to_json();
      if (!o.error.empty()) row["error"] = o.error;
      summary.push_back(std::move(row));
      return;
    }
    const json measured = o.report ? o.report->measured : json::object();
    out << std::left << std::setw(14) << instance.suite << std::setw(43) << instance.spec << ' ' << std::setw(8)
        << (measured.contains("group_order") ? measured["group_order"].dump() : "-") << std::setw(10)
        << (measured.contains("diameter") ? measured["diameter"].get<json>().is_string()
                                                ? measured["diameter"].get<std::string>()
                                                : measured["diameter"].dump()
                                          : "-")
        << std::setw(8) << status << (o.report ? o.report->elapsed.count() : 0) << '\n';
    for (const auto& diff : o.comparison.diffs) out << "    " << diff << '\n';
    if (!o.error.empty()) out << "    " << o.error << '\n';
    out.flush();
  };

  parallel_for(instances.size(), outer, [&](std::size_t i, unsigned) {
    Outcome o;
    try {
      o.report = run_instance(instances[i], inner);
      o.comparison = compare(instances[i], *o.report, corpus);
    } catch (const OrderCapExceeded& e) {
      o.error = e.what();
      o.cap_exceeded = true;
    } catch (const std::exception& e) {
      o.error = e.what();
    }
    std::lock_guard lock(print_mutex);
    outcomes[i] = std::move(o);
    while (next_to_print < outcomes.size() && outcomes[next_to_print]) emit(next_to_print++);
  });

  if (as_json) out << json{{"suite", suite}, {"exit_code", exit_code}, {"instances", summary}}.dump(2) << '\n';
  if (exit_code == kExitMismatch) err << "verification mismatch\n";
  return exit_code;
}

}  // namespace

std::string artifact_version() { return "comgraph " COMGRAPH_VERSION; }

nlohmann::json ResultRecord::to_json() const {
  return {{"spec", spec},
          {"suite", suite},
          {"group_order", group_order},
          {"center_order", center_order},
          {"mode", mode},
          {"connected", connected},
          {"diameter", diameter},
          {"vertex_count", vertex_count},
          {"edge_count", edge_count},
          {"elapsed_ms", elapsed_ms},
          {"artifact_version", version},
          {"schema", schema}};
}

ResultRecord ResultRecord::from_json(const nlohmann::json& doc) {
  ResultRecord r;
  r.spec = doc.at("spec").get<std::string>();
  r.suite = doc.value("suite", "");
  r.group_order = doc.at("group_order").get<std::uint64_t>();
  r.center_order = doc.at("center_order").get<std::uint64_t>();
  r.mode = doc.at("mode").get<std::string>();
  r.connected = doc.at("connected").get<bool>();
  r.diameter = doc.at("diameter");
  r.vertex_count = doc.at("vertex_count").get<std::uint64_t>();
  r.edge_count = doc.at("edge_count").get<std::uint64_t>();
  r.elapsed_ms = doc.at("elapsed_ms").get<std::int64_t>();
  r.version = doc.at("artifact_version").get<std::string>();
  r.schema = doc.at("schema").get<int>();
  return r;
}

ResultRecord make_record(std::string spec, std::string suite, const TheoremReport& report) {
  const json& m = report.measured;
  ResultRecord r;
  r.spec = std::move(spec);
  r.suite = std::move(suite);
  r.group_order = m.value("group_order", std::uint64_t{0});
  r.center_order = m.value("center_order", std::uint64_t{0});
  r.mode = m.value("mode", "");
  r.connected = m.value("connected", false);
  r.diameter = m.contains("diameter") ? m["diameter"] : json(nullptr);
  r.vertex_count = m.value("vertex_count", std::uint64_t{0});
  r.edge_count = m.value("edge_count", std::uint64_t{0});
  r.elapsed_ms = report.elapsed.count();
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    auto v = kSuiteOrder;
    v.emplace_back("all");
    return v;
  }();
  return names;
}

std::vector<Instance> suite_instances(std::string_view suite) {
  std::vector<Instance> out;
  for (const auto& name : kSuiteOrder) {
    if (suite != "all" && suite != name) continue;
    for (const auto& spec : suite_table().at(name)) out.push_back({name, canonical(spec)});
  }
  if (out.empty()) throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  return out;
}

TheoremReport run_instance(const Instance& instance, const AnalysisOptions& options) {
  const GroupSpec spec = parse_spec(instance.spec);
  const std::string& s = instance.suite;
  TheoremReport report;
  if (s == "w-family" && spec.kind == GroupSpec::Kind::construction_w) {
    report = w_certificates(param(spec, 0), options);
  } else if (s == "ult") {
    report = ult_certificates(param(spec, 0), param(spec, 1), options);
  } else if (s == "wreath") {
    report = check_wreath_theorem(build_group(spec.children.at(0), options.max_order), param(spec, 0), options);
  } else if (s == "small-centre") {
    report = check_small_centre(build_group(spec, options.max_order), options);
  } else if (s == "prime-centre") {
    report = check_prime_centre_index(build_group(spec, options.max_order), options);
  } else if (s == "central") {
    const GroupPtr left = build_group(spec.children.at(0), options.max_order);
    const GroupPtr right = build_group(spec.children.at(1), options.max_order);
    const std::uint32_t m = spec.kind == GroupSpec::Kind::central_product ? param(spec, 0) : 1;
    report = check_central_product_theorem(left, right, identify_centers(*left, *right, m), options);
  } else {
    report = measure_graph(build_group(spec, options.max_order), options);
  }
  report.instance = instance.spec;
  return report;
}

Comparison compare(const Instance& instance, const TheoremReport& report, const nlohmann::json& corpus) {
  Comparison c;
  const json observed = observed_fields(report);
  if (const json* entry = corpus_entry(corpus, instance)) {
    const std::string anchor = entry->value("anchor", "");
    for (const auto& [key, value] : entry->items()) {
      if (key == "suite" || key == "spec" || key == "anchor") continue;
      const json got = observed.contains(key) ? observed[key] : json(nullptr);
      if (got != value) {
        c.ok = false;
        c.diffs.push_back(key + ": expected " + value.dump() + ", got " + got.dump() + "  [" + anchor + "]");
      }
    }
  }
  if (report.hypothesis_satisfied && report.conclusion_checked && !report.conclusion_holds) {
    c.ok = false;
    c.diffs.push_back("conclusion of " + report.theorem + " fails on this instance");
  }
  for (const auto& cert : report.certificates) {
    if (!cert.passed) {
      c.ok = false;
      c.diffs.push_back("certificate failed: " + cert.name + (cert.detail.empty() ? "" : " (" + cert.detail + ")"));
    }
  }
  return c;
}

unsigned threads_from_env() {
  const char* value = std::getenv("COMGRAPH_THREADS");
  if (!value) return 0;
  unsigned parsed = 0;
  const std::string_view text(value);
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), parsed);
  if (ec != std::errc{} || end != text.data() + text.size()) return 0;
  return parsed;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Commuting graphs of finite groups", "comgraph"};
  app.require_subcommand(1);
  app.set_version_flag("--version", artifact_version());

  CommonFlags diameter_flags, info_flags, export_flags, verify_flags;
  std::string spec_text;

  auto* diameter_cmd = app.add_subcommand("diameter", "Diameter of the commuting graph of a group");
  diameter_cmd->add_option("spec", spec_text, "Group expression, e.g. \"wr(sym(3), 2)\"")->required();
  add_common(*diameter_cmd, diameter_flags);
  bool diameter_json = false;
  std::string dot_file, diameter_cache;
  diameter_cmd->add_flag("--json", diameter_json, "Print a JSON report");
  diameter_cmd->add_option("--dot", dot_file, "Also write the graph as Graphviz DOT");
  diameter_cmd->add_option("--cache", diameter_cache, "Append the result record to this JSON-lines file");

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite against the expected values");
  std::string suite;
  verify_cmd->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  add_common(*verify_cmd, verify_flags);
  std::string cache = "results.jsonl";
  std::string expected = COMGRAPH_DEFAULT_EXPECTED;
  bool verify_json = false;
  verify_cmd->add_option("--cache", cache, "JSON-lines result cache (empty string disables)")->capture_default_str();
  verify_cmd->add_option("--expected", expected, "Expected-values corpus")->capture_default_str();
  verify_cmd->add_flag("--json", verify_json, "Print a JSON summary instead of the table");

  auto* info_cmd = app.add_subcommand("info", "Structural summary of a group");
  info_cmd->add_option("spec", spec_text, "Group expression")->required();
  add_common(*info_cmd, info_flags);
  bool info_json = false;
  info_cmd->add_flag("--json", info_json, "Print JSON");

  auto* export_cmd = app.add_subcommand("export", "Write the commuting graph as DOT or JSON");
  export_cmd->add_option("spec", spec_text, "Group expression")->required();
  add_common(*export_cmd, export_flags);
  std::string format = "dot", output;
  export_cmd->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}))
      ->capture_default_str();
  export_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*diameter_cmd) return cmd_diameter(spec_text, diameter_flags, diameter_json, dot_file, diameter_cache, out);
    if (*verify_cmd) return cmd_verify(suite, verify_flags, cache, expected, verify_json, out, err);
    if (*info_cmd) return cmd_info(spec_text, info_flags, info_json, out);
    if (*export_cmd) return cmd_export(spec_text, export_flags, format, output, out);
  } catch (const OrderCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitCapExceeded;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace comgraph::cli
