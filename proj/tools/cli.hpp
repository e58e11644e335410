#pragma once

// Command-line front end. Kept header-only so the test suites can drive the
// exact same code path in-process.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "powerdom/powerdom.hpp"

namespace powerdom::cli {

using json = nlohmann::ordered_json;

enum ExitCode : int { ok = 0, mismatch = 1, usage = 2, partial = 3, budget = 4 };

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphSource {
  std::string family;
  int d = 2;
  int n = -1;
  int m = -1;
  std::string file;
};

struct LoadedGraph {
  Digraph graph;
  std::optional<FamilySpec> spec;
};

struct BudgetFlags {
  std::uint64_t max_nodes = 50'000'000;
  double max_seconds = 120.0;
  unsigned workers = 1;

  [[nodiscard]] Budget budget() const {
    return {max_nodes, std::chrono::milliseconds(static_cast<long long>(max_seconds * 1000.0))};
  }
};

inline void add_family_flags(CLI::App* cmd, GraphSource& src, bool with_file) {
  cmd->add_option("--family", src.family, "debruijn | kautz | gen-debruijn | gen-kautz");
  cmd->add_option("--d", src.d, "degree parameter (>= 2)");
  cmd->add_option("--n", src.n, "word length (classic families) or vertex count (generalized)");
  cmd->add_option("--m", src.m, "vertex count of a generalized family");
  if (with_file) cmd->add_option("--graph", src.file, "arc-list file instead of a family");
}

inline void add_budget_flags(CLI::App* cmd, BudgetFlags& b) {
  cmd->add_option("--max-nodes", b.max_nodes, "candidate-set evaluation cap");
  cmd->add_option("--max-seconds", b.max_seconds, "wall-clock cap");
  cmd->add_option("--workers", b.workers, "parallel search workers")->check(CLI::Range(1u, 256u));
}

inline FamilySpec family_spec(const GraphSource& src) {
  if (src.family.empty()) throw UsageError("--family is required");
  FamilySpec spec;
  try {
    spec.family = parse_family(src.family);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  spec.d = src.d;
  const int size = src.m >= 0 ? src.m : src.n;
  if (size < 0) throw UsageError(is_classic(spec.family) ? "--n is required" : "--m is required");
  if (src.m >= 0 && is_classic(spec.family)) throw UsageError("--m applies to generalized families; use --n");
  spec.n = size;
  try {
    validate(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return spec;
}

inline LoadedGraph load_graph(const GraphSource& src) {
  if (!src.file.empty()) {
    if (!src.family.empty()) throw UsageError("give either --graph or --family, not both");
    std::ifstream in(src.file);
    if (!in) throw UsageError("cannot open graph file '" + src.file + "'");
    try {
      return {read_arc_list(in), std::nullopt};
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }
  const FamilySpec spec = family_spec(src);
  return {generate(spec), spec};
}

inline std::vector<Vertex> parse_indices(const std::string& text) {
  std::vector<Vertex> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(token, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used != token.size() || v < 0) throw UsageError("malformed vertex index '" + token + "'");
    out.push_back(static_cast<Vertex>(v));
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c)) != 0)
      flush();
    else
      token.push_back(c);
  }
  flush();
  return out;
}

/// "1,2,3", "@file" (indices separated by commas or whitespace), or
/// "construction:zf" / "construction:pd" for classic families.
inline VertexSet parse_set(const std::string& text, const LoadedGraph& lg) {
  const std::size_t n = lg.graph.vertex_count();
  if (text.rfind("construction:", 0) == 0) {
    if (!lg.spec || !is_classic(lg.spec->family)) throw UsageError("constructions exist only for debruijn and kautz");
    try {
      return construction(*lg.spec, parse_problem(text.substr(13)));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  std::string body = text;
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw UsageError("cannot open set file '" + text.substr(1) + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  VertexSet s(n);
  for (Vertex v : parse_indices(body)) {
    if (v >= n) throw UsageError("vertex " + std::to_string(v) + " outside graph with " + std::to_string(n) + " vertices");
    s.insert(v);
  }
  return s;
}

inline json spec_json(const std::optional<FamilySpec>& spec, const std::string& file = {}) {
  json j;
  if (spec) {
    j["family"] = to_string(spec->family);
    j["d"] = spec->d;
    j[is_classic(spec->family) ? "n" : "m"] = spec->n;
  } else {
    j["source"] = file;
  }
  return j;
}

inline json envelope(const std::vector<std::string>& args) {
  json j;
  j["schema"] = 1;
  j["tool"] = "powerdom";
  j["version"] = version;
  j["command"] = args;
  return j;
}

inline std::vector<std::string> labels(const std::optional<FamilySpec>& spec, const VertexSet& s) {
  std::vector<std::string> out;
  s.for_each([&](Vertex v) { out.push_back(spec ? vertex_label(*spec, v) : std::to_string(v)); });
  return out;
}

inline std::string brace(const VertexSet& s, char sep = ',') {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Vertex v) {
    if (!first) out.push_back(sep);
    out += std::to_string(v);
    first = false;
  });
  return out + "}";
}

inline json trace_json(const ForceTrace& t) {
  json events = json::array();
  for (const auto& e : t.events) events.push_back({{"round", e.round}, {"forcer", e.forcer}, {"forced", e.forced}});
  return events;
}

inline json solve_json(const SolveResult& r, const std::optional<FamilySpec>& spec, bool timing) {
  json j;
  j["quantity"] = r.quantity == Problem::zero_forcing ? "Z" : "gamma_p";
  j["rule"] = r.quantity == Problem::zero_forcing ? std::string(to_string(r.rule)) : "blue";
  j["status"] = r.exact() ? "exact" : "budget-exhausted";
  j["minimum"] = r.minimum ? json(*r.minimum) : json(nullptr);
  j["lower_bound"] = r.lower_bound;
  j["upper_bound"] = r.upper_bound;
  j["witness"] = r.witness.members();
  j["witness_words"] = labels(spec, r.witness);
  j["nodes_explored"] = r.nodes_explored;
  if (timing) j["elapsed_ms"] = r.elapsed.count();
  return j;
}

inline json certificate_json(const Certificate& c) {
  json j;
  j["kind"] = to_string(c.kind);
  j["bound"] = c.bound;
  j["cells_checked"] = c.cells_checked;
  j["verified_cells"] = c.verified_cells;
  j["valid"] = c.valid();
  json failures = json::array();
  for (const auto& f : c.witness_failures) failures.push_back({{"cell", f.cell}, {"vertices", f.vertices}});
  j["failures"] = failures;
  return j;
}

// ---------------------------------------------------------------------------
// Theorem verification shared by `verify` and `report`.

struct QuantityCheck {
  Problem quantity = Problem::zero_forcing;
  std::optional<std::uint64_t> theorem;
  std::size_t construction_size = 0;
  bool construction_valid = false;
  /// zf: partition bound certificate; pd: per-cell necessity on the construction.
  bool certificate_valid = false;
  std::uint64_t certificate_bound = 0;
  std::optional<SolveResult> solved;
  std::optional<SolveResult> solved_blue;
  std::string skipped_reason;

  [[nodiscard]] bool applies() const { return theorem.has_value(); }

  [[nodiscard]] bool mismatched() const {
    if (!applies()) return false;
    if (!construction_valid || construction_size != *theorem || !certificate_valid) return true;
    if (quantity == Problem::zero_forcing && certificate_bound != *theorem) return true;
    return solved && solved->exact() && *solved->minimum != *theorem;
  }

  [[nodiscard]] bool exactly_solved() const { return solved && solved->exact(); }

  /// solved | sandwich | construction | mismatch | n/a
  [[nodiscard]] std::string status() const {
    if (!applies()) return "n/a";
    if (mismatched()) return "mismatch";
    if (exactly_solved()) return "solved";
    return quantity == Problem::zero_forcing ? "sandwich" : "construction";
  }
};

inline QuantityCheck quantity(Problem p) {
  QuantityCheck q;
  q.quantity = p;
  return q;
}

struct InstanceCheck {
  FamilySpec spec;
  std::size_t vertices = 0;
  QuantityCheck z = quantity(Problem::zero_forcing);
  QuantityCheck gamma_p = quantity(Problem::power_domination);

  [[nodiscard]] bool mismatched() const { return z.mismatched() || gamma_p.mismatched(); }
  [[nodiscard]] bool fully_solved() const {
    return (!z.applies() || z.exactly_solved()) && (!gamma_p.applies() || gamma_p.exactly_solved());
  }
  /// verified | sandwich | mismatch
  [[nodiscard]] std::string status() const {
    if (mismatched()) return "mismatch";
    return fully_solved() ? "verified" : "sandwich";
  }
};

// Candidate sets the sweep visits from `first` through `last` inclusive.
inline std::uint64_t sweep_cost(std::uint64_t n, std::uint64_t first, std::uint64_t last) {
  std::uint64_t total = 0;
  for (std::uint64_t k = first; k <= last && k <= n; ++k) total = detail::saturating_add(total, detail::binomial(n, k));
  return total;
}

inline InstanceCheck check_instance(const FamilySpec& spec, const BudgetFlags& flags, bool compare_rules) {
  InstanceCheck out;
  out.spec = spec;
  const Digraph g = generate(spec);
  out.vertices = g.vertex_count();
  SolveOptions options;
  options.budget = flags.budget();
  options.workers = flags.workers;

  // Z: construction, partition lower bound, then the exact sweep from that bound.
  auto& z = out.z;
  z.theorem = [&]() -> std::optional<std::uint64_t> {
    auto t = theorem_value(spec.family, spec.d, spec.n, Problem::zero_forcing);
    return t ? std::optional(t->value) : std::nullopt;
  }();
  const VertexSet zf_set = construction(spec, Problem::zero_forcing);
  z.construction_size = zf_set.size();
  z.construction_valid = is_zero_forcing(g, zf_set, ForcerRule::any_forcer);
  const Certificate cert = zf_partition_bound(spec);
  z.certificate_valid = cert.valid();
  z.certificate_bound = cert.bound;
  if (cert.valid()) options.lower_bound_hint = static_cast<std::size_t>(cert.bound);
  if (sweep_cost(g.vertex_count(), cert.valid() ? cert.bound : 0, z.construction_size) <= flags.max_nodes) {
    z.solved = min_zero_forcing(g, ForcerRule::any_forcer, options);
  } else {
    z.skipped_reason = "exact sweep exceeds node budget";
  }
  options.lower_bound_hint.reset();
  if (compare_rules && sweep_cost(g.vertex_count(), 0, g.vertex_count()) <= flags.max_nodes)
    z.solved_blue = min_zero_forcing(g, ForcerRule::blue_only, options);

  // gamma_p: construction, per-cell necessity, exact sweep from zero.
  auto& p = out.gamma_p;
  p.theorem = [&]() -> std::optional<std::uint64_t> {
    auto t = theorem_value(spec.family, spec.d, spec.n, Problem::power_domination);
    return t ? std::optional(t->value) : std::nullopt;
  }();
  const VertexSet pd_set = construction(spec, Problem::power_domination);
  p.construction_size = pd_set.size();
  p.construction_valid = is_power_dominating(g, pd_set);
  const Certificate necessity = pd_partition_necessity(spec, pd_set);
  p.certificate_valid = necessity.valid();
  p.certificate_bound = necessity.bound;
  if (sweep_cost(g.vertex_count(), 0, p.construction_size) <= flags.max_nodes) {
    p.solved = min_power_dominating(g, options);
  } else {
    p.skipped_reason = "exact sweep exceeds node budget";
  }
  return out;
}

inline json quantity_json(const QuantityCheck& q, const FamilySpec& spec) {
  json j;
  j["theorem"] = q.theorem ? json(*q.theorem) : json("theorem-does-not-apply");
  j["construction_size"] = q.construction_size;
  j["construction_valid"] = q.construction_valid;
  if (q.quantity == Problem::zero_forcing) {
    j["partition_bound"] = q.certificate_bound;
    j["partition_bound_valid"] = q.certificate_valid;
  } else {
    j["cell_necessity_valid"] = q.certificate_valid;
  }
  j["exact"] = q.exactly_solved() ? json(*q.solved->minimum) : json(nullptr);
  if (q.exactly_solved()) j["exact_witness"] = labels(spec, q.solved->witness);
  if (q.solved_blue && q.solved_blue->exact()) j["exact_blue_only"] = *q.solved_blue->minimum;
  if (!q.skipped_reason.empty()) j["skipped"] = q.skipped_reason;
  j["status"] = q.status();
  return j;
}

inline std::string family_title(const FamilySpec& spec) {
  const char* letter = spec.family == Family::debruijn ? "B" : spec.family == Family::kautz ? "K"
                       : spec.family == Family::gen_debruijn ? "GB" : "GK";
  return std::string(letter) + "(" + std::to_string(spec.d) + "," + std::to_string(spec.n) + ")";
}

inline void print_quantity(std::ostream& out, const char* name, const QuantityCheck& q) {
  out << name << "  theorem ";
  if (q.theorem)
    out << *q.theorem;
  else
    out << "does-not-apply";
  out << "  construction " << q.construction_size << (q.construction_valid ? " (valid)" : " (INVALID)");
  if (q.quantity == Problem::zero_forcing)
    out << "  partition bound " << q.certificate_bound << (q.certificate_valid ? " (valid)" : " (INVALID)");
  else
    out << "  cell necessity " << (q.certificate_valid ? "pass" : "FAIL");
  out << "  exact ";
  if (q.exactly_solved())
    out << *q.solved->minimum;
  else
    out << "skipped";
  if (q.solved_blue && q.solved_blue->exact()) out << "  exact(blue-only) " << *q.solved_blue->minimum;
  out << "  -> " << q.status() << '\n';
}

// ---------------------------------------------------------------------------
// Range parsing for report: "a..b", "a-b" or "a"; an empty range when b < a.

inline std::pair<int, int> parse_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used != s.size() || s.empty()) throw UsageError("malformed range '" + text + "'");
    return v;
  };
  if (const auto dots = text.find(".."); dots != std::string::npos)
    return {to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
  if (const auto dash = text.find('-', 1); dash != std::string::npos)
    return {to_int(text.substr(0, dash)), to_int(text.substr(dash + 1))};
  const int v = to_int(text);
  return {v, v};
}

inline std::string witness_cell(const SolveResult& r) {
  if (!r.exact()) return "budget[" + std::to_string(r.lower_bound) + "," + std::to_string(r.upper_bound) + "]";
  return brace(r.witness, ' ');
}

inline std::string value_cell(const SolveResult& r) {
  return r.exact() ? std::to_string(*r.minimum) : "budget";
}

// ---------------------------------------------------------------------------

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Power domination and zero forcing on de Bruijn and Kautz digraphs", "powerdom"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(version));

  GraphSource src;
  BudgetFlags budget_flags;
  std::string format;
  std::string problem_name = "pd";
  std::string rule_name = "any";
  std::string set_text;
  bool trace = false;
  bool timing = false;

  auto* gen = app.add_subcommand("gen", "emit a family member as arc list, DOT or JSON");
  add_family_flags(gen, src, false);
  gen->add_option("--format", format, "arcs | dot | json")->check(CLI::IsMember({"arcs", "dot", "json"}));

  auto* closure = app.add_subcommand("closure", "monitored set or zero forcing closure of a vertex set");
  add_family_flags(closure, src, true);
  closure->add_option("--problem", problem_name, "pd | zf")->check(CLI::IsMember({"pd", "zf"}));
  closure->add_option("--rule", rule_name, "any | blue")->check(CLI::IsMember({"any", "blue"}));
  closure->add_option("--set", set_text, "indices '1,2', '@file' or 'construction:zf|pd'");
  closure->add_flag("--trace", trace, "include the force trace");
  closure->add_option("--format", format, "text | json | dot")->check(CLI::IsMember({"text", "json", "dot"}));

  auto* construct = app.add_subcommand("construct", "explicit zero forcing / power dominating set");
  add_family_flags(construct, src, false);
  construct->add_option("--problem", problem_name, "zf | pd")->check(CLI::IsMember({"pd", "zf"}));
  construct->add_option("--format", format, "indices | words | json")
      ->check(CLI::IsMember({"indices", "words", "json"}));

  std::string cert_name;
  std::string enumerate_name;
  std::string check_name;
  std::string cover_name;
  bool profile = false;
  std::size_t max_vertices = default_enumeration_limit;
  std::size_t cover_limit = default_cover_limit;
  auto* critical = app.add_subcommand("critical", "critical sets, covers, partition certificates");
  add_family_flags(critical, src, true);
  critical->add_option("--cert", cert_name, "zf | pd partition certificate")->check(CLI::IsMember({"zf", "pd"}));
  critical->add_option("--enumerate", enumerate_name, "list minimal strong | weak critical sets")
      ->check(CLI::IsMember({"strong", "weak"}));
  critical->add_option("--check", check_name, "is --set strong | weak critical")
      ->check(CLI::IsMember({"strong", "weak"}));
  critical->add_option("--cover", cover_name, "does --set meet every critical set (zf | pd)")
      ->check(CLI::IsMember({"zf", "pd"}));
  critical->add_flag("--profile", profile, "X-partition profile of --set");
  critical->add_option("--set", set_text, "vertex set");
  critical->add_option("--max-vertices", max_vertices, "enumeration ceiling");
  critical->add_option("--limit", cover_limit, "cover check ceiling");
  critical->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

  std::string hint_text;
  auto* solve_cmd = app.add_subcommand("solve", "exact minimum by cardinality-ordered search");
  add_family_flags(solve_cmd, src, true);
  solve_cmd->add_option("--problem", problem_name, "pd | zf")->check(CLI::IsMember({"pd", "zf"}));
  solve_cmd->add_option("--rule", rule_name, "any | blue (zf only)")->check(CLI::IsMember({"any", "blue"}));
  solve_cmd->add_option("--hint", hint_text, "proven lower bound, or 'auto' for the zf partition bound");
  add_budget_flags(solve_cmd, budget_flags);
  solve_cmd->add_flag("--timing", timing, "include elapsed_ms");
  bool greedy = false;
  solve_cmd->add_flag("--greedy", greedy, "report the greedy upper bound instead");
  solve_cmd->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

  int theorem = 0;
  bool compare_rules = false;
  auto* verify = app.add_subcommand("verify", "check the closed-form Z and gamma_p of a classic family member");
  add_family_flags(verify, src, false);
  verify->add_option("--theorem", theorem, "1 (de Bruijn) or 2 (Kautz)")->check(CLI::IsMember({1, 2}));
  verify->add_flag("--compare-rules", compare_rules, "also solve Z under the blue-only rule");
  add_budget_flags(verify, budget_flags);
  verify->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

  std::string d_range = "2";
  std::string n_range;
  auto* report = app.add_subcommand("report", "theorem table, or exact tables for generalized families");
  report->add_option("--family", src.family, "debruijn | kautz | gen-debruijn | gen-kautz")->required();
  report->add_option("--d-range", d_range, "e.g. 2..3");
  report->add_option("--n-range,--m-range", n_range, "e.g. 2..4")->required();
  add_budget_flags(report, budget_flags);
  report->add_option("--format", format, "md | csv | json")->check(CLI::IsMember({"md", "csv", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForVersion&) {
    out << version << '\n';
    return ok;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return ok;
    }
    err << "error: " << e.what() << '\n';
    return usage;
  }

  const auto started = std::chrono::steady_clock::now();
  auto done = [&](int code) {
    if (timing) {
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
      err << "elapsed_ms " << ms.count() << '\n';
    }
    return code;
  };

  try {
    if (gen->parsed()) {
      const FamilySpec spec = family_spec(src);
      const Digraph g = generate(spec);
      if (format.empty() || format == "arcs") {
        out << "# " << family_title(spec) << '\n';
        write_arc_list(out, g);
      } else if (format == "dot") {
        write_dot(out, g, &spec);
      } else {
        json j = envelope(args);
        j.update(spec_json(spec));
        j["vertex_count"] = g.vertex_count();
        j["arc_count"] = g.arc_count();
        json vertices = json::array();
        for (Vertex v = 0; v < g.vertex_count(); ++v) vertices.push_back({{"index", v}, {"label", vertex_label(spec, v)}});
        j["vertices"] = vertices;
        json arcs = json::array();
        for (const Arc& a : g.arcs()) arcs.push_back({a.from, a.to});
        j["arcs"] = arcs;
        out << j.dump(2) << '\n';
      }
      return done(ok);
    }

    if (closure->parsed()) {
      const LoadedGraph lg = load_graph(src);
      const VertexSet s = parse_set(set_text, lg);
      const Problem problem = parse_problem(problem_name);
      const ForcerRule rule = parse_rule(rule_name);
      const Closure c = problem == Problem::zero_forcing ? zf_closure(lg.graph, s, rule) : monitored_set(lg.graph, s);
      const bool covers = c.closed.is_full();
      if (format == "dot") {
        write_dot(out, lg.graph, lg.spec ? &*lg.spec : nullptr, trace ? &c.trace : nullptr);
        return done(ok);
      }
      if (format == "json") {
        json j = envelope(args);
        j["graph"] = spec_json(lg.spec, src.file);
        j["problem"] = to_string(problem);
        j["rule"] = problem == Problem::zero_forcing ? to_string(rule) : "blue";
        j["set"] = s.members();
        j["closure"] = c.closed.members();
        j["closure_size"] = c.closed.size();
        j["vertex_count"] = lg.graph.vertex_count();
        j["verdict"] = covers;
        j["propagation_time"] = covers ? json(c.trace.rounds()) : json("not-forcing");
        if (trace) j["trace"] = trace_json(c.trace);
        out << j.dump(2) << '\n';
        return done(ok);
      }
      out << "problem: " << (problem == Problem::zero_forcing ? "zero forcing" : "power domination") << '\n';
      if (problem == Problem::zero_forcing) out << "rule: " << (rule == ForcerRule::any_forcer ? "any-forcer" : "blue-only") << '\n';
      out << "set: " << brace(s) << '\n';
      out << (problem == Problem::zero_forcing ? "closure: " : "monitored: ") << c.closed.size() << '/'
          << lg.graph.vertex_count() << '\n';
      out << "verdict: " << (covers ? "true" : "false") << '\n';
      out << "propagation time: " << (covers ? std::to_string(c.trace.rounds()) : "not-forcing") << '\n';
      if (trace) out << "trace: " << trace_json(c.trace).dump() << '\n';
      return done(ok);
    }

    if (construct->parsed()) {
      const FamilySpec spec = family_spec(src);
      if (!is_classic(spec.family)) throw UsageError("constructions exist only for debruijn and kautz");
      const Problem problem = parse_problem(problem_name);
      const VertexSet s = construction(spec, problem);
      if (format == "json") {
        json j = envelope(args);
        j.update(spec_json(spec));
        j["problem"] = to_string(problem);
        j["size"] = s.size();
        j["members"] = s.members();
        j["words"] = labels(spec, s);
        if (problem == Problem::power_domination && spec.family == Family::kautz && spec.n == 2)
          j["note"] = "outside the Kautz theorem's range (n >= 3)";
        out << j.dump(2) << '\n';
      } else if (format == "words") {
        for (const auto& w : labels(spec, s)) out << w << '\n';
      } else {
        s.for_each([&](Vertex v) { out << v << '\n'; });
      }
      return done(ok);
    }

    if (critical->parsed()) {
      const int modes = int(!cert_name.empty()) + int(!enumerate_name.empty()) + int(!check_name.empty()) +
                        int(!cover_name.empty()) + int(profile);
      if (modes != 1) throw UsageError("choose exactly one of --cert, --enumerate, --check, --cover, --profile");
      const LoadedGraph lg = load_graph(src);
      json j = envelope(args);
      j["graph"] = spec_json(lg.spec, src.file);
      std::ostringstream text;
      int code = ok;
      if (!cert_name.empty() || profile) {
        if (!lg.spec || !is_classic(lg.spec->family)) throw UsageError("the X-partition exists only for debruijn and kautz");
      }
      if (!cert_name.empty()) {
        Certificate c = cert_name == "zf"
                            ? zf_partition_bound(*lg.spec)
                            : pd_partition_necessity(*lg.spec, set_text.empty()
                                                                   ? construction(*lg.spec, Problem::power_domination)
                                                                   : parse_set(set_text, lg));
        j["certificate"] = certificate_json(c);
        text << "kind: " << to_string(c.kind) << "\nbound: " << c.bound << "\ncells checked: " << c.cells_checked
             << "\nverified cells: " << c.verified_cells << "\nvalid: " << (c.valid() ? "true" : "false") << '\n';
        for (const auto& f : c.witness_failures) {
          text << "failure: cell " << f.cell << " {";
          for (std::size_t i = 0; i < f.vertices.size(); ++i) text << (i ? "," : "") << f.vertices[i];
          text << "}\n";
        }
        if (!c.valid()) code = mismatch;
      } else if (!enumerate_name.empty()) {
        const auto kind = parse_critical_kind(enumerate_name);
        const auto sets = enumerate_minimal_critical(lg.graph, kind, max_vertices);
        json list = json::array();
        for (const auto& s : sets) list.push_back(s.members());
        j["kind"] = to_string(kind);
        j["minimal_critical_sets"] = list;
        for (const auto& s : sets) text << brace(s) << '\n';
      } else if (!check_name.empty()) {
        const auto kind = parse_critical_kind(check_name);
        const VertexSet w = parse_set(set_text, lg);
        if (w.empty()) throw UsageError("criticality is defined for nonempty sets only");
        const bool crit = is_critical(lg.graph, w, kind);
        j["kind"] = to_string(kind);
        j["set"] = w.members();
        j["critical"] = crit;
        text << to_string(kind) << " critical: " << (crit ? "true" : "false") << '\n';
      } else if (!cover_name.empty()) {
        const VertexSet s = parse_set(set_text, lg);
        const bool covered = cover_name == "zf" ? check_zf_cover(lg.graph, s, cover_limit)
                                                : check_pd_cover(lg.graph, s, cover_limit);
        j["cover"] = cover_name;
        j["set"] = s.members();
        j["covers_all_critical_sets"] = covered;
        text << cover_name << " cover: " << (covered ? "true" : "false") << '\n';
      } else {
        const VertexSet s = parse_set(set_text, lg);
        const PartitionProfile p = partition_profile(*lg.spec, s);
        j["set"] = s.members();
        j["alpha"] = p.counts;
        j["cell_count"] = p.cell_count;
        text << "cells: " << p.cell_count << '\n';
        for (std::size_t k = 0; k < p.counts.size(); ++k) text << "alpha_" << k << ": " << p.counts[k] << '\n';
      }
      if (format == "json")
        out << j.dump(2) << '\n';
      else
        out << text.str();
      return done(code);
    }

    if (solve_cmd->parsed()) {
      const LoadedGraph lg = load_graph(src);
      const Problem problem = parse_problem(problem_name);
      const ForcerRule rule = parse_rule(rule_name);
      if (greedy) {
        const VertexSet s = greedy_upper_bound(lg.graph, problem, rule);
        json j = envelope(args);
        j["graph"] = spec_json(lg.spec, src.file);
        j["greedy_size"] = s.size();
        j["greedy_set"] = s.members();
        if (format == "json")
          out << j.dump(2) << '\n';
        else
          out << "greedy: " << s.size() << ' ' << brace(s) << '\n';
        return done(ok);
      }
      SolveOptions options;
      options.budget = budget_flags.budget();
      options.workers = budget_flags.workers;
      if (hint_text == "auto") {
        if (problem != Problem::zero_forcing || !lg.spec || !is_classic(lg.spec->family))
          throw UsageError("--hint auto needs --problem zf on a debruijn or kautz family");
        const Certificate c = zf_partition_bound(*lg.spec);
        if (c.valid()) options.lower_bound_hint = static_cast<std::size_t>(c.bound);
      } else if (!hint_text.empty()) {
        const auto v = parse_indices(hint_text);
        if (v.size() != 1) throw UsageError("--hint expects one integer or 'auto'");
        options.lower_bound_hint = v.front();
      }
      const SolveResult r = solve(lg.graph, problem, rule, options);
      if (format == "json") {
        json j = envelope(args);
        j["graph"] = spec_json(lg.spec, src.file);
        j.update(solve_json(r, lg.spec, timing));
        out << j.dump(2) << '\n';
      } else {
        out << (problem == Problem::zero_forcing ? "Z" : "gamma_p");
        if (problem == Problem::zero_forcing) out << " (" << (rule == ForcerRule::any_forcer ? "any-forcer" : "blue-only") << ")";
        if (r.exact()) {
          out << ": minimum " << *r.minimum << '\n';
          out << "witness: " << brace(r.witness) << '\n';
          if (lg.spec && is_classic(lg.spec->family)) {
            out << "words:";
            for (const auto& w : labels(lg.spec, r.witness)) out << ' ' << w;
            out << '\n';
          }
        } else {
          out << ": budget exhausted, bounds [" << r.lower_bound << ", " << r.upper_bound << "]\n";
        }
        out << "nodes explored: " << r.nodes_explored << '\n';
      }
      return done(r.exact() ? ok : budget);
    }

    if (verify->parsed()) {
      const FamilySpec spec = family_spec(src);
      if (!is_classic(spec.family)) throw UsageError("verify covers debruijn and kautz only");
      if (theorem != 0 && (theorem == 1) != (spec.family == Family::debruijn))
        throw UsageError("theorem " + std::to_string(theorem) + " does not cover family " +
                         std::string(to_string(spec.family)));
      const InstanceCheck check = check_instance(spec, budget_flags, compare_rules);
      const int code = check.mismatched() ? mismatch : check.fully_solved() ? ok : partial;
      if (format == "json") {
        json j = envelope(args);
        j.update(spec_json(spec));
        j["vertex_count"] = check.vertices;
        j["Z"] = quantity_json(check.z, spec);
        j["gamma_p"] = quantity_json(check.gamma_p, spec);
        j["status"] = check.status();
        out << j.dump(2) << '\n';
      } else {
        out << family_title(spec) << ": " << check.vertices << " vertices\n";
        print_quantity(out, "Z      ", check.z);
        print_quantity(out, "gamma_p", check.gamma_p);
        out << "result: " << check.status() << '\n';
      }
      return done(code);
    }

    if (report->parsed()) {
      Family family{};
      try {
        family = parse_family(src.family);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const auto [d_lo, d_hi] = parse_range(d_range);
      const auto [n_lo, n_hi] = parse_range(n_range);
      if (d_lo <= d_hi && d_lo < 2) throw UsageError("d range must start at 2 or above");
      const int n_min = is_classic(family) ? 2 : 1;
      if (n_lo <= n_hi && n_lo < n_min) throw UsageError("size range must start at " + std::to_string(n_min) + " or above");
      const std::string fmt = format.empty() ? "md" : format;
      int code = ok;

      if (!is_classic(family)) {
        const auto rows = open_problem_table(family, d_lo, d_hi, n_lo, n_hi, budget_flags.budget());
        json list = json::array();
        std::ostringstream table;
        if (fmt == "csv") table << "family,d,m,arcs,gamma_p,gamma_p_witness,z_any,z_any_witness,z_blue,z_blue_witness\n";
        if (fmt == "md")
          table << "| family | d | m | arcs | gamma_p | witness | Z (any) | witness | Z (blue) | witness |\n"
                   "|---|---|---|---|---|---|---|---|---|---|\n";
        for (const auto& r : rows) {
          const bool exhausted = !r.gamma_p.exact() || !r.z_any.exact() || !r.z_blue.exact();
          if (exhausted) code = budget;
          const std::string cells[] = {std::string(to_string(family)), std::to_string(r.spec.d), std::to_string(r.spec.n),
                                       std::to_string(r.arc_count), value_cell(r.gamma_p), witness_cell(r.gamma_p),
                                       value_cell(r.z_any), witness_cell(r.z_any), value_cell(r.z_blue),
                                       witness_cell(r.z_blue)};
          if (fmt == "csv") {
            for (std::size_t i = 0; i < std::size(cells); ++i) table << (i ? "," : "") << cells[i];
            table << '\n';
          } else if (fmt == "md") {
            table << '|';
            for (const auto& c : cells) table << ' ' << c << " |";
            table << '\n';
          }
          list.push_back({{"d", r.spec.d},
                          {"m", r.spec.n},
                          {"arcs", r.arc_count},
                          {"gamma_p", solve_json(r.gamma_p, std::nullopt, false)},
                          {"Z_any", solve_json(r.z_any, std::nullopt, false)},
                          {"Z_blue", solve_json(r.z_blue, std::nullopt, false)}});
        }
        if (fmt == "json") {
          json j = envelope(args);
          j["family"] = to_string(family);
          j["rows"] = list;
          out << j.dump(2) << '\n';
        } else {
          out << table.str();
        }
        return done(code);
      }

      std::vector<InstanceCheck> checks;
      for (int d = d_lo; d <= d_hi; ++d)
        for (int n = n_lo; n <= n_hi; ++n) checks.push_back(check_instance({family, d, n}, budget_flags, false));
      auto opt = [](const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : std::string("n/a"); };
      if (fmt == "json") {
        json j = envelope(args);
        j["family"] = to_string(family);
        json rows = json::array();
        for (const auto& c : checks) {
          rows.push_back({{"d", c.spec.d},
                          {"n", c.spec.n},
                          {"vertices", c.vertices},
                          {"Z", quantity_json(c.z, c.spec)},
                          {"gamma_p", quantity_json(c.gamma_p, c.spec)},
                          {"status", c.status()}});
        }
        j["rows"] = rows;
        out << j.dump(2) << '\n';
      } else {
        if (fmt == "csv")
          out << "family,d,n,vertices,Z,Z_check,gamma_p,gamma_p_check,status\n";
        else
          out << "| family | d | n | vertices | Z | Z check | gamma_p | gamma_p check | status |\n"
                 "|---|---|---|---|---|---|---|---|---|\n";
        for (const auto& c : checks) {
          const std::string cells[] = {std::string(to_string(family)), std::to_string(c.spec.d), std::to_string(c.spec.n),
                                       std::to_string(c.vertices), opt(c.z.theorem), c.z.status(),
                                       opt(c.gamma_p.theorem), c.gamma_p.status(), c.status()};
          if (fmt == "csv") {
            for (std::size_t i = 0; i < std::size(cells); ++i) out << (i ? "," : "") << cells[i];
            out << '\n';
          } else {
            out << '|';
            for (const auto& cell : cells) out << ' ' << cell << " |";
            out << '\n';
          }
        }
      }
      for (const auto& c : checks)
        if (c.mismatched()) code = mismatch;
      return done(code);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << '\n';
    return budget;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return budget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }
  return usage;
}

}  // namespace powerdom::cli
