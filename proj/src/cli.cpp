#include "lpa/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "lpa/algebra.hpp"
#include "lpa/digraph_io.hpp"
#include "lpa/dimfun.hpp"
#include "lpa/error.hpp"
#include "lpa/json_io.hpp"
#include "lpa/operator_model.hpp"
#include "lpa/quotient.hpp"
#include "lpa/repbuild.hpp"

namespace lpa::cli {
namespace {

struct Options {
  bool json = false;
  std::uint64_t seed = 0;
  std::uint64_t bound = 10;
  std::string dim;
  std::vector<std::string> polys;
  std::string sink;
  std::string cycle;
  std::size_t n = 2;
  std::size_t window = 256;
  std::string file;
  std::string rep_file;
  std::string expr;
  const CLI::Option* seed_opt = nullptr;
};

// Usage problems found after parsing (malformed flag values) exit with 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

std::vector<std::string> vertex_names(const Digraph& g, const std::vector<Vertex>& vs) {
  std::vector<std::string> out;
  for (Vertex v : vs) out.push_back(g.vertex_name(v));
  return out;
}

std::string anchor_text(const Digraph& g, const SinkOrCycle& a) {
  if (const Vertex* w = std::get_if<Vertex>(&a)) return "sink " + g.vertex_name(*w);
  const Cycle& c = std::get<Cycle>(a);
  return "cycle " + cycle_to_string(g, c) + " at " + g.vertex_name(c.anchor);
}

ojson digraph_summary(const Digraph& g) {
  return ojson{{"vertices", g.vertex_count()},
               {"arrows", g.arrow_count()},
               {"parts", g.part_count()},
               {"separated", g.is_separated()}};
}

DimensionFunction parse_dim(const Digraph& g, const std::string& text) {
  DimensionFunction d{std::vector<std::uint64_t>(g.vertex_count(), 0)};
  std::vector<bool> seen(g.vertex_count(), false);
  for (const std::string& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--dim expects v=N entries, got '" + item + "'");
    const std::string name = trim(item.substr(0, eq));
    const std::string value = trim(item.substr(eq + 1));
    if (value.empty() || !std::all_of(value.begin(), value.end(), ::isdigit)) {
      throw UsageError("--dim value for '" + name + "' must be a natural number");
    }
    const Vertex v = g.vertex(name);
    if (seen[v]) throw UsageError("--dim gives '" + name + "' twice");
    seen[v] = true;
    d.values[v] = std::stoull(value);
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!seen[v]) throw Error("--dim is missing vertex '" + g.vertex_name(v) + "'");
  }
  return d;
}

Cycle resolve_cycle(const Digraph& g, const std::string& arg) {
  if (arg.find(',') != std::string::npos || (!g.find_vertex(arg) && g.find_arrow(arg))) {
    std::vector<ArrowIdx> arrows;
    for (const std::string& id : split(arg, ',')) arrows.push_back(g.arrow_index(trim(id)));
    return make_cycle(g, std::move(arrows));
  }
  const Vertex v = g.vertex(arg);
  std::vector<Cycle> through;
  for (Cycle& c : cycles(g)) {
    const auto vs = c.vertices(g);
    if (std::find(vs.begin(), vs.end(), v) != vs.end()) through.push_back(std::move(c));
  }
  if (through.empty()) throw Error("no cycle passes through '" + arg + "'");
  if (through.size() > 1) {
    std::vector<std::string> names;
    for (const Cycle& c : through) names.push_back(cycle_to_string(g, c));
    throw Error("several cycles pass through '" + arg + "': " + join(names, ", ") +
                "; pass the arrows instead, e.g. --cycle e,f");
  }
  return through.front();
}

ojson relation_matrix_json(const Digraph& g) {
  const RelationMatrix rm = relation_matrix(g);
  ojson rows = ojson::array();
  for (PartIdx x = 0; x < g.part_count(); ++x) {
    std::vector<std::string> ids;
    for (ArrowIdx e : g.part(x)) ids.push_back(g.arrow(e).id);
    rows.push_back(ojson{{"part", ids}, {"row", rm.entries[x]}});
  }
  return ojson{{"columns", g.vertex_names()}, {"rows", std::move(rows)}};
}

void print_relation_matrix(const Digraph& g, std::ostream& out) {
  const RelationMatrix rm = relation_matrix(g);
  out << "relation matrix over (" << join(g.vertex_names(), ", ") << "):\n";
  for (PartIdx x = 0; x < g.part_count(); ++x) {
    std::vector<std::string> ids, entries;
    for (ArrowIdx e : g.part(x)) ids.push_back(g.arrow(e).id);
    for (auto v : rm.entries[x]) entries.push_back(std::to_string(v));
    out << "  {" << join(ids, ",") << "}: (" << join(entries, ", ") << ")\n";
  }
}

std::string dimfun_text(const Digraph& g, const DimensionFunction& d) {
  std::vector<std::string> parts;
  for (Vertex v = 0; v < g.vertex_count(); ++v) parts.push_back(g.vertex_name(v) + ":" + std::to_string(d.values[v]));
  return "(" + join(parts, ", ") + ")";
}

ojson relation_summary(const RelationReport& rep) {
  return ojson{{"checked", rep.checks.size()}, {"failed", rep.failures()}, {"all_passed", rep.all_passed()}};
}

using Handler = std::function<ojson(const Digraph&, const Options&, std::ostream&)>;

ojson cmd_analyze(const Digraph& g, const Options&, std::ostream& out) {
  ojson r;
  r["sinks"] = vertex_names(g, sinks(g));
  ojson cs = ojson::array();
  for (const Cycle& c : cycles(g)) {
    ojson j = anchor_to_json(g, c);
    j.erase("kind");
    std::vector<std::string> ex;
    for (ArrowIdx e : exits(g, c)) ex.push_back(g.arrow(e).id);
    j["exits"] = ex;
    cs.push_back(std::move(j));
  }
  r["cycles"] = std::move(cs);
  ojson maximal = ojson::array();
  for (const MaximalElement& m : maximal_sinks_and_cycles(g)) {
    ojson j = anchor_to_json(g, m.which);
    j["predecessors"] = m.predecessor_count;
    maximal.push_back(std::move(j));
  }
  r["maximal"] = std::move(maximal);
  r["has_nonzero_dimfun"] = has_nonzero_dimfun(g);
  r["ibn"] = ibn_check(g);
  if (g.is_separated()) {
    r["classification"] = nullptr;
  } else {
    const AlgebraClassification c = classify_algebra(g);
    r["classification"] = ojson{{"finite_dimensional", c.finite_dimensional},
                                {"locally_finite", c.locally_finite},
                                {"finite_gk", c.finite_gk},
                                {"has_findim_quotient", c.has_findim_quotient},
                                {"ibn", c.ibn}};
  }

  out << "sinks: " << join(r["sinks"].get<std::vector<std::string>>(), ", ") << "\n";
  out << "cycles:\n";
  for (const Cycle& c : cycles(g)) {
    std::vector<std::string> ex;
    for (ArrowIdx e : exits(g, c)) ex.push_back(g.arrow(e).id);
    out << "  " << cycle_to_string(g, c) << " at " << g.vertex_name(c.anchor)
        << (ex.empty() ? ", no exits" : ", exits " + join(ex, ", ")) << "\n";
  }
  out << "maximal sinks and cycles:\n";
  for (const MaximalElement& m : maximal_sinks_and_cycles(g)) {
    out << "  " << anchor_text(g, m.which) << ", " << m.predecessor_count << " predecessors\n";
  }
  out << "has nonzero dimension function: " << yes_no(r["has_nonzero_dimfun"].get<bool>()) << "\n";
  out << "ibn: " << yes_no(r["ibn"].get<bool>()) << "\n";
  if (!g.is_separated()) {
    for (const char* key : {"finite_dimensional", "locally_finite", "finite_gk", "has_findim_quotient"}) {
      out << key << ": " << yes_no(r["classification"][key].get<bool>()) << "\n";
    }
  }
  return r;
}

ojson cmd_dimfun(const Digraph& g, const Options& o, std::ostream& out) {
  ojson r;
  r["relation_matrix"] = relation_matrix_json(g);
  r["has_nonzero_dimfun"] = has_nonzero_dimfun(g);
  print_relation_matrix(g, out);
  out << "has nonzero dimension function: " << yes_no(r["has_nonzero_dimfun"].get<bool>()) << "\n";
  if (!o.dim.empty()) {
    const DimensionFunction d = parse_dim(g, o.dim);
    const bool ok = verify(g, d);
    r["check"] = ojson{{"dims", dimfun_to_json(g, d)}, {"valid", ok}};
    out << dimfun_text(g, d) << (ok ? " is" : " is not") << " a dimension function\n";
  }
  return r;
}

ojson cmd_hilbert(const Digraph& g, const Options& o, std::ostream& out) {
  const HilbertBasis hb = hilbert_basis(g, o.bound);
  ojson basis = ojson::array();
  for (const auto& d : hb.basis) basis.push_back(dimfun_to_json(g, d));
  out << "minimal dimension functions with entries <= " << o.bound << ": " << hb.basis.size() << "\n";
  for (const auto& d : hb.basis) out << "  " << dimfun_text(g, d) << "\n";
  out << (hb.complete ? "complete\n" : "incomplete: the bound cut off some candidates\n");
  return ojson{{"bound", o.bound}, {"complete", hb.complete}, {"basis", std::move(basis)}};
}

ojson cmd_ibn(const Digraph& g, const Options&, std::ostream& out) {
  const bool ibn = ibn_check(g);
  print_relation_matrix(g, out);
  out << "all-ones vector " << (ibn ? "is not" : "is") << " in the rational row span\n";
  out << "ibn: " << yes_no(ibn) << "\n";
  return ojson{{"relation_matrix", relation_matrix_json(g)}, {"ibn", ibn}};
}

ojson cmd_build_rep(const Digraph& g, const Options& o, std::ostream& out) {
  const DimensionFunction d = parse_dim(g, o.dim);
  std::optional<std::uint64_t> seed;
  if (o.seed_opt && o.seed_opt->count() > 0) seed = o.seed;
  const QuiverRep rep = build_rep(g, d, seed);
  const RelationReport check = verify_relations(g, rep);
  ojson r;
  r["theta"] = seed ? "random" : "identity";
  if (seed) r["seed"] = *seed;
  r["representation"] = rep_to_json(g, rep);
  r["relations"] = relation_summary(check);
  out << r["representation"].dump(2) << "\n";
  out << "relations: " << check.checks.size() - check.failures() << "/" << check.checks.size() << " passed\n";
  return r;
}

ojson cmd_verify_rep(const Digraph& g, const Options& o, std::ostream& out) {
  std::ifstream in(o.rep_file);
  if (!in) throw Error("cannot open '" + o.rep_file + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("invalid JSON: ") + e.what());
  }
  const QuiverRep rep = rep_from_json(g, doc);
  const RelationReport check = verify_relations(g, rep);
  ojson checks = ojson::array();
  for (const RelationCheck& c : check.checks) {
    checks.push_back(ojson{{"relation", c.relation},
                           {"instance", c.instance},
                           {"passed", c.passed},
                           {"structural", c.structural}});
    out << (c.passed ? "pass " : "FAIL ") << c.relation << ": " << c.instance
        << (c.structural ? " (by construction)" : "") << "\n";
  }
  out << (check.all_passed() ? "all relations hold\n" : std::to_string(check.failures()) + " relation instances fail\n");
  return ojson{{"checks", std::move(checks)}, {"all_passed", check.all_passed()}};
}

ojson cmd_sink_module(const Digraph& g, const Options& o, std::ostream& out) {
  if (o.sink.empty()) throw UsageError("sink-module needs --sink");
  const SinkModule m = sink_module(g, g.vertex(o.sink));
  std::vector<std::string> basis;
  for (const Path& p : m.basis) basis.push_back(path_to_string(g, p));
  bool elementary = true;
  for (const Path& p : m.basis)
    for (const Path& q : m.basis)
      elementary = elementary && m.image(g, Monomial::from_paths(g, p, q)) == m.elementary(p, q);
  const RelationReport check = verify_relations(g, m.rep);
  ojson r;
  r["sink"] = o.sink;
  r["basis"] = basis;
  r["dimension"] = m.basis.size();
  r["representation"] = rep_to_json(g, m.rep);
  r["relations"] = relation_summary(check);
  r["elementary_images"] = elementary;
  out << "basis of M^" << o.sink << ": " << join(basis, ", ") << "\n";
  out << "dimension: " << m.basis.size() << "\n";
  out << "relations: " << (check.all_passed() ? "all hold" : "FAIL") << "\n";
  out << "p q^ acts as E_{p,q}: " << yes_no(elementary) << "\n";
  return r;
}

ojson cmd_chen(const Digraph& g, const Options& o, std::ostream& out) {
  if (o.cycle.empty()) throw UsageError("chen needs --cycle");
  const Cycle c = resolve_cycle(g, o.cycle);
  const ChenModule m = chen_module(g, c);
  std::vector<std::string> tokens;
  for (const Path& p : m.tokens) tokens.push_back(path_to_string(g, p));
  ojson action = ojson::array();
  out << "tokens of " << cycle_to_string(g, m.cycle) << ": " << join(tokens, ", ") << "\n";
  for (ArrowIdx e = 0; e < g.arrow_count(); ++e) {
    for (bool dual : {false, true}) {
      const Generator x{dual ? Generator::Kind::dual : Generator::Kind::arrow, e};
      const std::string name = g.arrow(e).id + (dual ? "^" : "");
      for (std::size_t t = 0; t < m.tokens.size(); ++t) {
        const auto img = chen_act(g, m, x, t);
        if (!img) continue;
        action.push_back(ojson{{"token", tokens[t]}, {"generator", name}, {"image", tokens[*img]}});
        out << "  " << tokens[t] << " . " << name << " = " << tokens[*img] << "\n";
      }
    }
  }
  const RelationReport check = verify_relations(g, m.rep);
  out << "relations: " << (check.all_passed() ? "all hold" : "FAIL") << "\n";
  ojson cyc = anchor_to_json(g, m.cycle);
  cyc.erase("kind");
  return ojson{{"cycle", std::move(cyc)},
               {"tokens", tokens},
               {"action", std::move(action)},
               {"relations", relation_summary(check)}};
}

void print_summands(const Digraph& g, const std::vector<Summand>& ss, const char* ring, std::ostream& out) {
  for (const Summand& s : ss) {
    out << "  M_" << s.n << "(" << (s.is_sink() ? "F" : ring) << ") from " << anchor_text(g, s.anchor) << "\n";
  }
}

ojson cmd_quotients(const Digraph& g, const Options&, std::ostream& out) {
  const QuotientShape shape = classify_quotients(g);
  ojson r = summands_to_json(g, shape.summands);
  if (shape.summands.empty()) {
    r["message"] = "no nonzero finite dimensional quotient";
    out << "no nonzero finite dimensional quotient\n";
  } else {
    out << "finite dimensional quotients are sums over a subset of:\n";
    print_summands(g, shape.summands, "F[x]/(P)", out);
  }
  return r;
}

ojson cmd_instantiate(const Digraph& g, const Options& o, std::ostream& out) {
  const QuotientShape shape = classify_quotients(g);
  std::map<std::size_t, std::vector<Rational>> polys;
  for (const std::string& arg : o.polys) {
    const auto eq = arg.find('=');
    if (eq == std::string::npos) throw UsageError("--poly expects anchor=c0,c1,..., got '" + arg + "'");
    const std::string anchor = trim(arg.substr(0, eq));
    std::vector<Rational> coeffs;
    for (const std::string& c : split(arg.substr(eq + 1), ',')) coeffs.push_back(parse_rational(trim(c)));
    std::optional<std::size_t> index;
    for (std::size_t k = 0; k < shape.summands.size(); ++k) {
      const Summand& s = shape.summands[k];
      if (!s.is_sink() && g.vertex_name(std::get<Cycle>(s.anchor).anchor) == anchor) index = k;
    }
    if (!index) throw Error("no cycle summand is anchored at '" + anchor + "'");
    if (polys.count(*index)) throw UsageError("--poly given twice for '" + anchor + "'");
    polys[*index] = std::move(coeffs);
  }
  const InstantiatedQuotient q = instantiate(shape, polys);
  ojson summands = summands_to_json(g, shape.summands)["summands"];
  for (std::size_t k = 0; k < summands.size(); ++k) {
    std::vector<std::string> coeffs;
    for (const Rational& c : q.polynomials[k]) coeffs.push_back(to_string(c));
    if (!shape.summands[k].is_sink()) summands[k]["polynomial"] = coeffs;
    summands[k]["degree"] = q.degrees[k];
  }
  ojson r{{"summands", std::move(summands)}};
  if (q.total_dimension.fits_ulong_p()) {
    r["total_dimension"] = q.total_dimension.get_ui();
  } else {
    r["total_dimension"] = q.total_dimension.get_str();
  }
  out << "instantiated quotient:\n";
  print_summands(g, shape.summands, "F[x]/(P)", out);
  out << "total dimension: " << q.total_dimension.get_str() << "\n";
  return r;
}

ojson cmd_ideals(const Digraph& g, const Options&, std::ostream& out) {
  ojson list = ojson::array();
  out << "hereditary saturated sets:\n";
  for (const auto& h : graded_ideals(g)) {
    const auto names = vertex_names(g, h);
    list.push_back(names);
    out << "  {" << join(names, ", ") << "}\n";
  }
  return ojson{{"hereditary_saturated", std::move(list)}};
}

ojson cmd_eval(const Digraph& g, const Options& o, std::ostream& out) {
  const Element a = parse_element(g, o.expr);
  const auto gr = grade(a);
  ojson r;
  r["input"] = o.expr;
  r["normal_form"] = element_to_json(g, a);
  r["is_zero"] = a.is_zero();
  if (gr) {
    r["grade"] = grade_to_json(g, *gr);
  } else {
    r["grade"] = "inhomogeneous";
  }
  out << to_string(g, a) << "\n";
  out << "grade: " << (gr ? grade_to_string(g, *gr) : "inhomogeneous") << "\n";
  return r;
}

ojson operator_checks(const OperatorModel& m, std::ostream& out) {
  ojson checks = ojson::array();
  bool all = true;
  for (const OperatorCheck& c : check_relations(m)) {
    checks.push_back(ojson{{"relation", c.relation}, {"window", c.window}, {"passed", c.passed}});
    out << (c.passed ? "pass " : "FAIL ") << c.relation << " on indices 0.." << (c.window ? c.window - 1 : 0)
        << "\n";
    all = all && c.passed;
  }
  return ojson{{"truncation", m.truncation}, {"checks", std::move(checks)}, {"all_passed", all}};
}

struct Command {
  std::string name;
  std::string help;
  bool needs_file = true;
  Handler handler;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations in Leavitt path algebras of finite digraphs", "lpa"};
  app.require_subcommand(1);
  Options o;

  const std::vector<Command> commands = {
      {"analyze", "sinks, cycles, maximal elements and classification flags", true, cmd_analyze},
      {"dimfun", "relation matrix and existence of a nonzero dimension function", true, cmd_dimfun},
      {"hilbert", "minimal dimension functions up to a bound", true, cmd_hilbert},
      {"ibn", "invariant basis number test", true, cmd_ibn},
      {"build-rep", "representation realizing a dimension function", true, cmd_build_rep},
      {"verify-rep", "check the Leavitt relations on a representation file", true, cmd_verify_rep},
      {"sink-module", "the module on paths ending at a sink", true, cmd_sink_module},
      {"chen", "the Chen module of a cycle", true, cmd_chen},
      {"quotients", "shape of the finite dimensional quotients", true, cmd_quotients},
      {"instantiate", "finite dimensional quotient for chosen polynomials", true, cmd_instantiate},
      {"ideals", "graded ideals as hereditary saturated sets", true, cmd_ideals},
      {"eval", "normal form and grade of an expression", true, cmd_eval},
      {"updown", "sampling operators D_i and U_i on sequences", false, {}},
      {"toeplitz", "shift operators S and T on sequences", false, {}},
  };

  std::map<const CLI::App*, const Command*> by_app;
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_flag("--json", o.json, "print a JSON report");
    by_app[sub] = &c;
    if (c.needs_file) sub->add_option("file", o.file, "digraph JSON file")->required();
    if (c.name == "hilbert") sub->add_option("--bound", o.bound, "largest entry to explore")->capture_default_str();
    if (c.name == "dimfun") sub->add_option("--dim", o.dim, "check v=N,w=M");
    if (c.name == "build-rep") {
      sub->add_option("--dim", o.dim, "dimension function v=N,w=M")->required();
      o.seed_opt = sub->add_option("--seed", o.seed, "use random invertible blocks drawn from this seed");
    }
    if (c.name == "verify-rep") sub->add_option("rep", o.rep_file, "representation JSON file")->required();
    if (c.name == "sink-module") sub->add_option("--sink", o.sink, "sink vertex")->required();
    if (c.name == "chen") sub->add_option("--cycle", o.cycle, "vertex on the cycle, or its arrows e,f")->required();
    if (c.name == "instantiate") sub->add_option("--poly", o.polys, "anchor=c0,c1,... constant term first");
    if (c.name == "eval") sub->add_option("expr", o.expr, "algebra expression")->required();
    if (c.name == "updown") {
      sub->add_option("--n", o.n, "number of operator pairs")->capture_default_str();
      sub->add_option("--window", o.window, "largest basis index N")->capture_default_str();
    }
    if (c.name == "toeplitz") sub->add_option("--window", o.window, "largest basis index N")->capture_default_str();
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const Command& cmd = *by_app.at(chosen);
  std::ostringstream text;
  try {
    ojson report;
    report["command"] = cmd.name;
    if (cmd.needs_file) {
      const Digraph g = load_digraph_file(o.file);
      report["digraph"] = digraph_summary(g);
      report["result"] = cmd.handler(g, o, text);
    } else {
      report["digraph"] = nullptr;
      ojson result;
      if (cmd.name == "updown") {
        result = operator_checks(updown_model(o.n, o.window), text);
        result["n"] = o.n;
      } else {
        result = operator_checks(toeplitz_model(o.window), text);
      }
      report["result"] = std::move(result);
    }
    if (o.json) {
      out << report.dump(2) << "\n";
    } else {
      out << text.str();
    }
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace lpa::cli
