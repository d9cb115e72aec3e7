#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "cli/cli.hpp"
#include "dcay/error.hpp"
#include "dcay/graph_io.hpp"

namespace dcay::cli {

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

int to_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "not an integer: '" + s + "'");
  }
  if (used != s.size()) throw Error(ErrorCode::ParseError, "not an integer: '" + s + "'");
  return v;
}

std::string list_text(const std::vector<int>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + "]";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  f << content;
}

// "n=3,k=1" matches a report whose params agree on every listed key.
bool expectation_matches(const std::string& spec, const TheoremReport& r) {
  if (trim(spec) == "all") return true;
  std::stringstream ss(spec);
  std::string pair;
  bool any = false;
  while (std::getline(ss, pair, ',')) {
    pair = trim(pair);
    if (pair.empty()) continue;
    const auto eq = pair.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "expected key=value in '" + spec + "'");
    const auto key = trim(pair.substr(0, eq));
    const auto value = trim(pair.substr(eq + 1));
    if (!r.params.contains(key) || r.params[key].dump() != value) return false;
    any = true;
  }
  return any;
}

struct Options {
  int cap = default_vertex_cap();
  int n = 0;
  std::string S;
  std::string format = "text";
  std::string dot_path;
  std::string graph6_path;
  std::string theorem;
  std::string p_list, t_list, T_list, n_list, k_list, A_list;
  std::vector<std::string> expected;
  int table = 0;
  bool table_json = false;
  std::string templ;
  int jobs = 1;
  std::string out_path;
};

int cmd_classify(const Options& o, std::ostream& out) {
  const ConnectionSet cs = validate(o.n, o.S);
  if (o.format == "json") {
    out << to_json(cs).dump(2) << "\n";
    return kOk;
  }
  const auto& p = cs.params();
  out << "case: " << cs.label() << "\n"
      << "S: " << cs.to_string() << "\n"
      << "T: " << list_text(p.rotation_exps) << "\n"
      << "A: " << list_text(p.reflection_exps) << "\n"
      << "Delta: " << list_text(p.delta) << "\n"
      << "d: " << p.d << "\n"
      << "n': " << p.n_prime << "\n";
  return kOk;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const ConnectionSet cs = validate(o.n, o.S);
  const Graph g = cayley(cs);
  const StructureReport rep = verify_structure(predict_structure(cs), g);
  if (!o.dot_path.empty()) write_file(o.dot_path, export_dot(g, "cay"));
  if (!o.graph6_path.empty()) write_file(o.graph6_path, export_graph6(g) + "\n");
  if (o.format == "json") {
    out << to_json(rep).dump(2) << "\n";
  } else if (o.format == "dot") {
    out << export_dot(g, "cay");
  } else if (o.format == "graph6") {
    out << export_graph6(g) << "\n";
  } else {
    out << "case " << rep.label() << ": " << summarize(rep) << "\n";
    for (const auto& c : rep.checks) {
      out << "  " << (c.ok ? "pass " : "FAIL ") << c.name;
      if (!c.detail.empty()) out << " (" << c.detail << ")";
      out << "\n";
    }
  }
  return rep.verified ? kOk : kUnexpectedRefutation;
}

int cmd_aut(const Options& o, std::ostream& out) {
  const ConnectionSet cs = validate(o.n, o.S);
  const Graph g = cayley(cs);
  const AutomorphismResult res = automorphism_search(g, o.cap);
  const NormalityEvidence ev = cayley_normality(cs, res.group);
  const auto maps = aut_group_set(cs);
  if (o.format == "json") {
    ordered_json gs = ordered_json::array();
    for (const auto& m : maps) gs.push_back(m.to_string());
    ordered_json j{{"S", to_json(cs)},
                   {"aut_order", res.group.order().str()},
                   {"group", to_json(res.group)},
                   {"normality", to_json(ev)},
                   {"stabilizer_order", ev.stabilizer_order.str()},
                   {"aut_gs", gs}};
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "|Aut| = " << res.group.order() << "\n";
  out << "generators:\n";
  for (const auto& x : res.group.generators()) out << "  " << x.cycle_string() << "\n";
  out << "normal: " << (ev.normal ? "yes" : "no") << "\n";
  if (ev.witness) out << "  witness conjugate: " << ev.witness->cycle_string() << "\n";
  out << "|Aut_e| = " << ev.stabilizer_order << "\n";
  out << "Aut(G,S) (" << maps.size() << "):";
  for (const auto& m : maps) out << " " << m.to_string();
  out << "\n";
  out << "Aut_e = Aut(G,S): " << (ev.stabilizer_equals_aut_gs ? "yes" : "no") << "\n";
  return kOk;
}

std::vector<TheoremReport> run_verify(const Options& o) {
  const auto& id = o.theorem;
  auto list_or = [](const std::string& text, const std::string& fallback) {
    return parse_int_list(text.empty() ? fallback : text);
  };
  std::vector<TheoremReport> reports;
  if (id == "lemma3.2" || id == "thm3.6" || id == "burnside-schur") {
    auto reps = list_or(o.T_list, "1,2");
    for (int p : list_or(o.p_list, "7")) {
      if (id == "lemma3.2") {
        reports.push_back(check_lemma_3_2(p, symmetric_closure(p, reps), o.cap));
      } else if (id == "thm3.6") {
        reports.push_back(check_wreath(p, reps, WreathVariant::General, o.cap));
      } else {
        const PermGroup aut = automorphism_group(circulant(p, symmetric_closure(p, reps)), o.cap);
        reports.push_back(check_burnside_schur(aut, p));
      }
    }
  } else if (id == "thm3.7" || id == "cor3.12") {
    std::vector<int> reps{1};
    for (int t : list_or(o.t_list, "2")) reps.push_back(t);
    for (int p : list_or(o.p_list, "7")) {
      reports.push_back(check_wreath(p, reps, id == "cor3.12" ? WreathVariant::Corollary : WreathVariant::TwoUnits,
                                     o.cap));
    }
  } else if (id == "lemma4.6" || id == "thm4.8") {
    const std::string tag = id == "lemma4.6" ? "4.6" : "4.8";
    for (int n : list_or(o.n_list, "7")) {
      if (!o.A_list.empty()) {
        reports.push_back(check_lemma_4_6_thm_4_8(n, parse_int_list(o.A_list), tag, o.cap));
        continue;
      }
      std::vector<int> ks = o.k_list.empty() ? std::vector<int>{} : parse_int_list(o.k_list);
      if (o.k_list.empty()) {
        for (int k = 4; k < n; ++k) ks.push_back(k);
      }
      for (int k : ks) {
        std::vector<int> A;
        for (int a = 0; a < k; ++a) A.push_back(a);
        reports.push_back(check_lemma_4_6_thm_4_8(n, A, tag, o.cap));
      }
    }
  } else if (id == "thm5.2") {
    for (int n : list_or(o.n_list, "3..10")) {
      std::vector<int> ks = o.k_list.empty() ? std::vector<int>{} : parse_int_list(o.k_list);
      if (o.k_list.empty()) {
        for (int k = 1; k < n; ++k) ks.push_back(k);
      }
      for (int k : ks) reports.push_back(check_thm_5_2(n, k, o.cap));
    }
  } else {
    throw Error(ErrorCode::InvalidArgument,
                "unknown theorem id '" + id +
                    "' (expected lemma3.2, thm3.6, thm3.7, cor3.12, lemma4.6, thm4.8, thm5.2, burnside-schur)");
  }
  return reports;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto reports = run_verify(o);
  int code = kOk;
  ordered_json all = ordered_json::array();
  for (const auto& r : reports) {
    bool expected = false;
    for (const auto& spec : o.expected) expected = expected || expectation_matches(spec, r);
    if (r.verdict == Verdict::Refuted && !expected) code = kUnexpectedRefutation;
    if (r.verdict == Verdict::Inconclusive && code == kOk) code = kCapExceeded;
    if (o.format == "json") {
      auto j = to_json(r);
      if (r.verdict == Verdict::Refuted) j["expected_discrepancy"] = expected;
      all.push_back(j);
      continue;
    }
    out << r.theorem << " " << r.params.dump() << ": " << verdict_name(r.verdict);
    if (r.verdict == Verdict::Inapplicable) {
      for (const auto& h : r.hypotheses) {
        if (!h.holds) {
          out << " [" << h.name << " fails" << (h.value.empty() ? "" : ": " + h.value) << "]";
          break;
        }
      }
    }
    if (r.predicted.aut_order && r.observed.aut_order) {
      out << " (predicted |Aut| " << *r.predicted.aut_order << ", observed " << *r.observed.aut_order << ")";
    }
    if (r.verdict == Verdict::Refuted) out << (expected ? " expected" : " UNEXPECTED");
    out << "\n";
  }
  if (o.format == "json") out << all.dump(2) << "\n";
  return code;
}

int cmd_tables(const Options& o, std::ostream& out) {
  const TableResult t = reproduce_table(o.table, o.cap);
  if (o.table_json || o.format == "json") {
    out << to_json(t).dump(2) << "\n";
  } else {
    write_text(out, t);
  }
  return t.all_match() ? kOk : kUnexpectedRefutation;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const auto ns = parse_int_list(o.n_list);
  const auto ks = o.k_list.empty() ? std::vector<int>{} : parse_int_list(o.k_list);
  const auto rows = run_sweep(o.templ, ns, ks, o.cap, o.jobs);
  std::ostringstream buf;
  if (o.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) arr.push_back(to_json(r));
    buf << arr.dump(2) << "\n";
  } else {
    write_csv(buf, rows);
  }
  if (o.out_path.empty()) {
    out << buf.str();
  } else {
    write_file(o.out_path, buf.str());
  }
  return kOk;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    part = trim(part);
    if (part.empty()) continue;
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(to_int(part));
      continue;
    }
    const int lo = to_int(trim(part.substr(0, dots)));
    const int hi = to_int(trim(part.substr(dots + 2)));
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  return out;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cayley graphs on dihedral groups: classification, structure, automorphisms"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--cap", o.cap, "vertex cap for automorphism searches (env DCAY_VERTEX_CAP)")
      ->check(CLI::PositiveNumber);

  const std::vector<std::string> text_json{"text", "json"};
  auto* classify = app.add_subcommand("classify", "case kind and derived parameters of S");
  classify->add_option("-n", o.n, "modulus")->required();
  classify->add_option("-S", o.S, "elements, e.g. \"r^1,r^6,s,s*r^3\"")->required();
  classify->add_option("--format", o.format)->check(CLI::IsMember(text_json));

  auto* analyze_cmd = app.add_subcommand("analyze", "verified structural decomposition");
  analyze_cmd->add_option("-n", o.n, "modulus")->required();
  analyze_cmd->add_option("-S", o.S, "elements")->required();
  analyze_cmd->add_option("--format", o.format)
      ->check(CLI::IsMember({"text", "json", "dot", "graph6"}));
  analyze_cmd->add_option("--dot", o.dot_path, "write the graph as DOT");
  analyze_cmd->add_option("--graph6", o.graph6_path, "write the graph as graph6");

  auto* aut = app.add_subcommand("aut", "automorphism group, normality and Aut(G,S)");
  aut->add_option("-n", o.n, "modulus")->required();
  aut->add_option("-S", o.S, "elements")->required();
  aut->add_option("--format", o.format)->check(CLI::IsMember(text_json));

  auto* verify = app.add_subcommand("verify", "run a theorem checker over parameter points");
  verify->add_option("theorem", o.theorem,
                     "lemma3.2 thm3.6 thm3.7 cor3.12 lemma4.6 thm4.8 thm5.2 burnside-schur")
      ->required();
  verify->add_option("--p", o.p_list, "primes, e.g. 7,11,13");
  verify->add_option("--t", o.t_list, "representatives t_i >= 2 besides 1");
  verify->add_option("--T", o.T_list, "positive representatives of T");
  verify->add_option("--n", o.n_list, "moduli, e.g. 3..10");
  verify->add_option("--k", o.k_list, "k values");
  verify->add_option("--A", o.A_list, "reflection exponents");
  verify->add_option("--expect-discrepancies", o.expected,
                     "refutations to accept, e.g. n=3,k=1 (repeatable, or 'all')");
  verify->add_option("--format", o.format)->check(CLI::IsMember(text_json));

  auto* tables = app.add_subcommand("tables", "regenerate a stated table and diff against it");
  tables->add_option("which", o.table, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
  tables->add_flag("--json", o.table_json, "machine-readable diff");

  auto* sweep = app.add_subcommand("sweep", "dataset over a family of connection sets");
  const std::map<std::string, std::string> case_names{
      {"CaseI", "case1"}, {"CaseII", "case2"}, {"CaseIII", "case3"}, {"CaseIV", "case4"}, {"CaseV", "case5"}};
  sweep->add_option("template", o.templ, "case1 case2 case3 case4 case5 crown knn (or CaseI..CaseV)")
      ->required()
      ->transform(CLI::Transformer(case_names))
      ->check(CLI::IsMember(sweep_templates()));
  sweep->add_option("--n", o.n_list, "moduli, e.g. 4..10")->required();
  sweep->add_option("--k", o.k_list, "k values (default: the template's range)");
  sweep->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json", "text"}));
  sweep->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  sweep->add_option("--out", o.out_path, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*classify) return cmd_classify(o, out);
    if (*analyze_cmd) return cmd_analyze(o, out);
    if (*aut) return cmd_aut(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*tables) return cmd_tables(o, out);
    if (*sweep) return cmd_sweep(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::SizeCapExceeded ? kCapExceeded : kUsage;
  }
  return kUsage;
}

}  // namespace dcay::cli
