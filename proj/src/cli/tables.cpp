#include <cstdlib>
#include <fstream>
#include <ostream>

#include "cli/cli.hpp"
#include "dcay/error.hpp"

#ifndef DCAY_DATA_DIR
#define DCAY_DATA_DIR "data"
#endif

namespace dcay::cli {

namespace {

nlohmann::json load_fixture(const std::string& name) {
  const std::string path = data_dir() + "/" + name;
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open fixture " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

Graph reference_graph(const nlohmann::json& ref) {
  const auto kind = ref.at("kind").get<std::string>();
  if (kind == "complete") return complete(ref.at("m").get<int>());
  if (kind == "cocktail_party") return cocktail_party(ref.at("parts").get<int>());
  if (kind == "complete_bipartite") return complete_bipartite(ref.at("m").get<int>(), ref.at("m").get<int>());
  if (kind == "circulant") {
    const int n = ref.at("n").get<int>();
    const auto reps = ref.at("T").get<std::vector<int>>();
    return circulant(n, symmetric_closure(n, reps));
  }
  throw Error(ErrorCode::ParseError, "unknown reference graph kind '" + kind + "'");
}

std::string list_text(const std::vector<int>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + "]";
}

void cell(TableRow& row, std::string field, std::string stated, std::string computed, bool match) {
  row.cells.push_back({std::move(field), std::move(stated), std::move(computed), match});
}

ConnectionSet rotation_set(int n, const std::vector<int>& T) {
  std::vector<DihedralElement> elems;
  for (int t : T) elems.push_back(DihedralElement::rotation(t, n));
  return validate(n, elems);
}

TableResult table1() {
  TableResult result;
  result.which = 1;
  const auto fixture = load_fixture("table1.json");
  for (const auto& entry : fixture.at("rows")) {
    const int n = entry.at("n").get<int>();
    const auto T = symmetric_closure(n, entry.at("T").get<std::vector<int>>());
    TableRow row;
    row.key = {{"n", n}, {"T", entry.at("T")}};
    const Graph ref = reference_graph(entry.at("reference"));
    const Graph circ = circulant(n, T);
    const bool circ_ok = isomorphic(circ, ref).has_value();
    cell(row, "Cay(Z_n,T)", entry.at("circulant").get<std::string>(),
         recognise(circ).value_or(circulant_name(n, T)), circ_ok);

    const ConnectionSet cs = rotation_set(n, T);
    const Graph g = cayley(cs);
    const auto comps = components(g);
    const int copies = entry.at("copies").get<int>();
    cell(row, "components", std::to_string(copies), std::to_string(comps.size()),
         static_cast<int>(comps.size()) == copies);
    bool all_iso = true;
    for (const auto& comp : comps) all_iso = all_iso && isomorphic(g.induced(comp), ref).has_value();
    cell(row, "Cay(D_2n,S)", entry.at("cayley").get<std::string>(),
         std::to_string(comps.size()) + " components, each isomorphic to the reference: " +
             (all_iso ? "yes" : "no"),
         all_iso);
    const StructureReport rep = analyze(cs);
    cell(row, "structure report", "verified", rep.verified ? "verified" : "not verified", rep.verified);
    result.rows.push_back(std::move(row));
  }
  return result;
}

TableResult table2(int cap) {
  TableResult result;
  result.which = 2;
  const auto fixture = load_fixture("table2.json");
  result.notes.push_back("stated groups write L(Z_p); the stated theorems write R(Z_p). Both are read as "
                         "the regular translation group of Z_p");
  for (const auto& entry : fixture.at("rows")) {
    const int p = entry.at("p").get<int>();
    const auto stated_H = entry.at("H").get<std::vector<int>>();
    const auto stated_T = entry.at("T").get<std::vector<int>>();
    const auto comp_reps = entry.at("component").at("T").get<std::vector<int>>();
    TableRow row;
    row.key = {{"p", p}};

    const auto T = symmetric_closure(p, comp_reps);
    cell(row, "T", list_text(stated_T), list_text(T), T == stated_T);
    const auto H = unit_stabilizer(p, T);
    cell(row, "H", list_text(stated_H), list_text(H), H == stated_H);

    const ConnectionSet cs = rotation_set(p, stated_T);
    const Graph g = cayley(cs);
    const auto comps = components(g);
    const int copies = entry.at("components").get<int>();
    cell(row, "components", std::to_string(copies), std::to_string(comps.size()),
         static_cast<int>(comps.size()) == copies);
    const Graph circ = circulant(p, T);
    bool all_iso = true;
    for (const auto& comp : comps) all_iso = all_iso && isomorphic(g.induced(comp), circ).has_value();
    cell(row, "component structure", circulant_name(p, T), all_iso ? circulant_name(p, T) : "not isomorphic",
         all_iso);

    const BigInt comp_pred = BigInt(p) * stated_H.size();
    const PermGroup comp_aut = automorphism_group(circ, cap);
    cell(row, "|Aut(component)|", comp_pred.str(), comp_aut.order().str(), comp_aut.order() == comp_pred);
    const PermGroup aut = automorphism_group(g, cap);
    const BigInt whole_pred = comp_pred * comp_pred * 2;
    cell(row, "|Aut(Cay(D_2p,S))|", whole_pred.str() + " from " + entry.at("aut").get<std::string>(),
         aut.order().str(), aut.order() == whole_pred);
    result.rows.push_back(std::move(row));
  }
  return result;
}

}  // namespace

bool TableRow::match() const {
  for (const auto& c : cells) {
    if (!c.match) return false;
  }
  return true;
}

bool TableResult::all_match() const {
  for (const auto& r : rows) {
    if (!r.match()) return false;
  }
  return true;
}

std::string data_dir() {
  if (const char* env = std::getenv("DCAY_DATA_DIR"); env && *env) return env;
  return DCAY_DATA_DIR;
}

TableResult reproduce_table(int which, int cap) {
  if (which == 1) return table1();
  if (which == 2) return table2(cap);
  throw Error(ErrorCode::InvalidArgument, "tables are numbered 1 and 2");
}

ordered_json to_json(const TableResult& t) {
  ordered_json rows = ordered_json::array();
  for (const auto& r : t.rows) {
    ordered_json cells = ordered_json::array();
    for (const auto& c : r.cells) {
      cells.push_back({{"field", c.field}, {"stated", c.stated}, {"computed", c.computed}, {"match", c.match}});
    }
    rows.push_back({{"key", r.key}, {"cells", cells}, {"match", r.match()}});
  }
  return {{"table", t.which}, {"rows", rows}, {"all_match", t.all_match()}, {"notes", t.notes}};
}

void write_text(std::ostream& out, const TableResult& t) {
  out << "Table " << t.which << "\n";
  for (const auto& r : t.rows) {
    out << (r.match() ? "  ok   " : "  DIFF ") << r.key.dump() << "\n";
    for (const auto& c : r.cells) {
      out << "         " << (c.match ? "= " : "! ") << c.field << ": stated " << c.stated << "; computed "
          << c.computed << "\n";
    }
  }
  for (const auto& n : t.notes) out << "note: " << n << "\n";
  out << (t.all_match() ? "all rows match\n" : "differences found\n");
}

}  // namespace dcay::cli
