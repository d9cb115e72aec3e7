#pragma once

// Command-line front end: argument handling lives in commands.cpp, the
// sweep dataset builder in sweep.cpp and table reproduction in tables.cpp.

#include <iosfwd>
#include <string>
#include <vector>

#include "dcay/report_json.hpp"

namespace dcay::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kCapExceeded = 2,
  kUnexpectedRefutation = 3,
};

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

/// "3..10", "7,11,13", "5" or mixtures such as "3..5,9". Throws ParseError;
/// an empty result is allowed (e.g. "5..4").
std::vector<int> parse_int_list(const std::string& text);

// ---- sweep ----

struct SweepRow {
  std::string templ;
  int n = 0;
  int k = 0;
  std::string S;
  std::string case_label;
  int d = 0;
  int components = 0;
  bool structure_verified = false;
  std::string aut_order;
  std::string normal;
  std::string stabilizer_order;
  int aut_gs_size = 0;
  std::string fact_consistent;
  std::string verdict;
  std::string reason;  // non-empty when the row was skipped
};

/// Column names, fixed for every template.
const std::vector<std::string>& sweep_columns();
std::vector<std::string> sweep_templates();

/// One row per (n, k) instance in parameter order. `k_values` empty means the
/// template's natural range. Rows above the vertex cap are kept with a reason.
std::vector<SweepRow> run_sweep(const std::string& templ, const std::vector<int>& n_values,
                                const std::vector<int>& k_values, int cap, int jobs);

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);
ordered_json to_json(const SweepRow& row);

// ---- tables ----

struct TableCell {
  std::string field;
  std::string stated;
  std::string computed;
  bool match = false;
};

struct TableRow {
  ordered_json key;
  std::vector<TableCell> cells;
  bool match() const;
};

struct TableResult {
  int which = 0;
  std::vector<TableRow> rows;
  std::vector<std::string> notes;
  bool all_match() const;
};

/// Directory holding table1.json and table2.json: DCAY_DATA_DIR in the
/// environment, else the source tree's data/ directory.
std::string data_dir();
TableResult reproduce_table(int which, int cap);
ordered_json to_json(const TableResult& t);
void write_text(std::ostream& out, const TableResult& t);

}  // namespace dcay::cli
