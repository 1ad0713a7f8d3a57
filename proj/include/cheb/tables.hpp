#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cheb {

// A number as printed: "0.28649", "8.6637 E-03", "2,914.82", "1.0073 E4".
struct Printed {
  std::string text;
  double value = 0;
  double unit = 0;  // one unit in the last printed digit
  int decimals = 0;
  std::string exp_sep;   // "" when there is no exponent part
  std::string exp_text;  // exponent digits as printed, e.g. "-03"
  int exponent = 0;
};

Printed parse_printed(std::string_view s);

enum class Rule {
  ROUND_UP,  // printed - 2u < v <= printed
  TRUNCATE,  // printed <= v < printed + u
  REL_1E2,   // |v - printed| <= 1e-2 |printed|
  EXACT,     // input values echoed back
};

const char* rule_name(Rule r);
bool within(Rule r, double v, const Printed& p);

// v at the printed precision and in the printed style; ROUND_UP rounds up,
// TRUNCATE rounds down, the others round to nearest.
std::string render_like(double v, const Printed& p, Rule r);

struct Cell {
  std::string column;
  std::string printed;
  double computed = 0;
  std::string rendered;
  Rule rule = Rule::EXACT;
  bool pass = false;
};

struct TableRow {
  std::string label;
  std::vector<Cell> cells;
};

struct Table {
  int id = 0;
  std::string title;
  std::string state;  // "present", "absent" or "" when the table has no beta0 split
  std::string label_column;
  std::vector<std::string> columns;
  std::vector<TableRow> rows;

  int failures() const;
};

inline constexpr int kTableCount = 8;

bool table_has_beta0_split(int id);

// Rows of the published table, cells split on '&' and trimmed.
std::vector<std::vector<std::string>> baseline_rows(int id);

// Recompute table `id` and compare every cell with the published value.
// Throws std::out_of_range for an unknown id.
Table generate_table(int id, bool beta0_present);

// One line per failing cell.
std::string diff_report(const Table& t);

}  // namespace cheb
