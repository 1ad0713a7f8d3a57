#include "cheb/tables.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "cheb/assembly.hpp"
#include "cheb/baselines.hpp"
#include "cheb/invariants.hpp"
#include "cheb/zeros.hpp"

namespace cheb {

namespace {

std::string trim(std::string_view s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

}  // namespace

Printed parse_printed(std::string_view s) {
  Printed p;
  p.text = trim(s);
  std::string mant;
  size_t i = 0;
  const std::string& t = p.text;
  for (; i < t.size() && t[i] != 'E' && t[i] != 'e'; ++i)
    if (t[i] != ',' && t[i] != ' ') mant += t[i];
  if (i < t.size()) {
    size_t k = i;
    while (k > 0 && t[k - 1] == ' ') --k;
    p.exp_sep = t.substr(k, i - k + 1);
    p.exp_text = trim(t.substr(i + 1));
    if (p.exp_text.empty()) throw std::invalid_argument("bad number: " + p.text);
    p.exponent = std::stoi(p.exp_text);
  }
  if (mant.empty()) throw std::invalid_argument("bad number: " + p.text);
  for (char c : mant)
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '.' && c != '-')
      throw std::invalid_argument("bad number: " + p.text);
  const auto dot = mant.find('.');
  p.decimals = dot == std::string::npos ? 0 : int(mant.size() - dot - 1);
  p.value = std::stod(mant) * std::pow(10.0, p.exponent);
  p.unit = std::pow(10.0, p.exponent - p.decimals);
  return p;
}

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::ROUND_UP: return "round-up";
    case Rule::TRUNCATE: return "truncate";
    case Rule::REL_1E2: return "rel-1e-2";
    case Rule::EXACT: return "exact";
  }
  return "?";
}

bool within(Rule r, double v, const Printed& p) {
  if (!std::isfinite(v)) return false;
  const double slack = 1e-12 * std::abs(p.value);  // printed decimals are not exact in binary
  switch (r) {
    case Rule::ROUND_UP: return p.value - 2 * p.unit < v && v <= p.value + slack;
    case Rule::TRUNCATE: return p.value - slack <= v && v < p.value + p.unit;
    case Rule::REL_1E2: return std::abs(v - p.value) <= 1e-2 * std::abs(p.value);
    case Rule::EXACT: return std::abs(v - p.value) <= 1e-12 * std::max(1.0, std::abs(p.value));
  }
  return false;
}

std::string render_like(double v, const Printed& p, Rule r) {
  if (!std::isfinite(v)) return "nan";
  const double scale = std::pow(10.0, p.decimals - p.exponent);
  double q = v * scale;
  if (r == Rule::ROUND_UP)
    q = std::ceil(q - 1e-9 * std::abs(q));
  else if (r == Rule::TRUNCATE)
    q = std::floor(q + 1e-9 * std::abs(q));
  else
    q = std::round(q);
  std::string out = fixed(q / std::pow(10.0, p.decimals), p.decimals);
  if (!p.exp_sep.empty()) out += p.exp_sep + p.exp_text;
  return out;
}

int Table::failures() const {
  int n = 0;
  for (const auto& r : rows)
    for (const auto& c : r.cells) n += !c.pass;
  return n;
}

bool table_has_beta0_split(int id) { return id >= 4; }

std::vector<std::vector<std::string>> baseline_rows(int id) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in{std::string(baseline_text(id))};
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    size_t start = 0;
    while (true) {
      const size_t amp = line.find('&', start);
      cells.push_back(trim(std::string_view(line).substr(start, amp - start)));
      if (amp == std::string::npos) break;
      start = amp + 1;
    }
    out.push_back(std::move(cells));
  }
  return out;
}

namespace {

Cell make_cell(const std::string& column, const std::string& printed, double v, Rule rule) {
  const Printed p = parse_printed(printed);
  return {column, printed, v, render_like(v, p, rule), rule, within(rule, v, p)};
}

struct ColumnSpec {
  std::string name;
  Rule rule;
};

// A published row holds the label, the shared columns, then one block per beta0 state.
struct Layout {
  std::vector<ColumnSpec> shared;
  std::vector<ColumnSpec> per_state;
};

Table skeleton(int id, const char* title, const char* label, const Layout& lay, bool split, bool present) {
  Table t;
  t.id = id;
  t.title = title;
  t.state = split ? (present ? "present" : "absent") : "";
  t.label_column = label;
  for (const auto& c : lay.shared) t.columns.push_back(c.name);
  for (const auto& c : lay.per_state) t.columns.push_back(c.name);
  return t;
}

// Fill one row: values[i] lines up with the layout's shared then per-state columns.
TableRow fill(const std::vector<std::string>& pub, const Layout& lay, bool present,
              const std::vector<double>& values) {
  TableRow row;
  row.label = pub.at(0);
  const size_t ns = lay.shared.size(), np = lay.per_state.size();
  const size_t off = 1 + ns + (present ? 0 : np);
  for (size_t i = 0; i < ns; ++i)
    row.cells.push_back(make_cell(lay.shared[i].name, pub.at(1 + i), values.at(i), lay.shared[i].rule));
  for (size_t i = 0; i < np; ++i)
    row.cells.push_back(
        make_cell(lay.per_state[i].name, pub.at(off + i), values.at(ns + i), lay.per_state[i].rule));
  return row;
}

Table table1() {
  const Layout lay{{{"alpha0(1/2)", Rule::ROUND_UP},
                    {"alpha0(1)", Rule::ROUND_UP},
                    {"alpha0(2)", Rule::ROUND_UP},
                    {"alpha0'(1)", Rule::ROUND_UP},
                    {"alpha0'(2)", Rule::ROUND_UP}},
                   {}};
  Table t = skeleton(1, "zero-counting coefficients: N_L(T) <= alpha0(T) log d_L", "n0", lay, false, true);
  const auto pub = baseline_rows(1);
  const auto& rows = minkowski_table();
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    t.rows.push_back(fill(pub.at(i), lay, true,
                          {alpha0(0.5, r), alpha0(1, r), alpha0(2, r), alpha0_prime(1, r), alpha0_prime(2, r)}));
  }
  return t;
}

Table table2() {
  const Layout lay{{{"t0 given omega0=k", Rule::TRUNCATE}, {"omega0 given t0=k", Rule::TRUNCATE}}, {}};
  Table t = skeleton(2, "(omega0, t0) pairs", "k", lay, false, true);
  for (const auto& pub : baseline_rows(2)) {
    const double k = std::stod(pub.at(0));
    t.rows.push_back(fill(pub, lay, true, {solve_t0(k), solve_omega0(k)}));
  }
  return t;
}

Table table3() {
  const Layout lay{{{"d0", Rule::EXACT}, {"M", Rule::EXACT}}, {}};
  Table t = skeleton(3, "minimal discriminants and Minkowski coefficients", "n0", lay, false, true);
  const auto pub = baseline_rows(3);
  const auto& rows = minkowski_table();
  for (size_t i = 0; i < rows.size(); ++i)
    t.rows.push_back(fill(pub.at(i), lay, true, {std::exp(rows[i].log_d0), rows[i].M}));
  return t;
}

Table table4(bool present) {
  const Layout lay{{{"alpha", Rule::ROUND_UP}, {"log x0", Rule::ROUND_UP}},
                   {{"delta0", Rule::EXACT},
                    {"max(E1,E2)", Rule::ROUND_UP},
                    {"N0", Rule::ROUND_UP},
                    {"E3", Rule::ROUND_UP},
                    {"E3~", Rule::ROUND_UP}}};
  Table t = skeleton(4, "psi error constants", "n0", lay, true, present);
  const auto pub = baseline_rows(4);
  for (int n0 = 2; n0 <= 21; ++n0) {
    const TuningConfig c = table_config(n0, present);
    const FinalConstants f = final_constants(c);
    t.rows.push_back(
        fill(pub.at(n0 - 2), lay, present, {c.alpha, c.x0_log, c.delta0, f.E12, f.N0, f.E3, f.E3_tilde}));
  }
  return t;
}

Table table5(bool present) {
  const Layout lay{{{"alpha", Rule::ROUND_UP}},
                   {{"D12", Rule::ROUND_UP}, {"N0", Rule::ROUND_UP}, {"D3", Rule::ROUND_UP}, {"D3~", Rule::ROUND_UP}}};
  Table t = skeleton(5, "log-form constants (k = 1)", "n0", lay, true, present);
  const auto pub = baseline_rows(5);
  for (int n0 = 2; n0 <= 21; ++n0) {
    const TuningConfig c = table_config(n0, present);
    const FinalConstants f = final_constants(c, 1);
    t.rows.push_back(fill(pub.at(n0 - 2), lay, present, {c.alpha, f.D12, f.N0, f.D3, f.D3_tilde}));
  }
  return t;
}

Table table6(bool present) {
  const Layout lay{{{"alpha", Rule::ROUND_UP},
                    {"1/sqrt(R2)-1/sqrt(alpha)", Rule::ROUND_UP},
                    {"1/sqrt(R2)-1/(2sqrt(alpha))", Rule::ROUND_UP}},
                   {{"N0", Rule::ROUND_UP}, {"C12", Rule::ROUND_UP}, {"C3", Rule::ROUND_UP}, {"C3~", Rule::ROUND_UP}}};
  Table t = skeleton(6, "classical-form constants", "n0", lay, true, present);
  const auto pub = baseline_rows(6);
  for (int n0 = 2; n0 <= 21; ++n0) {
    const TuningConfig c = table_config(n0, present);
    const FinalConstants f = final_constants(c);
    t.rows.push_back(fill(pub.at(n0 - 2), lay, present,
                          {c.alpha, f.exp_coeff_full, f.exp_coeff_half, f.N0, f.C12, f.C3, f.C3_tilde}));
  }
  return t;
}

Table table7(bool present) {
  const Layout lay{{}, {{"a0", Rule::REL_1E2}, {"b0", Rule::EXACT}, {"c0", Rule::REL_1E2}}};
  Table t = skeleton(7, "(a0, b0, c0) per degree", "n_L", lay, true, present);
  for (const auto& pub : baseline_rows(7)) {
    if (pub.at(present ? 1 : 4) == "-") continue;
    const bool tail = pub.at(0).find("to") != std::string::npos || pub.at(0).rfind(">=", 0) == 0;
    const int n0 = tail ? 21 : std::stoi(pub.at(0));
    const bool full = pub.at(0).rfind(">=", 0) == 0;
    const TuningConfig c = table_config(n0, present);
    const ClassicalConstants k =
        full ? classical_constants(c, Source::FULL, 0.23) : classical_constants(c, Source::REFINED, 0.25);
    // published layout has both states side by side with no shared columns
    std::vector<std::string> row = pub;
    if (!present) row = {pub[0], pub[4], pub[5], pub[6]};
    t.rows.push_back(fill(row, lay, true, {k.a0, k.b0, k.c0}));
  }
  return t;
}

Table table8(bool present) {
  const Layout lay{{}, {{"a0", Rule::REL_1E2}, {"c0", Rule::REL_1E2}}};
  Table t = skeleton(8, "(a0, c0) with b0 = 0.23, valid for n_L >= n0", "n0", lay, true, present);
  const auto pub = baseline_rows(8);
  for (int n0 = 2; n0 <= 21; ++n0) {
    const ClassicalConstants k = classical_constants(table_config(n0, present), Source::FULL, 0.23);
    t.rows.push_back(fill(pub.at(n0 - 2), lay, present, {k.a0, k.c0}));
  }
  return t;
}

}  // namespace

Table generate_table(int id, bool present) {
  switch (id) {
    case 1: return table1();
    case 2: return table2();
    case 3: return table3();
    case 4: return table4(present);
    case 5: return table5(present);
    case 6: return table6(present);
    case 7: return table7(present);
    case 8: return table8(present);
    default: throw std::out_of_range("unknown table id " + std::to_string(id));
  }
}

std::string diff_report(const Table& t) {
  std::ostringstream out;
  out.precision(10);
  for (const auto& r : t.rows)
    for (const auto& c : r.cells) {
      if (c.pass) continue;
      out << "table " << t.id;
      if (!t.state.empty()) out << " [beta0 " << t.state << "]";
      out << " " << t.label_column << "=" << r.label << " " << c.column << ": printed " << c.printed
          << ", computed " << c.computed << " (renders " << c.rendered << "), rule " << rule_name(c.rule)
          << "\n";
    }
  return out.str();
}

}  // namespace cheb
