// cheb: table regeneration, bound evaluation and exact quadratic checks.
#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cheb/assembly.hpp"
#include "cheb/constants.hpp"
#include "cheb/invariants.hpp"
#include "cheb/tables.hpp"
#include "cheb/verifier.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kOk = 0, kMismatch = 1, kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

// Header plus rows, emitted as CSV or an aligned Markdown table.
void write_grid(std::ostream& out, const std::vector<std::string>& head,
                const std::vector<std::vector<std::string>>& rows, const std::string& format) {
  if (format == "csv") {
    for (size_t i = 0; i < head.size(); ++i) out << (i ? "," : "") << csv_field(head[i]);
    out << "\n";
    for (const auto& r : rows) {
      for (size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_field(r[i]);
      out << "\n";
    }
    return;
  }
  std::vector<size_t> w(head.size());
  for (size_t i = 0; i < head.size(); ++i) w[i] = std::max<size_t>(3, head[i].size());
  for (const auto& r : rows)
    for (size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
  auto line = [&](const std::vector<std::string>& r) {
    out << "|";
    for (size_t i = 0; i < r.size(); ++i) out << " " << r[i] << std::string(w[i] - r[i].size(), ' ') << " |";
    out << "\n";
  };
  line(head);
  out << "|";
  for (size_t x : w) out << std::string(x + 2, '-') << "|";
  out << "\n";
  for (const auto& r : rows) line(r);
}

std::vector<bool> beta0_states(const std::string& b, int id) {
  if (!cheb::table_has_beta0_split(id)) return {true};
  if (b == "present") return {true};
  if (b == "absent") return {false};
  return {true, false};
}

int cmd_tables(int id, const std::string& beta0, const std::string& format, const std::string& out_path) {
  if (id < 1 || id > cheb::kTableCount)
    throw UsageError("unknown table id " + std::to_string(id) + " (valid: 1.." + std::to_string(cheb::kTableCount) + ")");
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw UsageError("cannot open " + out_path);
  }
  std::ostream& out = out_path.empty() ? std::cout : file;

  int failures = 0, cells = 0;
  bool first = true;
  for (bool present : beta0_states(beta0, id)) {
    const cheb::Table t = cheb::generate_table(id, present);
    failures += t.failures();
    if (format == "jsonl") {
      for (const auto& r : t.rows)
        for (const auto& c : r.cells) {
          ordered_json j;
          j["table"] = t.id;
          j["beta0"] = t.state.empty() ? ordered_json(nullptr) : ordered_json(t.state);
          j[t.label_column] = r.label;
          j["column"] = c.column;
          j["printed"] = c.printed;
          j["computed"] = c.computed;
          j["rendered"] = c.rendered;
          j["rule"] = cheb::rule_name(c.rule);
          j["pass"] = c.pass;
          out << j.dump() << "\n";
        }
    } else {
      if (!first) out << "\n";
      if (format == "markdown") {
        out << "Table " << t.id << ": " << t.title;
        if (!t.state.empty()) out << " (beta0 " << t.state << ")";
        out << "\n\n";
      }
      std::vector<std::string> head{t.label_column};
      head.insert(head.end(), t.columns.begin(), t.columns.end());
      if (format == "csv" && !t.state.empty()) head.insert(head.begin(), "beta0");
      std::vector<std::vector<std::string>> rows;
      for (const auto& r : t.rows) {
        std::vector<std::string> row;
        if (format == "csv" && !t.state.empty()) row.push_back(t.state);
        row.push_back(r.label);
        for (const auto& c : r.cells) row.push_back(c.rendered);
        rows.push_back(std::move(row));
      }
      write_grid(out, head, rows, format);
    }
    for (const auto& r : t.rows) cells += int(r.cells.size());
    std::cerr << cheb::diff_report(t);
    first = false;
  }
  std::cerr << "table " << id << ": " << cells << " cells, " << failures << " outside tolerance\n";
  return failures ? kMismatch : kOk;
}

cheb::Form parse_form(const std::string& s) {
  if (s == "exp") return cheb::Form::EXP;
  if (s == "log") return cheb::Form::LOG;
  if (s == "classical-nl") return cheb::Form::CLASSICAL_NL;
  if (s == "classical-abs") return cheb::Form::CLASSICAL_ABS;
  throw UsageError("unknown form " + s);
}

int cmd_bound(int nL, std::optional<double> dL, std::optional<double> logdL, double logx, const std::string& beta0,
              const std::string& form, const std::string& format) {
  if (nL < 2) throw UsageError("--nL must be >= 2");
  if (dL.has_value() == logdL.has_value()) throw UsageError("give exactly one of --dL and --logdL");
  if (dL && !(*dL > 1)) throw UsageError("--dL must exceed 1");
  if (!(logx > 0)) throw UsageError("--logx must be positive");
  const double ld = dL ? std::log(*dL) : *logdL;
  cheb::FieldParams f;
  try {
    f = cheb::FieldParams::make(nL, ld);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  const bool present = beta0 == "present";
  const cheb::BoundReport r = cheb::bound_eval(f, logx, present, parse_form(form));

  ordered_json j;
  j["nL"] = nL;
  j["log_dL"] = ld;
  j["log_x"] = logx;
  j["beta0"] = beta0;
  j["form"] = form;
  j["n0"] = r.n0;
  j["N0"] = r.N0;
  j["threshold"] = r.threshold;
  j["applicable"] = r.applicable;
  j["refined"] = r.refined;
  j["epsilon"] = r.epsilon ? ordered_json(*r.epsilon) : ordered_json(nullptr);
  j["epsilon_general"] = r.epsilon_general ? ordered_json(*r.epsilon_general) : ordered_json(nullptr);
  j["exceptional"] = r.exceptional;
  if (format == "json") {
    std::cout << j.dump() << "\n";
    return kOk;
  }
  std::cout << "field: n_L = " << nL << ", log d_L = " << num(ld) << "; constants from row n0 = " << r.n0
            << " (N0 = " << num(r.N0) << ")\n";
  std::cout << "threshold: log x >= " << num(r.threshold) << "\n";
  if (!r.applicable) {
    std::cout << "applicable: no (log x = " << num(logx) << ")\n";
    return kOk;
  }
  std::cout << "applicable: yes\n";
  std::cout << "branch: " << (r.refined ? "refined (n_L <= N0)" : "general") << "\n";
  std::cout << "epsilon: " << num(*r.epsilon) << "\n";
  if (r.refined) std::cout << "epsilon (general branch): " << num(*r.epsilon_general) << "\n";
  std::cout << "E_C(x) <= " << (present ? r.exceptional + " + " : "") << num(*r.epsilon) << "\n";
  return kOk;
}

std::vector<double> parse_grid(const std::string& g) {
  // lo,hi,n: n log-spaced points
  std::stringstream ss(g);
  std::string a, b, c;
  if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') || !std::getline(ss, c))
    throw UsageError("--grid expects lo,hi,n");
  double lo, hi;
  int n;
  try {
    lo = std::stod(a);
    hi = std::stod(b);
    n = std::stoi(c);
  } catch (const std::exception&) {
    throw UsageError("--grid expects lo,hi,n");
  }
  if (!(lo >= 1 && hi >= lo && n >= 1)) throw UsageError("--grid needs 1 <= lo <= hi and n >= 1");
  std::vector<double> xs;
  for (int i = 0; i < n; ++i)
    xs.push_back(n == 1 ? lo : std::round(std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (n - 1))));
  return xs;
}

int cmd_verify(long long D, std::vector<double> xs, const std::string& grid, std::optional<double> limit,
               const std::string& format) {
  cheb::QuadraticField L;
  try {
    L = cheb::QuadraticField::make(D);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  if (!grid.empty()) {
    const auto g = parse_grid(grid);
    xs.insert(xs.end(), g.begin(), g.end());
  }
  if (xs.empty()) throw UsageError("give --x or --grid");
  const std::uint64_t lim = limit ? std::uint64_t(*limit) : cheb::sieve_limit();
  std::vector<cheb::EquidistRow> rows;
  try {
    rows = cheb::equidist_report(L, xs, lim);
  } catch (const cheb::ResourceError& e) {
    throw UsageError(e.what());
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  bool ok = true;
  if (format == "jsonl") {
    for (const auto& r : rows) {
      ordered_json j;
      j["D"] = D;
      j["x"] = r.x;
      j["psi_identity"] = r.identity.psi;
      j["psi_nontrivial"] = r.nontrivial.psi;
      j["E_identity"] = r.identity.ec;
      j["E_nontrivial"] = r.nontrivial.ec;
      j["unramified_total"] = r.unramified_total;
      j["partition_ok"] = r.partition_ok;
      std::cout << j.dump() << "\n";
      ok = ok && r.partition_ok;
    }
  } else {
    std::vector<std::vector<std::string>> out;
    for (const auto& r : rows) {
      out.push_back({num(r.x), num(r.identity.psi), num(r.nontrivial.psi), num(r.identity.ec), num(r.nontrivial.ec),
                     num(r.unramified_total), r.partition_ok ? "ok" : "FAIL"});
      ok = ok && r.partition_ok;
    }
    write_grid(std::cout,
               {"x", "psi_identity", "psi_nontrivial", "E_identity", "E_nontrivial", "unramified_total", "partition"},
               out, format);
  }
  return ok ? kOk : kMismatch;
}

int cmd_params(int n0, const std::string& beta0) {
  if (n0 < 2 || n0 > 21) throw UsageError("--n0 must be in 2..21");
  const cheb::TuningConfig c = cheb::table_config(n0, beta0 == "present");
  const cheb::EllConstants l = cheb::ell_constants(c);
  const cheb::FinalConstants f = cheb::final_constants(c);
  ordered_json j;
  j["n0"] = n0;
  j["beta0"] = beta0;
  j["M"] = c.row.M;
  j["log_d0"] = c.row.log_d0;
  j["m"] = c.m;
  j["t0"] = c.t0;
  j["T0"] = c.T0;
  j["omega0"] = c.omega0;
  j["alpha"] = c.alpha;
  j["log_x0"] = c.x0_log;
  j["delta0"] = c.delta0;
  j["ell"] = {l.l0, l.l1, l.l2, l.l3, l.l4, l.l5, l.l6, l.l7};
  j["Y0"] = l.Y0;
  j["E1"] = f.E1;
  j["E2"] = f.E2;
  j["E3"] = f.E3;
  j["E3_tilde"] = f.E3_tilde;
  j["N0"] = f.N0;
  j["D12"] = f.D12;
  j["D3"] = f.D3;
  j["C12"] = f.C12;
  j["C3"] = f.C3;
  std::cout << j.dump(2) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explicit Chebotarev constants: tables, bounds and exact checks"};
  app.require_subcommand(1);

  int id = 0;
  std::string beta0 = "both", format = "csv", out_path;
  auto* tables = app.add_subcommand("tables", "regenerate a table and diff it against the published values");
  tables->add_option("--id", id, "table id (1..8)")->required();
  tables->add_option("--beta0", beta0, "present, absent or both")
      ->check(CLI::IsMember({"present", "absent", "both"}));
  tables->add_option("--format", format, "csv, markdown or jsonl")->check(CLI::IsMember({"csv", "markdown", "jsonl"}));
  tables->add_option("--out", out_path, "write the table here instead of stdout");

  int nL = 0;
  std::optional<double> dL, logdL;
  double logx = 0;
  std::string bbeta0 = "present", form = "exp", bformat = "text";
  auto* bound = app.add_subcommand("bound", "evaluate the error bound for a field");
  bound->add_option("--nL", nL, "degree of L")->required();
  bound->add_option("--dL", dL, "absolute discriminant of L");
  bound->add_option("--logdL", logdL, "log of the absolute discriminant");
  bound->add_option("--logx", logx, "log x")->required();
  bound->add_option("--beta0", bbeta0, "present or absent")->check(CLI::IsMember({"present", "absent"}));
  bound->add_option("--form", form, "exp, log, classical-nl or classical-abs")
      ->check(CLI::IsMember({"exp", "log", "classical-nl", "classical-abs"}));
  bound->add_option("--format", bformat, "text or json")->check(CLI::IsMember({"text", "json"}));

  long long disc = 0;
  std::vector<double> xs;
  std::string grid, vformat = "markdown";
  std::optional<double> limit;
  auto* verify = app.add_subcommand("verify", "exact psi_C for a quadratic field");
  verify->add_option("--disc", disc, "fundamental discriminant")->required();
  verify->add_option("--x", xs, "evaluation points");
  verify->add_option("--grid", grid, "lo,hi,n log-spaced points");
  verify->add_option("--sieve-limit", limit, "largest x allowed (default 1e9 or CHEB_SIEVE_LIMIT)");
  verify->add_option("--format", vformat, "csv, markdown or jsonl")->check(CLI::IsMember({"csv", "markdown", "jsonl"}));

  int n0 = 2;
  std::string pbeta0 = "present";
  auto* params = app.add_subcommand("params", "dump the tuning parameters and constants of a table row");
  params->add_option("--n0", n0, "row (2..21)")->required();
  params->add_option("--beta0", pbeta0, "present or absent")->check(CLI::IsMember({"present", "absent"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*tables) return cmd_tables(id, beta0, format, out_path);
    if (*bound) return cmd_bound(nL, dL, logdL, logx, bbeta0, form, bformat);
    if (*verify) return cmd_verify(disc, xs, grid, limit, vformat);
    if (*params) return cmd_params(n0, pbeta0);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  }
  return kUsage;
}
