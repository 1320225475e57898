#include "imptab/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "imptab/analysis.hpp"
#include "imptab/census.hpp"
#include "imptab/formula.hpp"
#include "imptab/misprints.hpp"
#include "imptab/sequences.hpp"
#include "imptab/series.hpp"

namespace imptab {

namespace {

using ordered_json = nlohmann::ordered_json;

enum class Format { Text, Csv, Json };

struct CliError {
  int code;
  std::string message;
};

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw CliError{2, "unknown format \"" + s + "\" (expected text, csv or json)"};
}

Connective parse_connective(const std::string& s) {
  if (auto c = connective_from_name(s)) return *c;
  throw CliError{2, "unknown connective \"" + s + "\" (expected imp, mimp1, mimp2 or mimp3)"};
}

SequenceId parse_sequence(const std::string& s) {
  if (auto id = sequence_from_name(s)) return *id;
  throw CliError{2, "unknown sequence \"" + s +
                        "\" (expected g, cat, f, t1, t2, t3, y, d1, d2, d3, h, k1, k2 or k3)"};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string trim_decimal(std::string s) {
  if (s.find('.') == std::string::npos) return s;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

void emit_json(std::ostream& out, const std::string& command, ordered_json params,
               ordered_json results, const std::vector<std::string>& warnings) {
  const ordered_json j{{"command", command},
                       {"params", std::move(params)},
                       {"results", std::move(results)},
                       {"warnings", warnings}};
  out << j.dump(2) << '\n';
}

void emit_warnings(Format format, const std::vector<std::string>& warnings, std::ostream& err) {
  if (format == Format::Json) return;  // carried in the envelope instead
  for (const auto& w : warnings) err << w << '\n';
}

// ---- census -----------------------------------------------------------

std::string census_counts_line(const Census& c) {
  std::ostringstream line;
  if (c.n == 1) {
    line << "uncased_true=" << c.uncased_true.get_str()
         << " uncased_false=" << c.uncased_false.get_str();
  } else {
    for (int i = 0; i < 4; ++i)
      line << (i ? " " : "") << "case" << (i + 1) << "=" << c.cases[i].get_str();
  }
  line << " total=" << c.total.get_str();
  return line.str();
}

ordered_json census_json(const Census& c) {
  return ordered_json{{"case1", c.cases[0].get_str()},
                      {"case2", c.cases[1].get_str()},
                      {"case3", c.cases[2].get_str()},
                      {"case4", c.cases[3].get_str()},
                      {"uncased_true", c.uncased_true.get_str()},
                      {"uncased_false", c.uncased_false.get_str()},
                      {"total", c.total.get_str()}};
}

std::string census_csv_row(const Census& c, const std::string& head) {
  std::ostringstream row;
  row << csv_field(head);
  for (int i = 0; i < 4; ++i) row << ',' << c.cases[i].get_str();
  row << ',' << c.uncased_true.get_str() << ',' << c.uncased_false.get_str() << ','
      << c.total.get_str();
  return row.str();
}

int census_cap_from_env() {
  const char* env = std::getenv("IMPL_CENSUS_CAP");
  if (!env) return kDefaultCensusCap;
  int value = 0;
  const char* end = env + std::char_traits<char>::length(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc{} || ptr != end || value < 1)
    throw CliError{2, "IMPL_CENSUS_CAP must be a positive integer, got \"" + std::string(env) + "\""};
  return value;
}

int cmd_census(int n, const std::string& conn_s, Format format, bool per_formula, bool table,
               bool override_cap, bool unicode, std::ostream& out, std::ostream& err) {
  const Connective c = parse_connective(conn_s);
  const std::vector<std::string> warnings;

  if (table) {
    if (format == Format::Csv) throw CliError{2, "--table output is available as text or json only"};
    const std::string rendered = render_table(n, c, unicode);
    if (format == Format::Text) {
      out << rendered;
    } else {
      emit_json(out, "census",
                {{"n", n}, {"connective", conn_s}, {"table", true}, {"unicode", unicode}},
                {{"table", rendered}}, warnings);
    }
    return 0;
  }

  const int cap = override_cap ? kHardCensusCap : census_cap_from_env();

  if (per_formula) {
    // The cap applies to the whole run; probe it up front with the cheap path.
    Census aggregate = run_census(n, c, cap);
    aggregate.cases = {};
    aggregate.uncased_true = 0;
    aggregate.uncased_false = 0;
    aggregate.total = 0;
    std::vector<std::pair<std::string, Census>> rows;
    for (const auto& f : enumerate_bracketings(n)) {
      Census one = per_formula_census(f, c);
      for (int i = 0; i < 4; ++i) aggregate.cases[i] += one.cases[i];
      aggregate.uncased_true += one.uncased_true;
      aggregate.uncased_false += one.uncased_false;
      aggregate.total += one.total;
      rows.emplace_back(render(f, c, unicode), std::move(one));
    }
    if (format == Format::Text) {
      for (const auto& [name, one] : rows) out << name << ": " << census_counts_line(one) << '\n';
      out << "all: " << census_counts_line(aggregate) << '\n';
    } else if (format == Format::Csv) {
      out << "formula,case1,case2,case3,case4,uncased_true,uncased_false,total\n";
      for (const auto& [name, one] : rows) out << census_csv_row(one, name) << '\n';
      out << census_csv_row(aggregate, "all") << '\n';
    } else {
      ordered_json per = ordered_json::array();
      for (const auto& [name, one] : rows) {
        ordered_json entry{{"formula", name}};
        const ordered_json counts = census_json(one);
        for (const auto& [key, value] : counts.items()) entry[key] = value;
        per.push_back(std::move(entry));
      }
      ordered_json results = census_json(aggregate);
      results["per_formula"] = std::move(per);
      emit_json(out, "census",
                {{"n", n}, {"connective", conn_s}, {"per_formula", true}, {"unicode", unicode}},
                std::move(results), warnings);
    }
    return 0;
  }

  const Census census = run_census(n, c, cap);
  if (format == Format::Text) {
    out << census_counts_line(census) << '\n';
  } else if (format == Format::Csv) {
    out << "n,case1,case2,case3,case4,uncased_true,uncased_false,total\n";
    std::ostringstream head;
    head << n;
    out << census_csv_row(census, head.str()) << '\n';
  } else {
    emit_json(out, "census", {{"n", n}, {"connective", conn_s}}, census_json(census), warnings);
  }
  (void)err;
  return 0;
}

// ---- enumerate --------------------------------------------------------

int cmd_enumerate(int n, const std::string& conn_s, Format format, bool unicode, std::ostream& out) {
  const Connective c = parse_connective(conn_s);
  const auto formulas = enumerate_bracketings(n);
  if (format == Format::Text) {
    for (const auto& f : formulas) out << render(f, c, unicode) << '\n';
  } else if (format == Format::Csv) {
    out << "index,formula\n";
    for (std::size_t i = 0; i < formulas.size(); ++i)
      out << (i + 1) << ',' << csv_field(render(formulas[i], c, unicode)) << '\n';
  } else {
    ordered_json results = ordered_json::array();
    for (const auto& f : formulas) results.push_back(render(f, c, unicode));
    emit_json(out, "enumerate", {{"n", n}, {"connective", conn_s}, {"unicode", unicode}},
              std::move(results), {});
  }
  return 0;
}

// ---- seq --------------------------------------------------------------

struct OracleSpec {
  Connective connective;
  int row_case;  // 1..4, or 0 for the census total
};

OracleSpec oracle_spec(SequenceId id) {
  switch (id) {
    case SequenceId::G: return {Connective::Imp, 0};
    case SequenceId::F: return {Connective::Imp, 4};
    case SequenceId::T1: return {Connective::Imp, 1};
    case SequenceId::T2: return {Connective::Imp, 2};
    case SequenceId::T3: return {Connective::Imp, 3};
    case SequenceId::Y: return {Connective::MImp1, 4};
    case SequenceId::D1: return {Connective::MImp1, 1};
    case SequenceId::D2: return {Connective::MImp1, 2};
    case SequenceId::D3: return {Connective::MImp1, 3};
    case SequenceId::Cat:
    case SequenceId::H: return {Connective::MImp2, 4};
    case SequenceId::K1: return {Connective::MImp2, 1};
    case SequenceId::K2: return {Connective::MImp2, 2};
    case SequenceId::K3: return {Connective::MImp2, 3};
  }
  throw std::logic_error("oracle_spec: unhandled id");
}

void collect_misprint_warnings(SequenceId id, const SequenceTable& table, int n_limit,
                               std::vector<std::string>& warnings) {
  for (const Misprint& m : known_misprints())
    if (m.id == id && m.n <= n_limit) warnings.push_back(misprint_warning(m, table.at(m.n)));
}

int cmd_seq(const std::string& id_s, int n_max, Format format, bool check_identities, int oracle_n,
            std::ostream& out, std::ostream& err) {
  const SequenceId id = parse_sequence(id_s);
  const SequenceTable table = compute(id, n_max);

  std::vector<std::string> warnings;
  collect_misprint_warnings(id, table, n_max, warnings);
  emit_warnings(format, warnings, err);

  int code = 0;
  std::optional<IdentityReport> identities;
  if (check_identities) {
    identities = verify_identities(n_max);
    if (!identities->pass) code = 1;
  }

  struct OracleOutcome {
    bool pass = true;
    int n_max = 0;
    std::string detail;
  };
  std::optional<OracleOutcome> oracle;
  if (oracle_n != 0) {
    if (oracle_n < 2) throw CliError{2, "--oracle needs a probe depth >= 2"};
    if (oracle_n > n_max) throw CliError{2, "--oracle probe depth exceeds n_max"};
    const OracleSpec spec = oracle_spec(id);
    OracleOutcome o;
    o.n_max = oracle_n;
    for (int n = 2; n <= oracle_n; ++n) {
      const Census census = run_census(n, spec.connective);
      const mpz_class& counted =
          spec.row_case == 0 ? census.total : census.count(static_cast<RowCase>(spec.row_case));
      if (counted != table.at(n)) {
        o.pass = false;
        o.detail = "census=" + counted.get_str() + " recurrence=" + table.at(n).get_str() +
                   " at n=" + std::to_string(n);
        code = 1;
        break;
      }
    }
    oracle = o;
  }

  if (format == Format::Text) {
    for (int n = 1; n <= n_max; ++n) out << (n > 1 ? " " : "") << table.at(n).get_str();
    out << '\n';
    if (identities) {
      if (identities->pass) {
        out << "identities: pass (2 <= n <= " << n_max << ")\n";
      } else {
        out << "identities: FAIL\n";
        for (const auto& line : identities->lines) out << "  " << line << '\n';
      }
    }
    if (oracle) {
      if (oracle->pass)
        out << "oracle: match (2 <= n <= " << oracle->n_max << ")\n";
      else
        out << "oracle: MISMATCH " << oracle->detail << '\n';
    }
  } else if (format == Format::Csv) {
    out << "n,value\n";
    for (int n = 1; n <= n_max; ++n) out << n << ',' << table.at(n).get_str() << '\n';
  } else {
    ordered_json values = ordered_json::array();
    for (int n = 1; n <= n_max; ++n) values.push_back(table.at(n).get_str());
    ordered_json results{{"id", id_s}, {"values", std::move(values)}};
    if (identities)
      results["identities"] =
          ordered_json{{"pass", identities->pass}, {"checks", identities->lines}};
    if (oracle) {
      ordered_json o{{"pass", oracle->pass}, {"n_max", oracle->n_max}};
      if (!oracle->pass) o["detail"] = oracle->detail;
      results["oracle"] = std::move(o);
    }
    ordered_json params{{"id", id_s}, {"n_max", n_max}};
    if (check_identities) params["check_identities"] = true;
    if (oracle_n != 0) params["oracle"] = oracle_n;
    emit_json(out, "seq", std::move(params), std::move(results), warnings);
  }
  return code;
}

// ---- gf ---------------------------------------------------------------

int cmd_gf(const std::string& id_s, int order, Format format, bool diff_recurrence,
           std::ostream& out, std::ostream& err) {
  const SequenceId id = parse_sequence(id_s);
  const std::vector<mpq_class> coeffs = gf_coefficients(id, order);

  int code = 0;
  std::string diff_verdict;
  if (diff_recurrence) {
    const SequenceTable table = compute(id, order - 1);
    diff_verdict = "MATCH";
    for (int n = 1; n < order; ++n) {
      if (coeffs[n - 1] != mpq_class(table.at(n))) {
        diff_verdict = "MISMATCH at n=" + std::to_string(n) + ": gf=" + coeffs[n - 1].get_str() +
                       " recurrence=" + table.at(n).get_str();
        code = 1;
        break;
      }
    }
  }

  std::vector<std::string> warnings;
  // The coefficient list covers n = 1 .. order-1; the ledger applies here too.
  // Coefficients are integral, so the numerator is the value itself.
  for (const Misprint& m : known_misprints())
    if (m.id == id && m.n < order)
      warnings.push_back(misprint_warning(m, coeffs[m.n - 1].get_num()));
  emit_warnings(format, warnings, err);

  if (format == Format::Text) {
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      out << (i ? " " : "") << coeffs[i].get_str();
    out << '\n';
    if (diff_recurrence) out << diff_verdict << '\n';
  } else if (format == Format::Csv) {
    out << "n,coefficient\n";
    for (std::size_t i = 0; i < coeffs.size(); ++i) out << (i + 1) << ',' << coeffs[i].get_str() << '\n';
  } else {
    ordered_json values = ordered_json::array();
    for (const auto& q : coeffs) values.push_back(q.get_str());
    ordered_json results{{"id", id_s}, {"coefficients", std::move(values)}};
    if (diff_recurrence) results["diff_recurrence"] = diff_verdict;
    ordered_json params{{"id", id_s}, {"order", order}};
    if (diff_recurrence) params["diff_recurrence"] = true;
    emit_json(out, "gf", std::move(params), std::move(results), warnings);
  }
  return code;
}

// ---- asymp ------------------------------------------------------------

int cmd_asymp(const std::string& ratio_s, std::vector<int> probes, int digits, bool check,
              Format format, std::ostream& out, std::ostream& err) {
  SequenceId num, den;
  const auto slash = ratio_s.find('/');
  if (slash == std::string::npos) {
    num = parse_sequence(ratio_s);
    den = SequenceId::G;
  } else {
    num = parse_sequence(ratio_s.substr(0, slash));
    den = parse_sequence(ratio_s.substr(slash + 1));
  }
  if (digits < 1 || digits > 200) throw CliError{2, "--digits must be between 1 and 200"};
  if (probes.empty()) probes = {10, 100};
  for (int n : probes)
    if (n < 1) throw CliError{2, "probes must be >= 1"};

  QuadExt limit;
  if (const LimitConstant* c = find_limit_constant(num, den))
    limit = c->value;
  else
    limit = limit_constant(num, den);

  const int deepest = *std::max_element(probes.begin(), probes.end());
  SequenceBasis basis(deepest);
  const SequenceTable tn = compute(num, basis);
  const SequenceTable td = compute(den, basis);

  const std::string ratio_name =
      std::string(sequence_name(num)) + "/" + std::string(sequence_name(den));
  const std::string limit_fixed = limit.decimal(digits);

  std::vector<std::string> values;
  values.reserve(probes.size());
  for (int n : probes) values.push_back(ratio_decimal(tn, td, n, digits));

  int code = 0;
  std::optional<ConvergenceReport> convergence;
  if (check) {
    convergence = convergence_check(num, den, limit, probes);
    if (!convergence->pass) code = 1;
  }

  if (format == Format::Text) {
    for (const auto& v : values) out << trim_decimal(v) << " (limit " << trim_decimal(limit_fixed) << ")\n";
    if (convergence) {
      if (convergence->pass)
        out << "convergence: pass (errors strictly decreasing, within 5/n)\n";
      else
        out << "convergence: FAIL (" << convergence->failure << ")\n";
    }
  } else if (format == Format::Csv) {
    out << "n,ratio,limit\n";
    for (std::size_t i = 0; i < probes.size(); ++i)
      out << probes[i] << ',' << values[i] << ',' << limit_fixed << '\n';
  } else {
    ordered_json probe_rows = ordered_json::array();
    for (std::size_t i = 0; i < probes.size(); ++i)
      probe_rows.push_back(ordered_json{{"n", probes[i]}, {"value", values[i]}});
    ordered_json results{{"ratio", ratio_name},
                         {"limit", ordered_json{{"exact", limit.exact_form()},
                                                {"decimal", limit_fixed}}},
                         {"probes", std::move(probe_rows)}};
    if (convergence)
      results["convergence"] = ordered_json{{"pass", convergence->pass},
                                            {"errors", convergence->errors},
                                            {"failure", convergence->failure}};
    ordered_json params{{"ratio", ratio_s}, {"probes", probes}, {"digits", digits}};
    if (check) params["check"] = true;
    emit_json(out, "asymp", std::move(params), std::move(results), {});
  }
  (void)err;
  return code;
}

// ---- parity -----------------------------------------------------------

int cmd_parity(const std::string& id_s, int n_max, Format format, std::ostream& out) {
  const SequenceId id = parse_sequence(id_s);
  const ParityReport report = parity_check(id, n_max);
  if (format == Format::Text) {
    if (report.pass)
      out << "pass: odd exactly at powers of two\n";
    else
      out << "fail: parity law violated at n=" << *report.counterexample << '\n';
  } else if (format == Format::Csv) {
    out << "id,n_max,verdict,counterexample\n";
    out << id_s << ',' << n_max << ',' << (report.pass ? "pass" : "fail") << ',';
    if (report.counterexample) out << *report.counterexample;
    out << '\n';
  } else {
    ordered_json results{{"id", id_s},
                         {"n_max", n_max},
                         {"verdict", report.pass ? "pass" : "fail"},
                         {"counterexample",
                          report.counterexample ? ordered_json(*report.counterexample)
                                                : ordered_json(nullptr)}};
    emit_json(out, "parity", {{"id", id_s}, {"n_max", n_max}}, std::move(results), {});
  }
  return report.pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact censuses, recurrences and asymptotics for bracketed implications"};
  app.name("imptab");
  app.set_version_flag("--version", std::string("imptab ") + kCliVersion);
  app.require_subcommand(1);

  std::string fmt_enumerate = "text", fmt_census = "text", fmt_seq = "text", fmt_gf = "text",
              fmt_asymp = "text", fmt_parity = "text";
  const auto format_check = CLI::IsMember({"text", "csv", "json"});

  auto* cmd_enum = app.add_subcommand("enumerate", "list every bracketing of p1..pn");
  int en_n = 0;
  std::string en_conn = "imp";
  bool en_unicode = false;
  cmd_enum->add_option("-n,--vars", en_n, "number of variables")->required();
  cmd_enum->add_option("-c,--connective", en_conn, "imp, mimp1, mimp2 or mimp3");
  cmd_enum->add_flag("--unicode", en_unicode, "use arrow glyphs instead of ASCII");
  cmd_enum->add_option("--format", fmt_enumerate, "text, csv or json")->check(format_check);

  auto* cmd_cen = app.add_subcommand("census", "count truth-table rows by case");
  int ce_n = 0;
  std::string ce_conn = "imp";
  bool ce_per_formula = false, ce_table = false, ce_override = false, ce_unicode = false;
  cmd_cen->add_option("-n,--vars", ce_n, "number of variables")->required();
  cmd_cen->add_option("-c,--connective", ce_conn, "imp, mimp1, mimp2 or mimp3");
  cmd_cen->add_flag("--per-formula", ce_per_formula, "report each bracketing separately");
  cmd_cen->add_flag("--table", ce_table, "print the merged truth table (n <= 5)");
  cmd_cen->add_flag("--max-rows-override", ce_override,
                    "allow the expensive censuses up to n = 12");
  cmd_cen->add_flag("--unicode", ce_unicode, "use arrow glyphs instead of ASCII");
  cmd_cen->add_option("--format", fmt_census, "text, csv or json")->check(format_check);

  auto* cmd_sq = app.add_subcommand("seq", "print a sequence by its recurrence");
  std::string sq_id;
  int sq_n = 0, sq_oracle = 0;
  bool sq_identities = false;
  cmd_sq->add_option("id", sq_id, "g, cat, f, t1..t3, y, d1..d3, h, k1..k3")->required();
  cmd_sq->add_option("n_max", sq_n, "compute entries 1..n_max")->required();
  cmd_sq->add_flag("--check-identities", sq_identities,
                   "verify the cross-sequence identities up to n_max");
  cmd_sq->add_option("--oracle", sq_oracle,
                     "recount 2..N by brute-force census and compare");
  cmd_sq->add_option("--format", fmt_seq, "text, csv or json")->check(format_check);

  auto* cmd_g = app.add_subcommand("gf", "expand the generating function");
  std::string gf_id;
  int gf_order = 0;
  bool gf_diff = false;
  cmd_g->add_option("id", gf_id, "g, cat, f, t1..t3, y, d1..d3, h, k1..k3")->required();
  cmd_g->add_option("order", gf_order, "truncation order (coefficients of x^1..x^{order-1})")
      ->required();
  cmd_g->add_flag("--diff-recurrence", gf_diff, "compare against the recurrence route");
  cmd_g->add_option("--format", fmt_gf, "text, csv or json")->check(format_check);

  auto* cmd_as = app.add_subcommand("asymp", "ratios against their exact limits");
  std::string as_ratio;
  std::vector<int> as_probes;
  int as_digits = 12;
  bool as_check = false;
  cmd_as->add_option("ratio", as_ratio, "a sequence id (ratio against g) or a pair like t3/t2")
      ->required();
  cmd_as->add_option("--probes", as_probes, "probe depths (default 10 100)");
  cmd_as->add_option("--digits", as_digits, "decimal places (default 12)");
  cmd_as->add_flag("--check", as_check, "verify strict error decrease within the 5/n envelope");
  cmd_as->add_option("--format", fmt_asymp, "text, csv or json")->check(format_check);

  auto* cmd_par = app.add_subcommand("parity", "check: odd exactly at powers of two");
  std::string pa_id;
  int pa_n = 0;
  cmd_par->add_option("id", pa_id, "sequence id")->required();
  cmd_par->add_option("n_max", pa_n, "check 1..n_max")->required();
  cmd_par->add_option("--format", fmt_parity, "text, csv or json")->check(format_check);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (cmd_enum->parsed())
      return cmd_enumerate(en_n, en_conn, parse_format(fmt_enumerate), en_unicode, out);
    if (cmd_cen->parsed())
      return cmd_census(ce_n, ce_conn, parse_format(fmt_census), ce_per_formula, ce_table,
                        ce_override, ce_unicode, out, err);
    if (cmd_sq->parsed())
      return cmd_seq(sq_id, sq_n, parse_format(fmt_seq), sq_identities, sq_oracle, out, err);
    if (cmd_g->parsed())
      return cmd_gf(gf_id, gf_order, parse_format(fmt_gf), gf_diff, out, err);
    if (cmd_as->parsed())
      return cmd_asymp(as_ratio, as_probes, as_digits, as_check, parse_format(fmt_asymp), out, err);
    if (cmd_par->parsed()) return cmd_parity(pa_id, pa_n, parse_format(fmt_parity), out);
    err << "error: no subcommand given\n";
    return 2;
  } catch (const CliError& e) {
    err << "error: " << e.message << '\n';
    return e.code;
  } catch (const CensusCapError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace imptab
