// SPDX-License-Identifier: Apache-2.0
#include "stirsum_cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

#include "stirsum/stirsum.hpp"

namespace stirsum::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string formula;
  std::string x;
  std::string m;
  std::string a;
  std::string tol = "1e-30";
  std::string format = "json";
  Precision prec = kDefaultPrecision;
  unsigned max_order = 64;
  unsigned outer_terms = 1000;
};

struct Record {
  std::string formula;
  std::string x;
  std::vector<std::pair<std::string, std::string>> params;
  std::string value;
  std::optional<std::string> value_imag;
  std::string error_estimate;
  std::optional<std::string> oracle_value;
  std::optional<std::string> abs_error;
  unsigned orders_used = 0;
  std::string status;
  double elapsed_ms = 0;

  bool converged = true;
  bool within_contract = true;
};

std::string decimal(const BigReal& v, Precision bits) { return v.to_string(decimal_digits(bits)); }

std::vector<FormulaId> requested_ids(const std::string& text) {
  if (text == "all") return all_formula_ids();
  std::vector<FormulaId> ids;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) ids.push_back(parse_formula_id(item));
  if (ids.empty()) throw ParameterError("no formula given");
  return ids;
}

FormulaParams merged_params(const FormulaId& id, const Options& o) {
  FormulaParams p = default_params(id);
  const auto& names = catalog_entry(id).parameters;
  const auto uses = [&](const char* n) { return std::find(names.begin(), names.end(), n) != names.end(); };
  if (uses("m") && !o.m.empty()) p.m = parse_complex(o.m);
  if (uses("a") && !o.a.empty()) p.a = parse_rational(o.a);
  if (!uses("m")) p.m.reset();
  if (!uses("a")) p.a.reset();
  return p;
}

Record evaluate_one(const FormulaId& id, const ExactRational& x, const FormulaParams& params, const Options& o, bool with_oracle) {
  const auto start = std::chrono::steady_clock::now();
  Record rec;
  rec.formula = to_string(id);
  rec.x = to_string(x);
  if (params.m) rec.params.emplace_back("m", to_string(*params.m));
  if (params.a) rec.params.emplace_back("a", to_string(*params.a));

  FormulaResult result;
  BigReal contract(o.prec);
  if (is_slow(id.family)) {
    result = evaluate_slow({id.family, x, o.outer_terms, o.prec});
    contract = slow_tail_bound(id.family, x, o.outer_terms).at_precision(o.prec);
  } else {
    EvalRequest req;
    req.formula = id;
    req.x = x;
    req.params = params;
    req.precision_bits = o.prec;
    req.policy = TruncationPolicy::adaptive(BigReal::parse(o.tol, o.prec), o.max_order);
    result = evaluate(req);
    contract = BigReal::parse("1e-20", o.prec);
  }
  rec.value = decimal(result.value, o.prec);
  if (result.imag) rec.value_imag = decimal(*result.imag, o.prec);
  rec.error_estimate = decimal(result.error_estimate, o.prec);
  rec.orders_used = result.orders_used;
  rec.status = to_string(result.status);
  rec.converged = result.status == TruncationStatus::converged;

  if (with_oracle) {
    const BruteForceResult truth = brute_force(id.family, x, params, o.prec);
    BigReal re = result.value - truth.value;
    BigReal err = abs(re);
    if (result.imag || truth.imag) {
      BigReal im = result.imag ? *result.imag : BigReal(o.prec);
      if (truth.imag) im -= *truth.imag;
      err = sqrt(re * re + im * im);
    }
    rec.oracle_value = decimal(truth.value, o.prec);
    rec.abs_error = decimal(err, o.prec);
    rec.within_contract = !(err > contract);
  }
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

std::string params_field(const Record& r) {
  std::string s;
  for (const auto& [k, v] : r.params) {
    if (!s.empty()) s += ';';
    s += k + '=' + v;
  }
  return s;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

void emit_records(const std::vector<Record>& records, const std::string& format, std::ostream& out) {
  if (format == "csv") {
    out << "schema_version,formula,x,params,value,value_imag,error_estimate,oracle_value,abs_error,orders_used,status,elapsed_ms\n";
    for (const auto& r : records) {
      out << kSchemaVersion << ',' << r.formula << ',' << r.x << ',' << params_field(r) << ',' << r.value << ',' << r.value_imag.value_or("") << ','
          << r.error_estimate << ',' << r.oracle_value.value_or("") << ',' << r.abs_error.value_or("") << ',' << r.orders_used << ',' << r.status
          << ',' << r.elapsed_ms << '\n';
    }
    return;
  }
  for (const auto& r : records) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["formula"] = r.formula;
    j["x"] = r.x;
    Json p = Json::object();
    for (const auto& [k, v] : r.params) p[k] = v;
    j["params"] = p;
    j["value"] = r.value;
    if (r.value_imag) j["value_imag"] = *r.value_imag;
    j["error_estimate"] = r.error_estimate;
    if (r.oracle_value) j["oracle_value"] = *r.oracle_value;
    if (r.abs_error) j["abs_error"] = *r.abs_error;
    j["orders_used"] = r.orders_used;
    j["status"] = r.status;
    j["elapsed_ms"] = r.elapsed_ms;
    out << j.dump() << '\n';
  }
}

int cmd_eval(const Options& o, std::ostream& out) {
  const ExactRational x = parse_rational(o.x);
  std::vector<Record> records;
  for (const auto& id : requested_ids(o.formula)) records.push_back(evaluate_one(id, x, merged_params(id, o), o, false));
  emit_records(records, o.format, out);
  const bool ok = std::all_of(records.begin(), records.end(), [](const Record& r) { return r.converged; });
  return ok ? kExitOk : kExitNumerical;
}

int cmd_compare(const Options& o, std::ostream& out) {
  const ExactRational x = parse_rational(o.x);
  const bool sweep = o.formula == "all";
  std::vector<Record> records;
  for (const auto& id : requested_ids(o.formula)) {
    // a sweep evaluates the integer-only displays at floor(x)
    const ExactRational at = sweep && catalog_entry(id).integer_x_only ? ExactRational(floor(x)) : x;
    records.push_back(evaluate_one(id, at, merged_params(id, o), o, true));
  }
  emit_records(records, o.format, out);
  const bool ok = std::all_of(records.begin(), records.end(), [](const Record& r) { return r.within_contract; });
  return ok ? kExitOk : kExitNumerical;
}

int cmd_table(const Options& o, std::ostream& out) {
  const FormulaId id = parse_formula_id(o.formula);
  const ConvergenceReport report = convergence_study(id, parse_rational(o.x), merged_params(id, o), o.max_order, o.prec);
  out << "order,partial_value,abs_error,term_magnitude\n";
  for (const auto& row : report.rows) {
    out << row.order << ',' << decimal(row.partial_value, o.prec) << ',' << decimal(row.abs_error, o.prec) << ','
        << decimal(row.term_magnitude, o.prec) << '\n';
  }
  return kExitOk;
}

int cmd_constants(const Options& o, std::ostream& out) {
  const auto requests = catalog_constants(o.prec);
  if (o.format == "csv") out << "schema_version,id,prec_bits,value\n";
  for (const auto& req : requests) {
    const std::string value = decimal(get_constant(req), o.prec);
    if (o.format == "csv") {
      out << kSchemaVersion << ',' << csv_quote(constant_name(req)) << ',' << o.prec << ',' << value << '\n';
    } else {
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["id"] = constant_name(req);
      j["prec_bits"] = o.prec;
      j["value"] = value;
      out << j.dump() << '\n';
    }
  }
  return kExitOk;
}

std::string joined(const std::vector<std::string>& items) {
  std::string s;
  for (const auto& i : items) s += (s.empty() ? "" : ";") + i;
  return s;
}

int cmd_list(const Options& o, std::ostream& out) {
  if (o.format == "csv") out << "formula,parameters,constants,integer_x_only,finite,slow,description\n";
  for (const auto& e : list_formulas()) {
    if (o.format == "csv") {
      out << to_string(e.id) << ',' << joined(e.parameters) << ',' << csv_quote(joined(e.constants)) << ',' << e.integer_x_only << ','
          << e.finite << ',' << e.slow << ',' << csv_quote(e.description) << '\n';
    } else {
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["formula"] = to_string(e.id);
      j["description"] = e.description;
      j["parameters"] = e.parameters;
      j["constants"] = e.constants;
      j["integer_x_only"] = e.integer_x_only;
      j["complex_m"] = e.complex_m;
      j["finite"] = e.finite;
      j["slow"] = e.slow;
      out << j.dump() << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

Precision default_precision() {
  const char* env = std::getenv("STIRLING_SUMS_PREC_BITS");
  if (env == nullptr || *env == '\0') return kDefaultPrecision;
  char* end = nullptr;
  const long bits = std::strtol(env, &end, 10);
  if (*end != '\0' || bits < kMinPrecision) throw ParameterError(std::string("STIRLING_SUMS_PREC_BITS must be an integer >= 64, got ") + env);
  return bits;
}

int decimal_digits(Precision bits) { return std::max(1, static_cast<int>(std::floor(static_cast<double>(bits) * std::log10(2.0))) - 2); }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  try {
    o.prec = default_precision();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitParameter;
  }

  CLI::App app{"Stirling-series evaluation of finite sums at real x", "stirling-sums"};
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"json", "csv"});

  const auto numeric = [&](CLI::App* sub, bool with_oracle_flags) {
    sub->add_option("--formula", o.formula, "family.vN, a comma-separated list, or all")->required();
    sub->add_option("--x", o.x, "evaluation point, decimal or p/q")->required();
    sub->add_option("--m", o.m, "exponent for the power-sum families, RE+IMi for complex");
    sub->add_option("--a", o.a, "base for the geometric families");
    sub->add_option("--prec-bits", o.prec, "working precision in bits")->check(CLI::Range(kMinPrecision, Precision{1} << 20));
    sub->add_option("--max-order", o.max_order, "largest factorial-series order")->check(CLI::Range(1u, 4096u));
    sub->add_option("--tol", o.tol, "adaptive tolerance");
    sub->add_option("--outer-terms", o.outer_terms, "outer terms for the slowly convergent formulas")->check(CLI::Range(1u, 10000000u));
    if (with_oracle_flags) sub->add_option("--format", o.format, "output format")->check(formats);
  };

  auto* eval = app.add_subcommand("eval", "evaluate formulas at x");
  numeric(eval, true);
  auto* compare = app.add_subcommand("compare", "evaluate and check against direct summation");
  numeric(compare, true);
  auto* table = app.add_subcommand("table", "convergence table over truncation orders, as CSV");
  numeric(table, false);
  auto* constants = app.add_subcommand("constants", "every constant the catalog uses");
  constants->add_option("--prec-bits", o.prec, "working precision in bits")->check(CLI::Range(kMinPrecision, Precision{1} << 20));
  constants->add_option("--format", o.format, "output format")->check(formats);
  auto* list = app.add_subcommand("list", "the formula catalog");
  list->add_option("--format", o.format, "output format")->check(formats);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << '\n';
    return kExitParameter;
  }

  try {
    if (eval->parsed()) return cmd_eval(o, out);
    if (compare->parsed()) return cmd_compare(o, out);
    if (table->parsed()) return cmd_table(o, out);
    if (constants->parsed()) return cmd_constants(o, out);
    return cmd_list(o, out);
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitParameter;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace stirsum::cli
