#include "qito/cli/cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qito/cg/cg.hpp"
#include "qito/errors.hpp"
#include "qito/haar/haar.hpp"
#include "qito/scalar/numeric.hpp"
#include "qito/scalar/text.hpp"
#include "qito/suq2/dfun.hpp"
#include "qito/suq2/text.hpp"
#include "qito/verify/verify.hpp"

namespace qito {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Rational parse_q(const std::string& text) {
  Rational q;
  try {
    q = Rational(text);
  } catch (const std::invalid_argument&) {
    throw DomainError("not a rational number: " + text);
  }
  if (q.get_den() == 0) throw DomainError("zero denominator in " + text);
  q.canonicalize();
  if (sgn(q) <= 0) throw DomainError("q must be positive");
  return q;
}

struct Output {
  std::string format;
  std::ostream& out;

  // A single named result: {"value": ..., extras}.
  void value(const std::string& v, nlohmann::json extra = nlohmann::json::object()) {
    if (format == "json") {
      nlohmann::json j = nlohmann::json::object();
      j["value"] = v;
      for (auto& [k, x] : extra.items()) j[k] = x;
      out << j.dump(2) << "\n";
    } else if (format == "csv") {
      out << "value\n" << csv_field(v) << "\n";
    } else {
      out << v << "\n";
    }
  }

  void report(const Report& rep) {
    Report sorted = rep;
    sorted.sort();
    if (format == "json") {
      out << sorted.to_json().dump(2) << "\n";
    } else if (format == "csv") {
      out << "suite,name,passed,detail\n";
      for (const auto& c : sorted.checks)
        out << csv_field(sorted.suite) << "," << csv_field(c.name) << "," << (c.passed ? "true" : "false") << "," << csv_field(c.detail) << "\n";
    } else {
      for (const auto& c : sorted.checks) out << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
      out << sorted.suite << ": " << (sorted.passed() ? "pass" : "fail") << " (" << sorted.checks.size() - sorted.failures() << "/"
          << sorted.checks.size() << ")\n";
    }
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact SU_q(2) Clebsch-Gordan, Haar and tensor-operator checks. Labels are twice-values."};
  app.name("qito");
  app.require_subcommand(1);
  std::string format = "text";
  std::optional<int> jmax;
  std::uint64_t seed = 1;
  int tol = 30;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--jmax", jmax, "Largest label, twice the spin");
  app.add_option("--seed", seed, "Seed for randomized checks");
  app.add_option("--tol", tol, "Decimal digits for numeric checks")->check(CLI::Range(5, 1000));

  auto* cg_cmd = app.add_subcommand("cg", "Clebsch-Gordan coefficients");
  cg_cmd->fallthrough();
  int j1 = 0, j2 = 0;
  std::optional<int> cj, m1, m2, cm;
  std::optional<std::string> cg_q;
  cg_cmd->add_option("--j1", j1)->required();
  cg_cmd->add_option("--j2", j2)->required();
  cg_cmd->add_option("--j", cj);
  cg_cmd->add_option("--m1", m1);
  cg_cmd->add_option("--m2", m2);
  cg_cmd->add_option("--m", cm);
  cg_cmd->add_option("--q-num", cg_q, "Also evaluate at this rational q");

  auto* dfun_cmd = app.add_subcommand("dfun", "Matrix coefficient of pi^j");
  dfun_cmd->fallthrough();
  int dj = 0, row = 0, col = 0;
  dfun_cmd->add_option("--j", dj)->required();
  dfun_cmd->add_option("--row", row, "2m'")->required();
  dfun_cmd->add_option("--col", col, "2m")->required();

  auto* haar_cmd = app.add_subcommand("haar", "Haar functional of an algebra element");
  haar_cmd->fallthrough();
  std::string expr;
  haar_cmd->add_option("--expr", expr)->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->fallthrough();
  std::string suite;
  std::string group = "s3";
  verify_cmd->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--group", group, "Classical suite: s3, z2 or a JSON table");

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a scalar at rational q");
  eval_cmd->fallthrough();
  std::string eval_expr, eval_q;
  std::optional<int> eval_digits;
  eval_cmd->add_option("--expr", eval_expr)->required();
  eval_cmd->add_option("--q-num", eval_q, "P/R")->required();
  eval_cmd->add_option("--digits", eval_digits);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  Output o{format, out};
  try {
    if (*cg_cmd) {
      const bool single = cj || m1 || m2 || cm;
      if (single && !(cj && m1 && m2 && cm)) throw DomainError("--j, --m1, --m2 and --m must be given together");
      std::optional<Rational> q;
      if (cg_q) q = parse_q(*cg_q);
      auto numeric = [&](const QScalar& v) -> nlohmann::json {
        if (!q) return nullptr;
        return {{"q", q->get_str()}, {"value", eval_numeric(v, *q, tol).to_string(tol)}};
      };
      if (single) {
        if (!valid_jm(j1, *m1) || !valid_jm(j2, *m2) || !valid_jm(*cj, *cm)) throw DomainError("invalid (j, m) pair");
        const QScalar v = cg(j1, *m1, j2, *m2, *cj, *cm);
        const auto num = numeric(v);
        o.value(to_text(v), {{"numeric_at", num}});
        if (format == "text" && !num.is_null()) out << "at q=" << q->get_str() << ": " << num["value"].get<std::string>() << "\n";
        return 0;
      }
      if (j1 < 0 || j2 < 0) throw DomainError("negative label");
      nlohmann::json rows = nlohmann::json::array();
      std::ostringstream text, csv;
      csv << "m1,m2,j,m,value\n";
      for (int j = std::abs(j1 - j2); j <= j1 + j2; j += 2)
        for (int a = j1; a >= -j1; a -= 2)
          for (int b = j2; b >= -j2; b -= 2) {
            if (std::abs(a + b) > j) continue;
            const QScalar v = cg(j1, a, j2, b, j, a + b);
            rows.push_back({{"m1", a}, {"m2", b}, {"j", j}, {"m", a + b}, {"value", to_text(v)}, {"numeric_at", numeric(v)}});
            text << "(" << j1 << " " << a << ", " << j2 << " " << b << " | " << j << " " << a + b << ") = " << to_text(v) << "\n";
            csv << a << "," << b << "," << j << "," << a + b << "," << csv_field(to_text(v)) << "\n";
          }
      if (format == "json") out << nlohmann::json{{"j1", j1}, {"j2", j2}, {"coefficients", rows}}.dump(2) << "\n";
      else if (format == "csv") out << csv.str();
      else out << text.str();
      return 0;
    }
    if (*dfun_cmd) {
      o.value(to_text(dfun(dj, row, col)));
      return 0;
    }
    if (*haar_cmd) {
      const AlgElem x = parse_alg_elem(expr);
      o.value(to_text(haar(x, jmax.value_or(kDefaultHaarJmax))));
      return 0;
    }
    if (*eval_cmd) {
      const QScalar s = parse_qscalar(eval_expr);
      const Rational q = parse_q(eval_q);
      const int digits = eval_digits.value_or(tol);
      if (digits < 1) throw DomainError("--digits must be positive");
      o.value(eval_numeric(s, q, digits).to_string(digits), {{"q", q.get_str()}, {"digits", digits}});
      return 0;
    }
    if (*verify_cmd) {
      VerifyOptions vo;
      vo.jmax = jmax;
      vo.seed = seed;
      vo.digits = tol;
      vo.group = group;
      const Report rep = run_suite(suite, vo);
      o.report(rep);
      return rep.passed() ? 0 : 1;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const SpanExceededError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const PoleError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << app.help();
  return 2;
}

}  // namespace qito
