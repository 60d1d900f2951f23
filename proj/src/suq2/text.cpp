#include "qito/suq2/text.hpp"

#include "qito/errors.hpp"
#include "qito/scalar/text.hpp"

namespace qito {

std::string to_text(const PbwMonomial& m) {
  std::string out;
  auto part = [&](char g, int e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += g;
    if (e > 1) out += "^" + std::to_string(e);
  };
  part('X', m.a);
  part('U', m.b);
  part('V', m.c);
  part('Y', m.d);
  return out.empty() ? "1" : out;
}

namespace {

bool simple_factor(const QScalar& s) {
  if (s.terms().size() != 1) return false;
  const RationalFn& c = s.terms()[0].coeff;
  return c.is_polynomial() && c.num().term_count() == 1;
}

std::string coeff_times(const QScalar& c, const std::string& mono) {
  if (mono == "1") return to_text(c);
  if (c == QScalar(1)) return mono;
  if (c == QScalar(-1)) return "-" + mono;
  const std::string ct = to_text(c);
  if (simple_factor(c)) return ct + "*" + mono;
  return "(" + ct + ")*" + mono;
}

}  // namespace

std::string to_text(const AlgElem& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : x.terms()) {
    if (!out.empty()) out += " + ";
    out += coeff_times(c, to_text(m));
  }
  return out;
}

std::string to_text(const Tensor2& t) {
  if (t.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : t.terms()) {
    if (!out.empty()) out += " + ";
    out += coeff_times(c, "(" + to_text(k[0]) + ")(x)(" + to_text(k[1]) + ")");
  }
  return out;
}

namespace {

bool has_generator(const Expr& e) {
  if (e.kind == Expr::Kind::Generator) return true;
  for (const auto& a : e.args)
    if (has_generator(*a)) return true;
  return false;
}

AlgElem eval_alg(const Expr& e) {
  if (!has_generator(e)) return AlgElem(eval_scalar_expr(e));
  switch (e.kind) {
    case Expr::Kind::Generator: return AlgElem::generator(e.generator);
    case Expr::Kind::Add: return eval_alg(*e.args[0]) + eval_alg(*e.args[1]);
    case Expr::Kind::Sub: return eval_alg(*e.args[0]) - eval_alg(*e.args[1]);
    case Expr::Kind::Mul: return eval_alg(*e.args[0]) * eval_alg(*e.args[1]);
    case Expr::Kind::Neg: return -eval_alg(*e.args[0]);
    case Expr::Kind::Div: {
      if (has_generator(*e.args[1])) throw ParseError("division by an algebra element");
      return eval_alg(*e.args[0]) * (QScalar(1) / eval_scalar_expr(*e.args[1]));
    }
    case Expr::Kind::Pow: {
      if (e.exp_den != 1 || e.exp_num < 0) throw ParseError("algebra powers must be nonnegative integers");
      const AlgElem base = eval_alg(*e.args[0]);
      AlgElem r(1);
      for (int i = 0; i < e.exp_num; ++i) r = r * base;
      return r;
    }
    case Expr::Kind::Sqrt: throw ParseError("sqrt of an algebra element");
    default: break;
  }
  throw ParseError("bad algebra expression");
}

}  // namespace

AlgElem parse_alg_elem(std::string_view text) { return eval_alg(*parse_expression(text)); }

nlohmann::json to_json(const AlgElem& x) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : x.terms())
    out.push_back({{"monomial", {m.a, m.b, m.c, m.d}}, {"coeff", to_json(c)}});
  return out;
}

AlgElem alg_elem_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("algebra JSON must be a list of terms");
  AlgElem out;
  for (const auto& item : j) {
    const auto& mono = item.at("monomial");
    if (!mono.is_array() || mono.size() != 4) throw ParseError("monomial must be [a,b,c,d]");
    const PbwMonomial m{mono[0].get<int>(), mono[1].get<int>(), mono[2].get<int>(), mono[3].get<int>()};
    if (!m.valid()) throw ParseError("monomial is not in PBW normal form");
    out.add_term(m, qscalar_from_json(item.at("coeff")));
  }
  return out;
}

}  // namespace qito
