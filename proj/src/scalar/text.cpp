#include "qito/scalar/text.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "qito/errors.hpp"

namespace qito {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::string rational_text(const Rational& r) { return r.get_str(); }

bool needs_parens(const LaurentPoly& p) { return p.term_count() > 1; }

}  // namespace

std::string q_power_text(int k) {
  if (k == 0) return "";
  if (k % 2 == 0) {
    const int e = k / 2;
    if (e == 1) return "q";
    return "q^" + std::to_string(e);
  }
  return "q^(" + std::to_string(k) + "/2)";
}

std::string to_text(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int e = p.high(); e >= p.low(); --e) {
    const Rational c = p.coeff(e);
    if (sgn(c) == 0) continue;
    const bool neg = sgn(c) < 0;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? "-" : "+";
    first = false;
    const Rational mag = neg ? Rational(-c) : c;
    if (e == 0) {
      out += rational_text(mag);
    } else if (mag == 1) {
      out += q_power_text(e);
    } else {
      out += rational_text(mag) + "*" + q_power_text(e);
    }
  }
  return out;
}

std::string to_text(const RationalFn& f) {
  std::string n = to_text(f.num());
  if (f.is_polynomial()) return n;
  if (needs_parens(f.num())) n = "(" + n + ")";
  return n + "/(" + to_text(f.den()) + ")";
}

namespace {

// Coefficient text used as a factor in front of `*sqrt(...)` or a monomial.
// Returns "" for 1 and "-" for -1.
std::string factor_text(const RationalFn& f) {
  if (f.is_one()) return "";
  if (f.is_polynomial() && f.num().term_count() == 1) {
    if (f.num().is_constant() && f.num().leading() == -1) return "-";
    return to_text(f.num());
  }
  if (!f.is_polynomial() || needs_parens(f.num())) return "(" + to_text(f) + ")";
  return to_text(f);
}

std::string term_text(const RadicalTerm& t) {
  if (t.radicand.is_one()) return to_text(t.coeff);
  // Centre the radicand around exponent zero by an even shift.
  const int s = 2 * floor_div(t.radicand.low() + t.radicand.high(), 4);
  const LaurentPoly rad = t.radicand.shifted(-s);
  const RationalFn coeff = t.coeff * RationalFn(LaurentPoly::t_power(s / 2));
  std::string f = factor_text(coeff);
  const std::string root = "sqrt(" + to_text(rad) + ")";
  if (f.empty()) return root;
  if (f == "-") return "-" + root;
  return f + "*" + root;
}

}  // namespace

std::string to_text(const QScalar& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < s.terms().size(); ++i) {
    if (i > 0) out += " + ";
    out += term_text(s.terms()[i]);
  }
  return out;
}

// --- parser ------------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  ExprPtr parse() {
    ExprPtr e = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  static ExprPtr make(Expr::Kind k, std::vector<ExprPtr> args) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->args = std::move(args);
    return e;
  }

  ExprPtr sum() {
    ExprPtr lhs = product();
    for (;;) {
      if (accept('+'))
        lhs = make(Expr::Kind::Add, {lhs, product()});
      else if (accept('-'))
        lhs = make(Expr::Kind::Sub, {lhs, product()});
      else
        return lhs;
    }
  }

  ExprPtr product() {
    ExprPtr lhs = unary();
    for (;;) {
      if (accept('*'))
        lhs = make(Expr::Kind::Mul, {lhs, unary()});
      else if (accept('/'))
        lhs = make(Expr::Kind::Div, {lhs, unary()});
      else
        return lhs;
    }
  }

  ExprPtr unary() {
    if (accept('-')) return make(Expr::Kind::Neg, {unary()});
    if (accept('+')) return unary();
    return power();
  }

  long integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    try {
      return std::stol(std::string(s_.substr(start, pos_ - start)));
    } catch (const std::exception&) {
      fail("integer out of range");
    }
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (!accept('^')) return base;
    int num = 0, den = 1;
    if (accept('(')) {
      const bool neg = accept('-');
      num = static_cast<int>(integer());
      if (neg) num = -num;
      if (accept('/')) den = static_cast<int>(integer());
      expect(')');
    } else {
      const bool neg = accept('-');
      num = static_cast<int>(integer());
      if (neg) num = -num;
    }
    if (den == 0) fail("zero exponent denominator");
    const int g = std::gcd(num, den);
    if (g != 0) {
      num /= g;
      den /= g;
    }
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Pow;
    e->exp_num = num;
    e->exp_den = den;
    e->args = {base};
    return e;
  }

  ExprPtr atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr e = sum();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Number;
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      e->number = Rational(Integer(std::string(s_.substr(start, pos_ - start))));
      return e;
    }
    if (s_.substr(pos_, 5) == "sqrt(") {
      pos_ += 5;
      ExprPtr inner = sum();
      expect(')');
      return make(Expr::Kind::Sqrt, {inner});
    }
    auto e = std::make_shared<Expr>();
    switch (c) {
      case 'q': e->kind = Expr::Kind::Q; break;
      case 't': e->kind = Expr::Kind::T; break;
      case 'X': case 'U': case 'V': case 'Y':
        e->kind = Expr::Kind::Generator;
        e->generator = c;
        break;
      default: fail(std::string("unexpected '") + c + "'");
    }
    ++pos_;
    return e;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

QScalar integer_power(const QScalar& base, int n) {
  QScalar r(1);
  for (int i = 0; i < std::abs(n); ++i) r *= base;
  if (n < 0) r = QScalar(1) / r;
  return r;
}

}  // namespace

ExprPtr parse_expression(std::string_view text) { return Parser(text).parse(); }

QScalar eval_scalar_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number: return QScalar(e.number);
    case Expr::Kind::Q: return QScalar::t_power(2);
    case Expr::Kind::T: return QScalar::t_power(1);
    case Expr::Kind::Generator:
      throw ParseError(std::string("generator '") + e.generator + "' in a scalar expression");
    case Expr::Kind::Add: return eval_scalar_expr(*e.args[0]) + eval_scalar_expr(*e.args[1]);
    case Expr::Kind::Sub: return eval_scalar_expr(*e.args[0]) - eval_scalar_expr(*e.args[1]);
    case Expr::Kind::Mul: return eval_scalar_expr(*e.args[0]) * eval_scalar_expr(*e.args[1]);
    case Expr::Kind::Div: return eval_scalar_expr(*e.args[0]) / eval_scalar_expr(*e.args[1]);
    case Expr::Kind::Neg: return -eval_scalar_expr(*e.args[0]);
    case Expr::Kind::Sqrt: return sqrt(eval_scalar_expr(*e.args[0]));
    case Expr::Kind::Pow: {
      const Expr& base = *e.args[0];
      if (base.kind == Expr::Kind::Q || base.kind == Expr::Kind::T) {
        // q^(a/b) = q^(k/4) with k = 4a/b; t^(a/b) = q^(k/4) with k = 2a/b.
        const int scale = base.kind == Expr::Kind::Q ? 4 : 2;
        if ((scale * e.exp_num) % e.exp_den != 0) throw ParseError("unsupported fractional exponent");
        return QScalar::q_quarter_power(scale * e.exp_num / e.exp_den);
      }
      if (e.exp_den != 1) throw ParseError("fractional exponent on a compound base");
      return integer_power(eval_scalar_expr(base), e.exp_num);
    }
  }
  throw ParseError("bad expression");
}

QScalar parse_qscalar(std::string_view text) { return eval_scalar_expr(*parse_expression(text)); }

LaurentPoly parse_laurent(std::string_view text) {
  const QScalar s = parse_qscalar(text);
  if (s.is_zero()) return {};
  if (!s.is_rational() || !s.as_rational().is_polynomial())
    throw ParseError("expected a Laurent polynomial: '" + std::string(text) + "'");
  return s.as_rational().num();
}

nlohmann::json to_json(const QScalar& s) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& t : s.terms())
    out.push_back({{"num", to_text(t.coeff.num())}, {"den", to_text(t.coeff.den())}, {"radicand", to_text(t.radicand)}});
  return out;
}

QScalar qscalar_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("scalar JSON must be a list of terms");
  std::vector<RadicalTerm> terms;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("num") || !item.contains("den") || !item.contains("radicand"))
      throw ParseError("scalar JSON term needs num, den and radicand");
    RationalFn coeff(parse_laurent(item.at("num").get<std::string>()),
                     parse_laurent(item.at("den").get<std::string>()));
    terms.push_back({coeff, parse_laurent(item.at("radicand").get<std::string>())});
  }
  return QScalar::from_terms(std::move(terms));
}

}  // namespace qito
