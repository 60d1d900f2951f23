#include "qito/suq2/rewrite.hpp"

#include <map>
#include <optional>

#include "qito/errors.hpp"

namespace qito {

namespace {

struct Redex {
  std::size_t pos;
  std::size_t len;
};

bool is_uv(char c) { return c == 'U' || c == 'V'; }

// Redex starting at i, if any.
std::optional<Redex> redex_at(const std::string& w, std::size_t i) {
  if (i + 1 >= w.size()) return std::nullopt;
  const char a = w[i], b = w[i + 1];
  if ((a == 'U' || a == 'V') && b == 'X') return Redex{i, 2};
  if (a == 'Y' && (b == 'U' || b == 'V' || b == 'X')) return Redex{i, 2};
  if (a == 'V' && b == 'U') return Redex{i, 2};
  if (a == 'X' && b == 'Y') return Redex{i, 2};
  if (a == 'X' && is_uv(b)) {
    std::size_t j = i + 1;
    while (j < w.size() && is_uv(w[j])) ++j;
    if (j < w.size() && w[j] == 'Y') return Redex{i, j - i + 1};
  }
  return std::nullopt;
}

std::optional<Redex> find_redex(const std::string& w, RewriteStrategy s) {
  if (w.size() < 2) return std::nullopt;
  if (s == RewriteStrategy::Leftmost) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (auto r = redex_at(w, i)) return r;
  } else {
    for (std::size_t i = w.size() - 1; i-- > 0;)
      if (auto r = redex_at(w, i)) return r;
  }
  return std::nullopt;
}

PbwMonomial to_monomial(const std::string& w) {
  PbwMonomial m;
  for (char c : w) {
    switch (c) {
      case 'X': ++m.a; break;
      case 'U': ++m.b; break;
      case 'V': ++m.c; break;
      case 'Y': ++m.d; break;
      default: break;
    }
  }
  return m;
}

}  // namespace

AlgElem normal_form(std::string_view word, const QScalar& coeff, RewriteStrategy strategy) {
  for (char c : word)
    if (c != 'X' && c != 'U' && c != 'V' && c != 'Y') throw ParseError(std::string("bad generator '") + c + "'");
  std::map<std::string, LaurentPoly> pending;
  pending.emplace(std::string(word), LaurentPoly(1));
  std::map<std::string, LaurentPoly> done;
  auto push = [](std::map<std::string, LaurentPoly>& into, const std::string& w, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = into.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) into.erase(it);
    }
  };
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const std::string& w = node.key();
    const LaurentPoly& c = node.mapped();
    auto r = find_redex(w, strategy);
    if (!r) {
      push(done, w, c);
      continue;
    }
    const std::string head = w.substr(0, r->pos);
    const std::string tail = w.substr(r->pos + r->len);
    const char a = w[r->pos], b = w[r->pos + 1];
    if (r->len > 2) {
      const std::string mid = w.substr(r->pos + 1, r->len - 2);
      const LaurentPoly base = c.shifted(-2 * static_cast<int>(mid.size()));
      push(pending, head + mid + tail, base);
      push(pending, head + mid + "UV" + tail, base.shifted(-2));
    } else if (a == 'V' && b == 'U') {
      push(pending, head + "UV" + tail, c);
    } else if (a == 'Y' && b == 'X') {
      push(pending, head + tail, c);
      push(pending, head + "UV" + tail, c.shifted(2));
    } else if (b == 'X') {  // UX, VX
      push(pending, head + "X" + a + tail, c.shifted(2));
    } else if (a == 'Y') {  // YU, YV
      push(pending, head + b + "Y" + tail, c.shifted(2));
    } else {  // XY
      push(pending, head + tail, c);
      push(pending, head + "UV" + tail, c.shifted(-2));
    }
  }
  AlgElem out;
  for (const auto& [w, c] : done) {
    const PbwMonomial m = to_monomial(w);
    if (!m.valid()) throw std::logic_error("rewrite left a non-normal word: " + w);
    out.add_term(m, coeff * QScalar(c));
  }
  return out;
}

}  // namespace qito
