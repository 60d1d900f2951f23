// One line per acceptance criterion; exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qito/scalar/numeric.hpp"
#include "qito/scalar/text.hpp"
#include "qito/suq2/dfun.hpp"
#include "qito/suq2/text.hpp"
#include "qito/verify/verify.hpp"
#include "../support/golden.hpp"
#include "../support/random_scalars.hpp"

using namespace qito;

namespace {

struct Outcome {
  bool passed;
  std::string summary;
  std::vector<std::string> failures;
};

Outcome from_report(const Report& rep) {
  Outcome o{rep.passed(), std::to_string(rep.checks.size() - rep.failures()) + "/" + std::to_string(rep.checks.size()) + " checks", {}};
  for (const auto& c : rep.checks)
    if (!c.passed) o.failures.push_back(c.name + (c.detail.empty() ? "" : ": " + c.detail));
  return o;
}

Outcome golden_dfunctions() {
  Outcome o{true, "", {}};
  int n = 0;
  auto check = [&](int j2, int r, int c, const AlgElem& expected) {
    ++n;
    const AlgElem got = dfun(j2, j2 - 2 * r, j2 - 2 * c);
    if (got != expected) {
      o.passed = false;
      o.failures.push_back("pi^" + std::to_string(j2) + "/2 (" + std::to_string(r) + "," + std::to_string(c) + "): " + to_text(got));
    }
  };
  check(0, 0, 0, AlgElem(1));
  const std::vector<std::pair<int, const std::vector<std::vector<const char*>>*>> tables{
      {1, &testing::golden_pi_half()}, {2, &testing::golden_pi_one()}, {3, &testing::golden_pi_three_halves()}};
  for (const auto& [j2, t] : tables)
    for (int r = 0; r <= j2; ++r)
      for (int c = 0; c <= j2; ++c) check(j2, r, c, parse_alg_elem((*t)[r][c]));
  o.summary = std::to_string(n) + " entries";
  return o;
}

Outcome scalar_kernel() {
  Outcome o{true, "", {}};
  std::mt19937 rng(1000);
  const Rational qs[] = {Rational(3, 2), Rational(2), Rational(5)};
  int ring = 0, hom = 0, canon = 0;
  auto fail = [&](const std::string& what, const QScalar& a) {
    o.passed = false;
    if (o.failures.size() < 10) o.failures.push_back(what + " at " + to_text(a));
  };
  for (int i = 0; i < 1000; ++i) {
    const QScalar a = testing::random_qscalar(rng), b = testing::random_qscalar(rng), c = testing::random_qscalar(rng);
    ++ring;
    if (!((a + b) + c == a + (b + c) && a + b == b + a && (a * b) * c == a * (b * c) && a * b == b * a &&
          a * (b + c) == a * b + a * c && a - a == QScalar()))
      fail("ring law", a);
    const Rational& q = qs[i % 3];
    ++hom;
    const Real ea = eval_numeric(a, q), eb = eval_numeric(b, q);
    if (!numerically_close(eval_numeric(a * b, q), ea * eb, 28) || !numerically_close(eval_numeric(a + b, q), ea + eb, 28))
      fail("numeric homomorphism", a);
    ++canon;
    const std::string t = to_text(a);
    if (parse_qscalar(t) != a || to_text(parse_qscalar(t)) != t || QScalar::from_terms(a.terms()) != a) fail("canonical form", a);
  }
  o.summary = std::to_string(ring) + " ring, " + std::to_string(hom) + " numeric, " + std::to_string(canon) + " canonical samples";
  return o;
}

Outcome suite(const std::string& name, std::optional<int> jmax) {
  VerifyOptions opts;
  opts.jmax = jmax;
  return from_report(run_suite(name, opts));
}

Outcome classical() {
  VerifyOptions opts;
  const Report rep = run_suite("classical", opts);
  Outcome o = from_report(rep);
  int families = 0;
  for (const auto& c : rep.checks)
    if (c.name.rfind("verdicts agree", 0) == 0) ++families;
  o.summary += ", " + std::to_string(families) + " families";
  if (families < 20) {
    o.passed = false;
    o.failures.push_back("fewer than 20 families");
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double bound_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "golden d-functions", 5, golden_dfunctions},
      {2, "hopf suite j<=3/2", 60, [] { return suite("hopf", 3); }},
      {3, "cg suite j<=3/2", 120, [] { return suite("cg", 3); }},
      {4, "haar suite labels<=1", 120, [] { return suite("haar", 2); }},
      {5, "ito suite labels<=3/2", 300, [] { return suite("ito", 3); }},
      {6, "wigner-eckart labels<=3/2", 120, [] { return suite("wigner-eckart", 3); }},
      {7, "boson suite jmax=1", 300, [] { return suite("boson", 2); }},
      {8, "classical backend S3", 30, classical},
      {9, "scalar kernel", 30, scalar_kernel},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what(), {}};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.bound_s;
    const bool ok = o.passed && in_time;
    if (!ok) ++failed;
    std::printf("criterion %d %-28s %s  %.2fs (bound %.0fs)  %s\n", c.id, c.title, ok ? "PASS" : "FAIL", secs, c.bound_s, o.summary.c_str());
    if (!in_time) std::printf("    over the time bound\n");
    for (const auto& f : o.failures) std::printf("    failed: %s\n", f.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
