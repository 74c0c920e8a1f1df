#include "checks_util.hpp"

namespace rf::app {

using detail::show;

CheckResult check_points_example(const CheckContext& c) {
  CheckResult r;
  json fx = c.fixture("points_example.json");
  bool balanced = fx.value("scheme", "balanced") == "balanced";
  for (auto& cs : fx.at("cases")) {
    int d = cs.at("d"), cc = cs.at("c");
    int b = 2 * cc, deg = 2 * d - b;
    ScrollType S({d});
    std::vector<std::string> pn;
    for (int j = 0; j <= deg; ++j) pn.push_back("p" + std::to_string(j));
    auto A = concat(S.ambient(), make_alphabet(pn));
    std::vector<MultiPoly> total(b + 1, MultiPoly(A));
    BihomForm generic(S, {2, b});
    generic.set({2}, BinaryForm(deg, std::vector<Rat>(deg + 1, Rat(1))));
    for (int j = 0; j <= deg; ++j) {
      BihomForm P(S, {2, b});
      P.set({2}, BinaryForm::monomial(deg - j, j));
      auto rolled = roll_equations(P, balanced ? balanced_scheme(P) : canonical_scheme(P));
      for (int m = 0; m <= b; ++m) total[m] += rolled[m].rebase(A) * MultiPoly::var(A, pn[j]);
    }
    auto& expected = cs.at("P");
    std::string tag = "d=" + std::to_string(d) + " b=" + std::to_string(b);
    bool ok = expected.size() == total.size();
    for (size_t m = 0; ok && m < total.size(); ++m) ok = parse_text(expected[m].get<std::string>(), A) == total[m];
    r.expect(ok, tag + ": P_0..P_b as printed");
    r.expect(check_roll_consistency(generic, canonical_scheme(generic), balanced_scheme(generic)),
             tag + ": canonical and balanced agree modulo the scroll");
  }
  return r;
}

CheckResult check_rhs_S(const CheckContext& c) {
  CheckResult r;
  json fx = c.fixture("rhs_S.json");
  ScrollType S = scroll_of(fx);
  int b = fx.at("b");
  auto v = make_deform_vars(S, {b});
  auto A = s_alphabet(v);
  for (auto& cs : fx.at("cases")) {
    MultiIndex I = cs.at("I").get<MultiIndex>();
    int j = cs.at("j");
    BihomForm P(S, {2, b});
    int deg = P.weight(I) - b;
    P.set(I, BinaryForm::monomial(deg - j, j));
    RollingScheme sch = canonical_scheme(P);
    sch.levels[{I, j}] = cs.at("path").get<std::vector<std::vector<int>>>();
    std::string name = cs.at("name");
    try {
      validate_scheme(P, sch);
      MultiPoly got = rhs_S(P, sch, v);
      MultiPoly want = parse_text(cs.at("expected").get<std::string>(), A);
      r.expect(got == want, name + ": " + pretty(got));
    } catch (const std::exception& e) {
      r.expect(false, name + ": " + e.what());
    }
  }
  return r;
}

CheckResult check_path_independence(const CheckContext& c, int samples) {
  CheckResult r;
  std::mt19937_64 rng(c.seed);
  std::uniform_int_distribution<int> dk(1, 4), da(1, 3);
  int bad = 0, done = 0;
  std::string first_bad;
  while (done < samples) {
    int k = dk(rng), a = da(rng);
    ScrollType S(detail::random_scroll(rng, k, 5));
    int maxb = a * S.e(0);
    int b = std::uniform_int_distribution<int>(0, maxb)(rng);
    BihomForm P = detail::random_bihom(rng, S, a, b);
    if (P.terms.empty()) continue;
    ++done;
    auto base = canonical_scheme(P);
    bool ok = check_roll_consistency(P, base, balanced_scheme(P));
    for (int t = 0; t < 3 && ok; ++t) ok = check_roll_consistency(P, base, random_scheme(P, rng));
    if (ok) {
      // P_m parametrizes to s^{b-m} t^m P
      auto rolled = roll_equations(P, base);
      MultiPoly full = P.as_fiber_poly();
      for (int m = 0; m <= b && ok; ++m) {
        MultiPoly lhs = parametrize(S, rolled[m]).rebase(S.fiber());
        MultiPoly sm = MultiPoly::var(S.fiber(), 0, b - m) * MultiPoly::var(S.fiber(), 1, m);
        ok = lhs == full * sm;
      }
    }
    if (!ok) {
      ++bad;
      if (first_bad.empty()) first_bad = show(S) + " a=" + std::to_string(a) + " b=" + std::to_string(b);
    }
  }
  r.expect(bad == 0, std::to_string(samples) + " random forms, path independent" +
                         (bad ? " (first failure " + first_bad + ")" : ""));
  return r;
}

}  // namespace rf::app
