#include "checks_util.hpp"

namespace rf::app {

using detail::show;

namespace {

std::vector<std::string> strings(const json& j) { return j.get<std::vector<std::string>>(); }

// Lifting rows as normalized linear forms, sorted.
std::vector<std::string> lifting_forms(const BaseSystem& B) {
  std::vector<std::string> out;
  for (auto& r : B.lifting.rows) {
    MultiPoly f = row_form(r, B.vars);
    if (!f.is_zero()) out.push_back(f.normalized().str());
  }
  std::sort(out.begin(), out.end());
  return out;
}

BaseSystem unit_system(const ScrollType& S, int b, int k, int j) {
  BihomForm P(S, {2, b});
  P.set({1, 1}, BinaryForm::monomial(k - j, j));
  return closed_form_system(P, 0, 1);
}

}  // namespace

CheckResult check_running_example(const CheckContext& c) {
  CheckResult r;
  json fx = c.fixture("running_example.json");
  ScrollType S = scroll_of(fx);
  BihomForm P = bihom_from_json(S, fx.at("equation"));
  auto v = make_deform_vars(S, {P.cls.b});
  auto [I, f] = *P.terms.begin();
  std::vector<BaseSystem> systems;
  for (auto& path : fx.at("paths")) {
    RollingScheme sch = canonical_scheme(P);
    sch.levels[{I, 0}] = path.get<std::vector<std::vector<int>>>();
    systems.push_back(base_equations(P, sch, v));
  }
  auto want = strings(fx.at("pi"));
  for (size_t p = 0; p < systems.size(); ++p) {
    const auto& pis = systems[p].pi[0];
    bool ok = pis.size() == want.size();
    std::string got;
    for (size_t m = 0; ok && m < pis.size(); ++m) {
      ok = pis[m] == parse_text(want[m], v.alphabet);
      got += (m ? ", " : "") + pretty(pis[m]);
    }
    r.expect(ok, "path " + std::to_string(p + 1) + ": pi = {" + got + "}");
  }
  r.expect(equivalent_base(systems[0], systems[1]), "the two paths give equivalent systems");
  return r;
}

CheckResult check_case_I(const CheckContext& c) {
  CheckResult r;
  json fx = c.fixture("case_I.json");
  ScrollType S = scroll_of(fx);
  Params params = params_of(fx);
  BihomForm P = bihom_from_json(S, fx.at("equation"), params);
  int b = P.cls.b, k = P.terms.begin()->second.degree();
  auto v = make_deform_vars(S, {b});
  BaseSystem built = base_equations(P, canonical_scheme(P), v);
  BaseSystem closed = closed_form_system(P, 0, 1);
  auto texts = strings(fx.at("display"));
  BaseSystem printed = display_system(built, {texts}, {}, params);
  BaseSystem corrected = printed;
  for (auto& cor : fx.at("corrections"))
    corrected.pi[0][cor.at("m").get<int>() - 1] += parse_text(cor.at("add").get<std::string>(), v.alphabet, {}, params);

  r.expect(built.pi[0].size() == texts.size(), std::to_string(built.pi[0].size()) + " equations");
  r.expect(equivalent_base(built, closed), "constructive = closed form modulo lifting");
  r.expect(equivalent_base(built, corrected), "corrected display is equivalent");
  r.notes.push_back(std::string("note display as printed is ") + (equivalent_base(built, printed) ? "" : "not ") +
                    "equivalent");
  std::vector<std::string> want;
  for (auto& t : strings(fx.at("lifting"))) want.push_back(parse_text(t, v.alphabet, {}, params).normalized().str());
  std::sort(want.begin(), want.end());
  r.expect(lifting_forms(built) == want, std::to_string(want.size()) + " lifting conditions as printed");
  r.expect(linear_relations_check(P, built), "sum p_j pi_{i+j} = 0 modulo lifting, 0 < i < b - k");
  r.notes.push_back(std::string("note relations hold ") +
                    (linear_relations_check(P, corrected, true) ? "exactly" : "only modulo lifting") +
                    " on the corrected display");

  // coefficient of p_j in pi_m, m = 1..k+1, j = 0..k
  int n = fx.at("skew_block");
  std::vector<BaseSystem> unit;
  for (int j = 0; j <= k; ++j) unit.push_back(unit_system(S, b, k, j));
  bool skew = n == k + 1;
  for (int m = 0; m < n && skew; ++m)
    for (int j = 0; j < n && skew; ++j) {
      MultiPoly a = unit[j].pi[0][m], t = unit[m].pi[0][j].rebase(a.alphabet());
      skew = a == -t;
    }
  r.expect(skew, "first " + std::to_string(n) + " rows of the p-coefficient array are skew-symmetric");
  return r;
}

CheckResult check_case_II(const CheckContext& c) {
  CheckResult r;
  json fx = c.fixture("case_II.json");
  ScrollType S = scroll_of(fx);
  Params params = params_of(fx);
  BihomForm P = bihom_from_json(S, fx.at("equation"), params);
  auto v = make_deform_vars(S, {P.cls.b});
  BaseSystem built = base_equations(P, canonical_scheme(P), v);
  BaseSystem shown = display_system(built, {strings(fx.at("display"))}, names_of(fx), params);
  r.expect(static_cast<int>(v.rhos.size()) == S.e(0) - P.cls.b + 1,
           std::to_string(v.rhos.size()) + " pure rolling variables");
  r.expect(equivalent_base(built, shown), "three-equation display is equivalent");
  r.expect(equivalent_base(built, closed_form_system(P, 0, 1)), "constructive = closed form modulo lifting");
  return r;
}

CheckResult check_linear_relations_random(const CheckContext& c, int samples) {
  CheckResult r;
  std::mt19937_64 rng(c.seed + 6);
  int bad = 0, exact = 0, relations = 0, closed_bad = 0;
  std::string first;
  for (int i = 0; i < samples; ++i) {
    int ex = std::uniform_int_distribution<int>(2, 8)(rng);
    int ey = std::uniform_int_distribution<int>(1, ex)(rng);
    int b = std::uniform_int_distribution<int>(ex + 1, ex + ey)(rng);
    int k = ex + ey - b;
    ScrollType S({ex, ey});
    BihomForm P(S, {2, b});
    BinaryForm p = detail::random_form(rng, k);
    if (p.coeff(0) == 0) p.coeff(0) = 1;
    P.set({1, 1}, p);
    auto v = make_deform_vars(S, {b});
    auto sch = (i % 2) ? canonical_scheme(P) : random_scheme(P, rng);
    BaseSystem B = base_equations(P, sch, v);
    relations += std::max(0, b - k - 1);
    if (!linear_relations_check(P, B) && bad++ == 0) first = show(S) + " b=" + std::to_string(b);
    if (linear_relations_check(P, B, true)) ++exact;
    if (!equivalent_base(B, closed_form_system(P, 0, 1))) ++closed_bad;
  }
  r.expect(bad == 0, std::to_string(samples) + " random Case I monomials (" + std::to_string(relations) +
                         " relations) hold modulo lifting" + (first.empty() ? "" : " (first failure " + first + ")"));
  r.expect(closed_bad == 0, "constructive = closed form on every sample");
  r.notes.push_back("note " + std::to_string(exact) + " of " + std::to_string(samples) +
                    " hold exactly without lifting multiples");
  return r;
}

}  // namespace rf::app
