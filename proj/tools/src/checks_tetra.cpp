#include "rollfac/gbengine.hpp"

#include "checks_util.hpp"

namespace rf::app {

namespace {

std::vector<BihomForm> equations_of(const json& fx, const ScrollType& S, const Params& params = {}) {
  std::vector<BihomForm> out;
  for (auto& e : fx.at("equations")) out.push_back(bihom_from_json(S, e, params));
  return out;
}

std::vector<MultiPoly> all_pi(const BaseSystem& B) {
  std::vector<MultiPoly> out;
  for (auto& fam : B.pi) out.insert(out.end(), fam.begin(), fam.end());
  return out;
}

bool proportional(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.size() != b.size()) return false;
  std::optional<Rat> k;
  for (size_t i = 0; i < a.size(); ++i) {
    if ((a[i] == 0) != (b[i] == 0)) return false;
    if (a[i] == 0) continue;
    Rat q = a[i] / b[i];
    if (k && *k != q) return false;
    k = q;
  }
  return k.has_value();
}

std::vector<std::string> names_with_prefix(const DeformVars& v, const std::string& prefix) {
  std::vector<std::string> out;
  for (auto& n : v.alphabet->names)
    if (n.rfind(prefix, 0) == 0) out.push_back(n);
  return out;
}

std::string cert_str(const gb::Certificate& c) {
  std::string s = gb::to_string(c.verdict);
  for (auto& r : c.reports)
    s += "; p=" + std::to_string(r.prime) + " dim " + std::to_string(r.krull_dim) + " deg " + std::to_string(r.degree);
  return s;
}

}  // namespace

CheckResult check_g15(const CheckContext& c) {
  CheckResult r;
  json fx = c.fixture("g15.json");
  ScrollType S = scroll_of(fx);
  auto eqs = equations_of(fx, S);
  auto B = tetragonal_base_system(eqs[0], eqs[1]);
  int rows = 0;
  for (auto& row : B.lifting.rows) rows += !row_form(row, B.vars).is_zero();
  r.expect(rows == 0, "no lifting conditions");
  r.expect(static_cast<int>(B.num_quadrics()) == fx.at("quadrics").get<int>() &&
               static_cast<int>(B.vars.alphabet->size()) == fx.at("variables").get<int>(),
           std::to_string(B.num_quadrics()) + " quadrics in " + std::to_string(B.vars.alphabet->size()) + " variables");
  auto cert = gb::two_prime_certify(all_pi(B), fx.at("projective_dim").get<int>() + 1, fx.at("degree").get<long>(),
                                    c.prime1, c.prime2);
  r.expect(cert.verdict == gb::Verdict::Pass, "projective dimension 0, degree 256: " + cert_str(cert));
  return r;
}

CheckResult check_g16(const CheckContext& c) {
  CheckResult r;
  json fx = c.fixture("g16.json");
  ScrollType S = scroll_of(fx);
  auto eqs = equations_of(fx, S);
  auto B = tetragonal_base_system(eqs[0], eqs[1]);
  const auto& v = B.vars;

  // lifting rows up to scaling
  auto q = fx.at("q");
  std::vector<std::vector<Rat>> want;
  for (auto& row : fx.at("lifting")) {
    want.emplace_back();
    for (auto& x : row) {
      if (x.is_string() && x.get<std::string>().size() == 3 && x.get<std::string>()[0] == 'q') {
        auto t = x.get<std::string>();
        want.back().push_back(rat_from_json(q.at(t[2] - '1').at(t[1] - '0')));
      } else {
        want.back().push_back(rat_from_json(x));
      }
    }
  }
  std::vector<std::vector<Rat>> got;
  for (auto& row : B.lifting.rows)
    if (!row_form(row, v).is_zero()) got.push_back(row.coeffs);
  bool match = got.size() == want.size();
  std::vector<bool> used(want.size(), false);
  for (auto& g : got) {
    bool found = false;
    for (size_t i = 0; i < want.size() && !found; ++i)
      if (!used[i] && proportional(g, want[i])) used[i] = found = true;
    match = match && found;
  }
  r.expect(match, std::to_string(got.size()) + "x" + std::to_string(v.num_zeta()) +
                      " lifting matrix matches the printed one up to row scaling");
  r.expect(B.lifting.rank() == 3, "lifting matrix has rank 3");

  auto display = fx.at("display").get<std::vector<std::vector<std::string>>>();
  Names names = names_of(fx);
  BaseSystem shown = display_system(B, display, names, {});
  r.expect(B.pi[0].size() == 5 && B.pi[1].size() == 4, "5 + 4 base equations");
  r.expect(equivalent_base(B, shown), "the nine displayed equations are equivalent");

  // rank condition
  auto zeta_z = names_with_prefix(v, "zeta.3.");
  auto elim = rho_elimination(shown, 1, zeta_z);
  bool linear_ok = elim.matrix.size() == 3 && elim.matrix[0].size() == 4;
  for (int m = 1; linear_ok && m <= 4; ++m) {
    linear_ok = elim.matrix[1][m - 1] == MultiPoly::var(v.alphabet, DeformVars::zeta_name(0, m)) &&
                elim.matrix[2][m - 1] == MultiPoly::var(v.alphabet, DeformVars::zeta_name(1, m));
  }
  r.expect(linear_ok && elim.minors.size() == 4,
           "second family is rho1 xi_m + rho2 eta_m + chi_m; rank (chi / xi / eta) <= 2 has 4 maximal minors");
  std::vector<Rat> pt(v.alphabet->size());
  for (auto& [k, x] : fx.at("solution").items()) {
    auto img = parse_text(k, v.alphabet, names);
    pt[std::distance(img.terms().begin()->first.begin(),
                     std::find(img.terms().begin()->first.begin(), img.terms().begin()->first.end(), 1))] =
        rat_from_json(x, k);
  }
  bool solves = true;
  for (auto& fam : shown.pi)
    for (auto& f : fam) solves = solves && f.evaluate(pt) == 0;
  bool minors_vanish = true;
  for (auto& m : elim.minors) minors_vanish = minors_vanish && m.evaluate(pt) == 0;
  r.expect(solves && minors_vanish, "fixture point solves the nine equations and the minors vanish there");
  return r;
}

CheckResult check_b84(const CheckContext& c) {
  CheckResult r;
  json fx = c.fixture("b84.json");
  ScrollType S = scroll_of(fx);
  auto eqs = equations_of(fx, S);
  auto B = tetragonal_base_system(eqs[0], eqs[1]);
  const auto& v = B.vars;
  auto eta = names_with_prefix(v, "zeta.2.");
  auto zz = names_with_prefix(v, "zeta.3.");

  // lifting: 2I on eta, 2I on zeta_z, zero elsewhere
  int eta_rows = 0, z_rows = 0, zero_rows = 0, other = 0;
  std::set<int> eta_cols, z_cols;
  for (auto& row : B.lifting.rows) {
    std::vector<int> nz;
    for (size_t i = 0; i < row.coeffs.size(); ++i)
      if (row.coeffs[i] != 0) nz.push_back(static_cast<int>(i));
    if (nz.empty()) {
      ++zero_rows;
      continue;
    }
    const auto& name = v.alphabet->names[nz[0]];
    if (nz.size() == 1 && row.coeffs[nz[0]] == 2 && name.rfind("zeta.2.", 0) == 0) {
      ++eta_rows;
      eta_cols.insert(nz[0]);
    } else if (nz.size() == 1 && row.coeffs[nz[0]] == 2 && name.rfind("zeta.3.", 0) == 0) {
      ++z_rows;
      z_cols.insert(nz[0]);
    } else {
      ++other;
    }
  }
  r.expect(other == 0 && eta_rows == static_cast<int>(eta.size()) && eta_cols.size() == eta.size() &&
               z_rows == static_cast<int>(zz.size()) && z_cols.size() == zz.size(),
           "lifting matrix is 2I on eta and on zeta_z, the Pi block vanishes (" + std::to_string(zero_rows) +
               " zero rows)");
  int rho_p = 0, rho_q = 0;
  for (auto& x : v.rhos) (x.eq == 0 ? rho_p : rho_q)++;
  r.expect(rho_p == 1 && rho_q == 6, "pure rolling deformations: 1 + (5+1)");

  std::vector<std::string> killed = eta;
  killed.insert(killed.end(), zz.begin(), zz.end());
  auto pe = rho_elimination(B, 0, killed);
  std::set<std::string> used;
  auto allowed = fx.at("p_variables").get<std::vector<std::string>>();
  for (size_t m = 0; m < pe.matrix[0].size(); ++m) {
    MultiPoly f = pe.matrix[0][m] + pe.matrix[1][m] * MultiPoly::var(v.alphabet, v.rhos[0].index);
    for (size_t i = 0; i < v.alphabet->size(); ++i)
      if (f.depends_on(static_cast<int>(i))) used.insert(v.alphabet->names[i]);
  }
  bool subset = std::all_of(used.begin(), used.end(), [&](const std::string& n) {
    return std::find(allowed.begin(), allowed.end(), n) != allowed.end();
  });
  r.expect(static_cast<int>(B.pi[0].size()) == fx.at("p_base_equations").get<int>() && subset,
           std::to_string(B.pi[0].size()) + " equations from P in rho, xi_1..xi_7");

  auto qe = rho_elimination(B, 1, killed);
  auto texts = fx.at("rho_equations").get<std::vector<std::string>>();
  Names names = names_of(fx);
  bool ok = qe.matrix[0].size() == texts.size();
  for (size_t m = 0; ok && m < texts.size(); ++m) {
    MultiPoly lin(v.alphabet);
    size_t ri = 1;
    for (auto& x : v.rhos)
      if (x.eq == 1) lin += qe.matrix[ri++][m] * MultiPoly::var(v.alphabet, x.index);
    ok = lin == parse_text(texts[m], v.alphabet, names);
    for (auto& x : v.rhos) ok = ok && !qe.matrix[0][m].depends_on(x.index);
  }
  r.expect(ok, "equations from Q are rho1 xi_m + ... + rho5 xi_{m+4} + chi_m with chi_m rho-free");
  return r;
}

CheckResult check_shear(const CheckContext& c) {
  CheckResult r;
  json fx = c.fixture("shear.json");
  ScrollType S = scroll_of(fx);
  auto eqs = equations_of(fx, S);
  const auto& P = eqs[0];
  const auto& Q = eqs[1];
  auto [Qs, Qt] = shear_split(Q, P.cls.b);
  auto F = S.fiber();
  r.expect(Qs.as_fiber_poly() == parse_text(fx["split"]["Q_s"].get<std::string>(), F) &&
               Qt.as_fiber_poly() == parse_text(fx["split"]["Q_t"].get<std::string>(), F),
           "Q = s Q_s + t^(b1-b2-1) Q_t as displayed");
  Rat eps = rat_from_json(fx.at("epsilon"));
  Params params{{"eps", eps}};
  auto families = fx.at("families").get<std::vector<std::vector<std::string>>>();
  auto matches = [&](const BihomForm& base) {
    auto [F1, F2] = shear_deformation(base, Q, eps);
    std::vector<BihomForm> fs{F1, F2};
    for (size_t k = 0; k < 2; ++k) {
      auto rolled = roll_equations(fs[k], canonical_scheme(fs[k]));
      if (rolled.size() != families[k].size()) return false;
      for (size_t m = 0; m < rolled.size(); ++m) {
        MultiPoly shown = parse_text(families[k][m], S.ambient(), {}, params);
        if (parametrize(S, shown) != parametrize(S, rolled[m])) return false;
      }
    }
    return true;
  };
  BihomForm Pd = bihom_from_text(S, P.cls, fx.at("display_P").get<std::string>());
  r.expect(matches(Pd), "displayed families = shear deformation of " + fx.at("display_P").get<std::string>());
  r.notes.push_back(std::string("note stated P ") + (matches(P) ? "also matches" : "does not match the families"));
  return r;
}

}  // namespace rf::app
