#include "rollfac/gbengine.hpp"

#include "checks_util.hpp"

namespace rf::app {

namespace {

std::vector<RootData> root_sets(const CheckContext& c) {
  std::vector<RootData> out;
  for (auto& set : c.fixture("e5_display.json").at("root_sets")) {
    std::vector<Rat> roots;
    for (auto& x : set) roots.push_back(rat_from_json(x));
    out.push_back(RootData::from_roots(roots));
  }
  return out;
}

std::string roots_str(const RootData& d) {
  std::string s;
  for (auto& a : d.roots) s += (s.empty() ? "" : ",") + to_string(a);
  return "{" + s + "}";
}

}  // namespace

CheckResult check_hyperell_n_independence(const CheckContext& c, int max_genus) {
  CheckResult r;
  std::mt19937_64 rng(c.seed + 7);
  for (int g = 1; g <= max_genus; ++g) {
    BinaryForm p = detail::random_form(rng, 2 * g + 2);
    p.coeff(2 * g + 2) = 3;
    for (bool balanced : {false, true}) {
      std::optional<std::vector<MultiPoly>> first;
      bool same = true;
      for (int n = 2 * g + 3; n <= 2 * g + 7; ++n) {
        ScrollType S({n, n - g - 1});
        BihomForm P(S, {2, 2 * n - 2 * g - 2});
        P.set({2, 0}, p * (1 / p.coeff(2 * g + 2)));
        P.set({0, 2}, BinaryForm(0, {Rat(-1)}));
        RollingScheme sch = balanced ? balanced_scheme(P) : canonical_scheme(P);
        auto H = hyperell_system(g, n, p, &sch);
        if (!first) first = H.eqs;
        else same = same && H.eqs.size() == first->size() &&
                    std::equal(H.eqs.begin(), H.eqs.end(), first->begin(),
                               [](const MultiPoly& a, const MultiPoly& b) { return a == b.rebase(a.alphabet()); });
      }
      r.expect(same, "g=" + std::to_string(g) + (balanced ? " balanced" : " canonical") + ": " +
                         std::to_string(first->size()) + " reduced equations identical for n = " +
                         std::to_string(2 * g + 3) + ".." + std::to_string(2 * g + 7));
    }
  }
  return r;
}

CheckResult check_squarefree_dimension(const CheckContext& c, int per_degree) {
  CheckResult r;
  std::mt19937_64 rng(c.seed + 8);
  for (int deg = 4; deg <= 8; ++deg) {
    int agree = 0, sqf = 0, bad_primes = 0;
    for (int i = 0; i < per_degree; ++i) {
      BinaryForm p;
      if (i % 2) {
        // forced double root at t = a s
        Rat a = detail::small_rat(rng, 3);
        BinaryForm lin(1, {-a, Rat(1)});
        BinaryForm rest = detail::random_form(rng, deg - 2);
        if (rest.is_zero()) rest = BinaryForm(deg - 2, std::vector<Rat>(deg - 1, Rat(1)));
        p = lin * lin * rest;
      } else {
        do p = detail::random_form(rng, deg, 9);
        while (p.coeff(deg) == 0 && p.coeff(0) == 0);
      }
      bool squarefree = is_squarefree(p);
      sqf += squarefree;
      auto sys = lemma_system(p);
      bool ok = true, any = false;
      for (uint32_t prime : {c.prime1, c.prime2}) {
        auto rep = gb::run_prime(sys.pi[0], prime);
        if (!rep.ok) {
          ++bad_primes;
          continue;
        }
        any = true;
        ok = ok && ((rep.krull_dim == 0) == squarefree);
      }
      agree += ok && any;
    }
    r.expect(agree == per_degree, "deg " + std::to_string(deg) + ": " + std::to_string(agree) + "/" +
                                      std::to_string(per_degree) + " agree (" + std::to_string(sqf) +
                                      " squarefree)" + (bad_primes ? ", bad primes skipped" : ""));
  }
  return r;
}

CheckResult check_root_pair_solutions(const CheckContext& c) {
  CheckResult r;
  for (auto& d : root_sets(c)) {
    auto sys = root_system(d);
    int e = d.p.degree(), roots_ok = 0, pairs_ok = 0, pairs = 0;
    for (int i = 0; i < e; ++i) {
      auto pt = root_solution(d, i);
      bool powers = true;
      Rat pw = 1;
      for (auto& x : pt.xi) {
        powers = powers && x == pw;
        pw *= d.roots[i];
      }
      roots_ok += powers && verify_rank(pt.xi, pi_values(sys, pt.xi)) && pt.rho && satisfies(sys, pt.xi, *pt.rho);
    }
    for (int i = 0; i < e; ++i)
      for (int j = i + 1; j < e; ++j) {
        ++pairs;
        auto pt = pair_solution(d, {i, j});
        pairs_ok += verify_rank(pt.xi, pi_values(sys, pt.xi)) && pt.rho && satisfies(sys, pt.xi, *pt.rho);
      }
    r.expect(roots_ok == e && pairs_ok == pairs, "roots " + roots_str(d) + ": " + std::to_string(roots_ok) +
                                                     " root points, " + std::to_string(pairs_ok) + "/" +
                                                     std::to_string(pairs) + " pair points satisfy the rank condition");
  }
  return r;
}

CheckResult check_l_identity(const CheckContext& c) {
  CheckResult r;
  for (auto& d : root_sets(c)) {
    int ok = 0, printed = 0, n = 0;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) {
        ++n;
        ok += l_form_identity(d, i, j);
        printed += l_form_identity(d, i, j, true);
      }
    r.expect(ok == n, "roots " + roots_str(d) + ": identity holds for " + std::to_string(ok) + "/" +
                          std::to_string(n) + " pairs");
    r.notes.push_back("note printed l+ gives " + std::to_string(printed) + "/" + std::to_string(n));
  }
  return r;
}

CheckResult check_e5_display(const CheckContext& c) {
  CheckResult r;
  json fx = c.fixture("e5_display.json");
  auto texts = fx.at("display").get<std::vector<std::string>>();
  auto& corr = fx.at("correction");
  for (auto& d : root_sets(c)) {
    auto sys = root_system(d);
    const auto& A = sys.vars.alphabet;
    Params params;
    for (int k = 0; k <= 5; ++k) params["p" + std::to_string(k)] = d.p.coeff(k);
    std::vector<MultiPoly> shown;
    for (auto& t : texts) shown.push_back(parse_text(t, A, names_of(fx), params));
    std::string tag = "roots " + roots_str(d);
    r.expect(shown == e5_display(d, true), tag + ": display parsed as printed");
    int m = corr.at("m");
    shown[m - 1] = shown[m - 1] - parse_text(corr.at("replace").get<std::string>(), A, {}, params) +
                   parse_text(corr.at("with").get<std::string>(), A, {}, params);
    r.expect(shown == e5_display(d, false), tag + ": corrected display");
    BaseSystem disp = sys;
    disp.pi[0] = shown;
    r.expect(equivalent_base(sys, disp) && e5_rho_shift(d).has_value(),
             tag + ": corrected display = constructed system after a rho shift");
    r.notes.push_back(std::string("note ") + tag + ": printed display " +
                      (e5_rho_shift(d, true) ? "is" : "is not") + " related by a rho shift");
    int formula = 0;
    for (int i = 0; i < 5; ++i) {
      auto pt = root_solution(d, i);
      auto rho = solve_rho(shown, sys, pt.xi);
      formula += rho && *rho == e5_display_rho(d, i);
    }
    r.expect(formula == 5, tag + ": rho at the root points matches the printed formula (" +
                               std::to_string(formula) + "/5)");
  }
  return r;
}

}  // namespace rf::app
