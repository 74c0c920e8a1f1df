#include "checks_util.hpp"

namespace rf::app {

using detail::show;

namespace {

std::vector<TetraInvariants> valid_general(int max_genus) {
  std::vector<TetraInvariants> out;
  for (int g = 5; g <= max_genus; ++g) {
    int d = g - 3;
    for (int e1 = 0; e1 <= d; ++e1)
      for (int e2 = 0; e2 <= e1; ++e2) {
        int e3 = d - e1 - e2;
        if (e3 < 0 || e3 > e2 || 2 * e1 > g - 1) continue;
        for (int b2 = 1; b2 <= d; ++b2) {
          TetraInvariants inv{e1, e2, e3, d - 2 - b2, b2};
          if (validate_tetragonal(inv).verdict == TetraVerdict::ValidGeneral) out.push_back(inv);
        }
      }
  }
  return out;
}

std::string show(const TetraInvariants& v) {
  return "(" + detail::join({v.e1, v.e2, v.e3}) + ";" + detail::join({v.b1, v.b2}) + ")";
}

std::pair<BihomForm, BihomForm> random_pair(std::mt19937_64& rng, const TetraInvariants& v, bool generic = false) {
  ScrollType S({v.e1, v.e2, v.e3});
  return {detail::random_bihom(rng, S, 2, v.b1, generic), detail::random_bihom(rng, S, 2, v.b2, generic)};
}

LiftingSystem lifting_of(const BihomForm& P, const BihomForm& Q) {
  return lifting_matrix({P, Q}, make_deform_vars(P.scroll, {P.cls.b, Q.cls.b}));
}

Matrix sorted_rows(Matrix m) {
  std::sort(m.begin(), m.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Rat& x, const Rat& y) { return cmp(x, y) < 0; });
  });
  return m;
}

}  // namespace

CheckResult check_lifting_65577(const CheckContext& c) {
  CheckResult r;
  json fx = c.fixture("lifting_65577.json");
  ScrollType S = scroll_of(fx);
  std::vector<BihomForm> eqs;
  for (auto& e : fx.at("equations")) eqs.push_back(bihom_from_json(S, e));
  auto v = make_deform_vars(S, {eqs[0].cls.b, eqs[1].cls.b});
  auto M = lifting_matrix(eqs, v);
  Matrix want;
  for (auto& row : fx.at("matrix")) {
    want.emplace_back();
    for (auto& x : row) want.back().push_back(rat_from_json(x));
  }
  Matrix got = M.matrix();
  r.expect(got.size() == want.size() && M.cols.size() == want.at(0).size(),
           std::to_string(got.size()) + "x" + std::to_string(M.cols.size()) + " matrix");
  r.expect(sorted_rows(got) == sorted_rows(want), "entries match the printed matrix");
  r.expect(M.rank() == fx.at("rank").get<int>(), "rank " + std::to_string(M.rank()));
  TetraInvariants inv{S.e(0), S.e(1), S.e(2), eqs[0].cls.b, eqs[1].cls.b};
  int t1 = t1_minus1(inv, M);
  r.expect(t1 == fx.at("t1_minus1").get<int>(), "dim T1(-1) = " + std::to_string(t1));
  for (size_t n = 0; n < eqs.size(); ++n) {
    auto split = lifting_from_S(eqs[n], canonical_scheme(eqs[n]), v, static_cast<int>(n));
    std::vector<LiftRow> closed;
    for (auto& row : M.rows)
      if (row.eq == static_cast<int>(n)) closed.push_back(row);
    r.expect(split.rows == closed, "equation " + std::to_string(n + 1) + ": splitting gives the same rows");
  }
  return r;
}

CheckResult check_lifting_closed_vs_split(const CheckContext& c, int samples) {
  CheckResult r;
  std::mt19937_64 rng(c.seed + 1);
  std::uniform_int_distribution<int> dk(1, 4);
  int bad = 0, rows = 0;
  std::string first_bad;
  for (int i = 0; i < samples; ++i) {
    ScrollType S(detail::random_scroll(rng, dk(rng), 7, 1));
    int b = std::uniform_int_distribution<int>(1, 2 * S.e(0))(rng);
    BihomForm P = detail::random_bihom(rng, S, 2, b);
    auto v = make_deform_vars(S, {b});
    auto closed = lifting_matrix({P}, v);
    auto sch = (i % 2) ? balanced_scheme(P) : random_scheme(P, rng);
    bool ok = false;
    try {
      ok = detail::same_rows(closed, lifting_from_S(P, sch, v));
    } catch (const std::exception&) {
    }
    rows += static_cast<int>(closed.rows.size());
    if (!ok && bad++ == 0) first_bad = show(S) + " b=" + std::to_string(b);
  }
  r.expect(bad == 0, std::to_string(samples) + " random quadrics (" + std::to_string(rows) + " rows), closed = split" +
                         (bad ? " (first failure " + first_bad + ")" : ""));
  return r;
}

CheckResult check_trigonal_banded(const CheckContext& c) {
  CheckResult r;
  std::mt19937_64 rng(c.seed + 2);
  for (auto [a, m] : std::vector<std::pair<int, int>>{{8, 4}, {9, 4}, {9, 5}, {10, 4}, {11, 6}, {12, 6}}) {
    ScrollType S({a, m});
    int b = a + m - 2;
    BihomForm F(S, {3, b});
    for (auto& I : multi_indices(2, 3)) {
      int d = F.weight(I) - b;
      if (d >= 0) F.set(I, detail::random_form(rng, d));
    }
    const BinaryForm& C = *F.get({1, 2});
    const BinaryForm& D = *F.get({0, 3});
    auto v = make_deform_vars(S, {b});
    auto M = lifting_matrix({F}, v);
    std::string tag = show(S) + " b=" + std::to_string(b);
    bool only_w2 = std::all_of(M.rows.begin(), M.rows.end(), [](const LiftRow& x) { return x.I == MultiIndex{0, 2}; });
    r.expect(only_w2 && static_cast<int>(M.rows.size()) == a - m - 3,
             tag + ": " + std::to_string(M.rows.size()) + " rows, all from I = (0,2)");
    Matrix want;
    for (int n = 1; n <= a - m - 3; ++n) {
      std::vector<Rat> row(M.cols.size());
      for (int j = 0; j <= C.degree(); ++j) row.at(v.zeta(0, j + n)) += C.coeff(j);
      for (int j = 0; j <= D.degree(); ++j) row.at(v.zeta(1, j + n)) += 3 * D.coeff(j);
      want.push_back(row);
    }
    r.expect(M.matrix() == want, tag + ": banded (C | 3D) rows");
    r.expect(M.rank() == a - m - 3, tag + ": maximal rank");
  }
  return r;
}

CheckResult check_hyperell_y_block(const CheckContext& c) {
  CheckResult r;
  std::mt19937_64 rng(c.seed + 3);
  for (int g = 1; g <= 3; ++g)
    for (int n = 2 * g + 3; n <= 2 * g + 6; ++n) {
      BinaryForm p = detail::random_form(rng, 2 * g + 2);
      p.coeff(2 * g + 2) = 1;
      auto H = hyperell_system(g, n, p);
      const auto& v = H.full.vars;
      const auto& M = H.full.lifting;
      int ny = 0, nx = 0;
      Matrix yblock, want(n - g - 2, std::vector<Rat>(n - g - 2));
      bool zero_elsewhere = true;
      for (auto& row : M.rows) {
        if (row.I == MultiIndex{1, 0}) ++nx;
        if (row.I != MultiIndex{0, 1}) continue;
        ++ny;
        std::vector<Rat> part;
        for (int m = 1; m < n - g - 1; ++m) part.push_back(row.coeffs[v.zeta(1, m)]);
        for (int m = 1; m < n; ++m) zero_elsewhere = zero_elsewhere && row.coeffs[v.zeta(0, m)] == 0;
        yblock.push_back(part);
      }
      for (int i = 0; i < n - g - 2; ++i) want[i][i] = -2;
      std::string tag = "g=" + std::to_string(g) + " n=" + std::to_string(n);
      r.expect(ny == n - g - 2 && yblock == want && zero_elsewhere,
               tag + ": y-block = -2 I of size " + std::to_string(n - g - 2));
      r.expect(nx == n - 2 * g - 3 && v.num_zeta() - (n - g - 2) == n - 1,
               tag + ": x-block " + std::to_string(nx) + "x" + std::to_string(n - 1));
    }
  return r;
}

CheckResult check_row_count_identity(const CheckContext& c, int max_genus) {
  CheckResult r;
  std::mt19937_64 rng(c.seed + 4);
  auto all = valid_general(max_genus);
  int bad_rows = 0, bad_cols = 0, bad_generic = 0;
  std::string first, generic_fail;
  for (auto& inv : all) {
    auto [P, Q] = random_pair(rng, inv, true);
    auto M = lifting_of(P, Q);
    int g = inv.g(), rh = rho(inv);
    bool rows_ok = static_cast<int>(M.rows.size()) == g - 15 + rh;
    bool cols_ok = static_cast<int>(M.cols.size()) == g - 6;
    bad_rows += !rows_ok;
    bad_cols += !cols_ok;
    if ((!rows_ok || !cols_ok) && first.empty()) first = show(inv);
    // a random pair is generic: T1(-1) = max(9, rho)
    if (g <= 25 && t1_minus1(inv, M) != std::max(9, rh)) {
      ++bad_generic;
      generic_fail += " " + show(inv) + ":" + std::to_string(t1_minus1(inv, M)) + "/" + std::to_string(std::max(9, rh)) +
                      " r" + std::to_string(M.rows.size()) + "x" + std::to_string(M.cols.size()) + " rk" +
                      std::to_string(M.rank());
    }
  }
  std::string n = std::to_string(all.size());
  r.expect(bad_rows == 0, n + " invariants with g <= " + std::to_string(max_genus) + ": rows = g - 15 + rho" +
                              (first.empty() ? "" : " (first failure " + first + ")"));
  r.expect(bad_cols == 0, n + " invariants: cols = g - 6");
  r.expect(bad_generic == 0, "random pairs with g <= 25: dim T1(-1) = max(9, rho)" + generic_fail);
  return r;
}

CheckResult check_rho_maximum(const CheckContext&, int max_genus) {
  CheckResult r;
  int considered = 0, floor_ties = 0, bad = 0;
  std::vector<int> attained;
  for (auto& inv : valid_general(max_genus)) {
    int g = inv.g();
    if (!(inv.b1 >= inv.e1 + 1 && inv.b2 >= inv.e3 + 1 && g > 15)) continue;
    ++considered;
    int rh = rho(inv);
    int n = (g + 3) / 6;
    bool special = g % 6 == 3 && inv.e1 == 3 * n - 2 && inv.e2 == 2 * n - 2 && inv.e3 == n - 2 &&
                   inv.b1 == 4 * n - 4 && inv.b2 == 2 * n - 4;
    // rho <= (g+3)/6 + 6 with equality exactly at the special family
    bool ok = 6 * rh <= g + 39 && ((6 * rh == g + 39) == special) && rh <= (g + 3) / 6 + 6;
    if (!ok) ++bad;
    if (special && 6 * rh == g + 39) attained.push_back(g);
    if (!special && rh == (g + 3) / 6 + 6) ++floor_ties;
  }
  std::vector<int> expected;
  for (int g = 21; g <= max_genus; g += 6) expected.push_back(g);
  r.expect(bad == 0, std::to_string(considered) + " invariants with b1 > e1, b2 > e3, g > 15: rho <= (g+3)/6 + 6");
  r.expect(attained == expected, "maximum attained at (3n-2,2n-2,n-2;4n-4,2n-4) for g = " + detail::join(attained));
  r.notes.push_back("note " + std::to_string(floor_ties) +
                    " other invariants (even g) reach floor((g+3)/6) + 6 without reaching (g+3)/6 + 6");
  return r;
}

CheckResult check_t1t2_table(const CheckContext& c) {
  CheckResult r;
  json fx = c.fixture("t1t2.json");
  std::mt19937_64 rng(c.seed + 5);
  auto inv_of = [](const json& j) {
    auto a = j.at("inv").get<std::vector<int>>();
    return TetraInvariants{a[0], a[1], a[2], a[3], a[4]};
  };
  for (auto& cs : fx.at("cases")) {
    auto inv = inv_of(cs);
    std::optional<LiftingSystem> M;
    if (inv.b2 > 0) {
      auto [P, Q] = random_pair(rng, inv);
      M = lifting_of(P, Q);
    }
    auto t = t1_t2_table(inv, M ? &*M : nullptr);
    int g = inv.g();
    std::string tag = show(inv);
    bool ok = t.t1_m2 == cs.at("t1_m2").get<int>() && t.t1_0 == 3 * g - 3 && t.t1_1 == g && t.t1_2 == 1;
    if (cs.contains("t1_0")) ok = ok && t.t1_0 == cs["t1_0"].get<int>() && t.t1_1 == cs["t1_1"].get<int>();
    if (cs.contains("t1_m1")) ok = ok && t.t1_m1 == cs["t1_m1"].get<int>();
    if (cs.contains("t2_m2")) ok = ok && t.t2_m2 == cs["t2_m2"].get<int>();
    else ok = ok && !t.t2_m2;
    if (inv.b2 > 0) ok = ok && t.t2_m2 == g - 7 && t.t1_m1 == std::max(9, rho(inv));
    r.expect(ok, tag + ": T1(-2) = " + std::to_string(t.t1_m2) + ", T1(0..2) = " + std::to_string(t.t1_0) + "," +
                     std::to_string(t.t1_1) + "," + std::to_string(t.t1_2) +
                     (t.t1_m1 ? ", T1(-1) = " + std::to_string(*t.t1_m1) : "") +
                     (t.t2_m2 ? ", T2(-2) = " + std::to_string(*t.t2_m2) : ""));
    // dim T2(-2) of the scroll equations: one quadric per pi_m
    if (inv.b2 > 0 && inv.e3 > 0) {
      ScrollType S({inv.e1, inv.e2, inv.e3});
      auto [P, Q] = random_pair(rng, inv);
      auto B = tetragonal_base_system(P, Q);
      r.expect(static_cast<int>(B.num_quadrics()) == inv.b1 - 1 + inv.b2 - 1,
               tag + ": " + std::to_string(B.num_quadrics()) + " base quadrics = sum (b_i - 1)");
    }
  }
  for (auto& cs : fx.at("composed")) {
    auto inv = inv_of(cs);
    std::string tag = show(inv);
    r.expect(validate_tetragonal(inv, true).verdict == TetraVerdict::ValidComposed, tag + ": valid composed");
    ScrollType S({inv.e1, inv.e2, inv.e3});
    BihomForm P(S, {2, inv.b1}), Q(S, {2, inv.b2});
    for (auto& I : multi_indices(3, 2)) {
      if (I[2] > 0) continue;
      if (int d = P.weight(I) - inv.b1; d >= 0) P.set(I, detail::random_form(rng, d));
      if (int d = Q.weight(I) - inv.b2; d >= 0) Q.set(I, detail::random_form(rng, d));
    }
    Q.set({0, 0, 2}, BinaryForm(0, {Rat(1)}));
    auto v = make_deform_vars(S, {inv.b1, inv.b2});
    auto M = lifting_matrix({P, Q}, v);
    LiftingSystem Mxy;
    std::vector<int> keep;
    for (size_t i = 0; i < M.cols.size(); ++i)
      if (M.cols[i].rfind("zeta.3.", 0) != 0) {
        keep.push_back(static_cast<int>(i));
        Mxy.cols.push_back(M.cols[i]);
      }
    for (auto& row : M.rows) {
      if (row.I[2] > 0) continue;
      LiftRow x{row.eq, row.I, row.n, {}};
      for (int i : keep) x.coeffs.push_back(row.coeffs[i]);
      Mxy.rows.push_back(x);
    }
    int e1 = inv.e1, e2 = inv.e2, e3 = inv.e3;
    int rows = std::max(0, e2 - e3 - 3) + std::max(0, e1 - e3 - 3) + std::max(0, 2 * e3 - e1 - 1) +
               std::max(0, 2 * e3 - e2 - 1);
    r.expect(static_cast<int>(Mxy.rows.size()) == rows && static_cast<int>(Mxy.cols.size()) == e1 + e2 - 2,
             tag + ": M_xy is " + std::to_string(rows) + "x" + std::to_string(e1 + e2 - 2));
    int composed = t1_minus1_composed(inv, Mxy);
    int direct = rho(inv) + M.nullity();
    bool ok = composed == direct;
    if (cs.contains("t1_m1")) ok = ok && composed == cs["t1_m1"].get<int>();
    r.expect(ok, tag + ": e1+e2-2e3+6+cork(M_xy) = " + std::to_string(composed) + " = rho + nullity(M)");
  }
  return r;
}

}  // namespace rf::app
