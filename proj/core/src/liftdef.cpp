#include "rollfac/liftdef.hpp"

#include <algorithm>
#include <stdexcept>

namespace rf {

std::string DeformVars::zeta_name(int var, int m) { return "zeta." + std::to_string(var + 1) + "." + std::to_string(m); }

std::string DeformVars::rho_name(int eq, int var, int r) {
  return "rho." + std::to_string(eq + 1) + "." + std::to_string(var + 1) + "." + std::to_string(r);
}

int DeformVars::zeta(int var, int m) const {
  if (var < 0 || var >= scroll.k() || m < 1 || m >= scroll.e(var)) return -1;
  return zeta_alphabet->index_of(zeta_name(var, m));
}

DeformVars make_deform_vars(const ScrollType& S, const std::vector<int>& bs) {
  DeformVars v;
  v.scroll = S;
  v.bs = bs;
  std::vector<std::string> names;
  for (int l = 0; l < S.k(); ++l)
    for (int m = 1; m < S.e(l); ++m) names.push_back(DeformVars::zeta_name(l, m));
  v.zeta_alphabet = make_alphabet(names);
  for (size_t n = 0; n < bs.size(); ++n)
    for (int l = 0; l < S.k(); ++l)
      for (int r = 0; r <= S.e(l) - bs[n]; ++r) {
        v.rhos.push_back({static_cast<int>(n), l, r, static_cast<int>(names.size())});
        names.push_back(DeformVars::rho_name(static_cast<int>(n), l, r));
      }
  v.alphabet = make_alphabet(names);
  return v;
}

AlphabetPtr s_alphabet(const DeformVars& v) { return concat(v.scroll.fiber(), v.zeta_alphabet); }

MultiPoly rhs_S(const BihomForm& P, const RollingScheme& sch, const DeformVars& v) {
  validate_scheme(P, sch);
  auto A = s_alphabet(v);
  const auto& S = P.scroll;
  int b = P.cls.b, k = S.k();
  MultiPoly r(A);
  Exponent e(A->size());
  for (auto& [I, f] : P.terms) {
    auto vars = factor_vars(I);
    for (int j = 0; j <= f.degree(); ++j) {
      if (f.coeff(j) == 0) continue;
      auto& lv = sch.levels.at({I, j});
      for (int m = 0; m < b; ++m) {
        size_t q = 0;
        while (lv[m + 1][q] == lv[m][q]) ++q;
        int zi = v.zeta(vars[q], lv[m][q] + 1);
        if (zi < 0) continue;
        std::fill(e.begin(), e.end(), 0);
        e[0] = m + 1;
        e[1] = b - m - 1;
        for (size_t o = 0; o < vars.size(); ++o) {
          if (o == q) continue;
          e[0] += S.e(vars[o]) - lv[m][o];
          e[1] += lv[m][o];
          ++e[2 + vars[o]];
        }
        ++e[2 + k + zi];
        r.add_term(e, f.coeff(j));
      }
    }
  }
  return r;
}

Matrix LiftingSystem::matrix() const {
  Matrix m;
  for (auto& r : rows) m.push_back(r.coeffs);
  return m;
}

int LiftingSystem::rank() const { return rows.empty() ? 0 : rf::rank(matrix()); }

int LiftingSystem::nullity() const { return static_cast<int>(cols.size()) - rank(); }

static std::vector<std::string> zeta_cols(const DeformVars& v) { return v.zeta_alphabet->names; }

LiftingSystem lifting_matrix(const std::vector<BihomForm>& eqs, const DeformVars& v) {
  LiftingSystem L;
  L.cols = zeta_cols(v);
  for (size_t n = 0; n < eqs.size(); ++n) {
    auto& P = eqs[n];
    if (!(P.scroll == v.scroll)) throw std::invalid_argument("lifting_matrix: scroll mismatch");
    int b = P.cls.b, k = P.scroll.k();
    for (auto& I : multi_indices(k, P.cls.a - 1)) {
      int w = P.weight(I);
      if (w >= b - 1) continue;
      for (int sh = 1; sh < b - w; ++sh) {
        LiftRow row{static_cast<int>(n), I, sh, std::vector<Rat>(L.cols.size())};
        for (int l = 0; l < k; ++l) {
          MultiIndex J = I;
          ++J[l];
          auto* f = P.get(J);
          if (!f) continue;
          for (int j = 0; j <= f->degree(); ++j) {
            int zi = v.zeta(l, j + sh);
            if (zi >= 0) row.coeffs[zi] += f->coeff(j) * (I[l] + 1);
          }
        }
        L.rows.push_back(std::move(row));
      }
    }
  }
  return L;
}

LiftingSystem lifting_from_S(const BihomForm& P, const RollingScheme& sch, const DeformVars& v, int eq) {
  if (P.cls.a != 2) throw std::invalid_argument("lifting_from_S: quadrics only");
  LiftingSystem L;
  L.cols = zeta_cols(v);
  int b = P.cls.b, k = P.scroll.k();
  auto R = rhs_S(P, sch, v);
  std::map<std::pair<MultiIndex, int>, std::vector<Rat>> rows;
  for (auto& I : multi_indices(k, 1)) {
    int w = P.weight(I);
    for (int sh = 1; sh < b - w; ++sh) rows[{I, sh}] = std::vector<Rat>(L.cols.size());
  }
  for (auto& [e, c] : R.terms()) {
    int A = e[0], B = e[1];
    if (B >= b || A >= b) continue;
    MultiIndex I(e.begin() + 2, e.begin() + 2 + k);
    int zi = -1;
    for (size_t i = 2 + k; i < e.size(); ++i)
      if (e[i]) zi = static_cast<int>(i - 2 - k);
    int sh = A - P.weight(I);
    auto it = rows.find({I, sh});
    if (it == rows.end()) throw std::logic_error("lifting_from_S: middle-band monomial outside the row range");
    it->second[zi] += c;
  }
  // order rows like lifting_matrix
  for (auto& I : multi_indices(k, 1)) {
    int w = P.weight(I);
    for (int sh = 1; sh < b - w; ++sh) L.rows.push_back({eq, I, sh, rows.at({I, sh})});
  }
  return L;
}

MultiPoly row_form(const LiftRow& r, const DeformVars& v) {
  MultiPoly f(v.alphabet);
  for (size_t i = 0; i < r.coeffs.size(); ++i)
    if (r.coeffs[i] != 0) f += MultiPoly::var(v.alphabet, static_cast<int>(i)) * r.coeffs[i];
  return f;
}

int pure_rolling_count(const std::vector<int>& e, const std::vector<int>& bs) {
  int r = 0;
  for (int b : bs)
    for (int x : e) r += std::max(x - b + 1, 0);
  return r;
}

int rho(const TetraInvariants& inv) { return pure_rolling_count({inv.e1, inv.e2, inv.e3}, {inv.b1, inv.b2}); }

int cork(const LiftingSystem& M) {
  int rows = static_cast<int>(M.rows.size()), cols = static_cast<int>(M.cols.size());
  return M.nullity() - std::max(0, cols - rows);
}

int t1_minus1(const TetraInvariants& inv, const LiftingSystem& M) {
  if (!inv.consistent() || inv.b2 <= 0) throw std::invalid_argument("t1_minus1: invalid invariants");
  return rho(inv) + M.nullity();
}

int t1_minus1_composed(const TetraInvariants& inv, const LiftingSystem& Mxy) {
  if (!inv.consistent() || inv.b2 != 2 * inv.e3) throw std::invalid_argument("t1_minus1_composed: not a composed case");
  return inv.e1 + inv.e2 - 2 * inv.e3 + 6 + cork(Mxy);
}

T1T2Table t1_t2_table(const TetraInvariants& inv, const LiftingSystem* M) {
  if (!inv.consistent()) throw std::invalid_argument("t1_t2_table: invariants outside the classification");
  int g = inv.g();
  T1T2Table t;
  t.t1_0 = 3 * g - 3;
  t.t1_1 = g;
  t.t1_2 = 1;
  if (inv.b2 > 0) {
    t.t1_m2 = 0;
    if (M) t.t1_m1 = t1_minus1(inv, *M);
    t.t2_m2 = g - 7;
  } else {
    t.t1_m2 = 1;
    t.t1_m1 = inv.e3 > 0 ? 10 : 2 * g - 2;
    if (inv.e3 > 0) t.t2_m2 = 2 * (g - 6);
  }
  return t;
}

namespace {
// Hessian entry d^2P/dz_i dz_l as a binary form of degree e_i + e_l - b.
BinaryForm hessian(const BihomForm& P, int i, int l) {
  MultiIndex I(P.scroll.k(), 0);
  ++I[i];
  ++I[l];
  auto* f = P.get(I);
  if (!f) return BinaryForm();
  return *f * Rat(i == l ? 2 : 1);
}
}  // namespace

bool section_kills_gradient(const BihomForm& P, const SingularSection& sec) {
  int k = P.scroll.k();
  for (int l = 0; l < k; ++l) {
    BinaryForm acc;
    for (int i = 0; i < k; ++i) {
      if (sec.z[i].is_zero()) continue;
      acc = acc + sec.z[i] * hessian(P, i, l);
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

std::optional<SingularSection> dependent_rows_witness(const BihomForm& P) {
  if (P.cls.a != 2) throw std::invalid_argument("dependent_rows_witness: quadrics only");
  auto v = make_deform_vars(P.scroll, {P.cls.b});
  auto L = lifting_matrix({P}, v);
  if (L.rows.empty()) return std::nullopt;
  auto K = left_kernel(L.matrix());
  if (K.empty()) return std::nullopt;
  int b = P.cls.b, k = P.scroll.k();
  SingularSection sec;
  sec.z.assign(k, BinaryForm());
  auto& w = K.front();
  for (size_t r = 0; r < L.rows.size(); ++r) {
    if (w[r] == 0) continue;
    auto& row = L.rows[r];
    int i = static_cast<int>(std::find(row.I.begin(), row.I.end(), 1) - row.I.begin());
    int deg = b - 2 - P.scroll.e(i);
    if (sec.z[i].is_zero()) sec.z[i] = BinaryForm(deg);
    sec.z[i].coeff(row.n - 1) += w[r];
  }
  if (!section_kills_gradient(P, sec)) throw std::logic_error("dependent_rows_witness: section check failed");
  return sec;
}

std::pair<BihomForm, BihomForm> shear_split(const BihomForm& Q, int b1) {
  int c = b1 - Q.cls.b - 1;
  if (c < 0) throw std::invalid_argument("shear_split: requires b1 > b2");
  BihomForm Qs(Q.scroll, {Q.cls.a, Q.cls.b + 1}), Qt(Q.scroll, {Q.cls.a, b1 - 1});
  for (auto& [I, f] : Q.terms) {
    int d = f.degree();
    BinaryForm fs(d - 1);
    for (int j = 0; j < d; ++j) fs.coeff(j) = f.coeff(j);
    if (f.coeff(d) != 0) {
      if (d < c) throw std::invalid_argument("shear_split: split impossible");
      Qt.set(I, BinaryForm::monomial(0, d - c, f.coeff(d)));
    }
    if (d >= 1 && !fs.is_zero()) Qs.set(I, fs);
  }
  return {Qs, Qt};
}

std::pair<BihomForm, BihomForm> shear_deformation(const BihomForm& P, const BihomForm& Q, const Rat& eps) {
  int b1 = P.cls.b, b2 = Q.cls.b;
  if (b1 - b2 - 1 < 0) throw std::invalid_argument("shear_deformation: requires b1 > b2");
  auto [Qs, Qt] = shear_split(Q, b1);
  BihomForm A(P.scroll, {P.cls.a, b1 - 1}), B(P.scroll, {P.cls.a, b2 + 1});
  auto s = BinaryForm::monomial(1, 0), tc = BinaryForm::monomial(0, b1 - b2 - 1);
  for (auto& I : multi_indices(P.scroll.k(), P.cls.a)) {
    BinaryForm fa, fb;
    if (auto* p = P.get(I)) {
      fa = s * *p;
      fb = tc * *p;
    }
    if (auto* q = Qt.get(I)) fa = fa - *q * eps;
    if (auto* q = Qs.get(I)) fb = fb + *q * eps;
    if (!fa.is_zero()) A.set(I, fa);
    if (!fb.is_zero()) B.set(I, fb);
  }
  return {A, B};
}

}  // namespace rf
