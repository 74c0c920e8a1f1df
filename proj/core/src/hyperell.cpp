#include "rollfac/hyperell.hpp"

#include <stdexcept>

namespace rf {

HyperellSystem hyperell_system(int g, int n, const BinaryForm& p0, const RollingScheme* sch) {
  if (g < 1 || n < 2 * g + 2) throw std::invalid_argument("hyperell_system: requires n >= 2g+2");
  if (p0.degree() != 2 * g + 2) throw std::invalid_argument("hyperell_system: p must have degree 2g+2");
  Rat lead = p0.coeff(2 * g + 2);
  if (lead == 0) throw std::invalid_argument("hyperell_system: highest coefficient p_{2g+2} vanishes");
  HyperellSystem H;
  H.g = g;
  H.n = n;
  H.scale = lead;
  BinaryForm p = p0 * (1 / lead);
  ScrollType S({n, n - g - 1});
  int b = 2 * n - 2 * g - 2;
  BihomForm P(S, {2, b});
  P.set({2, 0}, p);
  P.set({0, 2}, BinaryForm(0, {Rat(-1)}));
  auto v = make_deform_vars(S, {b});
  RollingScheme own = canonical_scheme(P);
  H.full = base_equations(P, sch ? *sch : own, v);
  const auto& A = v.alphabet;
  // images: eta -> 0, xi_{2g+2+r} -> -sum_{j<2g+2} p_j xi_{j+r}
  std::vector<MultiPoly> img;
  img.reserve(A->size());
  for (size_t i = 0; i < A->size(); ++i) img.push_back(MultiPoly::var(A, static_cast<int>(i)));
  for (int m = 1; m < S.e(1); ++m) img[v.zeta(1, m)] = MultiPoly(A);
  for (int i = 2 * g + 3; i <= n - 1; ++i) {
    int r = i - (2 * g + 2);
    MultiPoly f(A);
    for (int j = 0; j < 2 * g + 2; ++j)
      if (j + r >= 1) f -= img[v.zeta(0, j + r)] * p.coeff(j);
    img[v.zeta(0, i)] = f;
  }
  std::vector<std::string> names;
  int keep = n >= 2 * g + 3 ? 2 * g + 2 : 2 * g + 1;
  for (int i = 1; i <= keep; ++i) names.push_back(DeformVars::zeta_name(0, i));
  for (auto& r : v.rhos) names.push_back(A->names[r.index]);
  H.vars = make_alphabet(names);
  std::vector<const MultiPoly*> ptr;
  for (auto& f : img) ptr.push_back(&f);
  int neq = n >= 2 * g + 3 ? 2 * g + 2 : 2 * g + 1;
  for (int m = 1; m <= neq; ++m) H.eqs.push_back(H.full.pi[0][m - 1].substitute(ptr, A).rebase(H.vars));
  return H;
}

BaseSystem lemma_system(const BinaryForm& p) {
  int b = p.degree() + 2;
  if (b < 3) throw std::invalid_argument("lemma_system: degree of p must be >= 1");
  ScrollType S({b - 1});
  BihomForm P(S, {2, b});
  P.set({2}, p);
  return base_equations(P, canonical_scheme(P), make_deform_vars(S, {b}));
}

std::optional<Rat> parametric_pi(const BinaryForm& p) {
  int b = p.degree() + 2;
  auto sys = lemma_system(p);
  auto st = make_alphabet({"s", "t"});
  std::vector<MultiPoly> img;
  for (int i = 1; i <= b - 2; ++i) img.push_back(MultiPoly::var(st, 0, b - i - 1) * MultiPoly::var(st, 1, i - 1));
  std::vector<const MultiPoly*> ptr;
  for (auto& f : img) ptr.push_back(&f);
  std::optional<Rat> scale;
  for (int m = 1; m <= b - 1; ++m) {
    MultiPoly got = sys.pi[0][m - 1].substitute(ptr, st);
    MultiPoly want(st);
    for (int k = 0; k <= p.degree(); ++k) {
      int a = 2 * b - k - m - 2, c = k + m - 2;
      if (a < 0 || c < 0) continue;
      want += MultiPoly::var(st, 0, a) * MultiPoly::var(st, 1, c) * (p.coeff(k) * (m - k - 1));
    }
    if (want.is_zero() && got.is_zero()) continue;
    if (want.is_zero() || got.is_zero()) return std::nullopt;
    Rat w = want.coeff(got.terms().begin()->first);
    if (w == 0) return std::nullopt;
    Rat r = got.terms().begin()->second / w;
    if (scale && *scale != r) return std::nullopt;
    scale = r;
    if (got != want * r) return std::nullopt;
  }
  return scale ? scale : std::optional<Rat>(Rat(1));
}

RootData RootData::from_roots(const std::vector<Rat>& roots) {
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j)
      if (roots[i] == roots[j]) throw std::invalid_argument("RootData: repeated roots");
  return {rf::from_roots(roots), roots};
}

BaseSystem root_system(const RootData& d) {
  int e = d.p.degree();
  ScrollType S({e});
  BihomForm P(S, {2, e});
  P.set({2}, d.p);
  return base_equations(P, canonical_scheme(P), make_deform_vars(S, {e}));
}

std::vector<Rat> pi_values(const BaseSystem& sys, const std::vector<Rat>& xi) {
  std::vector<Rat> pt(sys.vars.alphabet->size());
  for (size_t i = 0; i < xi.size(); ++i) pt[i] = xi[i];
  std::vector<Rat> out;
  for (auto& f : sys.pi[0]) out.push_back(f.evaluate(pt));
  return out;
}

bool verify_rank(const std::vector<Rat>& xi, const std::vector<Rat>& pi) {
  for (size_t i = 0; i < xi.size(); ++i)
    for (size_t j = i + 1; j < xi.size(); ++j)
      if (pi[i] * xi[j] - pi[j] * xi[i] != 0) return false;
  return true;
}

bool satisfies(const BaseSystem& sys, const std::vector<Rat>& xi, const Rat& rho) {
  std::vector<Rat> pt(sys.vars.alphabet->size());
  for (size_t i = 0; i < xi.size(); ++i) pt[i] = xi[i];
  for (auto& r : sys.vars.rhos) pt[r.index] = rho;
  for (auto& f : sys.pi[0])
    if (f.evaluate(pt) != 0) return false;
  return true;
}

std::optional<Rat> solve_rho(const BaseSystem& sys, const std::vector<Rat>& xi) {
  auto pv = pi_values(sys, xi);
  for (size_t m = 0; m < xi.size(); ++m)
    if (xi[m] != 0) {
      Rat rho = -pv[m] / xi[m];
      if (satisfies(sys, xi, rho)) return rho;
      return std::nullopt;
    }
  return std::nullopt;
}

RootPoint root_solution(const RootData& d, int i) {
  const Rat& a = d.roots.at(i);
  if (d.p.eval(1, a) != 0) throw std::invalid_argument("root_solution: not a root");
  int e = d.p.degree();
  RootPoint pt;
  Rat pw = 1;
  for (int j = 1; j <= e - 1; ++j) {
    pt.xi.push_back(pw);
    pw *= a;
  }
  pt.rho = solve_rho(root_system(d), pt.xi);
  return pt;
}

RootPoint pair_solution(const RootData& d, const std::vector<int>& subset) {
  int e = d.p.degree();
  BinaryForm dp = d.p.diff_t();
  RootPoint pt;
  pt.xi.assign(e - 1, 0);
  for (int i : subset) {
    Rat w = dp.eval(1, d.roots.at(i));
    if (w == 0) throw std::invalid_argument("pair_solution: multiple root");
    Rat pw = 1 / w;
    for (int j = 0; j < e - 1; ++j) {
      pt.xi[j] += pw;
      pw *= d.roots[i];
    }
  }
  pt.rho = solve_rho(root_system(d), pt.xi);
  return pt;
}

namespace {
Rat elem(const std::vector<Rat>& xs, int k) {
  std::vector<Rat> c(k + 1, 0);
  c[0] = 1;
  for (auto& x : xs)
    for (int j = k; j >= 1; --j) c[j] += c[j - 1] * x;
  return c[k];
}
std::vector<Rat> others(const std::vector<Rat>& r, std::initializer_list<int> skip) {
  std::vector<Rat> o;
  for (int i = 0; i < static_cast<int>(r.size()); ++i) {
    bool s = false;
    for (int k : skip) s |= (k == i);
    if (!s) o.push_back(r[i]);
  }
  return o;
}
}  // namespace

std::vector<MultiPoly> e5_display(const RootData& d, bool printed) {
  if (d.p.degree() != 5) throw std::invalid_argument("e5_display: degree must be 5");
  BaseSystem sys = root_system(d);
  const auto& A = sys.vars.alphabet;
  auto X = [&](int i) { return MultiPoly::var(A, A->index_of(DeformVars::zeta_name(0, i))); };
  MultiPoly r = MultiPoly::var(A, sys.vars.rhos.at(0).index);
  auto p = [&](int k) { return d.p.coeff(k); };
  Rat s3 = printed ? -p(3) : p(3);
  return {
      r * X(1) - X(1) * X(1) * p(1) - X(1) * X(2) * (2 * p(2)) - X(2) * X(2) * p(3) - X(2) * X(3) * (2 * p(4)) -
          (X(2) * X(4) * 2 + X(3) * X(3)) * p(5),
      r * X(2) + X(1) * X(1) * p(0) - X(2) * X(2) * p(2) - X(3) * X(3) * p(4) - X(3) * X(4) * (2 * p(5)),
      r * X(3) + X(1) * X(2) * (2 * p(0)) + X(2) * X(2) * p(1) + X(3) * X(3) * s3 - X(4) * X(4) * p(5),
      r * X(4) + (X(1) * X(3) * 2 + X(2) * X(2)) * p(0) + X(2) * X(3) * (2 * p(1)) + X(3) * X(3) * p(2) +
          X(3) * X(4) * (2 * p(3)) + X(4) * X(4) * p(4)};
}

Rat e5_display_rho(const RootData& d, int i) {
  auto o = others(d.roots, {i});
  const Rat& a = d.roots.at(i);
  return a * a * a * a - a * a * a * elem(o, 1) - a * a * elem(o, 2) - a * elem(o, 3) + elem(o, 4);
}

std::optional<MultiPoly> e5_rho_shift(const RootData& d, bool printed) {
  BaseSystem sys = root_system(d);
  auto disp = e5_display(d, printed);
  const auto& A = sys.vars.alphabet;
  auto X = [&](int i) { return MultiPoly::var(A, A->index_of(DeformVars::zeta_name(0, i))); };
  MultiPoly diff1 = disp[0] - sys.pi[0][0];
  int x1 = A->index_of(DeformVars::zeta_name(0, 1));
  MultiPoly lambda = diff1.coefficient_of(x1, 1) + X(1) * diff1.coefficient_of(x1, 2);
  for (int m = 1; m <= 4; ++m) {
    if (disp[m - 1] - sys.pi[0][m - 1] != X(m) * lambda) return std::nullopt;
  }
  return lambda;
}

std::optional<Rat> solve_rho(const std::vector<MultiPoly>& Pi, const BaseSystem& sys, const std::vector<Rat>& xi) {
  const auto& A = sys.vars.alphabet;
  std::vector<Rat> pt(A->size(), 0);
  for (size_t j = 0; j < xi.size(); ++j) pt[A->index_of(DeformVars::zeta_name(0, static_cast<int>(j) + 1))] = xi[j];
  for (size_t m = 0; m < xi.size() && m < Pi.size(); ++m) {
    if (xi[m] == 0) continue;
    pt[sys.vars.rhos.at(0).index] = -Pi[m].evaluate(pt) / xi[m];
    for (auto& f : Pi)
      if (f.evaluate(pt) != 0) return std::nullopt;
    return pt[sys.vars.rhos.at(0).index];
  }
  return std::nullopt;
}

LForms make_lforms(const RootData& d) {
  if (d.roots.size() != 5) throw std::invalid_argument("l-forms need five roots");
  return {make_alphabet({"rho", "xi1", "xi2", "xi3", "xi4"}), d};
}

MultiPoly LForms::l(int i) const {
  auto o = others(data.roots, {i});
  const Rat& a = data.roots[i];
  auto X = [&](int j) { return MultiPoly::var(alphabet, j); };
  return X(0) - X(1) * (2 * elem(o, 4)) + X(2) * (2 * elem(o, 3)) + X(3) * (2 * a * elem(o, 1)) - X(4) * (2 * a);
}

MultiPoly LForms::l_minus(int i, int j) const {
  auto o = others(data.roots, {i, j});
  auto X = [&](int k) { return MultiPoly::var(alphabet, k); };
  return X(1) * elem(o, 3) - X(2) * elem(o, 2) + X(3) * elem(o, 1) - X(4);
}

MultiPoly LForms::l_plus_printed(int i, int j) const {
  auto o = others(data.roots, {i, j});
  const Rat &a = data.roots[i], &b = data.roots[j];
  auto X = [&](int k) { return MultiPoly::var(alphabet, k); };
  return X(0) - l_minus(i, j) * (a + b) + X(2) * (2 * elem(o, 3)) + X(3) * (2 * a * b);
}

MultiPoly LForms::l_plus(int i, int j) const {
  auto o = others(data.roots, {i, j});
  const Rat &a = data.roots[i], &b = data.roots[j];
  auto X = [&](int k) { return MultiPoly::var(alphabet, k); };
  return X(0) - l_minus(i, j) * (a + b) + X(2) * (2 * elem(o, 3)) + X(3) * (2 * (a * b + (a + b) * elem(o, 1))) -
         X(4) * (2 * (a + b));
}

bool l_form_identity(const RootData& d, int i, int j, bool printed) {
  auto L = make_lforms(d);
  const Rat &a = d.roots[i], &b = d.roots[j];
  MultiPoly lp = printed ? L.l_plus_printed(i, j) : L.l_plus(i, j);
  return L.l(i).pow(2) - L.l(j).pow(2) == L.l_minus(i, j) * lp * (4 * (a - b));
}

}  // namespace rf
