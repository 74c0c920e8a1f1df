#include "rollfac/obstruct.hpp"

#include <algorithm>
#include <stdexcept>

namespace rf {

size_t BaseSystem::num_quadrics() const {
  size_t n = 0;
  for (auto& f : pi) n += f.size();
  return n;
}

BaseSystem BaseSystem::normalized() const {
  BaseSystem r = *this;
  for (auto& fam : r.pi)
    for (auto& f : fam) f = f.normalized();
  return r;
}

AlphabetPtr prime_alphabet(const DeformVars& v) { return concat(v.scroll.ambient(), v.zeta_alphabet); }

namespace {

int zeta_of_exponent(const Exponent& e, size_t from) {
  for (size_t i = from; i < e.size(); ++i)
    if (e[i]) return static_cast<int>(i - from);
  return -1;
}

MultiPoly coord_times_zeta(const AlphabetPtr& A, const ScrollType& S, int var, int idx, int zi, const Rat& c) {
  Exponent e(A->size(), 0);
  ++e[S.coord(var, idx)];
  ++e[S.num_coords() + zi];
  return MultiPoly::monomial(A, e, c);
}

}  // namespace

SSolution solve_S(const BihomForm& P, const RollingScheme& sch, const DeformVars& v, int eq) {
  if (P.cls.a != 2) throw std::invalid_argument("solve_S: quadrics only");
  auto A = prime_alphabet(v);
  const auto& S = P.scroll;
  int b = P.cls.b, k = S.k();
  SSolution sol{MultiPoly(A), MultiPoly(A), lifting_from_S(P, sch, v, eq)};
  auto R = rhs_S(P, sch, v);
  for (auto& [e, c] : R.terms()) {
    int Aexp = e[0], B = e[1];
    int var = -1;
    for (int i = 0; i < k; ++i)
      if (e[2 + i]) var = i;
    int zi = zeta_of_exponent(e, 2 + k);
    if (B >= b) sol.P0 -= coord_times_zeta(A, S, var, B - b, zi, c);
    else if (Aexp >= b) sol.Pb += coord_times_zeta(A, S, var, B, zi, c);
  }
  return sol;
}

bool check_S_reconstruction(const BihomForm& P, const RollingScheme& sch, const DeformVars& v, const SSolution& sol) {
  auto SA = s_alphabet(v);
  int b = P.cls.b;
  auto lift = [&](const MultiPoly& f, int a, int c) {
    MultiPoly p = parametrize(P.scroll, f).rebase(SA);
    Exponent e(SA->size(), 0);
    e[0] = a;
    e[1] = c;
    return p * MultiPoly::monomial(SA, e);
  };
  MultiPoly lhs = lift(sol.Pb, b, 0) - lift(sol.P0, 0, b);
  // middle band rows back to monomials s^{w+n} t^{b-n} z^I zeta
  int k = P.scroll.k();
  for (auto& row : sol.middle.rows) {
    for (size_t zi = 0; zi < row.coeffs.size(); ++zi) {
      if (row.coeffs[zi] == 0) continue;
      Exponent e(SA->size(), 0);
      e[0] = P.weight(row.I) + row.n;
      e[1] = b - row.n;
      for (int i = 0; i < k; ++i) e[2 + i] = row.I[i];
      ++e[2 + k + zi];
      lhs.add_term(e, row.coeffs[zi]);
    }
  }
  return lhs == rhs_S(P, sch, v);
}

std::vector<MultiPoly> intermediate_primes(const BihomForm& P, const RollingScheme& sch, const DeformVars& v,
                                           const SSolution& sol) {
  const auto& S = P.scroll;
  int b = P.cls.b, N = S.num_coords();
  // formal terms (var, idx, zeta) -> coefficient, idx may exceed e_var
  using Key = std::tuple<int, int, int>;
  std::map<Key, Rat> cur;
  auto coord_var = [&](int c) {
    for (int i = 0; i < S.k(); ++i)
      if (S.coord(i, 0) <= c && c <= S.coord(i, S.e(i))) return std::pair{i, c - S.coord(i, 0)};
    throw std::logic_error("coordinate lookup");
  };
  auto add = [&](std::map<Key, Rat>& m, Key key, const Rat& c) {
    auto& x = m[key];
    x += c;
    if (x == 0) m.erase(key);
  };
  for (auto& [e, c] : sol.P0.terms()) {
    int ci = -1;
    for (int i = 0; i < N; ++i)
      if (e[i]) ci = i;
    auto [var, idx] = coord_var(ci);
    add(cur, {var, idx, zeta_of_exponent(e, N)}, c);
  }
  auto A = prime_alphabet(v);
  auto emit = [&](const std::map<Key, Rat>& m) {
    MultiPoly f(A);
    for (auto& [key, c] : m) {
      auto [var, idx, zi] = key;
      if (idx > S.e(var)) continue;
      f += coord_times_zeta(A, S, var, idx, zi, c);
    }
    return f;
  };
  std::vector<MultiPoly> out{emit(cur)};
  for (int m = 0; m < b; ++m) {
    std::map<Key, Rat> next;
    for (auto& [key, c] : cur) add(next, {std::get<0>(key), std::get<1>(key) + 1, std::get<2>(key)}, c);
    for (auto& [alpha, p] : rolled_coefficients(P, sch, m)) {
      int zi = v.zeta(alpha.var, alpha.low + 1);
      if (zi < 0) continue;
      for (auto& [e, c] : p.terms()) {
        int ci = -1;
        for (int i = 0; i < N; ++i)
          if (e[i]) ci = i;
        auto [var, idx] = coord_var(ci);
        add(next, {var, idx, zi}, c);
      }
    }
    cur = std::move(next);
    out.push_back(emit(cur));
  }
  return out;
}

std::vector<MultiPoly> pure_rolling_terms(const BihomForm& P, const DeformVars& v, int eq) {
  int b = P.cls.b;
  std::vector<MultiPoly> out(b + 1, MultiPoly(v.alphabet));
  for (auto& r : v.rhos) {
    if (r.eq != eq) continue;
    for (int m = 0; m <= b; ++m) {
      int zi = v.zeta(r.var, m + r.r);
      if (zi < 0) continue;
      out[m] += MultiPoly::var(v.alphabet, r.index) * MultiPoly::var(v.alphabet, zi);
    }
  }
  return out;
}

MultiPoly to_zeta(const MultiPoly& f, const DeformVars& v) {
  const auto& S = v.scroll;
  auto& src = f.alphabet();
  std::vector<MultiPoly> imgs;
  std::vector<const MultiPoly*> ptrs(src->size(), nullptr);
  imgs.reserve(src->size());
  MultiPoly zero(v.alphabet);
  for (size_t i = 0; i < src->size(); ++i) {
    const auto& nm = src->names[i];
    int c = S.ambient()->index_of(nm);
    if (c >= 0) {
      for (int var = 0; var < S.k(); ++var)
        if (S.coord(var, 0) <= c && c <= S.coord(var, S.e(var))) {
          int zi = v.zeta(var, c - S.coord(var, 0));
          imgs.push_back(zi < 0 ? zero : MultiPoly::var(v.alphabet, zi));
        }
    } else {
      imgs.push_back(MultiPoly::var(v.alphabet, nm));
    }
    ptrs[i] = &imgs.back();
  }
  return f.substitute(ptrs, v.alphabet);
}

BaseSystem base_equations(const BihomForm& P, const RollingScheme& sch, const DeformVars& v, int eq) {
  if (P.cls.a != 2) throw std::invalid_argument("base_equations: quadrics only");
  int b = P.cls.b;
  auto sol = solve_S(P, sch, v, eq);
  auto primes = intermediate_primes(P, sch, v, sol);
  auto rolled = roll_equations(P, sch);
  auto pure = pure_rolling_terms(P, v, eq);
  BaseSystem sys;
  sys.vars = v;
  sys.lifting = lifting_matrix({P}, v);
  for (auto& r : sys.lifting.rows) r.eq = eq;
  sys.pi.resize(1);
  for (int m = 0; m <= b; ++m) {
    MultiPoly pm = to_zeta(primes[m], v) + pure[m] - to_zeta(rolled[m], v);
    if (m == 0) sys.pi0.push_back(pm);
    else if (m == b) sys.pib.push_back(pm);
    else sys.pi[0].push_back(pm);
  }
  return sys;
}

BaseSystem tetragonal_base_system(const BihomForm& P, const BihomForm& Q, const RollingScheme& sp,
                                  const RollingScheme& sq) {
  auto v = make_deform_vars(P.scroll, {P.cls.b, Q.cls.b});
  auto a = base_equations(P, sp, v, 0);
  auto c = base_equations(Q, sq, v, 1);
  BaseSystem sys;
  sys.vars = v;
  sys.lifting = lifting_matrix({P, Q}, v);
  sys.pi = {a.pi[0], c.pi[0]};
  sys.pi0 = {a.pi0[0], c.pi0[0]};
  sys.pib = {a.pib[0], c.pib[0]};
  return sys;
}

BaseSystem tetragonal_base_system(const BihomForm& P, const BihomForm& Q) {
  return tetragonal_base_system(P, Q, canonical_scheme(P), canonical_scheme(Q));
}

MultiPoly closed_form_term(const DeformVars& v, int x, int y, int b, int k, int m) {
  int ex = v.scroll.e(x), ey = v.scroll.e(y);
  if (ex < ey) throw std::invalid_argument("closed_form_term: requires e_x >= e_y");
  if (k < 0 || k > ex + ey - b || m < 1 || m >= b) throw std::invalid_argument("closed_form_term: parameters out of range");
  MultiPoly r(v.alphabet);
  auto term = [&](int l, const Rat& c) {
    int xi = v.zeta(x, l), eta = v.zeta(y, k - l + m);
    if (xi < 0 || eta < 0) return;
    r += MultiPoly::var(v.alphabet, xi) * MultiPoly::var(v.alphabet, eta) * c;
  };
  if (ex < b) {
    if (m <= k) {
      for (int l = m; l <= k; ++l) term(l, -1);
    } else {
      for (int l = std::max(k + m - ey + 1, k + 1); l <= std::min(ex - 1, m - 1); ++l) term(l, 1);
    }
  } else {
    if (m <= k + b - ex) {
      for (int l = m + ex - b; l <= k; ++l) term(l, -1);
    } else {
      for (int l = std::max(k + m - ey + 1, k + 1); l <= std::min(ex - b + m - 1, k + m - 1); ++l) term(l, 1);
    }
  }
  return r;
}

BaseSystem closed_form_system(const BihomForm& P, int x, int y) {
  MultiIndex I(P.scroll.k(), 0);
  ++I[x];
  ++I[y];
  if (x == y || P.terms.size() != 1 || !P.get(I)) throw std::invalid_argument("closed_form_system: single xy monomial expected");
  auto v = make_deform_vars(P.scroll, {P.cls.b});
  const auto& p = *P.get(I);
  int b = P.cls.b;
  auto pure = pure_rolling_terms(P, v, 0);
  BaseSystem sys;
  sys.vars = v;
  sys.lifting = lifting_matrix({P}, v);
  sys.pi.resize(1);
  for (int m = 1; m < b; ++m) {
    MultiPoly f = pure[m];
    for (int kk = 0; kk <= p.degree(); ++kk)
      if (p.coeff(kk) != 0) f += closed_form_term(v, x, y, b, kk, m) * p.coeff(kk);
    sys.pi[0].push_back(f);
  }
  return sys;
}

namespace {

// Coordinates of tuples of quadrics: (slot, exponent) -> id.
struct QuadSpace {
  std::map<std::pair<int, Exponent>, long> ids;
  long id(int slot, const Exponent& e) {
    auto [it, ins] = ids.emplace(std::pair{slot, e}, static_cast<long>(ids.size()));
    return it->second;
  }
  void add(SparseVec& v, int slot, const MultiPoly& f) {
    for (auto& [e, c] : f.terms()) v[id(slot, e)] += c;
  }
};

struct Slots {
  std::vector<std::vector<int>> slot;  // slot[n][m-1]
  int count = 0;
};

Slots make_slots(const BaseSystem& s) {
  Slots sl;
  for (auto& fam : s.pi) {
    std::vector<int> v;
    for (size_t i = 0; i < fam.size(); ++i) v.push_back(sl.count++);
    sl.slot.push_back(v);
  }
  return sl;
}

void add_generators(SparseSpan& span, QuadSpace& Q, const BaseSystem& s, const Slots& sl,
                    const std::vector<LiftRow>& rows) {
  const auto& v = s.vars;
  int nv = static_cast<int>(v.alphabet->size());
  for (auto& row : rows) {
    MultiPoly rf = row_form(row, v);
    if (rf.is_zero()) continue;
    for (int x = 0; x < nv; ++x) {
      MultiPoly g = rf * MultiPoly::var(v.alphabet, x);
      for (int t = 0; t < sl.count; ++t) {
        SparseVec vec;
        Q.add(vec, t, g);
        span.add(std::move(vec));
      }
    }
  }
  for (auto& r : v.rhos) {
    if (r.eq >= static_cast<int>(s.pi.size())) continue;
    for (int x = 0; x < nv; ++x) {
      SparseVec vec;
      for (size_t mi = 0; mi < s.pi[r.eq].size(); ++mi) {
        int zi = v.zeta(r.var, static_cast<int>(mi) + 1 + r.r);
        if (zi < 0) continue;
        Q.add(vec, sl.slot[r.eq][mi], MultiPoly::var(v.alphabet, x) * MultiPoly::var(v.alphabet, zi));
      }
      span.add(std::move(vec));
    }
  }
}

}  // namespace

bool equivalent_base(const BaseSystem& a, const BaseSystem& b) {
  if (!(*a.vars.alphabet == *b.vars.alphabet)) throw std::invalid_argument("equivalent_base: variable mismatch");
  if (a.pi.size() != b.pi.size()) return false;
  for (size_t n = 0; n < a.pi.size(); ++n)
    if (a.pi[n].size() != b.pi[n].size()) return false;
  QuadSpace Q;
  SparseSpan span;
  auto sl = make_slots(a);
  add_generators(span, Q, a, sl, a.lifting.rows);
  add_generators(span, Q, a, sl, b.lifting.rows);
  SparseVec diff;
  for (size_t n = 0; n < a.pi.size(); ++n)
    for (size_t m = 0; m < a.pi[n].size(); ++m)
      Q.add(diff, sl.slot[n][m], a.pi[n][m] - b.pi[n][m].rebase(a.vars.alphabet));
  return span.contains(std::move(diff));
}

bool linear_relations_check(const BihomForm& P, const BaseSystem& base, bool exact) {
  if (P.terms.size() != 1) throw std::invalid_argument("linear_relations_check: single monomial expected");
  const auto& p = P.terms.begin()->second;
  int k = p.degree(), b = P.cls.b;
  const auto& pis = base.pi.at(0);
  QuadSpace Q;
  SparseSpan span;
  const auto& v = base.vars;
  if (!exact)
    for (auto& row : base.lifting.rows) {
      MultiPoly rf = row_form(row, v);
      for (size_t x = 0; x < v.alphabet->size(); ++x) {
        SparseVec vec;
        Q.add(vec, 0, rf * MultiPoly::var(v.alphabet, static_cast<int>(x)));
        span.add(std::move(vec));
      }
    }
  for (int i = 1; i < b - k; ++i) {
    MultiPoly rel(v.alphabet);
    for (int j = 0; j <= k; ++j) rel += pis[i + j - 1] * p.coeff(j);
    SparseVec vec;
    Q.add(vec, 0, rel);
    if (!span.contains(std::move(vec))) return false;
  }
  return true;
}

MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m) {
  size_t n = m.size();
  if (n == 0) throw std::invalid_argument("determinant: empty matrix");
  if (n == 1) return m[0][0];
  MultiPoly d = MultiPoly(m[0][0].alphabet());
  for (size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<MultiPoly>> sub;
    for (size_t r = 1; r < n; ++r) {
      sub.emplace_back();
      for (size_t k = 0; k < n; ++k)
        if (k != c) sub.back().push_back(m[r][k]);
    }
    MultiPoly t = m[0][c] * determinant(sub);
    if (c % 2) d -= t;
    else d += t;
  }
  return d;
}

RhoElimination rho_elimination(const BaseSystem& sys, int eq, const std::vector<std::string>& zero_vars) {
  const auto& A = sys.vars.alphabet;
  std::vector<MultiPoly> img;
  for (size_t i = 0; i < A->size(); ++i) img.push_back(MultiPoly::var(A, static_cast<int>(i)));
  for (auto& name : zero_vars) {
    int i = A->index_of(name);
    if (i < 0) throw std::invalid_argument("rho_elimination: unknown variable " + name);
    img[i] = MultiPoly(A);
  }
  std::vector<const MultiPoly*> ptr;
  for (auto& f : img) ptr.push_back(&f);
  std::vector<int> rhos;
  for (auto& r : sys.vars.rhos)
    if (r.eq == eq) rhos.push_back(r.index);
  RhoElimination out;
  out.matrix.assign(rhos.size() + 1, {});
  for (auto& f : sys.pi.at(eq)) {
    MultiPoly g = f.substitute(ptr, A);
    MultiPoly chi = g;
    for (size_t r = 0; r < rhos.size(); ++r) {
      MultiPoly lin = g.coefficient_of(rhos[r], 1);
      out.matrix[r + 1].push_back(lin);
      chi -= lin * MultiPoly::var(A, rhos[r]);
    }
    out.matrix[0].push_back(chi);
  }
  size_t rows = out.matrix.size(), cols = out.matrix[0].size();
  if (rows > cols) return out;
  std::vector<bool> pick(cols, false);
  std::fill(pick.begin(), pick.begin() + rows, true);
  do {
    std::vector<std::vector<MultiPoly>> sub(rows);
    for (size_t c = 0; c < cols; ++c)
      if (pick[c])
        for (size_t r = 0; r < rows; ++r) sub[r].push_back(out.matrix[r][c]);
    out.minors.push_back(determinant(sub));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

}  // namespace rf
