#include <stdexcept>

#include "rollfac/liftdef.hpp"

namespace rf {

namespace {

using FiberMap = std::map<Exponent, BinaryForm>;

// Group a polynomial over {s,t,fiber...} by fiber monomial; nullopt when a group is not (s,t)-homogeneous.
std::optional<FiberMap> by_fiber(const MultiPoly& R) {
  FiberMap out;
  std::map<Exponent, int> deg;
  for (auto& [e, c] : R.terms()) {
    Exponent f(e.begin() + 2, e.end());
    int d = e[0] + e[1];
    auto [it, ins] = deg.emplace(f, d);
    if (!ins && it->second != d) return std::nullopt;
  }
  for (auto& [f, d] : deg) out[f] = BinaryForm(d);
  for (auto& [e, c] : R.terms()) out[Exponent(e.begin() + 2, e.end())].coeff(e[1]) = c;
  return out;
}

MultiPoly st_mono(const AlphabetPtr& A, int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("trigonal_nonscrollar: negative exponent");
  Exponent e(A->size(), 0);
  e[0] = a;
  e[1] = b;
  return MultiPoly::monomial(A, e);
}

MultiPoly bf_poly(const AlphabetPtr& A, const BinaryForm& f) {
  MultiPoly r(A);
  for (int j = 0; j <= f.degree(); ++j) r += st_mono(A, f.degree() - j, j) * f.coeff(j);
  return r;
}

}  // namespace

std::optional<BinaryForm> binary_multiple(const MultiPoly& R, const MultiPoly& F) {
  if (R.is_zero()) return BinaryForm();
  auto rm = by_fiber(R), fm = by_fiber(F);
  if (!rm || !fm || fm->empty()) return std::nullopt;
  auto& [f0, F0] = *fm->begin();
  auto it = rm->find(f0);
  if (it == rm->end()) return std::nullopt;
  auto psi = divide_exact(it->second, F0);
  if (!psi) return std::nullopt;
  if (bf_poly(R.alphabet(), *psi) * F != R) return std::nullopt;
  return psi;
}

NonScrollarGenerator trigonal_nonscrollar(const BihomForm& F, int gamma, int family) {
  const auto& S = F.scroll;
  if (S.k() != 2 || F.cls.a != 3) throw std::invalid_argument("trigonal_nonscrollar: cubic on a two-variable scroll");
  int u = family, v = 1 - family;
  int eu = S.e(u), ev = S.e(v);
  if (gamma < 0 || gamma > eu - 2) throw std::invalid_argument("trigonal_nonscrollar: gamma out of range");
  auto& A = S.fiber();
  MultiIndex Iu(2, 0);
  Iu[u] = 3;
  BinaryForm Au = F.get(Iu) ? *F.get(Iu) : BinaryForm();
  int dA = S.e(u) * 3 - F.cls.b;
  if (dA < gamma) throw std::invalid_argument("trigonal_nonscrollar: decomposition of A impossible");
  BinaryForm Ap(gamma), Am(dA - gamma - 1);
  for (int j = 0; j <= dA && !Au.is_zero(); ++j) {
    if (j <= gamma) Ap.coeff(j) = Au.coeff(j);
    else Am.coeff(j - gamma - 1) = Au.coeff(j);
  }
  MultiPoly Fp = F.as_fiber_poly();
  MultiPoly uvar = MultiPoly::var(A, 2 + u), vvar = MultiPoly::var(A, 2 + v);
  MultiPoly rest = Fp - bf_poly(A, Au) * uvar.pow(3);
  // E = rest / v
  MultiPoly E(A);
  for (auto& [e, c] : rest.terms()) {
    if (e[2 + v] == 0) throw std::logic_error("trigonal_nonscrollar: remainder not divisible by v");
    Exponent f = e;
    --f[2 + v];
    E.add_term(f, c);
  }
  NonScrollarGenerator gen;
  gen.family = family;
  gen.gamma = gamma;
  auto u2 = uvar.pow(2);
  auto put = [&](ColumnIndex a, ColumnIndex b, MultiPoly val) {
    if (b < a) {
      std::swap(a, b);
      val = -val;
    }
    gen.phi[{a, b}] = std::move(val);
  };
  for (int i = 0; i < eu; ++i)
    for (int j = i + 1; j < eu; ++j) {
      MultiPoly val(A);
      if (i <= gamma && gamma < j) val = st_mono(A, eu - i - j - 1 + gamma, i + j - gamma - 1) * E;
      put({u, i}, {u, j}, val);
    }
  for (int i = 0; i < ev; ++i)
    for (int j = i + 1; j < ev; ++j) put({v, i}, {v, j}, MultiPoly(A));
  for (int i = 0; i < eu; ++i)
    for (int k = 0; k < ev; ++k) {
      MultiPoly val(A);
      if (i <= gamma) val = -(st_mono(A, ev - 1 - k - i + gamma, i + k) * bf_poly(A, Am) * u2);
      else val = st_mono(A, 2 * eu + 1 - i - k, i + k - gamma - 1) * bf_poly(A, Ap) * u2;
      // h_{ik} = u_i v_{k+1} - u_{i+1} v_k is f for the column pair (u i, v k)
      put({u, i}, {v, k}, val);
    }
  return gen;
}

std::vector<NonScrollarGenerator> trigonal_nonscrollar_all(const BihomForm& F) {
  std::vector<NonScrollarGenerator> out;
  for (int fam = 0; fam < 2; ++fam)
    for (int g = 0; g <= F.scroll.e(fam) - 2; ++g) out.push_back(trigonal_nonscrollar(F, g, fam));
  return out;
}

bool verify_nonscrollar(const BihomForm& F, const NonScrollarGenerator& gen, std::string* why) {
  const auto& S = F.scroll;
  auto& A = S.fiber();
  MultiPoly Fp = F.as_fiber_poly();
  auto cols = S.columns();
  auto param = [&](ColumnIndex c, int shift) {
    return st_mono(A, S.e(c.var) - c.low - shift, c.low + shift) * MultiPoly::var(A, 2 + c.var);
  };
  auto phi = [&](ColumnIndex a, ColumnIndex b) -> const MultiPoly& { return gen.phi.at({a, b}); };
  for (size_t a = 0; a < cols.size(); ++a)
    for (size_t b = a + 1; b < cols.size(); ++b)
      for (size_t c = b + 1; c < cols.size(); ++c)
        for (int shift = 0; shift < 2; ++shift) {
          MultiPoly R = param(cols[a], shift) * phi(cols[b], cols[c]) - param(cols[b], shift) * phi(cols[a], cols[c]) +
                        param(cols[c], shift) * phi(cols[a], cols[b]);
          if (!binary_multiple(R, Fp)) {
            if (why)
              *why = "relation (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                     (shift ? ") bottom" : ") top") + " not in (F)";
            return false;
          }
        }
  return true;
}

}  // namespace rf
