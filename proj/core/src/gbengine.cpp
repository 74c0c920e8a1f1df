#include "rollfac/gbengine.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

namespace rf::gb {

bool grevlex_greater(const Mon& a, const Mon& b, int nvars) {
  if (a.deg != b.deg) return a.deg > b.deg;
  for (int i = nvars - 1; i >= 0; --i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
  return false;
}

namespace {

using u64 = uint64_t;

bool divides(const Mon& a, const Mon& b, int n) {
  if (a.deg > b.deg) return false;
  for (int i = 0; i < n; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

Mon lcm(const Mon& a, const Mon& b, int n) {
  Mon r;
  for (int i = 0; i < n; ++i) {
    r.e[i] = std::max(a.e[i], b.e[i]);
    r.deg += r.e[i];
  }
  return r;
}

Mon quot(const Mon& a, const Mon& b, int n) {
  Mon r;
  for (int i = 0; i < n; ++i) r.e[i] = static_cast<uint8_t>(a.e[i] - b.e[i]);
  r.deg = a.deg - b.deg;
  return r;
}

Mon mul(const Mon& a, const Mon& b, int n) {
  Mon r;
  for (int i = 0; i < n; ++i) {
    int x = a.e[i] + b.e[i];
    if (x > 255) throw std::overflow_error("gbengine: exponent overflow");
    r.e[i] = static_cast<uint8_t>(x);
  }
  r.deg = a.deg + b.deg;
  return r;
}

bool coprime(const Mon& a, const Mon& b, int n) {
  for (int i = 0; i < n; ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

void make_monic(Poly& f, uint32_t p) {
  if (f.zero()) return;
  u64 inv = fp_inv(f.t.front().c, p);
  for (auto& x : f.t) x.c = static_cast<uint32_t>(x.c * inv % p);
}

// a - c * mono * b, both sorted
void sub_mul(std::vector<Term>& out, const std::vector<Term>& a, size_t a_from, const std::vector<Term>& b,
             const Mon& mono, u64 c, uint32_t p, int n) {
  out.clear();
  out.reserve(a.size() - a_from + b.size());
  size_t i = a_from, j = 0;
  Mon bm;
  bool have = false;
  while (i < a.size() || j < b.size()) {
    if (j < b.size() && !have) {
      bm = mul(b[j].m, mono, n);
      have = true;
    }
    if (j >= b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    if (i >= a.size() || grevlex_greater(bm, a[i].m, n)) {
      uint32_t v = static_cast<uint32_t>((p - c * b[j].c % p) % p);
      if (v) out.push_back({bm, v});
      ++j;
      have = false;
    } else if (bm == a[i].m) {
      uint32_t v = static_cast<uint32_t>((a[i].c + p - c * b[j].c % p) % p);
      if (v) out.push_back({bm, v});
      ++i;
      ++j;
      have = false;
    } else {
      out.push_back(a[i++]);
    }
  }
}

const Poly* find_reducer(const Mon& m, const std::vector<Poly>& G, int n) {
  for (auto& g : G)
    if (divides(g.lm(), m, n)) return &g;
  return nullptr;
}

}  // namespace

Poly from_fp(const FpPoly& f, int nvars) {
  Poly r;
  for (auto& [e, c] : f.terms) {
    Mon m;
    for (int i = 0; i < nvars; ++i) {
      if (e[i] > 255) throw std::overflow_error("gbengine: exponent overflow");
      m.e[i] = static_cast<uint8_t>(e[i]);
      m.deg += e[i];
    }
    r.t.push_back({m, c});
  }
  std::sort(r.t.begin(), r.t.end(), [&](const Term& a, const Term& b) { return grevlex_greater(a.m, b.m, nvars); });
  r.sugar = r.t.empty() ? 0 : r.t.front().m.deg;
  for (auto& x : r.t) r.sugar = std::max(r.sugar, x.m.deg);
  return r;
}

Poly normal_form(const Poly& f, const std::vector<Poly>& G, uint32_t p, int n) {
  Poly r;
  r.sugar = f.sugar;
  std::vector<Term> cur = f.t, tmp;
  size_t pos = 0;
  while (pos < cur.size()) {
    const Poly* g = find_reducer(cur[pos].m, G, n);
    if (!g) {
      r.t.push_back(cur[pos++]);
      continue;
    }
    Mon q = quot(cur[pos].m, g->lm(), n);
    u64 c = cur[pos].c;  // reducers are monic
    r.sugar = std::max(r.sugar, g->sugar + q.deg);
    sub_mul(tmp, cur, pos, g->t, q, c, p, n);
    cur.swap(tmp);
    pos = 0;
  }
  return r;
}

namespace {

struct Pair {
  int i, j;
  Mon lcm;
  int sugar;
};

Poly spoly(const Poly& a, const Poly& b, const Mon& l, uint32_t p, int n) {
  Mon qa = quot(l, a.lm(), n), qb = quot(l, b.lm(), n);
  std::vector<Term> ta, out;
  ta.reserve(a.t.size());
  for (size_t k = 1; k < a.t.size(); ++k) ta.push_back({mul(a.t[k].m, qa, n), a.t[k].c});
  std::vector<Term> tb(b.t.begin() + 1, b.t.end());
  sub_mul(out, ta, 0, tb, qb, 1, p, n);
  Poly s;
  s.t = std::move(out);
  s.sugar = std::max(a.sugar + qa.deg, b.sugar + qb.deg);
  return s;
}

}  // namespace

GBasis buchberger(const std::vector<FpPoly>& gens) {
  GBasis B;
  if (gens.empty()) throw std::invalid_argument("buchberger: no generators");
  B.p = gens.front().p;
  B.names = gens.front().alphabet->names;
  B.nvars = static_cast<int>(B.names.size());
  if (B.nvars > kMaxVars) throw std::invalid_argument("buchberger: too many variables");
  int n = B.nvars;
  uint32_t p = B.p;

  std::vector<Poly> G;
  std::vector<bool> live;
  std::vector<Pair> pairs;

  auto insert = [&](Poly h) {
    make_monic(h, p);
    int hi = static_cast<int>(G.size());
    const Mon& hm = h.lm();
    // chain criterion on existing pairs
    std::vector<Pair> kept;
    for (auto& pr : pairs) {
      if (divides(hm, pr.lcm, n) && !(lcm(G[pr.i].lm(), hm, n) == pr.lcm) && !(lcm(G[pr.j].lm(), hm, n) == pr.lcm))
        continue;
      kept.push_back(pr);
    }
    pairs.swap(kept);
    // new pairs with M and F criteria
    std::vector<Pair> fresh;
    for (int i = 0; i < hi; ++i) {
      if (!live[i]) continue;
      Mon l = lcm(G[i].lm(), hm, n);
      int s = std::max(G[i].sugar + (l.deg - G[i].lm().deg), h.sugar + (l.deg - hm.deg));
      fresh.push_back({i, hi, l, s});
    }
    std::vector<Pair> sel;
    for (size_t a = 0; a < fresh.size(); ++a) {
      bool drop = false;
      for (size_t c = 0; c < fresh.size() && !drop; ++c) {
        if (a == c) continue;
        if (divides(fresh[c].lcm, fresh[a].lcm, n) && !(fresh[c].lcm == fresh[a].lcm)) drop = true;
        else if (fresh[c].lcm == fresh[a].lcm && c < a) drop = true;
      }
      if (drop) continue;
      // product criterion: if any pair with this lcm is coprime, the whole class is discarded
      bool cop = false;
      for (auto& q : fresh)
        if (q.lcm == fresh[a].lcm && coprime(G[q.i].lm(), hm, n)) cop = true;
      if (!cop) sel.push_back(fresh[a]);
    }
    for (auto& q : sel) pairs.push_back(q);
    for (int i = 0; i < hi; ++i)
      if (live[i] && divides(hm, G[i].lm(), n)) live[i] = false;
    G.push_back(std::move(h));
    live.push_back(true);
  };

  auto reducers = [&]() {
    std::vector<Poly> R;
    for (size_t i = 0; i < G.size(); ++i)
      if (live[i]) R.push_back(G[i]);
    return R;
  };

  // seed with sorted, reduced inputs
  std::vector<Poly> in;
  for (auto& f : gens) {
    if (f.p != p) throw std::invalid_argument("buchberger: mixed primes");
    Poly q = from_fp(f, n);
    if (!q.zero()) in.push_back(std::move(q));
  }
  std::sort(in.begin(), in.end(), [&](const Poly& a, const Poly& b) { return grevlex_greater(b.lm(), a.lm(), n); });
  for (auto& f : in) {
    Poly h = normal_form(f, reducers(), p, n);
    if (!h.zero()) insert(std::move(h));
  }

  std::vector<Poly> R = reducers();
  size_t seen = G.size();
  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      return grevlex_greater(b.lcm, a.lcm, n);
    });
    Pair pr = *best;
    pairs.erase(best);
    ++B.pairs_processed;
    if (G.size() != seen) {
      R = reducers();
      seen = G.size();
    }
    Poly s = spoly(G[pr.i], G[pr.j], pr.lcm, p, n);
    Poly h = normal_form(s, R, p, n);
    if (h.zero()) continue;
    if (h.lm().deg == 0) {  // unit ideal
      G.clear();
      live.clear();
      pairs.clear();
      Poly one;
      one.t.push_back({Mon{}, 1});
      G.push_back(one);
      live.push_back(true);
      break;
    }
    insert(std::move(h));
  }

  // minimal then reduced
  std::vector<Poly> M = reducers();
  std::sort(M.begin(), M.end(), [&](const Poly& a, const Poly& b) { return grevlex_greater(b.lm(), a.lm(), n); });
  std::vector<Poly> out;
  for (size_t i = 0; i < M.size(); ++i) {
    std::vector<Poly> others;
    for (size_t j = 0; j < M.size(); ++j)
      if (j != i) others.push_back(M[j]);
    Poly tail;
    tail.t.assign(M[i].t.begin() + 1, M[i].t.end());
    tail.sugar = M[i].sugar;
    Poly red = normal_form(tail, others, p, n);
    Poly f;
    f.sugar = M[i].sugar;
    f.t.push_back(M[i].t.front());
    f.t.insert(f.t.end(), red.t.begin(), red.t.end());
    out.push_back(std::move(f));
  }
  B.basis = std::move(out);
  return B;
}

bool verify_basis(const GBasis& B, const std::vector<FpPoly>& gens) {
  int n = B.nvars;
  for (auto& f : gens)
    if (!normal_form(from_fp(f, n), B.basis, B.p, n).zero()) return false;
  for (size_t i = 0; i < B.basis.size(); ++i)
    for (size_t j = i + 1; j < B.basis.size(); ++j) {
      if (coprime(B.basis[i].lm(), B.basis[j].lm(), n)) continue;
      Mon l = lcm(B.basis[i].lm(), B.basis[j].lm(), n);
      if (!normal_form(spoly(B.basis[i], B.basis[j], l, B.p, n), B.basis, B.p, n).zero()) return false;
    }
  return true;
}

std::string GBasis::poly_str(const Poly& f) const {
  if (f.zero()) return "0";
  std::ostringstream os;
  for (size_t k = 0; k < f.t.size(); ++k) {
    if (k) os << " + ";
    os << f.t[k].c;
    for (int i = 0; i < nvars; ++i)
      if (f.t[k].m.e[i]) os << "*" << names[i] << (f.t[k].m.e[i] > 1 ? "^" + std::to_string(f.t[k].m.e[i]) : "");
  }
  return os.str();
}

HilbertData hilbert_data(const GBasis& B) {
  std::vector<Mon> lead;
  for (auto& f : B.basis) lead.push_back(f.lm());
  HilbertData h;
  for (auto& m : lead)
    if (m.deg == 0) {
      h.krull_dim = -1;
      h.degree = 0;
      return h;
    }
  auto num = hilbert_numerator(lead, B.nvars);
  int dim = B.nvars;
  // divide by (1 - t) while possible
  for (;;) {
    long s = 0;
    for (long c : num) s += c;
    if (s != 0 || num.empty()) break;
    std::vector<long> q(num.size() - 1);
    long acc = 0;
    for (size_t i = 0; i + 1 < num.size(); ++i) {
      acc += num[i];
      q[i] = acc;
    }
    num = q;
    --dim;
  }
  long deg = 0;
  for (long c : num) deg += c;
  h.krull_dim = dim;
  h.degree = deg;
  return h;
}

int GBasis::krull_dim() const { return hilbert_data(*this).krull_dim; }
long GBasis::degree() const { return hilbert_data(*this).degree; }
std::string GBasis::degree_str() const { return std::to_string(degree()); }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
    case Verdict::Fail: return "FAIL";
  }
  return "?";
}

PrimeReport run_prime(const std::vector<MultiPoly>& gens, uint32_t p) {
  PrimeReport r{p, -2, 0, 0, 0.0};
  std::vector<FpPoly> fp;
  try {
    for (auto& g : gens) fp.push_back(reduce_mod(g, p));
  } catch (const BadPrime&) {
    r.ok = false;
    return r;
  }
  auto t0 = std::chrono::steady_clock::now();
  GBasis B = buchberger(fp);
  auto h = hilbert_data(B);
  r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  r.krull_dim = h.krull_dim;
  r.degree = h.degree;
  r.basis_size = B.basis.size();
  return r;
}

Certificate two_prime_certify(const std::vector<MultiPoly>& gens, int expect_dim, long expect_deg, uint32_t p1,
                              uint32_t p2) {
  if (p1 == p2) throw std::invalid_argument("two_prime_certify: primes must differ");
  Certificate c;
  c.reports = {run_prime(gens, p1), run_prime(gens, p2)};
  auto& a = c.reports[0];
  auto& b = c.reports[1];
  auto match = [&](const PrimeReport& r) { return r.ok && r.krull_dim == expect_dim && r.degree == expect_deg; };
  if (match(a) && match(b)) c.verdict = Verdict::Pass;
  else if (a.ok && b.ok && a.krull_dim == b.krull_dim && a.degree == b.degree) c.verdict = Verdict::Fail;
  else c.verdict = Verdict::Inconclusive;
  return c;
}

}  // namespace rf::gb
