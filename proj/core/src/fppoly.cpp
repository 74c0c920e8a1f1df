#include "rollfac/fppoly.hpp"

namespace rf {

uint32_t fp_inv(uint32_t a, uint32_t p) {
  int64_t t = 0, nt = 1, r = p, nr = a % p;
  if (nr == 0) throw BadPrime("inverse of zero");
  while (nr) {
    int64_t q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (t < 0) t += p;
  return static_cast<uint32_t>(t);
}

uint32_t fp_of(const Rat& q, uint32_t p) {
  mpz_class P = p;
  mpz_class n = q.get_num() % P, d = q.get_den() % P;
  if (n < 0) n += P;
  if (d == 0) throw BadPrime("prime " + std::to_string(p) + " divides a denominator");
  uint64_t num = n.get_ui(), den = d.get_ui();
  return static_cast<uint32_t>(num * fp_inv(static_cast<uint32_t>(den), p) % p);
}

FpPoly reduce_mod(const MultiPoly& f, uint32_t p) {
  FpPoly r;
  r.p = p;
  r.alphabet = f.alphabet();
  for (auto& [e, c] : f.terms()) {
    uint32_t v = fp_of(c, p);
    if (v) r.terms[e] = v;
  }
  return r;
}

}  // namespace rf
