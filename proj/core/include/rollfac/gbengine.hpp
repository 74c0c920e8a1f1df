#pragma once
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rollfac/fppoly.hpp"

namespace rf::gb {

constexpr int kMaxVars = 24;

struct Mon {
  std::array<uint8_t, kMaxVars> e{};
  int deg = 0;
  bool operator==(const Mon& o) const { return deg == o.deg && e == o.e; }
};

struct Term {
  Mon m;
  uint32_t c;
};

// Terms sorted by descending grevlex.
struct Poly {
  std::vector<Term> t;
  int sugar = 0;
  bool zero() const { return t.empty(); }
  const Mon& lm() const { return t.front().m; }
};

bool grevlex_greater(const Mon& a, const Mon& b, int nvars);

struct GBasis {
  uint32_t p = 0;
  int nvars = 0;
  std::vector<std::string> names;
  std::vector<Poly> basis;  // reduced, sorted by leading monomial
  size_t pairs_processed = 0;

  // Krull dimension of R/I (affine cone) and degree from the Hilbert series of the staircase.
  int krull_dim() const;
  std::string degree_str() const;
  long degree() const;
  std::string poly_str(const Poly& f) const;
};

Poly from_fp(const FpPoly& f, int nvars);
Poly normal_form(const Poly& f, const std::vector<Poly>& G, uint32_t p, int nvars);
GBasis buchberger(const std::vector<FpPoly>& gens);
// Every S-polynomial of the basis reduces to zero and every generator has normal form zero.
bool verify_basis(const GBasis& B, const std::vector<FpPoly>& gens);

struct HilbertData {
  int krull_dim = 0;
  long degree = 0;
};
HilbertData hilbert_data(const GBasis& B);
// Numerator of the Hilbert series of R/(monomials), R in n variables.
std::vector<long> hilbert_numerator(std::vector<Mon> gens, int nvars);

enum class Verdict { Pass, Inconclusive, Fail };
std::string to_string(Verdict v);

struct PrimeReport {
  uint32_t prime;
  int krull_dim;
  long degree;
  size_t basis_size;
  double ms;
  bool ok = true;  // false when the prime divides a denominator
};

struct Certificate {
  Verdict verdict;
  std::vector<PrimeReport> reports;
};

PrimeReport run_prime(const std::vector<MultiPoly>& gens, uint32_t p);
Certificate two_prime_certify(const std::vector<MultiPoly>& gens, int expect_dim, long expect_deg,
                              uint32_t p1 = 31991, uint32_t p2 = 32003);

}  // namespace rf::gb
