#pragma once
#include <cstdint>
#include <map>
#include <stdexcept>

#include "rollfac/multipoly.hpp"

namespace rf {

struct BadPrime : std::domain_error {
  using std::domain_error::domain_error;
};

// Sparse polynomial with coefficients in F_p.
struct FpPoly {
  uint32_t p = 0;
  AlphabetPtr alphabet;
  std::map<Exponent, uint32_t> terms;
};

uint32_t fp_inv(uint32_t a, uint32_t p);
uint32_t fp_of(const Rat& q, uint32_t p);  // throws BadPrime when p divides the denominator
FpPoly reduce_mod(const MultiPoly& f, uint32_t p);

}  // namespace rf
