#pragma once
#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "rollfac/hyperell.hpp"
#include "rollfac/k3class.hpp"
#include "rollfac_app/checks.hpp"

namespace rf::app::detail {

inline Rat small_rat(std::mt19937_64& rng, int range = 5) {
  std::uniform_int_distribution<int> d(-range, range);
  return Rat(d(rng));
}

inline BinaryForm random_form(std::mt19937_64& rng, int degree, int range = 5) {
  if (degree < 0) return BinaryForm();
  std::vector<Rat> c(degree + 1);
  for (auto& x : c) x = small_rat(rng, range);
  return BinaryForm(degree, c);
}

inline std::vector<int> random_scroll(std::mt19937_64& rng, int k, int max_e, int min_e = 0) {
  std::uniform_int_distribution<int> d(min_e, max_e);
  std::vector<int> e(k);
  for (auto& x : e) x = d(rng);
  std::sort(e.rbegin(), e.rend());
  return e;
}

// nonzero coefficients in [-97, 97]
inline BinaryForm generic_form(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<int> d(1, 97), sign(0, 1);
  std::vector<Rat> c(degree + 1);
  for (auto& x : c) x = Rat(sign(rng) ? d(rng) : -d(rng));
  return BinaryForm(degree, c);
}

// Random class aH - bR form with every admissible coefficient filled.
inline BihomForm random_bihom(std::mt19937_64& rng, const ScrollType& S, int a, int b, bool generic = false) {
  BihomForm P(S, {a, b});
  for (auto& I : multi_indices(S.k(), a)) {
    int d = P.weight(I) - b;
    if (d >= 0) P.set(I, generic ? generic_form(rng, d) : random_form(rng, d));
  }
  return P;
}

inline std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::ostringstream o;
  for (size_t i = 0; i < v.size(); ++i) o << (i ? sep : "") << v[i];
  return o.str();
}

inline std::string show(const ScrollType& S) { return "S(" + join(S.e()) + ")"; }

inline bool same_rows(const LiftingSystem& a, const LiftingSystem& b) {
  return a.cols == b.cols && a.rows == b.rows;
}

inline int count_true(const std::vector<bool>& v) { return static_cast<int>(std::count(v.begin(), v.end(), true)); }

}  // namespace rf::app::detail
