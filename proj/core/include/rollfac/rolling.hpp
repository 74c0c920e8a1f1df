#pragma once
#include <map>
#include <random>
#include <vector>

#include "rollfac/binary_form.hpp"
#include "rollfac/scroll.hpp"

namespace rf {

struct DivisorClass {
  int a = 2;
  int b = 0;
};

using MultiIndex = std::vector<int>;

// Equation of class aH - bR: sum over |I| = a of p_I(s,t) z^I with deg p_I = <e,I> - b.
struct BihomForm {
  ScrollType scroll;
  DivisorClass cls;
  std::map<MultiIndex, BinaryForm> terms;

  BihomForm() = default;
  BihomForm(ScrollType S, DivisorClass c) : scroll(std::move(S)), cls(c) {}

  int weight(const MultiIndex& I) const;  // <e,I>
  void set(const MultiIndex& I, BinaryForm f);
  const BinaryForm* get(const MultiIndex& I) const;
  void validate() const;
  // sum p_I(s,t) z^I over the fiber alphabet
  MultiPoly as_fiber_poly() const;
};

std::vector<MultiIndex> multi_indices(int k, int a);

struct TermKey {
  MultiIndex I;
  int j;
  auto operator<=>(const TermKey&) const = default;
};

// For each term, the factor variables (ascending) and, per level m = 0..b, their lower indices.
struct RollingScheme {
  std::map<TermKey, std::vector<std::vector<int>>> levels;
};

std::vector<int> factor_vars(const MultiIndex& I);

RollingScheme canonical_scheme(const BihomForm& P);  // greedy fill of the first factor
RollingScheme balanced_scheme(const BihomForm& P);   // keep factor indices as even as possible
RollingScheme random_scheme(const BihomForm& P, std::mt19937_64& rng);
void validate_scheme(const BihomForm& P, const RollingScheme& sch);  // throws std::invalid_argument

std::vector<MultiPoly> roll_equations(const BihomForm& P, const RollingScheme& sch);
// p_{alpha,m}: P_m = sum p_{alpha,m} z_alpha and P_{m+1} = sum p_{alpha,m} z_{alpha+1}; 0 <= m < b.
std::map<ColumnIndex, MultiPoly> rolled_coefficients(const BihomForm& P, const RollingScheme& sch, int m);
bool check_roll_consistency(const BihomForm& P, const RollingScheme& s1, const RollingScheme& s2);

}  // namespace rf
