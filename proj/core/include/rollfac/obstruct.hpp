#pragma once
#include <vector>

#include "rollfac/liftdef.hpp"

namespace rf {

// Quadratic base equations, pi[n][m-1] for equation n and 1 <= m <= b_n - 1, over vars.alphabet.
struct BaseSystem {
  DeformVars vars;
  LiftingSystem lifting;
  std::vector<std::vector<MultiPoly>> pi;
  std::vector<MultiPoly> pi0, pib;  // pseudo-equations at m = 0 and m = b

  size_t num_quadrics() const;
  BaseSystem normalized() const;
};

struct SSolution {
  MultiPoly P0, Pb;        // over ambient + zeta
  LiftingSystem middle;    // unsplittable middle band
};

AlphabetPtr prime_alphabet(const DeformVars& v);  // ambient coordinates then zeta
SSolution solve_S(const BihomForm& P, const RollingScheme& sch, const DeformVars& v, int eq = 0);
// s^b param(P_b') - t^b param(P_0') + middle band == rhs_S
bool check_S_reconstruction(const BihomForm& P, const RollingScheme& sch, const DeformVars& v, const SSolution& sol);
std::vector<MultiPoly> intermediate_primes(const BihomForm& P, const RollingScheme& sch, const DeformVars& v,
                                           const SSolution& sol);
// Per level m = 0..b: sum of rho_r zeta_{m+r} over the pure rolling variables of equation eq.
std::vector<MultiPoly> pure_rolling_terms(const BihomForm& P, const DeformVars& v, int eq = 0);
// Replace ambient coordinates by zeta (dummies to 0); result over v.alphabet.
MultiPoly to_zeta(const MultiPoly& f, const DeformVars& v);

BaseSystem base_equations(const BihomForm& P, const RollingScheme& sch, const DeformVars& v, int eq = 0);
BaseSystem tetragonal_base_system(const BihomForm& P, const BihomForm& Q, const RollingScheme& sp,
                                  const RollingScheme& sq);
BaseSystem tetragonal_base_system(const BihomForm& P, const BihomForm& Q);

// Closed-form coefficient of p_{xy,k} in pi_m; x, y are fiber variables with e_x >= e_y.
MultiPoly closed_form_term(const DeformVars& v, int x, int y, int b, int k, int m);
// Closed-form system for P = p(s,t) x y (plus pure rolling terms when e_x >= b).
BaseSystem closed_form_system(const BihomForm& P, int x, int y);

bool equivalent_base(const BaseSystem& a, const BaseSystem& b);

// Family eq written as pi_m = sum_r rho_r L_{r,m} + chi_m. Rows of the matrix: chi, then L_r per pure rolling
// variable; columns m = 1..b-1. Variables in zero_vars are set to 0 first. minors are the maximal minors.
struct RhoElimination {
  std::vector<std::vector<MultiPoly>> matrix;
  std::vector<MultiPoly> minors;
};
RhoElimination rho_elimination(const BaseSystem& sys, int eq, const std::vector<std::string>& zero_vars = {});
MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m);
// sum_j p_j pi_{i+j} in the span of lifting multiples for 0 < i < b - k.
bool linear_relations_check(const BihomForm& P, const BaseSystem& base, bool exact = false);

}  // namespace rf
