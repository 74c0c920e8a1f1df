#pragma once
#include <optional>
#include <vector>

#include "rollfac/obstruct.hpp"

namespace rf {

// Reduced system of the cone over a hyperelliptic curve embedded by n g^1_2.
struct HyperellSystem {
  int g = 0, n = 0;
  Rat scale = 1;               // p was divided by this to make it monic
  AlphabetPtr vars;            // xi_1..xi_{2g+2} (plus rho when n = 2g+2)
  std::vector<MultiPoly> eqs;  // 2g+2 quadrics (2g+1 with rho when n = 2g+2)
  BaseSystem full;
};

HyperellSystem hyperell_system(int g, int n, const BinaryForm& p, const RollingScheme* sch = nullptr);

// p(s,t) x^2 on S(b-1), class 2H - bR: b-1 quadrics in b-2 variables.
BaseSystem lemma_system(const BinaryForm& p);
// Substitutes xi_i = s^{b-i-1} t^{i-1} and compares with sum_k (m-k-1) p_k s^{2b-k-m-2} t^{k+m-2}, up to one
// common scalar; returns the scalar when it exists.
std::optional<Rat> parametric_pi(const BinaryForm& p);

struct RootData {
  BinaryForm p;             // monic in t: p_e = 1
  std::vector<Rat> roots;   // p(1,t) = prod (t - alpha_i)
  static RootData from_roots(const std::vector<Rat>& roots);
};

// p(s,t) x^2 on S(e) with b = e: Pi_m = rho xi_m + pi_m, 1 <= m <= e-1.
BaseSystem root_system(const RootData& d);
struct RootPoint {
  std::vector<Rat> xi;  // xi_1..xi_{e-1}
  std::optional<Rat> rho;
};
RootPoint root_solution(const RootData& d, int i);
RootPoint pair_solution(const RootData& d, const std::vector<int>& subset);
// Values pi_m (rho-free part) at xi.
std::vector<Rat> pi_values(const BaseSystem& sys, const std::vector<Rat>& xi);
bool verify_rank(const std::vector<Rat>& xi, const std::vector<Rat>& pi);
// Solve rho from the first m with xi_m != 0; checks every Pi_m vanishes.
std::optional<Rat> solve_rho(const BaseSystem& sys, const std::vector<Rat>& xi);
bool satisfies(const BaseSystem& sys, const std::vector<Rat>& xi, const Rat& rho);

// The explicit e = 5 system Pi_1..Pi_4 over the alphabet of root_system(d). With `printed` the third
// equation carries -p3 xi3^2; otherwise +p3 xi3^2.
std::vector<MultiPoly> e5_display(const RootData& d, bool printed = false);
// rho = a^4 - a^3 s'_1 - a^2 s'_2 - a s'_3 + s'_4, s' over the other four roots.
Rat e5_display_rho(const RootData& d, int i);
// Linear form lambda in the xi with display_m - root_system_m = xi_m * lambda for every m, if one exists.
std::optional<MultiPoly> e5_rho_shift(const RootData& d, bool printed = false);
// Same for an explicit list Pi over sys.vars.alphabet (rho set to zero before solving).
std::optional<Rat> solve_rho(const std::vector<MultiPoly>& Pi, const BaseSystem& sys, const std::vector<Rat>& xi);

// Linear forms for e = 5 over {rho, xi1..xi4}.
struct LForms {
  AlphabetPtr alphabet;
  MultiPoly l(int i) const;                   // l_{alpha_i}
  MultiPoly l_minus(int i, int j) const;
  MultiPoly l_plus_printed(int i, int j) const;
  MultiPoly l_plus(int i, int j) const;       // (l_a + l_b) / 2 written out
  RootData data;
};
LForms make_lforms(const RootData& d);
bool l_form_identity(const RootData& d, int i, int j, bool printed = false);

}  // namespace rf
