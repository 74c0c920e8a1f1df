#pragma once
#include <optional>
#include <string>
#include <vector>

#include "rollfac/linalg.hpp"
#include "rollfac/rolling.hpp"

namespace rf {

// zeta.l.m for 1 <= m <= e_l - 1, then rho.n.l.r for every equation n with e_l >= b_n.
struct DeformVars {
  struct Rho {
    int eq, var, r, index;
  };
  ScrollType scroll;
  std::vector<int> bs;
  AlphabetPtr zeta_alphabet;  // zeta only
  AlphabetPtr alphabet;       // zeta then rho
  std::vector<Rho> rhos;

  int num_zeta() const { return static_cast<int>(zeta_alphabet->size()); }
  int zeta(int var, int m) const;  // -1 for dummies and out-of-range indices
  static std::string zeta_name(int var, int m);
  static std::string rho_name(int eq, int var, int r);
};

DeformVars make_deform_vars(const ScrollType& S, const std::vector<int>& bs);

// Alphabet {s, t, z.1..z.k, zeta...}.
AlphabetPtr s_alphabet(const DeformVars& v);
MultiPoly rhs_S(const BihomForm& P, const RollingScheme& sch, const DeformVars& v);

struct LiftRow {
  int eq = 0;
  MultiIndex I;
  int n = 0;
  std::vector<Rat> coeffs;  // over the zeta variables
  bool operator==(const LiftRow&) const = default;
};

struct LiftingSystem {
  std::vector<std::string> cols;
  std::vector<LiftRow> rows;
  Matrix matrix() const;
  int rank() const;
  int nullity() const;
};

LiftingSystem lifting_matrix(const std::vector<BihomForm>& eqs, const DeformVars& v);
LiftingSystem lifting_from_S(const BihomForm& P, const RollingScheme& sch, const DeformVars& v, int eq = 0);
MultiPoly row_form(const LiftRow& r, const DeformVars& v);  // linear form over v.alphabet

struct TetraInvariants {
  int e1, e2, e3, b1, b2;
  int g() const { return e1 + e2 + e3 + 3; }
  bool consistent() const { return b1 >= b2 && b2 >= 0 && b1 + b2 == e1 + e2 + e3 - 2 && e1 >= e2 && e2 >= e3 && e3 >= 0; }
};

int pure_rolling_count(const std::vector<int>& e, const std::vector<int>& bs);
int rho(const TetraInvariants& inv);
int cork(const LiftingSystem& M);
int t1_minus1(const TetraInvariants& inv, const LiftingSystem& M);
int t1_minus1_composed(const TetraInvariants& inv, const LiftingSystem& Mxy);

struct T1T2Table {
  int t1_m2 = 0;
  std::optional<int> t1_m1;
  int t1_0 = 0, t1_1 = 0, t1_2 = 0;
  std::optional<int> t2_m2;
};
T1T2Table t1_t2_table(const TetraInvariants& inv, const LiftingSystem* M = nullptr);

// Section z(s,t) supported on variables with e_i <= b-2 along which the fibre gradient vanishes.
struct SingularSection {
  std::vector<BinaryForm> z;  // zero form for variables outside the support
};
std::optional<SingularSection> dependent_rows_witness(const BihomForm& P);
bool section_kills_gradient(const BihomForm& P, const SingularSection& sec);

// Q = s Q_s + t^(b1-b2-1) Q_t with every term divisible by s placed in Q_s.
std::pair<BihomForm, BihomForm> shear_split(const BihomForm& Q, int b1);
// (s P - eps Q_t, t^(b1-b2-1) P + eps Q_s)
std::pair<BihomForm, BihomForm> shear_deformation(const BihomForm& P, const BihomForm& Q, const Rat& eps);

// Non-scrollar first-order deformations of a trigonal cone, one generator per (family, gamma).
struct NonScrollarGenerator {
  int family = 0;  // 0: cubic variable x is primary, 1: y is primary
  int gamma = 0;
  // value on f_{alpha beta} for columns alpha < beta, as polynomials over {s,t,x,y}
  std::map<std::pair<ColumnIndex, ColumnIndex>, MultiPoly> phi;
};
NonScrollarGenerator trigonal_nonscrollar(const BihomForm& F, int gamma, int family = 0);
std::vector<NonScrollarGenerator> trigonal_nonscrollar_all(const BihomForm& F);
// Checks every three-column relation (top and bottom rows) maps into F * Q[s,t].
bool verify_nonscrollar(const BihomForm& F, const NonScrollarGenerator& gen, std::string* why = nullptr);
// psi(s,t) with R = psi F, or nullopt.
std::optional<BinaryForm> binary_multiple(const MultiPoly& R, const MultiPoly& F);

}  // namespace rf
