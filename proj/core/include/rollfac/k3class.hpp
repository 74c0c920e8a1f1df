#pragma once
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rollfac/liftdef.hpp"

namespace rf {

// Tetragonal curve invariants (e1,e2,e3;b1,b2).
enum class TetraVerdict { ValidGeneral, ValidComposed, DelPezzoOrBielliptic, Invalid };
std::string to_string(TetraVerdict v);
struct TetraValidation {
  TetraVerdict verdict;
  std::string reason;
};
TetraValidation validate_tetragonal(const TetraInvariants& inv, bool composed = false);
bool is_del_pezzo_triple(int e1, int e2, int e3);

// Trigonal K3 surfaces: cubic of class 3H - kR on S(e1,e2,e3).
bool elliptic_fibration_ok_trigonal(int e1, int e2, int e3, int k);
struct TrigonalK3 {
  std::array<int, 3> offset;  // e_i - e
  int residue;                // sum of offsets mod 3
};
// Chains ordered by residue 0,1,2; inside a chain by decreasing e1 - e3.
std::vector<std::vector<TrigonalK3>> trigonal_k3_enumerate(int e = 20, int range = 6);
struct TrigonalSingularity {
  bool section_in_base;  // k > 3 e3
  bool singular;
  std::string type;      // "A1", "A2" or ""
};
TrigonalSingularity trigonal_singularity(int e1, int e2, int e3);

// Tetragonal K3 surfaces: complete intersection of 2H - b1R and 2H - b2R on S(e1..e4).
enum class FibrationCase { Alpha, Beta, None };
std::string to_string(FibrationCase f);
FibrationCase fibration_case(const std::array<int, 4>& e, int b1, int b2);
// Largest e_i with 2 e_i < b1: the base locus is the subscroll B_a spanned by the e_i <= a.
std::optional<int> base_locus(const std::array<int, 4>& e, int b1);

struct K3Family {
  std::array<int, 4> e;
  int b1, b2;
  FibrationCase fibration;
  std::optional<int> base;
  bool sing_on_section;
  bool sing_off_section;

  bool has_singularity() const { return sing_on_section || sing_off_section; }
};
K3Family make_k3_family(const std::array<int, 4>& e, int b1, int b2);
std::pair<bool, bool> singularity_flags(const std::array<int, 4>& e, int b1, int b2);
std::pair<bool, bool> singularity_flags(const K3Family& fam);

// Offsets relative to a free parameter: e_i = e + de_i, b_j = 2e + db_j.
struct K3Offsets {
  std::array<int, 4> de;
  int db1, db2;
  std::optional<int> dbase;
  bool sing;
};
struct K3Shape {
  int db1, db2;
  std::vector<K3Offsets> rows;
};
// All families with e_i in [e - range, e + range], grouped by (b1,b2) shape, ordered by sum e mod 4.
std::vector<K3Shape> tetragonal_k3_enumerate(int e = 20, int range = 7);
std::vector<K3Family> tetragonal_k3_concrete(int e, int range = 7);
std::string offset_label(const char* var, int d);  // "e+2", "e", "2e-1"
std::string base_label(const std::optional<int>& dbase);

}  // namespace rf
