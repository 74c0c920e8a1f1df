#include "rollfac/k3class.hpp"

#include <algorithm>
#include <map>

namespace rf {

std::string to_string(TetraVerdict v) {
  switch (v) {
    case TetraVerdict::ValidGeneral: return "valid-general";
    case TetraVerdict::ValidComposed: return "valid-composed";
    case TetraVerdict::DelPezzoOrBielliptic: return "del-pezzo-or-bielliptic";
    case TetraVerdict::Invalid: return "invalid";
  }
  return "?";
}

bool is_del_pezzo_triple(int e1, int e2, int e3) {
  static const std::array<std::array<int, 3>, 12> triples{{{2, 0, 0}, {1, 1, 0}, {2, 1, 0}, {1, 1, 1},
                                                            {3, 1, 0}, {2, 2, 0}, {2, 1, 1}, {3, 2, 0},
                                                            {2, 2, 1}, {4, 2, 0}, {3, 2, 1}, {2, 2, 2}}};
  return std::find(triples.begin(), triples.end(), std::array<int, 3>{e1, e2, e3}) != triples.end();
}

TetraValidation validate_tetragonal(const TetraInvariants& v, bool composed) {
  if (!(v.e1 >= v.e2 && v.e2 >= v.e3 && v.e3 >= 0)) return {TetraVerdict::Invalid, "e not sorted"};
  if (v.b1 + v.b2 != v.e1 + v.e2 + v.e3 - 2) return {TetraVerdict::Invalid, "b1 + b2 != e1 + e2 + e3 - 2"};
  if (v.b1 < v.b2) return {TetraVerdict::Invalid, "b1 < b2"};
  if (v.b2 < 0) return {TetraVerdict::Invalid, "b2 < 0"};
  if (v.b1 > 2 * v.e2) return {TetraVerdict::Invalid, "b1 > 2e2"};
  if (v.b2 > 2 * v.e3) return {TetraVerdict::Invalid, "b2 > 2e3"};
  if (v.b2 == 0) {
    if (v.e3 == 0) return {TetraVerdict::DelPezzoOrBielliptic, "bielliptic"};
    if (is_del_pezzo_triple(v.e1, v.e2, v.e3)) return {TetraVerdict::DelPezzoOrBielliptic, "del pezzo"};
    return {TetraVerdict::Invalid, "b2 = 0 outside the del pezzo list"};
  }
  if (composed || v.b1 > v.e1 + v.e3) {
    if (v.b2 != 2 * v.e3) return {TetraVerdict::Invalid, "singular Y needs b2 = 2e3"};
    return {TetraVerdict::ValidComposed, "b2 = 2e3"};
  }
  return {TetraVerdict::ValidGeneral, ""};
}

bool elliptic_fibration_ok_trigonal(int e1, int e2, int e3, int k) { return k <= 3 * e2 && k <= e1 + 2 * e3; }

std::vector<std::vector<TrigonalK3>> trigonal_k3_enumerate(int e, int range) {
  std::vector<std::vector<TrigonalK3>> chains(3);
  for (int a = range; a >= -range; --a)
    for (int b = a; b >= -range; --b)
      for (int c = b; c >= -range; --c) {
        int e1 = e + a, e2 = e + b, e3 = e + c;
        if (e3 <= 0) continue;
        int k = e1 + e2 + e3 - 2;
        if (!elliptic_fibration_ok_trigonal(e1, e2, e3, k)) continue;
        // offsets are normalized so that e2 - e is 0 or 1
        int r = ((a + b + c) % 3 + 3) % 3;
        int shift = (a + b + c - r) / 3;
        std::array<int, 3> off{a - shift, b - shift, c - shift};
        auto& ch = chains[r];
        if (std::none_of(ch.begin(), ch.end(), [&](const TrigonalK3& t) { return t.offset == off; }))
          ch.push_back({off, r});
      }
  for (auto& ch : chains)
    std::sort(ch.begin(), ch.end(), [](const TrigonalK3& x, const TrigonalK3& y) {
      int dx = x.offset[0] - x.offset[2], dy = y.offset[0] - y.offset[2];
      if (dx != dy) return dx > dy;
      return x.offset > y.offset;
    });
  return chains;
}

TrigonalSingularity trigonal_singularity(int e1, int e2, int e3) {
  int k = e1 + e2 + e3 - 2;
  TrigonalSingularity r{k > 3 * e3, false, ""};
  if (!r.section_in_base) return r;
  // coefficients of xz^2, yz^2 have degrees e1 + 2e3 - k and e2 + 2e3 - k
  if (e2 + 2 * e3 - k < 0 && e1 + 2 * e3 - k > 0) {
    r.singular = true;
    r.type = (2 * e2 + e3 - k < 0) ? "A2" : "A1";
  }
  return r;
}

std::string to_string(FibrationCase f) {
  switch (f) {
    case FibrationCase::Alpha: return "alpha";
    case FibrationCase::Beta: return "beta";
    case FibrationCase::None: return "none";
  }
  return "?";
}

FibrationCase fibration_case(const std::array<int, 4>& e, int b1, int b2) {
  auto [e1, e2, e3, e4] = e;
  if (b1 <= e1 + e3 && b1 <= 2 * e2 && b2 <= 2 * e4) return FibrationCase::Alpha;
  if (b1 <= e1 + e4 && b1 <= 2 * e2 && 2 * e4 < b2 && b2 <= 2 * e3 && b2 <= e2 + e4) return FibrationCase::Beta;
  return FibrationCase::None;
}

std::optional<int> base_locus(const std::array<int, 4>& e, int b1) {
  std::optional<int> a;
  for (int x : e)
    if (2 * x < b1 && (!a || x > *a)) a = x;
  return a;
}

std::pair<bool, bool> singularity_flags(const std::array<int, 4>& e, int b1, int b2) {
  auto [e1, e2, e3, e4] = e;
  bool on = (b2 < 2 * e4 && b1 > e1 + e4) || (b2 <= e3 + e4 && e2 + e4 < b1 && b1 < e1 + e4) ||
            (b2 > e3 + e4 && e1 + e2 + 2 * e4 > b1 + b2);
  bool two_alpha = b1 > e2 + e3 && e1 + e3 > b1 && b1 > e1 + e4;
  bool k3 = b1 + b2 == e1 + e2 + e3 + e4 - 2;
  if (k3) two_alpha = false;
  bool two_ab = e1 + e4 >= b1 && b1 > e2 + e3 &&
                ((b2 <= 2 * e4 && 2 * (e1 + e3 + e4) > 2 * b1 + b2) ||
                 (2 * e4 < b2 && b2 <= e3 + e4 && e1 + 2 * e3 + e4 > b1 + b2) || (e3 + e4 < b2 && b2 < 2 * e3));
  return {on, two_alpha || two_ab};
}

std::pair<bool, bool> singularity_flags(const K3Family& f) { return singularity_flags(f.e, f.b1, f.b2); }

K3Family make_k3_family(const std::array<int, 4>& e, int b1, int b2) {
  K3Family f{e, b1, b2, fibration_case(e, b1, b2), base_locus(e, b1), false, false};
  std::tie(f.sing_on_section, f.sing_off_section) = singularity_flags(e, b1, b2);
  return f;
}

std::vector<K3Family> tetragonal_k3_concrete(int e, int range) {
  std::vector<K3Family> out;
  for (int r = 0; r < 4; ++r) {
    int S = 4 * e + r;
    for (int b2 = 0; 2 * b2 <= S - 2; ++b2) {
      int b1 = S - 2 - b2;
      for (int e1 = e + range; e1 >= e - range; --e1)
        for (int e2 = std::min(e1, e + range); e2 >= e - range; --e2)
          for (int e3 = std::min(e2, e + range); e3 >= e - range; --e3) {
            int e4 = S - e1 - e2 - e3;
            if (e4 > e3 || e4 < e - range || e4 <= 0) continue;
            std::array<int, 4> ev{e1, e2, e3, e4};
            if (fibration_case(ev, b1, b2) == FibrationCase::None) continue;
            out.push_back(make_k3_family(ev, b1, b2));
          }
    }
  }
  return out;
}

std::vector<K3Shape> tetragonal_k3_enumerate(int e, int range) {
  std::vector<K3Shape> shapes;
  for (const auto& f : tetragonal_k3_concrete(e, range)) {
    int db1 = f.b1 - 2 * e, db2 = f.b2 - 2 * e;
    auto it = std::find_if(shapes.begin(), shapes.end(),
                           [&](const K3Shape& s) { return s.db1 == db1 && s.db2 == db2; });
    if (it == shapes.end()) {
      shapes.push_back({db1, db2, {}});
      it = shapes.end() - 1;
    }
    K3Offsets o{{f.e[0] - e, f.e[1] - e, f.e[2] - e, f.e[3] - e}, db1, db2, std::nullopt, f.has_singularity()};
    if (f.base) o.dbase = *f.base - e;
    it->rows.push_back(o);
  }
  return shapes;
}

std::string offset_label(const char* var, int d) {
  std::string s = var;
  if (d > 0) s += "+" + std::to_string(d);
  if (d < 0) s += std::to_string(d);
  return s;
}

std::string base_label(const std::optional<int>& dbase) {
  if (!dbase) return "empty";
  return "B_{" + offset_label("e", *dbase) + "}";
}

}  // namespace rf
