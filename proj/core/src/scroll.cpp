#include "rollfac/scroll.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rf {

ScrollType::ScrollType(std::vector<int> e) : e_(std::move(e)) {
  if (e_.empty()) throw std::invalid_argument("ScrollType: empty degree vector");
  for (size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] < 0) throw std::invalid_argument("ScrollType: negative degree");
    if (i && e_[i] > e_[i - 1]) throw std::invalid_argument("ScrollType: degrees must be descending");
  }
  std::vector<std::string> names;
  for (int i = 0; i < k(); ++i) {
    offset_.push_back(static_cast<int>(names.size()));
    for (int j = 0; j <= e_[i]; ++j) names.push_back(coord_name(i, j));
  }
  ambient_ = make_alphabet(names);
  std::vector<std::string> fn{"s", "t"};
  std::vector<int> fw{1, 1};
  for (int i = 0; i < k(); ++i) {
    fn.push_back(fiber_name(i));
    fw.push_back(-e_[i]);
  }
  fiber_ = make_alphabet(fn, fw);
}

int ScrollType::degree() const {
  int d = 0;
  for (int x : e_) d += x;
  return d;
}

int ScrollType::coord(int var, int j) const {
  if (var < 0 || var >= k() || j < 0 || j > e_[var]) return -1;
  return offset_[var] + j;
}

std::string ScrollType::coord_name(int var, int j) {
  return "z." + std::to_string(var + 1) + "." + std::to_string(j);
}

std::string ScrollType::fiber_name(int var) { return "z." + std::to_string(var + 1); }

std::vector<ColumnIndex> ScrollType::columns() const {
  std::vector<ColumnIndex> c;
  for (int i = 0; i < k(); ++i)
    for (int j = 0; j < e_[i]; ++j) c.push_back({i, j});
  return c;
}

std::vector<std::pair<std::string, std::string>> scroll_matrix(const ScrollType& S) {
  std::vector<std::pair<std::string, std::string>> m;
  for (auto c : S.columns())
    m.emplace_back(ScrollType::coord_name(c.var, c.low), ScrollType::coord_name(c.var, c.low + 1));
  return m;
}

MultiPoly scrollar_equation(const ScrollType& S, ColumnIndex a, ColumnIndex b) {
  auto& A = S.ambient();
  auto z = [&](int var, int j) { return MultiPoly::var(A, S.coord(var, j)); };
  return z(a.var, a.low) * z(b.var, b.low + 1) - z(a.var, a.low + 1) * z(b.var, b.low);
}

std::vector<MultiPoly> scrollar_equations(const ScrollType& S) {
  auto cols = S.columns();
  std::vector<MultiPoly> eqs;
  for (size_t a = 0; a < cols.size(); ++a)
    for (size_t b = a + 1; b < cols.size(); ++b) eqs.push_back(scrollar_equation(S, cols[a], cols[b]));
  return eqs;
}

MultiPoly parametrize(const ScrollType& S, const MultiPoly& P) {
  auto& src = P.alphabet();
  if (!src) return MultiPoly(S.fiber());
  // source variable -> (var, j) or pass-through
  struct Img {
    int var = -1, j = 0, pass = -1;
  };
  std::vector<Img> img(src->size());
  std::vector<std::string> extra;
  std::vector<int> extra_w;
  for (size_t i = 0; i < src->size(); ++i) {
    const auto& nm = src->names[i];
    int idx = S.ambient()->index_of(nm);
    if (idx >= 0) {
      for (int v = 0; v < S.k(); ++v)
        if (S.coord(v, 0) <= idx && idx <= S.coord(v, S.e(v))) img[i] = {v, idx - S.coord(v, 0), -1};
    } else if (S.fiber()->index_of(nm) >= 0) {
      img[i].pass = S.fiber()->index_of(nm);
    } else if (nm.rfind("z.", 0) == 0 && std::count(nm.begin(), nm.end(), '.') == 2) {
      throw std::invalid_argument("parametrize: alphabet mismatch (" + nm + " is not a coordinate of the scroll)");
    } else {
      img[i].pass = -2;
      extra.push_back(nm);
      extra_w.push_back(src->weights[i]);
    }
  }
  AlphabetPtr target = S.fiber();
  if (!extra.empty()) target = concat(S.fiber(), make_alphabet(extra, extra_w));
  MultiPoly r(target);
  Exponent f(target->size());
  for (auto& [e, c] : P.terms()) {
    std::fill(f.begin(), f.end(), 0);
    for (size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      auto& m = img[i];
      if (m.var >= 0) {
        f[0] += e[i] * (S.e(m.var) - m.j);
        f[1] += e[i] * m.j;
        f[2 + m.var] += e[i];
      } else if (m.pass >= 0) {
        f[m.pass] += e[i];
      } else {
        f[target->index_of(src->names[i])] += e[i];
      }
    }
    r.add_term(f, c);
  }
  return r;
}

std::string alias(const std::string& name) {
  static const char* fiber[] = {"x", "y", "z", "w"};
  static const char* greek[] = {"xi", "eta", "zeta", "omega"};
  std::vector<std::string> parts;
  size_t st = 0;
  for (;;) {
    size_t d = name.find('.', st);
    parts.push_back(name.substr(st, d - st));
    if (d == std::string::npos) break;
    st = d + 1;
  }
  auto num = [](const std::string& s) { return std::stoi(s); };
  try {
    if (parts[0] == "z" && parts.size() >= 2) {
      int i = num(parts[1]);
      if (i < 1 || i > 4) return name;
      return std::string(fiber[i - 1]) + (parts.size() == 3 ? parts[2] : "");
    }
    if (parts[0] == "zeta" && parts.size() == 3) {
      int i = num(parts[1]);
      if (i < 1 || i > 4) return name;
      return std::string(greek[i - 1]) + parts[2];
    }
    if (parts[0] == "rho" && parts.size() == 4)
      return "rho" + parts[1] + "_" + std::string(fiber[std::min(num(parts[2]), 4) - 1]) + parts[3];
  } catch (const std::exception&) {
  }
  return name;
}

}  // namespace rf
