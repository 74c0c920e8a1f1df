#include "rollfac/rolling.hpp"

#include <numeric>
#include <stdexcept>

namespace rf {

int BihomForm::weight(const MultiIndex& I) const {
  int w = 0;
  for (int i = 0; i < scroll.k(); ++i) w += I[i] * scroll.e(i);
  return w;
}

void BihomForm::set(const MultiIndex& I, BinaryForm f) {
  if (static_cast<int>(I.size()) != scroll.k()) throw std::invalid_argument("BihomForm: multi-index length");
  if (std::accumulate(I.begin(), I.end(), 0) != cls.a) throw std::invalid_argument("BihomForm: |I| != a");
  if (f.is_zero()) {
    terms.erase(I);
    return;
  }
  if (f.degree() != weight(I) - cls.b)
    throw std::invalid_argument("BihomForm: coefficient degree must be <e,I> - b");
  terms[I] = std::move(f);
}

const BinaryForm* BihomForm::get(const MultiIndex& I) const {
  auto it = terms.find(I);
  return it == terms.end() ? nullptr : &it->second;
}

void BihomForm::validate() const {
  if (cls.a < 1 || cls.b < 0) throw std::invalid_argument("BihomForm: class must have a >= 1, b >= 0");
  for (auto& [I, f] : terms) {
    if (static_cast<int>(I.size()) != scroll.k() || std::accumulate(I.begin(), I.end(), 0) != cls.a)
      throw std::invalid_argument("BihomForm: bad multi-index");
    if (!f.is_zero() && f.degree() != weight(I) - cls.b)
      throw std::invalid_argument("BihomForm: coefficient degree must be <e,I> - b");
  }
}

MultiPoly BihomForm::as_fiber_poly() const {
  auto& A = scroll.fiber();
  MultiPoly r(A);
  Exponent e(A->size());
  for (auto& [I, f] : terms) {
    for (int j = 0; j <= f.degree(); ++j) {
      std::fill(e.begin(), e.end(), 0);
      e[0] = f.degree() - j;
      e[1] = j;
      for (int i = 0; i < scroll.k(); ++i) e[2 + i] = I[i];
      r.add_term(e, f.coeff(j));
    }
  }
  return r;
}

std::vector<MultiIndex> multi_indices(int k, int a) {
  std::vector<MultiIndex> out;
  MultiIndex cur(k, 0);
  auto rec = [&](auto& self, int pos, int left) -> void {
    if (pos == k - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int x = left; x >= 0; --x) {
      cur[pos] = x;
      self(self, pos + 1, left - x);
    }
  };
  if (k > 0) rec(rec, 0, a);
  return out;
}

std::vector<int> factor_vars(const MultiIndex& I) {
  std::vector<int> f;
  for (size_t i = 0; i < I.size(); ++i)
    for (int c = 0; c < I[i]; ++c) f.push_back(static_cast<int>(i));
  return f;
}

namespace {

template <class Start, class Step>
RollingScheme build(const BihomForm& P, Start start, Step step) {
  RollingScheme sch;
  int b = P.cls.b;
  for (auto& [I, f] : P.terms) {
    auto vars = factor_vars(I);
    std::vector<int> cap;
    for (int v : vars) cap.push_back(P.scroll.e(v));
    for (int j = 0; j <= f.degree(); ++j) {
      std::vector<std::vector<int>> lv;
      std::vector<int> cur = start(cap, j);
      lv.push_back(cur);
      for (int m = 0; m < b; ++m) {
        int q = step(cap, cur);
        ++cur[q];
        lv.push_back(cur);
      }
      sch.levels[{I, j}] = std::move(lv);
    }
  }
  return sch;
}

std::vector<int> greedy_start(const std::vector<int>& cap, int total) {
  std::vector<int> cur(cap.size(), 0);
  for (size_t q = 0; q < cap.size() && total > 0; ++q) {
    cur[q] = std::min(total, cap[q]);
    total -= cur[q];
  }
  return cur;
}

int greedy_step(const std::vector<int>& cap, const std::vector<int>& cur) {
  for (size_t q = 0; q < cap.size(); ++q)
    if (cur[q] < cap[q]) return static_cast<int>(q);
  throw std::logic_error("rolling: no room to increment");
}

int balanced_step(const std::vector<int>& cap, const std::vector<int>& cur) {
  int best = -1;
  for (size_t q = 0; q < cap.size(); ++q)
    if (cur[q] < cap[q] && (best < 0 || cur[q] < cur[best])) best = static_cast<int>(q);
  if (best < 0) throw std::logic_error("rolling: no room to increment");
  return best;
}

std::vector<int> balanced_start(const std::vector<int>& cap, int total) {
  std::vector<int> cur(cap.size(), 0);
  for (int c = 0; c < total; ++c) ++cur[balanced_step(cap, cur)];
  return cur;
}

}  // namespace

RollingScheme canonical_scheme(const BihomForm& P) { return build(P, greedy_start, greedy_step); }

RollingScheme balanced_scheme(const BihomForm& P) { return build(P, balanced_start, balanced_step); }

RollingScheme random_scheme(const BihomForm& P, std::mt19937_64& rng) {
  auto pick = [&](const std::vector<int>& cap, const std::vector<int>& cur) {
    std::vector<int> open;
    for (size_t q = 0; q < cap.size(); ++q)
      if (cur[q] < cap[q]) open.push_back(static_cast<int>(q));
    if (open.empty()) throw std::logic_error("rolling: no room to increment");
    return open[std::uniform_int_distribution<size_t>(0, open.size() - 1)(rng)];
  };
  auto start = [&](const std::vector<int>& cap, int total) {
    std::vector<int> cur(cap.size(), 0);
    for (int c = 0; c < total; ++c) ++cur[pick(cap, cur)];
    return cur;
  };
  return build(P, start, pick);
}

void validate_scheme(const BihomForm& P, const RollingScheme& sch) {
  int b = P.cls.b;
  for (auto& [I, f] : P.terms) {
    auto vars = factor_vars(I);
    for (int j = 0; j <= f.degree(); ++j) {
      if (f.coeff(j) == 0) continue;
      auto it = sch.levels.find({I, j});
      if (it == sch.levels.end()) throw std::invalid_argument("invalid scheme: missing term");
      auto& lv = it->second;
      if (static_cast<int>(lv.size()) != b + 1) throw std::invalid_argument("invalid scheme: level count");
      for (int m = 0; m <= b; ++m) {
        if (lv[m].size() != vars.size()) throw std::invalid_argument("invalid scheme: factor count");
        int sum = 0;
        for (size_t q = 0; q < vars.size(); ++q) {
          if (lv[m][q] < 0 || lv[m][q] > P.scroll.e(vars[q]))
            throw std::invalid_argument("invalid scheme: index out of range");
          sum += lv[m][q];
        }
        if (sum != j + m) throw std::invalid_argument("invalid scheme: level total");
        if (m > 0) {
          int diff = 0;
          for (size_t q = 0; q < vars.size(); ++q) {
            int d = lv[m][q] - lv[m - 1][q];
            if (d < 0 || d > 1) throw std::invalid_argument("invalid scheme: not a single increment");
            diff += d;
          }
          if (diff != 1) throw std::invalid_argument("invalid scheme: not a single increment");
        }
      }
    }
  }
}

namespace {
MultiPoly level_monomial(const ScrollType& S, const std::vector<int>& vars, const std::vector<int>& idx,
                         int skip = -1) {
  Exponent e(S.ambient()->size(), 0);
  for (size_t q = 0; q < vars.size(); ++q)
    if (static_cast<int>(q) != skip) ++e[S.coord(vars[q], idx[q])];
  return MultiPoly::monomial(S.ambient(), e);
}
}  // namespace

std::vector<MultiPoly> roll_equations(const BihomForm& P, const RollingScheme& sch) {
  validate_scheme(P, sch);
  int b = P.cls.b;
  std::vector<MultiPoly> out(b + 1, MultiPoly(P.scroll.ambient()));
  for (auto& [I, f] : P.terms) {
    auto vars = factor_vars(I);
    for (int j = 0; j <= f.degree(); ++j) {
      if (f.coeff(j) == 0) continue;
      auto& lv = sch.levels.at({I, j});
      for (int m = 0; m <= b; ++m) out[m] += level_monomial(P.scroll, vars, lv[m]) * f.coeff(j);
    }
  }
  return out;
}

std::map<ColumnIndex, MultiPoly> rolled_coefficients(const BihomForm& P, const RollingScheme& sch, int m) {
  if (m < 0 || m >= P.cls.b) throw std::out_of_range("rolled_coefficients: level");
  validate_scheme(P, sch);
  std::map<ColumnIndex, MultiPoly> out;
  for (auto& [I, f] : P.terms) {
    auto vars = factor_vars(I);
    for (int j = 0; j <= f.degree(); ++j) {
      if (f.coeff(j) == 0) continue;
      auto& lv = sch.levels.at({I, j});
      int q = 0;
      while (lv[m + 1][q] == lv[m][q]) ++q;
      ColumnIndex alpha{vars[q], lv[m][q]};
      auto [it, ins] = out.emplace(alpha, MultiPoly(P.scroll.ambient()));
      it->second += level_monomial(P.scroll, vars, lv[m], q) * f.coeff(j);
    }
  }
  return out;
}

bool check_roll_consistency(const BihomForm& P, const RollingScheme& s1, const RollingScheme& s2) {
  try {
    auto a = roll_equations(P, s1);
    auto b = roll_equations(P, s2);
    for (size_t m = 0; m < a.size(); ++m)
      if (!parametrize(P.scroll, a[m] - b[m]).is_zero()) return false;
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace rf
