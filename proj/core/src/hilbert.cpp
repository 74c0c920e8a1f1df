#include <algorithm>

#include "rollfac/gbengine.hpp"

namespace rf::gb {

namespace {

using Series = std::vector<long>;

Series mul(const Series& a, const Series& b) {
  Series r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Series add(Series a, const Series& b, long sign, int shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (size_t i = 0; i < b.size(); ++i) a[i + shift] += sign * b[i];
  return a;
}

bool divides(const Mon& a, const Mon& b, int n) {
  for (int i = 0; i < n; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

std::vector<Mon> minimalize(std::vector<Mon> g, int n) {
  std::sort(g.begin(), g.end(), [](const Mon& a, const Mon& b) { return a.deg < b.deg; });
  std::vector<Mon> out;
  for (auto& m : g) {
    bool red = false;
    for (auto& o : out)
      if (divides(o, m, n)) {
        red = true;
        break;
      }
    if (!red) out.push_back(m);
  }
  return out;
}

Series numerator(std::vector<Mon> g, int n) {
  g = minimalize(std::move(g), n);
  if (g.empty()) return {1};
  // pairwise coprime generators give a product of (1 - t^d)
  std::vector<int> count(n, 0);
  bool coprime = true;
  for (auto& m : g)
    for (int i = 0; i < n; ++i)
      if (m.e[i] && ++count[i] > 1) coprime = false;
  if (coprime) {
    Series r{1};
    for (auto& m : g) {
      Series f(m.deg + 1, 0);
      f[0] = 1;
      f[m.deg] -= 1;
      r = mul(r, f);
    }
    return r;
  }
  int v = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
  std::vector<int> ex;
  for (auto& m : g)
    if (m.e[v] && m.e[v] != m.deg) ex.push_back(m.e[v]);  // skip the pure power so the pivot is not in I
  std::sort(ex.begin(), ex.end());
  Mon piv;
  piv.e[v] = static_cast<uint8_t>(ex[ex.size() / 2]);
  piv.deg = piv.e[v];
  // H(I) = H(I + piv) + t^deg(piv) H(I : piv)
  std::vector<Mon> with = g;
  with.push_back(piv);
  std::vector<Mon> colon;
  for (auto& m : g) {
    Mon q;
    for (int i = 0; i < n; ++i) {
      q.e[i] = static_cast<uint8_t>(std::max(0, m.e[i] - piv.e[i]));
      q.deg += q.e[i];
    }
    colon.push_back(q);
  }
  return add(numerator(with, n), numerator(colon, n), 1, piv.deg);
}

}  // namespace

std::vector<long> hilbert_numerator(std::vector<Mon> gens, int nvars) {
  auto s = numerator(std::move(gens), nvars);
  while (s.size() > 1 && s.back() == 0) s.pop_back();
  return s;
}

}  // namespace rf::gb
