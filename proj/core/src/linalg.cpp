#include "rollfac/linalg.hpp"

#include <stdexcept>

namespace rf {

namespace {
// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Matrix& m) {
  std::vector<int> piv;
  if (m.empty()) return piv;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rat inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    piv.push_back(static_cast<int>(c));
    ++r;
  }
  return piv;
}
}  // namespace

int rank(Matrix m) { return static_cast<int>(rref(m).size()); }

int nullity(const Matrix& m) {
  if (m.empty()) return 0;
  return static_cast<int>(m[0].size()) - rank(m);
}

Matrix transpose(const Matrix& m) {
  if (m.empty()) return {};
  Matrix t(m[0].size(), std::vector<Rat>(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

Matrix kernel(const Matrix& m0) {
  if (m0.empty()) return {};
  Matrix m = m0;
  size_t cols = m[0].size();
  auto piv = rref(m);
  std::vector<int> is_piv(cols, -1);
  for (size_t i = 0; i < piv.size(); ++i) is_piv[piv[i]] = static_cast<int>(i);
  Matrix basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_piv[f] >= 0) continue;
    std::vector<Rat> v(cols);
    v[f] = 1;
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix left_kernel(const Matrix& m) {
  if (m.empty()) return {};
  if (m[0].empty()) {
    Matrix id(m.size(), std::vector<Rat>(m.size()));
    for (size_t i = 0; i < m.size(); ++i) id[i][i] = 1;
    return id;
  }
  return kernel(transpose(m));
}

void SparseSpan::reduce(SparseVec& v) const {
  // eliminate pivots in increasing order; rows only carry entries >= their pivot
  auto it = v.begin();
  while (it != v.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    Rat f = it->second;
    long key = it->first;
    for (auto& [j, x] : row->second) {
      auto [pos, ins] = v.emplace(j, 0);
      pos->second -= f * x;
    }
    for (auto p = v.begin(); p != v.end();) {
      if (p->second == 0) p = v.erase(p);
      else ++p;
    }
    it = v.upper_bound(key);
  }
}

bool SparseSpan::add(SparseVec v) {
  for (auto p = v.begin(); p != v.end();) {
    if (p->second == 0) p = v.erase(p);
    else ++p;
  }
  reduce(v);
  if (v.empty()) return false;
  Rat inv = 1 / v.begin()->second;
  for (auto& [j, x] : v) x *= inv;
  long pivot = v.begin()->first;
  // keep existing rows free of the new pivot
  for (auto& [p, row] : rows_) {
    auto hit = row.find(pivot);
    if (hit == row.end()) continue;
    Rat f = hit->second;
    for (auto& [j, x] : v) row[j] -= f * x;
    for (auto q = row.begin(); q != row.end();) {
      if (q->second == 0) q = row.erase(q);
      else ++q;
    }
  }
  rows_.emplace(pivot, std::move(v));
  return true;
}

bool SparseSpan::contains(SparseVec v) const {
  for (auto p = v.begin(); p != v.end();) {
    if (p->second == 0) p = v.erase(p);
    else ++p;
  }
  reduce(v);
  return v.empty();
}

}  // namespace rf
