#pragma once
#include <map>
#include <vector>

#include "rollfac/rat.hpp"

namespace rf {

using Matrix = std::vector<std::vector<Rat>>;

int rank(Matrix m);
int nullity(const Matrix& m);          // columns minus rank
Matrix kernel(const Matrix& m);        // basis of {v : m v = 0}
Matrix left_kernel(const Matrix& m);   // basis of {w : w m = 0}
Matrix transpose(const Matrix& m);

using SparseVec = std::map<long, Rat>;

// Incremental echelon basis of a subspace of Q^N with sparse vectors.
class SparseSpan {
 public:
  bool add(SparseVec v);  // true when v was independent
  bool contains(SparseVec v) const;
  size_t dim() const { return rows_.size(); }

 private:
  void reduce(SparseVec& v) const;
  std::map<long, SparseVec> rows_;  // pivot -> row with leading 1 at pivot
};

}  // namespace rf
