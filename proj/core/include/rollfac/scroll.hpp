#pragma once
#include <string>
#include <utility>
#include <vector>

#include "rollfac/multipoly.hpp"

namespace rf {

struct ColumnIndex {
  int var;  // 0-based fiber variable
  int low;  // lower index j, column is (z_j, z_{j+1})
  auto operator<=>(const ColumnIndex&) const = default;
};

class ScrollType {
 public:
  ScrollType() = default;
  explicit ScrollType(std::vector<int> e);

  const std::vector<int>& e() const { return e_; }
  int e(int i) const { return e_[i]; }
  int k() const { return static_cast<int>(e_.size()); }
  int degree() const;
  int ambient_dim() const { return degree() + k() - 1; }
  int num_coords() const { return degree() + k(); }
  bool operator==(const ScrollType& o) const { return e_ == o.e_; }

  // Ambient coordinates z.i.j in order of i then j; i is 1-based in names.
  const AlphabetPtr& ambient() const { return ambient_; }
  int coord(int var, int j) const;  // index into ambient(); -1 when out of range
  static std::string coord_name(int var, int j);
  static std::string fiber_name(int var);
  // Alphabet {s, t, z.1, ..., z.k}.
  const AlphabetPtr& fiber() const { return fiber_; }

  std::vector<ColumnIndex> columns() const;

 private:
  std::vector<int> e_;
  std::vector<int> offset_;
  AlphabetPtr ambient_, fiber_;
};

std::vector<std::pair<std::string, std::string>> scroll_matrix(const ScrollType& S);
std::vector<MultiPoly> scrollar_equations(const ScrollType& S);
MultiPoly scrollar_equation(const ScrollType& S, ColumnIndex a, ColumnIndex b);

// z.i.j -> s^(e_i-j) t^j z.i. Non-ambient variables of P pass through and are appended
// after the fiber alphabet.
MultiPoly parametrize(const ScrollType& S, const MultiPoly& P);

// Human-readable aliases: z.1.3 -> x3, zeta.2.1 -> eta1, z.3 -> z.
std::string alias(const std::string& name);

}  // namespace rf
