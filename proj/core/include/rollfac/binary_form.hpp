#pragma once
#include <optional>
#include <string>
#include <vector>

#include "rollfac/rat.hpp"

namespace rf {

// Homogeneous polynomial in (s,t). Coefficient j multiplies s^(deg-j) t^j.
// The zero form carries degree -1 unless a degree is requested explicitly.
class BinaryForm {
 public:
  BinaryForm() = default;
  explicit BinaryForm(int degree);
  BinaryForm(int degree, std::vector<Rat> coeffs);

  static BinaryForm monomial(int a, int b, const Rat& c = 1);

  int degree() const { return deg_; }
  const Rat& coeff(int j) const { return c_[j]; }
  Rat& coeff(int j) { return c_[j]; }
  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const;

  BinaryForm operator+(const BinaryForm& o) const;
  BinaryForm operator-(const BinaryForm& o) const;
  BinaryForm operator*(const BinaryForm& o) const;
  BinaryForm operator*(const Rat& c) const;
  BinaryForm operator-() const;
  bool operator==(const BinaryForm& o) const;

  BinaryForm diff_s() const;
  BinaryForm diff_t() const;
  Rat eval(const Rat& s, const Rat& t) const;
  std::string str() const;

 private:
  int deg_ = -1;
  std::vector<Rat> c_;
};

// Exact quotient a/b, or nullopt when b does not divide a.
std::optional<BinaryForm> divide_exact(const BinaryForm& a, const BinaryForm& b);

// No repeated linear factor over the algebraic closure.
bool is_squarefree(const BinaryForm& f);

// prod (t - r s) over roots r.
BinaryForm from_roots(const std::vector<Rat>& roots);

}  // namespace rf
