#pragma once
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "rollfac/rat.hpp"

namespace rf {

struct Alphabet {
  std::vector<std::string> names;
  std::vector<int> weights;

  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> n, std::vector<int> w = {});
  size_t size() const { return names.size(); }
  int index_of(const std::string& name) const;  // -1 when absent
  bool operator==(const Alphabet& o) const { return names == o.names; }
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;
AlphabetPtr make_alphabet(std::vector<std::string> names, std::vector<int> weights = {});
AlphabetPtr concat(const AlphabetPtr& a, const AlphabetPtr& b);

using Exponent = std::vector<int>;

class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(AlphabetPtr a);
  MultiPoly(AlphabetPtr a, const Rat& c);

  static MultiPoly var(AlphabetPtr a, int i, int power = 1);
  static MultiPoly var(AlphabetPtr a, const std::string& name, int power = 1);
  static MultiPoly monomial(AlphabetPtr a, Exponent e, const Rat& c = 1);

  const AlphabetPtr& alphabet() const { return alpha_; }
  const std::map<Exponent, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t num_terms() const { return terms_.size(); }
  int total_degree() const;
  int weighted_degree() const;
  Rat coeff(const Exponent& e) const;
  Rat constant_term() const;

  void add_term(const Exponent& e, const Rat& c);
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rat& c) const;
  MultiPoly pow(int k) const;
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  // Move to another alphabet by name; variables missing from the target raise.
  MultiPoly rebase(const AlphabetPtr& target) const;
  // Substitute each variable by a polynomial over `target` (null entries keep the variable by name).
  MultiPoly substitute(const std::vector<const MultiPoly*>& images, const AlphabetPtr& target) const;
  Rat evaluate(const std::vector<Rat>& point) const;
  // Coefficient of var i to the power k, as a polynomial in the rest.
  MultiPoly coefficient_of(int i, int k) const;
  int degree_in(int i) const;
  bool depends_on(int i) const { return degree_in(i) > 0; }

  // Scale so that the coefficients are coprime integers with positive leading term.
  MultiPoly normalized() const;
  std::string str(const std::function<std::string(const std::string&)>& rename = {}) const;

 private:
  AlphabetPtr alpha_;
  std::map<Exponent, Rat> terms_;
};

MultiPoly operator*(const Rat& c, const MultiPoly& p);

}  // namespace rf
