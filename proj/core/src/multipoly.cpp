#include "rollfac/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rf {

Alphabet::Alphabet(std::vector<std::string> n, std::vector<int> w) : names(std::move(n)), weights(std::move(w)) {
  if (weights.empty()) weights.assign(names.size(), 1);
  if (weights.size() != names.size()) throw std::invalid_argument("Alphabet: weight count mismatch");
}

int Alphabet::index_of(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

AlphabetPtr make_alphabet(std::vector<std::string> names, std::vector<int> weights) {
  return std::make_shared<const Alphabet>(std::move(names), std::move(weights));
}

AlphabetPtr concat(const AlphabetPtr& a, const AlphabetPtr& b) {
  auto n = a->names;
  auto w = a->weights;
  for (size_t i = 0; i < b->size(); ++i) {
    if (a->index_of(b->names[i]) >= 0) continue;
    n.push_back(b->names[i]);
    w.push_back(b->weights[i]);
  }
  return make_alphabet(std::move(n), std::move(w));
}

MultiPoly::MultiPoly(AlphabetPtr a) : alpha_(std::move(a)) {}

MultiPoly::MultiPoly(AlphabetPtr a, const Rat& c) : alpha_(std::move(a)) {
  if (c != 0) terms_[Exponent(alpha_->size(), 0)] = c;
}

MultiPoly MultiPoly::var(AlphabetPtr a, int i, int power) {
  if (i < 0 || static_cast<size_t>(i) >= a->size()) throw std::out_of_range("MultiPoly::var: index");
  Exponent e(a->size(), 0);
  e[i] = power;
  return monomial(std::move(a), std::move(e));
}

MultiPoly MultiPoly::var(AlphabetPtr a, const std::string& name, int power) {
  int i = a->index_of(name);
  if (i < 0) throw std::invalid_argument("unknown variable " + name);
  return var(std::move(a), i, power);
}

MultiPoly MultiPoly::monomial(AlphabetPtr a, Exponent e, const Rat& c) {
  MultiPoly p(std::move(a));
  if (e.size() != p.alpha_->size()) throw std::invalid_argument("monomial: exponent length");
  p.add_term(e, c);
  return p;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

int MultiPoly::weighted_degree() const {
  int d = -1;
  for (auto& [e, c] : terms_) {
    int s = 0;
    for (size_t i = 0; i < e.size(); ++i) s += e[i] * alpha_->weights[i];
    d = std::max(d, s);
  }
  return d;
}

Rat MultiPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat MultiPoly::constant_term() const {
  if (!alpha_) return 0;
  return coeff(Exponent(alpha_->size(), 0));
}

void MultiPoly::add_term(const Exponent& e, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

static void check_same(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (a != b && !(a && b && *a == *b)) throw std::invalid_argument("alphabet mismatch");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (!alpha_) alpha_ = o.alpha_;
  if (o.terms_.empty()) return *this;
  check_same(alpha_, o.alpha_);
  for (auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (!alpha_) alpha_ = o.alpha_;
  if (o.terms_.empty()) return *this;
  check_same(alpha_, o.alpha_);
  for (auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  r += o;
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  r -= o;
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r(alpha_ ? alpha_ : o.alpha_);
  if (terms_.empty() || o.terms_.empty()) return r;
  check_same(alpha_, o.alpha_);
  Exponent e(alpha_->size());
  for (auto& [e1, c1] : terms_)
    for (auto& [e2, c2] : o.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

MultiPoly MultiPoly::operator*(const Rat& c) const {
  MultiPoly r(alpha_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& [e, x] : r.terms_) x *= c;
  return r;
}

MultiPoly operator*(const Rat& c, const MultiPoly& p) { return p * c; }

MultiPoly MultiPoly::pow(int k) const {
  MultiPoly r(alpha_, 1);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (terms_.empty() || o.terms_.empty()) return terms_.empty() && o.terms_.empty();
  check_same(alpha_, o.alpha_);
  return terms_ == o.terms_;
}

MultiPoly MultiPoly::rebase(const AlphabetPtr& target) const {
  MultiPoly r(target);
  if (!alpha_) return r;
  std::vector<int> map(alpha_->size());
  for (size_t i = 0; i < alpha_->size(); ++i) map[i] = target->index_of(alpha_->names[i]);
  Exponent f(target->size());
  for (auto& [e, c] : terms_) {
    std::fill(f.begin(), f.end(), 0);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (map[i] < 0) throw std::invalid_argument("rebase: variable " + alpha_->names[i] + " missing");
      f[map[i]] += e[i];
    }
    r.add_term(f, c);
  }
  return r;
}

MultiPoly MultiPoly::substitute(const std::vector<const MultiPoly*>& images, const AlphabetPtr& target) const {
  MultiPoly r(target);
  if (!alpha_) return r;
  std::vector<std::vector<MultiPoly>> powers(alpha_->size());
  for (size_t i = 0; i < alpha_->size(); ++i) {
    if (i < images.size() && images[i]) {
      powers[i].push_back(MultiPoly(target, 1));
    } else {
      powers[i].push_back(MultiPoly(target, 1));
    }
  }
  auto power_of = [&](size_t i, int k) -> const MultiPoly& {
    auto& v = powers[i];
    while (static_cast<int>(v.size()) <= k) {
      MultiPoly base = (i < images.size() && images[i]) ? images[i]->rebase(target)
                                                         : MultiPoly::var(target, alpha_->names[i]);
      v.push_back(v.back() * base);
    }
    return v[k];
  };
  for (auto& [e, c] : terms_) {
    MultiPoly term(target, c);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) term = term * power_of(i, e[i]);
    r += term;
  }
  return r;
}

Rat MultiPoly::evaluate(const std::vector<Rat>& point) const {
  Rat acc = 0;
  for (auto& [e, c] : terms_) {
    Rat t = c;
    for (size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

MultiPoly MultiPoly::coefficient_of(int i, int k) const {
  MultiPoly r(alpha_);
  for (auto& [e, c] : terms_) {
    if (e[i] != k) continue;
    Exponent f = e;
    f[i] = 0;
    r.add_term(f, c);
  }
  return r;
}

int MultiPoly::degree_in(int i) const {
  int d = 0;
  for (auto& [e, c] : terms_) d = std::max(d, e[i]);
  return d;
}

MultiPoly MultiPoly::normalized() const {
  if (terms_.empty()) return *this;
  mpz_class l = 1, g = 0;
  for (auto& [e, c] : terms_) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  }
  Rat scale(l, g);
  // leading term: largest exponent under the map order
  if (terms_.rbegin()->second < 0) scale = -scale;
  return *this * scale;
}

std::string MultiPoly::str(const std::function<std::string(const std::string&)>& rename) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto& [e, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Rat a = abs(c);
    bool mono = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
    if (a != 1 || !mono) os << a.get_str() << (mono ? "*" : "");
    bool need = false;
    for (size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (need) os << "*";
      os << (rename ? rename(alpha_->names[i]) : alpha_->names[i]);
      if (e[i] > 1) os << "^" << e[i];
      need = true;
    }
  }
  return os.str();
}

}  // namespace rf
