#include "rollfac/binary_form.hpp"

#include <sstream>
#include <stdexcept>

namespace rf {

BinaryForm::BinaryForm(int degree) : deg_(degree), c_(degree < 0 ? 0 : degree + 1) {}

BinaryForm::BinaryForm(int degree, std::vector<Rat> coeffs) : deg_(degree), c_(std::move(coeffs)) {
  if (degree < -1 || c_.size() != static_cast<size_t>(degree + 1))
    throw std::invalid_argument("BinaryForm: coefficient count does not match degree");
}

BinaryForm BinaryForm::monomial(int a, int b, const Rat& c) {
  BinaryForm f(a + b);
  f.c_[b] = c;
  return f;
}

bool BinaryForm::is_zero() const {
  for (auto& c : c_)
    if (c != 0) return false;
  return true;
}

static void same_degree(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree() != b.degree() && !a.is_zero() && !b.is_zero())
    throw std::invalid_argument("BinaryForm: degree mismatch");
}

BinaryForm BinaryForm::operator+(const BinaryForm& o) const {
  if (is_zero() && deg_ != o.deg_) return o;
  if (o.is_zero() && deg_ != o.deg_) return *this;
  same_degree(*this, o);
  BinaryForm r = *this;
  for (int j = 0; j <= deg_; ++j) r.c_[j] += o.c_[j];
  return r;
}

BinaryForm BinaryForm::operator-() const {
  BinaryForm r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

BinaryForm BinaryForm::operator-(const BinaryForm& o) const { return *this + (-o); }

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
  if (deg_ < 0 || o.deg_ < 0) return BinaryForm();
  BinaryForm r(deg_ + o.deg_);
  for (int i = 0; i <= deg_; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j <= o.deg_; ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  return r;
}

BinaryForm BinaryForm::operator*(const Rat& c) const {
  BinaryForm r = *this;
  for (auto& x : r.c_) x *= c;
  return r;
}

bool BinaryForm::operator==(const BinaryForm& o) const {
  if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
  return deg_ == o.deg_ && c_ == o.c_;
}

BinaryForm BinaryForm::diff_s() const {
  if (deg_ <= 0) return BinaryForm();
  BinaryForm r(deg_ - 1);
  for (int j = 0; j < deg_; ++j) r.c_[j] = c_[j] * (deg_ - j);
  return r;
}

BinaryForm BinaryForm::diff_t() const {
  if (deg_ <= 0) return BinaryForm();
  BinaryForm r(deg_ - 1);
  for (int j = 1; j <= deg_; ++j) r.c_[j - 1] = c_[j] * j;
  return r;
}

Rat BinaryForm::eval(const Rat& s, const Rat& t) const {
  Rat acc = 0;
  for (int j = 0; j <= deg_; ++j) {
    Rat term = c_[j];
    for (int k = 0; k < deg_ - j; ++k) term *= s;
    for (int k = 0; k < j; ++k) term *= t;
    acc += term;
  }
  return acc;
}

std::string BinaryForm::str() const {
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j <= deg_; ++j) {
    if (c_[j] == 0) continue;
    Rat c = c_[j];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Rat a = abs(c);
    int es = deg_ - j, et = j;
    bool mono = es + et > 0;
    if (a != 1 || !mono) os << a.get_str() << (mono ? "*" : "");
    bool need = false;
    if (es > 0) { os << "s"; if (es > 1) os << "^" << es; need = true; }
    if (et > 0) { if (need) os << "*"; os << "t"; if (et > 1) os << "^" << et; }
  }
  return first ? "0" : os.str();
}

namespace {
// Dense univariate polynomials, index = power.
using Uni = std::vector<Rat>;

void trim(Uni& u) {
  while (!u.empty() && u.back() == 0) u.pop_back();
}

Uni uni_mod(Uni a, const Uni& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rat q = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
    trim(a);
  }
  return a;
}

Uni uni_gcd(Uni a, Uni b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Uni r = uni_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}
}  // namespace

std::optional<BinaryForm> divide_exact(const BinaryForm& a, const BinaryForm& b) {
  if (b.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
  if (a.is_zero()) return BinaryForm();
  int qd = a.degree() - b.degree();
  if (qd < 0) return std::nullopt;
  // work in the t-direction from the lowest nonzero index of b
  int lo = 0;
  while (b.coeff(lo) == 0) ++lo;
  std::vector<Rat> rem = a.coeffs();
  BinaryForm q(qd);
  for (int j = 0; j <= qd; ++j) {
    Rat c = rem[j + lo] / b.coeff(lo);
    q.coeff(j) = c;
    if (c == 0) continue;
    for (int i = 0; i <= b.degree(); ++i) rem[i + j] -= c * b.coeff(i);
  }
  for (auto& r : rem)
    if (r != 0) return std::nullopt;
  return q;
}

bool is_squarefree(const BinaryForm& f) {
  if (f.is_zero()) return false;
  int d = f.degree();
  int mt = 0;  // multiplicity of t as a factor
  while (f.coeff(mt) == 0) ++mt;
  if (mt > 1) return false;
  // chart t = 1: u(x) = f(x, 1) with index = power of x
  Uni u(d + 1);
  for (int j = 0; j <= d; ++j) u[d - j] = f.coeff(j);
  trim(u);
  if (u.size() <= 2) return true;
  Uni du(u.size() - 1);
  for (size_t i = 1; i < u.size(); ++i) du[i - 1] = u[i] * static_cast<long>(i);
  return uni_gcd(u, du).size() == 1;
}

BinaryForm from_roots(const std::vector<Rat>& roots) {
  BinaryForm f(0, {Rat(1)});
  for (auto& r : roots) f = f * BinaryForm(1, {-r, Rat(1)});
  return f;
}

}  // namespace rf
