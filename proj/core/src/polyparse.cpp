#include "rollfac/polyparse.hpp"

#include <cctype>

namespace rf {

namespace {

class Parser {
 public:
  Parser(std::string_view s, const AlphabetPtr& a, const NameResolver& r) : s_(s), a_(a), r_(r) {}

  MultiPoly run() {
    MultiPoly p = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly sum() {
    skip();
    MultiPoly acc(a_);
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    MultiPoly t = product();
    acc += neg ? -t : t;
    for (;;) {
      if (eat('+')) acc += product();
      else if (eat('-')) acc -= product();
      else break;
    }
    return acc;
  }

  MultiPoly product() {
    MultiPoly acc = power();
    for (;;) {
      skip();
      if (eat('*')) {
        acc = acc * power();
      } else if (eat('/')) {
        MultiPoly d = power();
        if (d.total_degree() > 0 || d.is_zero()) fail("division by a non-constant");
        acc = acc * (1 / d.constant_term());
      } else if (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(')) {
        acc = acc * power();  // implicit multiplication
      } else {
        break;
      }
    }
    return acc;
  }

  MultiPoly power() {
    MultiPoly b = atom();
    if (eat('^')) {
      skip();
      size_t st = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (st == pos_) fail("expected exponent");
      b = b.pow(std::stoi(std::string(s_.substr(st, pos_ - st))));
    }
    return b;
  }

  MultiPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly p = sum();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t st = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return MultiPoly(a_, Rat(mpz_class(std::string(s_.substr(st, pos_ - st)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t st = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '.'))
        ++pos_;
      std::string name(s_.substr(st, pos_ - st));
      if (r_) {
        if (auto p = r_(name)) return p->rebase(a_);
      }
      int i = a_->index_of(name);
      if (i < 0) fail("unknown identifier '" + name + "'");
      return MultiPoly::var(a_, i);
    }
    fail("unexpected character");
  }

  std::string_view s_;
  const AlphabetPtr& a_;
  const NameResolver& r_;
  size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const AlphabetPtr& alphabet, const NameResolver& resolve) {
  return Parser(text, alphabet, resolve).run();
}

}  // namespace rf
