#include "rollfac/rat.hpp"

#include <stdexcept>

namespace rf {

std::string to_string(const Rat& q) { return q.get_str(); }

Rat parse_rat(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(mpz_class(s));
    mpz_class num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad rational: " + s);
  }
}

}  // namespace rf
