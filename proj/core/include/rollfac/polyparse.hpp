#pragma once
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "rollfac/multipoly.hpp"

namespace rf {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Resolves an identifier to a polynomial over the target alphabet.
using NameResolver = std::function<std::optional<MultiPoly>(const std::string&)>;

// Grammar: sums and products of numbers, identifiers, ^k powers and parentheses.
// A '/' is allowed only with a constant right-hand side.
MultiPoly parse_poly(std::string_view text, const AlphabetPtr& alphabet, const NameResolver& resolve = {});

}  // namespace rf
