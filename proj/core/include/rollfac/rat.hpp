#pragma once
#include <gmpxx.h>
#include <string>
#include <string_view>

namespace rf {

using Rat = mpq_class;

std::string to_string(const Rat& q);
Rat parse_rat(std::string_view text);

}  // namespace rf
