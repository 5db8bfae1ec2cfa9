#pragma once

#include <gmpxx.h>

#include <string>

namespace dpd {

using Rat = mpq_class;

// Accepts "p", "p/q", "-p/q". Throws std::invalid_argument on anything else.
Rat parse_rat(const std::string& s);

// "p/q", or "p" when q == 1.
std::string to_string(const Rat& r);

}  // namespace dpd
