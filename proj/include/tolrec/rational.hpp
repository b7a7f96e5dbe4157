#pragma once

#include <gmpxx.h>

#include <string>

namespace tolrec {

using Rational = mpq_class;

// Accepts "p/q", "p" and "-p/q". Result is canonical.
Rational parse_rational(const std::string& s);
// Always "p/q" (q = 1 for integers).
std::string to_string(const Rational& q);

}  // namespace tolrec
