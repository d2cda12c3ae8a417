#pragma once

#include <gmpxx.h>
#include <string>

namespace lexalg {

using Rational = mpq_class;

inline std::string to_string(const Rational &q) { return q.get_str(); }

// Accepts "p" or "p/q"; result is canonicalized.
Rational parse_rational(const std::string &text);

inline bool is_integer(const Rational &q) { return q.get_den() == 1; }

} // namespace lexalg
