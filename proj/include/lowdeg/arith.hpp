#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lowdeg {

using Integer = mpz_class;
using Rational = mpq_class;

/// Smallest integer >= q.
Integer ceil(const Rational& q);
/// Largest integer <= q.
Integer floor(const Rational& q);

/// Renders `a` or `a/b` in lowest terms.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses decimal integers and `a/b` fractions. Throws InputError.
Integer parse_integer(std::string_view text);
Rational parse_rational(std::string_view text);

/// Narrowing with a range check. Throws InputError when `z` does not fit.
long to_long(const Integer& z);

}  // namespace lowdeg
