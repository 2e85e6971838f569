#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace rdbound {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

bool is_integer(const Rational& r);

// Throws NonIntegerResult unless r is an integer fitting in int64.
int64_t to_int64(const Rational& r);

std::string to_string(const Rational& r);

}  // namespace rdbound
