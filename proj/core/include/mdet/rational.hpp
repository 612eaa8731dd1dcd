#ifndef MDET_RATIONAL_HPP
#define MDET_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace mdet {

// All arithmetic in this library is exact. Rat is always kept in lowest
// terms with a positive denominator (GMP canonical form).
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

/// Parses "p/q" or "p" with optional leading sign. Decimal points and
/// exponents are rejected: inputs must be exact.
Rat parse_rational(const std::string& text);

std::string to_string(const Rat& q);
std::string to_string(const Int& z);

bool is_integer(const Rat& q);
Int numerator(const Rat& q);
Int denominator(const Rat& q);

/// Floor of the exact rational (used nowhere critical; convenience).
Int floor_rat(const Rat& q);

Int binomial(int n, int k);
Int int_pow(const Int& base, unsigned e);

std::vector<Rat> parse_rational_list(const std::string& csv);

}  // namespace mdet

#endif
