// Exact integer and rational arithmetic, p-adic helpers.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace charone {

  using Integer  = boost::multiprecision::cpp_int;
  using Rational = boost::multiprecision::cpp_rational;

  Integer numer(Rational const& q);
  Integer denom(Rational const& q);
  bool    is_integer(Rational const& q);
  Integer floor(Rational const& q);
  Integer ceil(Rational const& q);

  // "a" or "a/b", with the sign on the numerator.
  std::string to_string(Integer const& n);
  std::string to_string(Rational const& q);

  // Accepts "a", "-a", "a/b"; throws std::invalid_argument otherwise.
  Rational parse_rational(std::string_view text);

  Integer  ipow(Integer const& base, std::uint64_t exponent);
  // p^e for any integer e.
  Rational rpow(Integer const& p, std::int64_t exponent);

  // Largest k with p^k | n.  Throws on n == 0.
  std::int64_t padic_valuation(Integer const& n, Integer const& p);
  std::int64_t padic_valuation(Rational const& q, Integer const& p);

  // Membership in the localization Z_(p): denominator coprime to p.
  bool is_padic_integer(Rational const& q, Integer const& p);

  // Inverse of a modulo m; requires gcd(a, m) == 1 and m >= 1.
  Integer mod_inverse(Integer const& a, Integer const& m);

  // The unique r in Z[1/p] with 0 <= r < p^b and r - c in p^b Z_(p).
  Rational canonical_residue(Rational const& c, Integer const& p, std::int64_t b);

  bool is_prime(std::int64_t n);

}  // namespace charone
