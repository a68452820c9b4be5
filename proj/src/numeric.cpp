#include "charone/numeric.hpp"

#include <algorithm>
#include <stdexcept>

namespace charone {

  Integer numer(Rational const& q) {
    return boost::multiprecision::numerator(q);
  }

  Integer denom(Rational const& q) {
    return boost::multiprecision::denominator(q);
  }

  bool is_integer(Rational const& q) {
    return denom(q) == 1;
  }

  Integer floor(Rational const& q) {
    Integer n = numer(q), d = denom(q);
    Integer f = n / d;
    if (n < 0 && f * d != n) {
      --f;
    }
    return f;
  }

  Integer ceil(Rational const& q) {
    return -floor(-q);
  }

  std::string to_string(Integer const& n) {
    return n.str();
  }

  std::string to_string(Rational const& q) {
    if (is_integer(q)) {
      return numer(q).str();
    }
    return numer(q).str() + "/" + denom(q).str();
  }

  namespace {
    Integer parse_integer(std::string_view text, std::string_view whole) {
      std::size_t i = 0;
      bool        negative = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
      }
      if (i == text.size()) {
        throw std::invalid_argument("malformed rational: '" + std::string(whole)
                                    + "'");
      }
      Integer value = 0;
      for (; i < text.size(); ++i) {
        char c = text[i];
        if (c < '0' || c > '9') {
          throw std::invalid_argument("malformed rational: '"
                                      + std::string(whole) + "'");
        }
        value = value * 10 + (c - '0');
      }
      return negative ? Integer(-value) : value;
    }
  }  // namespace

  Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      return Rational(parse_integer(text, text));
    }
    Integer num = parse_integer(text.substr(0, slash), text);
    Integer den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) {
      throw std::invalid_argument("zero denominator: '" + std::string(text)
                                  + "'");
    }
    return Rational(num, den);
  }

  Integer ipow(Integer const& base, std::uint64_t exponent) {
    Integer result = 1;
    Integer b      = base;
    while (exponent > 0) {
      if (exponent & 1U) {
        result *= b;
      }
      b *= b;
      exponent >>= 1U;
    }
    return result;
  }

  Rational rpow(Integer const& p, std::int64_t exponent) {
    if (exponent >= 0) {
      return Rational(ipow(p, static_cast<std::uint64_t>(exponent)));
    }
    return Rational(Integer(1), ipow(p, static_cast<std::uint64_t>(-exponent)));
  }

  std::int64_t padic_valuation(Integer const& n, Integer const& p) {
    if (n == 0) {
      throw std::domain_error("p-adic valuation of zero");
    }
    if (p < 2) {
      throw std::invalid_argument("p-adic valuation needs p >= 2");
    }
    std::int64_t k = 0;
    Integer      m = abs(n);
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    return k;
  }

  std::int64_t padic_valuation(Rational const& q, Integer const& p) {
    return padic_valuation(numer(q), p) - padic_valuation(denom(q), p);
  }

  bool is_padic_integer(Rational const& q, Integer const& p) {
    return denom(q) % p != 0;
  }

  Integer mod_inverse(Integer const& a, Integer const& m) {
    if (m == 1) {
      return 0;
    }
    Integer old_r = ((a % m) + m) % m, r = m;
    Integer old_s = 1, s = 0;
    while (r != 0) {
      Integer q   = old_r / r;
      Integer tmp = old_r - q * r;
      old_r       = r;
      r           = tmp;
      tmp         = old_s - q * s;
      old_s       = s;
      s           = tmp;
    }
    if (old_r != 1) {
      throw std::domain_error("no modular inverse");
    }
    return ((old_s % m) + m) % m;
  }

  Rational canonical_residue(Rational const& c, Integer const& p, std::int64_t b) {
    if (c == 0) {
      return 0;
    }
    std::int64_t v = padic_valuation(c, p);
    if (v >= b) {
      return 0;
    }
    std::int64_t k       = std::max<std::int64_t>({0, -v, -b});
    Rational     shifted = c * rpow(p, k);
    Integer      modulus = ipow(p, static_cast<std::uint64_t>(b + k));
    Integer      n       = numer(shifted) % modulus;
    n                    = (n * mod_inverse(denom(shifted), modulus)) % modulus;
    if (n < 0) {
      n += modulus;
    }
    return Rational(n) / rpow(p, k);
  }

  bool is_prime(std::int64_t n) {
    if (n < 2) {
      return false;
    }
    for (std::int64_t q = 2; q * q <= n; ++q) {
      if (n % q == 0) {
        return false;
      }
    }
    return true;
  }

}  // namespace charone
