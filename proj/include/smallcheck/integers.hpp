#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace smallcheck {

/// Exact arbitrary-precision integer. All arithmetic in the algebra core
/// goes through this type; machine-word overflow is never permitted.
using Int = mpz_class;

inline Int int_gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int int_lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Int int_abs(const Int& a) { return a >= 0 ? a : Int(-a); }

inline Int int_pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

bool is_prime(const Int& n);

/// Factorization of n >= 1 into prime powers, keyed by ascending prime.
/// Trial division for small factors, Pollard rho for the rest.
std::map<Int, unsigned> factorize(const Int& n);

std::string to_string(const Int& n);

}  // namespace smallcheck
