#include "smallcheck/integers.hpp"

#include <stdexcept>

namespace smallcheck {

bool is_prime(const Int& n) {
  if (n < 2) return false;
  // 40 Miller-Rabin rounds; "probably prime" is treated as prime.
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

Int pollard_rho(const Int& n) {
  // n odd composite, not a prime power of a small prime.
  if (n % 2 == 0) return 2;
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0xC0FFEEUL);
  while (true) {
    Int x = rng.get_z_range(n - 2) + 2;
    Int y = x;
    Int c = rng.get_z_range(n - 1) + 1;
    Int d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      d = int_gcd(int_abs(x - y), n);
    }
    if (d != n) return d;
  }
}

void factor_into(const Int& n, std::map<Int, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n] += 1;
    return;
  }
  Int d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::map<Int, unsigned> factorize(const Int& n) {
  if (n < 1) throw std::invalid_argument("factorize: argument must be >= 1");
  std::map<Int, unsigned> out;
  Int m = n;
  for (Int p : {Int(2), Int(3), Int(5), Int(7)}) {
    while (m % p == 0) {
      out[p] += 1;
      m /= p;
    }
  }
  Int p = 11;
  while (m > 1 && p * p <= m && p < 100000) {
    while (m % p == 0) {
      out[p] += 1;
      m /= p;
    }
    p += 2;
  }
  factor_into(m, out);
  return out;
}

std::string to_string(const Int& n) { return n.get_str(); }

}  // namespace smallcheck
