#include "eulerref/numeric.hpp"

#include <cstdio>
#include <vector>

namespace eulerref {

Count binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Count out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

Count factorial(long n) {
  if (n < 0) return 0;
  Count out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Count ipow(long base, unsigned long exp) {
  if (exp == 0) return 1;
  Count out;
  Count b = base;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exp);
  return out;
}

Count rising_factorial(long k, unsigned long m) {
  Count out = 1;
  for (unsigned long i = 0; i < m; ++i) out *= k + static_cast<long>(i);
  return out;
}

Ratio make_ratio(const Count& num, const Count& den) {
  Ratio r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Ratio& r) { return r.get_str(); }
std::string to_string(const Count& c) { return c.get_str(); }

std::string to_decimal(const Ratio& r, int significant_digits) {
  if (r == 0) return "0";
  // Enough binary precision for the requested digits plus headroom.
  mpf_class f(0, static_cast<mp_bitcnt_t>(significant_digits * 4 + 64));
  f = r;
  int len = gmp_snprintf(nullptr, 0, "%.*Fg", significant_digits, f.get_mpf_t());
  std::vector<char> buf(static_cast<std::size_t>(len) + 1);
  gmp_snprintf(buf.data(), buf.size(), "%.*Fg", significant_digits, f.get_mpf_t());
  return std::string(buf.data());
}

}  // namespace eulerref
