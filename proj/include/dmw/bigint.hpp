// bigint.hpp — exact integer/rational helpers on top of GMP.  See LICENSE.
//
// Everything that feeds a table, a dimension, or a bound goes through these
// routines; no floating point is involved except in the explicitly named
// decimal formatters.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dmw {

using Int = mpz_class;
using Rat = mpq_class;

// n! for n >= 0.
inline Int factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

// Binomial coefficient, zero outside the triangle.
inline Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

// Double factorial n!! with the usual empty-product conventions
// (-1)!! = 0!! = 1.
inline Int double_factorial(long n) {
  if (n < -1) throw std::invalid_argument("double_factorial: argument < -1");
  Int r(1);
  for (long i = n; i >= 2; i -= 2) r *= i;
  return r;
}

// Catalan number C(n) = binom(2n, n) / (n + 1).
inline Int catalan(long n) {
  if (n < 0) throw std::invalid_argument("catalan: negative argument");
  Int r = binomial(2 * n, n);
  r /= (n + 1);
  return r;
}

// Stirling numbers of the second kind S(n, k): partitions of an n-set into
// exactly k blocks.
inline Int stirling2(long n, long k) {
  if (n < 0 || k < 0) return Int(0);
  if (n == 0 && k == 0) return Int(1);
  if (k == 0 || k > n) return Int(0);
  std::vector<std::vector<Int>> s(n + 1, std::vector<Int>(k + 1, Int(0)));
  s[0][0] = 1;
  for (long i = 1; i <= n; ++i)
    for (long j = 1; j <= std::min(i, k); ++j)
      s[i][j] = s[i - 1][j - 1] + Int(j) * s[i - 1][j];
  return s[n][k];
}

// Bell number B(n) = number of set partitions of an n-set.
inline Int bell(long n) {
  if (n < 0) throw std::invalid_argument("bell: negative argument");
  // Bell triangle.
  std::vector<Int> row{Int(1)};
  for (long i = 1; i <= n; ++i) {
    std::vector<Int> next(i + 1);
    next[0] = row.back();
    for (long j = 1; j <= i; ++j) next[j] = next[j - 1] + row[j - 1];
    row = std::move(next);
  }
  return row[0];
}

// Number of integer partitions of k (p(0) = 1).
inline Int partition_count(long k) {
  if (k < 0) return Int(0);
  std::vector<Int> p(k + 1, Int(0));
  p[0] = 1;
  for (long part = 1; part <= k; ++part)
    for (long s = part; s <= k; ++s) p[s] += p[s - part];
  return p[k];
}

// Number of p-regular partitions of k: partitions in which no part is
// repeated p or more times.  For p = 0 this is plain partition_count.
inline Int p_regular_partition_count(long k, long p) {
  if (p == 0) return partition_count(k);
  if (p < 2) throw std::invalid_argument("p_regular_partition_count: p must be 0 or >= 2");
  if (k < 0) return Int(0);
  std::vector<Int> cnt(k + 1, Int(0));
  cnt[0] = 1;
  for (long part = 1; part <= k; ++part) {
    // each part may appear 0 .. p-1 times
    std::vector<Int> next(k + 1, Int(0));
    for (long s = 0; s <= k; ++s) {
      if (cnt[s] == 0) continue;
      for (long rep = 0; rep < p && s + rep * part <= k; ++rep)
        next[s + rep * part] += cnt[s];
    }
    cnt = std::move(next);
  }
  return cnt[k];
}

// Floor of the integer square root.
inline long isqrt_floor(long n) {
  if (n < 0) throw std::invalid_argument("isqrt_floor: negative argument");
  long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Deterministic primality for machine-size arguments.
inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline long smallest_prime_factor(long n) {
  if (n < 2) throw std::invalid_argument("smallest_prime_factor: argument < 2");
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

// Prime factorisation n = prod r_i^{d_i}, pairs (r_i, d_i) with r_i ascending.
inline std::vector<std::pair<long, int>> factor_int(long n) {
  if (n < 1) throw std::invalid_argument("factor_int: argument < 1");
  std::vector<std::pair<long, int>> out;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) { n /= d; ++e; }
      out.emplace_back(d, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline long euler_phi(long n) {
  if (n < 1) throw std::invalid_argument("euler_phi: argument < 1");
  long r = n;
  for (auto [p, e] : factor_int(n)) { (void)e; r -= r / p; }
  return r;
}

inline std::vector<long> divisors(long n) {
  std::vector<long> out;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Smallest b >= 0 with b^k >= x (x >= 0, k >= 1): the ceiling of the real
// k-th root.
inline Int kth_root_ceil(const Int& x, long k) {
  if (k < 1) throw std::invalid_argument("kth_root_ceil: k < 1");
  if (x <= 0) return Int(0);
  Int r;
  // mpz_root returns nonzero iff the root is exact; it truncates otherwise.
  int exact = mpz_root(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(k));
  if (!exact) r += 1;
  return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// ---------------------------------------------------------------------------
// decimal formatting (display only — never used in a comparison)
// ---------------------------------------------------------------------------

// Render a rational with `sig` significant digits.  Positional notation for
// moderate magnitudes, scientific otherwise.
inline std::string rat_to_decimal(const Rat& v, int sig = 6) {
  if (v == 0) return "0";
  mpf_class f(0, 256);
  mpf_set_q(f.get_mpf_t(), v.get_mpq_t());
  mp_exp_t exp10 = 0;
  std::string digits = f.get_str(exp10, 10, static_cast<size_t>(sig));
  bool neg = !digits.empty() && digits[0] == '-';
  if (neg) digits.erase(digits.begin());
  while (static_cast<int>(digits.size()) < sig) digits.push_back('0');
  std::string out;
  if (exp10 >= -3 && exp10 <= 9) {
    if (exp10 <= 0) {
      out = "0." + std::string(static_cast<size_t>(-exp10), '0') + digits;
    } else if (static_cast<size_t>(exp10) >= digits.size()) {
      out = digits + std::string(static_cast<size_t>(exp10) - digits.size(), '0');
    } else {
      out = digits.substr(0, static_cast<size_t>(exp10)) + "." +
            digits.substr(static_cast<size_t>(exp10));
    }
  } else {
    out = digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    out += "e" + std::to_string(exp10 - 1);
  }
  return (neg ? "-" : "") + out;
}

// Decimal rendering of v / sqrt(size), used for the ratio reports.
inline std::string ratio_decimal(const Rat& v, const Int& size, int sig = 6) {
  if (size <= 0) throw std::invalid_argument("ratio_decimal: size must be positive");
  mpf_class fv(0, 256), fs(0, 256);
  mpf_set_q(fv.get_mpf_t(), Rat(v).get_mpq_t());
  mpf_set_z(fs.get_mpf_t(), size.get_mpz_t());
  mpf_class root(0, 256);
  mpf_sqrt(root.get_mpf_t(), fs.get_mpf_t());
  mpf_class q = fv / root;
  // reuse the rational formatter by converting at high precision
  mp_exp_t exp10 = 0;
  std::string digits = q.get_str(exp10, 10, static_cast<size_t>(sig));
  if (digits.empty() || digits == "-") return "0";
  bool neg = digits[0] == '-';
  if (neg) digits.erase(digits.begin());
  while (static_cast<int>(digits.size()) < sig) digits.push_back('0');
  std::string out;
  if (exp10 >= -3 && exp10 <= 9) {
    if (exp10 <= 0) out = "0." + std::string(static_cast<size_t>(-exp10), '0') + digits;
    else if (static_cast<size_t>(exp10) >= digits.size())
      out = digits + std::string(static_cast<size_t>(exp10) - digits.size(), '0');
    else
      out = digits.substr(0, static_cast<size_t>(exp10)) + "." +
            digits.substr(static_cast<size_t>(exp10));
  } else {
    out = digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    out += "e" + std::to_string(exp10 - 1);
  }
  return (neg ? "-" : "") + out;
}

}  // namespace dmw
