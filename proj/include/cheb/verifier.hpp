#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cheb {

enum class ConjClass { IDENTITY, NONTRIVIAL };

struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_fundamental_discriminant(std::int64_t D);

struct QuadraticField {
  std::int64_t D = 0;
  int n_L = 2;
  double log_dL = 0;

  // Throws std::domain_error unless D is a fundamental discriminant.
  static QuadraticField make(std::int64_t D);
};

// Kronecker symbol (D/p) for a prime p: 0 ramified, +1 split, -1 inert.
int kronecker(std::int64_t D, std::uint64_t p);

// Default 1e9, or CHEB_SIEVE_LIMIT when set.
std::uint64_t sieve_limit();

// Calls f(p) for every prime p <= n in increasing order (segmented sieve).
template <class F>
void for_each_prime(std::uint64_t n, F&& f);

struct ClassCount {
  ConjClass cls;
  double x = 0;
  double psi = 0;
  double ec = 0;  // |psi - x/2| / (x/2)
};

ClassCount psi_C_exact(const QuadraticField& L, double x, ConjClass cls, std::uint64_t limit = sieve_limit());

struct EquidistRow {
  double x = 0;
  ClassCount identity, nontrivial;
  double unramified_total = 0;  // sum of log p over p^k <= x with p not dividing D
  bool partition_ok = false;    // identity + nontrivial == total to 1e-9
};

// Grid need not be sorted; rows come back in grid order.
std::vector<EquidistRow> equidist_report(const QuadraticField& L, const std::vector<double>& xs,
                                         std::uint64_t limit = sieve_limit());

// ---- implementation of the sieve template

namespace detail {
std::vector<std::uint32_t> small_primes(std::uint64_t n);
inline constexpr std::uint64_t kSegment = 10'000'000;
}  // namespace detail

template <class F>
void for_each_prime(std::uint64_t n, F&& f) {
  if (n < 2) return;
  std::uint64_t r = 1;
  while ((r + 1) * (r + 1) <= n) ++r;
  const std::vector<std::uint32_t> base = detail::small_primes(r);
  std::vector<char> seg;
  for (std::uint64_t lo = 2; lo <= n; lo += detail::kSegment) {
    const std::uint64_t hi = std::min(n, lo + detail::kSegment - 1);
    seg.assign(hi - lo + 1, 1);
    for (std::uint64_t p : base) {
      if (p * p > hi) break;
      std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
      for (std::uint64_t j = start; j <= hi; j += p) seg[j - lo] = 0;
    }
    for (std::uint64_t i = lo; i <= hi; ++i)
      if (seg[i - lo]) f(i);
  }
}

}  // namespace cheb
