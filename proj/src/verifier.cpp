#include "cheb/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>

namespace cheb {

namespace {

bool squarefree(std::uint64_t n) {
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Jacobi symbol (a/n), n odd positive.
int jacobi(std::int64_t a, std::int64_t n) {
  a = mod(a, n);
  int s = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const std::int64_t r = n % 8;
      if (r == 3 || r == 5) s = -s;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) s = -s;
    a %= n;
  }
  return n == 1 ? s : 0;
}

// Neumaier variant of compensated summation.
struct Kahan {
  double sum = 0, c = 0;
  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      c += (sum - t) + v;
    else
      c += (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + c; }
};

}  // namespace

bool is_fundamental_discriminant(std::int64_t D) {
  if (D == 0 || D == 1) return false;
  const std::int64_t r = mod(D, 4);
  const std::uint64_t a = D < 0 ? std::uint64_t(-D) : std::uint64_t(D);
  if (r == 1) return squarefree(a);
  if (r != 0) return false;
  const std::int64_t d = D / 4;
  const std::int64_t rd = mod(d, 4);
  return (rd == 2 || rd == 3) && squarefree(a / 4);
}

QuadraticField QuadraticField::make(std::int64_t D) {
  if (!is_fundamental_discriminant(D))
    throw std::domain_error(std::to_string(D) +
                            " is not a fundamental discriminant (need D = 1 mod 4 squarefree, "
                            "or D = 4d with d = 2, 3 mod 4 squarefree)");
  return {D, 2, std::log(std::abs(double(D)))};
}

namespace {

int kron_prime(std::int64_t D, std::uint64_t p) {
  if (p == 2) {
    if (D % 2 == 0) return 0;
    const std::int64_t r = mod(D, 8);
    return (r == 1 || r == 7) ? 1 : -1;
  }
  return jacobi(D, std::int64_t(p));
}

}  // namespace

int kronecker(std::int64_t D, std::uint64_t p) {
  if (!is_fundamental_discriminant(D)) throw std::domain_error("kronecker: D is not a fundamental discriminant");
  if (p < 2) throw std::domain_error("kronecker: p must be prime");
  return kron_prime(D, p);
}

std::uint64_t sieve_limit() {
  if (const char* s = std::getenv("CHEB_SIEVE_LIMIT")) {
    char* end = nullptr;
    const double v = std::strtod(s, &end);
    if (end != s && v >= 2) return std::uint64_t(v);
  }
  return 1'000'000'000ULL;
}

std::vector<std::uint32_t> detail::small_primes(std::uint64_t n) {
  std::vector<char> is(n + 1, 1);
  std::vector<std::uint32_t> out;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (!is[i]) continue;
    out.push_back(std::uint32_t(i));
    for (std::uint64_t j = i * i; j <= n; j += i) is[j] = 0;
  }
  return out;
}

std::vector<EquidistRow> equidist_report(const QuadraticField& L, const std::vector<double>& xs,
                                         std::uint64_t limit) {
  std::vector<EquidistRow> rows(xs.size());
  if (xs.empty()) return rows;
  for (double x : xs) {
    if (!(x >= 1)) throw std::domain_error("psi_C needs x >= 1");
    if (x > double(limit))
      throw ResourceError("x = " + std::to_string(x) + " exceeds the sieve limit " + std::to_string(limit));
  }
  std::vector<size_t> order(xs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return xs[a] < xs[b]; });
  const std::uint64_t top = std::uint64_t(std::floor(xs[order.back()]));

  // Prime powers p^k with k >= 2 are rare; collect them as (p^k, class, log p) events.
  struct Event {
    std::uint64_t at;
    int cls;  // 0 identity, 1 nontrivial
    double lp;
  };
  std::vector<Event> powers;

  Kahan id, nt;
  size_t next = 0;
  auto emit = [&](std::uint64_t upto) {
    // record every grid point with floor(x) < upto
    while (next < order.size() && std::uint64_t(std::floor(xs[order[next]])) < upto) {
      EquidistRow& r = rows[order[next]];
      r.x = xs[order[next]];
      r.identity = {ConjClass::IDENTITY, r.x, id.value(), 0};
      r.nontrivial = {ConjClass::NONTRIVIAL, r.x, nt.value(), 0};
      ++next;
    }
  };

  for_each_prime(top, [&](std::uint64_t p) {
    emit(p);
    const int k = kron_prime(L.D, p);
    if (k == 0) return;
    const double lp = std::log(double(p));
    (k == 1 ? id : nt).add(lp);
    std::uint64_t q = p;
    int e = 1;
    while (q <= top / p) {
      q *= p;
      ++e;
      const bool ident = k == 1 || e % 2 == 0;
      powers.push_back({q, ident ? 0 : 1, lp});
    }
  });
  emit(top + 1);

  std::sort(powers.begin(), powers.end(),
            [](const Event& a, const Event& b) { return a.at != b.at ? a.at < b.at : a.lp < b.lp; });
  for (auto& r : rows) {
    Kahan pid, pnt;
    pid.add(r.identity.psi);
    pnt.add(r.nontrivial.psi);
    const auto fx = std::uint64_t(std::floor(r.x));
    for (const Event& ev : powers) {
      if (ev.at > fx) break;
      (ev.cls == 0 ? pid : pnt).add(ev.lp);
    }
    r.identity.psi = pid.value();
    r.nontrivial.psi = pnt.value();
    const double half = r.x / 2;
    r.identity.ec = std::abs(r.identity.psi - half) / half;
    r.nontrivial.ec = std::abs(r.nontrivial.psi - half) / half;
  }

  // Independent total for the partition check: all unramified p^k <= x.
  std::vector<std::pair<std::uint64_t, double>> all;
  for_each_prime(top, [&](std::uint64_t p) {
    if (L.D % std::int64_t(p) == 0) return;
    const double lp = std::log(double(p));
    for (std::uint64_t q = p;; q *= p) {
      all.push_back({q, lp});
      if (q > top / p) break;
    }
  });
  std::sort(all.begin(), all.end());
  {
    Kahan tot;
    size_t j = 0;
    for (size_t i : order) {
      const auto fx = std::uint64_t(std::floor(xs[i]));
      while (j < all.size() && all[j].first <= fx) tot.add(all[j++].second);
      EquidistRow& r = rows[i];
      r.unramified_total = tot.value();
      r.partition_ok = std::abs(r.identity.psi + r.nontrivial.psi - r.unramified_total) <=
                       1e-9 * std::max(1.0, r.unramified_total);
    }
  }
  return rows;
}

ClassCount psi_C_exact(const QuadraticField& L, double x, ConjClass cls, std::uint64_t limit) {
  const EquidistRow r = equidist_report(L, {x}, limit)[0];
  return cls == ConjClass::IDENTITY ? r.identity : r.nontrivial;
}

}  // namespace cheb
