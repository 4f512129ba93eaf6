#include "vercat/charring.hpp"

#include <mutex>
#include <string>
#include <vector>

namespace vercat {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require_prime(long p) {
  if (!is_prime(p)) throw InvalidPrime("p = " + std::to_string(p) + " is not prime");
}

Laurent weyl_char(long a) {
  Laurent f;
  for (long e = -a; e <= a; e += 2) f.set_coeff(e, 1);
  return f;
}

Laurent simple_char(long a, long p) {
  require_prime(p);
  Laurent f = Laurent::one();
  long scale = 1;
  while (a > 0) {
    long digit = a % p;
    if (digit > 0) f = f * weyl_char(digit).substitute_power(scale);
    a /= p;
    scale *= p;
  }
  return f;
}

namespace {

// T_a for a in the first two windows.
Laurent tilting_base(long a, long p) {
  if (a <= p - 1) return weyl_char(a);
  return weyl_char(a) + weyl_char(2 * p - 2 - a);
}

Laurent tilting_impl(long a, long p) {
  if (a <= 2 * p - 2) return tilting_base(a, p);
  long pr = p;
  while (pr * p - 1 <= a) pr *= p;  // maximal r with p^r - 1 <= a
  long b = (a + 1) / pr - 1;        // 0 <= b <= p - 1
  long c = a - pr * b;              // p^r - 1 <= c <= 2p^r - 2
  if (b > 0) return tilting_impl(c, p) * tilting_impl(b, p).substitute_power(pr);
  // a sits inside the window [p^r-1, 2p^r-2]: peel one Frobenius layer,
  // with the twisted factor in the Donkin window [p-1, 2p-2].
  long prm = pr / p;
  long bp = (a + 1) / prm - 1;  // p-1 <= bp <= 2p-2
  long cp = a - prm * bp;       // p^{r-1}-1 <= cp <= 2p^{r-1}-2
  return tilting_impl(cp, p) * tilting_base(bp, p).substitute_power(prm);
}

// Pure cache; idempotent insertion keeps it safe under concurrent use.
std::mutex tilt_memo_mutex;
std::map<std::pair<long, long>, Laurent> tilt_memo;

}  // namespace

Laurent tilting_char(long a, long p) {
  require_prime(p);
  {
    std::lock_guard<std::mutex> lock(tilt_memo_mutex);
    auto it = tilt_memo.find({a, p});
    if (it != tilt_memo.end()) return it->second;
  }
  Laurent f = tilting_impl(a, p);
  {
    std::lock_guard<std::mutex> lock(tilt_memo_mutex);
    tilt_memo.try_emplace({a, p}, f);
  }
  return f;
}

Laurent basis_char(Basis basis, long a, long p) {
  switch (basis) {
    case Basis::Weyl:
      return weyl_char(a);
    case Basis::Simple:
      return simple_char(a, p);
    case Basis::Tilting:
      return tilting_char(a, p);
  }
  throw Error("unreachable basis");
}

BasisDecomp decompose(const Laurent& f, Basis basis, long p) {
  if (basis != Basis::Weyl) require_prime(p);
  BasisDecomp d;
  d.basis = basis;
  Laurent rem = f;
  while (!rem.is_zero()) {
    long e = rem.max_exp();
    if (e < 0)
      throw NotInNonnegativeSpan("remainder has no valid top exponent");
    Int m = rem.coeff(e);
    if (m < 0) throw NotInNonnegativeSpan("negative multiplicity at index " + std::to_string(e));
    Laurent ch = basis_char(basis, e, p);
    for (const auto& [ce, cc] : ch.terms()) rem.add_term(ce, -m * cc);
    d.terms[e] = std::move(m);
  }
  return d;
}

Laurent recompose(const BasisDecomp& d, long p) {
  Laurent f;
  for (const auto& [a, m] : d.terms) {
    Laurent ch = basis_char(d.basis, a, p);
    for (const auto& [e, c] : ch.terms()) f.add_term(e, m * c);
  }
  return f;
}

Laurent frobenius_twist(const Laurent& f, long r, long p) {
  require_prime(p);
  long scale = 1;
  for (long k = 0; k < r; ++k) scale *= p;
  return f.substitute_power(scale);
}

namespace {

Int binomial(const Int& n, long k) {
  Int out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

// Truncated product over the weight multiset, one generating series per
// distinct exponent: sym uses 1/(1-x^e t)^m, ext uses (1+x^e t)^m.
Laurent power_sum_dp(const Laurent& f, long r, bool sym) {
  if (!f.is_nonnegative()) throw NotACharacter("negative coefficient in character");
  std::vector<Laurent> acc(static_cast<size_t>(r) + 1);
  acc[0] = Laurent::one();
  for (const auto& [e, m] : f.terms()) {
    std::vector<Laurent> next(static_cast<size_t>(r) + 1);
    for (long j = 0; j <= r; ++j) {
      Int cj = sym ? binomial(m + j - 1, j) : binomial(m, j);
      if (cj == 0) continue;
      Laurent factor = Laurent::monomial(e * j, cj);
      for (long k = 0; j + k <= r; ++k) {
        if (acc[k].is_zero()) continue;
        next[j + k] += factor * acc[k];
      }
    }
    acc = std::move(next);
  }
  return acc[static_cast<size_t>(r)];
}

}  // namespace

Laurent sym_power_char(const Laurent& f, long r) { return power_sum_dp(f, r, true); }
Laurent ext_power_char(const Laurent& f, long r) { return power_sum_dp(f, r, false); }

}  // namespace vercat
