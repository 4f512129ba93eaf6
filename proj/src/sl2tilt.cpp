#include "vercat/sl2tilt.hpp"

namespace vercat {

namespace {

long pow_long(long p, long n) {
  long r = 1;
  while (n-- > 0) r *= p;
  return r;
}

}  // namespace

bool in_ideal_In(long a, long p, long n) {
  require_prime(p);
  return a >= pow_long(p, n) - 1;
}

bool in_ideal_Jn(long a, long p, long n) {
  require_prime(p);
  return a >= pow_long(p, n - 1) - 1;
}

IdealLevel ideal_level(long a, long p) {
  require_prime(p);
  if (a < p - 1) return IdealLevel{true, 0};
  long n = 1, bound = p * p;  // p^{n+1}
  while (a >= bound - 1) {
    ++n;
    bound *= p;
  }
  return IdealLevel{false, n};
}

TiltingSum tensor_decompose(const std::vector<std::pair<long, Int>>& factors, long p) {
  require_prime(p);
  Laurent prod = Laurent::one();
  for (const auto& [a, m] : factors) {
    Laurent ch = tilting_char(a, p);
    for (Int k = 0; k < m; ++k) prod = prod * ch;
  }
  BasisDecomp d = decompose(prod, Basis::Tilting, p);
  TiltingSum s;
  s.terms = d.terms;
  // Krull-Schmidt bookkeeping check: the summand characters must reproduce
  // the product exactly.
  BasisDecomp back{Basis::Tilting, s.terms};
  if (recompose(back, p) != prod)
    throw NotInNonnegativeSpan("tilting summands do not reproduce the product character");
  return s;
}

Int hom_dim(long a, long b, long p) {
  require_prime(p);
  BasisDecomp da = decompose(tilting_char(a, p), Basis::Weyl, p);
  BasisDecomp db = decompose(tilting_char(b, p), Basis::Weyl, p);
  Int total = 0;
  for (const auto& [k, ma] : da.terms) {
    auto it = db.terms.find(k);
    if (it != db.terms.end()) total += ma * it->second;
  }
  return total;
}

std::vector<long> socle_unit_test(long p, long n) {
  require_prime(p);
  long lo = pow_long(p, n - 1) - 1;
  long hi = pow_long(p, n) - 2;
  std::vector<long> hits;
  for (long b = lo; b <= hi; ++b) {
    BasisDecomp d = decompose(tilting_char(b, p), Basis::Weyl, p);
    if (d.terms.count(0)) hits.push_back(b);
  }
  return hits;
}

}  // namespace vercat
