#ifndef VERCAT_CYCLO_HPP
#define VERCAT_CYCLO_HPP

#include <vector>

#include "vercat/charring.hpp"

namespace vercat {

/// Primitive root-of-unity order used in the tilting vanishing criterion:
/// p^n for odd p, 2^{n+1} for p = 2. The corresponding cyclotomic polynomial
/// is monic with coefficients in {0,1}, so reduction stays over Z.
struct CyclotomicIndex {
  long p = 3;
  long n = 1;

  long order() const;
  /// Phi_order as an ordinary polynomial (exponent -> coefficient).
  std::vector<long> phi_exponents() const;  // exponents carrying coefficient 1
  long phi_degree() const;
};

/// True iff f(omega) = 0 for omega a primitive root of the index's order,
/// decided by exact reduction modulo the cyclotomic polynomial.
bool vanishes_at_root(const Laurent& f, const CyclotomicIndex& idx);

/// vanishes_at_root(tilting_char(a, p), {p, n}) for a = 0..amax.
std::vector<char> tilting_vanishing_sweep(long p, long n, long amax);
std::vector<char> tilting_vanishing_sweep_serial(long p, long n, long amax);

}  // namespace vercat

#endif
