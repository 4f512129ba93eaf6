#ifndef VERCAT_LAURENT_HPP
#define VERCAT_LAURENT_HPP

#include <gmpxx.h>

#include <initializer_list>
#include <map>
#include <utility>

#include "vercat/errors.hpp"

namespace vercat {

using Int = mpz_class;
using Rat = mpq_class;

/// Integer Laurent polynomial in one variable. Zero coefficients are never
/// stored, so the zero polynomial is the empty map. Characters produced by
/// this library are symmetric (coeff(e) == coeff(-e)), but the type itself
/// does not force that.
class Laurent {
 public:
  Laurent() = default;
  Laurent(std::initializer_list<std::pair<long, long>> terms);

  static Laurent one() { return monomial(0, 1); }
  static Laurent monomial(long exp, Int coeff = 1);

  const std::map<long, Int>& terms() const { return coeffs_; }
  Int coeff(long exp) const;
  void set_coeff(long exp, Int c);
  void add_term(long exp, const Int& c);

  bool is_zero() const { return coeffs_.empty(); }
  long max_exp() const;  // requires nonzero
  long min_exp() const;  // requires nonzero
  bool is_symmetric() const;
  bool is_nonnegative() const;
  Int eval_one() const;  // f(1), the dimension of a character

  /// x -> x^k for k >= 1 (exponents scale by k).
  Laurent substitute_power(long k) const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent& a, const Laurent& b) = default;

 private:
  std::map<long, Int> coeffs_;
};

/// Exact quotient num/den in Z[x,x^-1]; throws DivisionNotExact otherwise.
Laurent div_exact(const Laurent& num, const Laurent& den);

}  // namespace vercat

#endif
