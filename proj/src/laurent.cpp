#include "vercat/laurent.hpp"

#include <vector>

namespace vercat {

Laurent::Laurent(std::initializer_list<std::pair<long, long>> terms) {
  for (const auto& [e, c] : terms) add_term(e, Int(c));
}

Laurent Laurent::monomial(long exp, Int coeff) {
  Laurent f;
  if (coeff != 0) f.coeffs_[exp] = std::move(coeff);
  return f;
}

Int Laurent::coeff(long exp) const {
  auto it = coeffs_.find(exp);
  return it == coeffs_.end() ? Int(0) : it->second;
}

void Laurent::set_coeff(long exp, Int c) {
  if (c == 0)
    coeffs_.erase(exp);
  else
    coeffs_[exp] = std::move(c);
}

void Laurent::add_term(long exp, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

long Laurent::max_exp() const { return coeffs_.rbegin()->first; }
long Laurent::min_exp() const { return coeffs_.begin()->first; }

bool Laurent::is_symmetric() const {
  for (const auto& [e, c] : coeffs_)
    if (coeff(-e) != c) return false;
  return true;
}

bool Laurent::is_nonnegative() const {
  for (const auto& [e, c] : coeffs_)
    if (c < 0) return false;
  return true;
}

Int Laurent::eval_one() const {
  Int s = 0;
  for (const auto& [e, c] : coeffs_) s += c;
  return s;
}

Laurent Laurent::substitute_power(long k) const {
  Laurent out;
  for (const auto& [e, c] : coeffs_) out.coeffs_[e * k] = c;
  return out;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.coeffs_) add_term(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) return Laurent();
  // Dense accumulation over the exponent range keeps this fast for the
  // character sizes that arise here.
  long lo = a.min_exp() + b.min_exp();
  long hi = a.max_exp() + b.max_exp();
  std::vector<Int> acc(static_cast<size_t>(hi - lo + 1));
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_) acc[ea + eb - lo] += ca * cb;
  Laurent out;
  for (long e = lo; e <= hi; ++e)
    if (acc[e - lo] != 0) out.coeffs_[e] = std::move(acc[e - lo]);
  return out;
}

Laurent div_exact(const Laurent& num, const Laurent& den) {
  if (den.is_zero()) throw DivisionNotExact("division by zero polynomial");
  if (num.is_zero()) return Laurent();
  // Shift both to ordinary polynomials and long-divide from the top.
  long nlo = num.min_exp(), nhi = num.max_exp();
  long dlo = den.min_exp(), dhi = den.max_exp();
  std::vector<Int> r(static_cast<size_t>(nhi - nlo + 1));
  for (const auto& [e, c] : num.terms()) r[e - nlo] = c;
  std::vector<Int> d(static_cast<size_t>(dhi - dlo + 1));
  for (const auto& [e, c] : den.terms()) d[e - dlo] = c;

  long ddeg = dhi - dlo;
  long rdeg = nhi - nlo;
  if (rdeg < ddeg) throw DivisionNotExact("degree of quotient would be negative");
  const Int& lead = d[ddeg];
  std::vector<Int> q(static_cast<size_t>(rdeg - ddeg + 1));
  for (long k = rdeg - ddeg; k >= 0; --k) {
    Int& top = r[k + ddeg];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw DivisionNotExact("leading coefficient does not divide");
    Int factor = top / lead;
    for (long j = 0; j <= ddeg; ++j) r[k + j] -= factor * d[j];
    q[k] = std::move(factor);
  }
  for (const Int& c : r)
    if (c != 0) throw DivisionNotExact("nonzero remainder");

  Laurent out;
  long shift = nlo - dlo;
  for (size_t k = 0; k < q.size(); ++k)
    if (q[k] != 0) out.set_coeff(static_cast<long>(k) + shift, std::move(q[k]));
  return out;
}

}  // namespace vercat
