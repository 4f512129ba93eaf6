#ifndef VERCAT_SL2TILT_HPP
#define VERCAT_SL2TILT_HPP

#include <map>
#include <utility>
#include <vector>

#include "vercat/charring.hpp"

namespace vercat {

/// Multiset of indecomposable tilting summands T_a -> multiplicity.
struct TiltingSum {
  std::map<long, Int> terms;
};

/// Position of T_a in the chain of thick tensor ideals
/// Ob(Tilt SL2) > I_1 > I_2 > ...: either in none of them (unit = true),
/// or n >= 1 meaning "in I_n but not I_{n+1}".
struct IdealLevel {
  bool unit = true;
  long n = 0;
};

/// T_a in I_n  <=>  a >= p^n - 1.
bool in_ideal_In(long a, long p, long n);
/// T_a in J_n  <=>  a >= p^{n-1} - 1  (for SL2, I_n = J_{n+1}).
bool in_ideal_Jn(long a, long p, long n);

IdealLevel ideal_level(long a, long p);

/// Decompose a tensor product of tilting modules into indecomposable
/// summands by multiplying characters and stripping tops. The result is
/// re-verified against the product character.
TiltingSum tensor_decompose(const std::vector<std::pair<long, Int>>& factors, long p);

/// dim Hom(T_a, T_b) via the Weyl-filtration pairing
/// sum_k (T_a : Delta_k)(T_b : Delta_k).
Int hom_dim(long a, long b, long p);

/// All b in [p^{n-1}-1, p^n-2] whose tilting character contains Delta_0.
/// These are the indecomposables in J_n \ I_n with the unit in their socle;
/// the expected answer is exactly [2(p^{n-1}-1)].
std::vector<long> socle_unit_test(long p, long n);

}  // namespace vercat

#endif
