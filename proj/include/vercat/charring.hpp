#ifndef VERCAT_CHARRING_HPP
#define VERCAT_CHARRING_HPP

#include <map>

#include "vercat/laurent.hpp"

namespace vercat {

bool is_prime(long p);
void require_prime(long p);

/// The three SL2 character bases used for decomposition. All are
/// unitriangular with respect to highest weight.
enum class Basis { Weyl, Simple, Tilting };

/// A nonnegative decomposition of a character into one of the bases:
/// index a -> multiplicity. Stored multiplicities are always >= 1.
struct BasisDecomp {
  Basis basis = Basis::Weyl;
  std::map<long, Int> terms;
};

/// Character of the Weyl module of highest weight a:
/// x^a + x^{a-2} + ... + x^{-a}.
Laurent weyl_char(long a);

/// Character of the simple module L_a in characteristic p, via the Steinberg
/// factorization over the base-p digits of a.
Laurent simple_char(long a, long p);

/// Character of the indecomposable tilting module T_a in characteristic p,
/// via the canonical Donkin factorization (maximal r with p^r - 1 <= a).
Laurent tilting_char(long a, long p);

Laurent basis_char(Basis basis, long a, long p);

/// Greedy unitriangular basis change: repeatedly strip the top exponent.
/// Throws NotInNonnegativeSpan when f is not a nonnegative combination of
/// the requested basis characters.
BasisDecomp decompose(const Laurent& f, Basis basis, long p);

/// Rebuild the character from a decomposition (exact round trip).
Laurent recompose(const BasisDecomp& d, long p);

/// x -> x^{p^r} on characters.
Laurent frobenius_twist(const Laurent& f, long r, long p);

/// Complete homogeneous / elementary symmetric polynomial of degree r in the
/// weight multiset of f. Throws NotACharacter if f has a negative coefficient.
Laurent sym_power_char(const Laurent& f, long r);
Laurent ext_power_char(const Laurent& f, long r);

}  // namespace vercat

#endif
