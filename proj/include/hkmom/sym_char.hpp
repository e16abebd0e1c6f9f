#pragma once

#include <vector>

#include "hkmom/laurent.hpp"
#include "hkmom/numeric.hpp"
#include "hkmom/permutation.hpp"

namespace hkmom {
namespace sym_char {

/// Irreducible character chi^lambda evaluated on the class mu, by the
/// Murnaghan-Nakayama rule (memoized).
Integer mn_character(const Partition& lambda, const CycleType& mu);

/// chi^lambda(id) by the hook length formula.
Integer dimension(const Partition& lambda);

/// Multiset of contents j - i over the boxes of the diagram.
std::vector<int> contents(const Partition& lambda);

/// e_r of the contents of lambda; equals chi^lambda(Sigma_r) / chi^lambda(id),
/// where Sigma_r sums the permutations at distance r from the identity.
Integer content_sym(const Partition& lambda, int r);

/// chi^mu(Omega) with Omega = sum_sigma N^{l(sigma)} sigma, as a polynomial
/// in N: dim(mu) * prod over boxes (N + content).
LaurentPoly omega_character(const Partition& mu);

/// Casimir eigenvalue on the Schur function s_mu:
/// c_2(mu) = n N + n(n-1) chi^mu((12)) / chi^mu(id).
LaurentPoly casimir_eigenvalue(const Partition& mu);

/// chi^mu((12)) / chi^mu(id), the normalized transposition character
/// (0 when n < 2).
Rational transposition_ratio(const Partition& mu);

/// sum_d S(sigma,k,d) N^{-2d} as an exact Laurent polynomial in N, computed
/// from the character sum; individual S values are the coefficients at N^{-2d}.
LaurentPoly char_sum_S(const CycleType& lambda, long k);

/// Unsigned Stirling numbers of the first kind; permutations of n with k cycles.
Integer stirling_first_unsigned(long n, long k);

/// Same numbers through e_{n-k}(1,...,n-1), kept as a cross-check.
Integer stirling_first_unsigned_esym(long n, long k);

/// S((1...n),k,d) in closed form via the hook-character Stirling sum.
Integer s_ncycle_closed(long n, long k, long d);

/// Number of ways to write the n-cycle as a product of p transpositions.
Integer c_np(long n, long p);

/// Verifies prod_i (z + X_i) = sum_sigma z^{l(sigma)} sigma in the group
/// algebra with polynomial coefficients (X_i the Jucys-Murphy elements).
bool jm_identity_check(int n);

}  // namespace sym_char
}  // namespace hkmom
