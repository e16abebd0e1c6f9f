#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>

#include "hkmom/brauer.hpp"
#include "hkmom/exact_matrix.hpp"
#include "hkmom/permutation.hpp"

namespace hkmom {
namespace tensor_rep {

enum class GroupKind { U, SO, Sp };
enum class Flavor { Orthogonal, Symplectic };

/// Default guardrail on the tensor space dimension N^n.
inline constexpr long kMatrixBudget = 4096;

long tensor_dim(int n, int N, long budget = kMatrixBudget);

/// Permutation action on (C^N)^{tensor n}: sends slot content i_{sigma^{-1}(j)}
/// to slot j.  Exact 0/1 matrix of size N^n.
QMatrix rho_perm(const Permutation& sigma, int N, long budget = kMatrixBudget);

/// Brauer diagram operator.  Orthogonal flavor uses delta weights; the
/// symplectic flavor uses the antisymmetric J weights on non-permutation
/// diagrams (dimension 2N per slot) and the permutation action otherwise.
QMatrix rho_brauer(const BrauerDiagram& beta, int N, Flavor flavor,
                   long budget = kMatrixBudget);

/// rho(1 tensor Delta) built from the explicit Lie algebra bases:
/// gl via E_ij, so via A_ij = E_ij - E_ji, sp via the A/B/C/D basis.
/// For Sp pass N as in Sp(N); the matrices act on (C^{2N})^{tensor n}.
QMatrix casimir_action(GroupKind group, int n, int N, long budget = kMatrixBudget);

/// The su(N) Casimir from an explicit orthonormal basis of su(N).
QMatrix casimir_action_su(int n, int N, long budget = kMatrixBudget);

struct CasimirReport {
    bool ok = false;
    double max_deviation = 0;  // largest |entry| of LHS - RHS, exact arithmetic
    std::string detail;
};

/// Verifies the Laplacian / walk-generator operator identity for the given
/// group, in exact arithmetic.
CasimirReport casimir_identity_check(GroupKind group, int n, int N,
                                     long budget = kMatrixBudget);

/// rho(1 x Delta_SU) == rho(1 x Delta_U) + (n^2/N) Id, exact.
bool su_shift_check(int n, int N, long budget = kMatrixBudget);

/// Both sides of the derivative identity for p^st_sigma at sampled Haar
/// unitaries; returns the largest |LHS - RHS| over the samples.
double laplacian_action_check(const Permutation& sigma, int N, int samples,
                              std::uint64_t seed = 1, long budget = kMatrixBudget);

/// Exact version of the same identity at U = Id.
bool laplacian_identity_at_id(const Permutation& sigma, int N, long budget = kMatrixBudget);

/// Haar-distributed unitary via QR of a complex Ginibre matrix.
Eigen::MatrixXcd random_unitary(int N, std::uint64_t seed);

}  // namespace tensor_rep
}  // namespace hkmom
