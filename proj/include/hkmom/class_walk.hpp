#pragma once

#include <string>
#include <vector>

#include "hkmom/exact_matrix.hpp"
#include "hkmom/numeric.hpp"
#include "hkmom/permutation.hpp"

namespace hkmom {
namespace class_walk {

/// How many of the binom(n,2) transpositions move a representative of each
/// conjugacy class into each other class (one Cayley step at class level).
class ClassTransitionMatrix {
public:
    explicit ClassTransitionMatrix(int n);

    int n() const { return n_; }
    const std::vector<Partition>& index() const { return index_; }
    int class_id(const Partition& type) const;
    long count(const Partition& from, const Partition& to) const;
    long count(int from_id, int to_id) const { return counts_[from_id][to_id]; }
    int num_classes() const { return static_cast<int>(index_.size()); }

private:
    int n_;
    std::vector<Partition> index_;
    std::vector<std::vector<long>> counts_;
};

const ClassTransitionMatrix& transition_counts(int n);

/// S(sigma,k,d): number of length-k transposition paths from sigma with d
/// distance-increasing steps; depends on sigma only through its class.
Integer count_S(const CycleType& type, long k, long d);

/// All S(type,k,d) for k <= k_max, from one class-level dynamic program.
struct PathCountTable {
    CycleType base;
    long k_max = 0;
    std::vector<std::vector<Integer>> s;  // s[k][d], d <= k

    std::string to_csv() const;  // columns k,d,S; zero entries omitted
};

PathCountTable path_count_table(const CycleType& type, long k_max);

/// #Pi_k(sigma -> sigma'): paths of length k from sigma to sigma'.
/// Group-level DP for small n, character sum otherwise.
Integer count_paths_between(const Permutation& from, const Permutation& to, long k);

/// Literal enumeration of T_n^k, the oracle realization of S(sigma,k,d).
/// budget caps the number of enumerated paths, binom(n,2)^k.
Integer brute_force_S(const Permutation& sigma, long k, long d,
                      std::uint64_t budget = 100'000'000);
std::vector<Integer> brute_force_S_all(const Permutation& sigma, long k,
                                       std::uint64_t budget = 100'000'000);

/// Truncated exponential of the defect-weighted walk generator on S_n,
/// indexed by perm_rank.  sign=+1 and sign=-1 give mutually inverse matrices.
/// eps is the requested entry-wise truncation error.
QMatrix transfer_matrix(int n, int sign, const Rational& t, const Rational& N,
                        double eps = 1e-20);

/// Max |(M^+ M^- - Id)_ij|, both factors truncated to entry error eps.
double transfer_inverse_check(int n, const Rational& t, const Rational& N,
                              double eps = 1e-20);

}  // namespace class_walk
}  // namespace hkmom
