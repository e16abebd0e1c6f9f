#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hkmom/numeric.hpp"

namespace hkmom {

/// A partition of n: weakly decreasing positive parts. Doubles as the cycle
/// type of a permutation, in which case the parts are the cycle lengths.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition ones(int n);    // [1,1,...,1]
    static Partition single(int n);  // [n]

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }

    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& o) const;  // lexicographic on descending parts

    std::string to_string() const;  // "3,1,1"
    static Partition parse(const std::string& text);

private:
    std::vector<int> parts_;
    int n_ = 0;
};

using CycleType = Partition;

/// All partitions of n, sorted lexicographically on descending parts.
std::vector<Partition> partitions_of(int n);

Integer class_size(const CycleType& type);

/// Permutation of {1,...,n} stored in one-line notation (0-based internally).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int n);  // identity
    explicit Permutation(std::vector<int> images_zero_based);

    static Permutation identity(int n) { return Permutation(n); }
    static Permutation transposition(int n, int a, int b);  // 0-based points
    /// Canonical representative of a conjugacy class: cycles of decreasing
    /// length on consecutive points, e.g. [3,2] -> (1 2 3)(4 5).
    static Permutation class_representative(const CycleType& type);

    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }  // image of 0-based point
    const std::vector<int>& images() const { return img_; }

    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

    Permutation inverse() const;
    std::vector<std::vector<int>> cycles() const;  // 0-based, each cycle starts at its minimum
    CycleType cycle_type() const;
    int cycle_count() const;  // l(sigma)
    int norm() const;         // |sigma| = n - l(sigma)
    bool is_identity() const;

    /// Cycle notation with fixed points included, e.g. "(1 2 3)(4)".
    std::string to_string() const;
    /// Parses "(1 2 3)(4)" or "(1,2,3)"; points not mentioned are fixed.
    /// n is the degree; pass 0 to infer it from the largest point.
    static Permutation parse(const std::string& text, int n = 0);

private:
    std::vector<int> img_;
};

/// compose(a, b): apply b first, then a.
Permutation compose(const Permutation& a, const Permutation& b);

/// Absolute order: a <= b iff |b| = |a| + |a^{-1} b|, i.e. some geodesic from
/// id to b passes through a.
bool leq_abs(const Permutation& a, const Permutation& b);

/// sigma x sigma in S_{2n}: i -> sigma(i), n+i -> n+sigma(i).
Permutation doubled(const Permutation& sigma);

/// All n! permutations in rank order (only for small n).
std::vector<Permutation> all_permutations(int n);

/// Lehmer rank/unrank, valid for n <= 12 within 64 bits.
std::uint64_t perm_rank(const Permutation& p);
Permutation perm_unrank(int n, std::uint64_t r);

/// All transpositions of S_n.
std::vector<Permutation> all_transpositions(int n);

}  // namespace hkmom
