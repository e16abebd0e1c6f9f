#pragma once

#include <string>
#include <vector>

#include "hkmom/numeric.hpp"
#include "hkmom/permutation.hpp"

namespace hkmom {
namespace noncross {

/// Non-crossing partition of {1,...,n} (0-based internally). Blocks are
/// sorted internally and ordered by their minima.
class NCPartition {
public:
    NCPartition() = default;
    NCPartition(int n, std::vector<std::vector<int>> blocks);

    static NCPartition discrete(int n);  // 0_n
    static NCPartition full(int n);      // 1_n

    int n() const { return n_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int num_blocks() const { return static_cast<int>(blocks_.size()); }
    int rank() const { return n_ - num_blocks(); }  // |sigma_P|

    /// s[i-1] = number of blocks of size i.
    std::vector<int> type() const;

    bool operator==(const NCPartition&) const = default;
    bool operator<(const NCPartition& o) const { return blocks_ < o.blocks_; }

    std::string to_string() const;  // "{1,3}{2}"
    static NCPartition parse(int n, const std::string& text);

private:
    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
};

/// Crossing test on raw blocks; used by the constructor and as a test oracle.
bool is_noncrossing(const std::vector<std::vector<int>>& blocks);

/// Complete enumeration of NC(n); Catalan(n) partitions.
std::vector<NCPartition> enumerate_nc(int n);

/// The permutation sigma_P whose cycles are the blocks of P, traversed in the
/// cyclic order of (1...n).
Permutation nc_to_perm(const NCPartition& p);

/// Inverse of nc_to_perm; requires sigma <= (1...n) in the absolute order.
NCPartition perm_to_nc(const Permutation& sigma);

/// Kreweras complement, computed as sigma_P^{-1} (1...n) on the group side.
NCPartition kreweras(const NCPartition& p);

/// Number of NC(n) partitions with s_i blocks of size i.
Integer count_by_type(int n, const std::vector<int>& type);

/// Number of increasing paths from 0_n to P in the lattice.
Integer count_increasing_paths(const NCPartition& p);

/// S((1...n),k,0) = binom(n,k+1) n^{k-1}; zero for k >= n.
Integer s_cycle_zero_defect(long n, long k);

}  // namespace noncross
}  // namespace hkmom
