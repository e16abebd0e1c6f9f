#pragma once

#include <utility>
#include <vector>

#include "hkmom/permutation.hpp"

namespace hkmom {
namespace tensor_rep {

/// Pairing of {1,...,2n}: top points 0..n-1, bottom points n..2n-1 (0-based).
/// Permutations embed as the pairings {k, n + sigma(k)}.
class BrauerDiagram {
public:
    BrauerDiagram() = default;
    BrauerDiagram(int n, std::vector<std::pair<int, int>> pairs);

    static BrauerDiagram identity(int n);
    static BrauerDiagram from_permutation(const Permutation& sigma);
    /// <kl>: pairs {k,l} on top, {n+k, n+l} on bottom, identity elsewhere.
    static BrauerDiagram hook(int n, int k, int l);

    int n() const { return n_; }
    int partner(int point) const { return match_[point]; }
    const std::vector<int>& matching() const { return match_; }

    bool operator==(const BrauerDiagram&) const = default;
    bool operator<(const BrauerDiagram& o) const { return match_ < o.match_; }

    bool is_permutation() const;
    Permutation to_permutation() const;

    /// Cycle count of the graph obtained by identifying top and bottom;
    /// the trace of the orthogonal-flavor operator is N^{loop_count()}.
    int loop_count() const;

private:
    int n_ = 0;
    std::vector<int> match_;
};

/// Diagram composition matching operator composition: apply b first, then a.
/// Returns the product diagram and the number of closed loops removed.
std::pair<BrauerDiagram, int> brauer_compose(const BrauerDiagram& a, const BrauerDiagram& b);

/// All (2n-1)!! pairings of {1,...,2n}.
std::vector<BrauerDiagram> all_brauer_diagrams(int n);

}  // namespace tensor_rep
}  // namespace hkmom
