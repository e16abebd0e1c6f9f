#include "hkmom/brauer.hpp"

#include <stdexcept>

namespace hkmom {
namespace tensor_rep {

BrauerDiagram::BrauerDiagram(int n, std::vector<std::pair<int, int>> pairs)
    : n_(n), match_(2 * n, -1) {
    if (static_cast<int>(pairs.size()) != n)
        throw std::invalid_argument("BrauerDiagram: need exactly n pairs");
    for (auto [a, b] : pairs) {
        if (a < 0 || b < 0 || a >= 2 * n || b >= 2 * n || a == b)
            throw std::invalid_argument("BrauerDiagram: bad pair");
        if (match_[a] != -1 || match_[b] != -1)
            throw std::invalid_argument("BrauerDiagram: point used twice");
        match_[a] = b;
        match_[b] = a;
    }
}

BrauerDiagram BrauerDiagram::identity(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) pairs.emplace_back(i, n + i);
    return BrauerDiagram(n, std::move(pairs));
}

BrauerDiagram BrauerDiagram::from_permutation(const Permutation& sigma) {
    const int n = sigma.n();
    std::vector<std::pair<int, int>> pairs;
    for (int k = 0; k < n; ++k) pairs.emplace_back(k, n + sigma(k));
    return BrauerDiagram(n, std::move(pairs));
}

BrauerDiagram BrauerDiagram::hook(int n, int k, int l) {
    if (k == l || k < 0 || l < 0 || k >= n || l >= n)
        throw std::invalid_argument("BrauerDiagram::hook: bad points");
    std::vector<std::pair<int, int>> pairs{{k, l}, {n + k, n + l}};
    for (int i = 0; i < n; ++i)
        if (i != k && i != l) pairs.emplace_back(i, n + i);
    return BrauerDiagram(n, std::move(pairs));
}

bool BrauerDiagram::is_permutation() const {
    for (int i = 0; i < n_; ++i)
        if (match_[i] < n_) return false;
    return true;
}

Permutation BrauerDiagram::to_permutation() const {
    if (!is_permutation()) throw std::invalid_argument("BrauerDiagram: not a permutation diagram");
    std::vector<int> img(n_);
    for (int k = 0; k < n_; ++k) img[k] = match_[k] - n_;
    return Permutation(std::move(img));
}

int BrauerDiagram::loop_count() const {
    // Adjacency on {0..n-1}: each point i has the two pairs containing i and i+n.
    std::vector<char> used(2 * n_, 0);
    int cycles = 0;
    for (int start = 0; start < 2 * n_; ++start) {
        if (used[start]) continue;
        ++cycles;
        int p = start;
        // alternate: pairing edge, then the identification i <-> i+n
        while (!used[p]) {
            used[p] = 1;
            int q = match_[p];
            used[q] = 1;
            p = q < n_ ? q + n_ : q - n_;
        }
    }
    return cycles;
}

std::pair<BrauerDiagram, int> brauer_compose(const BrauerDiagram& a, const BrauerDiagram& b) {
    if (a.n() != b.n()) throw std::invalid_argument("brauer_compose: size mismatch");
    const int n = a.n();
    // Nodes: 0..2n-1 live in b, 2n..4n-1 in a.  b's bottom j is glued to a's
    // top j.  Terminals are b's top (result top) and a's bottom (result bottom).
    auto is_terminal = [&](int node) {
        return node < n || node >= 3 * n;
    };
    auto pairing = [&](int node) {
        return node < 2 * n ? b.partner(node) : 2 * n + a.partner(node - 2 * n);
    };
    auto glue = [&](int node) {
        // b-bottom <-> a-top
        return node < 2 * n ? node + n : node - n;
    };

    std::vector<char> seen(4 * n, 0);
    std::vector<std::pair<int, int>> pairs;
    for (int start = 0; start < 4 * n; ++start) {
        if (seen[start] || !is_terminal(start)) continue;
        seen[start] = 1;
        int p = pairing(start);
        while (!is_terminal(p)) {
            seen[p] = 1;
            int q = glue(p);
            seen[q] = 1;
            p = pairing(q);
        }
        seen[p] = 1;
        auto to_result = [&](int node) { return node < n ? node : node - 2 * n; };
        pairs.emplace_back(to_result(start), to_result(p));
    }
    int loops = 0;
    for (int start = 0; start < 4 * n; ++start) {
        if (seen[start]) continue;
        ++loops;
        int p = start;
        while (!seen[p]) {
            seen[p] = 1;
            int q = pairing(p);
            seen[q] = 1;
            p = glue(q);
        }
    }
    return {BrauerDiagram(n, std::move(pairs)), loops};
}

namespace {

void gen_pairings(std::vector<int>& match, std::vector<char>& used, int taken, int n,
                  std::vector<BrauerDiagram>& out) {
    const int total = 2 * n;
    if (taken == total) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < total; ++i)
            if (match[i] > i) pairs.emplace_back(i, match[i]);
        out.emplace_back(n, std::move(pairs));
        return;
    }
    int first = 0;
    while (used[first]) ++first;
    used[first] = 1;
    for (int second = first + 1; second < total; ++second) {
        if (used[second]) continue;
        used[second] = 1;
        match[first] = second;
        match[second] = first;
        gen_pairings(match, used, taken + 2, n, out);
        used[second] = 0;
    }
    used[first] = 0;
}

}  // namespace

std::vector<BrauerDiagram> all_brauer_diagrams(int n) {
    if (n > 6) throw std::runtime_error("all_brauer_diagrams: budget exceeded");
    std::vector<int> match(2 * n, -1);
    std::vector<char> used(2 * n, 0);
    std::vector<BrauerDiagram> out;
    gen_pairings(match, used, 0, n, out);
    return out;
}

}  // namespace tensor_rep
}  // namespace hkmom
