#include "hkmom/noncross.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hkmom {
namespace noncross {

NCPartition::NCPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
    std::vector<char> seen(n, 0);
    int covered = 0;
    for (auto& b : blocks_) {
        if (b.empty()) throw std::invalid_argument("NCPartition: empty block");
        std::sort(b.begin(), b.end());
        for (int x : b) {
            if (x < 0 || x >= n || seen[x]) throw std::invalid_argument("NCPartition: not a partition");
            seen[x] = 1;
            ++covered;
        }
    }
    if (covered != n) throw std::invalid_argument("NCPartition: blocks do not cover {1..n}");
    std::sort(blocks_.begin(), blocks_.end());
    if (!is_noncrossing(blocks_)) throw std::invalid_argument("NCPartition: crossing blocks");
}

NCPartition NCPartition::discrete(int n) {
    std::vector<std::vector<int>> blocks(n);
    for (int i = 0; i < n; ++i) blocks[i] = {i};
    return NCPartition(n, std::move(blocks));
}

NCPartition NCPartition::full(int n) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    return NCPartition(n, {all});
}

std::vector<int> NCPartition::type() const {
    std::vector<int> s(n_, 0);
    for (const auto& b : blocks_) ++s[b.size() - 1];
    return s;
}

std::string NCPartition::to_string() const {
    std::string out;
    for (const auto& b : blocks_) {
        out += '{';
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(b[i] + 1);
        }
        out += '}';
    }
    return out;
}

NCPartition NCPartition::parse(int n, const std::string& text) {
    std::vector<std::vector<int>> blocks;
    std::size_t pos = 0;
    while (pos < text.size()) {
        char c = text[pos];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++pos;
            continue;
        }
        if (c != '{') throw std::invalid_argument("NCPartition::parse: expected '{'");
        ++pos;
        std::vector<int> block;
        std::string num;
        for (; pos < text.size() && text[pos] != '}'; ++pos) {
            char d = text[pos];
            if (std::isdigit(static_cast<unsigned char>(d)))
                num += d;
            else if (d == ',' || d == ' ') {
                if (!num.empty()) {
                    block.push_back(std::stoi(num) - 1);
                    num.clear();
                }
            } else {
                throw std::invalid_argument("NCPartition::parse: bad character");
            }
        }
        if (pos >= text.size()) throw std::invalid_argument("NCPartition::parse: missing '}'");
        ++pos;
        if (!num.empty()) block.push_back(std::stoi(num) - 1);
        if (!block.empty()) blocks.push_back(std::move(block));
    }
    return NCPartition(n, std::move(blocks));
}

bool is_noncrossing(const std::vector<std::vector<int>>& blocks) {
    for (std::size_t r = 0; r < blocks.size(); ++r)
        for (std::size_t s = r + 1; s < blocks.size(); ++s) {
            // crossing iff the two blocks interleave as a b a b along the line
            const auto& A = blocks[r];
            const auto& B = blocks[s];
            int switches = 0;
            std::size_t ia = 0, ib = 0;
            int last = -1;  // 0 from A, 1 from B
            while (ia < A.size() || ib < B.size()) {
                int take;
                if (ia == A.size())
                    take = 1;
                else if (ib == B.size())
                    take = 0;
                else
                    take = A[ia] < B[ib] ? 0 : 1;
                if (take != last) {
                    ++switches;
                    last = take;
                }
                if (take == 0)
                    ++ia;
                else
                    ++ib;
            }
            if (switches >= 4) return false;  // pattern a..b..a..b
        }
    return true;
}

namespace {

void enumerate_rec(int i, int n, std::vector<std::vector<int>>& blocks, std::vector<int>& stack,
                   std::vector<NCPartition>& out) {
    if (i == n) {
        out.emplace_back(n, blocks);
        return;
    }
    // open a new block with i
    blocks.push_back({i});
    stack.push_back(static_cast<int>(blocks.size()) - 1);
    enumerate_rec(i + 1, n, blocks, stack, out);
    stack.pop_back();
    blocks.pop_back();
    // append i to an open block, closing everything opened after it
    std::vector<int> saved;
    for (int depth = static_cast<int>(stack.size()) - 1; depth >= 0; --depth) {
        saved.insert(saved.begin(), stack.begin() + depth + 1, stack.end());
        stack.resize(depth + 1);
        blocks[stack[depth]].push_back(i);
        enumerate_rec(i + 1, n, blocks, stack, out);
        blocks[stack[depth]].pop_back();
        // blocks closed at this depth stay closed for shallower choices
    }
    stack.insert(stack.end(), saved.begin(), saved.end());
}

}  // namespace

std::vector<NCPartition> enumerate_nc(int n) {
    if (n < 1 || n > 14) throw std::runtime_error("enumerate_nc: budget exceeded");
    std::vector<NCPartition> out;
    std::vector<std::vector<int>> blocks;
    std::vector<int> stack;
    enumerate_rec(0, n, blocks, stack, out);
    std::sort(out.begin(), out.end());
    return out;
}

Permutation nc_to_perm(const NCPartition& p) {
    const int n = p.n();
    std::vector<int> block_of(n);
    for (std::size_t b = 0; b < p.blocks().size(); ++b)
        for (int x : p.blocks()[b]) block_of[x] = static_cast<int>(b);
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        while (block_of[j] != block_of[i]) j = (j + 1) % n;
        img[i] = j;
    }
    return Permutation(std::move(img));
}

NCPartition perm_to_nc(const Permutation& sigma) {
    const int n = sigma.n();
    if (!leq_abs(sigma, Permutation::class_representative(CycleType::single(n))))
        throw std::invalid_argument("perm_to_nc: permutation not below the long cycle");
    return NCPartition(n, sigma.cycles());
}

NCPartition kreweras(const NCPartition& p) {
    const int n = p.n();
    Permutation c = Permutation::class_representative(CycleType::single(n));
    return perm_to_nc(compose(nc_to_perm(p).inverse(), c));
}

Integer count_by_type(int n, const std::vector<int>& type) {
    long blocks = 0, total = 0;
    for (std::size_t i = 0; i < type.size(); ++i) {
        if (type[i] < 0) throw std::invalid_argument("count_by_type: negative multiplicity");
        blocks += type[i];
        total += static_cast<long>(i + 1) * type[i];
    }
    if (total != n) throw std::invalid_argument("count_by_type: type vector does not sum to n");
    const long k = n - blocks;
    Integer denom = factorial(k + 1);
    for (int s : type) denom *= factorial(s);
    return factorial(n) / denom;
}

Integer count_increasing_paths(const NCPartition& p) {
    long k = p.rank();
    Integer paths = factorial(k);
    for (const auto& b : p.blocks()) {
        const long m = static_cast<long>(b.size());
        paths /= factorial(m - 1);
        if (m >= 2) paths *= ipow(Integer(m), m - 2);
    }
    return paths;
}

Integer s_cycle_zero_defect(long n, long k) {
    if (n < 1 || k < 0) return 0;
    if (k == 0) return 1;
    if (k >= n) return 0;
    return binomial(n, k + 1) * ipow(Integer(n), k - 1);
}

}  // namespace noncross
}  // namespace hkmom
