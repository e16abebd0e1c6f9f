#include "hkmom/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hkmom {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

Partition Partition::ones(int n) { return Partition(std::vector<int>(n, 1)); }

Partition Partition::single(int n) { return Partition(std::vector<int>{n}); }

bool Partition::operator<(const Partition& o) const { return parts_ < o.parts_; }

std::string Partition::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        parts.push_back(std::stoi(item));
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(parts);
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n < 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

Integer class_size(const CycleType& type) {
    // n! / (prod_i i^{m_i} m_i!) with m_i the multiplicity of part i.
    Integer denom = 1;
    int run = 1;
    const auto& p = type.parts();
    for (std::size_t i = 0; i < p.size(); ++i) {
        denom *= p[i];
        if (i + 1 < p.size() && p[i + 1] == p[i]) {
            ++run;
        } else {
            denom *= factorial(run);
            run = 1;
        }
    }
    return factorial(type.n()) / denom;
}

Permutation::Permutation(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 0); }

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
        if (v < 0 || v >= n() || seen[v]) throw std::invalid_argument("Permutation: not a bijection");
        seen[v] = 1;
    }
}

Permutation Permutation::transposition(int n, int a, int b) {
    Permutation p(n);
    if (a == b || a < 0 || b < 0 || a >= n || b >= n)
        throw std::invalid_argument("transposition: bad points");
    std::swap(p.img_[a], p.img_[b]);
    return p;
}

Permutation Permutation::class_representative(const CycleType& type) {
    Permutation p(type.n());
    int base = 0;
    for (int len : type.parts()) {
        for (int i = 0; i < len; ++i) p.img_[base + i] = base + (i + 1) % len;
        base += len;
    }
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 0; i < n(); ++i) inv[img_[i]] = i;
    return Permutation(std::move(inv));
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(img_.size(), 0);
    for (int i = 0; i < n(); ++i) {
        if (seen[i]) continue;
        std::vector<int> cyc;
        for (int j = i; !seen[j]; j = img_[j]) {
            seen[j] = 1;
            cyc.push_back(j);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

CycleType Permutation::cycle_type() const {
    std::vector<int> lens;
    std::vector<char> seen(img_.size(), 0);
    for (int i = 0; i < n(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = img_[j]) {
            seen[j] = 1;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return CycleType(std::move(lens));
}

int Permutation::cycle_count() const {
    int count = 0;
    std::vector<char> seen(img_.size(), 0);
    for (int i = 0; i < n(); ++i) {
        if (seen[i]) continue;
        ++count;
        for (int j = i; !seen[j]; j = img_[j]) seen[j] = 1;
    }
    return count;
}

int Permutation::norm() const { return n() - cycle_count(); }

bool Permutation::is_identity() const {
    for (int i = 0; i < n(); ++i)
        if (img_[i] != i) return false;
    return true;
}

std::string Permutation::to_string() const {
    std::string s;
    for (const auto& cyc : cycles()) {
        s += '(';
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(cyc[i] + 1);
        }
        s += ')';
    }
    return s;
}

Permutation Permutation::parse(const std::string& text, int n) {
    std::vector<std::vector<int>> cycles;
    std::size_t pos = 0;
    int max_pt = 0;
    while (pos < text.size()) {
        char c = text[pos];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++pos;
            continue;
        }
        if (c != '(') throw std::invalid_argument("Permutation::parse: expected '('");
        ++pos;
        std::vector<int> cyc;
        std::string num;
        for (; pos < text.size() && text[pos] != ')'; ++pos) {
            char d = text[pos];
            if (std::isdigit(static_cast<unsigned char>(d))) {
                num += d;
            } else if (d == ' ' || d == ',') {
                if (!num.empty()) {
                    cyc.push_back(std::stoi(num) - 1);
                    num.clear();
                }
            } else {
                throw std::invalid_argument("Permutation::parse: bad character in cycle");
            }
        }
        if (pos >= text.size()) throw std::invalid_argument("Permutation::parse: missing ')'");
        ++pos;
        if (!num.empty()) cyc.push_back(std::stoi(num) - 1);
        for (int v : cyc) {
            if (v < 0) throw std::invalid_argument("Permutation::parse: points are 1-based");
            max_pt = std::max(max_pt, v + 1);
        }
        if (!cyc.empty()) cycles.push_back(std::move(cyc));
    }
    if (n == 0) n = max_pt;
    if (max_pt > n) throw std::invalid_argument("Permutation::parse: point exceeds degree");
    Permutation p(n);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
            if (p.img_[from] != from && p.img_[from] != to)
                throw std::invalid_argument("Permutation::parse: point repeated across cycles");
            p.img_[from] = to;
        }
    }
    // validate bijectivity
    return Permutation(p.img_);
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.n() != b.n()) throw std::invalid_argument("compose: degree mismatch");
    std::vector<int> img(a.n());
    for (int i = 0; i < a.n(); ++i) img[i] = a(b(i));
    return Permutation(std::move(img));
}

bool leq_abs(const Permutation& a, const Permutation& b) {
    if (a.n() != b.n()) throw std::invalid_argument("leq_abs: degree mismatch");
    return b.norm() == a.norm() + compose(a.inverse(), b).norm();
}

Permutation doubled(const Permutation& sigma) {
    int n = sigma.n();
    std::vector<int> img(2 * n);
    for (int i = 0; i < n; ++i) {
        img[i] = sigma(i);
        img[n + i] = n + sigma(i);
    }
    return Permutation(std::move(img));
}

std::vector<Permutation> all_permutations(int n) {
    if (n > 10) throw std::invalid_argument("all_permutations: n too large for enumeration");
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

std::uint64_t perm_rank(const Permutation& p) {
    // Lehmer code in the factorial number system; matches std::next_permutation order.
    int n = p.n();
    std::uint64_t rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (p(j) < p(i)) ++smaller;
        rank = rank * (n - i) + smaller;
    }
    return rank;
}

Permutation perm_unrank(int n, std::uint64_t r) {
    std::vector<int> code(n, 0);
    for (int i = n - 1; i >= 0; --i) {
        code[i] = static_cast<int>(r % (n - i));
        r /= (n - i);
    }
    std::vector<int> avail(n);
    std::iota(avail.begin(), avail.end(), 0);
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) {
        img[i] = avail[code[i]];
        avail.erase(avail.begin() + code[i]);
    }
    return Permutation(std::move(img));
}

std::vector<Permutation> all_transpositions(int n) {
    std::vector<Permutation> out;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) out.push_back(Permutation::transposition(n, a, b));
    return out;
}

}  // namespace hkmom
