#include "hkmom/sym_char.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace hkmom {
namespace sym_char {

namespace {

// First-column hook lengths ("beta set") of lambda: lambda_i + (m - i),
// strictly decreasing.  Border strip removal acts on this set.
std::vector<int> beta_set(const std::vector<int>& parts) {
    int m = static_cast<int>(parts.size());
    std::vector<int> beta(m);
    for (int i = 0; i < m; ++i) beta[i] = parts[i] + (m - 1 - i);
    return beta;
}

std::vector<int> parts_from_beta(std::vector<int> beta) {
    std::sort(beta.rbegin(), beta.rend());
    int m = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < m; ++i) {
        int part = beta[i] - (m - 1 - i);
        if (part > 0) parts.push_back(part);
    }
    return parts;
}

Integer mn_rec(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t mu_pos);

std::map<std::pair<std::vector<int>, std::size_t>, Integer>* mn_cache_for(
    const std::vector<int>& mu) {
    // One memo table per mu vector; guarded by the caller's lock.
    static std::map<std::vector<int>, std::map<std::pair<std::vector<int>, std::size_t>, Integer>>
        tables;
    return &tables[mu];
}

Integer mn_rec_cached(const std::vector<int>& lambda, const std::vector<int>& mu,
                      std::size_t mu_pos) {
    auto* cache = mn_cache_for(mu);
    auto key = std::make_pair(lambda, mu_pos);
    auto it = cache->find(key);
    if (it != cache->end()) return it->second;
    Integer v = mn_rec(lambda, mu, mu_pos);
    (*cache)[key] = v;
    return v;
}

Integer mn_rec(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t mu_pos) {
    if (mu_pos == mu.size()) return 1;  // lambda is empty here as well
    const int r = mu[mu_pos];
    auto beta = beta_set(lambda);
    Integer sum = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        int b = beta[i];
        if (b < r) continue;
        int target = b - r;
        bool occupied = false;
        int height = 0;
        for (std::size_t j = 0; j < beta.size(); ++j) {
            if (beta[j] == target) occupied = true;
            if (beta[j] > target && beta[j] < b) ++height;
        }
        if (occupied) continue;
        std::vector<int> nb = beta;
        nb[i] = target;
        Integer sub = mn_rec_cached(parts_from_beta(std::move(nb)), mu, mu_pos + 1);
        if (height % 2)
            sum -= sub;
        else
            sum += sub;
    }
    return sum;
}

std::mutex mn_mutex;

}  // namespace

Integer mn_character(const Partition& lambda, const CycleType& mu) {
    if (lambda.n() != mu.n()) throw std::invalid_argument("mn_character: size mismatch");
    std::lock_guard<std::mutex> lock(mn_mutex);
    return mn_rec_cached(lambda.parts(), mu.parts(), 0);
}

Integer dimension(const Partition& lambda) {
    const auto& p = lambda.parts();
    int rows = lambda.length();
    std::vector<int> conj(rows ? p[0] : 0, 0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < p[i]; ++j) ++conj[j];
    Integer hooks = 1;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < p[i]; ++j) hooks *= (p[i] - j) + (conj[j] - i) - 1;
    return factorial(lambda.n()) / hooks;
}

std::vector<int> contents(const Partition& lambda) {
    std::vector<int> out;
    const auto& p = lambda.parts();
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < p[i]; ++j) out.push_back(j - i);
    return out;
}

Integer content_sym(const Partition& lambda, int r) {
    if (r < 0 || r > std::max(lambda.n() - 1, 0))
        throw std::invalid_argument("content_sym: r out of range");
    auto c = contents(lambda);
    std::vector<Integer> e(r + 1, 0);
    e[0] = 1;
    for (int x : c)
        for (int j = std::min<int>(r, static_cast<int>(e.size()) - 1); j >= 1; --j)
            e[j] += e[j - 1] * x;
    return e[r];
}

LaurentPoly omega_character(const Partition& mu) {
    LaurentPoly p(Rational(dimension(mu)));
    for (int c : contents(mu)) {
        LaurentPoly factor = LaurentPoly::monomial(1, 1);
        factor += LaurentPoly(Rational(c));
        p = p * factor;
    }
    return p;
}

Rational transposition_ratio(const Partition& mu) {
    const int n = mu.n();
    if (n < 2) return 0;
    std::vector<int> cls(n - 2, 1);
    cls.insert(cls.begin(), 2);
    Integer num = mn_character(mu, CycleType(cls));
    return Rational(num) / Rational(dimension(mu));
}

LaurentPoly casimir_eigenvalue(const Partition& mu) {
    const long n = mu.n();
    LaurentPoly p = LaurentPoly::monomial(Rational(n), 1);
    p += LaurentPoly(Rational(n * (n - 1)) * transposition_ratio(mu));
    return p;
}

LaurentPoly char_sum_S(const CycleType& lambda, long k) {
    if (k < 0) throw std::invalid_argument("char_sum_S: k < 0");
    const int n = lambda.n();
    const Rational half_edges(static_cast<long>(n) * (n - 1) / 2);
    LaurentPoly total;
    for (const auto& mu : partitions_of(n)) {
        Rational r = half_edges * transposition_ratio(mu);
        Rational weight = Rational(mn_character(mu, lambda)) * qpow(r, k);
        if (weight == 0) continue;
        total += omega_character(mu) * weight;
    }
    total /= Rational(factorial(n));
    LaurentPoly shifted = total.shifted(-lambda.length() - static_cast<int>(k));
    // Coefficients must sit at exponents -2d inside the defect window.
    LaurentPoly result;
    for (const auto& [e, v] : shifted.terms()) {
        if (e > 0 || e % 2 != 0 || !is_integer(v) || v < 0)
            throw std::logic_error("char_sum_S: malformed character sum");
        result.add_term(e, v);
    }
    return result;
}

namespace {

const std::vector<std::vector<Integer>>& stirling_table(long n) {
    static std::vector<std::vector<Integer>> table{{Integer(1)}};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<long>(table.size()) <= n) {
        long m = static_cast<long>(table.size());
        std::vector<Integer> row(m + 1, 0);
        for (long k = 1; k <= m; ++k) {
            row[k] = table[m - 1][k - 1];
            if (k <= m - 1) row[k] += Integer(m - 1) * table[m - 1][k];
        }
        table.push_back(std::move(row));
    }
    return table;
}

}  // namespace

Integer stirling_first_unsigned(long n, long k) {
    if (k < 0 || k > n) return 0;
    return stirling_table(n)[n][k];
}

Integer stirling_first_unsigned_esym(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = n - k;
    std::vector<Integer> e(r + 1, 0);
    e[0] = 1;
    for (long x = 1; x <= n - 1; ++x)
        for (long j = std::min(r, x); j >= 1; --j) e[j] += e[j - 1] * x;
    return e[r];
}

Integer s_ncycle_closed(long n, long k, long d) {
    if (n < 1 || k < 0 || d < 0) return 0;
    long rem = n - 1 - k + 2 * d;  // terminal distance from the identity
    if (rem < 0 || rem > n - 1) return 0;
    Rational sum = 0;
    for (long r = 0; r <= n - 1; ++r) {
        long s = n - 1 - r;
        Rational speed = ratio(n * (s - r), 2);
        Rational speed_k = qpow(speed, k);
        if (speed_k == 0 && k > 0) continue;
        // e_rem(-r,...,0,...,s) = sum_{l+m=rem} e_l(1..s) (-1)^m e_m(1..r),
        // written with unsigned Stirling numbers.
        Rational inner = 0;
        for (long l = 0; l <= rem; ++l) {
            long m = rem - l;
            Integer st = stirling_first_unsigned(s + 1, s + 1 - l) *
                         stirling_first_unsigned(r + 1, r + 1 - m);
            if (st == 0) continue;
            if (m % 2)
                inner -= Rational(st);
            else
                inner += Rational(st);
        }
        if (inner == 0) continue;
        Rational term = inner * speed_k / Rational(factorial(r) * factorial(s));
        if (r % 2)
            sum -= term;
        else
            sum += term;
    }
    sum /= n;
    if (!is_integer(sum) || sum < 0) throw std::logic_error("s_ncycle_closed: non-integer result");
    return sum.get_num();
}

Integer c_np(long n, long p) {
    if (n < 1 || p < 0) return 0;
    if (p < n - 1 || (p - (n - 1)) % 2 != 0) return 0;
    Rational sum = 0;
    for (long r = 0; r <= n - 1; ++r) {
        Rational base = ratio(n - 1, 2) - r;
        Rational term = Rational(binomial(n - 1, r)) * qpow(base, p);
        if (r % 2)
            sum -= term;
        else
            sum += term;
    }
    sum *= ratio(ipow(Integer(n), p), factorial(n));
    if (!is_integer(sum) || sum < 0) throw std::logic_error("c_np: non-integer result");
    return sum.get_num();
}

bool jm_identity_check(int n) {
    if (n < 1 || n > 7) throw std::runtime_error("jm_identity_check: budget exceeded");
    const auto perms = all_permutations(n);
    const auto size = perms.size();
    // A[rank] = coefficient polynomial in z, built as prod_i (z + X_i).
    std::vector<std::vector<Integer>> acc(size);
    acc[perm_rank(Permutation::identity(n))] = {Integer(0), Integer(1)};  // the factor z (X_1 = 0)
    for (int i = 2; i <= n; ++i) {
        std::vector<std::vector<Integer>> next(size);
        for (std::uint64_t rank = 0; rank < size; ++rank) {
            const auto& poly = acc[rank];
            if (poly.empty()) continue;
            // z * sigma
            auto& self = next[rank];
            if (self.size() < poly.size() + 1) self.resize(poly.size() + 1, Integer(0));
            for (std::size_t deg = 0; deg < poly.size(); ++deg) self[deg + 1] += poly[deg];
            // sigma * (j i) for j < i
            for (int j = 0; j + 1 < i; ++j) {
                Permutation target =
                    compose(perms[rank], Permutation::transposition(n, j, i - 1));
                auto& dst = next[perm_rank(target)];
                if (dst.size() < poly.size()) dst.resize(poly.size(), Integer(0));
                for (std::size_t deg = 0; deg < poly.size(); ++deg) dst[deg] += poly[deg];
            }
        }
        acc.swap(next);
    }
    for (std::uint64_t rank = 0; rank < size; ++rank) {
        const std::size_t want = perms[rank].cycle_count();
        const auto& poly = acc[rank];
        if (poly.size() != want + 1) return false;
        for (std::size_t deg = 0; deg < poly.size(); ++deg)
            if (poly[deg] != (deg == want ? 1 : 0)) return false;
    }
    return true;
}

}  // namespace sym_char
}  // namespace hkmom
