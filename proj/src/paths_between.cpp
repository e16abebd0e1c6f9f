#include <stdexcept>
#include <vector>

#include "hkmom/class_walk.hpp"
#include "hkmom/sym_char.hpp"

namespace hkmom {
namespace class_walk {

namespace {

constexpr int kGroupDpLimit = 8;  // full-group DP up to 8! states

Integer paths_by_group_dp(const Permutation& from, const Permutation& to, long k) {
    const int n = from.n();
    const auto perms = all_permutations(n);
    const auto taus = all_transpositions(n);
    const std::size_t size = perms.size();
    std::vector<std::uint32_t> step(size * taus.size());
    for (std::size_t r = 0; r < size; ++r)
        for (std::size_t t = 0; t < taus.size(); ++t)
            step[r * taus.size() + t] =
                static_cast<std::uint32_t>(perm_rank(compose(perms[r], taus[t])));
    std::vector<Integer> v(size, 0), w(size, 0);
    v[perm_rank(from)] = 1;
    for (long s = 0; s < k; ++s) {
        std::fill(w.begin(), w.end(), Integer(0));
        for (std::size_t r = 0; r < size; ++r) {
            if (v[r] == 0) continue;
            for (std::size_t t = 0; t < taus.size(); ++t) w[step[r * taus.size() + t]] += v[r];
        }
        v.swap(w);
    }
    return v[perm_rank(to)];
}

Integer paths_by_characters(const Permutation& from, const Permutation& to, long k) {
    const int n = from.n();
    const CycleType diff = compose(from.inverse(), to).cycle_type();
    const Rational half_edges(static_cast<long>(n) * (n - 1) / 2);
    Rational sum = 0;
    for (const auto& mu : partitions_of(n)) {
        Integer chi = sym_char::mn_character(mu, diff);
        if (chi == 0) continue;
        Rational r = half_edges * sym_char::transposition_ratio(mu);
        sum += Rational(sym_char::dimension(mu)) * Rational(chi) * qpow(r, k);
    }
    sum /= Rational(factorial(n));
    if (!is_integer(sum) || sum < 0)
        throw std::logic_error("count_paths_between: non-integer character sum");
    return sum.get_num();
}

}  // namespace

Integer count_paths_between(const Permutation& from, const Permutation& to, long k) {
    if (from.n() != to.n()) throw std::invalid_argument("count_paths_between: degree mismatch");
    if (k < 0) return 0;
    if (k == 0) return from == to ? 1 : 0;
    if (from.n() <= kGroupDpLimit) return paths_by_group_dp(from, to, k);
    return paths_by_characters(from, to, k);
}

}  // namespace class_walk
}  // namespace hkmom
