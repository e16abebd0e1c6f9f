#include "hkmom/coverings.hpp"

#include <cmath>
#include <stdexcept>

#include "hkmom/class_walk.hpp"
#include "hkmom/expansion.hpp"

namespace hkmom {
namespace coverings {

CoveringSample sample_covering(int n, const CycleType& lambda, double t, std::mt19937_64& rng) {
    if (lambda.n() != n) throw std::invalid_argument("sample_covering: lambda must partition n");
    if (t < 0) throw std::invalid_argument("sample_covering: t < 0");
    CoveringSample s;
    const int pairs = n * (n - 1) / 2;
    if (pairs > 0 && t > 0) {
        std::poisson_distribution<long> pois(t * pairs);
        s.k = pois(rng);
    }
    Permutation sigma = Permutation::class_representative(lambda);
    std::uniform_int_distribution<int> pick(0, pairs > 0 ? pairs - 1 : 0);
    for (long j = 0; j < s.k; ++j) {
        int e = pick(rng);
        int a = 0;
        while (e >= n - 1 - a) {
            e -= n - 1 - a;
            ++a;
        }
        int b = a + 1 + e;
        s.taus.emplace_back(a, b);
        sigma = compose(sigma, Permutation::transposition(n, a, b));
    }
    s.sigma_end = sigma;
    s.chi = sigma.cycle_count() - static_cast<int>(s.k);
    return s;
}

int euler_char(const Permutation& start, const std::vector<std::pair<int, int>>& taus) {
    Permutation sigma = start;
    for (auto [a, b] : taus) sigma = compose(sigma, Permutation::transposition(start.n(), a, b));
    return sigma.cycle_count() - static_cast<int>(taus.size());
}

int euler_char_path(const std::vector<Permutation>& path) {
    if (path.empty()) throw std::invalid_argument("euler_char_path: empty path");
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        Permutation step = compose(path[i].inverse(), path[i + 1]);
        if (step.norm() != 1) throw std::invalid_argument("euler_char_path: step is not a transposition");
    }
    return path.back().cycle_count() - static_cast<int>(path.size() - 1);
}

double genus_target(int n, const CycleType& lambda, int N, double t) {
    auto p = expansion::moment_expansion(lambda, expansion::Group::U, 40);
    double moment = expansion::evaluate_strict(p, Rational(N), rational_of(t), 1e-11);
    return std::exp(n * t - 0.5 * n * n * t) * std::pow(static_cast<double>(N), lambda.length()) *
           moment;
}

GenusResult genus_estimator(int n, const CycleType& lambda, int N, double t, long samples,
                            std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("genus_estimator: samples < 1");
    GenusResult r;
    r.samples = samples;
    double mean = 0, m2 = 0;
    long count = 0;
    for (long i = 0; i < samples; ++i) {
        std::mt19937_64 rng(substream_seed(seed, static_cast<std::uint64_t>(i)));
        CoveringSample s = sample_covering(n, lambda, t, rng);
        double value = (s.k % 2 ? -1.0 : 1.0) * std::pow(static_cast<double>(N), s.chi);
        ++count;
        double delta = value - mean;
        mean += delta / count;
        m2 += delta * (value - mean);
    }
    r.estimate = mean;
    r.stderr_ = samples > 1 ? std::sqrt(m2 / (samples - 1) / samples) : 0.0;
    r.exact = genus_target(n, lambda, N, t);
    r.sigmas_away = r.stderr_ > 0 ? std::abs(r.estimate - r.exact) / r.stderr_ : 0.0;
    return r;
}

double analytic_genus_expectation(int n, const CycleType& lambda, const Rational& N,
                                  const Rational& t, long k_cut) {
    // E[(-1)^k N^chi] = e^{-t binom(n,2)} N^{l} sum_k (-t)^k/k! sum_d S(lambda,k,d) N^{-2d}
    const long pairs = static_cast<long>(n) * (n - 1) / 2;
    auto table = class_walk::path_count_table(lambda, k_cut);
    const Rational inv_n2 = 1 / (N * N);
    Rational sum = 0;
    Rational tpow = 1;
    Integer kfac = 1;
    for (long k = 0; k <= k_cut; ++k) {
        if (k > 0) {
            tpow *= t;
            kfac *= k;
        }
        Rational inner = 0;
        Rational npow = 1;
        for (long d = 0; d < static_cast<long>(table.s[k].size()); ++d) {
            if (table.s[k][d] != 0) inner += Rational(table.s[k][d]) * npow;
            npow *= inv_n2;
        }
        if (inner == 0) continue;
        Rational term = tpow * inner / Rational(kfac);
        if (k % 2)
            sum -= term;
        else
            sum += term;
    }
    double prefactor = std::exp(-to_double(t) * pairs);
    return prefactor * to_double(qpow(N, lambda.length()) * sum);
}

}  // namespace coverings
}  // namespace hkmom
