#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "hkmom/numeric.hpp"
#include "hkmom/permutation.hpp"

namespace hkmom {
namespace coverings {

/// Monodromy data of a random branched covering: the sequence of generic
/// branch transpositions and the resulting boundary monodromy.  Branch point
/// positions never enter any observable and are not sampled.
struct CoveringSample {
    long k = 0;                                 // number of generic branch points
    std::vector<std::pair<int, int>> taus;      // 0-based transposition points
    Permutation sigma_end;
    int chi = 0;                                // Euler characteristic, l(sigma_end) - k
};

/// Draws from the covering measure at time t: k is Poisson(t binom(n,2)) and
/// the transpositions are i.i.d. uniform.
CoveringSample sample_covering(int n, const CycleType& lambda, double t, std::mt19937_64& rng);

/// chi = l(sigma_start tau_1 ... tau_k) - k.
int euler_char(const Permutation& start, const std::vector<std::pair<int, int>>& taus);

/// Same from an explicit path; every step must be a right multiplication by a
/// transposition.
int euler_char_path(const std::vector<Permutation>& path);

struct GenusResult {
    double estimate = 0;
    double stderr_ = 0;
    double exact = 0;
    double sigmas_away = 0;
    long samples = 0;
};

/// Monte-Carlo mean of (-1)^k N^chi against the exact heat-kernel moment
/// e^{nt - n^2 t/2} N^{l(lambda)} E[p_sigma(B_{t/N})].
GenusResult genus_estimator(int n, const CycleType& lambda, int N, double t, long samples,
                            std::uint64_t seed);

/// The same expectation summed analytically over the Poisson number of branch
/// points (no Monte Carlo); k is truncated at k_cut with a negligible tail.
double analytic_genus_expectation(int n, const CycleType& lambda, const Rational& N,
                                  const Rational& t, long k_cut = 60);

/// Exact comparison target e^{nt - n^2 t / 2} N^{l(lambda)} E[p_sigma(B_{t/N})].
double genus_target(int n, const CycleType& lambda, int N, double t);

}  // namespace coverings
}  // namespace hkmom
