#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "hkmom/permutation.hpp"

namespace hkmom {
namespace mc_sim {

/// Geometric Euler scheme on U(N): B_{k+1} = B_k exp(sqrt(dt) G_k) with G_k
/// standard Gaussian in u(N) for the -Tr(XY) metric.
struct SimConfig {
    int N = 2;
    double t = 1.0;
    bool raw_time = false;  // false: simulate to time t/N (the convention used everywhere)
    long steps = 1000;
    long samples = 10000;
    std::uint64_t seed = 0;

    double total_time() const { return raw_time ? t : t / N; }
};

struct SimResult {
    double mean = 0;
    double stderr_ = 0;
    long samples = 0;
};

/// One Brownian path endpoint; deterministic in (cfg.seed, sample_index).
Eigen::MatrixXcd sample_brownian(const SimConfig& cfg, std::uint64_t sample_index = 0);

/// Matrix exponential, Pade(7,7) with scaling and squaring.
Eigen::MatrixXcd matrix_exp(const Eigen::MatrixXcd& a);

double unitarity_defect(const Eigen::MatrixXcd& b);

/// Monte-Carlo mean of prod_i Tr_N(B^{m_i}) (real part) over cfg.samples paths.
SimResult estimate_moment(const CycleType& type, const SimConfig& cfg);

/// Same, evaluating several cycle types on one common path ensemble.
std::vector<SimResult> estimate_moments(const std::vector<CycleType>& types,
                                        const SimConfig& cfg);

/// Per-sample statistics (one value per path), for trace output.
std::vector<double> moment_samples(const CycleType& type, const SimConfig& cfg);

struct MartingaleResult {
    double mc_mean = 0;
    double mc_stderr = 0;
    double exact = 0;
    double sigmas_away = 0;
    long samples = 0;
};

/// Couples the rate-binom(n,2) transposition walk started at sigma with an
/// independent Brownian motion at raw time t and compares the Monte-Carlo
/// mean of p^st_{pi_t}(B_t) with its closed form.
MartingaleResult martingale_check(const Permutation& sigma, int N, double t, long samples,
                                  long steps, std::uint64_t seed);

/// Number of worker threads (HKMOM_THREADS env var, else hardware).
int worker_threads();

}  // namespace mc_sim
}  // namespace hkmom
