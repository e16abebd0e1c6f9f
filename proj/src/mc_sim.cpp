#include "hkmom/mc_sim.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <memory>
#include <random>
#include <stdexcept>
#include <thread>

namespace hkmom {
namespace mc_sim {

int worker_threads() {
    if (const char* env = std::getenv("HKMOM_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

namespace {

using Eigen::MatrixXcd;

// exp(A) by Pade(7,7) with scaling and squaring; workspaces preallocated.
// Backward error is below machine epsilon for scaled 1-norms <= 0.95.
class Expm {
public:
    explicit Expm(int n)
        : as_(n, n), a2_(n, n), a4_(n, n), a6_(n, n), u_(n, n), v_(n, n), p_(n, n), q_(n, n),
          lu_(n) {}

    void operator()(const MatrixXcd& a, MatrixXcd& out) {
        static constexpr double theta7 = 0.95;
        static constexpr double b[8] = {17297280., 8648640., 1995840., 277200.,
                                        25200.,    1512.,    56.,      1.};
        double nrm = a.cwiseAbs().colwise().sum().maxCoeff();
        int squarings = nrm > theta7 ? static_cast<int>(std::ceil(std::log2(nrm / theta7))) : 0;
        as_ = a * std::ldexp(1.0, -squarings);
        a2_.noalias() = as_ * as_;
        a4_.noalias() = a2_ * a2_;
        a6_.noalias() = a4_ * a2_;
        v_ = b[6] * a6_ + b[4] * a4_ + b[2] * a2_;
        v_.diagonal().array() += b[0];
        u_ = b[7] * a6_ + b[5] * a4_ + b[3] * a2_;
        u_.diagonal().array() += b[1];
        p_.noalias() = as_ * u_;
        q_ = v_ - p_;
        v_ += p_;
        lu_.compute(q_);
        out = lu_.solve(v_);
        for (int s = 0; s < squarings; ++s) {
            p_.noalias() = out * out;
            out.swap(p_);
        }
    }

private:
    MatrixXcd as_, a2_, a4_, a6_, u_, v_, p_, q_;
    Eigen::PartialPivLU<MatrixXcd> lu_;
};

void fill_gaussian_antihermitian(std::mt19937_64& rng, std::normal_distribution<double>& g,
                                 MatrixXcd& out) {
    const int n = static_cast<int>(out.rows());
    for (int j = 0; j < n; ++j) out(j, j) = std::complex<double>(0.0, g(rng));
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            double x = g(rng), y = g(rng);
            out(j, k) = std::complex<double>(x, y) * M_SQRT1_2;
            out(k, j) = std::complex<double>(-x, y) * M_SQRT1_2;
        }
}

void polar_project(MatrixXcd& b) {
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(b.adjoint() * b);
    b = b * es.operatorInverseSqrt();
}

class PathSampler {
public:
    PathSampler(int n, long steps, double total_time)
        : n_(n), steps_(steps), sqrt_dt_(std::sqrt(total_time / steps)), expm_(n), g_(0.0, 1.0),
          gauss_(n, n), incr_(n, n), scratch_(n, n) {}

    void sample(std::mt19937_64& rng, MatrixXcd& b) {
        b = MatrixXcd::Identity(n_, n_);
        for (long s = 0; s < steps_; ++s) {
            fill_gaussian_antihermitian(rng, g_, gauss_);
            expm_(gauss_ * sqrt_dt_, incr_);
            scratch_.noalias() = b * incr_;
            b.swap(scratch_);
            if ((s & 31) == 31 && unitarity_defect(b) > 1e-12) polar_project(b);
        }
        if (steps_ > 0 && unitarity_defect(b) > 1e-12) polar_project(b);
    }

private:
    int n_;
    long steps_;
    double sqrt_dt_;
    Expm expm_;
    std::normal_distribution<double> g_;
    MatrixXcd gauss_, incr_, scratch_;
};

// Product of traces of powers given by the cycle type.
double power_sum_statistic(const CycleType& type, const MatrixXcd& b, bool normalized) {
    const int n = static_cast<int>(b.rows());
    int max_power = type.parts().front();
    std::vector<std::complex<double>> traces(max_power + 1, 0.0);
    MatrixXcd p = b;
    for (int m = 1; m <= max_power; ++m) {
        traces[m] = p.trace();
        if (m < max_power) p = (p * b).eval();
    }
    std::complex<double> prod = 1.0;
    for (int m : type.parts()) prod *= normalized ? traces[m] / double(n) : traces[m];
    return prod.real();
}

using SampleBody = std::function<void(std::uint64_t, std::mt19937_64&, double*)>;

// Deterministic parallel sampling: per-sample statistics land in their own
// slot and are reduced sequentially, so results do not depend on scheduling.
// The factory runs once per worker thread and owns any per-thread state.
void run_parallel(long samples, int width, std::uint64_t seed,
                  const std::function<SampleBody()>& factory, std::vector<double>& out) {
    out.assign(static_cast<std::size_t>(samples) * width, 0.0);
    const int threads = static_cast<int>(std::min<long>(worker_threads(), std::max<long>(samples, 1)));
    std::atomic<long> next{0};
    auto worker = [&]() {
        SampleBody body = factory();
        for (;;) {
            long i = next.fetch_add(1);
            if (i >= samples) return;
            std::mt19937_64 rng(substream_seed(seed, static_cast<std::uint64_t>(i)));
            body(static_cast<std::uint64_t>(i), rng, &out[static_cast<std::size_t>(i) * width]);
        }
    };
    if (threads <= 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

SimResult reduce_column(const std::vector<double>& data, long samples, int width, int col) {
    double mean = 0;
    for (long i = 0; i < samples; ++i) mean += data[static_cast<std::size_t>(i) * width + col];
    mean /= samples;
    double var = 0;
    for (long i = 0; i < samples; ++i) {
        double d = data[static_cast<std::size_t>(i) * width + col] - mean;
        var += d * d;
    }
    var = samples > 1 ? var / (samples - 1) : 0.0;
    SimResult r;
    r.mean = mean;
    r.stderr_ = std::sqrt(var / samples);
    r.samples = samples;
    return r;
}

}  // namespace

Eigen::MatrixXcd matrix_exp(const Eigen::MatrixXcd& a) {
    Expm expm(static_cast<int>(a.rows()));
    MatrixXcd out(a.rows(), a.cols());
    expm(a, out);
    return out;
}

Eigen::MatrixXcd sample_brownian(const SimConfig& cfg, std::uint64_t sample_index) {
    if (cfg.steps < 1 || cfg.N < 1) throw std::invalid_argument("sample_brownian: bad config");
    PathSampler sampler(cfg.N, cfg.steps, cfg.total_time());
    std::mt19937_64 rng(substream_seed(cfg.seed, sample_index));
    MatrixXcd b(cfg.N, cfg.N);
    sampler.sample(rng, b);
    return b;
}

double unitarity_defect(const Eigen::MatrixXcd& b) {
    MatrixXcd d = b.adjoint() * b;
    d.diagonal().array() -= 1.0;
    return d.cwiseAbs().maxCoeff();
}

namespace {

std::vector<double> moment_statistics(const std::vector<CycleType>& types, const SimConfig& cfg) {
    if (cfg.samples < 1) throw std::invalid_argument("estimate_moments: samples < 1");
    for (const auto& type : types)
        if (type.n() < 1) throw std::invalid_argument("estimate_moments: empty cycle type");
    const int width = static_cast<int>(types.size());
    std::vector<double> data;
    run_parallel(
        cfg.samples, width, cfg.seed,
        [&]() -> SampleBody {
            auto sampler = std::make_shared<PathSampler>(cfg.N, cfg.steps, cfg.total_time());
            auto b = std::make_shared<MatrixXcd>(cfg.N, cfg.N);
            return [&, sampler, b](std::uint64_t, std::mt19937_64& rng, double* out) {
                sampler->sample(rng, *b);
                for (int c = 0; c < width; ++c)
                    out[c] = power_sum_statistic(types[c], *b, true);
            };
        },
        data);
    return data;
}

}  // namespace

std::vector<SimResult> estimate_moments(const std::vector<CycleType>& types,
                                        const SimConfig& cfg) {
    const int width = static_cast<int>(types.size());
    std::vector<double> data = moment_statistics(types, cfg);
    std::vector<SimResult> results;
    for (int c = 0; c < width; ++c) results.push_back(reduce_column(data, cfg.samples, width, c));
    return results;
}

std::vector<double> moment_samples(const CycleType& type, const SimConfig& cfg) {
    return moment_statistics({type}, cfg);
}

SimResult estimate_moment(const CycleType& type, const SimConfig& cfg) {
    return estimate_moments({type}, cfg)[0];
}

MartingaleResult martingale_check(const Permutation& sigma, int N, double t, long samples,
                                  long steps, std::uint64_t seed) {
    const int n = sigma.n();
    const double rate = 0.5 * n * (n - 1);
    std::vector<double> data;
    run_parallel(
        samples, 1, seed,
        [&]() -> SampleBody {
            auto sampler = std::make_shared<PathSampler>(N, steps, t);
            auto b = std::make_shared<MatrixXcd>(N, N);
            return [&, sampler, b](std::uint64_t, std::mt19937_64& rng, double* out) {
                // Only the endpoint of the walk enters the statistic: jump
                // count Poisson(rate * t), jump chain uniform on transpositions.
                long jumps = 0;
                if (n >= 2) {
                    std::poisson_distribution<long> pois(rate * t);
                    jumps = pois(rng);
                }
                Permutation pi = sigma;
                const int pairs = n * (n - 1) / 2;
                std::uniform_int_distribution<int> pick(0, pairs > 0 ? pairs - 1 : 0);
                for (long j = 0; j < jumps; ++j) {
                    int e = pick(rng);
                    int a = 0;
                    while (e >= n - 1 - a) {
                        e -= n - 1 - a;
                        ++a;
                    }
                    pi = compose(pi, Permutation::transposition(n, a, a + 1 + e));
                }
                sampler->sample(rng, *b);
                out[0] = power_sum_statistic(pi.cycle_type(), *b, false);
            };
        },
        data);
    SimResult sim = reduce_column(data, samples, 1, 0);
    MartingaleResult r;
    r.mc_mean = sim.mean;
    r.mc_stderr = sim.stderr_;
    r.samples = samples;
    r.exact =
        std::exp(-0.5 * (static_cast<double>(N) * n + static_cast<double>(n) * (n - 1)) * t) *
        std::pow(static_cast<double>(N), sigma.cycle_count());
    r.sigmas_away = sim.stderr_ > 0 ? std::abs(sim.mean - r.exact) / sim.stderr_ : 0.0;
    return r;
}

}  // namespace mc_sim
}  // namespace hkmom
