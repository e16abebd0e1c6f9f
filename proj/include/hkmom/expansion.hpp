#pragma once

#include <vector>

#include "hkmom/numeric.hpp"
#include "hkmom/permutation.hpp"
#include "hkmom/tseries.hpp"

namespace hkmom {
namespace expansion {

enum class Group { U, SU };

/// Exact truncation of the heat-kernel moment series
///   prefactor * sum_{d<=d_max, k} (-1)^k t^k S(sigma,k,d) / (k! N^{2d}),
/// with prefactor exp(-nt/2) for U(N) and exp(-nt/2 + n^2 t / (2N^2)) for
/// SU(N).  Raw path counts are stored; signs and factorials are applied at
/// evaluation time.
struct ExpPoly {
    CycleType type;
    Group group = Group::U;
    long d_max = 0;
    // slices[d][k] = S(sigma,k,d); each slice is dense in k up to its window end.
    std::vector<std::vector<Integer>> slices;

    int n() const { return type.n(); }
    Integer s_value(long k, long d) const;
    /// Coefficients of the degree-d slice as a polynomial in t:
    /// P_d(t) = sum_k (-1)^k S(sigma,k,d) t^k / k!.
    std::vector<Rational> slice_poly(long d) const;
};

ExpPoly moment_expansion(const CycleType& type, Group group, long d_max);

struct EvalResult {
    double value = 0;
    double tail_bound = 0;  // certified bound on the dropped d > d_max part
};

/// Evaluates the truncated series at rational N > 0 and t >= 0.  The partial
/// sum is computed in exact arithmetic; only the prefactor and the final
/// conversion are floating point.
EvalResult evaluate(const ExpPoly& p, const Rational& N, const Rational& t);

/// evaluate() that throws when the tail bound exceeds tol.
double evaluate_strict(const ExpPoly& p, const Rational& N, const Rational& t,
                       double tol = 1e-10);

/// Independent oracle: the finite character sum
///   N^{-l(sigma)} sum_mu exp(-c_2(mu) t / (2N)) s_mu(I_N) chi^mu(sigma).
double fourier_moment(const CycleType& type, long N, double t);

/// S(sigma,k,0) recomputed from the per-cycle counts by multinomial shuffling.
Integer shuffle_factorize(const CycleType& type, long k);

/// Var[p_sigma(B_{t/N})] data: v[d][k] = S(sigma x sigma, k, d) minus the
/// binomial convolution of the S(sigma,.,.) with itself.  The d = 0 slice
/// vanishes identically.
struct VarianceTable {
    CycleType type;
    long d_max = 0;
    std::vector<std::vector<Integer>> v;
};

VarianceTable variance_expansion(const CycleType& type, long d_max);

/// Evaluates the variance table: exp(-nt) * sum (-1)^k t^k v[d][k] / (k! N^{2d}).
EvalResult evaluate_variance(const VarianceTable& tab, const Rational& N, const Rational& t);

/// sum_{d <= d_max} N^{-2d} P_d(t) as an exact truncated series in t
/// (the series multiplied by exp(+nt/2), and exp(-n^2 t/(2N^2)) for SU).
TSeries series_in_t(const ExpPoly& p, int t_order);

}  // namespace expansion
}  // namespace hkmom
