#include "hkmom/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hkmom/class_walk.hpp"
#include "hkmom/sym_char.hpp"

namespace hkmom {
namespace expansion {

Integer ExpPoly::s_value(long k, long d) const {
    if (d < 0 || d > d_max || k < 0) return 0;
    if (k >= static_cast<long>(slices[d].size())) return 0;
    return slices[d][k];
}

std::vector<Rational> ExpPoly::slice_poly(long d) const {
    std::vector<Rational> poly(slices[d].size(), Rational(0));
    Integer kfac = 1;
    for (long k = 0; k < static_cast<long>(poly.size()); ++k) {
        if (k > 0) kfac *= k;
        if (slices[d][k] == 0) continue;
        poly[k] = Rational(slices[d][k]) / Rational(kfac);
        if (k % 2) poly[k] = -poly[k];
    }
    return poly;
}

ExpPoly moment_expansion(const CycleType& type, Group group, long d_max) {
    if (d_max < 0) throw std::invalid_argument("moment_expansion: d_max < 0");
    const int n = type.n();
    const int ell = type.length();
    ExpPoly p;
    p.type = type;
    p.group = group;
    p.d_max = d_max;
    p.slices.resize(d_max + 1);
    const long k_top = 2 * d_max + (n - ell);
    auto table = class_walk::path_count_table(type, k_top);
    for (long d = 0; d <= d_max; ++d) {
        const long k_end = 2 * d + (n - ell);  // window end for this slice
        p.slices[d].assign(k_end + 1, Integer(0));
        for (long k = 0; k <= k_end; ++k)
            if (d < static_cast<long>(table.s[k].size())) p.slices[d][k] = table.s[k][d];
    }
    return p;
}

namespace {

double su_correction(int n, double t, double N) {
    return std::exp(static_cast<double>(n) * n * t / (2.0 * N * N));
}

// Tail of the double series beyond d_max: paths with defect d have length at
// least max(d, 2d - (l-1)), and there are at most binom(n,2)^k of them.
double tail_bound_beyond(int n, int ell, long d_max, double t, double N, bool su) {
    const double edges = 0.5 * n * (n - 1);
    const double tb = t * edges;
    double total = 0;
    for (long d = d_max + 1; d <= d_max + 400; ++d) {
        double m = static_cast<double>(std::max(d, 2 * d - (ell - 1)));
        double log_term = m * std::log(tb > 0 ? tb : 1e-300) - std::lgamma(m + 1) -
                          2.0 * d * std::log(N);
        double term = tb > 0 ? std::exp(log_term) : (d == 0 ? 1.0 : 0.0);
        total += term;
        if (term < 1e-320 || (d > d_max + 4 && term < total * 1e-18)) break;
    }
    total *= std::exp(tb);  // sum_{k>=m} (tb)^k/k! <= (tb)^m/m! e^{tb}
    double pre = std::exp(-0.5 * n * t);
    if (su) pre *= su_correction(n, t, N);
    return pre * total;
}

}  // namespace

EvalResult evaluate(const ExpPoly& p, const Rational& N, const Rational& t) {
    if (N <= 0) throw std::invalid_argument("evaluate: N must be positive");
    if (t < 0) throw std::invalid_argument("evaluate: t must be nonnegative");
    const int n = p.n();
    Rational sum = 0;
    const Rational n_inv2 = 1 / (N * N);
    Rational npow = 1;  // N^{-2d}
    for (long d = 0; d <= p.d_max; ++d) {
        // P_d(t), evaluated by Horner in exact arithmetic
        Rational value = 0;
        Integer kfac = 1;
        Rational tpow = 1;
        Rational acc = 0;
        for (long k = 0; k < static_cast<long>(p.slices[d].size()); ++k) {
            if (k > 0) {
                kfac *= k;
                tpow *= t;
            }
            if (p.slices[d][k] == 0) continue;
            Rational term = Rational(p.slices[d][k]) * tpow / Rational(kfac);
            if (k % 2)
                acc -= term;
            else
                acc += term;
        }
        value = acc;
        sum += value * npow;
        npow *= n_inv2;
    }
    const double td = to_double(t), nd = to_double(N);
    double pre = std::exp(-0.5 * n * td);
    if (p.group == Group::SU) pre *= su_correction(n, td, nd);
    EvalResult res;
    res.value = pre * to_double(sum);
    res.tail_bound =
        tail_bound_beyond(n, p.type.length(), p.d_max, td, nd, p.group == Group::SU);
    return res;
}

double evaluate_strict(const ExpPoly& p, const Rational& N, const Rational& t, double tol) {
    EvalResult r = evaluate(p, N, t);
    if (r.tail_bound > tol)
        throw std::runtime_error("evaluate: requested precision not reachable at this d_max");
    return r.value;
}

double fourier_moment(const CycleType& type, long N, double t) {
    if (N < 1) throw std::invalid_argument("fourier_moment: N must be a positive integer");
    const int n = type.n();
    const Rational Nq(N);
    const Rational nfac(factorial(n));
    double sum = 0;
    for (const auto& mu : partitions_of(n)) {
        Rational schur_at_id = sym_char::omega_character(mu).eval(Nq) / nfac;
        if (schur_at_id == 0) continue;  // length above N
        Rational c2 = sym_char::casimir_eigenvalue(mu).eval(Nq);
        Integer chi = sym_char::mn_character(mu, type);
        if (chi == 0) continue;
        sum += std::exp(-to_double(c2) * t / (2.0 * N)) * to_double(schur_at_id) * to_double(chi);
    }
    return sum / std::pow(static_cast<double>(N), type.length());
}

Integer shuffle_factorize(const CycleType& type, long k) {
    if (k < 0) return 0;
    // Convolve the exponential generating coefficients S(c_i, l, 0) / l!.
    std::vector<Rational> acc{Rational(1)};
    acc.resize(k + 1, Rational(0));
    for (int m : type.parts()) {
        std::vector<Rational> cyc(k + 1, Rational(0));
        Integer lfac = 1;
        for (long l = 0; l <= std::min<long>(k, m - 1); ++l) {
            if (l > 0) lfac *= l;
            cyc[l] = Rational(class_walk::count_S(CycleType::single(m), l, 0)) / Rational(lfac);
        }
        std::vector<Rational> next(k + 1, Rational(0));
        for (long a = 0; a <= k; ++a) {
            if (acc[a] == 0) continue;
            for (long b = 0; a + b <= k; ++b) {
                if (cyc[b] == 0) continue;
                next[a + b] += acc[a] * cyc[b];
            }
        }
        acc.swap(next);
    }
    Rational out = acc[k] * Rational(factorial(k));
    if (!is_integer(out)) throw std::logic_error("shuffle_factorize: non-integer result");
    return out.get_num();
}

VarianceTable variance_expansion(const CycleType& type, long d_max) {
    const int n = type.n();
    std::vector<int> twice = type.parts();
    twice.insert(twice.end(), type.parts().begin(), type.parts().end());
    std::sort(twice.rbegin(), twice.rend());
    const CycleType squared(twice);

    ExpPoly big = moment_expansion(squared, Group::U, d_max);
    ExpPoly small = moment_expansion(type, Group::U, d_max);

    VarianceTable tab;
    tab.type = type;
    tab.d_max = d_max;
    tab.v.resize(d_max + 1);
    for (long d = 0; d <= d_max; ++d) {
        const long k_end = 2 * d + (2 * n - 2 * type.length());
        tab.v[d].assign(k_end + 1, Integer(0));
        for (long k = 0; k <= k_end; ++k) {
            Integer conv = 0;
            for (long e = 0; e <= d; ++e)
                for (long l = 0; l <= k; ++l) {
                    Integer s1 = small.s_value(l, e);
                    if (s1 == 0) continue;
                    Integer s2 = small.s_value(k - l, d - e);
                    if (s2 == 0) continue;
                    conv += binomial(k, l) * s1 * s2;
                }
            tab.v[d][k] = big.s_value(k, d) - conv;
        }
    }
    return tab;
}

EvalResult evaluate_variance(const VarianceTable& tab, const Rational& N, const Rational& t) {
    const int n = tab.type.n();
    Rational sum = 0;
    const Rational n_inv2 = 1 / (N * N);
    Rational npow = 1;
    for (long d = 0; d <= tab.d_max; ++d) {
        Rational acc = 0;
        Integer kfac = 1;
        Rational tpow = 1;
        for (long k = 0; k < static_cast<long>(tab.v[d].size()); ++k) {
            if (k > 0) {
                kfac *= k;
                tpow *= t;
            }
            if (tab.v[d][k] == 0) continue;
            Rational term = Rational(tab.v[d][k]) * tpow / Rational(kfac);
            if (k % 2)
                acc -= term;
            else
                acc += term;
        }
        sum += acc * npow;
        npow *= n_inv2;
    }
    EvalResult res;
    res.value = std::exp(-static_cast<double>(n) * to_double(t)) * to_double(sum);
    res.tail_bound = tail_bound_beyond(2 * n, 2 * tab.type.length(), tab.d_max, to_double(t),
                                       to_double(N), false) +
                     2 * tail_bound_beyond(n, tab.type.length(), tab.d_max, to_double(t),
                                           to_double(N), false);
    return res;
}

TSeries series_in_t(const ExpPoly& p, int t_order) {
    TSeries s(t_order);
    for (long d = 0; d <= p.d_max; ++d) {
        Integer kfac = 1;
        for (long k = 0; k < static_cast<long>(p.slices[d].size()) && k <= t_order; ++k) {
            if (k > 0) kfac *= k;
            if (p.slices[d][k] == 0) continue;
            Rational c = Rational(p.slices[d][k]) / Rational(kfac);
            if (k % 2) c = -c;
            s.coeff(k).add_term(static_cast<int>(-2 * d), c);
        }
    }
    return s;
}

}  // namespace expansion
}  // namespace hkmom
