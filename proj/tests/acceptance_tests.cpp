// Acceptance suite: one check per release criterion, each printed as a
// single PASS/FAIL line with its runtime.  Exit status is nonzero if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hkmom/class_walk.hpp"
#include "hkmom/coverings.hpp"
#include "hkmom/expansion.hpp"
#include "hkmom/free_prob.hpp"
#include "hkmom/mc_sim.hpp"
#include "hkmom/noncross.hpp"
#include "hkmom/sym_char.hpp"
#include "hkmom/tensor_rep.hpp"

using namespace hkmom;

namespace {

struct Criterion {
    int id;
    std::string name;
    double time_limit_s;  // 0 = unstated
    std::function<bool(std::string&)> run;
};

bool expect(bool cond, std::string& msg, const std::string& what) {
    if (!cond && msg.empty()) msg = what;
    return cond;
}

// --- criterion 1: worked-example regression, exact to order t^20 -----------

TSeries closed_form_series(const CycleType& type, int order) {
    const auto& p = type.parts();
    const LaurentPoly one_poly(Rational(1));
    if (type.n() == 1) return TSeries::constant(order, one_poly);
    if (p == std::vector<int>{1, 1})
        return TSeries::cosh_of(order, 1, -1) -
               TSeries::sinh_of(order, 1, -1) * LaurentPoly::monomial(1, -1);
    if (p == std::vector<int>{2})
        return TSeries::cosh_of(order, 1, -1) -
               TSeries::sinh_of(order, 1, -1) * LaurentPoly::monomial(1, 1);
    TSeries cosh3 = TSeries::cosh_of(order, 3, -1);
    TSeries sinh3 = TSeries::sinh_of(order, 3, -1);
    TSeries one = TSeries::constant(order, one_poly);
    LaurentPoly third = (LaurentPoly::monomial(1, 2) + LaurentPoly(Rational(2))) * ratio(1, 3);
    if (p == std::vector<int>{1, 1, 1})
        return one + (cosh3 - one) * (third * LaurentPoly::monomial(1, -2)) -
               sinh3 * LaurentPoly::monomial(1, -1);
    if (p == std::vector<int>{2, 1}) return cosh3 - sinh3 * (third * LaurentPoly::monomial(1, -1));
    return one + (cosh3 - one) * third - sinh3 * LaurentPoly::monomial(1, 1);
}

bool criterion_worked_examples(std::string& msg) {
    const int order = 20;
    bool ok = true;
    for (auto parts :
         std::vector<std::vector<int>>{{1}, {1, 1}, {2}, {1, 1, 1}, {2, 1}, {3}}) {
        CycleType type(parts);
        auto poly = expansion::moment_expansion(type, expansion::Group::U,
                                                (order + type.n()) / 2 + 2);
        ok &= expect(expansion::series_in_t(poly, order) == closed_form_series(type, order), msg,
                     "closed form mismatch for class " + type.to_string());
    }
    {
        auto p4 = expansion::moment_expansion(CycleType::ones(4), expansion::Group::U, 2);
        auto d1 = p4.slice_poly(1);
        std::vector<Rational> want1{0, -6, 3};
        for (std::size_t k = 0; k < d1.size(); ++k)
            ok &= expect(d1[k] == (k < want1.size() ? want1[k] : Rational(0)), msg,
                         "Tr(B)^4 order-N^-2 slice");
        auto d2 = p4.slice_poly(2);
        std::vector<Rational> want2{0, 0, 15, -20, 5};
        for (std::size_t k = 0; k < d2.size(); ++k)
            ok &= expect(d2[k] == (k < want2.size() ? want2[k] : Rational(0)), msg,
                         "Tr(B)^4 order-N^-4 slice");
    }
    {
        auto q4 = expansion::moment_expansion(CycleType::single(4), expansion::Group::U, 1);
        auto d0 = q4.slice_poly(0);
        std::vector<Rational> want0{1, -6, 8, ratio(-8, 3)};
        for (std::size_t k = 0; k < d0.size(); ++k)
            ok &= expect(d0[k] == (k < want0.size() ? want0[k] : Rational(0)), msg,
                         "Tr(B^4) order-N^0 slice");
        // The source prints -58/3 t^3 + 71/4 t^4 here, inconsistent with its
        // own n = 4 class graph: sum_d S((1234),3,d) must be 6^3 = 216 with
        // S(.,3,0) = 16, forcing S(.,3,1) = 200.  All four engines agree.
        Integer mass = 0;
        for (long d = 0; d <= 3; ++d) mass += class_walk::count_S(CycleType::single(4), 3, d);
        ok &= expect(mass == 216 && class_walk::count_S(CycleType::single(4), 3, 0) == 16, msg,
                     "total-mass pin for S((1234),3,.)");
        auto d1 = q4.slice_poly(1);
        std::vector<Rational> want1{0, 0, 10, ratio(-100, 3), ratio(80, 3), ratio(-16, 3)};
        for (std::size_t k = 0; k < d1.size(); ++k)
            ok &= expect(d1[k] == (k < want1.size() ? want1[k] : Rational(0)), msg,
                         "Tr(B^4) order-N^-2 slice");
    }
    return ok;
}

// --- criterion 2: triple-oracle equivalence --------------------------------

bool criterion_triple_oracle(std::string& msg) {
    bool ok = true;
    for (int n = 1; n <= 5; ++n)
        for (const auto& lam : partitions_of(n)) {
            auto rep = Permutation::class_representative(lam);
            for (long k = 0; k <= 6; ++k) {
                auto brute = class_walk::brute_force_S_all(rep, k);
                for (long d = 0; d <= k; ++d)
                    ok &= expect(brute[d] == class_walk::count_S(lam, k, d), msg,
                                 "brute-force mismatch at n=" + std::to_string(n));
            }
        }
    for (int n = 1; n <= 6; ++n)
        for (const auto& lam : partitions_of(n))
            for (long k = 0; k <= 8; ++k) {
                auto poly = sym_char::char_sum_S(lam, k);
                for (long d = 0; d <= k; ++d)
                    ok &= expect(poly.coeff(static_cast<int>(-2 * d)) ==
                                     Rational(class_walk::count_S(lam, k, d)),
                                 msg, "character mismatch at n=" + std::to_string(n));
            }
    for (long n = 1; n <= 7; ++n)
        for (long k = 0; k <= 9; ++k)
            for (long d = 0; d <= k; ++d)
                ok &= expect(sym_char::s_ncycle_closed(n, k, d) ==
                                 class_walk::count_S(CycleType::single(static_cast<int>(n)), k, d),
                             msg, "closed form mismatch at n=" + std::to_string(n));
    return ok;
}

// --- criterion 3: closed-form tables ----------------------------------------

bool criterion_closed_tables(std::string& msg) {
    bool ok = true;
    for (long n = 2; n <= 8; ++n)
        ok &= expect(sym_char::c_np(n, n - 1) == ipow(Integer(n), n - 2), msg, "c_{n,n-1}");
    for (long n = 1; n <= 6; ++n) {
        if (n >= 2)
            ok &= expect(sym_char::c_np(n, n + 1) ==
                             (Integer(n) * n - 1) * ipow(Integer(n), n + 1) / 24,
                         msg, "c_{n,n+1}");
        Integer c3 = Integer(5 * n - 7) * (n + 3) * (n + 2) * (Integer(n) * n - 1) *
                     ipow(Integer(n), n + 3) / 5760;
        ok &= expect(sym_char::c_np(n, n + 3) == c3, msg, "c_{n,n+3}");
    }
    // exponential generating function to order x^12
    const int order = 12;
    for (int n = 1; n <= 8; ++n) {
        TSeries lhs(order);
        Integer pfac = 1;
        for (long p = 0; p <= order; ++p) {
            if (p > 0) pfac *= p;
            lhs.coeff(static_cast<int>(p)) =
                LaurentPoly(ratio(sym_char::c_np(n, p), pfac));
        }
        TSeries rhs = TSeries::exponential(order, ratio(static_cast<long>(n) * (n - 1), 2));
        TSeries drop = TSeries::constant(order, LaurentPoly(Rational(1))) -
                       TSeries::exponential(order, Rational(-n));
        rhs = rhs * drop.pow(n - 1) * ratio(1, factorial(n).get_si());
        ok &= expect(lhs == rhs, msg, "generating function at n=" + std::to_string(n));
    }
    for (long n = 1; n <= 9; ++n)
        for (long k = 0; k <= n + 3; ++k)
            ok &= expect(noncross::s_cycle_zero_defect(n, k) ==
                             class_walk::count_S(CycleType::single(static_cast<int>(n)), k, 0),
                         msg, "defect-zero closed form");
    return ok;
}

// --- criterion 4: structural identities -------------------------------------

bool criterion_structural(std::string& msg) {
    bool ok = true;
    for (int n = 1; n <= 7; ++n) {
        const auto& tm = class_walk::transition_counts(n);
        for (int i = 0; i < tm.num_classes(); ++i) {
            long row = 0;
            for (int j = 0; j < tm.num_classes(); ++j) row += tm.count(i, j);
            ok &= expect(row == n * (n - 1) / 2, msg, "row sum at n=" + std::to_string(n));
        }
    }
    for (int n = 2; n <= 6; ++n)
        for (const auto& lam : partitions_of(n))
            for (long k = 0; k <= 6; ++k) {
                Integer mass = 0;
                for (long d = 0; d <= k; ++d) mass += class_walk::count_S(lam, k, d);
                ok &= expect(mass == ipow(Integer(n * (n - 1) / 2), k), msg, "total mass");
            }
    for (int n = 1; n <= 5; ++n) {
        ok &= expect(class_walk::transfer_inverse_check(n, Rational(1), Rational(1)) < 1e-12, msg,
                     "transfer at (1,1), n=" + std::to_string(n));
        ok &= expect(class_walk::transfer_inverse_check(n, ratio(1, 2), Rational(3)) < 1e-12, msg,
                     "transfer at (0.5,3), n=" + std::to_string(n));
    }
    for (int n = 1; n <= 6; ++n)
        ok &= expect(sym_char::jm_identity_check(n), msg, "jm at n=" + std::to_string(n));
    {
        const auto& tm = class_walk::transition_counts(4);
        const Partition id({1, 1, 1, 1}), t2({2, 1, 1}), t3({3, 1}), t22({2, 2}), t4({4});
        ok &= expect(tm.count(id, t2) == 6 && tm.count(t2, id) == 1 && tm.count(t2, t3) == 4 &&
                         tm.count(t2, t22) == 1 && tm.count(t3, t2) == 3 &&
                         tm.count(t3, t4) == 3 && tm.count(t4, t3) == 4 &&
                         tm.count(t4, t22) == 2 && tm.count(t22, t2) == 2 &&
                         tm.count(t22, t4) == 4,
                     msg, "class graph edge multiplicities");
    }
    return ok;
}

// --- criterion 5: Casimir matrix identities ---------------------------------

bool criterion_casimir(std::string& msg) {
    using tensor_rep::GroupKind;
    bool ok = true;
    for (auto [n, N] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
        auto r = tensor_rep::casimir_identity_check(GroupKind::U, n, N);
        ok &= expect(r.ok && r.max_deviation == 0.0, msg,
                     "U(" + std::to_string(N) + ") at n=" + std::to_string(n) + " " + r.detail);
    }
    for (auto [n, N] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {3, 3}}) {
        auto r = tensor_rep::casimir_identity_check(GroupKind::SO, n, N);
        ok &= expect(r.ok && r.max_deviation == 0.0, msg,
                     "SO(" + std::to_string(N) + ") at n=" + std::to_string(n) + " " + r.detail);
    }
    for (int N : {1, 2})
        for (int n = 1; n <= 3; ++n) {
            auto r = tensor_rep::casimir_identity_check(GroupKind::Sp, n, N);
            ok &= expect(r.ok && r.max_deviation == 0.0, msg,
                         "Sp at 2N=" + std::to_string(2 * N) + ", n=" + std::to_string(n) + " " +
                             r.detail);
        }
    for (auto [n, N] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {2, 3}, {3, 2}, {3, 3}})
        ok &= expect(tensor_rep::su_shift_check(n, N), msg, "SU shift");
    return ok;
}

// --- criterion 6: Fourier oracle --------------------------------------------

bool criterion_fourier(std::string& msg) {
    bool ok = true;
    for (int n = 1; n <= 5; ++n)
        for (const auto& lam : partitions_of(n)) {
            auto poly = expansion::moment_expansion(lam, expansion::Group::U, 40);
            for (long N = 1; N <= 4; ++N)
                for (double t : {0.25, 1.0}) {
                    double a = expansion::evaluate_strict(poly, Rational(N), rational_of(t), 1e-11);
                    double b = expansion::fourier_moment(lam, N, t);
                    ok &= expect(std::abs(a - b) < 1e-10, msg,
                                 "fourier mismatch at class " + lam.to_string() + " N=" +
                                     std::to_string(N) + " t=" + std::to_string(t));
                }
        }
    return ok;
}

// --- criterion 7: factorization and variance --------------------------------

bool criterion_factorization(std::string& msg) {
    bool ok = true;
    for (int n = 2; n <= 6; ++n)
        for (const auto& lam : partitions_of(n)) {
            if (lam.length() < 2) continue;
            auto lhs = expansion::moment_expansion(lam, expansion::Group::U, 0).slice_poly(0);
            std::vector<Rational> prod{Rational(1)};
            for (int m : lam.parts()) {
                auto cyc = expansion::moment_expansion(CycleType::single(m), expansion::Group::U, 0)
                               .slice_poly(0);
                std::vector<Rational> next(prod.size() + cyc.size() - 1, Rational(0));
                for (std::size_t a = 0; a < prod.size(); ++a)
                    for (std::size_t b = 0; b < cyc.size(); ++b) next[a + b] += prod[a] * cyc[b];
                prod.swap(next);
            }
            for (std::size_t k = 0; k < std::max(lhs.size(), prod.size()); ++k) {
                Rational a = k < lhs.size() ? lhs[k] : Rational(0);
                Rational b = k < prod.size() ? prod[k] : Rational(0);
                ok &= expect(a == b, msg, "factorization at class " + lam.to_string());
            }
        }
    for (int n = 1; n <= 4; ++n)
        for (const auto& lam : partitions_of(n)) {
            auto tab = expansion::variance_expansion(lam, 3);
            for (const auto& val : tab.v[0])
                ok &= expect(val == 0, msg, "variance order at class " + lam.to_string());
        }
    return ok;
}

// --- criterion 8: free probability ------------------------------------------

bool criterion_free_prob(std::string& msg) {
    bool ok = true;
    for (long n = 1; n <= 12; ++n)
        for (double t : {0.1, 1.0, 3.0})
            ok &= expect(std::abs(free_prob::limit_moment(n, t) -
                                  free_prob::moment_from_cumulants(n, t)) < 1e-12,
                         msg, "moment-cumulant inversion at n=" + std::to_string(n));
    // all two-variable words of length <= 6, mixed cumulants vanish
    for (int len = 2; len <= 6; ++len)
        for (int mask = 1; mask < (1 << len) - 1; ++mask) {
            free_prob::Word w;
            w.times[0] = 0.5;
            w.times[1] = 1.0;
            for (int i = 0; i < len; ++i) w.letters.push_back((mask >> i) & 1);
            ok &= expect(std::abs(free_prob::mixed_cumulant(w)) < 1e-10, msg,
                         "mixed cumulant, length " + std::to_string(len));
        }
    for (double t : {0.0, 1.0, 4.0})
        for (double arg : {0.0, 1.0, 2.5, 4.4}) {
            std::complex<double> z = 0.05 * std::exp(std::complex<double>(0.0, arg));
            ok &= expect(std::abs(free_prob::chi_residual(t, z)) < 1e-8, msg,
                         "chi residual at t=" + std::to_string(t));
        }
    for (int n = 1; n <= 9; ++n) {
        auto slice =
            expansion::moment_expansion(CycleType::single(n), expansion::Group::U, 0).slice_poly(0);
        auto want = free_prob::limit_moment_poly(n);
        for (std::size_t k = 0; k < want.size(); ++k)
            ok &= expect((k < slice.size() ? slice[k] : Rational(0)) == want[k], msg,
                         "limit moment coefficients at n=" + std::to_string(n));
    }
    return ok;
}

// --- criterion 9: Monte Carlo -----------------------------------------------

bool criterion_monte_carlo(std::string& msg) {
    bool ok = true;
    {
        mc_sim::SimConfig cfg;
        cfg.N = 8;
        cfg.t = 1.0;
        cfg.steps = 1000;
        cfg.samples = 100000;
        cfg.seed = 20240810;
        std::vector<CycleType> types{CycleType::single(1), CycleType::single(2),
                                     CycleType::single(3)};
        auto results = mc_sim::estimate_moments(types, cfg);
        for (std::size_t i = 0; i < types.size(); ++i) {
            auto poly = expansion::moment_expansion(types[i], expansion::Group::U, 30);
            double exact = expansion::evaluate_strict(poly, Rational(8), Rational(1), 1e-11);
            double dev = std::abs(results[i].mean - exact);
            ok &= expect(dev < 3 * results[i].stderr_, msg,
                         "moment estimate for n=" + std::to_string(i + 1) + " off by " +
                             std::to_string(dev / results[i].stderr_) + " sigma");
            ok &= expect(results[i].stderr_ < 0.01 * std::abs(exact), msg,
                         "stderr too large to be a real test at n=" + std::to_string(i + 1));
        }
    }
    {
        auto r1 = mc_sim::martingale_check(Permutation::identity(2), 2, 0.3, 100000, 500, 71);
        ok &= expect(r1.sigmas_away < 3, msg, "martingale at id");
        auto r2 = mc_sim::martingale_check(Permutation::parse("(1 2)"), 2, 0.3, 100000, 500, 72);
        ok &= expect(r2.sigmas_away < 3, msg, "martingale at (12)");
    }
    {
        // Var[p_(12)(B_{t/N})] against N on a log-log fit
        std::vector<double> lw, lv;
        for (int N : {4, 8, 16}) {
            mc_sim::SimConfig cfg;
            cfg.N = N;
            cfg.t = 1.0;
            cfg.steps = 250;
            cfg.samples = 20000;
            cfg.seed = 99;
            auto r = mc_sim::estimate_moment(CycleType::single(2), cfg);
            double variance = r.stderr_ * r.stderr_ * r.samples;
            lw.push_back(std::log(static_cast<double>(N)));
            lv.push_back(std::log(variance));
        }
        double mx = (lw[0] + lw[1] + lw[2]) / 3, my = (lv[0] + lv[1] + lv[2]) / 3;
        double num = 0, den = 0;
        for (int i = 0; i < 3; ++i) {
            num += (lw[i] - mx) * (lv[i] - my);
            den += (lw[i] - mx) * (lw[i] - mx);
        }
        double slope = num / den;
        ok &= expect(std::abs(slope + 2.0) < 0.4, msg,
                     "variance slope " + std::to_string(slope) + " not within 20% of -2");
    }
    return ok;
}

// --- criterion 10: genus expansion ------------------------------------------

bool criterion_genus(std::string& msg) {
    bool ok = true;
    for (int n = 1; n <= 4; ++n)
        for (const auto& lam : partitions_of(n))
            for (int N = 1; N <= 3; ++N)
                for (double t : {0.25, 1.0}) {
                    double analytic =
                        coverings::analytic_genus_expectation(n, lam, Rational(N), rational_of(t));
                    double target = coverings::genus_target(n, lam, N, t);
                    ok &= expect(std::abs(analytic - target) < 1e-10, msg,
                                 "analytic Poisson sum at class " + lam.to_string());
                }
    auto r = coverings::genus_estimator(3, CycleType::single(3), 2, 0.5, 1000000, 4242);
    ok &= expect(r.sigmas_away < 3, msg,
                 "MC genus estimator off by " + std::to_string(r.sigmas_away) + " sigma");
    return ok;
}

// --- criterion 11: non-crossing suite ----------------------------------------

bool criterion_noncrossing(std::string& msg) {
    bool ok = true;
    {
        auto p = noncross::NCPartition::parse(12, "{1,3,12}{2}{4,8,9}{5,6,7}{10,11}");
        auto want = noncross::NCPartition::parse(12, "{1,2}{3,9,11}{4,7}{5}{6}{8}{10}{12}");
        ok &= expect(noncross::kreweras(p) == want, msg, "Kreweras complement example");
    }
    for (int n = 1; n <= 12; ++n) {
        Integer catalan = binomial(2 * n, n) / (n + 1);
        ok &= expect(Integer(static_cast<long>(noncross::enumerate_nc(n).size())) == catalan, msg,
                     "Catalan count at n=" + std::to_string(n));
    }
    for (int n = 1; n <= 10; ++n) {
        // admissible type vectors are integer partitions of n
        Integer total = 0;
        for (const auto& lam : partitions_of(n)) {
            std::vector<int> tv(n, 0);
            for (int part : lam.parts()) ++tv[part - 1];
            total += noncross::count_by_type(n, tv);
        }
        Integer catalan = binomial(2 * n, n) / (n + 1);
        ok &= expect(total == catalan, msg, "type counts at n=" + std::to_string(n));
    }
    for (int n = 2; n <= 8; ++n) {
        std::vector<Integer> by_rank(n, 0);
        for (const auto& p : noncross::enumerate_nc(n))
            by_rank[p.rank()] += noncross::count_increasing_paths(p);
        for (long k = 0; k <= n - 1; ++k)
            ok &= expect(by_rank[k] == noncross::s_cycle_zero_defect(n, k), msg,
                         "path counts at n=" + std::to_string(n));
    }
    return ok;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "worked-example regression (series to t^20)", 5.0, criterion_worked_examples},
        {2, "triple-oracle equivalence", 120.0, criterion_triple_oracle},
        {3, "closed-form tables", 30.0, criterion_closed_tables},
        {4, "structural identities", 0.0, criterion_structural},
        {5, "Casimir matrix identities", 60.0, criterion_casimir},
        {6, "Fourier oracle", 0.0, criterion_fourier},
        {7, "factorization and variance", 0.0, criterion_factorization},
        {8, "free probability", 0.0, criterion_free_prob},
        {9, "Monte Carlo", 600.0, criterion_monte_carlo},
        {10, "genus expansion", 300.0, criterion_genus},
        {11, "non-crossing suite", 0.0, criterion_noncrossing},
    };
    int failures = 0;
    for (auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string msg;
        bool ok = false;
        try {
            ok = c.run(msg);
        } catch (const std::exception& e) {
            msg = std::string("exception: ") + e.what();
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                             .count();
        if (ok && c.time_limit_s > 0 && seconds > c.time_limit_s) {
            ok = false;
            msg = "runtime " + std::to_string(seconds) + " s over the " +
                  std::to_string(c.time_limit_s) + " s budget";
        }
        if (!ok) ++failures;
        std::printf("[%s] criterion %2d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", c.id,
                    c.name.c_str(), seconds, msg.empty() ? "" : " - ", msg.c_str());
        std::fflush(stdout);
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
