#include <doctest.h>

#include <cmath>

#include "hkmom/class_walk.hpp"
#include "hkmom/expansion.hpp"
#include "hkmom/free_prob.hpp"
#include "hkmom/noncross.hpp"

using namespace hkmom;
using namespace hkmom::expansion;

namespace {

CycleType CT(std::vector<int> parts) { return CycleType(std::move(parts)); }

// series of exp(nt/2) E[...] for the n = 2 and n = 3 closed forms
TSeries closed_form_series(const CycleType& type, int order) {
    const auto& p = type.parts();
    if (type.n() == 1) return TSeries::constant(order, LaurentPoly(Rational(1)));
    if (type.n() == 2 && p == std::vector<int>{1, 1})
        return TSeries::cosh_of(order, 1, -1) -
               TSeries::sinh_of(order, 1, -1) * LaurentPoly::monomial(1, -1);
    if (type.n() == 2 && p == std::vector<int>{2})
        return TSeries::cosh_of(order, 1, -1) -
               TSeries::sinh_of(order, 1, -1) * LaurentPoly::monomial(1, 1);
    // n = 3 forms, in powers of cosh(3t/N) and sinh(3t/N)
    TSeries cosh3 = TSeries::cosh_of(order, 3, -1);
    TSeries sinh3 = TSeries::sinh_of(order, 3, -1);
    TSeries one = TSeries::constant(order, LaurentPoly(Rational(1)));
    LaurentPoly third_n2p2 =
        (LaurentPoly::monomial(1, 2) + LaurentPoly(Rational(2))) * ratio(1, 3);
    if (p == std::vector<int>{1, 1, 1})
        return one + (cosh3 - one) * (third_n2p2 * LaurentPoly::monomial(1, -2)) -
               sinh3 * LaurentPoly::monomial(1, -1);
    if (p == std::vector<int>{2, 1})
        return cosh3 - sinh3 * (third_n2p2 * LaurentPoly::monomial(1, -1));
    if (p == std::vector<int>{3})
        return one + (cosh3 - one) * third_n2p2 - sinh3 * LaurentPoly::monomial(1, 1);
    throw std::logic_error("no closed form");
}

}  // namespace

TEST_CASE("moment expansions reproduce the closed forms up to degree six") {
    const int order = 12;
    for (auto parts : std::vector<std::vector<int>>{{1}, {1, 1}, {2}, {1, 1, 1}, {2, 1}, {3}}) {
        CycleType type = CT(parts);
        auto p = moment_expansion(type, Group::U, (order + type.n()) / 2 + 1);
        CHECK(series_in_t(p, order) == closed_form_series(type, order));
    }
}

TEST_CASE("quoted degree-four slices") {
    auto p4 = moment_expansion(CT({1, 1, 1, 1}), Group::U, 2);
    auto d1 = p4.slice_poly(1);
    // -6t + 3t^2
    CHECK(d1[0] == 0);
    CHECK(d1[1] == -6);
    CHECK(d1[2] == 3);
    for (std::size_t k = 3; k < d1.size(); ++k) CHECK(d1[k] == 0);
    auto d2 = p4.slice_poly(2);
    // 15t^2 - 20t^3 + 5t^4
    CHECK(d2[2] == 15);
    CHECK(d2[3] == -20);
    CHECK(d2[4] == 5);

    auto q4 = moment_expansion(CT({4}), Group::U, 1);
    auto q0 = q4.slice_poly(0);
    CHECK(q0[0] == 1);
    CHECK(q0[1] == -6);
    CHECK(q0[2] == 8);
    CHECK(q0[3] == ratio(-8, 3));
    // The order-N^{-2} slice is 10t^2 - (100/3)t^3 + (80/3)t^4 - (16/3)t^5:
    // S((1234),3,1) = 200 is forced by the total path count 6^3 = 216 minus
    // S((1234),3,0) = 16, and all four engines (DP, enumeration, character
    // sum, Stirling closed form) agree on 20, 200, 640, 640.
    auto q1 = q4.slice_poly(1);
    CHECK(q1[1] == 0);
    CHECK(q1[2] == 10);
    CHECK(q1[3] == ratio(-100, 3));
    CHECK(q1[4] == ratio(80, 3));
    CHECK(q1[5] == ratio(-16, 3));
    Integer mass = 0;
    for (long d = 0; d <= 3; ++d) mass += class_walk::count_S(CT({4}), 3, d);
    CHECK(mass == 216);
    CHECK(class_walk::count_S(CT({4}), 3, 0) == 16);
}

TEST_CASE("evaluation at t = 0 gives 1") {
    for (auto parts : std::vector<std::vector<int>>{{1}, {2}, {2, 2}, {3, 1}}) {
        auto p = moment_expansion(CT(parts), Group::U, 6);
        CHECK(evaluate(p, Rational(3), Rational(0)).value == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("evaluation matches closed forms at sample points") {
    auto p2 = moment_expansion(CT({2}), Group::U, 30);
    double v = evaluate_strict(p2, Rational(1), Rational(1));
    CHECK(v == doctest::Approx(std::exp(-2.0)).epsilon(1e-10));

    auto p3 = moment_expansion(CT({3}), Group::U, 30);
    double t = 0.7, N = 2;
    double want = std::exp(-1.5 * t) *
                  (1 + (N * N + 2) / 3.0 * (std::cosh(3 * t / N) - 1) - N * std::sinh(3 * t / N));
    CHECK(evaluate_strict(p3, Rational(2), rational_of(0.7)) ==
          doctest::Approx(want).epsilon(1e-10));
}

TEST_CASE("evaluation reports an honest tail bound") {
    auto p = moment_expansion(CT({2}), Group::U, 2);
    auto r = evaluate(p, Rational(1), Rational(2));
    CHECK(r.tail_bound > 1e-12);  // d_max 2 is far too small at N = 1
    CHECK_THROWS_AS(evaluate_strict(p, Rational(1), Rational(2), 1e-12), std::runtime_error);
    auto big = moment_expansion(CT({2}), Group::U, 40);
    CHECK(evaluate(big, Rational(1), Rational(2)).tail_bound < 1e-12);
}

TEST_CASE("Fourier oracle examples") {
    CHECK(fourier_moment(CT({1}), 3, 1.0) == doctest::Approx(std::exp(-0.5)).epsilon(1e-12));

    auto p2 = moment_expansion(CT({2}), Group::U, 30);
    CHECK(fourier_moment(CT({2}), 2, 0.5) ==
          doctest::Approx(evaluate_strict(p2, Rational(2), rational_of(0.5))).epsilon(1e-12));

    double t = 0.4, N = 2;
    double want = std::exp(-1.5 * t) *
                  (std::cosh(3 * t / N) - (N * N + 2) / (3 * N) * std::sinh(3 * t / N));
    CHECK(fourier_moment(CT({2, 1}), 2, t) == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("Fourier oracle against the expansion on a grid") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& lam : partitions_of(n))
            for (long N = 1; N <= 3; ++N)
                for (double t : {0.25, 1.0}) {
                    auto p = moment_expansion(lam, Group::U, 36);
                    double a = evaluate_strict(p, Rational(N), rational_of(t), 1e-11);
                    double b = fourier_moment(lam, N, t);
                    CHECK(std::abs(a - b) < 1e-10);
                }
}

TEST_CASE("shuffle factorization of defect-zero counts") {
    CHECK(shuffle_factorize(CT({2, 2}), 2) == 2);
    for (long k = 0; k <= 6; ++k) {
        CHECK(shuffle_factorize(CT({4}), k) == class_walk::count_S(CT({4}), k, 0));
        CHECK(shuffle_factorize(CT({1, 1, 1}), k) == (k == 0 ? 1 : 0));
    }
    for (int n = 2; n <= 6; ++n)
        for (const auto& lam : partitions_of(n))
            for (long k = 0; k <= n; ++k)
                CHECK(shuffle_factorize(lam, k) == class_walk::count_S(lam, k, 0));
}

TEST_CASE("factorization: the leading slice of a product is the product of leading slices") {
    for (int n = 2; n <= 5; ++n)
        for (const auto& lam : partitions_of(n)) {
            if (lam.length() < 2) continue;
            auto p = moment_expansion(lam, Group::U, 0);
            auto lhs = p.slice_poly(0);
            // convolution of the per-cycle slices
            std::vector<Rational> prod{Rational(1)};
            for (int m : lam.parts()) {
                auto cyc = moment_expansion(CT({m}), Group::U, 0).slice_poly(0);
                std::vector<Rational> next(prod.size() + cyc.size() - 1, Rational(0));
                for (std::size_t a = 0; a < prod.size(); ++a)
                    for (std::size_t b = 0; b < cyc.size(); ++b) next[a + b] += prod[a] * cyc[b];
                prod.swap(next);
            }
            for (std::size_t k = 0; k < lhs.size(); ++k) CHECK(lhs[k] == prod[k]);
            for (std::size_t k = lhs.size(); k < prod.size(); ++k) CHECK(prod[k] == 0);
        }
}

TEST_CASE("variance table vanishes at order zero") {
    for (auto parts : std::vector<std::vector<int>>{{1}, {2}, {2, 1}, {3}}) {
        auto tab = variance_expansion(CT(parts), 3);
        for (const auto& v : tab.v[0]) CHECK(v == 0);
    }
}

TEST_CASE("variance evaluation is consistent with two independent evaluations") {
    CycleType type = CT({2});
    auto tab = variance_expansion(type, 24);
    Rational N(2), t(1);
    double var = evaluate_variance(tab, N, t).value;
    auto single = moment_expansion(type, Group::U, 24);
    auto squared = moment_expansion(CT({2, 2}), Group::U, 24);
    double direct = evaluate_strict(squared, N, t, 1e-11) -
                    std::pow(evaluate_strict(single, N, t, 1e-11), 2);
    CHECK(var == doctest::Approx(direct).epsilon(1e-10));
    CHECK(evaluate_variance(tab, N, Rational(0)).value == doctest::Approx(0.0).epsilon(1e-14));
    // n = 2 closed forms: Var = e^{-2t}( (cosh - N sinh)(t/N)-squared forms )
    double tt = 1.0, NN = 2.0;
    double m2 = std::exp(-tt) * (std::cosh(tt / NN) - NN * std::sinh(tt / NN));
    double m22 = evaluate_strict(squared, N, t, 1e-11);
    CHECK(var == doctest::Approx(m22 - m2 * m2).epsilon(1e-10));
}

TEST_CASE("SU expansion differs from U by the exponential prefactor only") {
    CycleType type = CT({2, 1});
    auto pu = moment_expansion(type, Group::U, 20);
    auto psu = moment_expansion(type, Group::SU, 20);
    CHECK(pu.slices == psu.slices);  // identical raw path counts
    double t = 0.8, N = 3;
    double u = evaluate_strict(pu, Rational(3), rational_of(t), 1e-11);
    double su = evaluate_strict(psu, Rational(3), rational_of(t), 1e-11);
    CHECK(su == doctest::Approx(u * std::exp(9.0 * t / (2 * N * N))).epsilon(1e-12));
}

TEST_CASE("the leading slice of the long cycle matches the limit moments") {
    for (int n = 1; n <= 9; ++n) {
        auto p = moment_expansion(CycleType::single(n), Group::U, 0);
        auto slice = p.slice_poly(0);
        auto want = free_prob::limit_moment_poly(n);
        CHECK(slice.size() <= want.size() + 0u + n);  // window: degree n-1
        for (std::size_t k = 0; k < want.size(); ++k)
            CHECK((k < slice.size() ? slice[k] : Rational(0)) == want[k]);
    }
}
