#include <doctest.h>

#include <cmath>

#include "hkmom/class_walk.hpp"
#include "hkmom/free_prob.hpp"
#include "hkmom/noncross.hpp"

using namespace hkmom;
using namespace hkmom::free_prob;

TEST_CASE("limit moments") {
    CHECK(limit_moment(1, 0.7) == doctest::Approx(std::exp(-0.35)).epsilon(1e-14));
    CHECK(limit_moment(2, 1.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(limit_moment(2, 0.5) == doctest::Approx(std::exp(-0.5) * 0.5).epsilon(1e-13));
    for (long n = 1; n <= 8; ++n) CHECK(limit_moment(n, 0.0) == 1.0);
}

TEST_CASE("limit moments stay in [-1,1] even for large alternating sums") {
    for (long n : {20L, 40L, 60L})
        for (double t : {0.5, 2.0, 3.5}) CHECK(std::abs(limit_moment(n, t)) <= 1.0 + 1e-12);
}

TEST_CASE("free cumulants") {
    CHECK(free_cumulant(1, 0.8) == doctest::Approx(std::exp(-0.4)).epsilon(1e-14));
    CHECK(free_cumulant(2, 0.8) == doctest::Approx(-0.8 * std::exp(-0.8)).epsilon(1e-14));
    CHECK(free_cumulant(3, 0.5) ==
          doctest::Approx(std::exp(-0.75) * 2.25 / 6.0).epsilon(1e-12));
}

TEST_CASE("cumulants through geodesic counts agree with the closed form") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& lam : partitions_of(n)) {
            Permutation sigma = Permutation::class_representative(lam);
            for (double t : {0.3, 1.0}) {
                double a = free_cumulant(sigma, t);
                double b = free_cumulant_geodesic(sigma, t);
                CHECK(a == doctest::Approx(b).epsilon(1e-11));
            }
        }
}

TEST_CASE("moments from cumulants") {
    double t = 0.8;
    double k1 = free_cumulant(1, t), k2 = free_cumulant(2, t);
    CHECK(moment_from_cumulants(2, t) == doctest::Approx(k2 + k1 * k1).epsilon(1e-14));
    CHECK(moment_from_cumulants(1, t) == doctest::Approx(k1).epsilon(1e-14));
    for (long n = 1; n <= 12; ++n)
        for (double tt : {0.1, 1.0, 3.0})
            CHECK(std::abs(moment_from_cumulants(n, tt) - limit_moment(n, tt)) < 1e-12);
}

TEST_CASE("moment-cumulant sum matches an explicit enumeration over NC(n)") {
    double t = 0.6;
    for (int n = 1; n <= 8; ++n) {
        double total = 0;
        for (const auto& p : noncross::enumerate_nc(n)) {
            double prod = 1;
            for (const auto& b : p.blocks()) prod *= free_cumulant(b.size(), t);
            total += prod;
        }
        CHECK(moment_from_cumulants(n, t) == doctest::Approx(total).epsilon(1e-12));
    }
}

TEST_CASE("leading order map") {
    auto id_terms = leading_order_map(Permutation::identity(3));
    CHECK(id_terms.size() == 1);
    CHECK(id_terms[0].power == 0);
    CHECK(id_terms[0].path_count == 1);

    auto t12 = leading_order_map(Permutation::parse("(1 2)"));
    REQUIRE(t12.size() == 2);
    for (const auto& term : t12) {
        if (term.target.is_identity()) {
            CHECK(term.power == 1);
            CHECK(term.path_count == 1);
        } else {
            CHECK(term.target == Permutation::parse("(1 2)"));
            CHECK(term.power == 0);
            CHECK(term.path_count == 1);
        }
    }
}

TEST_CASE("leading order map groups into the defect-zero counts") {
    for (int n = 2; n <= 5; ++n)
        for (const auto& lam : partitions_of(n)) {
            Permutation sigma = Permutation::class_representative(lam);
            auto terms = leading_order_map(sigma);
            std::vector<Integer> by_power(n, 0);
            for (const auto& term : terms) by_power[term.power] += term.path_count;
            for (long k = 0; k < n; ++k) CHECK(by_power[k] == class_walk::count_S(lam, k, 0));
        }
}

TEST_CASE("word moments reduce to limit moments for one variable") {
    Word w = Word::parse("a(0.9) a(0.9) a(0.9)");
    CHECK(word_moment(w) == doctest::Approx(limit_moment(3, 0.9)).epsilon(1e-13));
}

TEST_CASE("word moments of independent variables") {
    Word ab = Word::parse("a(0.4) b(1.1)");
    CHECK(word_moment(ab) == doctest::Approx(std::exp(-(0.4 + 1.1) / 2)).epsilon(1e-13));

    Word abab = Word::parse("a(0.4) b(1.1) a(0.4) b(1.1)");
    double pa = limit_moment(1, 0.4), pa2 = limit_moment(2, 0.4);
    double pb = limit_moment(1, 1.1), pb2 = limit_moment(2, 1.1);
    double want = pa2 * pb * pb + pa * pa * pb2 - pa * pa * pb * pb;
    CHECK(word_moment(abab) == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("word moments are invariant under cyclic rotation") {
    Word w = Word::parse("a(0.5) b(1.0) a(0.5) b(1.0) b(1.0) a(0.5)");
    double base = word_moment(w);
    for (std::size_t r = 1; r < w.size(); ++r) {
        Word rot = w;
        std::rotate(rot.letters.begin(), rot.letters.begin() + r, rot.letters.end());
        CHECK(word_moment(rot) == doctest::Approx(base).epsilon(1e-12));
    }
}

TEST_CASE("mixed cumulants of free variables vanish") {
    for (const char* text : {"a(0.5) b(1.0)", "a(0.5) a(0.5) b(1.0)", "a(0.5) b(1.0) a(0.5) b(1.0)",
                             "a(0.7) b(0.7) b(0.7) a(0.7) b(0.7)"}) {
        Word w = Word::parse(text);
        CHECK(std::abs(mixed_cumulant(w)) < 1e-10);
    }
    // pure cumulants do not vanish
    Word pure = Word::parse("a(0.5) a(0.5) a(0.5)");
    CHECK(mixed_cumulant(pure) == doctest::Approx(free_cumulant(3, 0.5)).epsilon(1e-12));
}

TEST_CASE("chi residual vanishes") {
    CHECK(std::abs(chi_residual(1.0, 0.0)) == 0.0);
    CHECK(std::abs(chi_residual(0.0, std::complex<double>(0.05, 0.0))) < 1e-10);
    CHECK(std::abs(chi_residual(1.0, std::complex<double>(0.035, 0.035))) < 1e-8);
    CHECK(std::abs(chi_residual(4.0, std::complex<double>(0.05, 0.0))) < 1e-8);
}

TEST_CASE("word budget errors") {
    Word big;
    for (int i = 0; i < 17; ++i) big.letters.push_back(i % 2);
    big.times[0] = 0.5;
    big.times[1] = 0.5;
    CHECK_THROWS_AS(word_moment(big), std::runtime_error);
    CHECK_THROWS_AS(Word::parse("a(0.5) a(0.6)"), std::invalid_argument);
}
