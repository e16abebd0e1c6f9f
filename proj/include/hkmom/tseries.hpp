#pragma once

#include <stdexcept>
#include <vector>

#include "hkmom/laurent.hpp"
#include "hkmom/numeric.hpp"

namespace hkmom {

/// Power series in t truncated at a fixed order, with Laurent-in-N
/// coefficients. Exact arithmetic throughout.
class TSeries {
public:
    TSeries() = default;
    explicit TSeries(int order) : c_(order + 1) {}

    static TSeries constant(int order, const LaurentPoly& v) {
        TSeries s(order);
        s.c_[0] = v;
        return s;
    }

    /// exp(a * t * N^npow), truncated.
    static TSeries exponential(int order, const Rational& a, int npow = 0) {
        TSeries s(order);
        Rational coeff = 1;
        for (int k = 0; k <= order; ++k) {
            s.c_[k] = LaurentPoly::monomial(coeff, k * npow);
            coeff *= a;
            coeff /= k + 1;
        }
        return s;
    }

    static TSeries cosh_of(int order, const Rational& a, int npow = 0) {
        TSeries p = exponential(order, a, npow), m = exponential(order, -a, npow);
        return (p + m) * ratio(1, 2);
    }

    static TSeries sinh_of(int order, const Rational& a, int npow = 0) {
        TSeries p = exponential(order, a, npow), m = exponential(order, -a, npow);
        return (p - m) * ratio(1, 2);
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const LaurentPoly& coeff(int k) const { return c_.at(k); }
    LaurentPoly& coeff(int k) { return c_.at(k); }

    bool operator==(const TSeries&) const = default;

    TSeries& operator+=(const TSeries& o) {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    TSeries& operator-=(const TSeries& o) {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
    friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }

    friend TSeries operator*(const TSeries& a, const TSeries& b) {
        a.check(b);
        TSeries r(a.order());
        for (int i = 0; i <= a.order(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; i + j <= a.order(); ++j) {
                if (b.c_[j].is_zero()) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    TSeries& operator*=(const Rational& s) {
        for (auto& v : c_) v *= s;
        return *this;
    }
    friend TSeries operator*(TSeries a, const Rational& s) { return a *= s; }

    TSeries& operator*=(const LaurentPoly& p) {
        for (auto& v : c_) v = v * p;
        return *this;
    }
    friend TSeries operator*(TSeries a, const LaurentPoly& p) { return a *= p; }

    TSeries pow(int e) const {
        TSeries r = constant(order(), LaurentPoly(Rational(1)));
        for (int i = 0; i < e; ++i) r = r * (*this);
        return r;
    }

    bool is_zero() const {
        for (const auto& v : c_)
            if (!v.is_zero()) return false;
        return true;
    }

private:
    void check(const TSeries& o) const {
        if (c_.size() != o.c_.size()) throw std::invalid_argument("TSeries: order mismatch");
    }
    std::vector<LaurentPoly> c_;
};

}  // namespace hkmom
