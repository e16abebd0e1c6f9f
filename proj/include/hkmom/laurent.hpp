#pragma once

#include <map>
#include <string>

#include "hkmom/numeric.hpp"

namespace hkmom {

/// Laurent polynomial in one symbol N with exact rational coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Rational& constant) {  // NOLINT: implicit by design
        if (constant != 0) c_[0] = constant;
    }
    LaurentPoly(const Integer& constant) : LaurentPoly(Rational(constant)) {}
    LaurentPoly(long constant) : LaurentPoly(Rational(constant)) {}

    static LaurentPoly monomial(const Rational& coeff, int exp) {
        LaurentPoly p;
        if (coeff != 0) p.c_[exp] = coeff;
        return p;
    }

    const std::map<int, Rational>& terms() const { return c_; }
    Rational coeff(int exp) const {
        auto it = c_.find(exp);
        return it == c_.end() ? Rational(0) : it->second;
    }
    bool is_zero() const { return c_.empty(); }
    int min_exp() const { return c_.empty() ? 0 : c_.begin()->first; }
    int max_exp() const { return c_.empty() ? 0 : c_.rbegin()->first; }

    bool operator==(const LaurentPoly&) const = default;

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, v] : o.c_) add_term(e, v);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, v] : o.c_) add_term(e, -v);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, va] : a.c_)
            for (const auto& [eb, vb] : b.c_) r.add_term(ea + eb, va * vb);
        return r;
    }

    LaurentPoly& operator*=(const Rational& s) {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto& [e, v] : c_) v *= s;
        return *this;
    }
    friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }
    friend LaurentPoly operator*(const Rational& s, LaurentPoly a) { return a *= s; }

    LaurentPoly& operator/=(const Rational& s) {
        for (auto& [e, v] : c_) v /= s;
        return *this;
    }

    /// Multiply by N^shift.
    LaurentPoly shifted(int shift) const {
        LaurentPoly r;
        for (const auto& [e, v] : c_) r.c_[e + shift] = v;
        return r;
    }

    Rational eval(const Rational& x) const {
        Rational sum = 0;
        for (const auto& [e, v] : c_) sum += v * qpow(x, e);
        return sum;
    }

    std::string to_string(const std::string& symbol = "N") const;

    void add_term(int exp, const Rational& v) {
        if (v == 0) return;
        auto [it, inserted] = c_.try_emplace(exp, v);
        if (!inserted) {
            it->second += v;
            if (it->second == 0) c_.erase(it);
        }
    }

private:
    std::map<int, Rational> c_;
};

}  // namespace hkmom
