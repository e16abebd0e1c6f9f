#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "hkmom/numeric.hpp"

namespace hkmom {

/// Dense matrix over an exact GMP scalar (Integer or Rational).
template <class Scalar>
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

    static ExactMatrix identity(int n) {
        ExactMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& operator()(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const Scalar& operator()(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

    bool operator==(const ExactMatrix&) const = default;

    ExactMatrix operator*(const ExactMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("ExactMatrix: shape mismatch");
        ExactMatrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Scalar& v = (*this)(i, k);
                if (v == 0) continue;
                for (int j = 0; j < o.cols_; ++j) r(i, j) += v * o(k, j);
            }
        return r;
    }

    ExactMatrix operator+(const ExactMatrix& o) const {
        ExactMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }

    ExactMatrix operator-(const ExactMatrix& o) const {
        ExactMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }

    ExactMatrix& operator+=(const ExactMatrix& o) {
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }

    ExactMatrix& operator-=(const ExactMatrix& o) {
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }

    ExactMatrix operator*(const Scalar& s) const {
        ExactMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
        return r;
    }

    bool is_zero() const {
        for (const auto& v : a_)
            if (v != 0) return false;
        return true;
    }

    /// Largest |entry|, as a double.
    double max_abs() const {
        Scalar best = 0;
        for (const auto& v : a_) {
            Scalar m = v < 0 ? Scalar(-v) : v;
            if (m > best) best = m;
        }
        return to_double(best);
    }

    Scalar trace() const {
        Scalar t = 0;
        for (int i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
        return t;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

using QMatrix = ExactMatrix<Rational>;
using ZMatrix = ExactMatrix<Integer>;

}  // namespace hkmom
