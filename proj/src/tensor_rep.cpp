#include "hkmom/tensor_rep.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

namespace hkmom {
namespace tensor_rep {

long tensor_dim(int n, int N, long budget) {
    long dim = 1;
    for (int i = 0; i < n; ++i) {
        dim *= N;
        if (dim > budget) throw std::runtime_error("tensor_rep: matrix budget exceeded");
    }
    return dim;
}

namespace {

// Multi-index helpers: slot 0 is the most significant digit.
void decode(long idx, int n, int N, std::vector<int>& digits) {
    for (int k = n - 1; k >= 0; --k) {
        digits[k] = static_cast<int>(idx % N);
        idx /= N;
    }
}

long with_digit(long idx, int slot, int n, int N, int value, const std::vector<long>& pows) {
    long stride = pows[n - 1 - slot];
    int old = static_cast<int>((idx / stride) % N);
    return idx + (static_cast<long>(value) - old) * stride;
}

std::vector<long> slot_strides(int n, int N) {
    std::vector<long> pows(n);
    long p = 1;
    for (int i = 0; i < n; ++i) {
        pows[i] = p;
        p *= N;
    }
    return pows;
}

// sum over slots of (Id x ... x X x ... x Id) for an exact N x N matrix X.
QMatrix slot_sum(const QMatrix& X, int n, int N, long dim) {
    QMatrix out(static_cast<int>(dim), static_cast<int>(dim));
    auto pows = slot_strides(n, N);
    for (long in = 0; in < dim; ++in) {
        for (int slot = 0; slot < n; ++slot) {
            long stride = pows[n - 1 - slot];
            int digit = static_cast<int>((in / stride) % N);
            for (int a = 0; a < N; ++a) {
                const Rational& v = X(a, digit);
                if (v == 0) continue;
                long out_idx = in + (static_cast<long>(a) - digit) * stride;
                out(static_cast<int>(out_idx), static_cast<int>(in)) += v;
            }
        }
    }
    return out;
}

QMatrix unit_matrix(int N, int i, int j) {
    QMatrix m(N, N);
    m(i, j) = 1;
    return m;
}

}  // namespace

QMatrix rho_perm(const Permutation& sigma, int N, long budget) {
    const int n = sigma.n();
    const long dim = tensor_dim(n, N, budget);
    const Permutation inv = sigma.inverse();
    QMatrix out(static_cast<int>(dim), static_cast<int>(dim));
    std::vector<int> in_digits(n), out_digits(n);
    auto pows = slot_strides(n, N);
    for (long in = 0; in < dim; ++in) {
        decode(in, n, N, in_digits);
        for (int j = 0; j < n; ++j) out_digits[j] = in_digits[inv(j)];
        long out_idx = 0;
        for (int j = 0; j < n; ++j) out_idx += static_cast<long>(out_digits[j]) * pows[n - 1 - j];
        out(static_cast<int>(out_idx), static_cast<int>(in)) = 1;
    }
    return out;
}

namespace {

// J for Sp(N): J(i, j+N) = delta_ij, J(i+N, j) = -delta_ij, acting on C^{2N}.
int symplectic_j(int a, int b, int N) {
    if (a < N && b >= N) return a == b - N ? 1 : 0;
    if (a >= N && b < N) return a - N == b ? -1 : 0;
    return 0;
}

}  // namespace

QMatrix rho_brauer(const BrauerDiagram& beta, int N, Flavor flavor, long budget) {
    const int n = beta.n();
    if (flavor == Flavor::Symplectic && beta.is_permutation())
        return rho_perm(beta.to_permutation(), 2 * N, budget);

    const int dimN = flavor == Flavor::Symplectic ? 2 * N : N;
    const long dim = tensor_dim(n, dimN, budget);
    QMatrix out(static_cast<int>(dim), static_cast<int>(dim));
    std::vector<int> combined(2 * n);  // values i_1..i_2n: top from input, bottom from output
    std::vector<int> in_digits(n), out_digits(n);
    for (long in = 0; in < dim; ++in) {
        decode(in, n, dimN, in_digits);
        for (long o = 0; o < dim; ++o) {
            decode(o, n, dimN, out_digits);
            for (int k = 0; k < n; ++k) {
                combined[k] = in_digits[k];
                combined[n + k] = out_digits[k];
            }
            long weight = 1;
            for (int k = 0; k < 2 * n && weight != 0; ++k) {
                int l = beta.partner(k);
                if (l < k) continue;
                // Symplectic J weights sit on horizontal chords only; through
                // strands keep the delta so that <kl> acts as the identity
                // away from slots k and l.
                bool horizontal = (l < n) || (k >= n);
                if (flavor == Flavor::Symplectic && horizontal)
                    weight *= symplectic_j(combined[k], combined[l], N);
                else
                    weight *= combined[k] == combined[l] ? 1 : 0;
            }
            if (weight) out(static_cast<int>(o), static_cast<int>(in)) = weight;
        }
    }
    return out;
}

QMatrix casimir_action(GroupKind group, int n, int N, long budget) {
    switch (group) {
        case GroupKind::U: {
            const long dim = tensor_dim(n, N, budget);
            QMatrix acc(static_cast<int>(dim), static_cast<int>(dim));
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) {
                    QMatrix eij = slot_sum(unit_matrix(N, i, j), n, N, dim);
                    QMatrix eji = slot_sum(unit_matrix(N, j, i), n, N, dim);
                    acc -= eij * eji;
                }
            return acc;
        }
        case GroupKind::SO: {
            const long dim = tensor_dim(n, N, budget);
            QMatrix acc(static_cast<int>(dim), static_cast<int>(dim));
            for (int i = 0; i < N; ++i)
                for (int j = i + 1; j < N; ++j) {
                    QMatrix a = unit_matrix(N, i, j);
                    a -= unit_matrix(N, j, i);
                    QMatrix s = slot_sum(a, n, N, dim);
                    acc += s * s;
                }
            return acc * ratio(1, 2);
        }
        case GroupKind::Sp: {
            const int M = 2 * N;
            const long dim = tensor_dim(n, M, budget);
            QMatrix acc(static_cast<int>(dim), static_cast<int>(dim));
            // A_ij = E_ij - E_{j+N,i+N}; pairs <A_ij, A_ji> = -2
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) {
                    QMatrix aij = unit_matrix(M, i, j);
                    aij -= unit_matrix(M, j + N, i + N);
                    QMatrix aji = unit_matrix(M, j, i);
                    aji -= unit_matrix(M, i + N, j + N);
                    acc -= slot_sum(aij, n, M, dim) * slot_sum(aji, n, M, dim) * ratio(1, 2);
                }
            // B_ij = E_{i,j+N} + E_{j,i+N}, C_ij = E_{i+N,j} + E_{j+N,i}; <B,C> = -2
            for (int i = 0; i < N; ++i)
                for (int j = i + 1; j < N; ++j) {
                    QMatrix b = unit_matrix(M, i, j + N);
                    b += unit_matrix(M, j, i + N);
                    QMatrix c = unit_matrix(M, i + N, j);
                    c += unit_matrix(M, j + N, i);
                    QMatrix sb = slot_sum(b, n, M, dim), sc = slot_sum(c, n, M, dim);
                    acc -= (sb * sc + sc * sb) * ratio(1, 2);
                }
            // D_i = E_{i,i+N}, D_{i+N} = E_{i+N,i}; <D_i, D_{i+N}> = -1
            for (int i = 0; i < N; ++i) {
                QMatrix d1 = slot_sum(unit_matrix(M, i, i + N), n, M, dim);
                QMatrix d2 = slot_sum(unit_matrix(M, i + N, i), n, M, dim);
                acc -= d1 * d2 + d2 * d1;
            }
            return acc;
        }
    }
    throw std::logic_error("casimir_action: unknown group");
}

QMatrix casimir_action_su(int n, int N, long budget) {
    const long dim = tensor_dim(n, N, budget);
    QMatrix acc(static_cast<int>(dim), static_cast<int>(dim));
    // Orthonormal basis of su(N) for -Tr(XY).  Each element is c*M with M an
    // integer matrix and c^2 rational, so X (x) X contributes sign * c^2 * S(M)^2
    // with sign = -1 when X = i c M.
    for (int j = 0; j < N; ++j)
        for (int k = j + 1; k < N; ++k) {
            QMatrix real_part = unit_matrix(N, j, k);
            real_part -= unit_matrix(N, k, j);
            QMatrix s = slot_sum(real_part, n, N, dim);
            acc += s * s * ratio(1, 2);

            QMatrix imag_part = unit_matrix(N, j, k);
            imag_part += unit_matrix(N, k, j);
            s = slot_sum(imag_part, n, N, dim);
            acc -= s * s * ratio(1, 2);
        }
    // Traceless diagonals: i diag(1,...,1,-j,0,...) / sqrt(j(j+1)), j = 1..N-1.
    for (int j = 1; j < N; ++j) {
        QMatrix d(N, N);
        for (int i = 0; i < j; ++i) d(i, i) = 1;
        d(j, j) = -j;
        QMatrix s = slot_sum(d, n, N, dim);
        acc -= s * s * ratio(1, static_cast<long>(j) * (j + 1));
    }
    return acc;
}

namespace {

QMatrix transposition_sum(int n, int N, long dim) {
    QMatrix acc(static_cast<int>(dim), static_cast<int>(dim));
    for (const auto& tau : all_transpositions(n)) acc += rho_perm(tau, N);
    return acc;
}

QMatrix hook_sum(int n, int N, Flavor flavor, long dim) {
    QMatrix acc(static_cast<int>(dim), static_cast<int>(dim));
    for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l)
            acc += rho_brauer(BrauerDiagram::hook(n, k, l), N, flavor);
    return acc;
}

}  // namespace

CasimirReport casimir_identity_check(GroupKind group, int n, int N, long budget) {
    CasimirReport report;
    const int dimN = group == GroupKind::Sp ? 2 * N : N;
    const long dim = tensor_dim(n, dimN, budget);
    const Rational edges(static_cast<long>(n) * (n - 1) / 2);

    // rho(Delta_{S_n} x 1) = -binom(n,2) Id + sum of transpositions
    QMatrix delta_sn = transposition_sum(n, dimN, dim);
    delta_sn -= QMatrix::identity(static_cast<int>(dim)) * edges;

    QMatrix lhs(static_cast<int>(dim), static_cast<int>(dim));
    QMatrix rhs(static_cast<int>(dim), static_cast<int>(dim));
    switch (group) {
        case GroupKind::U:
            lhs = delta_sn + casimir_action(GroupKind::U, n, N, budget) * ratio(1, 2);
            rhs = QMatrix::identity(static_cast<int>(dim)) *
                  ratio(-(static_cast<long>(N) * n + static_cast<long>(n) * (n - 1)), 2);
            break;
        case GroupKind::SO: {
            lhs = delta_sn + casimir_action(GroupKind::SO, n, N, budget);
            QMatrix delta_bn = hook_sum(n, N, Flavor::Orthogonal, dim);
            delta_bn -= QMatrix::identity(static_cast<int>(dim)) * edges;
            rhs = delta_bn;
            rhs += QMatrix::identity(static_cast<int>(dim)) *
                   ratio(-static_cast<long>(N - 1) * n, 2);
            break;
        }
        case GroupKind::Sp: {
            // The identity that holds with the -Tr(XY) Gram data of the
            // A/B/C/D basis carries the Casimir with coefficient 1 and the
            // scalar -(2N+1)n/2 (exact on the whole test grid; the doubled
            // variant fails for every n >= 2).
            lhs = delta_sn + casimir_action(GroupKind::Sp, n, N, budget);
            QMatrix delta_bn = hook_sum(n, N, Flavor::Symplectic, dim);
            delta_bn -= QMatrix::identity(static_cast<int>(dim)) * edges;
            rhs = delta_bn;
            rhs += QMatrix::identity(static_cast<int>(dim)) *
                   ratio(-(2 * static_cast<long>(N) + 1) * n, 2);
            break;
        }
    }
    QMatrix diff = lhs - rhs;
    report.max_deviation = diff.max_abs();
    report.ok = diff.is_zero();
    if (!report.ok) {
        for (int i = 0; i < diff.rows() && report.detail.empty(); ++i)
            for (int j = 0; j < diff.cols(); ++j)
                if (diff(i, j) != 0) {
                    report.detail = "first offending entry (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") = " + diff(i, j).get_str();
                    break;
                }
    }
    return report;
}

bool su_shift_check(int n, int N, long budget) {
    const long dim = tensor_dim(n, N, budget);
    QMatrix lhs = casimir_action_su(n, N, budget);
    QMatrix rhs = casimir_action(GroupKind::U, n, N, budget);
    rhs += QMatrix::identity(static_cast<int>(dim)) *
           ratio(static_cast<long>(n) * n, N);
    return lhs == rhs;
}

Eigen::MatrixXcd random_unitary(int N, std::uint64_t seed) {
    std::mt19937_64 rng(mix64(seed));
    std::normal_distribution<double> g;
    Eigen::MatrixXcd z(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) z(i, j) = std::complex<double>(g(rng), g(rng));
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < N; ++j) {
        std::complex<double> d = r(j, j);
        q.col(j) *= d / std::abs(d);
    }
    return q;
}

namespace {

Eigen::MatrixXcd to_complex(const QMatrix& m) {
    Eigen::MatrixXcd out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = to_double(m(i, j));
    return out;
}

Eigen::MatrixXcd kron_power(const Eigen::MatrixXcd& u, int n) {
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(1, 1);
    for (int i = 0; i < n; ++i) {
        Eigen::MatrixXcd next(acc.rows() * u.rows(), acc.cols() * u.cols());
        for (int a = 0; a < acc.rows(); ++a)
            for (int b = 0; b < acc.cols(); ++b) next.block(a * u.rows(), b * u.cols(), u.rows(), u.cols()) = acc(a, b) * u;
        acc.swap(next);
    }
    return acc;
}

double power_sum_trace(const Permutation& sigma, const Eigen::MatrixXcd& u,
                       std::complex<double>* out) {
    std::complex<double> prod = 1;
    const CycleType type = sigma.cycle_type();
    for (int m : type.parts()) {
        Eigen::MatrixXcd p = u;
        for (int i = 1; i < m; ++i) p = (p * u).eval();
        prod *= p.trace();
    }
    *out = prod;
    return std::abs(prod);
}

}  // namespace

double laplacian_action_check(const Permutation& sigma, int N, int samples, std::uint64_t seed,
                              long budget) {
    const int n = sigma.n();
    tensor_dim(n, N, budget);
    Eigen::MatrixXcd p_sigma = to_complex(rho_perm(sigma, N, budget));
    Eigen::MatrixXcd half_delta = to_complex(casimir_action(GroupKind::U, n, N, budget)) * 0.5;
    const auto taus = all_transpositions(n);
    double worst = 0;
    for (int s = 0; s < samples; ++s) {
        Eigen::MatrixXcd u = random_unitary(N, substream_seed(seed, s));
        Eigen::MatrixXcd un = kron_power(u, n);
        std::complex<double> lhs = (un * p_sigma * half_delta).trace();
        std::complex<double> p_val;
        power_sum_trace(sigma, u, &p_val);
        std::complex<double> rhs = -0.5 * N * n * p_val;
        for (const auto& tau : taus) {
            std::complex<double> v;
            power_sum_trace(compose(sigma, tau), u, &v);
            rhs -= v;
        }
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

bool laplacian_identity_at_id(const Permutation& sigma, int N, long budget) {
    const int n = sigma.n();
    QMatrix lhs_mat = rho_perm(sigma, N, budget) * casimir_action(GroupKind::U, n, N, budget);
    Rational lhs = lhs_mat.trace() / 2;
    Rational rhs = ratio(-static_cast<long>(N) * n, 2) *
                   qpow(Rational(N), sigma.cycle_count());
    for (const auto& tau : all_transpositions(n))
        rhs -= qpow(Rational(N), compose(sigma, tau).cycle_count());
    return lhs == rhs;
}

}  // namespace tensor_rep
}  // namespace hkmom
