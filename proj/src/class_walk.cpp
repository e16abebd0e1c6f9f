#include "hkmom/class_walk.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace hkmom {
namespace class_walk {

ClassTransitionMatrix::ClassTransitionMatrix(int n) : n_(n), index_(partitions_of(n)) {
    const int m = num_classes();
    counts_.assign(m, std::vector<long>(m, 0));
    const auto taus = all_transpositions(n);
    for (int i = 0; i < m; ++i) {
        Permutation rep = Permutation::class_representative(index_[i]);
        for (const auto& tau : taus) {
            Partition target = compose(rep, tau).cycle_type();
            ++counts_[i][class_id(target)];
        }
    }
}

int ClassTransitionMatrix::class_id(const Partition& type) const {
    auto it = std::lower_bound(index_.begin(), index_.end(), type);
    if (it == index_.end() || !(*it == type))
        throw std::invalid_argument("ClassTransitionMatrix: unknown class");
    return static_cast<int>(it - index_.begin());
}

long ClassTransitionMatrix::count(const Partition& from, const Partition& to) const {
    return counts_[class_id(from)][class_id(to)];
}

const ClassTransitionMatrix& transition_counts(int n) {
    static std::map<int, ClassTransitionMatrix> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, ClassTransitionMatrix(n)).first;
    return it->second;
}

namespace {

// Row of A^k for the class-level walk, indexed by class id.
std::vector<Integer> class_walk_row(const ClassTransitionMatrix& tm, int start_id, long k) {
    const int m = tm.num_classes();
    std::vector<Integer> v(m, 0), w(m, 0);
    v[start_id] = 1;
    for (long step = 0; step < k; ++step) {
        std::fill(w.begin(), w.end(), Integer(0));
        for (int i = 0; i < m; ++i) {
            if (v[i] == 0) continue;
            for (int j = 0; j < m; ++j) {
                long c = tm.count(i, j);
                if (c) w[j] += v[i] * c;
            }
        }
        v.swap(w);
    }
    return v;
}

}  // namespace

Integer count_S(const CycleType& type, long k, long d) {
    if (k < 0 || d < 0) return 0;
    const int n = type.n();
    const long ell_end = type.length() + k - 2 * d;  // Lemma on defect vs terminal cycle count
    if (ell_end < 1 || ell_end > n) return 0;
    const auto& tm = transition_counts(n);
    auto row = class_walk_row(tm, tm.class_id(type), k);
    Integer total = 0;
    for (int j = 0; j < tm.num_classes(); ++j)
        if (tm.index()[j].length() == ell_end) total += row[j];
    return total;
}

PathCountTable path_count_table(const CycleType& type, long k_max) {
    const int n = type.n();
    const auto& tm = transition_counts(n);
    PathCountTable table;
    table.base = type;
    table.k_max = k_max;
    table.s.resize(k_max + 1);

    const int m = tm.num_classes();
    std::vector<Integer> v(m, 0), w(m, 0);
    v[tm.class_id(type)] = 1;
    for (long k = 0; k <= k_max; ++k) {
        table.s[k].assign(k + 1, Integer(0));
        for (int j = 0; j < m; ++j) {
            if (v[j] == 0) continue;
            long twice_d = k - (tm.index()[j].length() - type.length());
            if (twice_d % 2) throw std::logic_error("path_count_table: parity violated");
            table.s[k][twice_d / 2] += v[j];
        }
        if (k == k_max) break;
        std::fill(w.begin(), w.end(), Integer(0));
        for (int i = 0; i < m; ++i) {
            if (v[i] == 0) continue;
            for (int j = 0; j < m; ++j) {
                long c = tm.count(i, j);
                if (c) w[j] += v[i] * c;
            }
        }
        v.swap(w);
    }
    return table;
}

std::string PathCountTable::to_csv() const {
    std::ostringstream out;
    out << "k,d,S\n";
    for (long k = 0; k < static_cast<long>(s.size()); ++k)
        for (long d = 0; d < static_cast<long>(s[k].size()); ++d)
            if (s[k][d] != 0) out << k << ',' << d << ',' << s[k][d].get_str() << '\n';
    return out.str();
}

namespace {

void brute_force_dfs(Permutation& sigma, const std::vector<Permutation>& taus, long depth,
                     long defect, std::vector<Integer>& by_defect) {
    if (depth == 0) {
        by_defect[defect] += 1;
        return;
    }
    for (const auto& tau : taus) {
        int before = sigma.cycle_count();
        Permutation next = compose(sigma, tau);
        long step_up = next.cycle_count() < before ? 1 : 0;
        brute_force_dfs(next, taus, depth - 1, defect + step_up, by_defect);
    }
}

}  // namespace

std::vector<Integer> brute_force_S_all(const Permutation& sigma, long k, std::uint64_t budget) {
    const int n = sigma.n();
    const std::uint64_t b = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    std::uint64_t total = 1;
    for (long i = 0; i < k; ++i) {
        if (b != 0 && total > budget / b) throw std::runtime_error("brute_force_S: budget exceeded");
        total *= b;
    }
    std::vector<Integer> by_defect(k + 1, Integer(0));
    Permutation start = sigma;
    if (k == 0 || b > 0) brute_force_dfs(start, all_transpositions(n), k, 0, by_defect);
    return by_defect;
}

Integer brute_force_S(const Permutation& sigma, long k, long d, std::uint64_t budget) {
    if (d < 0 || d > k) return 0;
    return brute_force_S_all(sigma, k, budget)[d];
}

// ---------------------------------------------------------------------------
// Transfer operator: truncated exp(sign * t * W) with W the one-step walk
// weighted by N^{-2} on coagulating edges.  Everything is kept over a common
// integer denominator so no rational canonicalization happens in the loops.

namespace {

struct TransferPair {
    long K = 0;
    Integer denom;
    ZMatrix up, um;
};

long choose_truncation(const Rational& t, const Rational& N, int n, double eps) {
    Rational base = t * Rational(static_cast<long>(n) * (n - 1) / 2);
    Rational nsq = N * N;
    if (nsq < 1) base /= nsq;  // coagulation weight exceeds 1 for N < 1
    Rational eps_q = rational_of(eps);
    Rational term = 1;  // (tB)^k / k!
    for (long K = 0; K <= 400; ++K) {
        // term now equals (tB)^K / K!; bound the tail after K.
        if (base < Rational(K + 2)) {
            Rational tail = term * base / Rational(K + 1) /
                            (1 - base / Rational(K + 2));
            if (tail <= eps_q) return K;
        }
        term *= base / Rational(K + 1);
    }
    throw std::runtime_error("transfer_matrix: requested precision not reachable");
}

TransferPair build_transfer(int n, const Rational& t, const Rational& N, double eps) {
    if (t < 0) throw std::invalid_argument("transfer_matrix: t < 0");
    if (N <= 0) throw std::invalid_argument("transfer_matrix: N <= 0");
    const auto perms = all_permutations(n);
    const int m = static_cast<int>(perms.size());
    const auto taus = all_transpositions(n);

    const Integer p = N.get_num(), q = N.get_den();
    const Integer a = t.get_num(), b = t.get_den();
    const Integer p2 = p * p, scale = b * p2;

    // V = p^2 * (fragmentation edges) + q^2 * (coagulation edges)
    ZMatrix V(m, m);
    for (int i = 0; i < m; ++i) {
        int li = perms[i].cycle_count();
        for (const auto& tau : taus) {
            Permutation target = compose(perms[i], tau);
            int j = static_cast<int>(perm_rank(target));
            V(i, j) += target.cycle_count() > li ? p2 : q * q;
        }
    }

    TransferPair out;
    out.K = choose_truncation(t, N, n, eps);
    out.denom = ipow(scale, out.K) * factorial(out.K);
    out.up = ZMatrix(m, m);
    out.um = ZMatrix(m, m);

    ZMatrix power = ZMatrix::identity(m);
    Integer coeff = out.denom;  // c_k = a^k scale^{K-k} K!/k!, starting at k=0
    for (long k = 0;; ++k) {
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                const Integer& pv = power(i, j);
                if (pv == 0) continue;
                Integer term = coeff * pv;
                out.up(i, j) += term;
                if (k % 2 == 0)
                    out.um(i, j) += term;
                else
                    out.um(i, j) -= term;
            }
        if (k == out.K) break;
        power = power * V;
        coeff *= a;
        coeff /= scale * Integer(k + 1);  // exact: scale^{K-k} and K!/k! absorb both factors
    }
    return out;
}

}  // namespace

QMatrix transfer_matrix(int n, int sign, const Rational& t, const Rational& N, double eps) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("transfer_matrix: sign must be +-1");
    TransferPair pair = build_transfer(n, t, N, eps);
    const ZMatrix& u = sign == 1 ? pair.up : pair.um;
    QMatrix out(u.rows(), u.cols());
    for (int i = 0; i < u.rows(); ++i)
        for (int j = 0; j < u.cols(); ++j) {
            Rational v(u(i, j));
            v /= Rational(pair.denom);
            out(i, j) = v;
        }
    return out;
}

double transfer_inverse_check(int n, const Rational& t, const Rational& N, double eps) {
    TransferPair pair = build_transfer(n, t, N, eps);
    ZMatrix prod = pair.up * pair.um;
    Integer d2 = pair.denom * pair.denom;
    double worst = 0;
    for (int i = 0; i < prod.rows(); ++i)
        for (int j = 0; j < prod.cols(); ++j) {
            Integer diff = prod(i, j) - (i == j ? d2 : Integer(0));
            Rational rel(diff);
            rel /= Rational(d2);
            double dev = std::abs(to_double(rel));
            worst = std::max(worst, dev);
        }
    return worst;
}

}  // namespace class_walk
}  // namespace hkmom
