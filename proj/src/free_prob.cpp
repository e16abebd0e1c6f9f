#include "hkmom/free_prob.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hkmom/class_walk.hpp"
#include "hkmom/noncross.hpp"

namespace hkmom {
namespace free_prob {

Word Word::parse(const std::string& text) {
    Word w;
    std::map<std::string, int> ids;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        auto open = tok.find('(');
        auto close = tok.find(')');
        if (open == std::string::npos || close == std::string::npos || close < open)
            throw std::invalid_argument("Word::parse: expected name(time)");
        std::string name = tok.substr(0, open);
        double t = std::stod(tok.substr(open + 1, close - open - 1));
        if (name.empty()) throw std::invalid_argument("Word::parse: empty variable name");
        auto [it, inserted] = ids.try_emplace(name, static_cast<int>(ids.size()));
        if (!inserted && w.times.at(it->second) != t)
            throw std::invalid_argument("Word::parse: variable reused with a different time");
        if (inserted) w.times[it->second] = t;
        w.letters.push_back(it->second);
    }
    return w;
}

std::vector<Rational> limit_moment_poly(long n) {
    if (n < 1) throw std::invalid_argument("limit_moment_poly: n < 1");
    std::vector<Rational> coeffs(n, Rational(0));
    for (long k = 0; k <= n - 1; ++k) {
        // binom(n,k+1) n^{k-1} / k!, with alternating sign
        Rational c = ratio(binomial(n, k + 1) * ipow(Integer(n), k), Integer(n) * factorial(k));
        coeffs[k] = (k % 2) ? -c : c;
    }
    return coeffs;
}

namespace {

double eval_poly_guarded(const std::vector<Rational>& coeffs, double t) {
    // Kahan summation; falls back to exact rational evaluation when the
    // alternating sum cancels catastrophically.
    double sum = 0, comp = 0, mag = 0;
    double tpow = 1;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        double term = to_double(coeffs[k]) * tpow;
        mag += std::abs(term);
        double y = term - comp;
        double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
        tpow *= t;
    }
    if (mag > 1e6 * std::abs(sum)) {
        Rational tq = rational_of(t), acc = 0, tp = 1;
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            acc += coeffs[k] * tp;
            tp *= tq;
        }
        return to_double(acc);
    }
    return sum;
}

}  // namespace

double limit_moment(long n, double t) {
    if (t < 0) throw std::invalid_argument("limit_moment: t < 0");
    return std::exp(-0.5 * n * t) * eval_poly_guarded(limit_moment_poly(n), t);
}

double free_cumulant(long n, double t) {
    // exp(-nt/2) (-nt)^{n-1} / (n (n-1)!)
    double log_mag = (n - 1) * std::log(std::max(n * t, 1e-300)) - std::lgamma(n) - std::log(n);
    double sign = (n - 1) % 2 ? -1.0 : 1.0;
    if (t == 0) return n == 1 ? 1.0 : 0.0;
    return sign * std::exp(-0.5 * n * t + log_mag);
}

double free_cumulant(const Permutation& sigma, double t) {
    const CycleType type = sigma.cycle_type();
    double prod = 1;
    for (int m : type.parts()) prod *= free_cumulant(m, t);
    return prod;
}

double free_cumulant_geodesic(const Permutation& sigma, double t) {
    const long n = sigma.n();
    const long d = sigma.norm();
    Integer paths = class_walk::count_paths_between(Permutation::identity(static_cast<int>(n)),
                                                    sigma, d);
    double coeff = to_double(ratio(paths, factorial(d)));
    return std::exp(-0.5 * n * t) * std::pow(-t, static_cast<double>(d)) * coeff;
}

double moment_from_cumulants(long n, double t) {
    if (n > 14) throw std::invalid_argument("moment_from_cumulants: n too large");
    // Group NC(n) by block-size type; the summand only depends on the type.
    double total = 0;
    for (const auto& lam : partitions_of(static_cast<int>(n))) {
        std::vector<int> type(n, 0);
        for (int part : lam.parts()) ++type[part - 1];
        double prod = to_double(noncross::count_by_type(static_cast<int>(n), type));
        for (int part : lam.parts()) prod *= free_cumulant(part, t);
        total += prod;
    }
    return total;
}

std::vector<LeadingTerm> leading_order_map(const Permutation& sigma) {
    const int n = sigma.n();
    std::vector<LeadingTerm> out;
    for (const auto& target : all_permutations(n)) {
        if (!leq_abs(target, sigma)) continue;
        LeadingTerm term;
        term.target = target;
        term.power = compose(target.inverse(), sigma).norm();
        term.path_count = class_walk::count_paths_between(sigma, target, term.power);
        out.push_back(std::move(term));
    }
    return out;
}

namespace {

double word_moment_rec(const std::vector<int>& letters, const std::map<int, double>& times);

// phi over one cycle of the complement: concatenate the segments along the
// cycle and recurse.
double segment_cycle_moment(const std::vector<std::vector<int>>& segments,
                            const std::vector<int>& cycle,
                            const std::map<int, double>& times) {
    std::vector<int> cat;
    for (int j : cycle) cat.insert(cat.end(), segments[j].begin(), segments[j].end());
    return word_moment_rec(cat, times);
}

double word_moment_rec(const std::vector<int>& letters, const std::map<int, double>& times) {
    if (letters.empty()) return 1.0;
    // count occurrences per variable
    std::map<int, int> occ;
    for (int v : letters) ++occ[v];
    if (occ.size() == 1) return limit_moment(letters.size(), times.at(letters[0]));

    // pick the variable with the fewest occurrences, then rotate the word so
    // it ends with that variable: w = W_1 v W_2 v ... W_r v
    int var = occ.begin()->first;
    for (const auto& [v, c] : occ)
        if (c < occ.at(var)) var = v;
    const int r = occ.at(var);
    const int len = static_cast<int>(letters.size());
    int last = -1;
    for (int i = 0; i < len; ++i)
        if (letters[i] == var) last = i;
    std::vector<int> rot(len);
    for (int i = 0; i < len; ++i) rot[i] = letters[(last + 1 + i) % len];

    std::vector<std::vector<int>> segments(r);
    int seg = 0;
    for (int i = 0; i < len; ++i) {
        if (rot[i] == var)
            ++seg;
        else
            segments[seg].push_back(rot[i]);
    }

    const double tv = times.at(var);
    double total = 0;
    for (const auto& p : noncross::enumerate_nc(r)) {
        double kfac = 1;
        for (const auto& block : p.blocks()) kfac *= free_cumulant(block.size(), tv);
        if (kfac == 0) continue;
        Permutation complement = compose(
            noncross::nc_to_perm(p).inverse(),
            Permutation::class_representative(CycleType::single(r)));
        double mfac = 1;
        for (const auto& cycle : complement.cycles())
            mfac *= segment_cycle_moment(segments, cycle, times);
        total += kfac * mfac;
    }
    return total;
}

}  // namespace

double word_moment(const Word& w) {
    if (w.size() > 16) throw std::runtime_error("word_moment: word length budget exceeded");
    for (int v : w.letters)
        if (!w.times.count(v)) throw std::invalid_argument("word_moment: missing time");
    return word_moment_rec(w.letters, w.times);
}

namespace {

double mixed_cumulant_rec(const std::vector<int>& letters, const std::map<int, double>& times) {
    const int n = static_cast<int>(letters.size());
    if (n == 1) return limit_moment(1, times.at(letters[0]));
    double moment = word_moment_rec(letters, times);
    double lower = 0;
    for (const auto& p : noncross::enumerate_nc(n)) {
        if (p.num_blocks() == 1) continue;  // the full block is the unknown
        double prod = 1;
        for (const auto& block : p.blocks()) {
            std::vector<int> sub;
            for (int idx : block) sub.push_back(letters[idx]);
            prod *= mixed_cumulant_rec(sub, times);
            if (prod == 0) break;
        }
        lower += prod;
    }
    return moment - lower;
}

}  // namespace

double mixed_cumulant(const Word& w) {
    if (w.size() < 1) throw std::invalid_argument("mixed_cumulant: empty word");
    if (w.size() > 8) throw std::runtime_error("mixed_cumulant: word length budget exceeded");
    return mixed_cumulant_rec(w.letters, w.times);
}

std::complex<double> chi_residual(double t, std::complex<double> z, int n_cut) {
    if (t < 0) throw std::invalid_argument("chi_residual: t < 0");
    std::complex<double> chi = z / (z + 1.0) * std::exp(t * (z + 0.5));
    double q = std::abs(chi);
    if (q >= 1.0) throw std::runtime_error("chi_residual: series diverges at this z");
    double tail = std::pow(q, n_cut + 1) / (1.0 - q);  // |m_n| <= 1
    if (tail > 1e-12) throw std::runtime_error("chi_residual: series truncation insufficient");
    std::complex<double> sum = 0, pw = 1;
    for (int n = 1; n <= n_cut; ++n) {
        pw *= chi;
        sum += limit_moment(n, t) * pw;
    }
    return sum - z;
}

}  // namespace free_prob
}  // namespace hkmom
