#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "hkmom/numeric.hpp"
#include "hkmom/permutation.hpp"

namespace hkmom {
namespace free_prob {

/// Trace word in independent limit variables: a sequence of letters, each a
/// variable id with exponent +1, plus one time per variable.
struct Word {
    std::vector<int> letters;
    std::map<int, double> times;

    std::size_t size() const { return letters.size(); }
    /// Parses "a(0.5) b(1.0) a(0.5)"; repeated names must repeat their time.
    static Word parse(const std::string& text);
};

/// phi(u_t^n): the large-N limit of E[Tr_N(B_{t/N}^n)].
double limit_moment(long n, double t);

/// Coefficients of the polynomial part of phi(u_t^n):
/// phi(u_t^n) = exp(-nt/2) * sum_k coeffs[k] t^k.
std::vector<Rational> limit_moment_poly(long n);

/// Free cumulant k_n(u_t).
double free_cumulant(long n, double t);

/// k_sigma(u_t): multiplicative over the cycles of sigma.
double free_cumulant(const Permutation& sigma, double t);

/// Same value through the geodesic-count form
/// exp(-nt/2) (-t)^{|sigma|} #Pi_{|sigma|}(id->sigma) / |sigma|!.
double free_cumulant_geodesic(const Permutation& sigma, double t);

/// Moment recovered by summing k_{sigma'} over sigma' <= (1...n) in NC(n).
double moment_from_cumulants(long n, double t);

/// One term of the leading-order transition map: the target permutation
/// sigma' <= sigma, the power of (-t), and the geodesic path count.  The
/// weight of the term is exp(-nt/2) (-t)^power count / power!.
struct LeadingTerm {
    Permutation target;
    long power = 0;
    Integer path_count;
};

std::vector<LeadingTerm> leading_order_map(const Permutation& sigma);

/// lim_N E[Tr_N(word)] for a word in independent heat-kernel variables.
double word_moment(const Word& w);

/// Mixed free cumulant k_{(1...n)}(a_{i_1},...,a_{i_n}) of the limit family,
/// extracted from word moments by the moment-cumulant recursion over NC(n).
double mixed_cumulant(const Word& w);

/// Residual of the S-transform inverse identity:
/// sum_{n>=1} m_{n,t} chi_t(z)^n - z with chi_t(z) = z e^{t(z+1/2)} / (z+1).
std::complex<double> chi_residual(double t, std::complex<double> z, int n_cut = 60);

}  // namespace free_prob
}  // namespace hkmom
