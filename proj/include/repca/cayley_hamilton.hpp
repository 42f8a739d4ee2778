#ifndef REPCA_CAYLEY_HAMILTON_HPP
#define REPCA_CAYLEY_HAMILTON_HPP

#include <vector>

#include "repca/matrix.hpp"
#include "repca/tracepoly.hpp"

namespace repca {

// chi(t) = sum_k c_k t^(n-k) with c_0 = 1 and c_k = (-1)^k e_k written in the
// power-sum symbols nu_1..nu_k via Newton's identities.
struct ChPolynomial {
    int degree = 0;
    std::vector<TracePolynomial> coefficients; // size degree + 1, c_0 first
};

ChPolynomial ch_coefficients(int n);

// Substitutes nu_k -> tr(a^k) and t -> a; the caller asserts the zero matrix.
Matrix ch_check(const Matrix& a, int n);

// Normal form of nu_m as a polynomial in nu_1..nu_n, m > n, obtained by
// tracing a^(m-n) * chi(a) = 0 and substituting recursively.
TracePolynomial trace_reduce(int m, int n);

// S_2m(r_1,...,r_2m) = sum over all permutations of the signed product.
Matrix standard_identity(int m, const std::vector<Matrix>& args);

} // namespace repca

#endif
