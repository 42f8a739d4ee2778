#include "repca/cayley_hamilton.hpp"

#include "repca/errors.hpp"

namespace repca {

ChPolynomial ch_coefficients(int n) {
    if (n < 1) throw ValidationError("degree must be >= 1");
    // Newton: k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} nu_i, e_0 = 1.
    std::vector<TracePolynomial> e(static_cast<std::size_t>(n) + 1);
    e[0] = TracePolynomial::constant(Rational(1));
    for (int k = 1; k <= n; ++k) {
        TracePolynomial s;
        Rational sign(1);
        for (int i = 1; i <= k; ++i) {
            s += sign * (e[k - i] * TracePolynomial::symbol(i));
            sign = -sign;
        }
        e[k] = Rational(1, k) * s;
    }
    ChPolynomial chi;
    chi.degree = n;
    chi.coefficients.resize(static_cast<std::size_t>(n) + 1);
    Rational sign(1);
    for (int k = 0; k <= n; ++k) {
        chi.coefficients[k] = sign * e[k];
        sign = -sign;
    }
    return chi;
}

Matrix ch_check(const Matrix& a, int n) {
    if (!a.is_square() || a.rows() != n)
        throw PreconditionError("dimension_mismatch",
                                "ch_check expects an n-by-n matrix for degree n");
    ChPolynomial chi = ch_coefficients(n);

    std::vector<Matrix> powers(static_cast<std::size_t>(n) + 1, Matrix::identity(n));
    for (int k = 1; k <= n; ++k) powers[k] = powers[k - 1] * a;

    std::map<int, Rational> nu;
    for (int k = 1; k <= n; ++k) nu[k] = powers[k].trace();

    Matrix r(n, n);
    for (int k = 0; k <= n; ++k)
        r += chi.coefficients[k].evaluate(nu) * powers[n - k];
    return r;
}

TracePolynomial trace_reduce(int m, int n) {
    if (n < 1) throw ValidationError("degree must be >= 1");
    if (m <= n)
        throw PreconditionError("not_reducible",
                                "nu_" + std::to_string(m) + " is not reducible at degree " +
                                    std::to_string(n));
    ChPolynomial chi = ch_coefficients(n);
    // tr(a^(m-n) chi(a)) = 0  =>  nu_m = -sum_{k=1..n} c_k nu_{m-k}; lower
    // symbols above n are replaced by their own reductions as we go up.
    std::map<int, TracePolynomial> red;
    for (int j = 1; j <= n; ++j) red[j] = TracePolynomial::symbol(j);
    for (int t = n + 1; t <= m; ++t) {
        TracePolynomial s;
        for (int k = 1; k <= n; ++k)
            s -= chi.coefficients[k] * red.at(t - k);
        red[t] = std::move(s);
    }
    return red.at(m);
}

Matrix standard_identity(int m, const std::vector<Matrix>& args) {
    if (m < 1) throw ValidationError("half-degree must be >= 1");
    const int k = 2 * m;
    if (static_cast<int>(args.size()) != k)
        throw PreconditionError("dimension_mismatch",
                                "expected " + std::to_string(k) + " matrices");
    const int n = args[0].rows();
    for (const Matrix& a : args)
        if (!a.is_square() || a.rows() != n)
            throw PreconditionError("dimension_mismatch",
                                    "arguments must be square matrices of equal size");

    // Heap's algorithm; each step is one transposition, so the sign flips.
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    std::vector<int> c(k, 0);
    Rational sign(1);
    Matrix acc(n, n);

    auto add_product = [&]() {
        Matrix p = args[perm[0]];
        for (int i = 1; i < k; ++i) p = p * args[perm[i]];
        acc += sign * p;
    };

    add_product();
    int i = 0;
    while (i < k) {
        if (c[i] < i) {
            if (i % 2 == 0)
                std::swap(perm[0], perm[i]);
            else
                std::swap(perm[c[i]], perm[i]);
            sign = -sign;
            add_product();
            ++c[i];
            i = 0;
        } else {
            c[i] = 0;
            ++i;
        }
    }
    return acc;
}

} // namespace repca
