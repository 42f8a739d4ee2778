#include "doctest.h"
#include "repca/cayley_hamilton.hpp"
#include "repca/errors.hpp"
#include "support/oracles.hpp"

using namespace repca;
using testing::Rng;

namespace {

std::map<int, Rational> power_sums_of(const std::vector<Rational>& roots, int up_to) {
    std::map<int, Rational> nu;
    for (int k = 1; k <= up_to; ++k) nu[k] = testing::power_sum(roots, k);
    return nu;
}

} // namespace

TEST_CASE("degree 1: t - nu_1") {
    ChPolynomial chi = ch_coefficients(1);
    REQUIRE(chi.coefficients.size() == 2);
    CHECK(chi.coefficients[0] == TracePolynomial::constant(Rational(1)));
    CHECK(chi.coefficients[1] == -TracePolynomial::symbol(1));
}

TEST_CASE("degree 2 matches the eigenvalue expansion") {
    ChPolynomial chi = ch_coefficients(2);
    // t^2 - nu_1 t + (nu_1^2 - nu_2)/2
    auto nu1 = TracePolynomial::symbol(1);
    CHECK(chi.coefficients[1] == -nu1);
    CHECK(chi.coefficients[2] == Rational(1, 2) * (nu1 * nu1 - TracePolynomial::symbol(2)));
}

TEST_CASE("coefficients reproduce prod(t - root) for random rational roots") {
    Rng rng(51);
    for (int n = 1; n <= 5; ++n) {
        ChPolynomial chi = ch_coefficients(n);
        REQUIRE(chi.coefficients.size() == static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k)
            CHECK(chi.coefficients[k].max_symbol() <= k); // c_k uses nu_1..nu_k only
        for (int trial = 0; trial < 12; ++trial) {
            std::vector<Rational> roots;
            for (int i = 0; i < n; ++i) roots.push_back(rng.rational(6, 4));
            auto expanded = testing::poly_from_roots(roots);
            auto nu = power_sums_of(roots, n);
            for (int k = 0; k <= n; ++k)
                CHECK(chi.coefficients[k].evaluate(nu) == expanded[k]);
        }
    }
}

TEST_CASE("constant term at degree 3 is -e_3") {
    ChPolynomial chi = ch_coefficients(3);
    std::vector<Rational> roots{Rational(1), Rational(2), Rational(3)};
    auto nu = power_sums_of(roots, 3);
    CHECK(chi.coefficients[3].evaluate(nu) == Rational(-6)); // -1*2*3
}

TEST_CASE("ch_check returns the exact zero matrix") {
    Matrix nil(2, 2);
    nil.at(0, 1) = Rational(1);
    CHECK(ch_check(nil, 2).is_zero());
    for (int n = 1; n <= 4; ++n) CHECK(ch_check(Matrix::identity(n), n).is_zero());
    Rng rng(52);
    Matrix a = rng.int_matrix(3, 3, -9, 9);
    CHECK(ch_check(a, 3).is_zero());
    CHECK_THROWS_AS(ch_check(a, 2), PreconditionError);
}

TEST_CASE("ch_check vanishes on random rational matrices of every degree") {
    Rng rng(56);
    for (int n = 1; n <= 5; ++n)
        for (int trial = 0; trial < 100; ++trial)
            CHECK(ch_check(rng.rational_matrix(n, n, 5, 4), n).is_zero());
}

TEST_CASE("trace reduction at degree 1 squares the trace") {
    CHECK(trace_reduce(2, 1) == TracePolynomial::symbol(1) * TracePolynomial::symbol(1));
}

TEST_CASE("trace reduction evaluates like tr(a^m)") {
    Rng rng(53);
    for (int n = 1; n <= 4; ++n) {
        for (int m = n + 1; m <= 2 * n; ++m) {
            TracePolynomial red = trace_reduce(m, n);
            CHECK(red.max_symbol() <= n);
            for (int trial = 0; trial < 15; ++trial) {
                Matrix a = rng.int_matrix(n, n, -5, 5);
                std::map<int, Rational> nu;
                for (int k = 1; k <= n; ++k) nu[k] = a.pow(k).trace();
                CHECK(red.evaluate(nu) == a.pow(m).trace());
            }
        }
    }
    CHECK_THROWS_AS(trace_reduce(2, 2), PreconditionError);
}

TEST_CASE("S_2 is the commutator") {
    Matrix e12(2, 2), e21(2, 2);
    e12.at(0, 1) = Rational(1);
    e21.at(1, 0) = Rational(1);
    Matrix r = standard_identity(1, {e12, e21});
    Matrix expected(2, 2);
    expected.at(0, 0) = Rational(1);
    expected.at(1, 1) = Rational(-1);
    CHECK(r == expected);

    CHECK(standard_identity(1, {Matrix::identity(2), Matrix::identity(2)}).is_zero());
}

TEST_CASE("S_4 vanishes on 2x2 matrices and matches the permutation oracle") {
    Rng rng(54);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Matrix> args;
        for (int i = 0; i < 4; ++i) args.push_back(rng.int_matrix(2, 2, -4, 4));
        Matrix r = standard_identity(2, args);
        CHECK(r == testing::oracle_standard_identity(args));
        CHECK(r.is_zero());
    }
}

TEST_CASE("S_2n-2 does not vanish identically") {
    Rng rng(55);
    bool found = false;
    for (int trial = 0; trial < 100 && !found; ++trial) {
        std::vector<Matrix> args;
        for (int i = 0; i < 2; ++i) args.push_back(rng.int_matrix(2, 2, -4, 4));
        found = !standard_identity(1, args).is_zero();
    }
    CHECK(found);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(ch_coefficients(0), ValidationError);
    CHECK_THROWS_AS(standard_identity(1, {Matrix::identity(2)}), PreconditionError);
    CHECK_THROWS_AS(standard_identity(1, {Matrix::identity(2), Matrix::identity(3)}),
                    PreconditionError);
}
