#include "doctest.h"
#include "repca/errors.hpp"
#include "repca/ncpoly.hpp"
#include "support/oracles.hpp"

using namespace repca;
using testing::Rng;

namespace {

const std::vector<std::string> XY{"x", "y"};

Matrix unit_matrix(int i, int j) {
    Matrix m(2, 2);
    m.at(i, j) = Rational(1);
    return m;
}

NcPolynomial random_poly(Rng& rng, int terms, int max_len) {
    std::map<Word, Rational> t;
    for (int i = 0; i < terms; ++i) {
        Word w;
        const int len = rng.uniform(0, max_len);
        for (int j = 0; j < len; ++j) w.push_back(rng.uniform(0, 1));
        t[w] += rng.rational(5, 3);
    }
    return NcPolynomial::from_terms(XY, std::move(t));
}

} // namespace

TEST_CASE("commutator vanishes on commuting matrices") {
    auto x = NcPolynomial::generator(XY, 0);
    auto y = NcPolynomial::generator(XY, 1);
    auto p = x * y - y * x;
    std::map<std::string, Matrix> asg{{"x", Matrix::identity(2)}, {"y", Matrix::identity(2)}};
    CHECK(p.evaluate(asg, 2).is_zero());
}

TEST_CASE("nilpotent square") {
    auto x2 = NcPolynomial::generator(XY, 0) * NcPolynomial::generator(XY, 0);
    std::map<std::string, Matrix> asg{{"x", unit_matrix(0, 1)}, {"y", Matrix(2, 2)}};
    CHECK(x2.evaluate(asg, 2).is_zero());
}

TEST_CASE("xy + yx at matrix units gives the identity") {
    auto x = NcPolynomial::generator(XY, 0);
    auto y = NcPolynomial::generator(XY, 1);
    std::map<std::string, Matrix> asg{{"x", unit_matrix(0, 1)}, {"y", unit_matrix(1, 0)}};
    CHECK((x * y + y * x).evaluate(asg, 2) == Matrix::identity(2));
}

TEST_CASE("unit word evaluates to the identity") {
    std::map<std::string, Matrix> asg{{"x", unit_matrix(0, 1)}, {"y", unit_matrix(1, 0)}};
    CHECK(NcPolynomial::unit(XY).evaluate(asg, 2) == Matrix::identity(2));
}

TEST_CASE("evaluation is a ring homomorphism") {
    Rng rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        NcPolynomial p = random_poly(rng, 3, 3);
        NcPolynomial q = random_poly(rng, 3, 3);
        std::map<std::string, Matrix> asg{{"x", rng.int_matrix(2, 2, -4, 4)},
                                          {"y", rng.int_matrix(2, 2, -4, 4)}};
        CHECK((p * q).evaluate(asg, 2) == p.evaluate(asg, 2) * q.evaluate(asg, 2));
        CHECK((p + q).evaluate(asg, 2) == p.evaluate(asg, 2) + q.evaluate(asg, 2));
    }
}

TEST_CASE("evaluation errors") {
    auto x = NcPolynomial::generator(XY, 0);
    std::map<std::string, Matrix> missing{{"x", Matrix::identity(2)}};
    CHECK_THROWS_AS(x.evaluate(missing, 2), PreconditionError);
    std::map<std::string, Matrix> wrong{{"x", Matrix::identity(3)}, {"y", Matrix::identity(2)}};
    CHECK_THROWS_AS(x.evaluate(wrong, 2), PreconditionError);
}

TEST_CASE("zero coefficients never stick around") {
    auto x = NcPolynomial::generator(XY, 0);
    CHECK((x - x).is_zero());
    CHECK((Rational(0) * x).is_zero());
}
