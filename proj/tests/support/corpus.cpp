#include "support/corpus.hpp"

namespace repca::testing {

Quiver loop_quiver() { return Quiver(1, {{"x", 0, 0}}); }

Quiver two_cycle() { return Quiver(2, {{"a", 0, 1}, {"b", 1, 0}}); }

Quiver a2() { return Quiver(2, {{"a", 0, 1}}); }

Quiver a3() { return Quiver(3, {{"a", 0, 1}, {"b", 1, 2}}); }

Quiver kronecker2() { return Quiver(2, {{"a", 0, 1}, {"b", 0, 1}}); }

Quiver star3() { return Quiver(4, {{"a", 0, 1}, {"b", 0, 2}, {"c", 0, 3}}); }

Quiver acyclic4() {
    return Quiver(4, {{"a", 0, 1}, {"b", 0, 1}, {"c", 1, 2}, {"d", 2, 3}, {"e", 0, 3}});
}

Quiver cyclic3() { return Quiver(3, {{"a", 0, 1}, {"b", 1, 2}, {"c", 2, 0}}); }

Presentation fixture_b_presentation() {
    std::vector<std::string> gens{"x", "y"};
    auto x = NcPolynomial::generator(gens, 0);
    auto y = NcPolynomial::generator(gens, 1);
    return Presentation(gens, {x * x, y * y, x * y + y * x});
}

FinDimAlgebra fixture_b_algebra() {
    // basis 1, x, y, xy with x^2 = y^2 = 0 and yx = -xy
    auto coords = [](int i) {
        Vec v(4, Rational());
        if (i >= 0) v[i] = Rational(1);
        return v;
    };
    Vec zero = coords(-1);
    Vec neg_xy(4, Rational());
    neg_xy[3] = Rational(-1);

    std::vector<std::vector<Vec>> mul(4, std::vector<Vec>(4, zero));
    mul[0][0] = coords(0);
    mul[0][1] = coords(1);
    mul[0][2] = coords(2);
    mul[0][3] = coords(3);
    mul[1][0] = coords(1);
    mul[2][0] = coords(2);
    mul[3][0] = coords(3);
    mul[1][2] = coords(3); // x * y = xy
    mul[2][1] = neg_xy;    // y * x = -xy
    return FinDimAlgebra({"1", "x", "y", "xy"}, coords(0), mul);
}

FinDimAlgebra matrix_algebra2() {
    // basis E11, E12, E21, E22; E_ab E_cd = [b == c] E_ad
    auto idx = [](int a, int b) { return 2 * a + b; };
    std::vector<std::vector<Vec>> mul(4, std::vector<Vec>(4, Vec(4, Rational())));
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d)
                    if (b == c) mul[idx(a, b)][idx(c, d)][idx(a, d)] = Rational(1);
    Vec unit(4, Rational());
    unit[idx(0, 0)] = Rational(1);
    unit[idx(1, 1)] = Rational(1);
    return FinDimAlgebra({"E11", "E12", "E21", "E22"}, unit, mul);
}

FinDimAlgebra diagonal_algebra(int d) {
    std::vector<std::vector<Vec>> mul(d, std::vector<Vec>(d, Vec(d, Rational())));
    for (int i = 0; i < d; ++i) mul[i][i][i] = Rational(1);
    Vec unit(d, Rational(1));
    std::vector<std::string> names;
    for (int i = 0; i < d; ++i) names.push_back("e" + std::to_string(i));
    return FinDimAlgebra(std::move(names), std::move(unit), std::move(mul));
}

FinDimAlgebra truncated_poly_algebra() {
    // basis 1, t, t^2 with t^3 = 0
    std::vector<std::vector<Vec>> mul(3, std::vector<Vec>(3, Vec(3, Rational())));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i + j < 3) mul[i][j][i + j] = Rational(1);
    Vec unit(3, Rational());
    unit[0] = Rational(1);
    return FinDimAlgebra({"1", "t", "t2"}, std::move(unit), std::move(mul));
}

Presentation commuting_pair_presentation() {
    std::vector<std::string> gens{"x", "y"};
    auto x = NcPolynomial::generator(gens, 0);
    auto y = NcPolynomial::generator(gens, 1);
    return Presentation(gens, {x * y - y * x});
}

RepPoint simple_free2_point(const Presentation& free2, int n, int offset) {
    Matrix shift(n, n);
    for (int i = 0; i < n; ++i) shift.at((i + 1) % n, i) = Rational(1);
    Matrix diag(n, n);
    for (int i = 0; i < n; ++i) diag.at(i, i) = Rational(offset + i + 1);
    std::map<std::string, Matrix> asg;
    asg.emplace(free2.generators()[0], std::move(shift));
    asg.emplace(free2.generators()[1], std::move(diag));
    return verify_point(free2, asg, n);
}

} // namespace repca::testing
