#ifndef REPCA_TRACEPOLY_HPP
#define REPCA_TRACEPOLY_HPP

#include <map>
#include <vector>

#include "repca/rational.hpp"

namespace repca {

// Monomial in the trace symbols nu_1, nu_2, ...: sorted multiset of indices,
// e.g. {1,1,2} denotes nu_1^2 * nu_2. The empty multiset is the constant 1.
using TraceMonomial = std::vector<int>;

// Commutative polynomial in the trace symbols with rational coefficients.
// Trace symbols are central scalars, so this is an ordinary polynomial ring.
class TracePolynomial {
public:
    TracePolynomial() = default;

    static TracePolynomial constant(const Rational& c);
    static TracePolynomial symbol(int k);

    const std::map<TraceMonomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int max_symbol() const;

    TracePolynomial operator-() const;
    TracePolynomial& operator+=(const TracePolynomial& o);
    TracePolynomial& operator-=(const TracePolynomial& o);
    friend TracePolynomial operator+(TracePolynomial a, const TracePolynomial& b) { return a += b; }
    friend TracePolynomial operator-(TracePolynomial a, const TracePolynomial& b) { return a -= b; }
    friend TracePolynomial operator*(const TracePolynomial& a, const TracePolynomial& b);
    friend TracePolynomial operator*(const Rational& c, const TracePolynomial& a);
    friend bool operator==(const TracePolynomial& a, const TracePolynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const TracePolynomial& a, const TracePolynomial& b) {
        return !(a == b);
    }

    // Substitutes nu_k -> values[k]; every symbol present must have a value.
    Rational evaluate(const std::map<int, Rational>& values) const;

    // Replaces each listed symbol by a polynomial; unlisted symbols persist.
    TracePolynomial substitute(const std::map<int, TracePolynomial>& subs) const;

    void add_term(TraceMonomial m, const Rational& c);

private:
    std::map<TraceMonomial, Rational> terms_;
};

} // namespace repca

#endif
