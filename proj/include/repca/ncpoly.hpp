#ifndef REPCA_NCPOLY_HPP
#define REPCA_NCPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "repca/matrix.hpp"

namespace repca {

// A word in the free algebra: sequence of generator indices, multiplied left
// to right. The empty word is the unit.
using Word = std::vector<int>;

// Element of Q<g_1,...,g_k>: finitely many words with nonzero rational
// coefficients. The generator list is part of the value; binary operations
// require identical generator lists.
class NcPolynomial {
public:
    explicit NcPolynomial(std::vector<std::string> gens);

    static NcPolynomial unit(std::vector<std::string> gens);
    static NcPolynomial generator(std::vector<std::string> gens, int index);
    static NcPolynomial from_terms(std::vector<std::string> gens,
                                   std::map<Word, Rational> terms);

    const std::vector<std::string>& generators() const { return gens_; }
    const std::map<Word, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int generator_index(const std::string& name) const; // -1 when absent

    NcPolynomial operator-() const;
    NcPolynomial& operator+=(const NcPolynomial& o);
    NcPolynomial& operator-=(const NcPolynomial& o);
    friend NcPolynomial operator+(NcPolynomial a, const NcPolynomial& b) { return a += b; }
    friend NcPolynomial operator-(NcPolynomial a, const NcPolynomial& b) { return a -= b; }
    friend NcPolynomial operator*(const NcPolynomial& a, const NcPolynomial& b);
    friend NcPolynomial operator*(const Rational& c, const NcPolynomial& a);
    friend bool operator==(const NcPolynomial& a, const NcPolynomial& b) {
        return a.gens_ == b.gens_ && a.terms_ == b.terms_;
    }

    // Rewrites the polynomial over a larger generator list; `rename` maps old
    // generator names to new ones (identity when a name is missing).
    NcPolynomial with_generators(std::vector<std::string> gens,
                                 const std::map<std::string, std::string>& rename) const;

    // Substitutes an n-by-n matrix for every generator and expands; the unit
    // word becomes the identity matrix.
    Matrix evaluate(const std::map<std::string, Matrix>& assignment, int n) const;

private:
    void add_term(const Word& w, const Rational& c);
    void check_compatible(const NcPolynomial& o) const;

    std::vector<std::string> gens_;
    std::map<Word, Rational> terms_;
};

} // namespace repca

#endif
