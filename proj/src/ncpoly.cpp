#include "repca/ncpoly.hpp"

#include <set>

#include "repca/errors.hpp"

namespace repca {

NcPolynomial::NcPolynomial(std::vector<std::string> gens) : gens_(std::move(gens)) {
    std::set<std::string> seen(gens_.begin(), gens_.end());
    if (seen.size() != gens_.size())
        throw ValidationError("duplicate generator name");
}

NcPolynomial NcPolynomial::unit(std::vector<std::string> gens) {
    NcPolynomial p(std::move(gens));
    p.terms_[Word{}] = Rational(1);
    return p;
}

NcPolynomial NcPolynomial::generator(std::vector<std::string> gens, int index) {
    NcPolynomial p(std::move(gens));
    if (index < 0 || index >= static_cast<int>(p.gens_.size()))
        throw ValidationError("generator index out of range");
    p.terms_[Word{index}] = Rational(1);
    return p;
}

NcPolynomial NcPolynomial::from_terms(std::vector<std::string> gens,
                                      std::map<Word, Rational> terms) {
    NcPolynomial p(std::move(gens));
    for (auto& [w, c] : terms) {
        for (int g : w)
            if (g < 0 || g >= static_cast<int>(p.gens_.size()))
                throw ValidationError("word uses an unknown generator index");
        p.add_term(w, c);
    }
    return p;
}

int NcPolynomial::generator_index(const std::string& name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i] == name) return static_cast<int>(i);
    return -1;
}

void NcPolynomial::add_term(const Word& w, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void NcPolynomial::check_compatible(const NcPolynomial& o) const {
    if (gens_ != o.gens_)
        throw PreconditionError("generator_mismatch",
                                "operands live over different generator lists");
}

NcPolynomial NcPolynomial::operator-() const {
    NcPolynomial r(gens_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

NcPolynomial& NcPolynomial::operator+=(const NcPolynomial& o) {
    check_compatible(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NcPolynomial& NcPolynomial::operator-=(const NcPolynomial& o) {
    check_compatible(o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NcPolynomial operator*(const NcPolynomial& a, const NcPolynomial& b) {
    a.check_compatible(b);
    NcPolynomial r(a.gens_);
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    return r;
}

NcPolynomial operator*(const Rational& c, const NcPolynomial& a) {
    NcPolynomial r(a.gens_);
    if (c.is_zero()) return r;
    for (const auto& [w, k] : a.terms_) r.terms_.emplace(w, c * k);
    return r;
}

NcPolynomial NcPolynomial::with_generators(
    std::vector<std::string> gens,
    const std::map<std::string, std::string>& rename) const {
    NcPolynomial r(std::move(gens));
    std::vector<int> remap(gens_.size());
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        auto it = rename.find(gens_[i]);
        const std::string& name = it == rename.end() ? gens_[i] : it->second;
        int idx = r.generator_index(name);
        if (idx < 0)
            throw ValidationError("generator \"" + name + "\" missing from target list");
        remap[i] = idx;
    }
    for (const auto& [w, c] : terms_) {
        Word nw(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) nw[i] = remap[w[i]];
        r.add_term(nw, c);
    }
    return r;
}

Matrix NcPolynomial::evaluate(const std::map<std::string, Matrix>& assignment, int n) const {
    std::vector<const Matrix*> vals(gens_.size(), nullptr);
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        auto it = assignment.find(gens_[i]);
        if (it == assignment.end())
            throw PreconditionError("missing_generator",
                                    "no matrix assigned to generator \"" + gens_[i] + "\"");
        if (it->second.rows() != n || it->second.cols() != n)
            throw PreconditionError("dimension_mismatch",
                                    "matrix for \"" + gens_[i] + "\" is not " +
                                        std::to_string(n) + "x" + std::to_string(n));
        vals[i] = &it->second;
    }
    Matrix acc(n, n);
    for (const auto& [w, c] : terms_) {
        Matrix m = Matrix::identity(n);
        for (int g : w) m = m * *vals[g];
        acc += c * m;
    }
    return acc;
}

} // namespace repca
