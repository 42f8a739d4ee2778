#include "repca/tracepoly.hpp"

#include <algorithm>

#include "repca/errors.hpp"

namespace repca {

TracePolynomial TracePolynomial::constant(const Rational& c) {
    TracePolynomial p;
    p.add_term(TraceMonomial{}, c);
    return p;
}

TracePolynomial TracePolynomial::symbol(int k) {
    if (k < 1) throw ValidationError("trace symbol index must be >= 1");
    TracePolynomial p;
    p.add_term(TraceMonomial{k}, Rational(1));
    return p;
}

int TracePolynomial::max_symbol() const {
    int m = 0;
    for (const auto& [mono, c] : terms_)
        if (!mono.empty()) m = std::max(m, mono.back());
    return m;
}

void TracePolynomial::add_term(TraceMonomial m, const Rational& c) {
    if (c.is_zero()) return;
    if (!std::is_sorted(m.begin(), m.end())) std::sort(m.begin(), m.end());
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TracePolynomial TracePolynomial::operator-() const {
    TracePolynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

TracePolynomial& TracePolynomial::operator+=(const TracePolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

TracePolynomial& TracePolynomial::operator-=(const TracePolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

TracePolynomial operator*(const TracePolynomial& a, const TracePolynomial& b) {
    TracePolynomial r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            TraceMonomial m;
            m.reserve(ma.size() + mb.size());
            std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
            r.add_term(std::move(m), ca * cb);
        }
    return r;
}

TracePolynomial operator*(const Rational& c, const TracePolynomial& a) {
    TracePolynomial r;
    if (c.is_zero()) return r;
    for (const auto& [m, k] : a.terms_) r.terms_.emplace(m, c * k);
    return r;
}

Rational TracePolynomial::evaluate(const std::map<int, Rational>& values) const {
    Rational acc;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int k : m) {
            auto it = values.find(k);
            if (it == values.end())
                throw PreconditionError("missing_symbol",
                                        "no value for trace symbol nu_" + std::to_string(k));
            t *= it->second;
        }
        acc += t;
    }
    return acc;
}

TracePolynomial TracePolynomial::substitute(const std::map<int, TracePolynomial>& subs) const {
    TracePolynomial acc;
    for (const auto& [m, c] : terms_) {
        TracePolynomial t = TracePolynomial::constant(c);
        for (int k : m) {
            auto it = subs.find(k);
            t = it == subs.end() ? t * TracePolynomial::symbol(k) : t * it->second;
        }
        acc += t;
    }
    return acc;
}

} // namespace repca
