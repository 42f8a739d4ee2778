#include "repca/rational.hpp"

#include <cctype>
#include <ostream>

#include "repca/errors.hpp"

namespace repca {

namespace {

bool is_integer_token(const std::string& s, std::size_t begin, std::size_t end) {
    if (begin >= end) return false;
    std::size_t i = begin;
    if (s[i] == '-') ++i;
    if (i >= end) return false;
    for (; i < end; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational::Rational(long n, long d) : v_(n, d) {
    if (d == 0) throw PreconditionError("division_by_zero", "rational with denominator 0");
    v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    bool ok;
    if (slash == std::string::npos) {
        ok = is_integer_token(s, 0, s.size());
    } else {
        // denominator must be a positive integer literal
        ok = is_integer_token(s, 0, slash) && slash + 1 < s.size() &&
             s[slash + 1] != '-' && is_integer_token(s, slash + 1, s.size());
        if (ok) {
            bool all_zero = true;
            for (std::size_t i = slash + 1; i < s.size(); ++i)
                if (s[i] != '0') all_zero = false;
            if (all_zero) ok = false;
        }
    }
    if (!ok) throw ValidationError("not a rational literal: \"" + s + "\"");
    mpq_class v(s, 10);
    v.canonicalize();
    return Rational(std::move(v));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw PreconditionError("division_by_zero", "rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace repca
