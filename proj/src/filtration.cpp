#include "repca/filtration.hpp"

#include <algorithm>
#include <set>

#include "repca/errors.hpp"

namespace repca {

FinDimAlgebra::FinDimAlgebra(std::vector<std::string> basis, Vec unit,
                             std::vector<std::vector<Vec>> mul)
    : basis_(std::move(basis)), unit_(std::move(unit)), mul_(std::move(mul)) {
    const std::size_t d = basis_.size();
    std::set<std::string> names(basis_.begin(), basis_.end());
    if (names.size() != d) throw ValidationError("duplicate basis name");
    if (unit_.size() != d) throw ValidationError("unit vector has wrong length");
    if (mul_.size() != d) throw ValidationError("multiplication table has wrong shape");
    for (const auto& row : mul_) {
        if (row.size() != d) throw ValidationError("multiplication table has wrong shape");
        for (const auto& v : row)
            if (v.size() != d) throw ValidationError("multiplication table has wrong shape");
    }
    for (int i = 0; i < dim(); ++i) {
        if (multiply(unit_, basis_vector(i)) != basis_vector(i) ||
            multiply(basis_vector(i), unit_) != basis_vector(i))
            throw PreconditionError("not_unital", "unit fails on basis element " +
                                                      std::to_string(i));
    }
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
            for (int k = 0; k < dim(); ++k) {
                Vec l = multiply(multiply(basis_vector(i), basis_vector(j)), basis_vector(k));
                Vec r = multiply(basis_vector(i), multiply(basis_vector(j), basis_vector(k)));
                if (l != r)
                    throw PreconditionError(
                        "not_associative", "associativity fails on basis triple (" +
                                               std::to_string(i) + "," + std::to_string(j) +
                                               "," + std::to_string(k) + ")");
            }
}

Vec FinDimAlgebra::multiply(const Vec& a, const Vec& b) const {
    const int d = dim();
    Vec out(d, Rational());
    for (int i = 0; i < d; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < d; ++j) {
            if (b[j].is_zero()) continue;
            const Rational c = a[i] * b[j];
            const Vec& sc = mul_[i][j];
            for (int k = 0; k < d; ++k)
                if (!sc[k].is_zero()) out[k] += c * sc[k];
        }
    }
    return out;
}

Vec FinDimAlgebra::bracket(const Vec& a, const Vec& b) const {
    Vec ab = multiply(a, b);
    Vec ba = multiply(b, a);
    for (int k = 0; k < dim(); ++k) ab[k] -= ba[k];
    return ab;
}

Vec FinDimAlgebra::basis_vector(int i) const {
    Vec v(dim(), Rational());
    v[i] = Rational(1);
    return v;
}

std::vector<Vec> lie_layer(const FinDimAlgebra& a, int m) {
    if (m < 1) throw ValidationError("Lie layer depth must be >= 1");
    RowSpace span(a.dim());
    for (int i = 0; i < a.dim(); ++i) span.insert(a.basis_vector(i));
    for (int depth = 2; depth <= m; ++depth) {
        RowSpace next(a.dim());
        for (int i = 0; i < a.dim(); ++i)
            for (const Vec& v : span.basis()) next.insert(a.bracket(a.basis_vector(i), v));
        span = next;
        if (span.dim() == 0) break;
    }
    return span.basis();
}

namespace {

// Two-sided ideal generated by a subspace: span of e_a x e_b over basis pairs
// (the unit is in the basis span, so x itself is covered).
RowSpace ideal_closure(const FinDimAlgebra& a, const std::vector<Vec>& gens) {
    RowSpace id(a.dim());
    for (const Vec& x : gens)
        for (int u = 0; u < a.dim(); ++u) {
            Vec ux = a.multiply(a.basis_vector(u), x);
            for (int v = 0; v < a.dim(); ++v)
                id.insert(a.multiply(ux, a.basis_vector(v)));
        }
    return id;
}

RowSpace subspace_product(const FinDimAlgebra& a, const RowSpace& s, const RowSpace& t) {
    RowSpace out(a.dim());
    for (const Vec& x : s.basis())
        for (const Vec& y : t.basis()) out.insert(a.multiply(x, y));
    return out;
}

RowSpace whole_space(const FinDimAlgebra& a) {
    RowSpace r(a.dim());
    for (int i = 0; i < a.dim(); ++i) r.insert(a.basis_vector(i));
    return r;
}

// F^{-d} via the recursion F^{-d} = J_d + sum_{e<d} F^{-e} J_{d-e}, where
// J_i is the ideal generated by the Lie layer carrying i bracket instances
// (i.e. lie_layer(i + 1)).
std::vector<RowSpace> filtration_chain(const FinDimAlgebra& a, int depth) {
    std::vector<RowSpace> bracket_ideals; // J_1, J_2, ...
    for (int i = 1; i <= depth; ++i)
        bracket_ideals.push_back(ideal_closure(a, lie_layer(a, i + 1)));

    std::vector<RowSpace> f; // f[d] = F^{-d}, f[0] = R
    f.push_back(whole_space(a));
    for (int d = 1; d <= depth; ++d) {
        RowSpace fd = bracket_ideals[d - 1];
        for (int e = 1; e < d; ++e) {
            RowSpace prod = subspace_product(a, f[e], bracket_ideals[d - e - 1]);
            for (const Vec& v : prod.basis()) fd.insert(v);
        }
        f.push_back(std::move(fd));
    }
    return f;
}

} // namespace

FiltrationProfile commutator_filtration(const FinDimAlgebra& a) {
    FiltrationProfile p;
    // depth a.dim() + 1 suffices: a strictly decreasing chain of subspaces of
    // an a.dim()-dimensional space stabilizes within dim steps
    std::vector<RowSpace> f = filtration_chain(a, a.dim() + 1);
    p.dims.push_back(f[0].dim());
    p.subspaces.push_back(f[0]);
    for (std::size_t d = 1; d < f.size(); ++d) {
        p.dims.push_back(f[d].dim());
        p.subspaces.push_back(f[d]);
        if (f[d].dim() == 0 || f[d] == f[d - 1]) break;
    }
    return p;
}

bool nil_d_test(const FinDimAlgebra& a, int d) {
    if (d < 0) throw ValidationError("nil level must be >= 0");
    FiltrationProfile p = commutator_filtration(a);
    const int last = static_cast<int>(p.dims.size()) - 1;
    if (d + 1 <= last) return p.dims[d + 1] == 0;
    return p.dims[last] == 0; // chain already stabilized
}

std::optional<int> FiltrationProfile::nil_level() const {
    if (!reaches_zero()) return std::nullopt;
    for (std::size_t d = 0; d < dims.size(); ++d)
        if (dims[d] == 0) return std::max(0, static_cast<int>(d) - 1);
    return std::nullopt;
}

Abelianization abelianization(const FinDimAlgebra& a) {
    const int d = a.dim();
    RowSpace ideal = ideal_closure(a, lie_layer(a, 2));

    // coordinates not hit by a pivot survive into the quotient
    std::vector<bool> is_pivot(d, false);
    for (const Vec& row : ideal.basis())
        for (int j = 0; j < d; ++j)
            if (!row[j].is_zero()) {
                is_pivot[j] = true;
                break;
            }
    std::vector<int> keep;
    for (int j = 0; j < d; ++j)
        if (!is_pivot[j]) keep.push_back(j);
    const int qd = static_cast<int>(keep.size());

    // reduce a vector modulo the ideal, then restrict to surviving coords
    auto project = [&](Vec v) {
        for (const Vec& row : ideal.basis()) {
            int piv = -1;
            for (int j = 0; j < d; ++j)
                if (!row[j].is_zero()) { piv = j; break; }
            if (piv >= 0 && !v[piv].is_zero()) {
                Rational c = v[piv]; // rows are RREF-normalized
                for (int j = 0; j < d; ++j) v[j] -= c * row[j];
            }
        }
        Vec out(qd, Rational());
        for (int t = 0; t < qd; ++t) out[t] = v[keep[t]];
        return out;
    };
    auto lift = [&](int t) { return a.basis_vector(keep[t]); };

    std::vector<std::string> names;
    for (int t = 0; t < qd; ++t) names.push_back(a.basis_names()[keep[t]]);

    std::vector<std::vector<Vec>> mul(qd, std::vector<Vec>(qd, Vec(qd, Rational())));
    for (int i = 0; i < qd; ++i)
        for (int j = 0; j < qd; ++j) mul[i][j] = project(a.multiply(lift(i), lift(j)));

    Vec unit = project(a.unit());
    bool collapsed = qd == 0;
    return Abelianization{FinDimAlgebra(std::move(names), std::move(unit), std::move(mul)),
                          collapsed};
}

} // namespace repca
