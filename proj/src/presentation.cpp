#include "repca/presentation.hpp"

#include <set>

#include "repca/errors.hpp"

namespace repca {

Presentation::Presentation(std::vector<std::string> generators,
                           std::vector<NcPolynomial> relations)
    : gens_(std::move(generators)), rels_(std::move(relations)) {
    std::set<std::string> seen;
    for (const auto& g : gens_)
        if (!seen.insert(g).second)
            throw ValidationError("duplicate generator \"" + g + "\"");
    for (const auto& r : rels_)
        if (r.generators() != gens_)
            throw ValidationError("relation does not use the presentation's generator list");
}

Presentation free_presentation(std::vector<std::string> generators) {
    return Presentation(std::move(generators), {});
}

Presentation path_algebra_presentation(const Quiver& q) {
    const int k = q.vertex_count();
    std::vector<std::string> gens;
    for (int i = 0; i < k; ++i) gens.push_back("v" + std::to_string(i));
    for (const Arrow& a : q.arrows()) {
        if (NcPolynomial(gens).generator_index(a.id) >= 0 || a.id.empty())
            throw ValidationError("arrow id \"" + a.id + "\" clashes with a vertex idempotent name");
        gens.push_back(a.id);
    }

    std::vector<NcPolynomial> rels;
    auto gen = [&](int i) { return NcPolynomial::generator(gens, i); };

    // orthogonal idempotents
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j)
                rels.push_back(gen(i) * gen(i) - gen(i));
            else
                rels.push_back(gen(i) * gen(j));
        }
    // sum of idempotents is the unit
    NcPolynomial s = NcPolynomial(gens) - NcPolynomial::unit(gens);
    for (int i = 0; i < k; ++i) s += gen(i);
    rels.push_back(s);
    // v_target * a * v_source = a
    for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
        const Arrow& a = q.arrows()[ai];
        NcPolynomial ga = gen(k + static_cast<int>(ai));
        rels.push_back(gen(a.target) * ga * gen(a.source) - ga);
    }
    return Presentation(std::move(gens), std::move(rels));
}

const Matrix& RepPoint::matrix(const std::string& gen) const {
    auto it = asg_.find(gen);
    if (it == asg_.end())
        throw PreconditionError("missing_generator", "point assigns nothing to \"" + gen + "\"");
    return it->second;
}

RepPoint verify_point(const Presentation& p, const std::map<std::string, Matrix>& candidate,
                      int n) {
    if (n < 0) throw ValidationError("negative representation dimension");
    for (const auto& [name, m] : candidate) {
        if (NcPolynomial(p.generators()).generator_index(name) < 0)
            throw ValidationError("assignment for unknown generator \"" + name + "\"");
        if (m.rows() != n || m.cols() != n)
            throw PreconditionError("dimension_mismatch",
                                    "matrix for \"" + name + "\" is not " + std::to_string(n) +
                                        "x" + std::to_string(n));
    }
    for (const auto& g : p.generators())
        if (candidate.find(g) == candidate.end())
            throw PreconditionError("missing_generator",
                                    "no matrix assigned to generator \"" + g + "\"");
    for (std::size_t i = 0; i < p.relations().size(); ++i)
        if (!p.relations()[i].evaluate(candidate, n).is_zero())
            throw RelationViolated(i, "relation " + std::to_string(i) +
                                          " does not vanish at the candidate point");
    return RepPoint(n, candidate);
}

RepPoint conjugate(const Presentation& p, const RepPoint& r, const Matrix& g) {
    if (g.rows() != r.dim() || g.cols() != r.dim())
        throw PreconditionError("dimension_mismatch", "conjugating matrix has the wrong size");
    Matrix gi = inverse(g); // throws singular_matrix
    std::map<std::string, Matrix> asg;
    for (const auto& [name, m] : r.assignment()) asg.emplace(name, g * m * gi);
    return verify_point(p, asg, r.dim());
}

RepPoint direct_sum(const Presentation& p, const std::vector<RepPoint>& points) {
    if (points.empty())
        throw PreconditionError("empty_sum", "direct sum of no representations");
    int n = 0;
    for (const RepPoint& pt : points) {
        for (const auto& g : p.generators())
            if (pt.assignment().find(g) == pt.assignment().end())
                throw PreconditionError("presentation_mismatch",
                                        "summand does not assign generator \"" + g + "\"");
        n += pt.dim();
    }
    std::map<std::string, Matrix> asg;
    for (const auto& g : p.generators()) {
        Matrix block(n, n);
        int off = 0;
        for (const RepPoint& pt : points) {
            const Matrix& m = pt.matrix(g);
            for (int i = 0; i < pt.dim(); ++i)
                for (int j = 0; j < pt.dim(); ++j) block.at(off + i, off + j) = m.at(i, j);
            off += pt.dim();
        }
        asg.emplace(g, std::move(block));
    }
    return verify_point(p, asg, n);
}

FreeProduct free_product(const Presentation& a, const Presentation& b) {
    std::set<std::string> used(a.generators().begin(), a.generators().end());
    std::vector<std::string> gens = a.generators();
    FreeProduct out{Presentation({}, {}), {}, {}};
    for (const auto& g : a.generators()) out.left_names[g] = g;
    for (const auto& g : b.generators()) {
        std::string name = g;
        for (int suffix = 2; used.count(name); ++suffix)
            name = g + "_" + std::to_string(suffix);
        used.insert(name);
        gens.push_back(name);
        out.right_names[g] = name;
    }
    std::vector<NcPolynomial> rels;
    for (const auto& r : a.relations()) rels.push_back(r.with_generators(gens, {}));
    for (const auto& r : b.relations()) rels.push_back(r.with_generators(gens, out.right_names));
    out.presentation = Presentation(std::move(gens), std::move(rels));
    return out;
}

namespace {

// column block offset of generator g in systems with one d_t*d_s unknown
// matrix per generator
inline int unknown_col(int gen, int a, int b, int dt, int ds) {
    return (gen * dt + a) * ds + b;
}

} // namespace

int hom_dim_presented(const Presentation& p, const RepPoint& s, const RepPoint& t) {
    const int ds = s.dim(), dt = t.dim();
    const int g_count = p.generator_count();
    // rho_t(g) * f - f * rho_s(g) = 0 for all generators; unknowns f (dt x ds)
    Matrix sys(g_count * dt * ds, dt * ds);
    for (int g = 0; g < g_count; ++g) {
        const Matrix& ms = s.matrix(p.generators()[g]);
        const Matrix& mt = t.matrix(p.generators()[g]);
        for (int i = 0; i < dt; ++i)
            for (int j = 0; j < ds; ++j) {
                const int row = (g * dt + i) * ds + j;
                for (int u = 0; u < dt; ++u) sys.at(row, u * ds + j) += mt.at(i, u);
                for (int v = 0; v < ds; ++v) sys.at(row, i * ds + v) -= ms.at(v, j);
            }
    }
    return dt * ds - rank(sys);
}

Matrix derivation_system(const Presentation& p, const RepPoint& s, const RepPoint& t) {
    const int ds = s.dim(), dt = t.dim();
    const int g_count = p.generator_count();
    const int rel_count = static_cast<int>(p.relations().size());
    Matrix sys(rel_count * dt * ds, g_count * dt * ds);

    for (int r = 0; r < rel_count; ++r) {
        for (const auto& [word, coeff] : p.relations()[r].terms()) {
            const int l = static_cast<int>(word.size());
            if (l == 0) continue; // the unit has derivative zero
            // prefix products over t, suffix products over s
            std::vector<Matrix> pre(l + 1), suf(l + 1);
            pre[0] = Matrix::identity(dt);
            for (int i = 0; i < l; ++i)
                pre[i + 1] = pre[i] * t.matrix(p.generators()[word[i]]);
            suf[l] = Matrix::identity(ds);
            for (int i = l - 1; i >= 0; --i)
                suf[i] = s.matrix(p.generators()[word[i]]) * suf[i + 1];

            for (int pos = 0; pos < l; ++pos) {
                const int g = word[pos];
                const Matrix& P = pre[pos];
                const Matrix& S = suf[pos + 1];
                for (int u = 0; u < dt; ++u)
                    for (int v = 0; v < ds; ++v) {
                        const int row = (r * dt + u) * ds + v;
                        for (int a = 0; a < dt; ++a) {
                            if (P.at(u, a).is_zero()) continue;
                            for (int b = 0; b < ds; ++b) {
                                if (S.at(b, v).is_zero()) continue;
                                sys.at(row, unknown_col(g, a, b, dt, ds)) +=
                                    coeff * P.at(u, a) * S.at(b, v);
                            }
                        }
                    }
            }
        }
    }
    return sys;
}

int ext1_dim_presented(const Presentation& p, const RepPoint& s, const RepPoint& t) {
    const int ds = s.dim(), dt = t.dim();
    Matrix sys = derivation_system(p, s, t);
    const int der = sys.cols() - rank(sys);
    const int inner = ds * dt - hom_dim_presented(p, s, t);
    return der - inner;
}

int tangent_dim(const Presentation& p, const RepPoint& x) {
    Matrix sys = derivation_system(p, x, x);
    return sys.cols() - rank(sys);
}

namespace {

// Order-epsilon^2 part of the relations at x + eps*D: for each relation the
// sum over words and position pairs p < q of
//   rho(w[0..p)) D_{g_p} rho(w(p..q)) D_{g_q} rho(w(q..end)).
std::vector<Matrix> quadratic_values(const Presentation& p, const RepPoint& x,
                                     const std::map<std::string, Matrix>& d) {
    const int n = x.dim();
    std::vector<Matrix> out;
    out.reserve(p.relations().size());
    for (const auto& rel : p.relations()) {
        Matrix acc(n, n);
        for (const auto& [word, coeff] : rel.terms()) {
            const int l = static_cast<int>(word.size());
            if (l < 2) continue;
            // seg[i][j] = product of letters i..j-1 at x
            std::vector<std::vector<Matrix>> seg(l + 1, std::vector<Matrix>(l + 1));
            for (int i = 0; i <= l; ++i) {
                seg[i][i] = Matrix::identity(n);
                for (int j = i + 1; j <= l; ++j)
                    seg[i][j] = seg[i][j - 1] * x.matrix(p.generators()[word[j - 1]]);
            }
            for (int a = 0; a < l; ++a)
                for (int b = a + 1; b < l; ++b) {
                    const Matrix& da = d.at(p.generators()[word[a]]);
                    const Matrix& db = d.at(p.generators()[word[b]]);
                    acc += coeff * (seg[0][a] * da * seg[a + 1][b] * db * seg[b + 1][l]);
                }
        }
        out.push_back(std::move(acc));
    }
    return out;
}

Vec stack_matrices(const std::vector<Matrix>& ms) {
    Vec v;
    for (const Matrix& m : ms)
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}

} // namespace

bool second_order_obstructed(const Presentation& p, const RepPoint& x) {
    if (p.relations().empty()) return false;
    const int n = x.dim();
    Matrix sys = derivation_system(p, x, x);

    std::vector<Vec> tangent = kernel_basis(sys);
    if (tangent.empty()) return false;

    // column space of the linearization, as a row space for membership tests
    RowSpace image(sys.rows());
    for (int c = 0; c < sys.cols(); ++c) {
        Vec col(sys.rows());
        for (int r = 0; r < sys.rows(); ++r) col[r] = sys.at(r, c);
        image.insert(std::move(col));
    }

    auto unpack = [&](const Vec& v) {
        std::map<std::string, Matrix> d;
        for (int g = 0; g < p.generator_count(); ++g) {
            Matrix m(n, n);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) m.at(a, b) = v[(g * n + a) * n + b];
            d.emplace(p.generators()[g], std::move(m));
        }
        return d;
    };
    auto liftable = [&](const std::map<std::string, Matrix>& d) {
        return image.contains(stack_matrices(quadratic_values(p, x, d)));
    };

    std::vector<std::map<std::string, Matrix>> dirs;
    dirs.reserve(tangent.size());
    for (const Vec& v : tangent) dirs.push_back(unpack(v));

    for (const auto& d : dirs)
        if (!liftable(d)) return true;
    // the obstruction is quadratic: checking basis vectors and their pairwise
    // sums covers the whole tangent space in characteristic zero
    for (std::size_t i = 0; i < dirs.size(); ++i)
        for (std::size_t j = i + 1; j < dirs.size(); ++j) {
            std::map<std::string, Matrix> sum = dirs[i];
            for (auto& [g, m] : sum) m += dirs[j].at(g);
            if (!liftable(sum)) return true;
        }
    return false;
}

} // namespace repca
