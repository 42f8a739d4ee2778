#include "repca/quiver_rep.hpp"

#include <numeric>

#include "repca/errors.hpp"

namespace repca {

QuiverRep::QuiverRep(Quiver quiver, DimVector dim_vector,
                     std::map<std::string, Matrix> arrow_matrices)
    : q_(std::move(quiver)), alpha_(std::move(dim_vector)), mats_(std::move(arrow_matrices)) {
    check_dim_vector(q_, alpha_);
    for (const auto& [id, m] : mats_)
        if (q_.arrow_index(id) < 0)
            throw ValidationError("matrix for unknown arrow \"" + id + "\"");
    for (const Arrow& a : q_.arrows()) {
        auto it = mats_.find(a.id);
        if (it == mats_.end())
            throw PreconditionError("missing_arrow", "no matrix for arrow \"" + a.id + "\"");
        if (it->second.rows() != alpha_[a.target] || it->second.cols() != alpha_[a.source])
            throw PreconditionError("dimension_mismatch",
                                    "matrix for arrow \"" + a.id + "\" must be " +
                                        std::to_string(alpha_[a.target]) + "x" +
                                        std::to_string(alpha_[a.source]));
    }
}

const Matrix& QuiverRep::arrow_matrix(const std::string& id) const {
    auto it = mats_.find(id);
    if (it == mats_.end())
        throw PreconditionError("missing_arrow", "no matrix for arrow \"" + id + "\"");
    return it->second;
}

QuiverRep vertex_simple(const Quiver& q, int v) {
    if (v < 0 || v >= q.vertex_count())
        throw PreconditionError("vertex_out_of_range", "vertex out of range");
    DimVector alpha(q.vertex_count(), 0);
    alpha[v] = 1;
    std::map<std::string, Matrix> mats;
    for (const Arrow& a : q.arrows())
        mats.emplace(a.id, Matrix(alpha[a.target], alpha[a.source]));
    return QuiverRep(q, std::move(alpha), std::move(mats));
}

QuiverRep zero_rep(const Quiver& q, DimVector alpha) {
    std::map<std::string, Matrix> mats;
    for (const Arrow& a : q.arrows())
        mats.emplace(a.id, Matrix(alpha[a.target], alpha[a.source]));
    return QuiverRep(q, std::move(alpha), std::move(mats));
}

RepPoint quiver_rep_embed(const QuiverRep& qr) {
    const Quiver& q = qr.quiver();
    const DimVector& alpha = qr.dim_vector();
    const int n = qr.total();

    std::vector<int> offset(q.vertex_count() + 1, 0);
    std::partial_sum(alpha.begin(), alpha.end(), offset.begin() + 1);

    std::map<std::string, Matrix> asg;
    for (int v = 0; v < q.vertex_count(); ++v) {
        Matrix p(n, n);
        for (int i = offset[v]; i < offset[v + 1]; ++i) p.at(i, i) = Rational(1);
        asg.emplace("v" + std::to_string(v), std::move(p));
    }
    for (const Arrow& a : q.arrows()) {
        const Matrix& m = qr.arrow_matrix(a.id);
        Matrix block(n, n);
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                block.at(offset[a.target] + i, offset[a.source] + j) = m.at(i, j);
        asg.emplace(a.id, std::move(block));
    }
    return verify_point(path_algebra_presentation(q), asg, n);
}

QuiverRep base_change(const QuiverRep& qr, const std::vector<Matrix>& g) {
    const Quiver& q = qr.quiver();
    const DimVector& alpha = qr.dim_vector();
    if (static_cast<int>(g.size()) != q.vertex_count())
        throw PreconditionError("dimension_mismatch", "one base-change block per vertex required");
    std::vector<Matrix> ginv;
    ginv.reserve(g.size());
    for (int v = 0; v < q.vertex_count(); ++v) {
        if (g[v].rows() != alpha[v] || g[v].cols() != alpha[v])
            throw PreconditionError("dimension_mismatch",
                                    "block " + std::to_string(v) + " has the wrong size");
        ginv.push_back(inverse(g[v]));
    }
    std::map<std::string, Matrix> mats;
    for (const Arrow& a : q.arrows())
        mats.emplace(a.id, g[a.target] * qr.arrow_matrix(a.id) * ginv[a.source]);
    return QuiverRep(q, alpha, std::move(mats));
}

QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b) {
    if (a.quiver() != b.quiver())
        throw PreconditionError("quiver_mismatch", "direct sum across different quivers");
    const Quiver& q = a.quiver();
    DimVector alpha(q.vertex_count());
    for (int v = 0; v < q.vertex_count(); ++v)
        alpha[v] = a.dim_vector()[v] + b.dim_vector()[v];
    std::map<std::string, Matrix> mats;
    for (const Arrow& ar : q.arrows()) {
        const Matrix& ma = a.arrow_matrix(ar.id);
        const Matrix& mb = b.arrow_matrix(ar.id);
        Matrix m(alpha[ar.target], alpha[ar.source]);
        for (int i = 0; i < ma.rows(); ++i)
            for (int j = 0; j < ma.cols(); ++j) m.at(i, j) = ma.at(i, j);
        for (int i = 0; i < mb.rows(); ++i)
            for (int j = 0; j < mb.cols(); ++j)
                m.at(ma.rows() + i, ma.cols() + j) = mb.at(i, j);
        mats.emplace(ar.id, std::move(m));
    }
    return QuiverRep(q, std::move(alpha), std::move(mats));
}

Matrix evaluate_path(const QuiverRep& rep, const Path& p) {
    const Quiver& q = rep.quiver();
    if (p.is_trivial()) return Matrix::identity(rep.dim_vector()[p.source(q)]);
    // stored order is composition order: apply from the back
    const auto& arrows = p.arrows();
    Matrix acc = rep.arrow_matrix(q.arrow(arrows.back()).id);
    for (int i = static_cast<int>(arrows.size()) - 2; i >= 0; --i)
        acc = rep.arrow_matrix(q.arrow(arrows[i]).id) * acc;
    return acc;
}

int hom_dim(const QuiverRep& v, const QuiverRep& w) {
    if (v.quiver() != w.quiver())
        throw PreconditionError("quiver_mismatch", "hom across different quivers");
    const Quiver& q = v.quiver();
    const DimVector& dv = v.dim_vector();
    const DimVector& dw = w.dim_vector();

    // unknowns: f_i of shape w_i x v_i, flattened vertex by vertex
    std::vector<int> off(q.vertex_count() + 1, 0);
    for (int i = 0; i < q.vertex_count(); ++i) off[i + 1] = off[i] + dw[i] * dv[i];
    const int ncols = off[q.vertex_count()];

    int nrows = 0;
    for (const Arrow& a : q.arrows()) nrows += dw[a.target] * dv[a.source];

    Matrix sys(nrows, ncols);
    int row0 = 0;
    for (const Arrow& a : q.arrows()) {
        const Matrix& mv = v.arrow_matrix(a.id);
        const Matrix& mw = w.arrow_matrix(a.id);
        // f_j M^V_a - M^W_a f_i = 0, entry (r, c): r < w_j, c < v_i
        for (int r = 0; r < dw[a.target]; ++r)
            for (int c = 0; c < dv[a.source]; ++c) {
                const int row = row0 + r * dv[a.source] + c;
                for (int u = 0; u < dv[a.target]; ++u)
                    sys.at(row, off[a.target] + r * dv[a.target] + u) += mv.at(u, c);
                for (int u = 0; u < dw[a.source]; ++u)
                    sys.at(row, off[a.source] + u * dv[a.source] + c) -= mw.at(r, u);
            }
        row0 += dw[a.target] * dv[a.source];
    }
    return ncols - rank(sys);
}

int ext1_dim_quiver(const QuiverRep& v, const QuiverRep& w) {
    const long long e = euler_form(v.quiver(), v.dim_vector(), w.dim_vector());
    return static_cast<int>(hom_dim(v, w) - e);
}

} // namespace repca
