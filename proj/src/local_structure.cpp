#include "repca/local_structure.hpp"

#include "repca/errors.hpp"

namespace repca {

namespace {

Quiver build_local_quiver(const std::vector<std::vector<int>>& ext) {
    const int k = static_cast<int>(ext.size());
    std::vector<Arrow> arrows;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int t = 0; t < ext[i][j]; ++t)
                arrows.push_back(Arrow{"e" + std::to_string(i) + "_" + std::to_string(j) + "_" +
                                           std::to_string(t),
                                       i, j});
    return Quiver(k, std::move(arrows));
}

} // namespace

LocalData local_quiver(const Presentation& p, const SemisimplePoint& x) {
    const int k = x.summand_count();
    std::vector<std::vector<int>> ext(k, std::vector<int>(k, 0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            ext[i][j] = ext1_dim_presented(p, x.simples[i], x.simples[j]);
    LocalData ld;
    ld.local_quiver = build_local_quiver(ext);
    ld.alpha = x.multiplicities;
    for (const RepPoint& s : x.simples) ld.simple_dims.push_back(s.dim());
    return ld;
}

LocalData local_quiver(const Quiver& q, const QuiverSemisimplePoint& x) {
    const int k = x.summand_count();
    std::vector<std::vector<int>> ext(k, std::vector<int>(k, 0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            ext[i][j] = ext1_dim_quiver(x.simples[i], x.simples[j]);
    LocalData ld;
    ld.local_quiver = build_local_quiver(ext);
    ld.alpha = x.multiplicities;
    for (const QuiverRep& s : x.simples) ld.simple_dims.push_back(s.total());
    (void)q;
    return ld;
}

long long predicted_dim(const LocalData& ld, int n) {
    if (static_cast<int>(ld.alpha.size()) != ld.local_quiver.vertex_count() ||
        ld.alpha.size() != ld.simple_dims.size())
        throw PreconditionError("inconsistent_data", "local data sizes disagree");
    long long check = 0;
    for (std::size_t i = 0; i < ld.alpha.size(); ++i) {
        if (ld.alpha[i] < 1 || ld.simple_dims[i] < 1)
            throw PreconditionError("inconsistent_data",
                                    "multiplicities and simple dimensions must be >= 1");
        check += static_cast<long long>(ld.alpha[i]) * ld.simple_dims[i];
    }
    if (check != n)
        throw PreconditionError("inconsistent_data",
                                "sum m_i d_i = " + std::to_string(check) + " but n = " +
                                    std::to_string(n));
    long long dim = static_cast<long long>(n) * n;
    for (int m : ld.alpha) dim -= static_cast<long long>(m) * m;
    for (const Arrow& a : ld.local_quiver.arrows())
        dim += static_cast<long long>(ld.alpha[a.source]) * ld.alpha[a.target];
    return dim;
}

std::string verdict_string(SmoothVerdict v) {
    return v == SmoothVerdict::Smooth ? "smooth" : "singular-or-nonreduced";
}

SmoothnessReport smoothness_report(const Presentation& p, const SemisimplePoint& x) {
    RepPoint rep = representative(p, x);
    LocalData ld = local_quiver(p, x);
    SmoothnessReport r;
    r.tangent_dimension = tangent_dim(p, rep);
    r.predicted_dimension = predicted_dim(ld, rep.dim());
    r.obstructed = second_order_obstructed(p, rep);
    r.verdict = (!r.obstructed && r.tangent_dimension == r.predicted_dimension)
                    ? SmoothVerdict::Smooth
                    : SmoothVerdict::SingularOrNonreduced;
    return r;
}

int strata_label(const SemisimplePoint& x) {
    int r = 0;
    for (int m : x.multiplicities) r += m;
    return r;
}

int strata_label(const QuiverSemisimplePoint& x) {
    int r = 0;
    for (int m : x.multiplicities) r += m;
    return r;
}

bool strata_check(const Presentation& p, const SemisimplePoint& x) {
    RepPoint rep = representative(p, x);
    std::vector<RepPoint> expanded;
    for (std::size_t i = 0; i < x.simples.size(); ++i)
        for (int c = 0; c < x.multiplicities[i]; ++c) expanded.push_back(x.simples[i]);
    RepPoint rebuilt = direct_sum(p, expanded);
    return rep == rebuilt;
}

} // namespace repca
