#include "repca/semisimple.hpp"

#include "repca/errors.hpp"

namespace repca {

int SemisimplePoint::total() const {
    int n = 0;
    for (std::size_t i = 0; i < simples.size(); ++i) n += multiplicities[i] * simples[i].dim();
    return n;
}

int QuiverSemisimplePoint::total() const {
    int n = 0;
    for (std::size_t i = 0; i < simples.size(); ++i) n += multiplicities[i] * simples[i].total();
    return n;
}

SemisimplePoint make_semisimple(const Presentation& p, std::vector<RepPoint> simples,
                                std::vector<int> multiplicities) {
    if (simples.empty() || simples.size() != multiplicities.size())
        throw ValidationError("semisimple point needs matching simples and multiplicities");
    for (int m : multiplicities)
        if (m < 1) throw ValidationError("multiplicities must be >= 1");
    for (std::size_t i = 0; i < simples.size(); ++i) {
        int schur = hom_dim_presented(p, simples[i], simples[i]);
        if (schur != 1)
            throw PreconditionError("schur_failure",
                                    "summand " + std::to_string(i) +
                                        " has endomorphism dimension " + std::to_string(schur));
    }
    for (std::size_t i = 0; i < simples.size(); ++i)
        for (std::size_t j = i + 1; j < simples.size(); ++j)
            if (hom_dim_presented(p, simples[i], simples[j]) != 0)
                throw PreconditionError("duplicate_simple",
                                        "summands " + std::to_string(i) + " and " +
                                            std::to_string(j) + " are isomorphic");
    return SemisimplePoint{std::move(simples), std::move(multiplicities)};
}

RepPoint representative(const Presentation& p, const SemisimplePoint& x) {
    std::vector<RepPoint> parts;
    for (std::size_t i = 0; i < x.simples.size(); ++i)
        for (int c = 0; c < x.multiplicities[i]; ++c) parts.push_back(x.simples[i]);
    return direct_sum(p, parts);
}

QuiverSemisimplePoint make_quiver_semisimple(const Quiver& q, std::vector<QuiverRep> simples,
                                             std::vector<int> multiplicities) {
    if (simples.empty() || simples.size() != multiplicities.size())
        throw ValidationError("semisimple point needs matching simples and multiplicities");
    for (int m : multiplicities)
        if (m < 1) throw ValidationError("multiplicities must be >= 1");
    for (const QuiverRep& s : simples)
        if (s.quiver() != q)
            throw PreconditionError("quiver_mismatch", "summand lives on a different quiver");
    for (std::size_t i = 0; i < simples.size(); ++i) {
        int schur = hom_dim(simples[i], simples[i]);
        if (schur != 1)
            throw PreconditionError("schur_failure",
                                    "summand " + std::to_string(i) +
                                        " has endomorphism dimension " + std::to_string(schur));
    }
    for (std::size_t i = 0; i < simples.size(); ++i)
        for (std::size_t j = i + 1; j < simples.size(); ++j)
            if (hom_dim(simples[i], simples[j]) != 0)
                throw PreconditionError("duplicate_simple",
                                        "summands " + std::to_string(i) + " and " +
                                            std::to_string(j) + " are isomorphic");
    return QuiverSemisimplePoint{std::move(simples), std::move(multiplicities)};
}

QuiverRep representative(const Quiver& q, const QuiverSemisimplePoint& x) {
    QuiverRep acc = zero_rep(q, DimVector(q.vertex_count(), 0));
    for (std::size_t i = 0; i < x.simples.size(); ++i)
        for (int c = 0; c < x.multiplicities[i]; ++c) acc = direct_sum(acc, x.simples[i]);
    return acc;
}

QuiverSemisimplePoint semisimplify_acyclic(const QuiverRep& qr) {
    const Quiver& q = qr.quiver();
    if (!q.is_acyclic())
        throw PreconditionError("cyclic_quiver",
                                "semisimplification is implemented for acyclic quivers only");
    std::vector<QuiverRep> simples;
    std::vector<int> mults;
    for (int v = 0; v < q.vertex_count(); ++v) {
        if (qr.dim_vector()[v] == 0) continue;
        simples.push_back(vertex_simple(q, v));
        mults.push_back(qr.dim_vector()[v]);
    }
    if (simples.empty())
        throw PreconditionError("empty_sum", "the zero representation has no simple factors");
    return make_quiver_semisimple(q, std::move(simples), std::move(mults));
}

SemisimplePoint embed(const Quiver& q, const QuiverSemisimplePoint& x) {
    Presentation p = path_algebra_presentation(q);
    std::vector<RepPoint> simples;
    for (const QuiverRep& s : x.simples) simples.push_back(quiver_rep_embed(s));
    return make_semisimple(p, std::move(simples), x.multiplicities);
}

QuiverSemisimplePoint canonical_semisimple(const Quiver& q, const DimVector& alpha) {
    check_dim_vector(q, alpha);
    std::vector<QuiverRep> simples;
    std::vector<int> mults;
    for (int v = 0; v < q.vertex_count(); ++v) {
        if (alpha[v] == 0) continue;
        simples.push_back(vertex_simple(q, v));
        mults.push_back(alpha[v]);
    }
    if (simples.empty())
        throw PreconditionError("empty_sum", "zero dimension vector");
    return make_quiver_semisimple(q, std::move(simples), std::move(mults));
}

} // namespace repca
