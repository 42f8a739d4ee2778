#ifndef REPCA_SEMISIMPLE_HPP
#define REPCA_SEMISIMPLE_HPP

#include <vector>

#include "repca/presentation.hpp"
#include "repca/quiver_rep.hpp"

namespace repca {

// M = S_1^{m_1} + ... + S_k^{m_k} with pairwise non-isomorphic simples.
// Construction certifies Schur (End S = Q) and pairwise Hom = 0; over Q the
// Schur check only certifies simplicity when it returns 1, which is exactly
// what make_semisimple demands.
struct SemisimplePoint {
    std::vector<RepPoint> simples;
    std::vector<int> multiplicities;

    int summand_count() const { return static_cast<int>(simples.size()); }
    int total() const;
};

SemisimplePoint make_semisimple(const Presentation& p, std::vector<RepPoint> simples,
                                std::vector<int> multiplicities);

// Block-diagonal representative: each simple repeated its multiplicity.
RepPoint representative(const Presentation& p, const SemisimplePoint& x);

// Quiver-representation flavor of the same structure.
struct QuiverSemisimplePoint {
    std::vector<QuiverRep> simples;
    std::vector<int> multiplicities;

    int summand_count() const { return static_cast<int>(simples.size()); }
    int total() const;
};

QuiverSemisimplePoint make_quiver_semisimple(const Quiver& q, std::vector<QuiverRep> simples,
                                             std::vector<int> multiplicities);

QuiverRep representative(const Quiver& q, const QuiverSemisimplePoint& x);

// Jordan-Hoelder semisimplification for acyclic quivers: the composition
// factors are the vertex simples with multiplicities given by the dimension
// vector. Throws PreconditionError("cyclic_quiver") otherwise.
QuiverSemisimplePoint semisimplify_acyclic(const QuiverRep& qr);

// Embeds every simple into the path-algebra presentation of its quiver.
SemisimplePoint embed(const Quiver& q, const QuiverSemisimplePoint& x);

// Canonical semisimple point of an acyclic quiver: vertex simples with
// multiplicities alpha_i (vertices with alpha_i = 0 are dropped).
QuiverSemisimplePoint canonical_semisimple(const Quiver& q, const DimVector& alpha);

} // namespace repca

#endif
