#ifndef REPCA_INVARIANTS_HPP
#define REPCA_INVARIANTS_HPP

#include <optional>
#include <vector>

#include "repca/quiver_rep.hpp"
#include "repca/tracepoly.hpp"

namespace repca {

// Generator of the invariant ring: trace along an oriented cycle.
struct CycleTrace {
    Necklace necklace;
};

// tr of the word evaluated at the point; the map from the algebra modulo
// commutators into functions on rep_n.
Rational word_trace(const RepPoint& x, const NcPolynomial& w);

// One cycle trace per necklace of length <= bound; bound defaults to
// (sum alpha_i)^2, the generating bound for the invariant ring.
std::vector<CycleTrace> cycle_generators(const Quiver& q, const DimVector& alpha,
                                         std::optional<int> bound = std::nullopt);

Rational evaluate_cycle(const CycleTrace& c, const QuiverRep& rep);

// blocks[i][j] = paths from vertex j to vertex i of length <= bound; the
// (i, j) block of the trace-algebra decomposition.
struct BlockDecomposition {
    int vertex_count = 0;
    int bound = 0;
    std::vector<std::vector<std::vector<Path>>> blocks;
};

BlockDecomposition block_decomposition(const Quiver& q, int bound);

// Cayley-Hamilton reduction of a pure loop power tr(x^m) at a vertex of
// dimension d: for m > d returns tr(x^m) as a polynomial in tr(x), ...,
// tr(x^d) (symbol nu_k stands for tr(x^k)); otherwise, and for any cycle
// that is not a pure loop power, returns nullopt ("irreducible").
std::optional<TracePolynomial> reduce_trace_relations(const Quiver& q, const DimVector& alpha,
                                                      const CycleTrace& c);

} // namespace repca

#endif
