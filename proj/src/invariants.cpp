#include "repca/invariants.hpp"

#include "repca/cayley_hamilton.hpp"
#include "repca/errors.hpp"

namespace repca {

Rational word_trace(const RepPoint& x, const NcPolynomial& w) {
    return w.evaluate(x.assignment(), x.dim()).trace();
}

std::vector<CycleTrace> cycle_generators(const Quiver& q, const DimVector& alpha,
                                         std::optional<int> bound) {
    check_dim_vector(q, alpha);
    int b = bound.value_or(total_dim(alpha) * total_dim(alpha));
    if (b < 1)
        throw ValidationError("cycle length bound must be >= 1");
    std::vector<CycleTrace> out;
    for (const Necklace& n : enumerate_necklaces(q, b)) out.push_back(CycleTrace{n});
    return out;
}

Rational evaluate_cycle(const CycleTrace& c, const QuiverRep& rep) {
    // re-validate the stored arrow sequence against the representation's
    // quiver; a necklace from another quiver fails composability or range
    Path p(0);
    try {
        p = Path(rep.quiver(), c.necklace.representative().arrows());
    } catch (const Error&) {
        throw PreconditionError("quiver_mismatch", "cycle does not fit the representation");
    }
    if (!p.is_closed(rep.quiver()))
        throw PreconditionError("quiver_mismatch", "cycle is not closed on this quiver");
    return evaluate_path(rep, p).trace();
}

BlockDecomposition block_decomposition(const Quiver& q, int bound) {
    if (bound < 0) throw ValidationError("path length bound must be >= 0");
    BlockDecomposition bd;
    bd.vertex_count = q.vertex_count();
    bd.bound = bound;
    bd.blocks.assign(q.vertex_count(), std::vector<std::vector<Path>>(q.vertex_count()));
    for (int i = 0; i < q.vertex_count(); ++i)
        for (int j = 0; j < q.vertex_count(); ++j)
            bd.blocks[i][j] = enumerate_paths(q, j, i, bound);
    return bd;
}

std::optional<TracePolynomial> reduce_trace_relations(const Quiver& q, const DimVector& alpha,
                                                      const CycleTrace& c) {
    check_dim_vector(q, alpha);
    const Path& p = c.necklace.representative();
    const std::vector<int>& arrows = p.arrows();
    const int first = arrows.front();
    for (int a : arrows)
        if (a != first) return std::nullopt; // mixed cycle
    const Arrow& loop = q.arrow(first);
    if (loop.source != loop.target) return std::nullopt;
    const int m = p.length();
    const int d = alpha[loop.source];
    if (d < 1)
        throw PreconditionError("dimension_mismatch", "loop vertex has dimension zero");
    if (m <= d) return std::nullopt; // already a generator
    return trace_reduce(m, d);
}

} // namespace repca
