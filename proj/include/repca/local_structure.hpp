#ifndef REPCA_LOCAL_STRUCTURE_HPP
#define REPCA_LOCAL_STRUCTURE_HPP

#include <string>
#include <vector>

#include "repca/semisimple.hpp"

namespace repca {

// Local quiver at a semisimple point: one vertex per distinct simple, with
// dim Ext^1(S_i, S_j) arrows i -> j, plus the multiplicity vector and the
// simple dimensions.
struct LocalData {
    Quiver local_quiver{0, {}};
    DimVector alpha;             // multiplicities m_i
    std::vector<int> simple_dims; // d_i
};

LocalData local_quiver(const Presentation& p, const SemisimplePoint& x);
LocalData local_quiver(const Quiver& q, const QuiverSemisimplePoint& x);

// Dimension of the fiber-bundle local model:
// n^2 - sum m_i^2 + sum over arrows i->j of m_i m_j.
long long predicted_dim(const LocalData& ld, int n);

enum class SmoothVerdict { Smooth, SingularOrNonreduced };

std::string verdict_string(SmoothVerdict v);

struct SmoothnessReport {
    long long tangent_dimension = 0;
    long long predicted_dimension = 0;
    bool obstructed = false; // some tangent vector fails to lift to order 2
    SmoothVerdict verdict = SmoothVerdict::Smooth;
};

// Smooth iff the tangent dimension matches the local-model prediction and no
// first-order deformation is obstructed at second order. The lifting probe is
// what separates fat points (all of whose deformations die against the
// relations) from honestly smooth ones.
SmoothnessReport smoothness_report(const Presentation& p, const SemisimplePoint& x);

// Dimension of a maximal torus of the stabilizer of the semisimple point:
// the stabilizer is prod GL_{m_i}, so the answer is sum m_i.
int strata_label(const SemisimplePoint& x);
int strata_label(const QuiverSemisimplePoint& x);

// Rebuilds the block representative through the connecting (direct sum)
// morphism and compares matrices exactly.
bool strata_check(const Presentation& p, const SemisimplePoint& x);

} // namespace repca

#endif
