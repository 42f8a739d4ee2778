#ifndef REPCA_QUIVER_REP_HPP
#define REPCA_QUIVER_REP_HPP

#include <map>
#include <string>
#include <vector>

#include "repca/presentation.hpp"
#include "repca/quiver.hpp"

namespace repca {

// Point of rep_alpha Q: an arrow a: i -> j carries an a_j-by-a_i matrix.
class QuiverRep {
public:
    QuiverRep(Quiver quiver, DimVector dim_vector, std::map<std::string, Matrix> arrow_matrices);

    const Quiver& quiver() const { return q_; }
    const DimVector& dim_vector() const { return alpha_; }
    const std::map<std::string, Matrix>& arrow_matrices() const { return mats_; }
    const Matrix& arrow_matrix(const std::string& id) const;
    int total() const { return total_dim(alpha_); }

    friend bool operator==(const QuiverRep& a, const QuiverRep& b) {
        return a.q_ == b.q_ && a.alpha_ == b.alpha_ && a.mats_ == b.mats_;
    }

private:
    Quiver q_;
    DimVector alpha_;
    std::map<std::string, Matrix> mats_;
};

// Simple representation concentrated at one vertex.
QuiverRep vertex_simple(const Quiver& q, int v);

// Zero representation of the given dimension vector.
QuiverRep zero_rep(const Quiver& q, DimVector alpha);

// Block-embeds the representation as a point of the path-algebra
// presentation: vertex idempotents become diagonal projectors, an arrow
// i -> j lands in block (j, i). The ambient presentation is
// path_algebra_presentation(qr.quiver()).
RepPoint quiver_rep_embed(const QuiverRep& qr);

// Arrow i -> j: M -> g_j M g_i^{-1}; one invertible block per vertex.
QuiverRep base_change(const QuiverRep& qr, const std::vector<Matrix>& g);

// Blockwise direct sum in every vertex space.
QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b);

// Product of the arrow matrices along the path, rightmost arrow applied
// first; trivial paths evaluate to the identity of the base vertex space.
Matrix evaluate_path(const QuiverRep& rep, const Path& p);

// dim {(f_i) : f_j M_a^V = M_a^W f_i for every arrow a: i -> j}.
int hom_dim(const QuiverRep& v, const QuiverRep& w);

// hom_dim(v, w) - <dim v, dim w>.
int ext1_dim_quiver(const QuiverRep& v, const QuiverRep& w);

} // namespace repca

#endif
