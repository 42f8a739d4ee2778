#ifndef REPCA_PRESENTATION_HPP
#define REPCA_PRESENTATION_HPP

#include <map>
#include <string>
#include <vector>

#include "repca/matrix.hpp"
#include "repca/ncpoly.hpp"
#include "repca/quiver.hpp"

namespace repca {

// Finitely presented associative algebra Q<generators>/(relations).
class Presentation {
public:
    Presentation(std::vector<std::string> generators, std::vector<NcPolynomial> relations);

    const std::vector<std::string>& generators() const { return gens_; }
    const std::vector<NcPolynomial>& relations() const { return rels_; }
    int generator_count() const { return static_cast<int>(gens_.size()); }

    friend bool operator==(const Presentation& a, const Presentation& b) {
        return a.gens_ == b.gens_ && a.rels_ == b.rels_;
    }
    friend bool operator!=(const Presentation& a, const Presentation& b) { return !(a == b); }

private:
    std::vector<std::string> gens_;
    std::vector<NcPolynomial> rels_;
};

Presentation free_presentation(std::vector<std::string> generators);

// Generators: vertex idempotents "v0".."v{k-1}" followed by the arrow ids.
// Relations: idempotent orthogonality, sum of idempotents = 1, and
// v_target * a * v_source = a per arrow.
Presentation path_algebra_presentation(const Quiver& q);

// An n-dimensional point of rep_n: one n-by-n matrix per generator, with all
// relations vanishing (enforced by verify_point, the only way to build one).
class RepPoint {
public:
    int dim() const { return n_; }
    const std::map<std::string, Matrix>& assignment() const { return asg_; }
    const Matrix& matrix(const std::string& gen) const;

    friend bool operator==(const RepPoint& a, const RepPoint& b) {
        return a.n_ == b.n_ && a.asg_ == b.asg_;
    }

    friend RepPoint verify_point(const Presentation& p,
                                 const std::map<std::string, Matrix>& candidate, int n);

private:
    RepPoint(int n, std::map<std::string, Matrix> asg) : n_(n), asg_(std::move(asg)) {}
    int n_;
    std::map<std::string, Matrix> asg_;
};

// Accepts the candidate iff every relation evaluates to the exact zero
// matrix; throws RelationViolated naming the first failure.
RepPoint verify_point(const Presentation& p, const std::map<std::string, Matrix>& candidate,
                      int n);

// Every generator matrix X -> g X g^{-1}.
RepPoint conjugate(const Presentation& p, const RepPoint& r, const Matrix& g);

// Block-diagonal point of dimension sum n_i.
RepPoint direct_sum(const Presentation& p, const std::vector<RepPoint>& points);

struct FreeProduct {
    Presentation presentation;
    // original generator name -> name in the product (differs only on clash)
    std::map<std::string, std::string> left_names;
    std::map<std::string, std::string> right_names;
};

// Concatenates generators and relations; clashing right-hand generator names
// get the first free "_2", "_3", ... suffix.
FreeProduct free_product(const Presentation& a, const Presentation& b);

// Intertwiner space dimension: {f : f rho_s(g) = rho_t(g) f for all g}.
int hom_dim_presented(const Presentation& p, const RepPoint& s, const RepPoint& t);

// Linearization of the relations in the derivation direction: unknowns are
// one d_t-by-d_s matrix per generator, rows are the Leibniz expansions of the
// relations at (s, t). Kernel = derivations.
Matrix derivation_system(const Presentation& p, const RepPoint& s, const RepPoint& t);

// dim Ext^1(S, T) computed as derivations modulo inner derivations,
// dim Inner = d_s d_t - hom_dim_presented(s, t).
int ext1_dim_presented(const Presentation& p, const RepPoint& s, const RepPoint& t);

// First-order deformations of x: kernel dimension of the linearized relations.
int tangent_dim(const Presentation& p, const RepPoint& x);

// True when some first-order deformation of x fails to lift to second order,
// i.e. the quadratic part of some relation falls outside the image of the
// linearization. Never true for algebras without relations.
bool second_order_obstructed(const Presentation& p, const RepPoint& x);

} // namespace repca

#endif
