#ifndef REPCA_QUIVER_HPP
#define REPCA_QUIVER_HPP

#include <map>
#include <string>
#include <vector>

#include "repca/rational.hpp"

namespace repca {

struct Arrow {
    std::string id;
    int source = 0;
    int target = 0;

    friend bool operator==(const Arrow& a, const Arrow& b) {
        return a.id == b.id && a.source == b.source && a.target == b.target;
    }
};

// Finite directed multigraph; loops and parallel arrows allowed. Vertices are
// 0-indexed.
class Quiver {
public:
    Quiver(int vertex_count, std::vector<Arrow> arrows);

    int vertex_count() const { return vcount_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const Arrow& arrow(int i) const { return arrows_[static_cast<std::size_t>(i)]; }
    int arrow_index(const std::string& id) const; // -1 when absent

    // entry (i, j) = number of arrows j -> i, so powers count paths the same
    // way matrix composition reads.
    std::vector<std::vector<long long>> adjacency() const;
    // entry (i, j) = number of arrows i -> j.
    std::vector<std::vector<int>> arrow_counts() const;
    bool is_acyclic() const;

    friend bool operator==(const Quiver& a, const Quiver& b) {
        return a.vcount_ == b.vcount_ && a.arrows_ == b.arrows_;
    }
    friend bool operator!=(const Quiver& a, const Quiver& b) { return !(a == b); }

private:
    int vcount_;
    std::vector<Arrow> arrows_;
};

// Vertex dimensions, paired positionally with a quiver.
using DimVector = std::vector<int>;

void check_dim_vector(const Quiver& q, const DimVector& alpha);
int total_dim(const DimVector& alpha);

// Oriented path. Arrows are stored in composition order: arrows()[0] is the
// arrow traversed LAST, matching the product notation where b*a means "a then
// b". A length-zero path carries its base vertex.
class Path {
public:
    explicit Path(int vertex) : base_(vertex) {}
    Path(const Quiver& q, std::vector<int> arrows_composition_order);

    bool is_trivial() const { return arrows_.empty(); }
    int length() const { return static_cast<int>(arrows_.size()); }
    const std::vector<int>& arrows() const { return arrows_; }

    int source(const Quiver& q) const;
    int target(const Quiver& q) const;
    bool is_closed(const Quiver& q) const { return source(q) == target(q); }

    // Concatenated arrow ids in composition order ("ba" = a then b); trivial
    // paths print as "v<i>".
    std::string display(const Quiver& q) const;

    friend bool operator==(const Path& a, const Path& b) {
        return a.base_ == b.base_ && a.arrows_ == b.arrows_;
    }
    friend bool operator<(const Path& a, const Path& b);

private:
    int base_ = -1; // meaningful only for trivial paths
    std::vector<int> arrows_;
};

// Q-linear combination of paths of one quiver.
class PathElement {
public:
    PathElement() = default;

    static PathElement unit(const Quiver& q); // sum of all vertex idempotents
    static PathElement vertex(const Quiver& q, int v);
    static PathElement path(Path p);

    const std::map<Path, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Path& p, const Rational& c);

    PathElement operator-() const;
    PathElement& operator+=(const PathElement& o);
    PathElement& operator-=(const PathElement& o);
    friend PathElement operator+(PathElement a, const PathElement& b) { return a += b; }
    friend PathElement operator-(PathElement a, const PathElement& b) { return a -= b; }
    friend PathElement operator*(const Rational& c, const PathElement& a);
    friend bool operator==(const PathElement& a, const PathElement& b) {
        return a.terms_ == b.terms_;
    }

private:
    std::map<Path, Rational> terms_;
};

// Bilinear extension of concatenation: p*q is "q then p", zero when the
// endpoints do not meet.
PathElement path_multiply(const Quiver& q, const PathElement& a, const PathElement& b);

// All paths from `from` to `to` of length <= max_len, ordered by length then
// by traversal order of arrow indices. Includes the trivial path iff
// from == to.
std::vector<Path> enumerate_paths(const Quiver& q, int from, int to, int max_len);

// Rotation class of a closed path, stored as the representative whose
// traversal-order id sequence is lexicographically minimal.
class Necklace {
public:
    static Necklace from_closed_path(const Quiver& q, const Path& p);

    const Path& representative() const { return rep_; }
    int length() const { return rep_.length(); }
    std::string display(const Quiver& q) const { return rep_.display(q); }

    friend bool operator==(const Necklace& a, const Necklace& b) { return a.rep_ == b.rep_; }
    friend bool operator<(const Necklace& a, const Necklace& b);

private:
    explicit Necklace(Path p) : rep_(std::move(p)) {}
    Path rep_;
};

// One representative per rotation class of closed paths of length 1..max_len,
// sorted by length then representative.
std::vector<Necklace> enumerate_necklaces(const Quiver& q, int max_len);

// <alpha, beta> = sum_i a_i b_i - sum_{arrows i->j} a_i b_j.
long long euler_form(const Quiver& q, const DimVector& alpha, const DimVector& beta);

} // namespace repca

#endif
