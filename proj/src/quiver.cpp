#include "repca/quiver.hpp"

#include <algorithm>
#include <set>

#include "repca/errors.hpp"

namespace repca {

Quiver::Quiver(int vertex_count, std::vector<Arrow> arrows)
    : vcount_(vertex_count), arrows_(std::move(arrows)) {
    if (vcount_ < 0) throw ValidationError("negative vertex count");
    std::set<std::string> ids;
    for (const Arrow& a : arrows_) {
        if (a.source < 0 || a.source >= vcount_ || a.target < 0 || a.target >= vcount_)
            throw ValidationError("arrow \"" + a.id + "\" has an endpoint out of range");
        if (!ids.insert(a.id).second)
            throw ValidationError("duplicate arrow id \"" + a.id + "\"");
    }
}

int Quiver::arrow_index(const std::string& id) const {
    for (std::size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].id == id) return static_cast<int>(i);
    return -1;
}

std::vector<std::vector<long long>> Quiver::adjacency() const {
    std::vector<std::vector<long long>> m(vcount_, std::vector<long long>(vcount_, 0));
    for (const Arrow& a : arrows_) m[a.target][a.source] += 1;
    return m;
}

std::vector<std::vector<int>> Quiver::arrow_counts() const {
    std::vector<std::vector<int>> m(vcount_, std::vector<int>(vcount_, 0));
    for (const Arrow& a : arrows_) m[a.source][a.target] += 1;
    return m;
}

bool Quiver::is_acyclic() const {
    // Kahn: repeatedly strip vertices of in-degree zero.
    std::vector<int> indeg(vcount_, 0);
    for (const Arrow& a : arrows_) ++indeg[a.target];
    std::vector<int> stack;
    for (int v = 0; v < vcount_; ++v)
        if (indeg[v] == 0) stack.push_back(v);
    int removed = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++removed;
        for (const Arrow& a : arrows_)
            if (a.source == v && --indeg[a.target] == 0) stack.push_back(a.target);
    }
    return removed == vcount_;
}

void check_dim_vector(const Quiver& q, const DimVector& alpha) {
    if (static_cast<int>(alpha.size()) != q.vertex_count())
        throw PreconditionError("dimension_mismatch",
                                "dimension vector length does not match vertex count");
    for (int a : alpha)
        if (a < 0) throw ValidationError("negative entry in dimension vector");
}

int total_dim(const DimVector& alpha) {
    int n = 0;
    for (int a : alpha) n += a;
    return n;
}

Path::Path(const Quiver& q, std::vector<int> arrows_composition_order)
    : arrows_(std::move(arrows_composition_order)) {
    for (int a : arrows_)
        if (a < 0 || a >= static_cast<int>(q.arrows().size()))
            throw ValidationError("arrow index out of range in path");
    // composition order: entry p is applied after entry p+1
    for (std::size_t p = 0; p + 1 < arrows_.size(); ++p)
        if (q.arrow(arrows_[p + 1]).target != q.arrow(arrows_[p]).source)
            throw PreconditionError("path_not_composable",
                                    "consecutive arrows do not concatenate");
    if (!arrows_.empty()) base_ = q.arrow(arrows_.back()).source;
}

int Path::source(const Quiver& q) const {
    return arrows_.empty() ? base_ : q.arrow(arrows_.back()).source;
}

int Path::target(const Quiver& q) const {
    return arrows_.empty() ? base_ : q.arrow(arrows_.front()).target;
}

std::string Path::display(const Quiver& q) const {
    if (arrows_.empty()) return "v" + std::to_string(base_);
    std::string s;
    for (int a : arrows_) s += q.arrow(a).id;
    return s;
}

bool operator<(const Path& a, const Path& b) {
    if (a.arrows_.size() != b.arrows_.size()) return a.arrows_.size() < b.arrows_.size();
    if (a.arrows_.empty()) return a.base_ < b.base_;
    return a.arrows_ < b.arrows_;
}

PathElement PathElement::unit(const Quiver& q) {
    PathElement e;
    for (int v = 0; v < q.vertex_count(); ++v) e.terms_.emplace(Path(v), Rational(1));
    return e;
}

PathElement PathElement::vertex(const Quiver& q, int v) {
    if (v < 0 || v >= q.vertex_count()) throw ValidationError("vertex out of range");
    PathElement e;
    e.terms_.emplace(Path(v), Rational(1));
    return e;
}

PathElement PathElement::path(Path p) {
    PathElement e;
    e.terms_.emplace(std::move(p), Rational(1));
    return e;
}

void PathElement::add_term(const Path& p, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        terms_.emplace(p, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PathElement PathElement::operator-() const {
    PathElement r;
    for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
    return r;
}

PathElement& PathElement::operator+=(const PathElement& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
}

PathElement& PathElement::operator-=(const PathElement& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
}

PathElement operator*(const Rational& c, const PathElement& a) {
    PathElement r;
    if (c.is_zero()) return r;
    for (const auto& [p, k] : a.terms_) r.terms_.emplace(p, c * k);
    return r;
}

PathElement path_multiply(const Quiver& q, const PathElement& a, const PathElement& b) {
    PathElement r;
    for (const auto& [pa, ca] : a.terms()) {
        for (const auto& [pb, cb] : b.terms()) {
            if (pa.source(q) != pb.target(q)) continue; // concatenation is zero
            std::vector<int> arrows = pa.arrows();
            arrows.insert(arrows.end(), pb.arrows().begin(), pb.arrows().end());
            Path prod = arrows.empty() ? Path(pa.source(q)) : Path(q, std::move(arrows));
            r.add_term(prod, ca * cb);
        }
    }
    return r;
}

std::vector<Path> enumerate_paths(const Quiver& q, int from, int to, int max_len) {
    if (from < 0 || from >= q.vertex_count() || to < 0 || to >= q.vertex_count())
        throw PreconditionError("vertex_out_of_range", "path endpoint out of range");
    if (max_len < 0) throw ValidationError("max_len must be >= 0");

    std::vector<Path> out;
    if (from == to) out.push_back(Path(from));

    // walks in traversal order, extended one arrow at a time
    std::vector<std::vector<int>> frontier = {{}};
    std::vector<int> frontier_end = {from};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::vector<int>> next;
        std::vector<int> next_end;
        for (std::size_t w = 0; w < frontier.size(); ++w) {
            for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
                if (q.arrow(static_cast<int>(ai)).source != frontier_end[w]) continue;
                std::vector<int> walk = frontier[w];
                walk.push_back(static_cast<int>(ai));
                next_end.push_back(q.arrow(static_cast<int>(ai)).target);
                next.push_back(std::move(walk));
            }
        }
        for (std::size_t w = 0; w < next.size(); ++w) {
            if (next_end[w] != to) continue;
            std::vector<int> comp(next[w].rbegin(), next[w].rend());
            out.emplace_back(q, std::move(comp));
        }
        frontier = std::move(next);
        frontier_end = std::move(next_end);
    }
    return out;
}

namespace {

// Lexicographically minimal rotation of the traversal-order id sequence.
std::vector<int> canonical_rotation(const Quiver& q, const std::vector<int>& traversal) {
    const std::size_t n = traversal.size();
    auto id_seq = [&](std::size_t shift) {
        std::vector<std::string> s(n);
        for (std::size_t i = 0; i < n; ++i) s[i] = q.arrow(traversal[(shift + i) % n]).id;
        return s;
    };
    std::size_t best = 0;
    std::vector<std::string> best_seq = id_seq(0);
    for (std::size_t shift = 1; shift < n; ++shift) {
        std::vector<std::string> s = id_seq(shift);
        if (s < best_seq) {
            best_seq = std::move(s);
            best = shift;
        }
    }
    std::vector<int> rot(n);
    for (std::size_t i = 0; i < n; ++i) rot[i] = traversal[(best + i) % n];
    return rot;
}

} // namespace

Necklace Necklace::from_closed_path(const Quiver& q, const Path& p) {
    if (p.is_trivial() || !p.is_closed(q))
        throw PreconditionError("not_a_cycle", "necklace requires a closed path of length >= 1");
    std::vector<int> traversal(p.arrows().rbegin(), p.arrows().rend());
    std::vector<int> rot = canonical_rotation(q, traversal);
    std::vector<int> comp(rot.rbegin(), rot.rend());
    return Necklace(Path(q, std::move(comp)));
}

bool operator<(const Necklace& a, const Necklace& b) { return a.rep_ < b.rep_; }

std::vector<Necklace> enumerate_necklaces(const Quiver& q, int max_len) {
    if (max_len < 1) throw ValidationError("max_len must be >= 1");
    std::set<Necklace> seen;
    for (int v = 0; v < q.vertex_count(); ++v)
        for (const Path& p : enumerate_paths(q, v, v, max_len)) {
            if (p.is_trivial()) continue;
            // keep cycles through the seed vertex only once: a closed walk is
            // collected from each of its vertices, the set collapses rotations
            seen.insert(Necklace::from_closed_path(q, p));
        }
    return std::vector<Necklace>(seen.begin(), seen.end());
}

long long euler_form(const Quiver& q, const DimVector& alpha, const DimVector& beta) {
    check_dim_vector(q, alpha);
    check_dim_vector(q, beta);
    long long e = 0;
    for (int i = 0; i < q.vertex_count(); ++i)
        e += static_cast<long long>(alpha[i]) * beta[i];
    for (const Arrow& a : q.arrows())
        e -= static_cast<long long>(alpha[a.source]) * beta[a.target];
    return e;
}

} // namespace repca
