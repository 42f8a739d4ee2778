#include "repca/json_io.hpp"

#include <fstream>

#include "repca/errors.hpp"

namespace repca {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object())
        throw ValidationError(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end())
        throw ValidationError(where + ": missing field \"" + key + "\"");
    return *it;
}

int parse_int(const Json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw ValidationError(where + ": expected an integer");
    return j.get<int>();
}

std::string parse_string(const Json& j, const std::string& where) {
    if (!j.is_string())
        throw ValidationError(where + ": expected a string");
    return j.get<std::string>();
}

const Json& expect_array(const Json& j, const std::string& where) {
    if (!j.is_array())
        throw ValidationError(where + ": expected an array");
    return j;
}

} // namespace

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open file \"" + path + "\"");
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded())
        throw ValidationError("file \"" + path + "\" is not valid JSON");
    return j;
}

Rational parse_rational(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw ValidationError(where + ": expected a rational as \"p/q\" string or integer");
}

Json dump_rational(const Rational& r) { return r.str(); }

Matrix parse_matrix(const Json& j, const std::string& where) {
    expect_array(j, where);
    if (j.empty())
        throw ValidationError(where + ": matrix needs at least one row");
    const int rows = static_cast<int>(j.size());
    expect_array(j[0], where + " row 0");
    const int cols = static_cast<int>(j[0].size());
    return parse_matrix_shaped(j, rows, cols, where);
}

Matrix parse_matrix_shaped(const Json& j, int rows, int cols, const std::string& where) {
    expect_array(j, where);
    if (rows == 0 || cols == 0) {
        // zero-size matrices may be written as [] regardless of shape
        if (j.empty()) return Matrix(rows, cols);
        if (static_cast<int>(j.size()) == rows) {
            for (const Json& row : j)
                if (!row.is_array() || !row.empty())
                    throw ValidationError(where + ": expected empty rows");
            return Matrix(rows, cols);
        }
        throw ValidationError(where + ": expected an empty matrix");
    }
    if (static_cast<int>(j.size()) != rows)
        throw ValidationError(where + ": expected " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        expect_array(j[i], where + " row " + std::to_string(i));
        if (static_cast<int>(j[i].size()) != cols)
            throw ValidationError(where + " row " + std::to_string(i) + ": expected " +
                                  std::to_string(cols) + " entries");
        for (int c = 0; c < cols; ++c)
            m.at(i, c) = parse_rational(j[i][c], where);
    }
    return m;
}

Json dump_matrix(const Matrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Quiver parse_quiver(const Json& j) {
    const int k = parse_int(field(j, "vertices", "quiver"), "quiver.vertices");
    std::vector<Arrow> arrows;
    for (const Json& a : expect_array(field(j, "arrows", "quiver"), "quiver.arrows")) {
        Arrow arrow;
        arrow.id = parse_string(field(a, "id", "arrow"), "arrow.id");
        arrow.source = parse_int(field(a, "source", "arrow"), "arrow.source");
        arrow.target = parse_int(field(a, "target", "arrow"), "arrow.target");
        arrows.push_back(std::move(arrow));
    }
    return Quiver(k, std::move(arrows));
}

Json dump_quiver(const Quiver& q) {
    Json arrows = Json::array();
    for (const Arrow& a : q.arrows())
        arrows.push_back({{"id", a.id}, {"source", a.source}, {"target", a.target}});
    return Json{{"vertices", q.vertex_count()}, {"arrows", std::move(arrows)}};
}

Json dump_path(const Quiver& q, const Path& p) {
    if (p.is_trivial()) return Json{{"vertex", p.source(q)}};
    Json ids = Json::array();
    for (int a : p.arrows()) ids.push_back(q.arrow(a).id);
    return ids;
}

Presentation parse_presentation(const Json& j) {
    std::vector<std::string> gens;
    for (const Json& g :
         expect_array(field(j, "generators", "presentation"), "presentation.generators"))
        gens.push_back(parse_string(g, "generator name"));
    std::vector<NcPolynomial> rels;
    for (const Json& r :
         expect_array(field(j, "relations", "presentation"), "presentation.relations")) {
        std::map<Word, Rational> terms;
        for (const Json& t : expect_array(r, "relation")) {
            Rational c = parse_rational(field(t, "coeff", "relation term"), "relation coeff");
            Word w;
            for (const Json& name :
                 expect_array(field(t, "word", "relation term"), "relation word")) {
                std::string s = parse_string(name, "word letter");
                int idx = -1;
                for (std::size_t i = 0; i < gens.size(); ++i)
                    if (gens[i] == s) idx = static_cast<int>(i);
                if (idx < 0)
                    throw ValidationError("relation uses unknown generator \"" + s + "\"");
                w.push_back(idx);
            }
            auto it = terms.find(w);
            if (it == terms.end())
                terms.emplace(std::move(w), c);
            else
                it->second += c;
        }
        rels.push_back(NcPolynomial::from_terms(gens, std::move(terms)));
    }
    return Presentation(std::move(gens), std::move(rels));
}

Json dump_presentation(const Presentation& p) {
    Json rels = Json::array();
    for (const NcPolynomial& r : p.relations()) {
        Json terms = Json::array();
        for (const auto& [w, c] : r.terms()) {
            Json word = Json::array();
            for (int g : w) word.push_back(p.generators()[g]);
            terms.push_back({{"coeff", c.str()}, {"word", std::move(word)}});
        }
        rels.push_back(std::move(terms));
    }
    return Json{{"generators", p.generators()}, {"relations", std::move(rels)}};
}

RepPoint parse_rep_point(const Json& j, const Presentation& p) {
    const int n = parse_int(field(j, "n", "rep point"), "rep point n");
    const Json& asg = field(j, "assignment", "rep point");
    if (!asg.is_object())
        throw ValidationError("rep point assignment: expected an object");
    std::map<std::string, Matrix> m;
    for (auto it = asg.begin(); it != asg.end(); ++it)
        m.emplace(it.key(),
                  parse_matrix_shaped(it.value(), n, n, "matrix for \"" + it.key() + "\""));
    return verify_point(p, m, n);
}

Json dump_rep_point(const RepPoint& r) {
    Json asg = Json::object();
    for (const auto& [name, m] : r.assignment()) asg[name] = dump_matrix(m);
    return Json{{"n", r.dim()}, {"assignment", std::move(asg)}};
}

QuiverRep parse_quiver_rep(const Json& j) {
    Quiver q = parse_quiver(field(j, "quiver", "quiver rep"));
    DimVector alpha;
    for (const Json& d :
         expect_array(field(j, "dim_vector", "quiver rep"), "dim_vector"))
        alpha.push_back(parse_int(d, "dim_vector entry"));
    check_dim_vector(q, alpha);
    const Json& mats = field(j, "arrow_matrices", "quiver rep");
    if (!mats.is_object())
        throw ValidationError("arrow_matrices: expected an object");
    std::map<std::string, Matrix> m;
    for (auto it = mats.begin(); it != mats.end(); ++it) {
        int ai = q.arrow_index(it.key());
        if (ai < 0)
            throw ValidationError("arrow_matrices: unknown arrow \"" + it.key() + "\"");
        const Arrow& a = q.arrow(ai);
        m.emplace(it.key(), parse_matrix_shaped(it.value(), alpha[a.target], alpha[a.source],
                                                "matrix for arrow \"" + it.key() + "\""));
    }
    return QuiverRep(std::move(q), std::move(alpha), std::move(m));
}

Json dump_quiver_rep(const QuiverRep& r) {
    Json mats = Json::object();
    for (const auto& [id, m] : r.arrow_matrices()) mats[id] = dump_matrix(m);
    return Json{{"quiver", dump_quiver(r.quiver())},
                {"dim_vector", r.dim_vector()},
                {"arrow_matrices", std::move(mats)}};
}

SemisimplePoint parse_simples(const Json& j, const Presentation& p) {
    std::vector<RepPoint> simples;
    std::vector<int> mults;
    for (const Json& s : expect_array(field(j, "summands", "simples"), "summands")) {
        mults.push_back(parse_int(field(s, "multiplicity", "summand"), "multiplicity"));
        simples.push_back(parse_rep_point(field(s, "point", "summand"), p));
    }
    return make_semisimple(p, std::move(simples), std::move(mults));
}

QuiverSemisimplePoint parse_quiver_simples(const Json& j) {
    std::vector<QuiverRep> simples;
    std::vector<int> mults;
    for (const Json& s : expect_array(field(j, "summands", "simples"), "summands")) {
        mults.push_back(parse_int(field(s, "multiplicity", "summand"), "multiplicity"));
        simples.push_back(parse_quiver_rep(field(s, "rep", "summand")));
    }
    if (simples.empty())
        throw ValidationError("simples: no summands");
    for (const QuiverRep& s : simples)
        if (s.quiver() != simples[0].quiver())
            throw PreconditionError("quiver_mismatch", "summands live on different quivers");
    Quiver q = simples[0].quiver();
    return make_quiver_semisimple(q, std::move(simples), std::move(mults));
}

Json dump_quiver_simples(const QuiverSemisimplePoint& x) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < x.simples.size(); ++i)
        arr.push_back({{"multiplicity", x.multiplicities[i]},
                       {"rep", dump_quiver_rep(x.simples[i])}});
    return Json{{"summands", std::move(arr)}};
}

FinDimAlgebra parse_algebra(const Json& j) {
    const int d = parse_int(field(j, "dim", "algebra"), "algebra.dim");
    if (d < 0) throw ValidationError("algebra.dim: negative dimension");
    std::vector<std::string> basis;
    for (const Json& b : expect_array(field(j, "basis", "algebra"), "algebra.basis"))
        basis.push_back(parse_string(b, "basis name"));
    if (static_cast<int>(basis.size()) != d)
        throw ValidationError("algebra.basis: expected " + std::to_string(d) + " names");
    auto parse_vec = [&](const Json& v, const std::string& where) {
        expect_array(v, where);
        if (static_cast<int>(v.size()) != d)
            throw ValidationError(where + ": expected " + std::to_string(d) + " coordinates");
        Vec out(d);
        for (int i = 0; i < d; ++i) out[i] = parse_rational(v[i], where);
        return out;
    };
    Vec unit = parse_vec(field(j, "unit", "algebra"), "algebra.unit");
    const Json& mul = expect_array(field(j, "mul", "algebra"), "algebra.mul");
    if (static_cast<int>(mul.size()) != d)
        throw ValidationError("algebra.mul: expected " + std::to_string(d) + " rows");
    std::vector<std::vector<Vec>> table(d, std::vector<Vec>(d));
    for (int i = 0; i < d; ++i) {
        expect_array(mul[i], "algebra.mul row");
        if (static_cast<int>(mul[i].size()) != d)
            throw ValidationError("algebra.mul: row " + std::to_string(i) + " has wrong length");
        for (int k = 0; k < d; ++k)
            table[i][k] = parse_vec(mul[i][k], "algebra.mul[" + std::to_string(i) + "][" +
                                                   std::to_string(k) + "]");
    }
    return FinDimAlgebra(std::move(basis), std::move(unit), std::move(table));
}

Json dump_algebra(const FinDimAlgebra& a) {
    auto vec = [](const Vec& v) {
        Json arr = Json::array();
        for (const Rational& r : v) arr.push_back(r.str());
        return arr;
    };
    Json mul = Json::array();
    for (int i = 0; i < a.dim(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < a.dim(); ++j) row.push_back(vec(a.mul_table()[i][j]));
        mul.push_back(std::move(row));
    }
    return Json{{"dim", a.dim()},
                {"basis", a.basis_names()},
                {"unit", vec(a.unit())},
                {"mul", std::move(mul)}};
}

Json dump_local_data(const LocalData& ld) {
    Json j = dump_quiver(ld.local_quiver);
    j["alpha"] = ld.alpha;
    j["dims"] = ld.simple_dims;
    return j;
}

Json dump_trace_poly(const TracePolynomial& t) {
    Json arr = Json::array();
    for (const auto& [mono, c] : t.terms())
        arr.push_back({{"monomial", mono}, {"coeff", c.str()}});
    return arr;
}

Json dump_ch_poly(const ChPolynomial& chi) {
    Json coeffs = Json::array();
    for (const TracePolynomial& c : chi.coefficients) coeffs.push_back(dump_trace_poly(c));
    return Json{{"degree", chi.degree}, {"coefficients", std::move(coeffs)}};
}

} // namespace repca
