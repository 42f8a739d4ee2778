// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failing criteria. Every check is exact; there are no tolerances anywhere.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <unistd.h>

#include "repca/cayley_hamilton.hpp"
#include "repca/cli.hpp"
#include "repca/invariants.hpp"
#include "repca/json_io.hpp"
#include "repca/local_structure.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace repca;
using namespace repca::testing;
namespace fs = std::filesystem;

namespace {

struct Harness {
    int failures = 0;

    void criterion(int number, const std::string& name, const std::function<bool(std::string&)>& fn) {
        std::string detail;
        bool ok = false;
        try {
            ok = fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::cout << (ok ? "PASS" : "FAIL") << "  " << number << ". " << name;
        if (!detail.empty()) std::cout << "  [" << detail << "]";
        std::cout << "\n";
        if (!ok) ++failures;
    }
};

#define EXPECT(cond)                                                     \
    do {                                                                 \
        if (!(cond)) {                                                   \
            detail = std::string("failed: ") + #cond;                    \
            return false;                                                \
        }                                                                \
    } while (0)

QuiverRep random_rep(Rng& rng, const Quiver& q, const DimVector& alpha) {
    std::map<std::string, Matrix> mats;
    for (const Arrow& a : q.arrows())
        mats.emplace(a.id, rng.int_matrix(alpha[a.target], alpha[a.source], -3, 3));
    return QuiverRep(q, alpha, mats);
}

// --- 1. Cayley-Hamilton identity -----------------------------------------

bool ch_identity(std::string& detail) {
    Rng rng(201);
    for (int n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 100; ++trial) {
            Matrix a = rng.int_matrix(n, n, -9, 9);
            EXPECT(ch_check(a, n).is_zero());
        }
    }
    detail = "chi(a) = 0 exactly for 500 random integer matrices, n = 1..5";
    return true;
}

// --- 2. Newton-coefficient oracle ----------------------------------------

bool newton_oracle(std::string& detail) {
    Rng rng(202);
    for (int n = 1; n <= 4; ++n) {
        ChPolynomial chi = ch_coefficients(n);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<Rational> roots;
            for (int i = 0; i < n; ++i) roots.push_back(rng.rational(9, 6));
            std::vector<Rational> expanded = poly_from_roots(roots);
            std::map<int, Rational> nu;
            for (int k = 1; k <= n; ++k) nu[k] = power_sum(roots, k);
            for (int k = 0; k <= n; ++k)
                EXPECT(chi.coefficients[k].evaluate(nu) == expanded[k]);
        }
    }
    detail = "coefficients match prod(t - root) on 200 random eigenvalue multisets";
    return true;
}

// --- 3. Amitsur-Levitzki ---------------------------------------------------

bool amitsur_levitzki(std::string& detail) {
    Rng rng(203);
    for (int n = 1; n <= 3; ++n) {
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<Matrix> args;
            for (int i = 0; i < 2 * n; ++i) args.push_back(rng.int_matrix(n, n, -5, 5));
            EXPECT(standard_identity(n, args).is_zero());
        }
    }
    for (int n = 2; n <= 3; ++n) {
        bool witness = false;
        for (int trial = 0; trial < 1000 && !witness; ++trial) {
            std::vector<Matrix> args;
            for (int i = 0; i < 2 * n - 2; ++i) args.push_back(rng.int_matrix(n, n, -5, 5));
            witness = !standard_identity(n - 1, args).is_zero();
        }
        EXPECT(witness);
    }
    detail = "S_2n vanishes on n x n; nonzero S_2n-2 witnesses found";
    return true;
}

// --- 4. Euler form / Ext consistency --------------------------------------

bool euler_ext(std::string& detail) {
    Rng rng(204);
    for (int instance = 0; instance < 50; ++instance) {
        Quiver q = rng.quiver(4, 6, true);
        QuiverRep v = random_rep(rng, q, rng.dim_vector(q, 0, 3));
        QuiverRep w = random_rep(rng, q, rng.dim_vector(q, 0, 3));
        HomExtOracle oracle = hom_ext_oracle(v, w);
        EXPECT(hom_dim(v, w) == oracle.hom);
        EXPECT(ext1_dim_quiver(v, w) == oracle.ext);
        EXPECT(oracle.hom - oracle.ext == euler_form(q, v.dim_vector(), w.dim_vector()));
    }
    for (const Quiver& q : {a2(), kronecker2(), acyclic4(), cyclic3()}) {
        auto counts = q.arrow_counts();
        for (int i = 0; i < q.vertex_count(); ++i)
            for (int j = 0; j < q.vertex_count(); ++j)
                EXPECT(ext1_dim_quiver(vertex_simple(q, i), vertex_simple(q, j)) ==
                       counts[i][j]);
    }
    detail = "hom - ext = euler on 50 random instances; vertex-simple ext = arrow counts";
    return true;
}

// --- 5. Invariance suite ---------------------------------------------------

bool invariance(std::string& detail) {
    Rng rng(205);
    // base-change invariance on cyclic corpus quivers
    for (const Quiver& q : {loop_quiver(), two_cycle(), cyclic3()}) {
        DimVector alpha(q.vertex_count(), 2);
        QuiverRep r = random_rep(rng, q, alpha);
        auto cycles = cycle_generators(q, alpha, 4);
        EXPECT(!cycles.empty());
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Matrix> g;
            for (int a : alpha) g.push_back(rng.invertible(a));
            QuiverRep moved = base_change(r, g);
            for (const auto& c : cycles)
                EXPECT(evaluate_cycle(c, moved) == evaluate_cycle(c, r));
        }
        // additivity under direct sums
        QuiverRep s = random_rep(rng, q, DimVector(q.vertex_count(), 1));
        QuiverRep sum = direct_sum(r, s);
        for (const auto& c : cycles)
            EXPECT(evaluate_cycle(c, sum) == evaluate_cycle(c, r) + evaluate_cycle(c, s));
    }
    // on acyclic quivers every positive-length path trace vanishes
    for (const Quiver& q : {a3(), star3(), acyclic4()}) {
        Presentation p = path_algebra_presentation(q);
        QuiverRep r = random_rep(rng, q, rng.dim_vector(q, 1, 2));
        RepPoint pt = quiver_rep_embed(r);
        const int k = q.vertex_count();
        for (int from = 0; from < k; ++from)
            for (int to = 0; to < k; ++to)
                for (const Path& path : enumerate_paths(q, from, to, 3)) {
                    if (path.is_trivial()) continue;
                    Word w;
                    for (int ai : path.arrows()) w.push_back(k + ai);
                    auto poly = NcPolynomial::from_terms(p.generators(), {{w, Rational(1)}});
                    EXPECT(word_trace(pt, poly) == Rational());
                }
    }
    detail = "cycle traces fixed under 100 base changes, additive, zero on acyclic paths";
    return true;
}

// --- 6. Local-quiver self-reproduction ------------------------------------

bool local_self(std::string& detail) {
    for (const Quiver& q : {a2(), a3(), kronecker2(), star3(), acyclic4()}) {
        DimVector alpha(q.vertex_count());
        for (int i = 0; i < q.vertex_count(); ++i) alpha[i] = 1 + (i + 1) % 2;
        LocalData ld = local_quiver(q, canonical_semisimple(q, alpha));
        EXPECT(ld.local_quiver.vertex_count() == q.vertex_count());
        EXPECT(ld.local_quiver.arrow_counts() == q.arrow_counts());
        EXPECT(ld.alpha == alpha);
    }
    Presentation free2 = free_presentation({"x", "y"});
    for (int n = 1; n <= 3; ++n) {
        SemisimplePoint x = make_semisimple(free2, {simple_free2_point(free2, n)}, {1});
        LocalData ld = local_quiver(free2, x);
        EXPECT(ld.local_quiver.vertex_count() == 1);
        EXPECT(static_cast<int>(ld.local_quiver.arrows().size()) == n * n + 1);
        EXPECT(predicted_dim(ld, n) == 2 * n * n);
        EXPECT(tangent_dim(free2, representative(free2, x)) == 2 * n * n);
    }
    detail = "local quiver reproduces (Q, alpha); free algebra has n^2 + 1 loops";
    return true;
}

// --- 7. Smoothness dichotomy -----------------------------------------------

bool smoothness(std::string& detail) {
    // path algebras: canonical semisimple points of acyclic quivers
    for (const Quiver& q : {a2(), a3(), kronecker2()}) {
        Presentation p = path_algebra_presentation(q);
        for (int variant = 0; variant < 2; ++variant) {
            DimVector alpha(q.vertex_count());
            for (int i = 0; i < q.vertex_count(); ++i)
                alpha[i] = variant == 0 ? 1 : 1 + i % 2;
            SemisimplePoint x = embed(q, canonical_semisimple(q, alpha));
            SmoothnessReport r = smoothness_report(p, x);
            EXPECT(r.verdict == SmoothVerdict::Smooth);
            EXPECT(r.tangent_dimension == r.predicted_dimension);
        }
    }
    // a cyclic one: loop quiver at two distinct scalars
    {
        Presentation lp = path_algebra_presentation(loop_quiver());
        std::vector<RepPoint> simples;
        for (long l : {1L, 2L}) {
            Matrix m(1, 1);
            m.at(0, 0) = Rational(l);
            simples.push_back(quiver_rep_embed(QuiverRep(loop_quiver(), {1}, {{"x", m}})));
        }
        SmoothnessReport r = smoothness_report(lp, make_semisimple(lp, simples, {1, 1}));
        EXPECT(r.verdict == SmoothVerdict::Smooth);
    }
    // the fixture algebra fails at its unique one-dimensional point
    {
        Presentation b = fixture_b_presentation();
        RepPoint o = verify_point(b, {{"x", Matrix(1, 1)}, {"y", Matrix(1, 1)}}, 1);
        SmoothnessReport r = smoothness_report(b, make_semisimple(b, {o}, {1}));
        EXPECT(r.tangent_dimension == 2);
        EXPECT(r.obstructed);
        EXPECT(r.verdict == SmoothVerdict::SingularOrNonreduced);
    }
    detail = "path algebras smooth everywhere; fixture algebra flagged (tangent 2, obstructed)";
    return true;
}

// --- 8. Filtration fixture --------------------------------------------------

bool filtration_fixture(std::string& detail) {
    FinDimAlgebra b = fixture_b_algebra();
    FiltrationProfile p = commutator_filtration(b);
    EXPECT(p.dims == (std::vector<int>{4, 1, 0}));
    EXPECT(p.nil_level() == 1);
    Vec xy_minus_yx(4, Rational());
    xy_minus_yx[3] = Rational(2); // xy - yx = 2 xy in the basis 1, x, y, xy
    EXPECT(p.subspaces[1].dim() == 1);
    EXPECT(p.subspaces[1].contains(xy_minus_yx));
    EXPECT(!nil_d_test(b, 0));
    EXPECT(nil_d_test(b, 1));

    for (const FinDimAlgebra& c : {diagonal_algebra(3), truncated_poly_algebra()}) {
        FiltrationProfile cp = commutator_filtration(c);
        EXPECT(cp.dims.size() >= 2 && cp.dims[1] == 0);
        EXPECT(nil_d_test(c, 0));
    }

    FinDimAlgebra m2 = matrix_algebra2();
    for (int d = 0; d <= 8; ++d) EXPECT(!nil_d_test(m2, d));
    EXPECT(commutator_filtration(m2).dims == (std::vector<int>{4, 4}));

    detail = "profile (4,1,0) with F^-1 = span(xy - yx); commutative in nil_0; M_2 never";
    return true;
}

// --- 9. Trace-reduction identity --------------------------------------------

bool trace_reduction(std::string& detail) {
    Rng rng(209);
    for (int n = 2; n <= 3; ++n) {
        for (int m = n + 1; m <= 2 * n; ++m) {
            TracePolynomial red = trace_reduce(m, n);
            EXPECT(red.max_symbol() <= n);
            for (int trial = 0; trial < 100; ++trial) {
                Matrix a = rng.int_matrix(n, n, -9, 9);
                std::map<int, Rational> nu;
                for (int k = 1; k <= n; ++k) nu[k] = a.pow(k).trace();
                EXPECT(red.evaluate(nu) == a.pow(m).trace());
            }
        }
    }
    detail = "tr(a^m) equals its reduction on 100 random matrices per (n, m)";
    return true;
}

// --- 10. Connecting-morphism axiom ------------------------------------------

bool connecting_morphisms(std::string& detail) {
    Rng rng(210);
    Presentation free2 = free_presentation({"x", "y"});

    // all words in x, y of length <= 4
    std::vector<NcPolynomial> words;
    std::function<void(Word)> fill = [&](Word w) {
        words.push_back(NcPolynomial::from_terms({"x", "y"}, {{w, Rational(1)}}));
        if (w.size() == 4) return;
        for (int g = 0; g < 2; ++g) {
            Word next = w;
            next.push_back(g);
            fill(next);
        }
    };
    fill({});

    for (int n = 2; n <= 6; ++n) {
        for (int trial = 0; trial < 3; ++trial) {
            // random composition of n, grouped into (dimension, multiplicity)
            std::vector<int> parts;
            int left = n;
            while (left > 0) {
                int p = rng.uniform(1, left);
                parts.push_back(p);
                left -= p;
            }
            std::map<int, int> grouped; // dimension -> multiplicity
            for (int p : parts) ++grouped[p];

            std::vector<RepPoint> simples;
            std::vector<int> mults;
            int offset = 0;
            for (const auto& [d, m] : grouped) {
                simples.push_back(simple_free2_point(free2, d, offset));
                mults.push_back(m);
                offset += 7; // distinct diagonals keep equal-dimension simples apart
            }
            SemisimplePoint x = make_semisimple(free2, simples, mults);
            RepPoint rep = representative(free2, x);
            EXPECT(rep.dim() == n);

            // trace additivity over the decomposition, every word up to length 4
            for (const NcPolynomial& w : words) {
                Rational sum;
                for (std::size_t i = 0; i < simples.size(); ++i)
                    sum += Rational(mults[i]) * word_trace(simples[i], w);
                EXPECT(word_trace(rep, w) == sum);
            }

            int expected_label = 0;
            for (int m : mults) expected_label += m;
            EXPECT(strata_label(x) == expected_label);
            EXPECT(static_cast<int>(parts.size()) == expected_label);
            EXPECT(strata_check(free2, x));
        }
    }
    detail = "trace additivity for words <= 4; torus dimension counts summands";
    return true;
}

// --- 11. CLI determinism and round-trip --------------------------------------

struct TempDir {
    fs::path dir;
    TempDir() {
        dir = fs::temp_directory_path() / ("repca_acc_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~TempDir() { fs::remove_all(dir); }
    std::string write(const std::string& name, const std::string& content) {
        fs::path p = dir / name;
        std::ofstream(p) << content;
        return p.string();
    }
};

int run_capture(const std::vector<std::string>& args, std::string* out_text = nullptr) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    if (out_text) *out_text = out.str();
    return code;
}

bool cli_behavior(std::string& detail) {
    TempDir tmp;
    Rng rng(211);

    const std::string quiver = tmp.write("q.json", R"({"vertices": 2, "arrows": [
        {"id": "a", "source": 0, "target": 1}, {"id": "b", "source": 1, "target": 0}]})");
    const std::string rep = tmp.write("rep.json", R"({
        "quiver": {"vertices": 2, "arrows": [
            {"id": "a", "source": 0, "target": 1}, {"id": "b", "source": 1, "target": 0}]},
        "dim_vector": [1, 2],
        "arrow_matrices": {"a": [["1"], ["-2"]], "b": [["1/3", "5"]]}})");
    const std::string algebra = tmp.write("b.json", R"({
        "dim": 4, "basis": ["1", "x", "y", "xy"], "unit": [1, 0, 0, 0],
        "mul": [
            [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]],
            [[0,1,0,0],[0,0,0,0],[0,0,0,1],[0,0,0,0]],
            [[0,0,1,0],[0,0,0,-1],[0,0,0,0],[0,0,0,0]],
            [[0,0,0,1],[0,0,0,0],[0,0,0,0],[0,0,0,0]]
        ]})");

    // deterministic reruns, byte for byte
    const std::vector<std::vector<std::string>> invocations = {
        {"chpoly", "--n", "3"},
        {"cycles", "--quiver", quiver, "--max-len", "4"},
        {"invariants", "--quiver", quiver, "--rep", rep},
        {"blocks", "--quiver", quiver, "--n", "3"},
        {"nilfilt", "--algebra", algebra},
        {"abelianize", "--algebra", algebra},
        {"tracereduce", "--n", "2", "--m", "4"},
    };
    for (const auto& inv : invocations) {
        std::string first, second;
        EXPECT(run_capture(inv, &first) == 0);
        EXPECT(run_capture(inv, &second) == 0);
        EXPECT(first == second);
        EXPECT(!first.empty());
    }

    // spec'd outputs
    {
        std::string out;
        EXPECT(run_capture({"cycles", "--quiver", quiver, "--max-len", "4"}, &out) == 0);
        EXPECT(Json::parse(out) == Json::parse(R"(["ba","baba"])"));
        EXPECT(run_capture({"nilfilt", "--algebra", algebra}, &out) == 0);
        Json nil = Json::parse(out);
        EXPECT(nil["dims"] == Json::parse("[4,1,0]"));
        EXPECT(nil["nil_d"] == 1);
    }

    // round-trip across schemas
    for (int trial = 0; trial < 50; ++trial) {
        Quiver q = rng.quiver(4, 6, true);
        EXPECT(parse_quiver(dump_quiver(q)) == q);
        Matrix m = rng.rational_matrix(rng.uniform(1, 4), rng.uniform(1, 4), 9, 7);
        EXPECT(parse_matrix(dump_matrix(m), "rt") == m);
    }
    {
        Presentation b = fixture_b_presentation();
        EXPECT(parse_presentation(dump_presentation(b)) == b);
        FinDimAlgebra alg = parse_algebra(read_json_file(algebra));
        FinDimAlgebra back = parse_algebra(dump_algebra(alg));
        EXPECT(back.mul_table() == alg.mul_table());
        QuiverRep qr = parse_quiver_rep(read_json_file(rep));
        EXPECT(parse_quiver_rep(dump_quiver_rep(qr)) == qr);
    }

    // 1000 fuzzed malformed inputs: always exit 2, never a crash
    std::uniform_int_distribution<int> byte(32, 126);
    int fuzzed = 0;
    const std::vector<std::string> subs = {"cycles", "nilfilt", "verify", "chcheck"};
    for (int trial = 0; trial < 250; ++trial) {
        std::string payload;
        const int len = rng.uniform(0, 60);
        for (int i = 0; i < len; ++i) payload.push_back(static_cast<char>(byte(rng.engine())));
        // make sure it is not accidentally a valid quiver/algebra document
        payload = "{" + payload;
        std::string f = tmp.write("fuzz.json", payload);
        for (const std::string& sub : subs) {
            std::vector<std::string> args;
            if (sub == "cycles")
                args = {"cycles", "--quiver", f, "--max-len", "2"};
            else if (sub == "nilfilt")
                args = {"nilfilt", "--algebra", f};
            else if (sub == "verify")
                args = {"verify", "--presentation", f, "--point", f};
            else
                args = {"chcheck", "--n", "2", "--matrix", f};
            EXPECT(run_capture(args) == 2);
            ++fuzzed;
        }
    }
    EXPECT(fuzzed == 1000);

    detail = "byte-identical reruns; schema round-trips; 1000 fuzzed inputs exit 2";
    return true;
}

} // namespace

int main() {
    Harness h;
    h.criterion(1, "Cayley-Hamilton identity", ch_identity);
    h.criterion(2, "Newton-coefficient oracle", newton_oracle);
    h.criterion(3, "Amitsur-Levitzki", amitsur_levitzki);
    h.criterion(4, "Euler-form/Ext consistency", euler_ext);
    h.criterion(5, "invariance suite", invariance);
    h.criterion(6, "local-quiver self-reproduction", local_self);
    h.criterion(7, "smoothness dichotomy", smoothness);
    h.criterion(8, "filtration fixture", filtration_fixture);
    h.criterion(9, "trace-reduction identity", trace_reduction);
    h.criterion(10, "connecting-morphism axiom", connecting_morphisms);
    h.criterion(11, "CLI determinism and round-trip", cli_behavior);
    if (h.failures == 0)
        std::cout << "all criteria passed\n";
    else
        std::cout << h.failures << " criteria failed\n";
    return h.failures;
}
