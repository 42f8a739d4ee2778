#include "repca/cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "repca/errors.hpp"
#include "repca/json_io.hpp"

namespace repca {

namespace {

struct Options {
    std::optional<std::string> quiver, rep, presentation, point, points, matrix, matrices,
        algebra, simples, g, left, right, output;
    int n = 0, m = 0, from = 0, to = 0;
    std::optional<int> max_len, total_n;
};

void write_result(const Json& result, const Options& opt, std::ostream& out) {
    const std::string text = result.dump(2) + "\n";
    if (opt.output) {
        std::ofstream f(*opt.output);
        if (!f) throw ValidationError("cannot open output file \"" + *opt.output + "\"");
        f << text;
    } else {
        out << text;
    }
}

int bound_or_default(const Options& opt, std::optional<int> fallback_n) {
    // default length bound is n^2, the generating bound for cycle traces
    if (opt.max_len) return *opt.max_len;
    if (opt.total_n) return *opt.total_n * *opt.total_n;
    if (fallback_n) return *fallback_n * *fallback_n;
    throw ValidationError("either --max-len or --n is required");
}

Json cmd_chpoly(const Options& opt) {
    if (opt.n < 1) throw ValidationError("--n must be >= 1");
    return dump_ch_poly(ch_coefficients(opt.n));
}

Json cmd_chcheck(const Options& opt) {
    if (opt.n < 1) throw ValidationError("--n must be >= 1");
    Matrix a = parse_matrix(read_json_file(*opt.matrix), "matrix");
    Matrix r = ch_check(a, opt.n);
    return Json{{"zero", r.is_zero()}, {"result", dump_matrix(r)}};
}

Json cmd_tracereduce(const Options& opt) {
    if (opt.n < 1) throw ValidationError("--n must be >= 1");
    if (opt.m <= opt.n) throw ValidationError("--m must exceed --n");
    return Json{{"m", opt.m}, {"n", opt.n}, {"terms", dump_trace_poly(trace_reduce(opt.m, opt.n))}};
}

Json cmd_stdid(const Options& opt) {
    if (opt.m < 1) throw ValidationError("--m must be >= 1");
    Json file = read_json_file(*opt.matrices);
    if (!file.is_array()) throw ValidationError("matrices file: expected an array");
    std::vector<Matrix> args;
    for (const Json& j : file) args.push_back(parse_matrix(j, "matrix"));
    Matrix r = standard_identity(opt.m, args);
    return Json{{"zero", r.is_zero()}, {"result", dump_matrix(r)}};
}

Json cmd_paths(const Options& opt) {
    Quiver q = parse_quiver(read_json_file(*opt.quiver));
    if (!opt.max_len) throw ValidationError("--max-len is required");
    Json arr = Json::array();
    for (const Path& p : enumerate_paths(q, opt.from, opt.to, *opt.max_len))
        arr.push_back(dump_path(q, p));
    return arr;
}

Json cmd_cycles(const Options& opt) {
    Quiver q = parse_quiver(read_json_file(*opt.quiver));
    Json arr = Json::array();
    for (const Necklace& n : enumerate_necklaces(q, bound_or_default(opt, std::nullopt)))
        arr.push_back(n.display(q));
    return arr;
}

Json cmd_invariants(const Options& opt) {
    Quiver q = parse_quiver(read_json_file(*opt.quiver));
    QuiverRep rep = parse_quiver_rep(read_json_file(*opt.rep));
    if (rep.quiver() != q)
        throw PreconditionError("quiver_mismatch",
                                "representation lives on a different quiver");
    int bound = bound_or_default(opt, rep.total());
    Json out = Json::object();
    for (const CycleTrace& c : cycle_generators(q, rep.dim_vector(), bound))
        out[c.necklace.display(q)] = evaluate_cycle(c, rep).str();
    return out;
}

Json cmd_blocks(const Options& opt) {
    Quiver q = parse_quiver(read_json_file(*opt.quiver));
    BlockDecomposition bd = block_decomposition(q, bound_or_default(opt, std::nullopt));
    Json blocks = Json::array();
    for (int i = 0; i < bd.vertex_count; ++i) {
        Json row = Json::array();
        for (int j = 0; j < bd.vertex_count; ++j) {
            Json cell = Json::array();
            for (const Path& p : bd.blocks[i][j]) cell.push_back(dump_path(q, p));
            row.push_back(std::move(cell));
        }
        blocks.push_back(std::move(row));
    }
    return Json{{"bound", bd.bound}, {"blocks", std::move(blocks)}};
}

Json cmd_verify(const Options& opt) {
    Presentation p = parse_presentation(read_json_file(*opt.presentation));
    RepPoint pt = parse_rep_point(read_json_file(*opt.point), p);
    return Json{{"valid", true}, {"n", pt.dim()}};
}

Json cmd_conjugate(const Options& opt) {
    Presentation p = parse_presentation(read_json_file(*opt.presentation));
    RepPoint pt = parse_rep_point(read_json_file(*opt.point), p);
    Matrix g = parse_matrix(read_json_file(*opt.g), "g");
    return dump_rep_point(conjugate(p, pt, g));
}

Json cmd_homext(const Options& opt) {
    if (opt.presentation) {
        Presentation p = parse_presentation(read_json_file(*opt.presentation));
        RepPoint s = parse_rep_point(read_json_file(*opt.left), p);
        RepPoint t = parse_rep_point(read_json_file(*opt.right), p);
        return Json{{"hom", hom_dim_presented(p, s, t)},
                    {"ext1", ext1_dim_presented(p, s, t)}};
    }
    QuiverRep v = parse_quiver_rep(read_json_file(*opt.left));
    QuiverRep w = parse_quiver_rep(read_json_file(*opt.right));
    if (v.quiver() != w.quiver())
        throw PreconditionError("quiver_mismatch", "representations live on different quivers");
    int h = hom_dim(v, w);
    int e = ext1_dim_quiver(v, w);
    return Json{{"hom", h},
                {"ext1", e},
                {"euler", euler_form(v.quiver(), v.dim_vector(), w.dim_vector())}};
}

Json cmd_tangent(const Options& opt) {
    Presentation p = parse_presentation(read_json_file(*opt.presentation));
    RepPoint pt = parse_rep_point(read_json_file(*opt.point), p);
    return Json{{"tangent_dim", tangent_dim(p, pt)}};
}

Json cmd_localquiver(const Options& opt) {
    if (opt.presentation && opt.quiver)
        throw ValidationError("give either --presentation or --quiver, not both");
    Json simples = read_json_file(*opt.simples);
    if (opt.presentation) {
        Presentation p = parse_presentation(read_json_file(*opt.presentation));
        return dump_local_data(local_quiver(p, parse_simples(simples, p)));
    }
    if (!opt.quiver) throw ValidationError("--presentation or --quiver is required");
    Quiver q = parse_quiver(read_json_file(*opt.quiver));
    QuiverSemisimplePoint x = parse_quiver_simples(simples);
    if (x.simples[0].quiver() != q)
        throw PreconditionError("quiver_mismatch", "simples live on a different quiver");
    return dump_local_data(local_quiver(q, x));
}

Json cmd_smooth(const Options& opt) {
    Presentation p = parse_presentation(read_json_file(*opt.presentation));
    SemisimplePoint x = parse_simples(read_json_file(*opt.simples), p);
    SmoothnessReport r = smoothness_report(p, x);
    return Json{{"tangent_dimension", r.tangent_dimension},
                {"predicted_dimension", r.predicted_dimension},
                {"second_order_obstructed", r.obstructed},
                {"verdict", verdict_string(r.verdict)}};
}

Json cmd_strata(const Options& opt) {
    Presentation p = parse_presentation(read_json_file(*opt.presentation));
    SemisimplePoint x = parse_simples(read_json_file(*opt.simples), p);
    return Json{{"torus_dim", strata_label(x)}, {"in_image", strata_check(p, x)}};
}

Json cmd_dsum(const Options& opt) {
    Presentation p = parse_presentation(read_json_file(*opt.presentation));
    Json file = read_json_file(*opt.points);
    if (!file.is_array()) throw ValidationError("points file: expected an array");
    std::vector<RepPoint> pts;
    for (const Json& j : file) pts.push_back(parse_rep_point(j, p));
    return dump_rep_point(direct_sum(p, pts));
}

Json cmd_freeprod(const Options& opt) {
    Presentation a = parse_presentation(read_json_file(*opt.left));
    Presentation b = parse_presentation(read_json_file(*opt.right));
    return dump_presentation(free_product(a, b).presentation);
}

Json cmd_nilfilt(const Options& opt) {
    FinDimAlgebra a = parse_algebra(read_json_file(*opt.algebra));
    FiltrationProfile p = commutator_filtration(a);
    Json j{{"dims", p.dims}};
    auto nil = p.nil_level();
    j["nil_d"] = nil ? Json(*nil) : Json(nullptr);
    return j;
}

Json cmd_abelianize(const Options& opt) {
    FinDimAlgebra a = parse_algebra(read_json_file(*opt.algebra));
    Abelianization ab = abelianization(a);
    return Json{{"algebra", dump_algebra(ab.algebra)}, {"unit_collapsed", ab.unit_collapsed}};
}

Json cmd_semisimplify(const Options& opt) {
    QuiverRep rep = parse_quiver_rep(read_json_file(*opt.rep));
    if (opt.quiver) {
        Quiver q = parse_quiver(read_json_file(*opt.quiver));
        if (rep.quiver() != q)
            throw PreconditionError("quiver_mismatch",
                                    "representation lives on a different quiver");
    }
    return dump_quiver_simples(semisimplify_acyclic(rep));
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"exact computer algebra for quiver representations, trace identities "
                 "and commutator filtrations"};
    app.require_subcommand(1);

    std::function<Json(const Options&)> action;

    auto file_opt = [](CLI::App* cmd, const char* name, std::optional<std::string>& slot,
                       bool required = true) {
        auto* o = cmd->add_option(name, slot);
        if (required) o->required();
    };

    auto add = [&](const char* name, const char* desc,
                   Json (*fn)(const Options&)) -> CLI::App* {
        CLI::App* cmd = app.add_subcommand(name, desc);
        cmd->add_option("--output", opt.output, "write the result to a file instead of stdout");
        cmd->callback([&action, fn]() { action = fn; });
        return cmd;
    };

    CLI::App* c = add("chpoly", "formal Cayley-Hamilton polynomial of degree n", cmd_chpoly);
    c->add_option("--n", opt.n)->required();

    c = add("chcheck", "evaluate the degree-n Cayley-Hamilton identity at a matrix", cmd_chcheck);
    c->add_option("--n", opt.n)->required();
    file_opt(c, "--matrix", opt.matrix);

    c = add("tracereduce", "express nu_m through nu_1..nu_n", cmd_tracereduce);
    c->add_option("--n", opt.n)->required();
    c->add_option("--m", opt.m)->required();

    c = add("stdid", "standard identity S_2m on a list of matrices", cmd_stdid);
    c->add_option("--m", opt.m)->required();
    file_opt(c, "--matrices", opt.matrices);

    c = add("paths", "paths between two vertices up to a length bound", cmd_paths);
    file_opt(c, "--quiver", opt.quiver);
    c->add_option("--from", opt.from)->required();
    c->add_option("--to", opt.to)->required();
    c->add_option("--max-len", opt.max_len)->required();

    c = add("cycles", "necklaces (oriented cycles modulo rotation)", cmd_cycles);
    file_opt(c, "--quiver", opt.quiver);
    c->add_option("--max-len", opt.max_len);
    c->add_option("--n", opt.total_n, "total dimension; bound defaults to n^2");

    c = add("invariants", "cycle-trace invariants evaluated at a representation", cmd_invariants);
    file_opt(c, "--quiver", opt.quiver);
    file_opt(c, "--rep", opt.rep);
    c->add_option("--max-len", opt.max_len);

    c = add("blocks", "path-space block decomposition of the trace algebra", cmd_blocks);
    file_opt(c, "--quiver", opt.quiver);
    c->add_option("--max-len", opt.max_len);
    c->add_option("--n", opt.total_n, "total dimension; bound defaults to n^2");

    c = add("verify", "check that a matrix tuple satisfies the relations", cmd_verify);
    file_opt(c, "--presentation", opt.presentation);
    file_opt(c, "--point", opt.point);

    c = add("conjugate", "conjugate a representation point", cmd_conjugate);
    file_opt(c, "--presentation", opt.presentation);
    file_opt(c, "--point", opt.point);
    file_opt(c, "--g", opt.g);

    c = add("homext", "Hom and Ext^1 dimensions between two representations", cmd_homext);
    file_opt(c, "--presentation", opt.presentation, false);
    file_opt(c, "--left", opt.left);
    file_opt(c, "--right", opt.right);

    c = add("tangent", "tangent-space dimension of rep_n at a point", cmd_tangent);
    file_opt(c, "--presentation", opt.presentation);
    file_opt(c, "--point", opt.point);

    c = add("localquiver", "local quiver and local dimension vector at a semisimple point",
            cmd_localquiver);
    file_opt(c, "--presentation", opt.presentation, false);
    file_opt(c, "--quiver", opt.quiver, false);
    file_opt(c, "--simples", opt.simples);

    c = add("smooth", "smoothness diagnostic at a semisimple point", cmd_smooth);
    file_opt(c, "--presentation", opt.presentation);
    file_opt(c, "--simples", opt.simples);

    c = add("strata", "stabilizer torus dimension and connecting-morphism check", cmd_strata);
    file_opt(c, "--presentation", opt.presentation);
    file_opt(c, "--simples", opt.simples);

    c = add("dsum", "block-diagonal direct sum of representation points", cmd_dsum);
    file_opt(c, "--presentation", opt.presentation);
    file_opt(c, "--points", opt.points);

    c = add("freeprod", "free product of two presentations", cmd_freeprod);
    file_opt(c, "--left", opt.left);
    file_opt(c, "--right", opt.right);

    c = add("nilfilt", "commutator filtration profile of a finite-dimensional algebra",
            cmd_nilfilt);
    file_opt(c, "--algebra", opt.algebra);

    c = add("abelianize", "quotient by the commutator ideal", cmd_abelianize);
    file_opt(c, "--algebra", opt.algebra);

    c = add("semisimplify", "Jordan-Hoelder factors of an acyclic quiver representation",
            cmd_semisimplify);
    file_opt(c, "--rep", opt.rep);
    file_opt(c, "--quiver", opt.quiver, false);

    auto error_json = [&err](const std::string& kind, const std::string& detail) {
        err << Json{{"error", kind}, {"detail", detail}}.dump(2) << "\n";
    };

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        Json result = action(opt);
        write_result(result, opt, out);
        return 0;
    } catch (const CLI::CallForHelp&) {
        out << app.help() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        error_json("validation", e.what());
        return 2;
    } catch (const ValidationError& e) {
        error_json(e.kind(), e.what());
        return 2;
    } catch (const PreconditionError& e) {
        error_json(e.kind(), e.what());
        return 3;
    } catch (const Json::exception& e) {
        error_json("validation", e.what());
        return 2;
    } catch (const std::exception& e) {
        error_json("internal", e.what());
        return 4;
    }
}

} // namespace repca
