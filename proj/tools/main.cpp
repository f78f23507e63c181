// affex — batch frontend over the exact affine exterior algebra library.
// Prints canonical JSON on stdout; exit codes: 0 ok, 1 parse/usage error,
// 2 domain error.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "affex/affine.hpp"
#include "affex/boundary.hpp"
#include "affex/json_io.hpp"
#include "affex/mechanics.hpp"
#include "affex/oracle.hpp"
#include "affex/parser.hpp"

namespace {

using affex::Json;

std::string read_stdin() {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
}

Json parse_stdin_json() {
    try {
        return Json::parse(read_stdin());
    } catch (const nlohmann::json::exception& e) {
        throw affex::ParseError(std::string("invalid JSON input: ") + e.what());
    }
}

void emit(const Json& j) {
    std::cout << j.dump() << "\n";
}

struct Options {
    int dim = 3;
    int approx = -1;

    affex::Frame frame() const { return affex::Frame(dim); }

    affex::PrintOptions print() const {
        affex::PrintOptions opts;
        if (approx >= 0) opts.approx_digits = approx;
        return opts;
    }
};

Json coords_to_json(const std::vector<affex::Rational>& values,
                    const affex::PrintOptions& opts) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(affex::rational_to_json(v, opts));
    return out;
}

Json point_coords_to_json(const affex::GeometricForm& point,
                          const affex::PrintOptions& opts) {
    Json out = Json::array();
    for (int i = 1; i <= point.dimension(); ++i)
        out.push_back(
            affex::rational_to_json(point.coefficient(affex::unit_blade(i)), opts));
    return out;
}

affex::SimplexBasis basis_from_exprs(const std::vector<std::string>& exprs,
                                     const affex::Frame& frame) {
    std::vector<affex::GeometricForm> vertices;
    vertices.reserve(exprs.size());
    for (const auto& text : exprs)
        vertices.push_back(affex::evaluate_text(text, frame));
    return affex::SimplexBasis(std::move(vertices));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact affine exterior algebra of points and vectors"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    Options options;
    app.add_option("--dim", options.dim, "frame dimension (default 3)")
        ->check(CLI::Range(1, affex::kMaxDimension));
    app.add_option("--approx", options.approx,
                   "print decimal approximations alongside exact values")
        ->check(CLI::Range(0, 64));

    const auto subcommand = [&](const char* name, const char* description) {
        CLI::App* cmd = app.add_subcommand(name, description);
        cmd->fallthrough();
        return cmd;
    };

    std::string eval_expr;
    CLI::App* eval_cmd = subcommand("eval", "evaluate an expression");
    eval_cmd->add_option("expr", eval_expr, "form expression")->required();

    std::string omega_expr;
    CLI::App* omega_cmd = subcommand("omega", "boundary of an expression");
    omega_cmd->add_option("expr", omega_expr, "form expression")->required();

    std::string reduce_expr, reduce_at_expr;
    CLI::App* reduce_cmd =
        subcommand("reduce", "split a homogeneous form at a point");
    reduce_cmd->add_option("--at", reduce_at_expr, "unit-mass point expression")
        ->required();
    reduce_cmd->add_option("expr", reduce_expr, "form expression")->required();

    std::string classify_expr;
    CLI::App* classify_cmd = subcommand("classify", "classify a homogeneous form");
    classify_cmd->add_option("expr", classify_expr, "form expression")->required();

    CLI::App* barycenter_cmd = subcommand(
        "barycenter", "barycenter of weighted points (JSON on stdin)");

    std::vector<std::string> vol_exprs;
    CLI::App* vol_cmd = subcommand("vol", "affine volume of n+1 points");
    vol_cmd->add_option("points", vol_exprs, "point expressions")->required();

    std::string coords_expr;
    std::vector<std::string> coords_simplex;
    CLI::App* coords_cmd =
        subcommand("coords", "coordinates in a simplex basis (n = 3)");
    coords_cmd->add_option("--simplex", coords_simplex, "four degree-1 expressions")
        ->expected(4)
        ->required();
    coords_cmd->add_option("expr", coords_expr, "form expression")->required();

    CLI::App* area_cmd =
        subcommand("area", "polygon reduction (vertex list on stdin)");

    CLI::App* volume_cmd = subcommand(
        "volume", "closed-surface reduction (triangle list on stdin)");

    CLI::App* forces_cmd =
        subcommand("forces", "operations on force systems (JSON on stdin)");
    forces_cmd->require_subcommand(1);

    std::string forces_at_expr;
    CLI::App* forces_reduce_cmd = forces_cmd->add_subcommand(
        "reduce", "force-and-couple reduction at a point");
    forces_reduce_cmd->fallthrough();
    forces_reduce_cmd
        ->add_option("--at", forces_at_expr, "unit-mass point expression")
        ->required();

    CLI::App* forces_equiv_cmd =
        forces_cmd->add_subcommand("equiv", "mechanical equivalence of {a, b}");
    forces_equiv_cmd->fallthrough();

    CLI::App* forces_invariant_cmd =
        forces_cmd->add_subcommand("invariant", "scalar invariant (n = 3)");
    forces_invariant_cmd->fallthrough();

    CLI::App* forces_classify_cmd =
        forces_cmd->add_subcommand("classify", "system class (n = 3)");
    forces_classify_cmd->fallthrough();

    std::vector<std::string> forces_simplex;
    CLI::App* forces_edges_cmd = forces_cmd->add_subcommand(
        "edges", "decomposition along tetrahedron edges (n = 3)");
    forces_edges_cmd->fallthrough();
    forces_edges_cmd
        ->add_option("--simplex", forces_simplex, "four degree-1 expressions")
        ->expected(4)
        ->required();

    CLI::App* oracle_cmd =
        subcommand("oracle", "free-form reference route (JSON on stdin)");
    oracle_cmd->require_subcommand(1);
    CLI::App* oracle_check_cmd =
        oracle_cmd->add_subcommand("check", "quotient equality of {a, b}");
    oracle_check_cmd->fallthrough();
    CLI::App* oracle_canon_cmd =
        oracle_cmd->add_subcommand("canon", "canonical form of a free form");
    oracle_canon_cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    const affex::Frame frame = options.frame();
    const affex::PrintOptions print = options.print();

    try {
        if (eval_cmd->parsed()) {
            emit(affex::form_to_json(affex::evaluate_text(eval_expr, frame), print));
        } else if (omega_cmd->parsed()) {
            emit(affex::form_to_json(
                affex::omega(affex::evaluate_text(omega_expr, frame)), print));
        } else if (reduce_cmd->parsed()) {
            const affex::Reduction r =
                affex::reduce_at(affex::evaluate_text(reduce_expr, frame),
                                 affex::evaluate_text(reduce_at_expr, frame));
            Json out;
            out["anchored"] = affex::form_to_json(r.anchored, print);
            out["kvector"] = affex::form_to_json(r.residue, print);
            emit(out);
        } else if (classify_cmd->parsed()) {
            const affex::Classification c =
                affex::classify(affex::evaluate_text(classify_expr, frame));
            Json out;
            out["class"] = affex::to_string(c.kind);
            out["grade"] = c.grade;
            out["omega_null"] = c.omega_null;
            out["self_wedge_null"] = c.self_wedge_null;
            emit(out);
        } else if (barycenter_cmd->parsed()) {
            const auto system =
                affex::weighted_points_from_json(parse_stdin_json(), frame);
            const affex::WeightedPoint g = affex::barycenter(system);
            Json out;
            out["point"] = point_coords_to_json(g.point, print);
            out["weight"] = affex::rational_to_json(g.weight, print);
            emit(out);
        } else if (vol_cmd->parsed()) {
            std::vector<affex::GeometricForm> points;
            points.reserve(vol_exprs.size());
            for (const auto& text : vol_exprs)
                points.push_back(affex::evaluate_text(text, frame));
            emit(affex::rational_to_json(affex::vol(points), print));
        } else if (coords_cmd->parsed()) {
            const affex::SimplexBasis basis = basis_from_exprs(coords_simplex, frame);
            emit(coords_to_json(
                affex::coords(affex::evaluate_text(coords_expr, frame), basis),
                print));
        } else if (area_cmd->parsed()) {
            const auto vertices = affex::polygon_from_json(parse_stdin_json(), frame);
            const affex::PolygonReduction r = affex::reduce_polygon(vertices);
            Json out;
            out["bivector"] = affex::form_to_json(r.bivector, print);
            if (r.area) out["area"] = affex::rational_to_json(*r.area, print);
            emit(out);
        } else if (volume_cmd->parsed()) {
            const auto faces = affex::surface_from_json(parse_stdin_json(), frame);
            const affex::SurfaceReduction r = affex::reduce_closed_surface(faces);
            Json out;
            out["trivector"] = affex::form_to_json(r.trivector, print);
            out["coeff"] = affex::rational_to_json(r.coefficient, print);
            emit(out);
        } else if (forces_cmd->parsed()) {
            if (forces_equiv_cmd->parsed()) {
                const Json in = parse_stdin_json();
                if (!in.is_object() || !in.contains("a") || !in.contains("b"))
                    throw affex::ParseError("expected {\"a\": ..., \"b\": ...}");
                emit(Json(affex::equivalent(
                    affex::force_system_from_json(in.at("a"), frame),
                    affex::force_system_from_json(in.at("b"), frame))));
            } else {
                const affex::ForceSystem system =
                    affex::force_system_from_json(parse_stdin_json(), frame);
                if (forces_reduce_cmd->parsed()) {
                    const affex::PoinsotReduction r = affex::reduce_poinsot(
                        system, affex::evaluate_text(forces_at_expr, frame));
                    Json out;
                    out["at"] = affex::form_to_json(r.at, print);
                    out["resultant"] = affex::form_to_json(r.resultant, print);
                    out["couple"] = affex::form_to_json(r.couple, print);
                    emit(out);
                } else if (forces_invariant_cmd->parsed()) {
                    emit(affex::rational_to_json(affex::scalar_invariant(system),
                                                 print));
                } else if (forces_classify_cmd->parsed()) {
                    Json out;
                    out["class"] = affex::to_string(affex::classify_system(system));
                    emit(out);
                } else if (forces_edges_cmd->parsed()) {
                    const affex::SimplexBasis basis =
                        basis_from_exprs(forces_simplex, frame);
                    const auto edges = affex::edge_decomposition(system, basis);
                    emit(coords_to_json({edges.begin(), edges.end()}, print));
                }
            }
        } else if (oracle_cmd->parsed()) {
            if (oracle_check_cmd->parsed()) {
                const Json in = parse_stdin_json();
                if (!in.is_object() || !in.contains("a") || !in.contains("b"))
                    throw affex::ParseError("expected {\"a\": ..., \"b\": ...}");
                emit(Json(affex::oracle::free_equals(
                    affex::free_form_from_json(in.at("a"), options.dim),
                    affex::free_form_from_json(in.at("b"), options.dim))));
            } else if (oracle_canon_cmd->parsed()) {
                emit(affex::form_to_json(
                    affex::oracle::canonicalize(affex::free_form_from_json(
                        parse_stdin_json(), options.dim)),
                    print));
            }
        }
        return 0;
    } catch (const affex::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const affex::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
