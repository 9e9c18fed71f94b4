#include "minkarr/constructions.hpp"
#include "minkarr/json_io.hpp"
#include "minkarr/probabilistic.hpp"
#include "minkarr/search.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace minkarr;

namespace {

// Exit codes: 0 success, 1 condition failure or miss, 2 malformed input.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Miss : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json read_document(const std::string& path) {
    if (path.empty() || path == "-")
        return parse_json(std::cin);
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    return parse_json(in);
}

int dim_suffix(const std::string& arg, int fallback) {
    const auto colon = arg.find(':');
    if (colon == std::string::npos)
        return fallback;
    try {
        const int d = std::stoi(arg.substr(colon + 1));
        if (d < 1)
            throw InputError("dimension must be positive in " + arg);
        return d;
    } catch (const std::logic_error&) {
        throw InputError("bad dimension in " + arg);
    }
}

// A body file, or a builtin: cube:d, cross:d, simplex:d, ball:d, triangle, disc, segment.
ConvexBody resolve_body(const std::string& arg) {
    if (std::filesystem::exists(arg))
        return body_from_json(read_document(arg));
    const std::string name = arg.substr(0, arg.find(':'));
    if (name == "triangle")
        return reference_triangle();
    if (name == "disc")
        return ConvexBody::ball(2, 1);
    if (name == "segment")
        return segment();
    if (name == "cube")
        return cube(dim_suffix(arg, 2));
    if (name == "cross")
        return cross_polytope(dim_suffix(arg, 2));
    if (name == "simplex")
        return centered_simplex(dim_suffix(arg, 2));
    if (name == "ball")
        return ConvexBody::ball(dim_suffix(arg, 2), 1);
    throw InputError("unknown body " + arg + " (not a file or builtin name)");
}

Rational parse_rational_flag(const std::string& s) {
    try {
        return parse_rational(s);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

json points_json(const std::vector<VecD>& pts) {
    json out = json::array();
    for (const auto& p : pts)
        out.push_back(p);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minkowski arrangements of convex bodies: verification, constructions, bounds, sampling, search"};
    app.require_subcommand(1);

    std::uint64_t seed = 1;
    int threads = 1;

    // verify
    auto* verify = app.add_subcommand("verify", "verify an arrangement JSON document (file or stdin)");
    std::string verify_path;
    std::string mode = "minkowski";
    bool intersecting = false;
    verify->add_option("file", verify_path, "arrangement file; stdin when omitted or '-'");
    verify->add_option("--mode", mode, "condition to check")->check(CLI::IsMember({"strict", "minkowski"}));
    verify->add_flag("--intersecting", intersecting, "also require pairwise intersection");
    verify->add_option("--threads", threads)->check(CLI::PositiveNumber);

    // construct
    auto* construct = app.add_subcommand("construct", "write a named or parametric witness");
    construct->require_subcommand(1);
    int d = 2;
    int k = 1;
    std::string witness_name;
    auto* c_grid = construct->add_subcommand("cube-grid", "3^d translates of the cube");
    c_grid->add_option("--d", d)->check(CLI::Range(1, 8));
    auto* c_ico = construct->add_subcommand("icosahedron", "12 strict translates of the unit ball in R^3");
    auto* c_amp = construct->add_subcommand("amplifier", "2^k 12 strict translates of C^k x B^3");
    c_amp->add_option("--k", k)->check(CLI::Range(0, 6));
    auto* c_tri = construct->add_subcommand("triangle-product", "10^floor(d/2) translates of a triangle product");
    c_tri->add_option("--d", d)->check(CLI::Range(1, 8));
    auto* c_named = construct->add_subcommand("named", "a shipped witness file");
    c_named->add_option("--name", witness_name)->required()->check(CLI::IsMember({"circles8", "triangles10"}));

    // bound
    auto* bound = app.add_subcommand("bound", "evaluate an upper or lower bound");
    bound->require_subcommand(1);
    std::string body_arg;
    std::string lambda_text = "1";
    auto* b_pack = bound->add_subcommand("packing-upper", "translative packing bound for lambda-homothets");
    b_pack->add_option("--body", body_arg)->required();
    b_pack->add_option("--lambda", lambda_text);
    auto* b_kappa = bound->add_subcommand("kappa-upper", "upper bound on intersecting Minkowski arrangements");
    b_kappa->add_option("--body", body_arg)->required();
    auto* b_centroid = bound->add_subcommand("centroid-kappa-upper", "body-free bound for the centroid");
    b_centroid->add_option("--d", d)->required()->check(CLI::PositiveNumber);
    auto* b_symmetric = bound->add_subcommand("symmetric-kappa-upper", "body-free bound for symmetric bodies");
    b_symmetric->add_option("--d", d)->required()->check(CLI::PositiveNumber);
    auto* b_chain = bound->add_subcommand("chain-upper", "bound on boundary chains");
    b_chain->add_option("--d", d)->required()->check(CLI::PositiveNumber);
    auto* b_hadwiger = bound->add_subcommand("hadwiger-lower", "lower bound on strict translative arrangements");
    b_hadwiger->add_option("--d", d)->required()->check(CLI::PositiveNumber);

    // sample
    auto* sample = app.add_subcommand("sample", "randomized constructions");
    sample->require_subcommand(1);
    RandomConfig rcfg;
    std::string oversample_text = "1";
    std::size_t count = 10;
    auto add_random_flags = [&](CLI::App* sub) {
        sub->add_option("--body", body_arg)->required();
        sub->add_option("--seed", seed);
        sub->add_option("--threads", threads)->check(CLI::PositiveNumber);
    };
    auto* s_uniform = sample->add_subcommand("uniform", "uniform points of a body");
    add_random_flags(s_uniform);
    s_uniform->add_option("--n", count);
    auto* s_strict = sample->add_subcommand("strict-translates", "strict Minkowski arrangement of translates");
    auto* s_boundary = sample->add_subcommand("boundary-points", "boundary points at pairwise distance > 1");
    for (auto* sub : {s_strict, s_boundary}) {
        add_random_flags(sub);
        sub->add_option("--oversample", oversample_text, "rational oversampling factor >= 1");
        sub->add_option("--retries", rcfg.max_retries)->check(CLI::PositiveNumber);
    }

    // search
    auto* search = app.add_subcommand("search", "simulated annealing for a planar arrangement");
    SearchConfig scfg;
    std::string search_mode = "strict";
    search->add_option("--body", body_arg)->required();
    search->add_option("--count", scfg.target_count)->check(CLI::PositiveNumber);
    search->add_option("--mode", search_mode)->check(CLI::IsMember({"strict", "minkowski"}));
    search->add_flag("--translates-only", scfg.translates_only);
    search->add_option("--lambda-lo", scfg.lambda_lo);
    search->add_option("--lambda-hi", scfg.lambda_hi);
    search->add_option("--steps", scfg.steps);
    search->add_option("--restarts", scfg.restarts);
    search->add_option("--temperature", scfg.initial_temperature);
    search->add_option("--cooling", scfg.cooling_rate);
    search->add_option("--seed", seed);
    search->add_flag("--verbose", scfg.verbose, "per-restart progress on stderr");
    search->add_option("--threads", threads)->check(CLI::PositiveNumber);

    // estimate-f
    auto* estimate = app.add_subcommand("estimate-f", "Monte Carlo estimate of P(|x - y|_K <= t)");
    double t = 1;
    std::size_t pairs = 100000;
    estimate->add_option("--body", body_arg)->required();
    estimate->add_option("--t", t)->required();
    estimate->add_option("--pairs", pairs);
    estimate->add_option("--seed", seed);
    estimate->add_option("--threads", threads)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify) {
            Arrangement A = arrangement_from_json(read_document(verify_path));
            VerificationReport rep = verify_kappa_witness(A, {threads});
            emit(to_json(rep));
            return rep.holds(mode == "strict", intersecting) ? 0 : 1;
        }
        if (*construct) {
            if (*c_grid)
                emit(to_json(cube_grid_witness(d)));
            else if (*c_ico)
                emit(to_json(translates_of_points(ConvexBody::ball(3, 1), icosahedron_witness())));
            else if (*c_amp) {
                ConvexBody body = amplified_body(k, ConvexBody::ball(3, 1));
                emit(to_json(translates_of_points(body, cube_product_amplifier(k, icosahedron_witness()))));
            } else if (*c_tri)
                emit(to_json(triangle_product_witness(d)));
            else
                emit(to_json(load_named_witness(witness_name)));
            return 0;
        }
        if (*bound) {
            if (*b_pack)
                emit(to_json(packing_upper(resolve_body(body_arg), parse_rational_flag(lambda_text))));
            else if (*b_kappa)
                emit(to_json(kappa_upper(resolve_body(body_arg))));
            else if (*b_centroid)
                emit(to_json(centroid_kappa_upper(d)));
            else if (*b_symmetric)
                emit(to_json(symmetric_kappa_upper(d)));
            else if (*b_chain)
                emit(to_json(chain_upper(d)));
            else
                emit(to_json(hadwiger_lower(d)));
            return 0;
        }
        if (*sample) {
            ConvexBody K = resolve_body(body_arg);
            rcfg.seed = seed;
            rcfg.threads = threads;
            rcfg.oversample_factor = parse_rational_flag(oversample_text);
            if (*s_uniform) {
                emit({{"points", points_json(sample_uniform(K, count, rcfg))}});
            } else if (*s_strict) {
                auto res = strict_translate_arrangement(K, rcfg);
                emit({{"arrangement", to_json(res.arrangement)},
                      {"target", res.target},
                      {"sampled", res.sampled},
                      {"attempts", res.attempts}});
            } else {
                auto res = boundary_strict_points(K, rcfg);
                json pts = json::array();
                for (const auto& p : res.points)
                    pts.push_back(to_json(p));
                emit({{"points", pts},
                      {"delta", res.delta},
                      {"target", res.target},
                      {"sampled", res.sampled},
                      {"attempts", res.attempts}});
            }
            return 0;
        }
        if (*search) {
            scfg.strict = search_mode == "strict";
            scfg.seed = seed;
            scfg.threads = threads;
            auto found = search_arrangement(resolve_body(body_arg), scfg);
            if (!found)
                throw Miss("no arrangement of " + std::to_string(scfg.target_count) + " members found");
            emit(to_json(*found));
            return 0;
        }
        if (*estimate) {
            rcfg.seed = seed;
            rcfg.threads = threads;
            FEstimate est = estimate_F(resolve_body(body_arg), t, pairs, rcfg);
            emit({{"t", t},
                  {"pairs", est.pairs},
                  {"estimate", est.estimate},
                  {"standard_error", est.standard_error},
                  {"bound", est.bound}});
            return 0;
        }
    } catch (const Miss& e) {
        std::cerr << "minkarr: " << e.what() << '\n';
        return 1;
    } catch (const RetriesExhausted& e) {
        std::cerr << "minkarr: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "minkarr: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
