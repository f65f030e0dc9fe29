// Command-line front end: exact constructions, bound catalog, exhaustive
// rank profiling, and subspace search over prime fields.
//
// Exit codes: 0 pass/found, 1 fail/not-found, 2 usage or invalid params,
// 3 budget exceeded.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "rankrange/codes.hpp"
#include "rankrange/constructions.hpp"
#include "rankrange/echelon.hpp"
#include "rankrange/errors.hpp"
#include "rankrange/forms.hpp"
#include "rankrange/io.hpp"
#include "rankrange/search.hpp"

using nlohmann::json;
using namespace rankrange;

namespace {

json profile_json(const RankProfile& prof) {
    json hist = json::object();
    for (const auto& [rk, cnt] : prof.histogram)
        hist[std::to_string(rk)] = cnt;
    return {{"histogram", hist},
            {"min_rank", prof.min_rank},
            {"max_rank", prof.max_rank},
            {"total", prof.total}};
}

json report_json(const VerificationReport& report) {
    json checks = json::array();
    for (const auto& c : report.checks)
        checks.push_back(
            {{"name", c.name}, {"pass", c.pass}, {"details", c.details}});
    return {{"checks", checks}, {"all_pass", report.all_pass()}};
}

std::string matrix_text(const Mat& A) {
    std::ostringstream os;
    write_matrix(os, A);
    return os.str();
}

struct GlobalOpts {
    std::uint64_t budget = kDefaultElementBudget;
    unsigned threads = 1;
    std::uint64_t seed = 0;
    bool seed_given = false;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Affine matrix spaces with rank in a range over F_p"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--budget", g.budget, "element enumeration budget");
    app.add_option("--threads", g.threads, "worker threads for scans");
    auto* seed_opt = app.add_option("--seed", g.seed, "PRNG seed");

    // bounds
    std::string family;
    std::int64_t bm = 0, bn = 0, bs = 0, br = 0;
    auto* bounds_cmd = app.add_subcommand("bounds", "evaluate a catalog bound");
    bounds_cmd->add_option("--family", family)->required();
    bounds_cmd->add_option("--m", bm);
    bounds_cmd->add_option("--n", bn);
    bounds_cmd->add_option("--s", bs);
    bounds_cmd->add_option("--r", br);

    // construct / verify
    std::uint64_t p = 0;
    std::string out_path, in_path;
    auto* construct_cmd =
        app.add_subcommand("construct", "build an extremal family");
    construct_cmd->add_option("--family", family)->required();
    construct_cmd->add_option("--m", bm);
    construct_cmd->add_option("--n", bn);
    construct_cmd->add_option("--s", bs);
    construct_cmd->add_option("--r", br);
    construct_cmd->add_option("--p", p);
    construct_cmd->add_option("--out", out_path);

    auto* verify_cmd =
        app.add_subcommand("verify", "build a family and check its claims");
    verify_cmd->add_option("--family", family)->required();
    verify_cmd->add_option("--m", bm);
    verify_cmd->add_option("--n", bn);
    verify_cmd->add_option("--s", bs);
    verify_cmd->add_option("--r", br);
    verify_cmd->add_option("--p", p);

    auto* scan_cmd =
        app.add_subcommand("scan", "exhaustive rank profile of a space");
    scan_cmd->add_option("--in", in_path)->required();

    // search
    std::size_t dim = 0;
    bool skew = false, echelon = false, exhaustive = false;
    std::uint64_t samples = 0;
    auto* search_cmd =
        app.add_subcommand("search", "look for a space of given dimension");
    search_cmd->add_option("--m", bm)->required();
    search_cmd->add_option("--n", bn)->required();
    search_cmd->add_option("--s", bs)->required();
    search_cmd->add_option("--r", br)->required();
    search_cmd->add_option("--p", p)->required();
    search_cmd->add_option("--dim", dim)->required();
    search_cmd->add_flag("--skew", skew);
    search_cmd->add_flag("--echelon", echelon);
    search_cmd->add_flag("--exhaustive", exhaustive);
    search_cmd->add_option("--samples", samples);

    auto* nf_cmd =
        app.add_subcommand("normal-form", "skew congruence normal form");
    nf_cmd->add_option("--in", in_path)->required();

    auto* pivot_cmd =
        app.add_subcommand("pivot", "pivot profile of an all-echelon space");
    pivot_cmd->add_option("--in", in_path)->required();

    auto* code_cmd =
        app.add_subcommand("code-params", "rank-metric code parameters");
    code_cmd->add_option("--in", in_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    g.seed_given = seed_opt->count() > 0;

    try {
        if (*bounds_cmd) {
            auto fam = bound_family_from_name(family);
            if (!fam) throw InvalidParams("unknown bound family: " + family);
            std::cout << bound({*fam, bm, bn, bs, br}) << '\n';
            return 0;
        }

        if (*construct_cmd || *verify_cmd) {
            auto fam = construct_family_from_name(family);
            if (!fam)
                throw InvalidParams("unknown construct family: " + family);
            Fp f(*fam == ConstructFamily::CounterexampleF3 ? 3 : p);
            if (*construct_cmd) {
                AffineSpace space = [&] {
                    switch (*fam) {
                        case ConstructFamily::RangeMxn:
                            return construct_range(bm, bn, bs, br, f);
                        case ConstructFamily::EchelonConstant:
                            return construct_echelon_constant(bm, bn, br, f);
                        case ConstructFamily::EchelonRange:
                            return construct_echelon_range(bm, bn, bs, br, f);
                        case ConstructFamily::CounterexampleF3:
                        default:
                            return construct_counterexample_f3();
                    }
                }();
                if (!out_path.empty()) write_space_file(out_path, space);
                std::cout << json{{"family", family},
                                  {"dim", space.dim()},
                                  {"space", space_to_json(space)}}
                                 .dump(2)
                          << '\n';
                return 0;
            }
            VerificationReport report =
                verify_family(*fam, bm, bn, bs, br, f, g.budget, g.seed,
                              g.threads);
            std::cout << report_json(report).dump(2) << '\n';
            return report.all_pass() ? 0 : 1;
        }

        if (*scan_cmd) {
            AffineSpace space = read_space_file(in_path);
            RankProfile prof = space.rank_profile(g.budget, g.threads);
            std::cout << json{{"dim", space.dim()},
                              {"profile", profile_json(prof)}}
                             .dump(2)
                      << '\n';
            return 0;
        }

        if (*search_cmd) {
            if (!exhaustive && samples == 0)
                throw InvalidParams(
                    "choose --exhaustive or --samples N --seed S");
            if (!exhaustive && !g.seed_given)
                throw InvalidParams("--samples requires an explicit --seed");
            SearchSpec spec{
                static_cast<std::size_t>(bm), static_cast<std::size_t>(bn),
                static_cast<std::size_t>(bs), static_cast<std::size_t>(br),
                Fp(p),  skew ? Ambient::Skew : Ambient::Full,
                echelon, dim, exhaustive, samples, g.seed};
            SearchOutcome out = exists_affine_of_dim(spec, g.budget);
            json j{{"found", out.witness.has_value()},
                   {"mode", exhaustive ? "exhaustive" : "random"},
                   {"cost",
                    {{"candidates", out.cost.candidates},
                     {"elements_scanned", out.cost.elements_scanned}}}};
            if (!exhaustive) j["seed"] = g.seed;
            if (out.witness) j["witness"] = space_to_json(*out.witness);
            std::cout << j.dump(2) << '\n';
            return out.witness ? 0 : 1;
        }

        if (*nf_cmd) {
            Mat M = read_matrix_file(in_path);
            SkewNormalForm nf = skew_normal_form(M);
            Mat reconstructed = nf.H.transpose() * M * nf.H;
            std::cout << json{{"r", nf.r},
                              {"d", nf.d},
                              {"H", matrix_text(nf.H)},
                              {"tHMH", matrix_text(reconstructed)}}
                             .dump(2)
                      << '\n';
            return 0;
        }

        if (*pivot_cmd) {
            AffineSpace space = read_space_file(in_path);
            if (!all_echelon(space, g.budget))
                throw InvalidParams("space is not all-echelon");
            PivotProfile prof = pivot_profile(space);
            Mat witness = find_full_pivot_matrix(space);
            json jmap = json::object();
            for (const auto& [i, ji] : prof.j) jmap[std::to_string(i)] = ji;
            std::cout << json{{"P", prof.P},
                              {"j", jmap},
                              {"witness", matrix_text(witness)}}
                             .dump(2)
                      << '\n';
            return 0;
        }

        if (*code_cmd) {
            AffineSpace space = read_space_file(in_path);
            CodeParams params = weight_enumerator(space, g.budget);
            json hist = json::object();
            for (const auto& [rk, cnt] : params.distance_enumerator)
                hist[std::to_string(rk)] = cnt;
            json j{{"cardinality", params.cardinality},
                   {"distance_enumerator", hist},
                   {"singleton_ok",
                    space.dim() > 0 ? json(singleton_check(space, g.budget))
                                    : json(nullptr)}};
            if (params.min_distance)
                j["min_distance"] = *params.min_distance;
            else
                j["degenerate"] = true;
            std::cout << j.dump(2) << '\n';
            return 0;
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
