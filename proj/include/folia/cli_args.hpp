#pragma once

#include "folia/cli.hpp"

#include <CLI11.hpp>

namespace folia {

inline int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    using cli_detail::load_json;
    using cli_detail::rationals_csv;

    CLI::App app{"folia: exact computations with foliated affine and projective structures"};
    app.require_subcommand(1);

    bool json_only = false;
    int order = cli_detail::default_order;
    unsigned jobs = 1;
    bool have_order = false, have_jobs = false;
    std::string series_path, form_path, job_path, kind, theta, branch, mu, lambda_csv, phi;
    std::string c1sq, c2;
    int mmax = 16;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--json", json_only, "emit the JSON report instead of text");
        cmd->add_option("--order", order, "series truncation order")
            ->check(CLI::Range(1, 64))
            ->each([&](const std::string&) { have_order = true; });
    };

    Json job;
    bool have_job = false;
    auto finish = [&](Json j) {
        job = std::move(j);
        have_job = true;
    };

    auto* dist = app.add_subcommand("distortion", "affine distortion f''/f' of a series germ");
    add_common(dist);
    dist->add_option("--series", series_path, "series JSON file (or -)")->required();
    dist->callback([&] {
        finish(Json{{"schema", 1},
                    {"command", "distortion"},
                    {"options", {{"order", order}}},
                    {"series", load_json(series_path)}});
    });

    auto* schw = app.add_subcommand("schwarzian", "Schwarzian derivative of a series germ");
    add_common(schw);
    schw->add_option("--series", series_path, "series JSON file (or -)")->required();
    schw->callback([&] {
        finish(Json{{"schema", 1},
                    {"command", "schwarzian"},
                    {"options", {{"order", order}}},
                    {"series", load_json(series_path)}});
    });

    auto* ang = app.add_subcommand("angle", "Fuchsian angle of a one-form or quadratic form");
    add_common(ang);
    ang->add_option("--kind", kind, "affine or projective")->required();
    ang->add_option("--form", form_path, "Laurent-form JSON file")->required();
    ang->callback([&] {
        finish(Json{{"schema", 1},
                    {"command", "angle"},
                    {"kind", kind},
                    {"form", load_json(form_path)}});
    });

    auto* ric = app.add_subcommand("riccati", "reduce a Fuchsian projective structure to an affine one");
    add_common(ric);
    ric->add_option("--form", form_path, "quadratic-form Laurent JSON file")->required();
    ric->add_option("--theta", theta, "declared angle branch p/q")->required();
    ric->callback([&] {
        finish(Json{{"schema", 1},
                    {"command", "riccati"},
                    {"options", {{"order", order}}},
                    {"form", load_json(form_path)},
                    {"theta", theta}});
    });

    auto* nf = app.add_subcommand("normalform", "formal normal form of a Christoffel symbol");
    add_common(nf);
    nf->add_option("--kind", kind, "affine or projective")->required();
    nf->add_option("--lambda", lambda_csv, "eigenvalues, comma-separated rationals")->required();
    nf->add_option("--symbol", series_path, "symbol series JSON file")->required();
    nf->add_option("--branch", branch, "branch p/q of gamma(0) (projective only)");
    nf->callback([&] {
        Json j{{"schema", 1},
               {"command", "normalform"},
               {"options", {{"order", order}}},
               {"kind", kind},
               {"lambda", rationals_csv(lambda_csv)},
               {"symbol", load_json(series_path)}};
        if (!branch.empty()) j["branch"] = branch;
        finish(std::move(j));
    });

    auto* brj = app.add_subcommand("brjuno", "small-divisor table and floating diagnostic");
    add_common(brj);
    brj->add_option("--lambda", lambda_csv, "eigenvalues, comma-separated rationals")->required();
    brj->add_option("--mu", mu, "linear coefficient p/q")->required();
    brj->add_option("--mmax", mmax, "largest multi-index size")->required()->check(CLI::Range(4, 64));
    brj->callback([&] {
        finish(Json{{"schema", 1},
                    {"command", "brjuno"},
                    {"lambda", rationals_csv(lambda_csv)},
                    {"mu", mu},
                    {"mmax", mmax}});
    });

    auto* idx = app.add_subcommand("index", "verify an index theorem on a model manifold");
    idx->require_subcommand(1);
    for (std::string which : {"affine", "projective", "baumbott"}) {
        auto* sub = idx->add_subcommand(which, which + " index verification");
        add_common(sub);
        sub->add_option("--job", job_path, "job JSON file")->required();
        if (which != "affine") sub->add_option("--phi", phi, "symmetric polynomial in x1..xk");
        sub->add_option("--jobs", jobs, "parallel per-point workers")
            ->check(CLI::Range(1u, 64u))
            ->each([&](const std::string&) { have_jobs = true; });
        sub->callback([&, which] {
            Json j = load_json(job_path);
            j["schema"] = 1;
            j["command"] = "index." + which;
            if (have_order) j["options"]["order"] = order;
            if (have_jobs) j["options"]["jobs"] = jobs;
            if (!phi.empty()) j["options"]["phi"] = phi;
            finish(std::move(j));
        });
    }

    auto* geo = app.add_subcommand("geodesic", "geodesic-field checks");
    auto* geock = geo->add_subcommand("check", "verify lift relations and gluing cocycles");
    add_common(geock);
    geock->add_option("--job", job_path, "foliation-plus-symbol JSON file")->required();
    geock->callback([&] {
        Json j = load_json(job_path);
        j["schema"] = 1;
        j["command"] = "geodesic.check";
        finish(std::move(j));
    });

    auto* sig = app.add_subcommand("signature", "surface signature harness");
    add_common(sig);
    sig->add_option("--c1sq", c1sq, "c_1^2(M) as p/q")->required();
    sig->add_option("--c2", c2, "c_2(M) as p/q")->required();
    sig->callback([&] {
        finish(Json{{"schema", 1}, {"command", "signature"}, {"c1sq", c1sq}, {"c2", c2}});
    });

    auto* runj = app.add_subcommand("run", "run a job document");
    add_common(runj);
    runj->add_option("--job", job_path, "job JSON file (or -)")->required();
    runj->add_option("--phi", phi, "override phi option");
    runj->add_option("--jobs", jobs, "parallel per-point workers")
        ->check(CLI::Range(1u, 64u))
        ->each([&](const std::string&) { have_jobs = true; });
    runj->callback([&] {
        Json j = load_json(job_path);
        if (have_order) j["options"]["order"] = order;
        if (have_jobs) j["options"]["jobs"] = jobs;
        if (!phi.empty()) j["options"]["phi"] = phi;
        finish(std::move(j));
    });

    try {
        std::vector<std::string> rev(argv.rbegin(), argv.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error (input): " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error (" << (e.kind == ErrorKind::input ? "input" : "inadmissible")
            << "): " << e.what() << "\n";
        return e.kind == ErrorKind::input ? 2 : 3;
    }
    if (!have_job) {
        err << "error (input): no job constructed\n";
        return 2;
    }
    RunResult rr = run_job(job);
    return cli_detail::emit(rr, json_only, out);
}

}  // namespace folia
