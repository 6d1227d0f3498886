#include "folia/cli_args.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace folia;

static Json load_job(const std::string& name) {
    std::ifstream in(std::string(FOLIA_JOBS_DIR) + "/" + name);
    REQUIRE(in.good());
    return Json::parse(in);
}

static std::string jobs_path(const std::string& name) {
    return std::string(FOLIA_JOBS_DIR) + "/" + name;
}

TEST_CASE("bundled jobs run with the expected exit codes") {
    struct Expect {
        const char* file;
        int code;
    };
    for (auto [file, code] : {Expect{"p2_affine_index.json", 0},
                              Expect{"p2_projective_index.json", 0},
                              Expect{"p2_baumbott_degree1.json", 0},
                              Expect{"p2_baumbott_degree2.json", 0},
                              Expect{"p2_affine_wrong_scaling.json", 1},
                              Expect{"p3_affine_index.json", 0},
                              Expect{"p3_projective_index.json", 0},
                              Expect{"p1_poincare_hopf.json", 0},
                              Expect{"geodesic_check_p2.json", 0},
                              Expect{"schwarzian_mobius.json", 0},
                              Expect{"riccati_constant.json", 0},
                              Expect{"normalform_affine.json", 0},
                              Expect{"brjuno_poincare.json", 0},
                              Expect{"angle_logarithmic.json", 0},
                              Expect{"signature_vanishing.json", 0},
                              Expect{"signature_nonvanishing.json", 1}}) {
        CAPTURE(file);
        auto rr = run_job(load_job(file));
        REQUIRE(rr.exit_code == code);
    }
}

TEST_CASE("reports are byte-identical across runs") {
    for (const char* file : {"p2_affine_index.json", "p2_projective_index.json",
                             "brjuno_poincare.json", "geodesic_check_p2.json"}) {
        CAPTURE(file);
        Json job = load_job(file);
        auto a = run_job(job);
        auto b = run_job(job);
        REQUIRE(a.report.dump(2) == b.report.dump(2));
        REQUIRE(render_text(a.report) == render_text(b.report));
    }
}

TEST_CASE("index reports echo inputs, convention and per-point data") {
    auto rr = run_job(load_job("p2_affine_index.json"));
    const Json& rep = rr.report;
    REQUIRE(rep.at("schema") == 1);
    REQUIRE(rep.at("convention").get<std::string>().find("int h^2 = 1") != std::string::npos);
    REQUIRE(rep.at("inputs").at("c1_tf") == "-h");
    REQUIRE(rep.at("result").at("per_point").size() == 7);
    REQUIRE(rep.at("result").at("verdict") == "match");
    // every numeric in the report is an exact rational string
    for (auto& p : rep.at("result").at("per_point"))
        REQUIRE(p.at("contribution").is_string());
}

TEST_CASE("parallel per-point evaluation is deterministic") {
    Json job = load_job("p2_affine_index.json");
    auto seq = run_job(job);
    job["options"]["jobs"] = 4;
    auto par = run_job(job);
    REQUIRE(seq.report.at("result").at("per_point") == par.report.at("result").at("per_point"));
    REQUIRE(par.report.at("options").at("jobs") == 4);
}

TEST_CASE("error reports carry kinds and exit codes") {
    SECTION("malformed job document") {
        auto rr = run_job(Json{{"schema", 1}});
        REQUIRE(rr.exit_code == 2);
        REQUIRE(rr.report.at("status") == "error");
    }
    SECTION("schema violations map to input errors") {
        auto rr = run_job(Json{{"schema", 1}, {"command", "riccati"}});
        REQUIRE(rr.exit_code == 2);
    }
    SECTION("syntax errors carry the offset") {
        Json job{{"schema", 1},
                 {"command", "normalform"},
                 {"options", {{"order", 8}}},
                 {"kind", "affine"},
                 {"lambda", Json::array({"1"})},
                 {"symbol",
                  Json{{"vars", Json::array({"z"})}, {"order", 8}, {"terms", Json::object()}}}};
        job["symbol"]["terms"]["0"] = "1";
        auto ok = run_job(job);
        REQUIRE(ok.exit_code == 0);
        // requesting more precision than the input carries is an input error
        Json deep = job;
        deep["options"]["order"] = 12;
        REQUIRE(run_job(deep).exit_code == 2);
        // now a vanishing symbol: inadmissible, exit 3
        job["symbol"]["terms"].erase("0");
        job["symbol"]["terms"]["1"] = "1";
        auto bad = run_job(job);
        REQUIRE(bad.exit_code == 3);
        REQUIRE(bad.report.at("error").at("kind") == "inadmissible");
    }
    SECTION("resonance maps to exit 3") {
        Json job{{"schema", 1},
                 {"command", "riccati"},
                 {"theta", "2"},
                 {"form",
                  Json{{"var", "z"},
                       {"order", 14},
                       {"terms", Json{{"-2", "-3/2"}, {"0", "1"}}}}}};
        auto rr = run_job(job);
        REQUIRE(rr.exit_code == 3);
    }
    SECTION("missing branch reports the candidates") {
        Json job{{"schema", 1},
                 {"command", "normalform"},
                 {"kind", "projective"},
                 {"lambda", Json::array({"1"})},
                 {"symbol",
                  Json{{"vars", Json::array({"z"})},
                       {"order", 8},
                       {"terms", Json{{"0", "-2"}}}}}};
        auto rr = run_job(job);
        REQUIRE(rr.exit_code == 2);
        std::string msg = rr.report.at("error").at("message").get<std::string>();
        REQUIRE(msg.find("2") != std::string::npos);
        // irrational branch is inadmissible
        job["symbol"]["terms"]["0"] = "-3";
        auto irr = run_job(job);
        REQUIRE(irr.exit_code == 3);
        REQUIRE(irr.report.at("error").at("message").get<std::string>().find("irrational") !=
                std::string::npos);
    }
}

TEST_CASE("command-line front end") {
    std::ostringstream out, err;
    SECTION("run a bundled job") {
        int rc = run_cli({"run", "--job", jobs_path("p2_affine_index.json")}, out, err);
        REQUIRE(rc == 0);
        REQUIRE(out.str().find("verdict: match") != std::string::npos);
    }
    SECTION("json output parses and matches run_job") {
        int rc = run_cli({"run", "--job", jobs_path("p2_affine_index.json"), "--json"}, out, err);
        REQUIRE(rc == 0);
        Json rep = Json::parse(out.str());
        REQUIRE(rep == run_job(load_job("p2_affine_index.json")).report);
    }
    SECTION("index subcommand with a phi override") {
        int rc = run_cli({"index", "baumbott", "--job", jobs_path("p2_baumbott_degree2.json"),
                          "--phi", "x1*x2", "--jobs", "2"},
                         out, err);
        REQUIRE(rc == 0);
    }
    SECTION("signature flags incompatibility through the exit code") {
        int rc = run_cli({"signature", "--c1sq", "9", "--c2", "3"}, out, err);
        REQUIRE(rc == 1);
    }
    SECTION("malformed json file exits 2") {
        std::string path = "/tmp/folia_bad_job.json";
        std::ofstream(path) << "{ not json";
        int rc = run_cli({"run", "--job", path}, out, err);
        REQUIRE(rc == 2);
        std::remove(path.c_str());
    }
    SECTION("unknown flags exit 2") {
        int rc = run_cli({"signature", "--nope", "1"}, out, err);
        REQUIRE(rc == 2);
    }
    SECTION("brjuno via flags") {
        int rc = run_cli({"brjuno", "--lambda", "1,1", "--mu", "-1/2", "--mmax", "8"}, out, err);
        REQUIRE(rc == 0);
        REQUIRE(out.str().find("omega'(2) = 5/2") != std::string::npos);
        REQUIRE(out.str().find("inconclusive by construction") != std::string::npos);
    }
    SECTION("angle via flags") {
        // a job document is not a bare Laurent form: schema error, exit 2
        int rc = run_cli({"angle", "--kind", "affine", "--form", jobs_path("angle_logarithmic.json")},
                         out, err);
        REQUIRE(rc == 2);
        std::string path = "/tmp/folia_form.json";
        std::ofstream(path) << R"({"var":"z","order":8,"terms":{"-1":"-1/2"}})";
        std::ostringstream out2;
        int rc2 = run_cli({"angle", "--kind", "affine", "--form", path}, out2, err);
        REQUIRE(rc2 == 0);
        REQUIRE(out2.str().find("theta: 1/2") != std::string::npos);
        std::remove(path.c_str());
    }
}

TEST_CASE("geodesic check reports identity lines") {
    auto rr = run_job(load_job("geodesic_check_p2.json"));
    REQUIRE(rr.exit_code == 0);
    const Json& ids = rr.report.at("result").at("identities");
    bool saw_triple = false, saw_gluing = false;
    for (auto& id : ids) {
        REQUIRE(id.at("ok").get<bool>());
        std::string name = id.at("identity").get<std::string>();
        if (name.find("triple") != std::string::npos) saw_triple = true;
        if (name.find("symbol gluing") != std::string::npos) saw_gluing = true;
    }
    REQUIRE(saw_triple);
    REQUIRE(saw_gluing);

    SECTION("perturbed multiplier is caught") {
        Json job = load_job("geodesic_check_p2.json");
        job["transitions"][0]["multiplier"] = Json{{"num", "2"}, {"den", "u1"}};
        auto bad = run_job(job);
        REQUIRE(bad.exit_code == 1);
    }
}
