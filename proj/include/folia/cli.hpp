#pragma once

#include "folia/geodesic.hpp"
#include "folia/indices.hpp"
#include "folia/jsonio.hpp"
#include "folia/localan.hpp"

#include <fstream>
#include <iostream>

namespace folia {

struct RunResult {
    Json report;
    int exit_code = 0;
};

namespace cli_detail {

constexpr int default_order = 12;

inline Json envelope(const std::string& command) {
    return Json{{"schema", 1}, {"command", command}, {"status", "ok"}};
}

inline int options_order(const Json& job) {
    int n = default_order;
    if (job.contains("options") && job.at("options").contains("order"))
        n = job.at("options").at("order").get<int>();
    if (n < 1 || n > 64) throw input_error("order must lie in 1..64");
    return n;
}

inline unsigned options_jobs(const Json& job) {
    unsigned k = 1;
    if (job.contains("options") && job.at("options").contains("jobs"))
        k = job.at("options").at("jobs").get<unsigned>();
    if (k < 1 || k > 64) throw input_error("jobs must lie in 1..64");
    return k;
}

inline std::string options_phi(const Json& job) {
    if (!job.contains("options") || !job.at("options").contains("phi"))
        throw input_error("phi expression required (option \"phi\")");
    return job.at("options").at("phi").get<std::string>();
}

inline std::vector<std::string> phi_vars(int k) {
    std::vector<std::string> v;
    for (int i = 1; i <= k; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

// ---- local-analysis commands ----

inline RunResult run_distortion(const Json& job) {
    int order = options_order(job);
    TSeries f = series_from_json(job.at("series"), "series").truncated(order);
    Json rep = envelope("distortion");
    rep["options"] = {{"order", order}};
    rep["inputs"] = {{"series", series_to_json(f)}};
    rep["result"] = {{"distortion", series_to_json(affine_distortion(f))}};
    return {rep, 0};
}

inline RunResult run_schwarzian(const Json& job) {
    int order = options_order(job);
    TSeries f = series_from_json(job.at("series"), "series").truncated(order);
    Json rep = envelope("schwarzian");
    rep["options"] = {{"order", order}};
    rep["inputs"] = {{"series", series_to_json(f)}};
    if (f.derivative(size_t{0}).constant_term() != 0) {
        rep["result"] = {{"mode", "series"}, {"schwarzian", series_to_json(schwarzian(f))}};
    } else {
        rep["result"] = {{"mode", "laurent"},
                         {"schwarzian", laurent_to_json(schwarzian_laurent(f))}};
    }
    return {rep, 0};
}

inline RunResult run_angle(const Json& job) {
    std::string kind = job.at("kind").get<std::string>();
    Laurent form = laurent_from_json(job.at("form"), "form");
    Json rep = envelope("angle");
    rep["inputs"] = {{"kind", kind}, {"form", laurent_to_json(form)}};
    if (kind == "affine") {
        auto a = affine_angle(form);
        Json r{{"theta", rat_str(a.theta)}, {"taxonomy", taxonomy_name(a.taxonomy)}};
        if (a.ramification_index) r["ramification_index"] = rat_str(*a.ramification_index);
        rep["result"] = r;
    } else if (kind == "projective") {
        auto p = projective_angle(form);
        Json r{{"theta_squared", rat_str(p.theta_squared)},
               {"taxonomy", taxonomy_name(p.taxonomy)}};
        if (p.theta) r["theta"] = "+-" + rat_str(*p.theta);
        if (p.ramification_index_squared)
            r["ramification_index_squared"] = rat_str(*p.ramification_index_squared);
        rep["result"] = r;
    } else {
        throw input_error("angle kind must be affine or projective");
    }
    return {rep, 0};
}

inline RunResult run_riccati(const Json& job) {
    int order = options_order(job);
    Laurent S = laurent_from_json(job.at("form"), "form");
    Rational theta = rational_from_json(job.at("theta"), "theta");
    auto sol = riccati_projective_to_affine(S, theta, order);
    Json rep = envelope("riccati");
    rep["options"] = {{"order", order}};
    rep["inputs"] = {{"form", laurent_to_json(S)}, {"theta", rat_str(theta)}};
    Json r{{"u", series_to_json(sol.u)}, {"gamma", laurent_to_json(sol.gamma)}};
    if (!sol.resonant_solvable.empty()) r["resonant_solvable_orders"] = sol.resonant_solvable;
    rep["result"] = r;
    return {rep, 0};
}

inline RunResult run_normalform(const Json& job) {
    int order = options_order(job);
    std::string kind = job.at("kind").get<std::string>();
    std::vector<Rational> lambda = rational_vector_from_json(job.at("lambda"), "lambda");
    TSeries symbol = series_from_json(job.at("symbol"), "symbol");
    Json rep = envelope("normalform");
    rep["options"] = {{"order", order}};
    Json inputs{{"kind", kind}, {"symbol", series_to_json(symbol)}};
    Json lam = Json::array();
    for (auto& l : lambda) lam.push_back(rat_str(l));
    inputs["lambda"] = lam;
    if (kind == "affine") {
        TSeries f = normalize_affine(lambda, symbol, order);
        rep["inputs"] = inputs;
        rep["result"] = {{"normalizing_factor", series_to_json(f)},
                         {"constant_symbol", rat_str(symbol.constant_term())}};
        return {rep, 0};
    }
    if (kind != "projective") throw input_error("normalform kind must be affine or projective");
    if (!job.contains("branch")) {
        Rational r0 = symbol.constant_term();
        auto root = projective_branch(r0);
        if (!root)
            throw inadmissible_error("irrational branch: -2 rho(0) = " + rat_str(-2 * r0) +
                                     " is not a rational square");
        throw input_error("branch required; candidates are " + rat_str(*root) + " and " +
                          rat_str(-*root));
    }
    Rational branch = rational_from_json(job.at("branch"), "branch");
    inputs["branch"] = rat_str(branch);
    TSeries gamma = normalize_projective(lambda, symbol, branch, order);
    rep["inputs"] = inputs;
    rep["result"] = {{"affine_symbol", series_to_json(gamma)}};
    return {rep, 0};
}

inline RunResult run_brjuno(const Json& job) {
    std::vector<Rational> lambda = rational_vector_from_json(job.at("lambda"), "lambda");
    Rational mu = rational_from_json(job.at("mu"), "mu");
    int mmax = job.at("mmax").get<int>();
    auto d = brjuno_diagnostic(lambda, mu, mmax);
    Json rep = envelope("brjuno");
    Json lam = Json::array();
    for (auto& l : lambda) lam.push_back(rat_str(l));
    rep["inputs"] = {{"lambda", lam}, {"mu", rat_str(mu)}, {"mmax", mmax}};
    Json table = Json::array();
    for (auto& row : d.table)
        table.push_back(Json{{"m", row.m},
                             {"omega", rat_str(row.omega)},
                             {"attained_K", row.attained}});
    Json r{{"table", table}, {"verdict", d.verdict}, {"resonant", d.resonant}};
    if (d.resonant_K) r["resonant_K"] = *d.resonant_K;
    if (!d.resonant) {
        char buf[64];
        Json sums = Json::array(), neg = Json::array();
        for (double v : d.partial_sums) {
            std::snprintf(buf, sizeof buf, "%.12g", v);
            sums.push_back(std::string(buf));
        }
        for (double v : d.negated_partial_sums) {
            std::snprintf(buf, sizeof buf, "%.12g", v);
            neg.push_back(std::string(buf));
        }
        r["partial_sums_float"] = sums;
        r["negated_partial_sums_float"] = neg;
    }
    rep["result"] = r;
    return {rep, 0};
}

// ---- manifolds and index jobs ----

struct ManifoldData {
    RingPtr ring;
    RingElement cTM;
    bool has_cTM = false;
    std::string convention;
    std::string kind;
    int pn_dim = 0;  // for projective_space
};

inline ManifoldData manifold_from_json(const Json& j) {
    ManifoldData m;
    std::string kind = j.at("kind").get<std::string>();
    m.kind = kind;
    if (kind == "projective_space") {
        auto model = model_projective_space(j.at("n").get<int>());
        m.ring = model.ring;
        m.cTM = model.cTM;
        m.has_cTM = true;
        m.convention = model.convention;
        m.pn_dim = j.at("n").get<int>();
    } else if (kind == "curve") {
        auto model = model_curve(j.at("genus").get<int>());
        m.ring = model.ring;
        m.cTM = model.cTM;
        m.has_cTM = true;
        m.convention = model.convention;
    } else if (kind == "curve_times_p1") {
        auto model = model_curve_times_p1(j.at("genus").get<int>());
        m.ring = model.ring;
        m.cTM = model.cTM;
        m.has_cTM = true;
        m.convention = model.convention;
    } else if (kind == "ring") {
        m.ring = ring_from_json(j);
        m.convention = "custom ring (topologically unvalidated); declared integral functional";
        if (j.contains("c_tm")) {
            m.cTM = RingElement::parse(m.ring, j.at("c_tm").get<std::string>());
            m.has_cTM = true;
        }
    } else {
        throw input_error("unknown manifold kind '" + kind + "'");
    }
    return m;
}

struct StructureData {
    std::vector<SingularPointRecord> records;
    std::optional<int> homogeneous_degree;
    Json echo;
};

inline StructureData structure_from_json(const Json& j, StructureKind want, bool need_symbol) {
    StructureData out;
    std::string mode = j.at("mode").get<std::string>();
    out.echo = Json{{"mode", mode}};
    if (mode == "homogeneous") {
        std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
        ChartField Zh{"ambient", vars, {}};
        for (auto& comp : j.at("components"))
            Zh.components.push_back(parse_expression(comp.get<std::string>(), vars));
        validate_chart_field(Zh);
        Json echo_charts = Json::object();
        for (auto& [chart_name, cands] : j.at("singular_candidates").items()) {
            auto it = std::find(vars.begin(), vars.end(), chart_name);
            if (it == vars.end())
                throw input_error("candidate chart '" + chart_name + "' is not an ambient variable");
            auto chart = homogeneous_to_chart(Zh, static_cast<size_t>(it - vars.begin()));
            out.homogeneous_degree = chart.degree;
            Christoffel chris = chart.gamma;
            if (want == StructureKind::projective)
                chris = affine_to_projective(chart.gamma, chart.field);
            std::vector<std::vector<Rational>> pts;
            for (auto& p : cands) pts.push_back(rational_vector_from_json(p, "candidate"));
            for (auto& rec : singular_records(chart.field, chris, pts)) out.records.push_back(rec);
            echo_charts[chart_name] = {{"symbol", chris.str()},
                                       {"field_components", Json::array()}};
            for (auto& c : chart.field.components)
                echo_charts[chart_name]["field_components"].push_back(c.str());
        }
        out.echo["charts"] = echo_charts;
        if (want == StructureKind::projective)
            out.echo["structure_kind"] = "projective, converted from the induced affine symbol";
        else
            out.echo["structure_kind"] = "affine, induced by homogeneity";
        return out;
    }
    if (mode != "charts") throw input_error("structure mode must be homogeneous or charts");

    std::map<std::string, ChartField> fields;
    for (auto& cj : j.at("charts")) {
        ChartField W;
        W.chart = cj.at("name").get<std::string>();
        W.vars = cj.at("vars").get<std::vector<std::string>>();
        for (auto& comp : cj.at("components"))
            W.components.push_back(parse_expression(comp.get<std::string>(), W.vars));
        validate_chart_field(W);
        fields[W.chart] = W;
    }
    StructureKind declared = want;
    std::map<std::string, Christoffel> symbols;
    if (j.contains("christoffel")) {
        std::string kind_text = j.at("christoffel").at("kind").get<std::string>();
        declared = kind_text == "affine" ? StructureKind::affine : StructureKind::projective;
        if (kind_text != "affine" && kind_text != "projective")
            throw input_error("christoffel kind must be affine or projective");
        for (auto& [name, expr] : j.at("christoffel").at("symbols").items()) {
            auto it = fields.find(name);
            if (it == fields.end()) throw input_error("christoffel for unknown chart '" + name + "'");
            symbols.emplace(name, Christoffel{declared,
                                              parse_expression(expr.get<std::string>(),
                                                               it->second.vars)});
        }
    } else if (need_symbol) {
        throw input_error("christoffel data required");
    }
    out.echo["structure_kind"] = kind_name(declared);
    for (auto& [chart_name, cands] : j.at("singular_candidates").items()) {
        auto it = fields.find(chart_name);
        if (it == fields.end())
            throw input_error("candidates for unknown chart '" + chart_name + "'");
        Christoffel chris{StructureKind::affine, MPoly::constant(it->second.vars, 1)};
        if (auto sit = symbols.find(chart_name); sit != symbols.end()) {
            chris = sit->second;
        } else if (need_symbol) {
            throw input_error("christoffel symbol missing for chart '" + chart_name + "'");
        }
        if (need_symbol && want == StructureKind::projective &&
            chris.kind == StructureKind::affine) {
            chris = affine_to_projective(chris, it->second);
            out.echo["structure_kind"] = "projective, converted from the declared affine symbol";
        }
        std::vector<std::vector<Rational>> pts;
        for (auto& p : cands) pts.push_back(rational_vector_from_json(p, "candidate"));
        for (auto& rec : singular_records(it->second, chris, pts)) out.records.push_back(rec);
    }
    return out;
}

inline Json report_entries(const IndexReport& rep) {
    Json pts = Json::array();
    for (auto& e : rep.per_point) {
        Json p{{"chart", e.chart}};
        Json coords = Json::array();
        for (auto& c : e.point) coords.push_back(rat_str(c));
        p["point"] = coords;
        p["admissible"] = e.admissible;
        if (e.admissible)
            p["contribution"] = rat_str(e.contribution);
        else
            p["reason"] = e.reason;
        pts.push_back(p);
    }
    return pts;
}

inline RunResult run_index(const Json& job, const std::string& which) {
    int order = options_order(job);
    unsigned jobs = options_jobs(job);
    ManifoldData m = manifold_from_json(job.at("manifold"));
    int n = m.ring->dimension();

    StructureKind want = which == "projective" ? StructureKind::projective : StructureKind::affine;
    bool need_symbol = which != "baumbott";
    StructureData sd = structure_from_json(job.at("structure"), want, need_symbol);

    RingElement c1tf(m.ring);
    std::string c1_source;
    if (job.contains("c1_tf")) {
        c1tf = RingElement::parse(m.ring, job.at("c1_tf").get<std::string>());
        c1_source = "declared";
    } else if (sd.homogeneous_degree && m.kind == "projective_space") {
        c1tf = Rational(1 - *sd.homogeneous_degree) *
               RingElement::generator(m.ring, "h");
        c1_source = "(1-d) h from the homogeneous degree d = " +
                    std::to_string(*sd.homogeneous_degree);
    } else {
        throw input_error("c1_tf required for this manifold/structure combination");
    }

    IndexReport rep;
    if (which == "affine") {
        rep = verify_affine_index(sd.records, m.ring, c1tf, m.convention, jobs);
    } else {
        if (!m.has_cTM) throw input_error("c_tm required for this manifold");
        int arity = which == "projective" ? n + 1 : n;
        SymPoly phi(arity, parse_expression(options_phi(job), phi_vars(arity)));
        if (which == "projective")
            rep = verify_projective_index(sd.records, m.ring, c1tf, m.cTM, phi, m.convention, jobs);
        else
            rep = verify_baum_bott(sd.records, m.ring, c1tf, m.cTM, phi, m.convention, jobs);
    }

    Json out = envelope("index." + which);
    out["options"] = {{"order", order}, {"jobs", jobs}};
    if (job.contains("options") && job.at("options").contains("phi"))
        out["options"]["phi"] = job.at("options").at("phi");
    out["convention"] = rep.convention;
    out["inputs"] = {{"manifold", job.at("manifold")},
                     {"structure", sd.echo},
                     {"c1_tf", c1tf.str()},
                     {"c1_tf_source", c1_source}};
    out["result"] = {{"per_point", report_entries(rep)},
                     {"lhs", rat_str(rep.lhs)},
                     {"rhs", rat_str(rep.rhs)},
                     {"verdict", verdict_name(rep.verdict)}};
    if (!rep.note.empty()) out["result"]["note"] = rep.note;
    int code = rep.verdict == Verdict::match ? 0 : rep.verdict == Verdict::mismatch ? 1 : 3;
    return {out, code};
}

// ---- geodesic check ----

inline RatFun ratfun_from_json(const Json& j, const std::vector<std::string>& vars) {
    if (j.is_string()) return RatFun{parse_expression(j.get<std::string>(), vars)};
    return RatFun{parse_expression(j.at("num").get<std::string>(), vars),
                  parse_expression(j.at("den").get<std::string>(), vars)};
}

// Consumes the foliation descriptor (charts + transitions + christoffel).
// Gluing identities operate on declared overlap data, so every chart must be
// expressed in one shared coordinate list.
inline RunResult run_geodesic_check(const Json& job) {
    std::string kind_text = job.at("christoffel").at("kind").get<std::string>();
    if (kind_text != "affine" && kind_text != "projective")
        throw input_error("christoffel kind must be affine or projective");
    StructureKind kind =
        kind_text == "affine" ? StructureKind::affine : StructureKind::projective;

    struct Chart {
        std::string name;
        ChartField field;  // polynomial components, when the data allows
        bool polynomial = false;
        std::vector<RatFun> rfield;
        RatFun symbol;
    };
    std::vector<Chart> charts;
    std::map<std::string, size_t> index;
    std::vector<std::string> vars;
    const Json& symbols = job.at("christoffel").at("symbols");
    for (auto& cj : job.at("charts")) {
        std::vector<std::string> cvars = cj.at("vars").get<std::vector<std::string>>();
        if (vars.empty())
            vars = cvars;
        else if (vars != cvars)
            throw input_error(
                "geodesic check: all charts must share the declared overlap coordinates");
        std::string name = cj.at("name").get<std::string>();
        if (!symbols.contains(name))
            throw input_error("christoffel symbol missing for chart '" + name + "'");
        Chart c{name, {}, false, {}, ratfun_from_json(symbols.at(name), vars)};
        c.field.chart = c.name;
        c.field.vars = vars;
        bool poly = true;
        for (auto& comp : cj.at("components")) {
            RatFun r = ratfun_from_json(comp, vars);
            c.rfield.push_back(r);
            if (r.den() != MPoly::constant(vars, 1)) poly = false;
        }
        if (poly)
            for (auto& r : c.rfield) c.field.components.push_back(r.num());
        c.polynomial = poly;
        index[c.name] = charts.size();
        charts.push_back(std::move(c));
    }
    if (charts.empty()) throw input_error("geodesic check: at least one chart required");

    CocycleReport rep;
    // lift relations, chart by chart (polynomial data only)
    for (auto& c : charts) {
        if (!c.polynomial || c.symbol.den() != MPoly::constant(vars, 1)) {
            rep.add("lift relations on chart " + c.name + " (skipped: non-polynomial data)", true);
            continue;
        }
        try {
            if (kind == StructureKind::affine) {
                build_geodesic_affine(c.field, Christoffel{kind, c.symbol.num()});
                rep.add("[H,X] = X on chart " + c.name, true);
            } else {
                build_geodesic_projective(c.field, Christoffel{kind, c.symbol.num()});
                rep.add("sl2 relations on chart " + c.name, true);
            }
        } catch (const std::logic_error& e) {
            rep.add("lift relations on chart " + c.name, false, e.what());
        }
    }

    // transitions: multipliers g with Z_from = g * Z_to
    CocycleCheckInput cin;
    cin.vars = vars;
    for (auto& c : charts) {
        cin.chart_names.push_back(c.name);
        cin.fields.push_back(c.rfield);
    }
    if (job.contains("transitions")) {
        for (auto& tj : job.at("transitions")) {
            size_t i = index.at(tj.at("from").get<std::string>());
            size_t j2 = index.at(tj.at("to").get<std::string>());
            RatFun g = ratfun_from_json(tj.at("multiplier"), vars);
            cin.multipliers[{i, j2}] = g;
            // symbol gluing along the declared transition
            const auto& Zj = charts[j2].rfield;
            RatFun zg = RatFun::constant(vars, 0);
            for (size_t mcomp = 0; mcomp < vars.size(); ++mcomp)
                zg = zg + Zj[mcomp] * g.derivative(mcomp);
            RatFun expected = kind == StructureKind::affine
                                  ? zg + g * charts[j2].symbol
                                  : [&] {
                                        RatFun zzg = RatFun::constant(vars, 0);
                                        for (size_t mc = 0; mc < vars.size(); ++mc)
                                            zzg = zzg + Zj[mc] * zg.derivative(mc);
                                        return g * g * charts[j2].symbol + g * zzg -
                                               Rational(1, 2) * (zg * zg);
                                    }();
            bool ok = charts[i].symbol == expected;
            rep.add("symbol gluing " + charts[i].name + " <- " + charts[j2].name, ok,
                    ok ? "" : "expected " + expected.str() + ", declared " +
                                  charts[i].symbol.str());
        }
        CocycleReport crep = cocycle_check(cin);
        for (auto& id : crep.identities) rep.add(id.name, id.ok, id.witness);
    }

    Json out = envelope("geodesic.check");
    out["inputs"] = {{"kind", kind_text}, {"charts", Json::array()}};
    for (auto& c : charts) out["inputs"]["charts"].push_back(c.name);
    Json ids = Json::array();
    for (auto& id : rep.identities) {
        Json e{{"identity", id.name}, {"ok", id.ok}};
        if (!id.witness.empty()) e["witness"] = id.witness;
        ids.push_back(e);
    }
    out["result"] = {{"identities", ids}, {"all_ok", rep.all_ok}};
    return {out, rep.all_ok ? 0 : 1};
}

inline RunResult run_signature(const Json& job) {
    Rational c1sq = rational_from_json(job.at("c1sq"), "c1sq");
    Rational c2 = rational_from_json(job.at("c2"), "c2");
    auto r = signature_report(c1sq, c2);
    Json out = envelope("signature");
    out["inputs"] = {{"c1sq", rat_str(c1sq)}, {"c2", rat_str(c2)}};
    out["result"] = {{"c1sq_tf", rat_str(r.c1sq_TF)},
                     {"tau", rat_str(r.tau)},
                     {"projective_structure_possible", r.projective_structure_possible},
                     {"verdict", r.projective_structure_possible
                                     ? "compatible with a foliated projective structure"
                                     : "incompatible with any foliated projective structure"}};
    return {out, r.projective_structure_possible ? 0 : 1};
}

}  // namespace cli_detail

/// Execute a job document. Deterministic: identical jobs give identical reports.
inline RunResult run_job(const Json& job) {
    using namespace cli_detail;
    try {
        if (!job.is_object() || !job.contains("command"))
            throw input_error("job document needs a \"command\" field");
        if (job.contains("schema") && job.at("schema").get<int>() != 1)
            throw input_error("unsupported schema version");
        std::string cmd = job.at("command").get<std::string>();
        if (cmd == "distortion") return run_distortion(job);
        if (cmd == "schwarzian") return run_schwarzian(job);
        if (cmd == "angle") return run_angle(job);
        if (cmd == "riccati") return run_riccati(job);
        if (cmd == "normalform") return run_normalform(job);
        if (cmd == "brjuno") return run_brjuno(job);
        if (cmd == "index.affine") return run_index(job, "affine");
        if (cmd == "index.projective") return run_index(job, "projective");
        if (cmd == "index.baumbott") return run_index(job, "baumbott");
        if (cmd == "geodesic.check") return run_geodesic_check(job);
        if (cmd == "signature") return run_signature(job);
        throw input_error("unknown command '" + cmd + "'");
    } catch (const Error& e) {
        Json rep{{"schema", 1},
                 {"command", job.is_object() ? job.value("command", "?") : "?"},
                 {"status", "error"},
                 {"error",
                  {{"kind", e.kind == ErrorKind::input ? "input" : "inadmissible"},
                   {"message", e.what()}}}};
        return {rep, e.kind == ErrorKind::input ? 2 : 3};
    } catch (const Json::exception& e) {
        Json rep{{"schema", 1},
                 {"command", job.is_object() ? job.value("command", "?") : "?"},
                 {"status", "error"},
                 {"error", {{"kind", "input"}, {"message", std::string("schema: ") + e.what()}}}};
        return {rep, 2};
    }
}

// ---- text rendering (a projection of the JSON report, nothing more) ----

namespace cli_detail {

inline void render_series_like(std::ostream& os, const Json& j, const std::string& label) {
    os << label << ": " << j.at("text").get<std::string>() << "\n";
}

}  // namespace cli_detail

inline std::string render_text(const Json& rep) {
    std::ostringstream os;
    std::string cmd = rep.value("command", "?");
    os << "folia " << cmd << "\n";
    if (rep.value("status", "") == "error") {
        os << "error (" << rep.at("error").at("kind").get<std::string>()
           << "): " << rep.at("error").at("message").get<std::string>() << "\n";
        return os.str();
    }
    if (rep.contains("convention"))
        os << "convention: " << rep.at("convention").get<std::string>() << "\n";
    const Json& r = rep.at("result");
    if (cmd == "distortion") {
        cli_detail::render_series_like(os, r.at("distortion"), "distortion");
    } else if (cmd == "schwarzian") {
        os << "mode: " << r.at("mode").get<std::string>() << "\n";
        cli_detail::render_series_like(os, r.at("schwarzian"), "schwarzian");
    } else if (cmd == "angle") {
        for (auto& [k, v] : r.items())
            os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    } else if (cmd == "riccati") {
        cli_detail::render_series_like(os, r.at("u"), "u");
        cli_detail::render_series_like(os, r.at("gamma"), "gamma");
        if (r.contains("resonant_solvable_orders"))
            os << "resonant orders resolved by zero coefficients: "
               << r.at("resonant_solvable_orders").dump() << "\n";
    } else if (cmd == "normalform") {
        if (r.contains("normalizing_factor")) {
            cli_detail::render_series_like(os, r.at("normalizing_factor"), "normalizing factor");
            os << "constant symbol: " << r.at("constant_symbol").get<std::string>() << "\n";
        } else {
            cli_detail::render_series_like(os, r.at("affine_symbol"), "affine symbol");
        }
    } else if (cmd == "brjuno") {
        for (auto& row : r.at("table"))
            os << "omega'(" << row.at("m").get<int>() << ") = "
               << row.at("omega").get<std::string>() << "  attained at K="
               << row.at("attained_K").dump() << "\n";
        os << "resonant: " << (r.at("resonant").get<bool>() ? "yes" : "no") << "\n";
        if (r.contains("partial_sums_float")) {
            os << "partial sums (float): ";
            for (auto& v : r.at("partial_sums_float")) os << v.get<std::string>() << " ";
            os << "\n";
        }
        os << "verdict: " << r.at("verdict").get<std::string>() << "\n";
    } else if (cmd.rfind("index.", 0) == 0) {
        for (auto& p : r.at("per_point")) {
            os << "point " << p.at("chart").get<std::string>() << " [";
            bool first = true;
            for (auto& c : p.at("point")) {
                os << (first ? "" : ", ") << c.get<std::string>();
                first = false;
            }
            os << "]: ";
            if (p.at("admissible").get<bool>())
                os << p.at("contribution").get<std::string>() << "\n";
            else
                os << "inadmissible (" << p.at("reason").get<std::string>() << ")\n";
        }
        os << "LHS = " << r.at("lhs").get<std::string>() << "\n";
        os << "RHS = " << r.at("rhs").get<std::string>() << "\n";
        if (r.contains("note")) os << "note: " << r.at("note").get<std::string>() << "\n";
        os << "verdict: " << r.at("verdict").get<std::string>() << "\n";
    } else if (cmd == "geodesic.check") {
        for (auto& id : r.at("identities")) {
            os << (id.at("ok").get<bool>() ? "pass" : "FAIL") << "  "
               << id.at("identity").get<std::string>();
            if (id.contains("witness")) os << "  [" << id.at("witness").get<std::string>() << "]";
            os << "\n";
        }
        os << (r.at("all_ok").get<bool>() ? "all identities hold" : "violations found") << "\n";
    } else if (cmd == "signature") {
        os << "c1^2(T_F) = " << r.at("c1sq_tf").get<std::string>() << "\n";
        os << "tau = " << r.at("tau").get<std::string>() << "\n";
        os << "verdict: " << r.at("verdict").get<std::string>() << "\n";
    }
    return os.str();
}

// ---- argument-level front end ----

namespace cli_detail {

inline Json load_json(const std::string& path) {
    try {
        if (path == "-") return Json::parse(std::cin);
        std::ifstream in(path);
        if (!in) throw input_error("cannot open '" + path + "'");
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw input_error("malformed JSON in '" + path + "': " + e.what());
    }
}

inline Json rationals_csv(const std::string& text) {
    Json out = Json::array();
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(part);
    if (out.empty()) throw input_error("empty rational list");
    return out;
}

inline int emit(const RunResult& rr, bool json_only, std::ostream& out) {
    if (json_only)
        out << rr.report.dump(2) << "\n";
    else
        out << render_text(rr.report);
    return rr.exit_code;
}

}  // namespace cli_detail

/// The command-line entry point; returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace folia
