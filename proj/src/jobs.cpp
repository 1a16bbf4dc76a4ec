#include "kocalc/jobs.hpp"

#include "kocalc/builders.hpp"
#include "kocalc/diff_ko.hpp"
#include "kocalc/reference_table.hpp"

#include <future>
#include <sstream>

namespace kocalc {

namespace {

int g_threads = 1;

struct ResolvedSpace {
    DeltaComplex complex;
    std::optional<SignCocycle> orientation_cover;  // rp / klein / circle builtin twists
    std::optional<F2Vec> w1_squared;               // rp only: x^2
    int rp_n = -1;
};

ResolvedSpace resolve_space(const json& space) {
    ResolvedSpace out;
    if (space.contains("complex")) {
        out.complex = complex_from_json(space["complex"]);
        return out;
    }
    if (!space.contains("builtin")) throw ValidationError("space: need builtin or complex");
    const json& b = space["builtin"];
    std::string name = b.at("name").get<std::string>();
    int n = b.value("n", 0);
    if (name == "point") {
        out.complex = build_point();
    } else if (name == "sphere") {
        out.complex = build_sphere(n);
    } else if (name == "circle") {
        out.complex = build_circle_rotation().complex;
        SignCocycle mobius = SignCocycle::zero(out.complex);
        mobius.values.set(0, true);
        out.orientation_cover = mobius;
    } else if (name == "rp") {
        RpResult rp = build_rp(n);
        out.complex = rp.complex;
        out.orientation_cover = rp.w1;
        out.w1_squared = cup_f2(out.complex, 1, rp.w1.values, 1, rp.w1.values);
        out.rp_n = n;
    } else if (name == "klein") {
        KleinResult k = build_klein(n);
        out.complex = k.complex;
        out.orientation_cover = k.sigma1;
    } else if (name == "torus") {
        out.complex = build_torus(n);
    } else if (name == "s2xs2") {
        out.complex = product(build_sphere(2), build_sphere(2)).complex;
    } else {
        throw ValidationError("space: unknown builtin '" + name + "'");
    }
    return out;
}

TwistData resolve_twist(const json& job, const ResolvedSpace& sp) {
    TwistData tw;
    if (!job.contains("twist")) return tw;
    const json& t = job["twist"];
    if (t.contains("sigma1") && !t["sigma1"].is_null()) {
        const json& s1 = t["sigma1"];
        if (s1.is_string()) {
            std::string name = s1.get<std::string>();
            if (name == "orientation-double-cover" || name == "mobius" || name == "w1-canonical") {
                if (!sp.orientation_cover)
                    throw ValidationError("twist: builtin '" + name + "' undefined for this space");
                tw.sigma1 = *sp.orientation_cover;
            } else if (name == "zero") {
                // omitted twist
            } else {
                throw ValidationError("twist: unknown builtin sigma1 '" + name + "'");
            }
        } else {
            tw.sigma1 = sign_cocycle_from_json(s1, sp.complex);
        }
    }
    if (t.contains("sigma2") && !t["sigma2"].is_null()) {
        const json& s2 = t["sigma2"];
        if (s2.is_string()) {
            std::string name = s2.get<std::string>();
            if (name == "x-squared") {
                if (!sp.w1_squared)
                    throw ValidationError("twist: builtin 'x-squared' undefined for this space");
                tw.sigma2 = *sp.w1_squared;
            } else if (name == "w2-tangent") {
                if (!sp.w1_squared || sp.rp_n < 1)
                    throw ValidationError("twist: builtin 'w2-tangent' undefined for this space");
                // w2(T RP^n) = C(n+1,2) x^2 mod 2
                long c = (static_cast<long>(sp.rp_n + 1) * sp.rp_n / 2) % 2;
                if (c == 1)
                    tw.sigma2 = *sp.w1_squared;
                else
                    tw.sigma2 = F2Vec(sp.complex.count(2));
            } else if (name == "zero") {
                // omitted
            } else {
                throw ValidationError("twist: unknown builtin sigma2 '" + name + "'");
            }
        } else {
            tw.sigma2 = f2_cocycle_from_json(s2, 2, sp.complex);
        }
    }
    return tw;
}

json cmd_cohomology(Workspace& ws, const json& opts) {
    std::string coeff = opts.value("coeff", "Z");
    bool twisted = opts.value("twisted", false);
    int p = opts.at("degree").get<int>();
    Coeff c;
    if (coeff == "Z")
        c = Coeff::Z;
    else if (coeff == "Z2")
        c = Coeff::Z2;
    else if (coeff == "QmodZ")
        c = Coeff::QmodZ;
    else
        throw ValidationError("cohomology: coeff must be Z, Z2 or QmodZ");
    CohomologySummary s = cohomology(ws, c, twisted, p);
    json out;
    out["degree"] = p;
    out["coeff"] = coeff;
    out["twisted"] = twisted && ws.sigma1() != nullptr;
    out["group"] = group_to_json(s.shape);
    if (c == Coeff::QmodZ) out["divisible_rank"] = s.divisible_rank;
    return out;
}

std::vector<Int> coords_from_json(const json& j) {
    std::vector<Int> out;
    for (const auto& v : j) out.push_back(Int(v.get<std::int64_t>()));
    return out;
}

json coords_to_json(const std::vector<Int>& v) {
    json out = json::array();
    for (const Int& x : v) out.push_back(int_to_json(x));
    return out;
}

json cmd_ops(Workspace& ws, const json& opts) {
    const DeltaComplex& X = ws.X();
    std::string op = opts.at("op").get<std::string>();
    json out;
    out["op"] = op;
    if (op == "cup") {
        int p = opts.at("p").get<int>(), q = opts.at("q").get<int>();
        F2Vec a = ws.f2group(p).rep_of(coords_from_json(opts.at("a")));
        F2Vec b = ws.f2group(q).rep_of(coords_from_json(opts.at("b")));
        F2Vec c = cup_f2(X, p, a, q, b);
        out["degree"] = p + q;
        out["coords"] = coords_to_json(ws.f2group(p + q).coords(X, c));
    } else if (op == "sq") {
        int k = opts.at("k").get<int>(), p = opts.at("p").get<int>();
        F2Vec a = ws.f2group(p).rep_of(coords_from_json(opts.at("a")));
        F2Vec c = sq_cochain(X, k, p, a);
        int d = p + k;
        out["degree"] = d;
        out["coords"] = d <= X.dim() ? coords_to_json(ws.f2group(d).coords(X, c))
                                     : json::array();
    } else if (op == "bockstein") {
        int p = opts.at("p").get<int>();
        bool twisted = opts.value("twisted", false);
        F2Vec a = ws.f2group(p).rep_of(coords_from_json(opts.at("a")));
        std::vector<Int> c = bockstein_cochain(X, p, a, twisted ? ws.sigma1() : nullptr);
        out["degree"] = p + 1;
        out["twisted"] = twisted && ws.sigma1() != nullptr;
        out["coords"] = coords_to_json(ws.zgroup(p + 1, twisted).coords(c));
    } else if (op == "reduce_mod2") {
        int p = opts.at("p").get<int>();
        bool twisted = opts.value("twisted", false);
        std::vector<Int> a = ws.zgroup(p, twisted).rep_of(coords_from_json(opts.at("a")));
        out["degree"] = p;
        out["coords"] = coords_to_json(ws.f2group(p).coords(X, reduce_mod2_cochain(a)));
    } else if (op == "j2") {
        int p = opts.at("p").get<int>();
        F2Vec a = ws.f2group(p).rep_of(coords_from_json(opts.at("a")));
        ClassQZ c;
        c.degree = p;
        c.rep = j2_cochain(a);
        out["degree"] = p;
        out["finite_coords"] = coords_to_json(qmodz_finite_coords(ws, c));
    } else {
        throw ValidationError("ops: unknown op '" + op + "'");
    }
    return out;
}

json page_to_json(AHSSState& st, bool e2_only) {
    json pages = json::object();
    json p2 = json::object();
    json pf = json::object();
    for (int p = 0; p <= st.dim(); ++p) {
        for (int qr : {0, 1, 2, 4}) {
            AbelianGroup g2 = st.e2_shape(p, qr);
            std::string key = std::to_string(p) + "," + std::to_string(-qr);
            if (!g2.trivial()) p2[key] = group_to_json(g2);
            if (!e2_only) {
                AbelianGroup gf = st.entry_shape(p, qr);
                if (!gf.trivial() || st.entry_undetermined(p, qr)) {
                    json e = group_to_json(gf);
                    e["undetermined"] = st.entry_undetermined(p, qr);
                    pf[key] = e;
                }
            }
        }
    }
    pages["2"] = p2;
    if (!e2_only) pages["final"] = pf;
    return pages;
}

json cmd_ahss(Workspace& ws, const json& opts) {
    AHSSState st(ws);
    st.turn_pages();
    bool reduced = opts.value("reduced", true);
    json out;
    out["pages"] = page_to_json(st, false);
    json ko = json::object();
    for (int i = 0; i < 8; ++i) ko[std::to_string(-i)] = ko_report_to_json(st.assemble_ko(-i, reduced));
    out["ko"] = ko;
    return out;
}

json cmd_ko(Workspace& ws, const json& opts) {
    int degree = opts.at("degree").get<int>();
    bool reduced = opts.value("reduced", true);
    json out;
    out["ko"] = json::object();
    out["ko"][std::to_string(degree)] = ko_report_to_json(compute_ko(ws, degree, reduced));
    return out;
}

json cmd_diff_e2(Workspace& ws, const json&) {
    DiffE2Page page = diff_e2(ws);
    json out;
    out["dim"] = page.dim;
    out["twisted"] = page.twisted;
    out["corner"] = page.corner;
    out["rational_ranks"] = page.rational_ranks;
    json u1 = json::array(), z2 = json::array();
    for (const auto& e : page.row_u1) {
        json je;
        je["divisible_rank"] = e.divisible_rank;
        je["finite"] = group_to_json(e.finite);
        u1.push_back(je);
    }
    for (int d : page.row_z2) z2.push_back(d);
    out["row_u1"] = u1;
    out["row_z2"] = z2;
    return out;
}

json cmd_check_lift(Workspace& ws, const json& opts) {
    RationalClass G;
    G.degree = 4;
    const ZCohGroup& h4 = ws.zgroup(4, false);
    if (opts.contains("g4_coords")) {
        G.rep = h4.rep_of(coords_from_json(opts.at("g4_coords")));
    } else {
        Int k = Int(opts.value("g4_coefficient", 1));
        if (h4.shape().ngens() == 0) {
            G.rep.assign(ws.X().count(4), 0);
        } else {
            std::vector<Int> c(h4.shape().ngens(), 0);
            c[0] = k;
            G.rep = h4.rep_of(c);
        }
    }
    LiftCheck res = geometric_d4_check(ws, G);
    json out;
    out["lifts"] = res.lifts;
    if (res.witness_coords) out["witness_x2"] = coords_to_json(*res.witness_coords);
    json searched = json::array();
    for (const auto& s : res.searched) searched.push_back(coords_to_json(s));
    out["search_transcript"] = searched;
    return out;
}

const char* verdict_name(SpinVerdict v) {
    switch (v) {
        case SpinVerdict::Liftable:
            return "liftable";
        case SpinVerdict::Obstructed:
            return "obstructed";
        default:
            return "necessary-only";
    }
}

json cmd_check_spin(Workspace& ws, const json& opts) {
    const F2CohGroup& h2 = ws.f2group(2);
    json out;
    json results = json::array();
    auto run_one = [&](const std::vector<Int>& coords) {
        ClassF2 B{2, h2.rep_of(coords)};
        SpinCheck c = check_twisted_spin(ws, B);
        json r;
        r["B"] = coords_to_json(coords);
        r["verdict"] = verdict_name(c.verdict);
        r["obstruction_group"] = group_to_json(c.obstruction_group);
        r["obstruction"] = coords_to_json(c.obstruction_coords);
        results.push_back(r);
    };
    if (opts.contains("B")) {
        run_one(coords_from_json(opts.at("B")));
    } else {
        int k = h2.dim();
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
            std::vector<Int> coords(k, 0);
            for (int j = 0; j < k; ++j)
                if (bits & (std::uint64_t{1} << j)) coords[j] = 1;
            run_one(coords);
        }
    }
    out["results"] = results;
    return out;
}

json cmd_r_theory(Workspace& ws, const json&) {
    RTheoryReport r = r_theory_groups(ws);
    json out;
    out["h3_twisted"] = group_to_json(r.h3);
    out["h0_z2"] = group_to_json(r.h0_z2);
    out["h1_z2"] = group_to_json(r.h1_z2);
    json flat;
    flat["divisible_rank"] = r.flat_h3.divisible_rank;
    flat["finite"] = group_to_json(r.flat_h3.finite);
    out["flat_h3"] = flat;
    out["form_part"] = r.form_part;
    out["extension_resolved"] = r.extension_resolved;
    out["free_rank_r_minus_1"] = r.h3.free_rank;  // H^3 free part feeds R^{-1}
    return out;
}

json cmd_verify(const json& opts) {
    int n_max = opts.value("n_max", 4);
    json out;

    auto cells = table_matrix(n_max);
    json table = json::array();
    int resolved = 0, mismatches = 0;
    for (const auto& c : cells) {
        json jc;
        jc["n"] = c.n;
        jc["i"] = c.i;
        jc["engine"] = ko_report_to_json(c.engine);
        jc["reference"] = group_to_json(c.reference);
        jc["resolved"] = c.resolved;
        jc["match"] = c.match;
        if (c.resolved) {
            ++resolved;
            if (!c.match) ++mismatches;
        }
        table.push_back(jc);
    }
    out["table"] = table;
    out["table_resolved"] = resolved;
    out["table_mismatches"] = mismatches;

    int thom_n_max = std::min(n_max, 3);
    json thom = json::array();
    for (int n = 1; n <= thom_n_max; ++n) {
        for (int i = 0; i < 8; ++i) {
            ThomCheck c = twisted_thom_check(n, i);
            json jc;
            jc["n"] = n;
            jc["i"] = i;
            jc["engine"] = ko_report_to_json(c.engine);
            jc["reference"] = group_to_json(c.reference);
            jc["inconclusive"] = c.inconclusive;
            jc["consistent"] = c.consistent;
            thom.push_back(jc);
        }
    }
    out["twisted_thom"] = thom;

    json klein = json::array();
    for (int i = 0; i < 8; ++i) {
        for (bool tw : {false, true}) {
            KleinCheck c = klein_recursion_check(3, i, tw);
            json jc;
            jc["n"] = 3;
            jc["i"] = i;
            jc["twisted"] = tw;
            jc["lhs"] = ko_report_to_json(c.lhs);
            jc["rhs_order"] = int_to_json(c.rhs_order);
            jc["rhs_rank"] = c.rhs_rank;
            jc["inconclusive"] = c.inconclusive;
            jc["consistent"] = c.consistent;
            klein.push_back(jc);
        }
    }
    out["klein_recursion"] = klein;
    return out;
}

}  // namespace

void set_worker_threads(int n) { g_threads = n > 0 ? n : 1; }
int worker_threads() { return g_threads; }

JobResult run_job(const json& job) {
    JobResult res;
    res.report["version"] = kEngineVersion;
    res.report["input_hash"] = fnv1a64(job.dump());
    try {
        std::string command = job.at("command").get<std::string>();
        res.report["command"] = command;
        json opts = job.value("options", json::object());

        if (command == "verify") {
            res.report["result"] = cmd_verify(opts);
            return res;
        }

        ResolvedSpace sp = resolve_space(job.at("space"));
        TwistData tw = resolve_twist(job, sp);
        Workspace ws(sp.complex, tw);

        if (command == "cohomology")
            res.report["result"] = cmd_cohomology(ws, opts);
        else if (command == "ops")
            res.report["result"] = cmd_ops(ws, opts);
        else if (command == "ahss")
            res.report["result"] = cmd_ahss(ws, opts);
        else if (command == "ko")
            res.report["result"] = cmd_ko(ws, opts);
        else if (command == "diff-e2")
            res.report["result"] = cmd_diff_e2(ws, opts);
        else if (command == "check-lift")
            res.report["result"] = cmd_check_lift(ws, opts);
        else if (command == "check-spin")
            res.report["result"] = cmd_check_spin(ws, opts);
        else if (command == "r-theory")
            res.report["result"] = cmd_r_theory(ws, opts);
        else
            throw ValidationError("unknown command '" + command + "'");
    } catch (const UnsupportedError& e) {
        res.report["error"] = {{"kind", "unsupported"}, {"message", e.what()}};
        res.exit_code = 3;
    } catch (const ValidationError& e) {
        res.report["error"] = {{"kind", "validation"}, {"message", e.what()}};
        res.exit_code = 2;
    } catch (const json::exception& e) {
        res.report["error"] = {{"kind", "validation"}, {"message", e.what()}};
        res.exit_code = 2;
    }
    return res;
}

std::string job_schema() {
    json s;
    s["$comment"] = "kocalc job schema";
    s["type"] = "object";
    s["required"] = {"command"};
    s["properties"] = {
        {"command",
         {{"enum", {"cohomology", "ops", "ahss", "ko", "diff-e2", "check-lift", "check-spin",
                    "r-theory", "verify"}}}},
        {"space",
         {{"oneOf",
           {{{"properties",
              {{"builtin",
                {{"properties",
                  {{"name",
                    {{"enum",
                      {"point", "sphere", "circle", "rp", "klein", "torus", "s2xs2"}}}},
                   {"n", {{"type", "integer"}}}}}}}}}},
            {{"properties", {{"complex", {{"type", "object"}}}}}}}}}},
        {"twist",
         {{"properties",
           {{"sigma1", {{"description", "builtin name or cocycle {degree:1, values:{...}}"}}},
            {"sigma2", {{"description", "builtin name or cocycle {degree:2, values:{...}}"}}}}}}},
        {"options", {{"type", "object"}}}};
    return s.dump(2);
}

}  // namespace kocalc
