#include "kocalc/jobs.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using kocalc::json;

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void emit(const json& report, const std::string& out_path) {
    std::string text = report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        out << text;
    }
}

// Human-readable pass/fail table for the verify matrix.
void print_verify_table(const json& result) {
    auto line = [&](const json& row, const std::string& tag, bool ok, bool inconclusive) {
        std::cout << (inconclusive ? "????" : (ok ? "PASS" : "FAIL")) << "  " << tag << "\n";
    };
    for (const auto& c : result["table"]) {
        std::string tag = "table  n=" + std::to_string(c["n"].get<int>()) +
                          " i=" + std::to_string(c["i"].get<int>());
        line(c, tag, c["match"].get<bool>(), !c["resolved"].get<bool>());
    }
    for (const auto& c : result["twisted_thom"]) {
        std::string tag = "thom   n=" + std::to_string(c["n"].get<int>()) +
                          " i=" + std::to_string(c["i"].get<int>());
        line(c, tag, c["consistent"].get<bool>(), c["inconclusive"].get<bool>());
    }
    for (const auto& c : result["klein_recursion"]) {
        std::string tag = std::string("klein  n=3 i=") + std::to_string(c["i"].get<int>()) +
                          (c["twisted"].get<bool>() ? " twisted" : " untwisted");
        line(c, tag, c["consistent"].get<bool>(), c["inconclusive"].get<bool>());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"kocalc: exact twisted KO-theory of finite simplicial complexes"};
    app.require_subcommand(0, 1);

    bool print_schema = false;
    app.add_flag("--schema", print_schema, "print the job JSON schema and exit");
    int jobs = 1;
    app.add_option("--jobs", jobs, "worker thread bound");

    std::string space_name = "point";
    int space_n = 0;
    std::string complex_file, sigma1, sigma2, out_path, job_file;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--space", space_name,
                        "builtin space: point|sphere|circle|rp|klein|torus|s2xs2");
        cmd->add_option("--n", space_n, "dimension parameter of the builtin space");
        cmd->add_option("--complex", complex_file, "explicit complex JSON file");
        cmd->add_option("--sigma1", sigma1,
                        "degree-1 twist: builtin name or @file with a cocycle");
        cmd->add_option("--sigma2", sigma2,
                        "degree-2 twist: builtin name or @file with a cocycle");
        cmd->add_option("--out", out_path, "write the report to a file instead of stdout");
    };

    int degree = 0;
    bool reduced = true, twisted = false;
    std::string coeff = "Z";
    auto* c_coh = app.add_subcommand("cohomology", "one cohomology group");
    add_common(c_coh);
    c_coh->add_option("--degree", degree)->required();
    c_coh->add_option("--coeff", coeff, "Z|Z2|QmodZ");
    c_coh->add_flag("--twisted", twisted, "use the sigma1 local system");

    std::string ops_json;
    auto* c_ops = app.add_subcommand("ops", "cocycle-level operation (JSON options)");
    add_common(c_ops);
    c_ops->add_option("--args", ops_json, "operation options as inline JSON")->required();

    auto* c_ahss = app.add_subcommand("ahss", "full spectral sequence report");
    add_common(c_ahss);
    c_ahss->add_flag("--unreduced", "report unreduced groups");

    auto* c_ko = app.add_subcommand("ko", "one KO group");
    add_common(c_ko);
    c_ko->add_option("--degree", degree)->required();
    c_ko->add_flag("--unreduced", "report the unreduced group");

    auto* c_diff = app.add_subcommand("diff-e2", "differential-theory E2 page");
    add_common(c_diff);

    long long g4 = 1;
    auto* c_lift = app.add_subcommand("check-lift", "4-form lifting condition");
    add_common(c_lift);
    c_lift->add_option("--g4", g4, "multiple of the first H^4(Z) generator");

    auto* c_spin = app.add_subcommand("check-spin", "twisted Spin obstruction beta(B^2)");
    add_common(c_spin);
    std::string b_coords;
    c_spin->add_option("--B", b_coords, "coordinates of B in H^2(Z/2), e.g. 1,0,1 (default: all)");

    auto* c_rth = app.add_subcommand("r-theory", "twist groups of the R-theory");
    add_common(c_rth);

    int n_max = 4;
    bool golden = false;
    auto* c_ver = app.add_subcommand("verify", "reference-table cross-check matrix");
    add_common(c_ver);
    c_ver->add_option("--n-max", n_max, "largest RP^n to check");
    c_ver->add_flag("--golden", golden, "also print the human-readable pass/fail table");

    auto* c_run = app.add_subcommand("run", "run a raw job JSON file");
    c_run->add_option("file", job_file, "job JSON file")->required();
    c_run->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    if (const char* env = std::getenv("KOCALC_THREADS")) jobs = std::max(1, std::atoi(env));
    kocalc::set_worker_threads(jobs);

    if (print_schema) {
        std::cout << kocalc::job_schema() << "\n";
        return 0;
    }
    if (app.get_subcommands().empty()) {
        std::cout << app.help();
        return 0;
    }

    json job;
    try {
        auto fill_space = [&](json& j) {
            if (!complex_file.empty())
                j["space"] = {{"complex", load_json_file(complex_file)}};
            else
                j["space"] = {{"builtin", {{"name", space_name}, {"n", space_n}}}};
            json tw = json::object();
            auto tw_field = [&](const std::string& arg, int deg) -> json {
                if (arg.empty()) return nullptr;
                if (arg[0] == '@') return load_json_file(arg.substr(1));
                (void)deg;
                return arg;
            };
            if (!sigma1.empty()) tw["sigma1"] = tw_field(sigma1, 1);
            if (!sigma2.empty()) tw["sigma2"] = tw_field(sigma2, 2);
            if (!tw.empty()) j["twist"] = tw;
        };

        if (c_run->parsed()) {
            job = load_json_file(job_file);
        } else if (c_ver->parsed()) {
            job["command"] = "verify";
            job["options"] = {{"n_max", n_max}};
        } else {
            fill_space(job);
            json opts = json::object();
            if (c_coh->parsed()) {
                job["command"] = "cohomology";
                opts = {{"degree", degree}, {"coeff", coeff}, {"twisted", twisted}};
            } else if (c_ops->parsed()) {
                job["command"] = "ops";
                opts = json::parse(ops_json);
            } else if (c_ahss->parsed()) {
                job["command"] = "ahss";
                opts = {{"reduced", c_ahss->count("--unreduced") == 0}};
            } else if (c_ko->parsed()) {
                job["command"] = "ko";
                opts = {{"degree", degree}, {"reduced", c_ko->count("--unreduced") == 0}};
            } else if (c_diff->parsed()) {
                job["command"] = "diff-e2";
            } else if (c_lift->parsed()) {
                job["command"] = "check-lift";
                opts = {{"g4_coefficient", g4}};
            } else if (c_spin->parsed()) {
                job["command"] = "check-spin";
                if (!b_coords.empty()) {
                    json bc = json::array();
                    std::stringstream ss(b_coords);
                    std::string tok;
                    while (std::getline(ss, tok, ',')) bc.push_back(std::stoll(tok));
                    opts["B"] = bc;
                }
            } else if (c_rth->parsed()) {
                job["command"] = "r-theory";
            }
            job["options"] = opts;
        }
    } catch (const std::exception& e) {
        json err;
        err["error"] = {{"kind", "validation"}, {"message", e.what()}};
        emit(err, out_path);
        return 2;
    }

    kocalc::JobResult res = kocalc::run_job(job);
    emit(res.report, out_path);
    if (golden && res.exit_code == 0 && res.report.contains("result"))
        print_verify_table(res.report["result"]);
    return res.exit_code;
}
