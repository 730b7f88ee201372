// galrep: run verification suites or one-shot queries.
//
//   galrep [--suite NAME]... [--params k=v,...] [--json PATH] [--csv PATH] [--jobs N] [--data PATH]
//   galrep query KIND ARGS...

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <thread>

#include "galrep/report.hpp"

namespace {

// Plain keys go to every requested suite; "suite.key" only to that suite.
std::map<std::string, galrep::SuiteParams> split_params(const std::vector<std::string>& specs, const std::vector<std::string>& suites) {
    std::map<std::string, std::map<std::string, std::string>> per;
    for (const auto& text : specs) {
        const auto parsed = galrep::SuiteParams::parse(text);
        for (const auto& [k, v] : parsed.overrides()) {
            const auto dot = k.find('.');
            if (dot == std::string::npos) {
                for (const auto& s : suites) per[s][k] = v;
                continue;
            }
            const auto suite = k.substr(0, dot);
            if (std::find(suites.begin(), suites.end(), suite) == suites.end())
                throw std::invalid_argument("invalid parameter '" + k + "': suite " + suite + " not requested");
            per[suite][k.substr(dot + 1)] = v;
        }
    }
    std::map<std::string, galrep::SuiteParams> out;
    for (auto& [s, kv] : per) out.emplace(s, galrep::SuiteParams(std::move(kv)));
    return out;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Galois-action verification suites for finite reductive groups"};
    app.require_subcommand(0, 1);

    std::vector<std::string> suites;
    std::vector<std::string> params;
    std::string json_path, csv_path, data_path;
    unsigned jobs = 1;
    std::int64_t seed = 0;
    bool timing = false, list = false;
    app.add_option("--suite", suites, "suite to run (repeatable; 'all' for every suite, the default)");
    app.add_option("--params", params, "k=v,... overrides; prefix a key with 'suite.' to target one suite");
    app.add_option("--json", json_path, "write the JSON report here");
    app.add_option("--csv", csv_path, "write the long-format CSV report here");
    app.add_option("--jobs", jobs, "suites run concurrently")->check(CLI::Range(1u, 256u));
    app.add_option("--data", data_path, "rationality table data file (default: $GALREP_TABLE1, then the shipped file)");
    app.add_option("--seed", seed, "accepted for interface stability; every check is deterministic");
    app.add_flag("--timing", timing, "include wall-clock seconds in the JSON report");
    app.add_flag("--list", list, "list suite names and query kinds");

    auto* q = app.add_subcommand("query", "one-shot computation");
    std::string kind;
    std::vector<std::string> qargs;
    std::string qjson;
    q->add_option("kind", kind, "d-core | 2-core | symbol-core | conductor | generic-degree | weyl | field")->required();
    q->add_option("args", qargs, "arguments, e.g. \"(4,2,1) d=3\"");
    q->add_option("--json", qjson, "write the JSON result here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (list) {
            for (const auto& s : galrep::suite_names()) std::cout << "suite " << s << "\n";
            for (const auto& k : galrep::query_kinds()) std::cout << "query " << k << "\n";
            return 0;
        }
        if (q->parsed()) {
            std::string joined;
            for (const auto& a : qargs) joined += (joined.empty() ? "" : " ") + a;
            const auto r = galrep::query(kind, joined);
            std::cout << r.text << "\n";
            if (!qjson.empty()) write_file(qjson, r.json.dump(2) + "\n");
            return 0;
        }

        if (suites.empty() || std::find(suites.begin(), suites.end(), "all") != suites.end()) suites = galrep::suite_names();
        for (const auto& s : suites)
            if (std::find(galrep::suite_names().begin(), galrep::suite_names().end(), s) == galrep::suite_names().end())
                throw std::invalid_argument("unknown suite '" + s + "'");
        galrep::SuiteOptions opt;
        opt.table1_path = data_path;
        opt.threads = jobs;  // the table certificate may also use them

        const auto reps = galrep::run_suites(suites, split_params(params, suites), opt, jobs);
        bool pass = true;
        for (const auto& r : reps) {
            pass = pass && r.pass();
            std::cout << (r.pass() ? "PASS " : "FAIL ") << r.name;
            if (!r.pass()) std::cout << "  (" << r.counterexample_total << " counterexamples)";
            std::cout << "\n";
            for (const auto& c : r.counterexamples) std::cout << "    " << c << "\n";
        }
        if (!json_path.empty()) write_file(json_path, galrep::report_json(reps, timing).dump(2) + "\n");
        if (!csv_path.empty()) write_file(csv_path, galrep::report_csv(reps));
        return pass ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "galrep: error: " << e.what() << "\n";
        return 2;
    }
}
