#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qalign/cli.hpp"
#include "qalign/errors.hpp"
#include "qalign/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitVerifyFailed = 3;

qalign::BlochVector parse_vec3(const std::string& text, const std::string& what) {
    std::vector<double> vals;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &pos);
        } catch (const std::exception&) {
            throw qalign::invalid_parameter_error(what + ": cannot parse '" + item + "'");
        }
        if (pos != item.size())
            throw qalign::invalid_parameter_error(what + ": trailing characters in '" + item + "'");
        vals.push_back(v);
    }
    if (vals.size() != 3) throw qalign::invalid_parameter_error(what + ": expected 3 comma-separated reals");
    return qalign::bloch(vals[0], vals[1], vals[2]);
}

struct ParamRange {
    std::string name;
    double start = 0.0;
    double stop = 1.0;
    int count = 2;
};

ParamRange parse_param_range(const std::string& text) {
    // <name>:<start>:<stop>:<count>
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 4)
        throw qalign::invalid_parameter_error("--param expects <name>:<start>:<stop>:<count>");
    ParamRange p;
    p.name = parts[0];
    try {
        p.start = std::stod(parts[1]);
        p.stop = std::stod(parts[2]);
        p.count = std::stoi(parts[3]);
    } catch (const std::exception&) {
        throw qalign::invalid_parameter_error("--param: cannot parse range '" + text + "'");
    }
    if (p.count < 2) throw qalign::invalid_parameter_error("--param count must be at least 2");
    return p;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Purification-based distinguishability of qubit states: overlap, D_N and the alignment angle"};
    app.require_subcommand(1);

    // pair
    std::string pair_r, pair_s, pair_format = "kv";
    CLI::App* pair = app.add_subcommand("pair", "report every metric for one state pair");
    pair->add_option("--r", pair_r, "first Bloch vector, x,y,z")->required();
    pair->add_option("--s", pair_s, "second Bloch vector, x,y,z")->required();
    pair->add_option("--format", pair_format, "kv or json")->check(CLI::IsMember({"kv", "json"}));

    // sweep
    std::string sweep_channel, sweep_param, sweep_out, sweep_reference, sweep_format = "csv";
    std::vector<std::string> sweep_states;
    CLI::App* sweep = app.add_subcommand("sweep", "sweep a channel parameter over a state family");
    sweep->add_option("--channel", sweep_channel, "channel spec, e.g. bf:p=0")->required();
    sweep->add_option("--param", sweep_param, "<name>:<start>:<stop>:<count>")->required();
    sweep->add_option("--state", sweep_states, "state family member phi=..,theta=..,r=.. (repeatable)")
        ->required();
    sweep->add_option("--reference", sweep_reference, "compare against a reference transform (ideal-not)")
        ->check(CLI::IsMember({"ideal-not"}));
    sweep->add_option("--out", sweep_out, "output path (default: stdout)");
    sweep->add_option("--format", sweep_format, "csv")->check(CLI::IsMember({"csv"}));

    // verify
    std::string verify_suite = "all";
    std::uint64_t verify_samples = 10000;
    std::uint64_t verify_seed = 20240915;
    CLI::App* verify = app.add_subcommand("verify", "run a seeded invariant suite");
    verify->add_option("--suite", verify_suite, "suite name or 'all'");
    verify->add_option("--samples", verify_samples, "sample count");
    verify->add_option("--seed", verify_seed, "RNG seed");

    // channel-info
    std::string info_channel;
    CLI::App* info = app.add_subcommand("channel-info", "print the affine data of a channel spec");
    info->add_option("--channel", info_channel, "channel spec")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*pair) {
            const qalign::BlochVector r = parse_vec3(pair_r, "--r");
            const qalign::BlochVector s = parse_vec3(pair_s, "--s");
            std::cout << (pair_format == "json" ? qalign::format_pair_json(r, s)
                                                : qalign::format_pair_kv(r, s));
            return kExitOk;
        }

        if (*sweep) {
            const ParamRange pr = parse_param_range(sweep_param);
            qalign::SweepSpec spec;
            spec.channel = sweep_channel;
            spec.param_name = pr.name;
            spec.start = pr.start;
            spec.stop = pr.stop;
            spec.count = pr.count;
            for (const std::string& st : sweep_states) spec.states.push_back(qalign::parse_state_spec(st));
            spec.reference = sweep_reference == "ideal-not" ? qalign::ReferenceTransform::ideal_not
                                                            : qalign::ReferenceTransform::none;
            const std::vector<qalign::SweepRow> rows = qalign::run_sweep(spec);
            if (sweep_out.empty()) {
                qalign::write_sweep_csv(rows, std::cout);
            } else {
                std::ofstream os(sweep_out);
                if (!os) {
                    std::cerr << "error: cannot open output file '" << sweep_out << "'\n";
                    return kExitUsage;
                }
                qalign::write_sweep_csv(rows, os);
            }
            return kExitOk;
        }

        if (*verify) {
            std::vector<std::string> suites;
            if (verify_suite == "all")
                suites = qalign::verify_suite_names();
            else
                suites.push_back(verify_suite);
            bool all_pass = true;
            for (const std::string& name : suites) {
                const qalign::VerifyResult res = qalign::run_verify_suite(name, verify_samples, verify_seed);
                all_pass = all_pass && res.pass;
                std::cout << (res.pass ? "[PASS] " : "[FAIL] ") << res.suite << " samples=" << res.samples
                          << " max_violation=" << qalign::format_real(res.max_violation)
                          << " tol=" << qalign::format_real(res.tolerance) << '\n';
            }
            return all_pass ? kExitOk : kExitVerifyFailed;
        }

        if (*info) {
            const qalign::AffineChannel ch = qalign::build_channel(qalign::parse_channel_spec(info_channel));
            std::cout << qalign::format_channel_info(ch);
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitUsage;
}
