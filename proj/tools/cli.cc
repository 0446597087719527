// Copyright 2026 The mbcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mbcert/certifier.h"
#include "mbcert/reproduce.h"
#include "mbcert/spec_file.h"

namespace mbcert {

namespace {

using nlohmann::json;

std::string fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    return buf;
}

std::string face_string(const FaceSigns &s) {
    std::string out = "(";
    for (int i = 0; i < 3; i++) {
        out += s[i] > 0 ? '+' : '-';
    }
    return out + ")";
}

json verdict_json(const Verdict &v) {
    return {{"route", route_name(v.route)},
            {"is_breaking", v.is_breaking},
            {"margin", v.margin},
            {"worst_face", v.worst_face}};
}

std::string verdict_text(const Verdict &v) {
    std::ostringstream ss;
    ss.precision(10);
    ss << route_name(v.route) << ": " << (v.is_breaking ? "breaking" : "not breaking") << " margin=" << v.margin
       << " worst_face=" << face_string(v.worst_face);
    return ss.str();
}

struct CommonFlags {
    double tol = kDefaultTol;
    std::size_t samples = 10000;
    std::uint64_t seed = 0;
    int workers = 1;
    std::string format = "text";
};

int cmd_certify(const std::string &path, const CommonFlags &f, std::ostream &out) {
    auto start = std::chrono::steady_clock::now();
    PauliTransferMatrix t = parse_channel_spec(read_text_file(path));
    ChannelDecomposition d = canonical_decompose(t);
    Verdict support = is_magic_breaking(t, f.tol);
    std::optional<Verdict> disc;
    if (d.canonical.lam_vec().cwiseAbs().minCoeff() >= 1e-12) {
        auto qs = face_quadratics(d);
        disc = discriminant_check(qs, f.tol);
    }
    Verdict mc = monte_carlo_check(t, f.samples, f.tol, f.seed, f.workers);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (f.format == "json") {
        json j;
        j["decomposition"] = json::parse(decomposition_to_spec(d))["canonical"];
        json routes = json::array();
        routes.push_back(verdict_json(support));
        if (disc) {
            routes.push_back(verdict_json(*disc));
        }
        routes.push_back(verdict_json(mc));
        j["routes"] = routes;
        j["is_breaking"] = support.is_breaking;
        j["margin"] = support.margin;
        j["worst_face"] = support.worst_face;
        j["samples"] = f.samples;
        j["seed"] = f.seed;
        j["workers"] = f.workers;
        j["tol"] = f.tol;
        j["seconds"] = secs;
        out << j.dump(2) << "\n";
    } else {
        const auto &c = d.canonical;
        out.precision(10);
        out << "t = (" << c.t[0] + 0.0 << ", " << c.t[1] + 0.0 << ", " << c.t[2] + 0.0 << ")\n";
        out << "lambda = (" << c.lam[0] << ", " << c.lam[1] << ", " << c.lam[2] << ")\n";
        out << "pre = (" << d.pre.theta << ", " << d.pre.phi << ", " << d.pre.psi << ")\n";
        out << "post = (" << d.post.theta << ", " << d.post.phi << ", " << d.post.psi << ")\n";
        out << verdict_text(support) << "\n";
        if (disc) {
            out << verdict_text(*disc) << "\n";
        } else {
            out << "discriminant: skipped (degenerate ellipsoid)\n";
        }
        out << verdict_text(mc) << " samples=" << f.samples << " seed=" << f.seed << "\n";
        out << "verdict: " << (support.is_breaking ? "magic-breaking" : "not magic-breaking") << "\n";
        out << "tol = " << f.tol << ", seconds = " << secs << "\n";
    }
    return support.is_breaking ? kExitPass : kExitFail;
}

int cmd_decompose(const std::string &path, std::ostream &out) {
    PauliTransferMatrix t = parse_channel_spec(read_text_file(path));
    out << decomposition_to_spec(canonical_decompose(t)) << "\n";
    return kExitPass;
}

int cmd_threshold(const std::string &family, const std::string &target, double tol, const std::string &format,
                  std::ostream &out) {
    std::function<PauliTransferMatrix(double)> fam;
    if (family == "depolarizing") {
        fam = depolarizing;
    } else if (family == "dephasing") {
        fam = dephasing;
    } else {
        throw BisectionError("no monotone family named '" + family + "'");
    }
    double radius = target == "t_polytope" ? kTPolytopeRadius : kStabilizerRadius;
    double p = threshold_bisect(fam, 0, 1, tol, radius);
    if (format == "json") {
        out << json{{"family", family}, {"target", target}, {"threshold", p}, {"tol", tol}}.dump(2) << "\n";
    } else {
        out << fixed6(p) << "\n";
    }
    return kExitPass;
}

int cmd_rom(const std::string &path, int qubits, const std::string &format, std::ostream &out) {
    if (qubits > kMaxQubits) {
        throw UnsupportedSizeError("at most 2 qubits are supported");
    }
    PauliCoeffState s = parse_state_spec(read_text_file(path), qubits);
    StabilizerSet stabs = enumerate_stabilizers(s.n_qubits());
    RomResult r = rom_decomposition(s, stabs);
    if (format == "json") {
        out << json{{"n_qubits", s.n_qubits()}, {"rom", r.value}, {"support_size", r.support_size}}.dump(2) << "\n";
    } else {
        out << "rom = " << fixed6(r.value) << "\n";
        out << "support_size = " << r.support_size << "\n";
    }
    return kExitPass;
}

int cmd_reproduce(const ReproduceOptions &opts, const std::vector<int> &only, const std::string &format,
                  std::ostream &out, std::ostream &err) {
    std::vector<CriterionResult> results;
    if (only.empty()) {
        results = run_acceptance(opts);
    } else {
        for (int id : only) {
            results.push_back(run_criterion(id, opts));
        }
    }
    bool all = true;
    json rows = json::array();
    for (const auto &r : results) {
        all = all && r.passed;
        if (format == "json") {
            rows.push_back({{"id", r.id},
                            {"name", r.name},
                            {"passed", r.passed},
                            {"detail", r.detail},
                            {"seconds", r.seconds}});
        } else {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%7.2f s", r.seconds);
            out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << " (" << buf << ") " << r.detail
                << "\n";
        }
        if (!r.passed) {
            err << "failing fixture: " << r.name << "\n";
        }
    }
    if (format == "json") {
        out << json{{"criteria", rows}, {"all_passed", all}, {"seed", opts.seed}}.dump(2) << "\n";
    }
    return all ? kExitPass : kExitFail;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Certify magic-breaking qubit channels."};
    app.require_subcommand(1);

    CommonFlags flags;
    auto add_format = [&](CLI::App *sub) {
        sub->add_option("--format", flags.format, "Report format")->check(CLI::IsMember({"text", "json"}));
    };

    std::string path;
    auto *certify = app.add_subcommand("certify", "Run every certification route on a channel spec file");
    certify->add_option("file", path, "Channel spec (JSON)")->required();
    certify->add_option("--tol", flags.tol, "Membership slack");
    certify->add_option("--samples", flags.samples, "Monte-Carlo samples");
    certify->add_option("--seed", flags.seed, "Monte-Carlo seed");
    certify->add_option("--workers", flags.workers, "Monte-Carlo workers")->check(CLI::PositiveNumber);
    add_format(certify);

    auto *decompose = app.add_subcommand("decompose", "Print the canonical-form spec of a channel");
    decompose->add_option("file", path, "Channel spec (JSON)")->required();

    std::string family;
    std::string target = "stabilizer";
    double bisect_tol = 1e-7;
    auto *threshold = app.add_subcommand("threshold", "Bisect the breaking threshold of a channel family");
    threshold->add_option("family", family, "depolarizing or dephasing")->required();
    threshold->add_option("--target", target, "Polytope")->check(CLI::IsMember({"stabilizer", "t_polytope"}));
    threshold->add_option("--tol", bisect_tol, "Bisection resolution")->check(CLI::PositiveNumber);
    add_format(threshold);

    int qubits = 0;
    auto *rom_cmd = app.add_subcommand("rom", "Robustness of magic of a state spec file");
    rom_cmd->add_option("file", path, "State spec (JSON)")->required();
    rom_cmd->add_option("--qubits", qubits, "Expected number of qubits");
    add_format(rom_cmd);

    ReproduceOptions ropts;
    std::vector<int> only;
    auto *reproduce = app.add_subcommand("reproduce", "Run the acceptance fixtures");
    reproduce->add_option("--threshold-tol", ropts.threshold_tol, "Allowed threshold error");
    reproduce->add_option("--lambda-perturbation", ropts.lambda_perturbation, "Shift of the lambda fixture");
    reproduce->add_option("--seed", ropts.seed, "Seed for randomized fixtures");
    reproduce->add_option("--workers", ropts.mc_workers, "Monte-Carlo workers")->check(CLI::PositiveNumber);
    reproduce->add_option("--only", only, "Run only these criteria")->check(CLI::Range(1, 10));
    add_format(reproduce);

    std::vector<const char *> argv{"mbcert"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitError;
    }

    try {
        if (certify->parsed()) {
            return cmd_certify(path, flags, out);
        }
        if (decompose->parsed()) {
            return cmd_decompose(path, out);
        }
        if (threshold->parsed()) {
            return cmd_threshold(family, target, bisect_tol, flags.format, out);
        }
        if (rom_cmd->parsed()) {
            return cmd_rom(path, qubits, flags.format, out);
        }
        if (reproduce->parsed()) {
            return cmd_reproduce(ropts, only, flags.format, out, err);
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

}  // namespace mbcert
