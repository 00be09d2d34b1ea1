// Verification and transform harness for the Segal-Bargmann transform
// library: runs the operator-identity suites, applies named transforms to
// serialized coefficient documents, and produces convergence tables.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bargmann/fourier.hpp"
#include "bargmann/serialization.hpp"
#include "bargmann/slice_transforms.hpp"
#include "bargmann/spaces.hpp"
#include "bargmann/transforms.hpp"
#include "bargmann/verification.hpp"

namespace {

using namespace bargmann;

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
    out << text << '\n';
}

struct TransformEntry {
    std::string expected_basis;
    std::string produces;
};

FockCoeffs2 as_fock2(const CoefficientDocument& doc) {
    if (const auto* f2 = std::get_if<FockCoeffs2>(&doc)) return *f2;
    return a_subspace_embed(std::get<ASubspaceCoeffs>(doc));
}

// basis accepted by each transform id ("fock2" also admits "a2" documents,
// which embed canonically)
const std::map<std::string, TransformEntry>& transform_table() {
    static const std::map<std::string, TransformEntry> table = {
        {"b1", {"hermite", "fock1"}},      {"b1inv", {"fock1", "hermite"}},
        {"b2", {"fock1", "a2"}},           {"g", {"hermite", "a2"}},
        {"r", {"fock2", "hermite"}},       {"bh", {"hermite", "slice"}},
        {"bhinv", {"slice", "hermite"}},   {"i", {"fock2", "slice"}},
        {"j", {"slice", "a2"}},            {"t1-", {"fock1", "a2"}},
        {"t1+", {"fock1", "a2"}},          {"t2-", {"fock2", "fock1"}},
        {"t2+", {"fock2", "fock1"}},       {"fourier-", {"hermite", "hermite"}},
        {"fourier+", {"hermite", "hermite"}}, {"gk", {"hermite", "hyperfock"}},
    };
    return table;
}

bool basis_accepted(const std::string& expected, const std::string& actual) {
    if (expected == actual) return true;
    return expected == "fock2" && actual == "a2";
}

int run_transform(const std::string& name, const std::string& in_path,
                  const std::string& out_path, std::optional<double> nu_override, int gk_level) {
    const auto it = transform_table().find(name);
    if (it == transform_table().end()) {
        std::cerr << "unknown transform '" << name << "'\n";
        return kExitUsage;
    }

    CoefficientDocument doc = read_coefficient_document(in_path);
    if (nu_override) std::visit([&](auto& d) { d.nu = *nu_override; }, doc);

    const std::string actual = basis_name(doc);
    if (!basis_accepted(it->second.expected_basis, actual)) {
        std::cerr << "transform '" << name << "' expects basis '" << it->second.expected_basis
                  << "', got '" << actual << "'\n";
        return kExitUsage;
    }

    const auto as_hermite = [&]() -> HermiteCoeffs {
        if (const auto* h = std::get_if<HermiteCoeffs>(&doc)) return *h;
        throw std::invalid_argument("transform '" + name +
                                    "' needs complex hermite coefficients");
    };

    if (name == "gk") {
        const HyperFockCoeffs lifted = gk_transform(as_hermite(), gk_level);
        nlohmann::json j;
        j["nu"] = lifted.nu;
        j["basis"] = "hyperfock";
        j["level"] = lifted.level;
        nlohmann::json coeffs = nlohmann::json::array();
        for (const Complex& v : lifted.b)
            coeffs.push_back(nlohmann::json::array({v.real(), v.imag()}));
        j["coeffs"] = coeffs;
        write_text(out_path, j.dump(2));
        return kExitPass;
    }

    CoefficientDocument result;
    if (name == "b1") {
        result = b1_forward(as_hermite());
    } else if (name == "b1inv") {
        result = b1_inverse(std::get<FockCoeffs1>(doc));
    } else if (name == "b2") {
        result = b2_forward_fock1(std::get<FockCoeffs1>(doc));
    } else if (name == "g") {
        result = g_transform(as_hermite());
    } else if (name == "r") {
        result = r_transform(as_fock2(doc));
    } else if (name == "bh") {
        if (const auto* hq = std::get_if<HermiteCoeffsQ>(&doc))
            result = bh_forward(*hq);
        else
            result = bh_forward(std::get<HermiteCoeffs>(doc));
    } else if (name == "bhinv") {
        const HermiteCoeffsQ back = bh_inverse(std::get<SliceRegularSeries>(doc));
        bool complex_valued = true;
        for (const Quaternion& c : back.c) complex_valued &= c.slice_i_defect() <= 1e-15;
        if (complex_valued) {
            HermiteCoeffs h;
            h.nu = back.nu;
            for (const Quaternion& c : back.c) h.c.push_back(c.to_complex_i());
            result = h;
        } else {
            result = back;
        }
    } else if (name == "i") {
        result = i_transform(as_fock2(doc));
    } else if (name == "j") {
        result = j_transform(std::get<SliceRegularSeries>(doc));
    } else if (name == "t1-" || name == "t1+") {
        result = t1_transform(std::get<FockCoeffs1>(doc),
                              name == "t1-" ? SignChoice::minus : SignChoice::plus);
    } else if (name == "t2-" || name == "t2+") {
        result = t2_transform(as_fock2(doc),
                              name == "t2-" ? SignChoice::minus : SignChoice::plus);
    } else if (name == "fourier-" || name == "fourier+") {
        result = fourier_rescaled(as_hermite(),
                                  name == "fourier-" ? SignChoice::minus : SignChoice::plus);
    }

    if (out_path.empty())
        std::cout << to_json_string(result) << '\n';
    else
        write_coefficient_document(out_path, result);
    return kExitPass;
}

int run_convergence(const std::string& suite, const std::vector<int>& sweep,
                    const std::string& param, RunConfig config, const std::string& out_path) {
    if (!is_suite_name(suite) || suite == "all") {
        std::cerr << "unknown suite '" << suite << "'\n";
        return kExitUsage;
    }
    if (sweep.empty()) {
        std::cerr << "empty sweep\n";
        return kExitUsage;
    }
    if (!std::is_sorted(sweep.begin(), sweep.end())) {
        std::cerr << "sweep must be monotone increasing\n";
        return kExitUsage;
    }

    std::ostringstream csv;
    csv << "parameter,residual\n";
    for (std::size_t i = 0; i < sweep.size(); ++i) {
        RunConfig c = config;
        if (param == "nodes")
            c.quad_nodes = sweep[i];
        else
            c.truncation = sweep[i];
        double residual = 0.0;
        for (const TransformReport& r : run_suite(suite, c))
            residual = std::max(residual, r.residual);
        csv << sweep[i] << ',' << residual;
        if (i + 1 < sweep.size()) csv << '\n';
    }
    write_text(out_path, csv.str());
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Segal-Bargmann transform verification harness"};
    app.require_subcommand(1);

    RunConfig config;
    std::string config_path, suites_arg, out_path;

    const auto add_config_flags = [&](CLI::App* cmd) {
        cmd->add_option("--nu", config.nu, "Gaussian weight rate (positive)");
        cmd->add_option("--truncation", config.truncation, "basis truncation N");
        cmd->add_option("--quad-nodes", config.quad_nodes, "quadrature nodes per axis");
        cmd->add_option("--tolerance", config.tolerance, "quadrature-class tolerance");
        cmd->add_option("--seed", config.seed, "seed for randomized property inputs");
        cmd->add_option("--config", config_path, "JSON file mirroring the run configuration");
        cmd->add_option("--out", out_path, "output path (default stdout)");
    };

    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    add_config_flags(verify);
    verify->add_option("--suites", suites_arg, "comma-separated suite names (or 'all')");

    CLI::App* transform = app.add_subcommand("transform", "apply a named transform");
    std::string name, in_path;
    transform->add_option("name", name, "transform id")->required();
    transform->add_option("input", in_path, "input coefficient document")->required();
    transform->add_option("output", out_path, "output path (default stdout)");
    double nu_override_value = 0.0;
    CLI::Option* nu_opt =
        transform->add_option("--nu", nu_override_value, "override the document nu");
    int gk_level = 1;
    transform->add_option("--level", gk_level, "iteration level for gk");

    CLI::App* convergence = app.add_subcommand("convergence", "residual vs parameter table");
    std::string suite, sweep_arg, param = "nodes";
    convergence->add_option("suite", suite, "suite name")->required();
    convergence->add_option("--sweep", sweep_arg, "comma-separated parameter values")->required();
    convergence->add_option("--param", param, "swept parameter: nodes or truncation")
        ->check(CLI::IsMember({"nodes", "truncation"}));
    add_config_flags(convergence);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw std::invalid_argument("cannot open config '" + config_path + "'");
            std::ostringstream buf;
            buf << in.rdbuf();
            RunConfig merged = run_config_from_json(buf.str(), RunConfig{});
            // explicit command-line flags take precedence over the file
            for (CLI::App* cmd : {verify, convergence}) {
                if (!cmd->parsed()) continue;
                if (cmd->count("--nu")) merged.nu = config.nu;
                if (cmd->count("--truncation")) merged.truncation = config.truncation;
                if (cmd->count("--quad-nodes")) merged.quad_nodes = config.quad_nodes;
                if (cmd->count("--tolerance")) merged.tolerance = config.tolerance;
                if (cmd->count("--seed")) merged.seed = config.seed;
            }
            config = merged;
        }

        if (verify->parsed()) {
            if (!suites_arg.empty()) config.suites = split_list(suites_arg);
            config.validate();
            const SuiteReport report = run_verification(config);
            write_text(out_path, to_json_string(report));
            return report.pass ? kExitPass : kExitFailure;
        }
        if (transform->parsed()) {
            std::optional<double> nu_override;
            if (nu_opt->count()) nu_override = nu_override_value;
            return run_transform(name, in_path, out_path, nu_override, gk_level);
        }
        if (convergence->parsed()) {
            std::vector<int> sweep;
            for (const std::string& s : split_list(sweep_arg)) sweep.push_back(std::stoi(s));
            config.validate();
            return run_convergence(suite, sweep, param, config, out_path);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}
