// Acceptance harness: runs every verification suite at nu in {0.5, 1, 2}
// (truncation 16, 96 quadrature nodes per axis) plus the kernel-identity
// suite at nu = pi, and prints one pass/fail line per criterion.

#include <algorithm>
#include <cstdio>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "bargmann/verification.hpp"

using namespace bargmann;

namespace {

struct Criterion {
    int number;
    std::string label;
    std::string suite;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list = {
        {1, "isometry of B1 and G", "isometry"},
        {2, "factorization B2 o B1 = G on the grid", "factorization"},
        {3, "image: annihilation and Gram diagonal", "image"},
        {4, "left inverse R o G = id, resolved prefactor", "left-inverse"},
        {5, "quaternionic round trip and slice independence", "quaternionic-roundtrip"},
        {6, "bridge: dual path, slice-invariant image, J o I = id", "bridge"},
        {7, "kernel identities: post-fit residual, kappa(pi) = 1", "kernel-identities"},
        {8, "Fourier: eigenvalues, closed forms, compositions", "fourier"},
        {9, "iterated-transform constants and symbol factorization", "appendix-constant"},
        {10, "reproducing kernels return point evaluations", "reproducing-kernels"},
    };
    return list;
}

struct CriterionOutcome {
    bool pass = true;
    double worst_residual = 0.0;
    std::vector<TransformReport> failures;
};

}  // namespace

int main() {
    RunConfig base;
    base.truncation = 16;
    base.quad_nodes = 96;
    base.tolerance = 1e-8;
    base.seed = 20240808;

    const double nus[] = {0.5, 1.0, 2.0};

    std::map<int, CriterionOutcome> outcomes;
    std::map<std::string, double> constants;

    for (double nu : nus) {
        RunConfig config = base;
        config.nu = nu;
        for (const Criterion& c : criteria()) {
            CriterionOutcome& out = outcomes[c.number];
            for (const TransformReport& rep : run_suite(c.suite, config)) {
                out.worst_residual = std::max(out.worst_residual, rep.residual);
                if (!rep.pass) {
                    out.pass = false;
                    out.failures.push_back(rep);
                }
                for (const auto& [k, v] : rep.constants)
                    constants[rep.identity + "." + k + " (nu=" + std::to_string(nu) + ")"] = v;
            }
        }
    }

    // criterion 7 additionally pins kappa = 1 at nu = pi; the fit constant
    // is limited by the kernel-section series tail, which must sit below the
    // 1e-10 bound, so this run widens the section truncation
    {
        RunConfig config = base;
        config.nu = std::numbers::pi;
        config.truncation = 32;
        CriterionOutcome& out = outcomes[7];
        for (const TransformReport& rep : run_suite("kernel-identities", config)) {
            out.worst_residual = std::max(out.worst_residual, rep.residual);
            if (!rep.pass) {
                out.pass = false;
                out.failures.push_back(rep);
            }
        }
    }

    bool all_pass = true;
    for (const Criterion& c : criteria()) {
        const CriterionOutcome& out = outcomes[c.number];
        all_pass = all_pass && out.pass;
        std::printf("criterion %2d  %-52s %s  (max residual %.3e)\n", c.number, c.label.c_str(),
                    out.pass ? "PASS" : "FAIL", out.worst_residual);
        for (const TransformReport& rep : out.failures)
            std::printf("              failed: %s residual %.3e tolerance %.3e\n",
                        rep.identity.c_str(), rep.residual, rep.tolerance);
    }

    std::printf("\nresolved constants:\n");
    for (const auto& [k, v] : constants)
        if (k.find("fitted") != std::string::npos || k.find("kappa") != std::string::npos)
            std::printf("  %-48s % .15g\n", k.c_str(), v);

    std::printf("\nacceptance: %s\n", all_pass ? "PASS" : "FAIL");
    return all_pass ? 0 : 1;
}
