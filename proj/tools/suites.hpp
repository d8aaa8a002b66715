#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nodallab/random.hpp"

namespace nodallab::cli {

struct VerifyOptions {
    std::uint64_t seed = kDefaultSeed;
    int subdivisions = 5;
    int n_max = 8;
    int pairs = 100;
    double tol_cert = 1e-8;
    double tol_ortho = 1e-8;
    double cover_floor = 1e-3;
};

struct CheckResult {
    std::string name;
    std::string parameter;
    double value = 0.0;
    double threshold = 0.0;
    bool pass = false;
    std::string detail;
};

const std::vector<std::string>& suite_names(); // includes "all"

/// Runs one named suite; "all" concatenates every suite in a fixed order.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt);

} // namespace nodallab::cli
