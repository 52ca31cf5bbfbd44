#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cvf/report.hpp"

namespace cvf {

struct VerifyOptions {
    int n = 0;        // restrict SL(n) checks to one dimension; 0 means {2,3,4}
    int max_k = 8;    // field index bound (Witt relations, psi family)
    int max_m = 8;    // tr-degree bound
    int max_n = 8;    // beta-weight bound
    int samples = 10; // sample count per pointwise identity
    std::uint64_t seed = 42;
    int height = 5;
    // Test hook for the failure path: "psi3-sign" flips the sign of Psi_3 in
    // the Witt relation check, which must then fail with a witness.
    std::string inject_fault;
};

const std::vector<std::string>& suite_names();

// Checks for one suite; "all" concatenates every suite.
std::vector<Check> build_suite(const std::string& suite, const VerifyOptions& opt);

} // namespace cvf
