#pragma once

#include "riocf/cfrac.hpp"

#include <string>
#include <vector>

namespace riocf {

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = false;
    std::string detail;  // failure diagnostics or a short note
};

// s1..s8: thematic verification suites over the bundled triangles, fractions,
// and transforms. Deterministic; a throwing check is recorded as a failure.
const std::vector<std::string>& suite_ids();
std::vector<CheckResult> run_suite(const std::string& id);
std::vector<CheckResult> run_all_suites();

// Every continued fraction the suites use, with numeric coefficients
// (y substituted where the source is bivariate), for cross-checks against
// the lattice-path oracle.
struct NamedCF {
    std::string name;
    CFrac cf;
};

std::vector<NamedCF> numeric_cf_registry();

}  // namespace riocf
