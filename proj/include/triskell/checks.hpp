#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "triskell/json_io.hpp"
#include "triskell/matrix.hpp"

namespace triskell {

struct SuiteConfig {
    std::uint64_t seed = 0;
    std::size_t trials = 200;
    double tol = 1e-9;
    std::size_t max_size = 8;
    // Perturbs one compared object on trial 0 so a run must fail; used to
    // prove the comparisons can actually detect differences.
    bool corrupt = false;
};

struct SuiteReport {
    std::string name;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t failures = 0;
    Json first_failure;  // null when clean

    bool ok() const { return failures == 0; }
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
std::string suite_description(const std::string& name);

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);
Json report_to_json(const SuiteReport& r);

// Occupation-profile sum for the symmetric-power entries: over nonnegative
// integer matrices rho with row margins m and column margins p, sum
// prod_y p(y)! / prod_{x,y} rho(x,y)! times prod r(x,y)^rho(x,y).
Num de_coefficient(const Matrix& r, const std::vector<std::string>& m_points,
                   const std::vector<std::string>& p_points);

}  // namespace triskell
