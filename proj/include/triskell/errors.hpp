#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace triskell {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A series or iteration failed to converge within its term budget.
struct divergence_error : error {
    using error::error;
};

// Execution over a feedback carrier hit a cycle; `witness` lists the points.
struct cycle_error : error {
    cycle_error(const std::string& msg, std::vector<std::string> cyc)
        : error(msg), witness(std::move(cyc)) {}
    std::vector<std::string> witness;
};

struct parse_error : error {
    parse_error(const std::string& msg, std::size_t position)
        : error(msg + " at position " + std::to_string(position)), pos(position) {}
    std::size_t pos;
};

}  // namespace triskell
