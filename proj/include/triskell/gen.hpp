#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "triskell/matrix.hpp"
#include "triskell/mll.hpp"
#include "triskell/triskell.hpp"

namespace triskell {

// Deterministic draws on top of the (fully specified) mt19937_64 stream;
// stdlib distributions are implementation-defined, so they are avoided.
class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next();
    std::size_t below(std::size_t n);                      // uniform in [0, n)
    std::int64_t range(std::int64_t lo, std::int64_t hi);  // inclusive
    bool coin(std::size_t num = 1, std::size_t den = 2);   // true with prob num/den

private:
    std::mt19937_64 eng_;
};

std::uint64_t mix_name(std::uint64_t seed, const std::string& name);

Carrier random_carrier(Rng& r, std::size_t n, const std::string& prefix = "p");
Weight random_weight(Rng& r, Monoid m);
Triskell random_triskell(Rng& r, const Carrier& src, const Carrier& tgt, Monoid m,
                         std::size_t max_edges);
Matrix random_matrix(Rng& r, const Carrier& rows, const Carrier& cols, NumKind kind);

// Endo whose feedback part is nilpotent by construction: hidden points are
// ranked and hidden-to-hidden edges strictly increase the rank.
struct TracedInstance {
    Triskell t;
    std::vector<std::string> hidden;
};
TracedInstance random_traced(Rng& r, std::size_t visible, std::size_t hidden, Monoid m,
                             std::size_t max_edges);

Formula random_formula(Rng& r, const std::vector<std::string>& atoms, std::size_t depth);
ProofPtr random_proof(Rng& r, std::size_t steps, std::size_t max_cuts,
                      const std::vector<std::string>& atoms);

}  // namespace triskell
