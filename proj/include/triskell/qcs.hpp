#pragma once

#include "triskell/fock.hpp"

namespace triskell {

// Orthogonality test: measure the trace of the composite and ask whether it
// lands in the chosen "bottom" set of scalars.
struct OrthoSpec {
    MeasureMap m = MeasureMap::identity();
    std::string bot_name = "open(0,1)";

    bool bot(const Num& v) const;
    static OrthoSpec open_unit();                      // ]0,1[ with identity measure
    static OrthoSpec named(const std::string& bot, MeasureMap m);
};

// tr_m(t . u) in bot; both must be endos over the same web.
bool ortho(const Triskell& t, const Triskell& u, const OrthoSpec& spec);

struct PolarResult {
    bool ok = true;
    std::string witness;  // description of the first failing generator
    explicit operator bool() const { return ok; }
};

// Space presented by generators: a web, an orthogonality spec, and two
// generator families that must be pairwise orthogonal (checked on
// construction; biorthogonal closures are never computed).
class QcsSpace {
public:
    QcsSpace(Carrier web, OrthoSpec spec, std::vector<Triskell> generators,
             std::vector<Triskell> dual_generators);

    const Carrier& web() const { return web_; }
    const OrthoSpec& spec() const { return spec_; }
    Monoid monoid() const { return monoid_; }
    const std::vector<Triskell>& generators() const { return gens_; }
    const std::vector<Triskell>& dual_generators() const { return duals_; }

    QcsSpace dual() const;  // swaps the two generator families

private:
    Carrier web_;
    OrthoSpec spec_;
    Monoid monoid_;
    std::vector<Triskell> gens_, duals_;
};

// Checks the candidate against one generator family: the duals when
// side_duals is true (evidence for membership in the space), the primal
// generators otherwise (membership in the dual space).
PolarResult polar_check(const Triskell& cand, const QcsSpace& space, bool side_duals = true);

// GoI application through an arrow triskell f over a product web (X,Y):
// an f-edge (x,y) -> (x',y') combines with an a-edge x -> x' into y -> y'.
Triskell apply_arrow(const Triskell& f, const Triskell& a);

QcsSpace qcs_tensor(const QcsSpace& a, const QcsSpace& b,
                    std::vector<Triskell> dual_generators = {});
// f is a morphism candidate from a to b when every applied generator stays
// polar against b's duals.
bool arrow_member(const Triskell& f, const QcsSpace& a, const QcsSpace& b,
                  std::string* witness = nullptr);
QcsSpace qcs_with(const QcsSpace& a, const QcsSpace& b);
QcsSpace qcs_plus(const QcsSpace& a, const QcsSpace& b);
QcsSpace qcs_bang(const QcsSpace& a, std::size_t degree,
                  std::vector<Triskell> dual_generators = {});

// Coefficients a_k with measure(a_k) = 1/k, indexed from k = 1.
struct SeriesCoefficients {
    Monoid monoid = Monoid::Rational;
    std::vector<Weight> values;

    std::size_t max_index() const { return values.size(); }
    const Weight& at(std::size_t k) const;  // 1-based
    void validate(const MeasureMap& m) const;
    static SeriesCoefficients harmonic(Monoid m, std::size_t max_k = 512);
};

struct MeasurementResult {
    Num lhs;        // -log det_m(1 u (-a.b))
    Num mid;        // sum_k m(a_k) tr_m((a.b)^k)
    Num det_value;  // the determinant inside the log
    std::size_t terms = 0;
};

// The two routes of the measurement identity; lhs and mid agree within
// series tolerance when the composite's spectral radius is below one.
// Requires a multiplicative measure with m(-1) = -1.
MeasurementResult measurement(const Triskell& a, const Triskell& b, const MeasureMap& m,
                              const SeriesCoefficients& coeffs, double tol = 1e-9);

struct BoundedReport {
    bool ok = true;
    std::string witness;  // web point with no admissible probe weight
};

// Every web point must admit a probe lambda whose one-point partial identity
// passes polar_check on both sides. An empty probe list selects the default
// grid {1/2^i : i <= 10} (just the unit for unit-like monoids).
BoundedReport bounded_check(const QcsSpace& a, std::vector<Weight> probe = {});

}  // namespace triskell
