#pragma once

#include <functional>
#include <optional>

#include "triskell/numeric.hpp"

namespace triskell {

// Commutative weight monoids. Every monoid here is extended with a
// distinguished absorbing zero (see Weight::zero).
enum class Monoid {
    Unit,        // trivial {1}
    SignedUnit,  // {+1, -1}
    NonnegReal,  // ([0,inf), *)
    SignedReal,  // (R, *)
    Complex,     // (C, *)
    Rational,    // (Q, *), exact
};

std::string monoid_name(Monoid m);
Monoid monoid_from_name(const std::string& s);

// True if negation is defined (the monoid splits as {+1,-1} x base).
bool monoid_signed(Monoid m);
// Smallest signed monoid containing m: unit -> signed-unit,
// nonneg-real -> signed-real, already-signed monoids are fixed.
Monoid signed_extension(Monoid m);
// True if weights of m can be added (numeric payload).
bool monoid_has_add(Monoid m);

class Weight {
public:
    Weight() : Weight(one(Monoid::Unit)) {}

    static Weight one(Monoid m);
    static Weight zero(Monoid m);
    static Weight sign_unit(int s);  // +1 or -1 in SignedUnit
    static Weight nonneg_real(double x);
    static Weight signed_real(double x);
    static Weight complex(std::complex<double> z);
    static Weight rational(Rational q);
    static Weight rational(std::int64_t num, std::int64_t den = 1);

    Monoid monoid() const { return monoid_; }
    bool is_zero() const { return zero_; }
    bool is_one() const;

    // Numeric embedding: unit -> 1, signed-unit -> +-1 (exact rationals),
    // otherwise the payload itself; zero -> 0.
    Num embed() const;

    // Reinterpret in a larger monoid of the same value (e.g. unit -> signed-unit).
    Weight promoted(Monoid target) const;

    bool operator==(const Weight& o) const;
    bool operator!=(const Weight& o) const { return !(*this == o); }

    std::string str() const;

private:
    Weight(Monoid m, bool zero, Num v) : monoid_(m), zero_(zero), val_(std::move(v)) {}

    Monoid monoid_;
    bool zero_;
    Num val_;  // embed()-style payload; meaningless when zero_
};

// Monoid product. Tags must agree; the absorbing zero absorbs.
Weight w_mul(const Weight& a, const Weight& b);
// Negation; defined only on signed monoids (after promotion if needed).
Weight w_neg(const Weight& a);
// Payload addition for numeric monoids; returns the absorbing zero when the
// sum vanishes. Errors on unit/signed-unit.
Weight w_add(const Weight& a, const Weight& b);
// Total order for canonical edge sorting.
int w_compare(const Weight& a, const Weight& b);

// Monoid homomorphism into a numeric codomain, with the flags the bridge
// theorems care about.
struct MeasureMap {
    std::string name;
    bool multiplicative = true;
    bool preserves_minus_one = true;  // m(-1) == -1 where -1 exists

    Num apply(const Weight& w) const;

    static MeasureMap identity();  // numeric embedding
    static MeasureMap absolute();  // |w|, kills signs
    static MeasureMap counting();  // unit/signed-unit -> +-1
    static MeasureMap by_name(const std::string& s);
};

Num measure(const MeasureMap& m, const Weight& w);

struct SeriesResult {
    Num value;
    std::size_t terms = 0;
    bool exact = false;  // the stream ended; the value is the full fold
};

// Left fold of term(0), term(1), ... An empty optional ends the stream
// (exact sum). With tol > 0, stops once the last two increments are each
// below tol in absolute value. Throws divergence_error when max_terms is
// reached without either exit.
SeriesResult sum_series(const std::function<std::optional<Num>(std::size_t)>& term,
                        double tol = 1e-9, std::size_t max_terms = 100000);

}  // namespace triskell
