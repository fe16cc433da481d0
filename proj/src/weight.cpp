#include "triskell/weight.hpp"

#include <cmath>

namespace triskell {

std::string monoid_name(Monoid m) {
    switch (m) {
        case Monoid::Unit: return "unit";
        case Monoid::SignedUnit: return "signed-unit";
        case Monoid::NonnegReal: return "nonneg-real";
        case Monoid::SignedReal: return "signed-real";
        case Monoid::Complex: return "complex";
        case Monoid::Rational: return "rational";
    }
    return "?";
}

Monoid monoid_from_name(const std::string& s) {
    if (s == "unit") return Monoid::Unit;
    if (s == "signed-unit") return Monoid::SignedUnit;
    if (s == "nonneg-real") return Monoid::NonnegReal;
    if (s == "signed-real") return Monoid::SignedReal;
    if (s == "complex") return Monoid::Complex;
    if (s == "rational") return Monoid::Rational;
    throw error("unknown weight monoid: " + s);
}

bool monoid_signed(Monoid m) {
    return m == Monoid::SignedUnit || m == Monoid::SignedReal ||
           m == Monoid::Complex || m == Monoid::Rational;
}

Monoid signed_extension(Monoid m) {
    if (m == Monoid::Unit) return Monoid::SignedUnit;
    if (m == Monoid::NonnegReal) return Monoid::SignedReal;
    return m;
}

bool monoid_has_add(Monoid m) {
    return m == Monoid::NonnegReal || m == Monoid::SignedReal ||
           m == Monoid::Complex || m == Monoid::Rational;
}

Weight Weight::one(Monoid m) {
    switch (m) {
        case Monoid::Unit:
        case Monoid::SignedUnit:
        case Monoid::Rational: return Weight(m, false, Num::rational(1));
        case Monoid::NonnegReal:
        case Monoid::SignedReal: return Weight(m, false, Num::real(1.0));
        case Monoid::Complex: return Weight(m, false, Num::complex({1.0, 0.0}));
    }
    throw error("bad monoid");
}

Weight Weight::zero(Monoid m) { return Weight(m, true, Num()); }

Weight Weight::sign_unit(int s) {
    if (s != 1 && s != -1) throw error("signed-unit weight must be +-1");
    return Weight(Monoid::SignedUnit, false, Num::rational(s));
}

Weight Weight::nonneg_real(double x) {
    if (!(x >= 0.0)) throw error("nonneg-real weight must be >= 0");
    return Weight(Monoid::NonnegReal, false, Num::real(x));
}

Weight Weight::signed_real(double x) {
    return Weight(Monoid::SignedReal, false, Num::real(x));
}

Weight Weight::complex(std::complex<double> z) {
    return Weight(Monoid::Complex, false, Num::complex(z));
}

Weight Weight::rational(Rational q) {
    return Weight(Monoid::Rational, false, Num::rational(std::move(q)));
}

Weight Weight::rational(std::int64_t num, std::int64_t den) {
    return Weight(Monoid::Rational, false, Num::rational(num, den));
}

bool Weight::is_one() const { return !zero_ && val_.is_one(); }

Num Weight::embed() const {
    if (zero_) {
        switch (monoid_) {
            case Monoid::NonnegReal:
            case Monoid::SignedReal: return Num::real(0.0);
            case Monoid::Complex: return Num::complex({0.0, 0.0});
            default: return Num::rational(0);
        }
    }
    return val_;
}

Weight Weight::promoted(Monoid target) const {
    if (target == monoid_) return *this;
    if (signed_extension(monoid_) != target)
        throw error("cannot promote " + monoid_name(monoid_) + " to " + monoid_name(target));
    return Weight(target, zero_, val_);
}

bool Weight::operator==(const Weight& o) const {
    if (monoid_ != o.monoid_ || zero_ != o.zero_) return false;
    return zero_ || val_ == o.val_;
}

std::string Weight::str() const {
    if (zero_) return "0!";
    return val_.str();
}

namespace {
void check_same_monoid(const Weight& a, const Weight& b, const char* op) {
    if (a.monoid() != b.monoid())
        throw error(std::string(op) + ": weight monoid mismatch (" +
                    monoid_name(a.monoid()) + " vs " + monoid_name(b.monoid()) + ")");
}

Weight from_num(Monoid m, Num v) {
    switch (m) {
        case Monoid::Unit:
            return Weight::one(m);
        case Monoid::SignedUnit:
            return Weight::sign_unit(v.rat() < 0 ? -1 : 1);
        case Monoid::NonnegReal:
            return Weight::nonneg_real(v.real_value());
        case Monoid::SignedReal:
            return Weight::signed_real(v.real_value());
        case Monoid::Complex:
            return Weight::complex(v.complex_value());
        case Monoid::Rational:
            return Weight::rational(v.rat());
    }
    throw error("bad monoid");
}
}  // namespace

Weight w_mul(const Weight& a, const Weight& b) {
    check_same_monoid(a, b, "w_mul");
    if (a.is_zero() || b.is_zero()) return Weight::zero(a.monoid());
    return from_num(a.monoid(), a.embed() * b.embed());
}

Weight w_neg(const Weight& a) {
    if (!monoid_signed(a.monoid()))
        throw error("w_neg: monoid " + monoid_name(a.monoid()) + " has no signs");
    if (a.is_zero()) return a;
    return from_num(a.monoid(), -a.embed());
}

Weight w_add(const Weight& a, const Weight& b) {
    check_same_monoid(a, b, "w_add");
    if (!monoid_has_add(a.monoid()))
        throw error("w_add: no addition on " + monoid_name(a.monoid()));
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Num s = a.embed() + b.embed();
    if (s.is_zero()) return Weight::zero(a.monoid());
    return from_num(a.monoid(), s);
}

int w_compare(const Weight& a, const Weight& b) {
    if (a.monoid() != b.monoid())
        return static_cast<int>(a.monoid()) < static_cast<int>(b.monoid()) ? -1 : 1;
    if (a.is_zero() != b.is_zero()) return a.is_zero() ? -1 : 1;
    if (a.is_zero()) return 0;
    return Num::compare(a.embed(), b.embed());
}

Num MeasureMap::apply(const Weight& w) const {
    if (w.is_zero()) {
        // additive zero of the codomain
        if (name == "abs" && w.monoid() != Monoid::Rational) return Num::real(0.0);
        return w.embed();
    }
    if (name == "identity") return w.embed();
    if (name == "abs") {
        if (w.monoid() == Monoid::Rational) {
            Rational q = w.embed().rat();
            return Num::rational(q < 0 ? -q : q);
        }
        return Num::real(w.embed().abs());
    }
    if (name == "count") {
        if (w.monoid() != Monoid::Unit && w.monoid() != Monoid::SignedUnit)
            throw error("count measure applies to unit/signed-unit weights only");
        return w.embed();
    }
    throw error("unknown measure map: " + name);
}

MeasureMap MeasureMap::identity() { return {"identity", true, true}; }
MeasureMap MeasureMap::absolute() { return {"abs", true, false}; }
MeasureMap MeasureMap::counting() { return {"count", true, true}; }

MeasureMap MeasureMap::by_name(const std::string& s) {
    if (s == "identity") return identity();
    if (s == "abs") return absolute();
    if (s == "count") return counting();
    throw error("unknown measure map: " + s);
}

Num measure(const MeasureMap& m, const Weight& w) { return m.apply(w); }

SeriesResult sum_series(const std::function<std::optional<Num>(std::size_t)>& term,
                        double tol, std::size_t max_terms) {
    SeriesResult r;
    int small_run = 0;
    for (std::size_t k = 0; k < max_terms; ++k) {
        std::optional<Num> t = term(k);
        if (!t) {
            r.exact = true;
            return r;
        }
        r.value = r.value + *t;
        r.terms = k + 1;
        if (tol > 0.0) {
            small_run = (t->abs() < tol) ? small_run + 1 : 0;
            if (small_run >= 2) return r;
        }
    }
    throw divergence_error("series did not converge within " +
                           std::to_string(max_terms) + " terms");
}

}  // namespace triskell
