#include "triskell/numeric.hpp"

#include <cmath>
#include <cstdio>

namespace triskell {

std::string to_string(NumKind k) {
    switch (k) {
        case NumKind::Rational: return "rational";
        case NumKind::Real: return "real";
        case NumKind::Complex: return "complex";
    }
    return "?";
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Num Num::rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw error("rational with zero denominator");
    return Num(Rational(num, den));
}

Num Num::real(double x) {
    if (!std::isfinite(x)) throw error("non-finite real value");
    Num n;
    n.kind_ = NumKind::Real;
    n.z_ = {x, 0.0};
    return n;
}

Num Num::complex(std::complex<double> z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw error("non-finite complex value");
    Num n;
    n.kind_ = NumKind::Complex;
    n.z_ = z;
    return n;
}

const Rational& Num::rat() const {
    if (kind_ != NumKind::Rational) throw error("value is not rational");
    return rat_;
}

double Num::real_value() const {
    switch (kind_) {
        case NumKind::Rational: return static_cast<double>(rat_);
        case NumKind::Real: return z_.real();
        case NumKind::Complex:
            if (z_.imag() != 0.0) throw error("complex value is not real");
            return z_.real();
    }
    return 0.0;
}

std::complex<double> Num::complex_value() const {
    if (kind_ == NumKind::Rational) return {static_cast<double>(rat_), 0.0};
    return z_;
}

bool Num::is_zero() const {
    if (kind_ == NumKind::Rational) return rat_ == 0;
    return z_ == std::complex<double>(0.0, 0.0);
}

bool Num::is_one() const {
    if (kind_ == NumKind::Rational) return rat_ == 1;
    return z_ == std::complex<double>(1.0, 0.0);
}

namespace {
NumKind join(NumKind a, NumKind b) { return a > b ? a : b; }
}

Num Num::operator+(const Num& o) const {
    NumKind k = join(kind_, o.kind_);
    if (k == NumKind::Rational) return Num(rat_ + o.rat_);
    if (k == NumKind::Real) return Num::real(real_value() + o.real_value());
    return Num::complex(complex_value() + o.complex_value());
}

Num Num::operator-(const Num& o) const { return *this + (-o); }

Num Num::operator*(const Num& o) const {
    NumKind k = join(kind_, o.kind_);
    if (k == NumKind::Rational) return Num(rat_ * o.rat_);
    if (k == NumKind::Real) return Num::real(real_value() * o.real_value());
    return Num::complex(complex_value() * o.complex_value());
}

Num Num::operator/(const Num& o) const {
    if (o.is_zero()) throw error("division by zero");
    NumKind k = join(kind_, o.kind_);
    if (k == NumKind::Rational) return Num(rat_ / o.rat_);
    if (k == NumKind::Real) return Num::real(real_value() / o.real_value());
    return Num::complex(complex_value() / o.complex_value());
}

Num Num::operator-() const {
    switch (kind_) {
        case NumKind::Rational: return Num(-rat_);
        case NumKind::Real: return Num::real(-z_.real());
        case NumKind::Complex: return Num::complex(-z_);
    }
    return Num();
}

Num Num::conj() const {
    if (kind_ == NumKind::Complex) return Num::complex(std::conj(z_));
    return *this;
}

double Num::abs() const {
    if (kind_ == NumKind::Rational)
        return std::fabs(static_cast<double>(rat_));
    return std::abs(z_);
}

bool Num::operator==(const Num& o) const {
    if (kind_ != o.kind_) return false;
    if (kind_ == NumKind::Rational) return rat_ == o.rat_;
    return z_ == o.z_;
}

int Num::compare(const Num& a, const Num& b) {
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_ ? -1 : 1;
    switch (a.kind_) {
        case NumKind::Rational:
            if (a.rat_ == b.rat_) return 0;
            return a.rat_ < b.rat_ ? -1 : 1;
        case NumKind::Real:
            if (a.z_.real() == b.z_.real()) return 0;
            return a.z_.real() < b.z_.real() ? -1 : 1;
        case NumKind::Complex:
            if (a.z_.real() != b.z_.real())
                return a.z_.real() < b.z_.real() ? -1 : 1;
            if (a.z_.imag() != b.z_.imag())
                return a.z_.imag() < b.z_.imag() ? -1 : 1;
            return 0;
    }
    return 0;
}

bool Num::approx_equal(const Num& a, const Num& b, double tol) {
    if (a.kind_ == NumKind::Rational && b.kind_ == NumKind::Rational && tol == 0.0)
        return a.rat_ == b.rat_;
    return std::abs(a.complex_value() - b.complex_value()) <= tol;
}

std::string Num::str() const {
    switch (kind_) {
        case NumKind::Rational: {
            std::string s = numerator(rat_).str();
            if (denominator(rat_) != 1) s += "/" + denominator(rat_).str();
            return s;
        }
        case NumKind::Real:
            return format_double(z_.real());
        case NumKind::Complex:
            return "(" + format_double(z_.real()) + "," + format_double(z_.imag()) + ")";
    }
    return "?";
}

}  // namespace triskell
