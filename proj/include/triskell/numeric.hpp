#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <string>

#include "triskell/errors.hpp"

namespace triskell {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

enum class NumKind { Rational, Real, Complex };

std::string to_string(NumKind k);

// Scalar value with an explicit codomain tag. Rational arithmetic is exact;
// real/complex use doubles and must stay finite. Mixed-kind arithmetic
// promotes along rational -> real -> complex.
class Num {
public:
    Num() : kind_(NumKind::Rational), rat_(0) {}

    static Num rational(Rational q) { return Num(std::move(q)); }
    static Num rational(std::int64_t num, std::int64_t den = 1);
    static Num real(double x);
    static Num complex(std::complex<double> z);

    NumKind kind() const { return kind_; }
    const Rational& rat() const;
    double real_value() const;               // rational or real kinds
    std::complex<double> complex_value() const;  // any kind, widened

    bool is_zero() const;
    bool is_one() const;

    Num operator+(const Num& o) const;
    Num operator-(const Num& o) const;
    Num operator*(const Num& o) const;
    Num operator/(const Num& o) const;
    Num operator-() const;
    Num conj() const;
    double abs() const;

    bool operator==(const Num& o) const;
    bool operator!=(const Num& o) const { return !(*this == o); }

    // Total order used for canonical sorting; compares kind tag first.
    static int compare(const Num& a, const Num& b);

    static bool approx_equal(const Num& a, const Num& b, double tol);

    std::string str() const;

private:
    explicit Num(Rational q) : kind_(NumKind::Rational), rat_(std::move(q)) {}

    NumKind kind_;
    Rational rat_;
    std::complex<double> z_{0.0, 0.0};
};

std::string format_double(double x);

}  // namespace triskell
