#pragma once

// Independent reference implementations used only to cross-check the library:
// a path-enumeration trace, an elimination-based determinant, and a Jacobi
// eigenvalue bound for the operator norm. None of them share code with the
// library paths they check.

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "triskell/matrix.hpp"
#include "triskell/triskell.hpp"

namespace oracles {

// All finite paths x -> u* -> y enumerated by depth-first search.
inline triskell::Triskell exec_by_paths(const triskell::Triskell& t,
                                        const std::vector<std::string>& us) {
    using namespace triskell;
    std::set<std::string> uset(us.begin(), us.end());
    std::vector<std::string> xs, ys;
    for (const auto& l : t.source().labels())
        if (!uset.count(l)) xs.push_back(l);
    for (const auto& l : t.target().labels())
        if (!uset.count(l)) ys.push_back(l);
    Carrier x(xs), y(ys);
    Triskell out(x, y, t.monoid());

    std::map<std::string, std::vector<const Edge*>> by_src;
    for (const auto& e : t.edges()) by_src[t.src_label(e)].push_back(&e);

    std::function<void(const std::string&, const std::string&, const Weight&)> walk =
        [&](const std::string& start, const std::string& at, const Weight& w) {
            if (!uset.count(at)) {
                out.add_edge(start, at, w);
                return;
            }
            auto it = by_src.find(at);
            if (it == by_src.end()) return;
            for (const Edge* e : it->second)
                walk(start, t.tgt_label(*e), w_mul(w, e->w));
        };
    for (const auto& e : t.edges()) {
        const std::string& s = t.src_label(e);
        if (!uset.count(s)) walk(s, t.tgt_label(e), e.w);
    }
    return out;
}

// Determinant by Gaussian elimination with exact division (rationals) or
// partial pivoting (floating kinds).
inline triskell::Num det_by_elimination(const triskell::Matrix& m) {
    using namespace triskell;
    std::size_t n = m.n_rows();
    if (n != m.n_cols()) throw error("square matrix expected");
    Num zero = promote_to(Num::rational(0), m.kind());
    if (n == 0) return promote_to(Num::rational(1), m.kind());

    std::vector<std::vector<Num>> a(n, std::vector<Num>(n, zero));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);

    Num det = promote_to(Num::rational(1), m.kind());
    bool neg = false;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        if (m.kind() == NumKind::Rational) {
            while (pivot < n && a[pivot][k].is_zero()) ++pivot;
        } else {
            double best = -1.0;
            std::size_t at = n;
            for (std::size_t i = k; i < n; ++i) {
                double mag = std::abs(a[i][k].complex_value());
                if (mag > best) {
                    best = mag;
                    at = i;
                }
            }
            pivot = best > 0.0 ? at : n;
        }
        if (pivot == n) return zero;
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            neg = !neg;
        }
        det = det * a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            Num f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] = a[i][j] - f * a[k][j];
        }
    }
    return neg ? -det : det;
}

// Largest eigenvalue of the real symmetric embedding of M*M by cyclic
// Jacobi rotations; its square root bounds the operator norm tightly.
inline double norm_by_jacobi(const triskell::Matrix& m) {
    using namespace triskell;
    std::size_t rows = m.n_rows(), cols = m.n_cols();
    std::vector<std::vector<std::complex<double>>> c(
        rows, std::vector<std::complex<double>>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) c[i][j] = m.at(i, j).complex_value();

    // h = m^H m (Hermitian, PSD)
    std::size_t n = cols;
    std::vector<std::vector<std::complex<double>>> h(
        n, std::vector<std::complex<double>>(n, {0.0, 0.0}));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < rows; ++k)
                h[i][j] += std::conj(c[k][i]) * c[k][j];

    // real symmetric embedding [[re, -im], [im, re]]
    std::size_t d = 2 * n;
    std::vector<std::vector<double>> s(d, std::vector<double>(d, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            s[i][j] = h[i][j].real();
            s[i][j + n] = -h[i][j].imag();
            s[i + n][j] = h[i][j].imag();
            s[i + n][j + n] = h[i][j].real();
        }

    for (std::size_t sweep = 0; sweep < 128; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < d; ++p)
            for (std::size_t q = p + 1; q < d; ++q) off += s[p][q] * s[p][q];
        if (off < 1e-26) break;
        for (std::size_t p = 0; p < d; ++p)
            for (std::size_t q = p + 1; q < d; ++q) {
                if (std::abs(s[p][q]) < 1e-300) continue;
                double tau = (s[q][q] - s[p][p]) / (2.0 * s[p][q]);
                double t = (tau >= 0 ? 1.0 : -1.0) /
                           (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double cth = 1.0 / std::sqrt(1.0 + t * t);
                double sth = t * cth;
                for (std::size_t k = 0; k < d; ++k) {
                    double akp = s[k][p], akq = s[k][q];
                    s[k][p] = cth * akp - sth * akq;
                    s[k][q] = sth * akp + cth * akq;
                }
                for (std::size_t k = 0; k < d; ++k) {
                    double apk = s[p][k], aqk = s[q][k];
                    s[p][k] = cth * apk - sth * aqk;
                    s[q][k] = sth * apk + cth * aqk;
                }
            }
    }
    double top = 0.0;
    for (std::size_t i = 0; i < d; ++i) top = std::max(top, s[i][i]);
    return std::sqrt(std::max(top, 0.0));
}

}  // namespace oracles
