#include "triskell/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace triskell {

Num promote_to(const Num& v, NumKind k) {
    if (v.kind() == k) return v;
    if (v.kind() > k)
        throw error("cannot narrow " + to_string(v.kind()) + " to " + to_string(k));
    if (k == NumKind::Real) return Num::real(v.real_value());
    return Num::complex(v.complex_value());
}

NumKind monoid_num_kind(Monoid m) {
    switch (m) {
        case Monoid::Unit:
        case Monoid::SignedUnit:
        case Monoid::Rational: return NumKind::Rational;
        case Monoid::NonnegReal:
        case Monoid::SignedReal: return NumKind::Real;
        case Monoid::Complex: return NumKind::Complex;
    }
    return NumKind::Rational;
}

namespace {
Num zero_of(NumKind k) {
    switch (k) {
        case NumKind::Rational: return Num::rational(0);
        case NumKind::Real: return Num::real(0.0);
        case NumKind::Complex: return Num::complex({0.0, 0.0});
    }
    return Num();
}
}

Matrix::Matrix(Carrier rows, Carrier cols, NumKind kind)
    : rows_(std::move(rows)), cols_(std::move(cols)), kind_(kind),
      a_(rows_.size() * cols_.size(), zero_of(kind)) {}

const Num& Matrix::at(const std::string& r, const std::string& c) const {
    return at(rows_.index_of(r), cols_.index_of(c));
}

void Matrix::set(std::size_t i, std::size_t j, const Num& v) {
    if (i >= rows_.size() || j >= cols_.size()) throw error("matrix index out of range");
    a_[i * cols_.size() + j] = promote_to(v, kind_);
}

void Matrix::set(const std::string& r, const std::string& c, const Num& v) {
    set(rows_.index_of(r), cols_.index_of(c), v);
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && kind_ == o.kind_ && a_ == o.a_;
}

bool Matrix::approx_equal(const Matrix& a, const Matrix& b, double tol) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.a_.size(); ++i)
        if (!Num::approx_equal(a.a_[i], b.a_[i], tol)) return false;
    return true;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < n_rows(); ++i) {
        os << rows_.label(i) << ": ";
        for (std::size_t j = 0; j < n_cols(); ++j) os << (j ? " " : "") << at(i, j).str();
        os << "\n";
    }
    return os.str();
}

Matrix contract(const Triskell& t) {
    Matrix m(t.source(), t.target(), monoid_num_kind(t.monoid()));
    for (const auto& e : t.edges())
        m.set(e.src, e.tgt, m.at(e.src, e.tgt) + e.w.embed());
    return m;
}

Triskell embed(const Matrix& m, bool minimal) {
    Monoid mon;
    switch (m.kind()) {
        case NumKind::Rational: mon = Monoid::Rational; break;
        case NumKind::Real: mon = Monoid::SignedReal; break;
        case NumKind::Complex: mon = Monoid::Complex; break;
        default: throw error("embed: bad kind");
    }
    Triskell t(m.rows(), m.cols(), mon);
    for (std::size_t i = 0; i < m.n_rows(); ++i)
        for (std::size_t j = 0; j < m.n_cols(); ++j) {
            const Num& v = m.at(i, j);
            if (v.is_zero()) {
                if (!minimal) t.add_edge_idx(i, j, Weight::zero(mon));
                continue;
            }
            Weight w = Weight::one(mon);
            switch (mon) {
                case Monoid::Rational: w = Weight::rational(v.rat()); break;
                case Monoid::SignedReal: w = Weight::signed_real(v.real_value()); break;
                case Monoid::Complex: w = Weight::complex(v.complex_value()); break;
                default: break;
            }
            t.add_edge_idx(i, j, w);
        }
    return t;
}

Matrix mat_identity(const Carrier& c, NumKind kind) {
    Matrix m(c, c, kind);
    for (std::size_t i = 0; i < c.size(); ++i)
        m.set(i, i, promote_to(Num::rational(1), kind));
    return m;
}

namespace {
NumKind join_kind(const Matrix& a, const Matrix& b) {
    return a.kind() > b.kind() ? a.kind() : b.kind();
}
}

Matrix mat_compose(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw error("mat_compose: inner carriers differ");
    Matrix r(a.rows(), b.cols(), join_kind(a, b));
    for (std::size_t i = 0; i < a.n_rows(); ++i)
        for (std::size_t j = 0; j < b.n_cols(); ++j) {
            Num s = zero_of(r.kind());
            for (std::size_t k = 0; k < a.n_cols(); ++k)
                s = s + a.at(i, k) * b.at(k, j);
            r.set(i, j, s);
        }
    return r;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw error("mat_add: carrier mismatch");
    Matrix r(a.rows(), a.cols(), join_kind(a, b));
    for (std::size_t i = 0; i < a.n_rows(); ++i)
        for (std::size_t j = 0; j < a.n_cols(); ++j)
            r.set(i, j, a.at(i, j) + b.at(i, j));
    return r;
}

Matrix mat_scale(const Num& s, const Matrix& a) {
    NumKind k = a.kind() > s.kind() ? a.kind() : s.kind();
    Matrix r(a.rows(), a.cols(), k);
    for (std::size_t i = 0; i < a.n_rows(); ++i)
        for (std::size_t j = 0; j < a.n_cols(); ++j) r.set(i, j, s * a.at(i, j));
    return r;
}

Matrix mat_tensor(const Matrix& a, const Matrix& b) {
    Matrix r(Carrier::product(a.rows(), b.rows()), Carrier::product(a.cols(), b.cols()),
             join_kind(a, b));
    for (std::size_t i = 0; i < a.n_rows(); ++i)
        for (std::size_t k = 0; k < a.n_cols(); ++k)
            for (std::size_t j = 0; j < b.n_rows(); ++j)
                for (std::size_t l = 0; l < b.n_cols(); ++l)
                    r.set(pair_label(a.rows().label(i), b.rows().label(j)),
                          pair_label(a.cols().label(k), b.cols().label(l)),
                          a.at(i, k) * b.at(j, l));
    return r;
}

Matrix mat_dsum(const Matrix& a, const Matrix& b) {
    Matrix r(Carrier::disjoint_union(a.rows(), b.rows()),
             Carrier::disjoint_union(a.cols(), b.cols()), join_kind(a, b));
    for (std::size_t i = 0; i < a.n_rows(); ++i)
        for (std::size_t j = 0; j < a.n_cols(); ++j)
            r.set(left_label(a.rows().label(i)), left_label(a.cols().label(j)), a.at(i, j));
    for (std::size_t i = 0; i < b.n_rows(); ++i)
        for (std::size_t j = 0; j < b.n_cols(); ++j)
            r.set(right_label(b.rows().label(i)), right_label(b.cols().label(j)), b.at(i, j));
    return r;
}

Num mat_trace(const Matrix& m, bool normalized) {
    if (m.rows() != m.cols()) throw error("mat_trace: matrix is not square");
    Num s = zero_of(m.kind());
    for (std::size_t i = 0; i < m.n_rows(); ++i) s = s + m.at(i, i);
    if (normalized) {
        if (m.n_rows() == 0) throw error("mat_trace: empty normalized trace");
        s = s / promote_to(Num::rational(static_cast<std::int64_t>(m.n_rows())), s.kind());
    }
    return s;
}

Num mat_det(const Matrix& m, std::size_t dim_bound) {
    if (m.rows() != m.cols()) throw error("mat_det: matrix is not square");
    std::size_t n = m.n_rows();
    if (n > dim_bound)
        throw error("mat_det: dimension " + std::to_string(n) + " exceeds bound " +
                    std::to_string(dim_bound));
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Num det = zero_of(m.kind());
    do {
        int inv = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        Num term = promote_to(Num::rational(inv % 2 ? -1 : 1), m.kind());
        for (std::size_t i = 0; i < n; ++i) term = term * m.at(i, perm[i]);
        det = det + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

namespace {
double max_abs(const Matrix& m) {
    double v = 0.0;
    for (std::size_t i = 0; i < m.n_rows(); ++i)
        for (std::size_t j = 0; j < m.n_cols(); ++j)
            v = std::max(v, m.at(i, j).abs());
    return v;
}
}

Matrix mat_star(const Matrix& m, double tol, std::size_t max_iter) {
    if (m.rows() != m.cols()) throw error("mat_star: matrix is not square");
    Matrix s = mat_identity(m.rows(), m.kind());
    Matrix p = m;
    int small_run = 0;
    for (std::size_t k = 0; k < max_iter; ++k) {
        double mag = max_abs(p);
        if (mag == 0.0) return s;  // nilpotent: the sum is exact
        s = mat_add(s, p);
        small_run = (mag < tol) ? small_run + 1 : 0;
        if (small_run >= 2) return s;
        p = mat_compose(p, m);
    }
    throw divergence_error("mat_star did not converge within " +
                           std::to_string(max_iter) + " powers");
}

Matrix submatrix(const Matrix& m, const std::vector<std::string>& row_labels,
                 const std::vector<std::string>& col_labels) {
    Matrix r(Carrier(row_labels), Carrier(col_labels), m.kind());
    for (const auto& rl : row_labels)
        for (const auto& cl : col_labels) r.set(rl, cl, m.at(rl, cl));
    return r;
}

Matrix mat_exec(const Matrix& m, const std::vector<std::string>& xs,
                const std::vector<std::string>& ys, const std::vector<std::string>& us) {
    auto check_partition = [](const Carrier& c, std::vector<std::string> a,
                              std::vector<std::string> b, const char* what) {
        a.insert(a.end(), b.begin(), b.end());
        std::sort(a.begin(), a.end());
        if (a != c.labels())
            throw error(std::string("mat_exec: ") + what + " blocks do not partition the carrier");
    };
    check_partition(m.rows(), xs, us, "row");
    check_partition(m.cols(), ys, us, "column");

    Matrix direct = submatrix(m, xs, ys);
    if (us.empty()) return direct;
    Matrix through = mat_compose(
        mat_compose(submatrix(m, xs, us), mat_star(submatrix(m, us, us))),
        submatrix(m, us, ys));
    return mat_add(direct, through);
}

double op_norm(const Matrix& m, double tol, std::size_t max_iter) {
    std::size_t n = m.n_cols();
    if (n == 0 || m.n_rows() == 0) return 0.0;

    std::vector<std::vector<std::complex<double>>> a(m.n_rows(),
                                                     std::vector<std::complex<double>>(n));
    for (std::size_t i = 0; i < m.n_rows(); ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j).complex_value();

    // h = M* M, applied as two mat-vec products
    auto apply_h = [&](const std::vector<std::complex<double>>& v) {
        std::vector<std::complex<double>> mv(m.n_rows(), 0.0);
        for (std::size_t i = 0; i < m.n_rows(); ++i)
            for (std::size_t j = 0; j < n; ++j) mv[i] += a[i][j] * v[j];
        std::vector<std::complex<double>> hv(n, 0.0);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < m.n_rows(); ++i)
                hv[j] += std::conj(a[i][j]) * mv[i];
        return hv;
    };
    auto norm2 = [](const std::vector<std::complex<double>>& v) {
        double s = 0.0;
        for (auto z : v) s += std::norm(z);
        return std::sqrt(s);
    };

    // Deterministic starts: all ones, then basis vectors when the iterate
    // collapses into the kernel of M* M.
    for (std::size_t start = 0; start <= n; ++start) {
        std::vector<std::complex<double>> v(n, start == 0 ? 1.0 : 0.0);
        if (start > 0) v[start - 1] = 1.0;
        double nv = norm2(v);
        for (auto& z : v) z /= nv;
        double lambda = 0.0;
        for (std::size_t it = 0; it < max_iter; ++it) {
            auto hv = apply_h(v);
            double nh = norm2(hv);
            if (nh == 0.0) break;  // kernel hit; try the next start vector
            double next = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                next += (std::conj(v[j]) * hv[j]).real();
            for (auto& z : hv) z /= nh;
            v = std::move(hv);
            if (it > 0 && std::fabs(next - lambda) <= tol * std::max(1.0, next))
                return std::sqrt(std::max(0.0, next));
            lambda = next;
        }
        if (lambda > 0.0) return std::sqrt(lambda);
    }
    return 0.0;  // every start lies in the kernel, so M* M = 0
}

Matrix matrix_relabel(const Matrix& m, const std::map<std::string, std::string>& row_map,
                      const std::map<std::string, std::string>& col_map) {
    auto apply = [](const Carrier& c, const std::map<std::string, std::string>& mp) {
        std::vector<std::string> ls;
        for (const auto& l : c.labels()) {
            auto it = mp.find(l);
            if (it == mp.end()) throw error("matrix_relabel: no image for label " + l);
            ls.push_back(it->second);
        }
        return Carrier(std::move(ls));
    };
    Matrix r(apply(m.rows(), row_map), apply(m.cols(), col_map), m.kind());
    for (std::size_t i = 0; i < m.n_rows(); ++i)
        for (std::size_t j = 0; j < m.n_cols(); ++j)
            r.set(row_map.at(m.rows().label(i)), col_map.at(m.cols().label(j)), m.at(i, j));
    return r;
}

}  // namespace triskell
