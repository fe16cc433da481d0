#pragma once

#include "triskell/triskell.hpp"

namespace triskell {

// Dense matrix over Num with labeled row/column carriers. All entries share
// one numeric kind; assignments promote into it.
class Matrix {
public:
    Matrix() = default;
    Matrix(Carrier rows, Carrier cols, NumKind kind = NumKind::Rational);

    const Carrier& rows() const { return rows_; }
    const Carrier& cols() const { return cols_; }
    NumKind kind() const { return kind_; }
    std::size_t n_rows() const { return rows_.size(); }
    std::size_t n_cols() const { return cols_.size(); }

    const Num& at(std::size_t i, std::size_t j) const { return a_[i * cols_.size() + j]; }
    const Num& at(const std::string& r, const std::string& c) const;
    void set(std::size_t i, std::size_t j, const Num& v);
    void set(const std::string& r, const std::string& c, const Num& v);

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    static bool approx_equal(const Matrix& a, const Matrix& b, double tol);

    std::string str() const;

private:
    Carrier rows_, cols_;
    NumKind kind_ = NumKind::Rational;
    std::vector<Num> a_;
};

Num promote_to(const Num& v, NumKind k);
// Numeric kind that contraction maps a weight monoid into.
NumKind monoid_num_kind(Monoid m);

// Sums parallel edge weights into matrix cells.
Matrix contract(const Triskell& t);
// Inverse direction: one edge per entry; with minimal=true zero entries are
// skipped. Real matrices embed with signed-real weights.
Triskell embed(const Matrix& m, bool minimal = true);

Matrix mat_identity(const Carrier& c, NumKind kind);
Matrix mat_compose(const Matrix& a, const Matrix& b);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_scale(const Num& s, const Matrix& a);
Matrix mat_tensor(const Matrix& a, const Matrix& b);
Matrix mat_dsum(const Matrix& a, const Matrix& b);
Num mat_trace(const Matrix& m, bool normalized = false);
// Leibniz permutation sum; guarded by an explicit dimension bound.
Num mat_det(const Matrix& m, std::size_t dim_bound = 10);
// Sum of powers I + M + M^2 + ...; exact when M is nilpotent, otherwise
// stops once two consecutive power terms fall below tol entrywise.
Matrix mat_star(const Matrix& m, double tol = 1e-9, std::size_t max_iter = 4096);
// Feedback formula on labeled blocks: result(x,y) = M[x,y] +
// (M[x,U] star(M[U,U]) M[U,y]); us must appear in both carriers.
Matrix mat_exec(const Matrix& m, const std::vector<std::string>& xs,
                const std::vector<std::string>& ys, const std::vector<std::string>& us);
Matrix submatrix(const Matrix& m, const std::vector<std::string>& row_labels,
                 const std::vector<std::string>& col_labels);
// Largest singular value via power iteration on M* M. Falls back to basis
// start vectors when the all-ones start lies in the kernel.
double op_norm(const Matrix& m, double tol = 1e-10, std::size_t max_iter = 20000);

// Reindexes through bijective label maps.
Matrix matrix_relabel(const Matrix& m, const std::map<std::string, std::string>& row_map,
                      const std::map<std::string, std::string>& col_map);

}  // namespace triskell
