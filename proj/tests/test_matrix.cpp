#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "triskell/gen.hpp"
#include "triskell/matrix.hpp"

using namespace triskell;

namespace {

Carrier C(std::vector<std::string> ls) { return Carrier(std::move(ls)); }

Matrix m2(Num a, Num b, Num c, Num d, NumKind k = NumKind::Rational) {
    Matrix m(C({"r0", "r1"}), C({"c0", "c1"}), k);
    m.set(0, 0, a);
    m.set(0, 1, b);
    m.set(1, 0, c);
    m.set(1, 1, d);
    return m;
}

// endo version: trace and determinant require one carrier on both sides
Matrix e2(Num a, Num b, Num c, Num d, NumKind k = NumKind::Rational) {
    Matrix m(C({"r0", "r1"}), C({"r0", "r1"}), k);
    m.set(0, 0, a);
    m.set(0, 1, b);
    m.set(1, 0, c);
    m.set(1, 1, d);
    return m;
}

}  // namespace

TEST_CASE("contraction sums parallel edges into cells") {
    Triskell t(C({"a", "b"}), C({"x"}), Monoid::Rational);
    t.add_edge("a", "x", Weight::rational(2));
    t.add_edge("a", "x", Weight::rational(3));
    t.add_edge("b", "x", Weight::rational(4));
    t.add_edge("b", "x", Weight::rational(-4));
    Matrix m = contract(t);
    CHECK(m.kind() == NumKind::Rational);
    CHECK(m.at("a", "x") == Num::rational(5));
    CHECK(m.at("b", "x") == Num::rational(0));

    Triskell u(C({"p"}), C({"p"}), Monoid::Unit);
    u.add_edge("p", "p", Weight::one(Monoid::Unit), 3);
    CHECK(contract(u).at(0, 0) == Num::rational(3));
    CHECK(monoid_num_kind(Monoid::SignedReal) == NumKind::Real);
    CHECK(monoid_num_kind(Monoid::Complex) == NumKind::Complex);
}

TEST_CASE("embed is a section of contract") {
    Matrix m = m2(Num::rational(1, 2), Num::rational(0), Num::rational(-3), Num::rational(7));
    CHECK(contract(embed(m)) == m);
    CHECK(embed(m).edges().size() == 3);         // zero entry skipped
    CHECK(embed(m, false).edges().size() == 4);  // explicit zero edge kept
    CHECK(contract(embed(m, false)) == m);
}

TEST_CASE("contract turns composition into matrix product") {
    Rng r(5, 2);
    for (int i = 0; i < 25; ++i) {
        Carrier a = random_carrier(r, 1 + r.below(3), "a");
        Carrier b = random_carrier(r, 1 + r.below(3), "b");
        Carrier c = random_carrier(r, 1 + r.below(3), "c");
        Triskell f = random_triskell(r, a, b, Monoid::Rational, 6);
        Triskell g = random_triskell(r, b, c, Monoid::Rational, 6);
        CHECK(contract(compose(f, g)) == mat_compose(contract(f), contract(g)));
    }
}

TEST_CASE("matrix algebra basics") {
    Matrix a = e2(Num::rational(1), Num::rational(2), Num::rational(3), Num::rational(4));
    Matrix i = mat_identity(C({"r0", "r1"}), NumKind::Rational);
    CHECK(mat_trace(a) == Num::rational(5));
    CHECK(mat_trace(a, true) == Num::rational(5, 2));
    CHECK(mat_add(a, mat_scale(Num::rational(-1), a)) ==
          mat_scale(Num::rational(0), a));
    CHECK(mat_det(i) == Num::rational(1));
    CHECK(mat_det(a) == Num::rational(-2));

    Matrix ds = mat_dsum(a, i);
    CHECK(ds.n_rows() == 4);
    CHECK(mat_trace(ds) == Num::rational(7));
    CHECK(mat_det(ds) == Num::rational(-2));

    Matrix tn = mat_tensor(a, i);
    CHECK(tn.n_rows() == 4);
    CHECK(mat_trace(tn) == Num::rational(10));

    Matrix r = m2(Num::rational(1), Num::rational(2), Num::rational(3), Num::rational(4));
    CHECK_THROWS_AS(mat_trace(r), error);
    CHECK_THROWS_AS(mat_det(r), error);

    Matrix s = submatrix(r, {"r1"}, {"c0", "c1"});
    CHECK(s.n_rows() == 1);
    CHECK(s.at(0, 0) == Num::rational(3));

    Matrix rl = matrix_relabel(r, {{"r0", "p"}, {"r1", "q"}}, {{"c0", "u"}, {"c1", "v"}});
    CHECK(rl.at("q", "u") == Num::rational(3));

    CHECK(Matrix::approx_equal(a, a, 0.0));
    Matrix b = a;
    b.set(0, 0, Num::rational(10000001, 10000000));
    CHECK(Matrix::approx_equal(a, b, 1e-6));
    CHECK(!Matrix::approx_equal(a, b, 1e-9));
}

TEST_CASE("determinant matches the elimination oracle") {
    Rng r(7, 3);
    for (int i = 0; i < 30; ++i) {
        std::size_t n = 1 + r.below(5);
        Carrier c = random_carrier(r, n, "x");
        Matrix m = random_matrix(r, c, c, NumKind::Rational);
        CHECK(mat_det(m) == oracles::det_by_elimination(m));
    }
    for (int i = 0; i < 30; ++i) {
        std::size_t n = 1 + r.below(5);
        Carrier c = random_carrier(r, n, "x");
        Matrix m = random_matrix(r, c, c, NumKind::Complex);
        Num d = mat_det(m);
        Num o = oracles::det_by_elimination(m);
        CHECK(std::abs(d.complex_value() - o.complex_value()) < 1e-9);
    }
    Matrix big(C({"a", "b", "c"}), C({"a", "b", "c"}), NumKind::Rational);
    CHECK_THROWS_AS(mat_det(big, 2), error);  // dimension guard
}

TEST_CASE("star of a nilpotent matrix is an exact finite sum") {
    Matrix n(C({"a", "b", "c"}), C({"a", "b", "c"}), NumKind::Rational);
    n.set("a", "b", Num::rational(2));
    n.set("b", "c", Num::rational(3));
    Matrix s = mat_star(n);
    CHECK(s.at("a", "a") == Num::rational(1));
    CHECK(s.at("a", "b") == Num::rational(2));
    CHECK(s.at("a", "c") == Num::rational(6));
    CHECK(s.at("c", "a") == Num::rational(0));

    Matrix g(C({"p"}), C({"p"}), NumKind::Rational);
    g.set(0, 0, Num::rational(1, 2));
    CHECK(std::abs(mat_star(g).at(0, 0).real_value() - 2.0) < 1e-6);

    Matrix d(C({"p"}), C({"p"}), NumKind::Rational);
    d.set(0, 0, Num::rational(1));
    CHECK_THROWS_AS(mat_star(d, 1e-9, 64), divergence_error);
}

TEST_CASE("block execution agrees with edge-level execution") {
    Rng r(11, 4);
    for (int i = 0; i < 25; ++i) {
        TracedInstance inst =
            random_traced(r, 2 + r.below(3), 1 + r.below(3), Monoid::Rational, 12);
        std::vector<std::string> vis;
        for (const auto& l : inst.t.source().labels())
            if (std::find(inst.hidden.begin(), inst.hidden.end(), l) == inst.hidden.end())
                vis.push_back(l);
        Matrix lhs = contract(exec_trace(inst.t, inst.hidden));
        Matrix rhs = mat_exec(contract(inst.t), vis, vis, inst.hidden);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("operator norm matches the Jacobi oracle") {
    Rng r(13, 5);
    for (int i = 0; i < 20; ++i) {
        Carrier rows = random_carrier(r, 1 + r.below(4), "r");
        Carrier cols = random_carrier(r, 1 + r.below(4), "c");
        Matrix m = random_matrix(r, rows, cols, NumKind::Real);
        double lib = op_norm(m);
        double orc = oracles::norm_by_jacobi(m);
        CHECK(std::abs(lib - orc) <= 1e-6 * (1.0 + orc));
    }
    for (int i = 0; i < 20; ++i) {
        Carrier rows = random_carrier(r, 1 + r.below(3), "r");
        Carrier cols = random_carrier(r, 1 + r.below(3), "c");
        Matrix m = random_matrix(r, rows, cols, NumKind::Complex);
        double lib = op_norm(m);
        double orc = oracles::norm_by_jacobi(m);
        CHECK(std::abs(lib - orc) <= 1e-6 * (1.0 + orc));
    }

    Matrix d(C({"a", "b"}), C({"a", "b"}), NumKind::Rational);
    d.set(0, 0, Num::rational(-3));
    d.set(1, 1, Num::rational(2));
    CHECK(op_norm(d) == doctest::Approx(3.0));
    Matrix z(C({"a"}), C({"b"}), NumKind::Rational);
    CHECK(op_norm(z) == doctest::Approx(0.0));
}

TEST_CASE("promotion of scalars") {
    CHECK(promote_to(Num::rational(1, 2), NumKind::Real).kind() == NumKind::Real);
    CHECK(promote_to(Num::rational(1, 2), NumKind::Real).real_value() ==
          doctest::Approx(0.5));
    CHECK(promote_to(Num::real(1.5), NumKind::Complex).complex_value().real() ==
          doctest::Approx(1.5));
    CHECK_THROWS_AS(promote_to(Num::complex({0.0, 1.0}), NumKind::Real), error);
}
