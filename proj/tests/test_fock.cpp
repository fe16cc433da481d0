#include "doctest.h"
#include "triskell/fock.hpp"
#include "triskell/gen.hpp"

using namespace triskell;

namespace {

Carrier C(std::vector<std::string> ls) { return Carrier(std::move(ls)); }

Num R(std::int64_t n, std::int64_t d = 1) { return Num::rational(n, d); }

}  // namespace

TEST_CASE("subset and multiset carrier construction") {
    CHECK(subset_label({}) == "{}");
    CHECK(subset_label({"a", "b"}) == "{a,b}");
    CHECK(multiset_label({}) == "[]");
    CHECK(multiset_label({"x", "x", "y"}) == "[x:2,y:1]");

    Carrier ps = powerset_carrier(C({"a", "b", "c"}));
    CHECK(ps.size() == 8);
    CHECK(ps.contains("{a,c}"));
    CHECK(ps.contains("{}"));

    Carrier ms = multiset_carrier(C({"x", "y"}), 2);
    CHECK(ms.size() == 6);
    CHECK(ms.contains("[]"));
    CHECK(ms.contains("[x:1,y:1]"));
    CHECK(ms.contains("[y:2]"));

    Rng r(0, 0);
    Carrier big = random_carrier(r, 11, "p");
    CHECK_THROWS_AS(powerset_carrier(big), error);  // base carrier over bound
}

TEST_CASE("matchings enumerate permutations times edge choices") {
    Triskell t(C({"1", "2"}), C({"3", "4"}), Monoid::Rational);
    t.add_edge("1", "3", Weight::rational(2));
    t.add_edge("1", "4", Weight::rational(3));
    t.add_edge("2", "3", Weight::rational(5));
    t.add_edge("2", "4", Weight::rational(7));

    auto ms = matchings(t, {"1", "2"}, {"3", "4"});
    REQUIRE(ms.size() == 2);
    CHECK(ms[0].sign == 1);
    CHECK(ms[0].weight == Weight::rational(14));   // 1->3, 2->4
    CHECK(ms[1].sign == -1);
    CHECK(ms[1].weight == Weight::rational(15));   // 1->4, 2->3

    CHECK(matchings(t, {}, {}).size() == 1);       // the empty matching
    CHECK(matchings(t, {"1"}, {}).empty());        // arity mismatch

    // parallel edges multiply the count
    Triskell p(C({"a"}), C({"b"}), Monoid::Rational);
    p.add_edge("a", "b", Weight::rational(2));
    p.add_edge("a", "b", Weight::rational(3));
    CHECK(matchings(p, {"a"}, {"b"}).size() == 2);
}

TEST_CASE("alternating power of a 2x2 matrix") {
    Matrix m(C({"1", "2"}), C({"3", "4"}), NumKind::Rational);
    m.set("1", "3", R(2));
    m.set("1", "4", R(3));
    m.set("2", "3", R(5));
    m.set("2", "4", R(7));

    Matrix f = fock_rel(m);
    CHECK(f.n_rows() == 4);
    CHECK(f.at("{}", "{}") == R(1));
    CHECK(f.at("{1}", "{3}") == R(2));
    CHECK(f.at("{1}", "{4}") == R(3));
    CHECK(f.at("{2}", "{3}") == R(5));
    CHECK(f.at("{2}", "{4}") == R(7));
    CHECK(f.at("{1,2}", "{3,4}") == R(-1));  // 2*7 - 3*5
    CHECK(f.at("{}", "{3}") == R(0));
    CHECK(f.at("{1}", "{3,4}") == R(0));
}

TEST_CASE("alternating power of a sparse 3x3 matrix hits every minor") {
    Matrix m(C({"1", "2", "3"}), C({"4", "5", "6"}), NumKind::Rational);
    m.set("1", "4", R(2));
    m.set("1", "5", R(3));
    m.set("2", "4", R(7));
    m.set("2", "5", R(11));
    m.set("3", "4", R(13));
    m.set("3", "6", R(17));

    Matrix f = fock_rel(m);
    CHECK(f.at("{}", "{}") == R(1));
    CHECK(f.at("{1,2}", "{4,5}") == R(1));     // 2*11 - 3*7
    CHECK(f.at("{2,3}", "{4,5}") == R(-143));  // 7*0 - 11*13
    CHECK(f.at("{1,3}", "{4,5}") == R(-39));
    CHECK(f.at("{2,3}", "{5,6}") == R(187));
    CHECK(f.at("{1,3}", "{5,6}") == R(51));
    CHECK(f.at("{2,3}", "{4,6}") == R(119));
    CHECK(f.at("{1,3}", "{4,6}") == R(34));
    CHECK(f.at("{1,2}", "{4,6}") == R(0));  // col 6 is zero on rows 1,2
    CHECK(f.at("{1,2,3}", "{4,5,6}") == R(17));
    CHECK(f.at("{1}", "{6}") == R(0));
    CHECK(f.at("{3}", "{5}") == R(0));
}

TEST_CASE("edge-level alternating power contracts to the matrix one") {
    Rng r(31, 6);
    for (int i = 0; i < 20; ++i) {
        Carrier a = random_carrier(r, 1 + r.below(3), "a");
        Carrier b = random_carrier(r, 1 + r.below(3), "b");
        Triskell t = random_triskell(r, a, b, Monoid::Rational, 6);
        CHECK(contract(fock_lift(t)) == fock_rel(contract(t)));
    }
}

TEST_CASE("composite lifts agree only up to cancelling pairs") {
    Triskell t(C({"1", "2"}), C({"3"}), Monoid::Rational);
    t.add_edge("1", "3", Weight::rational(2));
    t.add_edge("2", "3", Weight::rational(3));
    Triskell u(C({"3"}), C({"4", "5"}), Monoid::Rational);
    u.add_edge("3", "4", Weight::rational(5));
    u.add_edge("3", "5", Weight::rational(7));

    Triskell lifted = fock_lift(compose(t, u));
    Triskell raw = compose(fock_lift(t), fock_lift(u));

    // the lift of the composite carries a +210/-210 matching pair on
    // ({1,2},{4,5}) that the composite of lifts cannot produce
    CHECK(canonical(lifted) != canonical(raw));
    CHECK(canonical(lifted).edges.size() == canonical(raw).edges.size() + 2);
    bool plus = false, minus = false;
    for (const auto& e : lifted.edges()) {
        if (e.w == Weight::rational(210)) plus = true;
        if (e.w == Weight::rational(-210)) minus = true;
    }
    CHECK(plus);
    CHECK(minus);
    CHECK(zero_normalize(lifted) == zero_normalize(raw));
}

TEST_CASE("symmetric power counts weighted occupation matchings") {
    Triskell loop(C({"x"}), C({"x"}), Monoid::Rational);
    loop.add_edge("x", "x", Weight::rational(5));

    Triskell s = fock_sym(loop, 2);
    Matrix m = contract(s);
    CHECK(m.at("[]", "[]") == R(1));
    CHECK(m.at("[x:1]", "[x:1]") == R(5));
    CHECK(m.at("[x:2]", "[x:2]") == R(50));  // two matchings of weight 25
    CHECK(m.at("[]", "[x:1]") == R(0));

    // degree bound honoured
    CHECK(s.source().size() == 3);
    CHECK_THROWS_AS(fock_sym(loop, 5), error);  // degree cap is 4
}

TEST_CASE("permutation expansion and loop sum over edge multisets") {
    Triskell t(C({"a", "b"}), C({"a", "b"}), Monoid::Rational);
    t.add_edge("a", "a", Weight::rational(2));
    t.add_edge("b", "b", Weight::rational(3));
    t.add_edge("a", "b", Weight::rational(5));
    t.add_edge("b", "a", Weight::rational(7));

    CHECK(det_m(t, MeasureMap::identity()) == R(-29));  // 2*3 - 5*7
    CHECK(det_m(t, MeasureMap::absolute()) == R(41));   // 6 + |-35|
    CHECK(tr_m(t, MeasureMap::identity()) == R(5));
    CHECK(tr_m(t, MeasureMap::absolute()) == R(5));

    // parallel loops enter the expansion once per choice
    Triskell p(C({"x"}), C({"x"}), Monoid::Rational);
    p.add_edge("x", "x", Weight::rational(1));
    p.add_edge("x", "x", Weight::rational(2));
    CHECK(det_m(p, MeasureMap::identity()) == R(3));
    CHECK(tr_m(p, MeasureMap::identity()) == R(3));
}

TEST_CASE("loop sum of a lift equals the permutation expansion with the unit") {
    // one-point instance small enough to read off by hand
    Triskell t(C({"a"}), C({"a"}), Monoid::Rational);
    t.add_edge("a", "a", Weight::rational(2));
    Triskell one_union = tri_union(identity(t.source(), t.monoid()), t);
    CHECK(det_m(one_union, MeasureMap::identity()) == R(3));
    CHECK(tr_m(fock_lift(t), MeasureMap::identity()) == R(3));
}

TEST_CASE("multinomial of a multiset") {
    CHECK(multinomial({}) == R(1));
    CHECK(multinomial({"x"}) == R(1));
    CHECK(multinomial({"x", "x", "y"}) == R(3));
    CHECK(multinomial({"x", "x", "y", "y"}) == R(6));
}

TEST_CASE("carrier bijections between sums and products") {
    Carrier a = C({"a"});
    Carrier b = C({"b"});
    auto pmap = powerset_sum_to_product(a, b);
    CHECK(pmap.at("{}") == "({},{})");
    CHECK(pmap.at("{L.a}") == "({a},{})");
    CHECK(pmap.at("{R.b}") == "({},{b})");
    CHECK(pmap.at("{L.a,R.b}") == "({a},{b})");

    auto mmap = multiset_sum_to_product(a, b, 2);
    CHECK(mmap.at("[]") == "([],[])");
    CHECK(mmap.at("[L.a:1,R.b:1]") == "([a:1],[b:1])");
    CHECK(mmap.at("[L.a:2]") == "([a:2],[])");
}
