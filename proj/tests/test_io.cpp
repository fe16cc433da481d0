#include <cstdio>
#include <string>
#include <vector>

#include "doctest.h"
#include "triskell/errors.hpp"
#include "triskell/json_io.hpp"
#include "triskell/mll.hpp"
#include "triskell/qcs.hpp"

using namespace triskell;

namespace {

Triskell ab_triskell(bool reversed) {
    Carrier src({"a", "b"});
    Carrier tgt({"u", "v"});
    Triskell t(src, tgt, Monoid::Rational);
    if (reversed) {
        t.add_edge("b", "v", Weight::rational(7));
        t.add_edge("a", "u", Weight::rational(1, 3));
        t.add_edge("a", "u", Weight::rational(1, 3));
    } else {
        t.add_edge("a", "u", Weight::rational(1, 3));
        t.add_edge("b", "v", Weight::rational(7));
        t.add_edge("a", "u", Weight::rational(1, 3));
    }
    return t;
}

}  // namespace

TEST_CASE("weight json round-trips per monoid") {
    std::vector<Weight> ws = {
        Weight::one(Monoid::Unit),
        Weight::zero(Monoid::Unit),
        Weight::sign_unit(1),
        Weight::sign_unit(-1),
        Weight::zero(Monoid::SignedUnit),
        Weight::nonneg_real(2.5),
        Weight::signed_real(-1.25),
        Weight::complex({0.5, -2.0}),
        Weight::zero(Monoid::Complex),
        Weight::rational(3, 4),
        Weight::rational(-22, 7),
        Weight::zero(Monoid::Rational),
    };
    for (const auto& w : ws) {
        Json j = weight_to_json(w);
        CHECK(weight_from_json(j) == w);
    }
}

TEST_CASE("weight json external forms") {
    Json j = weight_to_json(Weight::rational(3, 4));
    CHECK(j.at("monoid") == "rational");
    CHECK(j.at("v") == "3/4");

    // integer shorthand accepted on input
    Json in = {{"monoid", "rational"}, {"v", 5}};
    CHECK(weight_from_json(in) == Weight::rational(5));

    Json z = weight_to_json(Weight::zero(Monoid::Complex));
    CHECK(z.at("zero") == true);
    CHECK(!z.contains("re"));

    Json c = weight_to_json(Weight::complex({1.5, -0.5}));
    CHECK(c.at("re") == 1.5);
    CHECK(c.at("im") == -0.5);

    Json s = weight_to_json(Weight::sign_unit(-1));
    CHECK(s.at("v") == -1);
}

TEST_CASE("weight json rejects malformed input") {
    CHECK_THROWS_AS(weight_from_json(Json::array()), error);
    CHECK_THROWS_AS(weight_from_json(Json{{"v", 1}}), error);
    CHECK_THROWS_AS(weight_from_json(Json{{"monoid", "octonion"}, {"v", 1}}), error);
    CHECK_THROWS_AS(weight_from_json(Json{{"monoid", "signed-unit"}, {"v", 2}}), error);
    CHECK_THROWS_AS(weight_from_json(Json{{"monoid", "rational"}, {"v", "x/y"}}), error);
    CHECK_THROWS_AS(weight_from_json(Json{{"monoid", "rational"}, {"v", 0.5}}), error);
    CHECK_THROWS_AS(weight_from_json(Json{{"monoid", "signed-real"}, {"v", "1"}}), error);
}

TEST_CASE("triskell json round-trip groups duplicate edges") {
    Triskell t = ab_triskell(false);
    Json j = triskell_to_json(t);
    CHECK(j.at("monoid") == "rational");
    CHECK(j.at("source") == Json({"a", "b"}));
    CHECK(j.at("edges").size() == 2);  // duplicate edge folded into mult
    bool saw_mult = false;
    for (const auto& e : j.at("edges")) {
        if (e.contains("mult")) {
            saw_mult = true;
            CHECK(e.at("mult") == 2);
            CHECK(e.at("s") == "a");
        }
    }
    CHECK(saw_mult);

    Triskell back = triskell_from_json(j);
    CHECK(canonical(back) == canonical(t));
    CHECK(back.edges().size() == 3);
}

TEST_CASE("triskell json is byte-stable across edge insertion order") {
    std::string a = dump_canonical(triskell_to_json(ab_triskell(false)));
    std::string b = dump_canonical(triskell_to_json(ab_triskell(true)));
    CHECK(a == b);
    CHECK(a.back() == '\n');
}

TEST_CASE("triskell json rejects malformed input") {
    Json j = triskell_to_json(ab_triskell(false));
    Json bad = j;
    bad["edges"][0]["mult"] = 0;
    CHECK_THROWS_AS(triskell_from_json(bad), error);

    bad = j;
    bad["edges"][0]["s"] = "zz";
    CHECK_THROWS_AS(triskell_from_json(bad), error);

    CHECK_THROWS_AS(triskell_from_json(Json("x")), error);
}

TEST_CASE("matrix json round-trips each numeric kind") {
    Carrier r({"p", "q"});
    Carrier c({"x"});

    Matrix mq(r, c, NumKind::Rational);
    mq.set(0, 0, Num::rational(Rational(1, 3)));
    mq.set(1, 0, Num::rational(Rational(-4)));
    Json jq = matrix_to_json(mq);
    CHECK(jq.at("kind") == "rational");
    CHECK(jq.at("entries")[0][0] == "1/3");
    CHECK(Matrix::approx_equal(matrix_from_json(jq), mq, 0.0));

    Matrix mr(r, c, NumKind::Real);
    mr.set(0, 0, Num::real(0.25));
    mr.set(1, 0, Num::real(-3.5));
    Json jr = matrix_to_json(mr);
    CHECK(jr.at("entries")[1][0] == -3.5);
    CHECK(Matrix::approx_equal(matrix_from_json(jr), mr, 0.0));

    Matrix mc(r, c, NumKind::Complex);
    mc.set(0, 0, Num::complex({1.0, -2.0}));
    Json jc = matrix_to_json(mc);
    CHECK(jc.at("entries")[0][0].at("im") == -2.0);
    Matrix mc2 = matrix_from_json(jc);
    CHECK(Matrix::approx_equal(mc2, mc, 0.0));

    // a bare number is accepted as a real complex entry
    Json shorthand = jc;
    shorthand["entries"][0][0] = 1.0;
    CHECK(matrix_from_json(shorthand).at(0, 0) == Num::complex({1.0, 0.0}));
}

TEST_CASE("matrix json rejects shape mismatches") {
    Carrier r({"p", "q"});
    Carrier c({"x"});
    Matrix m(r, c, NumKind::Rational);
    Json j = matrix_to_json(m);

    Json bad = j;
    bad["entries"].erase(1);
    CHECK_THROWS_AS(matrix_from_json(bad), error);

    bad = j;
    bad["entries"][0].push_back("1");
    CHECK_THROWS_AS(matrix_from_json(bad), error);

    bad = j;
    bad["kind"] = "quaternion";
    CHECK_THROWS_AS(matrix_from_json(bad), error);
}

TEST_CASE("space json round-trip") {
    Carrier web({"x", "y"});
    Triskell g(web, web, Monoid::Rational);
    g.add_edge("x", "x", Weight::rational(1, 2));
    Triskell d(web, web, Monoid::Rational);
    d.add_edge("x", "x", Weight::rational(1, 2));
    d.add_edge("y", "y", Weight::rational(1, 3));
    QcsSpace s(web, OrthoSpec::open_unit(), {g}, {d});

    Json j = qcs_to_json(s);
    CHECK(j.at("web") == Json({"x", "y"}));
    CHECK(j.at("spec").at("measure") == "identity");
    CHECK(j.at("spec").at("bot") == "open(0,1)");
    CHECK(j.at("generators").size() == 1);

    QcsSpace back = qcs_from_json(j);
    CHECK(back.web().labels() == web.labels());
    REQUIRE(back.generators().size() == 1);
    REQUIRE(back.dual_generators().size() == 1);
    CHECK(canonical(back.generators()[0]) == canonical(g));
    CHECK(canonical(back.dual_generators()[0]) == canonical(d));
    CHECK(back.spec().bot_name == "open(0,1)");
}

TEST_CASE("assignment json round-trip") {
    AtomAssignment a;
    a.sizes = {{"X", 2}, {"Y", 3}};
    a.monoid = Monoid::Complex;
    a.axiom_weight = Weight::complex({0.0, 1.0});
    a.per_axiom = {Weight::complex({2.0, 0.0}), Weight::complex({0.0, -1.0})};

    Json j = assignment_to_json(a);
    CHECK(j.at("atoms").at("X") == 2);
    CHECK(j.at("monoid") == "complex");
    CHECK(j.at("per_axiom").size() == 2);

    AtomAssignment back = assignment_from_json(j);
    CHECK(back.sizes == a.sizes);
    CHECK(back.monoid == a.monoid);
    CHECK(back.axiom_weight == a.axiom_weight);
    CHECK(back.per_axiom == a.per_axiom);
}

TEST_CASE("assignment json defaults the axiom weight to the monoid unit") {
    Json j = Json::parse(R"({"atoms": {"X": 1}, "monoid": "signed-unit"})");
    AtomAssignment a = assignment_from_json(j);
    CHECK(a.monoid == Monoid::SignedUnit);
    CHECK(a.axiom_weight == Weight::one(Monoid::SignedUnit));

    Json bad = Json::parse(R"({"atoms": {"X": -1}})");
    CHECK_THROWS_AS(assignment_from_json(bad), error);
}

TEST_CASE("numeric kind names round-trip") {
    for (NumKind k : {NumKind::Rational, NumKind::Real, NumKind::Complex})
        CHECK(num_kind_from_name(num_kind_name(k)) == k);
    CHECK_THROWS_AS(num_kind_from_name("quaternion"), error);
}

TEST_CASE("dot export names both carriers and lists canonical edges") {
    Triskell t = ab_triskell(false);
    std::string dot = triskell_to_dot(t);
    CHECK(dot.find("digraph triskell") != std::string::npos);
    CHECK(dot.find("\"s:a\"") != std::string::npos);
    CHECK(dot.find("\"t:v\"") != std::string::npos);
    CHECK(dot.find("doublecircle") != std::string::npos);
    CHECK(dot.find("\"s:a\" -> \"t:u\"") != std::string::npos);
    CHECK(dot.find("7") != std::string::npos);
}

TEST_CASE("json files save and load") {
    std::string path = "io_roundtrip_tmp.json";
    Json j = triskell_to_json(ab_triskell(false));
    save_text_file(path, dump_canonical(j));
    Json back = load_json_file(path);
    CHECK(back == j);
    CHECK(load_text_file(path) == dump_canonical(j));

    save_text_file(path, "{ not json");
    CHECK_THROWS_AS(load_json_file(path), parse_error);
    std::remove(path.c_str());

    CHECK_THROWS_AS(load_json_file("definitely_missing_file.json"), error);
    CHECK_THROWS_AS(load_text_file("definitely_missing_file.json"), error);
}
