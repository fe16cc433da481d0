#include "doctest.h"
#include "triskell/mll.hpp"

using namespace triskell;

namespace {

AtomAssignment unit_x(std::size_t n = 1) {
    AtomAssignment a;
    a.sizes["X"] = n;
    return a;
}

std::size_t count_edges(const Triskell& t, const std::string& s, const std::string& g) {
    std::size_t n = 0;
    for (const auto& e : t.edges())
        if (t.src_label(e) == s && t.tgt_label(e) == g) ++n;
    return n;
}

}  // namespace

TEST_CASE("formula construction, duality, printing") {
    Formula f = Formula::tensor(Formula::atom("X"), Formula::neg_atom("Y"));
    CHECK(f.str() == "(X*~Y)");
    CHECK(f.dual().str() == "(~X|Y)");
    CHECK(f.dual().dual() == f);
    CHECK(f.left() == Formula::atom("X"));
    CHECK(f.kind() == Formula::Kind::Tensor);
    CHECK(Formula::atom("X") != Formula::neg_atom("X"));
    CHECK_THROWS_AS(f.atom_name(), error);
    CHECK_THROWS_AS(Formula::atom("X").left(), error);
}

TEST_CASE("formula parsing round-trips and reports positions") {
    for (const char* s : {"X", "~X", "(X*~Y)", "((X*~Y)|Z)", "(X|(Y|(Z*Z)))"}) {
        CHECK(parse_formula(s).str() == s);
    }
    CHECK(parse_formula("  ( X * ~Y )  ") == parse_formula("(X*~Y)"));

    CHECK_THROWS_AS(parse_formula("(X*"), parse_error);
    CHECK_THROWS_AS(parse_formula("(X?Y)"), parse_error);
    CHECK_THROWS_AS(parse_formula("X Y"), parse_error);
    CHECK_THROWS_AS(parse_formula("~(X*Y)"), parse_error);
    try {
        parse_formula("(X*Y");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.pos == 4);
    }
}

TEST_CASE("proof builders compute and check conclusions") {
    ProofPtr ax = Proof::mk_ax(Formula::atom("X"));
    CHECK(sequent_str(ax->conclusion) == "~X, X");

    ProofPtr t = Proof::mk_tensor(ax, ax);
    CHECK(sequent_str(t->conclusion) == "~X, (X*~X), X");

    ProofPtr pr = Proof::mk_par(ax);
    CHECK(sequent_str(pr->conclusion) == "(~X|X)");

    ProofPtr x = Proof::mk_xch(ax, 0, 1);
    CHECK(sequent_str(x->conclusion) == "X, ~X");
    CHECK_THROWS_AS(Proof::mk_xch(ax, 0, 2), error);
    CHECK_THROWS_AS(Proof::mk_xch(ax, 1, 1), error);

    ProofPtr c = Proof::mk_cut(ax, ax);  // X against ~X
    CHECK(sequent_str(c->conclusion) == "~X, X");
    CHECK_THROWS_AS(Proof::mk_cut(ax, x), error);  // X against X

    CHECK(proof_size(c) == 3);
    CHECK(cut_count(c) == 1);
    CHECK(!cut_free(c));
    CHECK(cut_free(t));
}

TEST_CASE("proof parsing round-trips") {
    const std::string s = "cut(xch(tensor(ax(X),ax(Y)),0,1),ax(Y))";
    ProofPtr p = parse_proof(s);
    CHECK(proof_str(p) == s);
    CHECK(p->rule == Proof::Rule::Cut);

    CHECK_THROWS_AS(parse_proof("weaken(ax(X))"), parse_error);
    CHECK_THROWS_AS(parse_proof("ax(X)garbage"), parse_error);
    CHECK_THROWS_AS(parse_proof("xch(ax(X),0)"), parse_error);
    // parses but fails the cut typing rule
    CHECK_THROWS_AS(parse_proof("cut(ax(X),xch(ax(X),0,1))"), error);
}

TEST_CASE("sequent carriers name position, path, point") {
    Sequent s = {Formula::tensor(Formula::atom("X"), Formula::atom("Y")),
                 Formula::neg_atom("Z")};
    AtomAssignment a;
    a.sizes = {{"X", 1}, {"Y", 2}, {"Z", 1}};
    Carrier c = sequent_carrier(s, a);
    CHECK(c.labels() == std::vector<std::string>{"0:L:0", "0:R:0", "0:R:1", "1::0"});
}

TEST_CASE("axiom links interpret as symmetric exchanges") {
    AtomAssignment a = unit_x(2);
    Triskell t = interp_ig(parse_proof("ax(X)"), a);
    CHECK(t.source().size() == 4);
    CHECK(t.edges().size() == 4);
    CHECK(count_edges(t, "0::0", "1::0") == 1);
    CHECK(count_edges(t, "1::0", "0::0") == 1);
    CHECK(count_edges(t, "0::1", "1::1") == 1);
    CHECK(count_edges(t, "0::0", "1::1") == 0);

    Matrix m = interp_wr(parse_proof("ax(X)"), a);
    CHECK(m == contract(t));
    CHECK(m.at("0::0", "1::0") == Num::rational(1));

    // axiom weights scale the links
    AtomAssignment w = unit_x(1);
    w.axiom_weight = Weight::rational(5);
    Triskell tw = interp_ig(parse_proof("ax(X)"), w);
    CHECK(tw.edges()[0].w == Weight::rational(5));

    AtomAssignment pa = unit_x(1);
    pa.per_axiom = {Weight::rational(2), Weight::rational(3)};
    Triskell tp = interp_ig(parse_proof("tensor(ax(X),ax(X))"), pa);
    bool saw2 = false, saw3 = false;
    for (const auto& e : tp.edges()) {
        if (e.w == Weight::rational(2)) saw2 = true;
        if (e.w == Weight::rational(3)) saw3 = true;
    }
    CHECK(saw2);
    CHECK(saw3);
}

TEST_CASE("cutting two axioms leaves a single axiom link") {
    Triskell t = interp_ig(parse_proof("cut(ax(X),ax(X))"), unit_x());
    CHECK(t.source().labels() == std::vector<std::string>{"0::0", "1::0"});
    REQUIRE(t.edges().size() == 2);
    CHECK(count_edges(t, "0::0", "1::0") == 1);
    CHECK(count_edges(t, "1::0", "0::0") == 1);
    CHECK(count_edges(t, "0::0", "0::0") == 0);  // no reflection paths
}

TEST_CASE("normalization removes cuts and keeps conclusions") {
    for (const char* s : {
             "cut(ax(X),ax(X))",
             "cut(xch(tensor(ax(X),ax(X)),1,2),par(ax(X)))",  // tensor meets par
             "cut(par(ax(X)),xch(tensor(ax(X),ax(X)),0,1))",  // par meets tensor
             "cut(tensor(ax(X),ax(Y)),ax(Y))",                // axiom on the right
             "cut(ax(Y),tensor(ax(Y),ax(X)))",                // axiom on the left
             // principal pair reached through both commutations
             "cut(xch(tensor(ax(X),ax(X)),1,2),"
             "tensor(xch(par(xch(tensor(ax(X),ax(X)),0,1)),0,1),ax(Y)))",
             "cut(cut(ax(X),ax(X)),cut(ax(X),tensor(ax(X),ax(X))))",
         }) {
        ProofPtr p = parse_proof(s);
        ProofPtr n = normalize(p);
        CHECK(cut_free(n));
        AtomAssignment a;
        a.sizes = {{"X", 1}, {"Y", 2}};
        CHECK(sequent_str(n->conclusion) == sequent_str(p->conclusion));
        CHECK(canonical(interp_ig(n, a)) == canonical(interp_ig(p, a)));
    }

    // cut-free proofs normalize to themselves
    ProofPtr q = parse_proof("par(xch(tensor(ax(X),ax(Y)),0,1))");
    CHECK(proof_str(normalize(q)) == proof_str(q));
}

TEST_CASE("normalization keeps occurrences of equal formulas apart") {
    // conclusion (X, X*~X, X*~X, ~X) has two equal middle formulas; the
    // rewrite must not swap their roles
    const std::string s =
        "cut(cut(xch(ax(X),0,1),xch(tensor(ax(X),ax(X)),0,2)),"
        "xch(tensor(ax(X),ax(X)),0,2))";
    ProofPtr p = parse_proof(s);
    ProofPtr n = normalize(p);
    CHECK(cut_free(n));
    CHECK(sequent_str(n->conclusion) == sequent_str(p->conclusion));
    CHECK(canonical(interp_ig(n, unit_x())) == canonical(interp_ig(p, unit_x())));
}

TEST_CASE("interpretation needs every atom sized") {
    AtomAssignment a;  // empty
    CHECK_THROWS_AS(interp_ig(parse_proof("ax(X)"), a), error);
}

TEST_CASE("mapping check compares the two functor routes") {
    ProofPtr p = parse_proof("ax(X)");
    ProofPtr q = parse_proof("xch(ax(X),0,1)");
    MappingReport r = mapping_check(p, q, unit_x());
    CHECK(r.ok);
    CHECK(r.detail.empty());

    // combined carriers above the bound are rejected, not silently truncated
    AtomAssignment big = unit_x(4);
    CHECK_THROWS_AS(mapping_check(p, q, big, 10), error);
}
