#pragma once

#include <memory>

#include "triskell/matrix.hpp"

namespace triskell {

// Multiplicative formulas in negation normal form, as immutable shared trees.
class Formula {
public:
    enum class Kind { Atom, NegAtom, Tensor, Par };

    static Formula atom(std::string name);
    static Formula neg_atom(std::string name);
    static Formula tensor(Formula l, Formula r);
    static Formula par(Formula l, Formula r);

    Kind kind() const { return n_->k; }
    const std::string& atom_name() const;
    Formula left() const;
    Formula right() const;

    Formula dual() const;  // De Morgan dual, stays in NNF
    bool operator==(const Formula& o) const;
    bool operator!=(const Formula& o) const { return !(*this == o); }
    std::string str() const;

private:
    struct Node {
        Kind k;
        std::string name;
        std::shared_ptr<const Node> l, r;
    };
    explicit Formula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
    std::shared_ptr<const Node> n_;
};

using Sequent = std::vector<Formula>;
std::string sequent_str(const Sequent& s);

class Proof;
using ProofPtr = std::shared_ptr<const Proof>;

// Sequent-calculus proof tree. Builders type-check and cache conclusions:
//   ax(A)        |- ~A, A
//   tensor(p,q)  p |- G,A and q |- B,D give |- G, A*B, D
//   par(p)       p |- G,A,B gives |- G, A|B
//   cut(p,q)     p |- G,A and q |- ~A,D give |- G,D
//   xch(p,i,j)   swaps positions i and j
class Proof {
public:
    enum class Rule { Ax, Tensor, Par, Cut, Xch };

    Rule rule;
    Formula ax_formula = Formula::atom("X");
    ProofPtr a, b;
    std::size_t i = 0, j = 0;
    Sequent conclusion;

    static ProofPtr mk_ax(Formula f);
    static ProofPtr mk_tensor(ProofPtr p, ProofPtr q);
    static ProofPtr mk_par(ProofPtr p);
    static ProofPtr mk_cut(ProofPtr p, ProofPtr q);
    static ProofPtr mk_xch(ProofPtr p, std::size_t i, std::size_t j);
};

std::string proof_str(const ProofPtr& p);
std::size_t proof_size(const ProofPtr& p);
std::size_t cut_count(const ProofPtr& p);
bool cut_free(const ProofPtr& p);

Formula parse_formula(const std::string& text);
ProofPtr parse_proof(const std::string& text);

// Atom interpretation: carrier size per atom plus the weight every axiom
// link carries (optionally one weight per axiom occurrence, in proof order).
struct AtomAssignment {
    std::map<std::string, std::size_t> sizes;
    Monoid monoid = Monoid::Rational;
    Weight axiom_weight = Weight::rational(1);
    std::vector<Weight> per_axiom;  // optional; overrides axiom_weight by position

    std::size_t size_of(const std::string& atom) const;
};

// Point labels look like "0:LR:2": sequent position, formula path, atom point.
Carrier sequent_carrier(const Sequent& s, const AtomAssignment& asg);

// Cut-free rules build partial symmetries; cuts are executed away via
// exec_trace over the identified dual carriers (typed proofs never cycle).
Triskell interp_ig(const ProofPtr& p, const AtomAssignment& asg);
// Contracted, matrix-valued interpretation of the same proof.
Matrix interp_wr(const ProofPtr& p, const AtomAssignment& asg);

// Rewrites cuts away; the conclusion sequent is preserved exactly.
ProofPtr normalize(const ProofPtr& p);

struct MappingReport {
    bool ok = true;
    std::string detail;
};

// Functor compatibility on two interpreted proofs: the alternating Fock of a
// direct sum matches the tensor of the Focks (up to the powerset carrier
// bijection and zero normalization), and contraction commutes with the two
// Fock constructions on each interpretation.
MappingReport mapping_check(const ProofPtr& p, const ProofPtr& q,
                            const AtomAssignment& asg, std::size_t max_base = 10);

}  // namespace triskell
