#pragma once

#include <tuple>

#include "triskell/carrier.hpp"
#include "triskell/weight.hpp"

namespace triskell {

struct Edge {
    std::size_t src;  // index into the source carrier
    std::size_t tgt;  // index into the target carrier
    Weight w;
};

// Finite multiset of weighted edges between two carriers. Equality of
// triskells is equality of canonical forms (see canonical()).
class Triskell {
public:
    Triskell(Carrier source, Carrier target, Monoid monoid)
        : source_(std::move(source)), target_(std::move(target)), monoid_(monoid) {}

    const Carrier& source() const { return source_; }
    const Carrier& target() const { return target_; }
    Monoid monoid() const { return monoid_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool endo() const { return source_ == target_; }

    const std::string& src_label(const Edge& e) const { return source_.label(e.src); }
    const std::string& tgt_label(const Edge& e) const { return target_.label(e.tgt); }

    void add_edge(const std::string& s, const std::string& t, Weight w,
                  std::size_t mult = 1);
    void add_edge_idx(std::size_t s, std::size_t t, Weight w);

private:
    Carrier source_, target_;
    Monoid monoid_;
    std::vector<Edge> edges_;
};

// Sorted label-level edge list; two triskells are equal (2-isomorphic over
// fixed carriers) iff their canonical forms coincide.
struct CanonicalForm {
    std::vector<std::string> source, target;
    Monoid monoid;
    std::vector<std::tuple<std::string, std::string, Weight>> edges;

    bool operator==(const CanonicalForm& o) const;
    bool operator!=(const CanonicalForm& o) const { return !(*this == o); }
    std::string str() const;
};

CanonicalForm canonical(const Triskell& t);

// Rechecks structural invariants (duplicate labels, endpoint indices,
// weight tags); throws with a description on failure.
void validate(const Triskell& t);

// Diagrammatic composition: f.target must equal g.source; one edge per
// length-2 path, weight w(e) * w(e').
Triskell compose(const Triskell& f, const Triskell& g);
Triskell identity(const Carrier& c, Monoid m);
// Loops of weight lam on the chosen points only.
Triskell partial_identity(const Carrier& c, const std::vector<std::string>& points,
                          const Weight& lam);
// Iterated self-composition of an endo triskell; k = 0 gives the identity.
Triskell power(const Triskell& t, unsigned k);

Triskell tensor(const Triskell& a, const Triskell& b);
Triskell sum(const Triskell& a, const Triskell& b);
// Multiset union of edges; carriers and monoid must coincide.
Triskell tri_union(const Triskell& a, const Triskell& b);
Triskell scale(const Weight& a, const Triskell& t);

// Monoidal units: one point "*" with a unit loop, and the empty triskell.
Triskell triskell_one(Monoid m);
Triskell triskell_empty(Monoid m);

// Executes the feedback on U: keeps X -> Y edges and adds one edge per path
// X -> U -> ... -> U -> Y with the ordered product of weights. The carrier U
// is given by identical label sets u_src (in the source) and u_tgt (in the
// target); the U-internal edge graph must be acyclic, otherwise a
// cycle_error carrying a witness cycle is thrown.
Triskell exec_trace(const Triskell& t, const std::vector<std::string>& u_src,
                    const std::vector<std::string>& u_tgt);
Triskell exec_trace(const Triskell& t, const std::vector<std::string>& u);

bool is_simple(const Triskell& t);
// Merges parallel edges by weight addition; zero sums are dropped.
Triskell contract_simple(const Triskell& t);

// Promotes to the signed extension and cancels opposite-weight parallel
// edges until none remain; the result is the canonical representative of
// the congruence class modulo zero triskells.
Triskell zero_normalized(const Triskell& t);
CanonicalForm zero_normalize(const Triskell& t);

struct Classification {
    bool diagonal = false;
    bool hermitian = false;
    bool simple = false;
};
Classification classify(const Triskell& t);

// Relabels points through bijections on the source/target labels.
Triskell rename(const Triskell& t,
                const std::map<std::string, std::string>& source_map,
                const std::map<std::string, std::string>& target_map);

}  // namespace triskell
