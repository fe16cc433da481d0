#pragma once

#include "triskell/matrix.hpp"

namespace triskell {

// Subsets serialize as "{x,y}" and multisets as "[x:2,y:1]", components in
// carrier order.
std::string subset_label(const std::vector<std::string>& sorted_points);
std::string multiset_label(const std::vector<std::string>& sorted_points_with_repeats);

Carrier powerset_carrier(const Carrier& base, std::size_t max_base = 10);
// All multisets of total multiplicity <= degree.
Carrier multiset_carrier(const Carrier& base, std::size_t degree,
                         std::size_t max_base = 10);

// One way of covering the point list a_points by edges into b_points: a
// position permutation sigma plus an edge choice per position. Points are
// listed in sorted order (with repeats for multisets); edge ids index into
// the triskell's edge list.
struct Matching {
    std::vector<std::string> a_points, b_points;
    std::vector<std::size_t> sigma;
    std::vector<std::size_t> edge_ids;
    int sign = 1;             // signature of sigma
    Weight weight;            // ordered product of the chosen edge weights
};

// All matchings, sigma in lexicographic order, edge choices in edge-list
// order within each sigma. Empty point lists yield the single empty matching.
std::vector<Matching> matchings(const Triskell& t, std::vector<std::string> a_points,
                                std::vector<std::string> b_points);

// Alternating Fock functor on matrices: entry (A,B) is the minor det M[A,B];
// the empty pair gets 1.
Matrix fock_rel(const Matrix& m, std::size_t max_base = 10);
// Edge-level alternating Fock: one signed edge per matching, over the signed
// extension of the weight monoid.
Triskell fock_lift(const Triskell& t, std::size_t max_base = 10);
// Symmetric Fock over multiset carriers: one unsigned edge per matching.
Triskell fock_sym(const Triskell& t, std::size_t degree, std::size_t max_base = 10);

// Permutation expansion over an endo triskell's parallel edges:
// sum over sigma and edge tuples of m(sign(sigma) * prod of weights).
Num det_m(const Triskell& t, const MeasureMap& m, std::size_t dim_bound = 10);
// Sum of m over self-loop weights.
Num tr_m(const Triskell& t, const MeasureMap& m);

// (sum of multiplicities)! / prod (multiplicity!)
Num multinomial(const std::vector<std::string>& multiset_points);

// Carrier bijections P(A+B) ~ P(A) x P(B) and its multiset analogue
// (restricted to total degree <= degree), as label maps on the left carrier.
std::map<std::string, std::string> powerset_sum_to_product(const Carrier& a,
                                                           const Carrier& b);
std::map<std::string, std::string> multiset_sum_to_product(const Carrier& a,
                                                           const Carrier& b,
                                                           std::size_t degree);

}  // namespace triskell
