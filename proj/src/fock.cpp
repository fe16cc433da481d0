#include "triskell/fock.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

namespace triskell {

std::string subset_label(const std::vector<std::string>& pts) {
    std::string s = "{";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) s += ",";
        s += pts[i];
    }
    return s + "}";
}

std::string multiset_label(const std::vector<std::string>& pts) {
    std::string s = "[";
    std::size_t i = 0;
    bool first = true;
    while (i < pts.size()) {
        std::size_t j = i;
        while (j < pts.size() && pts[j] == pts[i]) ++j;
        if (!first) s += ",";
        s += pts[i] + ":" + std::to_string(j - i);
        first = false;
        i = j;
    }
    return s + "]";
}

namespace {

void check_base(const Carrier& base, std::size_t max_base, const char* what) {
    if (base.size() > max_base)
        throw error(std::string(what) + ": base carrier size " +
                    std::to_string(base.size()) + " exceeds bound " +
                    std::to_string(max_base));
}

// All multisets over `labels` of total multiplicity <= degree, as sorted
// expanded lists (the empty multiset included), in graded lexicographic order.
std::vector<std::vector<std::string>> all_multisets(const std::vector<std::string>& labels,
                                                    std::size_t degree) {
    std::vector<std::vector<std::string>> out;
    std::vector<std::string> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        out.push_back(cur);
        if (cur.size() == degree) return;
        for (std::size_t i = start; i < labels.size(); ++i) {
            cur.push_back(labels[i]);
            self(self, i);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
}

int permutation_sign(const std::vector<std::size_t>& s) {
    int inv = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] > s[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

}  // namespace

Carrier powerset_carrier(const Carrier& base, std::size_t max_base) {
    check_base(base, max_base, "powerset_carrier");
    std::size_t n = base.size();
    std::vector<std::string> ls;
    ls.reserve(std::size_t(1) << n);
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        std::vector<std::string> pts;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t(1) << i)) pts.push_back(base.label(i));
        ls.push_back(subset_label(pts));
    }
    return Carrier(std::move(ls));
}

Carrier multiset_carrier(const Carrier& base, std::size_t degree, std::size_t max_base) {
    check_base(base, max_base, "multiset_carrier");
    if (degree > 4) throw error("multiset_carrier: degree bound is 4");
    std::vector<std::string> ls;
    for (const auto& m : all_multisets(base.labels(), degree))
        ls.push_back(multiset_label(m));
    return Carrier(std::move(ls));
}

std::vector<Matching> matchings(const Triskell& t, std::vector<std::string> a_points,
                                std::vector<std::string> b_points) {
    std::sort(a_points.begin(), a_points.end());
    std::sort(b_points.begin(), b_points.end());
    std::vector<Matching> out;
    if (a_points.size() != b_points.size()) return out;
    std::size_t k = a_points.size();

    std::vector<std::size_t> ai(k), bi(k);
    for (std::size_t i = 0; i < k; ++i) {
        ai[i] = t.source().index_of(a_points[i]);
        bi[i] = t.target().index_of(b_points[i]);
    }

    if (k == 0) {
        out.push_back(Matching{{}, {}, {}, {}, 1, Weight::one(t.monoid())});
        return out;
    }

    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> bucket;
    for (std::size_t id = 0; id < t.edges().size(); ++id) {
        const Edge& e = t.edges()[id];
        bucket[{e.src, e.tgt}].push_back(id);
    }

    std::vector<std::size_t> sigma(k);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        std::vector<const std::vector<std::size_t>*> cand(k);
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i) {
            auto it = bucket.find({ai[i], bi[sigma[i]]});
            if (it == bucket.end()) ok = false;
            else cand[i] = &it->second;
        }
        if (!ok) continue;
        int sign = permutation_sign(sigma);

        std::vector<std::size_t> choice(k, 0);
        bool more = true;
        while (more) {
            Matching m;
            m.a_points = a_points;
            m.b_points = b_points;
            m.sigma = sigma;
            m.sign = sign;
            m.edge_ids.resize(k);
            Weight w = Weight::one(t.monoid());
            for (std::size_t i = 0; i < k; ++i) {
                std::size_t id = (*cand[i])[choice[i]];
                m.edge_ids[i] = id;
                w = w_mul(w, t.edges()[id].w);
            }
            m.weight = std::move(w);
            out.push_back(std::move(m));

            more = false;
            for (std::size_t pos = k; pos-- > 0;) {
                if (++choice[pos] < cand[pos]->size()) {
                    more = true;
                    break;
                }
                choice[pos] = 0;
            }
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

Matrix fock_rel(const Matrix& m, std::size_t max_base) {
    check_base(m.rows(), max_base, "fock_rel");
    check_base(m.cols(), max_base, "fock_rel");
    std::size_t nr = m.n_rows(), nc = m.n_cols();
    Matrix r(powerset_carrier(m.rows(), max_base), powerset_carrier(m.cols(), max_base),
             m.kind());

    Num one = promote_to(Num::rational(1), m.kind());
    std::unordered_map<std::uint64_t, Num> memo;

    // Minor determinant by expansion along the last row of the selection.
    auto det = [&](auto&& self, std::uint32_t maskA, std::uint32_t maskB) -> Num {
        if (maskA == 0) return one;
        std::uint64_t key = (std::uint64_t(maskA) << 32) | maskB;
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        int i = 31 - __builtin_clz(maskA);  // largest selected row
        int row_pos = __builtin_popcount(maskA) - 1;
        Num acc = promote_to(Num::rational(0), m.kind());
        int col_pos = 0;
        for (std::size_t j = 0; j < nc; ++j) {
            if (!(maskB & (std::uint32_t(1) << j))) continue;
            Num sub = self(self, maskA ^ (std::uint32_t(1) << i),
                           maskB ^ (std::uint32_t(1) << j));
            Num term = m.at(std::size_t(i), j) * sub;
            if ((row_pos + col_pos) % 2) term = -term;
            acc = acc + term;
            ++col_pos;
        }
        memo.emplace(key, acc);
        return acc;
    };

    auto label_of = [](const Carrier& base, std::uint32_t mask) {
        std::vector<std::string> pts;
        for (std::size_t i = 0; i < base.size(); ++i)
            if (mask & (std::uint32_t(1) << i)) pts.push_back(base.label(i));
        return subset_label(pts);
    };

    for (std::uint32_t maskA = 0; maskA < (std::uint32_t(1) << nr); ++maskA)
        for (std::uint32_t maskB = 0; maskB < (std::uint32_t(1) << nc); ++maskB) {
            if (__builtin_popcount(maskA) != __builtin_popcount(maskB)) continue;
            r.set(label_of(m.rows(), maskA), label_of(m.cols(), maskB),
                  det(det, maskA, maskB));
        }
    return r;
}

namespace {
// Sorted active endpoint labels on each side.
std::pair<std::vector<std::string>, std::vector<std::string>> active_points(const Triskell& t) {
    std::set<std::size_t> s, g;
    for (const auto& e : t.edges()) {
        s.insert(e.src);
        g.insert(e.tgt);
    }
    std::vector<std::string> sv, gv;
    for (auto i : s) sv.push_back(t.source().label(i));
    for (auto i : g) gv.push_back(t.target().label(i));
    return {sv, gv};
}
}  // namespace

Triskell fock_lift(const Triskell& t, std::size_t max_base) {
    check_base(t.source(), max_base, "fock_lift");
    check_base(t.target(), max_base, "fock_lift");
    Monoid sm = signed_extension(t.monoid());
    Triskell r(powerset_carrier(t.source(), max_base),
               powerset_carrier(t.target(), max_base), sm);
    r.add_edge(subset_label({}), subset_label({}), Weight::one(sm));

    auto [av, bv] = active_points(t);
    for (std::uint32_t maskA = 1; maskA < (std::uint32_t(1) << av.size()); ++maskA) {
        std::vector<std::string> a_pts;
        for (std::size_t i = 0; i < av.size(); ++i)
            if (maskA & (std::uint32_t(1) << i)) a_pts.push_back(av[i]);
        for (std::uint32_t maskB = 1; maskB < (std::uint32_t(1) << bv.size()); ++maskB) {
            if (__builtin_popcount(maskA) != __builtin_popcount(maskB)) continue;
            std::vector<std::string> b_pts;
            for (std::size_t j = 0; j < bv.size(); ++j)
                if (maskB & (std::uint32_t(1) << j)) b_pts.push_back(bv[j]);
            for (const auto& mt : matchings(t, a_pts, b_pts)) {
                Weight w = mt.weight.promoted(sm);
                if (mt.sign < 0) w = w_neg(w);
                r.add_edge(subset_label(a_pts), subset_label(b_pts), w);
            }
        }
    }
    return r;
}

Triskell fock_sym(const Triskell& t, std::size_t degree, std::size_t max_base) {
    if (degree > 4) throw error("fock_sym: degree bound is 4");
    Triskell r(multiset_carrier(t.source(), degree, max_base),
               multiset_carrier(t.target(), degree, max_base), t.monoid());
    r.add_edge(multiset_label({}), multiset_label({}), Weight::one(t.monoid()));

    auto [av, bv] = active_points(t);
    for (const auto& ma : all_multisets(av, degree)) {
        if (ma.empty()) continue;
        for (const auto& mb : all_multisets(bv, degree)) {
            if (mb.size() != ma.size()) continue;
            for (const auto& mt : matchings(t, ma, mb))
                r.add_edge(multiset_label(ma), multiset_label(mb), mt.weight);
        }
    }
    return r;
}

Num det_m(const Triskell& t, const MeasureMap& mm, std::size_t dim_bound) {
    if (!t.endo()) throw error("det_m: source and target carriers differ");
    std::size_t n = t.source().size();
    if (n > dim_bound)
        throw error("det_m: dimension " + std::to_string(n) + " exceeds bound " +
                    std::to_string(dim_bound));
    Monoid sm = signed_extension(t.monoid());

    std::map<std::pair<std::size_t, std::size_t>, std::vector<const Weight*>> bucket;
    for (const auto& e : t.edges()) bucket[{e.src, e.tgt}].push_back(&e.w);

    Num acc = Num::rational(0);
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        // candidate edges per position i: sigma(i) -> i
        std::vector<const std::vector<const Weight*>*> cand(n);
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            auto it = bucket.find({sigma[i], i});
            if (it == bucket.end()) ok = false;
            else cand[i] = &it->second;
        }
        if (!ok) continue;
        int sign = permutation_sign(sigma);

        std::vector<std::size_t> choice(n, 0);
        bool more = true;
        while (more) {
            Weight w = Weight::one(t.monoid());
            for (std::size_t i = 0; i < n; ++i) w = w_mul(w, *(*cand[i])[choice[i]]);
            Weight sw = w.promoted(sm);
            if (sign < 0) sw = w_neg(sw);
            acc = acc + mm.apply(sw);

            more = false;
            for (std::size_t pos = n; pos-- > 0;) {
                if (++choice[pos] < cand[pos]->size()) {
                    more = true;
                    break;
                }
                choice[pos] = 0;
            }
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return acc;
}

Num tr_m(const Triskell& t, const MeasureMap& mm) {
    if (!t.endo()) throw error("tr_m: source and target carriers differ");
    Num acc = Num::rational(0);
    for (const auto& e : t.edges())
        if (e.src == e.tgt) acc = acc + mm.apply(e.w);
    return acc;
}

namespace {
BigInt factorial(std::size_t n) {
    BigInt f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= BigInt(static_cast<unsigned>(i));
    return f;
}
}

Num multinomial(const std::vector<std::string>& multiset_points) {
    std::map<std::string, std::size_t> counts;
    for (const auto& p : multiset_points) ++counts[p];
    BigInt den = 1;
    for (const auto& [p, c] : counts) den *= factorial(c);
    return Num::rational(Rational(factorial(multiset_points.size()), den));
}

std::map<std::string, std::string> powerset_sum_to_product(const Carrier& a,
                                                           const Carrier& b) {
    std::map<std::string, std::string> out;
    for (std::uint32_t maskA = 0; maskA < (std::uint32_t(1) << a.size()); ++maskA) {
        std::vector<std::string> apts, upts;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (maskA & (std::uint32_t(1) << i)) {
                apts.push_back(a.label(i));
                upts.push_back(left_label(a.label(i)));
            }
        for (std::uint32_t maskB = 0; maskB < (std::uint32_t(1) << b.size()); ++maskB) {
            std::vector<std::string> bpts;
            std::vector<std::string> all = upts;
            for (std::size_t j = 0; j < b.size(); ++j)
                if (maskB & (std::uint32_t(1) << j)) {
                    bpts.push_back(b.label(j));
                    all.push_back(right_label(b.label(j)));
                }
            out[subset_label(all)] = pair_label(subset_label(apts), subset_label(bpts));
        }
    }
    return out;
}

std::map<std::string, std::string> multiset_sum_to_product(const Carrier& a,
                                                           const Carrier& b,
                                                           std::size_t degree) {
    std::map<std::string, std::string> out;
    for (const auto& ma : all_multisets(a.labels(), degree)) {
        for (const auto& mb : all_multisets(b.labels(), degree)) {
            if (ma.size() + mb.size() > degree) continue;
            std::vector<std::string> merged;
            for (const auto& x : ma) merged.push_back(left_label(x));
            for (const auto& y : mb) merged.push_back(right_label(y));
            out[multiset_label(merged)] = pair_label(multiset_label(ma), multiset_label(mb));
        }
    }
    return out;
}

}  // namespace triskell
