#include "triskell/gen.hpp"

#include <algorithm>

#include "triskell/errors.hpp"

namespace triskell {

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq sq{seed, stream, std::uint64_t{0x7472736b}};
    eng_.seed(sq);
}

std::uint64_t Rng::next() { return eng_(); }

std::size_t Rng::below(std::size_t n) {
    if (n == 0) throw error("below(0)");
    return static_cast<std::size_t>(next() % n);
}

std::int64_t Rng::range(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw error("empty range");
    return lo + static_cast<std::int64_t>(below(static_cast<std::size_t>(hi - lo + 1)));
}

bool Rng::coin(std::size_t num, std::size_t den) { return below(den) < num; }

std::uint64_t mix_name(std::uint64_t seed, const std::string& name) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : name) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return seed ^ h;
}

Carrier random_carrier(Rng& r, std::size_t n, const std::string& prefix) {
    (void)r;
    std::vector<std::string> ls;
    for (std::size_t i = 0; i < n; ++i) ls.push_back(prefix + std::to_string(i));
    return Carrier(std::move(ls));
}

Weight random_weight(Rng& r, Monoid m) {
    switch (m) {
        case Monoid::Unit: return Weight::one(m);
        case Monoid::SignedUnit: return Weight::sign_unit(r.coin() ? 1 : -1);
        case Monoid::NonnegReal:
            return Weight::nonneg_real(static_cast<double>(r.range(1, 8)) / 8.0);
        case Monoid::SignedReal: {
            double v = static_cast<double>(r.range(1, 8)) / 8.0;
            return Weight::signed_real(r.coin() ? v : -v);
        }
        case Monoid::Complex: {
            std::int64_t re = 0, im = 0;
            while (re == 0 && im == 0) {
                re = r.range(-2, 2);
                im = r.range(-2, 2);
            }
            return Weight::complex({re / 2.0, im / 2.0});
        }
        case Monoid::Rational: {
            std::int64_t num = 0;
            while (num == 0) num = r.range(-4, 4);
            return Weight::rational(num, r.range(1, 4));
        }
    }
    throw error("bad monoid");
}

Triskell random_triskell(Rng& r, const Carrier& src, const Carrier& tgt, Monoid m,
                         std::size_t max_edges) {
    Triskell t(src, tgt, m);
    if (src.empty() || tgt.empty()) return t;
    std::size_t n = r.below(max_edges + 1);
    for (std::size_t i = 0; i < n; ++i)
        t.add_edge_idx(r.below(src.size()), r.below(tgt.size()), random_weight(r, m));
    return t;
}

Matrix random_matrix(Rng& r, const Carrier& rows, const Carrier& cols, NumKind kind) {
    Matrix m(rows, cols, kind);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (r.coin()) continue;
            switch (kind) {
                case NumKind::Rational:
                    m.set(i, j, Num::rational(r.range(-4, 4), r.range(1, 3)));
                    break;
                case NumKind::Real:
                    m.set(i, j, Num::real(static_cast<double>(r.range(-8, 8)) / 8.0));
                    break;
                case NumKind::Complex:
                    m.set(i, j, Num::complex({r.range(-2, 2) / 2.0, r.range(-2, 2) / 2.0}));
                    break;
            }
        }
    return m;
}

TracedInstance random_traced(Rng& r, std::size_t visible, std::size_t hidden, Monoid m,
                             std::size_t max_edges) {
    std::vector<std::string> ls;
    for (std::size_t i = 0; i < visible; ++i) ls.push_back("x" + std::to_string(i));
    std::vector<std::string> hs;
    for (std::size_t i = 0; i < hidden; ++i) hs.push_back("u" + std::to_string(i));
    ls.insert(ls.end(), hs.begin(), hs.end());
    Carrier c(ls);
    Triskell t(c, c, m);
    std::size_t n = r.below(max_edges + 1);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t s = r.below(c.size());
        std::size_t g = r.below(c.size());
        bool s_hidden = c.label(s).front() == 'u';
        bool g_hidden = c.label(g).front() == 'u';
        // carrier indices order the hidden block first, so forcing g > s
        // keeps hidden-to-hidden edges acyclic
        if (s_hidden && g_hidden && g <= s) {
            if (s + 1 < c.size()) g = s + 1 + r.below(c.size() - s - 1);
            else continue;
        }
        t.add_edge_idx(s, g, random_weight(r, m));
    }
    return {std::move(t), std::move(hs)};
}

Formula random_formula(Rng& r, const std::vector<std::string>& atoms, std::size_t depth) {
    if (atoms.empty()) throw error("no atoms to draw from");
    if (depth == 0 || r.coin()) {
        const std::string& a = atoms[r.below(atoms.size())];
        return r.coin() ? Formula::atom(a) : Formula::neg_atom(a);
    }
    Formula l = random_formula(r, atoms, depth - 1);
    Formula rr = random_formula(r, atoms, depth - 1);
    return r.coin() ? Formula::tensor(l, rr) : Formula::par(l, rr);
}

ProofPtr random_proof(Rng& r, std::size_t steps, std::size_t max_cuts,
                      const std::vector<std::string>& atoms) {
    std::vector<ProofPtr> pool;
    std::size_t n0 = 1 + r.below(3);
    for (std::size_t i = 0; i < n0; ++i)
        pool.push_back(Proof::mk_ax(random_formula(r, atoms, r.below(3))));
    std::size_t cuts = 0;
    for (std::size_t s = 0; s < steps; ++s) {
        std::size_t op = r.below(4);
        ProofPtr p = pool[r.below(pool.size())];
        if (op == 0) {
            ProofPtr q2 = pool[r.below(pool.size())];
            if (!p->conclusion.empty() && !q2->conclusion.empty())
                pool.push_back(Proof::mk_tensor(p, q2));
        } else if (op == 1 && p->conclusion.size() >= 2) {
            pool.push_back(Proof::mk_par(p));
        } else if (op == 2 && p->conclusion.size() >= 2) {
            std::size_t i = r.below(p->conclusion.size());
            std::size_t j = r.below(p->conclusion.size());
            if (i != j) pool.push_back(Proof::mk_xch(p, i, j));
        } else if (op == 3 && cuts < max_cuts && !p->conclusion.empty()) {
            Formula A = p->conclusion.back();
            ProofPtr q;
            for (const auto& cand : pool) {
                if (cand->conclusion.front() == A.dual()) {
                    q = cand;
                    break;
                }
            }
            if (!q) q = Proof::mk_ax(A);  // ax(A) starts with ~A
            pool.push_back(Proof::mk_cut(p, q));
            ++cuts;
        }
    }
    // prefer a proof that actually contains a cut when one exists
    for (auto it = pool.rbegin(); it != pool.rend(); ++it)
        if (cut_count(*it) > 0) return *it;
    return pool.back();
}

}  // namespace triskell
