#include "triskell/triskell.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

namespace triskell {

void Triskell::add_edge(const std::string& s, const std::string& t, Weight w,
                        std::size_t mult) {
    std::size_t si = source_.index_of(s);
    std::size_t ti = target_.index_of(t);
    for (std::size_t i = 0; i < mult; ++i) add_edge_idx(si, ti, w);
}

void Triskell::add_edge_idx(std::size_t s, std::size_t t, Weight w) {
    if (s >= source_.size() || t >= target_.size())
        throw error("edge endpoint out of range");
    if (w.monoid() != monoid_)
        throw error("edge weight monoid " + monoid_name(w.monoid()) +
                    " does not match triskell monoid " + monoid_name(monoid_));
    edges_.push_back(Edge{s, t, std::move(w)});
}

bool CanonicalForm::operator==(const CanonicalForm& o) const {
    return source == o.source && target == o.target && monoid == o.monoid &&
           edges == o.edges;
}

std::string CanonicalForm::str() const {
    std::ostringstream os;
    os << monoid_name(monoid) << " [";
    for (std::size_t i = 0; i < source.size(); ++i)
        os << (i ? "," : "") << source[i];
    os << "] -> [";
    for (std::size_t i = 0; i < target.size(); ++i)
        os << (i ? "," : "") << target[i];
    os << "] {";
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& [s, t, w] = edges[i];
        os << (i ? "; " : "") << s << "->" << t << ":" << w.str();
    }
    os << "}";
    return os.str();
}

CanonicalForm canonical(const Triskell& t) {
    CanonicalForm cf;
    cf.source = t.source().labels();
    cf.target = t.target().labels();
    cf.monoid = t.monoid();
    std::vector<Edge> es = t.edges();
    std::sort(es.begin(), es.end(), [](const Edge& a, const Edge& b) {
        if (a.src != b.src) return a.src < b.src;
        if (a.tgt != b.tgt) return a.tgt < b.tgt;
        return w_compare(a.w, b.w) < 0;
    });
    cf.edges.reserve(es.size());
    for (const auto& e : es)
        cf.edges.emplace_back(t.src_label(e), t.tgt_label(e), e.w);
    return cf;
}

void validate(const Triskell& t) {
    for (const auto& e : t.edges()) {
        if (e.src >= t.source().size() || e.tgt >= t.target().size())
            throw error("edge endpoint out of range");
        if (e.w.monoid() != t.monoid())
            throw error("edge weight monoid mismatch on " + t.src_label(e) +
                        "->" + t.tgt_label(e));
    }
}

Triskell compose(const Triskell& f, const Triskell& g) {
    if (f.target() != g.source())
        throw error("compose: target of first does not match source of second");
    if (f.monoid() != g.monoid()) throw error("compose: monoid mismatch");
    Triskell r(f.source(), g.target(), f.monoid());
    std::vector<std::vector<const Edge*>> by_src(g.source().size());
    for (const auto& d : g.edges()) by_src[d.src].push_back(&d);
    for (const auto& e : f.edges())
        for (const Edge* d : by_src[e.tgt])
            r.add_edge_idx(e.src, d->tgt, w_mul(e.w, d->w));
    return r;
}

Triskell identity(const Carrier& c, Monoid m) {
    Triskell r(c, c, m);
    for (std::size_t i = 0; i < c.size(); ++i) r.add_edge_idx(i, i, Weight::one(m));
    return r;
}

Triskell partial_identity(const Carrier& c, const std::vector<std::string>& points,
                          const Weight& lam) {
    Triskell r(c, c, lam.monoid());
    std::set<std::string> seen;
    for (const auto& p : points) {
        if (!seen.insert(p).second) throw error("partial_identity: repeated point " + p);
        std::size_t i = c.index_of(p);
        r.add_edge_idx(i, i, lam);
    }
    return r;
}

Triskell power(const Triskell& t, unsigned k) {
    if (!t.endo()) throw error("power: triskell is not an endomorphism");
    Triskell r = identity(t.source(), t.monoid());
    for (unsigned i = 0; i < k; ++i) r = compose(r, t);
    return r;
}

Triskell tensor(const Triskell& a, const Triskell& b) {
    if (a.monoid() != b.monoid()) throw error("tensor: monoid mismatch");
    Carrier s = Carrier::product(a.source(), b.source());
    Carrier t = Carrier::product(a.target(), b.target());
    Triskell r(std::move(s), std::move(t), a.monoid());
    for (const auto& ea : a.edges())
        for (const auto& eb : b.edges())
            r.add_edge(pair_label(a.src_label(ea), b.src_label(eb)),
                       pair_label(a.tgt_label(ea), b.tgt_label(eb)),
                       w_mul(ea.w, eb.w));
    return r;
}

Triskell sum(const Triskell& a, const Triskell& b) {
    if (a.monoid() != b.monoid()) throw error("sum: monoid mismatch");
    Carrier s = Carrier::disjoint_union(a.source(), b.source());
    Carrier t = Carrier::disjoint_union(a.target(), b.target());
    Triskell r(std::move(s), std::move(t), a.monoid());
    for (const auto& e : a.edges())
        r.add_edge(left_label(a.src_label(e)), left_label(a.tgt_label(e)), e.w);
    for (const auto& e : b.edges())
        r.add_edge(right_label(b.src_label(e)), right_label(b.tgt_label(e)), e.w);
    return r;
}

Triskell tri_union(const Triskell& a, const Triskell& b) {
    if (a.source() != b.source() || a.target() != b.target())
        throw error("union: carriers differ");
    if (a.monoid() != b.monoid()) throw error("union: monoid mismatch");
    Triskell r = a;
    for (const auto& e : b.edges()) r.add_edge_idx(e.src, e.tgt, e.w);
    return r;
}

Triskell scale(const Weight& a, const Triskell& t) {
    Triskell r(t.source(), t.target(), t.monoid());
    for (const auto& e : t.edges()) r.add_edge_idx(e.src, e.tgt, w_mul(a, e.w));
    return r;
}

Triskell triskell_one(Monoid m) {
    Carrier c(std::vector<std::string>{"*"});
    return identity(c, m);
}

Triskell triskell_empty(Monoid m) { return Triskell(Carrier(), Carrier(), m); }

namespace {

// DFS cycle search over the U-internal edge graph; returns a point cycle
// like {u1, u2, u1} when one exists.
std::optional<std::vector<std::string>> find_cycle(const Carrier& u,
                                                   const std::vector<std::vector<std::size_t>>& adj) {
    enum { White, Gray, Black };
    std::vector<int> color(u.size(), White);
    std::vector<std::size_t> path;
    std::optional<std::vector<std::string>> out;

    auto dfs = [&](auto&& self, std::size_t v) -> bool {
        color[v] = Gray;
        path.push_back(v);
        for (std::size_t w : adj[v]) {
            if (color[w] == Gray) {
                std::vector<std::string> cyc;
                auto it = std::find(path.begin(), path.end(), w);
                for (; it != path.end(); ++it) cyc.push_back(u.label(*it));
                cyc.push_back(u.label(w));
                out = std::move(cyc);
                return true;
            }
            if (color[w] == White && self(self, w)) return true;
        }
        color[v] = Black;
        path.pop_back();
        return false;
    };

    for (std::size_t v = 0; v < u.size(); ++v)
        if (color[v] == White && dfs(dfs, v)) return out;
    return std::nullopt;
}

Carrier complement(const Carrier& c, const std::set<std::string>& remove) {
    std::vector<std::string> keep;
    for (const auto& l : c.labels())
        if (!remove.count(l)) keep.push_back(l);
    return Carrier(std::move(keep));
}

}  // namespace

Triskell exec_trace(const Triskell& t, const std::vector<std::string>& u_src,
                    const std::vector<std::string>& u_tgt) {
    std::vector<std::string> a = u_src, b = u_tgt;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
        throw error("exec_trace: feedback carriers must carry identical labels");
    if (std::adjacent_find(a.begin(), a.end()) != a.end())
        throw error("exec_trace: repeated feedback point");
    for (const auto& l : a) {
        if (!t.source().contains(l))
            throw error("exec_trace: " + l + " not in source carrier");
        if (!t.target().contains(l))
            throw error("exec_trace: " + l + " not in target carrier");
    }

    std::set<std::string> uset(a.begin(), a.end());
    Carrier u(a);
    Carrier x = complement(t.source(), uset);
    Carrier y = complement(t.target(), uset);

    Triskell t_xy(x, y, t.monoid());
    Triskell t_xu(x, u, t.monoid());
    Triskell t_uu(u, u, t.monoid());
    Triskell t_uy(u, y, t.monoid());
    for (const auto& e : t.edges()) {
        const std::string& sl = t.src_label(e);
        const std::string& tl = t.tgt_label(e);
        bool su = uset.count(sl), tu = uset.count(tl);
        if (!su && !tu) t_xy.add_edge(sl, tl, e.w);
        else if (!su && tu) t_xu.add_edge(sl, tl, e.w);
        else if (su && tu) t_uu.add_edge(sl, tl, e.w);
        else t_uy.add_edge(sl, tl, e.w);
    }

    std::vector<std::vector<std::size_t>> adj(u.size());
    for (const auto& e : t_uu.edges()) adj[e.src].push_back(e.tgt);
    if (auto cyc = find_cycle(u, adj)) {
        std::string msg = "exec_trace: feedback is not nilpotent; cycle:";
        for (const auto& p : *cyc) msg += " " + p;
        throw cycle_error(msg, *cyc);
    }

    // Acyclicity bounds U-internal path length by |U| - 1.
    Triskell star = identity(u, t.monoid());
    Triskell p = t_uu;
    for (std::size_t k = 1; k <= u.size() && !p.edges().empty(); ++k) {
        star = tri_union(star, p);
        p = compose(p, t_uu);
    }

    Triskell through = compose(t_xu, compose(star, t_uy));
    return tri_union(t_xy, through);
}

Triskell exec_trace(const Triskell& t, const std::vector<std::string>& u) {
    return exec_trace(t, u, u);
}

bool is_simple(const Triskell& t) {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& e : t.edges())
        if (!seen.emplace(e.src, e.tgt).second) return false;
    return true;
}

Triskell contract_simple(const Triskell& t) {
    if (!monoid_has_add(t.monoid()))
        throw error("contract_simple: no addition on " + monoid_name(t.monoid()));
    std::map<std::pair<std::size_t, std::size_t>, Weight> acc;
    for (const auto& e : t.edges()) {
        auto key = std::make_pair(e.src, e.tgt);
        auto it = acc.find(key);
        if (it == acc.end()) acc.emplace(key, e.w);
        else it->second = w_add(it->second, e.w);
    }
    Triskell r(t.source(), t.target(), t.monoid());
    for (const auto& [key, w] : acc)
        if (!w.is_zero()) r.add_edge_idx(key.first, key.second, w);
    return r;
}

Triskell zero_normalized(const Triskell& t) {
    Monoid sm = signed_extension(t.monoid());
    auto wless = [](const Weight& a, const Weight& b) { return w_compare(a, b) < 0; };
    std::map<std::pair<std::size_t, std::size_t>,
             std::map<Weight, std::size_t, decltype(wless)>>
        buckets;
    for (const auto& e : t.edges()) {
        auto key = std::make_pair(e.src, e.tgt);
        auto it = buckets.find(key);
        if (it == buckets.end())
            it = buckets.emplace(key, std::map<Weight, std::size_t, decltype(wless)>(wless)).first;
        ++it->second[e.w.promoted(sm)];
    }
    Triskell r(t.source(), t.target(), sm);
    for (auto& [key, counts] : buckets) {
        for (auto& [w, n] : counts) {
            if (n == 0) continue;
            Weight nw = w_neg(w);
            if (nw == w) {
                n %= 2;
                continue;
            }
            auto other = counts.find(nw);
            if (other != counts.end() && other->second > 0) {
                std::size_t c = std::min(n, other->second);
                n -= c;
                other->second -= c;
            }
        }
        for (const auto& [w, n] : counts)
            for (std::size_t i = 0; i < n; ++i)
                r.add_edge_idx(key.first, key.second, w);
    }
    return r;
}

CanonicalForm zero_normalize(const Triskell& t) { return canonical(zero_normalized(t)); }

namespace {
Weight w_conj(const Weight& w) {
    if (w.is_zero() || w.monoid() != Monoid::Complex) return w;
    return Weight::complex(std::conj(w.embed().complex_value()));
}
}

Classification classify(const Triskell& t) {
    Classification c;
    c.simple = is_simple(t);
    c.diagonal = t.endo();
    for (const auto& e : t.edges())
        if (e.src != e.tgt) c.diagonal = false;
    c.hermitian = t.endo() && t.monoid() == Monoid::Complex;
    if (c.hermitian) {
        auto wless = [](const Weight& a, const Weight& b) { return w_compare(a, b) < 0; };
        std::map<std::tuple<std::size_t, std::size_t>,
                 std::map<Weight, long, decltype(wless)>> counts;
        for (const auto& e : t.edges()) {
            auto it = counts.find({e.src, e.tgt});
            if (it == counts.end())
                it = counts.emplace(std::tuple<std::size_t, std::size_t>{e.src, e.tgt},
                                    std::map<Weight, long, decltype(wless)>(wless)).first;
            ++it->second[e.w];
        }
        for (const auto& [key, ws] : counts) {
            auto [s, tt] = key;
            for (const auto& [w, n] : ws) {
                long m = 0;
                auto it = counts.find({tt, s});
                if (it != counts.end()) {
                    auto jt = it->second.find(w_conj(w));
                    if (jt != it->second.end()) m = jt->second;
                }
                if (m != n) {
                    c.hermitian = false;
                    break;
                }
            }
            if (!c.hermitian) break;
        }
    }
    return c;
}

Triskell rename(const Triskell& t,
                const std::map<std::string, std::string>& source_map,
                const std::map<std::string, std::string>& target_map) {
    auto apply = [](const Carrier& c, const std::map<std::string, std::string>& m) {
        std::vector<std::string> ls;
        ls.reserve(c.size());
        for (const auto& l : c.labels()) {
            auto it = m.find(l);
            if (it == m.end()) throw error("rename: no image for label " + l);
            ls.push_back(it->second);
        }
        return Carrier(std::move(ls));  // duplicate check enforces injectivity
    };
    Carrier s = apply(t.source(), source_map);
    Carrier y = apply(t.target(), target_map);
    Triskell r(std::move(s), std::move(y), t.monoid());
    for (const auto& e : t.edges())
        r.add_edge(source_map.at(t.src_label(e)), target_map.at(t.tgt_label(e)), e.w);
    return r;
}

}  // namespace triskell
