#include "triskell/mll.hpp"

#include <algorithm>
#include <cctype>

#include "triskell/fock.hpp"

namespace triskell {

// ---------- formulas ----------

Formula Formula::atom(std::string name) {
    auto n = std::make_shared<Node>();
    n->k = Kind::Atom;
    n->name = std::move(name);
    return Formula(std::move(n));
}

Formula Formula::neg_atom(std::string name) {
    auto n = std::make_shared<Node>();
    n->k = Kind::NegAtom;
    n->name = std::move(name);
    return Formula(std::move(n));
}

Formula Formula::tensor(Formula l, Formula r) {
    auto n = std::make_shared<Node>();
    n->k = Kind::Tensor;
    n->l = l.n_;
    n->r = r.n_;
    return Formula(std::move(n));
}

Formula Formula::par(Formula l, Formula r) {
    auto n = std::make_shared<Node>();
    n->k = Kind::Par;
    n->l = l.n_;
    n->r = r.n_;
    return Formula(std::move(n));
}

const std::string& Formula::atom_name() const {
    if (n_->k != Kind::Atom && n_->k != Kind::NegAtom)
        throw error("formula is not an atom");
    return n_->name;
}

Formula Formula::left() const {
    if (!n_->l) throw error("formula has no subformulas");
    return Formula(n_->l);
}

Formula Formula::right() const {
    if (!n_->r) throw error("formula has no subformulas");
    return Formula(n_->r);
}

Formula Formula::dual() const {
    switch (n_->k) {
        case Kind::Atom: return neg_atom(n_->name);
        case Kind::NegAtom: return atom(n_->name);
        case Kind::Tensor: return par(left().dual(), right().dual());
        case Kind::Par: return tensor(left().dual(), right().dual());
    }
    throw error("bad formula");
}

bool Formula::operator==(const Formula& o) const {
    if (n_ == o.n_) return true;
    if (n_->k != o.n_->k) return false;
    switch (n_->k) {
        case Kind::Atom:
        case Kind::NegAtom: return n_->name == o.n_->name;
        default: return left() == o.left() && right() == o.right();
    }
}

std::string Formula::str() const {
    switch (n_->k) {
        case Kind::Atom: return n_->name;
        case Kind::NegAtom: return "~" + n_->name;
        case Kind::Tensor: return "(" + left().str() + "*" + right().str() + ")";
        case Kind::Par: return "(" + left().str() + "|" + right().str() + ")";
    }
    throw error("bad formula");
}

std::string sequent_str(const Sequent& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ", ";
        out += s[i].str();
    }
    return out;
}

// ---------- proofs ----------

namespace {
ProofPtr make(Proof p) { return std::make_shared<const Proof>(std::move(p)); }
}

ProofPtr Proof::mk_ax(Formula f) {
    Proof p;
    p.rule = Rule::Ax;
    p.ax_formula = f;
    p.conclusion = {f.dual(), f};
    return make(std::move(p));
}

ProofPtr Proof::mk_tensor(ProofPtr p, ProofPtr q) {
    if (!p || !q) throw error("tensor: missing premise");
    if (p->conclusion.empty() || q->conclusion.empty())
        throw error("tensor: premise with empty conclusion");
    Proof r;
    r.rule = Rule::Tensor;
    r.a = p;
    r.b = q;
    Sequent c(p->conclusion.begin(), p->conclusion.end() - 1);
    c.push_back(Formula::tensor(p->conclusion.back(), q->conclusion.front()));
    c.insert(c.end(), q->conclusion.begin() + 1, q->conclusion.end());
    r.conclusion = std::move(c);
    return make(std::move(r));
}

ProofPtr Proof::mk_par(ProofPtr p) {
    if (!p) throw error("par: missing premise");
    if (p->conclusion.size() < 2) throw error("par: premise needs two formulas");
    Proof r;
    r.rule = Rule::Par;
    r.a = p;
    Sequent c(p->conclusion.begin(), p->conclusion.end() - 2);
    c.push_back(Formula::par(p->conclusion[p->conclusion.size() - 2],
                             p->conclusion.back()));
    r.conclusion = std::move(c);
    return make(std::move(r));
}

ProofPtr Proof::mk_cut(ProofPtr p, ProofPtr q) {
    if (!p || !q) throw error("cut: missing premise");
    if (p->conclusion.empty() || q->conclusion.empty())
        throw error("cut: premise with empty conclusion");
    const Formula& A = p->conclusion.back();
    if (q->conclusion.front() != A.dual())
        throw error("cut: formulas are not dual: " + A.str() + " vs " +
                    q->conclusion.front().str());
    Proof r;
    r.rule = Rule::Cut;
    r.a = p;
    r.b = q;
    Sequent c(p->conclusion.begin(), p->conclusion.end() - 1);
    c.insert(c.end(), q->conclusion.begin() + 1, q->conclusion.end());
    r.conclusion = std::move(c);
    return make(std::move(r));
}

ProofPtr Proof::mk_xch(ProofPtr p, std::size_t i, std::size_t j) {
    if (!p) throw error("xch: missing premise");
    std::size_t n = p->conclusion.size();
    if (i >= n || j >= n) throw error("xch: index out of range");
    if (i == j) throw error("xch: indices must differ");
    Proof r;
    r.rule = Rule::Xch;
    r.a = p;
    r.i = i;
    r.j = j;
    r.conclusion = p->conclusion;
    std::swap(r.conclusion[i], r.conclusion[j]);
    return make(std::move(r));
}

std::string proof_str(const ProofPtr& p) {
    if (!p) throw error("null proof");
    switch (p->rule) {
        case Proof::Rule::Ax: return "ax(" + p->ax_formula.str() + ")";
        case Proof::Rule::Tensor:
            return "tensor(" + proof_str(p->a) + "," + proof_str(p->b) + ")";
        case Proof::Rule::Par: return "par(" + proof_str(p->a) + ")";
        case Proof::Rule::Cut:
            return "cut(" + proof_str(p->a) + "," + proof_str(p->b) + ")";
        case Proof::Rule::Xch:
            return "xch(" + proof_str(p->a) + "," + std::to_string(p->i) + "," +
                   std::to_string(p->j) + ")";
    }
    throw error("bad proof");
}

std::size_t proof_size(const ProofPtr& p) {
    if (!p) return 0;
    return 1 + proof_size(p->a) + proof_size(p->b);
}

std::size_t cut_count(const ProofPtr& p) {
    if (!p) return 0;
    return (p->rule == Proof::Rule::Cut ? 1 : 0) + cut_count(p->a) + cut_count(p->b);
}

bool cut_free(const ProofPtr& p) { return cut_count(p) == 0; }

// ---------- parsing ----------

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw parse_error(std::string("expected '") + c + "'", pos);
    }
    std::string ident() {
        skip();
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (start == pos) throw parse_error("expected identifier", pos);
        return s.substr(start, pos - start);
    }
    std::size_t integer() {
        skip();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw parse_error("expected integer", pos);
        return std::stoul(s.substr(start, pos - start));
    }
};

Formula parse_formula_at(Cursor& c) {
    c.skip();
    if (c.eat('~')) return Formula::neg_atom(c.ident());
    if (c.eat('(')) {
        Formula l = parse_formula_at(c);
        c.skip();
        char op;
        if (c.eat('*')) op = '*';
        else if (c.eat('|')) op = '|';
        else throw parse_error("expected '*' or '|'", c.pos);
        Formula r = parse_formula_at(c);
        c.expect(')');
        return op == '*' ? Formula::tensor(l, r) : Formula::par(l, r);
    }
    return Formula::atom(c.ident());
}

ProofPtr parse_proof_at(Cursor& c) {
    std::size_t at = c.pos;
    std::string kw = c.ident();
    c.expect('(');
    if (kw == "ax") {
        Formula f = parse_formula_at(c);
        c.expect(')');
        return Proof::mk_ax(f);
    }
    if (kw == "tensor" || kw == "cut") {
        ProofPtr p = parse_proof_at(c);
        c.expect(',');
        ProofPtr q = parse_proof_at(c);
        c.expect(')');
        return kw == "tensor" ? Proof::mk_tensor(p, q) : Proof::mk_cut(p, q);
    }
    if (kw == "par") {
        ProofPtr p = parse_proof_at(c);
        c.expect(')');
        return Proof::mk_par(p);
    }
    if (kw == "xch") {
        ProofPtr p = parse_proof_at(c);
        c.expect(',');
        std::size_t i = c.integer();
        c.expect(',');
        std::size_t j = c.integer();
        c.expect(')');
        return Proof::mk_xch(p, i, j);
    }
    throw parse_error("unknown rule '" + kw + "'", at);
}

void expect_end(Cursor& c) {
    c.skip();
    if (c.pos != c.s.size()) throw parse_error("trailing input", c.pos);
}

}  // namespace

Formula parse_formula(const std::string& text) {
    Cursor c{text};
    Formula f = parse_formula_at(c);
    expect_end(c);
    return f;
}

ProofPtr parse_proof(const std::string& text) {
    Cursor c{text};
    ProofPtr p = parse_proof_at(c);
    expect_end(c);
    return p;
}

// ---------- interpretation ----------

std::size_t AtomAssignment::size_of(const std::string& atom) const {
    auto it = sizes.find(atom);
    if (it == sizes.end()) throw error("no carrier size assigned to atom " + atom);
    return it->second;
}

namespace {

// Relative point names "path:k" of a formula occurrence.
void relative_points(const Formula& f, const AtomAssignment& asg,
                     const std::string& path, std::vector<std::string>& out) {
    switch (f.kind()) {
        case Formula::Kind::Atom:
        case Formula::Kind::NegAtom: {
            std::size_t n = asg.size_of(f.atom_name());
            for (std::size_t k = 0; k < n; ++k)
                out.push_back(path + ":" + std::to_string(k));
            return;
        }
        default:
            relative_points(f.left(), asg, path + "L", out);
            relative_points(f.right(), asg, path + "R", out);
    }
}

std::vector<std::string> relative_points(const Formula& f, const AtomAssignment& asg) {
    std::vector<std::string> out;
    relative_points(f, asg, "", out);
    return out;
}

std::string pos_label(std::size_t pos, const std::string& rel) {
    return std::to_string(pos) + ":" + rel;
}

}  // namespace

Carrier sequent_carrier(const Sequent& s, const AtomAssignment& asg) {
    std::vector<std::string> ls;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (const auto& rel : relative_points(s[i], asg))
            ls.push_back(pos_label(i, rel));
    return Carrier(std::move(ls));
}

namespace {

struct InterpCtx {
    const AtomAssignment& asg;
    std::size_t ax_counter = 0;

    Weight next_ax_weight() {
        Weight w = asg.axiom_weight;
        if (!asg.per_axiom.empty()) {
            if (ax_counter >= asg.per_axiom.size())
                throw error("not enough per-axiom weights");
            w = asg.per_axiom[ax_counter];
        }
        ++ax_counter;
        if (w.monoid() != asg.monoid)
            throw error("axiom weight monoid does not match the assignment monoid");
        return w;
    }
};

// Copies t's edges into r through source/target label maps.
void add_mapped(Triskell& r, const Triskell& t,
                const std::map<std::string, std::string>& ms,
                const std::map<std::string, std::string>& mt) {
    for (const auto& e : t.edges())
        r.add_edge(ms.at(t.src_label(e)), mt.at(t.tgt_label(e)), e.w);
}

void add_mapped(Triskell& r, const Triskell& t,
                const std::map<std::string, std::string>& m) {
    add_mapped(r, t, m, m);
}

using LabelMap = std::map<std::string, std::string>;

// Maps premise position `from` to conclusion position `to`, with an optional
// path prefix spliced in front of the relative path.
void map_position(LabelMap& m, const Formula& f, const AtomAssignment& asg,
                  std::size_t from, std::size_t to, const std::string& prefix = "") {
    for (const auto& rel : relative_points(f, asg))
        m[pos_label(from, rel)] = pos_label(to, prefix + rel);
}

Triskell interp_rec(const ProofPtr& p, InterpCtx& ctx) {
    const AtomAssignment& asg = ctx.asg;
    switch (p->rule) {
        case Proof::Rule::Ax: {
            Carrier car = sequent_carrier(p->conclusion, asg);
            Triskell t(car, car, asg.monoid);
            Weight w = ctx.next_ax_weight();
            for (const auto& rel : relative_points(p->ax_formula, asg)) {
                t.add_edge(pos_label(0, rel), pos_label(1, rel), w);
                t.add_edge(pos_label(1, rel), pos_label(0, rel), w);
            }
            return t;
        }
        case Proof::Rule::Tensor: {
            Triskell ta = interp_rec(p->a, ctx);
            Triskell tb = interp_rec(p->b, ctx);
            std::size_t ga = p->a->conclusion.size() - 1;  // tensor position
            LabelMap ma, mb;
            for (std::size_t k = 0; k < ga; ++k)
                map_position(ma, p->a->conclusion[k], asg, k, k);
            map_position(ma, p->a->conclusion.back(), asg, ga, ga, "L");
            map_position(mb, p->b->conclusion.front(), asg, 0, ga, "R");
            for (std::size_t k = 1; k < p->b->conclusion.size(); ++k)
                map_position(mb, p->b->conclusion[k], asg, k, ga + k);
            Carrier car = sequent_carrier(p->conclusion, asg);
            Triskell t(car, car, asg.monoid);
            add_mapped(t, ta, ma);
            add_mapped(t, tb, mb);
            return t;
        }
        case Proof::Rule::Par: {
            Triskell ta = interp_rec(p->a, ctx);
            std::size_t n = p->a->conclusion.size();
            LabelMap m;
            for (std::size_t k = 0; k + 2 < n; ++k)
                map_position(m, p->a->conclusion[k], asg, k, k);
            map_position(m, p->a->conclusion[n - 2], asg, n - 2, n - 2, "L");
            map_position(m, p->a->conclusion[n - 1], asg, n - 1, n - 2, "R");
            Carrier car = sequent_carrier(p->conclusion, asg);
            Triskell t(car, car, asg.monoid);
            add_mapped(t, ta, m);
            return t;
        }
        case Proof::Rule::Xch: {
            Triskell ta = interp_rec(p->a, ctx);
            LabelMap m;
            for (std::size_t k = 0; k < p->a->conclusion.size(); ++k) {
                std::size_t to = k == p->i ? p->j : k == p->j ? p->i : k;
                map_position(m, p->a->conclusion[k], asg, k, to);
            }
            Carrier car = sequent_carrier(p->conclusion, asg);
            Triskell t(car, car, asg.monoid);
            add_mapped(t, ta, m);
            return t;
        }
        case Proof::Rule::Cut: {
            Triskell ta = interp_rec(p->a, ctx);
            Triskell tb = interp_rec(p->b, ctx);
            std::size_t ga = p->a->conclusion.size() - 1;
            const Formula& cutf = p->a->conclusion.back();

            // Each cut point splits in two: "c0" receives the first premise
            // and feeds the second, "c1" the other way around. Traced paths
            // therefore alternate between the premises instead of bouncing
            // back into the one they came from.
            std::vector<std::string> cut_pts;
            for (const auto& rel : relative_points(cutf, asg)) {
                cut_pts.push_back("c0:" + rel);
                cut_pts.push_back("c1:" + rel);
            }

            LabelMap ma_src, ma_tgt, mb_src, mb_tgt;
            for (std::size_t k = 0; k < ga; ++k) {
                map_position(ma_src, p->a->conclusion[k], asg, k, k);
                map_position(ma_tgt, p->a->conclusion[k], asg, k, k);
            }
            for (const auto& rel : relative_points(cutf, asg)) {
                ma_tgt[pos_label(ga, rel)] = "c0:" + rel;
                ma_src[pos_label(ga, rel)] = "c1:" + rel;
                mb_src[pos_label(0, rel)] = "c0:" + rel;
                mb_tgt[pos_label(0, rel)] = "c1:" + rel;
            }
            for (std::size_t k = 1; k < p->b->conclusion.size(); ++k) {
                map_position(mb_src, p->b->conclusion[k], asg, k, ga + k - 1);
                map_position(mb_tgt, p->b->conclusion[k], asg, k, ga + k - 1);
            }

            std::vector<std::string> all = sequent_carrier(p->conclusion, asg).labels();
            all.insert(all.end(), cut_pts.begin(), cut_pts.end());
            Carrier car(all);
            Triskell t(car, car, asg.monoid);
            add_mapped(t, ta, ma_src, ma_tgt);
            add_mapped(t, tb, mb_src, mb_tgt);
            return exec_trace(t, cut_pts);
        }
    }
    throw error("bad proof");
}

}  // namespace

Triskell interp_ig(const ProofPtr& p, const AtomAssignment& asg) {
    if (!p) throw error("null proof");
    InterpCtx ctx{asg};
    return interp_rec(p, ctx);
}

Matrix interp_wr(const ProofPtr& p, const AtomAssignment& asg) {
    return contract(interp_ig(p, asg));
}

// ---------- cut elimination ----------

namespace {

// Realizes an occurrence-level permutation with a chain of exchanges: the
// occurrence currently at index src_at[k] ends up at index k. Working at the
// index level matters because sequents may contain equal formulas whose
// occurrences must not be confused.
ProofPtr apply_perm(ProofPtr p, std::vector<std::size_t> src_at) {
    if (p->conclusion.size() != src_at.size())
        throw error("permutation length mismatch");
    ProofPtr cur = std::move(p);
    for (std::size_t i = 0; i < src_at.size(); ++i) {
        std::size_t j = src_at[i];
        if (j == i) continue;
        cur = Proof::mk_xch(cur, i, j);
        for (std::size_t k = i + 1; k < src_at.size(); ++k)
            if (src_at[k] == i) src_at[k] = j;
    }
    return cur;
}

struct PermBuilder {
    std::vector<std::size_t> v;
    void range(std::size_t lo, std::size_t hi) {
        for (std::size_t k = lo; k < hi; ++k) v.push_back(k);
    }
    void one(std::size_t k) { v.push_back(k); }
};

// Cuts p's formula at position a against q's (dual) formula at position b on
// two cut-free proofs; returns a cut-free proof of (sigma \ a) ++ (tau \ b).
ProofPtr elim_at(ProofPtr p, std::size_t a, ProofPtr q, std::size_t b) {
    const Sequent& sig = p->conclusion;
    const Sequent& tau = q->conclusion;
    if (!(sig[a].dual() == tau[b]))
        throw error("elim: formulas at the cut positions are not dual");
    std::size_t s = sig.size() - 1;  // |sigma \ a|
    std::size_t u = tau.size() - 1;  // |tau \ b|

    // Rules on p's side that don't have the cut formula as their principal
    // formula are pushed below the cut.
    switch (p->rule) {
        case Proof::Rule::Ax: {
            // Cutting against an axiom link leaves q itself, with occurrence
            // b taking over the surviving axiom slot at the front.
            PermBuilder w;
            w.one(b);
            w.range(0, b);
            w.range(b + 1, tau.size());
            return apply_perm(q, w.v);
        }
        case Proof::Rule::Xch: {
            std::size_t i1 = p->i, j1 = p->j;
            auto x = [&](std::size_t v) { return v == i1 ? j1 : v == j1 ? i1 : v; };
            std::size_t a2 = x(a);
            ProofPtr r = elim_at(p->a, a2, q, b);
            PermBuilder w;
            for (std::size_t k = 0; k < s; ++k) {
                std::size_t v = x(k < a ? k : k + 1);
                w.one(v > a2 ? v - 1 : v);
            }
            w.range(s, s + u);
            return apply_perm(std::move(r), w.v);
        }
        case Proof::Rule::Tensor: {
            std::size_t tp = p->a->conclusion.size() - 1;
            if (a < tp) {
                // r1 |- (G1\a) ++ [A] ++ (tau\b); rotate A to the end before
                // reapplying the rule, then pull tau\b past [AxB] ++ D1.
                ProofPtr r1 = elim_at(p->a, a, q, b);
                std::size_t g = tp - 1;
                PermBuilder w;
                w.range(0, g);
                w.range(g + 1, g + 1 + u);
                w.one(g);
                ProofPtr t = Proof::mk_tensor(apply_perm(std::move(r1), w.v), p->b);
                std::size_t d = p->b->conclusion.size() - 1;
                PermBuilder f;
                f.range(0, g);
                f.one(g + u);
                f.range(g + u + 1, g + u + 1 + d);
                f.range(g, g + u);
                return apply_perm(std::move(t), f.v);
            }
            if (a > tp) {
                ProofPtr r2 = elim_at(p->b, a - tp, q, b);
                return Proof::mk_tensor(p->a, std::move(r2));
            }
            break;  // principal
        }
        case Proof::Rule::Par: {
            std::size_t pp = sig.size() - 1;
            if (a < pp) {
                // r |- (G\a) ++ [A, B] ++ (tau\b); rotate [A, B] to the end,
                // then pull tau\b past the new [A par B].
                ProofPtr r = elim_at(p->a, a, q, b);
                std::size_t g = pp - 1;
                PermBuilder w;
                w.range(0, g);
                w.range(g + 2, g + 2 + u);
                w.one(g);
                w.one(g + 1);
                ProofPtr t = Proof::mk_par(apply_perm(std::move(r), w.v));
                PermBuilder f;
                f.range(0, g);
                f.one(g + u);
                f.range(g, g + u);
                return apply_perm(std::move(t), f.v);
            }
            break;  // principal
        }
        case Proof::Rule::Cut:
            throw error("elim: premises must be cut-free");
    }

    // p is principal; push q's non-principal rules below the cut.
    switch (q->rule) {
        case Proof::Rule::Ax: {
            PermBuilder w;
            w.range(0, a);
            w.range(a + 1, sig.size());
            w.one(a);
            return apply_perm(p, w.v);
        }
        case Proof::Rule::Xch: {
            std::size_t i1 = q->i, j1 = q->j;
            auto y = [&](std::size_t v) { return v == i1 ? j1 : v == j1 ? i1 : v; };
            std::size_t b2 = y(b);
            ProofPtr r = elim_at(p, a, q->a, b2);
            PermBuilder w;
            w.range(0, s);
            for (std::size_t k = 0; k < u; ++k) {
                std::size_t v = y(k < b ? k : k + 1);
                w.one(s + (v > b2 ? v - 1 : v));
            }
            return apply_perm(std::move(r), w.v);
        }
        case Proof::Rule::Tensor: {
            std::size_t qp = q->a->conclusion.size() - 1;
            if (b < qp) {
                ProofPtr r = elim_at(p, a, q->a, b);
                return Proof::mk_tensor(std::move(r), q->b);
            }
            if (b > qp) {
                // r |- (sig\a) ++ [B] ++ (D2 \ ...); rotate sig\a to the end
                // before reapplying the rule, then back to the front.
                ProofPtr r = elim_at(p, a, q->b, b - qp);
                std::size_t e = q->b->conclusion.size() - 1;
                PermBuilder w;
                w.range(s, s + e);
                w.range(0, s);
                ProofPtr t = Proof::mk_tensor(q->a, apply_perm(std::move(r), w.v));
                PermBuilder f;
                f.range(qp + e, qp + e + s);
                f.range(0, qp + e);
                return apply_perm(std::move(t), f.v);
            }
            break;  // principal
        }
        case Proof::Rule::Par: {
            std::size_t pp = tau.size() - 1;
            if (b < pp) {
                ProofPtr r = elim_at(p, a, q->a, b);
                return Proof::mk_par(std::move(r));
            }
            break;  // principal
        }
        case Proof::Rule::Cut:
            throw error("elim: premises must be cut-free");
    }

    // Principal against principal: split into two cuts on the subformulas.
    // Both splits already produce the target order.
    if (p->rule == Proof::Rule::Tensor && q->rule == Proof::Rule::Par) {
        ProofPtr p1 = p->a, p2 = p->b, q1 = q->a;
        ProofPtr r1 = elim_at(p2, 0, q1, q1->conclusion.size() - 1);
        std::size_t last = r1->conclusion.size() - 1;
        return elim_at(p1, p1->conclusion.size() - 1, std::move(r1), last);
    }
    if (p->rule == Proof::Rule::Par && q->rule == Proof::Rule::Tensor) {
        ProofPtr p1 = p->a, q1 = q->a, q2 = q->b;
        std::size_t gamma = p1->conclusion.size() - 2;
        ProofPtr r1 = elim_at(p1, gamma, q1, q1->conclusion.size() - 1);
        return elim_at(std::move(r1), gamma, q2, 0);
    }
    throw error("elim: cut formula shapes do not match");
}

}  // namespace

ProofPtr normalize(const ProofPtr& p) {
    if (!p) throw error("null proof");
    switch (p->rule) {
        case Proof::Rule::Ax: return p;
        case Proof::Rule::Tensor:
            return Proof::mk_tensor(normalize(p->a), normalize(p->b));
        case Proof::Rule::Par: return Proof::mk_par(normalize(p->a));
        case Proof::Rule::Xch: return Proof::mk_xch(normalize(p->a), p->i, p->j);
        case Proof::Rule::Cut: {
            ProofPtr na = normalize(p->a);
            ProofPtr nb = normalize(p->b);
            return elim_at(na, na->conclusion.size() - 1, nb, 0);
        }
    }
    throw error("bad proof");
}

// ---------- mapping check ----------

MappingReport mapping_check(const ProofPtr& p, const ProofPtr& q,
                            const AtomAssignment& asg, std::size_t max_base) {
    Triskell tp = interp_ig(p, asg);
    Triskell tq = interp_ig(q, asg);
    if (tp.source().size() + tq.source().size() > max_base)
        throw error("mapping_check: combined carrier exceeds bound " +
                    std::to_string(max_base));

    MappingReport rep;
    auto square = [&](const Triskell& t, const char* name) {
        Matrix lhs = contract(fock_lift(t, max_base));
        Matrix rhs = fock_rel(contract(t), max_base);
        bool same = lhs.kind() == NumKind::Rational ? lhs == rhs
                                                    : Matrix::approx_equal(lhs, rhs, 1e-9);
        if (!same && rep.ok) {
            rep.ok = false;
            rep.detail = std::string("contraction square fails on ") + name;
        }
    };
    square(tp, "first proof");
    square(tq, "second proof");

    Triskell lhs = fock_lift(sum(tp, tq), max_base);
    auto bij = powerset_sum_to_product(tp.source(), tq.source());
    Triskell lhs_renamed = rename(lhs, bij, bij);
    Triskell rhs = tensor(fock_lift(tp, max_base), fock_lift(tq, max_base));
    if (rep.ok && !(zero_normalize(lhs_renamed) == zero_normalize(rhs))) {
        rep.ok = false;
        rep.detail = "Fock does not split across the direct sum";
    }
    return rep;
}

}  // namespace triskell
