#include "triskell/checks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <tuple>

#include "triskell/fock.hpp"
#include "triskell/gen.hpp"
#include "triskell/mll.hpp"
#include "triskell/qcs.hpp"

namespace triskell {

namespace {

Json fail_tri(const char* what, const Triskell& a, const Triskell& b) {
    return Json{{"what", what},
                {"lhs", triskell_to_json(a)},
                {"rhs", triskell_to_json(b)}};
}

Json fail_mat(const char* what, const Matrix& a, const Matrix& b) {
    return Json{{"what", what},
                {"lhs", matrix_to_json(a)},
                {"rhs", matrix_to_json(b)}};
}

Json fail_num(const char* what, const Num& a, const Num& b) {
    return Json{{"what", what}, {"lhs", a.str()}, {"rhs", b.str()}};
}

bool tris_equal(const Triskell& a, const Triskell& b) {
    return canonical(a) == canonical(b);
}

Triskell corrupt_tri(const Triskell& t) {
    if (t.source().empty() || t.target().empty()) return triskell_one(t.monoid());
    Triskell c = t;
    c.add_edge_idx(0, 0, Weight::one(t.monoid()));
    return c;
}

Matrix corrupt_mat(Matrix m) {
    m.set(0, 0, m.at(0, 0) + Num::rational(1));
    return m;
}

std::size_t cap(const SuiteConfig& cfg, std::size_t hard) {
    return std::max<std::size_t>(1, std::min(cfg.max_size, hard));
}

// ---- feedback (trace) axioms ----

std::optional<Json> trial_trace_axioms(Rng& r, const SuiteConfig& cfg, bool corrupt) {
    const Monoid m = Monoid::Rational;

    // tracing over nothing changes nothing
    {
        Carrier x = random_carrier(r, 1 + r.below(3), "x");
        Carrier y = random_carrier(r, 1 + r.below(3), "y");
        Triskell t = random_triskell(r, x, y, m, 6);
        Triskell tr = exec_trace(t, {});
        if (corrupt) tr = corrupt_tri(tr);
        if (!tris_equal(tr, t)) return fail_tri("trace over the empty set", tr, t);
    }

    // tracing over a union equals tracing in two stages
    {
        TracedInstance inst =
            random_traced(r, 1 + r.below(3), 2 + r.below(3), m, 8);
        std::vector<std::string> u, v;
        for (std::size_t i = 0; i < inst.hidden.size(); ++i)
            (i % 2 ? u : v).push_back(inst.hidden[i]);
        Triskell whole = exec_trace(inst.t, inst.hidden);
        Triskell staged = exec_trace(exec_trace(inst.t, v), u);
        if (!tris_equal(whole, staged))
            return fail_tri("staged tracing", whole, staged);
    }

    // tracing commutes with juxtaposition
    {
        Carrier w = random_carrier(r, 1 + r.below(2), "w");
        Carrier z = random_carrier(r, 1 + r.below(2), "z");
        Triskell g = random_triskell(r, w, z, m, 4);
        TracedInstance inst =
            random_traced(r, 1 + r.below(2), 1 + r.below(2), m, 6);
        std::vector<std::string> ru;
        for (const auto& h : inst.hidden) ru.push_back("R." + h);
        Triskell lhs = exec_trace(sum(g, inst.t), ru);
        Triskell rhs = sum(g, exec_trace(inst.t, inst.hidden));
        if (!tris_equal(lhs, rhs)) return fail_tri("juxtaposition", lhs, rhs);
    }

    // tracing half of a crossing yields the weight products on the diagonal
    {
        std::size_t n = 1 + r.below(3);
        std::vector<std::string> as, us;
        for (std::size_t i = 0; i < n; ++i) {
            as.push_back("a" + std::to_string(i));
            us.push_back("u" + std::to_string(i));
        }
        std::vector<std::string> all = as;
        all.insert(all.end(), us.begin(), us.end());
        Carrier c(all);
        Triskell s(c, c, m);
        Triskell expect(c, c, m);
        for (std::size_t i = 0; i < n; ++i) {
            Weight wi = random_weight(r, m);
            Weight vi = random_weight(r, m);
            s.add_edge(as[i], us[i], wi);
            s.add_edge(us[i], as[i], vi);
            expect.add_edge(as[i], as[i], w_mul(wi, vi));
        }
        Triskell traced = exec_trace(s, us);
        // the expected result lives on the smaller carrier
        Carrier ca(as);
        Triskell want(ca, ca, m);
        for (const auto& e : expect.edges())
            want.add_edge(expect.src_label(e), expect.tgt_label(e), e.w);
        if (!tris_equal(traced, want)) return fail_tri("crossing", traced, want);
    }

    // sliding a map around the feedback loop
    {
        Carrier x = random_carrier(r, 1 + r.below(2), "x");
        Carrier y = random_carrier(r, 1 + r.below(2), "y");
        std::vector<std::string> us, vs;
        std::size_t nu = 1 + r.below(2), nv = 1 + r.below(2);
        for (std::size_t i = 0; i < nu; ++i) us.push_back("u" + std::to_string(i));
        for (std::size_t i = 0; i < nv; ++i) vs.push_back("v" + std::to_string(i));
        auto join = [](const Carrier& a, const std::vector<std::string>& b) {
            std::vector<std::string> ls = a.labels();
            ls.insert(ls.end(), b.begin(), b.end());
            return Carrier(ls);
        };
        Carrier xu = join(x, us), yv = join(y, vs);
        Carrier yu = join(y, us), xv = join(x, vs);
        Triskell t = random_triskell(r, xu, yv, m, 7);
        Carrier cu((us)), cv((vs));
        Triskell g = random_triskell(r, cv, cu, m, 4);

        Triskell after(yv, yu, m);  // identity on y, g on the feedback wires
        for (const auto& l : y.labels()) after.add_edge(l, l, Weight::one(m));
        for (const auto& e : g.edges())
            after.add_edge(g.src_label(e), g.tgt_label(e), e.w);
        Triskell before(xv, xu, m);
        for (const auto& l : x.labels()) before.add_edge(l, l, Weight::one(m));
        for (const auto& e : g.edges())
            before.add_edge(g.src_label(e), g.tgt_label(e), e.w);

        std::optional<Triskell> lhs, rhs;
        try {
            lhs = exec_trace(compose(t, after), us);
        } catch (const cycle_error&) {}
        try {
            rhs = exec_trace(compose(before, t), vs);
        } catch (const cycle_error&) {}
        if (lhs.has_value() != rhs.has_value())
            return Json{{"what", "sliding: one side cycles"},
                        {"lhs_cycles", !lhs.has_value()},
                        {"rhs_cycles", !rhs.has_value()}};
        if (lhs && !tris_equal(*lhs, *rhs)) return fail_tri("sliding", *lhs, *rhs);
    }
    (void)cfg;
    return std::nullopt;
}

// ---- contraction is a strict monoidal functor ----

std::optional<Json> trial_contract_functor(Rng& r, const SuiteConfig& cfg, bool corrupt) {
    const Monoid m = Monoid::Rational;
    Carrier a = random_carrier(r, 1 + r.below(3), "a");
    Carrier b = random_carrier(r, 1 + r.below(3), "b");
    Carrier c = random_carrier(r, 1 + r.below(3), "c");
    Carrier d = random_carrier(r, 1 + r.below(3), "d");
    Triskell f = random_triskell(r, a, b, m, 6);
    Triskell g = random_triskell(r, b, c, m, 6);
    Triskell h = random_triskell(r, c, d, m, 6);
    Triskell f2 = random_triskell(r, a, b, m, 6);

    Matrix lhs = contract(compose(f, g));
    if (corrupt) lhs = corrupt_mat(lhs);
    Matrix rhs = mat_compose(contract(f), contract(g));
    if (!(lhs == rhs)) return fail_mat("composition", lhs, rhs);

    if (!(contract(tensor(f, h)) == mat_tensor(contract(f), contract(h))))
        return fail_mat("product", contract(tensor(f, h)),
                        mat_tensor(contract(f), contract(h)));
    if (!(contract(sum(f, h)) == mat_dsum(contract(f), contract(h))))
        return fail_mat("direct sum", contract(sum(f, h)),
                        mat_dsum(contract(f), contract(h)));
    if (!(contract(tri_union(f, f2)) == mat_add(contract(f), contract(f2))))
        return fail_mat("union", contract(tri_union(f, f2)),
                        mat_add(contract(f), contract(f2)));
    if (!(contract(identity(a, m)) == mat_identity(a, NumKind::Rational)))
        return fail_mat("identity", contract(identity(a, m)),
                        mat_identity(a, NumKind::Rational));
    (void)cfg;
    return std::nullopt;
}

// ---- the antisymmetric power on matrices ----

std::optional<Json> trial_minor_functor(Rng& r, const SuiteConfig& cfg, bool corrupt) {
    std::size_t n = cap(cfg, 3);
    Carrier a = random_carrier(r, 1 + r.below(n), "a");
    Carrier b = random_carrier(r, 1 + r.below(n), "b");
    Carrier c = random_carrier(r, 1 + r.below(n), "c");
    Carrier d = random_carrier(r, 1 + r.below(n), "d");
    Matrix m1 = random_matrix(r, a, b, NumKind::Rational);
    Matrix m2 = random_matrix(r, b, c, NumKind::Rational);
    Matrix m3 = random_matrix(r, c, d, NumKind::Rational);

    // all-minors composition (Cauchy-Binet across every cell)
    Matrix lhs = fock_rel(mat_compose(m1, m2));
    if (corrupt) lhs = corrupt_mat(lhs);
    Matrix rhs = mat_compose(fock_rel(m1), fock_rel(m2));
    if (!(lhs == rhs)) return fail_mat("composition of minors", lhs, rhs);

    // direct sums become products of the power spaces
    Matrix ds = fock_rel(mat_dsum(m1, m3));
    auto rmap = powerset_sum_to_product(a, c);
    auto cmap = powerset_sum_to_product(b, d);
    Matrix lhs2 = matrix_relabel(ds, rmap, cmap);
    Matrix rhs2 = mat_tensor(fock_rel(m1), fock_rel(m3));
    if (!(lhs2 == rhs2)) return fail_mat("direct sum of minors", lhs2, rhs2);
    return std::nullopt;
}

// ---- lifting to subsets commutes with contraction ----

std::optional<Json> trial_lift_square(Rng& r, const SuiteConfig& cfg, bool corrupt) {
    const Monoid m = Monoid::Rational;
    std::size_t n = cap(cfg, 3);
    Carrier a = random_carrier(r, 1 + r.below(n), "a");
    Carrier b = random_carrier(r, 1 + r.below(n), "b");
    Carrier c = random_carrier(r, 1 + r.below(n), "c");
    Triskell f = random_triskell(r, a, b, m, 6);
    Triskell g = random_triskell(r, b, c, m, 6);

    Matrix lhs = contract(fock_lift(f));
    if (corrupt) lhs = corrupt_mat(lhs);
    Matrix rhs = fock_rel(contract(f));
    if (!(lhs == rhs)) return fail_mat("contraction square", lhs, rhs);

    // composition holds after cancelling opposite parallel pairs
    Triskell comp = fock_lift(compose(f, g));
    Triskell split = compose(fock_lift(f), fock_lift(g));
    if (!(zero_normalize(comp) == zero_normalize(split)))
        return fail_tri("composition up to zero pairs", comp, split);
    return std::nullopt;
}

// ---- trace of the power space vs the shifted determinant ----

std::optional<Json> trial_det_identity(Rng& r, const SuiteConfig& cfg, bool corrupt) {
    {
        std::size_t n = 1 + r.below(cap(cfg, 8));
        Carrier c = random_carrier(r, n, "p");
        Matrix a = random_matrix(r, c, c, NumKind::Rational);
        Num lhs = mat_trace(fock_rel(a));
        if (corrupt) lhs = lhs + Num::rational(1);
        Num rhs = mat_det(mat_add(mat_identity(c, NumKind::Rational), a));
        if (!Num::approx_equal(lhs, rhs, 0.0))
            return fail_num("rational case", lhs, rhs);
    }
    {
        std::size_t n = 1 + r.below(cap(cfg, 8));
        Carrier c = random_carrier(r, n, "p");
        Matrix a = random_matrix(r, c, c, NumKind::Complex);
        Num lhs = mat_trace(fock_rel(a));
        Num rhs = mat_det(mat_add(mat_identity(c, NumKind::Complex), a));
        if (!Num::approx_equal(lhs, rhs, cfg.tol))
            return fail_num("complex case", lhs, rhs);
    }
    return std::nullopt;
}

// ---- measured determinant vs the trace of the lift ----

std::optional<Json> trial_det_lift(Rng& r, const SuiteConfig& cfg, bool corrupt) {
    const Monoid m = Monoid::Rational;
    std::size_t n = 1 + r.below(cap(cfg, 6));
    Carrier c = random_carrier(r, n, "p");
    Triskell t = random_triskell(r, c, c, m, 7);
    const MeasureMap mms[2] = {MeasureMap::identity(), MeasureMap::absolute()};
    for (const auto& mm : mms) {
        Num lhs = det_m(tri_union(identity(c, m), t), mm);
        if (corrupt) lhs = lhs + Num::rational(1);
        Num rhs = tr_m(fock_lift(t), mm);
        if (!Num::approx_equal(lhs, rhs, 0.0))
            return fail_num(mm.name == "abs" ? "absolute measure" : "identity measure",
                            lhs, rhs);
    }
    return std::nullopt;
}

// ---- measured trace calculus ----

std::optional<Json> trial_trace_calculus(Rng& r, const SuiteConfig& cfg, bool corrupt) {
    const Monoid m = Monoid::Rational;
    Carrier a = random_carrier(r, 1 + r.below(3), "a");
    Carrier b = random_carrier(r, 1 + r.below(3), "b");
    Triskell f = random_triskell(r, a, b, m, 6);
    Triskell g = random_triskell(r, b, a, m, 6);
    Triskell u1 = random_triskell(r, a, a, m, 6);
    Triskell u2 = random_triskell(r, a, a, m, 6);
    Weight w = random_weight(r, m);
    const MeasureMap mms[2] = {MeasureMap::identity(), MeasureMap::absolute()};
    for (const auto& mm : mms) {
        Num cyc1 = tr_m(compose(f, g), mm);
        if (corrupt) cyc1 = cyc1 + Num::rational(1);
        Num cyc2 = tr_m(compose(g, f), mm);
        if (!Num::approx_equal(cyc1, cyc2, 0.0)) return fail_num("cyclicity", cyc1, cyc2);

        Num add1 = tr_m(tri_union(u1, u2), mm);
        Num add2 = tr_m(u1, mm) + tr_m(u2, mm);
        if (!Num::approx_equal(add1, add2, 0.0)) return fail_num("additivity", add1, add2);

        Num sc1 = tr_m(scale(w, u1), mm);
        Num sc2 = measure(mm, w) * tr_m(u1, mm);
        if (!Num::approx_equal(sc1, sc2, 0.0)) return fail_num("scaling", sc1, sc2);
    }
    (void)cfg;
    return std::nullopt;
}

// ---- log-determinant vs the tail of traced powers ----

std::optional<Json> trial_measurement(Rng& r, const SuiteConfig& cfg, bool corrupt) {
    const Monoid m = Monoid::Rational;
    std::size_t n = 1 + r.below(cap(cfg, 3));
    Carrier c = random_carrier(r, n, "p");
    Triskell a = random_triskell(r, c, c, m, 5);
    Triskell b = random_triskell(r, c, c, m, 5);

    // keep the loop contractive so both sides are defined
    double s = op_norm(contract(compose(a, b)));
    std::int64_t k = 1;
    while (s / static_cast<double>(k) > 0.8) k *= 2;
    if (k > 1) a = scale(Weight::rational(1, k), a);

    MeasurementResult res = measurement(a, b, MeasureMap::identity(),
                                        SeriesCoefficients::harmonic(m), cfg.tol / 100.0);
    Num lhs = res.lhs;
    if (corrupt) lhs = lhs + Num::rational(1);
    if (!Num::approx_equal(lhs, res.mid, cfg.tol))
        return fail_num("log-determinant vs series", lhs, res.mid);
    return std::nullopt;
}

// ---- the symmetric power splits across juxtaposition ----

using EdgeTuple = std::tuple<std::string, std::string, Weight>;

bool edge_tuple_less(const EdgeTuple& a, const EdgeTuple& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
    return w_compare(std::get<2>(a), std::get<2>(b)) < 0;
}

bool edge_tuple_eq(const EdgeTuple& a, const EdgeTuple& b) {
    return std::get<0>(a) == std::get<0>(b) && std::get<1>(a) == std::get<1>(b) &&
           w_compare(std::get<2>(a), std::get<2>(b)) == 0;
}

std::optional<Json> trial_sym_monoidal(Rng& r, const SuiteConfig& cfg, bool corrupt) {
    const Monoid m = Monoid::Rational;
    Carrier a = random_carrier(r, 1 + r.below(2), "a");
    Carrier b = random_carrier(r, 1 + r.below(2), "b");
    Carrier c = random_carrier(r, 1 + r.below(2), "c");
    Carrier d = random_carrier(r, 1 + r.below(2), "d");
    Triskell t = random_triskell(r, a, b, m, 4);
    Triskell u = random_triskell(r, c, d, m, 4);
    std::size_t deg = 2 + r.below(2);

    Triskell lhs = fock_sym(sum(t, u), deg);
    if (corrupt) lhs = corrupt_tri(lhs);
    auto smap = multiset_sum_to_product(a, c, deg);
    auto tmap = multiset_sum_to_product(b, d, deg);

    std::vector<EdgeTuple> le;
    for (const auto& e : lhs.edges())
        le.emplace_back(smap.at(lhs.src_label(e)), tmap.at(lhs.tgt_label(e)), e.w);

    // the product side also holds cells of total degree above the bound;
    // restrict it to the common region
    std::set<std::string> simg, timg;
    for (const auto& kv : smap) simg.insert(kv.second);
    for (const auto& kv : tmap) timg.insert(kv.second);
    Triskell rhs = tensor(fock_sym(t, deg), fock_sym(u, deg));
    std::vector<EdgeTuple> re;
    for (const auto& e : rhs.edges()) {
        const std::string& sl = rhs.src_label(e);
        const std::string& tl = rhs.tgt_label(e);
        if (simg.count(sl) && timg.count(tl)) re.emplace_back(sl, tl, e.w);
    }
    std::sort(le.begin(), le.end(), edge_tuple_less);
    std::sort(re.begin(), re.end(), edge_tuple_less);
    bool same = le.size() == re.size() &&
                std::equal(le.begin(), le.end(), re.begin(), edge_tuple_eq);
    if (!same)
        return Json{{"what", "symmetric power across juxtaposition"},
                    {"lhs", triskell_to_json(lhs)},
                    {"rhs", triskell_to_json(rhs)}};
    (void)cfg;
    return std::nullopt;
}

// ---- symmetric-power entries vs the occupation-profile sum ----

namespace {

void all_multisets_upto(const std::vector<std::string>& base, std::size_t max_deg,
                        std::size_t start, std::vector<std::string>& cur,
                        std::vector<std::vector<std::string>>& out) {
    out.push_back(cur);
    if (cur.size() == max_deg) return;
    for (std::size_t i = start; i < base.size(); ++i) {
        cur.push_back(base[i]);
        all_multisets_upto(base, max_deg, i, cur, out);
        cur.pop_back();
    }
}

Rational factorial(std::size_t n) {
    Rational f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= static_cast<int>(i);
    return f;
}

}  // namespace

std::optional<Json> trial_profile_bridge(Rng& r, const SuiteConfig& cfg, bool corrupt) {
    const Monoid m = Monoid::Rational;
    const std::size_t deg = 3;
    std::size_t n = 1 + r.below(cap(cfg, 4));
    Carrier c = random_carrier(r, n, "p");
    Triskell t = random_triskell(r, c, c, m, 6);
    Matrix w = contract(fock_sym(t, deg));
    if (corrupt) w = corrupt_mat(w);
    Matrix rel = contract(t);

    std::vector<std::vector<std::string>> mss;
    std::vector<std::string> cur;
    all_multisets_upto(c.labels(), deg, 0, cur, mss);
    for (const auto& ms : mss) {
        std::map<std::string, std::size_t> counts;
        for (const auto& x : ms) ++counts[x];
        Num mult = Num::rational(1);
        for (const auto& [x, k] : counts) mult = mult * Num::rational(factorial(k));
        for (const auto& ps : mss) {
            Num want = mult * de_coefficient(rel, ms, ps);
            Num got = w.at(multiset_label(ms), multiset_label(ps));
            if (!Num::approx_equal(got, want, 0.0)) {
                return Json{{"what", "entry vs occupation profiles"},
                            {"row", multiset_label(ms)},
                            {"col", multiset_label(ps)},
                            {"lhs", got.str()},
                            {"rhs", want.str()}};
            }
        }
    }
    return std::nullopt;
}

// ---- proof semantics is invariant under cut elimination ----

AtomAssignment small_assignment(Rng& r, bool unit_sizes) {
    AtomAssignment asg;
    asg.sizes["X"] = unit_sizes ? 1 : 1 + r.below(3);
    asg.sizes["Y"] = unit_sizes ? 1 : 1 + r.below(3);
    asg.sizes["Z"] = unit_sizes ? 1 : 1 + r.below(3);
    asg.monoid = Monoid::Rational;
    asg.axiom_weight = Weight::rational(1);
    return asg;
}

std::optional<Json> partial_permutation_violation(const Triskell& t) {
    std::map<std::size_t, std::size_t> out_deg, in_deg;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> cell;
    for (const auto& e : t.edges()) {
        if (!e.w.is_one())
            return Json{{"what", "interpretation edge with non-unit weight"},
                        {"edge", t.src_label(e) + " -> " + t.tgt_label(e)},
                        {"weight", e.w.str()}};
        ++out_deg[e.src];
        ++in_deg[e.tgt];
        ++cell[{e.src, e.tgt}];
    }
    for (const auto& [p, d] : out_deg)
        if (d > 1)
            return Json{{"what", "point with two outgoing edges"},
                        {"point", t.source().label(p)}};
    for (const auto& [p, d] : in_deg)
        if (d > 1)
            return Json{{"what", "point with two incoming edges"},
                        {"point", t.target().label(p)}};
    for (const auto& [sp, cnt] : cell) {
        auto it = cell.find({sp.second, sp.first});
        if (it == cell.end() || it->second != cnt)
            return Json{{"what", "interpretation is not symmetric"},
                        {"edge", t.source().label(sp.first) + " -> " +
                                     t.target().label(sp.second)}};
    }
    return std::nullopt;
}

std::optional<Json> trial_proof_invariance(Rng& r, const SuiteConfig& cfg, bool corrupt) {
    AtomAssignment asg = small_assignment(r, false);
    std::vector<std::string> atoms = {"X", "Y", "Z"};
    ProofPtr p;
    for (std::size_t attempt = 0; attempt < 10; ++attempt) {
        p = random_proof(r, 6 + r.below(6), 1 + r.below(5), atoms);
        if (sequent_carrier(p->conclusion, asg).size() <= 30) break;
    }
    ProofPtr q = normalize(p);
    if (!(q->conclusion == p->conclusion))
        return Json{{"what", "normalization changed the conclusion"},
                    {"lhs", sequent_str(p->conclusion)},
                    {"rhs", sequent_str(q->conclusion)}};
    if (!cut_free(q))
        return Json{{"what", "normalization left a cut"}, {"proof", proof_str(q)}};

    Triskell ip = interp_ig(p, asg);
    if (corrupt) ip = corrupt_tri(ip);
    Triskell iq = interp_ig(q, asg);
    if (!tris_equal(ip, iq)) {
        Json j = fail_tri("interpretation changed under normalization", ip, iq);
        j["proof"] = proof_str(p);
        return j;
    }
    if (auto bad = partial_permutation_violation(iq)) {
        (*bad)["proof"] = proof_str(q);
        return bad;
    }
    (void)cfg;
    return std::nullopt;
}

// ---- proof semantics respects the power-space mapping ----

std::optional<Json> trial_proof_mapping(Rng& r, const SuiteConfig& cfg, bool corrupt) {
    AtomAssignment asg = small_assignment(r, true);
    std::vector<std::string> atoms = {"X", "Y"};
    auto draw = [&](std::size_t limit) {
        ProofPtr p;
        for (std::size_t attempt = 0; attempt < 20; ++attempt) {
            p = random_proof(r, 2 + r.below(3), 1 + r.below(2), atoms);
            if (sequent_carrier(p->conclusion, asg).size() <= limit) return p;
        }
        return Proof::mk_ax(Formula::atom("X"));
    };
    ProofPtr p = draw(4);
    ProofPtr q = draw(4);
    if (corrupt) {
        Triskell tp = interp_ig(p, asg);
        Matrix lhs = corrupt_mat(contract(fock_lift(tp)));
        Matrix rhs = fock_rel(contract(tp));
        if (!(lhs == rhs)) return fail_mat("contraction square", lhs, rhs);
        return std::nullopt;
    }
    MappingReport rep = mapping_check(p, q, asg, std::max<std::size_t>(cfg.max_size, 8));
    if (!rep.ok)
        return Json{{"what", rep.detail},
                    {"first", proof_str(p)},
                    {"second", proof_str(q)}};
    return std::nullopt;
}

using TrialFn = std::optional<Json> (*)(Rng&, const SuiteConfig&, bool);

struct SuiteDef {
    const char* name;
    const char* description;
    TrialFn fn;
};

const SuiteDef kSuites[] = {
    {"thm3.1", "feedback axioms: empty, staged, juxtaposed, crossing, sliding",
     trial_trace_axioms},
    {"thm3.6", "contraction is a strict monoidal functor onto matrices",
     trial_contract_functor},
    {"thm4.3", "all-minors power of a matrix respects composition and direct sums",
     trial_minor_functor},
    {"thm4.7", "subset lift: contraction square and composition up to zero pairs",
     trial_lift_square},
    {"thm5.1", "trace of the all-minors power equals det(1 + A)", trial_det_identity},
    {"thm5.2", "measured determinant of 1 u T equals the traced lift of T",
     trial_det_lift},
    {"prop6.8", "measured trace: cyclicity, additivity, scaling", trial_trace_calculus},
    {"prop6.9", "-log det(1 - ab) equals the series of traced powers",
     trial_measurement},
    {"prop6.12", "symmetric power splits across juxtaposition", trial_sym_monoidal},
    {"de-bridge", "symmetric-power entries match the occupation-profile sum",
     trial_profile_bridge},
    {"mll-invariance", "proof interpretation is invariant under cut elimination",
     trial_proof_invariance},
    {"mll-mapping", "proof interpretations satisfy the power-space mapping",
     trial_proof_mapping},
};

}  // namespace

Num de_coefficient(const Matrix& r, const std::vector<std::string>& m_points,
                   const std::vector<std::string>& p_points) {
    if (m_points.size() != p_points.size()) return Num::rational(0);
    std::vector<std::string> xs, ys;
    std::vector<std::size_t> rm, cm;
    auto margins = [](const std::vector<std::string>& pts, std::vector<std::string>& ls,
                      std::vector<std::size_t>& out) {
        std::map<std::string, std::size_t> counts;
        for (const auto& p : pts) ++counts[p];
        for (const auto& [l, k] : counts) {
            ls.push_back(l);
            out.push_back(k);
        }
    };
    margins(m_points, xs, rm);
    margins(p_points, ys, cm);

    Num total = Num::rational(0);
    std::vector<std::size_t> rem_col = cm;
    // fill rho row-major; each row must use up its margin exactly
    std::function<void(std::size_t, std::size_t, std::size_t, const Num&)> rec =
        [&](std::size_t row, std::size_t col, std::size_t row_left, const Num& acc) {
            if (row == xs.size()) {
                for (std::size_t j = 0; j < rem_col.size(); ++j)
                    if (rem_col[j] != 0) return;
                total = total + acc;
                return;
            }
            if (col == ys.size()) {
                if (row_left == 0) rec(row + 1, 0, row + 1 < xs.size() ? rm[row + 1] : 0, acc);
                return;
            }
            std::size_t hi = std::min(row_left, rem_col[col]);
            for (std::size_t v = 0; v <= hi; ++v) {
                Num next = acc;
                for (std::size_t i = 0; i < v; ++i) next = next * r.at(xs[row], ys[col]);
                next = next / Num::rational(factorial(v));
                rem_col[col] -= v;
                rec(row, col + 1, row_left - v, next);
                rem_col[col] += v;
            }
        };
    rec(0, 0, xs.empty() ? 0 : rm[0], Num::rational(1));

    Num scale = Num::rational(1);
    for (std::size_t j = 0; j < cm.size(); ++j)
        scale = scale * Num::rational(factorial(cm[j]));
    return total * scale;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& s : kSuites) v.push_back(s.name);
        return v;
    }();
    return names;
}

bool is_suite(const std::string& name) {
    for (const auto& s : kSuites)
        if (name == s.name) return true;
    return false;
}

std::string suite_description(const std::string& name) {
    for (const auto& s : kSuites)
        if (name == s.name) return s.description;
    throw error("unknown check suite: " + name);
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
    const SuiteDef* def = nullptr;
    for (const auto& s : kSuites)
        if (name == s.name) def = &s;
    if (!def) throw error("unknown check suite: " + name);

    SuiteReport rep;
    rep.name = name;
    rep.seed = cfg.seed;
    rep.trials = cfg.trials;
    rep.first_failure = nullptr;
    for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
        Rng r(mix_name(cfg.seed, name), trial);
        bool corrupt = cfg.corrupt && trial == 0;
        std::optional<Json> f;
        try {
            f = def->fn(r, cfg, corrupt);
        } catch (const std::exception& e) {
            f = Json{{"what", "exception"}, {"error", e.what()}};
        }
        if (f) {
            if (rep.failures == 0) {
                (*f)["trial"] = trial;
                rep.first_failure = *f;
            }
            ++rep.failures;
        }
    }
    return rep;
}

Json report_to_json(const SuiteReport& r) {
    Json j;
    j["suite"] = r.name;
    j["seed"] = r.seed;
    j["trials"] = r.trials;
    j["failures"] = r.failures;
    j["pass"] = r.ok();
    j["first_failure"] = r.first_failure;
    return j;
}

}  // namespace triskell
