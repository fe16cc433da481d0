#include "triskell/qcs.hpp"

#include <cmath>

namespace triskell {

bool OrthoSpec::bot(const Num& v) const {
    if (bot_name == "open(0,1)") {
        if (v.kind() == NumKind::Rational) {
            const Rational& q = v.rat();
            return q > 0 && q < 1;
        }
        double x = v.real_value();
        return x > 0.0 && x < 1.0;
    }
    if (bot_name == "abs-open(0,1)") {
        double x = v.abs();
        return x > 0.0 && x < 1.0;
    }
    if (bot_name == "in{0,1}")
        return v.is_zero() || v.is_one();
    throw error("unknown bot predicate: " + bot_name);
}

OrthoSpec OrthoSpec::open_unit() { return OrthoSpec{}; }

OrthoSpec OrthoSpec::named(const std::string& bot, MeasureMap m) {
    OrthoSpec s{std::move(m), bot};
    s.bot(Num::rational(1, 2));  // reject unknown names eagerly
    return s;
}

bool ortho(const Triskell& t, const Triskell& u, const OrthoSpec& spec) {
    if (!t.endo() || !u.endo() || t.source() != u.source())
        throw error("ortho: operands must be endos over one web");
    return spec.bot(tr_m(compose(t, u), spec.m));
}

QcsSpace::QcsSpace(Carrier web, OrthoSpec spec, std::vector<Triskell> generators,
                   std::vector<Triskell> dual_generators)
    : web_(std::move(web)), spec_(std::move(spec)), monoid_(Monoid::Rational),
      gens_(std::move(generators)), duals_(std::move(dual_generators)) {
    auto check = [&](const Triskell& t, const char* what) {
        if (!t.endo() || t.source() != web_)
            throw error(std::string("qcs: ") + what + " is not an endo over the web");
    };
    if (!gens_.empty()) monoid_ = gens_.front().monoid();
    else if (!duals_.empty()) monoid_ = duals_.front().monoid();
    for (const auto& g : gens_) {
        check(g, "generator");
        if (g.monoid() != monoid_) throw error("qcs: generator monoid mismatch");
    }
    for (const auto& d : duals_) {
        check(d, "dual generator");
        if (d.monoid() != monoid_) throw error("qcs: dual generator monoid mismatch");
    }
    for (std::size_t i = 0; i < gens_.size(); ++i)
        for (std::size_t j = 0; j < duals_.size(); ++j)
            if (!ortho(gens_[i], duals_[j], spec_))
                throw error("qcs: generator " + std::to_string(i) +
                            " is not orthogonal to dual generator " + std::to_string(j) +
                            " (trace " + tr_m(compose(gens_[i], duals_[j]), spec_.m).str() + ")");
}

QcsSpace QcsSpace::dual() const { return QcsSpace(web_, spec_, duals_, gens_); }

PolarResult polar_check(const Triskell& cand, const QcsSpace& space, bool side_duals) {
    const auto& fam = side_duals ? space.dual_generators() : space.generators();
    for (std::size_t i = 0; i < fam.size(); ++i) {
        Num v = tr_m(compose(cand, fam[i]), space.spec().m);
        if (!space.spec().bot(v)) {
            PolarResult r;
            r.ok = false;
            r.witness = std::string(side_duals ? "dual generator " : "generator ") +
                        std::to_string(i) + " measured trace " + v.str();
            return r;
        }
    }
    return PolarResult{};
}

Triskell apply_arrow(const Triskell& f, const Triskell& a) {
    if (!f.endo()) throw error("apply_arrow: arrow must be an endo");
    if (!a.endo()) throw error("apply_arrow: argument must be an endo");
    if (f.monoid() != a.monoid()) throw error("apply_arrow: monoid mismatch");

    // Decompose the product web into (x, y) components.
    std::vector<std::pair<std::size_t, std::string>> parts(f.source().size());
    std::vector<std::string> ys;
    for (std::size_t i = 0; i < f.source().size(); ++i) {
        auto [x, y] = split_pair_label(f.source().label(i));
        if (!a.source().contains(x))
            throw error("apply_arrow: web component " + x + " missing from argument web");
        parts[i] = {a.source().index_of(x), y};
        ys.push_back(y);
    }
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    Carrier ycar(ys);

    Triskell r(ycar, ycar, f.monoid());
    for (const auto& ef : f.edges()) {
        auto [x0, y0] = parts[ef.src];
        auto [x1, y1] = parts[ef.tgt];
        for (const auto& ea : a.edges())
            if (ea.src == x0 && ea.tgt == x1)
                r.add_edge(y0, y1, w_mul(ef.w, ea.w));
    }
    return r;
}

QcsSpace qcs_tensor(const QcsSpace& a, const QcsSpace& b,
                    std::vector<Triskell> dual_generators) {
    if (a.spec().m.name != b.spec().m.name || a.spec().bot_name != b.spec().bot_name)
        throw error("qcs_tensor: orthogonality specs differ");
    std::vector<Triskell> gens;
    for (const auto& ga : a.generators())
        for (const auto& gb : b.generators()) gens.push_back(tensor(ga, gb));
    return QcsSpace(Carrier::product(a.web(), b.web()), a.spec(), std::move(gens),
                    std::move(dual_generators));
}

bool arrow_member(const Triskell& f, const QcsSpace& a, const QcsSpace& b,
                  std::string* witness) {
    for (std::size_t i = 0; i < a.generators().size(); ++i) {
        Triskell img = apply_arrow(f, a.generators()[i]);
        if (img.source() != b.web()) {
            if (witness) *witness = "applied image lives on the wrong web";
            return false;
        }
        PolarResult pr = polar_check(img, b, true);
        if (!pr) {
            if (witness)
                *witness = "generator " + std::to_string(i) + ": " + pr.witness;
            return false;
        }
    }
    return true;
}

QcsSpace qcs_with(const QcsSpace& a, const QcsSpace& b) {
    if (a.spec().m.name != b.spec().m.name || a.spec().bot_name != b.spec().bot_name)
        throw error("qcs_with: orthogonality specs differ");
    if (a.monoid() != b.monoid()) throw error("qcs_with: monoid mismatch");
    Triskell empty_a(a.web(), a.web(), a.monoid());
    Triskell empty_b(b.web(), b.web(), b.monoid());
    std::vector<Triskell> gens, duals;
    for (const auto& ga : a.generators())
        for (const auto& gb : b.generators()) gens.push_back(sum(ga, gb));
    // One-sided duals stay orthogonal: the composite trace reduces to the
    // trace on that side.
    for (const auto& da : a.dual_generators()) duals.push_back(sum(da, empty_b));
    for (const auto& db : b.dual_generators()) duals.push_back(sum(empty_a, db));
    return QcsSpace(Carrier::disjoint_union(a.web(), b.web()), a.spec(), std::move(gens),
                    std::move(duals));
}

QcsSpace qcs_plus(const QcsSpace& a, const QcsSpace& b) {
    return qcs_with(a.dual(), b.dual()).dual();
}

QcsSpace qcs_bang(const QcsSpace& a, std::size_t degree,
                  std::vector<Triskell> dual_generators) {
    std::vector<Triskell> gens;
    for (const auto& g : a.generators()) gens.push_back(fock_sym(g, degree));
    return QcsSpace(multiset_carrier(a.web(), degree), a.spec(), std::move(gens),
                    std::move(dual_generators));
}

const Weight& SeriesCoefficients::at(std::size_t k) const {
    if (k == 0 || k > values.size())
        throw error("series coefficient index out of range: " + std::to_string(k));
    return values[k - 1];
}

void SeriesCoefficients::validate(const MeasureMap& m) const {
    for (std::size_t k = 1; k <= values.size(); ++k) {
        Num v = m.apply(values[k - 1]);
        Num want = Num::rational(1, static_cast<std::int64_t>(k));
        if (!Num::approx_equal(v, want, 1e-12))
            throw error("series coefficient " + std::to_string(k) +
                        " does not measure to 1/k");
    }
}

SeriesCoefficients SeriesCoefficients::harmonic(Monoid m, std::size_t max_k) {
    SeriesCoefficients c;
    c.monoid = m;
    c.values.reserve(max_k);
    for (std::size_t k = 1; k <= max_k; ++k) {
        switch (m) {
            case Monoid::Rational:
                c.values.push_back(Weight::rational(1, static_cast<std::int64_t>(k)));
                break;
            case Monoid::NonnegReal:
                c.values.push_back(Weight::nonneg_real(1.0 / double(k)));
                break;
            case Monoid::SignedReal:
                c.values.push_back(Weight::signed_real(1.0 / double(k)));
                break;
            case Monoid::Complex:
                c.values.push_back(Weight::complex({1.0 / double(k), 0.0}));
                break;
            default:
                throw error("harmonic coefficients need a numeric monoid");
        }
    }
    return c;
}

namespace {
// Matrix of measured cell sums; with a multiplicative measure, powers of
// this matrix carry the measured traces of triskell powers.
Matrix measured_contract(const Triskell& t, const MeasureMap& m) {
    NumKind k = m.apply(Weight::one(signed_extension(t.monoid()))).kind();
    Matrix r(t.source(), t.target(), k);
    for (const auto& e : t.edges())
        r.set(e.src, e.tgt, r.at(e.src, e.tgt) + m.apply(e.w));
    return r;
}

Triskell promote_triskell(const Triskell& t, Monoid sm) {
    Triskell r(t.source(), t.target(), sm);
    for (const auto& e : t.edges()) r.add_edge_idx(e.src, e.tgt, e.w.promoted(sm));
    return r;
}
}  // namespace

MeasurementResult measurement(const Triskell& a, const Triskell& b, const MeasureMap& m,
                              const SeriesCoefficients& coeffs, double tol) {
    if (!m.multiplicative || !m.preserves_minus_one)
        throw error("measurement: measure must be multiplicative with m(-1) = -1");
    Triskell t = compose(a, b);
    Monoid sm = signed_extension(t.monoid());
    Triskell ts = promote_triskell(t, sm);

    Triskell one_minus = tri_union(identity(t.source(), sm),
                                   scale(w_neg(Weight::one(sm)), ts));
    MeasurementResult res;
    res.det_value = det_m(one_minus, m);
    double dv = res.det_value.real_value();
    if (dv <= 0.0)
        throw error("measurement: determinant " + res.det_value.str() +
                    " is outside the domain of log");
    res.lhs = Num::real(-std::log(dv));

    Matrix n = measured_contract(t, m);
    Matrix p = mat_identity(n.rows(), n.kind());
    bool done = false;
    auto term = [&](std::size_t k0) -> std::optional<Num> {
        if (done) return std::nullopt;
        std::size_t k = k0 + 1;
        if (k > coeffs.max_index())
            throw divergence_error("measurement: series exceeded " +
                                   std::to_string(coeffs.max_index()) + " coefficients");
        p = mat_compose(p, n);
        bool zero = true;
        for (std::size_t i = 0; i < p.n_rows() && zero; ++i)
            for (std::size_t j = 0; j < p.n_cols() && zero; ++j)
                if (!p.at(i, j).is_zero()) zero = false;
        if (zero) done = true;  // nilpotent: the next call ends the stream
        return m.apply(coeffs.at(k)) * mat_trace(p);
    };
    SeriesResult s = sum_series(term, tol, coeffs.max_index() + 1);
    res.mid = s.value;
    res.terms = s.terms;
    return res;
}

BoundedReport bounded_check(const QcsSpace& a, std::vector<Weight> probe) {
    if (probe.empty()) {
        Monoid m = a.monoid();
        if (m == Monoid::Unit || m == Monoid::SignedUnit) {
            probe.push_back(Weight::one(m));
        } else {
            for (int i = 0; i <= 10; ++i) {
                std::int64_t den = std::int64_t(1) << i;
                switch (m) {
                    case Monoid::Rational: probe.push_back(Weight::rational(1, den)); break;
                    case Monoid::NonnegReal: probe.push_back(Weight::nonneg_real(1.0 / double(den))); break;
                    case Monoid::SignedReal: probe.push_back(Weight::signed_real(1.0 / double(den))); break;
                    case Monoid::Complex: probe.push_back(Weight::complex({1.0 / double(den), 0.0})); break;
                    default: throw error("bounded_check: unsupported monoid");
                }
            }
        }
    }
    for (const auto& x : a.web().labels()) {
        bool found = false;
        for (const auto& lam : probe) {
            Triskell pid = partial_identity(a.web(), {x}, lam);
            if (polar_check(pid, a, true) && polar_check(pid, a, false)) {
                found = true;
                break;
            }
        }
        if (!found) {
            BoundedReport r;
            r.ok = false;
            r.witness = x;
            return r;
        }
    }
    return BoundedReport{};
}

}  // namespace triskell
