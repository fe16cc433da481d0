#include "triskell/json_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "triskell/errors.hpp"

namespace triskell {

namespace {

double get_double(const Json& j, const char* key) {
    const Json& v = j.at(key);
    if (!v.is_number()) throw error(std::string("expected a number at \"") + key + "\"");
    return v.get<double>();
}

Rational rational_from_json(const Json& v) {
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_string()) {
        try {
            return Rational(v.get<std::string>());
        } catch (const std::exception&) {
            throw error("bad rational literal: " + v.get<std::string>());
        }
    }
    throw error("expected a rational as an integer or a \"num/den\" string");
}

Json rational_to_json(const Rational& q) { return q.str(); }

}  // namespace

Json weight_to_json(const Weight& w) {
    Json j;
    j["monoid"] = monoid_name(w.monoid());
    if (w.is_zero()) {
        j["zero"] = true;
        return j;
    }
    switch (w.monoid()) {
        case Monoid::Unit:
            break;
        case Monoid::SignedUnit:
            j["v"] = w.embed().rat() < 0 ? -1 : 1;
            break;
        case Monoid::NonnegReal:
        case Monoid::SignedReal:
            j["v"] = w.embed().real_value();
            break;
        case Monoid::Complex: {
            auto z = w.embed().complex_value();
            j["re"] = z.real();
            j["im"] = z.imag();
            break;
        }
        case Monoid::Rational:
            j["v"] = rational_to_json(w.embed().rat());
            break;
    }
    return j;
}

Weight weight_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("monoid"))
        throw error("weight: expected an object with a \"monoid\" field");
    Monoid m = monoid_from_name(j.at("monoid").get<std::string>());
    if (j.value("zero", false)) return Weight::zero(m);
    switch (m) {
        case Monoid::Unit:
            return Weight::one(m);
        case Monoid::SignedUnit: {
            std::int64_t v = j.at("v").get<std::int64_t>();
            if (v != 1 && v != -1) throw error("signed-unit weight must be 1 or -1");
            return Weight::sign_unit(static_cast<int>(v));
        }
        case Monoid::NonnegReal:
            return Weight::nonneg_real(get_double(j, "v"));
        case Monoid::SignedReal:
            return Weight::signed_real(get_double(j, "v"));
        case Monoid::Complex:
            return Weight::complex({get_double(j, "re"), get_double(j, "im")});
        case Monoid::Rational:
            return Weight::rational(rational_from_json(j.at("v")));
    }
    throw error("bad weight");
}

Json triskell_to_json(const Triskell& t) {
    Json j;
    j["monoid"] = monoid_name(t.monoid());
    j["source"] = t.source().labels();
    j["target"] = t.target().labels();
    CanonicalForm cf = canonical(t);
    Json edges = Json::array();
    for (std::size_t i = 0; i < cf.edges.size();) {
        std::size_t n = 1;
        while (i + n < cf.edges.size() && cf.edges[i + n] == cf.edges[i]) ++n;
        const auto& [s, tgt, w] = cf.edges[i];
        Json e;
        e["s"] = s;
        e["t"] = tgt;
        e["w"] = weight_to_json(w);
        if (n > 1) e["mult"] = n;
        edges.push_back(std::move(e));
        i += n;
    }
    j["edges"] = std::move(edges);
    return j;
}

Triskell triskell_from_json(const Json& j) {
    if (!j.is_object()) throw error("triskell: expected an object");
    Monoid m = monoid_from_name(j.at("monoid").get<std::string>());
    Carrier src(j.at("source").get<std::vector<std::string>>());
    Carrier tgt(j.at("target").get<std::vector<std::string>>());
    Triskell t(src, tgt, m);
    for (const Json& e : j.at("edges")) {
        Weight w = weight_from_json(e.at("w"));
        std::size_t mult = e.value("mult", std::size_t{1});
        if (mult == 0) throw error("triskell: edge with mult 0");
        t.add_edge(e.at("s").get<std::string>(), e.at("t").get<std::string>(), w, mult);
    }
    return t;
}

std::string num_kind_name(NumKind k) {
    switch (k) {
        case NumKind::Rational: return "rational";
        case NumKind::Real: return "real";
        case NumKind::Complex: return "complex";
    }
    throw error("bad numeric kind");
}

NumKind num_kind_from_name(const std::string& s) {
    if (s == "rational") return NumKind::Rational;
    if (s == "real") return NumKind::Real;
    if (s == "complex") return NumKind::Complex;
    throw error("unknown numeric kind: " + s);
}

namespace {

Json num_to_json(const Num& v) {
    switch (v.kind()) {
        case NumKind::Rational: return rational_to_json(v.rat());
        case NumKind::Real: return v.real_value();
        case NumKind::Complex: {
            Json j;
            j["re"] = v.complex_value().real();
            j["im"] = v.complex_value().imag();
            return j;
        }
    }
    throw error("bad number");
}

Num num_from_json(const Json& j, NumKind kind) {
    switch (kind) {
        case NumKind::Rational: return Num::rational(rational_from_json(j));
        case NumKind::Real:
            if (!j.is_number()) throw error("expected a real entry");
            return Num::real(j.get<double>());
        case NumKind::Complex:
            if (j.is_number()) return Num::complex({j.get<double>(), 0.0});
            return Num::complex({get_double(j, "re"), get_double(j, "im")});
    }
    throw error("bad numeric kind");
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
    Json j;
    j["kind"] = num_kind_name(m.kind());
    j["rows"] = m.rows().labels();
    j["cols"] = m.cols().labels();
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.n_rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.n_cols(); ++k) row.push_back(num_to_json(m.at(i, k)));
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_object()) throw error("matrix: expected an object");
    NumKind kind = num_kind_from_name(j.at("kind").get<std::string>());
    Carrier rows(j.at("rows").get<std::vector<std::string>>());
    Carrier cols(j.at("cols").get<std::vector<std::string>>());
    Matrix m(rows, cols, kind);
    const Json& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows.size())
        throw error("matrix: expected one entry row per row label");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Json& row = entries[i];
        if (!row.is_array() || row.size() != cols.size())
            throw error("matrix: row " + std::to_string(i) + " has the wrong width");
        for (std::size_t k = 0; k < cols.size(); ++k)
            m.set(i, k, num_from_json(row[k], kind));
    }
    return m;
}

Json qcs_to_json(const QcsSpace& s) {
    Json j;
    j["web"] = s.web().labels();
    Json spec;
    spec["measure"] = s.spec().m.name;
    spec["bot"] = s.spec().bot_name;
    j["spec"] = std::move(spec);
    Json gens = Json::array();
    for (const auto& g : s.generators()) gens.push_back(triskell_to_json(g));
    j["generators"] = std::move(gens);
    Json duals = Json::array();
    for (const auto& d : s.dual_generators()) duals.push_back(triskell_to_json(d));
    j["duals"] = std::move(duals);
    return j;
}

QcsSpace qcs_from_json(const Json& j) {
    if (!j.is_object()) throw error("space: expected an object");
    Carrier web(j.at("web").get<std::vector<std::string>>());
    OrthoSpec spec = OrthoSpec::open_unit();
    if (j.contains("spec")) {
        const Json& js = j.at("spec");
        spec = OrthoSpec::named(js.value("bot", std::string("open(0,1)")),
                                MeasureMap::by_name(js.value("measure", std::string("identity"))));
    }
    std::vector<Triskell> gens, duals;
    for (const Json& g : j.value("generators", Json::array())) gens.push_back(triskell_from_json(g));
    for (const Json& d : j.value("duals", Json::array())) duals.push_back(triskell_from_json(d));
    return QcsSpace(std::move(web), std::move(spec), std::move(gens), std::move(duals));
}

Json assignment_to_json(const AtomAssignment& a) {
    Json j;
    Json atoms = Json::object();
    for (const auto& [name, n] : a.sizes) atoms[name] = n;
    j["atoms"] = std::move(atoms);
    j["monoid"] = monoid_name(a.monoid);
    j["axiom_weight"] = weight_to_json(a.axiom_weight);
    if (!a.per_axiom.empty()) {
        Json pa = Json::array();
        for (const auto& w : a.per_axiom) pa.push_back(weight_to_json(w));
        j["per_axiom"] = std::move(pa);
    }
    return j;
}

AtomAssignment assignment_from_json(const Json& j) {
    if (!j.is_object()) throw error("assignment: expected an object");
    AtomAssignment a;
    for (const auto& [name, v] : j.at("atoms").items()) {
        if (!v.is_number_unsigned()) throw error("assignment: atom size must be a nonneg integer");
        a.sizes[name] = v.get<std::size_t>();
    }
    if (j.contains("monoid")) a.monoid = monoid_from_name(j.at("monoid").get<std::string>());
    if (j.contains("axiom_weight")) a.axiom_weight = weight_from_json(j.at("axiom_weight"));
    else if (a.monoid != Monoid::Rational) a.axiom_weight = Weight::one(a.monoid);
    for (const Json& w : j.value("per_axiom", Json::array()))
        a.per_axiom.push_back(weight_from_json(w));
    return a;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string triskell_to_dot(const Triskell& t) {
    std::ostringstream os;
    os << "digraph triskell {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (const auto& l : t.source().labels())
        os << "  \"s:" << dot_escape(l) << "\" [label=\"" << dot_escape(l) << "\"];\n";
    for (const auto& l : t.target().labels())
        os << "  \"t:" << dot_escape(l) << "\" [label=\"" << dot_escape(l)
           << "\",shape=doublecircle];\n";
    CanonicalForm cf = canonical(t);
    for (const auto& [s, tgt, w] : cf.edges)
        os << "  \"s:" << dot_escape(s) << "\" -> \"t:" << dot_escape(tgt)
           << "\" [label=\"" << dot_escape(w.str()) << "\"];\n";
    os << "}\n";
    return os.str();
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw parse_error(std::string("bad JSON in ") + path + ": " + e.what(), 0);
    }
    return j;
}

std::string load_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void save_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw error("failed writing " + path);
}

}  // namespace triskell
