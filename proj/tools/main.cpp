#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "triskell/checks.hpp"
#include "triskell/fock.hpp"
#include "triskell/json_io.hpp"
#include "triskell/mll.hpp"

namespace {

using namespace triskell;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    save_text_file(out_path, text);
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
    switch (f.kind()) {
        case Formula::Kind::Atom:
        case Formula::Kind::NegAtom:
            out.insert(f.atom_name());
            return;
        default:
            collect_atoms(f.left(), out);
            collect_atoms(f.right(), out);
    }
}

void collect_atoms(const ProofPtr& p, std::set<std::string>& out) {
    if (!p) return;
    if (p->rule == Proof::Rule::Ax) collect_atoms(p->ax_formula, out);
    collect_atoms(p->a, out);
    collect_atoms(p->b, out);
}

struct RunCheckArgs {
    std::vector<std::string> suites;
    std::uint64_t seed = 0;
    std::size_t trials = 200;
    double tol = 1e-9;
    std::size_t max_size = 8;
    std::string out;
    bool negative_control = false;
    bool list = false;
};

int do_run_check(const RunCheckArgs& a) {
    if (a.list) {
        for (const auto& n : suite_names())
            std::cout << n << "  " << suite_description(n) << "\n";
        return 0;
    }
    std::vector<std::string> names = a.suites;
    if (names.size() == 1 && names[0] == "all") names = suite_names();
    if (names.empty()) throw error("no check suite given (try --list)");

    SuiteConfig cfg;
    cfg.seed = a.seed;
    cfg.trials = a.trials;
    cfg.tol = a.tol;
    cfg.max_size = a.max_size;
    cfg.corrupt = a.negative_control;

    bool all_ok = true;
    Json reports = Json::array();
    for (const auto& n : names) {
        SuiteReport rep = run_suite(n, cfg);
        std::cerr << (rep.ok() ? "pass  " : "FAIL  ") << n << "  ("
                  << rep.failures << "/" << rep.trials << " failing trials)\n";
        all_ok = all_ok && rep.ok();
        reports.push_back(report_to_json(rep));
    }
    Json top;
    top["pass"] = all_ok;
    top["reports"] = std::move(reports);
    emit(dump_canonical(top), a.out);
    return all_ok ? 0 : 1;
}

struct ConvertArgs {
    std::string in, out;
    std::string to = "json";
    std::string type = "triskell";
};

int do_convert(const ConvertArgs& a) {
    Json j = load_json_file(a.in);
    if (a.to == "dot") {
        if (a.type != "triskell") throw error("dot output is only defined for triskells");
        emit(triskell_to_dot(triskell_from_json(j)), a.out);
        return 0;
    }
    Json round;
    if (a.type == "triskell") round = triskell_to_json(triskell_from_json(j));
    else if (a.type == "matrix") round = matrix_to_json(matrix_from_json(j));
    else if (a.type == "space") round = qcs_to_json(qcs_from_json(j));
    else if (a.type == "assignment") round = assignment_to_json(assignment_from_json(j));
    else throw error("unknown --type " + a.type);
    emit(dump_canonical(round), a.out);
    return 0;
}

struct EvalArgs {
    std::string op;
    std::string in, with, out;
    std::vector<std::string> points;
    std::size_t degree = 2;
    std::string measure = "identity";
    std::string proof, proof_file;
    std::string atoms_file;
    std::string model = "ig";
};

ProofPtr eval_proof(const EvalArgs& a) {
    std::string text = a.proof;
    if (!a.proof_file.empty()) text = load_text_file(a.proof_file);
    if (text.empty()) throw error("eval: no proof given (use --proof or --proof-file)");
    return parse_proof(text);
}

AtomAssignment eval_assignment(const EvalArgs& a, const ProofPtr& p) {
    if (!a.atoms_file.empty()) return assignment_from_json(load_json_file(a.atoms_file));
    std::set<std::string> names;
    collect_atoms(p, names);
    AtomAssignment asg;
    for (const auto& n : names) asg.sizes[n] = 1;
    return asg;
}

int do_eval(const EvalArgs& a) {
    const std::string& op = a.op;
    auto in_tri = [&] { return triskell_from_json(load_json_file(a.in)); };
    auto with_tri = [&] {
        if (a.with.empty()) throw error("eval " + op + " needs --with");
        return triskell_from_json(load_json_file(a.with));
    };

    if (op == "compose" || op == "tensor" || op == "sum" || op == "union") {
        Triskell f = in_tri(), g = with_tri();
        Triskell r = op == "compose" ? compose(f, g)
                   : op == "tensor"  ? tensor(f, g)
                   : op == "sum"     ? sum(f, g)
                                     : tri_union(f, g);
        emit(dump_canonical(triskell_to_json(r)), a.out);
        return 0;
    }
    if (op == "exec") {
        emit(dump_canonical(triskell_to_json(exec_trace(in_tri(), a.points))), a.out);
        return 0;
    }
    if (op == "contract") {
        emit(dump_canonical(matrix_to_json(contract(in_tri()))), a.out);
        return 0;
    }
    if (op == "fock") {
        Matrix m = matrix_from_json(load_json_file(a.in));
        emit(dump_canonical(matrix_to_json(fock_rel(m))), a.out);
        return 0;
    }
    if (op == "focklift") {
        emit(dump_canonical(triskell_to_json(fock_lift(in_tri()))), a.out);
        return 0;
    }
    if (op == "focksym") {
        emit(dump_canonical(triskell_to_json(fock_sym(in_tri(), a.degree))), a.out);
        return 0;
    }
    if (op == "detm" || op == "trm") {
        Triskell t = in_tri();
        MeasureMap mm = MeasureMap::by_name(a.measure);
        Num v = op == "detm" ? det_m(t, mm) : tr_m(t, mm);
        Json j;
        j["value"] = v.str();
        emit(dump_canonical(j), a.out);
        return 0;
    }
    if (op == "interpret") {
        ProofPtr p = eval_proof(a);
        AtomAssignment asg = eval_assignment(a, p);
        if (a.model == "ig")
            emit(dump_canonical(triskell_to_json(interp_ig(p, asg))), a.out);
        else if (a.model == "wr")
            emit(dump_canonical(matrix_to_json(interp_wr(p, asg))), a.out);
        else
            throw error("unknown --model " + a.model + " (expected ig or wr)");
        return 0;
    }
    if (op == "normalize") {
        ProofPtr p = eval_proof(a);
        Json j;
        j["proof"] = proof_str(normalize(p));
        emit(dump_canonical(j), a.out);
        return 0;
    }
    throw error("unknown eval operation: " + op);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted-span calculus: checks, conversions, evaluation"};
    app.require_subcommand(1);

    RunCheckArgs rc;
    CLI::App* run = app.add_subcommand("run-check", "run one or more named check suites");
    run->alias("run_check");
    run->add_option("suites", rc.suites, "suite names, or 'all'");
    run->add_option("--seed", rc.seed, "base seed for the deterministic trials");
    run->add_option("--trials", rc.trials, "trials per suite");
    run->add_option("--tol", rc.tol, "tolerance for the approximate comparisons");
    run->add_option("--max-size", rc.max_size, "cap on generated carrier sizes");
    run->add_option("--out", rc.out, "write the JSON report here instead of stdout");
    run->add_flag("--list", rc.list, "list the known suites and exit");
    run->add_flag("--negative-control", rc.negative_control)->group("");

    ConvertArgs cv;
    CLI::App* conv = app.add_subcommand("convert", "re-serialize an object canonically");
    conv->add_option("--in", cv.in, "input JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    conv->add_option("--out", cv.out, "output file (stdout when omitted)");
    conv->add_option("--to", cv.to, "output format: json or dot")
        ->check(CLI::IsMember({"json", "dot"}));
    conv->add_option("--type", cv.type, "object type in the input")
        ->check(CLI::IsMember({"triskell", "matrix", "space", "assignment"}));

    EvalArgs ev;
    CLI::App* eval = app.add_subcommand("eval", "apply one operation and print the result");
    eval->add_option("op", ev.op,
                     "compose|tensor|sum|union|exec|contract|fock|focklift|focksym|"
                     "detm|trm|interpret|normalize")
        ->required();
    eval->add_option("--in", ev.in, "first input file")->check(CLI::ExistingFile);
    eval->add_option("--with", ev.with, "second input file")->check(CLI::ExistingFile);
    eval->add_option("--out", ev.out, "output file (stdout when omitted)");
    eval->add_option("--points", ev.points, "labels to execute over")->delimiter(',');
    eval->add_option("--degree", ev.degree, "degree bound for focksym");
    eval->add_option("--measure", ev.measure, "measure for detm/trm: identity|abs|count");
    eval->add_option("--proof", ev.proof, "proof term text");
    eval->add_option("--proof-file", ev.proof_file, "file holding a proof term")
        ->check(CLI::ExistingFile);
    eval->add_option("--atoms", ev.atoms_file, "atom assignment JSON")
        ->check(CLI::ExistingFile);
    eval->add_option("--model", ev.model, "interpretation model: ig or wr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (run->parsed()) return do_run_check(rc);
        if (conv->parsed()) return do_convert(cv);
        if (eval->parsed()) return do_eval(ev);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
