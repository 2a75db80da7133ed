// tropid: exact tropical (max-plus) algebra toolkit.
//
// Subcommands: check (identity verification over matrix monoids), matrix
// (permanent/adjoint/nabla/ginv/...), poly (essential part, e-equivalence),
// bicyclic (normal forms, star, representation). Arguments prefixed with
// '@' are read from files. Exit codes: 0 holds / no counterexample /
// result printed, 1 fails with witness, 2 usage, parse, or unsupported.

#include <tropid/engine.hpp>
#include <tropid/io.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using nlohmann::ordered_json;
using namespace tropid;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_arg(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return arg;
    std::ifstream in(arg.substr(1), std::ios::binary);
    if (!in) throw UsageError("cannot open file: " + arg.substr(1));
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

MonoidSpec parse_monoid(const std::string& name) {
    if (name == "M2") return {MonoidSpec::Kind::M2, 2};
    if (name == "U2") return {MonoidSpec::Kind::U2, 2};
    if (name == "L2") return {MonoidSpec::Kind::L2, 2};
    if (name == "N2") return {MonoidSpec::Kind::N2, 2};
    if (name == "B") return {MonoidSpec::Kind::B, 2};
    if (name.size() >= 2 && (name[0] == 'W' || name[0] == 'D')) {
        long n = std::strtol(name.c_str() + 1, nullptr, 10);
        if (n >= 2 && n <= 8)
            return {name[0] == 'W' ? MonoidSpec::Kind::Wn : MonoidSpec::Kind::Dn,
                    static_cast<std::size_t>(n)};
    }
    throw UsageError("unknown monoid '" + name + "' (expected M2, U2, L2, N2, B, W2..W8, D2..D8)");
}

ordered_json steps_json(const std::vector<ProofStep>& steps) {
    ordered_json arr = ordered_json::array();
    for (const auto& s : steps)
        arr.push_back({{"label", s.label},
                       {"method", s.method},
                       {"ok", s.ok},
                       {"detail", s.detail}});
    return arr;
}

ordered_json assignment_json(const ScalarAssignment& assignment) {
    ordered_json obj = ordered_json::object();
    for (const auto& [letter, mat] : assignment) obj[std::string(1, letter)] = print_matrix(mat);
    return obj;
}

void emit(const ordered_json& report, bool json, const std::string& human) {
    if (json) {
        ordered_json full = report;
        std::cout << full.dump(2) << "\n";
    } else {
        std::cout << human;
    }
}

long long elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

int cmd_check(const std::string& identity_text, const std::string& monoid_name,
              const std::string& mode, std::uint64_t trials, std::uint64_t seed, bool json) {
    auto t0 = std::chrono::steady_clock::now();
    Identity id = parse_identity(read_arg(identity_text));
    MonoidSpec monoid = parse_monoid(monoid_name);

    ordered_json report;
    report["schema"] = "tropid/1";
    report["command"] = "check";
    report["inputs"] = {{"identity", print_identity(id)},
                        {"monoid", monoid.name()},
                        {"mode", mode},
                        {"trials", trials},
                        {"seed", seed}};

    bool run_symbolic = (mode == "symbolic" || mode == "both");
    bool run_random = (mode == "random" || mode == "both");

    std::optional<SymbolicCheck> sym;
    if (run_symbolic) {
        bool supported = monoid.kind == MonoidSpec::Kind::U2 ||
                         monoid.kind == MonoidSpec::Kind::L2 ||
                         monoid.kind == MonoidSpec::Kind::M2 ||
                         monoid.kind == MonoidSpec::Kind::B;
        if (!supported) {
            std::cerr << "symbolic mode supports monoids U2, L2, M2, and B; got "
                      << monoid.name() << "\n";
            return 2;
        }
        sym = check_identity_monoid_symbolic(id, monoid);
    }

    std::optional<Falsification> fals;
    std::optional<BicyclicFalsification> bfals;
    if (run_random) {
        if (monoid.kind == MonoidSpec::Kind::B)
            bfals = falsify_random_bicyclic(id, trials, seed);
        else
            fals = falsify_random(id, monoid, trials, seed);
    }

    bool symbolic_fails = sym && sym->verdict == SymbolicVerdict::Fails;
    bool random_fails = fals.has_value() || bfals.has_value();
    bool fails = symbolic_fails || random_fails;
    bool holds = sym && sym->verdict == SymbolicVerdict::Holds;

    std::string verdict;
    if (fails) verdict = "Fails";
    else if (holds) verdict = "Holds";
    else if (run_random) verdict = "NoCounterexample";
    else verdict = "Unknown";

    report["verdict"] = verdict;
    if (sym) {
        report["steps"] = steps_json(sym->steps);
        if (!sym->reason.empty()) report["reason"] = sym->reason;
    }

    std::ostringstream human;
    human << "identity: " << print_identity(id) << "\n";
    human << "monoid:   " << monoid.name() << "\n";
    if (sym) {
        for (const auto& s : sym->steps)
            human << "  [" << (s.ok ? "ok" : "fail") << "] " << s.label << " (" << s.method
                  << "): " << s.detail << "\n";
        if (!sym->reason.empty()) human << "  note: " << sym->reason << "\n";
    }

    ordered_json witness;
    if (symbolic_fails && sym->witness) {
        witness = assignment_json(*sym->witness);
        human << "witness (symbolic):\n";
        for (const auto& [letter, mat] : *sym->witness)
            human << "  " << letter << " = " << print_matrix(mat) << "\n";
    } else if (symbolic_fails && sym->bicyclic_witness) {
        witness = ordered_json::object();
        for (const auto& [letter, el] : *sym->bicyclic_witness)
            witness[std::string(1, letter)] = print_bicyclic(el);
        human << "witness (bicyclic):\n";
        for (const auto& [letter, el] : *sym->bicyclic_witness)
            human << "  " << letter << " = " << print_bicyclic(el) << "\n";
    } else if (fals) {
        witness = assignment_json(fals->assignment);
        report["trial"] = fals->trial;
        human << "witness (random, trial " << fals->trial << "):\n";
        for (const auto& [letter, mat] : fals->assignment)
            human << "  " << letter << " = " << print_matrix(mat) << "\n";
        human << "  lhs = " << print_matrix(fals->lhs_value) << "\n";
        human << "  rhs = " << print_matrix(fals->rhs_value) << "\n";
    } else if (bfals) {
        witness = ordered_json::object();
        for (const auto& [letter, el] : bfals->assignment)
            witness[std::string(1, letter)] = print_bicyclic(el);
        report["trial"] = bfals->trial;
        human << "witness (bicyclic, trial " << bfals->trial << "):\n";
        for (const auto& [letter, el] : bfals->assignment)
            human << "  " << letter << " = " << print_bicyclic(el) << "\n";
        human << "  lhs = " << print_bicyclic(bfals->lhs_value) << "\n";
        human << "  rhs = " << print_bicyclic(bfals->rhs_value) << "\n";
    }
    if (!witness.is_null()) report["witness"] = witness;

    human << "verdict: " << verdict << "\n";
    report["elapsed_ms"] = elapsed_ms(t0);
    emit(report, json, human.str());

    if (fails) return 1;
    if (verdict == "Unknown") {
        std::cerr << "symbolic pipeline could not settle the identity"
                  << (sym && !sym->reason.empty() ? ": " + sym->reason : "") << "\n";
        return 2;
    }
    return 0;
}

int cmd_matrix(const std::string& op, std::vector<std::string> args, long k, bool json) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<ScalarMatrix> mats;
    for (auto& a : args) mats.push_back(parse_matrix(read_arg(a)));
    if (mats.empty()) throw UsageError("matrix: at least one matrix argument required");
    const ScalarMatrix& a = mats[0];

    ordered_json report;
    report["schema"] = "tropid/1";
    report["command"] = "matrix";
    report["op"] = op;
    ordered_json inputs = ordered_json::array();
    for (const auto& m : mats) inputs.push_back(print_matrix(m));
    report["inputs"] = inputs;

    std::string human;
    if (op == "perm") {
        TropScalar p = permanent(a);
        report["result"] = print_scalar(p);
        human = print_scalar(p) + "\n";
    } else if (op == "adjoint") {
        report["result"] = print_matrix(adjoint(a));
        human = print_matrix(adjoint(a)) + "\n";
    } else if (op == "nabla") {
        if (permanent(a).is_neg_infinity()) {
            std::cerr << "nabla: permanent is -inf; use --op ginv for the patterned inverse\n";
            return 2;
        }
        report["result"] = print_matrix(nabla(a));
        human = print_matrix(nabla(a)) + "\n";
    } else if (op == "ginv") {
        report["result"] = print_matrix(generalized_inverse(a));
        human = print_matrix(generalized_inverse(a)) + "\n";
    } else if (op == "mtrace") {
        report["result"] = print_scalar(mtrace(a));
        human = print_scalar(mtrace(a)) + "\n";
    } else if (op == "singular") {
        PermanentResult pr = permanent_with_count(a);
        bool sing = is_singular(a);
        report["result"] = sing ? "singular" : "nonsingular";
        report["attaining"] = pr.attaining;
        human = std::string(sing ? "singular" : "nonsingular") + " (" +
                std::to_string(pr.attaining) + " attaining permutations)\n";
    } else if (op == "rank") {
        bool full = has_full_rank(a);
        report["result"] = full ? "full" : "deficient";
        human = std::string(full ? "full" : "deficient") + "\n";
    } else if (op == "pow") {
        if (k < 0) throw UsageError("pow: --k must be a nonnegative integer");
        ScalarMatrix r = mpow(a, static_cast<unsigned long>(k));
        report["result"] = print_matrix(r);
        human = print_matrix(r) + "\n";
    } else if (op == "mul") {
        if (mats.size() < 2) throw UsageError("mul: two matrix arguments required");
        ScalarMatrix r = mats[0];
        for (std::size_t i = 1; i < mats.size(); ++i) r = mmul(r, mats[i]);
        report["result"] = print_matrix(r);
        human = print_matrix(r) + "\n";
    } else {
        throw UsageError("unknown matrix op '" + op + "'");
    }

    report["elapsed_ms"] = elapsed_ms(t0);
    emit(report, json, human);
    return 0;
}

int cmd_poly(const std::string& op, std::vector<std::string> args,
             const std::string& region_file, bool json) {
    auto t0 = std::chrono::steady_clock::now();
    if (args.empty()) throw UsageError("poly: at least one polynomial argument required");

    std::vector<std::string> texts;
    for (auto& a : args) texts.push_back(read_arg(a));
    std::size_t arity = 0;
    std::vector<TropPoly> polys;
    for (const auto& t : texts) polys.push_back(parse_poly(t));
    for (const auto& p : polys) arity = std::max(arity, p.arity());
    polys.clear();
    for (const auto& t : texts) polys.push_back(parse_poly(t, arity));

    std::optional<Region> region;
    if (!region_file.empty()) {
        std::string text = read_arg("@" + region_file);
        region.emplace(arity, parse_region_lines(text, arity));
    }
    const Region* rp = region ? &*region : nullptr;

    ordered_json report;
    report["schema"] = "tropid/1";
    report["command"] = "poly";
    report["op"] = op;
    ordered_json inputs = ordered_json::array();
    for (const auto& p : polys) inputs.push_back(print_poly(p));
    report["inputs"] = inputs;

    if (op == "essential") {
        TropPoly e = essential_part(polys[0], rp);
        report["result"] = print_poly(e);
        report["elapsed_ms"] = elapsed_ms(t0);
        emit(report, json, print_poly(e) + "\n");
        return 0;
    }
    if (op == "equiv") {
        if (polys.size() != 2) throw UsageError("equiv: exactly two polynomials required");
        PolyEquiv v = e_equivalent(polys[0], polys[1], rp);
        if (v.equivalent) {
            report["result"] = "Equivalent";
            report["elapsed_ms"] = elapsed_ms(t0);
            emit(report, json, "Equivalent\n");
            return 0;
        }
        report["result"] = "Distinct";
        ordered_json point = ordered_json::array();
        std::string human = "Distinct at (";
        for (std::size_t i = 0; i < v.witness.size(); ++i) {
            point.push_back(print_rational(v.witness[i]));
            human += (i ? ", " : "") + print_rational(v.witness[i]);
        }
        human += "): f = " + print_scalar(v.f_value) + ", g = " + print_scalar(v.g_value) + "\n";
        report["witness"] = point;
        report["f_value"] = print_scalar(v.f_value);
        report["g_value"] = print_scalar(v.g_value);
        report["elapsed_ms"] = elapsed_ms(t0);
        emit(report, json, human);
        return 1;
    }
    throw UsageError("unknown poly op '" + op + "'");
}

int cmd_bicyclic(const std::string& op, std::vector<std::string> args, bool json) {
    auto t0 = std::chrono::steady_clock::now();
    ordered_json report;
    report["schema"] = "tropid/1";
    report["command"] = "bicyclic";
    report["op"] = op;

    std::string human;
    int rc = 0;
    if (op == "reduce") {
        if (args.size() != 1) throw UsageError("reduce: one generator word required");
        std::string w = parse_generator_word(read_arg(args[0]));
        BicyclicElem e = reduce_word(w);
        report["inputs"] = ordered_json::array({w});
        report["result"] = print_bicyclic(e);
        human = print_bicyclic(e) + "\n";
    } else if (op == "mul") {
        if (args.size() != 2) throw UsageError("mul: two elements required");
        BicyclicElem x = parse_bicyclic(read_arg(args[0]));
        BicyclicElem y = parse_bicyclic(read_arg(args[1]));
        BicyclicElem r = star(x, y);
        report["inputs"] = ordered_json::array({print_bicyclic(x), print_bicyclic(y)});
        report["result"] = print_bicyclic(r);
        human = print_bicyclic(r) + "\n";
    } else if (op == "repr") {
        if (args.size() != 1) throw UsageError("repr: one element required");
        BicyclicElem x = parse_bicyclic(read_arg(args[0]));
        report["inputs"] = ordered_json::array({print_bicyclic(x)});
        report["result"] = print_matrix(represent(x));
        human = print_matrix(represent(x)) + "\n";
    } else if (op == "adjan") {
        if (args.size() != 2) throw UsageError("adjan: two elements required");
        BicyclicElem x = parse_bicyclic(read_arg(args[0]));
        BicyclicElem y = parse_bicyclic(read_arg(args[1]));
        bool ok = check_adjan_on_B(x, y);
        report["inputs"] = ordered_json::array({print_bicyclic(x), print_bicyclic(y)});
        report["result"] = ok ? "true" : "false";
        human = std::string(ok ? "true" : "false") + "\n";
        rc = ok ? 0 : 1;
    } else {
        throw UsageError("unknown bicyclic op '" + op + "'");
    }

    report["elapsed_ms"] = elapsed_ms(t0);
    emit(report, json, human);
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tropid: exact tropical (max-plus) algebra toolkit"};
    app.require_subcommand(1);

    std::string identity_text, monoid_name = "M2", mode = "symbolic";
    std::uint64_t trials = 100000, seed = 0;
    bool json_check = false;
    auto* check = app.add_subcommand("check", "verify a semigroup identity over a matrix monoid");
    check->add_option("identity", identity_text, "identity text, e.g. \"A B = B A\" (or @file)")
        ->required();
    check->add_option("--monoid", monoid_name, "M2|U2|L2|N2|B|W2..W8|D2..D8 (default M2)");
    check->add_option("--mode", mode, "symbolic|random|both (default symbolic)")
        ->check(CLI::IsMember({"symbolic", "random", "both"}));
    check->add_option("--trials", trials, "random trials (default 100000)");
    check->add_option("--seed", seed, "RNG seed (default 0)");
    check->add_flag("--json", json_check, "emit a JSON report");

    std::string matrix_op;
    std::vector<std::string> matrix_args;
    long pow_k = -1;
    bool json_matrix = false;
    auto* matrix = app.add_subcommand("matrix", "exact matrix operations");
    matrix->add_option("--op", matrix_op, "perm|adjoint|nabla|ginv|mtrace|singular|rank|pow|mul")
        ->required()
        ->check(CLI::IsMember(
            {"perm", "adjoint", "nabla", "ginv", "mtrace", "singular", "rank", "pow", "mul"}));
    matrix->add_option("--k", pow_k, "exponent for --op pow");
    matrix->allow_extras();
    matrix->footer("positional arguments: matrix literals like [[0,1],[-inf,2]] (or @file)");
    matrix->add_flag("--json", json_matrix, "emit a JSON report");

    std::string poly_op, region_file;
    std::vector<std::string> poly_args;
    bool json_poly = false;
    auto* poly = app.add_subcommand("poly", "tropical polynomial operations");
    poly->add_option("--op", poly_op, "essential|equiv")
        ->required()
        ->check(CLI::IsMember({"essential", "equiv"}));
    poly->add_option("--region", region_file, "region file: one '<expr> >= <expr>' per line");
    poly->allow_extras();
    poly->footer("positional arguments: polynomial literals like 2*x1^2*x2 + 0 (or @file)");
    poly->add_flag("--json", json_poly, "emit a JSON report");

    std::string bi_op;
    std::vector<std::string> bi_args;
    bool json_bi = false;
    auto* bi = app.add_subcommand("bicyclic", "bicyclic monoid operations");
    bi->add_option("--op", bi_op, "reduce|mul|repr|adjan")
        ->required()
        ->check(CLI::IsMember({"reduce", "mul", "repr", "adjan"}));
    bi->allow_extras();
    bi->footer("positional arguments: elements \"(i,j)\" / \"b^i a^j\" or generator words");
    bi->add_flag("--json", json_bi, "emit a JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    matrix_args = matrix->remaining();
    poly_args = poly->remaining();
    bi_args = bi->remaining();

    try {
        if (check->parsed())
            return cmd_check(identity_text, monoid_name, mode, trials, seed, json_check);
        if (matrix->parsed()) return cmd_matrix(matrix_op, matrix_args, pow_k, json_matrix);
        if (poly->parsed()) return cmd_poly(poly_op, poly_args, region_file, json_poly);
        if (bi->parsed()) return cmd_bicyclic(bi_op, bi_args, json_bi);
    } catch (const tropid::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
