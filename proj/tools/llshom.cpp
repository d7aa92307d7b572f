// Command-line front end: solve, verify, generate, reduce, selftest.
//
// Exit codes: 0 solved or verified, 1 verification reject, 2 error, parse
// failure or exhausted budget. Errors go to stderr as one line
// `error: <code>: <message>`.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "acceptance.hpp"
#include "json.hpp"
#include "llshom/llshom.hpp"

namespace {

using namespace llshom;

constexpr int exit_ok = 0;
constexpr int exit_reject = 1;
constexpr int exit_error = 2;

struct CliError : std::runtime_error {
    CliError(std::string c, const std::string& message) : std::runtime_error(message), code(std::move(c)) {}
    std::string code;
};

std::ifstream open_in(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw CliError("io", "cannot open " + path);
    return in;
}

template <typename T, typename Writer>
void save(const std::string& path, const T& value, Writer writer)
{
    std::ofstream out(path);
    if (!out) throw CliError("io", "cannot write " + path);
    writer(out, value);
    if (!out) throw CliError("io", "write failed for " + path);
}

Instance load_instance(const std::string& path)
{
    auto in = open_in(path);
    Instance inst = read_instance(in);
    inst.validate();
    return inst;
}

Graph load_graph(const std::string& path)
{
    auto in = open_in(path);
    return read_graph(in);
}

void print_stats(const SolveStats& s)
{
    std::cout << "c branches " << s.branches << "\nc guesses " << s.guesses << "\nc dp_calls " << s.dp_calls
              << "\nc max_width " << s.max_width << "\nc max_y_prime " << s.max_y_prime << "\nc max_dp_states "
              << s.max_dp_states << "\nc brute_nodes " << s.nodes << '\n';
}

// ---- solve -----------------------------------------------------------------

struct SolveArgs {
    std::string instance, algorithm = "auto", witness, forbidden, emit_td;
    std::uint64_t budget = unlimited_budget;
    int threads = 1;
    bool stats = false;
};

int cmd_solve(const SolveArgs& a)
{
    const Instance inst = load_instance(a.instance);
    P3Options p3;
    p3.threads = std::max(1, a.threads);
    if (!a.forbidden.empty()) {
        if (a.algorithm != "p3" && a.algorithm != "c4" && a.algorithm != "auto")
            throw CliError("usage", "--forbidden applies to the p3, c4 and auto algorithms");
        p3.forbidden = parse_pattern(a.forbidden);
    }
    if (!a.emit_td.empty())
        save(a.emit_td, decompose(inst.source, p3.heuristic),
             [&](std::ostream& out, const TreeDecomposition& td) { write_pace_td(out, td, inst.source.order()); });

    SolveResult r;
    if (a.algorithm == "auto") r = solve_auto(inst, SolveOptions{a.budget, p3});
    else if (a.algorithm == "brute") r = solve_bruteforce(inst, a.budget);
    else if (a.algorithm == "poly") r = solve_poly(inst);
    else if (a.algorithm == "p3") r = solve_p3(inst, p3);
    else if (a.algorithm == "c4") r = solve_c4(inst, p3);
    else throw CliError("usage", "unknown algorithm " + a.algorithm);
    if (r.status == Status::not_applicable) throw CliError("not-applicable", "poly needs a target in {K1, K1 with loop, K2}");

    std::cout << "s " << to_string(r.status) << '\n';
    if (a.stats) print_stats(r.stats);
    if (r.status == Status::yes && !a.witness.empty()) save(a.witness, r.witness, write_mapping);
    return r.status == Status::budget_exceeded ? exit_error : exit_ok;
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const std::string& instance_path, const std::string& witness_path)
{
    const Instance inst = load_instance(instance_path);
    auto in = open_in(witness_path);
    const Homomorphism h = read_mapping(in, inst.source.order(), inst.target.order());
    const Verdict v = verify_solution(inst, h);
    if (v.accepted) {
        std::cout << "s ACCEPT\n";
        return exit_ok;
    }
    std::cout << "s REJECT\nc " << v.diagnostic << '\n';
    return exit_reject;
}

// ---- generate --------------------------------------------------------------

struct GenerateArgs {
    std::string kind, cnf, target, output, annotations;
    std::optional<int> p;
};

void report_audit(const GadgetOutput& g, std::optional<int> p)
{
    const Graph& s = g.instance.source;
    std::cout << "c vertices " << s.order() << "\nc edges " << s.size() << "\nc max_degree " << max_degree(s) << '\n';
    if (p) std::cout << "c girth_at_least_p " << (girth_at_least(s, *p) ? "pass" : "fail") << '\n';
}

int cmd_generate(const GenerateArgs& a)
{
    auto in = open_in(a.cnf);
    const CnfFormula f = read_dimacs(in);
    auto need_target = [&] {
        if (a.target.empty()) throw CliError("usage", a.kind + " needs --target");
        return load_graph(a.target);
    };

    GadgetOutput g;
    std::optional<int> audit_p;
    if (a.kind == "k13") g = gen_k13(f);
    else if (a.kind == "p4") g = gen_p4(f);
    else if (a.kind == "k2loops") g = gen_k2loops(f);
    else if (a.kind == "nae-p3") {
        audit_p = a.p.value_or(1);
        g = gen_nae_p3(f, *audit_p);
    } else if (a.kind == "general-path") g = gen_general_h_pathfree(f, need_target());
    else if (a.kind == "general-girth") {
        const Graph h = need_target();
        audit_p = a.p.value_or(default_girth_p(h));
        g = gen_general_h_girth(f, h, *audit_p);
    } else throw CliError("usage", "unknown generator " + a.kind);

    save(a.output, g.instance, write_instance);
    report_audit(g, audit_p);
    if (a.kind == "nae-p3") {
        auto bad = audit_nae_p3(g.instance.source, *audit_p);
        std::cout << "c nae_audit " << (bad ? "fail: " + *bad : std::string("pass")) << '\n';
        if (bad) throw CliError("audit", *bad);
    }
    if (!a.annotations.empty()) {
        nlohmann::json j;
        for (const auto& [name, vertices] : g.annotations) j["annotations"][name] = vertices;
        j["witnesses"] = g.witnesses;
        save(a.annotations, j, [](std::ostream& out, const nlohmann::json& v) { out << v.dump(1) << '\n'; });
    }
    return exit_ok;
}

// ---- reduce ----------------------------------------------------------------

struct ReduceArgs {
    std::string instance, output, base;
    bool to_p3 = false, lift = false;
};

int cmd_reduce(const ReduceArgs& a)
{
    if (a.to_p3 == a.lift) throw CliError("usage", "choose exactly one of --to-p3 and --lift");
    const Instance inst = load_instance(a.instance);
    if (a.to_p3) {
        const C4Reduction r = reduce_c4_to_p3(inst);
        save(a.output + ".first.lsi", r.first, write_instance);
        save(a.output + ".second.lsi", r.second, write_instance);
        std::cout << "c wrote " << a.output << ".first.lsi " << a.output << ".second.lsi\n";
        return exit_ok;
    }
    Graph base;
    Instance star = inst;
    if (!a.base.empty()) {
        base = load_graph(a.base);
    } else {
        auto found = find_associated_base(inst.target);
        if (!found) throw CliError("not-applicable", "target is not an associated bipartite graph");
        base = found->base;
        star = detail::relabel_target(inst, associated_bipartite(base).graph, found->to_associated);
    }
    const LiftedInstance lifted = lift_to_base(star, base);
    save(a.output, lifted.instance, write_instance);
    std::cout << "c wrote " << a.output << '\n';
    return exit_ok;
}

// ---- selftest --------------------------------------------------------------

int cmd_selftest(const std::string& suite_name, std::uint64_t seed)
{
    using namespace llshom::acceptance;
    const std::map<std::string, Suite> names{{"oracle", Suite::oracle},   {"gadgets", Suite::gadgets},
                                             {"structural", Suite::structural}, {"perf", Suite::perf},
                                             {"all", Suite::all}};
    auto it = names.find(suite_name);
    if (it == names.end()) throw CliError("usage", "unknown suite " + suite_name);
    int failed = 0, total = 0;
    run_suite(it->second, seed, [&](const Outcome& o) {
        std::cout << format(o) << std::endl;
        failed += !o.passed;
        ++total;
    });
    std::cout << (total - failed) << '/' << total << " criteria passed\n";
    return failed == 0 ? exit_ok : exit_reject;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"List locally surjective homomorphism toolkit"};
    app.require_subcommand(1);

    SolveArgs solve;
    auto* s = app.add_subcommand("solve", "Decide an .lsi instance");
    s->add_option("--instance", solve.instance, "Instance file (.lsi)")->required();
    s->add_option("--algorithm", solve.algorithm, "auto|brute|poly|p3|c4")
        ->check(CLI::IsMember({"auto", "brute", "poly", "p3", "c4"}));
    s->add_option("--budget", solve.budget, "Brute-force node limit");
    s->add_option("--witness", solve.witness, "Write the witness here (.lsm)");
    s->add_option("--forbidden", solve.forbidden, "Induced forest pattern, e.g. S(2,2,2)+P4");
    s->add_option("--emit-td", solve.emit_td, "Write a tree decomposition of the source graph (PACE text)");
    s->add_option("--threads", solve.threads, "Worker threads for branching")->envname("LLSHOM_THREADS");
    s->add_flag("--stats", solve.stats, "Print solver counters");

    std::string verify_instance, verify_witness;
    auto* v = app.add_subcommand("verify", "Check a witness against an instance");
    v->add_option("--instance", verify_instance)->required();
    v->add_option("--witness", verify_witness)->required();

    GenerateArgs gen;
    auto* g = app.add_subcommand("generate", "Build a hard instance from a DIMACS formula");
    g->add_option("kind", gen.kind, "k13|p4|k2loops|nae-p3|general-path|general-girth")
        ->required()
        ->check(CLI::IsMember({"k13", "p4", "k2loops", "nae-p3", "general-path", "general-girth"}));
    g->add_option("--cnf", gen.cnf)->required();
    g->add_option("--target", gen.target, "Target graph (.lsg) for the general generators");
    g->add_option("--p", gen.p, "Girth / spacing parameter");
    g->add_option("-o,--output", gen.output)->required();
    g->add_option("--annotations", gen.annotations, "Write named vertex sets and witnesses as JSON");

    ReduceArgs red;
    auto* r = app.add_subcommand("reduce", "Rewrite an instance over C4 or H*");
    r->add_option("--instance", red.instance)->required();
    r->add_option("-o,--output", red.output, "Output file, or prefix for --to-p3")->required();
    r->add_flag("--to-p3", red.to_p3, "C4 instance to two P3 instances");
    r->add_flag("--lift", red.lift, "Consistent H* instance to an instance over H");
    r->add_option("--base", red.base, "Base graph H (.lsg); found by search when omitted");

    std::string suite = "all";
    std::uint64_t seed = acceptance::default_seed;
    auto* t = app.add_subcommand("selftest", "Run the acceptance suite");
    t->add_option("--suite", suite, "oracle|gadgets|structural|perf|all");
    t->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: usage: " << e.what() << '\n';
        return exit_error;
    }

    try {
        if (*s) return cmd_solve(solve);
        if (*v) return cmd_verify(verify_instance, verify_witness);
        if (*g) return cmd_generate(gen);
        if (*r) return cmd_reduce(red);
        return cmd_selftest(suite, seed);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.code << ": " << e.what() << '\n';
    } catch (const Error& e) {
        std::cerr << "error: " << e.code() << ": " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: invalid: " << e.what() << '\n';
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << '\n';
    }
    return exit_error;
}
