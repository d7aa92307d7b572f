#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <sys/wait.h>

#include "llshom/gadgets.hpp"
#include "llshom/io.hpp"
#include "llshom/solver_exact.hpp"
#include "support/oracles.hpp"

using namespace llshom;
namespace fs = std::filesystem;

namespace {

struct Exec {
    int code;
    std::string out, err;
};

class Cli : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path() /
               ("llshom_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    Exec run(const std::string& args) const
    {
        const std::string out = path("stdout.txt"), err = path("stderr.txt");
        const std::string cmd = std::string(LLSHOM_CLI_PATH) + " " + args + " >" + out + " 2>" + err;
        const int status = std::system(cmd.c_str());
        return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
    }

    static std::string slurp(const std::string& p)
    {
        std::ifstream in(p);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    template <typename T, typename W>
    std::string write(const std::string& name, const T& value, W writer) const
    {
        std::ofstream out(path(name));
        writer(out, value);
        return path(name);
    }

    Instance load(const std::string& name) const
    {
        std::ifstream in(path(name));
        return read_instance(in);
    }

private:
    fs::path dir_;
};

const Instance alternating_c4{graphs::path(3), graphs::cycle(4), {VertexSet{0, 2}, VertexSet{1}, VertexSet{0, 2}, VertexSet{1}}};

} // namespace

TEST_F(Cli, SolveYesWritesVerifiableWitness)
{
    const std::string inst = write("a.lsi", alternating_c4, write_instance);
    Exec r = run("solve --instance " + inst + " --witness " + path("w.lsm"));
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "s YES\n");
    Exec v = run("verify --instance " + inst + " --witness " + path("w.lsm"));
    EXPECT_EQ(v.code, 0);
    EXPECT_EQ(v.out, "s ACCEPT\n");
}

TEST_F(Cli, SolveNoForEveryAlgorithmThatApplies)
{
    Instance inst = alternating_c4;
    inst.lists[0] = VertexSet{0};
    inst.lists[2] = VertexSet{0};
    const std::string file = write("n.lsi", inst, write_instance);
    for (const char* alg : {"auto", "brute", "p3"}) {
        Exec r = run(std::string("solve --algorithm ") + alg + " --instance " + file);
        EXPECT_EQ(r.code, 0) << alg;
        EXPECT_EQ(r.out, "s NO\n") << alg;
    }
}

TEST_F(Cli, BudgetExhaustionIsUnknownWithExitTwo)
{
    CnfFormula f{12, {}};
    for (int i = 0; i < 40; ++i) f.clauses.push_back({1 + i % 12, -(1 + (i + 5) % 12), 1 + (i + 7) % 12});
    const std::string file = write("big.lsi", gen_nae_p3(f, 3).instance, write_instance);
    Exec r = run("solve --algorithm brute --budget 1000 --instance " + file);
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.out, "s UNKNOWN\n");
}

TEST_F(Cli, VerifyRejectsWithExitOne)
{
    const std::string inst = write("a.lsi", alternating_c4, write_instance);
    const std::string w = write("w.lsm", Homomorphism{0, 1, 0, 1}, write_mapping);
    Exec r = run("verify --instance " + inst + " --witness " + w);
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out.rfind("s REJECT\n", 0), 0u);
}

TEST_F(Cli, ErrorsAreOneMachineReadableLine)
{
    std::ofstream(path("bad.lsi")) << "p llshom 2 1 2 1\nh 0 1\ng 0 5\n";
    const std::pair<std::string, std::string> cases[] = {
        {"solve --instance " + path("bad.lsi"), "error: parse: line 3: "},
        {"solve --instance " + path("missing.lsi"), "error: io: "},
        {"solve --bogus", "error: usage: "},
        {"solve --algorithm p3 --forbidden Q7 --instance " + write("a.lsi", alternating_c4, write_instance),
         "error: "},
    };
    for (const auto& [args, prefix] : cases) {
        Exec r = run(args);
        EXPECT_EQ(r.code, 2) << args;
        EXPECT_EQ(r.err.rfind(prefix, 0), 0u) << r.err;
        EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1) << r.err;
    }
}

TEST_F(Cli, GeneratedInstancesSolveToTheFormulaAnswer)
{
    const CnfFormula sat{3, {{1, 2, -3}, {-1, -2, 3}}};
    const CnfFormula unsat{1, {{1, 1, 1}, {-1, -1, -1}}};
    for (const auto& [f, want] : {std::pair{sat, "s YES\n"}, std::pair{unsat, "s NO\n"}})
        for (const char* kind : {"k13", "p4", "k2loops"}) {
            const std::string cnf = write("f.cnf", f, write_dimacs);
            Exec g = run(std::string("generate ") + kind + " --cnf " + cnf + " -o " + path("g.lsi"));
            ASSERT_EQ(g.code, 0) << g.err;
            Exec s = run("solve --algorithm brute --instance " + path("g.lsi"));
            EXPECT_EQ(s.out, want) << kind;
        }
}

TEST_F(Cli, NaeGeneratorReportsPassingAudit)
{
    const std::string cnf = write("f.cnf", CnfFormula{3, {{1, 2, -3}, {-1, 2, 3}}}, write_dimacs);
    Exec g = run("generate nae-p3 --p 2 --cnf " + cnf + " -o " + path("g.lsi") + " --annotations " + path("g.json"));
    ASSERT_EQ(g.code, 0) << g.err;
    EXPECT_NE(g.out.find("c max_degree 3\n"), std::string::npos);
    EXPECT_NE(g.out.find("c girth_at_least_p pass\n"), std::string::npos);
    EXPECT_NE(g.out.find("c nae_audit pass\n"), std::string::npos);
    EXPECT_NE(slurp(path("g.json")).find("\"heads\""), std::string::npos);
    Exec s = run("solve --algorithm p3 --stats --instance " + path("g.lsi"));
    EXPECT_EQ(s.out.rfind("s YES\n", 0), 0u);
    EXPECT_NE(s.out.find("c max_width "), std::string::npos);
}

TEST_F(Cli, GeneralGeneratorNeedsTarget)
{
    const std::string cnf = write("f.cnf", CnfFormula{1, {{1, 1, -1}}}, write_dimacs);
    Exec r = run("generate general-path --cnf " + cnf + " -o " + path("g.lsi"));
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.err.rfind("error: usage: ", 0), 0u);
    const std::string target = write("h.lsg", graphs::star(3), write_graph);
    Exec ok = run("generate general-path --cnf " + cnf + " --target " + target + " -o " + path("g.lsi"));
    EXPECT_EQ(ok.code, 0) << ok.err;
}

TEST_F(Cli, ReduceToP3ConjunctionEqualsDirectSolve)
{
    std::mt19937_64 rng(5);
    int yes = 0;
    for (int round = 0; round < 12; ++round) {
        // Even cycles with chords between the two colour classes.
        const int n = 4 * (1 + static_cast<int>(rng() % 2)) + 2 * static_cast<int>(rng() % 2);
        Instance inst{graphs::cycle(4), graphs::cycle(n), {}};
        for (int chord = static_cast<int>(rng() % 3); chord > 0; --chord) {
            const Vertex u = static_cast<Vertex>(rng() % n), v = static_cast<Vertex>(rng() % n);
            if ((u + v) % 2 == 1) inst.source.add_edge(u, v);
        }
        for (Vertex v = 0; v < n; ++v) {
            VertexSet l = v % 2 == 0 ? VertexSet{0, 2} : VertexSet{1, 3};
            if (rng() % 6 == 0) l.erase(l.front());
            inst.lists.push_back(l);
        }
        const bool direct = solve_bruteforce(inst).status == Status::yes;
        yes += direct;
        Exec r = run("reduce --to-p3 --instance " + write("c4.lsi", inst, write_instance) + " -o " + path("red"));
        ASSERT_EQ(r.code, 0) << r.err;
        const bool first = run("solve --algorithm brute --instance " + path("red.first.lsi")).out == "s YES\n";
        const bool second = run("solve --algorithm brute --instance " + path("red.second.lsi")).out == "s YES\n";
        EXPECT_EQ(first && second, direct);
    }
    EXPECT_GT(yes, 0);
}

TEST_F(Cli, LiftMatchesDirectSolve)
{
    const Graph base = graphs::complete(3);
    const Graph star = associated_bipartite(base).graph;
    Instance inst{star, graphs::cycle(6), {}};
    for (Vertex v = 0; v < 6; ++v) inst.lists.push_back(v % 2 == 0 ? VertexSet{0, 1, 2} : VertexSet{3, 4, 5});
    const std::string file = write("s.lsi", inst, write_instance);
    Exec r = run("reduce --lift --instance " + file + " --base " + write("k3.lsg", base, write_graph) + " -o " +
                path("l.lsi"));
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(load("l.lsi").target, base);
    EXPECT_EQ(run("solve --algorithm brute --instance " + path("l.lsi")).out,
              run("solve --algorithm brute --instance " + file).out);
    Exec searched = run("reduce --lift --instance " + file + " -o " + path("m.lsi"));
    EXPECT_EQ(searched.code, 0) << searched.err;
}

TEST_F(Cli, EmitTdWritesPaceText)
{
    const std::string file = write("a.lsi", alternating_c4, write_instance);
    Exec r = run("solve --instance " + file + " --emit-td " + path("a.td"));
    ASSERT_EQ(r.code, 0);
    std::ifstream in(path("a.td"));
    TreeDecomposition td = read_pace_td(in);
    EXPECT_FALSE(validate(alternating_c4.source, td).has_value());
}

TEST_F(Cli, ThreadsFromEnvironmentGiveIdenticalOutput)
{
    const std::string cnf = write("f.cnf", CnfFormula{4, {{1, 2, -3}, {-1, 4, 3}, {2, -4, 1}}}, write_dimacs);
    ASSERT_EQ(run("generate nae-p3 --p 3 --cnf " + cnf + " -o " + path("g.lsi")).code, 0);
    const std::string first = slurp(path("g.lsi"));
    ASSERT_EQ(run("generate nae-p3 --p 3 --cnf " + cnf + " -o " + path("g.lsi")).code, 0);
    EXPECT_EQ(slurp(path("g.lsi")), first);
    Exec one = run("solve --threads 1 --witness " + path("w1.lsm") + " --instance " + path("g.lsi"));
    Exec four = run("solve --threads 4 --instance " + path("g.lsi"));
    EXPECT_EQ(one.out, four.out);
    setenv("LLSHOM_THREADS", "3", 1);
    Exec env = run("solve --instance " + path("g.lsi"));
    unsetenv("LLSHOM_THREADS");
    EXPECT_EQ(env.out, one.out);
}

TEST_F(Cli, SelftestRejectsUnknownSuite)
{
    Exec r = run("selftest --suite nonsense");
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.err.rfind("error: usage: ", 0), 0u);
}

TEST_F(Cli, SelftestStructuralSuitePasses)
{
    Exec r = run("selftest --suite structural");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("PASS criterion 6"), std::string::npos);
    EXPECT_NE(r.out.find("PASS criterion 8"), std::string::npos);
}
