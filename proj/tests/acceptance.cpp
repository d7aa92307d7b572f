// Acceptance criteria 1-10; prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails. Optional argument: suite name.

#include <cstdlib>
#include <iostream>
#include <string>

#include "acceptance.hpp"

int main(int argc, char** argv)
{
    using namespace llshom::acceptance;
    Suite suite = Suite::all;
    if (argc > 1) {
        const std::string s = argv[1];
        if (s == "oracle") suite = Suite::oracle;
        else if (s == "gadgets") suite = Suite::gadgets;
        else if (s == "structural") suite = Suite::structural;
        else if (s == "perf") suite = Suite::perf;
        else if (s != "all") {
            std::cerr << "unknown suite " << s << '\n';
            return 2;
        }
    }
    const auto outcomes = run_suite(suite, default_seed, [](const Outcome& o) { std::cerr << "done: criterion " << o.id << '\n'; });
    int failed = 0;
    for (const Outcome& o : outcomes) {
        std::cout << format(o) << '\n';
        failed += !o.passed;
    }
    std::cout << (outcomes.size() - failed) << '/' << outcomes.size() << " criteria passed\n";
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
