#ifndef LLSHOM_RESULT_HPP
#define LLSHOM_RESULT_HPP

#include <algorithm>
#include <cstdint>
#include <string>

#include "instance.hpp"

namespace llshom {

enum class Status { yes, no, budget_exceeded, not_applicable };

inline std::string to_string(Status s)
{
    switch (s) {
    case Status::yes: return "YES";
    case Status::no: return "NO";
    case Status::budget_exceeded: return "UNKNOWN";
    case Status::not_applicable: return "N/A";
    }
    return "?";
}

/// Counters collected by the solvers; fields not touched by a solver stay 0.
struct SolveStats {
    std::uint64_t nodes = 0;              // brute-force search nodes
    std::uint64_t branches = 0;           // high-degree branchings
    std::uint64_t guesses = 0;            // forest-guess children
    std::uint64_t dp_calls = 0;
    std::uint64_t recursive_calls = 0;
    std::uint64_t measure_checks = 0;
    std::uint64_t measure_violations = 0; // n <= mu <= 2n or mu decrease broken
    int max_width = -1;                   // widest decomposition handed to the DP
    int max_y_prime = 0;                  // largest extracted high-degree set
    std::uint64_t max_dp_states = 0;

    void merge(const SolveStats& o)
    {
        nodes += o.nodes;
        branches += o.branches;
        guesses += o.guesses;
        dp_calls += o.dp_calls;
        recursive_calls += o.recursive_calls;
        measure_checks += o.measure_checks;
        measure_violations += o.measure_violations;
        max_width = std::max(max_width, o.max_width);
        max_y_prime = std::max(max_y_prime, o.max_y_prime);
        max_dp_states = std::max(max_dp_states, o.max_dp_states);
    }
};

struct SolveResult {
    Status status = Status::no;
    Homomorphism witness; // set iff status == yes
    SolveStats stats;

    static SolveResult yes(Homomorphism h) { return {Status::yes, std::move(h), {}}; }
    static SolveResult no() { return {Status::no, {}, {}}; }
    static SolveResult unknown() { return {Status::budget_exceeded, {}, {}}; }
    static SolveResult not_applicable() { return {Status::not_applicable, {}, {}}; }
};

} // namespace llshom

#endif // LLSHOM_RESULT_HPP
