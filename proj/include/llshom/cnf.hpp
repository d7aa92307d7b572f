#ifndef LLSHOM_CNF_HPP
#define LLSHOM_CNF_HPP

#include <array>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <vector>

namespace llshom {

/// DIMACS-style literal: +v or -v for variable v in 1..num_vars.
using Literal = int;
using Clause = std::array<Literal, 3>;

struct CnfFormula {
    int num_vars = 0;
    std::vector<Clause> clauses;

    void validate() const
    {
        for (const Clause& c : clauses)
            for (Literal l : c)
                if (l == 0 || std::abs(l) > num_vars) throw std::invalid_argument("literal references an undeclared variable");
    }

    friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

inline int variable_of(Literal l) { return std::abs(l); }
inline bool is_positive(Literal l) { return l > 0; }

/// assignment[v] for v in 1..num_vars; index 0 unused.
using Assignment = std::vector<std::uint8_t>;

inline bool literal_value(Literal l, const Assignment& a) { return (a[variable_of(l)] != 0) == is_positive(l); }

/// Adds (x or not x or x) for every variable that lacks a positive or a
/// negative occurrence. Preserves both satisfiability and NAE-satisfiability.
inline CnfFormula pad_polarity(const CnfFormula& f)
{
    f.validate();
    std::vector<char> pos(static_cast<std::size_t>(f.num_vars) + 1, 0), neg(pos);
    for (const Clause& c : f.clauses)
        for (Literal l : c) (is_positive(l) ? pos : neg)[variable_of(l)] = 1;
    CnfFormula out = f;
    for (int v = 1; v <= f.num_vars; ++v)
        if (!pos[v] || !neg[v]) out.clauses.push_back({v, -v, v});
    return out;
}

inline bool satisfies(const CnfFormula& f, const Assignment& a)
{
    for (const Clause& c : f.clauses)
        if (!literal_value(c[0], a) && !literal_value(c[1], a) && !literal_value(c[2], a)) return false;
    return true;
}

inline bool nae_satisfies(const CnfFormula& f, const Assignment& a)
{
    for (const Clause& c : f.clauses) {
        bool t = false, u = false;
        for (Literal l : c) (literal_value(l, a) ? t : u) = true;
        if (!t || !u) return false;
    }
    return true;
}

namespace detail {

template <typename Pred>
std::optional<Assignment> enumerate_assignments(const CnfFormula& f, Pred pred)
{
    if (f.num_vars > 30) throw std::invalid_argument("too many variables for exhaustive search");
    Assignment a(static_cast<std::size_t>(f.num_vars) + 1, 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f.num_vars); ++mask) {
        for (int v = 1; v <= f.num_vars; ++v) a[v] = static_cast<std::uint8_t>((mask >> (v - 1)) & 1U);
        if (pred(f, a)) return a;
    }
    return std::nullopt;
}

} // namespace detail

inline std::optional<Assignment> brute_force_sat(const CnfFormula& f)
{
    return detail::enumerate_assignments(f, satisfies);
}

inline std::optional<Assignment> brute_force_nae_sat(const CnfFormula& f)
{
    return detail::enumerate_assignments(f, nae_satisfies);
}

} // namespace llshom

#endif // LLSHOM_CNF_HPP
