#ifndef LLSHOM_PATTERN_HPP
#define LLSHOM_PATTERN_HPP

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace llshom {

/// One connected piece of a forbidden pattern: a path P_t (t vertices) or a
/// subdivided claw S_{a,b,c}.
struct PatternComponent {
    enum class Kind { path, claw };

    Kind kind = Kind::path;
    int t = 1;
    int a = 1, b = 1, c = 1;

    static PatternComponent path(int t)
    {
        if (t < 1) throw std::invalid_argument("path length must be at least 1");
        PatternComponent p;
        p.kind = Kind::path;
        p.t = t;
        return p;
    }

    static PatternComponent claw(int a, int b, int c)
    {
        if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("claw arms must be at least 1");
        PatternComponent p;
        p.kind = Kind::claw;
        p.a = a;
        p.b = b;
        p.c = c;
        return p;
    }

    int order() const { return kind == Kind::path ? t : a + b + c + 1; }

    /// Paths are numbered along the path; claws have the centre at 0 and the
    /// arms listed outward one after another. Every vertex but 0 has a
    /// lower-indexed neighbour.
    Graph to_graph() const { return kind == Kind::path ? graphs::path(t) : graphs::subdivided_claw(a, b, c); }

    std::string to_string() const
    {
        if (kind == Kind::path) return "P" + std::to_string(t);
        return "S(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
    }

    friend bool operator==(const PatternComponent&, const PatternComponent&) = default;
};

/// A forbidden induced subgraph from the class of forests whose components
/// are paths and subdivided claws.
class PatternGraph {
public:
    enum class Kind { path, claw, forest };

    PatternGraph() = default;
    explicit PatternGraph(std::vector<PatternComponent> components) : components_(std::move(components))
    {
        if (components_.empty()) throw std::invalid_argument("empty pattern");
    }

    static PatternGraph path(int t) { return PatternGraph({PatternComponent::path(t)}); }
    static PatternGraph claw(int a, int b, int c) { return PatternGraph({PatternComponent::claw(a, b, c)}); }

    Kind kind() const
    {
        if (components_.size() != 1) return Kind::forest;
        return components_[0].kind == PatternComponent::Kind::path ? Kind::path : Kind::claw;
    }

    const std::vector<PatternComponent>& components() const { return components_; }
    bool empty() const { return components_.empty(); }

    int order() const
    {
        int n = 0;
        for (const auto& c : components_) n += c.order();
        return n;
    }

    Graph to_graph() const
    {
        Graph g;
        for (const auto& c : components_) g = graphs::disjoint_union(g, c.to_graph());
        return g;
    }

    /// Components by vertex count, largest first; ties keep input order.
    std::vector<PatternComponent> by_size_descending() const
    {
        auto out = components_;
        std::stable_sort(out.begin(), out.end(),
                         [](const auto& x, const auto& y) { return x.order() > y.order(); });
        return out;
    }

    std::string to_string() const
    {
        std::string s;
        for (std::size_t i = 0; i < components_.size(); ++i) {
            if (i) s += '+';
            s += components_[i].to_string();
        }
        return s;
    }

private:
    std::vector<PatternComponent> components_;
};

namespace detail {

inline int parse_positive(std::string_view s, std::size_t& pos)
{
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("expected a number in pattern");
    if (pos - start > 6) throw std::invalid_argument("pattern size too large");
    return std::stoi(std::string(s.substr(start, pos - start)));
}

inline void expect(std::string_view s, std::size_t& pos, char c)
{
    if (pos >= s.size() || s[pos] != c) throw std::invalid_argument(std::string("expected '") + c + "' in pattern");
    ++pos;
}

} // namespace detail

/// Parses `P<t>`, `S(<a>,<b>,<c>)` and `+`-joined combinations of them.
/// Whitespace is ignored.
inline PatternGraph parse_pattern(std::string_view text)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    std::vector<PatternComponent> comps;
    std::size_t pos = 0;
    while (true) {
        if (pos >= s.size()) throw std::invalid_argument("truncated pattern");
        char head = static_cast<char>(std::toupper(static_cast<unsigned char>(s[pos++])));
        if (head == 'P') {
            comps.push_back(PatternComponent::path(detail::parse_positive(s, pos)));
        } else if (head == 'S') {
            detail::expect(s, pos, '(');
            int a = detail::parse_positive(s, pos);
            detail::expect(s, pos, ',');
            int b = detail::parse_positive(s, pos);
            detail::expect(s, pos, ',');
            int c = detail::parse_positive(s, pos);
            detail::expect(s, pos, ')');
            comps.push_back(PatternComponent::claw(a, b, c));
        } else {
            throw std::invalid_argument("pattern components start with P or S");
        }
        if (pos == s.size()) break;
        detail::expect(s, pos, '+');
    }
    return PatternGraph(std::move(comps));
}

} // namespace llshom

#endif // LLSHOM_PATTERN_HPP
