#ifndef LLSHOM_IO_HPP
#define LLSHOM_IO_HPP

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cnf.hpp"
#include "error.hpp"
#include "instance.hpp"
#include "tree_decomposition.hpp"

namespace llshom {

namespace detail {

// Line reader that skips blank and `c` lines and tracks line numbers.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::vector<std::string_view>& tokens)
    {
        while (std::getline(in_, line_)) {
            ++number_;
            if (!line_.empty() && line_.back() == '\r') line_.pop_back();
            tokens.clear();
            std::size_t i = 0;
            while (i < line_.size()) {
                while (i < line_.size() && (line_[i] == ' ' || line_[i] == '\t')) ++i;
                std::size_t j = i;
                while (j < line_.size() && line_[j] != ' ' && line_[j] != '\t') ++j;
                if (j > i) tokens.emplace_back(line_.data() + i, j - i);
                i = j;
            }
            if (tokens.empty() || tokens[0] == "c") continue;
            return true;
        }
        return false;
    }

    int line() const { return number_; }
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, number_); }

    long long integer(std::string_view s) const
    {
        long long v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size()) fail("expected an integer, got '" + std::string(s) + "'");
        return v;
    }

    int index(std::string_view s, int bound) const
    {
        long long v = integer(s);
        if (v < 0 || v >= bound) fail("index " + std::string(s) + " out of range");
        return static_cast<int>(v);
    }

    int count(std::string_view s) const
    {
        long long v = integer(s);
        if (v < 0 || v > 100'000'000) fail("bad count " + std::string(s));
        return static_cast<int>(v);
    }

    void arity(const std::vector<std::string_view>& t, std::size_t n) const
    {
        if (t.size() != n) fail("expected " + std::to_string(n) + " fields, got " + std::to_string(t.size()));
    }

private:
    std::istream& in_;
    std::string line_;
    int number_ = 0;
};

inline void read_edge(LineReader& r, const std::vector<std::string_view>& t, Graph& g, bool loops)
{
    r.arity(t, 3);
    Vertex u = r.index(t[1], g.order()), v = r.index(t[2], g.order());
    if (u == v && !loops) r.fail("loops are not allowed here");
    if (!g.add_edge(u, v)) r.fail("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
}

} // namespace detail

/// `.lsg`: `p graph <n> <m>` then m lines `e <u> <v>` (0-based; u = v is a loop).
inline Graph read_graph(std::istream& in)
{
    detail::LineReader r(in);
    std::vector<std::string_view> t;
    if (!r.next(t) || t[0] != "p" || t.size() != 4 || t[1] != "graph") r.fail("expected 'p graph <n> <m>'");
    Graph g(r.count(t[2]));
    const int m = r.count(t[3]);
    for (int i = 0; i < m; ++i) {
        if (!r.next(t)) r.fail("missing edge lines");
        if (t[0] != "e") r.fail("expected an 'e' line");
        detail::read_edge(r, t, g, true);
    }
    if (r.next(t)) r.fail("unexpected trailing line");
    return g;
}

inline void write_graph(std::ostream& out, const Graph& g)
{
    out << "p graph " << g.order() << ' ' << g.size() << '\n';
    for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
}

/// `.lsi`: header `p llshom <nH> <mH> <nG> <mG>`, then `h` edges, `g` edges
/// (loopless) and one `l <v> <k> <a1> ... <ak>` line per source vertex.
inline Instance read_instance(std::istream& in)
{
    detail::LineReader r(in);
    std::vector<std::string_view> t;
    if (!r.next(t) || t[0] != "p" || t.size() != 6 || t[1] != "llshom")
        r.fail("expected 'p llshom <nH> <mH> <nG> <mG>'");
    const int nh = r.count(t[2]), mh = r.count(t[3]), ng = r.count(t[4]), mg = r.count(t[5]);
    if (nh > VertexSet::capacity) r.fail("target graph has more than 64 vertices");
    Instance inst;
    inst.target = Graph(nh);
    inst.source = Graph(ng);
    for (int i = 0; i < mh; ++i) {
        if (!r.next(t) || t[0] != "h") r.fail("expected an 'h' line");
        detail::read_edge(r, t, inst.target, true);
    }
    for (int i = 0; i < mg; ++i) {
        if (!r.next(t) || t[0] != "g") r.fail("expected a 'g' line");
        detail::read_edge(r, t, inst.source, false);
    }
    inst.lists.assign(static_cast<std::size_t>(ng), VertexSet{});
    std::vector<char> seen(static_cast<std::size_t>(ng), 0);
    while (r.next(t)) {
        if (t[0] != "l") r.fail("expected an 'l' line");
        if (t.size() < 3) r.fail("list line is too short");
        const Vertex v = r.index(t[1], ng);
        if (seen[v]) r.fail("second list for vertex " + std::to_string(v));
        seen[v] = 1;
        const int k = r.count(t[2]);
        r.arity(t, static_cast<std::size_t>(k) + 3);
        for (int i = 0; i < k; ++i) {
            Vertex a = r.index(t[3 + i], nh);
            if (inst.lists[v].contains(a)) r.fail("repeated list entry " + std::to_string(a));
            inst.lists[v].insert(a);
        }
    }
    for (Vertex v = 0; v < ng; ++v)
        if (!seen[v]) throw ParseError("vertex " + std::to_string(v) + " has no list line", r.line());
    return inst;
}

inline void write_instance(std::ostream& out, const Instance& inst)
{
    out << "p llshom " << inst.target.order() << ' ' << inst.target.size() << ' ' << inst.source.order() << ' '
        << inst.source.size() << '\n';
    for (const Edge& e : inst.target.edges()) out << "h " << e.u << ' ' << e.v << '\n';
    for (const Edge& e : inst.source.edges()) out << "g " << e.u << ' ' << e.v << '\n';
    for (Vertex v = 0; v < inst.source.order(); ++v) {
        out << "l " << v << ' ' << inst.lists[v].size();
        inst.lists[v].for_each([&](Vertex a) { out << ' ' << a; });
        out << '\n';
    }
}

/// `.lsm`: one `m <v> <a>` line per source vertex.
inline Homomorphism read_mapping(std::istream& in, int source_order, int target_order)
{
    detail::LineReader r(in);
    std::vector<std::string_view> t;
    Homomorphism h(static_cast<std::size_t>(source_order), -1);
    while (r.next(t)) {
        if (t[0] != "m") r.fail("expected an 'm' line");
        r.arity(t, 3);
        const Vertex v = r.index(t[1], source_order);
        if (h[v] >= 0) r.fail("second image for vertex " + std::to_string(v));
        h[v] = r.index(t[2], target_order);
    }
    for (Vertex v = 0; v < source_order; ++v)
        if (h[v] < 0) throw ParseError("vertex " + std::to_string(v) + " has no image", r.line());
    return h;
}

inline void write_mapping(std::ostream& out, const Homomorphism& h)
{
    for (std::size_t v = 0; v < h.size(); ++v) out << "m " << v << ' ' << h[v] << '\n';
}

/// DIMACS CNF. Clauses may span lines; a lone `%` ends the input. Clauses
/// with one or two literals are filled up by repeating the last literal.
inline CnfFormula read_dimacs(std::istream& in)
{
    detail::LineReader r(in);
    std::vector<std::string_view> t;
    if (!r.next(t) || t[0] != "p" || t.size() != 4 || t[1] != "cnf") r.fail("expected 'p cnf <vars> <clauses>'");
    CnfFormula f;
    f.num_vars = r.count(t[2]);
    const int declared = r.count(t[3]);
    std::vector<Literal> current;
    bool done = false;
    while (!done && r.next(t)) {
        for (std::string_view tok : t) {
            if (tok == "%") {
                done = true;
                break;
            }
            const long long lit = r.integer(tok);
            if (lit == 0) {
                if (current.empty()) r.fail("empty clause");
                if (current.size() > 3) r.fail("clause has more than 3 literals");
                while (current.size() < 3) current.push_back(current.back());
                f.clauses.push_back({current[0], current[1], current[2]});
                current.clear();
                continue;
            }
            if (lit < -f.num_vars || lit > f.num_vars) r.fail("literal " + std::string(tok) + " is out of range");
            current.push_back(static_cast<Literal>(lit));
        }
    }
    if (!current.empty()) r.fail("last clause is not terminated by 0");
    if (static_cast<int>(f.clauses.size()) != declared)
        r.fail("header declares " + std::to_string(declared) + " clauses, found " + std::to_string(f.clauses.size()));
    return f;
}

inline void write_dimacs(std::ostream& out, const CnfFormula& f)
{
    out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const Clause& c : f.clauses) out << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
}

/// PACE `.td` text, 1-based bag and vertex numbers.
inline void write_pace_td(std::ostream& out, const TreeDecomposition& td, int n)
{
    out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << n << '\n';
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
        out << "b " << i + 1;
        for (Vertex v : td.bags[i]) out << ' ' << v + 1;
        out << '\n';
    }
    for (auto [a, b] : td.edges) out << a + 1 << ' ' << b + 1 << '\n';
}

inline TreeDecomposition read_pace_td(std::istream& in)
{
    detail::LineReader r(in);
    std::vector<std::string_view> t;
    if (!r.next(t) || t[0] != "s" || t.size() != 5 || t[1] != "td") r.fail("expected 's td <bags> <width+1> <n>'");
    const int k = r.count(t[2]), n = r.count(t[4]);
    TreeDecomposition td;
    td.bags.resize(static_cast<std::size_t>(k));
    std::vector<char> seen(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i) {
        if (!r.next(t) || t[0] != "b" || t.size() < 2) r.fail("expected a 'b' line");
        const int b = r.index(t[1], k + 1) - 1;
        if (b < 0 || seen[b]) r.fail("bad bag number");
        seen[b] = 1;
        for (std::size_t j = 2; j < t.size(); ++j) {
            const int v = r.index(t[j], n + 1) - 1;
            if (v < 0) r.fail("vertex numbers start at 1");
            td.bags[b].push_back(v);
        }
        std::sort(td.bags[b].begin(), td.bags[b].end());
    }
    while (r.next(t)) {
        r.arity(t, 2);
        const int a = r.index(t[0], k + 1) - 1, b = r.index(t[1], k + 1) - 1;
        if (a < 0 || b < 0) r.fail("bag numbers start at 1");
        td.edges.emplace_back(a, b);
    }
    return td;
}

template <typename T, typename Writer>
std::string to_text(const T& value, Writer writer)
{
    std::ostringstream out;
    writer(out, value);
    return out.str();
}

} // namespace llshom

#endif // LLSHOM_IO_HPP
