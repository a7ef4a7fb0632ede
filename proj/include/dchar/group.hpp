#pragma once

#include "dchar/complex.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dchar {

/// Finite group given by its multiplication table on elements 0..n-1.
class FiniteGroup {
  public:
    FiniteGroup() : FiniteGroup(1, {0}, "trivial") {}

    /// mul[a * n + b] = a * b.
    FiniteGroup(int order, std::vector<int> table, std::string name = "G") : n_(order), mul_(std::move(table)), name_(std::move(name)) {
        if (order < 1) throw std::invalid_argument("group order must be positive");
        if (static_cast<int>(mul_.size()) != order * order) throw std::invalid_argument("multiplication table has the wrong size");
        for (int x : mul_)
            if (x < 0 || x >= order) throw std::invalid_argument("multiplication table entry out of range");
        e_ = -1;
        for (int a = 0; a < n_ && e_ < 0; ++a) {
            bool unit = true;
            for (int b = 0; b < n_ && unit; ++b) unit = mul(a, b) == b && mul(b, a) == b;
            if (unit) e_ = a;
        }
        if (e_ < 0) throw std::invalid_argument("no identity element");
        inv_.assign(n_, -1);
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                if (mul(a, b) == e_) inv_[a] = b;
        for (int a = 0; a < n_; ++a)
            if (inv_[a] < 0 || mul(inv_[a], a) != e_) throw std::invalid_argument("element without inverse");
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                for (int c = 0; c < n_; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw std::invalid_argument("multiplication is not associative");
    }

    int order() const { return n_; }
    int identity() const { return e_; }
    int mul(int a, int b) const { return mul_[a * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    const std::string& name() const { return name_; }
    const std::vector<int>& table() const { return mul_; }

    /// Subgroup generated by a set of elements.
    std::vector<int> generated(const std::vector<int>& gens) const {
        std::vector<char> in(n_, 0);
        std::deque<int> q{e_};
        in[e_] = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (int s : gens) {
                int y = mul(s, x);
                if (!in[y]) {
                    in[y] = 1;
                    q.push_back(y);
                }
            }
        }
        std::vector<int> out;
        for (int a = 0; a < n_; ++a)
            if (in[a]) out.push_back(a);
        return out;
    }

    /// Greedy generating set of a subgroup: scan elements in index order,
    /// keep each one not yet generated.
    std::vector<int> generators_of(const std::vector<int>& subgroup) const {
        std::vector<int> gens;
        std::vector<int> span{e_};
        for (int a : subgroup) {
            if (std::find(span.begin(), span.end(), a) != span.end()) continue;
            gens.push_back(a);
            span = generated(gens);
        }
        return gens;
    }

    std::vector<int> generators() const {
        std::vector<int> all(n_);
        std::iota(all.begin(), all.end(), 0);
        return generators_of(all);
    }

  private:
    int n_ = 1;
    std::vector<int> mul_;
    std::string name_;
    int e_ = 0;
    std::vector<int> inv_;
};

inline FiniteGroup cyclic_group(int n) {
    std::vector<int> mul(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mul[a * n + b] = (a + b) % n;
    return FiniteGroup(n, mul, "Z" + std::to_string(n));
}

/// Exact stabilizer of a vertex.
struct InertiaGroup {
    int base_vertex = 0;
    std::vector<int> elements;
};

/// Simplicial action of a finite group on a complex.
class GroupAction {
  public:
    GroupAction() = default;

    /// vertex_map[g * nv + v] = g.v
    GroupAction(FiniteGroup group, SimplicialComplex complex, std::vector<int> vertex_map)
        : g_(std::move(group)), k_(std::move(complex)), vmap_(std::move(vertex_map)) {
        const int n = g_.order();
        const int nv = k_.num_vertices();
        if (static_cast<int>(vmap_.size()) != n * nv) throw std::invalid_argument("vertex action table has the wrong size");
        for (int x : vmap_)
            if (x < 0 || x >= nv) throw std::invalid_argument("vertex action target out of range");
        for (int v = 0; v < nv; ++v)
            if (act(g_.identity(), v) != v) throw std::invalid_argument("identity does not act trivially on vertex " + std::to_string(v));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int v = 0; v < nv; ++v)
                    if (act(g_.mul(a, b), v) != act(a, act(b, v)))
                        throw std::invalid_argument("action is not a homomorphism at (" + std::to_string(a) + ", " +
                                                    std::to_string(b) + ", " + std::to_string(v) + ")");
        for (int q = 0; q <= 2; ++q) {
            auto& tab = simplex_tab_[q];
            tab.resize(static_cast<std::size_t>(n) * k_.count(q));
            for (int g = 0; g < n; ++g)
                for (int s = 0; s < k_.count(q); ++s) {
                    auto vs = k_.vertices_of(q, s);
                    for (auto& v : vs) v = act(g, v);
                    auto o = k_.find(q, vs.data());
                    if (o.index < 0)
                        throw std::invalid_argument("element " + std::to_string(g) + " does not map simplex " +
                                                    std::to_string(s) + " of degree " + std::to_string(q) + " to a simplex");
                    tab[static_cast<std::size_t>(g) * k_.count(q) + s] = o;
                }
        }
    }

    const FiniteGroup& group() const { return g_; }
    const SimplicialComplex& complex() const { return k_; }
    int act(int g, int v) const { return vmap_[static_cast<std::size_t>(g) * k_.num_vertices() + v]; }
    const std::vector<int>& vertex_map() const { return vmap_; }

    /// g applied to simplex s of degree q: index and orientation sign.
    Oriented act_simplex(int g, int q, int s) const {
        return simplex_tab_[q][static_cast<std::size_t>(g) * k_.count(q) + s];
    }

    InertiaGroup inertia(int v) const {
        InertiaGroup out{v, {}};
        for (int g = 0; g < g_.order(); ++g)
            if (act(g, v) == v) out.elements.push_back(g);
        return out;
    }

    std::vector<int> orbit(int v) const {
        std::set<int> o;
        for (int g = 0; g < g_.order(); ++g) o.insert(act(g, v));
        return {o.begin(), o.end()};
    }

  private:
    FiniteGroup g_;
    SimplicialComplex k_;
    std::vector<int> vmap_;
    std::vector<Oriented> simplex_tab_[3];
};

inline GroupAction trivial_action(SimplicialComplex k) {
    std::vector<int> vm(k.num_vertices());
    std::iota(vm.begin(), vm.end(), 0);
    return GroupAction(FiniteGroup(), std::move(k), vm);
}

/// Z_n acting trivially on a point.
inline GroupAction point_action(int n) {
    return GroupAction(cyclic_group(n), point(), std::vector<int>(n, 0));
}

/// Rotations of the octahedron about the polar axis by multiples of
/// 4/n quarter turns; n in {1, 2, 4}. Element k rotates by k * (4/n)
/// quarter turns counterclockwise seen from the north pole.
inline GroupAction octahedron_rotation(int n) {
    if (n != 1 && n != 2 && n != 4) throw std::invalid_argument("octahedron rotation group must have order 1, 2 or 4");
    const auto k = octahedron();
    std::vector<int> vm;
    for (int g = 0; g < n; ++g) {
        const int quarter = g * (4 / n);
        vm.push_back(0);
        for (int i = 1; i <= 4; ++i) vm.push_back((i - 1 + quarter) % 4 + 1);
        vm.push_back(5);
    }
    if (n == 1) return GroupAction(FiniteGroup(), k, vm);
    return GroupAction(cyclic_group(n), k, vm);
}

/// Z_2 reflecting the 3-vertex circle: fixes 0, swaps 1 and 2.
inline GroupAction circle_reflection() {
    return GroupAction(cyclic_group(2), triangle_circle(), {0, 1, 2, 0, 2, 1});
}

// ---------------------------------------------------------------------------
// Text format
//
//   group <name> order=<n>
//   <n rows of n integers: row a lists a*b for b = 0..n-1>
//   act g v -> w
//
// Unlisted (g, v) pairs are rejected.

inline GroupAction parse_action(std::istream& in, const SimplicialComplex& k) {
    std::string line;
    int lineno = 0;
    int n = -1;
    std::string name;
    std::vector<int> mul;
    int rows = 0;
    std::vector<int> vm;
    std::vector<int> seen_line;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto p = line.find('#'); p != std::string::npos) line.resize(p);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (word == "group") {
            if (n >= 0) throw ParseError("duplicate header", lineno);
            std::string o;
            if (!(ls >> name >> o) || o.rfind("order=", 0) != 0) throw ParseError("expected 'group <name> order=<n>'", lineno);
            try {
                n = std::stoi(o.substr(6));
            } catch (const std::exception&) {
                throw ParseError("bad order '" + o + "'", lineno);
            }
            if (n < 1) throw ParseError("order must be positive", lineno);
            vm.assign(static_cast<std::size_t>(n) * k.num_vertices(), -1);
            seen_line.assign(vm.size(), 0);
        } else if (word == "act") {
            if (n < 0) throw ParseError("act before header", lineno);
            if (rows != n) throw ParseError("multiplication table incomplete", lineno);
            int g, v, w;
            std::string arrow;
            if (!(std::istringstream(line.substr(line.find("act") + 3)) >> g >> v >> arrow >> w) || arrow != "->")
                throw ParseError("expected 'act g v -> w'", lineno);
            if (g < 0 || g >= n) throw ParseError("group element out of range", lineno);
            if (v < 0 || v >= k.num_vertices() || w < 0 || w >= k.num_vertices()) throw ParseError("vertex out of range", lineno);
            auto idx = static_cast<std::size_t>(g) * k.num_vertices() + v;
            if (vm[idx] >= 0) throw ParseError("duplicate action entry", lineno);
            vm[idx] = w;
            seen_line[idx] = lineno;
        } else {
            if (n < 0) throw ParseError("unknown keyword '" + word + "'", lineno);
            if (rows >= n) throw ParseError("unknown keyword '" + word + "'", lineno);
            std::istringstream rs(line);
            for (int b = 0; b < n; ++b) {
                int x;
                if (!(rs >> x)) throw ParseError("multiplication row too short", lineno);
                mul.push_back(x);
            }
            std::string extra;
            if (rs >> extra) throw ParseError("multiplication row too long", lineno);
            ++rows;
        }
    }
    if (n < 0) throw ParseError("missing 'group' header", lineno);
    if (rows != n) throw ParseError("multiplication table incomplete", lineno);
    for (std::size_t i = 0; i < vm.size(); ++i)
        if (vm[i] < 0)
            throw ParseError("missing action of element " + std::to_string(i / k.num_vertices()) + " on vertex " +
                                 std::to_string(i % k.num_vertices()),
                             lineno);
    try {
        FiniteGroup g(n, mul, name);
        return GroupAction(g, k, vm);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), lineno);
    }
}

inline std::string format_action(const GroupAction& a) {
    std::ostringstream os;
    const auto& g = a.group();
    os << "group " << g.name() << " order=" << g.order() << "\n";
    for (int x = 0; x < g.order(); ++x) {
        for (int y = 0; y < g.order(); ++y) os << (y ? " " : "") << g.mul(x, y);
        os << "\n";
    }
    for (int x = 0; x < g.order(); ++x)
        for (int v = 0; v < a.complex().num_vertices(); ++v) os << "act " << x << " " << v << " -> " << a.act(x, v) << "\n";
    return os.str();
}

}  // namespace dchar
