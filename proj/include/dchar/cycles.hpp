#pragma once

#include "dchar/nerve.hpp"

#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dchar {

/// One step of a hybrid path: either an edge of M traversed from `from` to
/// `to`, or an arrow (g, v) running v -> g.v (sign +1) or back (sign -1).
struct CycleStep {
    enum Kind { Edge, Arrow } kind = Edge;
    int from = 0;
    int to = 0;
    int g = 0;     // arrows only
    int base = 0;  // arrows only: the source vertex v of (g, v)
    int sign = 1;  // arrows only

    static CycleStep edge(int u, int w) { return CycleStep{Edge, u, w, 0, 0, 1}; }
    static CycleStep arrow(const GroupAction& a, int g, int v, int sign = 1) {
        const int gv = a.act(g, v);
        return sign > 0 ? CycleStep{Arrow, v, gv, g, v, 1} : CycleStep{Arrow, gv, v, g, v, -1};
    }
    friend bool operator==(const CycleStep&, const CycleStep&) = default;
};

/// Formal 1-chain on M and the arrow space, stored as the list of steps.
struct GroupoidCycle {
    std::vector<CycleStep> steps;

    /// Consecutive steps share endpoints, cyclically.
    bool closed() const {
        if (steps.empty()) return true;
        for (std::size_t i = 0; i < steps.size(); ++i)
            if (steps[i].to != steps[(i + 1) % steps.size()].from) return false;
        return true;
    }
    void append(const GroupoidCycle& other) { steps.insert(steps.end(), other.steps.begin(), other.steps.end()); }
    GroupoidCycle reversed() const {
        GroupoidCycle r;
        for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
            CycleStep s = *it;
            std::swap(s.from, s.to);
            if (s.kind == CycleStep::Arrow) s.sign = -s.sign;
            r.steps.push_back(s);
        }
        return r;
    }
};

/// Formal boundary: sum over steps of (target - source), as an integer
/// 0-chain on the vertices. Zero exactly when the steps form a 1-cycle.
inline Chain cycle_boundary(const SimplicialComplex& k, const GroupoidCycle& c) {
    Chain out = zero_chain(k, 0);
    for (const auto& s : c.steps) {
        out.coeffs.at(s.to) += 1;
        out.coeffs.at(s.from) -= 1;
    }
    return out;
}

/// Validates a step against the action (edge exists, arrow endpoints agree).
inline void check_step(const GroupAction& a, const CycleStep& s) {
    if (s.kind == CycleStep::Edge) {
        if (a.complex().find_edge(s.from, s.to).index < 0)
            throw std::invalid_argument("step " + std::to_string(s.from) + "->" + std::to_string(s.to) + " is not an edge");
    } else {
        const int gv = a.act(s.g, s.base);
        const bool ok = s.sign > 0 ? (s.from == s.base && s.to == gv) : (s.from == gv && s.to == s.base);
        if (!ok) throw std::invalid_argument("arrow step endpoints do not match the action");
    }
}

/// sum h(edges) + sum +-f(arrows). h is indexed by edge, f by g * |V| + v.
inline Rational evaluate(const GroupAction& a, const std::vector<Rational>& h, const std::vector<Rational>& f,
                         const GroupoidCycle& c) {
    if (!cycle_boundary(a.complex(), c).is_zero()) throw std::invalid_argument("evaluate on a chain with nonzero boundary");
    const auto& k = a.complex();
    Rational r(0);
    for (const auto& s : c.steps) {
        check_step(a, s);
        if (s.kind == CycleStep::Edge) {
            auto o = k.find_edge(s.from, s.to);
            r += Rational(o.sign) * h.at(o.index);
        } else {
            r += Rational(s.sign) * f.at(static_cast<std::size_t>(s.g) * k.num_vertices() + s.base);
        }
    }
    return r;
}

/// Deterministic spanning data of the action groupoid: BFS forests of M,
/// the quotient graph of M-components under the group generators, and the
/// inertia basepoints.
struct GroupoidSkeleton {
    std::vector<int> group_generators;
    // M forest
    std::vector<int> component;     // vertex -> M-component
    std::vector<int> roots;         // M-component -> root vertex (smallest)
    std::vector<int> parent;        // vertex -> parent vertex (-1 at roots)
    std::vector<int> bfs_order;     // vertices, parents before children
    std::vector<char> tree_edge;    // edge -> in forest
    // quotient graph: M-component C -> parent (generator s, component P) with s.P = C
    std::vector<int> q_parent;      // -1 at roots of groupoid components
    std::vector<int> q_parent_gen;
    std::vector<int> q_order;
    std::vector<int> gcomp;         // M-component -> groupoid component
    std::vector<int> gcomp_base;    // groupoid component -> base M-component
    // (generator index, M-component) pairs that are quotient tree edges
    std::vector<std::vector<char>> q_tree;  // [generator index][component]
};

inline GroupoidSkeleton groupoid_skeleton(const GroupAction& a) {
    const auto& k = a.complex();
    const int nv = k.num_vertices();
    GroupoidSkeleton sk;
    sk.group_generators = a.group().generators();
    sk.component.assign(nv, -1);
    sk.parent.assign(nv, -1);
    sk.tree_edge.assign(k.num_edges(), 0);
    std::vector<std::vector<std::pair<int, int>>> adj(nv);  // (neighbor, edge)
    for (int e = 0; e < k.num_edges(); ++e) {
        adj[k.edge(e)[0]].push_back({k.edge(e)[1], e});
        adj[k.edge(e)[1]].push_back({k.edge(e)[0], e});
    }
    for (auto& l : adj) std::sort(l.begin(), l.end());
    for (int r = 0; r < nv; ++r) {
        if (sk.component[r] >= 0) continue;
        const int c = static_cast<int>(sk.roots.size());
        sk.roots.push_back(r);
        sk.component[r] = c;
        std::deque<int> q{r};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            sk.bfs_order.push_back(u);
            for (auto [w, e] : adj[u])
                if (sk.component[w] < 0) {
                    sk.component[w] = c;
                    sk.parent[w] = u;
                    sk.tree_edge[e] = 1;
                    q.push_back(w);
                }
        }
    }
    const int nc = static_cast<int>(sk.roots.size());
    const int ng = static_cast<int>(sk.group_generators.size());
    sk.q_parent.assign(nc, -1);
    sk.q_parent_gen.assign(nc, -1);
    sk.gcomp.assign(nc, -1);
    sk.q_tree.assign(ng, std::vector<char>(nc, 0));
    for (int c0 = 0; c0 < nc; ++c0) {
        if (sk.gcomp[c0] >= 0) continue;
        const int gc = static_cast<int>(sk.gcomp_base.size());
        sk.gcomp_base.push_back(c0);
        sk.gcomp[c0] = gc;
        std::deque<int> q{c0};
        while (!q.empty()) {
            int c = q.front();
            q.pop_front();
            sk.q_order.push_back(c);
            for (int si = 0; si < ng; ++si) {
                const int d = sk.component[a.act(sk.group_generators[si], sk.roots[c])];
                if (sk.gcomp[d] < 0) {
                    sk.gcomp[d] = gc;
                    sk.q_parent[d] = c;
                    sk.q_parent_gen[d] = si;
                    sk.q_tree[si][c] = 1;
                    q.push_back(d);
                }
            }
        }
    }
    return sk;
}

/// Edge path in the forest from v up to its root.
inline GroupoidCycle path_to_root(const GroupoidSkeleton& sk, int v) {
    GroupoidCycle p;
    while (sk.parent[v] >= 0) {
        p.steps.push_back(CycleStep::edge(v, sk.parent[v]));
        v = sk.parent[v];
    }
    return p;
}

/// Hybrid path from the root of M-component c to the root of the base
/// component of its groupoid component, along quotient tree arrows.
inline GroupoidCycle path_to_base(const GroupAction& a, const GroupoidSkeleton& sk, int c) {
    GroupoidCycle p;
    while (sk.q_parent[c] >= 0) {
        const int par = sk.q_parent[c];
        const int s = sk.group_generators[sk.q_parent_gen[c]];
        const int landing = a.act(s, sk.roots[par]);  // lies in c
        p.append(path_to_root(sk, landing).reversed());
        p.steps.push_back(CycleStep::arrow(a, s, sk.roots[par], -1));
        c = par;
    }
    return p;
}

/// Generator of Z_1 together with its role in the reconstruction.
struct CycleGenerator {
    enum Kind { TreeLoop, Inertia, Closing } kind = TreeLoop;
    int edge = -1;       // TreeLoop: the non-forest edge
    int element = -1;    // Inertia: group element; Closing: generator
    int vertex = -1;     // Inertia: basepoint; Closing: root of the component
    int component = -1;  // Closing: M-component
    GroupoidCycle cycle;

    std::string label() const {
        switch (kind) {
            case TreeLoop: return "loop(e" + std::to_string(edge) + ")";
            case Inertia: return "inertia(g" + std::to_string(element) + "@v" + std::to_string(vertex) + ")";
            case Closing: return "closing(g" + std::to_string(element) + "@C" + std::to_string(component) + ")";
        }
        return "?";
    }
};

/// Generating set of Z_1(M <= Gamma) modulo conditions (2)-(4): one loop per
/// non-forest edge, generators of the inertia group at each groupoid
/// component's basepoint, and one closing-arrow cycle per (generator,
/// component) outside the quotient tree.
inline std::vector<CycleGenerator> cycle_generators(const GroupAction& a, const GroupoidSkeleton& sk) {
    const auto& k = a.complex();
    std::vector<CycleGenerator> out;
    for (int e = 0; e < k.num_edges(); ++e) {
        if (sk.tree_edge[e]) continue;
        const int u = k.edge(e)[0], w = k.edge(e)[1];
        CycleGenerator g;
        g.kind = CycleGenerator::TreeLoop;
        g.edge = e;
        g.cycle = path_to_root(sk, u).reversed();
        g.cycle.steps.push_back(CycleStep::edge(u, w));
        g.cycle.append(path_to_root(sk, w));
        out.push_back(std::move(g));
    }
    for (std::size_t gc = 0; gc < sk.gcomp_base.size(); ++gc) {
        const int p = sk.roots[sk.gcomp_base[gc]];
        const auto in = a.inertia(p);
        for (int h : a.group().generators_of(in.elements)) {
            CycleGenerator g;
            g.kind = CycleGenerator::Inertia;
            g.element = h;
            g.vertex = p;
            g.cycle.steps.push_back(CycleStep::arrow(a, h, p));
            out.push_back(std::move(g));
        }
    }
    for (int si = 0; si < static_cast<int>(sk.group_generators.size()); ++si) {
        const int s = sk.group_generators[si];
        for (int c = 0; c < static_cast<int>(sk.roots.size()); ++c) {
            if (sk.q_tree[si][c]) continue;
            const int r = sk.roots[c];
            const int landing = a.act(s, r);
            const int d = sk.component[landing];
            CycleGenerator g;
            g.kind = CycleGenerator::Closing;
            g.element = s;
            g.vertex = r;
            g.component = c;
            g.cycle.steps.push_back(CycleStep::arrow(a, s, r));
            g.cycle.append(path_to_root(sk, landing));
            g.cycle.append(path_to_base(a, sk, d));
            g.cycle.append(path_to_base(a, sk, c).reversed());
            out.push_back(std::move(g));
        }
    }
    return out;
}

inline std::vector<CycleGenerator> cycle_generators(const GroupAction& a) { return cycle_generators(a, groupoid_skeleton(a)); }

/// Boundary of the rectangle (g, e) for e = u -> w: e, then (g, w), then
/// g.e backwards, then (g, u) backwards.
inline GroupoidCycle rectangle_boundary(const GroupAction& a, int g, int edge) {
    const auto& e = a.complex().edge(edge);
    GroupoidCycle c;
    c.steps.push_back(CycleStep::edge(e[0], e[1]));
    c.steps.push_back(CycleStep::arrow(a, g, e[1]));
    c.steps.push_back(CycleStep::edge(a.act(g, e[1]), a.act(g, e[0])));
    c.steps.push_back(CycleStep::arrow(a, g, e[0], -1));
    return c;
}

/// Boundary loop of a face in its stored orientation.
inline GroupoidCycle face_boundary(const SimplicialComplex& k, int face) {
    const auto& f = k.face(face);
    GroupoidCycle c;
    c.steps.push_back(CycleStep::edge(f[0], f[1]));
    c.steps.push_back(CycleStep::edge(f[1], f[2]));
    c.steps.push_back(CycleStep::edge(f[2], f[0]));
    return c;
}

}  // namespace dchar
