#pragma once

#include "dchar/diff_char.hpp"

#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dchar {

/// Holonomy/phase presentation of an equivariant circle bundle with
/// connection: A on edges, phi on arrows (g, v), integer Chern deficits on
/// faces. A and phi are kept in [0, 1).
struct DiscreteBundle {
    std::vector<Rational> A;             // edges, stored orientation
    std::vector<Rational> phi;           // g * |V| + v
    std::vector<std::int64_t> chern;     // faces

    friend bool operator==(const DiscreteBundle&, const DiscreteBundle&) = default;
};

inline DiscreteBundle trivial_bundle(const GroupAction& a) {
    const auto& k = a.complex();
    return DiscreteBundle{std::vector<Rational>(k.num_edges(), Rational(0)),
                          std::vector<Rational>(static_cast<std::size_t>(a.group().order()) * k.num_vertices(), Rational(0)),
                          std::vector<std::int64_t>(k.num_faces(), 0)};
}

inline void reduce(DiscreteBundle& b) {
    for (auto& x : b.A) x = frac(x);
    for (auto& x : b.phi) x = frac(x);
}

/// First violated bundle invariant, or nothing.
inline std::optional<std::string> bundle_violation(const GroupAction& a, const DiscreteBundle& b) {
    const auto& k = a.complex();
    const auto& g = a.group();
    const int nv = k.num_vertices();
    if (b.A.size() != static_cast<std::size_t>(k.num_edges()) || b.chern.size() != static_cast<std::size_t>(k.num_faces()) ||
        b.phi.size() != static_cast<std::size_t>(g.order()) * nv)
        return "bundle shape does not match the action";
    for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y)
            for (int v = 0; v < nv; ++v) {
                const Rational lhs = b.phi[static_cast<std::size_t>(g.mul(x, y)) * nv + v];
                const Rational rhs = b.phi[static_cast<std::size_t>(x) * nv + a.act(y, v)] + b.phi[static_cast<std::size_t>(y) * nv + v];
                if (!is_integer(lhs - rhs))
                    return "phase cocycle law fails at (g" + std::to_string(x) + ", g" + std::to_string(y) + ", v" +
                           std::to_string(v) + "): " + to_string(frac(lhs)) + " != " + to_string(frac(rhs));
            }
    return std::nullopt;
}

/// omega(S) = (holonomy of A around S, lifted to [0, 1)) + chern(S).
inline std::vector<Rational> curvature(const SimplicialComplex& k, const DiscreteBundle& b) {
    auto hol = coboundary_values(k, 1, b.A);
    for (int i = 0; i < k.num_faces(); ++i) hol[i] = frac(hol[i]) + Rational(b.chern.at(i));
    return hol;
}

inline Rational holonomy(const GroupAction& a, const DiscreteBundle& b, const GroupoidCycle& c) {
    return frac(evaluate(a, b.A, b.phi, c));
}

/// A(e) - A(g.e) + phi(g, head) - phi(g, tail), mod 1.
inline Rational rectangle_holonomy(const GroupAction& a, const DiscreteBundle& b, int g, int edge) {
    return holonomy(a, b, rectangle_boundary(a, g, edge));
}

/// A -> A + d gamma, phi(g, v) -> phi(g, v) + gamma(g v) - gamma(v).
inline DiscreteBundle gauge_transform(const GroupAction& a, const DiscreteBundle& b, const std::vector<Rational>& gamma) {
    const auto& k = a.complex();
    const int nv = k.num_vertices();
    if (gamma.size() != static_cast<std::size_t>(nv)) throw std::invalid_argument("gauge has the wrong size");
    DiscreteBundle out = b;
    const auto dg = coboundary_values(k, 0, gamma);
    for (int e = 0; e < k.num_edges(); ++e) out.A[e] += dg[e];
    for (int g = 0; g < a.group().order(); ++g)
        for (int v = 0; v < nv; ++v) out.phi[static_cast<std::size_t>(g) * nv + v] += gamma[a.act(g, v)] - gamma[v];
    reduce(out);
    return out;
}

/// Gauge that kills A on the spanning forest.
inline std::vector<Rational> tree_gauge(const GroupAction& a, const DiscreteBundle& b, const GroupoidSkeleton& sk) {
    const auto& k = a.complex();
    std::vector<Rational> gamma(k.num_vertices(), Rational(0));
    for (int w : sk.bfs_order) {
        const int u = sk.parent[w];
        if (u < 0) continue;
        auto o = k.find_edge(u, w);
        gamma[w] = gamma[u] - Rational(o.sign) * b.A[o.index];
    }
    return gamma;
}

/// DCh: the differential cocycle of a bundle. h is the lift of A to [0, 1)
/// after the spanning-tree gauge, f the lift of phi, alpha the rectangle
/// holonomy lifted to [-1/2, 1/2). Throws std::domain_error when that lift
/// is not closed.
inline DC21Cochain dch(const GroupAction& a, const DiscreteBundle& bundle) {
    if (auto v = bundle_violation(a, bundle)) throw std::domain_error("invalid bundle: " + *v);
    const auto& k = a.complex();
    const auto sk = groupoid_skeleton(a);
    const auto b = gauge_transform(a, bundle, tree_gauge(a, bundle, sk));
    DC21Cochain x = zero_dc21(a);
    x.h = b.A;
    x.f = b.phi;
    x.omega = curvature(k, b);
    const auto dh = coboundary_values(k, 1, x.h);
    for (int i = 0; i < k.num_faces(); ++i) {
        const Rational c = x.omega[i] - dh[i];
        if (!is_integer(c)) throw std::logic_error("curvature lift is not integral against dh");
        x.c[i] = c.numerator();
    }
    for (int g = 0; g < a.group().order(); ++g)
        for (int e = 0; e < k.num_edges(); ++e)
            x.alpha[static_cast<std::size_t>(g) * k.num_edges() + e] = centered_frac(rectangle_holonomy(a, b, g, e));
    const auto df = detail::dgamma(a, 1, 0, x.f);
    const auto dlh = detail::delta(a, 0, 1, x.h);
    for (std::size_t i = 0; i < x.b.size(); ++i) {
        const Rational r = x.alpha[i] - df[i] - dlh[i];
        if (!is_integer(r)) throw std::logic_error("rectangle lift is not integral against df + delta h");
        x.b[i] = r.numerator();
    }
    if (auto chk = is_cocycle(a, x); !chk)
        throw std::domain_error("invariant violation: windowed alpha lift is not closed (" + chk.component + " at " + chk.location + ")");
    return x;
}

/// Preq: A = h mod 1, phi = f mod 1, chern = omega - lift(dh).
inline DiscreteBundle preq(const GroupAction& a, const DC21Cochain& x) {
    if (auto chk = is_cocycle(a, x); !chk) throw std::invalid_argument("preq on a non-cocycle: " + chk.component);
    const auto& k = a.complex();
    DiscreteBundle b{x.h, x.f, std::vector<std::int64_t>(k.num_faces(), 0)};
    reduce(b);
    const auto hol = coboundary_values(k, 1, b.A);
    for (int i = 0; i < k.num_faces(); ++i) {
        const Rational c = x.omega[i] - frac(hol[i]);
        if (!is_integer(c)) throw std::logic_error("curvature is not congruent to the holonomy");
        b.chern[i] = c.numerator();
    }
    return b;
}

struct BasicReport {
    bool basic = true;
    int g = -1;
    int edge = -1;
    Rational holonomy{0};
};

/// Basic iff every rectangle holonomy vanishes, i.e. alpha = 0.
inline BasicReport is_basic(const GroupAction& a, const DiscreteBundle& b) {
    for (int g = 0; g < a.group().order(); ++g)
        for (int e = 0; e < a.complex().num_edges(); ++e) {
            const auto h = rectangle_holonomy(a, b, g, e);
            if (h != 0) return BasicReport{false, g, e, h};
        }
    return {};
}

/// Equivariant gauge with b2 = b1 transformed, if any.
inline std::optional<std::vector<Rational>> gauge_equivalent(const GroupAction& a, const DiscreteBundle& b1, const DiscreteBundle& b2) {
    const auto& k = a.complex();
    if (curvature(k, b1) != curvature(k, b2)) return std::nullopt;
    const auto d0 = total_matrix(a, 0, 1);  // (d gamma, -delta gamma)
    std::vector<Rational> rhs;
    for (int e = 0; e < k.num_edges(); ++e) rhs.push_back(b2.A[e] - b1.A[e]);
    for (std::size_t i = 0; i < b1.phi.size(); ++i) rhs.push_back(b2.phi[i] - b1.phi[i]);
    const auto sol = solve_mod_one(d0, rhs);
    if (!sol.solution) return std::nullopt;
    auto gamma = *sol.solution;
    for (auto& x : gamma) x = frac(x);
    auto chk1 = b1, chk2 = b2;
    reduce(chk1);
    reduce(chk2);
    if (gauge_transform(a, chk1, gamma) != chk2) throw std::logic_error("gauge witness failed verification");
    return gamma;
}

/// Finite groups have no infinitesimal generators: mu = 0, so basic and
/// invariant coincide. Invariance is tested against the generators only.
struct MomentReport {
    bool mu_zero = true;
    bool basic = false;
    bool invariant = false;
};

inline MomentReport finite_moment(const GroupAction& a, const DiscreteBundle& b) {
    MomentReport r;
    r.basic = is_basic(a, b).basic;
    r.invariant = true;
    for (int s : a.group().generators())
        for (int e = 0; e < a.complex().num_edges() && r.invariant; ++e)
            if (rectangle_holonomy(a, b, s, e) != 0) r.invariant = false;
    return r;
}

// ---------------------------------------------------------------------------
// Text format
//
//   edge v0 v1 = p/q
//   phase g v = p/q
//   chern f0 f1 f2 = k
//
// Unlisted entries are zero. Edge and face values refer to the listed
// vertex order and are converted to the stored orientation.

inline DiscreteBundle parse_bundle(std::istream& in, const GroupAction& a) {
    const auto& k = a.complex();
    auto b = trivial_bundle(a);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto p = line.find('#'); p != std::string::npos) line.resize(p);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        auto ints = [&](std::size_t n) {
            if (toks.size() != n + 2 || toks[n] != "=") throw ParseError("expected '" + word + " ... = value'", lineno);
            std::vector<int> v;
            for (std::size_t i = 0; i < n; ++i) {
                try {
                    std::size_t used = 0;
                    v.push_back(std::stoi(toks[i], &used));
                    if (used != toks[i].size()) throw std::invalid_argument(toks[i]);
                } catch (const std::exception&) {
                    throw ParseError("bad integer '" + toks[i] + "'", lineno);
                }
            }
            return v;
        };
        auto value = [&]() {
            try {
                return parse_rational(toks.back());
            } catch (const std::exception& e) {
                throw ParseError(e.what(), lineno);
            }
        };
        if (word == "edge") {
            auto v = ints(2);
            auto o = k.find_edge(v[0], v[1]);
            if (o.index < 0) throw ParseError("no edge " + toks[0] + " " + toks[1], lineno);
            b.A[o.index] = frac(Rational(o.sign) * value());
        } else if (word == "phase") {
            auto v = ints(2);
            if (v[0] < 0 || v[0] >= a.group().order() || v[1] < 0 || v[1] >= k.num_vertices())
                throw ParseError("phase index out of range", lineno);
            b.phi[static_cast<std::size_t>(v[0]) * k.num_vertices() + v[1]] = frac(value());
        } else if (word == "chern") {
            auto v = ints(3);
            auto o = k.find_face(v[0], v[1], v[2]);
            if (o.index < 0) throw ParseError("no face " + toks[0] + " " + toks[1] + " " + toks[2], lineno);
            const auto c = value();
            if (!is_integer(c)) throw ParseError("chern value must be an integer", lineno);
            b.chern[o.index] = o.sign * c.numerator();
        } else {
            throw ParseError("unknown keyword '" + word + "'", lineno);
        }
    }
    if (auto v = bundle_violation(a, b)) throw ParseError(*v, lineno);
    return b;
}

inline std::string format_bundle(const GroupAction& a, const DiscreteBundle& b) {
    const auto& k = a.complex();
    std::ostringstream os;
    for (int e = 0; e < k.num_edges(); ++e) os << "edge " << k.edge(e)[0] << " " << k.edge(e)[1] << " = " << to_string(b.A[e]) << "\n";
    for (int g = 0; g < a.group().order(); ++g)
        for (int v = 0; v < k.num_vertices(); ++v)
            os << "phase " << g << " " << v << " = " << to_string(b.phi[static_cast<std::size_t>(g) * k.num_vertices() + v]) << "\n";
    for (int f = 0; f < k.num_faces(); ++f)
        os << "chern " << k.face(f)[0] << " " << k.face(f)[1] << " " << k.face(f)[2] << " = " << b.chern[f] << "\n";
    return os.str();
}

/// Octahedron bundle with curvature 1/8 on every face, basic for the polar
/// rotations: A = 1/8 on equator edges, A(i, 5) = -i/4, phases of the
/// quarter turn 3/4 at the south pole and 0 elsewhere.
inline DiscreteBundle uniform_octahedron_bundle(const GroupAction& a) {
    const auto& k = a.complex();
    if (k.name() != "octahedron") throw std::invalid_argument("uniform_octahedron_bundle needs the octahedron");
    auto b = trivial_bundle(a);
    for (int i = 1; i <= 4; ++i) {
        auto eq = k.find_edge(i, i % 4 + 1);
        b.A[eq.index] = frac(Rational(eq.sign, 8));
        auto s = k.find_edge(i, 5);
        b.A[s.index] = frac(Rational(-s.sign * (i - 1), 4));
    }
    for (int g = 0; g < a.group().order(); ++g) {
        // quarter turns performed by g, read off from vertex 1
        const int quarter = (a.act(g, 1) - 1 + 4) % 4;
        b.phi[static_cast<std::size_t>(g) * k.num_vertices() + 5] = frac(Rational(3 * quarter, 4));
    }
    return b;
}

}  // namespace dchar
