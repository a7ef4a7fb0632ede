#pragma once

#include "dchar/rational.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dchar {

/// Error raised by file loaders; carries the 1-based line number.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

/// Index of a simplex together with the sign of a given vertex ordering
/// relative to the stored orientation.
struct Oriented {
    int index = -1;
    int sign = 0;
};

namespace detail {
// sorts in place and returns the permutation parity (+1 / -1)
template <std::size_t N>
int sort_with_sign(std::array<int, N>& a) {
    int sign = 1;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j + 1 < N - i; ++j)
            if (a[j] > a[j + 1]) {
                std::swap(a[j], a[j + 1]);
                sign = -sign;
            }
    return sign;
}
}  // namespace detail

/// Finite oriented simplicial complex of dimension <= 2 on vertices 0..n-1.
/// Each edge and face is stored with the vertex order it was declared in;
/// that order is its orientation.
class SimplicialComplex {
  public:
    SimplicialComplex() = default;

    explicit SimplicialComplex(int num_vertices, std::string name = "complex")
        : name_(std::move(name)), nv_(num_vertices) {
        if (num_vertices < 0) throw std::invalid_argument("negative vertex count");
    }

    /// Adds an edge with the given orientation; a no-op if already present.
    Oriented add_edge(int a, int b) {
        check_vertex(a);
        check_vertex(b);
        if (a == b) throw std::invalid_argument("degenerate edge");
        if (auto o = find_edge(a, b); o.index >= 0) return o;
        std::array<int, 2> key{a, b};
        detail::sort_with_sign(key);
        edges_.push_back({a, b});
        edge_lookup_[key] = static_cast<int>(edges_.size()) - 1;
        return {static_cast<int>(edges_.size()) - 1, 1};
    }

    /// Adds a face with the given orientation together with its missing edges.
    Oriented add_face(int a, int b, int c) {
        check_vertex(a);
        check_vertex(b);
        check_vertex(c);
        if (a == b || b == c || a == c) throw std::invalid_argument("degenerate face");
        if (auto o = find_face(a, b, c); o.index >= 0) return o;
        add_edge(a, b);
        add_edge(b, c);
        add_edge(a, c);
        std::array<int, 3> key{a, b, c};
        detail::sort_with_sign(key);
        faces_.push_back({a, b, c});
        face_lookup_[key] = static_cast<int>(faces_.size()) - 1;
        return {static_cast<int>(faces_.size()) - 1, 1};
    }

    const std::string& name() const { return name_; }
    int num_vertices() const { return nv_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    int num_faces() const { return static_cast<int>(faces_.size()); }
    int count(int degree) const {
        switch (degree) {
            case 0: return nv_;
            case 1: return num_edges();
            case 2: return num_faces();
            default: return 0;
        }
    }
    int dimension() const { return num_faces() ? 2 : num_edges() ? 1 : 0; }

    const std::array<int, 2>& edge(int i) const { return edges_.at(i); }
    const std::array<int, 3>& face(int i) const { return faces_.at(i); }
    const std::vector<std::array<int, 2>>& edges() const { return edges_; }
    const std::vector<std::array<int, 3>>& faces() const { return faces_; }

    /// Edge spanned by (a, b); sign is +1 when a->b agrees with the stored orientation.
    Oriented find_edge(int a, int b) const {
        std::array<int, 2> key{a, b};
        detail::sort_with_sign(key);
        auto it = edge_lookup_.find(key);
        if (it == edge_lookup_.end()) return {};
        return {it->second, edges_[it->second][0] == a ? 1 : -1};
    }

    Oriented find_face(int a, int b, int c) const {
        std::array<int, 3> key{a, b, c};
        const int s1 = detail::sort_with_sign(key);
        auto it = face_lookup_.find(key);
        if (it == face_lookup_.end()) return {};
        auto stored = faces_[it->second];
        const int s2 = detail::sort_with_sign(stored);
        return {it->second, s1 * s2};
    }

    /// Oriented lookup of a simplex of the given degree from its vertex list.
    Oriented find(int degree, const int* v) const {
        switch (degree) {
            case 0: return (v[0] >= 0 && v[0] < nv_) ? Oriented{v[0], 1} : Oriented{};
            case 1: return find_edge(v[0], v[1]);
            case 2: return find_face(v[0], v[1], v[2]);
            default: return {};
        }
    }

    /// Vertices of simplex i of the given degree, in stored orientation.
    std::vector<int> vertices_of(int degree, int i) const {
        switch (degree) {
            case 0: return {i};
            case 1: return {edges_.at(i)[0], edges_.at(i)[1]};
            case 2: return {faces_.at(i)[0], faces_.at(i)[1], faces_.at(i)[2]};
            default: throw std::invalid_argument("degree out of range");
        }
    }

    /// Boundary faces of simplex i (degree >= 1) as oriented (index, sign) pairs.
    std::vector<Oriented> boundary_of(int degree, int i) const {
        if (degree == 1) {
            const auto& e = edges_.at(i);
            return {{e[1], 1}, {e[0], -1}};
        }
        if (degree == 2) {
            const auto& f = faces_.at(i);
            auto e0 = find_edge(f[1], f[2]);
            auto e1 = find_edge(f[0], f[2]);
            auto e2 = find_edge(f[0], f[1]);
            return {{e0.index, e0.sign}, {e1.index, -e1.sign}, {e2.index, e2.sign}};
        }
        throw std::invalid_argument("boundary of a degree-0 simplex");
    }

    /// Validates the structural invariants; throws std::logic_error on failure.
    void validate() const {
        for (int i = 0; i < num_faces(); ++i)
            for (auto o : boundary_of(2, i))
                if (o.index < 0) throw std::logic_error("face with an unlisted edge");
    }

  private:
    void check_vertex(int v) const {
        if (v < 0 || v >= nv_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    }

    std::string name_ = "complex";
    int nv_ = 0;
    std::vector<std::array<int, 2>> edges_;
    std::vector<std::array<int, 3>> faces_;
    std::map<std::array<int, 2>, int> edge_lookup_;
    std::map<std::array<int, 3>, int> face_lookup_;
};

/// Integer chain of a fixed degree.
struct Chain {
    int degree = 0;
    std::vector<std::int64_t> coeffs;

    bool is_zero() const {
        return std::all_of(coeffs.begin(), coeffs.end(), [](std::int64_t c) { return c == 0; });
    }
    friend bool operator==(const Chain&, const Chain&) = default;
};

enum class Ring { Z, Q, RZ };

/// Cochain with exact rational values. RZ values are kept in [0, 1); Z values
/// are integral.
struct Cochain {
    int degree = 0;
    Ring ring = Ring::Q;
    std::vector<Rational> values;

    void normalize() {
        if (ring == Ring::RZ)
            for (auto& v : values) v = frac(v);
        if (ring == Ring::Z)
            for (auto& v : values)
                if (!is_integer(v)) throw std::domain_error("non-integral value in a Z-cochain");
    }
    bool is_zero() const {
        return std::all_of(values.begin(), values.end(), [](const Rational& v) { return v == 0; });
    }
    friend bool operator==(const Cochain&, const Cochain&) = default;
};

inline Chain zero_chain(const SimplicialComplex& k, int degree) {
    return Chain{degree, std::vector<std::int64_t>(k.count(degree), 0)};
}

inline Cochain zero_cochain(const SimplicialComplex& k, int degree, Ring ring = Ring::Q) {
    return Cochain{degree, ring, std::vector<Rational>(k.count(degree), Rational(0))};
}

inline Chain boundary(const SimplicialComplex& k, const Chain& c) {
    if (c.degree < 1) throw std::invalid_argument("boundary of a 0-chain");
    if (c.degree > 2) throw std::invalid_argument("chain degree above 2");
    if (static_cast<int>(c.coeffs.size()) != k.count(c.degree)) throw std::invalid_argument("chain size mismatch");
    Chain out = zero_chain(k, c.degree - 1);
    for (int i = 0; i < k.count(c.degree); ++i) {
        if (c.coeffs[i] == 0) continue;
        for (auto o : k.boundary_of(c.degree, i)) out.coeffs[o.index] += o.sign * c.coeffs[i];
    }
    return out;
}

/// Coboundary; values in RZ stay reduced.
inline Cochain coboundary(const SimplicialComplex& k, const Cochain& c) {
    if (c.degree >= 2) throw std::invalid_argument("coboundary of a top-degree cochain");
    if (c.degree < 0) throw std::invalid_argument("negative cochain degree");
    if (static_cast<int>(c.values.size()) != k.count(c.degree)) throw std::invalid_argument("cochain size mismatch");
    Cochain out = zero_cochain(k, c.degree + 1, c.ring);
    for (int i = 0; i < k.count(c.degree + 1); ++i)
        for (auto o : k.boundary_of(c.degree + 1, i)) out.values[i] += Rational(o.sign) * c.values[o.index];
    if (c.ring == Ring::RZ) out.normalize();
    return out;
}

/// <c, S>; reduced mod 1 for RZ cochains.
inline Rational pair(const Cochain& c, const Chain& s) {
    if (c.degree != s.degree) throw std::invalid_argument("degree mismatch in pairing");
    if (c.values.size() != s.coeffs.size()) throw std::invalid_argument("size mismatch in pairing");
    Rational r(0);
    for (std::size_t i = 0; i < s.coeffs.size(); ++i)
        if (s.coeffs[i] != 0) r += Rational(s.coeffs[i]) * c.values[i];
    return c.ring == Ring::RZ ? frac(r) : r;
}

/// Raw coboundary on a value vector (Q arithmetic, no reduction).
inline std::vector<Rational> coboundary_values(const SimplicialComplex& k, int degree, const std::vector<Rational>& v) {
    std::vector<Rational> out(k.count(degree + 1), Rational(0));
    for (int i = 0; i < k.count(degree + 1); ++i)
        for (auto o : k.boundary_of(degree + 1, i)) out[i] += Rational(o.sign) * v[o.index];
    return out;
}

// ---------------------------------------------------------------------------
// Standard complexes

/// Octahedron: 0 north, 1..4 equator counterclockwise seen from the north,
/// 5 south. Faces are oriented outward.
inline SimplicialComplex octahedron() {
    SimplicialComplex k(6, "octahedron");
    for (int i = 1; i <= 4; ++i) k.add_edge(0, i);
    for (int i = 1; i <= 4; ++i) k.add_edge(i, i % 4 + 1);
    for (int i = 1; i <= 4; ++i) k.add_edge(i, 5);
    for (int i = 1; i <= 4; ++i) k.add_face(0, i, i % 4 + 1);
    for (int i = 1; i <= 4; ++i) k.add_face(5, i % 4 + 1, i);
    return k;
}

/// The 7-vertex torus: faces {i, i+1, i+3} and {i, i+2, i+3} mod 7.
inline SimplicialComplex seven_vertex_torus() {
    SimplicialComplex k(7, "torus7");
    for (int i = 0; i < 7; ++i) {
        k.add_face(i, (i + 1) % 7, (i + 3) % 7);
        k.add_face(i, (i + 3) % 7, (i + 2) % 7);
    }
    return k;
}

inline SimplicialComplex triangle() {
    SimplicialComplex k(3, "triangle");
    k.add_face(0, 1, 2);
    return k;
}

/// Boundary of a triangle: a circle with 3 vertices and 3 edges.
inline SimplicialComplex triangle_circle() {
    SimplicialComplex k(3, "circle3");
    k.add_edge(0, 1);
    k.add_edge(1, 2);
    k.add_edge(2, 0);
    return k;
}

inline SimplicialComplex point() { return SimplicialComplex(1, "point"); }

/// Integer matrix entries of d: C^q -> C^{q+1} as (row, col, sign) triples.
inline std::vector<std::array<int, 3>> coboundary_entries(const SimplicialComplex& k, int q) {
    std::vector<std::array<int, 3>> out;
    if (q < 0 || q >= 2) return out;
    for (int i = 0; i < k.count(q + 1); ++i)
        for (auto o : k.boundary_of(q + 1, i)) out.push_back({i, o.index, o.sign});
    return out;
}

// ---------------------------------------------------------------------------
// Text format
//
//   complex <name> dim=<d>
//   simplex v0 [v1 [v2]]
//
// Vertex labels are 0..n-1; n is one more than the largest label used.

inline SimplicialComplex parse_complex(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool header = false;
    std::string name;
    int dim = -1;
    std::vector<std::pair<std::vector<int>, int>> simplices;
    int max_vertex = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto p = line.find('#'); p != std::string::npos) line.resize(p);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (word == "complex") {
            if (header) throw ParseError("duplicate header", lineno);
            std::string d;
            if (!(ls >> name >> d) || d.rfind("dim=", 0) != 0) throw ParseError("expected 'complex <name> dim=<d>'", lineno);
            try {
                dim = std::stoi(d.substr(4));
            } catch (const std::exception&) {
                throw ParseError("bad dimension '" + d + "'", lineno);
            }
            if (dim < 0 || dim > 2) throw ParseError("dimension must be 0, 1 or 2", lineno);
            header = true;
        } else if (word == "simplex") {
            if (!header) throw ParseError("simplex before header", lineno);
            std::vector<int> vs;
            std::string tok;
            while (ls >> tok) {
                try {
                    std::size_t used = 0;
                    int v = std::stoi(tok, &used);
                    if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
                    vs.push_back(v);
                } catch (const std::exception&) {
                    throw ParseError("bad vertex label '" + tok + "'", lineno);
                }
            }
            if (vs.empty() || static_cast<int>(vs.size()) > dim + 1)
                throw ParseError("simplex has " + std::to_string(vs.size()) + " vertices", lineno);
            for (int v : vs) max_vertex = std::max(max_vertex, v);
            simplices.emplace_back(vs, lineno);
        } else {
            throw ParseError("unknown keyword '" + word + "'", lineno);
        }
    }
    if (!header) throw ParseError("missing 'complex' header", lineno);
    if (max_vertex < 0) throw ParseError("no vertices", lineno);
    SimplicialComplex k(max_vertex + 1, name);
    std::set<std::vector<int>> seen;
    for (const auto& [vs, ln] : simplices) {
        auto key = vs;
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) throw ParseError("duplicate simplex", ln);
        try {
            if (vs.size() == 2) k.add_edge(vs[0], vs[1]);
            if (vs.size() == 3) k.add_face(vs[0], vs[1], vs[2]);
        } catch (const std::exception& e) {
            throw ParseError(e.what(), ln);
        }
    }
    return k;
}

inline std::string format_complex(const SimplicialComplex& k) {
    std::ostringstream os;
    os << "complex " << k.name() << " dim=" << k.dimension() << "\n";
    for (int v = 0; v < k.num_vertices(); ++v) os << "simplex " << v << "\n";
    for (const auto& e : k.edges()) os << "simplex " << e[0] << " " << e[1] << "\n";
    for (const auto& f : k.faces()) os << "simplex " << f[0] << " " << f[1] << " " << f[2] << "\n";
    return os.str();
}

}  // namespace dchar
