#include "dchar/complex.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace dchar;

namespace {

Chain random_chain(const SimplicialComplex& k, int degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> d(-3, 3);
    Chain c = zero_chain(k, degree);
    for (auto& x : c.coeffs) x = d(rng);
    return c;
}

Cochain random_cochain(const SimplicialComplex& k, int degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> num(-20, 20), den(1, 12);
    Cochain c = zero_cochain(k, degree);
    for (auto& x : c.values) x = Rational(num(rng), den(rng));
    return c;
}

std::vector<SimplicialComplex> samples() { return {octahedron(), seven_vertex_torus(), triangle(), triangle_circle()}; }

}  // namespace

TEST(Boundary, SingleTriangle) {
    const auto k = triangle();
    Chain f = zero_chain(k, 2);
    f.coeffs[0] = 1;
    const auto b = boundary(k, f);
    // [v0 v1 v2] -> [v1 v2] - [v0 v2] + [v0 v1]
    Chain expect = zero_chain(k, 1);
    auto add = [&](int u, int w, int s) {
        auto o = k.find_edge(u, w);
        expect.coeffs[o.index] += s * o.sign;
    };
    add(1, 2, 1);
    add(0, 2, -1);
    add(0, 1, 1);
    EXPECT_EQ(b.coeffs, expect.coeffs);
}

TEST(Boundary, OctahedronFacesSumToZero) {
    const auto k = octahedron();
    Chain all = zero_chain(k, 2);
    for (auto& c : all.coeffs) c = 1;
    // independent oracle: tally the 24 face-edge incidences by hand
    std::vector<std::int64_t> tally(k.num_edges(), 0);
    for (const auto& f : k.faces())
        for (int i = 0; i < 3; ++i) {
            const int u = f[i], w = f[(i + 1) % 3];
            auto o = k.find_edge(u, w);
            ASSERT_GE(o.index, 0);
            tally[o.index] += o.sign;
        }
    for (auto t : tally) EXPECT_EQ(t, 0);
    EXPECT_TRUE(boundary(k, all).is_zero());
}

TEST(Boundary, RejectsZeroChain) {
    const auto k = triangle();
    EXPECT_THROW(boundary(k, zero_chain(k, 0)), std::invalid_argument);
}

TEST(Boundary, SquareVanishesOnRandomChains) {
    std::mt19937_64 rng(11);
    int count = 0;
    for (const auto& k : samples()) {
        if (k.num_faces() == 0) continue;
        for (int t = 0; t < 500; ++t, ++count)
            ASSERT_TRUE(boundary(k, boundary(k, random_chain(k, 2, rng))).is_zero());
    }
    EXPECT_GE(count, 1000);
}

TEST(Coboundary, ZeroToZero) {
    const auto k = octahedron();
    EXPECT_TRUE(coboundary(k, zero_cochain(k, 1)).is_zero());
    EXPECT_THROW(coboundary(k, zero_cochain(k, 2)), std::invalid_argument);
}

TEST(Coboundary, ThirdOnEachBoundaryEdge) {
    const auto k = triangle();
    Cochain h = zero_cochain(k, 1);
    auto set = [&](int u, int w) {
        auto o = k.find_edge(u, w);
        h.values[o.index] = Rational(o.sign, 3);
    };
    set(1, 2);
    set(2, 0);
    set(0, 1);
    EXPECT_EQ(coboundary(k, h).values[0], Rational(1));
}

TEST(Coboundary, VertexDifferences) {
    std::mt19937_64 rng(3);
    const auto k = seven_vertex_torus();
    for (int t = 0; t < 50; ++t) {
        const auto x = random_cochain(k, 0, rng);
        const auto dx = coboundary(k, x);
        for (int e = 0; e < k.num_edges(); ++e) EXPECT_EQ(dx.values[e], x.values[k.edge(e)[1]] - x.values[k.edge(e)[0]]);
    }
}

TEST(Coboundary, SquareVanishesOnRandomCochains) {
    std::mt19937_64 rng(12);
    int count = 0;
    for (const auto& k : samples()) {
        if (k.num_faces() == 0) continue;
        for (int t = 0; t < 500; ++t, ++count)
            ASSERT_TRUE(coboundary(k, coboundary(k, random_cochain(k, 0, rng))).is_zero());
    }
    EXPECT_GE(count, 1000);
}

TEST(Coboundary, CircleGroupValuesStayReduced) {
    const auto k = triangle();
    Cochain h{1, Ring::RZ, {Rational(3, 4), Rational(3, 4), Rational(3, 4)}};
    const auto d = coboundary(k, h);
    EXPECT_GE(d.values[0], Rational(0));
    EXPECT_LT(d.values[0], Rational(1));
}

TEST(Pair, ZeroChain) {
    std::mt19937_64 rng(4);
    const auto k = octahedron();
    EXPECT_EQ(pair(random_cochain(k, 2, rng), zero_chain(k, 2)), Rational(0));
}

TEST(Pair, NorthernHemisphere) {
    const auto k = octahedron();
    Cochain w = zero_cochain(k, 2);
    for (auto& v : w.values) v = Rational(1, 8);
    Chain north = zero_chain(k, 2);
    for (int i = 1; i <= 4; ++i) north.coeffs[k.find_face(0, i, i % 4 + 1).index] = 1;
    EXPECT_EQ(pair(w, north), Rational(1, 2));
}

TEST(Pair, DegreeMismatch) {
    const auto k = octahedron();
    EXPECT_THROW(pair(zero_cochain(k, 1), zero_chain(k, 2)), std::invalid_argument);
}

TEST(Pair, StokesOnRandomInputs) {
    std::mt19937_64 rng(5);
    int count = 0;
    for (const auto& k : samples()) {
        if (k.num_faces() == 0) continue;
        for (int t = 0; t < 400; ++t, ++count) {
            const auto h = random_cochain(k, 1, rng);
            const auto s = random_chain(k, 2, rng);
            ASSERT_EQ(pair(coboundary(k, h), s), pair(h, boundary(k, s)));
            const auto x = random_cochain(k, 0, rng);
            const auto c = random_chain(k, 1, rng);
            ASSERT_EQ(pair(coboundary(k, x), c), pair(x, boundary(k, c)));
        }
    }
    EXPECT_GE(count, 1000);
}

TEST(Complex, OrientationLookup) {
    const auto k = octahedron();
    auto e = k.find_edge(1, 0);
    EXPECT_EQ(e.sign, -1);
    EXPECT_EQ(k.find_edge(0, 1).index, e.index);
    auto f = k.find_face(1, 2, 0);
    EXPECT_EQ(f.sign, 1);
    EXPECT_EQ(k.find_face(2, 1, 0).sign, -1);
    EXPECT_LT(k.find_edge(0, 5).index, 0);
}

TEST(Complex, Counts) {
    const auto k = octahedron();
    EXPECT_EQ(k.num_vertices(), 6);
    EXPECT_EQ(k.num_edges(), 12);
    EXPECT_EQ(k.num_faces(), 8);
    const auto t = seven_vertex_torus();
    EXPECT_EQ(t.num_vertices() - t.num_edges() + t.num_faces(), 0);
    EXPECT_NO_THROW(t.validate());
}

TEST(ComplexFormat, RoundTrip) {
    for (const auto& k : samples()) {
        std::istringstream in(format_complex(k));
        const auto back = parse_complex(in);
        EXPECT_EQ(back.edges(), k.edges());
        EXPECT_EQ(back.faces(), k.faces());
        EXPECT_EQ(back.num_vertices(), k.num_vertices());
    }
}

TEST(ComplexFormat, Errors) {
    auto line_of = [](const std::string& text) {
        std::istringstream in(text);
        try {
            parse_complex(in);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };
    EXPECT_EQ(line_of("complex empty dim=2\n"), 1);
    EXPECT_EQ(line_of("simplex 0 1\n"), 1);
    EXPECT_EQ(line_of("complex c dim=1\nsimplex 0\nsimplex 0 1 2\n"), 3);
    EXPECT_EQ(line_of("complex c dim=2\nsimplex 0 1\nsimplex 1 0\n"), 3);
    std::istringstream empty("complex empty dim=2\n");
    try {
        parse_complex(empty);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("no vertices"), std::string::npos);
    }
}
