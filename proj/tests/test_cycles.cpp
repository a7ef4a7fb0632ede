#include "dchar/cycles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace dchar;

namespace {

/// Two disjoint triangle boundaries swapped by Z2.
GroupAction swapped_circles() {
    SimplicialComplex k(6, "two-circles");
    for (int base : {0, 3}) {
        k.add_edge(base, base + 1);
        k.add_edge(base + 1, base + 2);
        k.add_edge(base, base + 2);
    }
    return GroupAction(cyclic_group(2), k, {0, 1, 2, 3, 4, 5, 3, 4, 5, 0, 1, 2});
}

std::vector<GroupAction> actions() {
    return {point_action(2),         point_action(3),     octahedron_rotation(1), octahedron_rotation(2),
            octahedron_rotation(4), circle_reflection(), swapped_circles(),      trivial_action(seven_vertex_torus())};
}

std::vector<Rational> random_values(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> num(-30, 30), den(1, 9);
    std::vector<Rational> v(n);
    for (auto& x : v) x = Rational(num(rng), den(rng));
    return v;
}

/// Edge values with h(u -> w) = x, respecting stored orientation.
void set_edge(const SimplicialComplex& k, std::vector<Rational>& h, int u, int w, Rational x) {
    const auto o = k.find_edge(u, w);
    h[o.index] = Rational(o.sign) * x;
}

std::size_t arrow_count(const GroupAction& a) {
    return static_cast<std::size_t>(a.group().order()) * a.complex().num_vertices();
}

}  // namespace

TEST(CycleBoundary, PlainLoops) {
    const auto k = octahedron();
    GroupoidCycle equator;
    for (int i = 1; i <= 4; ++i) equator.steps.push_back(CycleStep::edge(i, i % 4 + 1));
    EXPECT_TRUE(equator.closed());
    EXPECT_TRUE(cycle_boundary(k, equator).is_zero());
    GroupoidCycle open;
    open.steps.push_back(CycleStep::edge(0, 1));
    open.steps.push_back(CycleStep::edge(1, 2));
    EXPECT_FALSE(open.closed());
    const auto b = cycle_boundary(k, open);
    EXPECT_EQ(b.coeffs[0], -1);
    EXPECT_EQ(b.coeffs[2], 1);
}

TEST(CycleBoundary, ArrowTriangles) {
    // the reflection arrow at 1 lands on 2; the edge 2 -> 1 closes it
    const auto a = circle_reflection();
    GroupoidCycle c;
    c.steps.push_back(CycleStep::arrow(a, 1, 1));
    c.steps.push_back(CycleStep::edge(2, 1));
    EXPECT_TRUE(c.closed());
    EXPECT_TRUE(cycle_boundary(a.complex(), c).is_zero());
}

TEST(CycleBoundary, QuarterEquatorClosedByRotation) {
    const auto a = octahedron_rotation(4);
    GroupoidCycle c;
    c.steps.push_back(CycleStep::edge(1, 2));
    c.steps.push_back(CycleStep::arrow(a, 1, 1, -1));
    EXPECT_TRUE(c.closed());
    EXPECT_TRUE(cycle_boundary(a.complex(), c).is_zero());

    const auto& k = a.complex();
    std::vector<Rational> h(k.num_edges(), Rational(0));
    std::vector<Rational> f(arrow_count(a), Rational(0));
    set_edge(k, h, 1, 2, Rational(1, 8));
    f[1 * k.num_vertices() + 1] = Rational(3, 16);
    EXPECT_EQ(evaluate(a, h, f, c), Rational(1, 8) - Rational(3, 16));
}

TEST(Evaluate, EquatorHalf) {
    const auto a = octahedron_rotation(1);
    const auto& k = a.complex();
    std::vector<Rational> h(k.num_edges(), Rational(0));
    for (int i = 1; i <= 4; ++i) set_edge(k, h, i, i % 4 + 1, Rational(1, 8));
    GroupoidCycle equator;
    for (int i = 1; i <= 4; ++i) equator.steps.push_back(CycleStep::edge(i, i % 4 + 1));
    EXPECT_EQ(evaluate(a, h, std::vector<Rational>(arrow_count(a)), equator), Rational(1, 2));
    EXPECT_EQ(evaluate(a, h, std::vector<Rational>(arrow_count(a)), equator.reversed()), Rational(-1, 2));
}

TEST(Evaluate, SingleArrow) {
    const auto a = point_action(3);
    std::vector<Rational> f{Rational(0), Rational(1, 3), Rational(2, 3)};
    GroupoidCycle c;
    c.steps.push_back(CycleStep::arrow(a, 2, 0));
    EXPECT_EQ(evaluate(a, {}, f, c), Rational(2, 3));
    EXPECT_EQ(evaluate(a, {}, f, c.reversed()), Rational(-2, 3));
}

TEST(Evaluate, RejectsInvalidChains) {
    const auto a = octahedron_rotation(4);
    const auto& k = a.complex();
    std::vector<Rational> h(k.num_edges()), f(arrow_count(a));
    GroupoidCycle open;
    open.steps.push_back(CycleStep::edge(0, 1));
    EXPECT_THROW(evaluate(a, h, f, open), std::invalid_argument);
    GroupoidCycle bad;
    bad.steps.push_back(CycleStep::edge(0, 5));
    bad.steps.push_back(CycleStep::edge(5, 0));
    EXPECT_THROW(evaluate(a, h, f, bad), std::invalid_argument);
    GroupoidCycle wrong_arrow;
    wrong_arrow.steps.push_back(CycleStep{CycleStep::Arrow, 1, 3, 1, 1, 1});
    wrong_arrow.steps.push_back(CycleStep::edge(3, 4));
    wrong_arrow.steps.push_back(CycleStep::edge(4, 1));
    EXPECT_THROW(evaluate(a, h, f, wrong_arrow), std::invalid_argument);
}

TEST(Generators, Counts) {
    auto count = [](const GroupAction& a, CycleGenerator::Kind kind) {
        int n = 0;
        for (const auto& g : cycle_generators(a)) n += g.kind == kind;
        return n;
    };
    EXPECT_EQ(cycle_generators(point_action(2)).size(), 2u);
    EXPECT_EQ(count(point_action(2), CycleGenerator::Inertia), 1);
    EXPECT_EQ(cycle_generators(octahedron_rotation(1)).size(), 7u);
    const auto z4 = octahedron_rotation(4);
    EXPECT_EQ(count(z4, CycleGenerator::TreeLoop), 7);
    EXPECT_EQ(count(z4, CycleGenerator::Inertia), 1);
    EXPECT_EQ(count(z4, CycleGenerator::Closing), 1);
    // loops: E - V + components
    const auto sc = swapped_circles();
    EXPECT_EQ(count(sc, CycleGenerator::TreeLoop), 2);
    EXPECT_EQ(count(sc, CycleGenerator::Inertia), 0);
    EXPECT_EQ(count(sc, CycleGenerator::Closing), 1);
    EXPECT_EQ(count(trivial_action(seven_vertex_torus()), CycleGenerator::TreeLoop), 21 - 7 + 1);
}

TEST(Generators, ClosedAndValid) {
    for (const auto& a : actions())
        for (const auto& g : cycle_generators(a)) {
            EXPECT_TRUE(g.cycle.closed()) << g.label();
            EXPECT_TRUE(cycle_boundary(a.complex(), g.cycle).is_zero()) << g.label();
            for (const auto& s : g.cycle.steps) EXPECT_NO_THROW(check_step(a, s));
        }
}

TEST(Generators, ExactPairsVanish) {
    // (h, f) = D t: h = dt, f = -delta t, so every closed hybrid loop sees 0
    std::mt19937_64 rng(41);
    for (const auto& a : actions()) {
        const auto& k = a.complex();
        for (int trial = 0; trial < 20; ++trial) {
            const auto t = random_values(k.num_vertices(), rng);
            std::vector<Rational> h = coboundary_values(k, 0, t);
            std::vector<Rational> f(arrow_count(a));
            for (int g = 0; g < a.group().order(); ++g)
                for (int v = 0; v < k.num_vertices(); ++v) f[g * k.num_vertices() + v] = t[a.act(g, v)] - t[v];
            for (const auto& gen : cycle_generators(a)) ASSERT_EQ(evaluate(a, h, f, gen.cycle), 0) << gen.label();
            for (int g = 0; g < a.group().order(); ++g)
                for (int e = 0; e < k.num_edges(); ++e) ASSERT_EQ(evaluate(a, h, f, rectangle_boundary(a, g, e)), 0);
        }
    }
}

TEST(Generators, FaceBoundariesSeeCurvatureOnly) {
    // a closed (h, f) with dh = 0 vanishes on face boundaries; in general
    // the face boundary sees dh
    std::mt19937_64 rng(42);
    const auto a = octahedron_rotation(4);
    const auto& k = a.complex();
    for (int trial = 0; trial < 50; ++trial) {
        const auto h = random_values(k.num_edges(), rng);
        const auto dh = coboundary_values(k, 1, h);
        for (int s = 0; s < k.num_faces(); ++s)
            EXPECT_EQ(evaluate(a, h, std::vector<Rational>(arrow_count(a)), face_boundary(k, s)), dh[s]);
    }
}

TEST(Generators, RectangleSeesDeltaHPlusDf) {
    std::mt19937_64 rng(43);
    const auto a = circle_reflection();
    const auto& k = a.complex();
    const auto h = random_values(k.num_edges(), rng);
    const auto f = random_values(arrow_count(a), rng);
    for (int g = 0; g < 2; ++g)
        for (int e = 0; e < k.num_edges(); ++e) {
            const int u = k.edge(e)[0], w = k.edge(e)[1];
            const auto img = a.act_simplex(g, 1, e);
            const Rational expect = h[e] - Rational(img.sign) * h[img.index] + f[g * 3 + w] - f[g * 3 + u];
            EXPECT_EQ(evaluate(a, h, f, rectangle_boundary(a, g, e)), expect);
        }
}

TEST(Skeleton, Deterministic) {
    const auto a = octahedron_rotation(4);
    const auto s1 = groupoid_skeleton(a);
    const auto s2 = groupoid_skeleton(a);
    EXPECT_EQ(s1.parent, s2.parent);
    EXPECT_EQ(s1.tree_edge, s2.tree_edge);
    EXPECT_EQ(s1.roots, (std::vector<int>{0}));
    int tree_edges = 0;
    for (char t : s1.tree_edge) tree_edges += t;
    EXPECT_EQ(tree_edges, 5);
}
