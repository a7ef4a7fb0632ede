#include "dchar/bundle.hpp"
#include "dchar/diff_char.hpp"
#include "dchar/generate.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

using namespace dchar;

namespace {

DiscreteBundle load(const std::string& name, const GroupAction& a) {
    std::ifstream in(std::string(DCHAR_DATA_DIR) + "/" + name);
    if (!in) throw std::runtime_error("missing fixture " + name);
    return parse_bundle(in, a);
}

GroupoidCycle equator() {
    GroupoidCycle c;
    for (int i = 1; i <= 4; ++i) c.steps.push_back(CycleStep::edge(i, i % 4 + 1));
    return c;
}

std::set<int> edge_orbit(const GroupAction& a, int e) {
    std::set<int> out;
    for (int g = 0; g < a.group().order(); ++g) out.insert(a.act_simplex(g, 1, e).index);
    return out;
}

}  // namespace

TEST(Bundle, UniformCurvatureAndHolonomy) {
    const auto a = octahedron_rotation(4);
    const auto b = uniform_octahedron_bundle(a);
    EXPECT_FALSE(bundle_violation(a, b));
    for (const auto& w : curvature(a.complex(), b)) EXPECT_EQ(w, Rational(1, 8));
    EXPECT_EQ(holonomy(a, b, equator()), Rational(1, 2));
    EXPECT_EQ(b, load("octahedron_z4_uniform.bundle", a));
}

TEST(Bundle, UniformIsBasicAndInvariant) {
    for (int n : {1, 2, 4}) {
        const auto a = octahedron_rotation(n);
        const auto b = uniform_octahedron_bundle(a);
        EXPECT_TRUE(is_basic(a, b).basic);
        const auto m = finite_moment(a, b);
        EXPECT_TRUE(m.mu_zero);
        EXPECT_TRUE(m.basic);
        EXPECT_TRUE(m.invariant);
    }
}

TEST(Bundle, PerturbedIsNeitherBasicNorInvariant) {
    const auto a = octahedron_rotation(4);
    const auto b = load("octahedron_z4_perturbed.bundle", a);
    const auto r = is_basic(a, b);
    EXPECT_FALSE(r.basic);
    EXPECT_NE(r.holonomy, 0);
    const auto m = finite_moment(a, b);
    EXPECT_FALSE(m.basic);
    EXPECT_FALSE(m.invariant);
}

TEST(Dch, AlphaSupportedOnPerturbedOrbit) {
    const auto a = octahedron_rotation(4);
    const auto& k = a.complex();
    const auto x = dch(a, load("octahedron_z4_perturbed.bundle", a));
    const auto orbit = edge_orbit(a, k.find_edge(1, 2).index);
    int nonzero = 0;
    for (int g = 0; g < 4; ++g)
        for (int e = 0; e < k.num_edges(); ++e) {
            const auto v = x.alpha[static_cast<std::size_t>(g) * k.num_edges() + e];
            if (v == 0) continue;
            ++nonzero;
            EXPECT_TRUE(orbit.count(e)) << "g" << g << " e" << e;
            EXPECT_GE(v, Rational(-1, 2));
            EXPECT_LT(v, Rational(1, 2));
        }
    EXPECT_GT(nonzero, 0);
    EXPECT_FALSE(in_dc22(x));
}

TEST(Dch, TreeGaugeKillsForest) {
    const auto a = octahedron_rotation(4);
    const auto sk = groupoid_skeleton(a);
    const auto x = dch(a, uniform_octahedron_bundle(a));
    for (int e = 0; e < a.complex().num_edges(); ++e)
        if (sk.tree_edge[e]) {
            EXPECT_EQ(x.h[e], 0);
        }
}

TEST(Dch, RejectsInvalidBundle) {
    const auto a = point_action(2);
    auto b = trivial_bundle(a);
    b.phi[1] = Rational(1, 3);
    EXPECT_TRUE(bundle_violation(a, b));
    EXPECT_THROW(dch(a, b), std::domain_error);
}

TEST(Preq, InvertsDchUpToGauge) {
    Rng rng(61);
    for (int n : {1, 2, 4}) {
        const auto a = octahedron_rotation(n);
        for (int t = 0; t < 20; ++t) {
            BundleSampler opt;
            opt.perturbation = t % 3 == 0 ? 2 : 0;
            const auto b = random_bundle(a, rng, opt);
            const auto x = dch(a, b);
            ASSERT_TRUE(is_cocycle(a, x));
            const auto back = preq(a, x);
            const auto gamma = gauge_equivalent(a, b, back);
            ASSERT_TRUE(gamma);
            EXPECT_EQ(gauge_transform(a, b, *gamma), back);
            const auto ch = extract_character(a, x);
            for (std::size_t i = 0; i < ch.generators.size(); ++i)
                EXPECT_EQ(holonomy(a, b, ch.generators[i].cycle), ch.psi[i]) << ch.generators[i].label();
        }
    }
}

TEST(GaugeEquivalent, FindsVerifiedWitness) {
    Rng rng(62);
    const auto a = octahedron_rotation(4);
    const auto b = uniform_octahedron_bundle(a);
    for (int t = 0; t < 10; ++t) {
        std::vector<Rational> gamma(6);
        for (auto& g : gamma) g = random_grid(rng, 36);
        const auto c = gauge_transform(a, b, gamma);
        const auto w = gauge_equivalent(a, b, c);
        ASSERT_TRUE(w);
        EXPECT_EQ(gauge_transform(a, b, *w), c);
    }
}

TEST(GaugeEquivalent, DifferentChernClasses) {
    const auto a = octahedron_rotation(1);
    const auto b1 = uniform_octahedron_bundle(a);
    auto b2 = b1;
    b2.chern[0] += 1;
    EXPECT_FALSE(gauge_equivalent(a, b1, b2));
}

TEST(GaugeEquivalent, DifferentFlatCharacters) {
    const auto a = point_action(2);
    EXPECT_FALSE(gauge_equivalent(a, trivial_bundle(a), load("point_z2_half.bundle", a)));
    EXPECT_TRUE(gauge_equivalent(a, load("point_z2_half.bundle", a), load("point_z2_half.bundle", a)));
}

TEST(BundleFormat, RoundTrip) {
    Rng rng(63);
    const auto a = octahedron_rotation(2);
    for (int t = 0; t < 5; ++t) {
        const auto b = random_bundle(a, rng);
        std::istringstream in(format_bundle(a, b));
        EXPECT_EQ(parse_bundle(in, a), b);
    }
    EXPECT_EQ(load("trivial.bundle", octahedron_rotation(4)), trivial_bundle(octahedron_rotation(4)));
}

TEST(BundleFormat, ReversedEdgeOrientation) {
    const auto a = octahedron_rotation(1);
    std::istringstream fwd("edge 1 2 = 1/5\n"), rev("edge 2 1 = -1/5\n");
    EXPECT_EQ(parse_bundle(fwd, a), parse_bundle(rev, a));
}

TEST(BundleFormat, Errors) {
    const auto a = octahedron_rotation(4);
    try {
        load("octahedron_z4_bad_phase.bundle", a);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 4);
        EXPECT_NE(std::string(e.what()).find("phase cocycle law"), std::string::npos);
    }
    auto line_of = [&](const std::string& text) {
        std::istringstream in(text);
        try {
            parse_bundle(in, a);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };
    EXPECT_EQ(line_of("edge 1 3 = 1/2\n"), 1);
    EXPECT_EQ(line_of("\nedge 1 2 = x\n"), 2);
    EXPECT_EQ(line_of("edge 1 2 1/2\n"), 1);
    EXPECT_EQ(line_of("phase 4 0 = 0\n"), 1);
    EXPECT_EQ(line_of("# c\nchern 0 1 2 = 1/2\n"), 2);
    EXPECT_EQ(line_of("curve 0 1 = 0\n"), 1);
}
