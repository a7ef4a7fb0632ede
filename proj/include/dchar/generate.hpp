#pragma once

#include "dchar/bundle.hpp"

#include <random>
#include <stdexcept>
#include <vector>

namespace dchar {

using Rng = std::mt19937_64;

inline Rational random_grid(Rng& rng, std::int64_t denominator) {
    std::uniform_int_distribution<std::int64_t> d(0, denominator - 1);
    return Rational(d(rng), denominator);
}

/// Homomorphism G -> R/Z for a cyclic group (zero for other groups): the
/// generator goes to j / |G| with j random.
inline std::vector<Rational> random_character(const GroupAction& a, Rng& rng) {
    const auto& g = a.group();
    std::vector<Rational> chi(g.order(), Rational(0));
    const auto gens = g.generators();
    if (gens.size() != 1) return chi;
    const Rational step = random_grid(rng, g.order());
    int x = g.identity();
    Rational v(0);
    for (int i = 0; i < g.order(); ++i) {
        chi[x] = frac(v);
        x = g.mul(gens[0], x);
        v += step;
    }
    return chi;
}

struct BundleSampler {
    std::int64_t denominator = 24;     // grid of the orbit values and gauges
    std::int64_t perturbation = 0;     // 0: basic bundles; n: edge noise in (-1/(32n), 1/(32n))
    int chern_range = 1;               // chern per face orbit in [-r, r]
};

/// Random bundle: orbit-constant connection with face holonomies kept away
/// from 0 mod 1, invariant Chern deficits, a random flat character on the
/// phases, a random gauge, and optionally a small edge perturbation (which
/// makes it non-basic while keeping the windowed alpha lift closed).
/// Requires an orientation-preserving action.
inline DiscreteBundle random_bundle(const GroupAction& a, Rng& rng, const BundleSampler& opt = {}) {
    const auto& k = a.complex();
    const auto& grp = a.group();
    const int ne = k.num_edges();
    const int nf = k.num_faces();
    for (int g = 0; g < grp.order(); ++g)
        for (int f = 0; f < nf; ++f)
            if (a.act_simplex(g, 2, f).sign < 0) throw std::invalid_argument("random_bundle needs an orientation-preserving action");
    for (int attempt = 0; attempt < 10000; ++attempt) {
        auto b = trivial_bundle(a);
        std::vector<char> done(ne, 0);
        for (int e = 0; e < ne; ++e) {
            if (done[e]) continue;
            Rational v = random_grid(rng, opt.denominator);
            for (int g = 0; g < grp.order(); ++g) {
                auto o = a.act_simplex(g, 1, e);
                if (o.index == e && o.sign < 0) v = Rational(0);
            }
            for (int g = 0; g < grp.order(); ++g) {
                auto o = a.act_simplex(g, 1, e);
                b.A[o.index] = frac(Rational(o.sign) * v);
                done[o.index] = 1;
            }
        }
        const auto hol = coboundary_values(k, 1, b.A);
        bool ok = true;
        for (const auto& h : hol) {
            const auto r = frac(h);
            if (r < Rational(1, 10) || r > Rational(9, 10)) ok = false;
        }
        if (!ok) continue;
        std::vector<char> fdone(nf, 0);
        std::uniform_int_distribution<int> cd(-opt.chern_range, opt.chern_range);
        for (int f = 0; f < nf; ++f) {
            if (fdone[f]) continue;
            const int c = cd(rng);
            for (int g = 0; g < grp.order(); ++g) {
                auto o = a.act_simplex(g, 2, f);
                b.chern[o.index] = c;
                fdone[o.index] = 1;
            }
        }
        const auto chi = random_character(a, rng);
        for (int g = 0; g < grp.order(); ++g)
            for (int v = 0; v < k.num_vertices(); ++v) b.phi[static_cast<std::size_t>(g) * k.num_vertices() + v] = chi[g];
        if (opt.perturbation > 0) {
            const std::int64_t den = 32 * opt.perturbation * opt.denominator;
            std::uniform_int_distribution<std::int64_t> pd(-opt.denominator + 1, opt.denominator - 1);
            for (auto& x : b.A) x = frac(x + Rational(pd(rng), den));
        }
        std::vector<Rational> gamma(k.num_vertices());
        for (auto& x : gamma) x = random_grid(rng, opt.denominator);
        return gauge_transform(a, b, gamma);
    }
    throw std::runtime_error("random_bundle: no admissible orbit values found");
}

}  // namespace dchar
