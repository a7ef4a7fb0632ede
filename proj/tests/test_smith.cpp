#include "dchar/complex.hpp"
#include "dchar/smith.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace dchar;

namespace {

IntMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng, int range = 5, double zero_prob = 0.3) {
    std::uniform_int_distribution<int> d(-range, range);
    std::bernoulli_distribution z(zero_prob);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = z(rng) ? 0 : d(rng);
    return m;
}

/// Rank over Q by plain rational elimination.
std::size_t rational_rank(const IntMatrix& a) {
    std::vector<std::vector<Rational>> m(a.rows(), std::vector<Rational>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = Rational(a(i, j));
    std::size_t rank = 0;
    for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
        std::size_t piv = rank;
        while (piv < a.rows() && m[piv][col] == 0) ++piv;
        if (piv == a.rows()) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == rank || m[i][col] == 0) continue;
            const Rational q = m[i][col] / m[rank][col];
            for (std::size_t j = col; j < a.cols(); ++j) m[i][j] -= q * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

void combinations(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > n) return;
    while (true) {
        out.push_back(idx);
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Invariant factors from determinantal divisors: d_k = gcd of all k x k
/// minors, s_k = d_k / d_{k-1}. Independent of any Smith reduction.
std::vector<std::int64_t> determinantal_factors(const IntMatrix& a) {
    std::vector<std::int64_t> out;
    std::int64_t prev = 1;
    for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
        std::vector<std::vector<std::size_t>> rs, cs;
        combinations(a.rows(), k, rs);
        combinations(a.cols(), k, cs);
        std::int64_t g = 0;
        for (const auto& r : rs)
            for (const auto& c : cs) {
                IntMatrix sub(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(r[i], c[j]);
                g = std::gcd(g, determinant(sub));
            }
        if (g == 0) break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

std::vector<std::int64_t> nontrivial(const std::vector<std::int64_t>& v) {
    std::vector<std::int64_t> out;
    for (auto x : v)
        if (std::abs(x) > 1) out.push_back(std::abs(x));
    return out;
}

/// Random unimodular matrix and its inverse as products of elementary moves.
std::pair<IntMatrix, IntMatrix> random_unimodular(std::size_t n, std::mt19937_64& rng) {
    IntMatrix u = IntMatrix::identity(n), inv = IntMatrix::identity(n);
    if (n < 2) return {u, inv};
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> q(-2, 2);
    for (int t = 0; t < 3 * static_cast<int>(n); ++t) {
        const auto a = pick(rng), b = pick(rng);
        if (a == b) continue;
        const int c = q(rng);
        u.sub_row(a, b, c);    // u <- E u with E = I - c e_ab
        inv.sub_col(b, a, -c); // inv <- inv E^{-1}
    }
    return {u, inv};
}

void check_snf(const IntMatrix& a) {
    const auto s = smith_normal_form(a);
    ASSERT_EQ(s.u * BigMatrix(a) * s.v, s.d);
    ASSERT_EQ(abs(determinant(s.u)), 1);
    ASSERT_EQ(abs(determinant(s.v)), 1);
    for (std::size_t i = 0; i < s.d.rows(); ++i)
        for (std::size_t j = 0; j < s.d.cols(); ++j)
            if (i != j || i >= s.rank) {
                ASSERT_EQ(s.d(i, j), 0);
            }
    const auto diag = s.diagonal();
    for (std::size_t i = 0; i < diag.size(); ++i) {
        ASSERT_GT(diag[i], 0);
        if (i + 1 < diag.size()) {
            ASSERT_EQ(diag[i + 1] % diag[i], 0);
        }
    }
}

}  // namespace

TEST(SmithNormalForm, Identity) {
    const auto s = smith_normal_form(IntMatrix::identity(4));
    EXPECT_EQ(s.d, BigMatrix::identity(4));
}

TEST(SmithNormalForm, TwoByTwo) {
    const IntMatrix a{{2, 4}, {6, 8}};
    const auto s = smith_normal_form(a);
    EXPECT_EQ(s.diagonal(), (std::vector<std::int64_t>{2, 4}));
    EXPECT_EQ(s.u * BigMatrix(a) * s.v, s.d);
}

TEST(SmithNormalForm, ZeroMatrix) {
    const IntMatrix a(3, 2);
    const auto s = smith_normal_form(a);
    EXPECT_EQ(s.rank, 0u);
    EXPECT_EQ(s.u, BigMatrix::identity(3));
    EXPECT_EQ(s.v, BigMatrix::identity(2));
}

TEST(SmithNormalForm, RandomMatricesReconstruct) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> dim(1, 12);
    for (int t = 0; t < 250; ++t) check_snf(random_matrix(dim(rng), dim(rng), rng));
}

TEST(SmithNormalForm, DenseTwelveByTwelve) {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 20; ++t) check_snf(random_matrix(12, 12, rng, 9, 0.0));
}

TEST(SmithNormalForm, AgreesWithDeterminantalDivisors) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int t = 0; t < 150; ++t) {
        const auto a = random_matrix(dim(rng), dim(rng), rng, 4);
        EXPECT_EQ(smith_normal_form(a).diagonal(), determinantal_factors(a));
    }
}

TEST(Determinant, Unimodular) {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 50; ++t) {
        auto [u, inv] = random_unimodular(6, rng);
        EXPECT_EQ(u * inv, IntMatrix::identity(6));
        EXPECT_EQ(std::abs(determinant(u)), 1);
    }
}

TEST(Cohomology, OctahedronIntegersDegreeTwo) {
    const auto k = octahedron();
    std::vector<IntMatrix> d;
    for (int q = 0; q < 2; ++q) {
        IntMatrix m(k.count(q + 1), k.count(q));
        for (auto [row, col, v] : coboundary_entries(k, q)) m(row, col) = v;
        d.push_back(m);
    }
    ASSERT_EQ(d[1].rows(), 8u);
    ASSERT_EQ(d[1].cols(), 12u);
    const std::vector<std::size_t> dims{6, 12, 8};
    const auto h2 = cohomology(d, dims, 2, Coefficients::Integers);
    EXPECT_EQ(h2.free_rank, 1u);
    EXPECT_TRUE(h2.invariant_factors.empty());
    EXPECT_TRUE(cohomology(d, dims, 1, Coefficients::CircleGroup).is_trivial());
}

TEST(Cohomology, TorusCircleDegreeOne) {
    const auto k = seven_vertex_torus();
    std::vector<IntMatrix> d;
    for (int q = 0; q < 2; ++q) {
        IntMatrix m(k.count(q + 1), k.count(q));
        for (auto [row, col, v] : coboundary_entries(k, q)) m(row, col) = v;
        d.push_back(m);
    }
    const auto h1 = cohomology(d, {7, 21, 14}, 1, Coefficients::CircleGroup);
    EXPECT_EQ(h1.divisible_rank, 2u);
    EXPECT_TRUE(h1.invariant_factors.empty());
}

TEST(Cohomology, RejectsNonComplex) {
    const IntMatrix d0{{1}, {1}};
    const IntMatrix d1{{1, 0}};
    EXPECT_THROW(cohomology({d0, d1}, {1, 2, 1}, 1, Coefficients::Integers), std::invalid_argument);
}

TEST(Cohomology, MatchesDenseOracle) {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int t = 0; t < 120; ++t) {
        const std::size_t p = dim(rng), n = dim(rng) + 1, m = dim(rng);
        std::uniform_int_distribution<std::size_t> rpick(0, n);
        const std::size_t r = rpick(rng);
        auto [u, inv] = random_unimodular(n, rng);
        // d0 = U [A; 0], d1 = [0 | B] U^{-1}: composes to zero
        IntMatrix top(n, p), right(m, n);
        const auto a = random_matrix(r, p, rng, 3);
        const auto b = random_matrix(m, n - r, rng, 3);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < p; ++j) top(i, j) = a(i, j);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n - r; ++j) right(i, r + j) = b(i, j);
        const IntMatrix d0 = u * top, d1 = right * inv;
        ASSERT_TRUE((d1 * d0).is_zero());
        if (d0.rows() > 8 || d0.cols() > 8 || d1.rows() > 8) continue;
        const std::size_t free = n - rational_rank(d0) - rational_rank(d1);
        const auto hz = cohomology({d0, d1}, {p, n, m}, 1, Coefficients::Integers);
        EXPECT_EQ(hz.free_rank, free);
        EXPECT_EQ(hz.invariant_factors, nontrivial(determinantal_factors(d0)));
        const auto hc = cohomology({d0, d1}, {p, n, m}, 1, Coefficients::CircleGroup);
        EXPECT_EQ(hc.divisible_rank, free);
        EXPECT_EQ(hc.invariant_factors, nontrivial(determinantal_factors(d1)));
    }
}

TEST(SolveModOne, SolvableAndObstructed) {
    const IntMatrix d{{2}, {0}};
    auto ok = solve_mod_one(d, {Rational(1, 3), Rational(0)});
    ASSERT_TRUE(ok.solution);
    EXPECT_TRUE(is_integer(Rational(2) * (*ok.solution)[0] - Rational(1, 3)));
    auto bad = solve_mod_one(d, {Rational(0), Rational(1, 2)});
    ASSERT_FALSE(bad.solution);
    ASSERT_TRUE(bad.obstruction);
    EXPECT_EQ(frac(bad.obstruction->period), Rational(1, 2));
}

TEST(SolveModOne, RandomSolvableSystems) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> dim(1, 7);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
    for (int t = 0; t < 100; ++t) {
        const auto d = random_matrix(dim(rng), dim(rng), rng, 3);
        std::vector<Rational> x(d.cols());
        for (auto& v : x) v = Rational(num(rng), den(rng));
        std::vector<Rational> z(d.rows(), Rational(0));
        for (std::size_t i = 0; i < d.rows(); ++i)
            for (std::size_t j = 0; j < d.cols(); ++j) z[i] += Rational(d(i, j)) * x[j];
        const auto s = solve_mod_one(d, z);
        ASSERT_TRUE(s.solution);
        for (std::size_t i = 0; i < d.rows(); ++i) {
            Rational r(0);
            for (std::size_t j = 0; j < d.cols(); ++j) r += Rational(d(i, j)) * (*s.solution)[j];
            EXPECT_TRUE(is_integer(r - z[i]));
        }
    }
}
