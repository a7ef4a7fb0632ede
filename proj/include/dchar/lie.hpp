#pragma once

#include "dchar/rational.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss.hpp>

#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace dchar::lie {

constexpr double pi = boost::math::constants::pi<double>();

struct Vec3 {
    double x = 0, y = 0, z = 0;

    friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    Vec3 normalized() const { return (1.0 / norm()) * *this; }
};

inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) { return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x}; }

/// Unit quaternion w + xi + yj + zk standing for an element of SU(2).
struct Quaternion {
    double w = 1, x = 0, y = 0, z = 0;

    friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
        return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z, a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x, a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
    }
    Quaternion conj() const { return {w, -x, -y, -z}; }

    /// Image of v under the rotation this element covers.
    Vec3 rotate(Vec3 v) const {
        const Quaternion p{0, v.x, v.y, v.z};
        const auto r = (*this) * p * conj();
        return {r.x, r.y, r.z};
    }
};

/// e^X for X in su(2) ~ R^3: rotation about X by 2 pi |X|, i.e. the
/// quaternion (cos(pi |X|), sin(pi |X|) X/|X|).
inline Quaternion exp_su2(Vec3 X) {
    const double n = X.norm();
    if (n == 0) return {};
    const double s = std::sin(pi * n) / n;
    return {std::cos(pi * n), s * X.x, s * X.y, s * X.z};
}

/// e^X = -1 exactly when |X| is an odd integer; decided on the integer
/// multiplicity rather than on floating-point output.
inline bool exp_is_minus_one(std::int64_t multiplicity) { return multiplicity % 2 != 0; }

inline Quaternion random_su2(std::mt19937_64& rng) {
    std::normal_distribution<double> n(0, 1);
    Quaternion q{n(rng), n(rng), n(rng), n(rng)};
    const double s = std::sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z);
    return {q.w / s, q.x / s, q.y / s, q.z / s};
}

inline Vec3 random_unit(std::mt19937_64& rng) {
    std::normal_distribution<double> n(0, 1);
    return Vec3{n(rng), n(rng), n(rng)}.normalized();
}

/// Distance in R/Z.
inline double circle_distance(double a, double b) {
    double d = std::fmod(a - b, 1.0);
    if (d < 0) d += 1;
    return std::min(d, 1 - d);
}

inline double mod_one(double a) {
    double r = std::fmod(a, 1.0);
    if (r < 0) r += 1;
    if (r >= 1) r -= 1;
    return r;
}

// ---------------------------------------------------------------------------
// Quadrature

template <unsigned N = 64>
double integrate(const std::function<double(double)>& f, double a, double b) {
    return boost::math::quadrature::gauss<double, N>::integrate(f, a, b);
}

/// omega = F(z) dphi ^ dz with phi in [0, 1); total = int_{-1}^{1} F.
struct AxisymmetricForm {
    std::function<double(double)> F;

    double total() const { return integrate(F, -1.0, 1.0); }
};

inline AxisymmetricForm uniform_form(double k) {
    return AxisymmetricForm{[k](double) { return k / 2; }};
}

/// Right-handed orthonormal frame (u, v, axis).
inline std::array<Vec3, 3> frame(Vec3 axis) {
    axis = axis.normalized();
    Vec3 t = std::abs(axis.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    Vec3 u = cross(t, axis).normalized();
    Vec3 v = cross(axis, u);
    return {u, v, axis};
}

/// int omega over the cap {q : q . axis >= z0}, in cap-adapted coordinates
/// (phi', z') with omega = F(z(q)) dphi' ^ dz' (F evaluated at the actual
/// height of q; for a rotation-invariant form this is the same density).
template <unsigned N = 64>
double cap_integral(const AxisymmetricForm& w, Vec3 axis, double z0) {
    const auto fr = frame(axis);
    auto inner = [&](double phi) {
        return integrate<N>(
            [&](double zp) {
                const double r = std::sqrt(std::max(0.0, 1 - zp * zp));
                const Vec3 q = (r * std::cos(2 * pi * phi)) * fr[0] + (r * std::sin(2 * pi * phi)) * fr[1] + zp * fr[2];
                return w.F(q.z);
            },
            z0, 1.0);
    };
    return integrate<N>(inner, 0.0, 1.0);
}

// ---------------------------------------------------------------------------
// Moment maps

enum class Group { Circle, SU2 };

/// S^1 moment from i_{d phi} omega = -d mu: mu(z) = c - int_0^z F.
inline std::function<double(double)> moment_from_form(const AxisymmetricForm& w, double c) {
    return [F = w.F, c](double z) { return c - integrate(F, 0.0, z); };
}

/// Default constant making both pole values integral: (k mod 2) / 2.
inline double default_constant(std::int64_t k) { return (((k % 2) + 2) % 2) / 2.0; }

/// Invariant character (omega, mu, Psi) on S^2.
struct InvariantCharacter {
    Group group = Group::Circle;
    AxisymmetricForm form;
    std::function<Vec3(Vec3)> mu;            // moment as a vector in R^3 ~ g*
    std::function<double(double)> psi_latitude;  // Psi of the latitude loop at height z, run along d/dphi
    std::map<double, double> psi_overrides;   // explicit Psi values on chosen latitudes
    double weight_north = 0;                 // inertia character weights at the poles
    double weight_south = 0;

    double psi(double z) const {
        if (auto it = psi_overrides.find(z); it != psi_overrides.end()) return it->second;
        return psi_latitude(z);
    }
};

/// Canonical character of a uniform form of total k. Circle: mu = c - (k/2) z
/// along the axis. SU(2): mu(p) = -(k/2) p. Psi on latitude loops is the
/// enclosed curvature (Stokes), and the pole weights are the pole moments.
inline InvariantCharacter canonical_character(Group g, std::int64_t k, std::optional<double> c = std::nullopt) {
    InvariantCharacter ch;
    ch.group = g;
    ch.form = uniform_form(static_cast<double>(k));
    if (g == Group::Circle) {
        auto m = moment_from_form(ch.form, c.value_or(default_constant(k)));
        ch.mu = [m](Vec3 p) { return Vec3{0, 0, m(p.z)}; };
    } else {
        const double off = c.value_or(0.0);
        const double kk = static_cast<double>(k);
        ch.mu = [kk, off](Vec3 p) { return (-kk / 2) * p + Vec3{0, 0, off}; };
    }
    ch.psi_latitude = [F = ch.form.F](double z) { return mod_one(integrate(F, z, 1.0)); };
    ch.weight_north = ch.mu({0, 0, 1}).z;
    ch.weight_south = -ch.mu({0, 0, -1}).z;
    return ch;
}

/// Psi on the cycle t -> e^{tX} p (t in [0, 1]) closed by the arrow e^{-X}:
/// <mu(p), X> mod 1.
inline double one_param_cycle_value(const InvariantCharacter& ch, Vec3 X, Vec3 p) {
    return mod_one(dot(ch.mu(p), X));
}

/// Same value by the Stokes route: shrink p to the fixed point X/|X| of the
/// flow, picking up |X| times the enclosed curvature, plus the inertia
/// character there.
inline double one_param_cycle_value_stokes(const InvariantCharacter& ch, Vec3 X, Vec3 p) {
    const double m = X.norm();
    if (m == 0) return 0;
    const Vec3 axis = (1.0 / m) * X;
    const double inertia = m * dot(ch.mu(axis), axis);
    return mod_one(m * cap_integral(ch.form, axis, dot(p, axis)) + inertia);
}

// ---------------------------------------------------------------------------
// Coadjoint orbits

struct CoadjointResult {
    bool exists = false;
    std::string obstruction;
    double total = 0;  // total curvature of the orbit form
    std::optional<InvariantCharacter> character;
};

/// Torus R/Z: the orbit of lambda is a point with stabilizer T; lambda must be
/// a character t -> lambda t, i.e. an integer.
inline CoadjointResult coadjoint_character_torus(const Rational& lambda) {
    CoadjointResult r;
    r.exists = is_integer(lambda);
    if (!r.exists) r.obstruction = "lambda = " + to_string(lambda) + " is not in the character lattice Z";
    return r;
}

/// SU(2): the orbit through lambda is the sphere of radius |lambda|; its form,
/// normalized so that the moment map is the orbit inclusion, has profile
/// F = |lambda| and total 2 |lambda|. Prequantizable iff that total is an
/// integer (the stabilizer torus character lifts).
inline CoadjointResult coadjoint_character_su2(Vec3 lambda, double tol = 1e-9) {
    CoadjointResult r;
    const double rad = lambda.norm();
    AxisymmetricForm w{[rad](double) { return rad; }};
    r.total = w.total();
    const double k = std::round(r.total);
    r.exists = std::abs(r.total - k) < tol;
    if (r.exists) {
        r.character = canonical_character(Group::SU2, static_cast<std::int64_t>(k));
    } else {
        r.obstruction = "orbit curvature " + std::to_string(r.total) + " is not an integer";
    }
    return r;
}

// ---------------------------------------------------------------------------
// The center character of SU(2)

struct CenterValue {
    double value = 0;     // in [0, 1)
    Rational exact{0};    // certified half-integer
    bool certified = false;
};

inline CenterValue certify_half(double v, double tol = 1e-9) {
    CenterValue c;
    const double twice = 2 * mod_one(v);
    const double n = std::round(twice);
    c.certified = std::abs(twice - n) < 2 * tol;
    c.exact = frac(Rational(static_cast<std::int64_t>(n), 2));
    // representative of v mod 1 closest to the certified value
    c.value = to_double(c.exact) + (mod_one(v) - n / 2);
    return c;
}

/// chi(-1) by the hemisphere route: X with e^X = -1, p on the great circle
/// orthogonal to X (so <mu(p), X> = 0), integrate omega over the half-sphere
/// bounded by the orbit of p.
inline CenterValue su2_center_character(std::int64_t k) {
    const auto ch = canonical_character(Group::SU2, k);
    const Vec3 axis = Vec3{1, 2, 2}.normalized();
    const Vec3 p = frame(axis)[0];
    const double value = cap_integral(ch.form, axis, 0.0) - dot(ch.mu(p), axis);
    return certify_half(value);
}

struct ArchimedesReport {
    std::vector<double> values;
    double spread = 0;
    bool pass = false;
};

/// For random (X, p) with e^X = -1: int_B omega - <mu(p), X> mod 1 with B the
/// cap bounded by the orbit of p (taken |X| times).
inline ArchimedesReport archimedes_check(std::int64_t k, int trials, std::uint64_t seed, double tol = 1e-9) {
    if (trials < 1) throw std::invalid_argument("archimedes_check needs at least one trial");
    const auto ch = canonical_character(Group::SU2, k);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, 1);
    ArchimedesReport r;
    const double expect = mod_one(static_cast<double>(k) / 2);
    r.pass = true;
    for (int t = 0; t < trials; ++t) {
        const Vec3 axis = random_unit(rng);
        const std::int64_t m = pick(rng) ? 3 : 1;
        if (!exp_is_minus_one(m)) throw std::logic_error("multiplicity must be odd");
        const Vec3 p = random_unit(rng);
        const double v = mod_one(static_cast<double>(m) * cap_integral(ch.form, axis, dot(p, axis)) -
                                 dot(ch.mu(p), static_cast<double>(m) * axis));
        r.values.push_back(v);
        if (circle_distance(v, expect) > tol) r.pass = false;
    }
    for (double v : r.values) r.spread = std::max(r.spread, circle_distance(v, r.values.front()));
    return r;
}

// ---------------------------------------------------------------------------
// Conditions 1-5 of the invariant description

struct LieConditionReport {
    std::array<bool, 5> pass{true, true, true, true, true};
    std::array<double, 5> max_error{0, 0, 0, 0, 0};
    std::array<std::string, 5> witness;
    bool basic = false;  // mu identically zero

    bool all() const { return pass[0] && pass[1] && pass[2] && pass[3] && pass[4]; }
};

inline LieConditionReport check_invariant_conditions(const InvariantCharacter& ch, std::uint64_t seed = 7, int samples = 20,
                                                     double tol = 1e-9) {
    LieConditionReport r;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> zdist(-0.95, 0.95);
    std::uniform_real_distribution<double> phidist(0, 1);
    auto note = [&](int i, double err, const std::string& where) {
        r.max_error[i] = std::max(r.max_error[i], err);
        if (err > tol && r.pass[i]) {
            r.pass[i] = false;
            r.witness[i] = where + " (error " + std::to_string(err) + ")";
        }
    };
    auto point = [](double z, double phi) {
        const double s = std::sqrt(1 - z * z);
        return Vec3{s * std::cos(2 * pi * phi), s * std::sin(2 * pi * phi), z};
    };
    // (1) invariance of omega and Psi, equivariance of mu
    for (int i = 0; i < samples; ++i) {
        const Vec3 p = point(zdist(rng), phidist(rng));
        Quaternion g;
        if (ch.group == Group::Circle) {
            g = exp_su2(Vec3{0, 0, phidist(rng)});
        } else {
            g = random_su2(rng);
        }
        const Vec3 gp = g.rotate(p);
        note(0, std::abs(ch.form.F(gp.z) - ch.form.F(p.z)), "omega at z=" + std::to_string(p.z));
        const Vec3 lhs = ch.mu(gp);
        const Vec3 rhs = ch.group == Group::Circle ? ch.mu(p) : g.rotate(ch.mu(p));
        note(0, (lhs - rhs).norm(), "mu at z=" + std::to_string(p.z));
    }
    // (2) contraction: mu(z2) - mu(z1) = -int_{z1}^{z2} F along the axis
    for (int i = 0; i < samples; ++i) {
        const double z1 = zdist(rng), z2 = zdist(rng);
        const double lhs = ch.mu(point(z2, 0)).z - ch.mu(point(z1, 0)).z;
        const double rhs = -integrate(ch.form.F, z1, z2);
        note(1, std::abs(lhs - rhs), "z in [" + std::to_string(z1) + ", " + std::to_string(z2) + "]");
    }
    // (3) Psi(dS) = int_S omega on caps, including every overridden latitude
    std::vector<double> lats;
    for (int i = 0; i < samples; ++i) lats.push_back(zdist(rng));
    for (const auto& [z, v] : ch.psi_overrides) lats.push_back(z);
    for (double z : lats) note(2, circle_distance(ch.psi(z), cap_integral(ch.form, {0, 0, 1}, z)), "cap z >= " + std::to_string(z));
    // (4) Psi(e^{tX} p closed by e^{-X}) = <mu(p), X> for the axial X of
    // smallest period: X = z for S^1, X = 2z for SU(2) (e^z = -1 there)
    const double period = ch.group == Group::SU2 ? 2 : 1;
    for (double z : lats)
        note(3, circle_distance(period * ch.psi(z), period * dot(ch.mu(point(z, 0)), {0, 0, 1})), "latitude z=" + std::to_string(z));
    // (5) inertia at the poles: t -> weight * t is a character of R/(period Z)
    // and its derivative is the pole moment
    const double mn = ch.mu({0, 0, 1}).z, ms = -ch.mu({0, 0, -1}).z;
    const double wn = period * ch.weight_north, ws = period * ch.weight_south;
    note(4, std::abs(wn - std::round(wn)), "north pole weight " + std::to_string(ch.weight_north));
    note(4, std::abs(ws - std::round(ws)), "south pole weight " + std::to_string(ch.weight_south));
    note(4, std::abs(ch.weight_north - mn), "north pole weight vs moment");
    note(4, std::abs(ch.weight_south - ms), "south pole weight vs moment");
    // basic iff mu = 0
    r.basic = true;
    for (int i = 0; i < samples; ++i)
        if (ch.mu(point(zdist(rng), phidist(rng))).norm() > tol) r.basic = false;
    return r;
}

}  // namespace dchar::lie
