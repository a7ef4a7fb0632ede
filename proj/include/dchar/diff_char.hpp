#pragma once

#include "dchar/cycles.hpp"

#include <array>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dchar {

// ---------------------------------------------------------------------------
// DC^n_s on M alone

/// (c, h, omega) of degree n with truncation s; omega vanishes when n < s.
struct DCCochain {
    int degree = 0;
    int truncation = 2;
    Cochain c;      // Z, degree n
    Cochain h;      // Q, degree n - 1 (empty for n = 0)
    Cochain omega;  // Q, degree n
};

inline DCCochain zero_dc(const SimplicialComplex& k, int degree, int truncation) {
    DCCochain x{degree, truncation, zero_cochain(k, degree, Ring::Z), Cochain{degree - 1, Ring::Q, {}},
                zero_cochain(k, degree, Ring::Q)};
    if (degree >= 1) x.h = zero_cochain(k, degree - 1, Ring::Q);
    return x;
}

/// (c, h, omega) -> (dc, omega - c - dh, d omega), truncated.
inline DCCochain dc_differential(const SimplicialComplex& k, const DCCochain& x) {
    if (x.degree > 1) throw std::invalid_argument("dc_differential needs degree <= 1 on a 2-complex");
    DCCochain out = zero_dc(k, x.degree + 1, x.truncation);
    out.c = coboundary(k, x.c);
    out.c.ring = Ring::Z;
    for (int i = 0; i < k.count(x.degree); ++i) {
        Rational v = x.omega.values[i] - x.c.values[i];
        out.h.values[i] = v;
    }
    if (x.degree >= 1) {
        auto dh = coboundary(k, x.h);
        for (int i = 0; i < k.count(x.degree); ++i) out.h.values[i] -= dh.values[i];
    }
    if (out.degree >= out.truncation) out.omega = coboundary(k, x.omega);
    return out;
}

// ---------------------------------------------------------------------------
// DC^2_{2-1} on the action groupoid

/// ((c, h, omega), [(b, f, alpha)]). Vectors on Gamma are indexed by
/// g * |simplices| + simplex.
struct DC21Cochain {
    std::vector<std::int64_t> c;  // faces
    std::vector<Rational> h;      // edges
    std::vector<Rational> omega;  // faces
    std::vector<std::int64_t> b;  // G x edges
    std::vector<Rational> f;      // G x vertices
    std::vector<Rational> alpha;  // G x edges

    friend bool operator==(const DC21Cochain&, const DC21Cochain&) = default;
};

inline DC21Cochain zero_dc21(const GroupAction& a) {
    const auto& k = a.complex();
    const auto n = static_cast<std::size_t>(a.group().order());
    return DC21Cochain{std::vector<std::int64_t>(k.num_faces(), 0),
                       std::vector<Rational>(k.num_edges(), Rational(0)),
                       std::vector<Rational>(k.num_faces(), Rational(0)),
                       std::vector<std::int64_t>(n * k.num_edges(), 0),
                       std::vector<Rational>(n * k.num_vertices(), Rational(0)),
                       std::vector<Rational>(n * k.num_edges(), Rational(0))};
}

inline void check_shape(const GroupAction& a, const DC21Cochain& x) {
    const auto& k = a.complex();
    const auto n = static_cast<std::size_t>(a.group().order());
    if (x.c.size() != static_cast<std::size_t>(k.num_faces()) || x.omega.size() != x.c.size() ||
        x.h.size() != static_cast<std::size_t>(k.num_edges()) || x.b.size() != n * k.num_edges() ||
        x.alpha.size() != x.b.size() || x.f.size() != n * k.num_vertices())
        throw std::invalid_argument("cochain shape does not match the action");
}

namespace detail {
inline std::vector<Rational> to_q(const std::vector<std::int64_t>& v) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (auto x : v) out.emplace_back(x);
    return out;
}
inline std::vector<Rational> delta(const GroupAction& a, int p, int q, const std::vector<Rational>& v) {
    return simplicial_delta(a, NerveCochain{{p, q}, v}).values;
}
inline std::vector<Rational> dgamma(const GroupAction& a, int p, int q, const std::vector<Rational>& v) {
    return nerve_d(a, NerveCochain{{p, q}, v}).values;
}
inline std::vector<Rational> sub(std::vector<Rational> x, const std::vector<Rational>& y) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= y[i];
    return x;
}
inline std::string cell_name(const GroupAction& a, int p, int q, std::size_t idx) {
    auto pt = cell_point(a, {p, q}, idx);
    std::ostringstream os;
    os << "(";
    for (int g : pt.arrows) os << "g" << g << ", ";
    os << (q == 0 ? "v" : q == 1 ? "e" : "f") << pt.simplex << ")";
    return os.str();
}
}  // namespace detail

/// Puts the class [(b, f, alpha)] in normal form: f in [0, 1), b adjusted
/// by dn so that (b + dn, f - n, alpha) represents the same class.
inline DC21Cochain normalize(const GroupAction& a, DC21Cochain x) {
    check_shape(a, x);
    const auto& k = a.complex();
    const int nv = k.num_vertices();
    const int ne = k.num_edges();
    for (int g = 0; g < a.group().order(); ++g) {
        std::vector<std::int64_t> n(nv);
        for (int v = 0; v < nv; ++v) {
            auto& fv = x.f[static_cast<std::size_t>(g) * nv + v];
            n[v] = floor_of(fv);
            fv -= n[v];
        }
        for (int e = 0; e < ne; ++e) x.b[static_cast<std::size_t>(g) * ne + e] += n[k.edge(e)[1]] - n[k.edge(e)[0]];
    }
    return x;
}

/// First violated closure equation, if any.
struct CocycleCheck {
    bool ok = true;
    std::string equation;  // "M", "Gamma" or "Gamma2"
    std::string component;
    std::string location;
    Rational residual{0};

    explicit operator bool() const { return ok; }
};

/// Checks d(c, h, omega) = 0, delta(c, h, omega) = d(b, f, alpha) and
/// delta[(b, f, alpha)] = 0 exactly.
inline CocycleCheck is_cocycle(const GroupAction& a, const DC21Cochain& x) {
    check_shape(a, x);
    const auto& k = a.complex();
    auto fail = [](std::string eq, std::string comp, std::string loc, Rational r) {
        return CocycleCheck{false, std::move(eq), std::move(comp), std::move(loc), r};
    };
    // M: c = omega - dh  (dc and d omega vanish in top degree)
    const auto dh = coboundary_values(k, 1, x.h);
    for (int i = 0; i < k.num_faces(); ++i) {
        const Rational r = x.omega[i] - dh[i] - Rational(x.c[i]);
        if (r != 0) return fail("M", "omega - c - dh", "f" + std::to_string(i), r);
    }
    // Gamma: b = alpha - df - delta h, delta omega = d alpha, delta c = db
    const auto df = detail::dgamma(a, 1, 0, x.f);
    const auto dlh = detail::delta(a, 0, 1, x.h);
    for (std::size_t i = 0; i < x.b.size(); ++i) {
        const Rational r = x.alpha[i] - df[i] - dlh[i] - Rational(x.b[i]);
        if (r != 0) return fail("Gamma", "alpha - b - df - delta h", detail::cell_name(a, 1, 1, i), r);
    }
    const auto dlw = detail::delta(a, 0, 2, x.omega);
    const auto da = detail::dgamma(a, 1, 1, x.alpha);
    for (std::size_t i = 0; i < dlw.size(); ++i)
        if (dlw[i] != da[i]) return fail("Gamma", "delta omega - d alpha", detail::cell_name(a, 1, 2, i), dlw[i] - da[i]);
    const auto dlc = detail::delta(a, 0, 2, detail::to_q(x.c));
    const auto db = detail::dgamma(a, 1, 1, detail::to_q(x.b));
    for (std::size_t i = 0; i < dlc.size(); ++i)
        if (dlc[i] != db[i]) return fail("Gamma", "delta c - db", detail::cell_name(a, 1, 2, i), dlc[i] - db[i]);
    // Gamma2: delta alpha = 0, delta f integral, delta b = -d(delta f)
    const auto dla = detail::delta(a, 1, 1, x.alpha);
    for (std::size_t i = 0; i < dla.size(); ++i)
        if (dla[i] != 0) return fail("Gamma2", "delta alpha", detail::cell_name(a, 2, 1, i), dla[i]);
    const auto dlf = detail::delta(a, 1, 0, x.f);
    for (std::size_t i = 0; i < dlf.size(); ++i)
        if (!is_integer(dlf[i])) return fail("Gamma2", "delta f mod Z", detail::cell_name(a, 2, 0, i), frac(dlf[i]));
    const auto dlb = detail::delta(a, 1, 1, detail::to_q(x.b));
    const auto ddlf = detail::dgamma(a, 2, 0, dlf);
    for (std::size_t i = 0; i < dlb.size(); ++i)
        if (dlb[i] + ddlf[i] != 0) return fail("Gamma2", "delta b + d delta f", detail::cell_name(a, 2, 1, i), dlb[i] + ddlf[i]);
    return {};
}

/// Morphism data (a, t, 0) with a in C^1(M, Z), t in C^0(M, Q).
struct GaugeCochain {
    std::vector<std::int64_t> a;
    std::vector<Rational> t;
};

/// y + D(a, t, 0), in normal form:
/// c += da, h -= a + dt, f += delta t, b += delta a.
inline DC21Cochain apply_gauge(const GroupAction& act, const DC21Cochain& y, const GaugeCochain& g) {
    check_shape(act, y);
    const auto& k = act.complex();
    if (g.a.size() != static_cast<std::size_t>(k.num_edges()) || g.t.size() != static_cast<std::size_t>(k.num_vertices()))
        throw std::invalid_argument("gauge shape does not match the complex");
    DC21Cochain x = y;
    const auto aq = detail::to_q(g.a);
    const auto da = coboundary_values(k, 1, aq);
    const auto dt = coboundary_values(k, 0, g.t);
    for (int i = 0; i < k.num_faces(); ++i) x.c[i] += da[i].numerator();
    for (int i = 0; i < k.num_edges(); ++i) x.h[i] -= aq[i] + dt[i];
    const auto dlt = detail::delta(act, 0, 0, g.t);
    for (std::size_t i = 0; i < x.f.size(); ++i) x.f[i] += dlt[i];
    const auto dla = detail::delta(act, 0, 1, aq);
    for (std::size_t i = 0; i < x.b.size(); ++i) x.b[i] += dla[i].numerator();
    return normalize(act, x);
}

/// Gauge (a, t) with x = y + D(a, t, 0) when the classes agree.
inline std::optional<GaugeCochain> cohomologous(const GroupAction& act, const DC21Cochain& x, const DC21Cochain& y) {
    if (!is_cocycle(act, x) || !is_cocycle(act, y)) throw std::invalid_argument("cohomologous expects cocycles");
    if (x.omega != y.omega || x.alpha != y.alpha) return std::nullopt;
    const auto& k = act.complex();
    // D t = (dt, -delta t) must match -(dh_x - h_y, f_x - f_y) mod Z
    const auto d0 = total_matrix(act, 0, 1);
    std::vector<Rational> rhs;
    for (int i = 0; i < k.num_edges(); ++i) rhs.push_back(-(x.h[i] - y.h[i]));
    for (std::size_t i = 0; i < x.f.size(); ++i) rhs.push_back(-(x.f[i] - y.f[i]));
    const auto sol = solve_mod_one(d0, rhs);
    if (!sol.solution) return std::nullopt;
    GaugeCochain g;
    g.t = *sol.solution;
    const auto dt = coboundary_values(k, 0, g.t);
    for (int i = 0; i < k.num_edges(); ++i) {
        const Rational ai = -(x.h[i] - y.h[i]) - dt[i];
        if (!is_integer(ai)) throw std::logic_error("gauge solve produced a non-integral edge term");
        g.a.push_back(ai.numerator());
    }
    if (normalize(act, x) != apply_gauge(act, y, g)) throw std::logic_error("gauge witness failed verification");
    return g;
}

// ---------------------------------------------------------------------------
// Characters

/// Theta = (omega, alpha, 0).
struct Theta {
    std::vector<Rational> omega;
    std::vector<Rational> alpha;
    friend bool operator==(const Theta&, const Theta&) = default;
};

struct DiffCharacter {
    Theta theta;
    std::vector<CycleGenerator> generators;
    std::vector<Rational> psi;  // in [0, 1), aligned with generators
};

inline Theta kostant_eta(const GroupAction& a, const DC21Cochain& x) {
    if (!is_cocycle(a, x)) throw std::invalid_argument("kostant_eta expects a cocycle");
    return Theta{x.omega, x.alpha};
}

inline DiffCharacter extract_character(const GroupAction& a, const DC21Cochain& x, const std::vector<CycleGenerator>& gens) {
    if (auto chk = is_cocycle(a, x); !chk)
        throw std::invalid_argument("extract_character on a non-cocycle (" + chk.equation + ": " + chk.component + ")");
    DiffCharacter ch{Theta{x.omega, x.alpha}, gens, {}};
    for (const auto& g : gens) ch.psi.push_back(frac(evaluate(a, x.h, x.f, g.cycle)));
    return ch;
}

inline DiffCharacter extract_character(const GroupAction& a, const DC21Cochain& x) {
    return extract_character(a, x, cycle_generators(a));
}

/// Per-condition verdicts for (1) closure of Theta, (2) the Gamma_2 cocycle
/// law and inertia consistency, (3) rectangles, (4) faces.
struct ConditionReport {
    std::array<bool, 4> pass{true, true, true, true};
    std::array<std::string, 4> witness;

    bool all() const { return pass[0] && pass[1] && pass[2] && pass[3]; }
    int failures() const { return !pass[0] + !pass[1] + !pass[2] + !pass[3]; }
    void fail(int condition, std::string w) {
        if (pass[condition - 1]) witness[condition - 1] = std::move(w);
        pass[condition - 1] = false;
    }
};

namespace detail {

struct Realization {
    ConditionReport report;
    std::vector<Rational> h;  // edges
    std::vector<Rational> f;  // G x vertices, unreduced
};

inline Rational psi_of(const DiffCharacter& ch, CycleGenerator::Kind kind, int edge, int element, int vertex, int component) {
    for (std::size_t i = 0; i < ch.generators.size(); ++i) {
        const auto& g = ch.generators[i];
        if (g.kind != kind) continue;
        if (kind == CycleGenerator::TreeLoop && g.edge == edge) return ch.psi.at(i);
        if (kind == CycleGenerator::Inertia && g.element == element && g.vertex == vertex) return ch.psi.at(i);
        if (kind == CycleGenerator::Closing && g.element == element && g.component == component) return ch.psi.at(i);
    }
    throw std::invalid_argument("character has no value on a required generator");
}

/// Realizes Psi by (h, f) in spanning-tree gauge and evaluates the four
/// conditions on everything the realization did not use.
inline Realization realize(const GroupAction& a, const DiffCharacter& ch) {
    const auto& k = a.complex();
    const auto& grp = a.group();
    const int nv = k.num_vertices();
    const int ne = k.num_edges();
    const int n = grp.order();
    if (ch.theta.omega.size() != static_cast<std::size_t>(k.num_faces()) ||
        ch.theta.alpha.size() != static_cast<std::size_t>(n) * ne || ch.psi.size() != ch.generators.size())
        throw std::invalid_argument("character shape does not match the action");
    const auto sk = groupoid_skeleton(a);
    Realization r;
    auto& rep = r.report;
    const auto& omega = ch.theta.omega;
    const auto& alpha = ch.theta.alpha;

    // (1) Theta closed: delta omega = d alpha, delta alpha = 0, alpha(e, .) = 0
    {
        const auto dlw = delta(a, 0, 2, omega);
        const auto da = dgamma(a, 1, 1, alpha);
        for (std::size_t i = 0; i < dlw.size() && rep.pass[0]; ++i)
            if (dlw[i] != da[i]) rep.fail(1, "delta omega != d alpha at " + cell_name(a, 1, 2, i));
        const auto dla = delta(a, 1, 1, alpha);
        for (std::size_t i = 0; i < dla.size() && rep.pass[0]; ++i)
            if (dla[i] != 0) rep.fail(1, "delta alpha != 0 at " + cell_name(a, 2, 1, i));
    }

    // h: zero on the forest, Psi on the loop of each other edge
    r.h.assign(ne, Rational(0));
    for (int e = 0; e < ne; ++e)
        if (!sk.tree_edge[e]) r.h[e] = frac(psi_of(ch, CycleGenerator::TreeLoop, e, -1, -1, -1));
    auto h_dir = [&](int u, int w) {
        auto o = k.find_edge(u, w);
        return Rational(o.sign) * r.h[o.index];
    };
    auto alpha_dir = [&](int g, int u, int w) {
        auto o = k.find_edge(u, w);
        return Rational(o.sign) * alpha[static_cast<std::size_t>(g) * ne + o.index];
    };

    // (4) Psi(dS) = omega(S) mod Z
    {
        const auto dh = coboundary_values(k, 1, r.h);
        for (int i = 0; i < k.num_faces(); ++i)
            if (!is_integer(omega[i] - dh[i])) {
                rep.fail(4, "face f" + std::to_string(i) + ": Psi(dS) - omega(S) = " + to_string(frac(dh[i] - omega[i])));
                break;
            }
    }

    // f on generators: root values, then transport along the forest by (3)
    r.f.assign(static_cast<std::size_t>(n) * nv, Rational(0));
    std::vector<char> known(n, 0);
    known[grp.identity()] = 1;
    for (std::size_t si = 0; si < sk.group_generators.size(); ++si) {
        const int s = sk.group_generators[si];
        auto F = [&](int v) -> Rational& { return r.f[static_cast<std::size_t>(s) * nv + v]; };
        for (int c = 0; c < static_cast<int>(sk.roots.size()); ++c)
            F(sk.roots[c]) = sk.q_tree[si][c] ? Rational(0) : frac(psi_of(ch, CycleGenerator::Closing, -1, s, -1, c));
        for (int w : sk.bfs_order) {
            const int u = sk.parent[w];
            if (u < 0) continue;
            F(w) = F(u) + alpha_dir(s, u, w) - h_dir(u, w) + h_dir(a.act(s, u), a.act(s, w));
        }
        known[s] = 1;
    }
    // remaining elements through words: f(s x, v) = f(s, x v) + f(x, v)
    {
        std::deque<int> q{grp.identity()};
        for (int s : sk.group_generators) q.push_back(s);
        while (!q.empty()) {
            const int x = q.front();
            q.pop_front();
            for (int s : sk.group_generators) {
                const int y = grp.mul(s, x);
                if (known[y]) continue;
                for (int v = 0; v < nv; ++v)
                    r.f[static_cast<std::size_t>(y) * nv + v] =
                        r.f[static_cast<std::size_t>(s) * nv + a.act(x, v)] + r.f[static_cast<std::size_t>(x) * nv + v];
                known[y] = 1;
                q.push_back(y);
            }
        }
    }

    // (2) f(g2 g1, v) = f(g2, g1 v) + f(g1, v) mod Z, and Psi on inertia loops
    {
        const auto dlf = delta(a, 1, 0, r.f);
        for (std::size_t i = 0; i < dlf.size(); ++i)
            if (!is_integer(dlf[i])) {
                rep.fail(2, "arrow triangle " + cell_name(a, 2, 0, i) + " has Psi = " + to_string(frac(dlf[i])));
                break;
            }
        for (std::size_t i = 0; i < ch.generators.size() && rep.pass[1]; ++i) {
            const auto& g = ch.generators[i];
            if (g.kind != CycleGenerator::Inertia) continue;
            const Rational realized = r.f[static_cast<std::size_t>(g.element) * nv + g.vertex];
            if (!is_integer(realized - ch.psi[i]))
                rep.fail(2, g.label() + ": Psi = " + to_string(ch.psi[i]) + " but the arrow relations give " + to_string(frac(realized)));
        }
    }

    // (3) Psi(d eta) = alpha(g, e) mod Z on every rectangle
    {
        const auto df = dgamma(a, 1, 0, r.f);
        const auto dlh = delta(a, 0, 1, r.h);
        for (std::size_t i = 0; i < alpha.size(); ++i)
            if (!is_integer(alpha[i] - df[i] - dlh[i])) {
                rep.fail(3, "rectangle " + cell_name(a, 1, 1, i) + ": Psi(d eta) - alpha = " + to_string(frac(df[i] + dlh[i] - alpha[i])));
                break;
            }
    }
    return r;
}

}  // namespace detail

inline ConditionReport check_conditions(const GroupAction& a, const DiffCharacter& ch) { return detail::realize(a, ch).report; }

class ConditionFailure : public std::runtime_error {
  public:
    ConditionFailure(int condition, const std::string& witness)
        : std::runtime_error("condition (" + std::to_string(condition) + ") fails: " + witness), condition_(condition) {}
    int condition() const { return condition_; }

  private:
    int condition_;
};

/// b = alpha - df - delta h and c = omega - dh from a spanning-tree lift.
inline DC21Cochain reconstruct_cocycle(const GroupAction& a, const DiffCharacter& ch) {
    auto r = detail::realize(a, ch);
    for (int i = 0; i < 4; ++i)
        if (!r.report.pass[i]) throw ConditionFailure(i + 1, r.report.witness[i]);
    const auto& k = a.complex();
    DC21Cochain x = zero_dc21(a);
    x.omega = ch.theta.omega;
    x.alpha = ch.theta.alpha;
    x.h = r.h;
    x.f = r.f;
    for (auto& v : x.f) v = frac(v);
    const auto dh = coboundary_values(k, 1, x.h);
    for (int i = 0; i < k.num_faces(); ++i) x.c[i] = (x.omega[i] - dh[i]).numerator();
    const auto df = detail::dgamma(a, 1, 0, x.f);
    const auto dlh = detail::delta(a, 0, 1, x.h);
    for (std::size_t i = 0; i < x.b.size(); ++i) x.b[i] = (x.alpha[i] - df[i] - dlh[i]).numerator();
    if (auto chk = is_cocycle(a, x); !chk)
        throw std::logic_error("reconstruction is not a cocycle: " + chk.equation + " " + chk.component + " at " + chk.location);
    return x;
}

// ---------------------------------------------------------------------------
// Classification and the Kostant sequence

/// H^1 of the total R/Z complex of the nerve.
inline AbelianGroupPresentation classify_flat(const GroupAction& a) {
    std::vector<IntMatrix> d{total_matrix(a, 0, 2), total_matrix(a, 1, 2)};
    std::vector<std::size_t> dims{total_dimension(a, 0, 2), total_dimension(a, 1, 2), total_dimension(a, 2, 2)};
    return cohomology(d, dims, 1, Coefficients::CircleGroup);
}

/// H^2 of the total integer complex of the nerve (Chern classes).
inline AbelianGroupPresentation chern_group(const GroupAction& a) {
    std::vector<IntMatrix> d{total_matrix(a, 0, 3), total_matrix(a, 1, 3), total_matrix(a, 2, 3)};
    std::vector<std::size_t> dims{total_dimension(a, 0, 3), total_dimension(a, 1, 3), total_dimension(a, 2, 3),
                                  total_dimension(a, 3, 3)};
    return cohomology(d, dims, 2, Coefficients::Integers);
}

inline bool theta_closed(const GroupAction& a, const Theta& t) {
    if (t.omega.size() != static_cast<std::size_t>(a.complex().num_faces()) ||
        t.alpha.size() != static_cast<std::size_t>(a.group().order()) * a.complex().num_edges())
        throw std::invalid_argument("Theta shape does not match the action");
    if (detail::delta(a, 0, 2, t.omega) != detail::dgamma(a, 1, 1, t.alpha)) return false;
    const auto dla = detail::delta(a, 1, 1, t.alpha);
    return std::all_of(dla.begin(), dla.end(), [](const Rational& v) { return v == 0; });
}

struct KostantSection {
    std::optional<DC21Cochain> cocycle;
    // obstruction: an integral total 2-cycle and the non-integral period of Theta on it
    std::vector<std::int64_t> cycle;
    Rational period{0};
};

inline KostantSection kostant_section(const GroupAction& a, const Theta& t) {
    if (!theta_closed(a, t)) throw std::invalid_argument("kostant_section needs a closed Theta");
    const auto& k = a.complex();
    // D(h, f) = (dh, delta h + df, -delta f) = (omega, alpha, 0) mod Z
    const auto d1 = total_matrix(a, 1, 2);
    std::vector<Rational> rhs = t.omega;
    rhs.insert(rhs.end(), t.alpha.begin(), t.alpha.end());
    rhs.resize(d1.rows(), Rational(0));
    const auto sol = solve_mod_one(d1, rhs);
    KostantSection out;
    if (!sol.solution) {
        out.cycle = sol.obstruction->cycle;
        out.period = sol.obstruction->period;
        return out;
    }
    DC21Cochain x = zero_dc21(a);
    x.omega = t.omega;
    x.alpha = t.alpha;
    const auto& v = *sol.solution;
    for (int i = 0; i < k.num_edges(); ++i) x.h[i] = v[i];
    for (std::size_t i = 0; i < x.f.size(); ++i) x.f[i] = v[k.num_edges() + i];
    const auto dh = coboundary_values(k, 1, x.h);
    for (int i = 0; i < k.num_faces(); ++i) x.c[i] = (x.omega[i] - dh[i]).numerator();
    const auto df = detail::dgamma(a, 1, 0, x.f);
    const auto dlh = detail::delta(a, 0, 1, x.h);
    for (std::size_t i = 0; i < x.b.size(); ++i) x.b[i] = (x.alpha[i] - df[i] - dlh[i]).numerator();
    x = normalize(a, x);
    if (auto chk = is_cocycle(a, x); !chk) throw std::logic_error("kostant section is not a cocycle: " + chk.component);
    out.cocycle = x;
    return out;
}

/// A character lies in DC^2_2 exactly when alpha vanishes.
inline bool in_dc22(const DC21Cochain& x) {
    return std::all_of(x.alpha.begin(), x.alpha.end(), [](const Rational& v) { return v == 0; });
}

}  // namespace dchar
