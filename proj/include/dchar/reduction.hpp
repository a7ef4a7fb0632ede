#pragma once

#include "dchar/bundle.hpp"
#include "dchar/lie.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dchar {

class NotStable : public std::invalid_argument {
  public:
    NotStable(int g, int v, int w)
        : std::invalid_argument("subset is not orbit-closed: arrow g" + std::to_string(g) + ": v" + std::to_string(v) + " -> v" +
                                std::to_string(w) + " leaves it"),
          g_(g), v_(v), w_(w) {}
    int element() const { return g_; }
    int vertex() const { return v_; }
    int target() const { return w_; }

  private:
    int g_, v_, w_;
};

/// Full subcomplex on a G-stable vertex set with the induced action.
/// Vertices are renumbered in increasing parent order; simplices keep the
/// parent's orientation and order.
struct StableSubcomplex {
    std::vector<int> vertex_parent;
    std::vector<int> edge_parent;
    std::vector<int> face_parent;
    GroupAction action;
};

inline StableSubcomplex stable_subcomplex(const GroupAction& a, std::vector<int> subset) {
    const auto& k = a.complex();
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    if (subset.empty()) throw std::invalid_argument("empty vertex subset");
    std::vector<int> local(k.num_vertices(), -1);
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (subset[i] < 0 || subset[i] >= k.num_vertices())
            throw std::out_of_range("vertex " + std::to_string(subset[i]) + " out of range");
        local[subset[i]] = static_cast<int>(i);
    }
    for (int v : subset)
        for (int g = 0; g < a.group().order(); ++g)
            if (local[a.act(g, v)] < 0) throw NotStable(g, v, a.act(g, v));
    StableSubcomplex n;
    n.vertex_parent = subset;
    SimplicialComplex sub(static_cast<int>(subset.size()), k.name() + "/N");
    for (int e = 0; e < k.num_edges(); ++e) {
        const auto& vs = k.edge(e);
        if (local[vs[0]] < 0 || local[vs[1]] < 0) continue;
        sub.add_edge(local[vs[0]], local[vs[1]]);
        n.edge_parent.push_back(e);
    }
    for (int f = 0; f < k.num_faces(); ++f) {
        const auto& vs = k.face(f);
        if (local[vs[0]] < 0 || local[vs[1]] < 0 || local[vs[2]] < 0) continue;
        sub.add_face(local[vs[0]], local[vs[1]], local[vs[2]]);
        n.face_parent.push_back(f);
    }
    const int n_g = a.group().order();
    std::vector<int> vm(static_cast<std::size_t>(n_g) * subset.size());
    for (int g = 0; g < n_g; ++g)
        for (std::size_t i = 0; i < subset.size(); ++i) vm[g * subset.size() + i] = local[a.act(g, subset[i])];
    n.action = GroupAction(a.group(), std::move(sub), std::move(vm));
    return n;
}

struct VanishingReport {
    bool ok = true;
    int g = -1;
    int edge = -1;  // parent edge index
    Rational alpha{0};

    explicit operator bool() const { return ok; }
};

/// alpha vanishes on every (g, e) with e an edge of N.
inline VanishingReport in_vanishing_subcategory(const GroupAction& a, const DC21Cochain& x, const StableSubcomplex& n) {
    check_shape(a, x);
    const int ne = a.complex().num_edges();
    for (int g = 0; g < a.group().order(); ++g)
        for (int e : n.edge_parent) {
            const auto& v = x.alpha[static_cast<std::size_t>(g) * ne + e];
            if (v != 0) return VanishingReport{false, g, e, v};
        }
    return {};
}

inline VanishingReport in_vanishing_subcategory(const GroupAction& a, const DiscreteBundle& b, const StableSubcomplex& n) {
    return in_vanishing_subcategory(a, dch(a, b), n);
}

namespace detail {
template <typename T>
std::vector<T> restrict_rows(const std::vector<T>& v, int groups, int parent_count, const std::vector<int>& keep) {
    std::vector<T> out;
    out.reserve(static_cast<std::size_t>(groups) * keep.size());
    for (int g = 0; g < groups; ++g)
        for (int s : keep) out.push_back(v[static_cast<std::size_t>(g) * parent_count + s]);
    return out;
}
}  // namespace detail

/// i^* x on N, landing in DC^2_2 (alpha = 0 there).
inline DC21Cochain restrict(const GroupAction& a, const DC21Cochain& x, const StableSubcomplex& n) {
    if (auto r = in_vanishing_subcategory(a, x, n); !r)
        throw std::invalid_argument("restrict: alpha(g" + std::to_string(r.g) + ", e" + std::to_string(r.edge) + ") = " +
                                    to_string(r.alpha) + " on N");
    const auto& k = a.complex();
    const int ng = a.group().order();
    DC21Cochain out;
    out.c = detail::restrict_rows(x.c, 1, k.num_faces(), n.face_parent);
    out.h = detail::restrict_rows(x.h, 1, k.num_edges(), n.edge_parent);
    out.omega = detail::restrict_rows(x.omega, 1, k.num_faces(), n.face_parent);
    out.b = detail::restrict_rows(x.b, ng, k.num_edges(), n.edge_parent);
    out.f = detail::restrict_rows(x.f, ng, k.num_vertices(), n.vertex_parent);
    out.alpha = detail::restrict_rows(x.alpha, ng, k.num_edges(), n.edge_parent);
    if (auto chk = is_cocycle(n.action, out); !chk) throw std::logic_error("restriction is not a cocycle: " + chk.component);
    return out;
}

inline DiscreteBundle restrict_bundle(const GroupAction& a, const DiscreteBundle& b, const StableSubcomplex& n) {
    const auto& k = a.complex();
    return DiscreteBundle{detail::restrict_rows(b.A, 1, k.num_edges(), n.edge_parent),
                          detail::restrict_rows(b.phi, a.group().order(), k.num_vertices(), n.vertex_parent),
                          detail::restrict_rows(b.chern, 1, k.num_faces(), n.face_parent)};
}

struct CommuteReport {
    bool ok = false;
    std::optional<GaugeCochain> witness;
    DC21Cochain restricted;  // i^* DCh(B)
    DC21Cochain reduced;     // DCh(i^* B)
    std::string certificate;
};

/// Compares i^* DCh(B) with DCh(i^* B) on N and returns the gauge witness.
inline CommuteReport commute_check(const GroupAction& a, const DiscreteBundle& b, const StableSubcomplex& n) {
    CommuteReport r;
    const auto x = dch(a, b);
    if (auto v = in_vanishing_subcategory(a, x, n); !v)
        throw std::invalid_argument("commute_check: bundle is not in the vanishing subcategory at (g" + std::to_string(v.g) +
                                    ", e" + std::to_string(v.edge) + ")");
    r.restricted = restrict(a, x, n);
    r.reduced = dch(n.action, restrict_bundle(a, b, n));
    r.witness = cohomologous(n.action, r.restricted, r.reduced);
    r.ok = r.witness.has_value();
    if (!r.ok) {
        if (r.restricted.omega != r.reduced.omega)
            r.certificate = "curvature differs on N";
        else if (r.restricted.alpha != r.reduced.alpha)
            r.certificate = "alpha differs on N";
        else
            r.certificate = "flat difference is not exact mod Z";
    }
    return r;
}

// ---------------------------------------------------------------------------
// SU(2) on S^2 reduced at the axial torus

struct SU2Reduction {
    double z_star = 0;           // height of mu_T^{-1}(0)
    double moment = 0;           // <mu(p), X> at the zero level, X the axial generator
    double equator_holonomy = 0; // Psi of the level circle
    lie::CenterValue chi;        // chi(-1) on the residual {+1, -1}
};

/// Restricts the canonical SU(2) character of total k to the zero level of
/// the axial moment mu_T, where the character is basic and descends to the
/// point with residual inertia {+1, -1} = ker(T -> SO(3)); chi(-1) is Psi of
/// the cycle e^{tX} p closed by the arrow -1 minus the level-circle holonomy.
inline SU2Reduction reduce_su2_example(std::int64_t k, double tol = 1e-9) {
    const auto ch = lie::canonical_character(lie::Group::SU2, k);
    auto point = [](double z) { return lie::Vec3{std::sqrt(std::max(0.0, 1 - z * z)), 0, z}; };
    const lie::Vec3 X{0, 0, 1};
    if (!lie::exp_is_minus_one(1)) throw std::logic_error("axial generator must exponentiate to -1");
    auto mu_t = [&](double z) { return lie::dot(ch.mu(point(z)), X); };
    SU2Reduction r;
    double lo = -1, hi = 1;
    double flo = mu_t(lo), fhi = mu_t(hi);
    if (std::abs(flo) < tol && std::abs(fhi) < tol) {
        r.z_star = 0;
    } else {
        if (flo * fhi > 0) throw std::domain_error("axial moment has no zero level");
        for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
            const double mid = (lo + hi) / 2;
            const double fm = mu_t(mid);
            if ((fm < 0) == (flo < 0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        r.z_star = (lo + hi) / 2;
    }
    r.moment = mu_t(r.z_star);
    if (std::abs(r.moment) > tol) throw std::logic_error("zero level not reached");
    r.equator_holonomy = ch.psi(r.z_star);
    r.chi = lie::certify_half(r.moment - r.equator_holonomy, tol);
    return r;
}

}  // namespace dchar
