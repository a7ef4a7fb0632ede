#pragma once

#include "dchar/group.hpp"
#include "dchar/smith.hpp"

#include <stdexcept>
#include <vector>

namespace dchar {

/// Point of the nerve level n: arrows (g_n, ..., g_1) composable onto a
/// simplex of M. arrows[0] is g_n (applied last), arrows.back() is g_1.
struct NervePoint {
    std::vector<int> arrows;
    int degree = 0;  // degree of the base simplex
    int simplex = 0;
    int sign = 1;  // orientation relative to the stored simplex

    int level() const { return static_cast<int>(arrows.size()); }
    friend bool operator==(const NervePoint&, const NervePoint&) = default;
};

/// i-th face map. d_0 drops g_n, d_i (0 < i < n) composes the i-th and
/// (i+1)-th factors, d_n acts on the base by g_1 and drops it.
inline NervePoint face_map(const GroupAction& a, int i, const NervePoint& p) {
    const int n = p.level();
    if (n < 1) throw std::invalid_argument("face map on level 0");
    if (i < 0 || i > n) throw std::out_of_range("face index out of range");
    NervePoint out = p;
    if (i == 0) {
        out.arrows.erase(out.arrows.begin());
    } else if (i < n) {
        out.arrows[i - 1] = a.group().mul(p.arrows[i - 1], p.arrows[i]);
        out.arrows.erase(out.arrows.begin() + i);
    } else {
        auto o = a.act_simplex(p.arrows.back(), p.degree, p.simplex);
        out.simplex = o.index;
        out.sign = p.sign * o.sign;
        out.arrows.pop_back();
    }
    return out;
}

/// Layout of cochains on G^p x (q-simplices of M): index = tuple * n_q + s,
/// with tuple = ((g_p * |G| + g_{p-1}) * |G| + ...) + g_1.
struct Bidegree {
    int p = 0;
    int q = 0;
};

inline std::size_t tuple_count(const GroupAction& a, int p) {
    std::size_t c = 1;
    for (int i = 0; i < p; ++i) c *= static_cast<std::size_t>(a.group().order());
    return c;
}

inline std::size_t cell_count(const GroupAction& a, Bidegree b) {
    return tuple_count(a, b.p) * static_cast<std::size_t>(a.complex().count(b.q));
}

inline std::vector<int> decode_tuple(const GroupAction& a, int p, std::size_t t) {
    std::vector<int> arrows(p);
    const auto n = static_cast<std::size_t>(a.group().order());
    for (int i = p - 1; i >= 0; --i) {
        arrows[i] = static_cast<int>(t % n);
        t /= n;
    }
    return arrows;
}

inline std::size_t encode_tuple(const GroupAction& a, const std::vector<int>& arrows) {
    std::size_t t = 0;
    for (int g : arrows) t = t * static_cast<std::size_t>(a.group().order()) + static_cast<std::size_t>(g);
    return t;
}

inline std::size_t cell_index(const GroupAction& a, const NervePoint& pt) {
    return encode_tuple(a, pt.arrows) * static_cast<std::size_t>(a.complex().count(pt.degree)) + pt.simplex;
}

inline NervePoint cell_point(const GroupAction& a, Bidegree b, std::size_t idx) {
    const auto ns = static_cast<std::size_t>(a.complex().count(b.q));
    return NervePoint{decode_tuple(a, b.p, idx / ns), b.q, static_cast<int>(idx % ns), 1};
}

/// Cochain of bidegree (p, q) with rational values.
struct NerveCochain {
    Bidegree bideg;
    std::vector<Rational> values;

    Rational at(const GroupAction& a, const NervePoint& pt) const { return Rational(pt.sign) * values[cell_index(a, pt)]; }
};

inline NerveCochain zero_nerve_cochain(const GroupAction& a, Bidegree b) {
    return NerveCochain{b, std::vector<Rational>(cell_count(a, b), Rational(0))};
}

/// delta = sum_i (-1)^i d_i^*, raising p by one.
inline NerveCochain simplicial_delta(const GroupAction& a, const NerveCochain& u) {
    const Bidegree out_b{u.bideg.p + 1, u.bideg.q};
    if (u.values.size() != cell_count(a, u.bideg)) throw std::invalid_argument("cochain size does not match its bidegree");
    NerveCochain out = zero_nerve_cochain(a, out_b);
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        const auto pt = cell_point(a, out_b, i);
        Rational s(0);
        for (int j = 0; j <= out_b.p; ++j) {
            const auto f = face_map(a, j, pt);
            s += (j % 2 == 0 ? 1 : -1) * u.at(a, f);
        }
        out.values[i] = s;
    }
    return out;
}

/// d on the M direction, applied tuple by tuple.
inline NerveCochain nerve_d(const GroupAction& a, const NerveCochain& u) {
    const auto& k = a.complex();
    if (u.bideg.q >= 2) throw std::invalid_argument("d of a top-degree cochain");
    const Bidegree out_b{u.bideg.p, u.bideg.q + 1};
    NerveCochain out = zero_nerve_cochain(a, out_b);
    const auto nin = static_cast<std::size_t>(k.count(u.bideg.q));
    const auto nout = static_cast<std::size_t>(k.count(out_b.q));
    for (std::size_t t = 0; t < tuple_count(a, u.bideg.p); ++t)
        for (std::size_t s = 0; s < nout; ++s)
            for (auto o : k.boundary_of(out_b.q, static_cast<int>(s)))
                out.values[t * nout + s] += Rational(o.sign) * u.values[t * nin + o.index];
    return out;
}

/// Element of the total complex in a fixed total degree: one component per
/// bidegree (p, q) with p + q = degree, p <= max_level, q <= 2, listed by
/// increasing p.
struct TotalCochain {
    int degree = 0;
    std::vector<NerveCochain> parts;

    const NerveCochain& part(int p) const {
        for (const auto& c : parts)
            if (c.bideg.p == p) return c;
        throw std::out_of_range("no component with that nerve level");
    }
    NerveCochain& part(int p) {
        for (auto& c : parts)
            if (c.bideg.p == p) return c;
        throw std::out_of_range("no component with that nerve level");
    }
};

inline std::vector<Bidegree> total_bidegrees(int degree, int max_level = 3) {
    std::vector<Bidegree> out;
    for (int p = 0; p <= std::min(degree, max_level); ++p) {
        const int q = degree - p;
        if (q >= 0 && q <= 2) out.push_back({p, q});
    }
    return out;
}

inline TotalCochain zero_total(const GroupAction& a, int degree, int max_level = 3) {
    TotalCochain t{degree, {}};
    for (auto b : total_bidegrees(degree, max_level)) t.parts.push_back(zero_nerve_cochain(a, b));
    return t;
}

/// D = d + (-1)^(q+1) delta on the (p, q) component.
inline TotalCochain total_differential(const GroupAction& a, const TotalCochain& x, int max_level = 3) {
    const auto expect = total_bidegrees(x.degree, max_level);
    if (expect.size() != x.parts.size()) throw std::invalid_argument("total cochain has the wrong number of components");
    for (std::size_t i = 0; i < expect.size(); ++i)
        if (x.parts[i].bideg.p != expect[i].p || x.parts[i].bideg.q != expect[i].q ||
            x.parts[i].values.size() != cell_count(a, expect[i]))
            throw std::invalid_argument("total cochain component has an inconsistent shape");
    TotalCochain out = zero_total(a, x.degree + 1, max_level);
    for (const auto& c : x.parts) {
        if (c.bideg.q < 2) {
            auto dc = nerve_d(a, c);
            auto& tgt = out.part(c.bideg.p);
            for (std::size_t i = 0; i < dc.values.size(); ++i) tgt.values[i] += dc.values[i];
        }
        if (c.bideg.p < max_level) {
            auto dl = simplicial_delta(a, c);
            const Rational sgn((c.bideg.q % 2 == 1) ? 1 : -1);
            auto& tgt = out.part(c.bideg.p + 1);
            for (std::size_t i = 0; i < dl.values.size(); ++i) tgt.values[i] += sgn * dl.values[i];
        }
    }
    return out;
}

inline std::size_t total_dimension(const GroupAction& a, int degree, int max_level = 3) {
    std::size_t n = 0;
    for (auto b : total_bidegrees(degree, max_level)) n += cell_count(a, b);
    return n;
}

/// Integer matrix of D from total degree n to n + 1; coordinates are the
/// concatenated components in the order of total_bidegrees.
inline IntMatrix total_matrix(const GroupAction& a, int degree, int max_level = 3) {
    const auto in_b = total_bidegrees(degree, max_level);
    const auto out_b = total_bidegrees(degree + 1, max_level);
    IntMatrix m(total_dimension(a, degree + 1, max_level), total_dimension(a, degree, max_level));
    auto offset = [&](const std::vector<Bidegree>& bs, int p) {
        std::size_t off = 0;
        for (auto b : bs) {
            if (b.p == p) return off;
            off += cell_count(a, b);
        }
        throw std::logic_error("missing bidegree");
    };
    const auto& k = a.complex();
    for (auto b : in_b) {
        const auto col0 = offset(in_b, b.p);
        if (b.q < 2 && degree + 1 - b.p <= 2) {
            const auto row0 = offset(out_b, b.p);
            const auto nin = static_cast<std::size_t>(k.count(b.q));
            const auto nout = static_cast<std::size_t>(k.count(b.q + 1));
            for (std::size_t t = 0; t < tuple_count(a, b.p); ++t)
                for (std::size_t s = 0; s < nout; ++s)
                    for (auto o : k.boundary_of(b.q + 1, static_cast<int>(s))) m(row0 + t * nout + s, col0 + t * nin + o.index) += o.sign;
        }
        if (b.p < max_level) {
            const Bidegree ob{b.p + 1, b.q};
            const auto row0 = offset(out_b, ob.p);
            const int sgn = (b.q % 2 == 1) ? 1 : -1;
            for (std::size_t i = 0; i < cell_count(a, ob); ++i) {
                const auto pt = cell_point(a, ob, i);
                for (int j = 0; j <= ob.p; ++j) {
                    const auto f = face_map(a, j, pt);
                    m(row0 + i, col0 + cell_index(a, f)) += sgn * (j % 2 == 0 ? 1 : -1) * f.sign;
                }
            }
        }
    }
    return m;
}

/// Flattens a total cochain into the coordinates of total_matrix.
inline std::vector<Rational> flatten(const TotalCochain& x) {
    std::vector<Rational> out;
    for (const auto& c : x.parts) out.insert(out.end(), c.values.begin(), c.values.end());
    return out;
}

inline TotalCochain unflatten(const GroupAction& a, int degree, const std::vector<Rational>& v, int max_level = 3) {
    auto t = zero_total(a, degree, max_level);
    std::size_t off = 0;
    for (auto& c : t.parts) {
        for (auto& x : c.values) x = v.at(off++);
    }
    if (off != v.size()) throw std::invalid_argument("vector length does not match the total degree");
    return t;
}

}  // namespace dchar
