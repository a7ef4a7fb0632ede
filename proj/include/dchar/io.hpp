#pragma once

#include "dchar/reduction.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

namespace dchar::io {

using nlohmann::json;

inline constexpr const char* schema = "dc21/1";

inline json rational(const Rational& r) { return to_string(r); }

inline json rationals(const std::vector<Rational>& v) {
    json out = json::array();
    for (const auto& r : v) out.push_back(rational(r));
    return out;
}

/// Double rounded to 12 significant digits.
inline json real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

inline json reals(const std::vector<double>& v) {
    json out = json::array();
    for (double x : v) out.push_back(real(x));
    return out;
}

inline json presentation(const AbelianGroupPresentation& p) {
    return json{{"divisible_rank", p.divisible_rank},
                {"free_rank", p.free_rank},
                {"invariant_factors", p.invariant_factors},
                {"order", p.order() ? json(p.order()) : json(nullptr)}};
}

inline json cocycle(const DC21Cochain& x) {
    return json{{"c", x.c}, {"h", rationals(x.h)}, {"omega", rationals(x.omega)},
                {"b", x.b}, {"f", rationals(x.f)}, {"alpha", rationals(x.alpha)}};
}

inline json gauge(const GaugeCochain& g) { return json{{"a", g.a}, {"t", rationals(g.t)}}; }

inline json bundle(const DiscreteBundle& b) {
    return json{{"A", rationals(b.A)}, {"phi", rationals(b.phi)}, {"chern", b.chern}};
}

inline json cocycle_check(const CocycleCheck& c) {
    json out{{"ok", c.ok}};
    if (!c.ok) {
        out["equation"] = c.equation;
        out["component"] = c.component;
        out["location"] = c.location;
        out["residual"] = rational(c.residual);
    }
    return out;
}

inline json character(const DiffCharacter& ch) {
    json gens = json::array();
    for (std::size_t i = 0; i < ch.generators.size(); ++i)
        gens.push_back(json{{"generator", ch.generators[i].label()}, {"psi", rational(ch.psi[i])}});
    return json{{"omega", rationals(ch.theta.omega)}, {"alpha", rationals(ch.theta.alpha)}, {"psi", gens}};
}

inline json conditions(const ConditionReport& r) {
    json out = json::array();
    for (int i = 0; i < 4; ++i) {
        json c{{"condition", i + 1}, {"pass", r.pass[i]}};
        if (!r.pass[i]) c["witness"] = r.witness[i];
        out.push_back(c);
    }
    return out;
}

inline json lie_conditions(const lie::LieConditionReport& r) {
    json out = json::array();
    for (int i = 0; i < 5; ++i) {
        json c{{"condition", i + 1}, {"pass", r.pass[i]}, {"max_error", real(r.max_error[i])}};
        if (!r.pass[i]) c["witness"] = r.witness[i];
        out.push_back(c);
    }
    return json{{"conditions", out}, {"basic", r.basic}};
}

inline json document(json body) {
    body["schema"] = schema;
    return body;
}

}  // namespace dchar::io
