#include "dchar/dchar.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace dchar;
using io::json;

namespace {

struct Failure {
    int exit_code;
    std::string code;
    std::string message;
    std::string file;
    int line = 0;
};

struct RunConfig {
    std::string complex_path;
    std::string action_path;
    std::string bundle_path;
    std::string subset;
    std::string out;
    std::string group = "su2";
    std::string scale = "1";
    std::string moment_shift = "0";
    std::uint64_t seed = 1;
    int trials = 20;
    double tolerance = 1e-9;
    std::int64_t k = 1;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Failure{1, "io_error", "cannot open file", path, 0};
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

template <typename F>
auto parse_with_location(const std::string& path, F&& parse) {
    std::istringstream in(read_file(path));
    try {
        return parse(in);
    } catch (const ParseError& e) {
        throw Failure{1, "parse_error", e.what(), path, e.line()};
    } catch (const std::invalid_argument& e) {
        throw Failure{1, "validation_error", e.what(), path, 0};
    }
}

GroupAction load_action(const RunConfig& cfg) {
    if (cfg.complex_path.empty()) throw Failure{1, "usage_error", "--complex is required", "", 0};
    auto k = parse_with_location(cfg.complex_path, [](std::istream& in) { return parse_complex(in); });
    if (cfg.action_path.empty()) return trivial_action(std::move(k));
    return parse_with_location(cfg.action_path, [&](std::istream& in) { return parse_action(in, k); });
}

DiscreteBundle load_bundle(const RunConfig& cfg, const GroupAction& a) {
    if (cfg.bundle_path.empty()) throw Failure{1, "usage_error", "--bundle is required", "", 0};
    return parse_with_location(cfg.bundle_path, [&](std::istream& in) { return parse_bundle(in, a); });
}

Rational parse_flag_rational(const std::string& text, const std::string& flag) {
    try {
        return parse_rational(text);
    } catch (const std::exception& e) {
        throw Failure{1, "usage_error", flag + ": " + e.what(), "", 0};
    }
}

void emit(const RunConfig& cfg, const json& body) {
    const std::string text = io::document(body).dump(2) + "\n";
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    const std::string tmp = cfg.out + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw Failure{1, "io_error", "cannot write output", cfg.out, 0};
        out << text;
    }
    std::filesystem::rename(tmp, cfg.out);
}

int cmd_classify(const RunConfig& cfg) {
    const auto a = load_action(cfg);
    emit(cfg, json{{"command", "classify"},
                   {"flat_group", io::presentation(classify_flat(a))},
                   {"chern_group", io::presentation(chern_group(a))}});
    return 0;
}

int cmd_roundtrip(const RunConfig& cfg) {
    const auto a = load_action(cfg);
    const auto b = load_bundle(cfg, a);
    const auto x = dch(a, b);
    const auto check = is_cocycle(a, x);
    const auto back = preq(a, x);
    const auto witness = gauge_equivalent(a, b, back);
    const auto ch = extract_character(a, x);
    bool holonomy_ok = true;
    for (std::size_t i = 0; i < ch.generators.size(); ++i)
        if (frac(holonomy(a, b, ch.generators[i].cycle)) != ch.psi[i]) holonomy_ok = false;
    const bool ok = check.ok && witness.has_value() && holonomy_ok;
    json body{{"command", "roundtrip"},
              {"cocycle", io::cocycle(x)},
              {"is_cocycle", io::cocycle_check(check)},
              {"witness", witness ? io::rationals(*witness) : json(nullptr)},
              {"holonomy_matches_psi", holonomy_ok},
              {"ok", ok}};
    emit(cfg, body);
    return ok ? 0 : 2;
}

int cmd_su2(const RunConfig& cfg) {
    if (cfg.trials < 1) throw Failure{1, "usage_error", "--trials must be positive", "", 0};
    const auto hemisphere = lie::su2_center_character(cfg.k);
    const auto arch = lie::archimedes_check(cfg.k, cfg.trials, cfg.seed, cfg.tolerance);
    const auto red = reduce_su2_example(cfg.k, cfg.tolerance);
    const bool agree = hemisphere.certified && red.chi.certified && arch.pass && hemisphere.exact == red.chi.exact &&
                       lie::circle_distance(hemisphere.value, red.chi.value) <= cfg.tolerance;
    json body{{"command", "su2"},
              {"k", cfg.k},
              {"chi", io::rational(hemisphere.exact)},
              {"chi_value", io::real(hemisphere.value)},
              {"archimedes_values", io::reals(arch.values)},
              {"archimedes_spread", io::real(arch.spread)},
              {"reduction_chi", io::rational(red.chi.exact)},
              {"reduction_value", io::real(red.chi.value)},
              {"zero_level", io::real(red.z_star)},
              {"ok", agree}};
    emit(cfg, body);
    return agree ? 0 : 2;
}

std::vector<int> parse_subset(const std::string& text) {
    std::vector<int> out;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw Failure{1, "usage_error", "bad vertex '" + tok + "' in --subset", "", 0};
        }
    }
    if (out.empty()) throw Failure{1, "usage_error", "--subset is empty", "", 0};
    return out;
}

int cmd_reduce(const RunConfig& cfg) {
    const auto a = load_action(cfg);
    const auto b = load_bundle(cfg, a);
    StableSubcomplex n;
    try {
        n = stable_subcomplex(a, parse_subset(cfg.subset));
    } catch (const NotStable& e) {
        throw Failure{1, "not_stable", e.what(), cfg.action_path, 0};
    }
    const auto x = dch(a, b);
    const auto vanish = in_vanishing_subcategory(a, x, n);
    if (!vanish)
        throw Failure{1, "not_vanishing",
                      "alpha(g" + std::to_string(vanish.g) + ", e" + std::to_string(vanish.edge) + ") = " + to_string(vanish.alpha),
                      cfg.bundle_path, 0};
    const auto report = commute_check(a, b, n);
    const auto ch = extract_character(n.action, report.restricted);
    json body{{"command", "reduce"},
              {"vertices", n.vertex_parent},
              {"reduced", io::cocycle(report.restricted)},
              {"character", io::character(ch)},
              {"conditions", io::conditions(check_conditions(n.action, ch))},
              {"witness", report.witness ? io::gauge(*report.witness) : json(nullptr)},
              {"ok", report.ok}};
    if (!report.ok) body["certificate"] = report.certificate;
    emit(cfg, body);
    return report.ok ? 0 : 2;
}

int cmd_kostant(const RunConfig& cfg) {
    const auto a = load_action(cfg);
    const auto b = load_bundle(cfg, a);
    const Rational s = parse_flag_rational(cfg.scale, "--scale");
    auto theta = kostant_eta(a, dch(a, b));
    for (auto& w : theta.omega) w *= s;
    for (auto& w : theta.alpha) w *= s;
    const auto sec = kostant_section(a, theta);
    json body{{"command", "kostant"},
              {"scale", io::rational(s)},
              {"omega", io::rationals(theta.omega)},
              {"alpha", io::rationals(theta.alpha)},
              {"flat_group", io::presentation(classify_flat(a))}};
    if (sec.cocycle) {
        body["section"] = io::cocycle(*sec.cocycle);
    } else {
        body["section"] = nullptr;
        body["obstruction"] = json{{"cycle", sec.cycle}, {"period", io::rational(sec.period)}};
    }
    emit(cfg, body);
    return 0;
}

int cmd_check(const RunConfig& cfg) {
    if (cfg.complex_path.empty()) {
        const auto group = cfg.group == "circle" ? lie::Group::Circle : lie::Group::SU2;
        if (cfg.group != "circle" && cfg.group != "su2") throw Failure{1, "usage_error", "--group must be circle or su2", "", 0};
        auto ch = lie::canonical_character(group, cfg.k);
        const double shift = to_double(parse_flag_rational(cfg.moment_shift, "--moment-shift"));
        if (shift != 0) {
            auto mu = ch.mu;
            ch.mu = [mu, shift](lie::Vec3 p) { return mu(p) + lie::Vec3{0, 0, shift}; };
            ch.weight_north += shift;
            ch.weight_south -= shift;
        }
        const auto r = lie::check_invariant_conditions(ch, cfg.seed, 20, cfg.tolerance);
        emit(cfg, json{{"command", "check"}, {"k", cfg.k}, {"group", cfg.group}, {"report", io::lie_conditions(r)}, {"ok", r.all()}});
        return r.all() ? 0 : 2;
    }
    const auto a = load_action(cfg);
    const auto b = load_bundle(cfg, a);
    const auto x = dch(a, b);
    const auto ch = extract_character(a, x);
    const auto r = check_conditions(a, ch);
    emit(cfg, json{{"command", "check"}, {"character", io::character(ch)}, {"conditions", io::conditions(r)}, {"ok", r.all()}});
    return r.all() ? 0 : 2;
}

void report_failure(const Failure& f) {
    json err{{"code", f.code}, {"message", f.message}};
    if (!f.file.empty()) err["file"] = f.file;
    if (f.line > 0) err["line"] = f.line;
    std::cerr << json{{"error", err}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equivariant differential characters of degree 2"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    app.add_option("--seed", cfg.seed, "Random seed");
    app.add_option("--trials", cfg.trials, "Random trials for sampled checks");
    app.add_option("--tolerance", cfg.tolerance, "Numeric tolerance (Lie commands only)");
    app.add_option("--out", cfg.out, "Write JSON here instead of stdout");

    auto files = [&](CLI::App* sub, bool bundle) {
        sub->add_option("--complex", cfg.complex_path, "Complex file")->check(CLI::ExistingFile);
        sub->add_option("--action", cfg.action_path, "Group action file (default: trivial group)")->check(CLI::ExistingFile);
        if (bundle) sub->add_option("--bundle", cfg.bundle_path, "Bundle file")->check(CLI::ExistingFile);
    };
    auto* classify = app.add_subcommand("classify", "Flat and Chern groups of the action groupoid");
    files(classify, false);
    auto* roundtrip = app.add_subcommand("roundtrip", "DCh then Preq with a gauge witness");
    files(roundtrip, true);
    auto* su2 = app.add_subcommand("su2", "Center character of SU(2) on S^2 by three routes");
    su2->add_option("-k,--k", cfg.k, "Total curvature")->required();
    auto* reduce = app.add_subcommand("reduce", "Restrict to a stable vertex subset and compare with the reduced bundle");
    files(reduce, true);
    reduce->add_option("--subset", cfg.subset, "Comma-separated vertex list")->required();
    auto* kostant = app.add_subcommand("kostant", "Kostant form of a bundle and its section");
    files(kostant, true);
    kostant->add_option("--scale", cfg.scale, "Multiply Theta by this rational before solving");
    auto* check = app.add_subcommand("check", "Character conditions of a bundle, or of the canonical Lie character");
    files(check, true);
    check->add_option("-k,--k", cfg.k, "Total curvature (Lie mode)");
    check->add_option("--group", cfg.group, "circle or su2 (Lie mode)");
    check->add_option("--moment-shift", cfg.moment_shift, "Add a constant to the moment (Lie mode)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }
    try {
        if (*classify) return cmd_classify(cfg);
        if (*roundtrip) return cmd_roundtrip(cfg);
        if (*su2) return cmd_su2(cfg);
        if (*reduce) return cmd_reduce(cfg);
        if (*kostant) return cmd_kostant(cfg);
        if (*check) return cmd_check(cfg);
    } catch (const Failure& f) {
        report_failure(f);
        return f.exit_code;
    } catch (const std::domain_error& e) {
        report_failure(Failure{2, "invariant_violation", e.what(), cfg.bundle_path, 0});
        return 2;
    } catch (const std::invalid_argument& e) {
        report_failure(Failure{1, "validation_error", e.what(), "", 0});
        return 1;
    } catch (const std::exception& e) {
        report_failure(Failure{2, "internal_error", e.what(), "", 0});
        return 2;
    }
    return 1;
}
