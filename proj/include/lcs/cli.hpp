#pragma once

#include "lcs/fan.hpp"
#include "lcs/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>

namespace lcs::cli {

enum ExitCode { kOk = 0, kInternal = 1, kUsage = 2, kMath = 3, kCap = 4 };

struct RunConfig {
    std::string subcommand;
    long g_X = 0;
    long g_Y = 0;
    int delta = 0;
    std::string mu_text;
    long upsilon = 0;
    std::string format = "json";
    std::string output;
    std::string input;
    unsigned jobs = 1;
    std::size_t cap = 1000000;
    long bound = 2;
    bool maximal_only = false;
    std::size_t random_scalars = 0;
};

inline unsigned default_jobs() {
    if (const char* env = std::getenv("LCS_JOBS")) {
        try {
            long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

inline RatVec parse_mu(const std::string& text) {
    RatVec out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (out.empty()) throw InvalidInput("--mu is empty");
    return out;
}

namespace detail {

// "path: value" lines
inline void flatten(const Json& j, const std::string& path, std::ostream& os) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), os);
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", os);
    } else {
        os << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
    }
}

inline std::string render(const Json& j, const std::string& format) {
    if (format == "json") return j.dump(2) + "\n";
    if (format == "text") {
        std::ostringstream os;
        flatten(j, "", os);
        return os.str();
    }
    throw InvalidInput("format " + format + " is not available for this subcommand");
}

inline Json config_json(const CurveConfig& c) {
    return {{"g_X", c.g_X}, {"g_Y", c.g_Y}, {"delta", c.delta}, {"genus", c.genus()}, {"labels", c.labels}};
}

inline std::string model_json_or_text(const CurveConfig& c, const IntVec& mu, const std::string& format) {
    auto m = build_model(c, mu);
    auto x = associated_data(to_rational(mu), c.g_Y);
    auto y = associated_data(to_rational(mu), c.g_X);
    auto dx = twist_divisor_focus_X(m, x);
    auto dy = twist_divisor_focus_Y(m, y);
    auto mx = multidegree_of_twisted_dualizing(m, dx);
    auto my = multidegree_of_twisted_dualizing(m, dy);
    std::vector<std::string> names;
    for (std::size_t e = 0; e < m.size(); ++e) names.push_back(component_name(m.component(int(e)), c.labels));
    if (format == "text") {
        std::size_t w = 4;
        for (const auto& n : names) w = std::max(w, n.size() + 1);
        std::ostringstream os;
        os << "intersection matrix\n" << std::setw(int(w)) << "";
        for (const auto& n : names) os << std::setw(int(w)) << n;
        os << '\n';
        for (std::size_t e = 0; e < m.size(); ++e) {
            os << std::setw(int(w)) << names[e];
            for (std::size_t f = 0; f < m.size(); ++f) os << std::setw(int(w)) << m.intersection(int(e), int(f));
            os << '\n';
        }
        os << "\n" << std::setw(int(w)) << "" << std::setw(8) << "D_X" << std::setw(8) << "deg_X" << std::setw(8)
           << "D_Y" << std::setw(8) << "deg_Y" << '\n';
        for (std::size_t e = 0; e < m.size(); ++e)
            os << std::setw(int(w)) << names[e] << std::setw(8) << dx.coeffs[e] << std::setw(8) << mx.degrees[e]
               << std::setw(8) << dy.coeffs[e] << std::setw(8) << my.degrees[e] << '\n';
        os << "total " << mx.total() << " " << my.total() << '\n';
        return os.str();
    }
    Json j;
    j["config"] = config_json(c);
    j["mu"] = mu;
    j["components"] = names;
    j["nodes"] = Json::array();
    for (std::size_t k = 0; k < m.nodes().size(); ++k) {
        auto [a, b] = m.nodes()[k];
        j["nodes"].push_back({{"between", {names[a], names[b]}}, {"over", c.labels[m.node_at()[k]]}});
    }
    j["intersection_matrix"] = Json::array();
    for (std::size_t e = 0; e < m.size(); ++e) {
        Json row = Json::array();
        for (std::size_t f = 0; f < m.size(); ++f) row.push_back(m.intersection(int(e), int(f)));
        j["intersection_matrix"].push_back(row);
    }
    j["focus_X"] = {{"data", numdata_json(x, c.labels)},
                    {"twist", dx.coeffs},
                    {"multidegree", mx.degrees},
                    {"total", mx.total()}};
    j["focus_Y"] = {{"data", numdata_json(y, c.labels)},
                    {"twist", dy.coeffs},
                    {"multidegree", my.degrees},
                    {"total", my.total()}};
    return render(j, format);
}

inline IntVec integral_mu(const RatVec& mu) {
    IntVec out;
    for (const auto& q : mu) {
        if (q.get_den() != 1) throw InvalidInput("model needs integer chain lengths");
        out.push_back(to_long(q.get_num()));
    }
    return out;
}

inline SubspacePair pair_from_json(const Json& j) {
    return {subspace_from_json(j.at("V")), subspace_from_json(j.at("W"))};
}

inline Json fingerprints_json(const std::set<OrbitFingerprint>& s) {
    Json j = Json::array();
    for (const auto& f : s) j.push_back(f.str());
    return j;
}

inline Json compare_json(const std::set<OrbitFingerprint>& predicted, const BruteForceReport& rep) {
    std::set<OrbitFingerprint> missing, extra;
    std::set_difference(predicted.begin(), predicted.end(), rep.reached.begin(), rep.reached.end(),
                        std::inserter(missing, missing.end()));
    std::set_difference(rep.reached.begin(), rep.reached.end(), predicted.begin(), predicted.end(),
                        std::inserter(extra, extra.end()));
    return {{"subgroups", rep.subgroups},
            {"reached", rep.reached.size()},
            {"predicted_not_reached", fingerprints_json(missing)},
            {"reached_not_predicted", fingerprints_json(extra)},
            {"agree", missing.empty() && extra.empty()}};
}

inline Json orbit_closure(const Json& in, long bound, std::size_t random_scalars) {
    const std::string mode = in.value("mode", "single");
    Json out;
    out["mode"] = mode;
    if (mode == "single") {
        auto V = subspace_from_json(in.at("V"));
        auto predicted = closure_orbit_set(V);
        out["orbit"] = orbit_fingerprint(V).str();
        out["predicted"] = fingerprints_json(predicted);
        out["brute_force"] = compare_json(predicted, sample_limit_orbits(V, bound, random_scalars));
        if (in.contains("queries")) {
            out["queries"] = Json::array();
            for (const auto& q : in["queries"]) {
                auto W = subspace_from_json(q);
                bool inside = in_closure(W, V);
                Json r{{"subspace", subspace_json(W)}, {"in_closure", inside}};
                if (inside)
                    if (auto w = closure_witness(W, V)) {
                        Json wj = Json::object();
                        for (const auto& [label, val] : *w) wj[std::to_string(label)] = to_string(val);
                        r["witness_scalars"] = wj;
                    }
                out["queries"].push_back(r);
            }
        }
    } else if (mode == "pair") {
        auto base = pair_from_json(in);
        long lambda, tau;
        if (in.contains("alpha_tilde")) {
            lambda = in.at("alpha_tilde").get<long>();
            tau = in.at("beta_tilde").get<long>();
        } else {
            lambda = in.at("lambda").get<long>();
            tau = in.at("tau").get<long>();
        }
        auto predicted = pair_closure_orbit_set_generic(base, lambda, tau);
        out["lambda"] = lambda;
        out["tau"] = tau;
        out["predicted"] = fingerprints_json(predicted);
        out["brute_force"] =
            compare_json(predicted, sample_pair_limit_orbits(base, lambda, tau, bound, random_scalars));
        if (in.contains("queries")) {
            out["queries"] = Json::array();
            for (const auto& q : in["queries"])
                out["queries"].push_back({{"in_closure", in_pair_closure_generic(pair_from_json(q), base, lambda, tau)}});
        }
    } else {
        throw InvalidInput("mode must be single or pair");
    }
    return out;
}

inline std::string dispatch(const RunConfig& rc) {
    const std::string& cmd = rc.subcommand;
    EnumerateOptions opt;
    opt.cap = rc.cap;
    opt.jobs = rc.jobs;

    if (cmd == "numdata") {
        auto mu = parse_mu(rc.mu_text);
        auto d = associated_data(mu, rc.upsilon);
        std::vector<std::string> labels;
        for (std::size_t i = 1; i <= mu.size(); ++i) labels.push_back("p" + std::to_string(i));
        Json j = numdata_json(d, labels);
        j["verified"] = verify_conditions(mu, rc.upsilon, d);
        return render(j, rc.format);
    }
    if (cmd == "orbit-closure") {
        if (rc.input.empty()) throw InvalidInput("orbit-closure needs --input");
        std::ifstream f(rc.input);
        if (!f) throw InvalidInput("cannot open " + rc.input);
        Json in;
        try {
            in = Json::parse(f);
        } catch (const Json::exception& e) {
            throw InvalidInput(std::string("bad JSON input: ") + e.what());
        }
        return render(orbit_closure(in, rc.bound, rc.random_scalars), rc.format);
    }

    auto config = CurveConfig::make(rc.g_X, rc.g_Y, rc.delta);
    std::optional<RatVec> mu;
    if (!rc.mu_text.empty()) {
        mu = parse_mu(rc.mu_text);
        if (static_cast<int>(mu->size()) != config.delta) throw InvalidInput("mu length must equal delta");
    }
    auto need_mu = [&]() -> const RatVec& {
        if (!mu) throw InvalidInput(cmd + " needs --mu");
        return *mu;
    };

    if (cmd == "model") return model_json_or_text(config, integral_mu(need_mu()), rc.format);
    if (cmd == "stratum") {
        Json j = stratum_json(config, stratum_of(config, need_mu()));
        return render(j, rc.format);
    }
    if (cmd == "region") {
        auto s = stratum_of(config, need_mu());
        Json j;
        j["key"] = key_json(key_of(config, s), config.labels);
        j["region"] = region_json(region(config, s), config.labels);
        return render(j, rc.format);
    }
    if (cmd == "weierstrass") {
        auto s = stratum_of(config, need_mu());
        Json j;
        j["key"] = key_json(key_of(config, s), config.labels);
        j["weierstrass"] = weierstrass_json(weierstrass_degrees(config, s), config.labels);
        return render(j, rc.format);
    }
    if (cmd == "enumerate") {
        auto P = build_poset(config, opt);
        auto comp = components(P);
        std::set<int> top(comp.indices.begin(), comp.indices.end());
        Json j;
        j["config"] = config_json(config);
        j["count"] = P.strata.size();
        j["maximal_count"] = comp.count;
        j["strata"] = Json::array();
        for (std::size_t i = 0; i < P.strata.size(); ++i) {
            if (rc.maximal_only && !top.count(int(i))) continue;
            Json s = stratum_json(config, P.strata[i]);
            s["maximal"] = top.count(int(i)) > 0;
            j["strata"].push_back(s);
        }
        return render(j, rc.format);
    }
    if (cmd == "poset") {
        auto P = build_poset(config, opt);
        if (rc.format == "dot") return poset_dot(config, P);
        Json j = poset_json(config, P);
        j["config"] = config_json(config);
        return render(j, rc.format);
    }
    if (cmd == "components") {
        auto P = build_poset(config, opt);
        auto comp = components(P);
        auto f = count_formulas(config);
        Json j;
        j["config"] = config_json(config);
        j["count"] = comp.count;
        j["maximal"] = Json::array();
        for (const auto& k : comp.maximal) j["maximal"].push_back(key_string(k, config.labels));
        j["pure_dimensional"] = std::all_of(comp.indices.begin(), comp.indices.end(),
                                            [&](int i) { return P.dims[i] == config.delta - 1; });
        Json fj;
        fj["n_delta_gX"] = f.n_delta_gX.get_str();
        fj["n_delta_gY"] = f.n_delta_gY.get_str();
        fj["gcd_table"] = f.gcd_table;
        fj["lower_bound"] = f.lower_bound.get_str();
        fj["closed_form_delta2"] = f.closed_form_delta2 ? Json(f.closed_form_delta2->get_str()) : Json(nullptr);
        fj["equal_genera_or_rational_value"] = f.statement1_value ? Json(f.statement1_value->get_str()) : Json(nullptr);
        fj["irreducible"] = f.irreducible;
        j["formulas"] = fj;
        return render(j, rc.format);
    }
    if (cmd == "fan") {
        if (rc.format == "svg") return emit_fan_svg(config, opt);
        auto f = fan_layout(config, opt);
        Json j;
        j["config"] = config_json(config);
        j["extent"] = to_string(f.extent);
        j["points"] = Json::array();
        for (const auto& p : f.points) j["points"].push_back({{"position", rationals_json(p.pos)}, {"kind", p.kind}});
        j["segments"] = Json::array();
        for (const auto& s : f.segments)
            j["segments"].push_back(
                {{"from", rationals_json(s.from)}, {"to", rationals_json(s.to)}, {"style", s.solid ? "solid" : "dashed"}});
        return render(j, rc.format);
    }
    throw InvalidInput("unknown subcommand " + cmd);
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"lcs: strata of limit canonical systems on two-component nodal curves"};
    app.require_subcommand(1);
    RunConfig rc;
    rc.jobs = default_jobs();

    auto curve = [&](CLI::App* sub, bool mu_required) {
        sub->add_option("--gx", rc.g_X, "genus of X")->required()->check(CLI::NonNegativeNumber);
        sub->add_option("--gy", rc.g_Y, "genus of Y")->required()->check(CLI::NonNegativeNumber);
        sub->add_option("--delta", rc.delta, "number of nodes")->check(CLI::Range(1, kMaxDelta));
        auto* m = sub->add_option("--mu", rc.mu_text, "comma separated rationals a/b");
        if (mu_required) m->required();
    };
    auto common = [&](CLI::App* sub, std::vector<std::string> formats) {
        sub->add_option("--format", rc.format, "output format")->check(CLI::IsMember(formats));
        sub->add_option("-o,--output", rc.output, "write to file instead of stdout");
    };
    auto parallel = [&](CLI::App* sub) {
        sub->add_option("--jobs", rc.jobs, "worker threads (default $LCS_JOBS or 1)")->check(CLI::PositiveNumber);
        sub->add_option("--cap", rc.cap, "enumeration cap")->check(CLI::PositiveNumber);
    };

    auto* numdata = app.add_subcommand("numdata", "numerical data (alpha, rho, I, level) of mu");
    numdata->add_option("--mu", rc.mu_text, "comma separated rationals a/b")->required();
    numdata->add_option("--upsilon", rc.upsilon, "target sum")->required();
    common(numdata, {"json", "text"});

    auto* model = app.add_subcommand("model", "dual graph, intersections and twisted multidegrees");
    curve(model, true);
    common(model, {"json", "text"});

    for (auto [name, help] : {std::pair{"stratum", "stratum data of mu"}, std::pair{"region", "cone of mu's stratum"},
                              std::pair{"weierstrass", "Weierstrass degree bookkeeping"}}) {
        auto* s = app.add_subcommand(name, help);
        curve(s, true);
        common(s, {"json", "text"});
    }

    auto* enumerate = app.add_subcommand("enumerate", "all strata with witnesses");
    curve(enumerate, false);
    common(enumerate, {"json", "text"});
    parallel(enumerate);
    enumerate->add_flag("--maximal", rc.maximal_only, "list only maximal strata");

    auto* poset = app.add_subcommand("poset", "closure poset");
    curve(poset, false);
    common(poset, {"json", "text", "dot"});
    parallel(poset);

    auto* comps = app.add_subcommand("components", "irreducible component count and formulas");
    curve(comps, false);
    common(comps, {"json", "text"});
    parallel(comps);

    auto* fan = app.add_subcommand("fan", "picture of the decomposition of the mu-chart");
    curve(fan, false);
    common(fan, {"svg", "json", "text"});
    parallel(fan);
    fan->callback([&] {
        if (fan->count("--format") == 0) rc.format = "svg";
    });

    auto* orbit = app.add_subcommand("orbit-closure", "torus orbit closures in Grassmannians");
    orbit->add_option("--input", rc.input, "JSON file with the subspace or pair")->required()->check(CLI::ExistingFile);
    orbit->add_option("--bound", rc.bound, "largest |u_i| in the brute force")->check(CLI::Range(0, 4));
    orbit->add_option("--random-scalars", rc.random_scalars, "extra random scalings per subgroup");
    common(orbit, {"json", "text"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }
    rc.subcommand = app.get_subcommands().front()->get_name();
    bool needs_delta = rc.subcommand != "numdata" && rc.subcommand != "orbit-closure";
    if (needs_delta && rc.delta == 0) {
        if (rc.mu_text.empty()) {
            err << "error: --delta is required\n";
            return kUsage;
        }
        rc.delta = static_cast<int>(std::count(rc.mu_text.begin(), rc.mu_text.end(), ',') + 1);
    }

    try {
        std::string text = detail::dispatch(rc);
        if (rc.output.empty()) {
            out << text;
        } else {
            std::ofstream f(rc.output, std::ios::binary);
            if (!f) throw InvalidInput("cannot write " + rc.output);
            f << text;
        }
        return kOk;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const MathError& e) {
        err << "math error: " << e.what() << '\n';
        return kMath;
    } catch (const Json::exception& e) {
        err << "error: malformed input: " << e.what() << '\n';
        return kUsage;
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << '\n';
        return kCap;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}

}  // namespace lcs::cli
