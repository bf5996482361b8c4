#pragma once

#include "lcs/aspects.hpp"
#include "lcs/grassmann.hpp"
#include "lcs/poset.hpp"
#include "lcs/weier.hpp"

#include <json.hpp>

#include <sstream>

namespace lcs {

using Json = nlohmann::ordered_json;

inline Json rationals_json(const RatVec& v) {
    Json j = Json::array();
    for (const auto& q : v) j.push_back(to_string(q));
    return j;
}

inline Json ints_json(const IntVec& v) { return Json(v); }

inline Json labels_json(Subset s, const std::vector<std::string>& labels) {
    Json j = Json::array();
    for (int p : s.elements()) j.push_back(labels.at(p));
    return j;
}

inline Subset labels_from_json(const Json& j, const std::vector<std::string>& labels) {
    Subset s;
    for (const auto& x : j) {
        auto it = std::find(labels.begin(), labels.end(), x.get<std::string>());
        if (it == labels.end()) throw InvalidInput("unknown label " + x.get<std::string>());
        s.insert(static_cast<int>(it - labels.begin()));
    }
    return s;
}

inline RatVec rationals_from_json(const Json& j) {
    RatVec out;
    for (const auto& x : j) {
        if (x.is_string())
            out.push_back(parse_rational(x.get<std::string>()));
        else if (x.is_number_integer())
            out.emplace_back(x.get<long>());
        else
            throw InvalidInput("rationals must be \"a/b\" strings or integers");
    }
    return out;
}

inline Json numdata_json(const NumericalData& d, const std::vector<std::string>& labels) {
    Json j;
    j["alpha"] = ints_json(d.alpha);
    j["rho"] = rationals_json(d.rho);
    j["I"] = labels_json(d.I, labels);
    j["level"] = to_string(d.level);
    return j;
}

inline Json key_json(const StratumKey& k, const std::vector<std::string>& labels) {
    Json j;
    j["alpha"] = ints_json(k.alpha);
    j["beta"] = ints_json(k.beta);
    j["I_eff"] = k.I_eff ? labels_json(*k.I_eff, labels) : Json(nullptr);
    j["J_eff"] = k.J_eff ? labels_json(*k.J_eff, labels) : Json(nullptr);
    return j;
}

inline std::string key_string(const StratumKey& k, const std::vector<std::string>& labels) {
    auto vec = [](const IntVec& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + ")";
    };
    auto set = [&](const std::optional<Subset>& s) {
        if (!s) return std::string("*");
        std::string out = "{";
        auto e = s->elements();
        for (std::size_t i = 0; i < e.size(); ++i) out += (i ? "," : "") + labels[e[i]];
        return out + "}";
    };
    return "a=" + vec(k.alpha) + " I=" + set(k.I_eff) + " b=" + vec(k.beta) + " J=" + set(k.J_eff);
}

inline Json stratum_json(const CurveConfig& c, const StratumData& s) {
    Json j;
    j["alpha"] = ints_json(s.alpha);
    j["I"] = labels_json(s.I, c.labels);
    j["beta"] = ints_json(s.beta);
    j["J"] = labels_json(s.J, c.labels);
    j["gamma"] = to_string(s.gamma);
    j["epsilon"] = to_string(s.epsilon);
    j["alpha_tilde"] = s.alpha_tilde ? Json(*s.alpha_tilde) : Json("undefined");
    j["beta_tilde"] = s.beta_tilde ? Json(*s.beta_tilde) : Json("undefined");
    j["witness_mu"] = rationals_json(s.witness_mu);
    j["rho"] = rationals_json(s.rho);
    j["sigma"] = rationals_json(s.sigma);
    auto d = stratum_dim(c, s);
    j["dim"] = {{"dim", d.dim}, {"dim_X", d.dim_X}, {"dim_Y", d.dim_Y}};
    j["key"] = key_json(key_of(c, s), c.labels);
    return j;
}

// rebuilds the data from its serialized fields (the witness is recomputed only for checking)
inline StratumData stratum_from_json(const CurveConfig& c, const Json& j) {
    StratumData s;
    s.alpha = j.at("alpha").get<IntVec>();
    s.I = labels_from_json(j.at("I"), c.labels);
    s.beta = j.at("beta").get<IntVec>();
    s.J = labels_from_json(j.at("J"), c.labels);
    s.gamma = parse_rational(j.at("gamma").get<std::string>());
    s.epsilon = parse_rational(j.at("epsilon").get<std::string>());
    if (j.at("alpha_tilde").is_number_integer()) s.alpha_tilde = j.at("alpha_tilde").get<long>();
    if (j.at("beta_tilde").is_number_integer()) s.beta_tilde = j.at("beta_tilde").get<long>();
    s.witness_mu = rationals_from_json(j.at("witness_mu"));
    s.rho = rationals_from_json(j.at("rho"));
    s.sigma = rationals_from_json(j.at("sigma"));
    if (s.alpha.size() != static_cast<std::size_t>(c.delta) || s.beta.size() != static_cast<std::size_t>(c.delta))
        throw InvalidInput("stratum vectors must have length delta");
    return s;
}

inline std::string constraint_text(const LinearConstraint& lc, const std::vector<std::string>& labels) {
    std::string out;
    for (std::size_t i = 0; i < lc.coeffs.size(); ++i) {
        const auto& a = lc.coeffs[i];
        if (sgn(a) == 0) continue;
        std::string mag = abs(a) == 1 ? "" : Rational(abs(a)).get_str() + "*";
        out += out.empty() ? (sgn(a) < 0 ? "-" : "") : (sgn(a) < 0 ? " - " : " + ");
        out += mag + "mu[" + labels[i] + "]";
    }
    if (sgn(lc.constant) != 0) out += (sgn(lc.constant) < 0 ? " - " : " + ") + Rational(abs(lc.constant)).get_str();
    out += lc.rel == Rel::Eq ? " = 0" : lc.rel == Rel::Ge ? " >= 0" : " > 0";
    return out;
}

inline Json constraint_json(const LinearConstraint& lc, const std::vector<std::string>& labels) {
    Json j;
    j["coeffs"] = rationals_json(lc.coeffs);
    j["constant"] = to_string(lc.constant);
    j["relation"] = lc.rel == Rel::Eq ? "=" : lc.rel == Rel::Ge ? ">=" : ">";
    j["text"] = constraint_text(lc, labels);
    return j;
}

inline Json region_json(const RegionDescription& r, const std::vector<std::string>& labels) {
    Json j;
    j["equalities"] = Json::array();
    for (const auto& c : r.equalities) j["equalities"].push_back(constraint_json(c, labels));
    j["inequalities"] = Json::array();
    for (const auto& c : r.inequalities) j["inequalities"].push_back(constraint_json(c, labels));
    j["note"] = r.note;
    return j;
}

inline Json weierstrass_json(const WeierstrassDegrees& w, const std::vector<std::string>& labels) {
    auto form = [&](const WeierstrassForm& f) {
        Json j;
        j["deg_R_X"] = f.deg_R_X.get_str();
        j["deg_R_Y"] = f.deg_R_Y.get_str();
        j["node_coeffs"] = Json::object();
        for (std::size_t p = 0; p < f.node_coeffs.size(); ++p) j["node_coeffs"][labels[p]] = f.node_coeffs[p].get_str();
        j["total"] = f.total.get_str();
        return j;
    };
    Json j;
    j["scope"] = "degree bookkeeping only; divisor supports need a concrete curve";
    j["twisted"] = form(w.twisted);
    j["normalized"] = form(w.normalized);
    j["base_change"] = Json::object();
    for (std::size_t p = 0; p < w.base_change.size(); ++p) j["base_change"][labels[p]] = w.base_change[p].get_str();
    j["expected_total"] = w.expected_total.get_str();
    j["conserved"] = w.twisted.total == w.expected_total && w.normalized.total == w.expected_total;
    j["warnings"] = Json::array();
    for (int p : w.negative_nodes) j["warnings"].push_back("negative node coefficient at " + labels[p]);
    return j;
}

inline std::string escape_dot(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out;
}

inline std::string poset_dot(const CurveConfig& c, const ClosurePoset& P) {
    std::ostringstream os;
    os << "digraph closure {\n  rankdir=TB;\n  node [shape=box, fontsize=10];\n";
    for (std::size_t i = 0; i < P.keys.size(); ++i)
        os << "  s" << i << " [label=\"" << escape_dot(key_string(P.keys[i], c.labels)) << "\\ndim " << P.dims[i]
           << "\"];\n";
    for (auto [a, b] : P.covers) os << "  s" << a << " -> s" << b << ";\n";
    os << "}\n";
    return os.str();
}

inline Json poset_json(const CurveConfig& c, const ClosurePoset& P) {
    Json j;
    j["nodes"] = Json::array();
    for (std::size_t i = 0; i < P.keys.size(); ++i) {
        Json n;
        n["id"] = i;
        n["key"] = key_json(P.keys[i], c.labels);
        n["dim"] = P.dims[i];
        n["witness_mu"] = rationals_json(P.strata[i].witness_mu);
        n["closure"] = P.contains[i];
        j["nodes"].push_back(n);
    }
    j["covers"] = Json::array();
    for (auto [a, b] : P.covers) j["covers"].push_back({a, b});
    return j;
}

inline Subspace subspace_from_json(const Json& j) {
    auto ambient = j.at("ambient").get<std::vector<int>>();
    RatMatrix rows;
    for (const auto& r : j.at("basis")) rows.push_back(rationals_from_json(r));
    return Subspace(std::move(ambient), std::move(rows));
}

inline Json subspace_json(const Subspace& V) {
    Json j;
    j["ambient"] = V.ambient();
    j["basis"] = Json::array();
    for (const auto& r : V.basis()) j["basis"].push_back(rationals_json(r));
    return j;
}

}  // namespace lcs
