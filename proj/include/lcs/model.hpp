#pragma once

#include "lcs/curve.hpp"
#include "lcs/numdata.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

namespace lcs {

struct Component {
    enum class Kind { X, Y, Chain };
    Kind kind;
    int p = -1;   // node index for chain components
    long j = 0;   // position along the chain, 1..mu_p-1

    bool operator==(const Component&) const = default;
};

inline std::string component_name(const Component& c, const std::vector<std::string>& labels) {
    switch (c.kind) {
        case Component::Kind::X: return "X";
        case Component::Kind::Y: return "Y";
        case Component::Kind::Chain: return "Z[" + labels[c.p] + "," + std::to_string(c.j) + "]";
    }
    return "?";
}

// Dual graph of the model where the node at p is replaced by a chain of mu_p - 1 rational curves.
class SemistableModel {
public:
    SemistableModel(const CurveConfig& config, const IntVec& mu) : config_(config), mu_(mu) {
        config_.validate();
        if (static_cast<int>(mu.size()) != config.delta) throw InvalidInput("mu length must equal delta");
        for (long m : mu)
            if (m < 1) throw MathError("mu entries must be positive integers");
        components_.push_back({Component::Kind::X});
        components_.push_back({Component::Kind::Y});
        for (int p = 0; p < config.delta; ++p) {
            chain_start_.push_back(static_cast<int>(components_.size()));
            for (long j = 1; j < mu[p]; ++j) components_.push_back({Component::Kind::Chain, p, j});
        }
        incident_.resize(components_.size());
        for (int p = 0; p < config.delta; ++p) {
            // Z_{p,0} = X, Z_{p,mu_p} = Y
            int prev = kX;
            for (long j = 1; j <= mu[p]; ++j) {
                int cur = j == mu[p] ? kY : chain(p, j);
                add_node(prev, cur, p);
                prev = cur;
            }
        }
    }

    static constexpr int kX = 0;
    static constexpr int kY = 1;

    const CurveConfig& config() const { return config_; }
    const IntVec& mu() const { return mu_; }
    std::size_t size() const { return components_.size(); }
    const Component& component(int i) const { return components_.at(i); }
    const std::vector<std::pair<int, int>>& nodes() const { return nodes_; }
    const std::vector<int>& node_at() const { return node_point_; }

    // index of Z_{p,j}; j = 0 and j = mu_p give X and Y
    int chain(int p, long j) const {
        if (j == 0) return kX;
        if (j == mu_.at(p)) return kY;
        if (j < 0 || j > mu_.at(p)) throw InvalidInput("chain position out of range");
        return chain_start_[p] + static_cast<int>(j - 1);
    }

    std::optional<int> find(const Component& c) const {
        for (std::size_t i = 0; i < components_.size(); ++i)
            if (components_[i] == c) return static_cast<int>(i);
        return std::nullopt;
    }

    int node_count(int e) const { return static_cast<int>(incident_.at(e).size()); }

    // other endpoint of each node on e, with multiplicity
    std::vector<int> neighbors(int e) const {
        check(e);
        std::vector<int> out;
        for (int k : incident_[e]) out.push_back(nodes_[k].first == e ? nodes_[k].second : nodes_[k].first);
        return out;
    }

    long intersection(int e, int f) const {
        check(e);
        check(f);
        if (e != f) {
            long n = 0;
            for (int k : incident_[e]) {
                auto [a, b] = nodes_[k];
                if ((a == e && b == f) || (a == f && b == e)) ++n;
            }
            return n;
        }
        long row = 0;
        for (int k : incident_[e]) {
            auto [a, b] = nodes_[k];
            if (a != b) ++row;
        }
        return -row;
    }

    long component_genus(int e) const {
        if (e == kX) return config_.g_X;
        if (e == kY) return config_.g_Y;
        return 0;
    }

private:
    void check(int e) const {
        if (e < 0 || e >= static_cast<int>(components_.size())) throw InvalidInput("unknown component");
    }
    void add_node(int a, int b, int p) {
        int k = static_cast<int>(nodes_.size());
        nodes_.emplace_back(a, b);
        node_point_.push_back(p);
        incident_[a].push_back(k);
        if (b != a) incident_[b].push_back(k);
    }

    CurveConfig config_;
    IntVec mu_;
    std::vector<Component> components_;
    std::vector<int> chain_start_;
    std::vector<std::pair<int, int>> nodes_;
    std::vector<int> node_point_;
    std::vector<std::vector<int>> incident_;
};

inline SemistableModel build_model(const CurveConfig& config, const IntVec& mu) { return SemistableModel(config, mu); }

// integer coefficients, one per component of the model
struct DivisorOnModel {
    std::vector<long> coeffs;
};

inline DivisorOnModel total_fiber(const SemistableModel& m) { return {std::vector<long>(m.size(), 1)}; }

inline long dot(const SemistableModel& m, const DivisorOnModel& d, int e) {
    auto nb = m.neighbors(e);
    long s = -static_cast<long>(nb.size()) * d.coeffs[e];
    for (int f : nb) s += d.coeffs[f];
    return s;
}

inline RatVec to_rational(const IntVec& v) {
    RatVec out;
    for (long x : v) out.emplace_back(x);
    return out;
}

namespace detail {
inline long integral(const Rational& q, const char* what) {
    if (q.get_den() != 1) throw MathError(std::string(what) + " must be integral");
    return to_long(q.get_num());
}
}  // namespace detail

// coefficient alpha_p*i + max(0, i - rho_p) on Z_{p,i}, level on Y, 0 on X
inline DivisorOnModel twist_divisor_focus_X(const SemistableModel& m, const NumericalData& x) {
    const int delta = m.config().delta;
    if (static_cast<int>(x.alpha.size()) != delta) throw InvalidInput("data size mismatch");
    DivisorOnModel d{std::vector<long>(m.size(), 0)};
    d.coeffs[SemistableModel::kY] = detail::integral(x.level, "level");
    for (int p = 0; p < delta; ++p) {
        long rho = detail::integral(x.rho[p], "rho");
        for (long i = 1; i < m.mu()[p]; ++i) d.coeffs[m.chain(p, i)] = x.alpha[p] * i + std::max(0L, i - rho);
    }
    return d;
}

// mirror: beta_p*(mu_p - i) + max(0, sigma_p - i) with sigma = mu - sigma', level on X
inline DivisorOnModel twist_divisor_focus_Y(const SemistableModel& m, const NumericalData& y) {
    const int delta = m.config().delta;
    if (static_cast<int>(y.alpha.size()) != delta) throw InvalidInput("data size mismatch");
    DivisorOnModel d{std::vector<long>(m.size(), 0)};
    d.coeffs[SemistableModel::kX] = detail::integral(y.level, "level");
    for (int p = 0; p < delta; ++p) {
        long sigma = m.mu()[p] - detail::integral(y.rho[p], "sigma");
        for (long i = 1; i < m.mu()[p]; ++i)
            d.coeffs[m.chain(p, i)] = y.alpha[p] * (m.mu()[p] - i) + std::max(0L, sigma - i);
    }
    return d;
}

struct MultiDegree {
    std::vector<long> degrees;
    long total() const {
        long s = 0;
        for (long d : degrees) s += d;
        return s;
    }
};

// degree of the dualizing sheaf twisted by D on each component
inline MultiDegree multidegree_of_twisted_dualizing(const SemistableModel& m, const DivisorOnModel& d) {
    MultiDegree md;
    for (std::size_t e = 0; e < m.size(); ++e) {
        int ei = static_cast<int>(e);
        md.degrees.push_back(2 * m.component_genus(ei) - 2 + m.node_count(ei) + dot(m, d, ei));
    }
    return md;
}

}  // namespace lcs
