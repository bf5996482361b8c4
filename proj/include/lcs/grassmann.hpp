#pragma once

#include "lcs/lattice.hpp"
#include "lcs/linalg.hpp"
#include "lcs/tripartition.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>

namespace lcs {

inline constexpr int kMaxAmbient = 6;
inline constexpr int kMaxRank = 4;

// Subspace of k_I; basis kept in reduced row echelon form over the ambient order.
class Subspace {
public:
    Subspace() = default;
    Subspace(std::vector<int> ambient, RatMatrix rows) : ambient_(std::move(ambient)) {
        if (!std::is_sorted(ambient_.begin(), ambient_.end()) ||
            std::adjacent_find(ambient_.begin(), ambient_.end()) != ambient_.end())
            throw InvalidInput("ambient labels must be strictly increasing");
        for (int l : ambient_)
            if (l < 0 || l > kMaxDelta) throw InvalidInput("ambient label out of range");
        for (const auto& r : rows)
            if (r.size() != ambient_.size()) throw InvalidInput("basis row width must equal ambient size");
        rref(rows, ambient_.size());
        basis_ = std::move(rows);
    }

    const std::vector<int>& ambient() const { return ambient_; }
    const RatMatrix& basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }
    std::size_t width() const { return ambient_.size(); }

    Subset labels() const {
        Subset s;
        for (int l : ambient_) s.insert(l);
        return s;
    }
    std::size_t position(int label) const {
        auto it = std::lower_bound(ambient_.begin(), ambient_.end(), label);
        if (it == ambient_.end() || *it != label) throw InvalidInput("label not in ambient set");
        return static_cast<std::size_t>(it - ambient_.begin());
    }

    bool operator==(const Subspace&) const = default;

private:
    std::vector<int> ambient_;
    RatMatrix basis_;
};

// coordinates indexed by h-subsets of the ambient labels, lexicographic order
struct PlueckerVector {
    std::vector<Subset> index;
    RatVec coords;

    bool operator==(const PlueckerVector&) const = default;

    Subset support_union() const {
        Subset u;
        for (std::size_t i = 0; i < index.size(); ++i)
            if (sgn(coords[i]) != 0) u = u | index[i];
        return u;
    }
};

namespace detail {

inline void check_desk_scale(const Subspace& V) {
    if (V.width() > static_cast<std::size_t>(kMaxAmbient))
        throw InvalidInput("ambient set larger than " + std::to_string(kMaxAmbient) + " is not supported");
    if (V.dim() > static_cast<std::size_t>(kMaxRank))
        throw InvalidInput("subspace dimension larger than " + std::to_string(kMaxRank) + " is not supported");
}

// position tuples of all k-subsets of {0..n-1} in lexicographic order
inline std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    for (;;) {
        out.push_back(c);
        std::size_t i = k;
        while (i > 0 && c[i - 1] == n - k + i - 1) --i;
        if (i == 0) return out;
        ++c[i - 1];
        for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

inline std::size_t choose(std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline void normalize_projective(RatVec& v) {
    for (const auto& x : v)
        if (sgn(x) != 0) {
            Rational f = x;
            for (auto& y : v) y /= f;
            return;
        }
}

}  // namespace detail

inline PlueckerVector pluecker(const Subspace& V) {
    detail::check_desk_scale(V);
    const std::size_t h = V.dim();
    PlueckerVector P;
    for (const auto& c : detail::combinations(V.width(), h)) {
        Subset b;
        RatMatrix minor(h, RatVec(h));
        for (std::size_t j = 0; j < h; ++j) {
            b.insert(V.ambient()[c[j]]);
            for (std::size_t i = 0; i < h; ++i) minor[i][j] = V.basis()[i][c[j]];
        }
        P.index.push_back(b);
        P.coords.push_back(determinant(std::move(minor)));
    }
    detail::normalize_projective(P.coords);
    return P;
}

inline bool all_nonzero(const PlueckerVector& P) {
    return std::all_of(P.coords.begin(), P.coords.end(), [](const Rational& x) { return sgn(x) != 0; });
}

// k_{first} + (k_{middle} intersect (V + k_{last}))
inline Subspace tripartition_degenerate(const Subspace& V, const Tripartition& t) {
    const std::size_t n = V.width();
    if ((t.first | t.middle | t.last) != V.labels() || !(t.first & t.middle).empty() ||
        !(t.first & t.last).empty() || !(t.middle & t.last).empty())
        throw InvalidInput("tripartition must partition the ambient set");
    auto unit = [&](int label) {
        RatVec e(n);
        e[V.position(label)] = 1;
        return e;
    };
    RatMatrix U = V.basis();
    for (int l : t.last.elements()) U.push_back(unit(l));
    // combinations c with (c U)_j = 0 for j outside middle
    std::vector<std::size_t> outside;
    for (std::size_t j = 0; j < n; ++j)
        if (!t.middle.contains(V.ambient()[j])) outside.push_back(j);
    RatMatrix eqs(outside.size(), RatVec(U.size()));
    for (std::size_t r = 0; r < outside.size(); ++r)
        for (std::size_t i = 0; i < U.size(); ++i) eqs[r][i] = U[i][outside[r]];
    RatMatrix rows;
    for (const auto& c : nullspace(eqs, U.size())) {
        RatVec v(n);
        for (std::size_t i = 0; i < U.size(); ++i)
            if (sgn(c[i]) != 0)
                for (std::size_t j = 0; j < n; ++j) v[j] += c[i] * U[i][j];
        rows.push_back(std::move(v));
    }
    for (int l : t.first.elements()) rows.push_back(unit(l));
    return Subspace(V.ambient(), std::move(rows));
}

// r -> (s_i r^{u_i}) acting coordinatewise on the ambient space
struct OnePSG {
    IntVec exponents;
    RatVec scalars;
};

inline PlueckerVector limit_pluecker(const Subspace& V, const OnePSG& psg) {
    if (psg.exponents.size() != V.width() || psg.scalars.size() != V.width())
        throw InvalidInput("one-parameter subgroup size must equal ambient size");
    for (const auto& s : psg.scalars)
        if (sgn(s) == 0) throw InvalidInput("one-parameter subgroup scalars must be nonzero");
    PlueckerVector P = pluecker(V);
    std::optional<long> best;
    std::vector<long> expo(P.index.size());
    for (std::size_t k = 0; k < P.index.size(); ++k) {
        long e = 0;
        for (int l : P.index[k].elements()) e += psg.exponents[V.position(l)];
        expo[k] = e;
        if (sgn(P.coords[k]) != 0 && (!best || e < *best)) best = e;
    }
    for (std::size_t k = 0; k < P.index.size(); ++k) {
        if (sgn(P.coords[k]) == 0) continue;
        if (expo[k] != *best) {
            P.coords[k] = 0;
            continue;
        }
        for (int l : P.index[k].elements()) P.coords[k] *= psg.scalars[V.position(l)];
    }
    detail::normalize_projective(P.coords);
    return P;
}

// Torus acting on k_I x k_J: pairs (s,t) with s_i^tau t_j^lambda = s_j^tau t_i^lambda for i,j in coupled.
struct TorusCoupling {
    Subset coupled;
    long lambda = 1;
    long tau = 1;

    auto operator<=>(const TorusCoupling&) const = default;
};

struct OrbitFingerprint {
    std::vector<std::vector<std::uint32_t>> supports;  // one list per Grassmannian factor
    std::vector<std::string> invariants;

    auto operator<=>(const OrbitFingerprint&) const = default;

    std::string str() const {
        std::string out;
        for (std::size_t f = 0; f < supports.size(); ++f) {
            out += f ? " | " : "";
            out += "{";
            for (std::size_t i = 0; i < supports[f].size(); ++i) {
                out += i ? "," : "";
                out += "[";
                auto els = Subset(supports[f][i]).elements();
                for (std::size_t j = 0; j < els.size(); ++j) out += (j ? " " : "") + std::to_string(els[j]);
                out += "]";
            }
            out += "}";
        }
        out += " inv(";
        for (std::size_t i = 0; i < invariants.size(); ++i) out += (i ? "," : "") + invariants[i];
        out += ")";
        return out;
    }
};

namespace detail {

struct Factor {
    Subset ambient;
    std::vector<Subset> support;
    RatVec values;
};

inline Factor nonzero_part(const PlueckerVector& P, Subset ambient) {
    Factor f{ambient, {}, {}};
    for (std::size_t k = 0; k < P.index.size(); ++k)
        if (sgn(P.coords[k]) != 0) {
            f.support.push_back(P.index[k]);
            f.values.push_back(P.coords[k]);
        }
    return f;
}

// Integer vectors w over the concatenated supports with sum_b w_b * chi_b trivial on the
// torus (times independent scalars per factor). Cached by shape.
inline const ZMatrix& relation_lattice(const std::vector<const Factor*>& fs, const TorusCoupling& tc) {
    using Shape = std::tuple<std::vector<std::vector<std::uint32_t>>, std::vector<std::uint32_t>, TorusCoupling>;
    thread_local std::map<Shape, ZMatrix> cache;
    Shape key;
    for (const auto* f : fs) {
        std::get<0>(key).emplace_back();
        for (auto b : f->support) std::get<0>(key).back().push_back(b.bits());
        std::get<1>(key).push_back(f->ambient.bits());
    }
    std::get<2>(key) = tc;
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::size_t nvars = 0;
    for (const auto* f : fs) nvars += f->support.size();
    const auto K = tc.coupled.elements();
    const std::size_t ngen = K.empty() ? 0 : K.size() - 1;
    const std::size_t cols = nvars + ngen;
    ZMatrix eq;
    std::size_t offset = 0;
    for (std::size_t fi = 0; fi < fs.size(); ++fi) {
        const auto* f = fs[fi];
        for (int label : f->ambient.elements()) {
            ZVec row(cols, 0);
            for (std::size_t k = 0; k < f->support.size(); ++k)
                if (f->support[k].contains(label)) row[offset + k] = 1;
            // generator r: tau(e_{K0} - e_{Kr}) on the first factor, -lambda(...) on the second
            if (fs.size() == 2)
                for (std::size_t r = 0; r < ngen; ++r) {
                    long w = fi == 0 ? tc.tau : -tc.lambda;
                    if (label == K[0]) row[nvars + r] -= w;
                    if (label == K[r + 1]) row[nvars + r] += w;
                }
            eq.push_back(std::move(row));
        }
        ZVec total(cols, 0);
        for (std::size_t k = 0; k < f->support.size(); ++k) total[offset + k] = 1;
        eq.push_back(std::move(total));
        offset += f->support.size();
    }
    ZMatrix projected;
    for (auto& v : integer_kernel(eq, cols)) {
        v.resize(nvars);
        projected.push_back(std::move(v));
    }
    return cache.emplace(std::move(key), lattice_basis(projected, nvars)).first->second;
}

inline RatVec evaluate_characters(const ZMatrix& basis, const std::vector<const Factor*>& fs,
                                  const std::vector<RatVec>& values) {
    RatVec out;
    for (const auto& w : basis) {
        Rational prod = 1;
        std::size_t k = 0;
        for (std::size_t fi = 0; fi < fs.size(); ++fi)
            for (std::size_t j = 0; j < fs[fi]->support.size(); ++j, ++k)
                if (w[k] != 0) prod *= pow(values[fi][j], to_long(w[k]));
        out.push_back(prod);
    }
    return out;
}

inline OrbitFingerprint fingerprint_of(const std::vector<Factor>& factors, const TorusCoupling& tc) {
    std::vector<const Factor*> fs;
    std::vector<RatVec> values;
    OrbitFingerprint fp;
    for (const auto& f : factors) {
        fs.push_back(&f);
        values.push_back(f.values);
        fp.supports.emplace_back();
        for (auto b : f.support) fp.supports.back().push_back(b.bits());
    }
    for (const auto& v : evaluate_characters(relation_lattice(fs, tc), fs, values)) fp.invariants.push_back(to_string(v));
    return fp;
}

// smallest/largest pieces of an interval support pattern
struct SupportShape {
    Subset first;  // common to every support element
    Subset last;   // missed by every support element
    bool interval;
};

inline SupportShape support_shape(const Factor& f, std::size_t h) {
    SupportShape s{f.ambient, Subset{}, false};
    Subset uni;
    for (auto b : f.support) {
        s.first = s.first & b;
        uni = uni | b;
    }
    s.last = f.ambient - uni;
    if (f.support.empty()) return s;
    const std::size_t lo = static_cast<std::size_t>(s.first.size());
    const std::size_t free = static_cast<std::size_t>((f.ambient - s.first - s.last).size());
    // every h-subset between first and ambient - last must appear
    s.interval = h >= lo && h - lo <= free && choose(free, h - lo) == f.support.size();
    return s;
}

inline std::vector<Factor> ratio_factors(const std::vector<std::pair<PlueckerVector, PlueckerVector>>& pairs,
                                         const std::vector<Subset>& ambients) {
    std::vector<Factor> out;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& [P, base] = pairs[i];
        Factor f{ambients[i], {}, {}};
        for (std::size_t k = 0; k < P.index.size(); ++k)
            if (sgn(P.coords[k]) != 0) {
                f.support.push_back(P.index[k]);
                f.values.push_back(P.coords[k] / base.coords[k]);
            }
        out.push_back(std::move(f));
    }
    return out;
}

inline bool characters_trivial(const std::vector<Factor>& factors, const TorusCoupling& tc) {
    std::vector<const Factor*> fs;
    std::vector<RatVec> values;
    for (const auto& f : factors) {
        fs.push_back(&f);
        values.push_back(f.values);
    }
    for (const auto& v : evaluate_characters(relation_lattice(fs, tc), fs, values))
        if (v != 1) return false;
    return true;
}

inline void require_general(const PlueckerVector& P) {
    if (!all_nonzero(P)) throw MathError("general position violated: a Pluecker coordinate of the base subspace is zero");
}

inline void require_same_shape(const Subspace& W, const Subspace& V) {
    if (W.ambient() != V.ambient() || W.dim() != V.dim() || V.dim() == 0)
        throw InvalidInput("dimension mismatch between subspaces");
}

}  // namespace detail

// orbit of W under the full torus of its ambient space
inline OrbitFingerprint orbit_fingerprint(const Subspace& W) {
    return detail::fingerprint_of({detail::nonzero_part(pluecker(W), W.labels())}, {});
}

inline OrbitFingerprint orbit_fingerprint(const PlueckerVector& P, Subset ambient) {
    return detail::fingerprint_of({detail::nonzero_part(P, ambient)}, {});
}

inline std::vector<Tripartition> qualifying_tripartitions(Subset I, std::size_t h) {
    std::vector<Tripartition> out;
    for (const auto& t : tripartitions(I))
        if (static_cast<std::size_t>(t.first.size()) < h && h <= static_cast<std::size_t>((I - t.last).size()))
            out.push_back(t);
    return out;
}

inline std::set<OrbitFingerprint> closure_orbit_set(const Subspace& V) {
    detail::check_desk_scale(V);
    if (V.dim() == 0) throw InvalidInput("subspace must be nonzero");
    detail::require_general(pluecker(V));
    std::set<OrbitFingerprint> out;
    for (const auto& t : qualifying_tripartitions(V.labels(), V.dim())) {
        auto W = tripartition_degenerate(V, t);
        if (W.dim() != V.dim()) throw std::logic_error("degeneration changed the dimension");
        out.insert(orbit_fingerprint(W));
    }
    return out;
}

// W lies in the closure of the torus orbit of V
inline bool in_closure(const Subspace& W, const Subspace& V) {
    detail::require_same_shape(W, V);
    auto base = pluecker(V);
    detail::require_general(base);
    auto P = pluecker(W);
    auto factors = detail::ratio_factors({{P, base}}, {V.labels()});
    if (!detail::support_shape(factors[0], V.dim()).interval) return false;
    return detail::characters_trivial(factors, {});
}

// explicit rational torus element carrying V's coordinates to W's on the support, if one is found
inline std::optional<std::map<int, Rational>> closure_witness(const Subspace& W, const Subspace& V) {
    if (!in_closure(W, V)) return std::nullopt;
    auto base = pluecker(V);
    auto factors = detail::ratio_factors({{pluecker(W), base}}, {V.labels()});
    const auto& f = factors[0];
    auto shape = detail::support_shape(f, V.dim());
    Subset mid = f.ambient - shape.first - shape.last;
    std::map<Subset, Rational> ratio;
    for (std::size_t k = 0; k < f.support.size(); ++k) ratio[f.support[k]] = f.values[k];
    // propagate s_i / s_j = r(b - j + i) / r(b) along swaps
    std::map<int, Rational> s;
    auto elems = mid.elements();
    if (elems.empty()) return s;
    s[elems[0]] = 1;
    for (bool grew = true; grew;) {
        grew = false;
        for (auto b : f.support)
            for (int j : (b & mid).elements())
                for (int i : (mid - b).elements()) {
                    Subset c = (b - Subset::single(j)) | Subset::single(i);
                    bool hi = s.count(i), hj = s.count(j);
                    if (hj && !hi) s[i] = s[j] * ratio.at(c) / ratio.at(b), grew = true;
                    if (hi && !hj) s[j] = s[i] * ratio.at(b) / ratio.at(c), grew = true;
                }
    }
    for (int i : elems)
        if (!s.count(i)) s[i] = 1;
    // check every ratio r(b1)/r(b2) = s^(b1 - b2)
    auto mono = [&](Subset b) {
        Rational m = 1;
        for (int i : (b & mid).elements()) m *= s[i];
        return m;
    };
    const Subset b0 = f.support.front();
    for (auto b : f.support)
        if (ratio.at(b) * mono(b0) != ratio.at(b0) * mono(b)) return std::nullopt;
    return s;
}

struct SubspacePair {
    Subspace first;
    Subspace second;
};

namespace detail {

inline void check_pair(const SubspacePair& p) {
    check_desk_scale(p.first);
    check_desk_scale(p.second);
    if (p.first.dim() == 0 || p.second.dim() == 0) throw InvalidInput("subspaces must be nonzero");
}

inline TorusCoupling pair_torus(const SubspacePair& p, long lambda, long tau) {
    if (lambda <= 0 || tau <= 0) throw InvalidInput("torus exponents must be positive");
    return {p.first.labels() & p.second.labels(), lambda, tau};
}

}  // namespace detail

inline OrbitFingerprint pair_orbit_fingerprint(const PlueckerVector& P, const PlueckerVector& Q, Subset I, Subset J,
                                               const TorusCoupling& tc) {
    return detail::fingerprint_of({detail::nonzero_part(P, I), detail::nonzero_part(Q, J)}, tc);
}

// Torus orbits in the closure of the orbit of (V, W) under
// {(s,t) : s_i^tau t_j^lambda = s_j^tau t_i^lambda on I n J}.
inline std::set<OrbitFingerprint> pair_closure_orbit_set_generic(const SubspacePair& base, long lambda, long tau) {
    detail::check_pair(base);
    detail::require_general(pluecker(base.first));
    detail::require_general(pluecker(base.second));
    const auto tc = detail::pair_torus(base, lambda, tau);
    const Subset I = base.first.labels(), J = base.second.labels();
    std::vector<std::pair<Tripartition, PlueckerVector>> xs, ys;
    for (const auto& t : qualifying_tripartitions(I, base.first.dim()))
        xs.emplace_back(t, pluecker(tripartition_degenerate(base.first, t)));
    for (const auto& t : qualifying_tripartitions(J, base.second.dim()))
        ys.emplace_back(t, pluecker(tripartition_degenerate(base.second, t)));
    std::set<OrbitFingerprint> out;
    for (const auto& [a, P] : xs)
        for (const auto& [b, Q] : ys)
            if (compatible(a, I, b, J)) out.insert(pair_orbit_fingerprint(P, Q, I, J, tc));
    return out;
}

// the stratum torus pairs exponents as s^beta_tilde = t^alpha_tilde
inline std::set<OrbitFingerprint> pair_closure_orbit_set(const Subspace& V, const Subspace& W, long alpha_tilde,
                                                         long beta_tilde) {
    return pair_closure_orbit_set_generic({V, W}, alpha_tilde, beta_tilde);
}

inline bool in_pair_closure_generic(const SubspacePair& cand, const SubspacePair& base, long lambda, long tau) {
    detail::check_pair(base);
    detail::require_same_shape(cand.first, base.first);
    detail::require_same_shape(cand.second, base.second);
    auto P0 = pluecker(base.first), Q0 = pluecker(base.second);
    detail::require_general(P0);
    detail::require_general(Q0);
    const Subset I = base.first.labels(), J = base.second.labels();
    auto factors = detail::ratio_factors({{pluecker(cand.first), P0}, {pluecker(cand.second), Q0}}, {I, J});
    auto sx = detail::support_shape(factors[0], base.first.dim());
    auto sy = detail::support_shape(factors[1], base.second.dim());
    if (!sx.interval || !sy.interval) return false;
    Tripartition a{sx.first, I - sx.first - sx.last, sx.last};
    Tripartition b{sy.first, J - sy.first - sy.last, sy.last};
    if (!compatible(a, I, b, J)) return false;
    detail::pair_torus(base, lambda, tau);
    return detail::characters_trivial(factors, {a.middle & b.middle, lambda, tau});
}

inline bool in_pair_closure(const SubspacePair& cand, const SubspacePair& base, long alpha_tilde, long beta_tilde) {
    return in_pair_closure_generic(cand, base, alpha_tilde, beta_tilde);
}

struct BruteForceReport {
    std::set<OrbitFingerprint> reached;
    std::size_t subgroups = 0;
};

// limits of V along every r -> (s_i r^{u_i}) with |u_i| <= bound, plus random scalars
inline BruteForceReport sample_limit_orbits(const Subspace& V, long bound, std::size_t random_scalars = 0,
                                            std::uint64_t seed = 1) {
    detail::check_desk_scale(V);
    const std::size_t n = V.width();
    BruteForceReport rep;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(1, 9), sign(0, 1);
    IntVec u(n, -bound);
    for (;;) {
        OnePSG psg{u, RatVec(n, Rational(1))};
        for (std::size_t rep_s = 0; rep_s <= random_scalars; ++rep_s) {
            if (rep_s > 0)
                for (auto& s : psg.scalars) s = make_rational(sign(rng) ? num(rng) : -num(rng), num(rng));
            rep.reached.insert(orbit_fingerprint(limit_pluecker(V, psg), V.labels()));
            ++rep.subgroups;
        }
        std::size_t i = n;
        while (i > 0 && u[i - 1] == bound) u[--i] = -bound;
        if (i == 0) break;
        ++u[i - 1];
    }
    return rep;
}

// Same for pairs, restricted to one-parameter subgroups inside the coupled torus.
inline BruteForceReport sample_pair_limit_orbits(const SubspacePair& base, long lambda, long tau, long bound,
                                                 std::size_t random_scalars = 0, std::uint64_t seed = 1) {
    detail::check_pair(base);
    const auto tc = detail::pair_torus(base, lambda, tau);
    const Subset I = base.first.labels(), J = base.second.labels();
    const std::size_t n1 = base.first.width(), n2 = base.second.width();
    const auto K = tc.coupled.elements();
    BruteForceReport rep;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(1, 5), sign(0, 1);
    IntVec w(n1 + n2, -bound);
    for (;;) {
        IntVec u(w.begin(), w.begin() + n1), v(w.begin() + n1, w.end());
        bool in_torus = true;
        for (std::size_t r = 1; r < K.size(); ++r) {
            auto i0 = K[0], ir = K[r];
            long d0 = tau * u[base.first.position(i0)] - lambda * v[base.second.position(i0)];
            long dr = tau * u[base.first.position(ir)] - lambda * v[base.second.position(ir)];
            if (d0 != dr) in_torus = false;
        }
        if (in_torus)
            for (std::size_t rep_s = 0; rep_s <= random_scalars; ++rep_s) {
                OnePSG a{u, RatVec(n1, Rational(1))}, b{v, RatVec(n2, Rational(1))};
                if (rep_s > 0) {
                    auto rnd = [&] { return make_rational(sign(rng) ? num(rng) : -num(rng), num(rng)); };
                    for (auto& s : a.scalars) s = rnd();
                    for (auto& t : b.scalars) t = rnd();
                    // s_k = c_k^lambda, t_k = c_k^tau on the coupled labels
                    for (int k : K) {
                        Rational c = rnd();
                        a.scalars[base.first.position(k)] = pow(c, lambda);
                        b.scalars[base.second.position(k)] = pow(c, tau);
                    }
                }
                rep.reached.insert(
                    pair_orbit_fingerprint(limit_pluecker(base.first, a), limit_pluecker(base.second, b), I, J, tc));
                ++rep.subgroups;
            }
        std::size_t i = w.size();
        while (i > 0 && w[i - 1] == bound) w[--i] = -bound;
        if (i == 0) break;
        ++w[i - 1];
    }
    return rep;
}

}  // namespace lcs
