#pragma once

#include <gmpxx.h>

#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lcs {

using Integer = mpz_class;
using Rational = mpq_class;
using RatVec = std::vector<Rational>;
using IntVec = std::vector<long>;

// bad caller input: malformed vectors, sizes, flags
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// well-formed input for which the math is undefined or infeasible
struct MathError : std::domain_error {
    using std::domain_error::domain_error;
};

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// "a/b" or "a"; whitespace not allowed
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw InvalidInput("empty rational");
    auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto strip_plus = [](std::string t) {
        if (!t.empty() && t[0] == '+') t.erase(0, 1);
        return t;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) throw InvalidInput("malformed rational '" + s + "'");
    Integer n(strip_plus(num)), d(strip_plus(den));
    if (d == 0) throw InvalidInput("zero denominator in '" + s + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

// always "a/b", lowest terms, positive denominator
inline std::string to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Integer floor_of(const Rational& q) { return floor_div(q.get_num(), q.get_den()); }

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline long to_long(const Integer& z) {
    if (!z.fits_slong_p()) throw MathError("integer overflow: " + z.get_str());
    return z.get_si();
}

// q^e for any integer e (q != 0 when e < 0)
inline Rational pow(const Rational& q, long e) {
    if (e == 0) return 1;
    Integer n, d;
    unsigned long ae = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    mpz_pow_ui(n.get_mpz_t(), q.get_num_mpz_t(), ae);
    mpz_pow_ui(d.get_mpz_t(), q.get_den_mpz_t(), ae);
    Rational r = e > 0 ? Rational(n, d) : Rational(d, n);
    r.canonicalize();
    return r;
}

// Subset of an index range 0..n-1 (n <= 32).
class Subset {
public:
    constexpr Subset() = default;
    constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}

    static constexpr Subset full(int n) {
        return Subset(n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1));
    }
    static constexpr Subset single(int i) { return Subset(std::uint32_t{1} << i); }
    static Subset of(std::initializer_list<int> idx) {
        Subset s;
        for (int i : idx) s.insert(i);
        return s;
    }

    constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
    constexpr void insert(int i) { bits_ |= std::uint32_t{1} << i; }
    constexpr void erase(int i) { bits_ &= ~(std::uint32_t{1} << i); }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::uint32_t bits() const { return bits_; }

    constexpr bool subset_of(Subset o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
    constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
    constexpr Subset operator-(Subset o) const { return Subset(bits_ & ~o.bits_); }
    constexpr auto operator<=>(const Subset&) const = default;

    std::vector<int> elements() const {
        std::vector<int> out;
        for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

private:
    std::uint32_t bits_ = 0;
};

inline constexpr int kMaxDelta = 31;

}  // namespace lcs
