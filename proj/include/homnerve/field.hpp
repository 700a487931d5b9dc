#ifndef HOMNERVE_FIELD_HPP
#define HOMNERVE_FIELD_HPP

#include <cstdint>
#include <string>
#include <stdexcept>
#include <string_view>
#include <tuple>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace homnerve {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// Runtime description of a coefficient field: GF(p) for a prime p, or Q.
class FieldSpec {
public:
    enum class Kind { Prime, Rationals };

    FieldSpec() = default;

    static FieldSpec prime(std::uint64_t p) {
        // p * p must fit in 64 bits for the modular multiply.
        if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
            throw InvalidInput("field order " + std::to_string(p) + " is not a supported prime");
        FieldSpec f;
        f.kind_ = Kind::Prime;
        f.p_ = static_cast<std::uint32_t>(p);
        return f;
    }

    static FieldSpec rationals() {
        FieldSpec f;
        f.kind_ = Kind::Rationals;
        f.p_ = 0;
        return f;
    }

    /// Accepts "gf<p>" for prime p, or "q" for the rationals.
    static FieldSpec parse(std::string_view text) {
        if (text == "q" || text == "Q") return rationals();
        if (text.size() > 2 && (text.substr(0, 2) == "gf" || text.substr(0, 2) == "GF")) {
            std::uint64_t p = 0;
            for (char c : text.substr(2)) {
                if (c < '0' || c > '9' || p > (std::uint64_t{1} << 40))
                    throw InvalidInput("malformed field '" + std::string(text) + "'");
                p = p * 10 + static_cast<std::uint64_t>(c - '0');
            }
            return prime(p);
        }
        throw InvalidInput("unknown field '" + std::string(text) + "' (expected gf<p> or q)");
    }

    Kind kind() const { return kind_; }
    bool is_prime_field() const { return kind_ == Kind::Prime; }
    /// Characteristic; 0 for Q.
    std::uint32_t characteristic() const { return p_; }

    /// Canonical flag spelling: "gf2", "gf3", "q".
    std::string name() const {
        return kind_ == Kind::Rationals ? std::string("q") : "gf" + std::to_string(p_);
    }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    Kind kind_ = Kind::Prime;
    std::uint32_t p_ = 2;
};

// Field models. Each provides value_type and the arithmetic used by the
// elimination routines; values are always kept in canonical form.

struct GF2 {
    using value_type = std::uint8_t;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    bool is_zero(value_type a) const { return a == 0; }
    value_type add(value_type a, value_type b) const { return a ^ b; }
    value_type sub(value_type a, value_type b) const { return a ^ b; }
    value_type neg(value_type a) const { return a; }
    value_type mul(value_type a, value_type b) const { return a & b; }
    value_type inv(value_type a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return 1;
    }
    value_type from_int(long long v) const { return static_cast<value_type>(v & 1); }
    value_type from_rational(const BigInt& num, const BigInt& den) const {
        if ((den & 1) == 0) throw InvalidInput("denominator vanishes in GF(2)");
        return static_cast<value_type>(static_cast<int>(num & 1));
    }
    std::string to_string(value_type a) const { return a ? "1" : "0"; }
    FieldSpec spec() const { return FieldSpec::prime(2); }
};

class PrimeField {
public:
    using value_type = std::uint32_t;

    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (!is_prime(p)) throw InvalidInput("field order " + std::to_string(p) + " is not prime");
    }

    std::uint32_t modulus() const { return p_; }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    bool is_zero(value_type a) const { return a == 0; }
    value_type add(value_type a, value_type b) const {
        std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<value_type>(s >= p_ ? s - p_ : s);
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + (p_ - b); }
    value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
    value_type mul(value_type a, value_type b) const {
        return static_cast<value_type>((std::uint64_t{a} * b) % p_);
    }
    value_type inv(value_type a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        // Extended Euclid on (a, p).
        std::int64_t r0 = p_, r1 = a, t0 = 0, t1 = 1;
        while (r1 != 0) {
            std::int64_t q = r0 / r1;
            std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
            std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
        }
        if (t0 < 0) t0 += p_;
        return static_cast<value_type>(t0);
    }
    value_type from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<value_type>(r);
    }
    value_type from_rational(const BigInt& num, const BigInt& den) const {
        BigInt p = p_;
        BigInt d = den % p;
        if (d < 0) d += p;
        if (d == 0)
            throw InvalidInput("denominator vanishes in GF(" + std::to_string(p_) + ")");
        BigInt n = num % p;
        if (n < 0) n += p;
        return mul(static_cast<value_type>(n), inv(static_cast<value_type>(d)));
    }
    std::string to_string(value_type a) const { return std::to_string(a); }
    FieldSpec spec() const { return FieldSpec::prime(p_); }

private:
    std::uint32_t p_;
};

struct Rationals {
    using value_type = BigRational;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    bool is_zero(const value_type& a) const { return a == 0; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type inv(const value_type& a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return value_type(1) / a;
    }
    value_type from_int(long long v) const { return v; }
    value_type from_rational(const BigInt& num, const BigInt& den) const {
        if (den == 0) throw InvalidInput("zero denominator");
        return value_type(num, den);
    }
    std::string to_string(const value_type& a) const { return a.str(); }
    FieldSpec spec() const { return FieldSpec::rationals(); }
};

/// Calls fn with the field model matching spec. All branches must return
/// the same type.
template <class Fn>
auto with_field(const FieldSpec& spec, Fn&& fn) {
    if (spec.kind() == FieldSpec::Kind::Rationals) return std::forward<Fn>(fn)(Rationals{});
    if (spec.characteristic() == 2) return std::forward<Fn>(fn)(GF2{});
    return std::forward<Fn>(fn)(PrimeField{spec.characteristic()});
}

}  // namespace homnerve

#endif
