#pragma once

// Coefficient fields. Every algorithm in the library is templated on a field
// type satisfying `CoefficientField`; the field object itself is a small
// value (the modulus for F_q, nothing for Q) carried around by rings.

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace resint {

constexpr std::uint32_t kDefaultPrime = 32003;

inline bool is_prime(std::uint64_t q) {
    if (q < 2) return false;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

template <typename F>
concept CoefficientField = requires(const F& f, typename F::value_type a, long long k) {
    { f.zero() } -> std::same_as<typename F::value_type>;
    { f.one() } -> std::same_as<typename F::value_type>;
    { f.from_int(k) } -> std::same_as<typename F::value_type>;
    { f.add(a, a) } -> std::same_as<typename F::value_type>;
    { f.sub(a, a) } -> std::same_as<typename F::value_type>;
    { f.mul(a, a) } -> std::same_as<typename F::value_type>;
    { f.neg(a) } -> std::same_as<typename F::value_type>;
    { f.inv(a) } -> std::same_as<typename F::value_type>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.to_string(a) } -> std::convertible_to<std::string>;
    { f.name() } -> std::convertible_to<std::string>;
    { f == f } -> std::convertible_to<bool>;
};

/// Prime field F_q with q < 2^31. Elements are canonical residues in [0, q).
class PrimeField {
public:
    using value_type = std::uint32_t;

    explicit PrimeField(std::uint32_t q = kDefaultPrime) : q_(q) {
        if (q >= (1u << 31) || !is_prime(q))
            throw std::invalid_argument("field characteristic must be a prime below 2^31, got " +
                                        std::to_string(q));
    }

    std::uint32_t characteristic() const { return q_; }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long long k) const {
        long long r = k % static_cast<long long>(q_);
        if (r < 0) r += q_;
        return static_cast<value_type>(r);
    }
    value_type add(value_type a, value_type b) const {
        std::uint32_t s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + q_ - b; }
    value_type neg(value_type a) const { return a == 0 ? 0 : q_ - a; }
    value_type mul(value_type a, value_type b) const {
        return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % q_);
    }
    value_type inv(value_type a) const {
        if (a == 0) throw std::domain_error("division by zero in F_" + std::to_string(q_));
        // extended Euclid on (a, q)
        std::int64_t t = 0, new_t = 1, r = q_, new_r = a;
        while (new_r != 0) {
            std::int64_t quot = r / new_r;
            std::int64_t tmp = t - quot * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - quot * new_r;
            r = new_r;
            new_r = tmp;
        }
        if (t < 0) t += q_;
        return static_cast<value_type>(t);
    }
    bool is_zero(value_type a) const { return a == 0; }

    // Symmetric representative, so -1 prints as "-1" rather than "q-1".
    long long to_signed(value_type a) const {
        return a > q_ / 2 ? static_cast<long long>(a) - q_ : static_cast<long long>(a);
    }
    std::string to_string(value_type a) const { return std::to_string(to_signed(a)); }
    std::string name() const { return std::to_string(q_); }

    bool operator==(const PrimeField&) const = default;

private:
    std::uint32_t q_;
};

/// The rationals, with arbitrary-precision numerators and denominators.
class RationalField {
public:
    using value_type = boost::multiprecision::cpp_rational;

    value_type zero() const { return value_type(0); }
    value_type one() const { return value_type(1); }
    value_type from_int(long long k) const { return value_type(k); }
    value_type from_fraction(const std::string& num, const std::string& den) const {
        return value_type(boost::multiprecision::cpp_int(num), boost::multiprecision::cpp_int(den));
    }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type inv(const value_type& a) const {
        if (a == 0) throw std::domain_error("division by zero in Q");
        return value_type(1) / a;
    }
    bool is_zero(const value_type& a) const { return a == 0; }
    std::string to_string(const value_type& a) const { return a.str(); }
    std::string name() const { return "Q"; }

    bool operator==(const RationalField&) const = default;
};

static_assert(CoefficientField<PrimeField>);
static_assert(CoefficientField<RationalField>);

}  // namespace resint
