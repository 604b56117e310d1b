#pragma once

// Exact field arithmetic: prime fields GF(p) with runtime modulus and
// arbitrary-precision rationals. Everything downstream is templated on the
// scalar type; no floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tatekit {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Element of GF(p); the modulus travels with the value.
class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}

    static Fp zero(std::uint64_t p) { return Fp(0, p); }
    static Fp one(std::uint64_t p) { return Fp(1, p); }
    static Fp from_int(long long n, std::uint64_t p) {
        long long r = n % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        return Fp(static_cast<std::uint64_t>(r), p);
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator+(const Fp& o) const { check(o); return Fp((v_ + o.v_) % p_, p_); }
    Fp operator-(const Fp& o) const { check(o); return Fp((v_ + p_ - o.v_) % p_, p_); }
    Fp operator-() const { return Fp((p_ - v_) % p_, p_); }
    Fp operator*(const Fp& o) const {
        check(o);
        return Fp(static_cast<std::uint64_t>((__uint128_t)v_ * o.v_ % p_), p_);
    }
    Fp inv() const {
        if (v_ == 0) throw std::domain_error("Fp: division by zero");
        // extended Euclid
        long long a = static_cast<long long>(v_), m = static_cast<long long>(p_);
        long long x0 = 0, x1 = 1, b = m;
        while (a > 1) {
            long long q = a / b;
            long long t = b; b = a % b; a = t;
            t = x0; x0 = x1 - q * x0; x1 = t;
        }
        if (x1 < 0) x1 += m;
        return Fp(static_cast<std::uint64_t>(x1), p_);
    }
    Fp operator/(const Fp& o) const { return *this * o.inv(); }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    bool operator==(const Fp& o) const { check(o); return v_ == o.v_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    std::string str() const { return std::to_string(v_); }

private:
    void check(const Fp& o) const {
        if (p_ != o.p_) throw std::invalid_argument("Fp: mixed moduli");
    }
    std::uint64_t v_;
    std::uint64_t p_;
};

/// Arbitrary-precision rational.
class Rat {
public:
    Rat() : v_(0) {}
    explicit Rat(BigRational v) : v_(std::move(v)) {}
    Rat(long long num, long long den) : v_(BigRational(num, den)) {}

    static Rat zero() { return Rat(BigRational(0)); }
    static Rat one() { return Rat(BigRational(1)); }
    static Rat from_int(long long n) { return Rat(BigRational(n)); }

    const BigRational& value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    Rat operator+(const Rat& o) const { return Rat(v_ + o.v_); }
    Rat operator-(const Rat& o) const { return Rat(v_ - o.v_); }
    Rat operator-() const { return Rat(-v_); }
    Rat operator*(const Rat& o) const { return Rat(v_ * o.v_); }
    Rat operator/(const Rat& o) const {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        return Rat(v_ / o.v_);
    }
    Rat inv() const { return Rat::one() / *this; }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }

    std::string str() const { return v_.str(); }

private:
    BigRational v_;
};

/// Field context: a factory for scalars of one concrete field. Generic code
/// takes a FieldCtx and never constructs scalars from raw literals.
template <class K>
struct FieldCtx;

template <>
struct FieldCtx<Fp> {
    std::uint64_t p;
    explicit FieldCtx(std::uint64_t prime) : p(prime) {
        if (!is_prime_u64(prime)) throw std::invalid_argument("FieldCtx: modulus not prime");
    }
    Fp zero() const { return Fp::zero(p); }
    Fp one() const { return Fp::one(p); }
    Fp from_int(long long n) const { return Fp::from_int(n, p); }
    bool finite() const { return true; }
    std::uint64_t unit_group_order() const { return p - 1; }
    std::string name() const { return "GF(" + std::to_string(p) + ")"; }
};

template <>
struct FieldCtx<Rat> {
    FieldCtx() = default;
    Rat zero() const { return Rat::zero(); }
    Rat one() const { return Rat::one(); }
    Rat from_int(long long n) const { return Rat::from_int(n); }
    bool finite() const { return false; }
    std::string name() const { return "Q"; }
};

template <class K>
K pow_scalar(K base, long long e) {
    K r = base * base.inv();  // one, with matching context
    if (e < 0) { base = base.inv(); e = -e; }
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

}  // namespace tatekit
