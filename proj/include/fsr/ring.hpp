#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fsr {

/// Thrown when an algorithm's internal invariant fails. Indicates a bug in
/// this library, never bad user input.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Thrown when an exhaustive search would exceed its feasibility budget.
class cost_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace detail

/// Prime-power modulus q = p^r. Desk scale by design: q must stay below
/// 2^31 so products of canonical representatives fit in int64 without
/// a big-integer layer.
class Modulus {
public:
    Modulus(std::int64_t p, std::int64_t r) : p_(p), r_(r) {
        if (!detail::is_prime(p))
            throw std::invalid_argument("modulus base " + std::to_string(p) + " is not prime");
        if (r < 1)
            throw std::invalid_argument("modulus exponent must be >= 1");
        q_ = 1;
        for (std::int64_t i = 0; i < r; ++i) {
            q_ *= p;
            if (q_ >= (std::int64_t{1} << 31))
                throw std::invalid_argument("modulus p^r exceeds the supported range (< 2^31)");
        }
    }

    std::int64_t p() const { return p_; }
    std::int64_t r() const { return r_; }
    std::int64_t q() const { return q_; }
    bool is_field() const { return r_ == 1; }

    friend bool operator==(const Modulus& a, const Modulus& b) {
        return a.p_ == b.p_ && a.r_ == b.r_;
    }
    friend bool operator!=(const Modulus& a, const Modulus& b) { return !(a == b); }

private:
    std::int64_t p_;
    std::int64_t r_;
    std::int64_t q_; // cached p^r
};

/// An element of Z_{p^r}, stored as its canonical representative in [0, q).
class Residue {
public:
    Residue(std::int64_t value, Modulus m) : m_(m) {
        v_ = value % m_.q();
        if (v_ < 0) v_ += m_.q();
    }

    std::int64_t value() const { return v_; }
    const Modulus& modulus() const { return m_; }

    bool is_zero() const { return v_ == 0; }
    bool is_unit() const { return v_ % m_.p() != 0; }

    friend Residue operator+(const Residue& a, const Residue& b) {
        a.check_same(b);
        return Residue(a.v_ + b.v_, a.m_);
    }
    friend Residue operator-(const Residue& a, const Residue& b) {
        a.check_same(b);
        return Residue(a.v_ - b.v_, a.m_);
    }
    friend Residue operator*(const Residue& a, const Residue& b) {
        a.check_same(b);
        return Residue(a.v_ * b.v_, a.m_);
    }
    Residue operator-() const { return Residue(-v_, m_); }

    friend bool operator==(const Residue& a, const Residue& b) {
        a.check_same(b);
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Residue& a, const Residue& b) { return !(a == b); }

private:
    void check_same(const Residue& other) const {
        if (m_ != other.m_)
            throw std::invalid_argument("residue arithmetic across distinct moduli");
    }

    std::int64_t v_;
    Modulus m_;
};

/// Order of a scalar: the additive subgroup generated by a has p^order(a)
/// elements. Equals r minus the p-adic valuation of a; order(0) = 0 and
/// scalars of order r are exactly the units.
inline std::int64_t order(const Residue& a) {
    if (a.is_zero()) return 0;
    std::int64_t v = a.value();
    std::int64_t val = 0;
    while (v % a.modulus().p() == 0) {
        v /= a.modulus().p();
        ++val;
    }
    return a.modulus().r() - val;
}

/// Digits (theta_0, ..., theta_{r-1}) in A_p = {0, ..., p-1} with
/// a = theta_0 + p theta_1 + ... + p^{r-1} theta_{r-1}.
inline std::vector<std::int64_t> p_adic_expansion(const Residue& a) {
    std::vector<std::int64_t> digits;
    digits.reserve(static_cast<std::size_t>(a.modulus().r()));
    std::int64_t v = a.value();
    for (std::int64_t i = 0; i < a.modulus().r(); ++i) {
        digits.push_back(v % a.modulus().p());
        v /= a.modulus().p();
    }
    return digits;
}

inline bool is_unit(const Residue& a) { return a.is_unit(); }

/// Multiplicative inverse of a unit, via extended gcd.
inline Residue inverse(const Residue& a) {
    if (!a.is_unit())
        throw std::domain_error("inverse of non-unit " + std::to_string(a.value()) +
                                " mod " + std::to_string(a.modulus().q()));
    std::int64_t t = 0, new_t = 1;
    std::int64_t rem = a.modulus().q(), new_rem = a.value();
    while (new_rem != 0) {
        const std::int64_t quot = rem / new_rem;
        t -= quot * new_t;
        std::swap(t, new_t);
        rem -= quot * new_rem;
        std::swap(rem, new_rem);
    }
    return Residue(t, a.modulus());
}

/// Unit-times-prime-power form of a nonzero scalar: a = theta * p^(level-1)
/// with theta a unit and level in [1, r]. theta is the smallest such unit
/// representative (the integer quotient of the canonical value).
struct UnitPower {
    Residue theta;
    std::int64_t level;
};

inline UnitPower unit_decompose(const Residue& a) {
    if (a.is_zero())
        throw std::domain_error("unit_decompose(0) is undefined; zeros belong to partition P_0");
    std::int64_t v = a.value();
    std::int64_t val = 0;
    while (v % a.modulus().p() == 0) {
        v /= a.modulus().p();
        ++val;
    }
    return UnitPower{Residue(v, a.modulus()), val + 1};
}

/// The sequence S_1, ..., S_N as residues.
using Sequence = std::vector<Residue>;

inline Sequence make_sequence(const Modulus& m, const std::vector<std::int64_t>& values) {
    Sequence s;
    s.reserve(values.size());
    for (std::int64_t v : values) s.emplace_back(v, m);
    return s;
}

inline Sequence reversed(const Sequence& s) { return Sequence(s.rbegin(), s.rend()); }

} // namespace fsr
