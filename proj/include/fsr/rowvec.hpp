#pragma once

#include <compare>
#include <cstdint>
#include <span>

#include "fsr/poly.hpp"
#include "fsr/ring.hpp"

namespace fsr {

/// Monomial x^alpha e_pos of a 2-component polynomial row vector.
struct Monomial {
    std::int64_t alpha;
    int pos; // 1 or 2

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Term Over Position compares exponents first; Position Over Term compares
/// positions first. Both are total orders on monomials.
enum class MonomialOrder { kTop, kPot };

inline std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b,
                                              MonomialOrder order) {
    if (order == MonomialOrder::kTop) {
        if (a.alpha != b.alpha) return a.alpha <=> b.alpha;
        return a.pos <=> b.pos;
    }
    if (a.pos != b.pos) return a.pos <=> b.pos;
    return a.alpha <=> b.alpha;
}

/// Row vector [g1 g2] in Z_{p^r}[x]^2. Basis rows are never both-zero.
struct PolyRowVec {
    Poly g1;
    Poly g2;

    const Modulus& modulus() const { return g1.modulus(); }
    bool is_zero() const { return g1.is_zero() && g2.is_zero(); }

    friend PolyRowVec operator+(const PolyRowVec& a, const PolyRowVec& b) {
        return {a.g1 + b.g1, a.g2 + b.g2};
    }
    friend PolyRowVec operator*(const Residue& s, const PolyRowVec& v) {
        return {s * v.g1, s * v.g2};
    }
    PolyRowVec shifted(std::int64_t n) const { return {g1.shifted(n), g2.shifted(n)}; }

    friend bool operator==(const PolyRowVec& a, const PolyRowVec& b) {
        return a.g1 == b.g1 && a.g2 == b.g2;
    }
    friend bool operator!=(const PolyRowVec& a, const PolyRowVec& b) { return !(a == b); }
};

inline PolyRowVec zero_row(Modulus m) { return {Poly::zero(m), Poly::zero(m)}; }

/// Leading data of a nonzero row vector under a monomial ordering: the
/// maximal monomial with nonzero coefficient, its coefficient, position,
/// exponent, and the scalar order of the coefficient.
struct LeadingData {
    Monomial lm;
    Residue lc;
    int lpos;
    std::int64_t deg;
    std::int64_t ord;
};

inline LeadingData leading_data(const PolyRowVec& f, MonomialOrder order) {
    if (f.is_zero()) throw std::domain_error("leading data of the zero vector is undefined");
    // The maximum over the component leading monomials; compare_monomials is
    // the single source of truth for ties.
    bool have = false;
    Monomial best{0, 1};
    if (!f.g1.is_zero()) {
        best = Monomial{f.g1.degree(), 1};
        have = true;
    }
    if (!f.g2.is_zero()) {
        const Monomial m2{f.g2.degree(), 2};
        if (!have || compare_monomials(best, m2, order) == std::strong_ordering::less) best = m2;
    }
    const Residue lc = best.pos == 1 ? f.g1.leading_coeff() : f.g2.leading_coeff();
    return LeadingData{best, lc, best.pos, best.alpha, fsr::order(lc)};
}

/// Top degree of a nonzero row: max of the component degrees.
inline std::int64_t row_degree(const PolyRowVec& f) {
    return leading_data(f, MonomialOrder::kTop).deg;
}

namespace detail {

/// Coefficient of x^m in g1(x) + g2(x) * S(x) with S(x) = S_1 x + ... + S_k x^k.
inline std::int64_t trajectory_coeff(const PolyRowVec& g, std::span<const Residue> s,
                                     std::int64_t m) {
    const std::int64_t q = g.modulus().q();
    std::int64_t acc = g.g1.coeff_value(m);
    const std::int64_t hi = std::min<std::int64_t>(m, static_cast<std::int64_t>(s.size()));
    for (std::int64_t i = 1; i <= hi; ++i)
        acc = (acc + s[static_cast<std::size_t>(i - 1)].value() * g.g2.coeff_value(m - i)) % q;
    return acc;
}

} // namespace detail

/// Step-k discrepancy of a row against the prefix S_1..S_k: the coefficient
/// of x^k in g1 + g2 * S(x).
inline Residue discrepancy(const PolyRowVec& g, std::span<const Residue> s, std::int64_t k) {
    if (k < 1 || k > static_cast<std::int64_t>(s.size()))
        throw std::invalid_argument("discrepancy step index out of range");
    return Residue(detail::trajectory_coeff(g, s, k), g.modulus());
}

/// The interpolation module determined by a sequence prefix: the row space of
/// [x^{k+1} 0; -(S_k x^k + ... + S_1 x) 1], with the sequence reversed when
/// reciprocal is set.
struct ModuleSpec {
    Sequence sequence;
    bool reciprocal = false;
};

/// Row-space membership, tested as the vanishing of the coefficients of
/// x^0..x^k in g1 + g2 * S(x).
inline bool membership(const PolyRowVec& g, const ModuleSpec& spec) {
    const Sequence seq = spec.reciprocal ? reversed(spec.sequence) : spec.sequence;
    const std::int64_t k = static_cast<std::int64_t>(seq.size());
    for (std::int64_t m = 0; m <= k; ++m)
        if (detail::trajectory_coeff(g, seq, m) != 0) return false;
    return true;
}

} // namespace fsr
