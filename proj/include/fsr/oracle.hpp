#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fsr/poly.hpp"
#include "fsr/ring.hpp"

namespace fsr {

/// Result of a brute-force search: the minimal length/degree and every
/// solution at it, canonically ordered.
struct OracleResult {
    std::int64_t complexity = 0;
    std::vector<Poly> solutions;
};

namespace detail {

inline std::vector<std::int64_t> unit_values(const Modulus& m) {
    std::vector<std::int64_t> out;
    for (std::int64_t v = 1; v < m.q(); ++v)
        if (v % m.p() != 0) out.push_back(v);
    return out;
}

/// Charges base_count * q^exponent candidates against the running total,
/// throwing before any overflow when the budget would be exceeded.
inline void charge_level(std::int64_t& used, std::int64_t base_count, std::int64_t q,
                         std::int64_t exponent, std::int64_t budget) {
    std::int64_t tuples = base_count;
    bool over = tuples > budget;
    for (std::int64_t e = 0; !over && e < exponent; ++e) {
        if (tuples > budget / q)
            over = true;
        else
            tuples *= q;
    }
    if (over || tuples > budget - used)
        throw cost_error("brute-force enumeration exceeds the feasibility budget (> " +
                         std::to_string(budget) + " candidates)");
    used += tuples;
}

} // namespace detail

/// Exhaustively searches the shortest feedback polynomials of S: for
/// L = 0, 1, ... every lambda with unit constant term and lambda_1..lambda_L
/// arbitrary (lambda_L may be zero) is tested against the recursion
/// lambda_0 S_{L+j} + sum lambda_i S_{L+j-i} = 0 for j = 1..N-L. Cost grows
/// as q^{L+1}; guarded by `budget`. Shares nothing with the iterative engine
/// beyond scalar arithmetic.
inline OracleResult oracle_shortest_feedback(std::span<const Residue> s, Modulus m,
                                             bool normalized,
                                             std::int64_t budget = 50'000'000) {
    const std::int64_t n = static_cast<std::int64_t>(s.size());
    const std::int64_t q = m.q();
    const std::vector<std::int64_t> units = detail::unit_values(m);
    std::int64_t used = 0;

    for (std::int64_t len = 0; len <= n; ++len) {
        detail::charge_level(used, static_cast<std::int64_t>(units.size()), q, len, budget);

        std::vector<Poly> found;
        std::vector<std::int64_t> taps(static_cast<std::size_t>(len) + 1, 0);
        for (std::int64_t u : units) {
            taps[0] = u;
            std::fill(taps.begin() + 1, taps.end(), 0);
            while (true) {
                bool ok = true;
                for (std::int64_t j = 1; ok && j <= n - len; ++j) {
                    std::int64_t acc = 0;
                    for (std::int64_t i = 0; i <= len; ++i)
                        acc = (acc + taps[static_cast<std::size_t>(i)] *
                                         s[static_cast<std::size_t>(len + j - i - 1)].value()) %
                              q;
                    ok = acc == 0;
                }
                if (ok) found.push_back(Poly::from_coeffs(m, taps));

                bool carried = false;
                for (std::size_t i = 1; i < taps.size(); ++i) {
                    if (++taps[i] < q) {
                        carried = true;
                        break;
                    }
                    taps[i] = 0;
                }
                if (!carried) break;
            }
        }
        if (!found.empty()) {
            if (normalized)
                for (Poly& f : found) f = inverse(f.constant_term()) * f;
            sort_unique_canonical(found);
            return OracleResult{len, std::move(found)};
        }
    }
    // n = 0 lands here only if the unit loop found nothing, which cannot
    // happen (the empty recursion accepts every unit).
    throw internal_error("feedback search found no solution at L = N");
}

/// Exhaustively searches the minimal characteristic polynomials of S:
/// minimal-degree d with unit leading coefficient satisfying
/// d_L S_{L+j} + sum d_{L-i} S_{L+j-i} = 0 for j = 1..N-L.
inline OracleResult oracle_min_char(std::span<const Residue> s, Modulus m, bool monic,
                                    std::int64_t budget = 50'000'000) {
    const std::int64_t n = static_cast<std::int64_t>(s.size());
    const std::int64_t q = m.q();
    const std::vector<std::int64_t> units = detail::unit_values(m);
    std::int64_t used = 0;

    for (std::int64_t deg = 0; deg <= n; ++deg) {
        detail::charge_level(used, static_cast<std::int64_t>(units.size()), q, deg, budget);

        std::vector<Poly> found;
        std::vector<std::int64_t> coeffs(static_cast<std::size_t>(deg) + 1, 0);
        for (std::int64_t u : units) {
            coeffs[static_cast<std::size_t>(deg)] = u;
            std::fill(coeffs.begin(), coeffs.begin() + deg, 0);
            while (true) {
                bool ok = true;
                // d_L S_{L+j} + sum_{i>=1} d_{L-i} S_{L+j-i} = sum_m d_m S_{j+m}
                for (std::int64_t j = 1; ok && j <= n - deg; ++j) {
                    std::int64_t acc = 0;
                    for (std::int64_t mm = 0; mm <= deg; ++mm)
                        acc = (acc + coeffs[static_cast<std::size_t>(mm)] *
                                         s[static_cast<std::size_t>(j + mm - 1)].value()) %
                              q;
                    ok = acc == 0;
                }
                if (ok) found.push_back(Poly::from_coeffs(m, coeffs));

                bool carried = false;
                for (std::int64_t i = 0; i < deg; ++i) {
                    if (++coeffs[static_cast<std::size_t>(i)] < q) {
                        carried = true;
                        break;
                    }
                    coeffs[static_cast<std::size_t>(i)] = 0;
                }
                if (!carried) break;
            }
        }
        if (!found.empty()) {
            if (monic)
                for (Poly& f : found) f = inverse(f.leading_coeff()) * f;
            sort_unique_canonical(found);
            return OracleResult{deg, std::move(found)};
        }
    }
    throw internal_error("characteristic search found no solution at L = N");
}

/// Entry k is the brute-force complexity of the prefix S_1..S_k.
inline std::vector<std::int64_t> oracle_complexity_profile(std::span<const Residue> s,
                                                           Modulus m,
                                                           std::int64_t budget = 50'000'000) {
    std::vector<std::int64_t> profile;
    profile.reserve(s.size());
    for (std::size_t k = 1; k <= s.size(); ++k)
        profile.push_back(oracle_shortest_feedback(s.subspan(0, k), m, false, budget).complexity);
    return profile;
}

} // namespace fsr
