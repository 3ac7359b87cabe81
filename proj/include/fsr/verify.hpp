#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fsr/rowvec.hpp"

namespace fsr {

/// An ordered family of row vectors meant to be a p-generator sequence whose
/// p-span is the module under study.
struct PBasis {
    Modulus modulus;
    std::vector<PolyRowVec> rows;
};

/// Minimal-Gröbner-basis characterization for a full-rank module over a
/// field: the two top degrees sum to the module degree k+1 and the leading
/// positions differ. Membership of the rows is checked separately.
inline bool is_minimal_grobner_field(const PolyRowVec& r1, const PolyRowVec& r2,
                                     std::int64_t k) {
    if (!r1.modulus().is_field())
        throw std::invalid_argument("is_minimal_grobner_field requires r = 1");
    const LeadingData a = leading_data(r1, MonomialOrder::kTop);
    const LeadingData b = leading_data(r2, MonomialOrder::kTop);
    return a.deg + b.deg == k + 1 && a.lpos != b.lpos;
}

namespace detail {

/// Dense scratch view of a row: both components padded to a common length.
struct RowArrays {
    std::vector<std::int64_t> c1, c2;
    Monomial lm{0, 1};
};

inline std::vector<std::vector<std::int64_t>> digit_polys(std::int64_t p, std::int64_t bound) {
    // every coefficient tuple over A_p of length bound+1, constant first;
    // first entry is the zero polynomial
    std::int64_t total = 1;
    for (std::int64_t e = 0; e <= bound; ++e) total *= p;
    std::vector<std::vector<std::int64_t>> out;
    out.reserve(static_cast<std::size_t>(total));
    std::vector<std::int64_t> digits(static_cast<std::size_t>(bound) + 1, 0);
    for (std::int64_t t = 0; t < total; ++t) {
        out.push_back(digits);
        for (std::size_t di = 0; di < digits.size(); ++di) {
            if (++digits[di] < p) break;
            digits[di] = 0;
        }
    }
    return out;
}

inline std::int64_t poly_deg(const std::vector<std::int64_t>& c) {
    for (std::size_t i = c.size(); i-- > 0;)
        if (c[i] != 0) return static_cast<std::int64_t>(i);
    return -1;
}

/// Exhaustive sweep over all digit-coefficient combinations of the rows.
/// Shared by the p-PLM and p-generator checks.
class DigitCombinationSweep {
public:
    DigitCombinationSweep(const PBasis& basis, std::int64_t bound) : q_(basis.modulus.q()) {
        choices_ = digit_polys(basis.modulus.p(), bound);
        std::int64_t max_deg = 0;
        for (const PolyRowVec& r : basis.rows) {
            if (r.is_zero())
                throw std::invalid_argument("digit-combination sweep over a zero row");
            max_deg = std::max(max_deg, std::max(r.g1.degree(), r.g2.degree()));
        }
        len_ = static_cast<std::size_t>(std::max<std::int64_t>(max_deg + bound, 0) + 2);
        for (std::size_t i = 0; i < basis.rows.size(); ++i) {
            RowArrays ra;
            ra.c1.assign(len_, 0);
            ra.c2.assign(len_, 0);
            for (std::int64_t d = 0; d <= basis.rows[i].g1.degree(); ++d)
                ra.c1[static_cast<std::size_t>(d)] = basis.rows[i].g1.coeff_value(d);
            for (std::int64_t d = 0; d <= basis.rows[i].g2.degree(); ++d)
                ra.c2[static_cast<std::size_t>(d)] = basis.rows[i].g2.coeff_value(d);
            ra.lm = leading_data(basis.rows[i], MonomialOrder::kTop).lm;
            rows_.push_back(std::move(ra));
        }
        sums1_.assign(rows_.size() + 1, std::vector<std::int64_t>(len_, 0));
        sums2_.assign(rows_.size() + 1, std::vector<std::int64_t>(len_, 0));
        picked_.assign(rows_.size(), 0);
    }

    std::size_t length() const { return len_; }

    /// Runs visit(sum1, sum2, max_lm, any_nonzero) at every leaf; aborts the
    /// sweep when visit returns false. Returns false iff aborted.
    template <typename Visit>
    bool run(Visit&& visit) {
        return descend(0, Monomial{-1, 0}, false, visit);
    }

    /// Digit tuple of the current/last visited leaf, for diagnostics.
    std::string tuple_string(const Modulus& m) const {
        std::string out = "(";
        for (std::size_t i = 0; i < picked_.size(); ++i) {
            if (i) out += ", ";
            out += Poly::from_coeffs(m, choices_[picked_[i]]).to_string();
        }
        return out + ")";
    }

private:
    template <typename Visit>
    bool descend(std::size_t level, Monomial max_lm, bool any, Visit&& visit) {
        if (level == rows_.size())
            return visit(sums1_[level], sums2_[level], max_lm, any);
        const RowArrays& row = rows_[level];
        for (std::size_t ci = 0; ci < choices_.size(); ++ci) {
            picked_[level] = ci;
            const std::vector<std::int64_t>& a = choices_[ci];
            auto& s1 = sums1_[level + 1];
            auto& s2 = sums2_[level + 1];
            s1 = sums1_[level];
            s2 = sums2_[level];
            const std::int64_t da = poly_deg(a);
            Monomial next_max = max_lm;
            bool next_any = any;
            if (da >= 0) {
                for (std::size_t e = 0; e <= static_cast<std::size_t>(da); ++e) {
                    if (a[e] == 0) continue;
                    for (std::size_t c = 0; c + e < len_; ++c) {
                        if (row.c1[c] != 0) s1[c + e] = (s1[c + e] + a[e] * row.c1[c]) % q_;
                        if (row.c2[c] != 0) s2[c + e] = (s2[c + e] + a[e] * row.c2[c]) % q_;
                    }
                }
                const Monomial term{da + row.lm.alpha, row.lm.pos};
                if (!next_any || compare_monomials(term, next_max, MonomialOrder::kTop) ==
                                     std::strong_ordering::greater)
                    next_max = term;
                next_any = true;
            }
            if (!descend(level + 1, next_max, next_any, visit)) return false;
        }
        return true;
    }

    std::int64_t q_;
    std::size_t len_ = 0;
    std::vector<std::vector<std::int64_t>> choices_;
    std::vector<RowArrays> rows_;
    std::vector<std::vector<std::int64_t>> sums1_, sums2_;
    std::vector<std::size_t> picked_;
};

inline bool scan_lm(const std::vector<std::int64_t>& s1, const std::vector<std::int64_t>& s2,
                    Monomial& out) {
    for (std::size_t i = s1.size(); i-- > 0;) {
        if (s2[i] != 0) {
            out = Monomial{static_cast<std::int64_t>(i), 2};
            return true;
        }
        if (s1[i] != 0) {
            out = Monomial{static_cast<std::int64_t>(i), 1};
            return true;
        }
    }
    return false;
}

} // namespace detail

/// Exhaustive p-PLM check: for every nonzero tuple of digit-coefficient
/// polynomials a_i with deg a_i <= degree_bound, the leading monomial of
/// sum a_i v_i must equal the maximal lm(a_i v_i). Cost is
/// p^((degree_bound+1) * #rows) combinations; keep the bound small.
inline bool check_p_plm(const PBasis& basis, std::int64_t degree_bound,
                        std::string* counterexample = nullptr) {
    if (basis.rows.empty()) return true;
    detail::DigitCombinationSweep sweep(basis, degree_bound);
    const bool ok = sweep.run([&](const std::vector<std::int64_t>& s1,
                                  const std::vector<std::int64_t>& s2, Monomial expected,
                                  bool any) {
        if (!any) return true; // the all-zero tuple
        Monomial got{0, 1};
        if (!detail::scan_lm(s1, s2, got)) return false; // combination collapsed to zero
        return got == expected;
    });
    if (!ok && counterexample) *counterexample = sweep.tuple_string(basis.modulus);
    return ok;
}

/// Rows arranged in minimal Gröbner p-basis order: decreasing leading
/// monomial, ties broken by decreasing scalar order of the leading
/// coefficient. This is the order in which a synthesis state's rows form a
/// p-generator sequence; equal lm forces equal lpos and hence distinct ord,
/// so the order is canonical.
inline PBasis p_basis_order(Modulus m, std::vector<PolyRowVec> rows) {
    std::sort(rows.begin(), rows.end(), [](const PolyRowVec& a, const PolyRowVec& b) {
        const LeadingData la = leading_data(a, MonomialOrder::kTop);
        const LeadingData lb = leading_data(b, MonomialOrder::kTop);
        const auto cmp = compare_monomials(la.lm, lb.lm, MonomialOrder::kTop);
        if (cmp != std::strong_ordering::equal) return cmp == std::strong_ordering::greater;
        return la.ord > lb.ord;
    });
    return PBasis{m, std::move(rows)};
}

/// Largest row-degree difference. check_p_generator_sequence needs its bound
/// at least this large to be a complete search: by the p-PLM property a
/// representation of p*v_i never needs coefficient degrees beyond
/// deg(p v_i) - deg v_j.
inline std::int64_t max_row_degree_spread(const std::vector<PolyRowVec>& rows) {
    std::int64_t lo = 0, hi = 0;
    bool first = true;
    for (const PolyRowVec& r : rows) {
        const std::int64_t d = row_degree(r);
        lo = first ? d : std::min(lo, d);
        hi = first ? d : std::max(hi, d);
        first = false;
    }
    return hi - lo;
}

/// Exhaustive p-generator-sequence check: p * v_N = 0 and each p * v_i lies
/// in the digit span of its successors, searched with coefficient degrees up
/// to degree_bound.
inline bool check_p_generator_sequence(const PBasis& basis, std::int64_t degree_bound) {
    const std::size_t n = basis.rows.size();
    if (n == 0) return true;
    const Residue p_scalar(basis.modulus.p(), basis.modulus);
    if (!(p_scalar * basis.rows[n - 1]).is_zero()) return false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const PolyRowVec target = p_scalar * basis.rows[i];
        PBasis tail{basis.modulus, {basis.rows.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                                    basis.rows.end()}};
        detail::DigitCombinationSweep sweep(tail, degree_bound);
        // no combination reaches coefficients beyond the sweep window
        if (target.g1.degree() >= static_cast<std::int64_t>(sweep.length()) ||
            target.g2.degree() >= static_cast<std::int64_t>(sweep.length()))
            return false;
        bool found = false;
        sweep.run([&](const std::vector<std::int64_t>& s1, const std::vector<std::int64_t>& s2,
                      Monomial, bool) {
            for (std::size_t c = 0; c < s1.size(); ++c) {
                if (s1[c] != target.g1.coeff_value(static_cast<std::int64_t>(c))) return true;
                if (s2[c] != target.g2.coeff_value(static_cast<std::int64_t>(c))) return true;
            }
            found = true;
            return false; // abort the sweep, witness found
        });
        if (!found) return false;
    }
    return true;
}

/// Expands a minimal Gröbner basis, ordered by strictly decreasing leading
/// monomial, into a minimal Gröbner p-basis
/// (g_1, p g_1, ..., p^{beta_1 - 1} g_1, g_2, ...).
inline PBasis p_expand(const std::vector<PolyRowVec>& grobner_rows, MonomialOrder order) {
    if (grobner_rows.empty()) throw std::invalid_argument("p_expand of an empty basis");
    const Modulus m = grobner_rows.front().modulus();
    std::vector<LeadingData> lead;
    for (const PolyRowVec& g : grobner_rows) lead.push_back(leading_data(g, order));
    for (std::size_t i = 0; i + 1 < grobner_rows.size(); ++i)
        if (compare_monomials(lead[i].lm, lead[i + 1].lm, order) !=
            std::strong_ordering::greater)
            throw std::invalid_argument(
                "p_expand input must be sorted by strictly decreasing leading monomial");

    PBasis out{m, {}};
    const Residue p_scalar(m.p(), m);
    for (std::size_t j = 0; j < grobner_rows.size(); ++j) {
        std::int64_t beta = lead[j].ord;
        for (std::size_t i = j + 1; i < grobner_rows.size(); ++i) {
            if (lead[i].lpos == lead[j].lpos) {
                beta = lead[j].ord - lead[i].ord;
                break;
            }
        }
        if (beta < 1)
            throw std::invalid_argument("p_expand input is not a minimal Groebner basis");
        PolyRowVec v = grobner_rows[j];
        for (std::int64_t t = 0; t < beta; ++t) {
            out.rows.push_back(v);
            v = p_scalar * v;
        }
    }
    return out;
}

} // namespace fsr
