#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "fsr/synth.hpp"

namespace fsr {

/// Coefficient domain of a parametrization: the whole field (field case) or
/// the digit set A_p (ring case).
enum class CoeffDomain { kFullField, kDigits };

/// One non-pivot row of the parametrization. The combination may use any
/// polynomial over `domain` of degree at most `degree_bound`; a bound of -1
/// means the row contributes only the zero coefficient.
struct FreeTerm {
    int row; // 1-based row index in the final R
    Poly poly;
    std::int64_t degree_bound;
    CoeffDomain domain;
};

/// All shortest solutions of one kind are a * pivot_poly + sum a_j * poly_j
/// with a a nonzero scalar from scalar_domain and each a_j ranging over its
/// free term.
struct ParamDescriptor {
    int pivot_row = 0;
    Poly pivot_poly;
    std::vector<FreeTerm> free_terms;
    CoeffDomain scalar_domain = CoeffDomain::kFullField;

    explicit ParamDescriptor(Modulus m) : pivot_poly(Poly::zero(m)) {}
};

/// Closed-form count of parameter tuples: |scalars| * prod |domain|^(bound+1),
/// saturating instead of overflowing.
inline std::int64_t count_parametrization(const ParamDescriptor& d) {
    const Modulus m = d.pivot_poly.modulus();
    const std::int64_t sat = std::numeric_limits<std::int64_t>::max() / 2;
    std::int64_t count = d.scalar_domain == CoeffDomain::kDigits ? m.p() - 1 : m.q() - 1;
    for (const FreeTerm& t : d.free_terms) {
        const std::int64_t base = t.domain == CoeffDomain::kDigits ? m.p() : m.q();
        for (std::int64_t e = 0; e <= t.degree_bound; ++e) {
            if (count > sat / base) return sat;
            count *= base;
        }
    }
    return count;
}

/// Everything read off the final R matrix: the complexity, a shortest
/// feedback polynomial and the parametrization of all of them, the reciprocal
/// sequence's minimal characteristic polynomial and parametrization, and
/// whether the two pivots coincide (so the feedback polynomial itself is
/// bidirectional).
struct SynthesisReport {
    Modulus modulus;
    SynthMode mode;
    std::int64_t complexity = 0;
    Poly feedback_poly;
    ParamDescriptor forward;
    std::int64_t reciprocal_complexity = 0;
    Poly min_char_poly;
    ParamDescriptor reciprocal;
    bool bidirectional_pivot = false;
    std::int64_t count_forward = 0;
    std::int64_t count_reciprocal = 0;

    explicit SynthesisReport(Modulus m, SynthMode mo)
        : modulus(m),
          mode(mo),
          feedback_poly(Poly::zero(m)),
          forward(m),
          min_char_poly(Poly::zero(m)),
          reciprocal(m) {}
};

namespace detail {

inline ParamDescriptor make_descriptor(const SynthState& st, int pivot, CoeffDomain domain) {
    ParamDescriptor d(st.modulus);
    d.pivot_row = pivot;
    d.pivot_poly = st.rows[static_cast<std::size_t>(pivot - 1)].g2;
    d.scalar_domain = domain;
    const std::int64_t bound_base = row_degree(st.rows[static_cast<std::size_t>(pivot - 1)]);
    for (int j = 1; j <= static_cast<int>(st.rows.size()); ++j) {
        if (j == pivot) continue;
        const std::int64_t dj = row_degree(st.rows[static_cast<std::size_t>(j - 1)]);
        const std::int64_t bound = bound_base - dj;
        d.free_terms.push_back(FreeTerm{j, st.rows[static_cast<std::size_t>(j - 1)].g2,
                                        bound < 0 ? -1 : bound, domain});
    }
    return d;
}

} // namespace detail

/// Reads the synthesis result off a completed Gröbner-mode state. The forward
/// pivot is row 2 (field) or row r+1 (ring); the reciprocal pivot j* is the
/// unique row of leading position 2 and order r.
inline SynthesisReport analyze(const SynthState& st, std::span<const Residue> s) {
    if (st.mode == SynthMode::kBmCompatField)
        throw std::invalid_argument(
            "analyze requires a Groebner synthesis mode; bm-compat rows carry no "
            "parametrization structure");
    if (static_cast<std::int64_t>(s.size()) != st.k)
        throw std::invalid_argument("analyze: state and sequence length disagree");
    const Modulus m = st.modulus;
    const std::int64_t r = st.mode == SynthMode::kGrobnerRing ? m.r() : 1;
    const CoeffDomain domain =
        st.mode == SynthMode::kGrobnerRing ? CoeffDomain::kDigits : CoeffDomain::kFullField;

    SynthesisReport rep(m, st.mode);
    const int pivot = static_cast<int>(r) + 1;
    rep.complexity = row_degree(st.rows[static_cast<std::size_t>(pivot - 1)]);
    rep.feedback_poly = st.rows[static_cast<std::size_t>(pivot - 1)].g2;
    rep.forward = detail::make_descriptor(st, pivot, domain);

    int jstar = 0;
    for (int j = 1; j <= static_cast<int>(st.rows.size()); ++j) {
        const LeadingData ld =
            leading_data(st.rows[static_cast<std::size_t>(j - 1)], MonomialOrder::kTop);
        if (ld.lpos == 2 && ld.ord == r) {
            if (jstar != 0) throw internal_error("reciprocal pivot j* is not unique");
            jstar = j;
        }
    }
    if (jstar == 0) throw internal_error("no row with leading position 2 and order r");
    rep.reciprocal_complexity = row_degree(st.rows[static_cast<std::size_t>(jstar - 1)]);
    rep.min_char_poly = st.rows[static_cast<std::size_t>(jstar - 1)].g2;
    rep.reciprocal = detail::make_descriptor(st, jstar, domain);
    rep.bidirectional_pivot = jstar == pivot;

    rep.count_forward = count_parametrization(rep.forward);
    rep.count_reciprocal = count_parametrization(rep.reciprocal);
    return rep;
}

/// An enumerated solution set: canonically ordered, deduplicated, with an
/// explicit flag when the cap cut the raw enumeration short.
struct Enumeration {
    std::vector<Poly> polys;
    bool truncated = false;
};

namespace detail {

/// Walks every parameter tuple of a descriptor in lexicographic order
/// (scalar outermost, then each free coefficient, constant first) and hands
/// the combined second component to the sink. Stops after `cap` tuples.
template <typename Sink>
inline bool enumerate_descriptor(const ParamDescriptor& d, std::int64_t cap, Sink&& sink) {
    const Modulus m = d.pivot_poly.modulus();
    const std::int64_t scalar_hi = d.scalar_domain == CoeffDomain::kDigits ? m.p() : m.q();

    struct Slot {
        const FreeTerm* term;
        std::vector<std::int64_t> digits; // coefficient values, constant first
    };
    std::vector<Slot> slots;
    for (const FreeTerm& t : d.free_terms)
        if (t.degree_bound >= 0)
            slots.push_back(Slot{&t, std::vector<std::int64_t>(
                                         static_cast<std::size_t>(t.degree_bound) + 1, 0)});

    std::int64_t emitted = 0;
    for (std::int64_t a = 1; a < scalar_hi; ++a) {
        for (Slot& s : slots) std::fill(s.digits.begin(), s.digits.end(), 0);
        while (true) {
            if (emitted == cap) return true; // truncated
            Poly acc = Residue(a, m) * d.pivot_poly;
            for (const Slot& s : slots) {
                Poly coeff = Poly::from_coeffs(m, s.digits);
                if (!coeff.is_zero()) acc = acc + coeff * s.term->poly;
            }
            sink(std::move(acc));
            ++emitted;

            // odometer over the free coefficients, last slot fastest
            bool carried = false;
            for (std::size_t si = slots.size(); si-- > 0 && !carried;) {
                Slot& s = slots[si];
                const std::int64_t base =
                    s.term->domain == CoeffDomain::kDigits ? m.p() : m.q();
                for (std::size_t di = s.digits.size(); di-- > 0;) {
                    if (++s.digits[di] < base) {
                        carried = true;
                        break;
                    }
                    s.digits[di] = 0;
                }
            }
            if (!carried) break;
        }
    }
    return false;
}

} // namespace detail

/// Every shortest feedback polynomial, optionally normalized to constant
/// term 1. The enumerated constant terms are always units.
inline Enumeration enumerate_shortest_feedback(const SynthesisReport& rep, bool normalized,
                                               std::int64_t cap = 1'000'000) {
    Enumeration out;
    out.truncated = detail::enumerate_descriptor(rep.forward, cap, [&](Poly lambda) {
        if (normalized) {
            if (!lambda.constant_term().is_unit())
                throw internal_error("enumerated feedback polynomial has non-unit constant term");
            lambda = inverse(lambda.constant_term()) * lambda;
        }
        out.polys.push_back(std::move(lambda));
    });
    sort_unique_canonical(out.polys);
    return out;
}

/// Every minimal characteristic polynomial of the reciprocal sequence,
/// optionally scaled monic. The enumerated leading coefficients are always
/// units.
inline Enumeration enumerate_min_char_reciprocal(const SynthesisReport& rep, bool monic,
                                                 std::int64_t cap = 1'000'000) {
    Enumeration out;
    out.truncated = detail::enumerate_descriptor(rep.reciprocal, cap, [&](Poly d) {
        if (monic) {
            if (!d.leading_coeff().is_unit())
                throw internal_error(
                    "enumerated characteristic polynomial has non-unit leading coefficient");
            d = inverse(d.leading_coeff()) * d;
        }
        out.polys.push_back(std::move(d));
    });
    sort_unique_canonical(out.polys);
    return out;
}

/// Keeps the characteristic polynomials whose constant term is a unit, i.e.
/// those that double as feedback polynomials of the forward sequence.
inline std::vector<Poly> bidirectional_filter(const std::vector<Poly>& polys) {
    std::vector<Poly> out;
    for (const Poly& p : polys)
        if (p.constant_term().is_unit()) out.push_back(p);
    return out;
}

/// L_1..L_N: the complexity of each prefix, read from the pivot row degree of
/// the intermediate states.
inline std::vector<std::int64_t> complexity_profile(std::span<const Residue> s, Modulus m,
                                                    SynthMode mode) {
    SynthState st = init(m, mode);
    const std::size_t pivot = mode == SynthMode::kGrobnerRing
                                  ? static_cast<std::size_t>(m.r())
                                  : std::size_t{1}; // 0-based pivot row
    std::vector<std::int64_t> profile;
    profile.reserve(s.size());
    for (std::size_t k = 1; k <= s.size(); ++k) {
        step(st, s.subspan(0, k));
        profile.push_back(row_degree(st.rows[pivot]));
    }
    return profile;
}

} // namespace fsr
