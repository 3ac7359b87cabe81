#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fsr/ring.hpp"
#include "fsr/rowvec.hpp"

namespace fsr {

/// Which update rule drives the iteration. The Gröbner modes keep the rows a
/// minimal Gröbner basis (field) or a p-basis with the p-PLM property (ring)
/// at every step; the BM-compatible mode reproduces the classic
/// Berlekamp-Massey pivot rule, which tracks degrees only.
enum class SynthMode { kGrobnerField, kGrobnerRing, kBmCompatField };

inline std::string to_string(SynthMode mode) {
    switch (mode) {
        case SynthMode::kGrobnerField: return "field";
        case SynthMode::kGrobnerRing: return "ring";
        case SynthMode::kBmCompatField: return "bm-compat";
    }
    return "?";
}

/// Per-step diagnostics. Row indices are 1-based throughout, matching the
/// conventional presentation of the update matrices.
struct StepTrace {
    std::int64_t k = 0;
    std::vector<Residue> delta;               // discrepancy per row
    std::vector<std::vector<int>> partitions; // [0] = P_0 (zeros), [j] = P_j
    std::vector<int> pivots;                  // field: {i*}; ring: {i*_1..i*_r}
    std::vector<std::vector<Poly>> update;    // the update matrix E^k
};

/// The evolving row stack R^k: 2 rows in the field modes, 2r rows in ring
/// mode. A value type; copy freely.
struct SynthState {
    Modulus modulus;
    SynthMode mode;
    std::int64_t k = 0;
    std::vector<PolyRowVec> rows;
};

inline SynthState init(Modulus m, SynthMode mode) {
    if (mode != SynthMode::kGrobnerRing && !m.is_field())
        throw std::invalid_argument("field synthesis modes require r = 1");
    SynthState st{m, mode, 0, {}};
    const std::int64_t r = mode == SynthMode::kGrobnerRing ? m.r() : 1;
    std::int64_t pw = 1;
    for (std::int64_t j = 0; j < r; ++j) {
        st.rows.push_back({Poly::monomial(m, pw, 1), Poly::zero(m)});
        pw *= m.p();
    }
    pw = 1;
    for (std::int64_t j = 0; j < r; ++j) {
        st.rows.push_back({Poly::zero(m), Poly::monomial(m, pw, 0)});
        pw *= m.p();
    }
    return st;
}

namespace detail {

inline Poly x_over(const Residue& unit) {
    // x / theta: multiply by the inverse and shift by x
    return Poly::monomial(unit.modulus(), inverse(unit).value(), 1);
}

inline std::vector<std::vector<Poly>> zero_update(const Modulus& m, std::size_t n) {
    return std::vector<std::vector<Poly>>(n, std::vector<Poly>(n, Poly::zero(m)));
}

} // namespace detail

/// Processes S_k. `prefix` must be S_1..S_k with k = state.k + 1. Returns the
/// full step trace; the state advances to R^k.
inline StepTrace step(SynthState& st, std::span<const Residue> prefix) {
    const std::int64_t k = st.k + 1;
    if (static_cast<std::int64_t>(prefix.size()) != k)
        throw std::invalid_argument("step expects the prefix S_1..S_k of the current step");
    const Modulus m = st.modulus;
    const int n = static_cast<int>(st.rows.size());

    StepTrace tr;
    tr.k = k;
    tr.delta.reserve(static_cast<std::size_t>(n));
    for (const PolyRowVec& row : st.rows) tr.delta.push_back(discrepancy(row, prefix, k));

    std::vector<PolyRowVec> next(st.rows);
    tr.update = detail::zero_update(m, static_cast<std::size_t>(n));

    if (st.mode == SynthMode::kGrobnerRing) {
        const std::int64_t r = m.r();
        // Partition rows by the level of their discrepancy. Rows 1..r must
        // land in their own partition with unit part 1.
        std::vector<int> level(static_cast<std::size_t>(n), 0);
        std::vector<Residue> theta(static_cast<std::size_t>(n), Residue(0, m));
        tr.partitions.assign(static_cast<std::size_t>(r) + 1, {});
        for (int i = 0; i < n; ++i) {
            if (tr.delta[static_cast<std::size_t>(i)].is_zero()) {
                tr.partitions[0].push_back(i + 1);
            } else {
                const UnitPower up = unit_decompose(tr.delta[static_cast<std::size_t>(i)]);
                level[static_cast<std::size_t>(i)] = static_cast<int>(up.level);
                theta[static_cast<std::size_t>(i)] = up.theta;
                tr.partitions[static_cast<std::size_t>(up.level)].push_back(i + 1);
            }
        }
        std::int64_t pw = 1;
        for (std::int64_t j = 1; j <= r; ++j) {
            if (tr.delta[static_cast<std::size_t>(j - 1)].value() != pw)
                throw internal_error("ring step " + std::to_string(k) + ": delta_" +
                                     std::to_string(j) + " != p^(j-1)");
            pw *= m.p();
        }
        for (std::int64_t j = 1; j <= r; ++j) {
            const auto& part = tr.partitions[static_cast<std::size_t>(j)];
            // j is in P_j by the invariant just checked
            // Largest index among the rows of minimal leading monomial;
            // partitions hold ascending indices, so <= keeps the latest.
            int istar = 0;
            Monomial best{0, 1};
            for (int i : part) {
                const Monomial lm = leading_data(st.rows[static_cast<std::size_t>(i - 1)],
                                                 MonomialOrder::kTop)
                                        .lm;
                if (istar == 0 || compare_monomials(lm, best, MonomialOrder::kTop) !=
                                      std::strong_ordering::greater) {
                    best = lm;
                    istar = i;
                }
            }
            if (istar == 0) throw internal_error("empty partition P_" + std::to_string(j));
            tr.pivots.push_back(istar);

            const Residue th_star = theta[static_cast<std::size_t>(istar - 1)];
            next[static_cast<std::size_t>(j - 1)] =
                st.rows[static_cast<std::size_t>(istar - 1)].shifted(1);
            next[static_cast<std::size_t>(j - 1)] =
                inverse(th_star) * next[static_cast<std::size_t>(j - 1)];
            tr.update[static_cast<std::size_t>(j - 1)] =
                std::vector<Poly>(static_cast<std::size_t>(n), Poly::zero(m));
            tr.update[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(istar - 1)] =
                detail::x_over(th_star);

            if (istar != j) {
                const Residue th_j = theta[static_cast<std::size_t>(j - 1)];
                next[static_cast<std::size_t>(istar - 1)] =
                    (-th_star) * st.rows[static_cast<std::size_t>(j - 1)] +
                    th_j * st.rows[static_cast<std::size_t>(istar - 1)];
                auto& erow = tr.update[static_cast<std::size_t>(istar - 1)];
                erow.assign(static_cast<std::size_t>(n), Poly::zero(m));
                erow[static_cast<std::size_t>(j - 1)] = Poly::constant(-th_star);
                erow[static_cast<std::size_t>(istar - 1)] = Poly::constant(th_j);
            }
            for (int i : part) {
                if (i == static_cast<int>(j) || i == istar) continue;
                const Residue th_i = theta[static_cast<std::size_t>(i - 1)];
                next[static_cast<std::size_t>(i - 1)] =
                    (-th_i) * st.rows[static_cast<std::size_t>(istar - 1)] +
                    th_star * st.rows[static_cast<std::size_t>(i - 1)];
                auto& erow = tr.update[static_cast<std::size_t>(i - 1)];
                erow.assign(static_cast<std::size_t>(n), Poly::zero(m));
                erow[static_cast<std::size_t>(istar - 1)] = Poly::constant(-th_i);
                erow[static_cast<std::size_t>(i - 1)] = Poly::constant(th_star);
            }
        }
        // P_0 rows stay; their identity entries:
        for (int i : tr.partitions[0])
            tr.update[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i - 1)] =
                Poly::monomial(m, 1, 0);
    } else {
        if (tr.delta[0].value() != 1)
            throw internal_error("field step " + std::to_string(k) + ": delta_1 != 1");
        std::vector<int> pset;
        tr.partitions.assign(2, {});
        for (int i = 0; i < n; ++i) {
            if (tr.delta[static_cast<std::size_t>(i)].is_zero())
                tr.partitions[0].push_back(i + 1);
            else {
                tr.partitions[1].push_back(i + 1);
                pset.push_back(i + 1);
            }
        }
        int istar = 0;
        if (st.mode == SynthMode::kBmCompatField) {
            // Classic rule: largest index among the minimal-degree rows of P.
            std::int64_t best = -1;
            for (int i : pset) {
                const std::int64_t d = row_degree(st.rows[static_cast<std::size_t>(i - 1)]);
                if (istar == 0 || d <= best) {
                    best = d;
                    istar = i;
                }
            }
        } else {
            Monomial best{0, 1};
            for (int i : pset) {
                const Monomial lm = leading_data(st.rows[static_cast<std::size_t>(i - 1)],
                                                 MonomialOrder::kTop)
                                        .lm;
                if (istar == 0 || compare_monomials(lm, best, MonomialOrder::kTop) ==
                                      std::strong_ordering::less) {
                    best = lm;
                    istar = i;
                }
            }
        }
        if (istar == 0) throw internal_error("empty pivot set in field step");
        tr.pivots.push_back(istar);

        const Residue dstar = tr.delta[static_cast<std::size_t>(istar - 1)];
        next[0] = inverse(dstar) * st.rows[static_cast<std::size_t>(istar - 1)].shifted(1);
        next[1] = (-tr.delta[1]) * st.rows[0] + tr.delta[0] * st.rows[1];
        tr.update[0].assign(2, Poly::zero(m));
        tr.update[0][static_cast<std::size_t>(istar - 1)] = detail::x_over(dstar);
        tr.update[1] = {Poly::constant(-tr.delta[1]), Poly::constant(tr.delta[0])};
    }

    for (const PolyRowVec& row : next)
        if (row.is_zero()) throw internal_error("update produced a zero basis row");

    st.rows = std::move(next);
    st.k = k;
    return tr;
}

struct SynthesisRun {
    SynthState state;
    std::vector<StepTrace> traces;
};

/// Folds step over the whole sequence. Traces are retained unless disabled.
inline SynthesisRun synthesize(std::span<const Residue> s, Modulus m, SynthMode mode,
                               bool keep_traces = true) {
    SynthesisRun run{init(m, mode), {}};
    for (std::size_t k = 1; k <= s.size(); ++k) {
        StepTrace tr = step(run.state, s.subspan(0, k));
        if (keep_traces) run.traces.push_back(std::move(tr));
    }
    return run;
}

/// Applies an update matrix to a row stack; used to cross-check the
/// materialized E^k against the direct row updates.
inline std::vector<PolyRowVec> apply_update(const std::vector<std::vector<Poly>>& e,
                                            const std::vector<PolyRowVec>& rows) {
    std::vector<PolyRowVec> out;
    out.reserve(e.size());
    for (const auto& erow : e) {
        PolyRowVec acc = zero_row(rows.front().modulus());
        for (std::size_t j = 0; j < erow.size(); ++j)
            acc = acc + PolyRowVec{erow[j] * rows[j].g1, erow[j] * rows[j].g2};
        out.push_back(std::move(acc));
    }
    return out;
}

} // namespace fsr
