#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "fsr/oracle.hpp"
#include "fsr/param.hpp"
#include "fsr/synth.hpp"

namespace fsr {

inline constexpr const char* kToolName = "fsrsynth";
inline constexpr const char* kToolVersion = "1.0.0";

enum class Normalization { kRaw, kNormalized, kMonic };

inline std::string to_string(Normalization n) {
    switch (n) {
        case Normalization::kRaw: return "raw";
        case Normalization::kNormalized: return "normalized";
        case Normalization::kMonic: return "monic";
    }
    return "?";
}

/// Which optional blocks the document carries.
struct DocumentOptions {
    bool parametrize = false;
    bool reciprocal = false;
    bool profile = false;
    bool trace = false;
    Normalization normalization = Normalization::kRaw;
    std::int64_t cap = 1'000'000;
};

using Json = nlohmann::ordered_json;

inline Json poly_json(const Poly& p) {
    Json j;
    std::vector<std::int64_t> coeffs;
    for (std::int64_t i = 0; i <= p.degree(); ++i) coeffs.push_back(p.coeff_value(i));
    j["coeffs"] = coeffs;
    j["str"] = p.to_string();
    return j;
}

inline Json poly_list_json(const std::vector<Poly>& polys) {
    Json arr = Json::array();
    for (const Poly& p : polys) arr.push_back(poly_json(p));
    return arr;
}

inline Json descriptor_json(const ParamDescriptor& d) {
    Json j;
    j["pivot"] = d.pivot_row;
    j["pivot_poly"] = poly_json(d.pivot_poly);
    Json terms = Json::array();
    for (const FreeTerm& t : d.free_terms) {
        Json tj;
        tj["row"] = t.row;
        tj["poly"] = poly_json(t.poly);
        tj["degree_bound"] = t.degree_bound;
        terms.push_back(std::move(tj));
    }
    j["terms"] = std::move(terms);
    j["count"] = count_parametrization(d);
    return j;
}

inline Json trace_json(const std::vector<StepTrace>& traces) {
    Json arr = Json::array();
    for (const StepTrace& tr : traces) {
        Json j;
        j["k"] = tr.k;
        std::vector<std::int64_t> delta;
        for (const Residue& d : tr.delta) delta.push_back(d.value());
        j["delta"] = delta;
        Json parts;
        for (std::size_t i = 0; i < tr.partitions.size(); ++i)
            parts["P" + std::to_string(i)] = tr.partitions[i];
        j["partitions"] = std::move(parts);
        j["pivots"] = tr.pivots;
        Json e = Json::array();
        for (const auto& row : tr.update) {
            Json erow = Json::array();
            for (const Poly& entry : row) erow.push_back(poly_json(entry));
            e.push_back(std::move(erow));
        }
        j["E"] = std::move(e);
        arr.push_back(std::move(j));
    }
    return arr;
}

/// The machine-readable synthesis document. Deterministic for a fixed
/// configuration: fixed key order, no timestamps, tool version under its own
/// key. Returns true in `truncated_out` when an enumeration hit the cap.
inline Json build_synth_document(const SynthesisRun& run, std::span<const Residue> s,
                                 const DocumentOptions& opts, bool* truncated_out = nullptr) {
    const Modulus m = run.state.modulus;
    bool truncated = false;
    Json doc;
    doc["tool"] = kToolName;
    doc["version"] = kToolVersion;
    doc["modulus"] = Json{{"p", m.p()}, {"r", m.r()}};
    doc["mode"] = to_string(run.state.mode);
    std::vector<std::int64_t> seq;
    for (const Residue& v : s) seq.push_back(v.value());
    doc["sequence"] = seq;
    doc["normalization"] = to_string(opts.normalization);

    if (run.state.mode == SynthMode::kBmCompatField) {
        // The bm-compat rows need not form a minimal Gröbner basis, so no
        // parametrization is read off them; report the classic outputs only.
        const PolyRowVec& pivot = run.state.rows[1];
        doc["complexity"] = row_degree(pivot);
        doc["feedback_poly"] = poly_json(pivot.g2);
    } else {
        const SynthesisReport rep = analyze(run.state, s);
        doc["complexity"] = rep.complexity;
        Poly feedback = rep.feedback_poly;
        if (opts.normalization == Normalization::kNormalized)
            feedback = inverse(feedback.constant_term()) * feedback;
        doc["feedback_poly"] = poly_json(feedback);
        if (opts.parametrize) {
            Json pj = descriptor_json(rep.forward);
            const Enumeration en = enumerate_shortest_feedback(
                rep, opts.normalization == Normalization::kNormalized, opts.cap);
            pj["enumeration"] = poly_list_json(en.polys);
            pj["truncated"] = en.truncated;
            truncated = truncated || en.truncated;
            doc["parametrization"] = std::move(pj);
        }
        if (opts.reciprocal) {
            Json rj;
            rj["complexity"] = rep.reciprocal_complexity;
            Poly min_char = rep.min_char_poly;
            if (opts.normalization == Normalization::kMonic)
                min_char = inverse(min_char.leading_coeff()) * min_char;
            rj["min_char_poly"] = poly_json(min_char);
            rj["parametrization"] = descriptor_json(rep.reciprocal);
            rj["bidirectional_pivot"] = rep.bidirectional_pivot;
            const Enumeration en = enumerate_min_char_reciprocal(
                rep, opts.normalization == Normalization::kMonic, opts.cap);
            rj["enumeration"] = poly_list_json(en.polys);
            rj["bidirectional"] = poly_list_json(bidirectional_filter(en.polys));
            rj["truncated"] = en.truncated;
            truncated = truncated || en.truncated;
            doc["reciprocal"] = std::move(rj);
        }
    }
    if (opts.profile)
        doc["profile"] = complexity_profile(s, m, run.state.mode);
    if (opts.trace)
        doc["trace"] = trace_json(run.traces);
    if (truncated_out) *truncated_out = truncated;
    return doc;
}

/// Engine-versus-oracle comparison used by the oracle-check command.
struct OracleCheckOutcome {
    bool ok = true;
    std::string detail;
};

inline OracleCheckOutcome compare_with_oracle(const SynthesisReport& rep,
                                              std::span<const Residue> s,
                                              std::int64_t budget = 50'000'000) {
    OracleCheckOutcome out;
    const OracleResult fwd = oracle_shortest_feedback(s, rep.modulus, true, budget);
    if (fwd.complexity != rep.complexity) {
        out.ok = false;
        out.detail += "complexity: engine " + std::to_string(rep.complexity) + ", oracle " +
                      std::to_string(fwd.complexity) + "\n";
        return out;
    }
    const Enumeration efwd = enumerate_shortest_feedback(rep, true);
    if (efwd.polys != fwd.solutions) {
        out.ok = false;
        out.detail += "forward solution sets differ (engine " +
                      std::to_string(efwd.polys.size()) + ", oracle " +
                      std::to_string(fwd.solutions.size()) + ")\n";
    }
    const Sequence rev(s.rbegin(), s.rend());
    const OracleResult rec = oracle_min_char(rev, rep.modulus, true, budget);
    if (rec.complexity != rep.reciprocal_complexity) {
        out.ok = false;
        out.detail += "reciprocal complexity: engine " +
                      std::to_string(rep.reciprocal_complexity) + ", oracle " +
                      std::to_string(rec.complexity) + "\n";
        return out;
    }
    const Enumeration erec = enumerate_min_char_reciprocal(rep, true);
    if (erec.polys != rec.solutions) {
        out.ok = false;
        out.detail += "reciprocal solution sets differ (engine " +
                      std::to_string(erec.polys.size()) + ", oracle " +
                      std::to_string(rec.solutions.size()) + ")\n";
    }
    return out;
}

} // namespace fsr
