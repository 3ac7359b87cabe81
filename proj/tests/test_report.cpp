#include <doctest.h>

#include <functional>

#include "fsr/report.hpp"

using namespace fsr;

namespace {
const Modulus z9(3, 2);
const Modulus z5(5, 1);
} // namespace

TEST_CASE("synthesis document carries the stable schema") {
    const Sequence s = make_sequence(z9, {6, 3, 1, 5, 6});
    const SynthesisRun run = synthesize(s, z9, SynthMode::kGrobnerRing);
    DocumentOptions opts;
    opts.parametrize = true;
    opts.reciprocal = true;
    opts.profile = true;
    opts.trace = true;
    opts.normalization = Normalization::kNormalized;

    const Json doc = build_synth_document(run, s, opts);
    CHECK(doc["modulus"]["p"] == 3);
    CHECK(doc["modulus"]["r"] == 2);
    CHECK(doc["mode"] == "ring");
    CHECK(doc["complexity"] == 3);
    CHECK(doc["feedback_poly"]["str"] == "7x^2+x+1");
    CHECK(doc["parametrization"]["pivot"] == 3);
    CHECK(doc["parametrization"]["count"] == 54);
    CHECK(doc["parametrization"]["enumeration"].size() == 9);
    CHECK(doc["reciprocal"]["complexity"] == 3);
    CHECK(doc["reciprocal"]["min_char_poly"]["str"] == "x^3+3x");
    CHECK(doc["reciprocal"]["bidirectional_pivot"] == false);
    CHECK(doc["profile"].size() == 5);
    CHECK(doc["trace"].size() == 5);
    CHECK(doc["trace"][0]["delta"] == Json::array({1, 3, 6, 0}));
    CHECK(doc["trace"][0]["pivots"] == Json::array({1, 3}));
    CHECK(doc["trace"][0]["partitions"]["P0"] == Json::array({4}));
    CHECK(doc["trace"][0]["partitions"]["P2"] == Json::array({2, 3}));
    CHECK(doc["version"].is_string());
}

TEST_CASE("documents are byte-stable across runs") {
    const Sequence s = make_sequence(z9, {6, 3, 1, 5, 6});
    DocumentOptions opts;
    opts.parametrize = true;
    opts.reciprocal = true;
    opts.trace = true;
    opts.normalization = Normalization::kMonic;

    const SynthesisRun run1 = synthesize(s, z9, SynthMode::kGrobnerRing);
    const SynthesisRun run2 = synthesize(s, z9, SynthMode::kGrobnerRing);
    CHECK(build_synth_document(run1, s, opts).dump(2) ==
          build_synth_document(run2, s, opts).dump(2));
}

TEST_CASE("every polynomial string in a document parses back") {
    const Sequence s = make_sequence(z9, {6, 3, 1, 5, 6});
    const SynthesisRun run = synthesize(s, z9, SynthMode::kGrobnerRing);
    DocumentOptions opts;
    opts.parametrize = true;
    opts.reciprocal = true;
    opts.trace = true;

    std::size_t seen = 0;
    const std::function<void(const Json&)> walk = [&](const Json& node) {
        if (node.is_object() && node.contains("coeffs") && node.contains("str")) {
            const Poly parsed = Poly::parse(z9, node["str"].get<std::string>());
            std::vector<std::int64_t> coeffs;
            for (std::int64_t i = 0; i <= parsed.degree(); ++i)
                coeffs.push_back(parsed.coeff_value(i));
            CHECK(Json(coeffs) == node["coeffs"]);
            ++seen;
            return;
        }
        if (node.is_structured())
            for (const auto& child : node) walk(child);
    };
    walk(build_synth_document(run, s, opts));
    CHECK(seen > 20);
}

TEST_CASE("bm-compat documents report the classic outputs only") {
    const Sequence s = make_sequence(z5, {4, 0, 4, 4, 2});
    const SynthesisRun run = synthesize(s, z5, SynthMode::kBmCompatField);
    DocumentOptions opts;
    opts.parametrize = true; // ignored in bm-compat mode
    const Json doc = build_synth_document(run, s, opts);
    CHECK(doc["mode"] == "bm-compat");
    CHECK(doc["complexity"] == 3);
    CHECK(doc["feedback_poly"]["str"] == "x^3+4x^2+3x+1");
    CHECK_FALSE(doc.contains("parametrization"));
}

TEST_CASE("oracle comparison accepts the engine and flags corruption") {
    const Sequence s = make_sequence(z9, {6, 3, 1, 5, 6});
    const SynthesisRun run = synthesize(s, z9, SynthMode::kGrobnerRing, false);
    SynthesisReport rep = analyze(run.state, s);
    CHECK(compare_with_oracle(rep, s).ok);

    SynthesisReport corrupted = rep;
    corrupted.complexity += 1;
    const OracleCheckOutcome bad = compare_with_oracle(corrupted, s);
    CHECK_FALSE(bad.ok);
    CHECK_FALSE(bad.detail.empty());

    SynthesisReport wrong_set = rep;
    wrong_set.forward.pivot_poly = wrong_set.forward.pivot_poly + Poly::parse(z9, "x");
    CHECK_FALSE(compare_with_oracle(wrong_set, s).ok);
}
