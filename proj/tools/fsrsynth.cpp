// fsrsynth: shortest feedback shift register synthesis over Z_p and Z_{p^r},
// with parametrization of all shortest solutions, reciprocal-sequence
// analysis, per-prefix complexity profiles, step traces, and a brute-force
// cross-check.
//
// Exit codes: 0 success; 1 oracle mismatch; 2 configuration error;
// 3 cap truncation in strict mode or an infeasible brute-force size.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fsr/report.hpp"

namespace {

struct RunConfig {
    std::int64_t p = 2;
    std::int64_t r = 1;
    std::string mode = "auto";
    std::string seq_text;
    std::string seq_file;
    std::string format = "text";
    bool normalized = false;
    bool monic = false;
    bool strict = false;
    std::int64_t cap = 1'000'000;
    bool with_trace = false;
    bool with_parametrize = false;
    bool with_reciprocal = false;
    bool with_profile = false;
    bool with_oracle_check = false;
    bool self_test_corrupt = false;
};

std::vector<std::int64_t> parse_integers(const std::string& text) {
    std::vector<std::int64_t> out;
    std::string piece;
    std::istringstream in(text);
    // commas and whitespace both separate
    std::string normalized;
    for (char c : text) normalized += c == ',' ? ' ' : c;
    std::istringstream tokens(normalized);
    std::int64_t v = 0;
    while (tokens >> v) out.push_back(v);
    if (!tokens.eof()) throw std::invalid_argument("sequence contains a non-integer token");
    return out;
}

std::vector<std::int64_t> read_sequence(const RunConfig& cfg) {
    if (!cfg.seq_file.empty()) {
        std::ifstream in(cfg.seq_file);
        if (!in) throw std::invalid_argument("cannot open sequence file " + cfg.seq_file);
        std::stringstream buf;
        buf << in.rdbuf();
        return parse_integers(buf.str());
    }
    return parse_integers(cfg.seq_text);
}

fsr::SynthMode resolve_mode(const RunConfig& cfg, const fsr::Modulus& m) {
    if (cfg.mode == "auto")
        return m.is_field() ? fsr::SynthMode::kGrobnerField : fsr::SynthMode::kGrobnerRing;
    if (cfg.mode == "field") return fsr::SynthMode::kGrobnerField;
    if (cfg.mode == "ring") return fsr::SynthMode::kGrobnerRing;
    if (cfg.mode == "bm-compat") return fsr::SynthMode::kBmCompatField;
    throw std::invalid_argument("unknown mode " + cfg.mode);
}

fsr::Normalization resolve_normalization(const RunConfig& cfg) {
    if (cfg.normalized && cfg.monic)
        throw std::invalid_argument("--normalized and --monic are mutually exclusive");
    if (cfg.normalized) return fsr::Normalization::kNormalized;
    if (cfg.monic) return fsr::Normalization::kMonic;
    return fsr::Normalization::kRaw;
}

void print_text_document(const fsr::Json& doc, std::ostream& os) {
    os << "modulus: Z_" << doc["modulus"]["p"].get<std::int64_t>();
    if (doc["modulus"]["r"].get<std::int64_t>() > 1)
        os << "^" << doc["modulus"]["r"].get<std::int64_t>();
    os << " (p=" << doc["modulus"]["p"].get<std::int64_t>()
       << ", r=" << doc["modulus"]["r"].get<std::int64_t>() << ")\n";
    os << "mode: " << doc["mode"].get<std::string>() << "\n";
    os << "sequence:";
    for (const auto& v : doc["sequence"]) os << " " << v.get<std::int64_t>();
    os << "\n";
    if (doc.contains("reduced_input") && doc["reduced_input"].get<bool>())
        os << "note: input values were reduced into [0, p^r)\n";
    os << "complexity: " << doc["complexity"].get<std::int64_t>() << "\n";
    os << "feedback polynomial: " << doc["feedback_poly"]["str"].get<std::string>() << "\n";
    if (doc.contains("parametrization")) {
        const auto& pj = doc["parametrization"];
        os << "parametrization: pivot row " << pj["pivot"].get<int>() << ", "
           << pj["count"].get<std::int64_t>() << " raw combinations\n";
        for (const auto& t : pj["terms"])
            os << "  row " << t["row"].get<int>() << ": " << t["poly"]["str"].get<std::string>()
               << "  (degree bound " << t["degree_bound"].get<std::int64_t>() << ")\n";
        os << "solutions (" << pj["enumeration"].size() << "):\n";
        for (const auto& sol : pj["enumeration"])
            os << "  " << sol["str"].get<std::string>() << "\n";
        if (pj["truncated"].get<bool>()) os << "  ... truncated at cap\n";
    }
    if (doc.contains("reciprocal")) {
        const auto& rj = doc["reciprocal"];
        os << "reciprocal complexity: " << rj["complexity"].get<std::int64_t>() << "\n";
        os << "minimal characteristic polynomial: "
           << rj["min_char_poly"]["str"].get<std::string>() << "\n";
        os << "bidirectional pivot: " << (rj["bidirectional_pivot"].get<bool>() ? "yes" : "no")
           << "\n";
        os << "reciprocal solutions (" << rj["enumeration"].size() << "):\n";
        for (const auto& sol : rj["enumeration"])
            os << "  " << sol["str"].get<std::string>() << "\n";
        os << "bidirectional among them (" << rj["bidirectional"].size() << "):\n";
        for (const auto& sol : rj["bidirectional"])
            os << "  " << sol["str"].get<std::string>() << "\n";
    }
    if (doc.contains("profile")) {
        os << "complexity profile:";
        for (const auto& v : doc["profile"]) os << " " << v.get<std::int64_t>();
        os << "\n";
    }
    if (doc.contains("trace")) {
        for (const auto& tj : doc["trace"]) {
            os << "step " << tj["k"].get<std::int64_t>() << ": delta = [";
            bool first = true;
            for (const auto& d : tj["delta"]) {
                if (!first) os << " ";
                os << d.get<std::int64_t>();
                first = false;
            }
            os << "], pivots = [";
            first = true;
            for (const auto& pv : tj["pivots"]) {
                if (!first) os << " ";
                os << pv.get<int>();
                first = false;
            }
            os << "], partitions:";
            for (const auto& [key, part] : tj["partitions"].items()) {
                os << " " << key << "={";
                bool f2 = true;
                for (const auto& idx : part) {
                    if (!f2) os << ",";
                    os << idx.get<int>();
                    f2 = false;
                }
                os << "}";
            }
            os << "\n";
            os << "  E = [";
            for (const auto& erow : tj["E"]) {
                os << " [";
                bool f3 = true;
                for (const auto& entry : erow) {
                    if (!f3) os << ", ";
                    os << entry["str"].get<std::string>();
                    f3 = false;
                }
                os << "]";
            }
            os << " ]\n";
        }
    }
}

int run_document_command(const RunConfig& cfg, const fsr::DocumentOptions& opts) {
    const fsr::Modulus m(cfg.p, cfg.r);
    const std::vector<std::int64_t> raw = read_sequence(cfg);
    bool reduced = false;
    for (std::int64_t v : raw)
        if (v < 0 || v >= m.q()) reduced = true;
    const fsr::Sequence s = fsr::make_sequence(m, raw);
    const fsr::SynthMode mode = resolve_mode(cfg, m);

    const fsr::SynthesisRun run = fsr::synthesize(s, m, mode, opts.trace);
    bool truncated = false;
    fsr::Json doc = fsr::build_synth_document(run, s, opts, &truncated);
    doc["reduced_input"] = reduced;

    if (cfg.with_oracle_check || cfg.self_test_corrupt) {
        if (mode == fsr::SynthMode::kBmCompatField)
            throw std::invalid_argument("oracle-check requires a Groebner mode");
        fsr::SynthesisReport rep = fsr::analyze(run.state, s);
        if (cfg.self_test_corrupt) {
            // test fixture: misreport the complexity to exercise the mismatch path
            rep.complexity += 1;
        }
        const fsr::OracleCheckOutcome outcome = fsr::compare_with_oracle(rep, s);
        doc["oracle_check"] = outcome.ok ? "ok" : "mismatch";
        if (!outcome.ok) {
            std::cerr << "oracle mismatch:\n" << outcome.detail;
            if (cfg.format == "json")
                std::cout << doc.dump(2) << "\n";
            else
                print_text_document(doc, std::cout);
            return 1;
        }
    }

    if (cfg.format == "json")
        std::cout << doc.dump(2) << "\n";
    else
        print_text_document(doc, std::cout);

    if (truncated && cfg.strict) {
        std::cerr << "enumeration truncated at cap " << cfg.cap << " (strict mode)\n";
        return 3;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"shortest feedback shift register synthesis over Z_{p^r}"};
    app.require_subcommand(1);

    RunConfig cfg;
    const auto add_common = [&](CLI::App* cmd, bool needs_seq = true) {
        cmd->add_option("--p", cfg.p, "prime base of the modulus")->required();
        cmd->add_option("--r", cfg.r, "exponent of the modulus (default 1)");
        cmd->add_option("--mode", cfg.mode, "auto|field|ring|bm-compat");
        auto* seq = cmd->add_option("--seq", cfg.seq_text, "sequence, comma or space separated");
        auto* file = cmd->add_option("--seq-file", cfg.seq_file, "file with one integer per line");
        if (needs_seq) {
            seq->excludes(file);
        }
        cmd->add_flag("--normalized", cfg.normalized, "scale feedback polynomials to constant term 1");
        cmd->add_flag("--monic", cfg.monic, "scale characteristic polynomials monic");
        cmd->add_option("--cap", cfg.cap, "enumeration cap (raw combinations)");
        cmd->add_option("--format", cfg.format, "text|json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_flag("--strict", cfg.strict, "exit 3 when an enumeration is truncated");
    };

    CLI::App* synth = app.add_subcommand("synth", "synthesize and report");
    add_common(synth);
    synth->add_flag("--trace", cfg.with_trace, "include per-step traces");
    synth->add_flag("--parametrize", cfg.with_parametrize, "include the full parametrization");
    synth->add_flag("--reciprocal", cfg.with_reciprocal, "include reciprocal-sequence analysis");
    synth->add_flag("--profile", cfg.with_profile, "include the complexity profile");
    synth->add_flag("--oracle-check", cfg.with_oracle_check, "cross-check against brute force");

    CLI::App* profile = app.add_subcommand("profile", "per-prefix complexity profile");
    add_common(profile);

    CLI::App* enumerate = app.add_subcommand("enumerate", "all shortest solutions");
    add_common(enumerate);

    CLI::App* oracle = app.add_subcommand("oracle-check", "compare engine against brute force");
    add_common(oracle);
    oracle->add_flag("--self-test-corrupt", cfg.self_test_corrupt,
                     "test fixture: corrupt the engine result to force a mismatch")
        ->group(""); // hidden

    CLI::App* trace = app.add_subcommand("trace", "per-step traces");
    add_common(trace);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        fsr::DocumentOptions opts;
        opts.normalization = resolve_normalization(cfg);
        opts.cap = cfg.cap;
        if (synth->parsed()) {
            opts.trace = cfg.with_trace;
            opts.parametrize = cfg.with_parametrize;
            opts.reciprocal = cfg.with_reciprocal;
            opts.profile = cfg.with_profile;
        } else if (profile->parsed()) {
            opts.profile = true;
        } else if (enumerate->parsed()) {
            opts.parametrize = true;
            opts.reciprocal = true;
        } else if (oracle->parsed()) {
            cfg.with_oracle_check = true;
        } else if (trace->parsed()) {
            opts.trace = true;
        }
        return run_document_command(cfg, opts);
    } catch (const fsr::cost_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
