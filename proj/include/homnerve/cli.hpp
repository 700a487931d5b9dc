#ifndef HOMNERVE_CLI_HPP
#define HOMNERVE_CLI_HPP

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "error.hpp"
#include "field.hpp"
#include "generators.hpp"
#include "homology.hpp"
#include "io.hpp"
#include "simplicial.hpp"
#include "theorems.hpp"

namespace homnerve::cli {

enum ExitCode : int {
    kOk = 0,
    kFailed = 1,      ///< hypothesis, prediction or conclusion not met
    kInternal = 2,    ///< internal invariant violated
    kUsage = 64,
    kParse = 65,
};

namespace detail {

inline Json load(const std::string& path, std::istream& in) {
    if (path == "-") return read_json(in);
    std::ifstream file(path);
    if (!file) throw ParseError("cannot open '" + path + "'");
    return read_json(file);
}

inline std::pair<std::uint64_t, std::uint64_t> parse_density(const std::string& text) {
    const auto slash = text.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            const auto v = std::stoull(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return {v, 1};
        }
        const auto num = std::stoull(text.substr(0, slash), &used);
        if (used != slash) throw std::invalid_argument(text);
        const auto den_text = text.substr(slash + 1);
        const auto den = std::stoull(den_text, &used);
        if (used != den_text.size()) throw std::invalid_argument(text);
        return {num, den};
    } catch (const std::logic_error&) {
        throw InvalidInput("density must be a fraction like 1/2, got '" + text + "'");
    }
}

struct Options {
    std::string input = "-";
    std::string field = "gf2";
    std::string format = "text";
    int k = 0;
    int d = 1;
    std::string mode = "t1";
    std::string strength = "weak";
    std::string kind = "t1";
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    std::size_t budget = 6;
    std::size_t max_dim = 2;
    std::string density = "1/2";
    std::size_t members = 3;
    bool exhaustive = false;
};

template <class F>
int run_kill(const SimplicialComplex& k, int target, const F& field, const Options& o, std::ostream& out) {
    const auto before_complex = compile(k, field);
    const auto result = kill_homology_below(before_complex, target);
    const auto before = betti(before_complex);
    const auto after = betti(result.complex);

    bool ok = after.is_acyclic_through(target - 1);
    for (int d = target; d <= std::max(before.stored_top(), after.stored_top()); ++d)
        if (before[d] != after[d]) ok = false;

    if (o.format == "json") {
        Json j;
        j["field"] = field.spec().name();
        j["k"] = target;
        j["before"] = to_json(before)["betti"];
        j["after"] = to_json(after)["betti"];
        j["log"] = attachment_log_to_json(result.complex, result.log);
        j["postcondition_holds"] = ok;
        out << j.dump(2) << "\n";
    } else {
        out << "field: " << field.spec().name() << "\n";
        out << "before: " << before.to_string() << "\n";
        out << "after:  " << after.to_string() << "\n";
        const auto log = attachment_log_to_json(result.complex, result.log);
        out << "attached " << result.log.size() << " cell(s)\n";
        for (const auto& e : log) {
            std::vector<std::string> terms;
            for (const auto& [name, coeff] : e["boundary"].items())
                terms.push_back(coeff.template get<std::string>() + "*" + name);
            out << "  " << e["degree"].template get<int>() << "-cell, boundary "
                << (terms.empty() ? std::string("(point)") : join(terms, " + ")) << "\n";
        }
        out << "postcondition: " << (ok ? "holds" : "VIOLATED") << "\n";
    }
    return ok ? kOk : kInternal;
}

}  // namespace detail

/// Runs one command line (without the program name). Reports go to out,
/// diagnostics to err; the return value is the process exit code.
inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
    using detail::Options;
    Options o;
    CLI::App app{"Reduced homology, nerves, and nerve-theorem checks over a field", "homnerve"};
    app.require_subcommand(1);

    auto add_field = [&](CLI::App* sub) {
        sub->add_option("--field", o.field, "gf<p> for a prime p, or q for the rationals")->capture_default_str();
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    };
    auto add_input = [&](CLI::App* sub, const char* what) {
        sub->add_option("input", o.input, std::string(what) + " JSON file, or - for stdin")->capture_default_str();
    };

    auto* betti_cmd = app.add_subcommand("betti", "reduced Betti numbers of a complex");
    add_input(betti_cmd, "complex");
    add_field(betti_cmd);
    add_format(betti_cmd);

    auto* nerve_cmd = app.add_subcommand("nerve", "nerve of a cover, as a complex file");
    add_input(nerve_cmd, "cover");
    add_format(nerve_cmd);

    auto* check_cmd = app.add_subcommand("check", "nerve-theorem hypothesis and conclusions for a cover");
    add_input(check_cmd, "cover");
    add_field(check_cmd);
    add_format(check_cmd);
    check_cmd->add_option("--k", o.k)->required()->check(CLI::NonNegativeNumber);
    check_cmd->add_option("--mode", o.mode)->required()->check(CLI::IsMember({"t1", "hnt"}));

    auto* helly_cmd = app.add_subcommand("helly", "topological Helly check for a family");
    add_input(helly_cmd, "cover");
    add_field(helly_cmd);
    add_format(helly_cmd);
    helly_cmd->add_option("--d", o.d)->required()->check(CLI::PositiveNumber);
    helly_cmd->add_option("--strength", o.strength)->required()->check(CLI::IsMember({"weak", "strong"}));

    auto* rainbow_cmd = app.add_subcommand("rainbow", "rainbow-simplex check for a colored complex");
    add_input(rainbow_cmd, "colored complex");
    add_field(rainbow_cmd);
    add_format(rainbow_cmd);
    rainbow_cmd->add_option("--strength", o.strength)->check(CLI::IsMember({"weak", "strong"}))->capture_default_str();

    auto* kill_cmd = app.add_subcommand("kill", "attach cells to kill reduced homology below degree k");
    add_input(kill_cmd, "complex");
    add_field(kill_cmd);
    add_format(kill_cmd);
    kill_cmd->add_option("--k", o.k)->required()->check(CLI::NonNegativeNumber);

    auto* fuzz_cmd = app.add_subcommand("fuzz", "seeded soundness runs");
    add_field(fuzz_cmd);
    add_format(fuzz_cmd);
    fuzz_cmd->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"t1", "hnt", "helly", "rainbow"}));
    fuzz_cmd->add_option("--trials", o.trials)->capture_default_str();
    auto* seed_opt = fuzz_cmd->add_option("--seed", o.seed);
    fuzz_cmd->add_option("--budget", o.budget, "vertex budget (max vertices when exhaustive)")->capture_default_str();
    fuzz_cmd->add_option("--max-dim", o.max_dim)->capture_default_str();
    fuzz_cmd->add_option("--density", o.density, "face density as num/den")->capture_default_str();
    fuzz_cmd->add_option("--members", o.members, "cover members or colors (max colors when exhaustive)")
        ->capture_default_str();
    fuzz_cmd->add_flag("--exhaustive", o.exhaustive, "rainbow only: sweep every small colored complex");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        const auto field = FieldSpec::parse(o.field);
        const bool json = o.format == "json";

        if (betti_cmd->parsed()) {
            const auto profile = reduced_betti(complex_from_json(detail::load(o.input, in)), field);
            if (json)
                out << to_json(profile).dump(2) << "\n";
            else
                out << "field: " << field.name() << "\n" << profile.to_string() << "\n";
            return kOk;
        }

        if (nerve_cmd->parsed()) {
            const auto cover = cover_from_json(detail::load(o.input, in));
            const auto n = nerve(cover);
            if (json) {
                Json j = complex_to_json(n);
                Json names = Json::array();
                for (const auto& m : cover.members()) names.push_back(m.name);
                j["members"] = std::move(names);
                out << j.dump(2) << "\n";
            } else {
                out << "nerve on " << cover.size() << " members\n";
                for (const auto& f : n.facets()) {
                    std::vector<std::string> labels;
                    for (Vertex v : f) labels.push_back(cover.member(v - 1).name);
                    out << "  " << to_string(f) << " {" << join(labels, ", ") << "}\n";
                }
            }
            return kOk;
        }

        if (check_cmd->parsed()) {
            const auto cover = cover_from_json(detail::load(o.input, in));
            const bool t1 = o.mode == "t1";
            const auto hyp = t1 ? check_t1_hypothesis(cover, o.k, field) : check_hnt_hypothesis(cover, o.k, field);
            const auto concl = verify_conclusions(cover, o.k, field, t1 ? ConclusionMode::T1 : ConclusionMode::HNT);
            if (json) {
                Json j;
                j["hypothesis"] = to_json(hyp);
                j["conclusions"] = to_json(concl);
                out << j.dump(2) << "\n";
            } else {
                out << to_text(hyp) << to_text(concl);
            }
            if (!hyp.passed) return kFailed;
            return concl.holds() ? kOk : kFailed;
        }

        if (helly_cmd->parsed()) {
            const auto cover = cover_from_json(detail::load(o.input, in));
            const auto r = helly_check(cover, o.d, field, o.strength == "weak" ? Strength::Weak : Strength::Strong);
            out << (json ? to_json(r).dump(2) + "\n" : to_text(r));
            if (!r.predicted_nonempty) return kFailed;
            return r.actual_intersection_nonempty ? kOk : kFailed;
        }

        if (rainbow_cmd->parsed()) {
            const auto colored = colored_from_json(detail::load(o.input, in));
            const auto r = rainbow_check(colored, field, o.strength == "weak" ? Strength::Weak : Strength::Strong);
            out << (json ? to_json(r).dump(2) + "\n" : to_text(r));
            if (!r.predicted_rainbow) return kFailed;
            return r.witness ? kOk : kFailed;
        }

        if (kill_cmd->parsed()) {
            const auto k = complex_from_json(detail::load(o.input, in));
            return with_field(field, [&](const auto& f) { return detail::run_kill(k, o.k, f, o, out); });
        }

        if (fuzz_cmd->parsed()) {
            if (o.exhaustive) {
                if (o.kind != "rainbow") throw InvalidInput("--exhaustive applies to --kind rainbow only");
                const auto r = rainbow_sweep(o.budget, o.members, o.max_dim, field);
                if (json) {
                    out << to_json(r).dump(2) << "\n";
                } else {
                    out << "rainbow sweep over " << field.name() << ": " << r.instances << " colored complexes ("
                        << r.complexes << " complexes), weak passed " << r.weak_passed << ", strong passed "
                        << r.strong_passed << ", weak but not strong " << r.weak_not_strong << ", violations "
                        << r.violations.size() << "\n";
                }
                return r.violations.empty() ? kOk : kFailed;
            }
            if (seed_opt->count() == 0) throw InvalidInput("fuzz requires --seed");
            const auto [num, den] = detail::parse_density(o.density);
            GenParams p{o.budget, o.max_dim, num, den, o.members, o.seed};
            const FuzzKind kind = o.kind == "t1"      ? FuzzKind::T1
                                  : o.kind == "hnt"   ? FuzzKind::HNT
                                  : o.kind == "helly" ? FuzzKind::Helly
                                                      : FuzzKind::Rainbow;
            const auto r = fuzz_theorem(kind, o.trials, p, field);
            if (json) {
                out << to_json(r).dump(2) << "\n";
            } else {
                out << "fuzz " << to_string(kind) << " over " << field.name() << " (" << kPrngName
                    << ", seed " << o.seed << "): " << r.trials << " trials, " << r.hypothesis_passed
                    << " passed the hypothesis, " << r.conclusion_violations.size() << " conclusion violations\n";
                for (const auto& v : r.conclusion_violations)
                    out << "  trial " << v.trial << ": " << v.instance.dump() << "\n";
            }
            return r.conclusion_violations.empty() ? kOk : kFailed;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const InvalidInput& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const InvariantViolation& e) {
        err << "internal invariant violated: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}

}  // namespace homnerve::cli

#endif
