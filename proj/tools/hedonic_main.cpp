// Command-line front end: file ingestion, restriction reports, solvers,
// partition verification, exhaustive surveys and the bundled example corpus.
#include <cstdio>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hedonic/game_file.hpp"
#include "hedonic/oracle.hpp"
#include "hedonic/restrictions.hpp"
#include "hedonic/solvers.hpp"

using namespace hedonic;
using nlohmann::json;

namespace {

/// Exit codes shared by all commands; verify additionally uses 1 for "not
/// stable" and solve uses 1 for a precondition refusal.
constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

void emit(const json& j) { std::printf("%s\n", j.dump(2).c_str()); }

struct CheckRow {
    const char* label;
    const char* tag;
    std::optional<RestrictionVerdict> verdict;  // empty when the check was skipped
    const char* skip_reason = nullptr;
};

int cmd_check(const std::string& path, bool as_json) {
    GameSpec game = load_game(path);
    PreferenceProfile profile = game.to_profile();

    std::vector<CheckRow> rows;
    const RestrictionVerdict tr = is_top_responsive(profile);
    rows.push_back({"top responsive", "top-responsive", tr});
    if (tr.holds) {
        rows.push_back({"mutual choice sets", "mutual-choice-sets", is_mutual_top(profile)});
    } else {
        rows.push_back({"mutual choice sets", "mutual-choice-sets", std::nullopt,
                        "needs top responsiveness"});
    }
    rows.push_back({"bottom responsive", "bottom-responsive", is_bottom_responsive(profile)});
    const RestrictionVerdict sbr = is_strong_bottom_responsive(profile);
    rows.push_back({"strong bottom responsive", "strong-bottom-responsive", sbr});
    if (sbr.holds) {
        rows.push_back({"mutual avoid sets", "mutual-avoid-sets", is_mutual_bottom(profile)});
    } else {
        rows.push_back({"mutual avoid sets", "mutual-avoid-sets", std::nullopt,
                        "needs strong bottom responsiveness"});
    }

    if (as_json) {
        json checks = json::array();
        for (const CheckRow& row : rows) {
            json entry = {{"check", row.tag}};
            if (!row.verdict) {
                entry["skipped"] = row.skip_reason;
            } else {
                entry["holds"] = row.verdict->holds;
                if (row.verdict->witness) {
                    entry["witness"] = restriction_witness_text(*row.verdict->witness);
                }
            }
            checks.push_back(std::move(entry));
        }
        emit({{"game", game.name},
              {"kind", std::string(game_kind_tag(game.kind()))},
              {"n", profile.player_count()},
              {"checks", checks}});
        return kExitOk;
    }

    std::printf("game: %s (%s, n=%d)\n", game.name.c_str(),
                std::string(game_kind_tag(game.kind())).c_str(), profile.player_count());
    for (const CheckRow& row : rows) {
        if (!row.verdict) {
            std::printf("%s: skipped (%s)\n", row.label, row.skip_reason);
        } else if (row.verdict->holds) {
            std::printf("%s: holds\n", row.label);
        } else {
            std::printf("%s: fails (%s)\n", row.label,
                        restriction_witness_text(*row.verdict->witness).c_str());
        }
    }
    return kExitOk;
}

int cmd_solve(const std::string& path, const std::string& algorithm, bool as_json) {
    GameSpec game = load_game(path);
    PreferenceProfile profile = game.to_profile();

    try {
        if (algorithm == "tca") {
            TcaResult r = top_covering(profile);
            if (as_json) {
                json rounds = json::array();
                for (const TcaRound& round : r.trace.rounds) {
                    rounds.push_back({{"round", round.round},
                                      {"remaining", round.remaining.to_text()},
                                      {"selected", round.selected},
                                      {"component", round.component.to_text()}});
                }
                emit({{"algorithm", algorithm},
                      {"partition", r.partition.to_text()},
                      {"rounds", rounds}});
            } else {
                std::printf("algorithm: %s\n", algorithm.c_str());
                for (const TcaRound& round : r.trace.rounds) {
                    std::printf("round=%d R=%s selected=%d component=%s\n", round.round,
                                round.remaining.to_text().c_str(), round.selected,
                                round.component.to_text().c_str());
                }
                std::printf("partition: %s\n", r.partition.to_text().c_str());
            }
            return kExitOk;
        }
        if (algorithm == "dynamics-is" || algorithm == "dynamics-sis") {
            const DynamicsMode mode = algorithm == "dynamics-is"
                                          ? DynamicsMode::IndividualStability
                                          : DynamicsMode::StrongIndividualStability;
            DynamicsResult r = deviation_dynamics(profile, mode);
            if (as_json) {
                json steps = json::array();
                for (std::size_t k = 0; k < r.trace.steps.size(); ++k) {
                    const DynamicsStep& s = r.trace.steps[k];
                    steps.push_back({{"step", k + 1},
                                     {"movers", s.movers.to_text()},
                                     {"from", s.from.to_text()},
                                     {"to", s.to.to_text()}});
                }
                json potentials = json::array();
                for (const SizeVector& sv : r.trace.potentials) potentials.push_back(sv.sizes);
                emit({{"algorithm", algorithm},
                      {"partition", r.partition.to_text()},
                      {"steps", steps},
                      {"potentials", potentials}});
            } else {
                std::printf("algorithm: %s\n", algorithm.c_str());
                for (std::size_t k = 0; k < r.trace.steps.size(); ++k) {
                    const DynamicsStep& s = r.trace.steps[k];
                    std::printf("step=%zu H=%s -> %s\n", k + 1, s.movers.to_text().c_str(),
                                s.to.to_text().c_str());
                }
                std::printf("partition: %s\n", r.partition.to_text().c_str());
            }
            return kExitOk;
        }
        // maximal-ir (the option whitelist rules everything else out)
        Partition best = find_gdot_maximal_ir(profile);
        if (as_json) {
            emit({{"algorithm", algorithm}, {"partition", best.to_text()}});
        } else {
            std::printf("algorithm: %s\npartition: %s\n", algorithm.c_str(),
                        best.to_text().c_str());
        }
        return kExitOk;
    } catch (const PreconditionError& e) {
        if (as_json) {
            emit({{"algorithm", algorithm}, {"refused", e.what()}});
        } else {
            std::printf("refused: %s\n", e.what());
        }
        return kExitNegative;
    }
}

int cmd_verify(const std::string& path, const std::string& concept_name,
               const std::string& partition_text, bool as_json) {
    GameSpec game = load_game(path);
    PreferenceProfile profile = game.to_profile();

    const std::optional<StabilityConcept> wanted = concept_from_tag(concept_name);
    if (!wanted) throw std::invalid_argument("unknown concept '" + concept_name + "'");
    const Partition p = Partition::parse(partition_text, profile.player_count());

    StabilityVerdict v = check_stability(profile, p, *wanted);
    if (as_json) {
        json out = {{"concept", std::string(concept_tag(*wanted))},
                    {"partition", p.to_text()},
                    {"stable", v.stable}};
        if (v.witness) out["witness"] = witness_text(*v.witness);
        emit(out);
    } else {
        std::printf("concept: %s\npartition: %s\nstable: %s\n",
                    std::string(concept_tag(*wanted)).c_str(), p.to_text().c_str(),
                    v.stable ? "true" : "false");
        if (v.witness) std::printf("witness: %s\n", witness_text(*v.witness).c_str());
    }
    return v.stable ? kExitOk : kExitNegative;
}

/// Bell number, for the pre-run cost estimate of an override survey.
unsigned long long partition_total(int n) {
    std::vector<unsigned long long> row = {1};
    for (int k = 1; k <= n; ++k) {
        std::vector<unsigned long long> next = {row.back()};
        for (unsigned long long v : row) next.push_back(next.back() + v);
        row = std::move(next);
    }
    return row.front();
}

int cmd_survey(const std::string& path, std::optional<int> max_n_override, bool as_json) {
    GameSpec game = load_game(path);
    PreferenceProfile profile = game.to_profile();
    const int n = profile.player_count();

    if (max_n_override && !as_json) {
        std::printf("override active: scanning %llu partitions of %d players per concept\n",
                    partition_total(n), n);
    }

    OracleReport report = survey_stability(profile, game.name, max_n_override);
    std::vector<HierarchyViolation> violations =
        check_hierarchy(profile, max_n_override.value_or(kHierarchyCap));

    if (as_json) {
        json entries = json::array();
        for (const auto& entry : report.entries) {
            json stable = json::array();
            for (const Partition& p : entry.stable) stable.push_back(p.to_text());
            entries.push_back({{"concept", std::string(concept_tag(entry.tag))},
                               {"count", entry.stable.size()},
                               {"stable", stable},
                               {"seconds", entry.seconds}});
        }
        json bad = json::array();
        for (const HierarchyViolation& v : violations) {
            bad.push_back({{"partition", v.partition.to_text()},
                           {"satisfies", std::string(concept_tag(v.antecedent))},
                           {"misses", std::string(concept_tag(v.consequent))}});
        }
        emit({{"game", report.game_id},
              {"n", report.n},
              {"entries", entries},
              {"hierarchy_violations", bad},
              {"total_seconds", report.total_seconds}});
    } else {
        std::printf("game: %s (n=%d)\n", report.game_id.c_str(), report.n);
        for (const auto& entry : report.entries) {
            std::printf("%s: %zu stable (%.3f s)\n", std::string(concept_tag(entry.tag)).c_str(),
                        entry.stable.size(), entry.seconds);
            for (const Partition& p : entry.stable) std::printf("  %s\n", p.to_text().c_str());
        }
        if (violations.empty()) {
            std::printf("hierarchy violations: none\n");
        } else {
            for (const HierarchyViolation& v : violations) {
                std::printf("violation: %s satisfies %s but not %s\n", v.partition.to_text().c_str(),
                            std::string(concept_tag(v.antecedent)).c_str(),
                            std::string(concept_tag(v.consequent)).c_str());
            }
        }
        std::printf("total: %.3f s\n", report.total_seconds);
    }
    return violations.empty() ? kExitOk : kExitNegative;
}

int cmd_examples(const std::string& name, const std::string& out_path) {
    GameSpec game = bundled_game(name);
    if (out_path.empty()) {
        emit(game_to_json(game));
    } else {
        save_game(game, out_path);
        std::printf("wrote %s\n", out_path.c_str());
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hedonic coalition-formation toolkit"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string file;
    std::string algorithm;
    std::string concept_name;
    std::string partition_text;
    std::string example_name;
    std::string out_path;
    int override_n = 0;

    CLI::App* check = app.add_subcommand("check", "report preference-restriction verdicts");
    check->add_option("file", file, "game file")->required();

    CLI::App* solve = app.add_subcommand("solve", "construct a stable partition");
    solve->add_option("--algorithm", algorithm, "tca | dynamics-is | dynamics-sis | maximal-ir")
        ->required()
        ->check(CLI::IsMember({"tca", "dynamics-is", "dynamics-sis", "maximal-ir"}));
    solve->add_option("file", file, "game file")->required();

    CLI::App* verify = app.add_subcommand("verify", "verify a partition against a concept");
    verify->add_option("--concept", concept_name, "stability concept tag")->required();
    verify->add_option("--partition", partition_text, "partition text, e.g. \"1,2|3,4\"")->required();
    verify->add_option("file", file, "game file")->required();

    CLI::App* survey = app.add_subcommand("survey", "exhaustive stable-set scan plus lattice audit");
    CLI::Option* override_opt =
        survey->add_option("--max-n-override", override_n, "lift the player-count ceiling to this n");
    survey->add_option("file", file, "game file")->required();

    CLI::App* examples = app.add_subcommand("examples", "emit a bundled game file");
    examples->add_option("--name", example_name, "example1 | example2 | prop2 | prop3")->required();
    examples->add_option("--out", out_path, "destination path (stdout when omitted)");

    for (CLI::App* sub : {check, solve, verify, survey, examples}) {
        sub->add_flag("--json", as_json, "machine-readable output");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (check->parsed()) return cmd_check(file, as_json);
        if (solve->parsed()) return cmd_solve(file, algorithm, as_json);
        if (verify->parsed()) return cmd_verify(file, concept_name, partition_text, as_json);
        if (survey->parsed()) {
            std::optional<int> override_value;
            if (override_opt->count() > 0) override_value = override_n;
            return cmd_survey(file, override_value, as_json);
        }
        return cmd_examples(example_name, out_path);
    } catch (const CapacityError& e) {
        std::fprintf(stderr, "error: %s; see survey --max-n-override\n", e.what());
        return kExitError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitError;
    }
}
