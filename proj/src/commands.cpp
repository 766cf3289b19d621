#include "hiergame/commands.hpp"

#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "hiergame/classifier.hpp"
#include "hiergame/document.hpp"
#include "hiergame/structural.hpp"
#include "hiergame/sweep.hpp"
#include "hiergame/transforms.hpp"

namespace hiergame {

namespace {

using json = nlohmann::ordered_json;

struct Context {
    bool json_output = false;
    std::ostream& out;
};

json optional_cert(const std::optional<RoughCert>& cert)
{
    return cert ? certificate_json(*cert) : json(nullptr);
}

std::string cert_text(const std::optional<RoughCert>& cert)
{
    if (!cert) {
        return "none";
    }
    std::ostringstream os;
    os << *cert;
    return os.str();
}

RepresentationMode mode_for(GameClass c)
{
    return c == GameClass::weighted ? RepresentationMode::weighted : RepresentationMode::rough;
}

bool certificate_holds(const ExplicitGame& game, GameClass c, const std::optional<RoughCert>& cert)
{
    if (!cert) {
        return c == GameClass::not_rough;
    }
    return verify_representation(game, *cert, mode_for(c));
}

void print_row(std::ostream& os, const std::string& label, const std::string& value)
{
    os << label << std::string(label.size() < 14 ? 14 - label.size() : 1, ' ') << value << '\n';
}

std::string levels_text(const std::vector<std::size_t>& map)
{
    std::string s;
    for (std::size_t i = 0; i < map.size(); ++i) {
        s += (i ? "," : "") + std::to_string(map[i] + 1);
    }
    return s;
}

int classify_spec(const Context& ctx, const GameDocument& doc, HierSpec spec, bool with_oracle,
                  bool canonicalize)
{
    std::optional<std::vector<std::size_t>> level_map;
    if (!canon_check(spec).canonical) {
        if (!canonicalize) {
            throw std::invalid_argument("spec is not canonical; pass --canonicalize");
        }
        auto form = canonicalize_semantic(spec);
        spec = form.spec;
        level_map = form.level_map;
    }
    auto verdict = classify_rough(spec);
    auto game = realize(spec);
    bool verified = certificate_holds(game, verdict.game_class, verdict.certificate);
    bool ok = verified;

    std::optional<OracleVerdict> oracle;
    bool oracle_agrees = true;
    if (with_oracle) {
        oracle = oracle_classify(game);
        oracle_agrees = oracle->game_class == verdict.game_class;
        ok = ok && oracle_agrees;
    }

    if (ctx.json_output) {
        json j{{"document", to_json(doc)},
               {"spec", spec_json(spec)},
               {"path", "classifier"},
               {"class", to_string(verdict.game_class)},
               {"case", verdict.case_tag()},
               {"certificate", optional_cert(verdict.certificate)},
               {"certificate_verified", verified}};
        json path = json::array();
        for (auto c : verdict.case_path) {
            path.push_back(to_string(c));
        }
        j["case_path"] = path;
        if (level_map) {
            std::vector<std::size_t> one_based;
            for (auto l : *level_map) {
                one_based.push_back(l + 1);
            }
            j["level_map"] = one_based;
        }
        if (verdict.literal_conjunctive_agrees) {
            j["literal_conjunctive_agrees"] = *verdict.literal_conjunctive_agrees;
        }
        if (verdict.weighted_dual_agrees) {
            j["weighted_dual_agrees"] = *verdict.weighted_dual_agrees;
        }
        if (oracle) {
            j["oracle"] = {{"class", to_string(oracle->game_class)},
                           {"certificate", optional_cert(oracle->certificate)},
                           {"agrees", oracle_agrees}};
        }
        ctx.out << j.dump(2) << '\n';
    } else {
        std::ostringstream s;
        s << spec;
        print_row(ctx.out, "spec", s.str());
        if (level_map) {
            print_row(ctx.out, "level map", levels_text(*level_map));
        }
        print_row(ctx.out, "class", to_string(verdict.game_class));
        print_row(ctx.out, "case", verdict.case_tag());
        print_row(ctx.out, "certificate",
                  cert_text(verdict.certificate) + (verified ? " (verified)" : " (FAILS)"));
        if (verdict.literal_conjunctive_agrees && !*verdict.literal_conjunctive_agrees) {
            print_row(ctx.out, "note", "literal conjunctive case list disagrees");
        }
        if (oracle) {
            print_row(ctx.out, "oracle", to_string(oracle->game_class) + " " +
                                             cert_text(oracle->certificate) +
                                             (oracle_agrees ? " (agrees)" : " (DISAGREES)"));
        }
    }
    return ok ? exit_ok : exit_disagreement;
}

std::optional<HierSpec> recognize_any(const ExplicitGame& game)
{
    if (!is_complete(game)) {
        return std::nullopt;
    }
    auto ordered = desirability_ordered(game);
    if (auto s = recognize_hierarchical(ordered, HierKind::disjunctive)) {
        return s;
    }
    return recognize_hierarchical(ordered, HierKind::conjunctive);
}

int classify_explicit(const Context& ctx, const GameDocument& doc)
{
    const auto& game = *doc.game;
    auto oracle = oracle_classify(game);
    bool verified = certificate_holds(game, oracle.game_class, oracle.certificate);
    auto hier = recognize_any(game);
    std::optional<Verdict> verdict;
    if (hier) {
        verdict = classify_rough(*hier);
    }
    bool agrees = !verdict || verdict->game_class == oracle.game_class;

    if (ctx.json_output) {
        json j{{"document", to_json(doc)},
               {"spec", hier ? spec_json(*hier) : json(nullptr)},
               {"path", "oracle"},
               {"class", to_string(oracle.game_class)},
               {"certificate", optional_cert(oracle.certificate)},
               {"certificate_verified", verified}};
        if (verdict) {
            j["classifier"] = {{"class", to_string(verdict->game_class)},
                               {"case", verdict->case_tag()},
                               {"agrees", agrees}};
        }
        ctx.out << j.dump(2) << '\n';
    } else {
        std::ostringstream s;
        if (hier) {
            s << *hier;
        } else {
            s << "not hierarchical";
        }
        print_row(ctx.out, "spec", s.str());
        print_row(ctx.out, "class", to_string(oracle.game_class) + " (oracle)");
        print_row(ctx.out, "certificate",
                  cert_text(oracle.certificate) + (verified ? " (verified)" : " (FAILS)"));
        if (verdict) {
            print_row(ctx.out, "classifier", to_string(verdict->game_class) + " " +
                                                 verdict->case_tag() +
                                                 (agrees ? " (agrees)" : " (DISAGREES)"));
        }
    }
    return verified && agrees ? exit_ok : exit_disagreement;
}

void emit(const Context& ctx, const GameDocument& doc)
{
    ctx.out << emit_document(doc) << '\n';
}

int run_dual(const Context& ctx, const GameDocument& doc)
{
    GameDocument out = doc;
    if (doc.spec) {
        if (!canon_check(*doc.spec).canonical) {
            throw std::invalid_argument("dual needs a canonical spec; run canon first");
        }
        out.spec = dual_spec(*doc.spec);
    } else {
        out.game = dual_explicit(*doc.game);
    }
    emit(ctx, out);
    return exit_ok;
}

int run_canon(const Context& ctx, const GameDocument& doc)
{
    if (!doc.spec) {
        throw std::invalid_argument("canon needs a spec document");
    }
    auto report = canon_check(*doc.spec);
    GameDocument out = doc;
    std::optional<CanonicalForm> form;
    if (report.canonical) {
        out.spec = report.normalized_spec;
    } else {
        form = canonicalize_semantic(*doc.spec);
        out.spec = form->spec;
    }
    json flags{{"canonical", report.canonical},
               {"condition_a", report.condition_a},
               {"condition_b", report.condition_b},
               {"dummy_last_level", report.dummy_last_level},
               {"passer_first_level", report.passer_first_level},
               {"blocker_first_level", report.blocker_first_level}};
    if (doc.spec->kind() == HierKind::conjunctive) {
        flags["condition_last"] = report.condition_last;
    }
    if (form) {
        std::vector<std::size_t> one_based;
        for (auto l : form->level_map) {
            one_based.push_back(l + 1);
        }
        flags["level_map"] = one_based;
    }
    if (ctx.json_output) {
        ctx.out << json{{"report", flags}, {"document", to_json(out)}}.dump(2) << '\n';
    } else {
        for (const auto& [key, value] : flags.items()) {
            print_row(ctx.out, key, value.dump());
        }
        emit(ctx, out);
    }
    return exit_ok;
}

int run_minor(const Context& ctx, const GameDocument& doc, const std::string& op,
              const std::string& removed, const std::string& kind)
{
    GameDocument out;
    out.name = doc.name;
    if (op == "custom") {
        if (removed.empty()) {
            throw std::invalid_argument("custom minors need --A");
        }
        MinorKind mk;
        if (kind == "subgame") {
            mk = MinorKind::subgame;
        } else if (kind == "reduced") {
            mk = MinorKind::reduced;
        } else {
            throw std::invalid_argument("--kind must be subgame or reduced");
        }
        out.game = minor(document_game(doc), MinorStep{mk, Coalition{parse_counts(removed)}});
        emit(ctx, out);
        return exit_ok;
    }
    if (!doc.spec) {
        throw std::invalid_argument("named minors need a spec document");
    }
    auto report = canon_check(*doc.spec);
    if (doc.spec->kind() != HierKind::disjunctive || !report.canonical) {
        throw std::invalid_argument("named minors need a canonical disjunctive spec");
    }
    for (const auto& m : named_minors(*doc.spec)) {
        if (m.name == op) {
            out.spec = m.spec;
            emit(ctx, out);
            return exit_ok;
        }
    }
    throw std::invalid_argument("minor '" + op + "' is not applicable to this spec");
}

int run_sweep_cmd(const Context& ctx, const SweepGrid& grid, bool timings)
{
    auto report = run_sweep(grid);
    if (ctx.json_output) {
        ctx.out << sweep_json(report, timings).dump(2) << '\n';
    } else {
        ctx.out << sweep_table(report, timings);
    }
    return report.disagreements() == 0 ? exit_ok : exit_disagreement;
}

int run_structural_cmd(const Context& ctx, const std::string& universe)
{
    auto report = run_structural(Multiset(parse_counts(universe)));
    if (ctx.json_output) {
        ctx.out << structural_json(report).dump(2) << '\n';
    } else {
        ctx.out << structural_text(report);
    }
    return report.ok() ? exit_ok : exit_disagreement;
}

}  // namespace

std::vector<int> parse_counts(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = -1;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size() || v < 0) {
            throw std::invalid_argument("bad count list '" + text + "'");
        }
        out.push_back(v);
    }
    if (out.empty() || text.back() == ',') {
        throw std::invalid_argument("bad count list '" + text + "'");
    }
    return out;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Classify hierarchical simple games as weighted, roughly weighted or neither"};
    app.name("hiergame");
    app.require_subcommand(1);
    app.fallthrough();
    bool json_output = false;
    app.add_flag("--json", json_output, "machine-readable JSON output");

    std::string file;
    bool with_oracle = false;
    bool canonicalize = false;
    auto* classify = app.add_subcommand("classify", "classify a game document");
    classify->add_flag("--oracle", with_oracle, "cross-check against the exact LP oracle");
    classify->add_flag("--canonicalize", canonicalize, "merge equivalent levels first");
    classify->add_option("FILE", file, "game document")->required();

    auto* dual = app.add_subcommand("dual", "emit the dual game");
    dual->add_option("FILE", file, "game document")->required();

    auto* canon = app.add_subcommand("canon", "check canonicity and normalize");
    canon->add_option("FILE", file, "game document")->required();

    std::string op;
    std::string removed;
    std::string minor_kind = "subgame";
    auto* minor_cmd = app.add_subcommand("minor", "emit a minor of the game");
    minor_cmd->add_option("--op", op, "cut_tail, cut_head, remove_one:I or custom")->required();
    minor_cmd->add_option("--A", removed, "removed players as per-level counts, e.g. 1,0,2");
    minor_cmd->add_option("--kind", minor_kind, "subgame or reduced (custom only)");
    minor_cmd->add_option("FILE", file, "game document")->required();

    SweepGrid grid;
    std::string sweep_kind = "disjunctive";
    int kmax = 0;
    bool timings = false;
    auto* sweep = app.add_subcommand("sweep", "cross-check classifier and oracle over a grid");
    sweep->add_option("--kind", sweep_kind, "disjunctive or conjunctive")->required();
    sweep->add_option("--levels", grid.levels, "number of levels")->required()->check(CLI::PositiveNumber);
    sweep->add_option("--nmax", grid.nmax, "largest level size")->required()->check(CLI::PositiveNumber);
    auto* kmax_opt = sweep->add_option("--kmax", kmax, "largest threshold")->check(CLI::PositiveNumber);
    sweep->add_flag("--timings", timings, "record per-spec timings");

    std::string universe;
    auto* structural = app.add_subcommand("structural", "check the shift-extremal characterization");
    structural->add_option("--universe", universe, "level sizes, e.g. 2,2")->required();

    try {
        std::vector<std::string> args;
        for (int i = argc - 1; i > 0; --i) {
            args.emplace_back(argv[i]);
        }
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? exit_ok : exit_usage;
    }

    Context ctx{json_output, out};
    try {
        if (classify->parsed()) {
            auto doc = read_document_file(file);
            if (doc.spec) {
                return classify_spec(ctx, doc, *doc.spec, with_oracle, canonicalize);
            }
            return classify_explicit(ctx, doc);
        }
        if (dual->parsed()) {
            return run_dual(ctx, read_document_file(file));
        }
        if (canon->parsed()) {
            return run_canon(ctx, read_document_file(file));
        }
        if (minor_cmd->parsed()) {
            return run_minor(ctx, read_document_file(file), op, removed, minor_kind);
        }
        if (sweep->parsed()) {
            grid.kind = parse_hier_kind(sweep_kind);
            if (kmax_opt->count() > 0) {
                grid.kmax = kmax;
            }
            return run_sweep_cmd(ctx, grid, timings);
        }
        if (structural->parsed()) {
            return run_structural_cmd(ctx, universe);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_disagreement;
    }
    return exit_usage;
}

}  // namespace hiergame
