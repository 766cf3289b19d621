#include "hiergame/sweep.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>

#include "hiergame/document.hpp"

namespace hiergame {

namespace {

std::string vec_str(const std::vector<int>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s + ")";
}

}  // namespace

std::vector<HierSpec> sweep_specs(const SweepGrid& grid)
{
    if (grid.levels < 1 || grid.nmax < 1) {
        throw std::invalid_argument("sweep needs levels >= 1 and nmax >= 1");
    }
    const auto m = static_cast<std::size_t>(grid.levels);
    std::vector<HierSpec> out;
    std::vector<int> n(m, 1);
    std::vector<int> k(m, 0);

    std::function<void(std::size_t, int)> fill_k = [&](std::size_t i, int kmax) {
        if (i == m) {
            std::optional<HierSpec> spec;
            try {
                spec.emplace(grid.kind, n, k);
            } catch (const std::invalid_argument&) {
                return;
            }
            auto report = canon_check(*spec);
            if (report.canonical && report.normalized_spec == *spec) {
                out.push_back(*spec);
            }
            return;
        }
        int lo = i == 0 ? 1 : k[i - 1] + 1;
        if (grid.kind == HierKind::conjunctive && i + 1 == m && i > 0) {
            lo = k[i - 1];
        }
        for (int v = lo; v <= kmax; ++v) {
            k[i] = v;
            fill_k(i + 1, kmax);
        }
    };
    std::function<void(std::size_t)> fill_n = [&](std::size_t i) {
        if (i == m) {
            int total = 0;
            for (int x : n) {
                total += x;
            }
            fill_k(0, grid.kmax.value_or(total));
            return;
        }
        for (int v = 1; v <= grid.nmax; ++v) {
            n[i] = v;
            fill_n(i + 1);
        }
    };
    fill_n(0);
    return out;
}

SweepRecord check_spec(const HierSpec& spec)
{
    auto start = std::chrono::steady_clock::now();
    auto report = canon_check(spec);
    SweepRecord rec{spec, report.dummy_last_level, report.passer_first_level,
                    report.blocker_first_level, classify_rough(spec), {}, false, false, 0};
    auto game = realize(report.normalized_spec);
    rec.oracle = oracle_classify(game);
    const auto& v = rec.verdict;
    if (v.certificate) {
        auto mode = v.game_class == GameClass::weighted ? RepresentationMode::weighted
                                                        : RepresentationMode::rough;
        rec.certificate_verified = verify_representation(game, *v.certificate, mode);
    } else {
        rec.certificate_verified = v.game_class == GameClass::not_rough;
    }
    rec.agree = rec.certificate_verified && v.game_class == rec.oracle.game_class;
    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

SweepReport run_sweep(const SweepGrid& grid)
{
    SweepReport report;
    report.grid = grid;
    for (const auto& spec : sweep_specs(grid)) {
        try {
            report.records.push_back(check_spec(spec));
        } catch (const CapExceeded& e) {
            std::ostringstream os;
            os << spec << ": " << e.what();
            report.skipped.push_back(os.str());
        }
    }
    return report;
}

std::size_t SweepReport::disagreements() const
{
    std::size_t d = 0;
    for (const auto& r : records) {
        d += !r.agree;
    }
    return d;
}

std::size_t SweepReport::literal_disagreements() const
{
    std::size_t d = 0;
    for (const auto& r : records) {
        d += r.verdict.literal_conjunctive_agrees && !*r.verdict.literal_conjunctive_agrees;
    }
    return d;
}

std::size_t SweepReport::count(GameClass c) const
{
    std::size_t d = 0;
    for (const auto& r : records) {
        d += r.verdict.game_class == c;
    }
    return d;
}

nlohmann::ordered_json sweep_json(const SweepReport& report, bool timings)
{
    using json = nlohmann::ordered_json;
    json grid{{"kind", to_string(report.grid.kind)},
              {"levels", report.grid.levels},
              {"nmax", report.grid.nmax}};
    grid["kmax"] = report.grid.kmax ? json(*report.grid.kmax) : json(nullptr);
    json records = json::array();
    for (const auto& r : report.records) {
        json rec{{"n", r.spec.n()},
                 {"k", r.spec.k()},
                 {"flags",
                  {{"dummy_last_level", r.dummy_last_level},
                   {"passer_first_level", r.passer_first_level},
                   {"blocker_first_level", r.blocker_first_level}}},
                 {"class", to_string(r.verdict.game_class)},
                 {"case", r.verdict.case_tag()},
                 {"oracle_class", to_string(r.oracle.game_class)},
                 {"agree", r.agree}};
        if (r.verdict.literal_conjunctive_agrees) {
            rec["literal_conjunctive_agrees"] = *r.verdict.literal_conjunctive_agrees;
        }
        if (!r.agree) {
            rec["certificate"] = r.verdict.certificate ? certificate_json(*r.verdict.certificate)
                                                       : json(nullptr);
            rec["certificate_verified"] = r.certificate_verified;
            rec["oracle_certificate"] =
                r.oracle.certificate ? certificate_json(*r.oracle.certificate) : json(nullptr);
        }
        if (timings) {
            rec["seconds"] = r.seconds;
        }
        records.push_back(rec);
    }
    json summary{{"total", report.records.size()},
                 {"agreements", report.records.size() - report.disagreements()},
                 {"disagreements", report.disagreements()},
                 {"skipped", report.skipped.size()},
                 {"literal_conjunctive_disagreements", report.literal_disagreements()},
                 {"weighted", report.count(GameClass::weighted)},
                 {"rough_not_weighted", report.count(GameClass::rough_not_weighted)},
                 {"not_rough", report.count(GameClass::not_rough)}};
    return json{{"grid", grid}, {"records", records}, {"skipped", report.skipped}, {"summary", summary}};
}

std::string sweep_table(const SweepReport& report, bool timings)
{
    std::ostringstream os;
    os << std::left << std::setw(16) << "n" << std::setw(18) << "k" << std::setw(20) << "class"
       << std::setw(44) << "case" << std::setw(20) << "oracle" << "agree";
    if (timings) {
        os << "  seconds";
    }
    os << '\n';
    for (const auto& r : report.records) {
        os << std::setw(16) << vec_str(r.spec.n()) << std::setw(18) << vec_str(r.spec.k())
           << std::setw(20) << to_string(r.verdict.game_class) << std::setw(44)
           << r.verdict.case_tag() << std::setw(20) << to_string(r.oracle.game_class)
           << (r.agree ? "yes" : "NO");
        if (timings) {
            os << "  " << std::fixed << std::setprecision(4) << r.seconds;
        }
        os << '\n';
    }
    for (const auto& s : report.skipped) {
        os << "skipped " << s << '\n';
    }
    os << "total " << report.records.size() << ", disagreements " << report.disagreements()
       << ", skipped " << report.skipped.size() << "; weighted "
       << report.count(GameClass::weighted) << ", rough_not_weighted "
       << report.count(GameClass::rough_not_weighted) << ", not_rough "
       << report.count(GameClass::not_rough) << '\n';
    if (report.grid.kind == HierKind::conjunctive) {
        os << "literal conjunctive case list disagrees on " << report.literal_disagreements()
           << " specs\n";
    }
    return os.str();
}

}  // namespace hiergame
