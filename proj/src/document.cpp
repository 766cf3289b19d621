#include "hiergame/document.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace hiergame {

namespace {

using json = nlohmann::ordered_json;

std::vector<int> int_list(const json& j, const char* field)
{
    if (!j.is_array()) {
        throw DocumentError(std::string("'") + field + "' must be an array of integers");
    }
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) {
            throw DocumentError(std::string("'") + field + "' must be an array of integers");
        }
        out.push_back(v.get<int>());
    }
    return out;
}

Coalition parse_coalition(const json& j, const Multiset& universe)
{
    Coalition c = universe.empty();
    if (j.is_object()) {
        // one 1-based level id per player
        if (!j.contains("levels") || j.size() != 1) {
            throw DocumentError("coalition objects take a single 'levels' field");
        }
        for (int level : int_list(j.at("levels"), "levels")) {
            if (level < 1 || static_cast<std::size_t>(level) > universe.levels()) {
                throw DocumentError("level id " + std::to_string(level) + " out of range");
            }
            ++c.counts[static_cast<std::size_t>(level - 1)];
        }
    } else {
        auto counts = int_list(j, "min_winning");
        if (counts.size() != universe.levels()) {
            throw DocumentError("coalition has " + std::to_string(counts.size()) +
                                " counts for " + std::to_string(universe.levels()) + " levels");
        }
        c.counts = counts;
    }
    if (!universe.contains(c)) {
        throw DocumentError("coalition does not fit in the universe");
    }
    return c;
}

std::optional<std::string> optional_string(const json& j, const char* field)
{
    if (!j.contains(field)) {
        return std::nullopt;
    }
    if (!j.at(field).is_string()) {
        throw DocumentError(std::string("'") + field + "' must be a string");
    }
    return j.at(field).get<std::string>();
}

}  // namespace

GameDocument document_from_json(const json& j)
{
    if (!j.is_object()) {
        throw DocumentError("a game document must be a JSON object");
    }
    for (const auto& [key, value] : j.items()) {
        static const char* known[] = {"kind", "n", "k", "universe", "min_winning", "name", "notes"};
        if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
            throw DocumentError("unknown field '" + key + "'");
        }
    }
    bool spec_form = j.contains("kind") || j.contains("n") || j.contains("k");
    bool explicit_form = j.contains("universe") || j.contains("min_winning");
    if (spec_form == explicit_form) {
        throw DocumentError("a document needs exactly one of {kind,n,k} or {universe,min_winning}");
    }
    GameDocument doc;
    doc.name = optional_string(j, "name");
    doc.notes = optional_string(j, "notes");
    try {
        if (spec_form) {
            if (!j.contains("kind") || !j.contains("n") || !j.contains("k")) {
                throw DocumentError("spec documents need kind, n and k");
            }
            if (!j.at("kind").is_string()) {
                throw DocumentError("'kind' must be a string");
            }
            doc.spec.emplace(parse_hier_kind(j.at("kind").get<std::string>()),
                             int_list(j.at("n"), "n"), int_list(j.at("k"), "k"));
        } else {
            if (!j.contains("universe") || !j.contains("min_winning")) {
                throw DocumentError("explicit documents need universe and min_winning");
            }
            Multiset universe(int_list(j.at("universe"), "universe"));
            if (!j.at("min_winning").is_array()) {
                throw DocumentError("'min_winning' must be an array");
            }
            std::vector<Coalition> min_winning;
            for (const auto& c : j.at("min_winning")) {
                min_winning.push_back(parse_coalition(c, universe));
            }
            doc.game.emplace(universe, std::move(min_winning));
        }
    } catch (const DocumentError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw DocumentError(e.what());
    }
    return doc;
}

json spec_json(const HierSpec& spec)
{
    return json{{"kind", to_string(spec.kind())}, {"n", spec.n()}, {"k", spec.k()}};
}

json coalition_json(const Coalition& c)
{
    return json(c.counts);
}

json certificate_json(const RoughCert& cert)
{
    return json{{"quota", to_string(cert.quota)}, {"weights", to_strings(cert.weights)}};
}

json to_json(const GameDocument& doc)
{
    json j;
    if (doc.name) {
        j["name"] = *doc.name;
    }
    if (doc.spec) {
        j.update(spec_json(*doc.spec));
    } else if (doc.game) {
        j["universe"] = doc.game->universe().counts();
        json mw = json::array();
        for (const auto& c : doc.game->min_winning()) {
            mw.push_back(coalition_json(c));
        }
        j["min_winning"] = mw;
    }
    if (doc.notes) {
        j["notes"] = *doc.notes;
    }
    return j;
}

GameDocument parse_document(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DocumentError(std::string("malformed JSON: ") + e.what());
    }
    return document_from_json(j);
}

std::string emit_document(const GameDocument& doc)
{
    return to_json(doc).dump(2);
}

GameDocument read_document_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw DocumentError("cannot read '" + path + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_document(text.str());
}

ExplicitGame document_game(const GameDocument& doc)
{
    if (doc.spec) {
        return realize(*doc.spec);
    }
    if (doc.game) {
        return *doc.game;
    }
    throw DocumentError("empty document");
}

}  // namespace hiergame
