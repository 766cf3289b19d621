#pragma once

// JSON game documents: {"kind","n","k"} or {"universe","min_winning"},
// with optional "name" and "notes".

#include <optional>
#include <string>

#include "json.hpp"

#include "hiergame/hierarchy.hpp"
#include "hiergame/lp_oracle.hpp"
#include "hiergame/multiset.hpp"

namespace hiergame {

class DocumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct GameDocument {
    std::optional<HierSpec> spec;
    std::optional<ExplicitGame> game;
    std::optional<std::string> name;
    std::optional<std::string> notes;

    bool operator==(const GameDocument&) const = default;
};

GameDocument document_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json to_json(const GameDocument& doc);

GameDocument parse_document(const std::string& text);
std::string emit_document(const GameDocument& doc);
GameDocument read_document_file(const std::string& path);

/// The explicit game a document describes.
ExplicitGame document_game(const GameDocument& doc);

nlohmann::ordered_json spec_json(const HierSpec& spec);
nlohmann::ordered_json certificate_json(const RoughCert& cert);
nlohmann::ordered_json coalition_json(const Coalition& c);

}  // namespace hiergame
