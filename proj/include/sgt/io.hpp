#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgt/game.hpp"
#include "sgt/template.hpp"

namespace sgt {

/// Game plus the file-level extras: priorities and optional vertex
/// names (empty string = unnamed).
struct ParsedGame {
    StochasticGame game;
    PriorityFunction priorities;
    std::vector<std::string> names;

    bool operator==(const ParsedGame&) const = default;
};

/// Grammar:
///   stochastic parity N;
///   id priority owner succ{,succ} ["name"];   (owner 0=Even 1=Odd 2=Random)
/// Ids must cover 0..N-1.  Dead ends, duplicate ids, dangling
/// successors and negative priorities are semantic errors; malformed
/// tokens are parse errors with line/column.
ParsedGame parse_game(std::string_view text);
std::string serialize_game(const ParsedGame& pg);
ParsedGame load_game(const std::string& path);

/// Template document: the template plus the winning set it was
/// computed for, when known.
struct TemplateDoc {
    StrategyTemplate tpl;
    std::optional<VertexSet> winning_set;
};

/// JSON with arrays `prohibited`, `live_groups`, `colive` of [src,dst]
/// pairs and an optional `winning_set` array.
TemplateDoc parse_template(std::string_view json_text, const StochasticGame& g);
std::string serialize_template(const TemplateDoc& doc);
TemplateDoc load_template(const std::string& path, const StochasticGame& g);

void save_file(const std::string& path, std::string_view content);
std::string read_file(const std::string& path);

} // namespace sgt
