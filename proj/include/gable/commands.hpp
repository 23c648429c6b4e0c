#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace gable {

/// Command names accepted by execute().
const std::vector<std::string>& command_names();

/// Runs one command on already-parsed inputs and returns its result object.
///
/// Request fields (each command reads the ones it needs): "complex", "sub",
/// "pair", "k", "reduced", "terms", "region", "tower", "covers" (list),
/// "witness", "system", "subset", "point", "t", "suite", "seed", "jobs", "max_k".
/// Throws gable::Error on invalid input; the result of "verify" carries "pass".
nlohmann::json execute(const std::string& command, const nlohmann::json& request);

/// Wraps execute() into a report: {"command", "ok", "result"} or {"command", "ok", "error"}.
nlohmann::json report(const std::string& command, const nlohmann::json& request);

/// Indented plain-text rendering of a report; groups print as "Z^2 + Z/2".
std::string render_text(const nlohmann::json& report);

}  // namespace gable
