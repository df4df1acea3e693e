#pragma once

#include "ganita/karani.hpp"
#include "ganita/prosody.hpp"
#include "ganita/vargaprakrti.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace ganita::output {

using Json = nlohmann::ordered_json;

enum class Status { ok, invalid_input, inconclusive };
std::string to_string(Status status);

/// One command's outcome. `result` is the machine-readable tree (key order
/// fixed, every number a decimal string); `text` the human-readable lines.
struct Envelope {
    std::string command;
    Status status = Status::ok;
    Json result = Json::object();
    std::vector<std::string> notes;
    std::vector<std::string> text;
};

/// Byte-stable rendering; golden files compare against these.
std::string render_text(const Envelope& e);
std::string render_json(const Envelope& e);

Envelope scan_envelope(const prosody::AryaReport& report, const std::string& format);

Json solution_json(const vargaprakrti::Solution& s);
Json rational_solution_json(const vargaprakrti::RationalSolution& s);

}  // namespace ganita::output
