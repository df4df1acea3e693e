#include "ganita/output.hpp"

#include <sstream>

namespace ganita::output {

std::string to_string(Status status) {
    switch (status) {
        case Status::ok: return "ok";
        case Status::invalid_input: return "invalid-input";
        case Status::inconclusive: return "inconclusive";
    }
    return "ok";
}

std::string render_text(const Envelope& e) {
    std::ostringstream out;
    for (const std::string& line : e.text) {
        out << line << "\n";
    }
    for (const std::string& note : e.notes) {
        out << "note: " << note << "\n";
    }
    return out.str();
}

std::string render_json(const Envelope& e) {
    Json j;
    j["command"] = e.command;
    j["status"] = to_string(e.status);
    if (e.status != Status::invalid_input) {
        j["result"] = e.result;
    }
    j["notes"] = e.notes;
    return j.dump(2) + "\n";
}

Json solution_json(const vargaprakrti::Solution& s) {
    Json j;
    j["a"] = s.a.str();
    j["b"] = s.b.str();
    j["k"] = s.k.str();
    return j;
}

Json rational_solution_json(const vargaprakrti::RationalSolution& s) {
    Json j;
    j["x"] = ganita::to_string(s.x);
    j["y"] = ganita::to_string(s.y);
    j["k"] = ganita::to_string(s.k);
    return j;
}

namespace {

std::string slot_label(const prosody::GanaSlot& slot) {
    if (slot.kind == prosody::SlotKind::half) {
        return "half";
    }
    return "gana " + std::to_string(slot.index);
}

std::string slot_kind_name(const prosody::GanaSlot& slot) {
    switch (slot.kind) {
        case prosody::SlotKind::full: return "full";
        case prosody::SlotKind::single: return "single";
        case prosody::SlotKind::half: return "half";
    }
    return "full";
}

std::string violation_location(const prosody::Violation& v) {
    if (v.hemistich == 0) {
        return "(verse)";
    }
    std::string loc = "(hemistich " + std::to_string(v.hemistich);
    if (v.gana != 0) {
        loc += ", gana " + std::to_string(v.gana);
    }
    return loc + ")";
}

}  // namespace

Envelope scan_envelope(const prosody::AryaReport& report, const std::string& format) {
    Envelope e;
    e.command = "scan";
    e.notes = report.notes;

    e.text.push_back("matras: " + std::to_string(report.hemistich_matras[0]) +
                     " + " + std::to_string(report.hemistich_matras[1]));
    e.text.push_back("family: " + prosody::to_string(report.family));
    e.text.push_back("classification: " + prosody::to_string(report.classification));
    e.text.push_back("pathya: " + prosody::to_string(report.pathya));
    e.text.push_back("caesura after gana 3: " +
                     prosody::to_string(report.caesura_after_third[0]) + " + " +
                     prosody::to_string(report.caesura_after_third[1]));
    e.text.push_back(std::string("word rules checked: ") +
                     (report.word_rules_checked ? "yes" : "no"));
    for (std::size_t h = 0; h < 2; ++h) {
        e.text.push_back("hemistich " + std::to_string(h + 1) + ":");
        for (const prosody::GanaSlot& slot : report.ganas[h]) {
            std::string words;
            for (int i = 0; i < slot.count; ++i) {
                if (!words.empty()) {
                    words += ' ';
                }
                words += report.syllables[h][static_cast<std::size_t>(slot.first + i)].text;
            }
            e.text.push_back("  " + slot_label(slot) + " [" + slot.pattern + "]  " +
                             words);
        }
    }
    if (report.violations.empty()) {
        e.text.push_back("violations: none");
    } else {
        e.text.push_back("violations:");
        for (const prosody::Violation& v : report.violations) {
            e.text.push_back("  - " + v.rule + " " + violation_location(v) + ": " +
                             v.message);
        }
    }

    Json& r = e.result;
    r["format"] = format;
    r["matras"] = Json::array({std::to_string(report.hemistich_matras[0]),
                               std::to_string(report.hemistich_matras[1])});
    r["family"] = prosody::to_string(report.family);
    r["classification"] = prosody::to_string(report.classification);
    r["pathya"] = prosody::to_string(report.pathya);
    r["caesura_after_gana_3"] =
        Json::array({prosody::to_string(report.caesura_after_third[0]),
                     prosody::to_string(report.caesura_after_third[1])});
    r["word_rules_checked"] = report.word_rules_checked;
    Json hemistichs = Json::array();
    for (std::size_t h = 0; h < 2; ++h) {
        Json half;
        half["matras"] = std::to_string(report.hemistich_matras[h]);
        Json ganas = Json::array();
        for (const prosody::GanaSlot& slot : report.ganas[h]) {
            Json g;
            g["gana"] = std::to_string(slot.index);
            g["kind"] = slot_kind_name(slot);
            g["pattern"] = slot.pattern;
            g["matras"] = std::to_string(slot.matra_count);
            Json syllables = Json::array();
            for (int i = 0; i < slot.count; ++i) {
                syllables.push_back(
                    report.syllables[h][static_cast<std::size_t>(slot.first + i)].text);
            }
            g["syllables"] = syllables;
            ganas.push_back(g);
        }
        half["ganas"] = ganas;
        hemistichs.push_back(half);
    }
    r["hemistichs"] = hemistichs;
    Json violations = Json::array();
    for (const prosody::Violation& v : report.violations) {
        Json j;
        j["rule"] = v.rule;
        j["hemistich"] = std::to_string(v.hemistich);
        j["gana"] = std::to_string(v.gana);
        j["message"] = v.message;
        violations.push_back(j);
    }
    r["violations"] = violations;
    return e;
}

}  // namespace ganita::output
