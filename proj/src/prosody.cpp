#include "ganita/prosody.hpp"

#include <algorithm>
#include <cctype>

namespace ganita::prosody {

namespace {

// ---------------------------------------------------------------------------
// Direct weight (LG) input
// ---------------------------------------------------------------------------

bool is_lg_space(char32_t c) {
    return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r';
}

}  // namespace

Verse parse_lg(const std::string& text) {
    // LG text is ASCII; positions are 1-based character indices.
    std::string body = text;
    while (!body.empty() && is_lg_space(static_cast<unsigned char>(body.back()))) {
        body.pop_back();
    }
    if (body.size() >= 2 && body.substr(body.size() - 2) == "||") {
        body.resize(body.size() - 2);
    }

    Verse verse;
    bool dots_seen = body.find('.') != std::string::npos;
    int hemistich = 0;
    bool boundary_pending = true;  // a hemistich opens a word
    for (std::size_t i = 0; i < body.size(); ++i) {
        char c = body[i];
        if (is_lg_space(c)) {
            continue;
        }
        if (c == '.') {
            boundary_pending = true;
            continue;
        }
        if (c == '|') {
            if (hemistich == 1) {
                throw ParseError("more than one hemistich separator '|'", i + 1);
            }
            hemistich = 1;
            boundary_pending = true;
            continue;
        }
        char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (lower != 'l' && lower != 'g') {
            throw ParseError(std::string("illegal character '") + c + "' in weight text",
                             i + 1);
        }
        Syllable s;
        s.weight = lower == 'l' ? Weight::light : Weight::heavy;
        s.text = lower;
        if (dots_seen) {
            s.word_initial = boundary_pending;
        }
        boundary_pending = false;
        verse.hemistichs[static_cast<std::size_t>(hemistich)].push_back(std::move(s));
    }
    if (hemistich == 0) {
        throw ParseError("missing hemistich separator '|'", body.size() + 1);
    }
    return verse;
}

std::string render_lg(const Verse& verse) {
    std::string out;
    for (std::size_t h = 0; h < 2; ++h) {
        if (h == 1) {
            out += " | ";
        }
        for (const Syllable& s : verse.hemistichs[h]) {
            if (s.word_initial == true) {
                out += '.';
            }
            out += static_cast<char>(s.weight);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// IAST input
// ---------------------------------------------------------------------------

namespace {

struct CodePoint {
    char32_t value;
    std::size_t byte_start;
    std::size_t byte_end;
};

std::vector<CodePoint> decode_utf8(const std::string& text) {
    std::vector<CodePoint> out;
    std::size_t i = 0;
    while (i < text.size()) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        char32_t value = 0;
        std::size_t len = 0;
        if (c < 0x80) {
            value = c;
            len = 1;
        } else if ((c & 0xE0) == 0xC0) {
            value = c & 0x1F;
            len = 2;
        } else if ((c & 0xF0) == 0xE0) {
            value = c & 0x0F;
            len = 3;
        } else if ((c & 0xF8) == 0xF0) {
            value = c & 0x07;
            len = 4;
        } else {
            throw ParseError("invalid UTF-8 byte", out.size() + 1);
        }
        if (i + len > text.size()) {
            throw ParseError("truncated UTF-8 sequence", out.size() + 1);
        }
        for (std::size_t j = 1; j < len; ++j) {
            unsigned char cont = static_cast<unsigned char>(text[i + j]);
            if ((cont & 0xC0) != 0x80) {
                throw ParseError("invalid UTF-8 continuation byte", out.size() + 1);
            }
            value = (value << 6) | (cont & 0x3F);
        }
        out.push_back({value, i, i + len});
        i += len;
    }
    return out;
}

enum class PhonemeKind { vowel, consonant, anusvara, visarga };

struct Phoneme {
    PhonemeKind kind = PhonemeKind::consonant;
    bool long_vowel = false;
    std::size_t byte_start = 0;
    std::size_t byte_end = 0;
    bool after_boundary = false;  // a word boundary sits immediately before
};

bool is_short_vowel(char32_t c) {
    return c == U'a' || c == U'i' || c == U'u' || c == 0x1E5B /* r underdot */ ||
           c == 0x1E37 /* l underdot */;
}

bool is_long_vowel(char32_t c) {
    return c == 0x0101 /* a macron */ || c == 0x012B /* i macron */ ||
           c == 0x016B /* u macron */ || c == 0x1E5D /* r underdot macron */ ||
           c == 0x1E39 /* l underdot macron */ || c == U'e' || c == U'o';
}

bool is_plain_consonant(char32_t c) {
    switch (c) {
        case U'k': case U'g': case U'c': case U'j':
        case U't': case U'd': case U'p': case U'b':
        case U'n': case U'm': case U'y': case U'r':
        case U'l': case U'v': case U's': case U'h':
        case 0x1E45:  // n dot above
        case 0x00F1:  // n tilde
        case 0x1E6D:  // t underdot
        case 0x1E0D:  // d underdot
        case 0x1E47:  // n underdot
        case 0x015B:  // s acute
        case 0x1E63:  // s underdot
            return true;
        default:
            return false;
    }
}

// Consonants that form an aspirate with a following 'h'.
bool takes_aspiration(char32_t c) {
    switch (c) {
        case U'k': case U'g': case U'c': case U'j':
        case U't': case U'd': case U'p': case U'b':
        case 0x1E6D: case 0x1E0D:
            return true;
        default:
            return false;
    }
}

bool is_word_boundary_char(char32_t c) {
    return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'-';
}

bool is_avagraha(char32_t c) {
    return c == U'\'' || c == 0x2019 || c == 0x02BC;
}

struct LexedVerse {
    std::array<std::vector<Phoneme>, 2> hemistichs;
};

LexedVerse lex_iast(const std::string& text) {
    std::vector<CodePoint> cps = decode_utf8(text);
    // Drop a trailing "||" terminator (with trailing whitespace).
    std::size_t end = cps.size();
    while (end > 0 && is_word_boundary_char(cps[end - 1].value)) {
        --end;
    }
    if (end >= 2 && cps[end - 1].value == U'|' && cps[end - 2].value == U'|') {
        end -= 2;
    }

    LexedVerse verse;
    int hemistich = 0;
    bool boundary_pending = false;
    std::size_t i = 0;
    while (i < end) {
        const CodePoint& cp = cps[i];
        char32_t c = cp.value;
        if (is_word_boundary_char(c)) {
            boundary_pending = true;
            ++i;
            continue;
        }
        if (is_avagraha(c)) {
            ++i;
            continue;
        }
        if (c == U'|') {
            if (hemistich == 1) {
                throw ParseError("more than one hemistich separator '|'", i + 1);
            }
            hemistich = 1;
            boundary_pending = true;
            ++i;
            continue;
        }

        Phoneme ph;
        ph.byte_start = cp.byte_start;
        ph.byte_end = cp.byte_end;
        ph.after_boundary = boundary_pending;
        boundary_pending = false;

        if (is_short_vowel(c) || is_long_vowel(c)) {
            ph.kind = PhonemeKind::vowel;
            ph.long_vowel = is_long_vowel(c);
            // diphthongs ai, au
            if (c == U'a' && i + 1 < end &&
                (cps[i + 1].value == U'i' || cps[i + 1].value == U'u')) {
                ph.long_vowel = true;
                ph.byte_end = cps[i + 1].byte_end;
                ++i;
            }
        } else if (c == 0x1E43 || c == 0x1E41) {  // m underdot / m dot above
            ph.kind = PhonemeKind::anusvara;
        } else if (c == 0x1E25) {  // h underdot
            ph.kind = PhonemeKind::visarga;
        } else if (is_plain_consonant(c)) {
            ph.kind = PhonemeKind::consonant;
            if (takes_aspiration(c) && i + 1 < end && cps[i + 1].value == U'h') {
                ph.byte_end = cps[i + 1].byte_end;
                ++i;
            }
        } else {
            throw ParseError("unrecognized character in IAST text", i + 1);
        }
        verse.hemistichs[static_cast<std::size_t>(hemistich)].push_back(ph);
        ++i;
    }
    return verse;
}

std::vector<Syllable> syllabify(const std::vector<Phoneme>& phonemes,
                                const std::string& source) {
    std::vector<Syllable> out;
    if (phonemes.empty()) {
        return out;
    }

    std::vector<std::size_t> vowels;
    for (std::size_t i = 0; i < phonemes.size(); ++i) {
        if (phonemes[i].kind == PhonemeKind::vowel) {
            vowels.push_back(i);
        }
    }
    if (vowels.empty()) {
        throw ParseError("hemistich contains no vowel", 1);
    }

    std::size_t next_start = 0;  // first phoneme of the upcoming syllable
    for (std::size_t v = 0; v < vowels.size(); ++v) {
        const std::size_t pv = vowels[v];
        const bool last = v + 1 == vowels.size();

        // marks directly after the vowel
        std::size_t after = pv + 1;
        bool has_mark = false;
        while (after < phonemes.size() &&
               (phonemes[after].kind == PhonemeKind::anusvara ||
                phonemes[after].kind == PhonemeKind::visarga)) {
            has_mark = true;
            ++after;
        }
        // consonant run up to the next vowel (or the end)
        const std::size_t run_begin = after;
        std::size_t run_end = run_begin;
        while (run_end < phonemes.size() &&
               phonemes[run_end].kind == PhonemeKind::consonant) {
            ++run_end;
        }
        const std::size_t run_size = run_end - run_begin;

        Syllable s;
        bool position_heavy = last ? run_size >= 1 : run_size >= 2;
        s.weight = (phonemes[pv].long_vowel || has_mark || position_heavy)
                       ? Weight::heavy
                       : Weight::light;
        s.final_anceps =
            last && !phonemes[pv].long_vowel && !has_mark && run_size == 0;

        // Where the coda ends: at a word boundary inside the run if there is
        // one, otherwise one consonant stays as coda (none for a lone
        // consonant, which onsets the next syllable). Weights never depend
        // on this split.
        std::size_t coda_len;
        if (last) {
            coda_len = run_size;
        } else {
            coda_len = run_size >= 2 ? 1 : 0;
            for (std::size_t j = 0; j <= run_size; ++j) {
                const Phoneme& at = j < run_size ? phonemes[run_begin + j]
                                                 : phonemes[vowels[v + 1]];
                if (at.after_boundary) {
                    coda_len = j;
                    break;
                }
            }
        }

        const std::size_t syll_end = run_begin + coda_len;  // one past the last phoneme
        s.span = {phonemes[next_start].byte_start, phonemes[syll_end - 1].byte_end};
        s.text = source.substr(s.span->first, s.span->second - s.span->first);
        s.word_initial = out.empty() || phonemes[next_start].after_boundary;
        out.push_back(std::move(s));
        next_start = syll_end;
    }
    return out;
}

}  // namespace

Verse weigh_iast(const std::string& text) {
    LexedVerse lexed = lex_iast(text);
    Verse verse;
    for (std::size_t h = 0; h < 2; ++h) {
        verse.hemistichs[h] = syllabify(lexed.hemistichs[h], text);
    }
    return verse;
}

// ---------------------------------------------------------------------------
// Gana segmentation and rule checks
// ---------------------------------------------------------------------------

Family classify_family(int m1, int m2) {
    if (m1 == 30 && m2 == 27) return Family::arya;
    if (m1 == 30 && m2 == 30) return Family::giti;
    if (m1 == 27 && m2 == 27) return Family::upagiti;
    if (m1 == 27 && m2 == 30) return Family::udgiti;
    if (m1 == 32 && m2 == 32) return Family::aryagiti;
    return Family::invalid;
}

HalfSchedule schedule_for(Family family, int half) {
    switch (family) {
        case Family::arya:
            return half == 1 ? HalfSchedule::standard30 : HalfSchedule::short27;
        case Family::giti:
            return HalfSchedule::standard30;
        case Family::upagiti:
            return HalfSchedule::short27;
        case Family::udgiti:
            return half == 1 ? HalfSchedule::short27 : HalfSchedule::standard30;
        case Family::aryagiti:
            return HalfSchedule::full32;
        case Family::invalid:
            break;
    }
    return HalfSchedule::standard30;
}

namespace {

struct SlotSpec {
    SlotKind kind;
    int size;
};

std::vector<SlotSpec> slot_specs(HalfSchedule schedule) {
    switch (schedule) {
        case HalfSchedule::standard30:
            return {{SlotKind::full, 4}, {SlotKind::full, 4}, {SlotKind::full, 4},
                    {SlotKind::full, 4}, {SlotKind::full, 4}, {SlotKind::full, 4},
                    {SlotKind::full, 4}, {SlotKind::half, 2}};
        case HalfSchedule::short27:
            return {{SlotKind::full, 4},   {SlotKind::full, 4}, {SlotKind::full, 4},
                    {SlotKind::full, 4},   {SlotKind::full, 4}, {SlotKind::single, 1},
                    {SlotKind::full, 4},   {SlotKind::half, 2}};
        case HalfSchedule::full32:
            return std::vector<SlotSpec>(8, SlotSpec{SlotKind::full, 4});
    }
    return {};
}

int schedule_total(HalfSchedule schedule) {
    switch (schedule) {
        case HalfSchedule::standard30: return 30;
        case HalfSchedule::short27: return 27;
        case HalfSchedule::full32: return 32;
    }
    return 0;
}

}  // namespace

Segmentation segment_ganas(const std::vector<Syllable>& hemistich, int half,
                           HalfSchedule schedule) {
    const std::vector<SlotSpec> specs = slot_specs(schedule);
    Segmentation result;

    GanaSlot slot;
    std::size_t spec_index = 0;
    auto open_slot = [&] {
        slot = GanaSlot{};
        slot.index = static_cast<int>(spec_index + 1);
        slot.kind = spec_index < specs.size() ? specs[spec_index].kind : SlotKind::full;
    };
    auto close_slot = [&] {
        if (slot.count > 0) {
            result.slots.push_back(slot);
        }
        ++spec_index;
        open_slot();
    };
    open_slot();

    for (std::size_t i = 0; i < hemistich.size(); ++i) {
        const Syllable& s = hemistich[i];
        if (spec_index >= specs.size()) {
            // Overflow past the schedule; collect the rest in one slot so
            // the matra accounting stays visible.
            if (slot.first < 0) {
                slot.first = static_cast<int>(i);
            }
            ++slot.count;
            slot.matra_count += s.matras();
            slot.pattern += static_cast<char>(s.weight);
            continue;
        }
        const int size = specs[spec_index].size;
        if (slot.matra_count + s.matras() > size) {
            // The syllable straddles the slot boundary.
            if (specs[spec_index].kind == SlotKind::single) {
                result.violations.push_back(
                    {"IV.21", half, slot.index,
                     "the sixth group of the final half must be an isolated light "
                     "syllable"});
            } else {
                result.violations.push_back(
                    {"boundary-split", half, slot.index,
                     "a heavy syllable straddles the boundary of gana " +
                         std::to_string(slot.index)});
            }
            if (slot.first < 0) {
                slot.first = static_cast<int>(i);
            }
            ++slot.count;
            slot.matra_count += s.matras();
            slot.pattern += static_cast<char>(s.weight);
            slot.split = true;
            close_slot();
            continue;
        }
        if (slot.first < 0) {
            slot.first = static_cast<int>(i);
        }
        ++slot.count;
        slot.matra_count += s.matras();
        slot.pattern += static_cast<char>(s.weight);
        if (slot.matra_count == size) {
            close_slot();
        }
    }
    if (slot.count > 0) {
        result.slots.push_back(slot);
    }
    return result;
}

Segmentation segment_ganas(const std::vector<Syllable>& hemistich, int half,
                           Family family) {
    return segment_ganas(hemistich, half, schedule_for(family, half));
}

namespace {

int matra_total(const std::vector<Syllable>& hemistich) {
    int total = 0;
    for (const Syllable& s : hemistich) {
        total += s.matras();
    }
    return total;
}

const GanaSlot* find_slot(const std::vector<GanaSlot>& slots, int index) {
    for (const GanaSlot& slot : slots) {
        if (slot.index == index) {
            return &slot;
        }
    }
    return nullptr;
}

HalfSchedule fallback_schedule(int total) {
    switch (total) {
        case 27: return HalfSchedule::short27;
        case 32: return HalfSchedule::full32;
        default: return HalfSchedule::standard30;
    }
}

}  // namespace

AryaReport validate_arya(const Verse& verse) {
    AryaReport report;
    report.syllables = verse.hemistichs;

    // Hemistich-final anceps: counted heavy, noted.
    for (std::size_t h = 0; h < 2; ++h) {
        auto& syllables = report.syllables[h];
        if (!syllables.empty() && syllables.back().final_anceps &&
            syllables.back().weight == Weight::light) {
            syllables.back().weight = Weight::heavy;
            report.notes.push_back("hemistich " + std::to_string(h + 1) +
                                   ": final light syllable counted heavy");
        }
    }

    report.hemistich_matras = {matra_total(report.syllables[0]),
                               matra_total(report.syllables[1])};
    const int m1 = report.hemistich_matras[0];
    const int m2 = report.hemistich_matras[1];
    report.family = classify_family(m1, m2);

    std::array<HalfSchedule, 2> schedules;
    if (report.family != Family::invalid) {
        schedules = {schedule_for(report.family, 1), schedule_for(report.family, 2)};
    } else {
        schedules = {fallback_schedule(m1), fallback_schedule(m2)};
        bool half_reported = false;
        for (std::size_t h = 0; h < 2; ++h) {
            int total = report.hemistich_matras[h];
            if (total != 30 && total != 27 && total != 32) {
                report.violations.push_back(
                    {"IV.14", static_cast<int>(h + 1), 0,
                     "hemistich carries " + std::to_string(total) +
                         " matras; no arya-family half admits that count"});
                half_reported = true;
            }
        }
        if (!half_reported) {
            report.violations.push_back(
                {"IV.14", 0, 0,
                 "hemistich totals (" + std::to_string(m1) + ", " +
                     std::to_string(m2) + ") fit no arya family"});
        }
    }

    bool boundaries_known = true;
    for (std::size_t h = 0; h < 2; ++h) {
        for (const Syllable& s : report.syllables[h]) {
            if (!s.word_initial.has_value()) {
                boundaries_known = false;
            }
        }
    }
    report.word_rules_checked = boundaries_known;

    for (std::size_t h = 0; h < 2; ++h) {
        const int half = static_cast<int>(h + 1);
        const auto& syllables = report.syllables[h];
        Segmentation seg = segment_ganas(syllables, half, schedules[h]);
        report.ganas[h] = seg.slots;
        for (Violation& v : seg.violations) {
            report.violations.push_back(std::move(v));
        }
        if (report.family != Family::invalid &&
            matra_total(syllables) != schedule_total(schedules[h])) {
            // Unreachable while classify_family and the schedules agree.
            report.violations.push_back({"IV.14", half, 0, "matra total mismatch"});
        }

        const auto word_initial_at = [&](const GanaSlot& slot, int offset) {
            return syllables[static_cast<std::size_t>(slot.first + offset)]
                       .word_initial == true;
        };

        // no jagana in odd ganas
        for (const GanaSlot& slot : seg.slots) {
            if (slot.kind == SlotKind::full && slot.index % 2 == 1 &&
                slot.pattern == "lgl") {
                report.violations.push_back(
                    {"IV.15", half, slot.index, "jagana (lgl) in an odd gana"});
            }
        }
        // the sixth gana of a 30-matra half is a jagana or a nagana-la
        if (schedules[h] == HalfSchedule::standard30) {
            if (const GanaSlot* sixth = find_slot(seg.slots, 6)) {
                if (sixth->pattern != "lgl" && sixth->pattern != "llll") {
                    report.violations.push_back(
                        {"IV.16-17", half, 6,
                         "the sixth gana must be a jagana (lgl) or a nagana-la "
                         "(llll), found " +
                             sixth->pattern});
                }
            }
        }
        if (boundaries_known) {
            // word-start rules inside a nagana-la
            if (const GanaSlot* sixth = find_slot(seg.slots, 6)) {
                if (sixth->kind == SlotKind::full && sixth->pattern == "llll" &&
                    !word_initial_at(*sixth, 1)) {
                    report.violations.push_back(
                        {"IV.18", half, 6,
                         "a word must start at the second light of a nagana-la in "
                         "the sixth gana"});
                }
            }
            if (const GanaSlot* seventh = find_slot(seg.slots, 7)) {
                if (seventh->kind == SlotKind::full && seventh->pattern == "llll" &&
                    !word_initial_at(*seventh, 0)) {
                    report.violations.push_back(
                        {"IV.19", half, 7,
                         "a word must start at the first light of a nagana-la in "
                         "the seventh gana"});
                }
            }
            if (half == 2) {
                if (const GanaSlot* fifth = find_slot(seg.slots, 5)) {
                    if (fifth->pattern == "llll" && !word_initial_at(*fifth, 0)) {
                        report.violations.push_back(
                            {"IV.20", half, 5,
                             "a word must start at the first light of a nagana-la "
                             "in the fifth gana of the final half"});
                    }
                }
            }
        }

        // caesura after the third gana: the first twelve matras close exactly
        // at a gana boundary and the next syllable opens a word
        if (boundaries_known) {
            Tern caesura = Tern::no;
            int before = 0;
            for (const GanaSlot& slot : seg.slots) {
                if (slot.index < 4) {
                    before += slot.matra_count;
                }
            }
            const GanaSlot* fourth = find_slot(seg.slots, 4);
            if (before == 12 && fourth != nullptr && fourth->count > 0 &&
                word_initial_at(*fourth, 0)) {
                caesura = Tern::yes;
            }
            report.caesura_after_third[h] = caesura;
        }

        // half-gana realized as two lights: worth a note, not a violation
        if (const GanaSlot* last = find_slot(seg.slots, 8)) {
            if (last->kind == SlotKind::half && last->pattern == "ll") {
                report.notes.push_back("hemistich " + std::to_string(half) +
                                       ": half-gana realized as two lights");
            }
        }
    }

    if (boundaries_known) {
        report.pathya = (report.caesura_after_third[0] == Tern::yes &&
                         report.caesura_after_third[1] == Tern::yes)
                            ? Pathya::pathya
                            : Pathya::vipula;
    }
    report.classification =
        report.violations.empty() ? report.family : Family::invalid;
    return report;
}

std::string to_string(Family f) {
    switch (f) {
        case Family::arya: return "arya";
        case Family::giti: return "giti";
        case Family::upagiti: return "upagiti";
        case Family::udgiti: return "udgiti";
        case Family::aryagiti: return "aryagiti";
        case Family::invalid: return "invalid";
    }
    return "invalid";
}

std::string to_string(Pathya p) {
    switch (p) {
        case Pathya::pathya: return "pathya";
        case Pathya::vipula: return "vipula";
        case Pathya::unknown: return "unknown";
    }
    return "unknown";
}

std::string to_string(Tern t) {
    switch (t) {
        case Tern::yes: return "yes";
        case Tern::no: return "no";
        case Tern::unknown: return "unknown";
    }
    return "unknown";
}

}  // namespace ganita::prosody
