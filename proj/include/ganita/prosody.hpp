#pragma once

#include "ganita/numbers.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ganita::prosody {

enum class Weight : char { light = 'l', heavy = 'g' };

struct Syllable {
    Weight weight = Weight::light;
    std::string text;  // source slice; the weight letter for direct input
    std::optional<std::pair<std::size_t, std::size_t>> span;  // byte range
    std::optional<bool> word_initial;  // unset when boundaries are unknown
    // An open short syllable closing a hemistich scans as either weight;
    // validation counts it heavy and leaves a note.
    bool final_anceps = false;

    int matras() const { return weight == Weight::heavy ? 2 : 1; }
    bool operator==(const Syllable&) const = default;
};

/// A verse: two hemistichs of weighed syllables. A missing second hemistich
/// (input without '|') is represented as an empty sequence.
struct Verse {
    std::array<std::vector<Syllable>, 2> hemistichs;
};

/// Direct weight input: 'l'/'g' (case-insensitive), spaces ignored,
/// '.' marks a word boundary before the next syllable, exactly one '|'
/// separates hemistichs, optional trailing '||'.
Verse parse_lg(const std::string& text);

/// Canonical text form of a verse; inverse of parse_lg on its own output.
std::string render_lg(const Verse& verse);

/// IAST input, composed normalization. Whitespace and '-' mark word
/// boundaries; '|' and '||' as in parse_lg but a missing '|' is accepted
/// (single-hemistich fragment). A syllable is heavy when its vowel is long
/// (a macron vowel, e, o, ai, au), carries anusvara or visarga, or is
/// followed by two or more consonants before the next vowel (hemistich-final
/// consonants close their syllable).
Verse weigh_iast(const std::string& text);

enum class Family { arya, giti, upagiti, udgiti, aryagiti, invalid };
enum class Pathya { pathya, vipula, unknown };
enum class Tern { yes, no, unknown };

/// Hemistich matra totals to family: (30,27) arya, (30,30) giti,
/// (27,27) upagiti, (27,30) udgiti, (32,32) aryagiti.
Family classify_family(int first_half_matras, int second_half_matras);

/// Matra schedule of one hemistich.
enum class HalfSchedule {
    standard30,  // 7 x 4 + 2
    short27,     // 5 x 4 + 1 + 4 + 2, the 1-matra slot an isolated light
    full32,      // 8 x 4
};
HalfSchedule schedule_for(Family family, int half);

enum class SlotKind { full, single, half };

struct GanaSlot {
    int index = 0;  // 1..8 within the hemistich
    SlotKind kind = SlotKind::full;
    int first = -1;  // index of the first syllable, -1 when empty
    int count = 0;
    int matra_count = 0;
    std::string pattern;  // weight letters, e.g. "llg"
    bool split = false;   // a syllable straddles this slot's boundary
    bool operator==(const GanaSlot&) const = default;
};

struct Violation {
    std::string rule;  // "IV.14".."IV.21", "IV.16-17" or "boundary-split"
    int hemistich = 0;  // 1 or 2; 0 for the verse as a whole
    int gana = 0;       // 0 when not tied to a slot
    std::string message;
    bool operator==(const Violation&) const = default;
};

struct Segmentation {
    std::vector<GanaSlot> slots;
    std::vector<Violation> violations;
};

/// Left-to-right grouping of a hemistich into the given schedule's slots.
/// A syllable whose matras straddle a slot boundary is kept in the current
/// slot and flagged (boundary-split; IV.21 for the isolated-light slot).
/// Total-matra mismatches are the caller's to record.
Segmentation segment_ganas(const std::vector<Syllable>& hemistich, int half,
                           HalfSchedule schedule);
Segmentation segment_ganas(const std::vector<Syllable>& hemistich, int half,
                           Family family);

struct AryaReport {
    std::array<int, 2> hemistich_matras{0, 0};
    std::array<std::vector<Syllable>, 2> syllables;  // effective weights
    std::array<std::vector<GanaSlot>, 2> ganas;
    std::vector<Violation> violations;
    bool word_rules_checked = false;
    std::array<Tern, 2> caesura_after_third{Tern::unknown, Tern::unknown};
    Family family = Family::invalid;          // schedule attempted from totals
    Family classification = Family::invalid;  // family iff violations empty
    Pathya pathya = Pathya::unknown;
    std::vector<std::string> notes;
};

/// Full rule check: matra schedule per family, gana segmentation, the odd-
/// gana / sixth-gana rules, the word-start rules when boundaries are known,
/// caesura and pathya/vipula status.
AryaReport validate_arya(const Verse& verse);

std::string to_string(Family f);
std::string to_string(Pathya p);
std::string to_string(Tern t);

}  // namespace ganita::prosody
