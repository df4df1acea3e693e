#include "ganita/prosody.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace ganita;
using namespace ganita::prosody;

namespace {

std::string weights_of(const std::vector<Syllable>& syllables) {
    std::string out;
    for (const Syllable& s : syllables) {
        out += static_cast<char>(s.weight);
    }
    return out;
}

std::vector<std::string> patterns_of(const std::vector<GanaSlot>& slots) {
    std::vector<std::string> out;
    out.reserve(slots.size());
    for (const GanaSlot& slot : slots) {
        out.push_back(slot.pattern);
    }
    return out;
}

int total_matras(const std::vector<Syllable>& syllables) {
    int total = 0;
    for (const Syllable& s : syllables) {
        total += s.matras();
    }
    return total;
}

bool has_violation(const AryaReport& report, const std::string& rule,
                   int hemistich, int gana) {
    for (const Violation& v : report.violations) {
        if (v.rule == rule && v.hemistich == hemistich && v.gana == gana) {
            return true;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("parse_lg reads weights, dots and the hemistich bar") {
    Verse v = parse_lg("gll gll | gll gll");
    CHECK(v.hemistichs[0].size() == 6);
    CHECK(v.hemistichs[1].size() == 6);
    CHECK(weights_of(v.hemistichs[0]) == "gllgll");
    CHECK_FALSE(v.hemistichs[0][0].word_initial.has_value());  // no dots: unknown

    Verse dotted = parse_lg("l.gl | gg");
    CHECK(weights_of(dotted.hemistichs[0]) == "lgl");
    CHECK(dotted.hemistichs[0][0].word_initial == true);  // hemistich opens a word
    CHECK(dotted.hemistichs[0][1].word_initial == true);
    CHECK(dotted.hemistichs[0][2].word_initial == false);
    CHECK(dotted.hemistichs[1][0].word_initial == true);

    CHECK(parse_lg("GLLG | gg ||").hemistichs[0].size() == 4);
}

TEST_CASE("parse_lg reports bad input with positions") {
    try {
        parse_lg("glx | gg");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position == 3);
    }
    CHECK_THROWS_AS(parse_lg("gll gll"), ParseError);       // missing bar
    CHECK_THROWS_AS(parse_lg("g | g | g"), ParseError);     // two bars
}

TEST_CASE("render_lg is a left inverse of parse_lg on canonical text") {
    for (const std::string text :
         {"gll gll | gll gll", "l.gl | gg", ".gg.llg | .ll.g", "gg|ll"}) {
        Verse v = parse_lg(text);
        std::string canonical = render_lg(v);
        Verse reparsed = parse_lg(canonical);
        CHECK(render_lg(reparsed) == canonical);
        CHECK(reparsed.hemistichs[0] == v.hemistichs[0]);
        CHECK(reparsed.hemistichs[1] == v.hemistichs[1]);
    }
}

TEST_CASE("weigh_iast reproduces the name-scansion anchors") {
    Verse a = weigh_iast("āryabhaṭastviha");
    CHECK(weights_of(a.hemistichs[0]) == "gllgll");
    CHECK(a.hemistichs[1].empty());

    Verse b = weigh_iast("āryabhaṭṭastviha");
    CHECK(weights_of(b.hemistichs[0]) == "glggll");
}

TEST_CASE("weigh_iast weighs by vowel length, marks and clusters") {
    // visarga closes, single consonants do not
    CHECK(weights_of(weigh_iast("gaṇakaḥ saḥ").hemistichs[0]) == "llgg");
    // anusvara makes the syllable heavy
    CHECK(weights_of(weigh_iast("viṃśatiṃ yaḥ").hemistichs[0]) == "glgg");
    // cluster across a word boundary still makes position
    CHECK(weights_of(weigh_iast("ca tvam").hemistichs[0]) == "gg");
    // diphthongs are long
    CHECK(weights_of(weigh_iast("aṣṭau ca").hemistichs[0]) == "ggl");
    CHECK(weights_of(weigh_iast("e o ai au").hemistichs[0]) == "gggg");
    // a lone final consonant closes its hemistich-final syllable
    CHECK(weights_of(weigh_iast("kam").hemistichs[0]) == "g");
}

TEST_CASE("weigh_iast splits syllables maximizing onsets") {
    Verse v = weigh_iast("āryabhaṭastviha");
    std::vector<std::string> texts;
    for (const Syllable& s : v.hemistichs[0]) {
        texts.push_back(s.text);
    }
    CHECK(texts == std::vector<std::string>{"ār", "ya", "bha", "ṭas", "tvi", "ha"});
}

TEST_CASE("weigh_iast marks word-initial syllables from whitespace and hyphens") {
    Verse v = weigh_iast("mūlam anyo guṇa-pada");
    const auto& h = v.hemistichs[0];
    REQUIRE(h.size() == 8);
    CHECK(h[0].word_initial == true);   // mū
    CHECK(h[1].word_initial == false);  // lam (the next word begins at its vowel)
    CHECK(h[2].word_initial == true);   // an
    CHECK(h[3].word_initial == false);  // yo
    CHECK(h[4].word_initial == true);   // gu
    CHECK(h[6].word_initial == true);   // pa after the hyphen
}

TEST_CASE("weigh_iast flags the final open short syllable as anceps") {
    Verse v = weigh_iast("bhavati | gaṇakaḥ");
    CHECK(v.hemistichs[0].back().final_anceps);
    CHECK(v.hemistichs[0].back().weight == Weight::light);
    CHECK_FALSE(v.hemistichs[1].back().final_anceps);  // closed by visarga
}

TEST_CASE("weigh_iast rejects foreign characters with a position") {
    try {
        weigh_iast("gaxṇa");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position == 3);
    }
}

TEST_CASE("classify_family maps hemistich totals") {
    CHECK(classify_family(30, 27) == Family::arya);
    CHECK(classify_family(30, 30) == Family::giti);
    CHECK(classify_family(27, 27) == Family::upagiti);
    CHECK(classify_family(27, 30) == Family::udgiti);
    CHECK(classify_family(32, 32) == Family::aryagiti);
    CHECK(classify_family(28, 27) == Family::invalid);
}

TEST_CASE("segment_ganas groups an all-heavy standard half") {
    Verse v = parse_lg("ggggggggggggggg | g");
    Segmentation seg =
        segment_ganas(v.hemistichs[0], 1, HalfSchedule::standard30);
    REQUIRE(seg.slots.size() == 8);
    for (int i = 0; i < 7; ++i) {
        CHECK(seg.slots[i].pattern == "gg");
        CHECK(seg.slots[i].matra_count == 4);
    }
    CHECK(seg.slots[7].kind == SlotKind::half);
    CHECK(seg.slots[7].pattern == "g");
    CHECK(seg.violations.empty());
}

TEST_CASE("segment_ganas picks the schedule from family and half") {
    Verse v = parse_lg("ggggggggggggggg | g");
    CHECK(segment_ganas(v.hemistichs[0], 1, Family::arya).slots.size() == 8);
    CHECK(segment_ganas(v.hemistichs[0], 2, Family::giti).slots[7].kind ==
          SlotKind::half);
    CHECK(segment_ganas(v.hemistichs[0], 2, Family::arya).slots[5].kind ==
          SlotKind::single);
    CHECK(segment_ganas(v.hemistichs[0], 1, Family::aryagiti).slots[7].kind ==
          SlotKind::full);
}

TEST_CASE("segment_ganas flags a straddling heavy syllable") {
    Verse v = parse_lg("glg gll | gg");
    Segmentation seg = segment_ganas(v.hemistichs[0], 2, HalfSchedule::short27);
    REQUIRE_FALSE(seg.violations.empty());
    CHECK(seg.violations[0].rule == "boundary-split");
    CHECK(seg.violations[0].gana == 1);
    CHECK(seg.slots[0].matra_count == 5);
}

TEST_CASE("segment_ganas conserves matras under every schedule") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Syllable> syllables;
        int count = static_cast<int>(rng() % 25) + 1;
        for (int i = 0; i < count; ++i) {
            Syllable s;
            s.weight = rng() % 2 == 0 ? Weight::light : Weight::heavy;
            s.text = static_cast<char>(s.weight);
            syllables.push_back(s);
        }
        for (HalfSchedule schedule : {HalfSchedule::standard30,
                                      HalfSchedule::short27, HalfSchedule::full32}) {
            Segmentation seg = segment_ganas(syllables, 1, schedule);
            int slot_total = 0;
            for (const GanaSlot& slot : seg.slots) {
                slot_total += slot.matra_count;
            }
            REQUIRE(slot_total == total_matras(syllables));
        }
    }
}

TEST_CASE("segment_ganas flags a heavy on the isolated-light slot") {
    // 5 x 4 matras, then a heavy where the single light belongs
    Verse v = parse_lg("gg gg gg gg gg g llg g | gg");
    Segmentation seg = segment_ganas(v.hemistichs[0], 2, HalfSchedule::short27);
    bool iv21 = false;
    for (const Violation& viol : seg.violations) {
        if (viol.rule == "IV.21" && viol.gana == 6) {
            iv21 = true;
        }
    }
    CHECK(iv21);
}

TEST_CASE("validate_arya accepts a synthetic standard arya") {
    // 30: gg x7 with jagana sixth; 27: with the isolated light sixth
    Verse v = parse_lg("gg gg gg gg gg lgl gg g | gg gg gg gg gg l gg g");
    AryaReport report = validate_arya(v);
    CHECK(report.hemistich_matras[0] == 30);
    CHECK(report.hemistich_matras[1] == 27);
    CHECK(report.family == Family::arya);
    CHECK(report.classification == Family::arya);
    CHECK(report.violations.empty());
    CHECK_FALSE(report.word_rules_checked);  // no dots
    CHECK(report.pathya == Pathya::unknown);
}

TEST_CASE("validate_arya flags a jagana in an odd gana") {
    Verse v = parse_lg("lgl gg gg gg gg lgl gg g | gg gg gg gg gg l gg g");
    AryaReport report = validate_arya(v);
    CHECK(has_violation(report, "IV.15", 1, 1));
    CHECK(report.classification == Family::invalid);
    CHECK(report.family == Family::arya);
}

TEST_CASE("validate_arya flags a wrong sixth gana in a thirty half") {
    Verse v = parse_lg("gg gg gg gg gg gg gg g | gg gg gg gg gg l gg g");
    AryaReport report = validate_arya(v);
    CHECK(has_violation(report, "IV.16-17", 1, 6));
}

TEST_CASE("an all-heavy thirty-thirty verse attempts giti and fails the sixth gana") {
    Verse v = parse_lg("ggggggggggggggg | ggggggggggggggg");
    AryaReport report = validate_arya(v);
    CHECK(report.family == Family::giti);
    CHECK(has_violation(report, "IV.16-17", 1, 6));
    CHECK(has_violation(report, "IV.16-17", 2, 6));
    CHECK(report.classification == Family::invalid);
}

TEST_CASE("validate_arya records a length violation") {
    // 29 matras in the first half
    Verse v = parse_lg("gg gg gg gg gg lgl gg l | gg gg gg gg gg l gg g");
    AryaReport report = validate_arya(v);
    CHECK(has_violation(report, "IV.14", 1, 0));
    CHECK(report.classification == Family::invalid);
}

TEST_CASE("word-start rules fire only with known boundaries") {
    // sixth gana llll with no word starting at its second light
    std::string base = "gg gg gg gg gg llll g.g g | gg gg gg gg gg l gg g";
    AryaReport with_dots = validate_arya(parse_lg(base));
    CHECK(with_dots.word_rules_checked);
    CHECK(has_violation(with_dots, "IV.18", 1, 6));

    std::string undotted = "gg gg gg gg gg llll gg g | gg gg gg gg gg l gg g";
    AryaReport without = validate_arya(parse_lg(undotted));
    CHECK_FALSE(without.word_rules_checked);
    CHECK_FALSE(has_violation(without, "IV.18", 1, 6));
    CHECK(without.violations.empty());

    // compliant: a word starts at the second light
    std::string good = ".gg gg gg gg gg l.lll g.g g | .gg gg gg gg gg l gg g";
    AryaReport ok = validate_arya(parse_lg(good));
    CHECK_FALSE(has_violation(ok, "IV.18", 1, 6));
}

TEST_CASE("seventh-gana and second-half-fifth-gana word rules") {
    std::string bad7 = ".gg gg gg gg gg lgl l.lll g | .gg gg gg gg gg l gg g";
    AryaReport r7 = validate_arya(parse_lg(bad7));
    CHECK(has_violation(r7, "IV.19", 1, 7));

    std::string good7 = ".gg gg gg gg gg lgl .llll g | .gg gg gg gg gg l gg g";
    CHECK_FALSE(has_violation(validate_arya(parse_lg(good7)), "IV.19", 1, 7));

    std::string bad5 = ".gg gg gg gg gg lgl gg g | .gg gg gg gg l.lll l gg g";
    AryaReport r5 = validate_arya(parse_lg(bad5));
    CHECK(has_violation(r5, "IV.20", 2, 5));

    std::string good5 = ".gg gg gg gg gg lgl gg g | .gg gg gg gg .llll l gg g";
    CHECK_FALSE(has_violation(validate_arya(parse_lg(good5)), "IV.20", 2, 5));
}

TEST_CASE("pathya needs the caesura after the third gana in both halves") {
    std::string both = ".gg gg gg .gg gg lgl gg g | .gg gg gg .gg gg l gg g";
    CHECK(validate_arya(parse_lg(both)).pathya == Pathya::pathya);

    std::string one = ".gg gg gg .gg gg lgl gg g | .gg gg g.g gg gg l gg g";
    AryaReport r = validate_arya(parse_lg(one));
    CHECK(r.pathya == Pathya::vipula);
    CHECK(r.caesura_after_third[0] == Tern::yes);
    CHECK(r.caesura_after_third[1] == Tern::no);
}

TEST_CASE("a giti-shaped verse validates as giti") {
    Verse v = parse_lg("gg gg gg gg gg lgl gg g | gg gg gg gg gg llll gg g");
    AryaReport report = validate_arya(v);
    CHECK(report.family == Family::giti);
    CHECK(report.classification == Family::giti);
    CHECK(report.violations.empty());
}

TEST_CASE("an aryagiti-shaped verse validates with eight full ganas") {
    Verse v = parse_lg("gg gg gg gg gg gg gg gg | gg gg gg gg gg gg gg gg");
    AryaReport report = validate_arya(v);
    CHECK(report.family == Family::aryagiti);
    CHECK(report.classification == Family::aryagiti);
    REQUIRE(report.ganas[0].size() == 8);
    CHECK(report.ganas[0][7].kind == SlotKind::full);
}

TEST_CASE("the faulty-name hemistich opening splits the first gana") {
    AryaReport report = validate_arya(weigh_iast("āryabhaṭṭastviha"));
    CHECK(has_violation(report, "boundary-split", 1, 1));
    CHECK(report.classification == Family::invalid);
}

TEST_CASE("determinism: identical input gives identical reports") {
    std::string text = "parikarma viṃśatiṃ yaḥ saṅkalitādyāṃ pṛthagvijānāti | "
                       "aṣṭau ca vyavahārān chāyāntān bhavati gaṇakaḥ saḥ ||";
    AryaReport a = validate_arya(weigh_iast(text));
    AryaReport b = validate_arya(weigh_iast(text));
    CHECK(a.hemistich_matras == b.hemistich_matras);
    CHECK(a.syllables == b.syllables);
    CHECK(a.ganas == b.ganas);
    CHECK(a.violations == b.violations);
    CHECK(a.notes == b.notes);
}

namespace {

// Builds a random valid arya weight string, slot by slot.
std::string random_valid_arya(std::mt19937& rng) {
    auto full = [&](int index, bool sixth_special) -> std::string {
        static const std::vector<std::string> even{"gg", "gll", "llg", "llll", "lgl"};
        static const std::vector<std::string> odd{"gg", "gll", "llg", "llll"};
        if (sixth_special) {
            return rng() % 2 == 0 ? "lgl" : "llll";
        }
        const auto& pool = index % 2 == 1 ? odd : even;
        return pool[rng() % pool.size()];
    };
    std::string first;
    for (int i = 1; i <= 7; ++i) {
        first += full(i, i == 6);
    }
    first += rng() % 2 == 0 ? "g" : "ll";
    std::string second;
    for (int i = 1; i <= 5; ++i) {
        second += full(i, false);
    }
    second += "l";
    second += full(7, false);
    second += rng() % 2 == 0 ? "g" : "ll";
    return first + " | " + second;
}

}  // namespace

TEST_CASE("generated valid aryas validate; any single-weight mutation breaks one") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 1000; ++trial) {
        std::string text = random_valid_arya(rng);
        Verse verse = parse_lg(text);
        AryaReport report = validate_arya(verse);
        REQUIRE(report.classification == Family::arya);
        REQUIRE(report.violations.empty());

        std::vector<std::size_t> weight_positions;
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] == 'l' || text[i] == 'g') {
                weight_positions.push_back(i);
            }
        }
        std::size_t at = weight_positions[rng() % weight_positions.size()];
        std::string mutated = text;
        mutated[at] = mutated[at] == 'l' ? 'g' : 'l';
        AryaReport broken = validate_arya(parse_lg(mutated));
        REQUIRE_FALSE(broken.violations.empty());
        REQUIRE(broken.classification == Family::invalid);
    }
}
