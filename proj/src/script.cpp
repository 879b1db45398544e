#include "grantha/script.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include "grantha/error.hpp"
#include "grantha/utf8.hpp"

namespace grantha {

namespace {

constexpr std::array<std::pair<CharClass, std::string_view>, 9> kClassNames{{
    {CharClass::vowel, "vowel"},
    {CharClass::vowel_sign, "vowel_sign"},
    {CharClass::consonant, "consonant"},
    {CharClass::conjunct, "conjunct"},
    {CharClass::virama, "virama"},
    {CharClass::anusvara, "anusvara"},
    {CharClass::visarga, "visarga"},
    {CharClass::prebase_sign, "prebase_sign"},
    {CharClass::other, "other"},
}};

constexpr std::array<std::pair<ConjunctKind, std::string_view>, 4> kKindNames{{
    {ConjunctKind::stacking, "stacking"},
    {ConjunctKind::combining, "combining"},
    {ConjunctKind::r_sign, "r_sign"},
    {ConjunctKind::y_sign, "y_sign"},
}};

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

// Calls fn(line_number, line) for each non-blank, non-comment line.
template <class Fn>
void for_each_record(std::string_view text, Fn&& fn) {
    std::size_t line_no = 0;
    for (auto line : split(text, '\n')) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty() || line.front() == '#') continue;
        fn(line_no, line);
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw TableError(path, 0, "cannot open file");
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

std::string_view to_string(CharClass c) {
    for (const auto& [k, name] : kClassNames) {
        if (k == c) return name;
    }
    return "other";
}

std::string_view to_string(ConjunctKind k) {
    for (const auto& [kind, name] : kKindNames) {
        if (kind == k) return name;
    }
    return "stacking";
}

std::optional<CharClass> parse_char_class(std::string_view s) {
    for (const auto& [k, name] : kClassNames) {
        if (name == s) return k;
    }
    return std::nullopt;
}

std::optional<ConjunctKind> parse_conjunct_kind(std::string_view s) {
    for (const auto& [k, name] : kKindNames) {
        if (name == s) return k;
    }
    return std::nullopt;
}

ScriptTables ScriptTables::parse(std::string_view mapping_text, std::string_view rule_text,
                                 const std::string& mapping_source, const std::string& rule_source) {
    ScriptTables t;
    for_each_record(mapping_text, [&](std::size_t line_no, std::string_view line) {
        const auto f = split(line, '\t');
        if (f.size() != 3) throw TableError(mapping_source, line_no, "expected 3 tab-separated fields");
        ScriptMapping m;
        if (!utf8::parse_uplus(f[0], m.grantha) || m.grantha < 0x11300 || m.grantha > 0x1137F) {
            throw TableError(mapping_source, line_no, "source must be a Grantha code point");
        }
        if (!utf8::parse_uplus(f[1], m.malayalam) || m.malayalam < 0x0D00 || m.malayalam > 0x0D7F) {
            throw TableError(mapping_source, line_no, "target must be a Malayalam code point");
        }
        const auto cls = parse_char_class(f[2]);
        if (!cls || *cls == CharClass::conjunct) throw TableError(mapping_source, line_no, "invalid class");
        m.cls = *cls;
        if (t.by_codepoint_.count(m.grantha)) throw TableError(mapping_source, line_no, "duplicate source");
        t.by_codepoint_[m.grantha] = t.mappings_.size();
        t.mappings_.push_back(m);
    });
    if (t.classify(cp::kGranthaVirama) != CharClass::virama) {
        throw TableError(mapping_source, 0, "table must map the Grantha virama");
    }

    for_each_record(rule_text, [&](std::size_t line_no, std::string_view line) {
        const auto f = split(line, '\t');
        if (f.size() != 3) throw TableError(rule_source, line_no, "expected 3 tab-separated fields");
        ConjunctRule r;
        r.id = std::string(f[0]);
        if (r.id.empty()) throw TableError(rule_source, line_no, "empty conjunct id");
        const auto kind = parse_conjunct_kind(f[1]);
        if (!kind) throw TableError(rule_source, line_no, "unknown conjunct kind '" + std::string(f[1]) + "'");
        r.kind = *kind;
        for (auto part : split(f[2], ',')) {
            char32_t c = 0;
            if (!utf8::parse_uplus(part, c) || t.classify(c) != CharClass::consonant) {
                throw TableError(rule_source, line_no, "part '" + std::string(part) + "' is not a mapped consonant");
            }
            r.parts.push_back(c);
        }
        if (r.parts.size() < 2) throw TableError(rule_source, line_no, "a conjunct needs at least 2 parts");
        if (r.kind == ConjunctKind::stacking && r.parts.size() > 3) {
            throw TableError(rule_source, line_no, "stacking conjuncts have at most 3 parts");
        }
        if (r.kind == ConjunctKind::r_sign && r.parts.front() != cp::kGranthaRa && r.parts.back() != cp::kGranthaRa) {
            throw TableError(rule_source, line_no, "r_sign conjunct must begin or end with RA");
        }
        if (r.kind == ConjunctKind::y_sign && r.parts.back() != cp::kGranthaYa) {
            throw TableError(rule_source, line_no, "y_sign conjunct must end with YA");
        }
        if (t.by_id_.count(r.id)) throw TableError(rule_source, line_no, "duplicate conjunct id '" + r.id + "'");
        if (t.by_parts_.count(r.parts)) throw TableError(rule_source, line_no, "duplicate conjunct parts");
        t.by_id_.emplace(r.id, t.rules_.size());
        t.by_parts_.emplace(r.parts, t.rules_.size());
        t.rules_.push_back(std::move(r));
    });
    return t;
}

ScriptTables ScriptTables::load(const std::string& mapping_path, const std::string& rule_path) {
    return parse(read_file(mapping_path), read_file(rule_path), mapping_path, rule_path);
}

CharClass ScriptTables::classify(char32_t grantha) const {
    const auto it = by_codepoint_.find(grantha);
    return it == by_codepoint_.end() ? CharClass::other : mappings_[it->second].cls;
}

std::optional<char32_t> ScriptTables::to_malayalam(char32_t grantha) const {
    const auto it = by_codepoint_.find(grantha);
    if (it == by_codepoint_.end()) return std::nullopt;
    return mappings_[it->second].malayalam;
}

const ConjunctRule& ScriptTables::decompose(std::string_view id) const {
    const auto it = by_id_.find(id);
    if (it == by_id_.end()) throw UnknownConjunctError(std::string(id));
    return rules_[it->second];
}

const ConjunctRule* ScriptTables::find_by_parts(std::u32string_view parts) const {
    const auto it = by_parts_.find(parts);
    return it == by_parts_.end() ? nullptr : &rules_[it->second];
}

std::optional<std::string> ScriptTables::compose(std::u32string_view parts, ConjunctKind kind) const {
    const auto* rule = find_by_parts(parts);
    if (!rule || rule->kind != kind) return std::nullopt;
    return rule->id;
}

bool absent_in_new_script(char32_t m) {
    switch (m) {
        case 0x0D0C:  // LETTER VOCALIC L
        case 0x0D60:  // LETTER VOCALIC RR
        case 0x0D61:  // LETTER VOCALIC LL
        case 0x0D44:  // VOWEL SIGN VOCALIC RR
        case 0x0D62:  // VOWEL SIGN VOCALIC L
        case 0x0D63:  // VOWEL SIGN VOCALIC LL
            return true;
        default:
            return false;
    }
}

std::optional<char32_t> chillu_for(char32_t m) {
    switch (m) {
        case 0x0D23: return 0x0D7A;  // NNA
        case 0x0D28: return 0x0D7B;  // NA
        case 0x0D30: return 0x0D7C;  // RA
        case 0x0D32: return 0x0D7D;  // LA
        case 0x0D33: return 0x0D7E;  // LLA
        case 0x0D15: return 0x0D7F;  // KA
        default: return std::nullopt;
    }
}

}  // namespace grantha
