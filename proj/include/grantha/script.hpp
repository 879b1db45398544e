#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace grantha {

enum class CharClass { vowel, vowel_sign, consonant, conjunct, virama, anusvara, visarga, prebase_sign, other };

enum class ConjunctKind { stacking, combining, r_sign, y_sign };

std::string_view to_string(CharClass c);
std::string_view to_string(ConjunctKind k);
std::optional<CharClass> parse_char_class(std::string_view s);
std::optional<ConjunctKind> parse_conjunct_kind(std::string_view s);

/// A conjunct letter and the base consonants it is built from.
struct ConjunctRule {
    std::string id;
    ConjunctKind kind = ConjunctKind::stacking;
    std::u32string parts;

    friend bool operator==(const ConjunctRule&, const ConjunctRule&) = default;
};

struct ScriptMapping {
    char32_t grantha = 0;
    char32_t malayalam = 0;
    CharClass cls = CharClass::other;
};

namespace cp {
inline constexpr char32_t kGranthaVirama = 0x1134D;
inline constexpr char32_t kGranthaRa = 0x11330;
inline constexpr char32_t kGranthaYa = 0x1132F;
inline constexpr char32_t kGranthaSignAa = 0x1133E;
inline constexpr char32_t kGranthaSignEe = 0x11347;
inline constexpr char32_t kGranthaSignOo = 0x1134B;
inline constexpr char32_t kGranthaSignAu = 0x1134C;
inline constexpr char32_t kGranthaAuLength = 0x11357;

inline constexpr char32_t kMalayalamVirama = 0x0D4D;
inline constexpr char32_t kMalayalamRa = 0x0D30;
inline constexpr char32_t kMalayalamYa = 0x0D2F;
inline constexpr char32_t kMalayalamDotReph = 0x0D4E;
inline constexpr char32_t kMalayalamChilluRr = 0x0D7C;
inline constexpr char32_t kZwnj = 0x200C;
}  // namespace cp

/// Grantha -> Malayalam code point map and conjunct rule table, both loaded
/// from line-oriented UTF-8 text:
///   mapping:  U+XXXX<TAB>U+YYYY<TAB>class
///   rules:    id<TAB>kind<TAB>U+AAAA,U+BBBB[,U+CCCC]
/// Blank lines and lines starting with '#' are ignored. Violations raise
/// TableError with the offending line number.
class ScriptTables {
public:
    static ScriptTables parse(std::string_view mapping_text, std::string_view rule_text,
                              const std::string& mapping_source = "mapping", const std::string& rule_source = "rules");
    static ScriptTables load(const std::string& mapping_path, const std::string& rule_path);
    /// Tables compiled from data/ at build time.
    static const ScriptTables& builtin();

    /// Total over all code points; anything not in the map is `other`.
    CharClass classify(char32_t grantha) const;
    std::optional<char32_t> to_malayalam(char32_t grantha) const;

    /// Throws UnknownConjunctError.
    const ConjunctRule& decompose(std::string_view id) const;
    const ConjunctRule* find_by_parts(std::u32string_view parts) const;
    /// The id of the rule with exactly these parts and kind, if any.
    std::optional<std::string> compose(std::u32string_view parts, ConjunctKind kind) const;

    const std::vector<ScriptMapping>& mappings() const noexcept { return mappings_; }
    const std::vector<ConjunctRule>& rules() const noexcept { return rules_; }

private:
    std::vector<ScriptMapping> mappings_;
    std::map<char32_t, std::size_t> by_codepoint_;
    std::vector<ConjunctRule> rules_;
    std::map<std::string, std::size_t, std::less<>> by_id_;
    std::map<std::u32string, std::size_t, std::less<>> by_parts_;
};

/// Malayalam code points absent from the reformed (new) script: vocalic
/// RR, vocalic L and vocalic LL, as letters and as vowel signs.
bool absent_in_new_script(char32_t malayalam);

/// Atomic chillu for a Malayalam consonant, if one exists.
std::optional<char32_t> chillu_for(char32_t malayalam_consonant);

}  // namespace grantha
