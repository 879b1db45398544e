#include "grantha/ink.hpp"

#include <cmath>
#include <sstream>

#include "grantha/utf8.hpp"

namespace grantha {

std::size_t InkSample::point_count() const noexcept {
    std::size_t n = 0;
    for (const auto& s : strokes) n += s.points.size();
    return n;
}

std::vector<std::string> validate(const InkSample& sample) {
    std::vector<std::string> violations;
    if (sample.strokes.empty()) violations.emplace_back("sample has no strokes");
    for (std::size_t i = 0; i < sample.strokes.size(); ++i) {
        const auto& pts = sample.strokes[i].points;
        if (pts.empty()) {
            violations.push_back("empty stroke at index " + std::to_string(i));
            continue;
        }
        for (std::size_t j = 0; j < pts.size(); ++j) {
            const auto& p = pts[j];
            if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
                violations.push_back("non-finite coordinate at stroke " + std::to_string(i) + " point " +
                                     std::to_string(j));
            }
            if (!std::isfinite(p.t) || p.t < 0.0) {
                violations.push_back("invalid timestamp at stroke " + std::to_string(i) + " point " +
                                     std::to_string(j));
            } else if (j > 0 && p.t < pts[j - 1].t) {
                violations.push_back("decreasing timestamp at stroke " + std::to_string(i) + " point " +
                                     std::to_string(j));
            }
        }
    }
    return violations;
}

std::u32string codepoints_for_label(const std::string& label) {
    std::istringstream in(label);
    std::u32string parsed;
    std::string token;
    bool all_uplus = true;
    while (in >> token) {
        char32_t cp = 0;
        if (!utf8::parse_uplus(token, cp)) {
            all_uplus = false;
            break;
        }
        parsed.push_back(cp);
    }
    if (all_uplus && !parsed.empty()) return parsed;
    return utf8::decode(label);
}

}  // namespace grantha
