#include "grantha/unipen.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "grantha/error.hpp"

namespace grantha {

namespace {

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        if (i >= s.size()) break;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

bool parse_number(std::string_view token, double& out) {
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc{} && ptr == token.data() + token.size() && std::isfinite(out);
}

std::string format_number(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

// Extracts the quoted annotation from the tail of a .SEGMENT line.
std::optional<std::string> parse_label(std::string_view rest, std::size_t line_no) {
    const auto open = rest.find('"');
    if (open == std::string_view::npos) return std::nullopt;
    std::string label;
    std::size_t i = open + 1;
    for (; i < rest.size(); ++i) {
        const char c = rest[i];
        if (c == '\\') {
            if (i + 1 >= rest.size()) throw ParseError(line_no, "dangling escape in segment label");
            label.push_back(rest[++i]);
        } else if (c == '"') {
            break;
        } else {
            label.push_back(c);
        }
    }
    if (i >= rest.size()) throw ParseError(line_no, "unterminated segment label");
    if (!trim(rest.substr(i + 1)).empty()) throw ParseError(line_no, "trailing text after segment label");
    return label;
}

std::string quote_label(const std::string& label) {
    std::string out = "\"";
    for (char c : label) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

class Parser {
public:
    UnipenDocument run(std::string_view text) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const auto nl = text.find('\n', pos);
            const auto raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
            ++line_no_;
            handle(trim(raw));
            if (nl == std::string_view::npos) break;
            pos = nl + 1;
        }
        if (pen_down_) throw StructuralError(pen_down_line_, ".PEN_DOWN not closed before end of document");
        close_segment();
        return std::move(doc_);
    }

private:
    void handle(std::string_view line) {
        if (line.empty()) return;
        if (line.front() != '.') {
            coordinate(line);
            return;
        }
        const auto tokens = split_ws(line);
        const auto keyword = tokens.front().substr(1);
        if (keyword.empty() || !std::all_of(keyword.begin(), keyword.end(), [](char c) {
                return (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
            })) {
            throw ParseError(line_no_, "malformed keyword line '" + std::string(line) + "'");
        }
        const auto nargs = tokens.size() - 1;
        if (keyword == "VERSION") {
            expect_args(nargs == 1, keyword);
            doc_.version = std::string(tokens[1]);
        } else if (keyword == "HIERARCHY") {
            expect_args(nargs >= 1, keyword);
            doc_.hierarchy = std::string(trim(line.substr(tokens.front().size())));
        } else if (keyword == "COORD") {
            expect_args(nargs == 2 || nargs == 3, keyword);
            if (tokens[1] != "X" || tokens[2] != "Y" || (nargs == 3 && tokens[3] != "T")) {
                throw ParseError(line_no_, ".COORD must be 'X Y' or 'X Y T'");
            }
        } else if (keyword == "X_DIM" || keyword == "Y_DIM") {
            double v = 0;
            expect_args(nargs == 1 && parse_number(tokens[1], v), keyword);
            (keyword == "X_DIM" ? doc_.x_dim : doc_.y_dim) = v;
        } else if (keyword == "SEGMENT") {
            expect_args(nargs >= 1, keyword);
            if (tokens[1] != "CHARACTER") {
                throw ParseError(line_no_, "unsupported segment level '" + std::string(tokens[1]) + "'");
            }
            if (pen_down_) throw StructuralError(line_no_, ".SEGMENT inside .PEN_DOWN");
            close_segment();
            const auto rest = line.substr(line.find("CHARACTER") + 9);
            current_ = InkSample{};
            current_->label = parse_label(rest, line_no_);
            segment_line_ = line_no_;
            point_index_ = 0;
        } else if (keyword == "PEN_DOWN") {
            expect_args(nargs == 0, keyword);
            if (!current_) throw StructuralError(line_no_, ".PEN_DOWN outside a .SEGMENT CHARACTER block");
            if (pen_down_) throw StructuralError(line_no_, ".PEN_DOWN while pen is already down");
            pen_down_ = true;
            pen_down_line_ = line_no_;
            current_->strokes.emplace_back();
        } else if (keyword == "PEN_UP") {
            expect_args(nargs == 0, keyword);
            if (!pen_down_) throw StructuralError(line_no_, ".PEN_UP without preceding .PEN_DOWN");
            if (current_->strokes.back().points.empty()) {
                throw StructuralError(line_no_, "stroke without coordinates");
            }
            pen_down_ = false;
        } else {
            doc_.comments.emplace_back(line);
        }
    }

    void coordinate(std::string_view line) {
        const auto tokens = split_ws(line);
        Point p;
        if (tokens.size() < 2 || tokens.size() > 3 || !parse_number(tokens[0], p.x) ||
            !parse_number(tokens[1], p.y) || (tokens.size() == 3 && !parse_number(tokens[2], p.t))) {
            throw ParseError(line_no_, "malformed coordinate line '" + std::string(line) + "'");
        }
        if (!pen_down_) throw StructuralError(line_no_, "coordinate line outside .PEN_DOWN");
        if (tokens.size() == 2) p.t = static_cast<double>(point_index_);
        ++point_index_;
        current_->strokes.back().points.push_back(p);
    }

    void expect_args(bool ok, std::string_view keyword) {
        if (!ok) throw ParseError(line_no_, "malformed ." + std::string(keyword) + " line");
    }

    void close_segment() {
        if (!current_) return;
        if (current_->strokes.empty()) throw StructuralError(segment_line_, "segment without strokes");
        doc_.samples.push_back(std::move(*current_));
        current_.reset();
    }

    UnipenDocument doc_;
    std::optional<InkSample> current_;
    bool pen_down_ = false;
    std::size_t pen_down_line_ = 0;
    std::size_t line_no_ = 0;
    std::size_t segment_line_ = 0;
    std::size_t point_index_ = 0;
};

}  // namespace

UnipenDocument parse_unipen_document(std::string_view text) { return Parser{}.run(text); }

std::vector<InkSample> parse_unipen(std::string_view text) { return parse_unipen_document(text).samples; }

std::string write_unipen(const UnipenDocument& doc) {
    std::ostringstream out;
    out << ".VERSION " << doc.version << '\n';
    out << ".HIERARCHY " << doc.hierarchy << '\n';
    out << ".COORD X Y T\n";
    if (doc.x_dim) out << ".X_DIM " << format_number(*doc.x_dim) << '\n';
    if (doc.y_dim) out << ".Y_DIM " << format_number(*doc.y_dim) << '\n';
    for (const auto& c : doc.comments) out << c << '\n';
    for (const auto& sample : doc.samples) {
        out << ".SEGMENT CHARACTER";
        if (sample.label) out << ' ' << quote_label(*sample.label);
        out << '\n';
        for (const auto& stroke : sample.strokes) {
            out << ".PEN_DOWN\n";
            for (const auto& p : stroke.points) {
                out << format_number(p.x) << ' ' << format_number(p.y) << ' ' << format_number(p.t) << '\n';
            }
            out << ".PEN_UP\n";
        }
    }
    return out.str();
}

std::string write_unipen(std::span<const InkSample> samples) {
    UnipenDocument doc;
    doc.samples.assign(samples.begin(), samples.end());
    return write_unipen(doc);
}

std::vector<InkSample> load_unipen_path(const std::string& path) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    if (fs::is_directory(path)) {
        for (const auto& entry : fs::recursive_directory_iterator(path)) {
            const auto ext = entry.path().extension();
            if (entry.is_regular_file() && (ext == ".unipen" || ext == ".upn")) files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
    } else if (fs::is_regular_file(path)) {
        files.emplace_back(path);
    } else {
        throw ArgumentError("no such file or directory: " + path);
    }
    std::vector<InkSample> samples;
    for (const auto& f : files) {
        std::ifstream in(f, std::ios::binary);
        std::stringstream buf;
        buf << in.rdbuf();
        try {
            auto parsed = parse_unipen(buf.str());
            std::move(parsed.begin(), parsed.end(), std::back_inserter(samples));
        } catch (const Error& e) {
            throw Error(e.code(), f.string() + ": " + e.what());
        }
    }
    return samples;
}

}  // namespace grantha
