#include "text_lines.hpp"

#include <cctype>

namespace hypchrom::detail {

std::vector<Line> scan_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            if (i >= raw.size()) break;
            std::size_t start = i;
            while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            line.tokens.push_back({std::string(raw.substr(start, i - start)), start + 1});
        }
        if (!line.tokens.empty() && line.tokens.front().text != "c") out.push_back(std::move(line));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return out;
}

unsigned long parse_unsigned(const Line& line, const Token& tok) {
    if (tok.text.empty() || tok.text.size() > 9) throw ParseError(line.number, tok.column, "expected a small non-negative integer, got `" + tok.text + "`");
    unsigned long v = 0;
    for (std::size_t k = 0; k < tok.text.size(); ++k) {
        char ch = tok.text[k];
        if (ch < '0' || ch > '9') throw ParseError(line.number, tok.column + k, "expected a digit in `" + tok.text + "`");
        v = v * 10 + static_cast<unsigned long>(ch - '0');
    }
    return v;
}

std::pair<unsigned long, unsigned long> parse_header(const std::vector<Line>& lines, std::string_view kind) {
    if (lines.empty()) throw ParseError(1, 1, "missing `p " + std::string(kind) + " <n> <m>` header");
    const Line& h = lines.front();
    const std::string expected = "expected `p " + std::string(kind) + " <n> <m>` header";
    if (h.tokens[0].text != "p") throw ParseError(h.number, h.tokens[0].column, expected);
    if (h.tokens.size() < 2 || h.tokens[1].text != kind) {
        const Token& at = h.tokens.size() < 2 ? h.tokens[0] : h.tokens[1];
        throw ParseError(h.number, at.column, expected);
    }
    if (h.tokens.size() != 4) {
        const Token& at = h.tokens.size() > 4 ? h.tokens[4] : h.tokens.back();
        throw ParseError(h.number, at.column, expected);
    }
    return {parse_unsigned(h, h.tokens[2]), parse_unsigned(h, h.tokens[3])};
}

}  // namespace hypchrom::detail
