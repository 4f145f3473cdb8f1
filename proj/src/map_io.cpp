#include "carcass/map_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "carcass/errors.hpp"

namespace carcass {

namespace {

using nlohmann::json;

struct Position {
    std::size_t line = 1;
    std::size_t column = 1;
};

Position position_of(std::string_view text, std::size_t byte) {
    Position p;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++p.line;
            p.column = 1;
        } else {
            ++p.column;
        }
    }
    return p;
}

// Line of each array opened at nesting depth 2, i.e. the breakpoint pairs
// of a well-shaped document.
std::vector<std::size_t> pair_lines(std::string_view text) {
    std::vector<std::size_t> lines;
    std::size_t line = 1;
    int depth = 0;
    bool in_string = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '\n') ++line;
        if (in_string) {
            if (c == '\\') ++i;
            else if (c == '"') in_string = false;
            continue;
        }
        if (c == '"') in_string = true;
        else if (c == '{' || c == '[') {
            if (c == '[' && depth == 2) lines.push_back(line);
            ++depth;
        } else if (c == '}' || c == ']') {
            --depth;
        }
    }
    return lines;
}

Rational coordinate(const json& v) {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    throw ValidationError("coordinate must be a rational string such as \"1/2\"");
}

} // namespace

PLMap parse_map(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const Position p = position_of(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ValidationError("line " + std::to_string(p.line) + ", column " +
                              std::to_string(p.column) + ": malformed map document");
    }
    if (!doc.is_object() || !doc.contains("breakpoints"))
        throw ValidationError("line 1: map document needs a \"breakpoints\" field");
    const json& bps = doc.at("breakpoints");
    if (!bps.is_array()) throw ValidationError("line 1: \"breakpoints\" must be a list of pairs");

    const auto lines = pair_lines(text);
    std::vector<Point> pts;
    pts.reserve(bps.size());
    for (std::size_t i = 0; i < bps.size(); ++i) {
        const std::string where = "line " + std::to_string(i < lines.size() ? lines[i] : 1) +
                                  ", breakpoint " + std::to_string(i) + ": ";
        const json& pair = bps[i];
        if (!pair.is_array() || pair.size() != 2)
            throw ValidationError(where + "expected a pair [x, y]");
        try {
            pts.push_back({coordinate(pair[0]), coordinate(pair[1])});
        } catch (const Error& e) {
            throw ValidationError(where + e.what());
        }
        const Point& p = pts.back();
        if (p.y < Rational(0) || p.y > Rational(1))
            throw ValidationError(where + "y = " + p.y.str() + " outside [0,1]");
        if (i > 0 && !(pts[i - 1].x < p.x))
            throw ValidationError(where + "x = " + p.x.str() + " is not greater than the previous x");
    }
    try {
        return PLMap(std::move(pts));
    } catch (const ValidationError& e) {
        throw ValidationError(std::string("invalid map: ") + e.what());
    }
}

PLMap load_map(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read map file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse_map(ss.str());
    } catch (const ValidationError& e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
}

std::string format_map(const PLMap& m) {
    std::string out = "{\"breakpoints\": [";
    bool first = true;
    for (const Point& p : m.breakpoints()) {
        out += first ? "\n  " : ",\n  ";
        first = false;
        out += "[\"" + p.x.str() + "\", \"" + p.y.str() + "\"]";
    }
    out += "\n]}\n";
    return out;
}

void save_map(const PLMap& m, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write map file " + path.string());
    out << format_map(m);
}

std::string format_points(std::span<const Point> points) {
    std::string out;
    for (const Point& p : points) out += p.x.str() + " " + p.y.str() + "\n";
    return out;
}

} // namespace carcass
