#include "boxlike/config.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace boxlike {

namespace {

// Minimal TOML reader covering the config grammar: [[table]] headers,
// key = value lines, values being strings, bare numbers or single-line
// arrays of those. Comments start with '#'.

struct TomlValue {
    enum class Kind { String, Scalar, Array } kind;
    std::string text;                  // String / Scalar payload
    std::vector<std::string> items;   // Array payload (already unquoted)
    int line = 0;
};

struct MapEntry {
    std::map<std::string, TomlValue> values;
    int line = 0;  // line of the [[map]] header
};

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Removes a trailing comment that is not inside a quoted string.
std::string_view strip_comment(std::string_view s) {
    bool quoted = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '"') quoted = !quoted;
        else if (s[i] == '#' && !quoted) return s.substr(0, i);
    }
    return s;
}

std::string unquote(std::string_view s, const std::string& origin, int line) {
    s = strip(s);
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
        return std::string(s.substr(1, s.size() - 2));
    }
    if (!s.empty() && s.front() == '"')
        throw ConfigError(std::string(origin), line, "unterminated string: " + std::string(s));
    return std::string(s);
}

TomlValue parse_value(std::string_view raw, const std::string& origin, int line) {
    raw = strip(raw);
    if (raw.empty()) throw ConfigError(origin, line, "missing value");
    TomlValue v;
    v.line = line;
    if (raw.front() == '[') {
        if (raw.back() != ']')
            throw ConfigError(origin, line, "array must open and close on one line: " + std::string(raw));
        v.kind = TomlValue::Kind::Array;
        std::string_view body = raw.substr(1, raw.size() - 2);
        std::string item;
        bool quoted = false;
        for (char c : body) {
            if (c == '"') quoted = !quoted;
            if (c == ',' && !quoted) {
                v.items.push_back(unquote(item, origin, line));
                item.clear();
            } else {
                item += c;
            }
        }
        if (!strip(item).empty()) v.items.push_back(unquote(item, origin, line));
        return v;
    }
    if (raw.front() == '"') {
        v.kind = TomlValue::Kind::String;
        v.text = unquote(raw, origin, line);
        return v;
    }
    v.kind = TomlValue::Kind::Scalar;
    v.text = std::string(raw);
    return v;
}

Rational parse_rational_field(const std::string& text, const std::string& origin, int line,
                              const std::string& field) {
    auto r = Rational::parse(text);
    if (!r) throw ConfigError(origin, line, "field '" + field + "': cannot parse rational from '" + text + "'");
    return *r;
}

AffineMap build_map(const MapEntry& entry, const std::string& origin) {
    Dihedral iso = Dihedral::Id;
    if (auto it = entry.values.find("iso"); it != entry.values.end()) {
        const auto parsed = dihedral_from_name(it->second.text);
        if (!parsed)
            throw ConfigError(origin, it->second.line,
                              "field 'iso': unknown isometry '" + it->second.text +
                                  "' (expected id, rot90, rot180, rot270, reflect_h, reflect_v, "
                                  "reflect_diag, reflect_anti)");
        iso = *parsed;
    }

    const bool has_rect = entry.values.count("rect") > 0;
    const bool has_raw = entry.values.count("a") || entry.values.count("b") || entry.values.count("t");
    if (has_rect && has_raw)
        throw ConfigError(origin, entry.line, "give either 'rect' or raw 'a'/'b'/'t' fields, not both");

    if (has_rect) {
        const TomlValue& rect = entry.values.at("rect");
        if (rect.kind != TomlValue::Kind::Array || rect.items.size() != 4)
            throw ConfigError(origin, rect.line, "field 'rect' must be an array [x0, x1, y0, y1]");
        const Rational x0 = parse_rational_field(rect.items[0], origin, rect.line, "rect");
        const Rational x1 = parse_rational_field(rect.items[1], origin, rect.line, "rect");
        const Rational y0 = parse_rational_field(rect.items[2], origin, rect.line, "rect");
        const Rational y1 = parse_rational_field(rect.items[3], origin, rect.line, "rect");
        try {
            return from_target_rect(iso, Rect{x0, x1, y0, y1});
        } catch (const std::invalid_argument& e) {
            throw ConfigError(origin, rect.line, e.what());
        }
    }

    for (const char* field : {"a", "b", "t"}) {
        if (!entry.values.count(field))
            throw ConfigError(origin, entry.line,
                              "map needs either 'rect' or all of 'a', 'b', 't' (missing '" +
                                  std::string(field) + "')");
    }
    AffineMap map;
    map.iso = iso;
    map.a = parse_rational_field(entry.values.at("a").text, origin, entry.values.at("a").line, "a");
    map.b = parse_rational_field(entry.values.at("b").text, origin, entry.values.at("b").line, "b");
    const TomlValue& t = entry.values.at("t");
    if (t.kind != TomlValue::Kind::Array || t.items.size() != 2)
        throw ConfigError(origin, t.line, "field 't' must be an array [tx, ty]");
    map.tx = parse_rational_field(t.items[0], origin, t.line, "t");
    map.ty = parse_rational_field(t.items[1], origin, t.line, "t");
    return map;
}

}  // namespace

BoxLikeIFS parse_ifs_config(std::string_view text, std::string_view origin_view) {
    const std::string origin(origin_view);
    std::vector<MapEntry> entries;
    bool in_map = false;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        line = strip(strip_comment(line));
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line == "[[map]]") {
                entries.push_back(MapEntry{{}, line_no});
                in_map = true;
                continue;
            }
            throw ConfigError(origin, line_no, "unexpected table header '" + std::string(line) +
                                                   "' (only [[map]] is recognized)");
        }

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError(origin, line_no, "expected 'key = value', got '" + std::string(line) + "'");
        const std::string key(strip(line.substr(0, eq)));
        if (key.empty()) throw ConfigError(origin, line_no, "empty key");
        if (!in_map)
            throw ConfigError(origin, line_no, "key '" + key + "' appears before the first [[map]] table");
        TomlValue value = parse_value(line.substr(eq + 1), origin, line_no);
        if (!entries.back().values.emplace(key, std::move(value)).second)
            throw ConfigError(origin, line_no, "duplicate key '" + key + "' in the same [[map]]");
    }

    if (entries.empty()) throw ConfigError(origin, line_no, "config defines no [[map]] tables");

    BoxLikeIFS ifs;
    ifs.maps.reserve(entries.size());
    for (const MapEntry& entry : entries) ifs.maps.push_back(build_map(entry, origin));

    if (auto err = validate_ifs(ifs)) throw ConfigError(origin, 0, *err);
    return ifs;
}

BoxLikeIFS load_ifs_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path, 0, "cannot open config file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_ifs_config(buffer.str(), path);
}

std::string canonical_config(const BoxLikeIFS& ifs) {
    std::ostringstream out;
    for (const AffineMap& m : ifs.maps) {
        out << "[[map]]\n";
        out << "a = \"" << m.a.str() << "\"\n";
        out << "b = \"" << m.b.str() << "\"\n";
        out << "iso = \"" << dihedral_name(m.iso) << "\"\n";
        out << "t = [\"" << m.tx.str() << "\", \"" << m.ty.str() << "\"]\n\n";
    }
    return out.str();
}

}  // namespace boxlike
