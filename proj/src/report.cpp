#include "polysum/report.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace polysum {

namespace {

bool looks_integer(const std::string& s) {
    if (s.empty()) return false;
    size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

bool bare_ok(const std::string& s) {
    if (s.empty() || looks_integer(s)) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || std::string_view("_.+*:/-()").find(c) != std::string_view::npos))
            return false;
    return true;
}

std::string encode_string(const std::string& s) {
    if (bare_ok(s)) return s;
    std::string o = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') o += '\\';
        o += c;
    }
    return o + "\"";
}

std::string encode(const Value& v) {
    return std::visit(
        [](auto&& x) -> std::string {
            using X = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<X, i64>) {
                return std::to_string(x);
            } else if constexpr (std::is_same_v<X, std::string>) {
                return encode_string(x);
            } else {
                std::string o = "[";
                for (size_t i = 0; i < x.size(); ++i) {
                    if (i) o += ',';
                    if constexpr (std::is_same_v<X, std::vector<i64>>) o += std::to_string(x[i]);
                    else o += encode_string(x[i]);
                }
                return o + "]";
            }
        },
        v);
}

struct Cursor {
    const std::string& s;
    size_t i = 0;
    bool done() const { return i >= s.size(); }
    char peek() const { return s[i]; }
};

// Reads one scalar token; `quoted` reports whether it was a quoted string.
std::string read_scalar(Cursor& c, bool& quoted, std::string_view stops) {
    std::string out;
    quoted = false;
    if (!c.done() && c.peek() == '"') {
        quoted = true;
        ++c.i;
        while (!c.done() && c.peek() != '"') {
            if (c.peek() == '\\') ++c.i;
            if (c.done()) break;
            out += c.s[c.i++];
        }
        if (c.done()) throw std::invalid_argument("unterminated string");
        ++c.i;
        return out;
    }
    while (!c.done() && stops.find(c.peek()) == std::string_view::npos) out += c.s[c.i++];
    return out;
}

Value decode_at(Cursor& c, std::string_view stops) {
    if (!c.done() && c.peek() == '[') {
        ++c.i;
        std::vector<std::pair<std::string, bool>> items;
        while (!c.done() && c.peek() != ']') {
            bool q;
            items.emplace_back(read_scalar(c, q, ",]"), q);
            items.back().second = q;
            if (!c.done() && c.peek() == ',') ++c.i;
        }
        if (c.done()) throw std::invalid_argument("unterminated list");
        ++c.i;
        bool ints = true;
        for (auto& [t, q] : items) ints &= !q && looks_integer(t);
        if (ints) {
            std::vector<i64> v;
            for (auto& [t, q] : items) v.push_back(std::stoll(t));
            return v;
        }
        std::vector<std::string> v;
        for (auto& [t, q] : items) v.push_back(t);
        return v;
    }
    bool q;
    std::string t = read_scalar(c, q, stops);
    if (!q && looks_integer(t)) return std::stoll(t);
    return t;
}

Value decode(const std::string& text) {
    Cursor c{text};
    Value v = decode_at(c, "");
    if (!c.done()) throw std::invalid_argument("trailing characters in value '" + text + "'");
    return v;
}

Value normalized(Value v) {
    if (auto* s = std::get_if<std::vector<std::string>>(&v); s && s->empty()) return std::vector<i64>{};
    return v;
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string o = "\"";
    for (char c : s) {
        if (c == '"') o += '"';
        o += c;
    }
    return o + "\"";
}

std::vector<std::string> csv_row(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    bool inq = false;
    for (size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (inq) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') cur += '"', ++i;
            else if (c == '"') inq = false;
            else cur += c;
        } else if (c == '"') {
            inq = true;
        } else if (c == ',') {
            cells.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    cells.push_back(cur);
    return cells;
}

}  // namespace

Format parse_format(const std::string& s) {
    if (s == "lines") return Format::Lines;
    if (s == "csv") return Format::Csv;
    throw std::invalid_argument("unknown format '" + s + "'");
}

std::string emit_line(const Record& r) {
    std::string out;
    for (auto& [k, v] : r.fields) {
        if (!out.empty()) out += ' ';
        out += k + "=" + encode(normalized(v));
    }
    return out;
}

Record parse_line(const std::string& line) {
    Record r;
    Cursor c{line};
    while (!c.done()) {
        if (c.peek() == ' ') {
            ++c.i;
            continue;
        }
        std::string key;
        while (!c.done() && c.peek() != '=') key += line[c.i++];
        if (c.done() || key.empty()) throw std::invalid_argument("malformed record near '" + key + "'");
        ++c.i;
        r.fields[key] = decode_at(c, " ");
    }
    return r;
}

std::string emit_csv(const std::vector<Record>& rs) {
    std::set<std::string> keys;
    for (auto& r : rs)
        for (auto& [k, v] : r.fields) keys.insert(k);
    std::string out;
    bool first = true;
    for (auto& k : keys) out += (first ? "" : ",") + csv_cell(k), first = false;
    out += '\n';
    for (auto& r : rs) {
        first = true;
        for (auto& k : keys) {
            if (!first) out += ',';
            first = false;
            auto it = r.fields.find(k);
            if (it != r.fields.end()) out += csv_cell(encode(normalized(it->second)));
        }
        out += '\n';
    }
    return out;
}

std::vector<Record> parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) return {};
    auto header = csv_row(line);
    std::vector<Record> out;
    while (std::getline(in, line)) {
        auto cells = csv_row(line);
        if (cells.size() != header.size()) throw std::invalid_argument("csv row width mismatch");
        Record r;
        for (size_t i = 0; i < cells.size(); ++i)
            if (!cells[i].empty()) r.fields[header[i]] = decode(cells[i]);
        out.push_back(r);
    }
    return out;
}

std::string emit(const std::vector<Record>& rs, Format f) {
    if (f == Format::Csv) return emit_csv(rs);
    std::string out;
    for (auto& r : rs) out += emit_line(r) + "\n";
    return out;
}

std::vector<Record> parse(const std::string& text, Format f) {
    if (f == Format::Csv) return parse_csv(text);
    std::vector<Record> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) out.push_back(parse_line(line));
    return out;
}

}  // namespace polysum
