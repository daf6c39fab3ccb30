#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "polysum/arith.hpp"

namespace polysum {

using Value = std::variant<i64, std::string, std::vector<i64>, std::vector<std::string>>;

// One self-describing record; keys are kept sorted.
struct Record {
    std::map<std::string, Value> fields;

    Record& set(const std::string& k, Value v) {
        if (auto* s = std::get_if<std::vector<std::string>>(&v); s && s->empty()) v = std::vector<i64>{};
        fields[k] = std::move(v);
        return *this;
    }
    Record& set(const std::string& k, const char* v) { return set(k, Value(std::string(v))); }
    Record& set(const std::string& k, i64 v) { return set(k, Value(v)); }
    Record& set(const std::string& k, int v) { return set(k, Value(static_cast<i64>(v))); }
    Record& set(const std::string& k, bool v) { return set(k, Value(std::string(v ? "true" : "false"))); }
    const Value& at(const std::string& k) const { return fields.at(k); }
    friend bool operator==(const Record&, const Record&) = default;
};

enum class Format { Lines, Csv };
Format parse_format(const std::string& s);

// key=value pairs separated by single spaces; lists as [a,b]; strings quoted when they could be misread.
std::string emit_line(const Record& r);
Record parse_line(const std::string& line);

// Header row of the union of keys, then one row per record; missing fields are empty cells.
std::string emit_csv(const std::vector<Record>& rs);
std::vector<Record> parse_csv(const std::string& text);

std::string emit(const std::vector<Record>& rs, Format f);
std::vector<Record> parse(const std::string& text, Format f);

}  // namespace polysum
