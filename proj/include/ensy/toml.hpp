#pragma once

// Minimal TOML subset used for schema and run-config files: top-level keys,
// [table] / [[array-of-table]] headers, strings, numbers, booleans and
// single-line arrays. Enough for this project's file formats; not a general
// TOML implementation.

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ensy/errors.hpp"

namespace ensy::toml {

struct Value {
    enum class Type { string, number, boolean, array };
    Type type = Type::string;
    std::string str;
    double num = 0.0;
    bool boolean = false;
    std::vector<Value> array;
};

struct Table {
    std::map<std::string, Value> pairs;

    bool has(const std::string& key) const { return pairs.count(key) > 0; }

    const Value& at(const std::string& key) const {
        auto it = pairs.find(key);
        if (it == pairs.end()) {
            throw ConfigError("missing key \"" + key + "\"");
        }
        return it->second;
    }

    std::string get_string(const std::string& key) const {
        const Value& v = at(key);
        if (v.type != Value::Type::string) {
            throw ConfigError("key \"" + key + "\" is not a string");
        }
        return v.str;
    }

    std::string get_string_or(const std::string& key, const std::string& fallback) const {
        return has(key) ? get_string(key) : fallback;
    }

    double get_number(const std::string& key) const {
        const Value& v = at(key);
        if (v.type != Value::Type::number) {
            throw ConfigError("key \"" + key + "\" is not a number");
        }
        return v.num;
    }

    double get_number_or(const std::string& key, double fallback) const {
        return has(key) ? get_number(key) : fallback;
    }

    bool get_bool_or(const std::string& key, bool fallback) const {
        if (!has(key)) return fallback;
        const Value& v = at(key);
        if (v.type != Value::Type::boolean) {
            throw ConfigError("key \"" + key + "\" is not a boolean");
        }
        return v.boolean;
    }

    std::vector<std::string> get_string_array(const std::string& key) const {
        const Value& v = at(key);
        if (v.type != Value::Type::array) {
            throw ConfigError("key \"" + key + "\" is not an array");
        }
        std::vector<std::string> out;
        out.reserve(v.array.size());
        for (const Value& e : v.array) {
            if (e.type != Value::Type::string) {
                throw ConfigError("array \"" + key + "\" holds a non-string element");
            }
            out.push_back(e.str);
        }
        return out;
    }
};

struct Document {
    Table root;
    std::map<std::string, Table> tables;
    std::map<std::string, std::vector<Table>> table_arrays;

    const Table& table_or_empty(const std::string& name) const {
        static const Table empty;
        auto it = tables.find(name);
        return it == tables.end() ? empty : it->second;
    }
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Cut a trailing comment, honoring quoted strings.
inline std::string strip_comment(const std::string& line) {
    bool in_str = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (c == '"' && (i == 0 || line[i - 1] != '\\')) in_str = !in_str;
        if (c == '#' && !in_str) return line.substr(0, i);
    }
    return line;
}

inline Value parse_scalar(const std::string& text, int lineno);

inline Value parse_array(const std::string& text, int lineno) {
    Value v;
    v.type = Value::Type::array;
    std::string body = trim(text.substr(1, text.size() - 2));
    if (body.empty()) return v;
    std::vector<std::string> parts;
    bool in_str = false;
    std::string cur;
    for (std::size_t i = 0; i < body.size(); ++i) {
        char c = body[i];
        if (c == '"' && (i == 0 || body[i - 1] != '\\')) in_str = !in_str;
        if (c == ',' && !in_str) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    for (const std::string& p : parts) {
        v.array.push_back(parse_scalar(trim(p), lineno));
    }
    return v;
}

inline Value parse_scalar(const std::string& text, int lineno) {
    Value v;
    if (text.empty()) {
        throw ConfigError("line " + std::to_string(lineno) + ": empty value");
    }
    if (text.front() == '"') {
        if (text.size() < 2 || text.back() != '"') {
            throw ConfigError("line " + std::to_string(lineno) + ": unterminated string");
        }
        v.type = Value::Type::string;
        std::string body = text.substr(1, text.size() - 2);
        std::string out;
        for (std::size_t i = 0; i < body.size(); ++i) {
            if (body[i] == '\\' && i + 1 < body.size()) {
                char n = body[++i];
                if (n == 'n') out.push_back('\n');
                else if (n == 't') out.push_back('\t');
                else out.push_back(n);
            } else {
                out.push_back(body[i]);
            }
        }
        v.str = out;
        return v;
    }
    if (text.front() == '[') {
        if (text.back() != ']') {
            throw ConfigError("line " + std::to_string(lineno) + ": arrays must close on the same line");
        }
        return parse_array(text, lineno);
    }
    if (text == "true" || text == "false") {
        v.type = Value::Type::boolean;
        v.boolean = (text == "true");
        return v;
    }
    char* end = nullptr;
    double d = std::strtod(text.c_str(), &end);
    if (end == nullptr || *end != '\0' || end == text.c_str()) {
        throw ConfigError("line " + std::to_string(lineno) + ": cannot parse value \"" + text + "\"");
    }
    v.type = Value::Type::number;
    v.num = d;
    return v;
}

} // namespace detail

inline Document parse(const std::string& text) {
    Document doc;
    Table* current = &doc.root;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = detail::trim(detail::strip_comment(raw));
        if (line.empty()) continue;
        if (line.size() >= 4 && line.substr(0, 2) == "[[" && line.substr(line.size() - 2) == "]]") {
            std::string name = detail::trim(line.substr(2, line.size() - 4));
            if (name.empty()) {
                throw ConfigError("line " + std::to_string(lineno) + ": empty table-array name");
            }
            doc.table_arrays[name].emplace_back();
            current = &doc.table_arrays[name].back();
            continue;
        }
        if (line.front() == '[' && line.back() == ']') {
            std::string name = detail::trim(line.substr(1, line.size() - 2));
            if (name.empty()) {
                throw ConfigError("line " + std::to_string(lineno) + ": empty table name");
            }
            current = &doc.tables[name];
            continue;
        }
        std::size_t eq = std::string::npos;
        bool in_str = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            char c = line[i];
            if (c == '"') in_str = !in_str;
            if (c == '=' && !in_str) {
                eq = i;
                break;
            }
        }
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        }
        std::string key = detail::trim(line.substr(0, eq));
        std::string val = detail::trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError("line " + std::to_string(lineno) + ": empty key");
        }
        current->pairs[key] = detail::parse_scalar(val, lineno);
    }
    return doc;
}

inline Document parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open file: " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

} // namespace ensy::toml
