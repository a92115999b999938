#ifndef MNESOR_CSV_HPP
#define MNESOR_CSV_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "mnesor/errors.hpp"

namespace mnesor::csv {

/// Splits one CSV record. Standard quoting: fields may be wrapped in
/// double quotes, with "" as an escaped quote.
inline std::vector<std::string> split_record(std::string_view line, std::size_t lineno) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    i += 2;
                    continue;
                }
                quoted = false;
                ++i;
                continue;
            }
            cur += c;
            ++i;
            continue;
        }
        if (c == '"' && cur.empty()) {
            quoted = true;
            ++i;
            continue;
        }
        if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
            ++i;
            continue;
        }
        cur += c;
        ++i;
    }
    if (quoted)
        throw DataError("line " + std::to_string(lineno) + ": unterminated quoted field");
    fields.push_back(std::move(cur));
    return fields;
}

inline std::vector<std::vector<std::string>> parse(std::istream& in) {
    std::vector<std::vector<std::string>> records;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        records.push_back(split_record(line, lineno));
    }
    return records;
}

inline std::vector<std::vector<std::string>> parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open file: " + path);
    return parse(in);
}

inline std::string quote_field(const std::string& f) {
    if (f.find_first_of(",\"\n") == std::string::npos) return f;
    std::string out = "\"";
    for (char c : f) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string format_record(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += quote_field(fields[i]);
    }
    return out;
}

} // namespace mnesor::csv

#endif
