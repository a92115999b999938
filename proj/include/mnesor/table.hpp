#ifndef MNESOR_TABLE_HPP
#define MNESOR_TABLE_HPP

#include <map>
#include <string>
#include <vector>

#include "mnesor/csv.hpp"
#include "mnesor/membership.hpp"

namespace mnesor {

/// A table: rows keyed by the designated key column, plus an ordered set
/// of non-key attribute names. An empty cell is an explicit null. Row
/// values are aligned with `attrs`. std::map keeps rows sorted by key
/// byte-wise, the output order.
struct Table {
    std::vector<std::string> attrs;
    std::map<std::string, std::vector<std::string>> rows;

    bool has_key(const std::string& key) const { return rows.count(key) != 0; }

    std::string value(const std::string& key, const std::string& attr) const {
        auto rit = rows.find(key);
        if (rit == rows.end()) return {};
        for (std::size_t i = 0; i < attrs.size(); ++i)
            if (attrs[i] == attr) return rit->second[i];
        return {};
    }

    bool operator==(const Table&) const = default;
};

/// Parses table records (`key[,attr...]`) and validates against the
/// universe. Distinct diagnostics for malformed CSV, duplicate keys and
/// keys outside the universe.
inline Table table_from_records(const std::vector<std::vector<std::string>>& records,
                                const MembershipEnv& env) {
    if (records.empty()) throw DataError("table file is empty");
    const auto& header = records.front();
    if (header.empty() || header[0] != "key")
        throw DataError("table header must start with 'key'");

    Table t;
    t.attrs.assign(header.begin() + 1, header.end());
    for (std::size_t i = 0; i < t.attrs.size(); ++i)
        for (std::size_t j = i + 1; j < t.attrs.size(); ++j)
            if (t.attrs[i] == t.attrs[j])
                throw DataError("duplicate attribute column: " + t.attrs[i]);

    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto& row = records[r];
        if (row.size() != header.size())
            throw DataError("table row " + std::to_string(r + 1) + " has " +
                            std::to_string(row.size()) + " cells, expected " +
                            std::to_string(header.size()));
        const auto& key = row[0];
        if (!env.bitrop().key_index(key))
            throw DataError("key outside universe: " + key);
        if (t.has_key(key)) throw DataError("duplicate key in table: " + key);
        t.rows[key] = std::vector<std::string>(row.begin() + 1, row.end());
    }
    return t;
}

inline Table load_table(const std::string& path, const MembershipEnv& env) {
    return table_from_records(csv::parse_file(path), env);
}

inline std::string table_to_csv(const Table& t) {
    std::vector<std::string> header{"key"};
    header.insert(header.end(), t.attrs.begin(), t.attrs.end());
    std::string out = csv::format_record(header) + "\n";
    for (const auto& [key, values] : t.rows) {
        std::vector<std::string> rec{key};
        rec.insert(rec.end(), values.begin(), values.end());
        out += csv::format_record(rec) + "\n";
    }
    return out;
}

} // namespace mnesor

#endif
