#ifndef MNESOR_MEMBERSHIP_HPP
#define MNESOR_MEMBERSHIP_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mnesor/csv.hpp"
#include "mnesor/granular_expr.hpp"
#include "mnesor/subset_bitrop.hpp"

namespace mnesor {

/// The fixed universe of keys plus named subset-granulars, loaded from a
/// membership CSV (`key,<Org1>,...` with 0/1 cells). The universe order
/// is the file's key order.
class MembershipEnv {
public:
    MembershipEnv(std::vector<std::string> universe,
                  std::vector<std::pair<std::string, std::uint64_t>> named)
        : bitrop_(std::make_shared<const SubsetBitrop>(std::move(universe))) {
        for (auto& [name, bits] : named) {
            org_order_.push_back(name);
            named_[name] = bitrop_->from_bits(bits);
        }
    }

    static MembershipEnv from_records(const std::vector<std::vector<std::string>>& records) {
        if (records.empty()) throw DataError("membership file is empty");
        const auto& header = records.front();
        if (header.empty() || header[0] != "key")
            throw DataError("membership header must start with 'key'");

        std::vector<std::string> orgs(header.begin() + 1, header.end());
        for (std::size_t i = 0; i < orgs.size(); ++i) {
            if (orgs[i].empty()) throw DataError("membership header has an empty column name");
            for (std::size_t j = i + 1; j < orgs.size(); ++j)
                if (orgs[i] == orgs[j])
                    throw DataError("duplicate organization column: " + orgs[i]);
        }

        std::vector<std::string> universe;
        std::vector<std::uint64_t> bits(orgs.size(), 0);
        for (std::size_t r = 1; r < records.size(); ++r) {
            const auto& row = records[r];
            if (row.size() != header.size())
                throw DataError("membership row " + std::to_string(r + 1) + " has " +
                                std::to_string(row.size()) + " cells, expected " +
                                std::to_string(header.size()));
            const auto& key = row[0];
            if (key.empty()) throw DataError("membership row " + std::to_string(r + 1) +
                                             " has an empty key");
            for (const auto& k : universe)
                if (k == key) throw DataError("duplicate key in membership file: " + key);
            std::size_t idx = universe.size();
            universe.push_back(key);
            for (std::size_t c = 0; c < orgs.size(); ++c) {
                const auto& cell = row[c + 1];
                if (cell == "1")
                    bits[c] |= std::uint64_t{1} << idx;
                else if (cell != "0")
                    throw DataError("membership cell for key '" + key + "', column '" +
                                    orgs[c] + "' must be 0 or 1, got '" + cell + "'");
            }
        }

        std::vector<std::pair<std::string, std::uint64_t>> named;
        for (std::size_t c = 0; c < orgs.size(); ++c) named.push_back({orgs[c], bits[c]});
        return MembershipEnv(std::move(universe), std::move(named));
    }

    static MembershipEnv load(const std::string& path) {
        return from_records(csv::parse_file(path));
    }

    const SubsetBitrop& bitrop() const { return *bitrop_; }
    std::shared_ptr<const SubsetBitrop> shared_bitrop() const { return bitrop_; }
    const std::vector<std::string>& universe() const { return bitrop_->universe(); }
    const std::vector<std::string>& names() const { return org_order_; }

    SubsetBitrop::Granular resolve(const std::string& name) const {
        auto it = named_.find(name);
        if (it == named_.end())
            throw ResolutionError("unknown granular name: " + name + " (known: " +
                                      known_list() + ")",
                                  org_order_);
        return it->second;
    }

private:
    std::string known_list() const {
        std::string s;
        for (std::size_t i = 0; i < org_order_.size(); ++i) {
            if (i) s += ", ";
            s += org_order_[i];
        }
        return s.empty() ? "<none>" : s;
    }

    std::shared_ptr<const SubsetBitrop> bitrop_;
    std::vector<std::string> org_order_;
    std::map<std::string, SubsetBitrop::Granular> named_;
};

/// Evaluates a granular expression against the environment's boolean
/// lattice: Join = union, Meet = intersection, Complement relative to the
/// universe, Top = tau, Bottom = the empty granular.
inline SubsetBitrop::Granular eval_granular(const GranularExpr& e, const MembershipEnv& env) {
    const auto& b = env.bitrop();
    switch (e.kind) {
        case GranularExpr::Kind::Name: return env.resolve(e.name);
        case GranularExpr::Kind::Top: return b.tau();
        case GranularExpr::Kind::Bottom: return b.bottom();
        case GranularExpr::Kind::Join:
            return b.oplus(eval_granular(e.children[0], env),
                           eval_granular(e.children[1], env));
        case GranularExpr::Kind::Meet:
            return b.otimes(eval_granular(e.children[0], env),
                            eval_granular(e.children[1], env));
        case GranularExpr::Kind::Complement:
            return b.complement(eval_granular(e.children[0], env));
    }
    throw Error("unreachable granular expression kind");
}

} // namespace mnesor

#endif
