#ifndef MNESOR_RELALG_HPP
#define MNESOR_RELALG_HPP

#include <utility>

#include "mnesor/membership.hpp"
#include "mnesor/relation_space.hpp"
#include "mnesor/space.hpp"
#include "mnesor/table.hpp"

namespace mnesor {

/// Binds a loaded membership environment to one relation-model mnesor
/// space and exposes the three query operations. The key-set semantics of
/// every operation comes from the mnesor algebra; this layer only
/// materializes rows for the keys the algebra selects.
class Relalg {
public:
    explicit Relalg(MembershipEnv env)
        : env_(std::move(env)), space_(env_.shared_bitrop()) {}

    const MembershipEnv& env() const { return env_; }
    const RelationSpace& space() const { return space_; }

    RelationSpace::Mnesor key_mnesor(const Table& t) const {
        std::uint64_t bits = 0;
        for (const auto& [key, values] : t.rows)
            bits |= std::uint64_t{1} << *env_.bitrop().key_index(key);
        return space_.from_bits(bits);
    }

    /// Set union: the mnesor addition. No union-compatibility: attribute
    /// sets merge, absent values become empty cells. Conflicting non-null
    /// values for one key and attribute are an error.
    Table table_union(const Table& a, const Table& b) const {
        auto keys = space_.add(key_mnesor(a), key_mnesor(b));
        return materialize(keys, a, b);
    }

    /// Intersection: the mnesor operation x o y, computed through the
    /// absorption witness.
    Table table_intersection(const Table& a, const Table& b) const {
        auto keys = intersect(space_, key_mnesor(a), key_mnesor(b));
        return materialize(keys, a, b);
    }

    /// Selection: the external multiplication by the evaluated granular.
    Table select(const Table& t, const GranularExpr& e) const {
        auto keys = space_.scale(key_mnesor(t), eval_granular(e, env_));
        Table out;
        out.attrs = t.attrs;
        for (const auto& [key, values] : t.rows)
            if (keys.bits >> *env_.bitrop().key_index(key) & 1) out.rows[key] = values;
        return out;
    }

    Table select(const Table& t, std::string_view expr_text) const {
        return select(t, parse_granular(expr_text));
    }

    Table load(const std::string& path) const { return load_table(path, env_); }

private:
    /// Builds the result table for a key mnesor, merging row payloads
    /// from both sources.
    Table materialize(const RelationSpace::Mnesor& keys, const Table& a,
                      const Table& b) const {
        Table out;
        out.attrs = a.attrs;
        for (const auto& attr : b.attrs) {
            bool seen = false;
            for (const auto& existing : out.attrs)
                if (existing == attr) { seen = true; break; }
            if (!seen) out.attrs.push_back(attr);
        }
        for (std::size_t i = 0; i < env_.universe().size(); ++i) {
            if (!(keys.bits >> i & 1)) continue;
            const auto& key = env_.universe()[i];
            std::vector<std::string> values;
            for (const auto& attr : out.attrs) {
                std::string va = a.has_key(key) ? a.value(key, attr) : std::string{};
                std::string vb = b.has_key(key) ? b.value(key, attr) : std::string{};
                if (!va.empty() && !vb.empty() && va != vb)
                    throw DataError("conflicting values for key '" + key +
                                    "', attribute '" + attr + "': '" + va + "' vs '" +
                                    vb + "'");
                values.push_back(va.empty() ? vb : va);
            }
            out.rows[key] = std::move(values);
        }
        return out;
    }

    MembershipEnv env_;
    RelationSpace space_;
};

} // namespace mnesor

#endif
