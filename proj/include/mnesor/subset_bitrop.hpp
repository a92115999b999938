#ifndef MNESOR_SUBSET_BITROP_HPP
#define MNESOR_SUBSET_BITROP_HPP

#include <atomic>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mnesor/bitrop.hpp"
#include "mnesor/errors.hpp"

namespace mnesor {

namespace detail {
inline std::uint32_t next_model_id() {
    static std::atomic<std::uint32_t> counter{1};
    return counter.fetch_add(1);
}
} // namespace detail

/// Bitrop of subsets of a fixed, ordered universe of keys.
/// oplus = union, otimes = intersection, tau = the full universe.
class SubsetBitrop {
public:
    struct Granular {
        std::uint64_t bits = 0;
        std::uint32_t model = 0;
    };

    explicit SubsetBitrop(std::vector<std::string> universe)
        : universe_(std::move(universe)), id_(detail::next_model_id()) {
        if (universe_.size() > max_universe)
            throw Error("subset universe too large (max " + std::to_string(max_universe) + ")");
    }

    static constexpr std::size_t max_universe = 20;

    Granular oplus(const Granular& a, const Granular& b) const {
        check(a); check(b);
        return {a.bits | b.bits, id_};
    }

    Granular otimes(const Granular& a, const Granular& b) const {
        check(a); check(b);
        return {a.bits & b.bits, id_};
    }

    Granular tau() const { return {full_mask(), id_}; }

    Granular bottom() const { return {0, id_}; }

    Granular complement(const Granular& a) const {
        check(a);
        return {full_mask() & ~a.bits, id_};
    }

    Granular from_bits(std::uint64_t bits) const { return {bits & full_mask(), id_}; }

    /// Build a granular from key names; unknown keys raise DataError.
    Granular make(std::initializer_list<std::string_view> keys) const {
        std::uint64_t bits = 0;
        for (auto k : keys) {
            auto idx = key_index(k);
            if (!idx) throw DataError("unknown key: " + std::string(k));
            bits |= std::uint64_t{1} << *idx;
        }
        return {bits, id_};
    }

    bool equal(const Granular& a, const Granular& b) const {
        check(a); check(b);
        return a.bits == b.bits;
    }

    bool contains(const Granular& a) const {
        return a.model == id_ && (a.bits & ~full_mask()) == 0;
    }

    std::vector<Granular> carrier() const {
        std::vector<Granular> out;
        const std::uint64_t n = std::uint64_t{1} << universe_.size();
        out.reserve(n);
        for (std::uint64_t m = 0; m < n; ++m) out.push_back({m, id_});
        return out;
    }

    std::string to_string(const Granular& a) const {
        check(a);
        std::string s = "{";
        bool first = true;
        for (std::size_t i = 0; i < universe_.size(); ++i) {
            if (a.bits >> i & 1) {
                if (!first) s += ",";
                s += universe_[i];
                first = false;
            }
        }
        return s + "}";
    }

    std::optional<Granular> parse(std::string_view s) const {
        if (s.size() < 2 || s.front() != '{' || s.back() != '}') return std::nullopt;
        s.remove_prefix(1);
        s.remove_suffix(1);
        std::uint64_t bits = 0;
        while (!s.empty()) {
            auto comma = s.find(',');
            auto part = s.substr(0, comma);
            auto idx = key_index(part);
            if (!idx) return std::nullopt;
            bits |= std::uint64_t{1} << *idx;
            if (comma == std::string_view::npos) break;
            s.remove_prefix(comma + 1);
        }
        return Granular{bits, id_};
    }

    std::string name() const { return "subset(u=" + std::to_string(universe_.size()) + ")"; }

    bool truncated() const { return false; }

    const std::vector<std::string>& universe() const { return universe_; }
    std::uint32_t id() const { return id_; }
    std::uint64_t full_mask() const {
        return universe_.empty() ? 0 : (std::uint64_t{1} << universe_.size()) - 1;
    }

    std::optional<std::size_t> key_index(std::string_view k) const {
        for (std::size_t i = 0; i < universe_.size(); ++i)
            if (universe_[i] == k) return i;
        return std::nullopt;
    }

private:
    void check(const Granular& a) const {
        if (a.model != id_)
            throw ModelMismatchError("granular belongs to a different model instance");
    }

    std::vector<std::string> universe_;
    std::uint32_t id_;
};

} // namespace mnesor

#endif
