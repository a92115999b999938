#ifndef MNESOR_MINPLUS_BITROP_HPP
#define MNESOR_MINPLUS_BITROP_HPP

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mnesor/bitrop.hpp"
#include "mnesor/errors.hpp"
#include "mnesor/subset_bitrop.hpp"

namespace mnesor {

namespace detail {
inline std::optional<long long> parse_int(std::string_view s) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}
} // namespace detail

/// Min-plus bitrop over a bounded integer interval [lo, hi].
/// oplus = min, otimes = exact integer addition, tau = 0.
/// otimes may leave the interval; the carrier is a finite window onto the
/// infinite min-plus integers, so contains() and truncated() let the
/// checker tell truncation artifacts from genuine failures.
class MinPlusBitrop {
public:
    struct Granular {
        long long v = 0;
        std::uint32_t model = 0;
    };

    MinPlusBitrop(long long lo, long long hi)
        : lo_(lo), hi_(hi), id_(detail::next_model_id()) {
        if (lo > 0 || hi < 0) throw Error("min-plus range must contain 0 (the center)");
    }

    Granular oplus(const Granular& a, const Granular& b) const {
        check(a); check(b);
        return {std::min(a.v, b.v), id_};
    }

    Granular otimes(const Granular& a, const Granular& b) const {
        check(a); check(b);
        return {a.v + b.v, id_};
    }

    Granular tau() const { return {0, id_}; }

    Granular make(long long v) const { return {v, id_}; }

    bool equal(const Granular& a, const Granular& b) const {
        check(a); check(b);
        return a.v == b.v;
    }

    bool contains(const Granular& a) const {
        return a.model == id_ && a.v >= lo_ && a.v <= hi_;
    }

    std::vector<Granular> carrier() const {
        std::vector<Granular> out;
        out.reserve(static_cast<std::size_t>(hi_ - lo_ + 1));
        for (long long v = lo_; v <= hi_; ++v) out.push_back({v, id_});
        return out;
    }

    std::string to_string(const Granular& a) const {
        check(a);
        return std::to_string(a.v);
    }

    std::optional<Granular> parse(std::string_view s) const {
        auto v = detail::parse_int(s);
        if (!v) return std::nullopt;
        return Granular{*v, id_};
    }

    std::string name() const {
        return "minplus[" + std::to_string(lo_) + ".." + std::to_string(hi_) + "]";
    }

    bool truncated() const { return true; }

    long long lo() const { return lo_; }
    long long hi() const { return hi_; }
    std::uint32_t id() const { return id_; }

private:
    void check(const Granular& a) const {
        if (a.model != id_)
            throw ModelMismatchError("granular belongs to a different model instance");
    }

    long long lo_, hi_;
    std::uint32_t id_;
};

/// The positive cone of the tropical integers, truncated at `top` with a
/// saturating multiplication: carrier [0, top], oplus = min,
/// otimes = min(a + b, top), tau = 0. Closed under both operations, which
/// makes it a fully checkable scalar structure for the truncated-tropical
/// mnesor space.
class TropicalConeBitrop {
public:
    struct Granular {
        long long v = 0;
        std::uint32_t model = 0;
    };

    explicit TropicalConeBitrop(long long top)
        : top_(top), id_(detail::next_model_id()) {
        if (top < 0) throw Error("tropical cone top must be >= 0");
    }

    Granular oplus(const Granular& a, const Granular& b) const {
        check(a); check(b);
        return {std::min(a.v, b.v), id_};
    }

    Granular otimes(const Granular& a, const Granular& b) const {
        check(a); check(b);
        return {std::min(a.v + b.v, top_), id_};
    }

    Granular tau() const { return {0, id_}; }

    Granular make(long long v) const { return {v, id_}; }

    bool equal(const Granular& a, const Granular& b) const {
        check(a); check(b);
        return a.v == b.v;
    }

    bool contains(const Granular& a) const {
        return a.model == id_ && a.v >= 0 && a.v <= top_;
    }

    std::vector<Granular> carrier() const {
        std::vector<Granular> out;
        out.reserve(static_cast<std::size_t>(top_ + 1));
        for (long long v = 0; v <= top_; ++v) out.push_back({v, id_});
        return out;
    }

    std::string to_string(const Granular& a) const {
        check(a);
        return std::to_string(a.v);
    }

    std::optional<Granular> parse(std::string_view s) const {
        auto v = detail::parse_int(s);
        if (!v) return std::nullopt;
        return Granular{*v, id_};
    }

    std::string name() const { return "tropical-cone[0.." + std::to_string(top_) + "]"; }

    bool truncated() const { return true; }

    long long top() const { return top_; }
    std::uint32_t id() const { return id_; }

private:
    void check(const Granular& a) const {
        if (a.model != id_)
            throw ModelMismatchError("granular belongs to a different model instance");
    }

    long long top_;
    std::uint32_t id_;
};

} // namespace mnesor

#endif
