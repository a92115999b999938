#ifndef MNESOR_TROPICAL_SPACE_HPP
#define MNESOR_TROPICAL_SPACE_HPP

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mnesor/minplus_bitrop.hpp"
#include "mnesor/space.hpp"

namespace mnesor {

/// Integer-carrier mnesor space that satisfies the full semimodule suite
/// at desk scale. Mnesors are integers in [floor, 0]; add = min with 0 as
/// the identity; scale(x, lambda) = min(x + lambda, 0) with lambda from
/// the truncated tropical cone [0, -floor]. The cone's saturating
/// multiplication matches the clamp, so every law closes inside the
/// carriers.
class TruncatedTropicalSpace {
public:
    using BitropType = TropicalConeBitrop;

    struct Mnesor {
        long long v = 0;
        std::uint32_t model = 0;
    };

    explicit TruncatedTropicalSpace(long long floor)
        : floor_(floor),
          bitrop_(std::make_shared<const TropicalConeBitrop>(-floor)),
          id_(detail::next_model_id()) {
        if (floor > 0) throw Error("truncated-tropical floor must be <= 0");
    }

    const TropicalConeBitrop& bitrop() const { return *bitrop_; }

    Mnesor add(const Mnesor& x, const Mnesor& y) const {
        check(x); check(y);
        return {std::min(x.v, y.v), id_};
    }

    Mnesor scale(const Mnesor& x, const TropicalConeBitrop::Granular& lambda) const {
        check(x);
        if (lambda.model != bitrop_->id())
            throw ModelMismatchError("granular belongs to a different bitrop instance");
        return {std::min(x.v + lambda.v, 0LL), id_};
    }

    Mnesor zero() const { return {0, id_}; }

    Mnesor make(long long v) const { return {v, id_}; }

    bool equal(const Mnesor& x, const Mnesor& y) const {
        check(x); check(y);
        return x.v == y.v;
    }

    bool contains(const Mnesor& x) const {
        return x.model == id_ && x.v >= floor_ && x.v <= 0;
    }

    std::vector<Mnesor> carrier() const {
        std::vector<Mnesor> out;
        out.reserve(static_cast<std::size_t>(-floor_ + 1));
        for (long long v = floor_; v <= 0; ++v) out.push_back({v, id_});
        return out;
    }

    std::string to_string(const Mnesor& x) const {
        check(x);
        return std::to_string(x.v);
    }

    std::optional<Mnesor> parse(std::string_view s) const {
        auto v = detail::parse_int(s);
        if (!v) return std::nullopt;
        return Mnesor{*v, id_};
    }

    std::string name() const {
        return "truncated-tropical[" + std::to_string(floor_) + "..0]";
    }

    bool missing_witness_is_boundary(const Mnesor&, const Mnesor&) const { return true; }

    long long floor() const { return floor_; }
    std::uint32_t id() const { return id_; }

private:
    void check(const Mnesor& x) const {
        if (x.model != id_)
            throw ModelMismatchError("mnesor belongs to a different model instance");
    }

    long long floor_;
    std::shared_ptr<const TropicalConeBitrop> bitrop_;
    std::uint32_t id_;
};

/// Near-model over the min-plus bitrop: integers in [lo, hi] extended
/// with an identity element (written "inf", the neutral of min); add =
/// min, zero = inf, scale(x, lambda) = x + lambda exactly. Violates the
/// semimodule absorption property at x = inf, which the checker reports
/// as a genuine failure rather than a truncation artifact.
class ExtendedMinPlusSpace {
public:
    using BitropType = MinPlusBitrop;

    struct Mnesor {
        long long v = 0;
        bool inf = false;
        std::uint32_t model = 0;
    };

    ExtendedMinPlusSpace(long long lo, long long hi)
        : bitrop_(std::make_shared<const MinPlusBitrop>(lo, hi)),
          id_(detail::next_model_id()) {}

    const MinPlusBitrop& bitrop() const { return *bitrop_; }

    Mnesor add(const Mnesor& x, const Mnesor& y) const {
        check(x); check(y);
        if (x.inf) return y;
        if (y.inf) return x;
        return {std::min(x.v, y.v), false, id_};
    }

    Mnesor scale(const Mnesor& x, const MinPlusBitrop::Granular& lambda) const {
        check(x);
        if (lambda.model != bitrop_->id())
            throw ModelMismatchError("granular belongs to a different bitrop instance");
        if (x.inf) return x;
        return {x.v + lambda.v, false, id_};
    }

    Mnesor zero() const { return {0, true, id_}; }

    Mnesor make(long long v) const { return {v, false, id_}; }

    bool equal(const Mnesor& x, const Mnesor& y) const {
        check(x); check(y);
        if (x.inf || y.inf) return x.inf == y.inf;
        return x.v == y.v;
    }

    bool contains(const Mnesor& x) const {
        return x.model == id_ && (x.inf || (x.v >= bitrop_->lo() && x.v <= bitrop_->hi()));
    }

    // Identity element first, so failures that involve it are found first.
    std::vector<Mnesor> carrier() const {
        std::vector<Mnesor> out;
        out.push_back(zero());
        for (long long v = bitrop_->lo(); v <= bitrop_->hi(); ++v)
            out.push_back({v, false, id_});
        return out;
    }

    std::string to_string(const Mnesor& x) const {
        check(x);
        return x.inf ? "inf" : std::to_string(x.v);
    }

    std::optional<Mnesor> parse(std::string_view s) const {
        if (s == "inf") return zero();
        auto v = detail::parse_int(s);
        if (!v) return std::nullopt;
        return Mnesor{*v, false, id_};
    }

    std::string name() const {
        return "extended-minplus[" + std::to_string(bitrop_->lo()) + ".." +
               std::to_string(bitrop_->hi()) + "]+inf";
    }

    // Finite target and base: a witness exists in the untruncated cone,
    // so a failed in-carrier search is a boundary artifact. Any case
    // involving the identity element is genuine.
    bool missing_witness_is_boundary(const Mnesor& target, const Mnesor& base) const {
        return !target.inf && !base.inf;
    }

    std::uint32_t id() const { return id_; }

private:
    void check(const Mnesor& x) const {
        if (x.model != id_)
            throw ModelMismatchError("mnesor belongs to a different model instance");
    }

    std::shared_ptr<const MinPlusBitrop> bitrop_;
    std::uint32_t id_;
};

} // namespace mnesor

#endif
