#ifndef MNESOR_RELATION_SPACE_HPP
#define MNESOR_RELATION_SPACE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mnesor/space.hpp"
#include "mnesor/subset_bitrop.hpp"

namespace mnesor {

/// Mnesor space of key sets over a fixed universe, the algebraic core of
/// the relation model. A mnesor is the key set of a table; add = union,
/// scale(x, lambda) keeps the keys selected by the subset-granular
/// lambda, zero = the empty key set.
class RelationSpace {
public:
    using BitropType = SubsetBitrop;

    struct Mnesor {
        std::uint64_t bits = 0;
        std::uint32_t model = 0;
    };

    explicit RelationSpace(std::shared_ptr<const SubsetBitrop> bitrop)
        : bitrop_(std::move(bitrop)), id_(detail::next_model_id()) {}

    explicit RelationSpace(std::vector<std::string> universe)
        : RelationSpace(std::make_shared<const SubsetBitrop>(std::move(universe))) {}

    const SubsetBitrop& bitrop() const { return *bitrop_; }

    Mnesor add(const Mnesor& x, const Mnesor& y) const {
        check(x); check(y);
        return {x.bits | y.bits, id_};
    }

    Mnesor scale(const Mnesor& x, const SubsetBitrop::Granular& lambda) const {
        check(x);
        if (lambda.model != bitrop_->id())
            throw ModelMismatchError("granular belongs to a different bitrop instance");
        return {x.bits & lambda.bits, id_};
    }

    Mnesor zero() const { return {0, id_}; }

    Mnesor from_bits(std::uint64_t bits) const { return {bits & bitrop_->full_mask(), id_}; }

    Mnesor make(std::initializer_list<std::string_view> keys) const {
        return {bitrop_->make(keys).bits, id_};
    }

    bool equal(const Mnesor& x, const Mnesor& y) const {
        check(x); check(y);
        return x.bits == y.bits;
    }

    bool contains(const Mnesor& x) const {
        return x.model == id_ && (x.bits & ~bitrop_->full_mask()) == 0;
    }

    std::vector<Mnesor> carrier() const {
        std::vector<Mnesor> out;
        const std::uint64_t n = std::uint64_t{1} << bitrop_->universe().size();
        out.reserve(n);
        for (std::uint64_t m = 0; m < n; ++m) out.push_back({m, id_});
        return out;
    }

    std::string to_string(const Mnesor& x) const {
        check(x);
        return bitrop_->to_string({x.bits, bitrop_->id()});
    }

    std::optional<Mnesor> parse(std::string_view s) const {
        auto g = bitrop_->parse(s);
        if (!g) return std::nullopt;
        return Mnesor{g->bits, id_};
    }

    std::string name() const {
        return "relation(u=" + std::to_string(bitrop_->universe().size()) + ")";
    }

    bool missing_witness_is_boundary(const Mnesor&, const Mnesor&) const { return false; }

    std::uint32_t id() const { return id_; }

private:
    void check(const Mnesor& x) const {
        if (x.model != id_)
            throw ModelMismatchError("mnesor belongs to a different model instance");
    }

    std::shared_ptr<const SubsetBitrop> bitrop_;
    std::uint32_t id_;
};

} // namespace mnesor

#endif
