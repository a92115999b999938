#ifndef MNESOR_SPACE_HPP
#define MNESOR_SPACE_HPP

#include <concepts>
#include <optional>
#include <string>
#include <vector>

#include "mnesor/bitrop.hpp"
#include "mnesor/errors.hpp"

namespace mnesor {

/// A mnesor space: a commutative semimodule over a bitrop. Mnesors carry
/// information; granulars select it via the external multiplication
/// (scale). All semimodule laws are checked on finite carriers, not
/// assumed.
template <class S>
concept Space = requires(const S& s, const typename S::Mnesor& m,
                         const typename S::BitropType::Granular& g, std::string_view sv) {
    typename S::Mnesor;
    typename S::BitropType;
    requires Bitrop<typename S::BitropType>;
    { s.bitrop() } -> std::convertible_to<const typename S::BitropType&>;
    { s.add(m, m) } -> std::same_as<typename S::Mnesor>;
    { s.scale(m, g) } -> std::same_as<typename S::Mnesor>;
    { s.zero() } -> std::same_as<typename S::Mnesor>;
    { s.equal(m, m) } -> std::same_as<bool>;
    { s.contains(m) } -> std::same_as<bool>;
    { s.carrier() } -> std::same_as<std::vector<typename S::Mnesor>>;
    { s.to_string(m) } -> std::same_as<std::string>;
    { s.parse(sv) } -> std::same_as<std::optional<typename S::Mnesor>>;
    { s.name() } -> std::same_as<std::string>;
    // Classifies a failed witness search for scale(base, ?) = target:
    // true when a witness may exist just outside the truncated carrier.
    { s.missing_witness_is_boundary(m, m) } -> std::same_as<bool>;
};

/// x is a prefix of a iff x + a = a (the addition ordering).
template <Space S>
bool is_prefix(const S& s, const typename S::Mnesor& x, const typename S::Mnesor& a) {
    return s.equal(s.add(x, a), a);
}

/// Least lambda in B+ (canonical carrier order) with a * lambda = x, i.e.
/// the witness placing x in the orbit set of a.
template <Space S>
std::optional<typename S::BitropType::Granular>
orbit_witness(const S& s, const typename S::Mnesor& x, const typename S::Mnesor& a) {
    const auto& b = s.bitrop();
    for (const auto& lambda : b.carrier()) {
        if (!is_positive(b, lambda)) continue;
        if (s.equal(s.scale(a, lambda), x)) return lambda;
    }
    return std::nullopt;
}

/// Canonical granular alpha in B+ with (x + y) * alpha = x. Throws
/// AbsenceError when no witness exists in the carrier, naming the
/// violated absorption property.
template <Space S>
typename S::BitropType::Granular
absorption_granular(const S& s, const typename S::Mnesor& x, const typename S::Mnesor& y) {
    auto w = orbit_witness(s, x, s.add(x, y));
    if (!w)
        throw AbsenceError("no absorption witness for x=" + s.to_string(x) + ", y=" +
                           s.to_string(y) + " in " + s.name() +
                           ": the model violates the absorption property");
    return *w;
}

/// x o y = y * alpha for any alpha with (x + y) * alpha = x; the result
/// does not depend on the witness (checker-verified uniqueness).
template <Space S>
typename S::Mnesor intersect(const S& s, const typename S::Mnesor& x,
                             const typename S::Mnesor& y) {
    return s.scale(y, absorption_granular(s, x, y));
}

/// Every lambda in the bitrop carrier with (x + y) * lambda = x, in
/// canonical carrier order. Not restricted to B+; the uniqueness theorem
/// is about all witnesses of the defining equation.
template <Space S>
std::vector<typename S::BitropType::Granular>
find_all_witnesses(const S& s, const typename S::Mnesor& x, const typename S::Mnesor& y) {
    const auto sum = s.add(x, y);
    std::vector<typename S::BitropType::Granular> out;
    for (const auto& lambda : s.bitrop().carrier())
        if (s.equal(s.scale(sum, lambda), x)) out.push_back(lambda);
    return out;
}

} // namespace mnesor

#endif
