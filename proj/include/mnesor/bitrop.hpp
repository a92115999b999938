#ifndef MNESOR_BITROP_HPP
#define MNESOR_BITROP_HPP

#include <concepts>
#include <optional>
#include <string>
#include <vector>

#include "mnesor/errors.hpp"

namespace mnesor {

/// A bitrop: a set with a commutative addition (oplus), a distributive
/// multiplication (otimes) and a center tau acting as multiplicative
/// identity. Concrete models implement this interface over a finite,
/// enumerable carrier; all laws are checked rather than assumed.
template <class B>
concept Bitrop = requires(const B& b, const typename B::Granular& g, std::string_view s) {
    typename B::Granular;
    { b.oplus(g, g) } -> std::same_as<typename B::Granular>;
    { b.otimes(g, g) } -> std::same_as<typename B::Granular>;
    { b.tau() } -> std::same_as<typename B::Granular>;
    { b.equal(g, g) } -> std::same_as<bool>;
    { b.contains(g) } -> std::same_as<bool>;
    { b.carrier() } -> std::same_as<std::vector<typename B::Granular>>;
    { b.to_string(g) } -> std::same_as<std::string>;
    { b.parse(s) } -> std::same_as<std::optional<typename B::Granular>>;
    { b.name() } -> std::same_as<std::string>;
    // True when the carrier is a finite window onto an infinite structure;
    // witness searches that fail on such models are boundary artifacts.
    { b.truncated() } -> std::same_as<bool>;
};

/// lambda is positive iff lambda + tau = tau. The positive cone B+ holds
/// the admissible scaling factors.
template <Bitrop B>
bool is_positive(const B& b, const typename B::Granular& lambda) {
    return b.equal(b.oplus(lambda, b.tau()), b.tau());
}

/// The positive cone in canonical carrier order.
template <Bitrop B>
std::vector<typename B::Granular> positive_cone(const B& b) {
    std::vector<typename B::Granular> cone;
    for (const auto& g : b.carrier())
        if (is_positive(b, g)) cone.push_back(g);
    return cone;
}

/// Least alpha in B+ (canonical carrier order) with (x + y) * alpha = x,
/// if one exists in the finite carrier.
template <Bitrop B>
std::optional<typename B::Granular>
bitrop_absorption_witness(const B& b, const typename B::Granular& x,
                          const typename B::Granular& y) {
    const auto sum = b.oplus(x, y);
    for (const auto& alpha : b.carrier()) {
        if (!is_positive(b, alpha)) continue;
        if (b.equal(b.otimes(sum, alpha), x)) return alpha;
    }
    return std::nullopt;
}

} // namespace mnesor

#endif
