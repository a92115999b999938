#ifndef MNESOR_CHECKER_HPP
#define MNESOR_CHECKER_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "mnesor/bitrop.hpp"
#include "mnesor/errors.hpp"
#include "mnesor/minplus_bitrop.hpp"
#include "mnesor/relation_space.hpp"
#include "mnesor/report.hpp"
#include "mnesor/space.hpp"
#include "mnesor/subset_bitrop.hpp"
#include "mnesor/tropical_space.hpp"

namespace mnesor {

/// Outcome of evaluating one property at one assignment.
struct CaseOutcome {
    enum Kind { Holds, Restricted, Violated } kind = Holds;
    std::string lhs, rhs;

    static CaseOutcome holds() { return {}; }
    static CaseOutcome restricted() { return {Restricted, "", ""}; }
    static CaseOutcome violated(std::string l, std::string r) {
        return {Violated, std::move(l), std::move(r)};
    }
};

enum class BitropVarSort { Carrier, Cone };
enum class SpaceVarSort { Mnesor, Granular };

template <Bitrop B>
struct BitropProperty {
    std::string label;
    std::vector<std::string> vars;
    std::vector<BitropVarSort> sorts;
    std::function<CaseOutcome(const B&, const std::vector<typename B::Granular>&)> eval;
};

template <Space S>
struct SpaceProperty {
    std::string label;
    std::vector<std::string> vars;
    std::vector<SpaceVarSort> sorts;
    std::function<CaseOutcome(const S&, const std::vector<typename S::Mnesor>&,
                              const std::vector<typename S::BitropType::Granular>&)>
        eval;
};

namespace detail {

inline unsigned long long saturating_mul(unsigned long long a, unsigned long long b) {
    if (a == 0 || b == 0) return 0;
    if (a > std::numeric_limits<unsigned long long>::max() / b)
        return std::numeric_limits<unsigned long long>::max();
    return a * b;
}

/// Lexicographic odometer over mixed-radix indices, leftmost digit
/// slowest. Returns false once the space is exhausted.
inline bool advance(std::vector<std::size_t>& idx, const std::vector<std::size_t>& sizes) {
    for (std::size_t i = idx.size(); i-- > 0;) {
        if (++idx[i] < sizes[i]) return true;
        idx[i] = 0;
    }
    return false;
}

template <class EvalAt>
PropertyResult run_property(const std::string& label,
                            const std::vector<std::pair<std::string, std::size_t>>& var_sizes,
                            bool exhaustive, unsigned long long random_cases,
                            std::mt19937_64& rng, EvalAt&& eval_at) {
    PropertyResult res;
    res.label = label;

    std::vector<std::size_t> sizes;
    for (const auto& [name, sz] : var_sizes) sizes.push_back(sz);

    unsigned long long restricted = 0;
    auto record = [&](const std::vector<std::size_t>& idx) -> bool {
        CaseOutcome out = eval_at(idx);
        ++res.cases;
        if (out.kind == CaseOutcome::Violated) {
            CounterexampleDoc c;
            c.property = label;
            c.lhs = out.lhs;
            c.rhs = out.rhs;
            // bindings filled by the caller through eval_at's printing hook
            res.counterexample = std::move(c);
            res.status = Status::Fail;
            return false;
        }
        if (out.kind == CaseOutcome::Restricted) ++restricted;
        return true;
    };

    bool empty_domain = std::any_of(sizes.begin(), sizes.end(),
                                    [](std::size_t s) { return s == 0; });
    if (empty_domain) {
        res.status = Status::Pass; // vacuous
        return res;
    }

    if (exhaustive) {
        std::vector<std::size_t> idx(sizes.size(), 0);
        do {
            if (!record(idx)) break;
        } while (!idx.empty() && advance(idx, sizes));
        if (idx.empty() && res.cases == 0) record(idx); // zero-variable property
    } else {
        std::vector<std::size_t> idx(sizes.size(), 0);
        for (unsigned long long n = 0; n < random_cases; ++n) {
            for (std::size_t i = 0; i < sizes.size(); ++i)
                idx[i] = static_cast<std::size_t>(rng() % sizes[i]);
            if (!record(idx)) break;
        }
    }

    if (res.status != Status::Fail)
        res.status = restricted > 0 ? Status::Restricted : Status::Pass;
    return res;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Bitrop property suite
// ---------------------------------------------------------------------------

template <Bitrop B>
std::vector<BitropProperty<B>> bitrop_properties() {
    using G = typename B::Granular;
    using P = BitropProperty<B>;
    auto C = BitropVarSort::Carrier;
    auto K = BitropVarSort::Cone;

    auto eq_check = [](const B& b, const G& l, const G& r) {
        return b.equal(l, r) ? CaseOutcome::holds()
                             : CaseOutcome::violated(b.to_string(l), b.to_string(r));
    };
    auto closed = [](const B& b, const G& r) {
        if (b.contains(r)) return CaseOutcome::holds();
        return b.truncated() ? CaseOutcome::restricted()
                             : CaseOutcome::violated(b.to_string(r), "not in carrier");
    };

    std::vector<P> props;
    props.push_back({"oplus-commutative", {"x", "y"}, {C, C},
        [eq_check](const B& b, const std::vector<G>& g) {
            return eq_check(b, b.oplus(g[0], g[1]), b.oplus(g[1], g[0]));
        }});
    props.push_back({"oplus-associative", {"x", "y", "z"}, {C, C, C},
        [eq_check](const B& b, const std::vector<G>& g) {
            return eq_check(b, b.oplus(b.oplus(g[0], g[1]), g[2]),
                            b.oplus(g[0], b.oplus(g[1], g[2])));
        }});
    props.push_back({"otimes-commutative", {"x", "y"}, {C, C},
        [eq_check](const B& b, const std::vector<G>& g) {
            return eq_check(b, b.otimes(g[0], g[1]), b.otimes(g[1], g[0]));
        }});
    props.push_back({"otimes-associative", {"x", "y", "z"}, {C, C, C},
        [eq_check](const B& b, const std::vector<G>& g) {
            return eq_check(b, b.otimes(b.otimes(g[0], g[1]), g[2]),
                            b.otimes(g[0], b.otimes(g[1], g[2])));
        }});
    props.push_back({"otimes-distributes-left", {"x", "y", "z"}, {C, C, C},
        [eq_check](const B& b, const std::vector<G>& g) {
            return eq_check(b, b.otimes(g[0], b.oplus(g[1], g[2])),
                            b.oplus(b.otimes(g[0], g[1]), b.otimes(g[0], g[2])));
        }});
    props.push_back({"otimes-distributes-right", {"x", "y", "z"}, {C, C, C},
        [eq_check](const B& b, const std::vector<G>& g) {
            return eq_check(b, b.otimes(b.oplus(g[1], g[2]), g[0]),
                            b.oplus(b.otimes(g[1], g[0]), b.otimes(g[2], g[0])));
        }});
    // (1) x (*) tau = x
    props.push_back({"unital", {"x"}, {C},
        [eq_check](const B& b, const std::vector<G>& g) {
            return eq_check(b, b.otimes(g[0], b.tau()), g[0]);
        }});
    // (2) tau (+) tau = tau
    props.push_back({"center-idempotent", {}, {},
        [eq_check](const B& b, const std::vector<G>&) {
            return eq_check(b, b.oplus(b.tau(), b.tau()), b.tau());
        }});
    // (3) exists alpha in B+ with (x (+) y) (*) alpha = x
    props.push_back({"absorption", {"x", "y"}, {C, C},
        [](const B& b, const std::vector<G>& g) {
            if (bitrop_absorption_witness(b, g[0], g[1])) return CaseOutcome::holds();
            if (b.truncated()) return CaseOutcome::restricted();
            return CaseOutcome::violated("no alpha in B+ with (x (+) y) (*) alpha = x",
                                         b.to_string(g[0]));
        }});
    // (4) x (*) lambda = x (*) mu implies lambda = mu, for lambda, mu in B+
    props.push_back({"cancellation", {"x", "lambda", "mu"}, {C, K, K},
        [](const B& b, const std::vector<G>& g) {
            if (b.equal(b.otimes(g[0], g[1]), b.otimes(g[0], g[2])) &&
                !b.equal(g[1], g[2]))
                return CaseOutcome::violated(b.to_string(g[1]), b.to_string(g[2]));
            return CaseOutcome::holds();
        }});
    props.push_back({"oplus-closed", {"x", "y"}, {C, C},
        [closed](const B& b, const std::vector<G>& g) {
            return closed(b, b.oplus(g[0], g[1]));
        }});
    props.push_back({"otimes-closed", {"x", "y"}, {C, C},
        [closed](const B& b, const std::vector<G>& g) {
            return closed(b, b.otimes(g[0], g[1]));
        }});
    // Whether B+ is closed under the operations is unstated; measured here.
    props.push_back({"cone-oplus-closed", {"lambda", "mu"}, {K, K},
        [](const B& b, const std::vector<G>& g) {
            auto r = b.oplus(g[0], g[1]);
            if (!b.contains(r))
                return b.truncated() ? CaseOutcome::restricted()
                                     : CaseOutcome::violated(b.to_string(r), "not in carrier");
            return is_positive(b, r)
                       ? CaseOutcome::holds()
                       : CaseOutcome::violated(b.to_string(r), "not in B+");
        }});
    props.push_back({"cone-otimes-closed", {"lambda", "mu"}, {K, K},
        [](const B& b, const std::vector<G>& g) {
            auto r = b.otimes(g[0], g[1]);
            if (!b.contains(r))
                return b.truncated() ? CaseOutcome::restricted()
                                     : CaseOutcome::violated(b.to_string(r), "not in carrier");
            return is_positive(b, r)
                       ? CaseOutcome::holds()
                       : CaseOutcome::violated(b.to_string(r), "not in B+");
        }});
    return props;
}

// ---------------------------------------------------------------------------
// Mnesor space property suite
// ---------------------------------------------------------------------------

template <Space S>
std::vector<SpaceProperty<S>> space_properties() {
    using M = typename S::Mnesor;
    using G = typename S::BitropType::Granular;
    using P = SpaceProperty<S>;
    auto Mn = SpaceVarSort::Mnesor;
    auto Gr = SpaceVarSort::Granular;

    auto eq_check = [](const S& s, const M& l, const M& r) {
        return s.equal(l, r) ? CaseOutcome::holds()
                             : CaseOutcome::violated(s.to_string(l), s.to_string(r));
    };
    // Least cone witness for scale(base, ?) = target, or nullopt.
    auto witness = [](const S& s, const M& target, const M& base) {
        return orbit_witness(s, target, base);
    };

    std::vector<P> props;
    props.push_back({"zero-identity", {"x"}, {Mn},
        [eq_check](const S& s, const std::vector<M>& m, const std::vector<G>&) {
            return eq_check(s, s.add(m[0], s.zero()), m[0]);
        }});
    props.push_back({"add-commutative", {"x", "y"}, {Mn, Mn},
        [eq_check](const S& s, const std::vector<M>& m, const std::vector<G>&) {
            return eq_check(s, s.add(m[0], m[1]), s.add(m[1], m[0]));
        }});
    props.push_back({"add-associative", {"x", "y", "z"}, {Mn, Mn, Mn},
        [eq_check](const S& s, const std::vector<M>& m, const std::vector<G>&) {
            return eq_check(s, s.add(s.add(m[0], m[1]), m[2]),
                            s.add(m[0], s.add(m[1], m[2])));
        }});
    props.push_back({"add-idempotent", {"x"}, {Mn},
        [eq_check](const S& s, const std::vector<M>& m, const std::vector<G>&) {
            return eq_check(s, s.add(m[0], m[0]), m[0]);
        }});
    // unital: x tau = x
    props.push_back({"unital", {"x"}, {Mn},
        [eq_check](const S& s, const std::vector<M>& m, const std::vector<G>&) {
            return eq_check(s, s.scale(m[0], s.bitrop().tau()), m[0]);
        }});
    // (5) (x + y) lambda = x lambda + y lambda
    props.push_back({"mnesor-distributivity", {"x", "y", "lambda"}, {Mn, Mn, Gr},
        [eq_check](const S& s, const std::vector<M>& m, const std::vector<G>& g) {
            return eq_check(s, s.scale(s.add(m[0], m[1]), g[0]),
                            s.add(s.scale(m[0], g[0]), s.scale(m[1], g[0])));
        }});
    // (6) (x lambda) mu = x (lambda (*) mu)
    props.push_back({"granular-associativity", {"x", "lambda", "mu"}, {Mn, Gr, Gr},
        [eq_check](const S& s, const std::vector<M>& m, const std::vector<G>& g) {
            return eq_check(s, s.scale(s.scale(m[0], g[0]), g[1]),
                            s.scale(m[0], s.bitrop().otimes(g[0], g[1])));
        }});
    // (7) x (lambda (+) mu) = x lambda + x mu
    props.push_back({"granular-distributivity", {"x", "lambda", "mu"}, {Mn, Gr, Gr},
        [eq_check](const S& s, const std::vector<M>& m, const std::vector<G>& g) {
            return eq_check(s, s.scale(m[0], s.bitrop().oplus(g[0], g[1])),
                            s.add(s.scale(m[0], g[0]), s.scale(m[0], g[1])));
        }});
    // (8) exists alpha in B+ with (x + y) alpha = x
    props.push_back({"absorption", {"x", "y"}, {Mn, Mn},
        [witness](const S& s, const std::vector<M>& m, const std::vector<G>&) {
            auto sum = s.add(m[0], m[1]);
            if (witness(s, m[0], sum)) return CaseOutcome::holds();
            if (s.missing_witness_is_boundary(m[0], sum)) return CaseOutcome::restricted();
            return CaseOutcome::violated("no alpha in B+ with (x + y) alpha = x",
                                         s.to_string(m[0]));
        }});
    props.push_back({"add-closed", {"x", "y"}, {Mn, Mn},
        [](const S& s, const std::vector<M>& m, const std::vector<G>&) {
            auto r = s.add(m[0], m[1]);
            if (s.contains(r)) return CaseOutcome::holds();
            return s.bitrop().truncated()
                       ? CaseOutcome::restricted()
                       : CaseOutcome::violated(s.to_string(r), "not in carrier");
        }});
    props.push_back({"scale-closed", {"x", "lambda"}, {Mn, Gr},
        [](const S& s, const std::vector<M>& m, const std::vector<G>& g) {
            auto r = s.scale(m[0], g[0]);
            if (s.contains(r)) return CaseOutcome::holds();
            return s.bitrop().truncated()
                       ? CaseOutcome::restricted()
                       : CaseOutcome::violated(s.to_string(r), "not in carrier");
        }});
    // The interaction of 0 with scaling is unstated; measured here.
    props.push_back({"zero-scale", {"lambda"}, {Gr},
        [eq_check](const S& s, const std::vector<M>&, const std::vector<G>& g) {
            return eq_check(s, s.scale(s.zero(), g[0]), s.zero());
        }});
    // x = a lambda for some lambda in B+  iff  x + a = a
    props.push_back({"ordering-equivalence", {"x", "a"}, {Mn, Mn},
        [witness](const S& s, const std::vector<M>& m, const std::vector<G>&) {
            bool prefix = is_prefix(s, m[0], m[1]);
            bool witnessed = witness(s, m[0], m[1]).has_value();
            if (prefix == witnessed) return CaseOutcome::holds();
            if (prefix && !witnessed) {
                if (s.missing_witness_is_boundary(m[0], m[1]))
                    return CaseOutcome::restricted();
                return CaseOutcome::violated("x + a = a",
                                             "no lambda in B+ with a lambda = x");
            }
            return CaseOutcome::violated("a lambda = x for some lambda in B+",
                                         "x + a != a");
        }});
    // y lambda agrees for every lambda with (x + y) lambda = x
    props.push_back({"intersection-uniqueness", {"x", "y"}, {Mn, Mn},
        [](const S& s, const std::vector<M>& m, const std::vector<G>&) {
            auto ws = find_all_witnesses(s, m[0], m[1]);
            for (std::size_t i = 1; i < ws.size(); ++i) {
                auto a = s.scale(m[1], ws[0]);
                auto b = s.scale(m[1], ws[i]);
                if (!s.equal(a, b))
                    return CaseOutcome::violated(s.to_string(a), s.to_string(b));
            }
            return CaseOutcome::holds();
        }});
    // x + (x o y) = x  and  x o (x + y) = x
    props.push_back({"lattice-absorption", {"x", "y"}, {Mn, Mn},
        [witness, eq_check](const S& s, const std::vector<M>& m, const std::vector<G>&) {
            auto w1 = witness(s, m[0], s.add(m[0], m[1]));
            auto w2 = witness(s, m[0], s.add(m[0], s.add(m[0], m[1])));
            if (!w1 || !w2) return CaseOutcome::restricted();
            auto meet = s.scale(m[1], *w1);
            auto out = eq_check(s, s.add(m[0], meet), m[0]);
            if (out.kind != CaseOutcome::Holds) return out;
            auto sum = s.add(m[0], m[1]);
            return eq_check(s, s.scale(sum, *w2), m[0]);
        }});
    props.push_back({"intersect-commutative", {"x", "y"}, {Mn, Mn},
        [witness, eq_check](const S& s, const std::vector<M>& m, const std::vector<G>&) {
            auto w1 = witness(s, m[0], s.add(m[0], m[1]));
            auto w2 = witness(s, m[1], s.add(m[0], m[1]));
            if (!w1 || !w2) return CaseOutcome::restricted();
            return eq_check(s, s.scale(m[1], *w1), s.scale(m[0], *w2));
        }});
    props.push_back({"intersect-associative", {"x", "y", "z"}, {Mn, Mn, Mn},
        [witness](const S& s, const std::vector<M>& m, const std::vector<G>&) {
            auto meet = [&](const M& a, const M& b) -> std::optional<M> {
                auto w = witness(s, a, s.add(a, b));
                if (!w) return std::nullopt;
                return s.scale(b, *w);
            };
            auto xy = meet(m[0], m[1]);
            if (!xy) return CaseOutcome::restricted();
            auto l = meet(*xy, m[2]);
            auto yz = meet(m[1], m[2]);
            if (!l || !yz) return CaseOutcome::restricted();
            auto r = meet(m[0], *yz);
            if (!r) return CaseOutcome::restricted();
            return s.equal(*l, *r)
                       ? CaseOutcome::holds()
                       : CaseOutcome::violated(s.to_string(*l), s.to_string(*r));
        }});
    props.push_back({"intersect-idempotent", {"x"}, {Mn},
        [witness, eq_check](const S& s, const std::vector<M>& m, const std::vector<G>&) {
            auto w = witness(s, m[0], s.add(m[0], m[0]));
            if (!w) return CaseOutcome::restricted();
            return eq_check(s, s.scale(m[0], *w), m[0]);
        }});
    return props;
}

// ---------------------------------------------------------------------------
// Runners
// ---------------------------------------------------------------------------

struct RunMode {
    bool exhaustive = true;
    unsigned long long random_cases = 0;
    unsigned long long seed = 0;
};

using LabelFilter = std::function<bool(const std::string&)>;

template <Bitrop B>
SectionReport check_bitrop_axioms(const B& b, const RunMode& mode = {},
                                  const LabelFilter& selected = {}) {
    SectionReport sec{"bitrop", b.name(), {}};
    const auto carrier = b.carrier();
    const auto cone = positive_cone(b);
    std::mt19937_64 rng(mode.seed);

    for (const auto& prop : bitrop_properties<B>()) {
        if (selected && !selected(prop.label)) continue;
        std::vector<std::pair<std::string, std::size_t>> var_sizes;
        for (std::size_t i = 0; i < prop.vars.size(); ++i)
            var_sizes.push_back({prop.vars[i], prop.sorts[i] == BitropVarSort::Carrier
                                                   ? carrier.size()
                                                   : cone.size()});
        std::vector<typename B::Granular> vals(prop.vars.size());
        auto eval_at = [&](const std::vector<std::size_t>& idx) {
            for (std::size_t i = 0; i < idx.size(); ++i)
                vals[i] = prop.sorts[i] == BitropVarSort::Carrier ? carrier[idx[i]]
                                                                  : cone[idx[i]];
            return prop.eval(b, vals);
        };
        auto res = detail::run_property(prop.label, var_sizes, mode.exhaustive,
                                        mode.random_cases, rng, eval_at);
        if (res.counterexample) {
            // vals still holds the violating assignment
            for (std::size_t i = 0; i < prop.vars.size(); ++i)
                res.counterexample->bindings.push_back(
                    {prop.vars[i], b.to_string(vals[i])});
        }
        sec.properties.push_back(std::move(res));
    }
    return sec;
}

template <Space S>
SectionReport check_space_axioms(const S& s, const RunMode& mode = {},
                                 const LabelFilter& selected = {}) {
    SectionReport sec{"space", s.name(), {}};
    const auto mnesors = s.carrier();
    const auto cone = positive_cone(s.bitrop());
    std::mt19937_64 rng(mode.seed);

    for (const auto& prop : space_properties<S>()) {
        if (selected && !selected(prop.label)) continue;
        std::vector<std::pair<std::string, std::size_t>> var_sizes;
        for (std::size_t i = 0; i < prop.vars.size(); ++i)
            var_sizes.push_back({prop.vars[i], prop.sorts[i] == SpaceVarSort::Mnesor
                                                   ? mnesors.size()
                                                   : cone.size()});
        std::vector<typename S::Mnesor> ms;
        std::vector<typename S::BitropType::Granular> gs;
        auto eval_at = [&](const std::vector<std::size_t>& idx) {
            ms.clear();
            gs.clear();
            for (std::size_t i = 0; i < idx.size(); ++i) {
                if (prop.sorts[i] == SpaceVarSort::Mnesor)
                    ms.push_back(mnesors[idx[i]]);
                else
                    gs.push_back(cone[idx[i]]);
            }
            return prop.eval(s, ms, gs);
        };
        auto res = detail::run_property(prop.label, var_sizes, mode.exhaustive,
                                        mode.random_cases, rng, eval_at);
        if (res.counterexample) {
            std::size_t mi = 0, gi = 0;
            for (std::size_t i = 0; i < prop.vars.size(); ++i) {
                std::string v = prop.sorts[i] == SpaceVarSort::Mnesor
                                    ? s.to_string(ms[mi++])
                                    : s.bitrop().to_string(gs[gi++]);
                res.counterexample->bindings.push_back({prop.vars[i], std::move(v)});
            }
        }
        sec.properties.push_back(std::move(res));
    }
    return sec;
}

// ---------------------------------------------------------------------------
// Counterexample replay
// ---------------------------------------------------------------------------

template <Bitrop B>
bool verify_counterexample(const B& b, const CounterexampleDoc& c) {
    for (const auto& prop : bitrop_properties<B>()) {
        if (prop.label != c.property) continue;
        if (c.bindings.size() != prop.vars.size())
            throw StaleCounterexampleError("binding count does not match property " +
                                           c.property);
        std::vector<typename B::Granular> vals;
        for (std::size_t i = 0; i < prop.vars.size(); ++i) {
            auto g = b.parse(c.bindings[i].second);
            if (!g || !b.contains(*g))
                throw StaleCounterexampleError("value '" + c.bindings[i].second +
                                               "' does not belong to " + b.name());
            vals.push_back(*g);
        }
        return prop.eval(b, vals).kind == CaseOutcome::Violated;
    }
    throw StaleCounterexampleError("unknown bitrop property: " + c.property);
}

template <Space S>
bool verify_counterexample(const S& s, const CounterexampleDoc& c) {
    for (const auto& prop : space_properties<S>()) {
        if (prop.label != c.property) continue;
        if (c.bindings.size() != prop.vars.size())
            throw StaleCounterexampleError("binding count does not match property " +
                                           c.property);
        std::vector<typename S::Mnesor> ms;
        std::vector<typename S::BitropType::Granular> gs;
        for (std::size_t i = 0; i < prop.vars.size(); ++i) {
            const auto& text = c.bindings[i].second;
            if (prop.sorts[i] == SpaceVarSort::Mnesor) {
                auto m = s.parse(text);
                if (!m || !s.contains(*m))
                    throw StaleCounterexampleError("value '" + text +
                                                   "' does not belong to " + s.name());
                ms.push_back(*m);
            } else {
                auto g = s.bitrop().parse(text);
                if (!g || !s.bitrop().contains(*g))
                    throw StaleCounterexampleError("value '" + text +
                                                   "' does not belong to " +
                                                   s.bitrop().name());
                gs.push_back(*g);
            }
        }
        return prop.eval(s, ms, gs).kind == CaseOutcome::Violated;
    }
    throw StaleCounterexampleError("unknown space property: " + c.property);
}

// ---------------------------------------------------------------------------
// Plans
// ---------------------------------------------------------------------------

enum class ModelKind { Subset, MinPlus, ExtendedMinPlus, TruncatedTropical, Relation };

struct CheckPlan {
    ModelKind model = ModelKind::Subset;
    std::size_t universe = 3;      // subset / relation
    long long lo = -8, hi = 8;     // integer models
    bool exhaustive = true;
    unsigned long long random_cases = 0;
    unsigned long long seed = 0;
    std::vector<std::string> only; // empty = everything; "bitrop"/"space" select groups
    unsigned long long cap = 10'000'000;
};

namespace detail {

inline std::vector<std::string> letter_universe(std::size_t n) {
    std::vector<std::string> u;
    for (std::size_t i = 0; i < n; ++i) u.push_back(std::string(1, char('a' + i)));
    return u;
}

inline LabelFilter make_filter(const std::vector<std::string>& only,
                               const std::string& section_kind) {
    if (only.empty()) return {};
    return [only, section_kind](const std::string& label) {
        for (const auto& tok : only)
            if (tok == section_kind || tok == label) return true;
        return false;
    };
}

template <class Prop>
unsigned long long planned_cases(const Prop& prop, std::size_t carrier_size,
                                 std::size_t cone_size, bool is_space,
                                 const CheckPlan& plan) {
    if (!plan.exhaustive) return plan.random_cases;
    unsigned long long total = 1;
    for (std::size_t i = 0; i < prop.sorts.size(); ++i) {
        std::size_t sz;
        if constexpr (std::is_same_v<decltype(prop.sorts[i]), const BitropVarSort&>)
            sz = prop.sorts[i] == BitropVarSort::Carrier ? carrier_size : cone_size;
        else
            sz = prop.sorts[i] == SpaceVarSort::Mnesor ? carrier_size : cone_size;
        total = saturating_mul(total, sz);
    }
    (void)is_space;
    return total;
}

template <Bitrop B>
unsigned long long plan_bitrop_cases(const B& b, const CheckPlan& plan) {
    auto filter = make_filter(plan.only, "bitrop");
    auto carrier = b.carrier().size();
    auto cone = positive_cone(b).size();
    unsigned long long total = 0;
    for (const auto& prop : bitrop_properties<B>()) {
        if (filter && !filter(prop.label)) continue;
        total += planned_cases(prop, carrier, cone, false, plan);
    }
    return total;
}

template <Space S>
unsigned long long plan_space_cases(const S& s, const CheckPlan& plan) {
    auto filter = make_filter(plan.only, "space");
    auto carrier = s.carrier().size();
    auto cone = positive_cone(s.bitrop()).size();
    unsigned long long total = 0;
    for (const auto& prop : space_properties<S>()) {
        if (filter && !filter(prop.label)) continue;
        total += planned_cases(prop, carrier, cone, true, plan);
    }
    return total;
}

inline void enforce_cap(unsigned long long planned, const CheckPlan& plan) {
    if (planned > plan.cap)
        throw CapExceededError("plan would enumerate " + std::to_string(planned) +
                                   " cases, exceeding the cap of " +
                                   std::to_string(plan.cap),
                               planned);
}

template <Bitrop B>
void run_bitrop_section(const B& b, const CheckPlan& plan, Report& report) {
    RunMode mode{plan.exhaustive, plan.random_cases, plan.seed};
    report.sections.push_back(
        check_bitrop_axioms(b, mode, make_filter(plan.only, "bitrop")));
}

template <Space S>
void run_space_section(const S& s, const CheckPlan& plan, Report& report) {
    RunMode mode{plan.exhaustive, plan.random_cases, plan.seed};
    report.sections.push_back(
        check_space_axioms(s, mode, make_filter(plan.only, "space")));
}

} // namespace detail

inline Report run_check(const CheckPlan& plan) {
    Report report;
    report.mode = plan.exhaustive ? "exhaustive" : "randomized";
    if (!plan.exhaustive) report.seed = plan.seed;
    report.cap = plan.cap;

    switch (plan.model) {
        case ModelKind::Subset: {
            report.model = "subset";
            report.parameters.push_back({"universe", std::to_string(plan.universe)});
            SubsetBitrop b(detail::letter_universe(plan.universe));
            detail::enforce_cap(detail::plan_bitrop_cases(b, plan), plan);
            detail::run_bitrop_section(b, plan, report);
            break;
        }
        case ModelKind::MinPlus: {
            report.model = "minplus";
            report.parameters.push_back(
                {"range", std::to_string(plan.lo) + ".." + std::to_string(plan.hi)});
            MinPlusBitrop b(plan.lo, plan.hi);
            detail::enforce_cap(detail::plan_bitrop_cases(b, plan), plan);
            detail::run_bitrop_section(b, plan, report);
            break;
        }
        case ModelKind::ExtendedMinPlus: {
            report.model = "extended-minplus";
            report.parameters.push_back(
                {"range", std::to_string(plan.lo) + ".." + std::to_string(plan.hi)});
            ExtendedMinPlusSpace s(plan.lo, plan.hi);
            detail::enforce_cap(detail::plan_bitrop_cases(s.bitrop(), plan) +
                                    detail::plan_space_cases(s, plan),
                                plan);
            detail::run_bitrop_section(s.bitrop(), plan, report);
            detail::run_space_section(s, plan, report);
            break;
        }
        case ModelKind::TruncatedTropical: {
            report.model = "truncated-tropical";
            report.parameters.push_back(
                {"range", std::to_string(plan.lo) + "..0"});
            TruncatedTropicalSpace s(plan.lo);
            detail::enforce_cap(detail::plan_bitrop_cases(s.bitrop(), plan) +
                                    detail::plan_space_cases(s, plan),
                                plan);
            detail::run_bitrop_section(s.bitrop(), plan, report);
            detail::run_space_section(s, plan, report);
            break;
        }
        case ModelKind::Relation: {
            report.model = "relation";
            report.parameters.push_back({"universe", std::to_string(plan.universe)});
            RelationSpace s(detail::letter_universe(plan.universe));
            detail::enforce_cap(detail::plan_bitrop_cases(s.bitrop(), plan) +
                                    detail::plan_space_cases(s, plan),
                                plan);
            detail::run_bitrop_section(s.bitrop(), plan, report);
            detail::run_space_section(s, plan, report);
            break;
        }
    }
    return report;
}

} // namespace mnesor

#endif
