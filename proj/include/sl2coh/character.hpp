#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <utility>

#include "errors.hpp"
#include "prime.hpp"
#include "weight.hpp"

namespace sl2coh {

// A formal character of a finite-dimensional SL2-module: a finitely
// supported multiplicity function on integer weights of the torus.
// Multiplicities are strictly positive on the support; zero entries are
// never stored. Characters remember the characteristic they were formed
// in so that mixed-characteristic arithmetic is rejected.
class character {
public:
    using support_map = std::map<std::int64_t, std::int64_t>;

    // The character of the zero module.
    explicit character(prime_char p) : p_(p) {}

    static character from_support(support_map support, prime_char p) {
        character c(p);
        for (auto& [wt, mult] : support) {
            if (mult < 0)
                throw not_a_module_character("negative multiplicity " +
                                             std::to_string(mult) + " at weight " +
                                             std::to_string(wt));
            if (mult > 0) c.support_.emplace(wt, mult);
        }
        return c;
    }

    const support_map& support() const { return support_; }
    prime_char characteristic() const { return p_; }

    std::int64_t multiplicity(std::int64_t wt) const {
        auto it = support_.find(wt);
        return it == support_.end() ? 0 : it->second;
    }

    // Dimension of the underlying module: the sum of all multiplicities.
    std::int64_t dimension() const {
        std::int64_t dim = 0;
        for (auto& [wt, mult] : support_) dim += mult;
        return dim;
    }

    // Every module character is stable under negating weights.
    bool negation_symmetric() const {
        for (auto& [wt, mult] : support_)
            if (multiplicity(-wt) != mult) return false;
        return true;
    }

    friend bool operator==(const character& a, const character& b) {
        return a.p_ == b.p_ && a.support_ == b.support_;
    }
    friend bool operator!=(const character& a, const character& b) {
        return !(a == b);
    }

private:
    support_map support_;
    prime_char p_;
};

namespace detail {

inline std::int64_t checked_pow_i64(int base, int exp, const char* what) {
    std::int64_t acc = 1;
    for (int i = 0; i < exp; ++i) {
        if (acc > std::numeric_limits<std::int64_t>::max() / base)
            throw invalid_weight(std::string(what) + ": weight exceeds 63 bits");
        acc *= base;
    }
    return acc;
}

// Multiplies every torus weight in the support by the scalar k.
inline character scale_weights(const character& c, std::int64_t k) {
    character::support_map scaled;
    for (auto& [wt, mult] : c.support()) {
        if (wt != 0 && (wt > std::numeric_limits<std::int64_t>::max() / k ||
                        wt < std::numeric_limits<std::int64_t>::min() / k))
            throw invalid_weight("scaled torus weight exceeds 63 bits");
        scaled.emplace(wt * k, mult);
    }
    return character::from_support(std::move(scaled), c.characteristic());
}

} // namespace detail

// Character of the Weyl (dual Weyl, standard) module of highest weight m:
// torus weights m, m-2, ..., -m, each with multiplicity one.
inline character weyl_character(std::int64_t m, prime_char p) {
    if (m < 0) throw invalid_weight("negative highest weight");
    character::support_map support;
    for (std::int64_t wt = -m; wt <= m; wt += 2) support.emplace(wt, 1);
    return character::from_support(std::move(support), p);
}

// Pointwise product of characters: the character of the tensor product,
// computed as a convolution of supports.
inline character tensor(const character& a, const character& b) {
    if (a.characteristic() != b.characteristic())
        throw char_mismatch("tensor of characters in characteristics " +
                            std::to_string(a.characteristic().value()) + " and " +
                            std::to_string(b.characteristic().value()));
    character::support_map support;
    for (auto& [wa, ma] : a.support())
        for (auto& [wb, mb] : b.support())
            support[wa + wb] += ma * mb;
    return character::from_support(std::move(support), a.characteristic());
}

// Character of the irreducible module L(w), via the Steinberg tensor
// product: the product over nonzero digits d at position i of the Weyl
// character of d with all torus weights scaled by p^i. Restricted digits
// satisfy d <= p - 1, where the Weyl module is irreducible, so each
// factor is the honest character of L(d)^[i].
inline character irreducible_character(const weight& w) {
    const prime_char p = w.characteristic();
    character out = character::from_support({{0, 1}}, p);
    for (auto [digit, twist] : steinberg_factors(w)) {
        const std::int64_t scale =
            detail::checked_pow_i64(p.value(), twist, "irreducible_character");
        out = tensor(out, detail::scale_weights(weyl_character(digit, p), scale));
    }
    return out;
}

// Writes a character as a non-negative sum of irreducible characters,
// returning highest weight -> multiplicity. Works greedily from the top:
// the largest supported torus weight must be the highest weight of an
// irreducible constituent, because torus weights are totally ordered.
// Throws not_a_module_character if the greedy subtraction goes negative,
// i.e. the input is not the character of any module.
inline std::map<std::int64_t, std::int64_t> decompose(const character& c) {
    const prime_char p = c.characteristic();
    character::support_map remainder = c.support();
    std::map<std::int64_t, std::int64_t> constituents;
    while (!remainder.empty()) {
        const auto top = std::prev(remainder.end());
        const std::int64_t mu = top->first;
        const std::int64_t mult = top->second;
        if (mu < 0)
            throw not_a_module_character("support bounded above by negative weight " +
                                         std::to_string(mu));
        const character chi =
            irreducible_character(weight::from_value(static_cast<std::uint64_t>(mu), p));
        for (auto& [wt, m] : chi.support()) {
            auto [it, inserted] = remainder.try_emplace(wt, 0);
            it->second -= mult * m;
            if (it->second < 0)
                throw not_a_module_character("multiplicity of torus weight " +
                                             std::to_string(wt) +
                                             " drops below zero");
            if (it->second == 0) remainder.erase(it);
        }
        constituents.emplace(mu, mult);
    }
    return constituents;
}

} // namespace sl2coh
