#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "prime.hpp"
#include "weight.hpp"

namespace sl2coh {

// Digit position witnessing Ext^1_G(L(r), L(s)) = K, if any. The space is
// at most one-dimensional, and it is nonzero exactly when the digit
// sequences of r and s (padded with zeros to a common length) agree
// everywhere except at two adjacent positions k, k+1, where
//   r_k + s_k = p - 2   and   |r_{k+1} - s_{k+1}| = 1.
// The witness k is unique when it exists: the digits differ at k+1, and
// at k unless r_k = s_k = (p - 2) / 2, so the differing positions pin k
// down to at most two candidates, checked directly.
inline std::optional<int> cline_ext1_witness(const weight& r, const weight& s) {
    if (r.characteristic() != s.characteristic())
        throw char_mismatch("Ext^1 of weights in characteristics " +
                            std::to_string(r.characteristic().value()) + " and " +
                            std::to_string(s.characteristic().value()));
    const int p = r.characteristic().value();
    const std::size_t len = std::max(r.size(), s.size()) + 1;

    std::size_t lo = len, hi = len;
    for (std::size_t i = 0; i < len; ++i) {
        if (r.digit(i) != s.digit(i)) {
            if (lo == len) lo = i;
            hi = i;
        }
    }
    if (lo == len) return std::nullopt;       // r = s
    if (hi > lo + 1) return std::nullopt;     // digits differ too far apart

    for (std::size_t k : {lo == 0 ? lo : lo - 1, lo}) {
        if (k + 1 >= len) continue;
        if (r.digit(k) + s.digit(k) != p - 2) continue;
        const int diff = r.digit(k + 1) - s.digit(k + 1);
        if (diff != 1 && diff != -1) continue;
        if (lo < k || hi > k + 1) continue;   // a third position differs
        return static_cast<int>(k);
    }
    return std::nullopt;
}

// dim Ext^1_G(L(r), L(s)), always 0 or 1.
inline int cline_ext1(const weight& r, const weight& s) {
    return cline_ext1_witness(r, s) ? 1 : 0;
}

// dim H^1(G, L(r)) = dim Ext^1_G(L(0), L(r)).
inline int h1_dim(const weight& r) {
    return cline_ext1(weight(r.characteristic()), r);
}

// dim Hom_G(L(1) tensor L(x), L(y)) for dominant x, y: one when L(y) is
// a direct summand of the socle of L(1) tensor L(x), zero otherwise.
// This holds iff x and y agree in every digit above position 0 and their
// bottom digits differ by exactly one.
inline int hom_with_tensor_l1(const weight& x, const weight& y) {
    if (x.characteristic() != y.characteristic())
        throw char_mismatch("Hom of weights in characteristics " +
                            std::to_string(x.characteristic().value()) + " and " +
                            std::to_string(y.characteristic().value()));
    const std::size_t len = std::max(x.size(), y.size());
    for (std::size_t i = 1; i < len; ++i)
        if (x.digit(i) != y.digit(i)) return 0;
    const int diff = x.digit(0) - y.digit(0);
    return (diff == 1 || diff == -1) ? 1 : 0;
}

// dim H^1(G, L(1) tensor L(r)) = dim Ext^1_G(L(1), L(r)).
inline int h1_of_l1_tensor(const weight& r) {
    return cline_ext1(weight::from_value(1, r.characteristic()), r);
}

// All weights r with Ext^1_G(L(r), L(s)) = K and digit length at most
// max_digits, built constructively: for each position k the partner has
// digits of s everywhere except r_k = p - 2 - s_k and r_{k+1} = s_{k+1}
// +- 1, kept when every digit stays in [0, p - 1] and r != s.
// Requires max_digits >= size(s) + 1 so no partner is silently cut off.
inline std::set<weight> list_ext1_partners(const weight& s, std::size_t max_digits) {
    if (max_digits < s.size() + 1)
        throw invalid_weight("max_digits " + std::to_string(max_digits) +
                             " cannot hold all Ext^1 partners of a weight of " +
                             std::to_string(s.size()) + " digits");
    const int p = s.characteristic().value();
    std::set<weight> partners;
    for (std::size_t k = 0; k + 1 < max_digits; ++k) {
        const int head = p - 2 - s.digit(k);
        if (head < 0) continue;              // only p = 2 with s_k = 1
        for (int step : {-1, 1}) {
            const int next = s.digit(k + 1) + step;
            if (next < 0 || next > p - 1) continue;
            std::vector<int> digits(max_digits, 0);
            for (std::size_t i = 0; i < max_digits; ++i) digits[i] = s.digit(i);
            digits[k] = head;
            digits[k + 1] = next;
            weight r = weight::from_digits(std::move(digits), s.characteristic());
            if (r != s) partners.insert(std::move(r));
        }
    }
    return partners;
}

} // namespace sl2coh
