#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "prime.hpp"

namespace sl2coh {

namespace detail {

// Decimal strings below are big-endian ASCII digit strings with no sign
// and no leading zeros (except the string "0" itself). They stand in for
// arbitrary-precision non-negative integers.

inline bool is_decimal(std::string_view text) {
    if (text.empty()) return false;
    for (char c : text)
        if (c < '0' || c > '9') return false;
    return true;
}

inline std::string strip_leading_zeros(std::string dec) {
    std::size_t first = dec.find_first_not_of('0');
    if (first == std::string::npos) return "0";
    return dec.substr(first);
}

// In-place divides a decimal string by m (0 < m < 2^15), returns the
// remainder. The quotient keeps no leading zeros.
inline int divmod_decimal(std::string& dec, int m) {
    std::string quotient;
    quotient.reserve(dec.size());
    long long carry = 0;
    for (char c : dec) {
        carry = carry * 10 + (c - '0');
        quotient.push_back(static_cast<char>('0' + carry / m));
        carry %= m;
    }
    dec = strip_leading_zeros(std::move(quotient));
    return static_cast<int>(carry);
}

// In-place computes dec = dec * m + add (0 <= add < m < 2^15).
inline void muladd_decimal(std::string& dec, int m, int add) {
    long long carry = add;
    for (std::size_t i = dec.size(); i-- > 0;) {
        carry += static_cast<long long>(dec[i] - '0') * m;
        dec[i] = static_cast<char>('0' + carry % 10);
        carry /= 10;
    }
    while (carry > 0) {
        dec.insert(dec.begin(), static_cast<char>('0' + carry % 10));
        carry /= 10;
    }
}

} // namespace detail

// A dominant weight of SL2 in characteristic p, stored as its base-p
// digit sequence in little-endian order with trailing zeros removed;
// the zero weight is the empty sequence. The digits are simultaneously
// the base-p expansion of the highest weight and the Steinberg
// coordinates of the irreducible module L(w). Weights are unbounded:
// values wider than 64 bits round-trip through decimal strings.
class weight {
public:
    // The zero weight.
    explicit weight(prime_char p) : p_(p) {}

    static weight from_value(std::uint64_t value, prime_char p) {
        weight w(p);
        const auto base = static_cast<std::uint64_t>(p.value());
        while (value > 0) {
            w.digits_.push_back(static_cast<int>(value % base));
            value /= base;
        }
        return w;
    }

    static weight from_decimal(std::string_view text, prime_char p) {
        if (!detail::is_decimal(text))
            throw invalid_weight("not a decimal weight: '" + std::string(text) + "'");
        std::string dec = detail::strip_leading_zeros(std::string(text));
        weight w(p);
        while (dec != "0")
            w.digits_.push_back(detail::divmod_decimal(dec, p.value()));
        return w;
    }

    // Digits are little-endian; trailing zeros are trimmed, so distinct
    // digit vectors that denote the same weight compare equal.
    static weight from_digits(std::vector<int> digits, prime_char p) {
        for (int d : digits)
            if (d < 0 || d >= p.value())
                throw invalid_weight("digit " + std::to_string(d) +
                                     " out of range for characteristic " +
                                     std::to_string(p.value()));
        while (!digits.empty() && digits.back() == 0) digits.pop_back();
        weight w(p);
        w.digits_ = std::move(digits);
        return w;
    }

    prime_char characteristic() const { return p_; }
    const std::vector<int>& digits() const { return digits_; }
    std::size_t size() const { return digits_.size(); }
    bool is_zero() const { return digits_.empty(); }

    // The i-th base-p digit; zero beyond the stored length.
    int digit(std::size_t i) const {
        return i < digits_.size() ? digits_[i] : 0;
    }

    std::optional<std::uint64_t> to_uint64() const {
        std::uint64_t acc = 0;
        const auto base = static_cast<std::uint64_t>(p_.value());
        const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
        for (std::size_t i = digits_.size(); i-- > 0;) {
            if (acc > max / base) return std::nullopt;
            acc *= base;
            const auto d = static_cast<std::uint64_t>(digits_[i]);
            if (acc > max - d) return std::nullopt;
            acc += d;
        }
        return acc;
    }

    bool has_value(std::uint64_t value) const {
        auto v = to_uint64();
        return v && *v == value;
    }

    std::string to_decimal() const {
        std::string dec = "0";
        for (std::size_t i = digits_.size(); i-- > 0;)
            detail::muladd_decimal(dec, p_.value(), digits_[i]);
        return dec;
    }

    // Renders "[d0,d1,...]@p" (little-endian); the zero weight is "[]@p".
    std::string to_digit_literal() const {
        std::string out = "[";
        for (std::size_t i = 0; i < digits_.size(); ++i) {
            if (i > 0) out += ',';
            out += std::to_string(digits_[i]);
        }
        out += "]@";
        out += std::to_string(p_.value());
        return out;
    }

    friend bool operator==(const weight& a, const weight& b) {
        return a.p_ == b.p_ && a.digits_ == b.digits_;
    }
    friend bool operator!=(const weight& a, const weight& b) { return !(a == b); }

    // Orders by characteristic first, then by numeric value (shorter
    // digit vectors are smaller; equal lengths compare from the most
    // significant digit down).
    friend bool operator<(const weight& a, const weight& b) {
        if (a.p_.value() != b.p_.value()) return a.p_.value() < b.p_.value();
        if (a.digits_.size() != b.digits_.size())
            return a.digits_.size() < b.digits_.size();
        for (std::size_t i = a.digits_.size(); i-- > 0;)
            if (a.digits_[i] != b.digits_[i]) return a.digits_[i] < b.digits_[i];
        return false;
    }

private:
    std::vector<int> digits_;
    prime_char p_;
};

inline weight padic_expand(std::uint64_t value, prime_char p) {
    return weight::from_value(value, p);
}

inline weight padic_expand(std::string_view decimal, prime_char p) {
    return weight::from_decimal(decimal, p);
}

inline std::string padic_collapse(const weight& w) {
    return w.to_decimal();
}

// Steinberg tensor factors of L(w): the list of (digit, twist) pairs with
// nonzero digit, in increasing twist order. L(w) is the tensor product of
// the d-fold Frobenius twists L(digit)^[d] over these pairs.
inline std::vector<std::pair<int, int>> steinberg_factors(const weight& w) {
    std::vector<std::pair<int, int>> factors;
    const auto& ds = w.digits();
    for (std::size_t i = 0; i < ds.size(); ++i)
        if (ds[i] != 0) factors.emplace_back(ds[i], static_cast<int>(i));
    return factors;
}

// L(w)^[d]: shifts every digit up by d places, multiplying w by p^d.
inline weight frobenius_twist(const weight& w, int d) {
    if (d < 0) throw invalid_weight("negative Frobenius twist");
    if (w.is_zero()) return w;
    std::vector<int> digits(w.digits().size() + static_cast<std::size_t>(d), 0);
    std::copy(w.digits().begin(), w.digits().end(),
              digits.begin() + static_cast<std::ptrdiff_t>(d));
    return weight::from_digits(std::move(digits), w.characteristic());
}

// Writes w = s * p^d with maximal d, i.e. strips all leading zero digits.
// The zero weight untwists to (0, 0).
inline std::pair<weight, int> untwist_maximal(const weight& w) {
    const auto& ds = w.digits();
    std::size_t d = 0;
    while (d < ds.size() && ds[d] == 0) ++d;
    if (d == ds.size()) return {w, 0};
    return {weight::from_digits({ds.begin() + static_cast<std::ptrdiff_t>(d), ds.end()},
                                w.characteristic()),
            static_cast<int>(d)};
}

// Splits w = w0 + p * w', so L(w) = L(w0) tensor L(w')^[1].
inline std::pair<int, weight> split_head(const weight& w) {
    const auto& ds = w.digits();
    if (ds.empty()) return {0, w};
    return {ds[0],
            weight::from_digits({ds.begin() + 1, ds.end()}, w.characteristic())};
}

// The rank-1 affine Weyl group element acting on integer weights.
enum class weyl_element { identity, reflection };

// Dot action with rho = 1: the reflection sends x to -x - 2.
inline std::int64_t dot_action(weyl_element e, std::int64_t x) {
    return e == weyl_element::identity ? x : -x - 2;
}

// Linkage over the first Frobenius kernel: two restricted digits a, b
// index G_1-linked simple modules iff a = b or a = p - 2 - b. In
// characteristic 2 this reduces to a = b = 0 (and a = b = 1).
inline bool g1_linked(int a, int b, prime_char p) {
    for (int d : {a, b})
        if (d < 0 || d >= p.value())
            throw invalid_digit("digit " + std::to_string(d) +
                                " out of range for characteristic " +
                                std::to_string(p.value()));
    return a == b || a + b == p.value() - 2;
}

// Parses a weight from one of:
//   - a decimal value, e.g. "40"
//   - a little-endian digit literal, e.g. "[1,1,0,1]"
//   - a digit literal with explicit characteristic, e.g. "[3,2,1]@5"
// The characteristic comes from the "@p" suffix or from fallback; if both
// are present they must agree.
inline weight parse_weight(std::string_view text,
                           std::optional<prime_char> fallback = std::nullopt) {
    auto require_char = [&](std::optional<prime_char> found) -> prime_char {
        if (found && fallback && *found != *fallback)
            throw char_mismatch("weight literal characteristic " +
                                std::to_string(found->value()) +
                                " does not match characteristic " +
                                std::to_string(fallback->value()));
        if (found) return *found;
        if (fallback) return *fallback;
        throw invalid_weight("no characteristic given for weight '" +
                             std::string(text) + "'");
    };

    // Trim surrounding whitespace.
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);

    if (text.empty()) throw invalid_weight("empty weight");

    if (text.front() != '[') {
        if (!detail::is_decimal(text))
            throw invalid_weight("not a weight: '" + std::string(text) + "'");
        return weight::from_decimal(text, require_char(std::nullopt));
    }

    const std::size_t close = text.find(']');
    if (close == std::string_view::npos)
        throw invalid_weight("unterminated digit literal: '" + std::string(text) + "'");

    std::optional<prime_char> found;
    std::string_view tail = text.substr(close + 1);
    if (!tail.empty()) {
        if (tail.front() != '@' || !detail::is_decimal(tail.substr(1)) ||
            tail.size() > 10)
            throw invalid_weight("bad characteristic suffix: '" + std::string(text) + "'");
        found = prime_char(std::stoi(std::string(tail.substr(1))));
    }
    const prime_char p = require_char(found);

    std::vector<int> digits;
    std::string_view body = text.substr(1, close - 1);
    while (!body.empty()) {
        const std::size_t comma = body.find(',');
        std::string_view tok = body.substr(0, comma);
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front())))
            tok.remove_prefix(1);
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back())))
            tok.remove_suffix(1);
        if (!detail::is_decimal(tok) || tok.size() > 9)
            throw invalid_weight("bad digit '" + std::string(tok) + "' in '" +
                                 std::string(text) + "'");
        digits.push_back(std::stoi(std::string(tok)));
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
        if (body.empty())
            throw invalid_weight("trailing comma in '" + std::string(text) + "'");
    }
    return weight::from_digits(std::move(digits), p);
}

} // namespace sl2coh
