#pragma once

#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "ext_one.hpp"
#include "g1_cohomology.hpp"
#include "prime.hpp"
#include "weight.hpp"

namespace sl2coh {

// Why a spectral-sequence entry has the dimension it has, or why its
// differentials vanish:
//   cfk        - Frobenius-kernel cohomology of the bottom digit vanishes
//   steinberg  - bottom digit p - 1: the Steinberg module is injective
//                over G_1, so all higher G_1-cohomology vanishes
//   schur      - an invariants computation between simple modules
//   linkage    - the coefficient module has no constituent linked to the
//                trivial module in the relevant way
//   parity     - characteristic 2 only: every torus weight of the
//                coefficient has the wrong parity
//   recursion  - the value is delegated to the same computation on the
//                digit-shifted weight
enum class justification { cfk, steinberg, schur, linkage, parity, recursion };

inline const char* to_string(justification j) {
    switch (j) {
        case justification::cfk: return "CfK";
        case justification::steinberg: return "Steinberg";
        case justification::schur: return "Schur";
        case justification::linkage: return "Linkage";
        case justification::parity: return "Parity";
        case justification::recursion: return "Recursion";
    }
    return "?";
}

// Common parity of the rows m carrying the nonzero entries of a page
// report; none when everything vanishes. A well-formed report is never
// mixed: the builder throws mixed_parity instead of returning it.
enum class parity_class { even, odd, none, mixed };

inline const char* to_string(parity_class c) {
    switch (c) {
        case parity_class::even: return "even";
        case parity_class::odd: return "odd";
        case parity_class::none: return "none";
        case parity_class::mixed: return "mixed";
    }
    return "?";
}

// One E_2 entry of the Frobenius-kernel spectral sequence
// E_2^{nm} = H^n(G, H^m(G_1, L(r))^[-1]). The coefficient field describes
// the untwisted coefficient module of H^n(G, -), or "zero".
struct e2_entry {
    int n = 0;
    int m = 0;
    int dim = 0;
    std::string coefficient;
    justification why = justification::schur;

    friend bool operator==(const e2_entry& a, const e2_entry& b) {
        return a.n == b.n && a.m == b.m && a.dim == b.dim &&
               a.coefficient == b.coefficient && a.why == b.why;
    }
};

// The low-degree E_2 page for one module, together with the abutment
// dimensions in degrees one and two.
struct ss_report {
    prime_char p;
    weight w;
    std::vector<e2_entry> entries;
    int h1 = 0;
    int h2 = 0;
    parity_class parity = parity_class::none;
};

// dim H^1(G, L(r)) computed through the spectral sequence: the page
// degenerates to E_2^{10} + E_2^{01}, where E_2^{10} restarts the same
// computation on the digit-shifted weight and E_2^{01} is nonzero exactly
// for r = (p-2) + 1*p. For p = 2 the two guards coincide at r0 = 0, but
// at most one term is nonzero; this is asserted, not assumed.
inline int h1_via_ss(const weight& r) {
    if (r.is_zero()) return 0;
    const int p = r.characteristic().value();
    const auto [r0, rest] = split_head(r);
    const int t10 = r0 == 0 ? h1_via_ss(rest) : 0;
    const int t01 = (r0 == p - 2 && rest.has_value(1)) ? 1 : 0;
    if (t10 + t01 > 1)
        throw internal_inconsistency("h1_via_ss: E2^{10} and E2^{01} both nonzero at " +
                                     r.to_digit_literal());
    return t10 + t01;
}

// dim H^2(G, L(r)) through the spectral sequence: the sum of E_2^{20}
// (recursion on the shifted weight), E_2^{11} (an Ext^1 against L(1) in
// shifted digits), and E_2^{02} (nonzero exactly when the shifted weight
// is 2). At most one of the three contributes; asserted.
inline int h2_via_ss(const weight& r) {
    if (r.is_zero()) return 0;
    const prime_char pc = r.characteristic();
    const int p = pc.value();
    const auto [r0, rest] = split_head(r);
    const int t20 = r0 == 0 ? h2_via_ss(rest) : 0;
    const int t11 = r0 == p - 2 ? cline_ext1(weight::from_value(1, pc), rest) : 0;
    const int t02 = (r0 == 0 && rest.has_value(2)) ? 1 : 0;
    if (t20 + t11 + t02 > 1)
        throw internal_inconsistency("h2_via_ss: multiple degree-2 entries nonzero at " +
                                     r.to_digit_literal());
    return t20 + t11 + t02;
}

// dim Ext^1_G(L(r), L(s)) through the spectral sequence: E_2^{10} recurses
// on the shifted weights when the bottom digits agree; E_2^{01} is a Hom
// against the L(1)-tensor when the bottom digits sum to p - 2. For p > 2
// the guards are exclusive (p - 2 is odd); for p = 2 both may fire at
// r0 = s0 = 0, but at most one term is nonzero; asserted.
inline int ext1_via_ss(const weight& r, const weight& s) {
    if (r.characteristic() != s.characteristic())
        throw char_mismatch("Ext^1 of weights in characteristics " +
                            std::to_string(r.characteristic().value()) + " and " +
                            std::to_string(s.characteristic().value()));
    if (r == s) return 0;
    const int p = r.characteristic().value();
    const auto [r0, rest_r] = split_head(r);
    const auto [s0, rest_s] = split_head(s);
    const int t10 = r0 == s0 ? ext1_via_ss(rest_r, rest_s) : 0;
    const int t01 = r0 + s0 == p - 2 ? hom_with_tensor_l1(rest_r, rest_s) : 0;
    if (t10 + t01 > 1)
        throw internal_inconsistency("ext1_via_ss: E2^{10} and E2^{01} both nonzero at " +
                                     r.to_digit_literal() + ", " + s.to_digit_literal());
    return t10 + t01;
}

// The low-degree E_2 page for L(r): entries (0,0), (1,0), (0,1), (2,0),
// (1,1), (0,2), plus a (3,0) entry recording the vanishing that guards
// the only possible differential out of a nonzero E_2^{02}. Rows survive
// only for the matching bottom digit: m even needs r0 = 0, m odd needs
// r0 = p - 2 (both at once when p = 2). Justification tags:
//   - zero coefficient: Schur in row 0, Steinberg when r0 = p - 1,
//     otherwise CfK;
//   - (0,0): Schur. (1,0), (2,0): Recursion. (0,1), (1,1), (0,2): Linkage;
//   - for p = 2, a vanishing entry whose row parity disagrees with digit 1
//     of r is retagged Parity, the sharper reason;
//   - (3,0): Recursion for p = 2 (untwists to H^2(G, K) = 0), Linkage
//     for p > 2.
// Throws mixed_parity if nonzero entries occupy both row parities, and
// internal_inconsistency if two degree-2 entries are nonzero or the
// abutment sums disagree with the recursive computations.
inline ss_report e2_report(const weight& r) {
    const prime_char pc = r.characteristic();
    const int p = pc.value();
    const auto [r0, rest] = split_head(r);
    const bool even_coeff = (r0 == 0);
    const bool odd_coeff = (r0 == p - 2);
    const std::string lrest = "L(" + rest.to_decimal() + ")";

    ss_report report{pc, r, {}, 0, 0, parity_class::none};

    auto coeff_str = [&](int m, bool present) -> std::string {
        if (!present) return "zero";
        if (m == 0) return lrest;
        return "H0(" + std::to_string(m) + ")*" + lrest;
    };
    auto zero_tag = [&](int m) {
        if (m == 0) return justification::schur;
        return r0 == p - 1 ? justification::steinberg : justification::cfk;
    };
    // In characteristic 2 every torus weight of the row-m coefficient is
    // congruent to m + digit_1(r) mod 2, so an odd total parity kills the
    // entry outright.
    auto retag = [&](int m, int dim, justification base) {
        if (p == 2 && dim == 0 && r.digit(1) % 2 != m % 2)
            return justification::parity;
        return base;
    };
    auto push = [&](int n, int m, int dim, bool present, justification base) {
        if (dim < 0 || dim > 1)
            throw internal_inconsistency("e2_report: entry dimension outside {0,1}");
        report.entries.push_back(
            {n, m, dim, coeff_str(m, present), present ? retag(m, dim, base) : zero_tag(m)});
    };

    report.entries.push_back({0, 0, even_coeff && rest.is_zero() ? 1 : 0,
                              coeff_str(0, even_coeff), justification::schur});
    push(1, 0, even_coeff ? h1_via_ss(rest) : 0, even_coeff, justification::recursion);
    push(0, 1, odd_coeff && rest.has_value(1) ? 1 : 0, odd_coeff, justification::linkage);
    push(2, 0, even_coeff ? h2_via_ss(rest) : 0, even_coeff, justification::recursion);
    push(1, 1, odd_coeff ? cline_ext1(weight::from_value(1, pc), rest) : 0, odd_coeff,
         justification::linkage);
    const int d02 = (even_coeff && rest.has_value(2)) ? 1 : 0;
    push(0, 2, d02, even_coeff, justification::linkage);
    if (d02 == 1)
        report.entries.push_back({3, 0, 0, lrest,
                                  p == 2 ? justification::recursion : justification::linkage});

    int deg2_nonzero = 0;
    bool has_even = false, has_odd = false;
    for (const auto& e : report.entries) {
        if (e.dim == 0) continue;
        (e.m % 2 == 0 ? has_even : has_odd) = true;
        if (e.n + e.m == 1) report.h1 += e.dim;
        if (e.n + e.m == 2) {
            report.h2 += e.dim;
            ++deg2_nonzero;
        }
    }
    if (has_even && has_odd)
        throw mixed_parity("e2_report: nonzero entries in both row parities at " +
                           r.to_digit_literal());
    if (deg2_nonzero > 1)
        throw internal_inconsistency("e2_report: multiple nonzero degree-2 entries at " +
                                     r.to_digit_literal());
    if (report.h1 != h1_via_ss(r) || report.h2 != h2_via_ss(r))
        throw internal_inconsistency("e2_report: abutment sums disagree with recursion at " +
                                     r.to_digit_literal());
    report.parity = has_even ? parity_class::even
                  : has_odd  ? parity_class::odd
                             : parity_class::none;
    return report;
}

} // namespace sl2coh
