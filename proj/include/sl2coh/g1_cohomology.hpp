#pragma once

#include <string>

#include "errors.hpp"
#include "prime.hpp"

namespace sl2coh {

namespace detail {

inline void check_restricted_digit(int d, prime_char p, const char* what) {
    if (d < 0 || d >= p.value())
        throw invalid_digit(std::string(what) + ": digit " + std::to_string(d) +
                            " out of range for characteristic " +
                            std::to_string(p.value()));
}

} // namespace detail

// Cohomology of the first Frobenius kernel G_1 with coefficients in a
// restricted simple module, recorded after untwisting: the value is
// either zero or the irreducible G-module L(weight) for the stored
// highest weight.
struct g1_coh_value {
    bool present = false;    // false means the cohomology group vanishes
    int weight = 0;          // highest weight of the untwisted value

    friend bool operator==(const g1_coh_value& a, const g1_coh_value& b) {
        return a.present == b.present && (!a.present || a.weight == b.weight);
    }
};

// H^m(G_1, L(r0)) for a restricted digit r0, untwisted by one Frobenius
// twist. It vanishes unless r0 is 0 (even m) or p - 2 (odd m), in which
// case it is the induced module H^0(m) of highest weight m. In
// characteristic 2 the two cases coincide at r0 = 0.
inline g1_coh_value g1_coh_restricted(int m, int r0, prime_char p) {
    if (m < 0) throw unsupported_degree("negative cohomological degree");
    detail::check_restricted_digit(r0, p, "g1_coh_restricted");
    const bool even_case = (r0 == 0 && m % 2 == 0);
    const bool odd_case = (r0 == p.value() - 2 && m % 2 == 1);
    if (even_case || odd_case) return {true, m};
    return {false, 0};
}

// dim Ext^i_{G_1}(St_1, St_1) for the Steinberg module St_1 = L(p - 1):
// St_1 is injective and projective over G_1, so only degree zero survives.
inline int steinberg_ext_g1(int i) {
    if (i < 0) throw unsupported_degree("negative cohomological degree");
    return i == 0 ? 1 : 0;
}

// H^m(G_1, L(a) tensor L(b)) for restricted digits a, b, untwisted, in
// degrees m <= 1:
//   m = 0: Hom_{G_1}(K, a tensor b) = K iff a = b, of weight 0;
//   m = 1: nonzero iff a + b = p - 2, in which case the value is the
//          two-dimensional induced module H^0(1), of highest weight 1.
// Higher degrees of the pair form are outside this library's range.
inline g1_coh_value g1_coh_pair(int m, int a, int b, prime_char p) {
    if (m < 0) throw unsupported_degree("negative cohomological degree");
    detail::check_restricted_digit(a, p, "g1_coh_pair");
    detail::check_restricted_digit(b, p, "g1_coh_pair");
    if (m == 0) return a == b ? g1_coh_value{true, 0} : g1_coh_value{false, 0};
    if (m == 1)
        return a + b == p.value() - 2 ? g1_coh_value{true, 1} : g1_coh_value{false, 0};
    throw unsupported_degree("g1_coh_pair computes degrees 0 and 1 only, got " +
                             std::to_string(m));
}

} // namespace sl2coh
