#include <catch2/catch_amalgamated.hpp>

#include <cstdint>

#include "sl2coh/character.hpp"
#include "sl2coh/g1_cohomology.hpp"
#include "sl2coh/weight.hpp"

using namespace sl2coh;

namespace {

const prime_char p2(2);
const prime_char p3(3);
const prime_char p5(5);
const prime_char p7(7);

} // namespace

TEST_CASE("g1_coh_restricted: trivial and p-2 coefficients only") {
    CHECK(g1_coh_restricted(0, 0, p5) == g1_coh_value{true, 0});
    CHECK(g1_coh_restricted(2, 0, p5) == g1_coh_value{true, 2});
    CHECK(g1_coh_restricted(1, 3, p5) == g1_coh_value{true, 1});
    CHECK(g1_coh_restricted(3, 3, p5) == g1_coh_value{true, 3});
    CHECK_FALSE(g1_coh_restricted(1, 0, p5).present);
    CHECK_FALSE(g1_coh_restricted(0, 3, p5).present);
    CHECK_FALSE(g1_coh_restricted(4, 2, p5).present);
    CHECK_THROWS_AS(g1_coh_restricted(-1, 0, p5), unsupported_degree);
    CHECK_THROWS_AS(g1_coh_restricted(0, 5, p5), invalid_digit);
}

TEST_CASE("g1_coh_restricted parity, exhaustive over small degrees") {
    for (const prime_char& p : {p3, p5, p7}) {
        const int pv = p.value();
        for (int m = 0; m <= 20; ++m)
            for (int r0 = 0; r0 < pv; ++r0) {
                const bool expected =
                    (r0 == 0 && m % 2 == 0) || (r0 == pv - 2 && m % 2 == 1);
                CHECK(g1_coh_restricted(m, r0, p).present == expected);
                if (expected) CHECK(g1_coh_restricted(m, r0, p).weight == m);
            }
    }
}

TEST_CASE("g1_coh_restricted in characteristic 2: both parities at digit 0") {
    for (int m = 0; m <= 6; ++m) {
        CHECK(g1_coh_restricted(m, 0, p2) == g1_coh_value{true, m});
        CHECK_FALSE(g1_coh_restricted(m, 1, p2).present);
    }
}

TEST_CASE("steinberg self-extensions vanish above degree zero") {
    CHECK(steinberg_ext_g1(0) == 1);
    CHECK(steinberg_ext_g1(1) == 0);
    CHECK(steinberg_ext_g1(2) == 0);
    CHECK(steinberg_ext_g1(100) == 0);
    CHECK_THROWS_AS(steinberg_ext_g1(-1), unsupported_degree);
}

TEST_CASE("g1_coh_pair in degrees zero and one") {
    CHECK(g1_coh_pair(0, 2, 2, p5) == g1_coh_value{true, 0});
    CHECK_FALSE(g1_coh_pair(0, 2, 3, p5).present);
    CHECK(g1_coh_pair(1, 1, 2, p5) == g1_coh_value{true, 1});
    CHECK_FALSE(g1_coh_pair(1, 2, 2, p5).present);
    CHECK(g1_coh_pair(1, 0, 0, p2) == g1_coh_value{true, 1});
    CHECK_FALSE(g1_coh_pair(1, 1, 1, p2).present);  // Steinberg pair stays exact
    CHECK_FALSE(g1_coh_pair(1, 4, 4, p5).present);  // same, p > 2
    CHECK_THROWS_AS(g1_coh_pair(2, 0, 0, p5), unsupported_degree);
    CHECK_THROWS_AS(g1_coh_pair(0, 0, 7, p5), invalid_digit);
}

TEST_CASE("g1_coh_pair is symmetric and extends g1_coh_restricted") {
    for (const prime_char& p : {p2, p3, p5, p7}) {
        const int pv = p.value();
        for (int m = 0; m <= 1; ++m)
            for (int a = 0; a < pv; ++a) {
                for (int b = 0; b < pv; ++b)
                    CHECK(g1_coh_pair(m, a, b, p) == g1_coh_pair(m, b, a, p));
                CHECK(g1_coh_pair(m, a, 0, p) == g1_coh_restricted(m, a, p));
            }
    }
}

TEST_CASE("degree-one pair presence matches the tensor character") {
    // When H^1(G_1, L(a) x L(b)) is present, the weight p - 2 occurs in
    // the tensor decomposition with multiplicity exactly one.
    for (const prime_char& p : {p3, p5}) {
        const int pv = p.value();
        for (int a = 0; a < pv; ++a)
            for (int b = 0; b < pv; ++b) {
                const auto factors = decompose(
                    tensor(irreducible_character(weight::from_value(
                               static_cast<std::uint64_t>(a), p)),
                           irreducible_character(weight::from_value(
                               static_cast<std::uint64_t>(b), p))));
                const auto it = factors.find(pv - 2);
                const std::int64_t mult = it == factors.end() ? 0 : it->second;
                if (g1_coh_pair(1, a, b, p).present)
                    CHECK(mult == 1);
                else
                    CHECK(mult != 1);
            }
    }
}
