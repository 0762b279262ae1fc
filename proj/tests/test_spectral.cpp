#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <type_traits>

#include "sl2coh/classification.hpp"
#include "sl2coh/ext_one.hpp"
#include "sl2coh/spectral.hpp"
#include "sl2coh/weight.hpp"

using namespace sl2coh;

namespace {

const prime_char p2(2);
const prime_char p3(3);
const prime_char p5(5);

weight w(std::uint64_t n, prime_char p) { return weight::from_value(n, p); }

const e2_entry* find_entry(const ss_report& rep, int n, int m) {
    for (const auto& e : rep.entries)
        if (e.n == n && e.m == m) return &e;
    return nullptr;
}

} // namespace

static_assert(std::is_base_of_v<internal_inconsistency, mixed_parity>);

TEST_CASE("h1_via_ss, frozen values") {
    CHECK(h1_via_ss(w(8, p5)) == 1);
    CHECK(h1_via_ss(w(0, p5)) == 0);
    CHECK(h1_via_ss(w(12, p3)) == 1);
    CHECK(h1_via_ss(w(4, p3)) == 1);
    CHECK(h1_via_ss(w(2, p2)) == 1);
    CHECK(h1_via_ss(w(1, p2)) == 0);
    CHECK(h1_via_ss(w(3, p3)) == 0);
}

TEST_CASE("h2_via_ss, frozen values") {
    CHECK(h2_via_ss(w(6, p3)) == 1);
    CHECK(h2_via_ss(w(2, p3)) == 0);
    CHECK(h2_via_ss(w(40, p3)) == 1);
    CHECK(h2_via_ss(w(0, p3)) == 0);
    CHECK(h2_via_ss(w(4, p2)) == 1);
    CHECK(h2_via_ss(w(8, p2)) == 1);
    CHECK(h2_via_ss(w(10, p2)) == 1);
    CHECK(h2_via_ss(w(6, p2)) == 0);
    CHECK(h2_via_ss(w(18, p2)) == 1);
    CHECK(h2_via_ss(w(10, p5)) == 1);
}

TEST_CASE("ext1_via_ss, frozen values") {
    CHECK(ext1_via_ss(w(0, p3), w(4, p3)) == 1);
    CHECK(ext1_via_ss(w(6, p2), w(0, p2)) == 0);
    CHECK(ext1_via_ss(w(42, p5), w(52, p5)) == 1);
    for (std::uint64_t n = 0; n <= 50; ++n)
        CHECK(ext1_via_ss(w(n, p3), w(n, p3)) == 0);
    CHECK_THROWS_AS(ext1_via_ss(w(1, p2), w(1, p3)), char_mismatch);
}

TEST_CASE("e2_report for the trivial module") {
    const ss_report rep = e2_report(w(0, p3));
    CHECK(rep.entries.size() == 6);
    const auto* corner = find_entry(rep, 0, 0);
    REQUIRE(corner != nullptr);
    CHECK(corner->dim == 1);
    CHECK(corner->coefficient == "L(0)");
    CHECK(corner->why == justification::schur);
    for (const auto& e : rep.entries)
        if (e.n != 0 || e.m != 0) CHECK(e.dim == 0);
    CHECK(rep.h1 == 0);
    CHECK(rep.h2 == 0);
    CHECK(rep.parity == parity_class::even);
}

TEST_CASE("e2_report for 2p at p=3: only the (0,2) entry survives") {
    const ss_report rep = e2_report(w(6, p3));
    REQUIRE(rep.entries.size() == 7);  // includes the (3,0) vanishing record
    for (const auto& e : rep.entries) {
        if (e.n == 0 && e.m == 2) {
            CHECK(e.dim == 1);
            CHECK(e.coefficient == "H0(2)*L(2)");
            CHECK(e.why == justification::linkage);
        } else {
            CHECK(e.dim == 0);
        }
    }
    const auto* guard = find_entry(rep, 3, 0);
    REQUIRE(guard != nullptr);
    CHECK(guard->coefficient == "L(2)");
    CHECK(guard->why == justification::linkage);
    const auto* odd_row = find_entry(rep, 0, 1);
    REQUIRE(odd_row != nullptr);
    CHECK(odd_row->coefficient == "zero");
    CHECK(odd_row->why == justification::cfk);
    CHECK(rep.h1 == 0);
    CHECK(rep.h2 == 1);
    CHECK(rep.parity == parity_class::even);
}

TEST_CASE("e2_report for the (1,1) family member 10 at p=3") {
    const ss_report rep = e2_report(w(10, p3));
    CHECK(rep.entries.size() == 6);
    const auto* middle = find_entry(rep, 1, 1);
    REQUIRE(middle != nullptr);
    CHECK(middle->dim == 1);
    CHECK(middle->coefficient == "H0(1)*L(3)");
    CHECK(middle->why == justification::linkage);
    for (const auto& e : rep.entries)
        if (e.n != 1 || e.m != 1) CHECK(e.dim == 0);
    CHECK(rep.h1 == 0);
    CHECK(rep.h2 == 1);
    CHECK(rep.parity == parity_class::odd);
}

TEST_CASE("e2_report in characteristic 2 shares rows across parities") {
    const ss_report rep = e2_report(w(4, p2));
    REQUIRE(rep.entries.size() == 7);
    const auto* h1_entry = find_entry(rep, 1, 0);
    REQUIRE(h1_entry != nullptr);
    CHECK(h1_entry->dim == 1);
    CHECK(h1_entry->coefficient == "L(2)");
    CHECK(h1_entry->why == justification::recursion);
    const auto* top = find_entry(rep, 0, 2);
    REQUIRE(top != nullptr);
    CHECK(top->dim == 1);
    CHECK(top->coefficient == "H0(2)*L(2)");
    const auto* odd_hom = find_entry(rep, 0, 1);
    REQUIRE(odd_hom != nullptr);
    CHECK(odd_hom->dim == 0);
    CHECK(odd_hom->coefficient == "H0(1)*L(2)");
    CHECK(odd_hom->why == justification::parity);   // digit 1 of r is even
    const auto* guard = find_entry(rep, 3, 0);
    REQUIRE(guard != nullptr);
    CHECK(guard->dim == 0);
    CHECK(guard->why == justification::recursion);
    CHECK(rep.h1 == 1);
    CHECK(rep.h2 == 1);
    CHECK(rep.parity == parity_class::even);
}

TEST_CASE("e2_report of a Steinberg-headed weight tags the odd rows") {
    // 5 = [2,1] at p=3: bottom digit p-1 kills every row.
    const ss_report rep = e2_report(w(5, p3));
    for (const auto& e : rep.entries) {
        CHECK(e.dim == 0);
        CHECK(e.coefficient == "zero");
        if (e.m == 0)
            CHECK(e.why == justification::schur);
        else
            CHECK(e.why == justification::steinberg);
    }
    CHECK(rep.parity == parity_class::none);
}

TEST_CASE("page reports are structurally sound across a sweep") {
    for (const prime_char& p : {p2, p3, p5}) {
        std::uint64_t bound = 1;
        for (int i = 0; i < 4; ++i) bound *= static_cast<std::uint64_t>(p.value());
        for (std::uint64_t n = 0; n <= bound; ++n) {
            const weight r = w(n, p);
            const ss_report rep = e2_report(r);   // throws on violations
            int deg2 = 0;
            for (const auto& e : rep.entries) {
                CHECK((e.dim == 0 || e.dim == 1));
                if (e.coefficient == "zero") CHECK(e.dim == 0);
                if (e.n + e.m == 2 && e.dim == 1) ++deg2;
            }
            CHECK(deg2 <= 1);
            CHECK(rep.h1 == h1_dim(r));
            CHECK(rep.h2 == h2_closed_form(r));
            CHECK(rep.parity != parity_class::mixed);
        }
    }
}
