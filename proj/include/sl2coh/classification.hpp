#pragma once

#include <cstdint>
#include <future>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "ext_one.hpp"
#include "prime.hpp"
#include "spectral.hpp"
#include "weight.hpp"

namespace sl2coh {

// The three families of weights w with H^2(G, L(w)) = K, up to Frobenius
// twist: 2p, 2p^2 - 2p - 2 (p > 2 only: its digit pattern needs p - 3 at
// position 1), and 2p - 2 + (2p - 2)p^e for e > 1.
enum class h2_family_kind { two_p, two_p_sq_minus, two_family };

inline const char* family_label(h2_family_kind k) {
    switch (k) {
        case h2_family_kind::two_p: return "2p";
        case h2_family_kind::two_p_sq_minus: return "2p^2-2p-2";
        case h2_family_kind::two_family: return "2p-2+(2p-2)p^e";
    }
    return "?";
}

// Which H^2 family a weight belongs to: w = base * p^twist with base the
// untwisted family member. The exponent e is meaningful for two_family
// only and is zero otherwise.
struct h2_family {
    h2_family_kind kind = h2_family_kind::two_p;
    int e = 0;
    weight base;
    int twist = 0;
};

// Matches w against the three families by digit pattern after stripping
// the maximal Frobenius twist. Untwisted patterns for p > 2:
//   2p               -> [2] with at least one stripped zero
//   2p^2 - 2p - 2    -> [p-2, p-3, 1]
//   family three     -> [p-2, 1, 0, ..., 0, p-2, 1], blocks at 0 and e > 1.
// For p = 2 the patterns degenerate: 2p = 4 strips to [1] with d >= 2,
// and family three, 2 + 2^(e+1) with e > 1, strips to [1, 0, ..., 0, 1]
// with top digit at position e >= 2 and d >= 1.
inline std::optional<h2_family> h2_family_of(const weight& w) {
    const prime_char pc = w.characteristic();
    const int p = pc.value();
    const auto [s, d] = untwist_maximal(w);
    const auto& ds = s.digits();

    if (p > 2) {
        if (ds == std::vector<int>{2} && d >= 1)
            return h2_family{h2_family_kind::two_p, 0,
                             weight::from_digits({0, 2}, pc), d - 1};
        if (ds == std::vector<int>{p - 2, p - 3, 1})
            return h2_family{h2_family_kind::two_p_sq_minus, 0, s, d};
        if (ds.size() >= 4) {
            const std::size_t e = ds.size() - 2;
            bool match = ds[0] == p - 2 && ds[1] == 1 && ds[e] == p - 2 && ds[e + 1] == 1;
            for (std::size_t i = 2; match && i < e; ++i) match = ds[i] == 0;
            if (match)
                return h2_family{h2_family_kind::two_family, static_cast<int>(e), s, d};
        }
        return std::nullopt;
    }

    if (ds == std::vector<int>{1} && d >= 2)
        return h2_family{h2_family_kind::two_p, 0,
                         weight::from_digits({0, 0, 1}, pc), d - 2};
    if (ds.size() >= 3 && d >= 1 && ds.front() == 1 && ds.back() == 1) {
        bool match = true;
        for (std::size_t i = 1; match && i + 1 < ds.size(); ++i) match = ds[i] == 0;
        if (match)
            return h2_family{h2_family_kind::two_family,
                             static_cast<int>(ds.size()) - 1, frobenius_twist(s, 1),
                             d - 1};
    }
    return std::nullopt;
}

// dim H^2(G, L(w)) by the classification: 1 iff w lies in one of the
// three families up to Frobenius twist.
inline int h2_closed_form(const weight& w) {
    return h2_family_of(w) ? 1 : 0;
}

// dim H^1(G, L(w)) by the classification: 1 iff w = (2p-2) * p^d.
inline int h1_closed_form(const weight& w) {
    const int p = w.characteristic().value();
    const auto [s, d] = untwist_maximal(w);
    if (p > 2) return s.digits() == std::vector<int>{p - 2, 1} ? 1 : 0;
    return (s.digits() == std::vector<int>{1} && d >= 1) ? 1 : 0;
}

// All weights W = (2p-2) * p^k, k up to len(digits(w)) + 1, with
// Ext^1_G(L(W), L(w)) = K. Nonempty for every h2-positive w except the
// characteristic-2 twists of 2p, where no such witness exists. The digit
// rule cannot relate weights whose digit supports are further than one
// position apart, so the k bound is exhaustive.
inline std::set<weight> corollary2_witnesses(const weight& w) {
    const prime_char pc = w.characteristic();
    const weight base = weight::from_value(2 * static_cast<unsigned>(pc.value()) - 2, pc);
    std::set<weight> out;
    for (std::size_t k = 0; k <= w.size() + 1; ++k) {
        weight candidate = frobenius_twist(base, static_cast<int>(k));
        if (cline_ext1(candidate, w) == 1) out.insert(std::move(candidate));
    }
    return out;
}

// Outcome of an exhaustive dual-path verification sweep. Mismatches are
// data: an entry means the closed forms and the spectral-sequence path
// disagreed somewhere, which no input should ever produce.
struct verification_report {
    prime_char p;
    std::uint64_t max_weight = 0;
    std::optional<std::uint64_t> pair_max;
    std::uint64_t weights_checked = 0;
    std::uint64_t pairs_checked = 0;
    std::vector<std::uint64_t> h1_positive;
    std::vector<std::uint64_t> h2_positive;
    std::vector<std::string> mismatches;
};

namespace detail {

struct sweep_chunk {
    std::uint64_t weights_checked = 0;
    std::uint64_t pairs_checked = 0;
    std::vector<std::uint64_t> h1_positive;
    std::vector<std::uint64_t> h2_positive;
    std::vector<std::string> mismatches;
};

inline void sweep_one_weight(prime_char pc, std::uint64_t n, sweep_chunk& out) {
    const weight w = weight::from_value(n, pc);

    const int h1_a = h1_dim(w);
    const int h1_b = h1_via_ss(w);
    const int h1_c = h1_closed_form(w);
    if (h1_a != h1_b || h1_b != h1_c)
        out.mismatches.push_back("w=" + std::to_string(n) +
                                 ": h1_dim=" + std::to_string(h1_a) +
                                 " h1_via_ss=" + std::to_string(h1_b) +
                                 " h1_closed_form=" + std::to_string(h1_c));
    if (h1_a == 1) out.h1_positive.push_back(n);

    const int h2_a = h2_closed_form(w);
    const int h2_b = h2_via_ss(w);
    if (h2_a != h2_b)
        out.mismatches.push_back("w=" + std::to_string(n) +
                                 ": h2_closed_form=" + std::to_string(h2_a) +
                                 " h2_via_ss=" + std::to_string(h2_b));
    if (h2_a == 1) out.h2_positive.push_back(n);

    // Page structure: throws on parity or exclusivity violations.
    e2_report(w);

    if (const auto family = h2_family_of(w)) {
        const bool witnessless =
            pc.value() == 2 && family->kind == h2_family_kind::two_p;
        const bool empty = corollary2_witnesses(w).empty();
        if (empty != witnessless)
            out.mismatches.push_back("w=" + std::to_string(n) + ": witnesses " +
                                     (empty ? "missing" : "unexpected") +
                                     " for family " + family_label(family->kind));
    }
    ++out.weights_checked;
}

inline void sweep_pair_row(prime_char pc, std::uint64_t r, std::uint64_t pair_max,
                           sweep_chunk& out) {
    const weight wr = weight::from_value(r, pc);
    for (std::uint64_t s = 0; s <= pair_max; ++s) {
        const weight ws = weight::from_value(s, pc);
        const int forward = cline_ext1(wr, ws);
        const int via_ss = ext1_via_ss(wr, ws);
        const int backward = cline_ext1(ws, wr);
        if (forward != via_ss || forward != backward)
            out.mismatches.push_back(
                "r=" + std::to_string(r) + " s=" + std::to_string(s) +
                ": cline=" + std::to_string(forward) +
                " via_ss=" + std::to_string(via_ss) +
                " swapped=" + std::to_string(backward));
        ++out.pairs_checked;
    }
}

} // namespace detail

// Runs every cross-check over all weights in [0, max_weight] and, when
// pair_max is given, the Ext^1 dual-path and symmetry checks over all
// ordered pairs in [0, pair_max]^2. The range is sharded across jobs
// worker threads in contiguous blocks and merged in block order, so the
// report is deterministic regardless of job count. Internal invariant
// violations (page parity, sum bounds) propagate as exceptions.
inline verification_report verify_sweep(prime_char pc, std::uint64_t max_weight,
                                        std::optional<std::uint64_t> pair_max = std::nullopt,
                                        unsigned jobs = 1) {
    verification_report report{pc, max_weight, pair_max, 0, 0, {}, {}, {}};
    if (jobs == 0) jobs = 1;

    auto run_sharded = [&](std::uint64_t hi, auto body) {
        const std::uint64_t count = hi + 1;
        const auto workers =
            static_cast<unsigned>(std::min<std::uint64_t>(jobs, count));
        std::vector<std::future<detail::sweep_chunk>> futures;
        futures.reserve(workers);
        for (unsigned j = 0; j < workers; ++j) {
            const std::uint64_t lo = count / workers * j + std::min<std::uint64_t>(j, count % workers);
            const std::uint64_t len = count / workers + (j < count % workers ? 1 : 0);
            futures.push_back(std::async(std::launch::async, [pc, lo, len, body] {
                detail::sweep_chunk chunk;
                for (std::uint64_t n = lo; n < lo + len; ++n) body(pc, n, chunk);
                return chunk;
            }));
        }
        for (auto& f : futures) {
            detail::sweep_chunk chunk = f.get();
            report.weights_checked += chunk.weights_checked;
            report.pairs_checked += chunk.pairs_checked;
            report.h1_positive.insert(report.h1_positive.end(),
                                      chunk.h1_positive.begin(), chunk.h1_positive.end());
            report.h2_positive.insert(report.h2_positive.end(),
                                      chunk.h2_positive.begin(), chunk.h2_positive.end());
            report.mismatches.insert(report.mismatches.end(),
                                     chunk.mismatches.begin(), chunk.mismatches.end());
        }
    };

    run_sharded(max_weight, [](prime_char p, std::uint64_t n, detail::sweep_chunk& chunk) {
        detail::sweep_one_weight(p, n, chunk);
    });
    if (pair_max) {
        const std::uint64_t bound = *pair_max;
        run_sharded(bound, [bound](prime_char p, std::uint64_t r, detail::sweep_chunk& chunk) {
            detail::sweep_pair_row(p, r, bound, chunk);
        });
    }
    return report;
}

} // namespace sl2coh
