#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sl2coh/sl2coh.hpp"

using nlohmann::ordered_json;
using namespace sl2coh;

namespace {

std::optional<prime_char> char_of(int p) {
    if (p == 0) return std::nullopt;
    return prime_char(p);
}

// Digits column/string without the characteristic suffix, e.g. "[0,2]".
std::string digits_str(const weight& w) {
    std::string out = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(w.digits()[i]);
    }
    return out + "]";
}

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << '\n'; }

int run_h1(int p, const std::string& rtext, const std::string& format) {
    auto pc = char_of(p);
    const weight r = parse_weight(rtext, pc);
    const int dim = h1_dim(r);
    if (dim != h1_via_ss(r) || dim != h1_closed_form(r))
        throw internal_inconsistency("H1 paths disagree at " + r.to_digit_literal());
    if (format == "json") {
        emit({{"p", r.characteristic().value()}, {"r", r.to_decimal()}, {"dim", dim}});
    } else {
        std::cout << "H1(SL2, L(" << r.to_decimal() << ")) = "
                  << (dim ? "K (dim 1)" : "0 (dim 0)") << '\n';
    }
    return 0;
}

int run_h2(int p, const std::string& rtext, const std::string& format) {
    auto pc = char_of(p);
    const weight r = parse_weight(rtext, pc);
    const auto family = h2_family_of(r);
    const int dim = family ? 1 : 0;
    if (dim != h2_via_ss(r))
        throw internal_inconsistency("H2 paths disagree at " + r.to_digit_literal());
    if (format == "json") {
        ordered_json doc{{"p", r.characteristic().value()},
                         {"r", r.to_decimal()},
                         {"dim", dim},
                         {"family", nullptr},
                         {"e", nullptr},
                         {"base", nullptr},
                         {"twist", nullptr}};
        if (family) {
            doc["family"] = family_label(family->kind);
            if (family->kind == h2_family_kind::two_family) doc["e"] = family->e;
            doc["base"] = family->base.to_decimal();
            doc["twist"] = family->twist;
        }
        emit(doc);
    } else {
        std::cout << "H2(SL2, L(" << r.to_decimal() << ")) = "
                  << (dim ? "K (dim 1)" : "0 (dim 0)");
        if (family) {
            std::cout << ", family " << family_label(family->kind);
            if (family->kind == h2_family_kind::two_family)
                std::cout << ", e=" << family->e;
            std::cout << ", twist " << family->twist;
        }
        std::cout << '\n';
    }
    return 0;
}

int run_ext1(int p, const std::string& rtext, const std::string& stext,
             const std::string& format) {
    auto pc = char_of(p);
    const weight r = parse_weight(rtext, pc);
    pc = r.characteristic();
    const weight s = parse_weight(stext, pc);
    const auto witness = cline_ext1_witness(r, s);
    const int dim = witness ? 1 : 0;
    if (dim != ext1_via_ss(r, s) || dim != cline_ext1(s, r))
        throw internal_inconsistency("Ext1 paths disagree at " + r.to_digit_literal() +
                                     ", " + s.to_digit_literal());
    if (format == "json") {
        ordered_json doc{{"dim", dim}, {"witness_k", nullptr}};
        if (witness) doc["witness_k"] = *witness;
        emit(doc);
    } else {
        std::cout << "Ext1(L(" << r.to_decimal() << "), L(" << s.to_decimal() << ")) = "
                  << (dim ? "K (dim 1)" : "0 (dim 0)");
        if (witness) std::cout << ", witness k=" << *witness;
        std::cout << '\n';
    }
    return 0;
}

int run_e2page(int p, const std::string& rtext, const std::string& format) {
    auto pc = char_of(p);
    const weight r = parse_weight(rtext, pc);
    const ss_report report = e2_report(r);
    if (format == "json") {
        ordered_json entries = ordered_json::array();
        for (const auto& e : report.entries)
            entries.push_back({{"n", e.n},
                               {"m", e.m},
                               {"dim", e.dim},
                               {"coeff", e.coefficient},
                               {"why", to_string(e.why)}});
        emit({{"p", report.p.value()},
              {"r", report.w.to_decimal()},
              {"entries", entries},
              {"h1", report.h1},
              {"h2", report.h2},
              {"parity", to_string(report.parity)}});
    } else {
        std::cout << "E2 page for L(" << report.w.to_decimal()
                  << ") in characteristic " << report.p.value() << '\n';
        for (const auto& e : report.entries)
            std::cout << "  (" << e.n << ',' << e.m << "): dim=" << e.dim
                      << " coeff=" << e.coefficient << " why=" << to_string(e.why)
                      << '\n';
        std::cout << "H1 = " << report.h1 << ", H2 = " << report.h2
                  << ", parity = " << to_string(report.parity) << '\n';
    }
    return 0;
}

int run_char(int p, const std::string& rtext, const std::string& format) {
    auto pc = char_of(p);
    const weight r = parse_weight(rtext, pc);
    const character chi = irreducible_character(r);
    if (format == "json") {
        ordered_json doc = ordered_json::array();
        for (auto it = chi.support().rbegin(); it != chi.support().rend(); ++it)
            doc.push_back({std::to_string(it->first), it->second});
        emit(doc);
    } else {
        bool first = true;
        for (auto it = chi.support().rbegin(); it != chi.support().rend(); ++it) {
            if (!first) std::cout << ' ';
            std::cout << it->first << ':' << it->second;
            first = false;
        }
        std::cout << '\n';
    }
    return 0;
}

int run_decompose(int p, const std::string& rtext, const std::string& stext,
                  const std::string& format) {
    auto pc = char_of(p);
    const weight r = parse_weight(rtext, pc);
    pc = r.characteristic();
    character chi = irreducible_character(r);
    if (!stext.empty()) {
        const weight s = parse_weight(stext, pc);
        chi = tensor(chi, irreducible_character(s));
    }
    const auto factors = decompose(chi);
    if (format == "json") {
        ordered_json doc = ordered_json::array();
        for (auto it = factors.rbegin(); it != factors.rend(); ++it)
            doc.push_back({std::to_string(it->first), it->second});
        emit(doc);
    } else {
        bool first = true;
        for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
            if (!first) std::cout << ' ';
            std::cout << it->first << ':' << it->second;
            first = false;
        }
        std::cout << '\n';
    }
    return 0;
}

int run_partners(int p, const std::string& stext, std::uint64_t max_digits,
                 const std::string& format) {
    auto pc = char_of(p);
    const weight s = parse_weight(stext, pc);
    const std::size_t bound =
        max_digits > 0 ? static_cast<std::size_t>(max_digits) : s.size() + 1;
    const auto partners = list_ext1_partners(s, bound);
    if (format == "json") {
        ordered_json doc = ordered_json::array();
        for (const auto& w : partners) doc.push_back(w.to_decimal());
        emit(doc);
    } else {
        if (partners.empty()) {
            std::cout << "(none)\n";
        } else {
            bool first = true;
            for (const auto& w : partners) {
                if (!first) std::cout << ' ';
                std::cout << w.to_decimal();
                first = false;
            }
            std::cout << '\n';
        }
    }
    return 0;
}

int run_witnesses(int p, const std::string& rtext, const std::string& format) {
    auto pc = char_of(p);
    const weight r = parse_weight(rtext, pc);
    const auto witnesses = corollary2_witnesses(r);
    if (format == "json") {
        ordered_json doc = ordered_json::array();
        for (const auto& w : witnesses) doc.push_back(w.to_decimal());
        emit(doc);
    } else {
        if (witnesses.empty()) {
            std::cout << "(none)\n";
        } else {
            bool first = true;
            for (const auto& w : witnesses) {
                if (!first) std::cout << ' ';
                std::cout << w.to_decimal();
                first = false;
            }
            std::cout << '\n';
        }
    }
    return 0;
}

int run_table(int p, std::uint64_t max_weight, const std::string& format) {
    const prime_char pc(p);
    const bool json = format == "json";
    ordered_json rows = ordered_json::array();
    if (!json) std::cout << "p,weight,digits,h0,h1,h2,h2_family,h2_twist\n";
    for (std::uint64_t n = 0; n <= max_weight; ++n) {
        const weight w = weight::from_value(n, pc);
        const int h0 = w.is_zero() ? 1 : 0;
        const int h1 = h1_dim(w);
        const auto family = h2_family_of(w);
        const int h2 = family ? 1 : 0;
        if (h1 != h1_via_ss(w) || h2 != h2_via_ss(w))
            throw internal_inconsistency("table paths disagree at w=" + std::to_string(n));
        if (json) {
            ordered_json row{{"p", pc.value()},
                             {"weight", w.to_decimal()},
                             {"digits", digits_str(w)},
                             {"h0", h0},
                             {"h1", h1},
                             {"h2", h2},
                             {"h2_family", nullptr},
                             {"h2_twist", nullptr}};
            if (family) {
                row["h2_family"] = family_label(family->kind);
                row["h2_twist"] = family->twist;
            }
            rows.push_back(row);
        } else {
            std::cout << pc.value() << ',' << w.to_decimal() << ",\"" << digits_str(w)
                      << "\"," << h0 << ',' << h1 << ',' << h2 << ','
                      << (family ? family_label(family->kind) : "") << ','
                      << (family ? std::to_string(family->twist) : "") << '\n';
        }
    }
    if (json) emit(rows);
    return 0;
}

int run_verify(int p, std::uint64_t max_weight, std::optional<std::uint64_t> pair_max,
               unsigned jobs, const std::string& format) {
    const prime_char pc(p);
    const verification_report report = verify_sweep(pc, max_weight, pair_max, jobs);
    if (format == "json") {
        ordered_json h1_pos = ordered_json::array();
        for (auto n : report.h1_positive) h1_pos.push_back(std::to_string(n));
        ordered_json h2_pos = ordered_json::array();
        for (auto n : report.h2_positive) h2_pos.push_back(std::to_string(n));
        ordered_json doc{{"p", report.p.value()},
                         {"max_weight", report.max_weight},
                         {"pair_max", nullptr},
                         {"weights_checked", report.weights_checked},
                         {"pairs_checked", report.pairs_checked},
                         {"h1_positive", h1_pos},
                         {"h2_positive", h2_pos},
                         {"mismatches", report.mismatches}};
        if (report.pair_max) doc["pair_max"] = *report.pair_max;
        emit(doc);
    } else {
        std::cout << "checked " << report.weights_checked << " weights, ";
        if (report.pair_max) std::cout << report.pairs_checked << " pairs, ";
        std::cout << report.mismatches.size() << " mismatches\n";
        for (const auto& line : report.mismatches)
            std::cout << "mismatch: " << line << '\n';
    }
    return report.mismatches.empty() ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact low-degree rational cohomology of irreducible SL2 modules "
                 "in prime characteristic"};
    app.require_subcommand(1);

    const std::string weight_help =
        "weight as a decimal or digit literal, e.g. 40 or [1,1,1,1]@3";
    const std::string char_note =
        "character computations materialize all torus weights; keep weights at "
        "desk scale (roughly 1e5)";

    int p = 0;
    std::string rtext, stext, format = "text";
    std::uint64_t max_value = 0;
    std::uint64_t pair_max_value = 0;
    bool pair_max_given = false;
    unsigned jobs = 1;

    auto add_common = [&](CLI::App* cmd, bool need_r, bool need_s,
                          const std::vector<std::string>& formats) {
        cmd->add_option("-p", p, "prime characteristic");
        if (need_r) cmd->add_option("-r", rtext, weight_help)->required();
        if (need_s) cmd->add_option("-s", stext, weight_help)->required();
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember(formats));
        return cmd;
    };

    auto* cmd_h1 = add_common(app.add_subcommand("h1", "dim H^1(G, L(r))"),
                              true, false, {"text", "json"});
    auto* cmd_h2 = add_common(
        app.add_subcommand("h2", "dim H^2(G, L(r)) and its family"),
        true, false, {"text", "json"});
    auto* cmd_ext1 = add_common(
        app.add_subcommand("ext1", "dim Ext^1_G(L(r), L(s)) and the witness digit"),
        true, true, {"text", "json"});
    auto* cmd_e2page = add_common(
        app.add_subcommand("e2page", "low-degree E2 page of the Frobenius-kernel "
                                     "spectral sequence for L(r)"),
        true, false, {"text", "json"});
    auto* cmd_char = add_common(
        app.add_subcommand("char", "formal character of L(r); " + char_note),
        true, false, {"text", "json"});
    auto* cmd_decompose = add_common(
        app.add_subcommand("decompose",
                           "composition factors of L(r), or of L(r) tensor L(s); " +
                               char_note),
        true, false, {"text", "json"});
    cmd_decompose->add_option("-s", stext, weight_help);
    auto* cmd_partners = app.add_subcommand(
        "partners", "all weights r with Ext^1_G(L(r), L(s)) nonzero");
    cmd_partners->add_option("-p", p, "prime characteristic");
    cmd_partners->add_option("-s", stext, weight_help)->required();
    cmd_partners->add_option("--max", max_value,
                             "digit-length bound for partners (default: minimum)");
    cmd_partners->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    auto* cmd_witnesses = add_common(
        app.add_subcommand("witnesses",
                           "weights (2p-2)p^k with Ext^1 against L(r) nonzero"),
        true, false, {"text", "json"});
    auto* cmd_table = app.add_subcommand(
        "table", "H^0/H^1/H^2 table for all weights up to a bound");
    cmd_table->add_option("-p", p, "prime characteristic")->required();
    cmd_table->add_option("--max", max_value, "largest weight")->required();
    cmd_table->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    auto* cmd_verify = app.add_subcommand(
        "verify", "exhaustive dual-path verification sweep");
    cmd_verify->add_option("-p", p, "prime characteristic")->required();
    cmd_verify->add_option("--max", max_value, "largest weight")->required();
    cmd_verify->add_option("--pair-max", pair_max_value,
                           "also check all Ext^1 pairs up to this bound");
    cmd_verify->add_option("--jobs", jobs, "worker threads");
    cmd_verify->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    pair_max_given = cmd_verify->count("--pair-max") > 0;
    if (cmd_table->parsed() && cmd_table->count("--format") == 0) format = "csv";

    try {
        if (cmd_h1->parsed()) return run_h1(p, rtext, format);
        if (cmd_h2->parsed()) return run_h2(p, rtext, format);
        if (cmd_ext1->parsed()) return run_ext1(p, rtext, stext, format);
        if (cmd_e2page->parsed()) return run_e2page(p, rtext, format);
        if (cmd_char->parsed()) return run_char(p, rtext, format);
        if (cmd_decompose->parsed()) return run_decompose(p, rtext, stext, format);
        if (cmd_partners->parsed()) return run_partners(p, stext, max_value, format);
        if (cmd_witnesses->parsed()) return run_witnesses(p, rtext, format);
        if (cmd_table->parsed()) return run_table(p, max_value, format);
        if (cmd_verify->parsed())
            return run_verify(p, max_value,
                              pair_max_given ? std::optional<std::uint64_t>(pair_max_value)
                                             : std::nullopt,
                              jobs, format);
    } catch (const internal_inconsistency& e) {
        std::cerr << "internal inconsistency: " << e.what() << '\n';
        return 3;
    } catch (const not_a_module_character& e) {
        std::cerr << "internal inconsistency: " << e.what() << '\n';
        return 3;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
