// Command-line front end: series expansion, enumeration oracles, identity
// verification, congruence-family scans, and the equidistribution check.
// Exit codes: 0 all requested checks pass, 1 at least one check failed,
// 2 usage or input error.

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "podq/check_report.hpp"
#include "podq/congruence.hpp"
#include "podq/enumeration.hpp"
#include "podq/product_spec.hpp"
#include "podq/qproducts.hpp"
#include "podq/serialize.hpp"
#include "podq/series.hpp"

namespace {

using namespace podq;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void print_reports(const std::vector<CheckReport>& reports, const std::string& format) {
    if (format == "csv") {
        std::cout << "check,order,pass,n,expected,actual,ms\n";
        for (const CheckReport& r : reports) {
            std::cout << csv_escape(r.name) << ',' << r.order << ','
                      << (r.pass ? "true" : "false") << ',';
            if (r.counterexample)
                std::cout << r.counterexample->n << ',' << csv_escape(r.counterexample->expected)
                          << ',' << csv_escape(r.counterexample->actual);
            else
                std::cout << ",,";
            std::cout << ',' << r.ms << '\n';
        }
    } else {
        for (const CheckReport& r : reports) std::cout << check_report_to_json_line(r) << '\n';
    }
}

bool all_pass(const std::vector<CheckReport>& reports) {
    for (const CheckReport& r : reports)
        if (!r.pass) return false;
    return true;
}

// ---- expand ----------------------------------------------------------

int cmd_expand(const std::string& target, const std::string& product, i64 order,
               std::optional<i64> modulus, const std::string& format) {
    Series s = [&]() -> Series {
        if (!product.empty()) return expand_product(ProductSpec::parse(product), order, modulus);
        if (target == "pod2") return pod2_gf(order, modulus);
        if (target == "pod1") return pod1_gf(order, modulus);
        if (target == "psi") return psi(order, modulus);
        if (target == "phi") return phi(order, modulus);
        if (target == "A") return a_series(order, modulus);
        throw std::invalid_argument("unknown expansion target: " + target);
    }();
    if (format == "csv") {
        std::cout << "n,coeff\n";
        for (i64 n = 0; n <= s.order(); ++n) std::cout << n << ',' << s.coeff_str(n) << '\n';
    } else {
        std::cout << series_to_json(s) << '\n';
    }
    return kExitPass;
}

// ---- oracle ----------------------------------------------------------

StatTag parse_stat(const std::string& name) {
    if (name == "b") return StatTag::BirankB;
    if (name == "c") return StatTag::BirankC;
    if (name == "d") return StatTag::RankD;
    throw std::invalid_argument("unknown statistic: " + name + " (expected b, c, or d)");
}

int cmd_oracle(i64 max_weight, const std::string& stat, const std::string& format) {
    StatTable table = stat_table(parse_stat(stat), max_weight);
    if (format == "csv")
        std::cout << stat_table_to_csv(table);
    else
        std::cout << stat_table_to_json_lines(table);
    return kExitPass;
}

// ---- verify ----------------------------------------------------------

struct IdentityGroup {
    // Names produced by this group, in emission order.
    std::vector<std::string> names;
    std::function<std::vector<CheckReport>(i64)> run;
};

const std::vector<IdentityGroup>& identity_groups() {
    static const std::vector<IdentityGroup> groups = {
        {{"lemma2.1a", "lemma2.1b", "psi2split", "lemma3.1a", "lemma3.1b", "psi5pow",
          "psi5split", "psiprod"},
         [](i64 n) { return dissection_lemma_checks(n); }},
        {{"jtp"}, [](i64 n) { return std::vector<CheckReport>{jacobi_triple_product_report(n)}; }},
        {{"thm2.1a", "thm2.1b"},
         [](i64 n) {
             auto [a, b] = theorem_2_1_check(n);
             return std::vector<CheckReport>{a, b};
         }},
        {{"cor2.2a", "cor2.2b"},
         [](i64 n) {
             auto [a, b] = corollary_2_2_scan(n);
             return std::vector<CheckReport>{a, b};
         }},
        {{"t2bridge"}, [](i64 n) { return std::vector<CheckReport>{t2_bridge_check(n)}; }},
        {{"cong3n1"}, [](i64 n) { return std::vector<CheckReport>{congruence_3n1_check(n)}; }},
        {{"descent3", "descent5"},
         [](i64 n) {
             auto [a, b] = descent_relation_checks(n);
             return std::vector<CheckReport>{a, b};
         }},
        {{"thm3.1-structural"},
         [](i64 n) { return std::vector<CheckReport>{thm3_1_structural_check(n)}; }},
        {{"thm5.1a", "thm5.1b", "thm5.1c"},
         [](i64 n) {
             auto arr = theorem_5_1_check(n);
             return std::vector<CheckReport>{arr[0], arr[1], arr[2]};
         }},
        {{"rankodd", "rankgf"},
         [](i64 n) {
             auto [a, b] = rank_parity_checks(n);
             return std::vector<CheckReport>{a, b};
         }},
        {{"entry8i"},
         [](i64 n) { return std::vector<CheckReport>{modular_equation_entry8i_check(n)}; }},
        {{"lemma4.1"},
         [](i64 n) { return std::vector<CheckReport>{lambert_extraction_check(n)}; }},
    };
    return groups;
}

int cmd_verify(const std::string& suite, const std::string& identity, i64 order,
               bool fail_fast, const std::string& format) {
    std::vector<CheckTask> tasks;
    if (!identity.empty()) {
        const IdentityGroup* found = nullptr;
        for (const IdentityGroup& g : identity_groups())
            for (const std::string& name : g.names)
                if (name == identity) found = &g;
        if (!found) throw std::invalid_argument("unknown identity: " + identity);
        // Run the whole group (members share their expansions), emit the
        // requested line only.
        tasks.push_back([found, identity, order] {
            std::vector<CheckReport> all = found->run(order);
            std::vector<CheckReport> picked;
            for (CheckReport& r : all)
                if (r.name == identity) picked.push_back(std::move(r));
            return picked;
        });
    } else {
        if (suite != "all") throw std::invalid_argument("unknown suite: " + suite);
        for (const IdentityGroup& g : identity_groups())
            tasks.push_back([&g, order] { return g.run(order); });
    }
    std::vector<CheckReport> reports = run_check_tasks(tasks, default_thread_count(), fail_fast);
    print_reports(reports, format);
    return all_pass(reports) ? kExitPass : kExitFail;
}

// ---- scan ------------------------------------------------------------

FamilyTag parse_family(const std::string& name) {
    if (name == "thm3.1") return FamilyTag::Thm3_1;
    if (name == "thm3.2a") return FamilyTag::Thm3_2a;
    if (name == "thm3.2b") return FamilyTag::Thm3_2b;
    if (name == "thm4.1a") return FamilyTag::Thm4_1a;
    if (name == "thm4.1b") return FamilyTag::Thm4_1b;
    throw std::invalid_argument("unknown family: " + name);
}

int cmd_scan(const std::string& family, i64 alpha_max, i64 order, bool fail_fast,
             const std::string& format) {
    FamilyTag tag = parse_family(family);
    i64 alpha_min = tag == FamilyTag::Thm3_1 ? 0 : 1;
    if (alpha_max < alpha_min)
        throw std::invalid_argument("alpha-max below the family's smallest alpha");
    std::vector<FamilySpec> members;
    for (i64 a = alpha_min; a <= alpha_max; ++a) {
        FamilySpec spec = FamilySpec::make(tag, a);
        if (spec.offset > order)
            throw std::invalid_argument(spec.name() +
                                        ": progression offset exceeds --order; raise --order");
        members.push_back(spec);
    }
    Series gf = pod2_gf(order, members.front().prime);
    std::vector<CheckReport> reports;
    for (const FamilySpec& spec : members) {
        reports.push_back(family_scan(spec, gf));
        if (fail_fast && !reports.back().pass) break;
    }
    print_reports(reports, format);
    return all_pass(reports) ? kExitPass : kExitFail;
}

// ---- equidist --------------------------------------------------------

int cmd_equidist(const std::string& stat, i64 max_weight, const std::string& format) {
    StatTag tag = parse_stat(stat);
    CheckReport rep = equidistribution_check(tag, max_weight);
    print_reports({rep}, format);
    return rep.pass ? kExitPass : kExitFail;
}

int run(int argc, char** argv) {
    CLI::App app{"q-series toolkit for bipartitions with odd parts distinct"};
    app.require_subcommand(1);

    std::string format = "json";

    // expand
    auto* expand = app.add_subcommand("expand", "expand a named series or a product spec");
    std::string target = "pod2", product;
    i64 order = 0;
    i64 modulus = 0;
    expand->add_option("--target", target, "pod2|pod1|psi|phi|A");
    expand->add_option("--product", product, "q-Pochhammer product spec, e.g. \"(-q;q^2)^2\"");
    expand->add_option("--order", order, "truncation order")->required();
    expand->add_option("--mod", modulus, "reduce coefficients modulo m");
    expand->add_option("--format", format, "json|csv");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "statistic tables by direct enumeration");
    std::string stat = "b";
    i64 max_weight = 20;
    oracle->add_option("--n", max_weight, "largest weight to tabulate")->required();
    oracle->add_option("--stat", stat, "b|c|d")->required();
    oracle->add_option("--format", format, "json|csv");

    // verify
    auto* verify = app.add_subcommand("verify", "verify identities and congruences");
    std::string suite = "all", identity;
    i64 verify_order = 200;
    bool fail_fast = false;
    verify->add_option("--suite", suite, "check suite (all)");
    verify->add_option("--identity", identity, "single identity by name");
    verify->add_option("--order", verify_order, "truncation order");
    verify->add_flag("--fail-fast", fail_fast, "stop after the first failing check");
    verify->add_option("--format", format, "json|csv");

    // scan
    auto* scan = app.add_subcommand("scan", "scan a congruence family");
    std::string family;
    i64 alpha_max = 2;
    i64 scan_order = 5000;
    scan->add_option("--family", family, "thm3.1|thm3.2a|thm3.2b|thm4.1a|thm4.1b")->required();
    scan->add_option("--alpha-max", alpha_max, "largest alpha to scan");
    scan->add_option("--order", scan_order, "truncation order");
    scan->add_flag("--fail-fast", fail_fast, "stop after the first failing member");
    scan->add_option("--format", format, "json|csv");

    // equidist
    auto* equidist = app.add_subcommand("equidist", "residue-class equidistribution on 3n+2");
    std::string eq_stat = "b";
    i64 eq_weight = 20;
    equidist->add_option("--stat", eq_stat, "b|c")->required();
    equidist->add_option("--max-weight", eq_weight, "largest weight to enumerate");
    equidist->add_option("--format", format, "json|csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (format != "json" && format != "csv")
            throw std::invalid_argument("unknown format: " + format);
        if (*expand) {
            if (order < 0) throw std::invalid_argument("--order must be non-negative");
            std::optional<i64> mod;
            if (expand->count("--mod")) mod = modulus;
            return cmd_expand(target, product, order, mod, format);
        }
        if (*oracle) return cmd_oracle(max_weight, stat, format);
        if (*verify) {
            if (verify_order < 30) throw std::invalid_argument("--order must be at least 30");
            return cmd_verify(suite, identity, verify_order, fail_fast, format);
        }
        if (*scan) return cmd_scan(family, alpha_max, scan_order, fail_fast, format);
        if (*equidist) return cmd_equidist(eq_stat, eq_weight, format);
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitFail;
    }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
