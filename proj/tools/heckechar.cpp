// Command line front end for the character library. Values are polynomials
// in q printed as a coefficient list (constant term first) plus a rendering;
// --format switches between plain, json, csv and latex.

#include <cstdint>
#include <iostream>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hecke/hecke.hpp"

namespace {

using nlohmann::ordered_json;

ordered_json coeff_to_json(const hecke::Int& c) {
    static const hecke::Int lo = std::numeric_limits<std::int64_t>::min();
    static const hecke::Int hi = std::numeric_limits<std::int64_t>::max();
    if (c >= lo && c <= hi) return ordered_json(c.convert_to<std::int64_t>());
    return ordered_json(c.str());
}

ordered_json value_to_json(const hecke::QPoly& p) {
    ordered_json coeffs = ordered_json::array();
    for (const hecke::Int& c : p.coeffs()) coeffs.push_back(coeff_to_json(c));
    return ordered_json{{"coeffs", std::move(coeffs)}, {"var", "q"}};
}

std::string coeff_list(const hecke::QPoly& p) {
    std::string out = "[";
    bool first = true;
    for (const hecke::Int& c : p.coeffs()) {
        if (!first) out += ", ";
        out += c.str();
        first = false;
    }
    return out + "]";
}

std::string csv_cell(const hecke::QPoly& p) {
    std::string out = "\"[";
    bool first = true;
    for (const hecke::Int& c : p.coeffs()) {
        if (!first) out += ',';
        out += c.str();
        first = false;
    }
    return out + "]\"";
}

struct Output {
    std::string format = "plain";

    void value(const ordered_json& query, const hecke::QPoly& p) const {
        if (format == "json") {
            ordered_json doc{{"query", query}, {"value", value_to_json(p)}, {"rendered", p.str()}};
            std::cout << doc.dump() << '\n';
        } else if (format == "latex") {
            std::cout << p.latex() << '\n';
        } else if (format == "csv") {
            std::cout << csv_cell(p) << '\n';
        } else {
            std::cout << coeff_list(p) << '\n' << p.str() << '\n';
        }
    }

    void integer(const ordered_json& query, const hecke::Int& n) const {
        if (format == "json") {
            ordered_json doc{{"query", query}, {"value", coeff_to_json(n)}};
            std::cout << doc.dump() << '\n';
        } else {
            std::cout << n.str() << '\n';
        }
    }
};

void print_table(const Output& out, const ordered_json& query, int m, int n, int r) {
    const std::vector<hecke::Partition> rows = hecke::hook_partitions(m, n, r);
    std::vector<hecke::Partition> columns = hecke::enumerate_partitions(r);
    std::reverse(columns.begin(), columns.end());
    hecke::CharCache cache;
    auto value = [&](const hecke::Partition& lambda, const hecke::Partition& mu) {
        return hecke::irreducible_character(lambda, mu, cache);
    };
    if (out.format == "json") {
        ordered_json cols = ordered_json::array();
        for (const auto& mu : columns) cols.push_back(hecke::format_partition(mu));
        ordered_json body = ordered_json::array();
        for (const auto& lambda : rows) {
            ordered_json line = ordered_json::array();
            for (const auto& mu : columns) line.push_back(value_to_json(value(lambda, mu)));
            body.push_back(ordered_json{{"lambda", hecke::format_partition(lambda)},
                                        {"values", std::move(line)}});
        }
        ordered_json doc{{"query", query}, {"columns", std::move(cols)}, {"rows", std::move(body)}};
        std::cout << doc.dump() << '\n';
    } else if (out.format == "csv") {
        std::cout << "lambda";
        for (const auto& mu : columns) std::cout << ",\"" << hecke::format_partition(mu) << "\"";
        std::cout << '\n';
        for (const auto& lambda : rows) {
            std::cout << '"' << hecke::format_partition(lambda) << '"';
            for (const auto& mu : columns) std::cout << ',' << csv_cell(value(lambda, mu));
            std::cout << '\n';
        }
    } else if (out.format == "latex") {
        std::cout << "\\begin{array}{l|" << std::string(columns.size(), 'c') << "}\n";
        for (const auto& mu : columns) std::cout << " & (" << hecke::format_partition(mu) << ")";
        std::cout << " \\\\\\hline\n";
        for (const auto& lambda : rows) {
            std::cout << "(" << hecke::format_partition(lambda) << ")";
            for (const auto& mu : columns) std::cout << " & " << value(lambda, mu).latex();
            std::cout << " \\\\\n";
        }
        std::cout << "\\end{array}\n";
    } else {
        std::cout << "lambda \\ mu";
        for (const auto& mu : columns) std::cout << '\t' << hecke::format_partition(mu);
        std::cout << '\n';
        for (const auto& lambda : rows) {
            std::cout << hecke::format_partition(lambda);
            for (const auto& mu : columns) std::cout << '\t' << value(lambda, mu).str();
            std::cout << '\n';
        }
    }
}

int run_verify(const std::string& suite, int max_r, int threads) {
    using Runner = std::function<hecke::verify::SuiteReport(int)>;
    auto pick = [max_r](int fallback) { return max_r > 0 ? max_r : fallback; };
    const std::vector<std::pair<std::string, Runner>> runners{
        {"relations", [&](int t) { return hecke::verify::run_relations(4, 2, pick(4), t); }},
        {"trace-oracle",
         [&](int t) {
             return hecke::verify::run_sign_rep_vs_trace(pick(5),
                                                         hecke::verify::default_trace_pairs(), t);
         }},
        {"hook-decomposition",
         [&](int t) {
             return hecke::verify::run_hook_decomposition(
                 pick(8), hecke::verify::default_decomposition_pairs(), t);
         }},
        {"hook-sums", [&](int t) { return hecke::verify::run_hook_sums(pick(10), t); }},
        {"closed-form-21", [&](int t) { return hecke::verify::run_21_closed_form(pick(10), t); }},
        {"weighted-hooks", [&](int t) { return hecke::verify::run_weighted_hook_sum(pick(8), t); }},
        {"strip-shapes",
         [&](int t) { return hecke::verify::run_strip_shape_identities(pick(6), 2, t); }},
        {"branching", [&](int t) { return hecke::verify::run_branching(pick(8), t); }},
        {"q1", [&](int t) { return hecke::verify::run_q1_specialization(pick(8), 3, t); }},
        {"tableau-counts",
         [&](int t) {
             const int cap = pick(10);
             return hecke::verify::run_tableau_counts(cap, std::min(cap, 8), t);
         }},
        {"classical", [&](int t) { return hecke::verify::run_classical_cross_check(pick(7), t); }},
        {"removal-order", [&](int t) { return hecke::verify::run_removal_order(pick(6), 3, t); }},
    };
    bool found = false;
    bool all_pass = true;
    for (const auto& [name, runner] : runners) {
        if (suite != "all" && suite != name) continue;
        found = true;
        hecke::verify::SuiteReport report = runner(threads);
        std::cout << "suite " << report.name << ": " << report.cases.size() << " cases, "
                  << report.failure_count() << " failures\n";
        for (const auto& c : report.cases)
            if (!c.pass) std::cout << "  FAIL " << c.label << '\n';
        all_pass = all_pass && report.all_pass();
    }
    if (!found) {
        std::cerr << "error: unknown suite '" << suite << "'\n";
        return 2;
    }
    std::cout << (all_pass ? "all checks passed" : "FAIL") << '\n';
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Characters of the type A Hecke algebra with T^2 = (1-q)T + q"};
    app.require_subcommand(1);

    std::string lambda_text, mu_text, skew_text, weight_text;
    std::string format = "plain", suite = "all";
    int m = 0, n = 0, r = 0, max_r = 0, threads = 1;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "plain, json, csv or latex")
            ->check(CLI::IsMember({"plain", "json", "csv", "latex"}));
    };

    CLI::App* cmd_char = app.add_subcommand("char", "Irreducible character value");
    cmd_char->add_option("--lambda", lambda_text, "shape, e.g. 3,1")->required();
    cmd_char->add_option("--mu", mu_text, "cycle type, e.g. 2,2")->required();
    add_format(cmd_char);

    CLI::App* cmd_skew = app.add_subcommand("skew", "Skew character value");
    cmd_skew->add_option("--skew", skew_text, "shape, e.g. 3,2/1")->required();
    cmd_skew->add_option("--mu", mu_text, "cycle type")->required();
    add_format(cmd_skew);

    CLI::App* cmd_sign = app.add_subcommand("sign-rep", "Sign permutation character value");
    cmd_sign->add_option("--m", m, "even letters")->required();
    cmd_sign->add_option("--n", n, "odd letters")->required();
    cmd_sign->add_option("--mu", mu_text, "cycle type")->required();
    add_format(cmd_sign);

    CLI::App* cmd_hook = app.add_subcommand("hook-sum", "Sum of hook characters at a cycle type");
    cmd_hook->add_option("--mu", mu_text, "cycle type")->required();
    add_format(cmd_hook);

    CLI::App* cmd_table = app.add_subcommand("table", "Character table of the hook band");
    cmd_table->add_option("--m", m, "even letters")->required();
    cmd_table->add_option("--n", n, "odd letters")->required();
    cmd_table->add_option("--r", r, "size")->required();
    add_format(cmd_table);

    CLI::App* cmd_count = app.add_subcommand("count", "Tableau counts");
    cmd_count->add_option("--lambda", lambda_text, "shape")->required();
    cmd_count->add_option("--m", m, "even letters");
    cmd_count->add_option("--n", n, "odd letters");
    cmd_count->add_option("--weight", weight_text, "stage sizes, e.g. 2,1|3");
    add_format(cmd_count);

    CLI::App* cmd_verify = app.add_subcommand("verify", "Run consistency suites");
    cmd_verify->add_option("--suite", suite, "suite name or all");
    cmd_verify->add_option("--max-r", max_r, "override the size bound");
    cmd_verify->add_option("--parallel", threads, "worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Output out{format};
    try {
        if (*cmd_char) {
            hecke::Partition lambda = hecke::parse_partition(lambda_text);
            hecke::Partition mu = hecke::parse_partition(mu_text);
            out.value({{"command", "char"}, {"lambda", lambda_text}, {"mu", mu_text}},
                      hecke::irreducible_character(lambda, mu));
        } else if (*cmd_skew) {
            hecke::SkewDiagram shape = hecke::parse_skew(skew_text);
            hecke::Partition mu = hecke::parse_partition(mu_text);
            out.value({{"command", "skew"}, {"skew", skew_text}, {"mu", mu_text}},
                      hecke::skew_character(shape, mu));
        } else if (*cmd_sign) {
            hecke::Partition mu = hecke::parse_partition(mu_text);
            out.value({{"command", "sign-rep"}, {"m", m}, {"n", n}, {"mu", mu_text}},
                      hecke::sign_rep_character(m, n, mu));
        } else if (*cmd_hook) {
            hecke::Partition mu = hecke::parse_partition(mu_text);
            out.value({{"command", "hook-sum"}, {"mu", mu_text}},
                      hecke::hook_sum_closed_form(mu));
        } else if (*cmd_table) {
            print_table(out, {{"command", "table"}, {"m", m}, {"n", n}, {"r", r}}, m, n, r);
        } else if (*cmd_count) {
            hecke::Partition lambda = hecke::parse_partition(lambda_text);
            if (!weight_text.empty()) {
                out.integer({{"command", "count"}, {"lambda", lambda_text}, {"weight", weight_text}},
                            hecke::count_weight_tableaux(lambda,
                                                         hecke::parse_bicomposition(weight_text)));
            } else if (cmd_count->count("--m") && cmd_count->count("--n")) {
                out.integer({{"command", "count"}, {"lambda", lambda_text}, {"m", m}, {"n", n}},
                            hecke::count_semistandard(m, n, lambda));
            } else {
                std::cerr << "error: count needs either --weight or both --m and --n\n";
                return 2;
            }
        } else if (*cmd_verify) {
            return run_verify(suite, max_r, threads);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
