#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "qset/clifford.hpp"
#include "qset/element.hpp"
#include "qset/errors.hpp"
#include "qset/expr.hpp"
#include "qset/hfs.hpp"
#include "qset/palev.hpp"
#include "qset/quantify.hpp"
#include "qset/serde.hpp"

namespace {

using nlohmann::json;
using namespace qset;

struct Options {
    std::string format = "text";
    unsigned rank_guard = kSerialRankCap;

    bool as_json() const { return format == "json"; }
};

void emit_element(const Options& opt, const Element& e) {
    if (opt.as_json()) {
        std::cout << element_to_json(e, opt.rank_guard).dump() << "\n";
    } else {
        std::cout << print_canonical(e) << "\n";
    }
}

void emit_value(const Options& opt, const std::string& value) {
    if (opt.as_json()) {
        std::cout << json{{"value", value}}.dump() << "\n";
    } else {
        std::cout << value << "\n";
    }
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    return json::parse(in);
}

void emit_fock(const Options& opt, const FockOperator& op) {
    if (opt.as_json()) {
        std::cout << fock_to_json(op, opt.rank_guard).dump() << "\n";
        return;
    }
    for (unsigned col = 0; col < op.cols().size(); ++col) {
        for (const auto& [row, v] : op.cols()[col]) {
            std::cout << nat_str(op.basis()[row].serial(opt.rank_guard)) << " "
                      << nat_str(op.basis()[col].serial(opt.rank_guard)) << " " << rat_str(v)
                      << "\n";
        }
    }
}

std::string residual_str(double r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", r);
    return buf;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact algebra of finite quantum sets: hyperbinary serial codec, "
                 "wedge calculus, Clifford port operators, quantification, and "
                 "Palev-statistics checks"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--rank-guard", opt.rank_guard,
                   "Serial materialization cap (clamped to 5)")
        ->capture_default_str();

    std::string expr_a, expr_b, matrix_file, convention = "chevalley", label_serial;
    std::string serial_text;
    unsigned tier_r = 0, hexp_r = 0, dim = 1, max_serial = 24;
    unsigned lift_to = 0;
    unsigned long contract_k = 1;
    std::vector<unsigned long> contract_js;
    bool has_apply = false;
    std::string apply_expr;

    auto* cmd_normalize = app.add_subcommand("normalize", "Parse and print canonical form");
    cmd_normalize->add_option("expr", expr_a)->required();
    cmd_normalize->callback([&] { emit_element(opt, parse_element(expr_a)); });

    auto* cmd_serial = app.add_subcommand("serial", "Serial number of a basis element");
    cmd_serial->add_option("expr", expr_a)->required();
    cmd_serial->callback([&] {
        Element e = parse_element(expr_a);
        if (e.terms().size() != 1) throw Error("expression is not a single basis element");
        const auto& [m, c] = *e.terms().begin();
        if (abs(c) != 1) throw Error("basis elements carry coefficient 1 or -1");
        const std::string s = nat_str(m.serial(opt.rank_guard));
        if (opt.as_json()) {
            std::cout << json{{"serial", s}, {"sign", sgn(c)}}.dump() << "\n";
        } else {
            std::cout << (sgn(c) < 0 ? "-" : "") << s << "\n";
        }
    });

    auto* cmd_unserial = app.add_subcommand("unserial", "Set with the given serial number");
    cmd_unserial->add_option("serial", serial_text)->required();
    cmd_unserial->callback([&] {
        Hfs x = serial_decode(parse_nat(serial_text));
        if (opt.as_json()) {
            std::cout << json{{"serial", serial_text},
                              {"set", hfs_braces(x)},
                              {"children", hfs_to_json(x)}}
                             .dump()
                      << "\n";
        } else {
            std::cout << hfs_braces(x) << "\n";
        }
    });

    auto* cmd_wedge = app.add_subcommand("wedge", "Wedge product of two expressions");
    cmd_wedge->add_option("left", expr_a)->required();
    cmd_wedge->add_option("right", expr_b)->required();
    cmd_wedge->callback(
        [&] { emit_element(opt, wedge(parse_element(expr_a), parse_element(expr_b))); });

    auto* cmd_iota = app.add_subcommand("iota", "Association of an expression");
    cmd_iota->add_option("expr", expr_a)->required();
    cmd_iota->callback([&] { emit_element(opt, iota(parse_element(expr_a))); });

    auto* cmd_grade = app.add_subcommand("grade", "Apply the grade operator");
    cmd_grade->add_option("expr", expr_a)->required();
    cmd_grade->callback([&] { emit_element(opt, grade_op(parse_element(expr_a))); });

    auto* cmd_rank = app.add_subcommand("rank", "Maximum monomial rank of an expression");
    cmd_rank->add_option("expr", expr_a)->required();
    cmd_rank->callback([&] {
        Element e = parse_element(expr_a);
        unsigned r = 0;
        for (const auto& [m, c] : e.terms()) r = std::max(r, m.rank());
        emit_value(opt, std::to_string(r));
    });

    auto* cmd_tier = app.add_subcommand("tier", "Serial range [hexp(r-1), hexp(r)) of tier r");
    cmd_tier->add_option("r", tier_r)->required();
    cmd_tier->callback([&] {
        auto [lo, hi] = tier_range(tier_r, opt.rank_guard);
        if (opt.as_json()) {
            std::cout << json{{"low", nat_str(lo)}, {"high", nat_str(hi)}}.dump() << "\n";
        } else {
            std::cout << nat_str(lo) << " " << nat_str(hi) << "\n";
        }
    });

    auto* cmd_hexp = app.add_subcommand("hexp", "Hyperexponential function");
    cmd_hexp->add_option("r", hexp_r)->required();
    cmd_hexp->callback([&] { emit_value(opt, nat_str(hexp(hexp_r, opt.rank_guard))); });

    auto* cmd_table = app.add_subcommand("table", "Serial-to-set table");
    cmd_table->add_option("--max-serial", max_serial, "Last serial to print")
        ->capture_default_str();
    cmd_table->callback([&] {
        if (max_serial >= 65536) throw RankGuard("table covers the rank-4 range 0..65535");
        json rows = json::array();
        for (unsigned n = 0; n <= max_serial; ++n) {
            Hfs x = serial_decode(Nat(n));
            if (opt.as_json()) {
                rows.push_back({{"serial", std::to_string(n)}, {"set", hfs_braces(x)}});
            } else {
                std::cout << n << "\t" << hfs_braces(x) << "\n";
            }
        }
        if (opt.as_json()) std::cout << rows.dump() << "\n";
    });

    auto* cmd_pair = app.add_subcommand("pair", "Dual pairing of two expressions");
    cmd_pair->add_option("dual", expr_a)->required();
    cmd_pair->add_option("primal", expr_b)->required();
    cmd_pair->callback(
        [&] { emit_value(opt, rat_str(dual_pair(parse_element(expr_a), parse_element(expr_b)))); });

    auto* cmd_beta = app.add_subcommand("beta", "Spinor form of two expressions");
    cmd_beta->add_option("--dim", dim, "Seed dimension d (labels are serials 0..d-1)")
        ->required();
    cmd_beta->add_option("--convention", convention, "Form convention")
        ->check(CLI::IsMember({"chevalley", "literal"}))
        ->capture_default_str();
    cmd_beta->add_option("left", expr_a)->required();
    cmd_beta->add_option("right", expr_b)->required();
    cmd_beta->callback([&] {
        SeedSpace seed = SeedSpace::first(dim);
        Element a = parse_element(expr_a), b = parse_element(expr_b);
        Rat v = convention == "literal" ? beta_literal(a, b, seed) : beta_chevalley(a, b, seed);
        emit_value(opt, rat_str(v));
    });

    auto* cmd_quantify = app.add_subcommand("quantify", "Quantify a one-body operator");
    cmd_quantify->add_option("--matrix", matrix_file, "Operator file (JSON)")->required();
    auto* quantify_apply = cmd_quantify->add_option("--apply", apply_expr,
                                                    "Apply the operator to an expression");
    cmd_quantify->callback([&] {
        FockOperator op = quantify(matrix_from_json(load_json_file(matrix_file)));
        if (quantify_apply->count() > 0) {
            emit_element(opt, op.apply(parse_element(apply_expr)));
        } else {
            emit_fock(opt, op);
        }
    });

    auto* cmd_occ = app.add_subcommand("occupation", "Occupation-number operator of a label");
    cmd_occ->add_option("--dim", dim, "Seed dimension d (labels are serials 0..d-1)")
        ->required();
    cmd_occ->add_option("label", label_serial, "Label serial")->required();
    auto* occ_apply = cmd_occ->add_option("--apply", apply_expr,
                                          "Apply the operator to an expression");
    cmd_occ->callback([&] {
        SeedSpace seed = SeedSpace::first(dim);
        FockOperator op = occupation(seed, serial_decode(parse_nat(label_serial)));
        if (occ_apply->count() > 0) {
            emit_element(opt, op.apply(parse_element(apply_expr)));
        } else {
            emit_fock(opt, op);
        }
    });

    auto* cmd_lift = app.add_subcommand("lift", "Quantify an operator up the ranks");
    cmd_lift->add_option("--matrix", matrix_file,
                         "Operator over the full rank-r basis (serials 0..hexp(r)-1)")
        ->required();
    auto* lift_to_opt = cmd_lift->add_option("--to", lift_to, "Target rank (default: one stage)");
    auto* lift_apply = cmd_lift->add_option("--apply", apply_expr,
                                            "Apply the operator to an expression");
    cmd_lift->callback([&] {
        FockOperator j = rank_operator_from_json(load_json_file(matrix_file));
        const unsigned from = *j.rank_basis();
        const unsigned to = lift_to_opt->count() > 0 ? lift_to : from + 1;
        FockOperator op = multiquantify(j, from, to);
        if (lift_apply->count() > 0) {
            emit_element(opt, op.apply(parse_element(apply_expr)));
        } else {
            emit_fock(opt, op);
        }
    });

    auto* cmd_closure = app.add_subcommand("palev-closure",
                                           "Bivector commutator structure tensor");
    cmd_closure->add_option("--dim", dim, "Seed dimension d")->required();
    cmd_closure->callback([&] {
        StructureTensor t = closure_check(dim);
        if (opt.as_json()) {
            json entries = json::array();
            for (const auto& [ijk, c] : t.entries()) {
                entries.push_back({{"i", std::get<0>(ijk)},
                                   {"j", std::get<1>(ijk)},
                                   {"k", std::get<2>(ijk)},
                                   {"coef", rat_str(c)}});
            }
            std::cout << json{{"size", t.size()}, {"entries", entries}}.dump() << "\n";
        } else {
            std::cout << "size " << t.size() << "\n";
            for (const auto& [ijk, c] : t.entries()) {
                std::cout << std::get<0>(ijk) << " " << std::get<1>(ijk) << " "
                          << std::get<2>(ijk) << " " << rat_str(c) << "\n";
            }
        }
    });

    auto* cmd_contract = app.add_subcommand("contract", "Bose-limit contraction residuals");
    cmd_contract->add_option("--j", contract_js, "Spin labels")->delimiter(',')->required();
    cmd_contract->add_option("--k", contract_k, "Weight window size")->required();
    cmd_contract->callback([&] {
        if (opt.as_json()) {
            json rows = json::array();
            for (unsigned long j : contract_js) {
                rows.push_back({{"j", j},
                                {"k", contract_k},
                                {"residual", contraction_residual(j, contract_k)}});
            }
            std::cout << rows.dump() << "\n";
        } else {
            std::cout << "j,k,residual\n";
            for (unsigned long j : contract_js) {
                std::cout << j << "," << contract_k << ","
                          << residual_str(contraction_residual(j, contract_k)) << "\n";
            }
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "json error: " << e.what() << "\n";
        return 2;
    } catch (const ClosureViolation& e) {
        std::cerr << "closure violation: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
