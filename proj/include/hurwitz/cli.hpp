#pragma once

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hurwitz.hpp"

namespace hurwitz::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

/// Semicolon-separated partitions, e.g. "(2,1);(3)". Empty text gives none.
inline std::vector<Partition> parse_profiles(const std::string& text) {
    std::vector<Partition> out;
    std::string trimmed;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            trimmed.push_back(c);
        }
    }
    if (trimmed.empty()) {
        return out;
    }
    std::size_t pos = 0;
    while (true) {
        auto semi = trimmed.find(';', pos);
        std::string token = trimmed.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
        if (token.empty()) {
            throw ParseError("empty profile in '" + text + "'");
        }
        out.push_back(Partition::parse(token));
        if (semi == std::string::npos) {
            return out;
        }
        pos = semi + 1;
    }
}

namespace detail {

struct Options {
    int degree = 0;
    int genus = 0;
    int order = kDefaultSeriesOrder;
    std::string format = "text";
    std::string profiles;
    std::string partition;
    std::string marks;
    std::string z_value;
    bool oracle = false;
    bool normalized = false;
    bool double_alphabet = false;
    std::uint64_t budget = default_enumeration_budget();
};

inline void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

inline void require_degree_partition(const Partition& p, int d, const char* what) {
    if (p.degree() != d) {
        throw DegreeMismatch(std::string(what) + " " + p.to_string() + " is not a partition of " + std::to_string(d));
    }
}

inline int char_table(const Options& o, std::ostream& out) {
    auto table = CharTable::of_degree(o.degree);
    const auto& parts = table->partitions();
    if (o.format == "json") {
        Json classes = Json::array();
        for (const auto& p : parts) {
            classes.push_back(p.to_string());
        }
        Json rows = Json::array();
        for (const auto& lambda : parts) {
            Json values = Json::array();
            for (const auto& delta : parts) {
                values.push_back(table->value(lambda, delta).get_si());
            }
            rows.push_back({{"lambda", lambda.to_string()}, {"dim", table->dim(lambda).get_si()}, {"values", values}});
        }
        emit(out, {{"degree", o.degree}, {"classes", classes}, {"rows", rows}});
        return kExitOk;
    }
    std::size_t label_width = 0;
    for (const auto& p : parts) {
        label_width = std::max(label_width, p.to_string().size());
    }
    std::size_t cell = label_width;
    for (const auto& lambda : parts) {
        for (const auto& delta : parts) {
            cell = std::max(cell, table->value(lambda, delta).get_str().size());
        }
    }
    out << std::setw(static_cast<int>(label_width)) << "";
    for (const auto& delta : parts) {
        out << "  " << std::setw(static_cast<int>(cell)) << delta.to_string();
    }
    out << "\n";
    for (const auto& lambda : parts) {
        out << std::setw(static_cast<int>(label_width)) << lambda.to_string();
        for (const auto& delta : parts) {
            out << "  " << std::setw(static_cast<int>(cell)) << table->value(lambda, delta).get_str();
        }
        out << "\n";
    }
    return kExitOk;
}

inline int hurwitz_cmd(const Options& o, std::ostream& out) {
    CoverSpec spec{o.genus, o.degree, parse_profiles(o.profiles)};
    spec.validate();
    GenusResult euler = source_euler(spec);
    BigRational value = o.oracle ? hurwitz_oracle(spec, o.budget) : hurwitz_number(spec);
    if (o.format == "json") {
        emit(out, {{"value", value.to_fraction_string()},
                   {"euler2h2", euler.euler2h2 ? Json(*euler.euler2h2) : Json(nullptr)},
                   {"method", o.oracle ? "enumeration" : "character"}});
        return kExitOk;
    }
    out << value << " ";
    if (euler.euler2h2) {
        out << "(2h-2 = " << *euler.euler2h2 << ")\n";
    } else {
        out << "(2h-2 undefined: parity failure)\n";
    }
    return kExitOk;
}

inline int cutjoin_show(const Options& o, std::ostream& out) {
    Partition delta = Partition::parse(o.partition);
    require_degree_partition(delta, o.degree, "partition");
    CutJoinOp op = build_w(o.degree, delta);
    if (o.normalized) {
        op = normalize(op);
    }
    OperatorMatrix matrix = op.matrix();
    if (!o.z_value.empty()) {
        matrix = matrix.at_z(BigRational::parse(o.z_value));
    }
    auto terms = differential_terms(matrix);
    std::string rendering = render_differential(terms);
    if (o.format == "json") {
        Json jterms = Json::array();
        for (const auto& t : terms) {
            jterms.push_back(to_json(t));
        }
        emit(out, {{"degree", o.degree},
                   {"partition", to_json(delta)},
                   {"normalized", o.normalized},
                   {"z", o.z_value.empty() ? Json(nullptr) : Json(BigRational::parse(o.z_value).to_fraction_string())},
                   {"terms", jterms},
                   {"matrix", to_json(matrix)},
                   {"rendering", rendering}});
        return kExitOk;
    }
    out << rendering << "\n";
    return kExitOk;
}

inline int cutjoin_constants(const Options& o, std::ostream& out) {
    StructureConstants table = o.oracle ? class_sum_oracle(o.degree) : structure_constants(o.degree);
    if (o.format == "json") {
        Json entries = Json::array();
        for (const auto& [key, value] : table.table()) {
            const auto& [a, b, c] = key;
            entries.push_back({{"a", to_json(a)}, {"b", to_json(b)}, {"c", to_json(c)},
                               {"value", value.to_fraction_string()}});
        }
        emit(out, {{"degree", o.degree}, {"method", o.oracle ? "class-sum" : "hurwitz"}, {"constants", entries}});
        return kExitOk;
    }
    for (const auto& [key, value] : table.table()) {
        if (value.is_zero()) {
            continue;
        }
        const auto& [a, b, c] = key;
        out << "C^" << c << "_" << a << b << " = " << value << "\n";
    }
    return kExitOk;
}

inline int report(const std::vector<CheckEntry>& entries, const Options& o, std::ostream& out) {
    bool ok = true;
    Json jentries = Json::array();
    for (const auto& e : entries) {
        ok = ok && e.status != CheckStatus::Fail;
        jentries.push_back({{"check", e.name}, {"degree", e.degree}, {"status", to_string(e.status)},
                            {"detail", e.detail}});
        if (o.format != "json") {
            out << std::left << std::setw(8) << to_string(e.status) << "d=" << e.degree << "  " << e.name;
            if (!e.detail.empty()) {
                out << "  (" << e.detail << ")";
            }
            out << "\n";
        }
    }
    if (o.format == "json") {
        emit(out, {{"passed", ok}, {"checks", jentries}});
    }
    return ok ? kExitOk : kExitComputation;
}

inline int cutjoin_verify(const Options& o, std::ostream& out) {
    int d = o.degree;
    std::vector<CheckEntry> entries;
    entries.push_back(hurwitz::detail::z_grading(d));
    entries.push_back(hurwitz::detail::from_verdict("composition law W W = Σ z C W", d, verify_composition_law(d)));
    entries.push_back(hurwitz::detail::from_verdict("normalized algebra (commutative, Σ C Ŵ)", d,
                                                    verify_normalized_algebra(d)));
    entries.push_back(hurwitz::detail::structure_constant_oracle(d));
    entries.push_back(hurwitz::detail::from_verdict("Schur eigenfunctions", d, eigen_check(d)));
    return report(entries, o, out);
}

inline int genfun_cmd(const Options& o, std::ostream& out) {
    auto profiles = parse_profiles(o.marks);
    std::vector<MarkedProfile> marks;
    for (std::size_t i = 0; i < profiles.size(); ++i) {
        require_degree_partition(profiles[i], o.degree, "mark");
        marks.push_back({profiles.size() == 1 ? std::string("u") : "u" + std::to_string(i + 1), profiles[i]});
    }
    std::vector<int> orders(marks.size(), o.order);
    GenFunSeries series = generating_function(o.genus, o.degree, marks, orders, o.double_alphabet);
    if (o.format == "json") {
        emit(out, to_json(series));
        return kExitOk;
    }
    out << render_series(series) << "\n";
    return kExitOk;
}

}  // namespace detail

/// Runs one command line (args exclude the program name). Exit codes:
/// 0 success, 1 computation error or failed check, 2 usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized Hurwitz numbers, cut-and-join operators and generating functions", "genhur"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("genhur ") + kLibraryVersion + " (format " + kFormatVersion + ")");
    detail::Options o;

    auto add_format = [&o](CLI::App* cmd) {
        cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };
    auto add_degree = [&o](CLI::App* cmd) {
        cmd->add_option("--degree", o.degree, "Degree d")->required()->check(CLI::PositiveNumber);
    };

    auto* table_cmd = app.add_subcommand("char-table", "Character table of S_d");
    add_degree(table_cmd);
    add_format(table_cmd);

    auto* hur_cmd = app.add_subcommand("hurwitz", "Generalized Hurwitz number");
    hur_cmd->add_option("--genus", o.genus, "Target genus g")->required()->check(CLI::NonNegativeNumber);
    add_degree(hur_cmd);
    hur_cmd->add_option("--profiles", o.profiles, "Profiles, e.g. \"(2,1);(3)\"");
    hur_cmd->add_flag("--oracle", o.oracle, "Count permutation tuples instead of using characters");
    hur_cmd->add_option("--budget", o.budget, "Enumeration budget (composed tuples)");
    add_format(hur_cmd);

    auto* cj_cmd = app.add_subcommand("cutjoin", "Genus-expanded cut-and-join operators");
    cj_cmd->require_subcommand(1);
    auto* show_cmd = cj_cmd->add_subcommand("show", "Print W(Δ,z) as a differential operator");
    add_degree(show_cmd);
    show_cmd->add_option("--partition", o.partition, "Δ, e.g. \"(2,1)\"")->required();
    show_cmd->add_flag("--normalized", o.normalized, "Print the normalized operator");
    show_cmd->add_option("--z", o.z_value, "Substitute a rational value for z");
    add_format(show_cmd);
    auto* const_cmd = cj_cmd->add_subcommand("constants", "Class-sum structure constants");
    add_degree(const_cmd);
    const_cmd->add_flag("--oracle", o.oracle, "Multiply class sums explicitly");
    add_format(const_cmd);
    auto* cjv_cmd = cj_cmd->add_subcommand("verify", "Check operator identities at one degree");
    add_degree(cjv_cmd);
    add_format(cjv_cmd);

    auto* gf_cmd = app.add_subcommand("genfun", "Genus-graded generating function");
    add_degree(gf_cmd);
    gf_cmd->add_option("--genus", o.genus, "Target genus g")->check(CLI::NonNegativeNumber);
    gf_cmd->add_option("--marks", o.marks, "Marked profiles, e.g. \"(2,1);(3)\"");
    gf_cmd->add_flag("--double", o.double_alphabet, "Include the second alphabet q");
    gf_cmd->add_option("--order", o.order, "Truncation order per u")->check(CLI::NonNegativeNumber);
    add_format(gf_cmd);

    auto* ver_cmd = app.add_subcommand("verify", "Check every identity for degrees 1..d");
    add_degree(ver_cmd);
    ver_cmd->add_option("--budget", o.budget, "Enumeration budget (composed tuples)");
    add_format(ver_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion& e) {
        out << e.what() << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        auto subs = app.get_subcommands();
        err << "usage: " << (subs.empty() ? app.help() : subs.back()->help());
        return kExitUsage;
    }

    try {
        if (*table_cmd) {
            return detail::char_table(o, out);
        }
        if (*hur_cmd) {
            return detail::hurwitz_cmd(o, out);
        }
        if (*show_cmd) {
            return detail::cutjoin_show(o, out);
        }
        if (*const_cmd) {
            return detail::cutjoin_constants(o, out);
        }
        if (*cjv_cmd) {
            return detail::cutjoin_verify(o, out);
        }
        if (*gf_cmd) {
            return detail::genfun_cmd(o, out);
        }
        if (*ver_cmd) {
            return detail::report(verify_all(o.degree, o.budget).entries, o, out);
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DegreeMismatch& e) {
        err << "error: " << e.what() << "\n";
        return kExitComputation;
    } catch (const LimitExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitComputation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitComputation;
    }
    err << app.help();
    return kExitUsage;
}

}  // namespace hurwitz::cli
