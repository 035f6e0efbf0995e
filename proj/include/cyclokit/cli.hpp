#pragma once

#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclokit/asymptotics.hpp"
#include "cyclokit/bfq.hpp"
#include "cyclokit/decide.hpp"
#include "cyclokit/ek.hpp"
#include "cyclokit/euler_products.hpp"
#include "cyclokit/orders.hpp"
#include "cyclokit/primes.hpp"

namespace cyclokit::cli {

enum class Format { tsv, json_lines };

struct RunConfig {
    std::string command;
    std::optional<std::uint64_t> q;
    std::optional<std::uint64_t> x;
    std::optional<std::uint64_t> y;
    std::optional<std::uint64_t> range;
    std::vector<std::uint64_t> q_list;
    bool q_list_given = false;
    std::uint64_t sieve_limit = 10'000'000;
    std::uint64_t x_max = 4'000'000;
    std::uint64_t y_max = 1'000'000;
    Format format = Format::tsv;
    int precision = 5;
    bool truncate = false;  // truncate printed decimals instead of rounding
};

namespace detail {

// q values and per-q bound points for the builtin summary tables.
inline const std::vector<std::uint64_t>& builtin_q_list() {
    static const std::vector<std::uint64_t> qs = {
        3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43,  47,  53,  59,  61,  67,  71, 73,
        79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173};
    return qs;
}

inline std::uint64_t ek_table_x(std::uint64_t q) {
    if (q <= 5) return 300'000;
    if (q >= 53 && q <= 83) return 2'000'000;
    return 1'000'000;
}

/// Fixed-precision rendering; truncation chops toward zero first.
inline std::string fmt(double v, int prec, bool trunc_mode) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    double w = v;
    if (trunc_mode) {
        const double scale = std::pow(10.0, prec);
        w = std::trunc(v * scale) / scale;
    }
    w += 0.0;  // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", prec, w);
    return buf;
}

inline nlohmann::json json_number(double v) {
    if (!std::isfinite(v)) return nullptr;
    return v;
}

struct Emitter {
    const RunConfig& cfg;
    std::ostream& out;

    std::string num(double v) const { return fmt(v, cfg.precision, cfg.truncate); }

    void header(const std::vector<std::string>& cols) const {
        if (cfg.format != Format::tsv) return;
        out << "#";
        for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "\t" : " ") << cols[i];
        out << "\n";
    }
    void row(const std::vector<std::string>& cells) const {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "\t" : "") << cells[i];
        out << "\n";
    }
    void json_line(const nlohmann::json& j) const { out << j.dump() << "\n"; }
};

inline void emit_bracket(const Emitter& e, const std::string& name, const Bracket& b) {
    if (e.cfg.format == Format::tsv) {
        e.row({name, e.num(b.lo), e.num(b.hi), std::to_string(b.point),
               b.conditional ? "1" : "0"});
    } else {
        e.json_line({{"name", name},
                     {"lo", json_number(b.lo)},
                     {"hi", json_number(b.hi)},
                     {"point", b.point},
                     {"conditional", b.conditional},
                     {"source", b.source}});
    }
}

inline void emit_value(const Emitter& e, const std::string& name, double v, bool conditional) {
    if (e.cfg.format == Format::tsv) {
        e.row({name, e.num(v), e.num(v), "-", conditional ? "1" : "0"});
    } else {
        e.json_line({{"name", name}, {"value", json_number(v)}, {"conditional", conditional}});
    }
}

inline int cmd_constants(const RunConfig& cfg, std::ostream& out) {
    const std::uint64_t q = cfg.q.value();
    const std::uint64_t y = cfg.y.value_or(std::min<std::uint64_t>(cfg.sieve_limit, 1'000'000));
    if (y > cfg.sieve_limit) throw std::out_of_range("constants: y exceeds sieve limit");
    const PrimeTable primes = build_prime_table(std::max<std::uint64_t>(y, 3));
    const OrderTable orders = build_order_table(q, primes);
    const Bracket c = c_constant(orders, y);
    const Bracket v = v_bracket(orders, y);
    const double a = alpha_q(q);
    const double e0v = e0(q, c.hi, a);
    Emitter e{cfg, out};
    e.header({"constant", "lo", "hi", "point", "grh"});
    emit_bracket(e, "C", c);
    emit_bracket(e, "v", v);
    emit_value(e, "alpha", a, false);
    emit_value(e, "e0", e0v, false);
    return 0;
}

inline int cmd_table1(const RunConfig& cfg, std::ostream& out) {
    const auto& qs = cfg.q_list_given ? cfg.q_list : builtin_q_list();
    std::uint64_t needed = 3;
    for (std::uint64_t q : qs)
        needed = std::max({needed, cfg.x.value_or(ek_table_x(q)), std::uint64_t{1'000'000}});
    if (!qs.empty() && needed > cfg.sieve_limit)
        throw std::out_of_range("table1: sieve limit too small for requested x");
    Emitter e{cfg, out};
    e.header({"q", "cyc_1e5", "cyc_1e6", "low", "upp", "x", "true", "grh"});
    if (qs.empty()) return 0;
    const PrimeTable primes = build_prime_table(needed);
    for (std::uint64_t q : qs) {
        const std::uint64_t x = cfg.x.value_or(ek_table_x(q));
        const OrderTable orders = build_order_table(q, primes);
        const double c5 = cyc(orders, 100'000);
        const double c6 = cyc(orders, 1'000'000);
        const Bracket b = ihara_bounds(orders, x);
        if (cfg.format == Format::tsv) {
            e.row({std::to_string(q), e.num(c5), e.num(c6), e.num(b.lo), e.num(b.hi),
                   std::to_string(x), "-", "1"});
        } else {
            e.json_line({{"q", q},
                         {"cyc_1e5", detail::json_number(c5)},
                         {"cyc_1e6", detail::json_number(c6)},
                         {"low", detail::json_number(b.lo)},
                         {"upp", detail::json_number(b.hi)},
                         {"x", x},
                         {"true", nullptr},
                         {"conditional", true}});
        }
    }
    return 0;
}

inline int cmd_table2(const RunConfig& cfg, std::ostream& out) {
    const auto& qs = cfg.q_list_given ? cfg.q_list : builtin_q_list();
    constexpr std::uint64_t kJx = 10'000'000;
    constexpr std::uint64_t kBx = 2'000'000;
    constexpr std::uint64_t kBy = 1'000'000;
    if (!qs.empty() && cfg.sieve_limit < kJx)
        throw std::out_of_range("table2: sieve limit too small (needs 1e7)");
    Emitter e{cfg, out};
    e.header({"q", "j_1e5", "j_1e6", "j_1e7", "b_lo", "b_hi", "v_lo", "v_hi", "grh"});
    if (qs.empty()) return 0;
    const PrimeTable primes = build_prime_table(kJx);
    for (std::uint64_t q : qs) {
        const double j5 = j_fq(q, primes, 100'000);
        const double j6 = j_fq(q, primes, 1'000'000);
        const double j7 = j_fq(q, primes, 10'000'000);
        const OrderTable orders = build_order_table(q, primes, kBx);
        const Bracket b = bfq_bracket(orders, kBx, kBy);
        const Bracket v = v_bracket(orders, kBy);
        if (cfg.format == Format::tsv) {
            e.row({std::to_string(q), e.num(j5), e.num(j6), e.num(j7), e.num(b.lo), e.num(b.hi),
                   e.num(v.lo), e.num(v.hi), "1"});
        } else {
            e.json_line({{"q", q},
                         {"j_1e5", detail::json_number(j5)},
                         {"j_1e6", detail::json_number(j6)},
                         {"j_1e7", detail::json_number(j7)},
                         {"b_lo", detail::json_number(b.lo)},
                         {"b_hi", detail::json_number(b.hi)},
                         {"v_lo", detail::json_number(v.lo)},
                         {"v_hi", detail::json_number(v.hi)},
                         {"conditional", true}});
        }
    }
    return 0;
}

inline int cmd_count(const RunConfig& cfg, std::ostream& out) {
    const std::uint64_t q = cfg.q.value();
    const std::uint64_t x = cfg.x.value();
    if (x > cfg.sieve_limit) throw std::out_of_range("count: x exceeds sieve limit");
    const std::uint64_t lim =
        std::min(cfg.sieve_limit, std::max<std::uint64_t>(x, 1'000'000));
    const PrimeTable primes = build_prime_table(lim);
    const OrderTable orders = build_order_table(q, primes);
    const Bracket c = c_constant(orders, lim);
    const double e0v = e0(q, c.hi, alpha_q(q));
    const ApproxReport r = approx_report(q, x, primes, e0v);
    Emitter e{cfg, out};
    e.header({"q", "x", "exact", "naive", "ramanujan", "err_naive", "err_ram"});
    if (cfg.format == Format::tsv) {
        e.row({std::to_string(r.q), std::to_string(r.x), std::to_string(r.exact), e.num(r.naive),
               e.num(r.ramanujan), e.num(r.err_naive), e.num(r.err_ram)});
    } else {
        e.json_line({{"q", r.q},
                     {"x", r.x},
                     {"exact", r.exact},
                     {"naive", detail::json_number(r.naive)},
                     {"ramanujan", detail::json_number(r.ramanujan)},
                     {"err_naive", detail::json_number(r.err_naive)},
                     {"err_ram", detail::json_number(r.err_ram)}});
    }
    return 0;
}

inline void emit_decision(const Emitter& e, const Decision& d) {
    const Certificate& c = d.certificate;
    if (e.cfg.format == Format::tsv) {
        e.row({std::to_string(d.q), cyclokit::detail::verdict_name(d.verdict),
               cyclokit::detail::path_name(c.path), c.x ? std::to_string(*c.x) : "-",
               c.y ? std::to_string(*c.y) : "-", e.num(c.bound_lo), e.num(c.bound_hi),
               d.conditional ? "1" : "0"});
    } else {
        e.json_line({{"q", d.q},
                     {"verdict", cyclokit::detail::verdict_name(d.verdict)},
                     {"path", cyclokit::detail::path_name(c.path)},
                     {"x", c.x ? nlohmann::json(*c.x) : nlohmann::json(nullptr)},
                     {"y", c.y ? nlohmann::json(*c.y) : nlohmann::json(nullptr)},
                     {"bound_lo", json_number(c.bound_lo)},
                     {"bound_hi", json_number(c.bound_hi)},
                     {"conditional", d.conditional}});
    }
}

inline int cmd_decide(const RunConfig& cfg, std::ostream& out) {
    const Budget budget{cfg.x_max, cfg.y_max};
    Emitter e{cfg, out};
    e.header({"q", "verdict", "path", "x", "y", "bound_lo", "bound_hi", "grh"});
    if (cfg.range) {
        for (const Decision& d : decide_range(*cfg.range, budget)) emit_decision(e, d);
    } else {
        emit_decision(e, decide(cfg.q.value(), budget));
    }
    return 0;
}

inline std::vector<std::uint64_t> parse_q_csv(const std::string& csv) {
    std::vector<std::uint64_t> out;
    std::string cur;
    for (char ch : csv + ",") {
        if (ch == ',') {
            if (!cur.empty()) {
                std::size_t pos = 0;
                const unsigned long long v = std::stoull(cur, &pos);
                if (pos != cur.size()) throw std::domain_error("invalid q list entry: " + cur);
                out.push_back(v);
                cur.clear();
            }
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    return out;
}

}  // namespace detail

/// Entry point shared by the binary and the tests. `args` excludes the
/// program name. Exit codes: 0 success, 2 usage/domain error,
/// 3 resource/range error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    if (const char* env = std::getenv("CYCLOKIT_SIEVE_LIMIT")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v >= 3) cfg.sieve_limit = v;
    }

    CLI::App app{"number-theoretic constants for totient nondivisibility counts"};
    app.fallthrough();
    std::string format_str = "tsv";
    app.add_option("--format", format_str, "output format: tsv or json-lines")
        ->check(CLI::IsMember({"tsv", "json-lines"}));
    app.add_option("--precision", cfg.precision, "printed decimals (tsv)")
        ->check(CLI::Range(0, 17));
    app.add_option("--sieve-limit", cfg.sieve_limit, "sieve budget (env CYCLOKIT_SIEVE_LIMIT)");
    app.add_flag("--truncate", cfg.truncate, "truncate printed decimals instead of rounding");
    app.require_subcommand(1);

    std::string q_csv;

    auto* constants = app.add_subcommand("constants", "C(q), v(q), alpha(q), e0(q) with brackets");
    std::uint64_t q_val = 0, x_val = 0, y_val = 0, range_val = 0;
    constants->add_option("--q", q_val, "odd prime q")->required();
    constants->add_option("--y", y_val, "truncation point for C and v");

    auto* table1 = app.add_subcommand("table1", "Euler-Kronecker summary table");
    table1->add_option("--q", q_csv, "comma-separated q list (empty for header only)");
    table1->add_option("--x", x_val, "override the per-q bound point");

    auto* table2 = app.add_subcommand("table2", "second-order constant summary table");
    table2->add_option("--q", q_csv, "comma-separated q list (empty for header only)");

    auto* count = app.add_subcommand("count", "exact count with both approximations");
    count->add_option("--q", q_val, "odd prime q")->required();
    count->add_option("--x", x_val, "count integers up to x")->required();

    auto* decide_cmd = app.add_subcommand("decide", "naive vs Ramanujan-type verdict (GRH)");
    decide_cmd->add_option("--q", q_val, "odd prime q");
    decide_cmd->add_option("--range", range_val, "decide every odd prime up to this bound");
    decide_cmd->add_option("--x-max", cfg.x_max, "bracket search budget in x");
    decide_cmd->add_option("--y-max", cfg.y_max, "bracket search budget in y");

    std::vector<std::string> cli_args(args.rbegin(), args.rend());
    try {
        app.parse(cli_args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    cfg.format = (format_str == "json-lines") ? Format::json_lines : Format::tsv;

    try {
        if (constants->parsed()) {
            cfg.command = "constants";
            cfg.q = q_val;
            if (constants->count("--y")) cfg.y = y_val;
            return detail::cmd_constants(cfg, out);
        }
        if (table1->parsed() || table2->parsed()) {
            cfg.command = table1->parsed() ? "table1" : "table2";
            auto* sub = table1->parsed() ? table1 : table2;
            if (sub->count("--q")) {
                cfg.q_list_given = true;
                cfg.q_list = detail::parse_q_csv(q_csv);
            }
            if (table1->parsed() && table1->count("--x")) cfg.x = x_val;
            return table1->parsed() ? detail::cmd_table1(cfg, out) : detail::cmd_table2(cfg, out);
        }
        if (count->parsed()) {
            cfg.command = "count";
            cfg.q = q_val;
            cfg.x = x_val;
            return detail::cmd_count(cfg, out);
        }
        cfg.command = "decide";
        if (decide_cmd->count("--range")) {
            cfg.range = range_val;
        } else if (decide_cmd->count("--q")) {
            cfg.q = q_val;
        } else {
            err << "decide: need --q or --range\n";
            return 2;
        }
        return detail::cmd_decide(cfg, out);
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const resource_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace cyclokit::cli
