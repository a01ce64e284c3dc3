#pragma once

// recur2 command-line front end. Kept in a header so the tests can drive
// run_cli() in-process.
//
// Exit codes: 0 success, 1 an identity or cross-check failed, 2 usage error.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "recur2/recur2.hpp"

namespace recur2::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

namespace detail {

inline std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!text.empty() && text.back() == sep) out.emplace_back();
    return out;
}

inline std::vector<ExactInt> parse_list(const std::string& text, const std::string& flag) {
    std::vector<ExactInt> out;
    if (text.empty()) throw error(errc::parse_error, flag + ": empty value");
    for (const auto& part : split(text, ',')) {
        try {
            out.push_back(parse_exact_int(part));
        } catch (const error&) {
            throw error(errc::parse_error, flag + ": expected comma-separated decimal integers, got '" + text + "'");
        }
    }
    return out;
}

/// Resolves the ring for one invocation: polynomial if forced or if any list has several entries.
struct RingChoice {
    bool poly = false;

    RingValue value(const std::string& text, const std::string& flag) const {
        auto coeffs = parse_list(text, flag);
        if (poly) return IntPoly(std::move(coeffs));
        if (coeffs.size() != 1) throw error(errc::parse_error, flag + ": expected a single integer");
        return coeffs.front();
    }

    /// "t0,t1" for integers; "p0;p1" with comma coefficient lists for polynomials.
    InitialPair pair(const std::string& text, const std::string& flag) const {
        if (text.find(';') != std::string::npos) {
            const auto parts = split(text, ';');
            if (parts.size() != 2) throw error(errc::parse_error, flag + ": expected two ';'-separated values");
            return {value(parts[0], flag), value(parts[1], flag)};
        }
        const auto coeffs = parse_list(text, flag);
        if (coeffs.size() != 2) throw error(errc::parse_error, flag + ": expected two comma-separated values");
        if (poly) return {IntPoly::constant(coeffs[0]), IntPoly::constant(coeffs[1])};
        return {coeffs[0], coeffs[1]};
    }

    std::vector<RingValue> list(const std::string& text, const std::string& flag) const {
        std::vector<RingValue> out;
        if (text.find(';') != std::string::npos || poly) {
            for (const auto& part : split(text, ';')) out.push_back(value(part, flag));
        } else {
            for (auto& c : parse_list(text, flag)) out.emplace_back(std::move(c));
        }
        return out;
    }
};

/// `marker` is the separator whose presence in any value implies polynomial inputs:
/// ',' for single values such as --x, ';' for lists such as --u.
inline RingChoice choose_ring(const std::string& forced, std::initializer_list<std::string> values, char marker = ',') {
    RingChoice r;
    if (forced == "poly") {
        r.poly = true;
    } else if (forced == "auto") {
        for (const std::string& v : values) {
            if (v.find(marker) != std::string::npos) r.poly = true;
        }
    }
    return r;
}

inline std::uint64_t enumeration_cap(std::optional<std::uint64_t> flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("RECUR2_CAP")) {
        const std::string text(env);
        if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
            throw error(errc::parse_error, "RECUR2_CAP must be a non-negative integer");
        }
        return std::stoull(text);
    }
    return default_enumeration_cap;
}

inline void print_report(std::ostream& out, const IdentityReport& r) {
    out << "identity: " << to_string(r.identity) << "\n";
    out << "params:";
    for (const auto& [k, v] : r.params) out << " " << k << "=" << v;
    out << "\nlhs: " << r.lhs.to_string() << "\nrhs: " << r.rhs.to_string() << "\nholds: " << (r.holds ? "true" : "false")
        << "\n";
}

inline std::string need(const std::optional<std::string>& v, const std::string& flag) {
    if (!v) throw CLI::RequiredError(flag);
    return *v;
}

inline std::int64_t need(const std::optional<std::int64_t>& v, const std::string& flag) {
    if (!v) throw CLI::RequiredError(flag);
    return *v;
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    using namespace detail;

    CLI::App app{"Exact second-order recurrences, determinant identities and restricted-word counts", "recur2"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "Emit JSON");

    // seq
    auto* seq = app.add_subcommand("seq", "Generate a window of terms");
    std::optional<std::string> seq_preset, seq_x, seq_y, seq_init;
    std::string seq_ring = "auto";
    std::size_t seq_from = 0, seq_to = 10;
    seq->add_option("--preset", seq_preset, "Catalog preset id");
    seq->add_option("--x", seq_x, "Coefficient x (comma list = polynomial)");
    seq->add_option("--y", seq_y, "Coefficient y");
    seq->add_option("--init", seq_init, "Initial pair 't0,t1' or 'p0;p1' (default 0,1)");
    seq->add_option("--from", seq_from, "First index")->capture_default_str();
    seq->add_option("--to", seq_to, "Last index")->capture_default_str();
    seq->add_option("--ring", seq_ring, "auto | int | poly")->check(CLI::IsMember({"auto", "int", "poly"}));

    // explicit
    auto* expl = app.add_subcommand("explicit", "Evaluate a(n) by the closed binomial sum");
    std::string ex_x, ex_y, ex_ring = "auto";
    std::size_t ex_n = 0;
    expl->add_option("--x", ex_x)->required();
    expl->add_option("--y", ex_y)->required();
    expl->add_option("--n", ex_n)->required();
    expl->add_option("--ring", ex_ring)->check(CLI::IsMember({"auto", "int", "poly"}));

    // verify
    auto* verify = app.add_subcommand("verify", "Check one determinant identity");
    std::string v_name, v_ring = "auto", v_convention = "shifted";
    std::optional<std::string> v_x, v_y, v_b, v_c, v_u, v_v, v_bw, v_cw;
    std::optional<std::int64_t> v_k, v_m, v_p, v_q, v_n, v_r;
    verify->add_option("identity", v_name, "docagne | prop8 | cassini | index-reduction | reduced-docagne | "
                                           "four-param | vajda | catalan | recover-a")
        ->required();
    verify->add_option("--x", v_x);
    verify->add_option("--y", v_y);
    verify->add_option("--b", v_b, "Initial pair of (b)");
    verify->add_option("--c", v_c, "Initial pair of (c)");
    verify->add_option("--u", v_u, "prop8: coefficient window u");
    verify->add_option("--v", v_v, "prop8: coefficient window v");
    verify->add_option("--b-window", v_bw, "recover-a: terms b(0), b(1), ...");
    verify->add_option("--c-window", v_cw, "recover-a: terms c(0), c(1), ...");
    verify->add_option("--k", v_k);
    verify->add_option("--m", v_m);
    verify->add_option("--p", v_p);
    verify->add_option("--q", v_q);
    verify->add_option("--n", v_n);
    verify->add_option("--r", v_r);
    verify->add_option("--ring", v_ring)->check(CLI::IsMember({"auto", "int", "poly"}));
    verify->add_option("--convention", v_convention, "prop8 v-product: shifted | literal")
        ->check(CLI::IsMember({"shifted", "literal"}));

    // words
    auto* words = app.add_subcommand("words", "Count or list restricted words");
    std::string w_mode, w_spec;
    std::size_t w_n = 0;
    std::optional<std::uint64_t> w_cap;
    words->add_option("mode", w_mode, "count | enumerate")->required()->check(CLI::IsMember({"count", "enumerate"}));
    words->add_option("--spec", w_spec, "Constraint, e.g. \"alphabet=3; forbid=01,02\"")->required();
    words->add_option("--n", w_n, "Word length")->required();
    words->add_option("--cap", w_cap, "Enumeration cap on alphabet^n (default 1e7, env RECUR2_CAP)");

    // tilings
    auto* tilings = app.add_subcommand("tilings", "Count coloured square/domino tilings");
    std::size_t t_n = 0;
    std::uint64_t t_c1 = 1, t_c2 = 1;
    tilings->add_option("--n", t_n)->required();
    tilings->add_option("--colors1", t_c1)->required();
    tilings->add_option("--colors2", t_c2)->required();

    // crosscheck
    auto* cross = app.add_subcommand("crosscheck", "Compare recurrence, closed sum, counts and closed forms");
    std::optional<std::string> c_preset;
    bool c_all = false;
    std::size_t c_max = 12;
    auto* c_preset_opt = cross->add_option("--preset", c_preset);
    auto* c_all_opt = cross->add_flag("--all", c_all);
    c_preset_opt->excludes(c_all_opt);
    cross->add_option("--max-n", c_max)->capture_default_str();

    // fuzz
    auto* fuzz = app.add_subcommand("fuzz", "Seeded random verification of every identity");
    std::uint64_t f_seed = 0, f_trials = 1000;
    FuzzRanges f_ranges;
    fuzz->add_option("--seed", f_seed)->required();
    fuzz->add_option("--trials", f_trials)->capture_default_str()->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1000000000}));
    fuzz->add_option("--coeff-max", f_ranges.coeff_max)->capture_default_str()->check(CLI::Range(1, 1000));
    fuzz->add_option("--init-max", f_ranges.init_max)->capture_default_str()->check(CLI::Range(0, 1000000));
    fuzz->add_option("--index-max", f_ranges.index_max)->capture_default_str()->check(CLI::Range(0, 1000));

    // presets
    auto* presets = app.add_subcommand("presets", "List catalog presets");
    std::string p_mode = "list";
    presets->add_option("mode", p_mode)->check(CLI::IsMember({"list"}));

    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);

    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (seq->parsed()) {
            RecurrenceSpec spec = [&] {
                if (seq_preset) {
                    if (seq_x || seq_y || seq_init) throw CLI::ValidationError("--preset", "excludes --x/--y/--init");
                    return get_preset(*seq_preset).spec();
                }
                const auto ring = choose_ring(seq_ring, {need(seq_x, "--x"), need(seq_y, "--y")});
                const RingValue x = ring.value(*seq_x, "--x");
                const RingValue y = ring.value(*seq_y, "--y");
                return seq_init ? RecurrenceSpec(x, y, ring.pair(*seq_init, "--init")) : RecurrenceSpec(x, y);
            }();
            const SequenceWindow w = generate(spec, seq_from, seq_to);
            if (as_json) {
                out << to_json(w).dump() << "\n";
            } else {
                for (std::size_t i = 0; i < w.values.size(); ++i) out << (w.lo + i) << ": " << w.values[i].to_string() << "\n";
            }
            return exit_ok;
        }

        if (expl->parsed()) {
            const auto ring = choose_ring(ex_ring, {ex_x, ex_y});
            const RingValue v = explicit_term(ring.value(ex_x, "--x"), ring.value(ex_y, "--y"), ex_n);
            if (as_json) {
                out << json{{"n", ex_n}, {"value", to_json(v)}}.dump() << "\n";
            } else {
                out << v.to_string() << "\n";
            }
            return exit_ok;
        }

        if (verify->parsed()) {
            if (v_name == "recover-a") {
                const auto ring = choose_ring(v_ring, {need(v_x, "--x"), need(v_y, "--y")});
                const RingValue x = ring.value(*v_x, "--x");
                const RingValue y = ring.value(*v_y, "--y");
                const SequenceWindow b{0, ring.list(need(v_bw, "--b-window"), "--b-window")};
                const SequenceWindow c{0, ring.list(need(v_cw, "--c-window"), "--c-window")};
                const std::int64_t k = need(v_k, "--k"), m = need(v_m, "--m");
                const RingValue a = recover_a(x, y, b, c, k, m);
                if (as_json) {
                    out << json{{"identity", "recover-a"}, {"k", k}, {"m", m}, {"value", to_json(a)}}.dump() << "\n";
                } else {
                    out << a.to_string() << "\n";
                }
                return exit_ok;
            }

            const auto id = identity_from_string(v_name);
            if (!id) throw CLI::ValidationError("identity", "unknown identity '" + v_name + "'");
            IdentityReport report;
            if (*id == Identity::prop8) {
                const auto ring = choose_ring(v_ring, {need(v_u, "--u"), need(v_v, "--v")}, ';');
                VarCoeffSpec coeffs{ring.list(need(v_u, "--u"), "--u"), ring.list(need(v_v, "--v"), "--v"), {}};
                const InitialPair b = ring.pair(need(v_b, "--b"), "--b");
                const InitialPair c = ring.pair(need(v_c, "--c"), "--c");
                coeffs.init = b;
                report = check_prop8(coeffs, b, c, need(v_k, "--k"), need(v_n, "--n"),
                                     v_convention == "literal" ? VProduct::literal : VProduct::shifted);
            } else {
                const auto ring = choose_ring(v_ring, {need(v_x, "--x"), need(v_y, "--y")});
                const RingValue x = ring.value(*v_x, "--x");
                const RingValue y = ring.value(*v_y, "--y");
                const auto b = [&] { return ring.pair(need(v_b, "--b"), "--b"); };
                const auto c = [&] { return ring.pair(need(v_c, "--c"), "--c"); };
                const auto b_or_canonical = [&] { return v_b ? b() : canonical_init(x); };
                switch (*id) {
                    case Identity::docagne:
                        report = check_docagne_general(x, y, b(), c(), need(v_k, "--k"), need(v_m, "--m"));
                        break;
                    case Identity::cassini: report = check_cassini(x, y, b(), c(), need(v_k, "--k")); break;
                    case Identity::index_reduction:
                        report = check_index_reduction(x, y, b(), c(), need(v_k, "--k"), need(v_m, "--m"),
                                                       need(v_p, "--p"));
                        break;
                    case Identity::reduced_docagne: report = check_reduced_docagne(x, y, b(), c(), need(v_m, "--m")); break;
                    case Identity::four_param:
                        report = check_four_param(x, y, b_or_canonical(), need(v_k, "--k"), need(v_m, "--m"),
                                                  need(v_p, "--p"), need(v_q, "--q"));
                        break;
                    case Identity::vajda:
                        report = check_vajda(x, y, b_or_canonical(), need(v_k, "--k"), need(v_m, "--m"), need(v_p, "--p"));
                        break;
                    case Identity::catalan: report = check_catalan(x, y, need(v_n, "--n"), need(v_r, "--r")); break;
                    case Identity::prop8: break;
                }
            }
            if (as_json) {
                out << to_json(report).dump() << "\n";
            } else {
                print_report(out, report);
            }
            return report.holds ? exit_ok : exit_failed;
        }

        if (words->parsed()) {
            const WordConstraint c = parse_constraint(w_spec);
            if (w_mode == "count") {
                const ExactInt count = count_words(c, w_n);
                if (as_json) {
                    out << json{{"spec", c.to_string()}, {"n", w_n}, {"count", count.str()}}.dump() << "\n";
                } else {
                    out << count.str() << "\n";
                }
            } else {
                const auto list = enumerate_words(c, w_n, enumeration_cap(w_cap));
                if (as_json) {
                    out << json{{"spec", c.to_string()}, {"n", w_n}, {"count", std::to_string(list.size())}, {"words", list}}
                               .dump()
                        << "\n";
                } else {
                    for (const auto& w : list) out << w << "\n";
                }
            }
            return exit_ok;
        }

        if (tilings->parsed()) {
            if (t_c1 == 0 || t_c2 == 0) throw CLI::ValidationError("--colors1/--colors2", "must be positive");
            const ExactInt count = count_colored_tilings(t_n, t_c1, t_c2);
            if (as_json) {
                out << json{{"n", t_n}, {"colors1", t_c1}, {"colors2", t_c2}, {"count", count.str()}}.dump() << "\n";
            } else {
                out << count.str() << "\n";
            }
            return exit_ok;
        }

        if (cross->parsed()) {
            if (!c_preset && !c_all) throw CLI::RequiredError("--preset or --all");
            std::vector<CrosscheckReport> reports;
            if (c_all) {
                for (PresetId id : all_preset_ids) reports.push_back(crosscheck(id, c_max));
            } else {
                reports.push_back(crosscheck(preset_from_string(*c_preset), c_max));
            }
            bool ok = true;
            for (const auto& r : reports) ok = ok && r.all_agree();
            if (as_json) {
                if (c_all) {
                    json arr = json::array();
                    for (const auto& r : reports) arr.push_back(to_json(r));
                    out << arr.dump() << "\n";
                } else {
                    out << to_json(reports.front()).dump() << "\n";
                }
            } else {
                for (const auto& r : reports) {
                    out << "preset " << to_string(r.preset) << "\n";
                    for (const auto& row : r.rows) {
                        out << "  n=" << row.n << " recurrence=" << row.recurrence.to_string()
                            << " explicit=" << row.explicit_value.to_string();
                        if (row.word_count) out << " words(n-1)=" << row.word_count->str();
                        if (row.tiling_count) out << " tilings(n-1)=" << row.tiling_count->str();
                        if (row.closed_form) out << " closed_form=" << (*row.closed_form ? "ok" : "MISMATCH");
                        out << (row.agree ? " agree" : " DISAGREE") << "\n";
                    }
                }
            }
            return ok ? exit_ok : exit_failed;
        }

        if (fuzz->parsed()) {
            const FuzzSummary s = run_fuzz(f_seed, f_trials, f_ranges);
            if (as_json) {
                json covered = json::object();
                for (const auto& [id, count] : s.covered) covered[std::string(to_string(id))] = count;
                json failures = json::array();
                for (const auto& [trial, report] : s.failures) failures.push_back({{"trial", trial}, {"report", to_json(report)}});
                out << json{{"seed", s.seed}, {"trials", s.trials}, {"covered", covered}, {"failures", failures}}.dump()
                    << "\n";
            } else {
                out << "seed: " << s.seed << "\ntrials: " << s.trials << "\ncovered:";
                for (const auto& [id, count] : s.covered) out << " " << to_string(id) << "=" << count;
                out << "\nfailures: " << s.failures.size() << "\n";
                for (const auto& [trial, report] : s.failures) {
                    out << "trial " << trial << ":\n";
                    print_report(out, report);
                    out << "witnesses: " << to_json(report).at("witnesses").dump() << "\n";
                }
            }
            return s.failures.empty() ? exit_ok : exit_failed;
        }

        if (presets->parsed()) {
            if (as_json) {
                json arr = json::array();
                for (const auto& p : all_presets()) arr.push_back(to_json(p));
                out << arr.dump() << "\n";
            } else {
                for (const auto& p : all_presets()) {
                    out << p.name() << "  x=" << p.x.to_string() << " y=" << p.y.to_string() << " init=("
                        << p.init.first.to_string() << ", " << p.init.second.to_string() << ")";
                    if (p.word_model) out << "  words: " << p.word_model->to_string();
                    if (p.tiling) out << "  tilings: " << p.tiling->colors1 << "x" << p.tiling->colors2;
                    if (p.closed_form) out << "  " << p.closed_form->description;
                    out << "\n";
                }
            }
            return exit_ok;
        }
    } catch (const CLI::Error& e) {
        err << "error: " << e.get_name() << ": " << e.what() << "\n";
        return exit_usage;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace recur2::cli
