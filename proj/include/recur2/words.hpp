#pragma once

/**
 * @file words.hpp
 * @brief Restricted words over {0..σ-1}: constraint DSL, counting automaton, enumeration.
 *
 * A WordConstraint forbids a set of factors (contiguous subwords) and requires
 * every run of certain letters to have even length. Words are digit strings.
 *
 * DSL (whitespace is ignored everywhere):
 *
 *   spec   := clause (";" clause)*
 *   clause := "alphabet=" INT | "forbid=" WORD ("," WORD)* | "evenrun=" INT ("," INT)*
 *
 * The alphabet clause is mandatory and must come first.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "recur2/error.hpp"
#include "recur2/exact_algebra.hpp"

namespace recur2 {

inline constexpr unsigned max_alphabet = 10;
inline constexpr std::uint64_t default_enumeration_cap = 10'000'000;

struct WordConstraint {
    unsigned alphabet_size = 1;
    std::set<std::string> forbidden_factors;
    std::set<unsigned> even_run_letters;

    friend bool operator==(const WordConstraint&, const WordConstraint&) = default;

    /// Canonical DSL text, e.g. "alphabet=3; forbid=01,02".
    std::string to_string() const {
        std::string out = "alphabet=" + std::to_string(alphabet_size);
        if (!forbidden_factors.empty()) {
            out += "; forbid=";
            bool first = true;
            for (const auto& f : forbidden_factors) {
                if (!first) out += ",";
                out += f;
                first = false;
            }
        }
        if (!even_run_letters.empty()) {
            out += "; evenrun=";
            bool first = true;
            for (unsigned l : even_run_letters) {
                if (!first) out += ",";
                out += std::to_string(l);
                first = false;
            }
        }
        return out;
    }
};

namespace detail {

class DslScanner {
public:
    explicit DslScanner(std::string_view text) {
        for (std::size_t i = 0; i < text.size(); ++i) {
            const char ch = text[i];
            if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '\f' || ch == '\v') continue;
            chars_.push_back(ch);
            pos_.push_back(i);
        }
        end_pos_ = text.size();
    }

    bool done() const { return i_ == chars_.size(); }
    char peek() const { return done() ? '\0' : chars_[i_]; }
    std::size_t position() const { return done() ? end_pos_ : pos_[i_]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw error(errc::parse_error, what + " at position " + std::to_string(position()), position());
    }

    void expect(char ch) {
        if (peek() != ch) fail(std::string("expected '") + ch + "'");
        ++i_;
    }

    bool accept(char ch) {
        if (peek() != ch) return false;
        ++i_;
        return true;
    }

    std::string keyword() {
        std::string out;
        while (!done() && peek() >= 'a' && peek() <= 'z') out += chars_[i_++];
        return out;
    }

    /// Nonempty digit string; positions of each digit are returned alongside.
    std::pair<std::string, std::vector<std::size_t>> digits() {
        std::pair<std::string, std::vector<std::size_t>> out;
        while (!done() && peek() >= '0' && peek() <= '9') {
            out.second.push_back(pos_[i_]);
            out.first += chars_[i_++];
        }
        if (out.first.empty()) fail("expected digits");
        return out;
    }

private:
    std::vector<char> chars_;
    std::vector<std::size_t> pos_;
    std::size_t end_pos_ = 0;
    std::size_t i_ = 0;
};

}  // namespace detail

inline WordConstraint parse_constraint(std::string_view text) {
    detail::DslScanner in(text);
    WordConstraint c;
    bool first = true;
    do {
        const std::size_t clause_pos = in.position();
        const std::string key = in.keyword();
        if (key != "alphabet" && key != "forbid" && key != "evenrun") {
            if (first && in.done() && key.empty()) throw error(errc::missing_alphabet, "empty constraint", clause_pos);
            const std::string what = key.empty() ? "expected a clause" : "unknown clause '" + key + "'";
            throw error(errc::parse_error, what + " at position " + std::to_string(clause_pos), clause_pos);
        }
        if (first != (key == "alphabet")) {
            if (first) throw error(errc::missing_alphabet, "the first clause must be alphabet=", clause_pos);
            throw error(errc::parse_error, "repeated alphabet clause at position " + std::to_string(clause_pos),
                        clause_pos);
        }
        in.expect('=');
        if (key == "alphabet") {
            const std::size_t at = in.position();
            const auto [digits, _] = in.digits();
            if (digits.size() > 2 || std::stoul(digits) < 1 || std::stoul(digits) > max_alphabet) {
                throw error(errc::parse_error, "alphabet size must be 1..10 at position " + std::to_string(at), at);
            }
            c.alphabet_size = static_cast<unsigned>(std::stoul(digits));
        } else if (key == "forbid") {
            do {
                const auto [word, positions] = in.digits();
                for (std::size_t i = 0; i < word.size(); ++i) {
                    if (static_cast<unsigned>(word[i] - '0') >= c.alphabet_size) {
                        throw error(errc::letter_out_of_range,
                                    std::string("letter ") + word[i] + " at position " + std::to_string(positions[i]) +
                                        " is not below alphabet size " + std::to_string(c.alphabet_size),
                                    positions[i]);
                    }
                }
                c.forbidden_factors.insert(word);
            } while (in.accept(','));
        } else {
            do {
                const auto [digits, positions] = in.digits();
                if (digits.size() > 2 || std::stoul(digits) >= c.alphabet_size) {
                    throw error(errc::letter_out_of_range,
                                "letter " + digits + " at position " + std::to_string(positions.front()) +
                                    " is not below alphabet size " + std::to_string(c.alphabet_size),
                                positions.front());
                }
                c.even_run_letters.insert(static_cast<unsigned>(std::stoul(digits)));
            } while (in.accept(','));
        }
        first = false;
    } while (in.accept(';'));
    if (!in.done()) in.fail("expected ';' or end of input");
    return c;
}

/**
 * Deterministic automaton accepting exactly the words that satisfy a
 * WordConstraint. `next[s][letter]` is the successor state or `reject`.
 * State 0 is the start state.
 */
struct CountAutomaton {
    static constexpr int reject = -1;

    unsigned alphabet_size = 1;
    std::vector<std::vector<int>> next;
    std::vector<bool> accepting;

    std::size_t state_count() const noexcept { return next.size(); }
};

/**
 * Product of the factor-avoidance automaton (Aho-Corasick trie with failure
 * links) and run-parity tracking. A parity component is either "neutral" or
 * "inside an odd-length run of letter l" for l in even_run_letters; leaving
 * such a run rejects, and only neutral states accept. Only reachable product
 * states are kept.
 */
inline CountAutomaton build_automaton(const WordConstraint& c) {
    const unsigned sigma = c.alphabet_size;

    // Trie over forbidden factors.
    std::vector<std::vector<int>> go(1, std::vector<int>(sigma, -1));
    std::vector<bool> bad(1, false);
    for (const auto& f : c.forbidden_factors) {
        int node = 0;
        for (char ch : f) {
            const auto l = static_cast<unsigned>(ch - '0');
            if (go[node][l] < 0) {
                go[node][l] = static_cast<int>(go.size());
                go.emplace_back(sigma, -1);
                bad.push_back(false);
            }
            node = go[node][l];
        }
        bad[node] = true;
    }

    // Failure links, BFS order; completes `go` into a full transition function.
    std::vector<int> fail(go.size(), 0);
    std::deque<int> queue;
    for (unsigned l = 0; l < sigma; ++l) {
        if (go[0][l] < 0) {
            go[0][l] = 0;
        } else {
            fail[go[0][l]] = 0;
            queue.push_back(go[0][l]);
        }
    }
    while (!queue.empty()) {
        const int node = queue.front();
        queue.pop_front();
        bad[node] = bad[node] || bad[fail[node]];
        for (unsigned l = 0; l < sigma; ++l) {
            const int child = go[node][l];
            if (child < 0) {
                go[node][l] = go[fail[node]][l];
            } else {
                fail[child] = go[fail[node]][l];
                queue.push_back(child);
            }
        }
    }

    constexpr int neutral = -1;
    using Key = std::pair<int, int>;  // (trie node, odd-run letter or neutral)
    std::map<Key, int> index;
    std::vector<Key> states;
    auto intern = [&](Key k) {
        auto [it, inserted] = index.emplace(k, static_cast<int>(states.size()));
        if (inserted) states.push_back(k);
        return it->second;
    };

    CountAutomaton out;
    out.alphabet_size = sigma;
    intern({0, neutral});
    for (std::size_t s = 0; s < states.size(); ++s) {
        const auto [node, run] = states[s];
        std::vector<int> row(sigma, CountAutomaton::reject);
        for (unsigned l = 0; l < sigma; ++l) {
            const int target = go[node][l];
            if (bad[target]) continue;
            int parity = neutral;
            if (run != neutral) {
                if (static_cast<unsigned>(run) != l) continue;  // odd run of `run` ends here
            } else if (c.even_run_letters.count(l) != 0) {
                parity = static_cast<int>(l);
            }
            row[l] = intern({target, parity});
        }
        out.next.push_back(std::move(row));
    }
    for (const auto& [node, run] : states) out.accepting.push_back(run == neutral);
    return out;
}

/// Accepted-word counts for every length 0..n_max (one DP step per letter).
inline std::vector<ExactInt> count_series(const CountAutomaton& a, std::size_t n_max) {
    std::vector<ExactInt> counts;
    counts.reserve(n_max + 1);
    std::vector<ExactInt> mass(a.state_count());
    mass[0] = 1;
    for (std::size_t n = 0;; ++n) {
        ExactInt total = 0;
        for (std::size_t s = 0; s < mass.size(); ++s) {
            if (a.accepting[s]) total += mass[s];
        }
        counts.push_back(std::move(total));
        if (n == n_max) break;
        std::vector<ExactInt> step(a.state_count());
        for (std::size_t s = 0; s < mass.size(); ++s) {
            if (mass[s].is_zero()) continue;
            for (int t : a.next[s]) {
                if (t != CountAutomaton::reject) step[static_cast<std::size_t>(t)] += mass[s];
            }
        }
        mass = std::move(step);
    }
    return counts;
}

inline ExactInt count_words(const WordConstraint& c, std::size_t n) { return count_series(build_automaton(c), n).back(); }

namespace detail {

/// Direct check that appending the last letter of `w` keeps the prefix valid:
/// no forbidden factor ends here and no constrained run closed at odd length.
inline bool extension_ok(const WordConstraint& c, const std::string& w) {
    for (const auto& f : c.forbidden_factors) {
        if (w.size() >= f.size() && w.compare(w.size() - f.size(), f.size(), f) == 0) return false;
    }
    if (w.size() >= 2 && w[w.size() - 1] != w[w.size() - 2]) {
        const char closed = w[w.size() - 2];
        if (c.even_run_letters.count(static_cast<unsigned>(closed - '0')) != 0) {
            std::size_t run = 0;
            for (std::size_t i = w.size() - 1; i-- > 0 && w[i] == closed;) ++run;
            if (run % 2 == 1) return false;
        }
    }
    return true;
}

inline bool final_run_ok(const WordConstraint& c, const std::string& w) {
    if (w.empty()) return true;
    const char last = w.back();
    if (c.even_run_letters.count(static_cast<unsigned>(last - '0')) == 0) return true;
    std::size_t run = 0;
    for (std::size_t i = w.size(); i-- > 0 && w[i] == last;) ++run;
    return run % 2 == 0;
}

inline void enumerate_into(const WordConstraint& c, std::size_t n, std::string& prefix, std::vector<std::string>& out) {
    if (prefix.size() == n) {
        if (final_run_ok(c, prefix)) out.push_back(prefix);
        return;
    }
    for (unsigned l = 0; l < c.alphabet_size; ++l) {
        prefix.push_back(static_cast<char>('0' + l));
        if (extension_ok(c, prefix)) enumerate_into(c, n, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace detail

/// Direct membership test, independent of the automaton.
inline bool satisfies(const WordConstraint& c, std::string_view word) {
    std::string prefix;
    for (char ch : word) {
        prefix.push_back(ch);
        if (!detail::extension_ok(c, prefix)) return false;
    }
    return detail::final_run_ok(c, prefix);
}

/**
 * Lexicographic list of all accepted words of length n, found by exhaustive
 * search with direct constraint checks (no automaton). Refuses when σ^n > cap.
 */
inline std::vector<std::string> enumerate_words(const WordConstraint& c, std::size_t n,
                                                std::uint64_t cap = default_enumeration_cap) {
    std::uint64_t space = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (space > cap / c.alphabet_size) {
            throw error(errc::cap_exceeded, std::to_string(c.alphabet_size) + "^" + std::to_string(n) +
                                                " words exceed the enumeration cap " + std::to_string(cap));
        }
        space *= c.alphabet_size;
    }
    if (space > cap) throw error(errc::cap_exceeded, "word space exceeds the enumeration cap " + std::to_string(cap));
    std::vector<std::string> out;
    std::string prefix;
    detail::enumerate_into(c, n, prefix, out);
    return out;
}

/**
 * Word model whose length-n count is the (n+1)-th term of the (0, 1) solution
 * for coefficients (x, y).
 *
 * y > 0: alphabet x + y, letters 0..y-1 restricted to even runs (a pair of
 *        equal constrained letters plays the role of a y-weighted step).
 * y < 0: alphabet x, forbidden factors 0i for 1 <= i <= -y (requires -y < x).
 */
inline WordConstraint constraint_from_params(std::int64_t x, std::int64_t y) {
    const bool positive = x > 0 && y > 0 && x + y <= static_cast<std::int64_t>(max_alphabet);
    const bool negative = x > 0 && y < 0 && -y < x && x <= static_cast<std::int64_t>(max_alphabet);
    if (!positive && !negative) {
        throw error(errc::unsupported_params, "no word model for x = " + std::to_string(x) + ", y = " + std::to_string(y));
    }
    WordConstraint c;
    if (positive) {
        c.alphabet_size = static_cast<unsigned>(x + y);
        for (std::int64_t l = 0; l < y; ++l) c.even_run_letters.insert(static_cast<unsigned>(l));
    } else {
        c.alphabet_size = static_cast<unsigned>(x);
        for (std::int64_t i = 1; i <= -y; ++i) c.forbidden_factors.insert("0" + std::to_string(i));
    }
    return c;
}

struct TilingParams {
    std::uint64_t colors1 = 1;
    std::uint64_t colors2 = 1;
};

/// Tilings of a 1 x n board by squares (colors1 colors) and dominoes (colors2 colors).
inline ExactInt count_colored_tilings(std::size_t n, std::uint64_t colors1, std::uint64_t colors2) {
    ExactInt before = 1;       // t(0)
    ExactInt cur = colors1;    // t(1)
    if (n == 0) return before;
    for (std::size_t i = 2; i <= n; ++i) {
        ExactInt next = ExactInt(colors1) * cur + ExactInt(colors2) * before;
        before = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace recur2
