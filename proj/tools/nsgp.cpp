// nsgp: census of irreducible / ANI / atomic numerical semigroups with a
// fixed Frobenius number, plus an exhaustive reference mode for
// cross-checking the fast enumerations.
//
// Exit codes: 0 ok, 1 verification mismatch, 2 usage or parse error,
// 3 enumeration guard or oracle limit exceeded.

#include <algorithm>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nsgp/atomic.hpp"
#include "nsgp/errors.hpp"
#include "nsgp/irreducible.hpp"
#include "nsgp/oracle.hpp"
#include "nsgp/report.hpp"

namespace {

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::size_t at = 0;
    while (at < text.size()) {
        std::size_t next = text.find(',', at);
        if (next == std::string::npos) next = text.size();
        const std::string item = text.substr(at, next - at);
        try {
            std::size_t used = 0;
            const int value = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(value);
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse integer list entry '" + item + "'");
        }
        at = next + 1;
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

std::string describe(const nsgp::NumericalSemigroup& s) {
    return nsgp::record_line(nsgp::make_record(s));
}

// First element of (a \ b) u (b \ a), used as the minimal counterexample
// when two listings disagree.
const nsgp::NumericalSemigroup* first_difference(const std::vector<nsgp::NumericalSemigroup>& a,
                                                 const std::vector<nsgp::NumericalSemigroup>& b) {
    for (const auto& s : a)
        if (!std::binary_search(b.begin(), b.end(), s)) return &s;
    for (const auto& s : b)
        if (!std::binary_search(a.begin(), a.end(), s)) return &s;
    return nullptr;
}

bool run_verify(int f_max, int oracle_limit, int max_frobenius) {
    if (f_max < 1) throw std::invalid_argument("verify: F must be >= 1");
    if (f_max > oracle_limit)
        throw nsgp::LimitExceeded("verify: F = " + std::to_string(f_max) +
                                  " exceeds the oracle limit " + std::to_string(oracle_limit));
    for (int f = 1; f <= f_max; ++f) {
        const auto fast_irr = nsgp::enumerate_irreducible(f, std::max(f, max_frobenius));
        const auto ref_irr = nsgp::oracle_irreducible(f, oracle_limit);
        if (fast_irr != ref_irr) {
            const auto* witness = first_difference(fast_irr, ref_irr);
            std::cout << "MISMATCH irreducible F=" << f << " (" << fast_irr.size() << " vs "
                      << ref_irr.size() << ")";
            if (witness) std::cout << ": " << describe(*witness);
            std::cout << "\n";
            return false;
        }
        const auto fast_atomic = nsgp::atomic_semigroups(f, std::max(f, max_frobenius));
        const auto ref_atomic = nsgp::oracle_atomic(f, oracle_limit);
        if (fast_atomic != ref_atomic) {
            const auto* witness = first_difference(fast_atomic, ref_atomic);
            std::cout << "MISMATCH atomic F=" << f << " (" << fast_atomic.size() << " vs "
                      << ref_atomic.size() << ")";
            if (witness) std::cout << ": " << describe(*witness);
            std::cout << "\n";
            return false;
        }
        const auto fibers = nsgp::oracle_ani_levels(f, oracle_limit);
        const auto level_set = nsgp::levels(f).levels;
        for (const auto& [level, fiber] : fibers)
            if (!std::binary_search(level_set.begin(), level_set.end(), level)) {
                std::cout << "MISMATCH level set F=" << f << ": oracle fiber at l=" << level
                          << " outside the level set\n";
                return false;
            }
        for (int level : level_set) {
            const auto fast_fiber = nsgp::ani_semigroups(level, f, std::max(f, max_frobenius));
            const auto it = fibers.find(level);
            const std::vector<nsgp::NumericalSemigroup> ref_fiber =
                it == fibers.end() ? std::vector<nsgp::NumericalSemigroup>{} : it->second;
            if (fast_fiber != ref_fiber) {
                const auto* witness = first_difference(fast_fiber, ref_fiber);
                std::cout << "MISMATCH N(" << f << "," << level << ") (" << fast_fiber.size()
                          << " vs " << ref_fiber.size() << ")";
                if (witness) std::cout << ": " << describe(*witness);
                std::cout << "\n";
                return false;
            }
        }
        std::cout << "F=" << f << " irreducible=" << fast_irr.size()
                  << " atomic=" << fast_atomic.size() << " ok\n";
    }
    std::cout << "verify passed for F=1.." << f_max << "\n";
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"census of irreducible and atomic numerical semigroups"};
    app.require_subcommand(1);
    app.fallthrough();

    int max_frobenius = nsgp::default_max_frobenius;
    app.add_option("--max-f", max_frobenius, "enumeration guard for the Frobenius number")
        ->envname("NSGP_MAX_F");

    auto* inspect = app.add_subcommand("inspect", "classify one semigroup");
    std::string gens_arg, gaps_arg, vector_arg, inspect_format = "text";
    inspect->add_option("--gens", gens_arg, "comma-separated generators");
    inspect->add_option("--gaps", gaps_arg, "comma-separated gap set");
    inspect->add_option("--vector", vector_arg, "gap bit string b1..bF");
    inspect->add_option("--format", inspect_format, "text | json | csv");

    auto* irreducible = app.add_subcommand("irreducible", "list I(F)");
    int irr_f = 0;
    std::string irr_format = "text", cache_dir;
    irreducible->add_option("F", irr_f, "Frobenius number")->required();
    irreducible->add_option("--format", irr_format, "text | json | csv");
    irreducible->add_option("--cache-dir", cache_dir, "directory for the I(F) cache")
        ->envname("NSGP_CACHE");

    auto* atomic = app.add_subcommand("atomic", "list A(F)");
    int atomic_f = 0;
    std::string atomic_format = "text";
    atomic->add_option("F", atomic_f, "Frobenius number")->required();
    atomic->add_option("--format", atomic_format, "text | json | csv");

    auto* ani = app.add_subcommand("ani", "list N(F), optionally one level");
    int ani_f = 0, ani_level_arg = -1;
    std::string ani_format = "text";
    ani->add_option("F", ani_f, "Frobenius number")->required();
    ani->add_option("--level", ani_level_arg, "restrict to the level l of L(F)");
    ani->add_option("--format", ani_format, "text | json | csv");

    auto* levels_cmd = app.add_subcommand("levels", "list L(F)");
    int levels_f = 0;
    std::string levels_format = "text";
    levels_cmd->add_option("F", levels_f, "Frobenius number")->required();
    levels_cmd->add_option("--format", levels_format, "text | json | csv");

    auto* count = app.add_subcommand("count", "census table over a range of F");
    int count_from = 0, count_to = 0;
    bool count_csv = false;
    count->add_option("FROM", count_from, "first Frobenius number")->required();
    count->add_option("TO", count_to, "last Frobenius number")->required();
    count->add_flag("--csv", count_csv, "emit CSV instead of the text table");

    auto* verify = app.add_subcommand("verify", "cross-check against the exhaustive reference");
    int verify_f = 0, oracle_limit = nsgp::default_oracle_limit;
    verify->add_option("F", verify_f, "check every Frobenius number up to F")->required();
    verify->add_option("--oracle-limit", oracle_limit, "guard for the exhaustive search");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*inspect) {
            const int given = (!gens_arg.empty()) + (!gaps_arg.empty()) + (!vector_arg.empty());
            if (given != 1)
                throw std::invalid_argument(
                    "inspect: give exactly one of --gens, --gaps, --vector");
            nsgp::NumericalSemigroup s =
                !gens_arg.empty()
                    ? nsgp::NumericalSemigroup::from_generators(parse_int_list(gens_arg))
                    : !gaps_arg.empty()
                          ? nsgp::NumericalSemigroup::from_gaps(parse_int_list(gaps_arg))
                          : nsgp::NumericalSemigroup::from_bit_string(vector_arg);
            std::cout << nsgp::render_single(s, nsgp::parse_format(inspect_format));
        } else if (*irreducible) {
            const auto result = cache_dir.empty()
                                    ? nsgp::enumerate_irreducible(irr_f, max_frobenius)
                                    : nsgp::cached_irreducible(irr_f, cache_dir, max_frobenius);
            std::cout << nsgp::render_listing(result, irr_f, nsgp::parse_format(irr_format));
        } else if (*atomic) {
            std::cout << nsgp::render_listing(nsgp::atomic_semigroups(atomic_f, max_frobenius),
                                              atomic_f, nsgp::parse_format(atomic_format));
        } else if (*ani) {
            std::vector<nsgp::NumericalSemigroup> result;
            if (ani->count("--level")) {
                const auto level_set = nsgp::levels(ani_f).levels;
                if (!std::binary_search(level_set.begin(), level_set.end(), ani_level_arg))
                    throw std::invalid_argument("ani: level " + std::to_string(ani_level_arg) +
                                                " is not in L(" + std::to_string(ani_f) + ")");
                result = nsgp::ani_semigroups(ani_level_arg, ani_f, max_frobenius);
            } else {
                result = nsgp::ani_with_frobenius(ani_f, max_frobenius);
            }
            std::cout << nsgp::render_listing(result, ani_f, nsgp::parse_format(ani_format));
        } else if (*levels_cmd) {
            std::cout << nsgp::render_levels(nsgp::levels(levels_f),
                                             nsgp::parse_format(levels_format));
        } else if (*count) {
            if (count_from < 1 || count_from > count_to)
                throw std::invalid_argument("count: need 1 <= FROM <= TO");
            std::vector<nsgp::CensusRow> rows;
            for (int f = count_from; f <= count_to; ++f) {
                nsgp::CensusRow row;
                row.frobenius = f;
                row.irreducible = nsgp::enumerate_irreducible(f, max_frobenius).size();
                row.ani = nsgp::ani_with_frobenius(f, max_frobenius).size();
                row.atomic = row.irreducible + row.ani;  // the two classes partition A(F)
                rows.push_back(row);
            }
            std::cout << nsgp::render_census(rows, count_csv);
        } else if (*verify) {
            return run_verify(verify_f, oracle_limit, max_frobenius) ? 0 : 1;
        }
    } catch (const nsgp::LimitExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const nsgp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
