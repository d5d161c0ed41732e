#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "nsgp/atomic.hpp"
#include "nsgp/semigroup.hpp"

namespace nsgp {

enum class Format { text, json, csv };

Format parse_format(const std::string& name);  // "text" | "json" | "csv"

// Flat view of one semigroup for machine-readable output. All fields are
// derivable from `vector` alone.
struct OutputRecord {
    int frobenius = 0;
    std::string vector;         // bit string b1..bF
    std::vector<int> gaps;
    std::vector<int> generators;
    int multiplicity = 0;
    std::vector<int> special_gaps;
    std::string cls;  // irreducible-symmetric | irreducible-pseudosymmetric | ani | non-atomic
};

OutputRecord make_record(const NumericalSemigroup& s);
std::string class_name(const ClassLabel& label);

// One line per record: "<gens> | F=<F> | E={..} | <class>".
std::string record_line(const OutputRecord& r);

std::string render_single(const NumericalSemigroup& s, Format format);
std::string render_listing(const std::vector<NumericalSemigroup>& semigroups, int frobenius,
                           Format format);
std::string render_levels(const LevelSet& set, Format format);

struct CensusRow {
    int frobenius = 0;
    std::size_t irreducible = 0;
    std::size_t ani = 0;
    std::size_t atomic = 0;
};

// CSV columns: F,irreducible,ani,atomic.
std::string render_census(const std::vector<CensusRow>& rows, bool csv);

// On-disk cache of I(F): one file per F holding a "F=<F> count=<k>" header
// and one bit string per line. Anything inconsistent on read (header, line
// count, lengths, closure) triggers a recompute and rewrite.
std::filesystem::path irreducible_cache_path(const std::filesystem::path& dir, int frobenius);
std::vector<NumericalSemigroup> cached_irreducible(int frobenius,
                                                   const std::filesystem::path& dir,
                                                   int max_frobenius = default_max_frobenius);

}  // namespace nsgp
