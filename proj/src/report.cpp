#include "nsgp/report.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "nsgp/errors.hpp"

namespace nsgp {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string join_ints(const std::vector<int>& xs, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

ordered_json record_json(const OutputRecord& r) {
    ordered_json j;
    j["frobenius"] = r.frobenius;
    j["vector"] = r.vector;
    j["gaps"] = r.gaps;
    j["generators"] = r.generators;
    j["multiplicity"] = r.multiplicity;
    j["special_gaps"] = r.special_gaps;
    j["class"] = r.cls;
    return j;
}

constexpr const char* listing_csv_header =
    "frobenius,vector,gaps,generators,multiplicity,special_gaps,class";

std::string record_csv(const OutputRecord& r) {
    std::string out;
    out += std::to_string(r.frobenius);
    out += ',';
    out += r.vector;
    out += ',';
    out += join_ints(r.gaps, " ");
    out += ',';
    out += join_ints(r.generators, " ");
    out += ',';
    out += std::to_string(r.multiplicity);
    out += ',';
    out += join_ints(r.special_gaps, " ");
    out += ',';
    out += r.cls;
    return out;
}

}  // namespace

Format parse_format(const std::string& name) {
    if (name == "text") return Format::text;
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    throw std::invalid_argument("unknown format '" + name + "' (expected text, json or csv)");
}

std::string class_name(const ClassLabel& label) {
    if (label.is_irreducible)
        return label.parity == ParityClass::symmetric ? "irreducible-symmetric"
                                                      : "irreducible-pseudosymmetric";
    if (label.is_ani) return "ani";
    return "non-atomic";
}

OutputRecord make_record(const NumericalSemigroup& s) {
    OutputRecord r;
    r.frobenius = s.frobenius();
    r.vector = s.gap_vector().to_string();
    r.gaps = s.gaps();
    r.generators = s.minimal_generators();
    r.multiplicity = s.multiplicity();
    r.special_gaps = s.special_gaps();
    r.cls = class_name(s.classify());
    return r;
}

std::string record_line(const OutputRecord& r) {
    return "<" + join_ints(r.generators, ",") + "> | F=" + std::to_string(r.frobenius) +
           " | E={" + join_ints(r.special_gaps, ",") + "} | " + r.cls;
}

std::string render_single(const NumericalSemigroup& s, Format format) {
    const OutputRecord r = make_record(s);
    switch (format) {
        case Format::text:
            return record_line(r) + "\n";
        case Format::json:
            return record_json(r).dump(2) + "\n";
        case Format::csv:
            return std::string(listing_csv_header) + "\n" + record_csv(r) + "\n";
    }
    return {};
}

std::string render_listing(const std::vector<NumericalSemigroup>& semigroups, int frobenius,
                           Format format) {
    switch (format) {
        case Format::text: {
            std::string out;
            for (const auto& s : semigroups) out += record_line(make_record(s)) + "\n";
            return out;
        }
        case Format::json: {
            ordered_json j;
            j["frobenius"] = frobenius;
            j["count"] = semigroups.size();
            j["semigroups"] = ordered_json::array();
            for (const auto& s : semigroups) j["semigroups"].push_back(record_json(make_record(s)));
            return j.dump(2) + "\n";
        }
        case Format::csv: {
            std::string out = listing_csv_header;
            out += '\n';
            for (const auto& s : semigroups) out += record_csv(make_record(s)) + "\n";
            return out;
        }
    }
    return {};
}

std::string render_levels(const LevelSet& set, Format format) {
    switch (format) {
        case Format::text:
            return set.levels.empty() ? std::string{} : join_ints(set.levels, " ") + "\n";
        case Format::json: {
            ordered_json j;
            j["frobenius"] = set.frobenius;
            j["levels"] = set.levels;
            return j.dump(2) + "\n";
        }
        case Format::csv: {
            std::string out = "level\n";
            for (int l : set.levels) out += std::to_string(l) + "\n";
            return out;
        }
    }
    return {};
}

std::string render_census(const std::vector<CensusRow>& rows, bool csv) {
    std::ostringstream out;
    if (csv) {
        out << "F,irreducible,ani,atomic\n";
        for (const auto& r : rows)
            out << r.frobenius << ',' << r.irreducible << ',' << r.ani << ',' << r.atomic << '\n';
    } else {
        out << "F irreducible ani atomic\n";
        for (const auto& r : rows)
            out << r.frobenius << ' ' << r.irreducible << ' ' << r.ani << ' ' << r.atomic << '\n';
    }
    return out.str();
}

std::filesystem::path irreducible_cache_path(const std::filesystem::path& dir, int frobenius) {
    return dir / ("irreducible-" + std::to_string(frobenius) + ".txt");
}

namespace {

std::optional<std::vector<NumericalSemigroup>> try_read_cache(const std::filesystem::path& file,
                                                              int frobenius) {
    std::ifstream in(file);
    if (!in) return std::nullopt;
    std::string header;
    if (!std::getline(in, header)) return std::nullopt;
    // expected: F=<F> count=<k>
    if (header.rfind("F=", 0) != 0) return std::nullopt;
    const std::size_t space = header.find(' ');
    if (space == std::string::npos || header.compare(space + 1, 6, "count=") != 0)
        return std::nullopt;
    int f = 0;
    std::size_t count = 0;
    try {
        f = std::stoi(header.substr(2, space - 2));
        count = std::stoul(header.substr(space + 7));
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (f != frobenius) return std::nullopt;

    std::vector<NumericalSemigroup> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (static_cast<int>(line.size()) != frobenius) return std::nullopt;
        try {
            auto s = NumericalSemigroup::from_bit_string(line);
            if (s.frobenius() != frobenius) return std::nullopt;
            out.push_back(std::move(s));
        } catch (const Error&) {
            return std::nullopt;
        }
    }
    if (out.size() != count) return std::nullopt;
    std::sort(out.begin(), out.end());
    return out;
}

void write_cache(const std::filesystem::path& file, int frobenius,
                 const std::vector<NumericalSemigroup>& list) {
    std::filesystem::create_directories(file.parent_path());
    std::ofstream out(file, std::ios::trunc);
    if (!out) throw Error("cannot write cache file " + file.string());
    out << "F=" << frobenius << " count=" << list.size() << "\n";
    for (const auto& s : list) out << s.gap_vector().to_string() << "\n";
}

}  // namespace

std::vector<NumericalSemigroup> cached_irreducible(int frobenius,
                                                   const std::filesystem::path& dir,
                                                   int max_frobenius) {
    const auto file = irreducible_cache_path(dir, frobenius);
    if (auto cached = try_read_cache(file, frobenius)) return *cached;
    auto fresh = enumerate_irreducible(frobenius, max_frobenius);
    write_cache(file, frobenius, fresh);
    return fresh;
}

}  // namespace nsgp
