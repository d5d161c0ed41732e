#include "nsgp/atomic.hpp"

#include <algorithm>
#include <stdexcept>

#include "nsgp/errors.hpp"

namespace nsgp {

namespace {

// Core of the level computation with I(g2) supplied by the caller, so the
// per-F drivers enumerate it once.
AniLevelResult ani_level_from(int g1, int g2, const std::vector<NumericalSemigroup>& irr_g2,
                              bool keep_stages, int max_frobenius) {
    if (!ani_pair_feasible(g1, g2))
        throw InfeasiblePair("no numerical semigroup has special gaps {" + std::to_string(g1) +
                             ", " + std::to_string(g2) + "}");

    std::vector<GapVector> stage_a;
    for (const auto& s : enumerate_irreducible(g1, max_frobenius))
        stage_a.push_back(s.gap_vector().padded(g2));

    std::vector<GapVector> stage_b0;
    std::vector<GapVector> stage_b1;
    for (const auto& s : irr_g2)
        (s.gap_vector().is_gap(g1) ? stage_b1 : stage_b0).push_back(s.gap_vector());

    std::vector<GapVector> joins;
    joins.reserve(stage_a.size() * stage_b0.size());
    for (const auto& a : stage_a)
        for (const auto& b : stage_b0) joins.push_back(a.joined(b));
    std::vector<GapVector> stage_c = minimals(std::move(joins));

    // b v c == c means the gaps of b are among those of c, i.e. the
    // semigroup of c sits inside the one of b, which misses g1.
    AniLevelResult out;
    out.level = g1;
    out.frobenius = g2;
    for (const auto& c : stage_c) {
        bool below_b1 = false;
        for (const auto& b : stage_b1)
            if (b.componentwise_leq(c)) {
                below_b1 = true;
                break;
            }
        if (!below_b1) out.result.push_back(NumericalSemigroup::from_gap_vector(c));
    }
    if (keep_stages) {
        out.stage_a = std::move(stage_a);
        out.stage_b0 = std::move(stage_b0);
        out.stage_b1 = std::move(stage_b1);
        out.stage_c = std::move(stage_c);
    }
    return out;
}

}  // namespace

bool ani_pair_feasible(int g1, int g2) {
    if (g1 < 1 || g2 <= g1)
        throw std::invalid_argument("ani_pair_feasible: need 0 < g1 < g2");
    if (2 * g1 <= g2) return false;
    return g2 % (g2 - g1) == 0 || g2 % (2 * g1 - g2) != 0;
}

LevelSet levels(int frobenius) {
    if (frobenius < 1)
        throw std::invalid_argument("levels: Frobenius number must be >= 1");
    LevelSet out;
    out.frobenius = frobenius;
    for (int l = frobenius / 2 + 1; l < frobenius; ++l)
        if (ani_pair_feasible(l, frobenius)) out.levels.push_back(l);
    return out;
}

GapVector join(const GapVector& a, const GapVector& b) { return a.joined(b); }

GapVector pad(const GapVector& v, int length) { return v.padded(length); }

std::vector<GapVector> minimals(std::vector<GapVector> vs) {
    if (vs.empty()) return vs;
    const int n = vs.front().length();
    for (const auto& v : vs)
        if (v.length() != n) throw LengthMismatch("minimals: vector lengths differ");
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    // Any dominator precedes its dominatee lexicographically, so one pass
    // against the kept antichain suffices.
    std::vector<GapVector> out;
    for (auto& v : vs) {
        bool dominated = false;
        for (const auto& kept : out)
            if (kept.componentwise_leq(v)) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(std::move(v));
    }
    return out;
}

AniLevelResult ani_level(int g1, int g2, bool keep_stages, int max_frobenius) {
    return ani_level_from(g1, g2, enumerate_irreducible(g2, max_frobenius), keep_stages,
                          max_frobenius);
}

std::vector<NumericalSemigroup> ani_semigroups(int g1, int g2, int max_frobenius) {
    return ani_level(g1, g2, false, max_frobenius).result;
}

std::vector<NumericalSemigroup> ani_with_frobenius(int frobenius, int max_frobenius) {
    const auto irr = enumerate_irreducible(frobenius, max_frobenius);
    std::vector<NumericalSemigroup> out;
    for (int l : levels(frobenius).levels) {
        auto level = ani_level_from(l, frobenius, irr, false, max_frobenius);
        out.insert(out.end(), std::make_move_iterator(level.result.begin()),
                   std::make_move_iterator(level.result.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<NumericalSemigroup> atomic_semigroups(int frobenius, int max_frobenius) {
    const auto irr = enumerate_irreducible(frobenius, max_frobenius);
    std::vector<NumericalSemigroup> out = irr;
    for (int l : levels(frobenius).levels) {
        auto level = ani_level_from(l, frobenius, irr, false, max_frobenius);
        out.insert(out.end(), std::make_move_iterator(level.result.begin()),
                   std::make_move_iterator(level.result.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace nsgp
