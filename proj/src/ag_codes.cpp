#include "cliffdef/ag_codes.hpp"

#include <algorithm>

#include "cliffdef/clifford.hpp"

namespace cliffdef {

CodeBoundReport bound_report(const NumericalSemigroup& s, std::int64_t m) {
    if (m < 0) throw InvalidInput("bound_report requires m >= 0");
    CodeBoundReport rep;
    rep.m = m;
    rep.genus = s.genus();
    rep.duursma = duursma_defect(s);

    rep.rr_raw = m - rep.genus + 1;
    rep.clifford_raw = HalfInt::from_twice(m + 2 - rep.duursma.twice);
    rep.exact_dimension = s.count_up_to(m);

    // Clamp to >= 1 for m in S (l(m) >= 1 there), >= 0 generally.
    std::int64_t floor_at = s.contains(m) ? 1 : 0;
    rep.rr_bound = std::max(rep.rr_raw, floor_at);
    rep.clifford_bound = std::max(rep.clifford_raw.ceil(), floor_at);

    HalfInt rr_half = HalfInt::from_int(rep.rr_raw);
    if (rep.clifford_raw > rr_half)
        rep.winner = CodeBoundReport::Winner::Clifford;
    else if (rep.clifford_raw < rr_half)
        rep.winner = CodeBoundReport::Winner::RiemannRoch;
    else
        rep.winner = CodeBoundReport::Winner::Tie;

    // s(Q) - 1 <= m/2 <= g - s(Q) - 1 as a closed integer interval.
    std::int64_t lo = std::max<std::int64_t>(0, rep.duursma.twice - 2);
    std::int64_t hi = 2 * rep.genus - rep.duursma.twice - 2;
    if (lo <= hi) rep.clifford_wins_interval = {lo, hi};
    return rep;
}

HalfInt ma_capability_raw(const NumericalSemigroup& s, std::int64_t d) {
    if (d < 1) throw InvalidInput("ma_capability requires d >= 1");
    std::int64_t half_dist = (d - 1 + 1) / 2;  // ceil((d-1)/2)
    return HalfInt::from_int(half_dist) - duursma_defect(s);
}

std::int64_t ma_capability(const NumericalSemigroup& s, std::int64_t d) {
    return std::max<std::int64_t>(0, ma_capability_raw(s, d).floor());
}

}  // namespace cliffdef
