#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "cliffdef/half_int.hpp"
#include "cliffdef/semigroup.hpp"

namespace cliffdef {

// Dimension lower bounds for the one-point code with pole divisor m*Q,
// where S is the Weierstrass semigroup at Q.
struct CodeBoundReport {
    std::int64_t m = 0;
    std::int64_t genus = 0;
    HalfInt duursma;  // s(Q), the full-domain defect

    std::int64_t rr_raw = 0;  // m - g + 1, possibly <= 0
    std::int64_t rr_bound = 0;
    HalfInt clifford_raw;  // m/2 + 1 - s(Q)
    std::int64_t clifford_bound = 0;
    std::int64_t exact_dimension = 0;  // l(m)

    enum class Winner { RiemannRoch, Clifford, Tie };
    Winner winner = Winner::Tie;

    // m-range where the Clifford bound improves Riemann-Roch:
    // s(Q) - 1 <= m/2 <= g - s(Q) - 1, as a closed integer interval.
    std::optional<std::pair<std::int64_t, std::int64_t>> clifford_wins_interval;
};

CodeBoundReport bound_report(const NumericalSemigroup& s, std::int64_t m);

// ceil((d-1)/2) - s(Q) before flooring; may be negative or half-integral.
HalfInt ma_capability_raw(const NumericalSemigroup& s, std::int64_t d);

// Correctable error count of the Modified Algorithm: the raw value rounded
// down to an integer and floored at 0. Requires d >= 1.
std::int64_t ma_capability(const NumericalSemigroup& s, std::int64_t d);

}  // namespace cliffdef
