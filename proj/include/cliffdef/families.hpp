#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cliffdef/clifford.hpp"
#include "cliffdef/half_int.hpp"
#include "cliffdef/semigroup.hpp"

namespace cliffdef {

enum class Family {
    Interval,
    Klein,
    HermitianQuotient,
    PedersenSorensen,
    Suzuki,
    NormTrace,
    Hyperelliptic,
};

const char* family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

// One named family instance with its closed-form Clifford results.
// The semigroup is materialized only when its conductor fits conductor_cap;
// closed forms never need the bitmap.
struct FamilyResult {
    Family family = Family::Interval;
    std::vector<std::pair<std::string, std::int64_t>> params;
    std::optional<NumericalSemigroup> semigroup;
    std::int64_t genus_formula = 0;
    std::int64_t conductor_formula = 0;
    std::int64_t argmax_closed_form = 0;  // RestrictedToS domain
    std::optional<HalfInt> defect_closed_form;
};

inline constexpr std::int64_t kDefaultConductorCap = 50'000;

// S = <m, m+1, ..., m+h>, 1 <= h <= m-1.
FamilyResult interval(std::int64_t m, std::int64_t h,
                      std::int64_t conductor_cap = kDefaultConductorCap);

// S = {i(m-1) + jm : i, j in N, j != 0} union {0}, m >= 3.
FamilyResult klein(std::int64_t m, std::int64_t conductor_cap = kDefaultConductorCap);

// S = <m, q> with m | q+1, 2 <= m <= q.
FamilyResult hermitian_quotient(std::int64_t m, std::int64_t q,
                                std::int64_t conductor_cap = kDefaultConductorCap);

// S = <q, q+q0, q+t*q0, (t-1)q + t*q0 + 1> with q = t*q0^2.
// q0 and t must be both odd or both powers of two.
FamilyResult pedersen_sorensen(std::int64_t q0, std::int64_t t,
                               std::int64_t conductor_cap = kDefaultConductorCap);

// S = <q, q+q0, q+2q0, q+2q0+1> with q0 = 2^h, q = 2*q0^2.
FamilyResult suzuki(std::int64_t q0, std::int64_t conductor_cap = kDefaultConductorCap);

// S = <q^(r-1), (q^r - 1)/(q - 1)>, q >= 2, r >= 2.
FamilyResult norm_trace(std::int64_t q, std::int64_t r,
                        std::int64_t conductor_cap = kDefaultConductorCap);

// S = <2, 2g+1>, g >= 1.
FamilyResult hyperelliptic(std::int64_t g, std::int64_t conductor_cap = kDefaultConductorCap);

// Maximizer for semigroups decomposing as {0} | blocks | [c, inf) with
// nondecreasing run-lengths and nonincreasing gap-lengths. Throws
// NotMonotoneBlocks when the hypothesis fails.
std::pair<std::int64_t, HalfInt> monotone_block_maximizer(const NumericalSemigroup& s);

// O(1) membership tests via the parametrization lemmas.
bool interval_contains(std::int64_t m, std::int64_t h, std::int64_t x);
bool hermitian_quotient_contains(std::int64_t m, std::int64_t q, std::int64_t x);

// l(s) via lexicographic triple enumeration; valid for s <= g.
std::int64_t suzuki_fast_count(std::int64_t q0, std::int64_t s);

// l(s) via the parametrization with closed-form block sums; valid for s <= c.
std::int64_t norm_trace_fast_count(std::int64_t q, std::int64_t r, std::int64_t s);

}  // namespace cliffdef
