#pragma once

#include <cstdint>
#include <vector>

#include "cliffdef/half_int.hpp"
#include "cliffdef/semigroup.hpp"

namespace cliffdef {

enum class DomainKind {
    RestrictedToS,  // S intersect [0, c]
    FullInterval,   // all integers in [0, c]
};

enum class Ordering { Less, Equal, Greater };

// sigma evaluated over a domain, its maximum, and the complete argmax set.
struct CliffordProfile {
    DomainKind kind = DomainKind::RestrictedToS;
    std::vector<std::int64_t> points;
    std::vector<HalfInt> values;  // parallel to points
    HalfInt max_value;
    std::vector<std::int64_t> argmax;  // sorted, complete
};

// sigma(x) = x/2 - l(x) + 1 for x in [0, c]. Membership of x is not required.
HalfInt sigma(const NumericalSemigroup& s, std::int64_t x);

// delta(a) = a + 2*|S intersect [a, c-1]| for a in [0, c].
// Satisfies 2*sigma(a) = delta(a) - 2*|S intersect [0, c-1]| for a in S.
std::int64_t delta(const NumericalSemigroup& s, std::int64_t a);

// Exhaustive evaluation of sigma over the requested domain.
CliffordProfile profile(const NumericalSemigroup& s, DomainKind kind);

// Maximum of sigma over S intersect [0, c].
HalfInt clifford_defect(const NumericalSemigroup& s);

// Maximum of sigma over all integers in [0, c]; equals the restricted
// defect + 1/2 whenever g >= 1. This is the s(Q) used by code bounds.
HalfInt duursma_defect(const NumericalSemigroup& s);

// Ordering of sigma(s1) vs sigma(s2) via the count criterion
// |S intersect [s1+1, s2]| vs (s2 - s1)/2. Requires s1, s2 in S intersect
// [0, c] with s1 <= s2.
Ordering sigma_compare(const NumericalSemigroup& s, std::int64_t s1, std::int64_t s2);

}  // namespace cliffdef
