#include "cliffdef/clifford.hpp"

#include <stdexcept>

namespace cliffdef {

namespace {

void require_in_domain(const NumericalSemigroup& s, std::int64_t x, const char* what) {
    if (x < 0 || x > s.conductor())
        throw InvalidInput(std::string(what) + " argument " + std::to_string(x) +
                           " outside [0, " + std::to_string(s.conductor()) + "]");
}

}  // namespace

HalfInt sigma(const NumericalSemigroup& s, std::int64_t x) {
    require_in_domain(s, x, "sigma");
    // 2*sigma(x) = x - 2 l(x) + 2
    return HalfInt::from_twice(x - 2 * s.count_up_to(x) + 2);
}

std::int64_t delta(const NumericalSemigroup& s, std::int64_t a) {
    require_in_domain(s, a, "delta");
    std::int64_t in_range = s.count_up_to(s.conductor() - 1) - s.count_up_to(a - 1);
    return a + 2 * in_range;
}

CliffordProfile profile(const NumericalSemigroup& s, DomainKind kind) {
    CliffordProfile p;
    p.kind = kind;
    std::int64_t c = s.conductor();
    for (std::int64_t x = 0; x <= c; ++x) {
        if (kind == DomainKind::RestrictedToS && !s.contains(x)) continue;
        p.points.push_back(x);
        p.values.push_back(sigma(s, x));
    }
    p.max_value = p.values.front();
    for (const HalfInt& v : p.values)
        if (v > p.max_value) p.max_value = v;
    for (std::size_t i = 0; i < p.points.size(); ++i)
        if (p.values[i] == p.max_value) p.argmax.push_back(p.points[i]);

    // Internal checks of the structural theorems; violations mean a bug.
    if (kind == DomainKind::RestrictedToS && c > 0) {
        bool upper_half = false;
        for (std::int64_t a : p.argmax)
            if (2 * a >= c) upper_half = true;
        if (!upper_half) throw std::logic_error("argmax misses [c/2, c]");
        for (std::int64_t a : p.argmax)
            if (a > 0 && s.contains(a - 1))
                throw std::logic_error("argmax point with predecessor in S");
        if (s.is_symmetric()) {
            std::int64_t g = s.genus(), m = s.multiplicity();
            std::int64_t lo = g - (m + 1) / 2;
            bool in_window = false;
            for (std::int64_t a : p.argmax)
                if (a >= lo && a <= g) in_window = true;
            if (!in_window) throw std::logic_error("symmetric argmax misses [g - ceil(m/2), g]");
        }
    }
    return p;
}

HalfInt clifford_defect(const NumericalSemigroup& s) {
    return profile(s, DomainKind::RestrictedToS).max_value;
}

HalfInt duursma_defect(const NumericalSemigroup& s) {
    return profile(s, DomainKind::FullInterval).max_value;
}

Ordering sigma_compare(const NumericalSemigroup& s, std::int64_t s1, std::int64_t s2) {
    if (s1 > s2) throw InvalidInput("sigma_compare requires s1 <= s2");
    require_in_domain(s, s1, "sigma_compare");
    require_in_domain(s, s2, "sigma_compare");
    if (!s.contains(s1) || !s.contains(s2))
        throw InvalidInput("sigma_compare arguments must be members of S");
    // sigma(s1) <= sigma(s2) iff |S cap [s1+1, s2]| <= (s2 - s1)/2
    std::int64_t between = s.count_up_to(s2) - s.count_up_to(s1);
    std::int64_t twice_gap = s2 - s1;
    if (2 * between < twice_gap) return Ordering::Less;
    if (2 * between > twice_gap) return Ordering::Greater;
    return Ordering::Equal;
}

}  // namespace cliffdef
