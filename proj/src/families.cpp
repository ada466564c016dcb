#include "cliffdef/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace cliffdef {

namespace {

using detail::checked_add;
using detail::checked_mul;
using detail::exact_div;

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

bool is_power_of_two(std::int64_t x) { return x > 0 && (x & (x - 1)) == 0; }

std::int64_t pow_checked(std::int64_t base, std::int64_t exp) {
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

// sum_{i=0}^{n-1} floor(i/d)
std::int64_t sum_floor(std::int64_t n, std::int64_t d) {
    if (n <= 0) return 0;
    std::int64_t k = n / d, e = n % d;
    return checked_add(checked_mul(d, checked_mul(k, k - 1) / 2), checked_mul(e, k));
}

// sum_{i=0}^{n-1} ceil(i/q)
std::int64_t sum_ceil(std::int64_t n, std::int64_t q) {
    if (n <= 1) return 0;
    return checked_add(n - 1, sum_floor(n - 1, q));
}

void materialize(FamilyResult& fr, const std::vector<std::int64_t>& gens, std::int64_t cap) {
    if (fr.conductor_formula <= cap)
        fr.semigroup = NumericalSemigroup::from_generators(gens);
}

}  // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::Interval: return "interval";
        case Family::Klein: return "klein";
        case Family::HermitianQuotient: return "hermitian-quotient";
        case Family::PedersenSorensen: return "pedersen-sorensen";
        case Family::Suzuki: return "suzuki";
        case Family::NormTrace: return "norm-trace";
        case Family::Hyperelliptic: return "hyperelliptic";
    }
    return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
    for (Family f : {Family::Interval, Family::Klein, Family::HermitianQuotient,
                     Family::PedersenSorensen, Family::Suzuki, Family::NormTrace,
                     Family::Hyperelliptic})
        if (name == family_name(f)) return f;
    return std::nullopt;
}

FamilyResult interval(std::int64_t m, std::int64_t h, std::int64_t cap) {
    if (m < 2) throw InvalidInput("interval family requires m >= 2");
    if (h < 1 || h > m - 1) throw InvalidInput("interval family requires 1 <= h <= m-1");

    FamilyResult fr;
    fr.family = Family::Interval;
    fr.params = {{"m", m}, {"h", h}};

    std::int64_t lambda = ceil_div(m - 2, 2 * h);
    fr.argmax_closed_form = checked_mul(lambda, m);
    // 2*sigma = lambda(m-2) - h*lambda*(lambda-1)
    fr.defect_closed_form = HalfInt::from_twice(
        checked_mul(lambda, m - 2) - checked_mul(h, checked_mul(lambda, lambda - 1)));

    std::int64_t lam_c = ceil_div(m - 1, h);  // first block index whose run reaches the next
    fr.conductor_formula = checked_mul(lam_c, m);
    fr.genus_formula =
        checked_mul(lam_c, m - 1) - checked_mul(h, checked_mul(lam_c, lam_c - 1)) / 2;

    std::vector<std::int64_t> gens;
    for (std::int64_t g = m; g <= m + h; ++g) gens.push_back(g);
    materialize(fr, gens, cap);
    return fr;
}

FamilyResult klein(std::int64_t m, std::int64_t cap) {
    if (m < 3) throw InvalidInput("klein family requires m >= 3");

    FamilyResult fr;
    fr.family = Family::Klein;
    fr.params = {{"m", m}};

    std::int64_t up = (m - 1 + 1) / 2;    // ceil((m-1)/2)
    std::int64_t down = (m - 1) / 2;      // floor((m-1)/2)
    fr.argmax_closed_form = checked_mul(up, m - 1) + 1;
    fr.defect_closed_form = HalfInt::from_twice(checked_mul(up, down + 1) - 1);
    fr.genus_formula = checked_mul(m, m - 1) / 2;
    fr.conductor_formula = checked_mul(m - 2, m - 1) + m;  // c(T) + m with T = <m-1, m>

    if (fr.conductor_formula <= cap) {
        // Built from the element-set description, not a generator list.
        std::size_t size = static_cast<std::size_t>(fr.conductor_formula);
        std::vector<bool> bits(size, false);
        bits[0] = true;
        for (std::int64_t j = 1; j * m < fr.conductor_formula; ++j)
            for (std::int64_t i = 0; i * (m - 1) + j * m < fr.conductor_formula; ++i)
                bits[static_cast<std::size_t>(i * (m - 1) + j * m)] = true;
        fr.semigroup = NumericalSemigroup::from_membership(std::move(bits));
    }
    return fr;
}

FamilyResult hermitian_quotient(std::int64_t m, std::int64_t q, std::int64_t cap) {
    if (m < 2 || q <= m) throw InvalidInput("hermitian quotient requires 2 <= m < q");
    if ((q + 1) % m != 0)
        throw InvalidInput("hermitian quotient requires m | q+1");
    std::int64_t r = (q + 1) / m;

    FamilyResult fr;
    fr.family = Family::HermitianQuotient;
    fr.params = {{"m", m}, {"q", q}};
    fr.conductor_formula = checked_mul(m - 1, q - 1);
    fr.genus_formula = fr.conductor_formula / 2;

    std::int64_t half_up = (m + 1) / 2;  // ceil(m/2)
    fr.argmax_closed_form = checked_mul(q, half_up - 1);
    if (m == 2) {
        // The general closed form fails here; the true restricted
        // maximum is 0, attained at 0 (among other even points).
        fr.argmax_closed_form = 0;
        fr.defect_closed_form = HalfInt::from_twice(0);
    } else {
        // 2*sigma = (ceil(m/2) - 1)(q - r*ceil(m/2))
        fr.defect_closed_form = HalfInt::from_twice(
            checked_mul(half_up - 1, q - checked_mul(r, half_up)));
    }
    materialize(fr, {m, q}, cap);
    return fr;
}

FamilyResult suzuki(std::int64_t q0, std::int64_t cap) {
    if (!is_power_of_two(q0) || q0 < 2)
        throw InvalidInput("suzuki family requires q0 a power of 2, q0 >= 2");
    std::int64_t q = checked_mul(2, checked_mul(q0, q0));

    FamilyResult fr;
    fr.family = Family::Suzuki;
    fr.params = {{"q0", q0}};
    fr.genus_formula = checked_mul(q0, q - 1);
    fr.conductor_formula = checked_mul(2, fr.genus_formula);
    fr.argmax_closed_form = checked_mul(q0 - 1, q + q0);  // = g - q/2
    fr.defect_closed_form = HalfInt::from_int(
        exact_div(checked_mul(q0, checked_mul(4, q) - 3 * q0 - 8), 12));
    materialize(fr, {q, q + q0, q + 2 * q0, q + 2 * q0 + 1}, cap);
    return fr;
}

FamilyResult pedersen_sorensen(std::int64_t q0, std::int64_t t, std::int64_t cap) {
    if (q0 < 2 || t < 2) throw InvalidInput("pedersen-sorensen requires q0 >= 2 and t >= 2");
    bool both_odd = (q0 % 2 == 1) && (t % 2 == 1);
    bool both_even = is_power_of_two(q0) && is_power_of_two(t);
    if (!both_odd && !both_even)
        throw UnsupportedParameters(
            "pedersen-sorensen requires q0, t both odd or both powers of 2");

    std::int64_t q = checked_mul(t, checked_mul(q0, q0));

    FamilyResult fr;
    fr.family = Family::PedersenSorensen;
    fr.params = {{"q0", q0}, {"t", t}};
    fr.genus_formula = exact_div(checked_mul(q, q - 1), 2 * q0);
    fr.conductor_formula = checked_mul(2, fr.genus_formula);  // telescopic, hence symmetric
    fr.argmax_closed_form = both_odd ? fr.genus_formula : fr.genus_formula - q / 2;
    if (t == 2) fr.defect_closed_form = suzuki(q0, 0).defect_closed_form;

    materialize(fr,
                {q, q + q0, checked_add(q, checked_mul(t, q0)),
                 checked_add(checked_mul(t - 1, q), checked_mul(t, q0) + 1)},
                cap);
    return fr;
}

FamilyResult norm_trace(std::int64_t q, std::int64_t r, std::int64_t cap) {
    if (q < 2 || r < 2) throw InvalidInput("norm-trace requires q >= 2 and r >= 2");

    std::int64_t qr1 = pow_checked(q, r - 1);
    std::int64_t second = exact_div(pow_checked(q, r) - 1, q - 1);

    FamilyResult fr;
    fr.family = Family::NormTrace;
    fr.params = {{"q", q}, {"r", r}};
    fr.genus_formula = exact_div(checked_mul(q, checked_mul(qr1 - 1, qr1 - 1)), 2 * (q - 1));
    fr.conductor_formula = checked_mul(2, fr.genus_formula);  // symmetric (two generators)

    std::int64_t denom = 4 * (q - 1);  // for twice-values
    if (q % 2 == 1) {
        fr.argmax_closed_form = fr.genus_formula;
        if (r % 2 == 0) {
            fr.defect_closed_form = HalfInt::from_twice(exact_div(
                pow_checked(q, 2 * r - 1) - 4 * pow_checked(q, r) + 2 * qr1 + q * q + q - 1,
                denom));
        } else {
            fr.defect_closed_form = HalfInt::from_twice(exact_div(
                pow_checked(q, 2 * r - 1) + pow_checked(q, 2 * r - 4) - pow_checked(q, 2 * r - 6) -
                    4 * pow_checked(q, r) + 3 * pow_checked(q, r - 3) + q * q + 3 * q - 4,
                denom));
        }
    } else {
        fr.argmax_closed_form = fr.genus_formula - qr1 / 2;
        fr.defect_closed_form = HalfInt::from_twice(exact_div(
            checked_mul(q, pow_checked(q, 2 * r - 2) - 4 * qr1 + 2 * pow_checked(q, r - 2) + q),
            denom));
    }
    materialize(fr, {qr1, second}, cap);
    return fr;
}

FamilyResult hyperelliptic(std::int64_t g, std::int64_t cap) {
    if (g < 1) throw InvalidInput("hyperelliptic family requires g >= 1");

    FamilyResult fr;
    fr.family = Family::Hyperelliptic;
    fr.params = {{"g", g}};
    fr.genus_formula = g;
    fr.conductor_formula = 2 * g;
    // Sparse, so sigma is maximized at c; all even points of [0, 2g] tie at 0.
    fr.argmax_closed_form = 2 * g;
    fr.defect_closed_form = HalfInt::from_twice(0);
    materialize(fr, {2, 2 * g + 1}, cap);
    return fr;
}

std::pair<std::int64_t, HalfInt> monotone_block_maximizer(const NumericalSemigroup& s) {
    std::int64_t c = s.conductor();
    if (c == 0) return {0, HalfInt{}};

    // Maximal member blocks inside [1, c-1].
    std::vector<std::pair<std::int64_t, std::int64_t>> blocks;
    std::int64_t x = 1;
    while (x < c) {
        if (!s.contains(x)) {
            ++x;
            continue;
        }
        std::int64_t a = x;
        while (x < c && s.contains(x)) ++x;
        blocks.emplace_back(a, x - 1);
    }

    std::int64_t r = static_cast<std::int64_t>(blocks.size());
    auto a_of = [&](std::int64_t i) { return i == 0 ? 0 : blocks[i - 1].first; };
    auto b_of = [&](std::int64_t i) { return i == 0 ? 0 : blocks[i - 1].second; };
    auto len = [&](std::int64_t i) { return b_of(i) - a_of(i) + 1; };
    auto gap = [&](std::int64_t i) {
        std::int64_t next = i == r ? c : a_of(i + 1);
        return next - b_of(i) - 1;
    };
    for (std::int64_t i = 0; i < r; ++i) {
        if (len(i) > len(i + 1))
            throw NotMonotoneBlocks("run lengths not nondecreasing at block " + std::to_string(i));
        if (gap(i) < gap(i + 1))
            throw NotMonotoneBlocks("gap lengths not nonincreasing at block " + std::to_string(i));
    }

    for (std::int64_t j = 1; j <= r; ++j) {
        if (len(j) >= gap(j)) {
            std::int64_t run_sum = 0;
            for (std::int64_t i = 1; i < j; ++i) run_sum += len(i);
            return {a_of(j), HalfInt::from_twice(a_of(j) - 2 * run_sum - 2)};
        }
    }
    // No interior block qualifies: the maximum sits at the conductor.
    return {c, HalfInt::from_twice(2 * s.genus() - c)};
}

bool interval_contains(std::int64_t m, std::int64_t h, std::int64_t x) {
    if (x < 0) return false;
    if (x == 0) return true;
    return x % m <= checked_mul(h, x / m);
}

bool hermitian_quotient_contains(std::int64_t m, std::int64_t q, std::int64_t x) {
    if (x < 0) return false;
    std::int64_t r = (q + 1) / m;
    std::int64_t lam2 = (m - x % m) % m;
    std::int64_t lam1 = (x + lam2) / m;
    return checked_mul(r, lam2) <= lam1;
}

std::int64_t suzuki_fast_count(std::int64_t q0, std::int64_t s) {
    if (!is_power_of_two(q0) || q0 < 2)
        throw InvalidInput("suzuki_fast_count requires q0 a power of 2, q0 >= 2");
    std::int64_t q = 2 * q0 * q0;
    std::int64_t g = q0 * (q - 1);
    if (s > g) throw InvalidInput("suzuki_fast_count is valid only for s <= g");
    if (s < 0) return 0;

    std::int64_t count = 0;
    for (std::int64_t l1 = 0; l1 * q <= s; ++l1) {
        std::int64_t l2_hi = std::min<std::int64_t>(2 * l1, (s - l1 * q) / q0);
        for (std::int64_t l2 = 0; l2 <= l2_hi; ++l2) {
            std::int64_t rem = s - l1 * q - l2 * q0;
            count += std::min(l2 / 2, rem) + 1;
        }
    }
    return count;
}

std::int64_t norm_trace_fast_count(std::int64_t q, std::int64_t r, std::int64_t s) {
    if (q < 2 || r < 2) throw InvalidInput("norm_trace_fast_count requires q >= 2 and r >= 2");
    if (s < 0) return 0;
    std::int64_t A = exact_div(pow_checked(q, r - 1) - 1, q - 1);
    std::int64_t g = exact_div(
        checked_mul(q, checked_mul(pow_checked(q, r - 1) - 1, pow_checked(q, r - 1) - 1)),
        2 * (q - 1));
    std::int64_t c = 2 * g;
    if (s >= c) return s - g + 1;

    // Elements with first coordinate l1 form the value block
    // [l1*A + ceil(l1/q), l1*A + floor(l1/(q-1))]; the block minimum is
    // strictly increasing, so binary-search the last block that starts <= s.
    auto block_min = [&](std::int64_t l1) { return l1 * A + ceil_div(l1, q); };
    std::int64_t lo = 0, hi = s / A + 1;
    while (lo < hi) {
        std::int64_t mid = (lo + hi + 1) / 2;
        if (block_min(mid) <= s)
            lo = mid;
        else
            hi = mid - 1;
    }
    std::int64_t l1 = lo;

    if (l1 > 0 && (l1 - 1) * A + (l1 - 1) / (q - 1) > s)
        throw std::logic_error("norm-trace block ordering violated");

    // Closed-form count of the full blocks before l1.
    std::int64_t full = sum_floor(l1, q - 1) - sum_ceil(l1, q) + l1;
    std::int64_t partial =
        std::min(l1 / (q - 1), s - l1 * A) - ceil_div(l1, q) + 1;
    return full + partial;
}

}  // namespace cliffdef
