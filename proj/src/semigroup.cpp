#include "cliffdef/semigroup.hpp"

#include <algorithm>
#include <numeric>

#include "cliffdef/half_int.hpp"

namespace cliffdef {

namespace {

// Minimal generating set from the membership bitmap. Candidates are the
// multiplicity and the nonzero Apery elements w.r.t. it; a candidate is a
// generator iff it is not a sum of two nonzero members.
std::vector<std::int64_t> minimal_generators(const NumericalSemigroup& s) {
    if (s.conductor() == 0) return {1};
    std::int64_t m = s.multiplicity();
    std::vector<std::int64_t> gens{m};
    for (std::int64_t w : s.apery_set(m)) {
        if (w == 0) continue;
        bool decomposable = false;
        for (std::int64_t a = m; 2 * a <= w; ++a) {
            if (s.contains(a) && s.contains(w - a)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) gens.push_back(w);
    }
    std::sort(gens.begin(), gens.end());
    return gens;
}

}  // namespace

NumericalSemigroup NumericalSemigroup::finalize(std::vector<bool> bits) {
    // Trim to [0, conductor): drop the trailing all-member run.
    std::size_t end = bits.size();
    while (end > 0 && bits[end - 1]) --end;
    bits.resize(end);

    NumericalSemigroup s;
    s.conductor_ = static_cast<std::int64_t>(end);
    s.frobenius_ = s.conductor_ - 1;
    s.members_ = std::move(bits);

    s.prefix_.resize(s.members_.size());
    std::int64_t count = 0;
    for (std::size_t i = 0; i < s.members_.size(); ++i) {
        if (s.members_[i]) ++count;
        s.prefix_[i] = count;
    }
    s.genus_ = s.conductor_ - count;

    s.multiplicity_ = 1;
    for (std::int64_t x = 1; x < s.conductor_; ++x) {
        if (s.members_[static_cast<std::size_t>(x)]) {
            s.multiplicity_ = x;
            break;
        }
        if (x == s.conductor_ - 1) s.multiplicity_ = s.conductor_;
    }
    if (s.conductor_ <= 1) s.multiplicity_ = std::max<std::int64_t>(1, s.conductor_);

    s.gens_ = minimal_generators(s);
    return s;
}

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<std::int64_t> gens) {
    if (gens.empty()) throw InvalidInput("generator list is empty");
    for (std::int64_t g : gens)
        if (g <= 0) throw InvalidInput("generators must be positive, got " + std::to_string(g));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    std::int64_t d = 0;
    for (std::int64_t g : gens) d = std::gcd(d, g);
    if (d != 1)
        throw NotNumerical("not a numerical semigroup (gcd " + std::to_string(d) + ")");

    // Sieve up to min*max, stopping once a full run of min(gens) consecutive
    // members shows everything beyond is a member.
    std::int64_t lo = gens.front(), hi = gens.back();
    std::int64_t bound = detail::checked_add(detail::checked_mul(lo, hi), 1);
    std::vector<bool> bits;
    bits.reserve(static_cast<std::size_t>(std::min<std::int64_t>(bound, 1 << 20)));
    bits.push_back(true);  // 0 in S
    std::int64_t run = lo == 1 ? 1 : 0;
    for (std::int64_t x = 1; x < bound && run < lo; ++x) {
        bool in = false;
        for (std::int64_t g : gens) {
            if (g > x) break;
            if (bits[static_cast<std::size_t>(x - g)]) {
                in = true;
                break;
            }
        }
        bits.push_back(in);
        run = in ? run + 1 : 0;
    }
    return finalize(std::move(bits));
}

NumericalSemigroup NumericalSemigroup::from_membership(std::vector<bool> bits) {
    if (bits.empty() || !bits[0]) throw InvalidInput("membership bitmap must contain 0");
    // Additive closure on the stored range.
    std::int64_t n = static_cast<std::int64_t>(bits.size());
    for (std::int64_t a = 1; a < n; ++a) {
        if (!bits[static_cast<std::size_t>(a)]) continue;
        for (std::int64_t b = a; a + b < n; ++b) {
            if (bits[static_cast<std::size_t>(b)] && !bits[static_cast<std::size_t>(a + b)])
                throw NotNumerical("membership bitmap is not closed under addition at " +
                                   std::to_string(a + b));
        }
    }
    return finalize(std::move(bits));
}

std::vector<std::int64_t> NumericalSemigroup::apery_set(std::int64_t n) const {
    if (n <= 0 || !contains(n))
        throw InvalidInput("Apery set requires a positive element of S, got " + std::to_string(n));
    std::vector<std::int64_t> result;
    result.reserve(static_cast<std::size_t>(n));
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::int64_t found = 0;
    for (std::int64_t x = 0; found < n; ++x) {
        if (!contains(x)) continue;
        std::size_t r = static_cast<std::size_t>(x % n);
        if (!seen[r]) {
            seen[r] = true;
            result.push_back(x);
            ++found;
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

bool NumericalSemigroup::is_sparse() const {
    for (std::int64_t x = 0; x + 1 <= conductor_ - 1; ++x) {
        if (members_[static_cast<std::size_t>(x)] && members_[static_cast<std::size_t>(x + 1)])
            return false;
    }
    return true;
}

std::int64_t NumericalSemigroup::phi(std::int64_t x) const {
    if (frobenius_ < 0) throw InvalidInput("phi is undefined for S = N");
    if (x < 0 || x > frobenius_)
        throw InvalidInput("phi argument " + std::to_string(x) + " outside [0, F]");
    return frobenius_ - x;
}

NumericalSemigroup NumericalSemigroup::derived_semigroup() const {
    if (!has_max_embedding_dimension())
        throw NotMaxEmbedding("semigroup does not have maximal embedding dimension");
    std::int64_t m = multiplicity_;
    // T member x <=> x == 0 or x + m in S; tail all true from conductor - m on.
    std::int64_t span = std::max<std::int64_t>(conductor_ - m, 0) + 1;
    std::vector<bool> bits(static_cast<std::size_t>(span), false);
    bits[0] = true;
    for (std::int64_t x = 1; x < span; ++x)
        bits[static_cast<std::size_t>(x)] = contains(x + m);
    return finalize(std::move(bits));
}

}  // namespace cliffdef
