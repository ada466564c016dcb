#pragma once

#include <cstdint>
#include <vector>

#include "cliffdef/errors.hpp"

namespace cliffdef {

// A numerical semigroup: subset of N containing 0, closed under addition,
// with finite complement. Canonical value: minimal generators plus a
// membership bitmap on [0, conductor]. Immutable after construction.
class NumericalSemigroup {
public:
    // Semigroup generated by gens. Membership is sieved up to min*max (a valid
    // Frobenius upper bound for gcd 1), then trimmed to the true conductor.
    // Throws InvalidInput (empty / nonpositive gens) or NotNumerical (gcd != 1).
    static NumericalSemigroup from_generators(std::vector<std::int64_t> gens);

    // Semigroup from an explicit membership bitmap over [0, bits.size()),
    // where every integer >= bits.size() is a member. Validates 0 in S and
    // additive closure, then derives the minimal generating set.
    static NumericalSemigroup from_membership(std::vector<bool> bits);

    const std::vector<std::int64_t>& generators() const { return gens_; }
    std::int64_t genus() const { return genus_; }
    std::int64_t frobenius() const { return frobenius_; }  // -1 when S = N
    std::int64_t conductor() const { return conductor_; }
    std::int64_t multiplicity() const { return multiplicity_; }

    bool contains(std::int64_t x) const {
        if (x < 0) return false;
        if (x >= conductor_) return true;
        return members_[static_cast<std::size_t>(x)];
    }

    // l(x) = |S intersect [0, x]|.
    std::int64_t count_up_to(std::int64_t x) const {
        if (x < 0) return 0;
        if (x >= conductor_) return x - genus_ + 1;
        return prefix_[static_cast<std::size_t>(x)];
    }

    // The n smallest elements of S in each residue class mod n, sorted.
    // Requires n in S, n > 0.
    std::vector<std::int64_t> apery_set(std::int64_t n) const;

    // c = 2g; equivalently s in S <=> F - s not in S on [0, F].
    bool is_symmetric() const { return conductor_ == 2 * genus_; }

    // No two consecutive members in a pair fully inside [0, c-1]; the
    // terminal run starting at c never disqualifies.
    bool is_sparse() const;

    // phi(x) = F - x. Requires 0 <= x <= F and F >= 0.
    std::int64_t phi(std::int64_t x) const;

    // e(S) = m(S), where e is the size of the minimal generating set.
    bool has_max_embedding_dimension() const {
        return static_cast<std::int64_t>(gens_.size()) == multiplicity_;
    }

    // T = {s - m : s in S, s > 0} union {0}. Requires maximal embedding
    // dimension, else throws NotMaxEmbedding.
    NumericalSemigroup derived_semigroup() const;

    bool operator==(const NumericalSemigroup& o) const {
        return conductor_ == o.conductor_ && members_ == o.members_;
    }

private:
    NumericalSemigroup() = default;
    static NumericalSemigroup finalize(std::vector<bool> bits);

    std::vector<std::int64_t> gens_;
    std::vector<bool> members_;         // [0, conductor)
    std::vector<std::int64_t> prefix_;  // prefix_[x] = l(x) for x in [0, conductor)
    std::int64_t genus_ = 0;
    std::int64_t frobenius_ = -1;
    std::int64_t conductor_ = 0;
    std::int64_t multiplicity_ = 1;
};

}  // namespace cliffdef
