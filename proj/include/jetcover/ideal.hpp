#ifndef JETCOVER_IDEAL_HPP
#define JETCOVER_IDEAL_HPP

#include <vector>

#include "jetcover/monomial.hpp"

namespace jetcover {

/// Monomial ideal held as its unique minimal generating set: a divisibility
/// antichain, sorted in the canonical generator order.
class MonomialIdeal {
public:
    static MonomialIdeal zero(UniversePtr universe);
    static MonomialIdeal unitIdeal(UniversePtr universe);

    /// Drops every generator divisible by another one, deduplicates, sorts.
    /// All generators must live in the given universe.
    static MonomialIdeal make(UniversePtr universe, std::vector<Monomial> generators);

    const Universe& universe() const { return *universe_; }
    const UniversePtr& universePtr() const { return universe_; }
    const std::vector<Monomial>& generators() const { return gens_; }

    bool isZero() const { return gens_.empty(); }
    bool isUnit() const { return gens_.size() == 1 && gens_[0].isUnit(); }
    bool isProper() const { return !isUnit(); }
    bool isSquarefree() const;

    bool contains(const Monomial& m) const;
    bool containsIdeal(const MonomialIdeal& other) const;

    bool operator==(const MonomialIdeal& o) const {
        return universe_->sameAs(*o.universe_) && gens_ == o.gens_;
    }

private:
    MonomialIdeal(UniversePtr universe, std::vector<Monomial> gens);
    UniversePtr universe_;
    std::vector<Monomial> gens_;
};

/// Free-function form of MonomialIdeal::make.
MonomialIdeal minimalize(UniversePtr universe, std::vector<Monomial> generators);

/// Set-theoretic intersection, via pairwise lcm expansion.
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// Ordinary ideal power, k >= 1.
MonomialIdeal power(const MonomialIdeal& a, int k);

/// Colon ideal a : b. By convention a : 0 is the unit ideal (the whole
/// ring); callers who care can test b.isZero() first.
MonomialIdeal quotient(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal quotientByMonomial(const MonomialIdeal& a, const Monomial& m);

} // namespace jetcover

#endif
