#ifndef JETCOVER_MONOMIAL_HPP
#define JETCOVER_MONOMIAL_HPP

#include <string>
#include <vector>

#include "jetcover/universe.hpp"

namespace jetcover {

/// Monomial over a named variable universe, stored as a dense exponent
/// vector. The unit monomial has all exponents zero.
class Monomial {
public:
    explicit Monomial(UniversePtr universe);
    static Monomial fromExponents(UniversePtr universe, std::vector<int> exponents);
    static Monomial variable(UniversePtr universe, int index, int exp = 1);
    static Monomial squarefree(UniversePtr universe, VertexSet support);

    const Universe& universe() const { return *universe_; }
    const UniversePtr& universePtr() const { return universe_; }

    int exponent(int i) const { return exps_[i]; }
    const std::vector<int>& exponents() const { return exps_; }

    long long degree() const;
    VertexSet support() const;
    bool isUnit() const;
    bool isSquarefree() const;

    bool divides(const Monomial& other) const;

    bool operator==(const Monomial& o) const {
        return universe_->sameAs(*o.universe_) && exps_ == o.exps_;
    }

private:
    UniversePtr universe_;
    std::vector<int> exps_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial operator*(const Monomial& a, const Monomial& b);
/// Exact division; throws DomainError when b does not divide a.
Monomial divideExact(const Monomial& a, const Monomial& b);

/// Canonical generator order: higher degree first, then lexicographically
/// larger exponent vector first (earliest variable most significant).
bool monomialPrecedes(const Monomial& a, const Monomial& b);

/// `x^2*z^2` syntax; the unit monomial prints as `1`.
std::string to_string(const Monomial& m);
Monomial parseMonomial(const UniversePtr& universe, const std::string& text);

} // namespace jetcover

#endif
