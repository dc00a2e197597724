#include "jetcover/monomial.hpp"

#include <algorithm>
#include <charconv>

namespace jetcover {

namespace {
constexpr int kMaxExponent = 1 << 30;
}

Monomial::Monomial(UniversePtr universe)
    : universe_(std::move(universe)), exps_(universe_->size(), 0) {}

Monomial Monomial::fromExponents(UniversePtr universe, std::vector<int> exponents) {
    if (exponents.size() != static_cast<std::size_t>(universe->size()))
        throw DomainError("exponent vector length does not match the universe");
    for (int e : exponents)
        if (e < 0 || e > kMaxExponent) throw DomainError("exponent out of range");
    Monomial m(std::move(universe));
    m.exps_ = std::move(exponents);
    return m;
}

Monomial Monomial::variable(UniversePtr universe, int index, int exp) {
    if (index < 0 || index >= universe->size()) throw DomainError("variable index out of range");
    if (exp < 1 || exp > kMaxExponent) throw DomainError("exponent out of range");
    Monomial m(std::move(universe));
    m.exps_[index] = exp;
    return m;
}

Monomial Monomial::squarefree(UniversePtr universe, VertexSet support) {
    Monomial m(std::move(universe));
    support.forEach([&](int i) { m.exps_.at(i) = 1; });
    return m;
}

long long Monomial::degree() const {
    long long d = 0;
    for (int e : exps_) d += e;
    return d;
}

VertexSet Monomial::support() const {
    VertexSet s;
    for (int i = 0; i < static_cast<int>(exps_.size()); ++i)
        if (exps_[i] > 0) s.add(i);
    return s;
}

bool Monomial::isUnit() const {
    for (int e : exps_)
        if (e != 0) return false;
    return true;
}

bool Monomial::isSquarefree() const {
    for (int e : exps_)
        if (e > 1) return false;
    return true;
}

bool Monomial::divides(const Monomial& other) const {
    requireSameUniverse(*universe_, other.universe(), "divides");
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    requireSameUniverse(a.universe(), b.universe(), "lcm");
    std::vector<int> e(a.exponents());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], b.exponent(i));
    return Monomial::fromExponents(a.universePtr(), std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    requireSameUniverse(a.universe(), b.universe(), "gcd");
    std::vector<int> e(a.exponents());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], b.exponent(i));
    return Monomial::fromExponents(a.universePtr(), std::move(e));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    requireSameUniverse(a.universe(), b.universe(), "product");
    std::vector<int> e(a.exponents());
    for (std::size_t i = 0; i < e.size(); ++i) {
        long long sum = static_cast<long long>(e[i]) + b.exponent(i);
        if (sum > kMaxExponent) throw OverflowError("monomial exponent overflow");
        e[i] = static_cast<int>(sum);
    }
    return Monomial::fromExponents(a.universePtr(), std::move(e));
}

Monomial divideExact(const Monomial& a, const Monomial& b) {
    requireSameUniverse(a.universe(), b.universe(), "division");
    if (!b.divides(a)) throw DomainError("monomial division is not exact");
    std::vector<int> e(a.exponents());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= b.exponent(i);
    return Monomial::fromExponents(a.universePtr(), std::move(e));
}

bool monomialPrecedes(const Monomial& a, const Monomial& b) {
    long long da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.exponents() > b.exponents();
}

std::string to_string(const Monomial& m) {
    std::string out;
    for (int i = 0; i < m.universe().size(); ++i) {
        int e = m.exponent(i);
        if (e == 0) continue;
        if (!out.empty()) out += '*';
        out += m.universe().label(i);
        if (e > 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out.empty() ? "1" : out;
}

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

} // namespace

Monomial parseMonomial(const UniversePtr& universe, const std::string& text) {
    std::vector<std::string> factors;
    std::size_t pos = 0;
    while (true) {
        auto next = text.find('*', pos);
        factors.push_back(trim(next == std::string::npos ? text.substr(pos)
                                                         : text.substr(pos, next - pos)));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    Monomial result(universe);
    for (const auto& factor : factors) {
        if (factor.empty()) throw DomainError("empty factor in monomial: '" + text + "'");
        if (factor == "1") continue;
        std::string label = factor;
        int exp = 1;
        if (auto caret = factor.rfind('^'); caret != std::string::npos) {
            label = trim(factor.substr(0, caret));
            std::string expText = trim(factor.substr(caret + 1));
            auto [ptr, ec] = std::from_chars(expText.data(), expText.data() + expText.size(), exp);
            if (ec != std::errc{} || ptr != expText.data() + expText.size() || exp < 1)
                throw DomainError("bad exponent in monomial: '" + factor + "'");
        }
        result = result * Monomial::variable(universe, universe->indexOf(label), exp);
    }
    return result;
}

} // namespace jetcover
