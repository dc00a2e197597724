#ifndef JETCOVER_UNIVERSE_HPP
#define JETCOVER_UNIVERSE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "jetcover/errors.hpp"

namespace jetcover {

class Universe;
using UniversePtr = std::shared_ptr<const Universe>;

/// Ordered set of distinct vertex/variable labels with dense integer
/// indices. Capacity is 64 so every subset fits in one machine word.
class Universe {
public:
    static constexpr int kMaxSize = 64;

    /// Labels are kept in the given order; duplicates are rejected.
    static UniversePtr make(std::vector<std::string> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const { return labels_; }

    std::optional<int> find(const std::string& label) const;

    /// Like find, but throws DomainError for unknown labels.
    int indexOf(const std::string& label) const;

    /// Universes are compared by label sequence, not identity.
    bool sameAs(const Universe& other) const { return labels_ == other.labels_; }

private:
    explicit Universe(std::vector<std::string> labels);
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
};

void requireSameUniverse(const Universe& a, const Universe& b, const char* context);

/// Subset of a universe, stored as a bitmask over dense indices.
struct VertexSet {
    std::uint64_t bits = 0;

    VertexSet() = default;
    explicit VertexSet(std::uint64_t b) : bits(b) {}

    static VertexSet empty() { return VertexSet{}; }
    static VertexSet single(int i) { return VertexSet{std::uint64_t{1} << i}; }
    static VertexSet full(int n) {
        return VertexSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
    }
    static VertexSet fromIndices(const std::vector<int>& ids) {
        VertexSet s;
        for (int i : ids) s.add(i);
        return s;
    }

    bool isEmpty() const { return bits == 0; }
    int count() const { return __builtin_popcountll(bits); }
    bool contains(int i) const { return (bits >> i) & 1; }
    void add(int i) { bits |= std::uint64_t{1} << i; }
    void remove(int i) { bits &= ~(std::uint64_t{1} << i); }

    VertexSet unionWith(VertexSet o) const { return VertexSet{bits | o.bits}; }
    VertexSet intersectWith(VertexSet o) const { return VertexSet{bits & o.bits}; }
    VertexSet minus(VertexSet o) const { return VertexSet{bits & ~o.bits}; }
    bool subsetOf(VertexSet o) const { return (bits & ~o.bits) == 0; }
    bool properSubsetOf(VertexSet o) const { return subsetOf(o) && bits != o.bits; }
    bool intersects(VertexSet o) const { return (bits & o.bits) != 0; }

    int lowest() const { return __builtin_ctzll(bits); }

    std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(count());
        for (std::uint64_t b = bits; b; b &= b - 1) out.push_back(__builtin_ctzll(b));
        return out;
    }

    template <typename F>
    void forEach(F&& f) const {
        for (std::uint64_t b = bits; b; b &= b - 1) f(__builtin_ctzll(b));
    }

    bool operator==(const VertexSet&) const = default;
};

/// Orders sets as their increasing index sequences, lexicographically
/// ({x,z} before {y} when x<y<z). Used for all deterministic set listings.
bool sequenceLess(VertexSet a, VertexSet b);

std::vector<std::string> labelsOf(const Universe& u, VertexSet s);

} // namespace jetcover

#endif
