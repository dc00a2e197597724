#include "jetcover/universe.hpp"

#include <algorithm>

namespace jetcover {

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
    for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
        auto [it, inserted] = index_.emplace(labels_[i], i);
        (void)it;
        if (!inserted) throw DomainError("duplicate vertex label: " + labels_[i]);
    }
}

UniversePtr Universe::make(std::vector<std::string> labels) {
    if (labels.size() > static_cast<std::size_t>(kMaxSize))
        throw ResourceLimitError("universe exceeds " + std::to_string(kMaxSize) +
                                 " vertices (" + std::to_string(labels.size()) + ")");
    for (const auto& l : labels)
        if (l.empty()) throw DomainError("empty vertex label");
    return UniversePtr(new Universe(std::move(labels)));
}

std::optional<int> Universe::find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int Universe::indexOf(const std::string& label) const {
    auto i = find(label);
    if (!i) throw DomainError("unknown vertex label: " + label);
    return *i;
}

void requireSameUniverse(const Universe& a, const Universe& b, const char* context) {
    if (!a.sameAs(b))
        throw DomainError(std::string(context) + ": operands live in different universes");
}

bool sequenceLess(VertexSet a, VertexSet b) {
    if (a == b) return false;
    std::uint64_t diff = a.bits ^ b.bits;
    int d = __builtin_ctzll(diff);
    if (a.contains(d)) {
        // a owns the first differing index, so it comes first unless b has
        // already ended (b ended means b is a strict prefix of a).
        return (b.bits >> d) != 0;
    }
    // b owns the first differing index; a precedes only if a has ended.
    return (a.bits >> d) == 0;
}

std::vector<std::string> labelsOf(const Universe& u, VertexSet s) {
    std::vector<std::string> out;
    out.reserve(s.count());
    s.forEach([&](int i) { out.push_back(u.label(i)); });
    return out;
}

} // namespace jetcover
