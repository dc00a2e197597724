#include "jetcover/invariants.hpp"

#include <algorithm>

namespace jetcover {

void BettiTable::add(int i, int j, long long value) {
    if (value == 0) return;
    auto key = std::make_pair(i, j);
    auto it = entries_.find(key);
    if (it == entries_.end())
        entries_.emplace(key, value);
    else if ((it->second = checkedAdd(it->second, value)) == 0)
        entries_.erase(it);
}

long long BettiTable::entry(int i, int j) const {
    auto it = entries_.find(std::make_pair(i, j));
    return it == entries_.end() ? 0 : it->second;
}

int BettiTable::maxDegree() const {
    int best = 0;
    for (const auto& [key, value] : entries_)
        if (value != 0) best = std::max(best, key.second);
    return best;
}

int BettiTable::maxHomological() const {
    int best = 0;
    for (const auto& [key, value] : entries_)
        if (value != 0) best = std::max(best, key.first);
    return best;
}

int BettiTable::maxRow() const {
    int best = 0;
    for (const auto& [key, value] : entries_)
        if (value != 0) best = std::max(best, key.second - key.first);
    return best;
}

std::vector<std::vector<long long>> BettiTable::matrixView() const {
    const int rows = maxRow() + 1;
    const int cols = maxDegree() + 1;
    std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols, 0));
    for (const auto& [key, value] : entries_) {
        auto [i, j] = key;
        m[j - i][j] = value;
    }
    return m;
}

BettiTable BettiTable::fromMatrixView(const std::vector<std::vector<long long>>& m,
                                      HomologyField field) {
    BettiTable t(field);
    for (int r = 0; r < static_cast<int>(m.size()); ++r)
        for (int j = 0; j < static_cast<int>(m[r].size()); ++j)
            if (m[r][j] != 0) {
                if (j < r) throw DomainError("Betti matrix entry below the valid range");
                t.add(j - r, j, m[r][j]);
            }
    return t;
}

std::vector<long long> BettiTable::totals() const {
    std::vector<long long> out(maxHomological() + 1, 0);
    for (const auto& [key, value] : entries_) out[key.first] += value;
    return out;
}

BettiTable bettiNumbersHochster(const SimplicialComplex& complex, HomologyField field,
                                int maxVertices) {
    const int n = complex.universe().size();
    if (n > std::min(maxVertices, 24))
        throw ResourceLimitError("Hochster enumeration needs 2^" + std::to_string(n) +
                                 " subsets; bound is " +
                                 std::to_string(std::min(maxVertices, 24)) + " vertices");
    if (complex.isVoid()) throw DomainError("Betti numbers of the void complex");
    BettiTable table(field);
    const auto& nonFaces = complex.minimalNonFaces();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        VertexSet v{bits};
        // Any vertex lying in no surviving non-face makes the restriction a
        // cone, so only fully covered subsets can contribute homology.
        VertexSet covered;
        for (VertexSet nf : nonFaces)
            if (nf.subsetOf(v)) covered = covered.unionWith(nf);
        if (!v.subsetOf(covered)) continue;
        auto dims = reducedHomologyDims(complex, v, field);
        const int card = v.count();
        for (int c = 0; c < static_cast<int>(dims.size()); ++c)
            if (dims[c] != 0) table.add(card - c, card, dims[c]);
    }
    return table;
}

FVector transformFVector(const FVector& f, int s) {
    if (s < 0) throw DomainError("jet order must be nonnegative");
    if (f.entries.empty()) return f;
    const int d = static_cast<int>(f.entries.size()) - 1;
    std::vector<long long> out((s + 1) * d + 1, 0);
    for (int k = 0; k < static_cast<int>(out.size()); ++k) {
        long long acc = 0;
        for (int i = 0; i <= d; ++i)
            acc = checkedAdd(acc, checkedMul(f.entries[i], liftingFunction(s, i, k)));
        out[k] = acc;
    }
    return FVector{std::move(out)};
}

BettiTable transformBetti(const BettiTable& b, int s) {
    if (s < 0) throw DomainError("jet order must be nonnegative");
    auto m = b.matrixView();
    if (m.empty()) return b;
    const int cols = static_cast<int>(m[0].size());
    const int maxJ = cols - 1;
    LiftingMatrix lift = liftingMatrix(s, maxJ);
    const int outCols = (s + 1) * maxJ + 1;
    std::vector<std::vector<long long>> out(m.size(), std::vector<long long>(outCols, 0));
    for (std::size_t r = 0; r < m.size(); ++r)
        for (int k = 0; k < outCols; ++k) {
            long long acc = 0;
            for (int j = 0; j < cols; ++j)
                acc = checkedAdd(acc, checkedMul(m[r][j], lift.entries[j][k]));
            out[r][k] = acc;
        }
    return BettiTable::fromMatrixView(out, b.field());
}

int regularity(const BettiTable& b) {
    if (b.entries().empty()) throw DomainError("regularity of an empty Betti table");
    return b.maxRow();
}

HilbertSeries hilbertSeries(const FVector& f) {
    if (f.entries.empty()) return HilbertSeries{{0}, 0};
    const int d = static_cast<int>(f.entries.size()) - 1;
    std::vector<long long> numerator(d + 1, 0);
    // Sum of f_{i-1} t^i (1-t)^{d-i}.
    for (int i = 0; i <= d; ++i) {
        std::vector<long long> term(d + 1, 0);
        term[i] = f.entries[i];
        for (int rep = 0; rep < d - i; ++rep) {
            std::vector<long long> next(d + 1, 0);
            for (int deg = 0; deg <= d; ++deg) {
                if (term[deg] == 0) continue;
                next[deg] = checkedAdd(next[deg], term[deg]);
                if (deg + 1 <= d) next[deg + 1] = checkedAdd(next[deg + 1], -term[deg]);
            }
            term = std::move(next);
        }
        for (int deg = 0; deg <= d; ++deg) numerator[deg] = checkedAdd(numerator[deg], term[deg]);
    }
    while (numerator.size() > 1 && numerator.back() == 0) numerator.pop_back();
    return HilbertSeries{std::move(numerator), d};
}

DimensionMultiplicity dimensionAndMultiplicity(const FVector& f) {
    if (f.entries.empty()) throw DomainError("dimension of the void complex");
    return DimensionMultiplicity{static_cast<int>(f.entries.size()) - 1, f.entries.back()};
}

LinearResolutionResult checkLinearResolution(const MonomialIdeal& ideal, HomologyField field,
                                             int maxVertices) {
    if (!ideal.isSquarefree())
        throw DomainError("linear resolution check requires a squarefree ideal");
    if (ideal.isUnit()) throw DomainError("linear resolution check requires a proper ideal");
    if (ideal.isZero())
        return LinearResolutionResult{false, 0, "zero ideal has no generating degree"};
    const long long d = ideal.generators().front().degree();
    for (const auto& g : ideal.generators())
        if (g.degree() != d)
            return LinearResolutionResult{false, 0, "generators of mixed degrees"};
    BettiTable table = bettiNumbersHochster(complexFromIdeal(ideal), field, maxVertices);
    const int reg = regularity(table);
    if (reg != static_cast<int>(d) - 1)
        return LinearResolutionResult{false, static_cast<int>(d),
                                      "regularity " + std::to_string(reg) + " exceeds " +
                                          std::to_string(d - 1)};
    return LinearResolutionResult{true, static_cast<int>(d), ""};
}

bool isCochordal(const Graph& g) { return isChordal(complementGraph(g)); }

} // namespace jetcover
