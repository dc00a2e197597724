#include "jetcover/homology.hpp"

#include <algorithm>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

namespace jetcover {

using boost::multiprecision::cpp_int;

HomologyField HomologyField::primeField(long long p) {
    if (p < 2 || p > (1LL << 31)) throw DomainError("field characteristic out of range");
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) throw DomainError("field characteristic must be prime");
    return HomologyField{false, p};
}

HomologyField parseField(const std::string& text) {
    if (text == "Q" || text.empty()) return HomologyField::rationals();
    if (text.rfind("Fp:", 0) == 0) return HomologyField::primeField(std::stoll(text.substr(3)));
    if (text[0] == 'F') return HomologyField::primeField(std::stoll(text.substr(1)));
    throw DomainError("unknown field '" + text + "' (use Q or Fp:<p>)");
}

namespace {

/// Fraction-free Gaussian elimination; exact rank over the rationals.
/// Intermediate entries are minors of the input, so they stay integral.
template <typename T>
int rankBareiss(std::vector<std::vector<T>>& m) {
    if (m.empty() || m[0].empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    T prev = 1;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int c2 = col + 1; c2 < cols; ++c2)
                m[r][c2] = (m[rank][col] * m[r][c2] - m[r][col] * m[rank][c2]) / prev;
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

/// Signals a retry with arbitrary precision.
struct BareissOverflow {};

/// Machine-word wrapper whose products run in 128 bits; entries past 2^62
/// abort into the exact big-integer path. Boundary-matrix minors are tiny,
/// so the fallback is essentially never taken.
struct Checked64 {
    long long v = 0;
    Checked64() = default;
    Checked64(long long x) : v(x) {}
    bool operator!=(long long x) const { return v != x; }
    friend Checked64 operator*(Checked64 a, Checked64 b) {
        __int128 p = static_cast<__int128>(a.v) * b.v;
        if (p > (static_cast<__int128>(1) << 62) || p < -(static_cast<__int128>(1) << 62))
            throw BareissOverflow{};
        return Checked64{static_cast<long long>(p)};
    }
    friend Checked64 operator-(Checked64 a, Checked64 b) {
        long long r;
        if (__builtin_sub_overflow(a.v, b.v, &r)) throw BareissOverflow{};
        return Checked64{r};
    }
    friend Checked64 operator/(Checked64 a, Checked64 b) { return Checked64{a.v / b.v}; }
};

int rankModP(std::vector<std::vector<long long>> m, long long p) {
    if (m.empty() || m[0].empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    for (auto& row : m)
        for (auto& x : row) x = ((x % p) + p) % p;
    auto inverse = [&](long long a) {
        long long result = 1, base = a % p, e = p - 2;
        while (e) {
            if (e & 1) result = static_cast<long long>((__int128)result * base % p);
            base = static_cast<long long>((__int128)base * base % p);
            e >>= 1;
        }
        return result;
    };
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        long long inv = inverse(m[rank][col]);
        for (int c2 = col; c2 < cols; ++c2)
            m[rank][c2] = static_cast<long long>((__int128)m[rank][c2] * inv % p);
        for (int r = rank + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            long long factor = m[r][col];
            for (int c2 = col; c2 < cols; ++c2) {
                long long sub = static_cast<long long>((__int128)factor * m[rank][c2] % p);
                m[r][c2] = ((m[r][c2] - sub) % p + p) % p;
            }
        }
        ++rank;
    }
    return rank;
}

struct FaceTable {
    /// faces[c] lists the faces of cardinality c as masks; index maps give
    /// each face its position for boundary assembly.
    std::vector<std::vector<std::uint64_t>> faces;
    std::vector<std::unordered_map<std::uint64_t, int>> index;

    void insert(VertexSet f) {
        const int c = f.count();
        if (static_cast<int>(faces.size()) <= c) {
            faces.resize(c + 1);
            index.resize(c + 1);
        }
        index[c].emplace(f.bits, static_cast<int>(faces[c].size()));
        faces[c].push_back(f.bits);
    }
};

void walkFaces(VertexSet face, std::size_t next, const std::vector<int>& verts,
               const std::vector<std::vector<VertexSet>>& byVertex, FaceTable& table) {
    table.insert(face);
    for (std::size_t i = next; i < verts.size(); ++i) {
        const int v = verts[i];
        VertexSet grown = face;
        grown.add(v);
        bool ok = true;
        for (VertexSet nf : byVertex[v]) {
            if (nf.subsetOf(grown)) {
                ok = false;
                break;
            }
        }
        if (ok) walkFaces(grown, i + 1, verts, byVertex, table);
    }
}

/// Boundary matrix from cardinality-c faces to cardinality-(c-1) faces;
/// entries in {-1,0,1}.
template <typename T>
std::vector<std::vector<T>> boundaryMatrix(const FaceTable& table, int c) {
    const auto& cols = table.faces[c];
    const auto& rowIndex = table.index[c - 1];
    std::vector<std::vector<T>> m(table.faces[c - 1].size(),
                                  std::vector<T>(cols.size(), T(0)));
    for (std::size_t col = 0; col < cols.size(); ++col) {
        VertexSet f{cols[col]};
        int t = 0;
        f.forEach([&](int v) {
            VertexSet sub = f;
            sub.remove(v);
            m[rowIndex.at(sub.bits)][col] = (t % 2 == 0) ? T(1) : T(-1);
            ++t;
        });
    }
    return m;
}

} // namespace

std::vector<long long> reducedHomologyDims(const SimplicialComplex& complex,
                                           VertexSet vertices, HomologyField field) {
    if (!vertices.subsetOf(VertexSet::full(complex.universe().size())))
        throw DomainError("homology restriction outside the vertex set");
    if (complex.isVoid()) return {};

    std::vector<std::vector<VertexSet>> byVertex(complex.universe().size());
    for (VertexSet nf : complex.minimalNonFaces()) {
        if (!nf.subsetOf(vertices)) continue;
        nf.forEach([&](int v) { byVertex[v].push_back(nf); });
    }
    FaceTable table;
    walkFaces(VertexSet::empty(), 0, vertices.indices(), byVertex, table);

    const int levels = static_cast<int>(table.faces.size());
    std::vector<int> ranks(levels + 1, 0);
    for (int c = 1; c < levels; ++c) {
        if (field.rational) {
            try {
                auto fast = boundaryMatrix<Checked64>(table, c);
                ranks[c] = rankBareiss(fast);
            } catch (const BareissOverflow&) {
                auto wide = boundaryMatrix<cpp_int>(table, c);
                ranks[c] = rankBareiss(wide);
            }
        } else {
            ranks[c] = rankModP(boundaryMatrix<long long>(table, c), field.p);
        }
    }
    std::vector<long long> dims(levels, 0);
    for (int c = 0; c < levels; ++c)
        dims[c] = static_cast<long long>(table.faces[c].size()) - ranks[c] -
                  (c + 1 < levels ? ranks[c + 1] : 0);
    return dims;
}

} // namespace jetcover
