#include "jetcover/lifting.hpp"

#include <algorithm>

#include "jetcover/errors.hpp"

namespace jetcover {

namespace {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = checkedMul(r, n - k + i) / i;
    return r;
}

} // namespace

long long liftingFunction(int s, int j, int k) {
    if (s < 0 || j < 0 || k < 0) throw DomainError("lifting function arguments must be >= 0");
    if (k < j || static_cast<long long>(k) > static_cast<long long>(s + 1) * j) return 0;
    // DP over rows 0..j; row r holds l_s(r, 0..k).
    std::vector<long long> row(k + 1, 0);
    row[0] = 1;
    for (int r = 1; r <= j; ++r) {
        std::vector<long long> next(k + 1, 0);
        for (int kk = r; kk <= k; ++kk) {
            long long acc = 0;
            for (int i = 1; i <= std::min(kk, s + 1); ++i)
                acc = checkedAdd(acc, checkedMul(binomial(s + 1, i), row[kk - i]));
            next[kk] = acc;
        }
        row = std::move(next);
    }
    return row[k];
}

long long liftingFunctionClosedForm(int s, int j, int k) {
    if (s < 0 || j < 0 || k < 0) throw DomainError("lifting function arguments must be >= 0");
    if (j == 0) return k == 0 ? 1 : 0;
    // Walk positive compositions (a_1,...,a_j) of k with parts <= s+1.
    long long total = 0;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining, int slots, long long product) -> void {
        if (slots == 0) {
            if (remaining == 0) total = checkedAdd(total, product);
            return;
        }
        for (int a = 1; a <= std::min(remaining - slots + 1, s + 1); ++a)
            self(self, remaining - a, slots - 1, checkedMul(product, binomial(s + 1, a)));
    };
    rec(rec, k, j, 1);
    return total;
}

LiftingMatrix liftingMatrix(int s, int maxJ) {
    if (s < 0 || maxJ < 0) throw DomainError("lifting matrix arguments must be >= 0");
    LiftingMatrix m;
    m.s = s;
    const int cols = (s + 1) * maxJ + 1;
    m.entries.assign(maxJ + 1, std::vector<long long>(cols, 0));
    for (int j = 0; j <= maxJ; ++j)
        for (int k = 0; k < cols; ++k) m.entries[j][k] = liftingFunction(s, j, k);
    return m;
}

} // namespace jetcover
