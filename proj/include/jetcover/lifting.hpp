#ifndef JETCOVER_LIFTING_HPP
#define JETCOVER_LIFTING_HPP

#include <vector>

namespace jetcover {

/// Number of k-subsets of the order-s jet copies of a j-set that collapse
/// onto the whole j-set. Computed by the recursion
///   l_s(j,k) = sum_{i=1..min(k,s+1)} C(s+1,i) * l_s(j-1,k-i)
/// with l_s(0,0) = 1. Zero outside j <= k <= (s+1)j.
long long liftingFunction(int s, int j, int k);

/// Same value from the closed form: sum over positive compositions
/// (a_1,...,a_j) of k of the products of binomials C(s+1,a_h).
long long liftingFunctionClosedForm(int s, int j, int k);

struct LiftingMatrix {
    int s = 0;
    /// Rows j = 0..maxJ, columns k = 0..(s+1)*maxJ.
    std::vector<std::vector<long long>> entries;
};

LiftingMatrix liftingMatrix(int s, int maxJ);

} // namespace jetcover

#endif
