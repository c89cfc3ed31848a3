#pragma once

#include <gradim/rational.hpp>

#include <vector>

namespace gradim {

/// Kernel selection for the heavy inner loops. openmp falls back to the
/// serial path when the build has no OpenMP support.
enum class Exec { serial, openmp };

/// Exact binomial coefficients C(n, k) for n <= n_max, Pascal-cached.
class BinomialTable {
public:
    explicit BinomialTable(int n_max);
    const BigInt& operator()(int n, int k) const;
    int n_max() const { return static_cast<int>(rows_.size()) - 1; }

private:
    std::vector<std::vector<BigInt>> rows_;
};

/// Lower-triangular array of graded dimensions a_{i,j}, i + j <= n_max,
/// computed by the symmetrized convolution recursion
///   a_{i+1,j+1} = a_{i+1,j} + a_{i,j+1}
///                 + 1/2 sum_{p<=i, q<=j} C(i+j+4, p+q+2) a_{p,q} a_{i-p,j-q}
/// with boundary a_{i,0} = a_{0,i} = 1. Rows are filled in order of the total
/// degree n = i + j; entries within a row are independent, which is where the
/// openmp kernel parallelizes.
class AlphaTriangle {
public:
    static AlphaTriangle compute(int n_max, Exec how = Exec::openmp);

    int n_max() const { return static_cast<int>(rows_.size()) - 1; }
    /// a_{i,j}; requires i + j <= n_max.
    const BigInt& at(int i, int j) const;
    /// Row n holds a_{i, n-i} for i = 0..n.
    const std::vector<BigInt>& row(int n) const { return rows_.at(static_cast<size_t>(n)); }
    std::vector<BigInt> row_sums() const;
    /// a_{i,j} == a_{j,i} for every computed entry.
    bool symmetric() const;

private:
    std::vector<std::vector<BigInt>> rows_;
};

/// Total graded dimensions s_0 .. s_{n_max}.
struct SigmaSequence {
    std::vector<BigInt> values;

    int n_max() const { return static_cast<int>(values.size()) - 1; }
    const BigInt& at(int n) const { return values.at(static_cast<size_t>(n)); }
};

/// Direct recursion
///   s_{n+2} = 2 s_{n+1} + 1/2 sum_{i+j=n} C(n+4, i+2) s_i s_j
/// with s_0 = 1 and s_1 = 2 (the n = 1 row sum; the recursion itself only
/// reaches indices >= 2). Independent of the triangle computation.
SigmaSequence compute_sigma(int n_max, Exec how = Exec::openmp);

bool check_symmetry(const AlphaTriangle& t);

} // namespace gradim
