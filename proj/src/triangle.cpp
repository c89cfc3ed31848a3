#include <gradim/triangle.hpp>

#include <cassert>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gradim {

BinomialTable::BinomialTable(int n_max) {
    if (n_max < 0) throw std::invalid_argument("BinomialTable: negative n_max");
    rows_.resize(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        auto& row = rows_[static_cast<size_t>(n)];
        row.assign(static_cast<size_t>(n) + 1, BigInt(1));
        for (int k = 1; k < n; ++k)
            row[static_cast<size_t>(k)] = rows_[static_cast<size_t>(n - 1)][static_cast<size_t>(k - 1)] +
                                          rows_[static_cast<size_t>(n - 1)][static_cast<size_t>(k)];
    }
}

const BigInt& BinomialTable::operator()(int n, int k) const {
    static const BigInt zero(0);
    if (n < 0 || k < 0 || k > n) return zero;
    return rows_.at(static_cast<size_t>(n))[static_cast<size_t>(k)];
}

namespace {

// The double convolution for an interior entry a_{i,j}, i, j >= 1. The sum is
// symmetric under (p,q) <-> (i-1-p, j-1-q) and its central term carries a
// central binomial, so it is always even.
BigInt interior_entry(const std::vector<std::vector<BigInt>>& rows, const BinomialTable& binom,
                      int i, int j) {
    BigInt sum = 0;
    for (int p = 0; p < i; ++p) {
        for (int q = 0; q < j; ++q) {
            // a_{p,q} lives in row p+q at index p; a_{i-1-p, j-1-q} in row
            // (i+j-2-p-q) at index i-1-p.
            const BigInt& apq = rows[static_cast<size_t>(p + q)][static_cast<size_t>(p)];
            const BigInt& bpq =
                rows[static_cast<size_t>(i + j - 2 - p - q)][static_cast<size_t>(i - 1 - p)];
            sum += binom(i + j + 2, p + q + 2) * apq * bpq;
        }
    }
    assert((sum & 1) == 0);
    sum >>= 1;
    sum += rows[static_cast<size_t>(i + j - 1)][static_cast<size_t>(i)];     // a_{i, j-1}
    sum += rows[static_cast<size_t>(i + j - 1)][static_cast<size_t>(i - 1)]; // a_{i-1, j}
    return sum;
}

} // namespace

AlphaTriangle AlphaTriangle::compute(int n_max, Exec how) {
    if (n_max < 0) throw std::invalid_argument("AlphaTriangle: negative n_max");
    AlphaTriangle t;
    const BinomialTable binom(n_max + 4);
    t.rows_.resize(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        auto& row = t.rows_[static_cast<size_t>(n)];
        row.assign(static_cast<size_t>(n) + 1, BigInt(1));
        if (n < 2) continue;
#ifdef _OPENMP
        if (how == Exec::openmp) {
#pragma omp parallel for schedule(dynamic)
            for (int i = 1; i <= n - 1; ++i)
                row[static_cast<size_t>(i)] = interior_entry(t.rows_, binom, i, n - i);
            continue;
        }
#else
        (void)how;
#endif
        for (int i = 1; i <= n - 1; ++i)
            row[static_cast<size_t>(i)] = interior_entry(t.rows_, binom, i, n - i);
    }
    return t;
}

const BigInt& AlphaTriangle::at(int i, int j) const {
    if (i < 0 || j < 0 || i + j > n_max())
        throw std::out_of_range("AlphaTriangle::at: index outside computed range");
    return rows_[static_cast<size_t>(i + j)][static_cast<size_t>(i)];
}

std::vector<BigInt> AlphaTriangle::row_sums() const {
    std::vector<BigInt> sums;
    sums.reserve(rows_.size());
    for (const auto& row : rows_) {
        BigInt s = 0;
        for (const auto& v : row) s += v;
        sums.push_back(std::move(s));
    }
    return sums;
}

bool AlphaTriangle::symmetric() const {
    for (int n = 0; n <= n_max(); ++n)
        for (int i = 0; i <= n / 2; ++i)
            if (rows_[static_cast<size_t>(n)][static_cast<size_t>(i)] !=
                rows_[static_cast<size_t>(n)][static_cast<size_t>(n - i)])
                return false;
    return true;
}

bool check_symmetry(const AlphaTriangle& t) { return t.symmetric(); }

SigmaSequence compute_sigma(int n_max, Exec how) {
    if (n_max < 0) throw std::invalid_argument("compute_sigma: negative n_max");
    SigmaSequence s;
    s.values.reserve(static_cast<size_t>(n_max) + 1);
    s.values.push_back(BigInt(1));
    if (n_max >= 1) s.values.push_back(BigInt(2));
    const BinomialTable binom(n_max + 4);
    for (int m = 2; m <= n_max; ++m) {
        const int n = m - 2;
        BigInt conv = 0;
#ifdef _OPENMP
        if (how == Exec::openmp && n >= 64) {
#pragma omp parallel
            {
                BigInt local = 0;
#pragma omp for nowait schedule(static)
                for (int i = 0; i <= n; ++i)
                    local += binom(n + 4, i + 2) * s.values[static_cast<size_t>(i)] *
                             s.values[static_cast<size_t>(n - i)];
#pragma omp critical
                conv += local;
            }
        } else
#else
        (void)how;
#endif
        {
            for (int i = 0; i <= n; ++i)
                conv += binom(n + 4, i + 2) * s.values[static_cast<size_t>(i)] *
                        s.values[static_cast<size_t>(n - i)];
        }
        assert((conv & 1) == 0);
        conv >>= 1;
        s.values.push_back(2 * s.values[static_cast<size_t>(m - 1)] + conv);
    }
    return s;
}

} // namespace gradim
