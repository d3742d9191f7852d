// Test-only oracles, kept independent of the library implementations they
// check: a naive rough-set partitioner, a Jacobi eigensolver for covariance
// matrices, and a two-pass Pearson correlation.
#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "evofs/dataset.hpp"

namespace oracle {

// gamma_B(D) by direct O(U^2) comparison: an object is positive when every
// object indiscernible from it (on B) carries the same decision.
inline double rough_dependency_naive(const evofs::RoughSetTable& table,
                                     const std::vector<std::size_t>& attrs) {
    const std::size_t universe = table.objects();
    std::size_t positive = 0;
    for (std::size_t i = 0; i < universe; ++i) {
        bool pure = true;
        for (std::size_t j = 0; j < universe && pure; ++j) {
            bool same = true;
            for (std::size_t a : attrs)
                if (table.attributes[i][a] != table.attributes[j][a]) {
                    same = false;
                    break;
                }
            if (same && table.decisions[i] != table.decisions[j]) pure = false;
        }
        if (pure) ++positive;
    }
    return static_cast<double>(positive) / static_cast<double>(universe);
}

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, descending.
inline std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> m) {
    const std::size_t n = m.size();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += m[p][q] * m[p][q];
        if (off < 1e-24) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::fabs(m[p][q]) < 1e-30) continue;
                const double theta = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double mkp = m[k][p], mkq = m[k][q];
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double mpk = m[p][k], mqk = m[q][k];
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = m[i][i];
    std::sort(eig.begin(), eig.end(), std::greater<>());
    return eig;
}

// Covariance matrix (n-1 denominator) of a row-major data block.
inline std::vector<std::vector<double>> covariance(const std::vector<std::vector<double>>& rows) {
    const std::size_t n = rows[0].size();
    const std::size_t count = rows.size();
    std::vector<double> mean(n, 0.0);
    for (const auto& row : rows)
        for (std::size_t j = 0; j < n; ++j) mean[j] += row[j];
    for (auto& v : mean) v /= static_cast<double>(count);
    std::vector<std::vector<double>> cov(n, std::vector<double>(n, 0.0));
    for (const auto& row : rows)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                cov[a][b] += (row[a] - mean[a]) * (row[b] - mean[b]);
    for (auto& r : cov)
        for (auto& v : r) v /= static_cast<double>(count - 1);
    return cov;
}

// |Pearson r| with long-double accumulation, written against the textbook
// two-pass formula.
inline double abs_pearson(const std::vector<double>& x, const std::vector<int>& y) {
    const std::size_t count = x.size();
    long double mx = 0.0L, my = 0.0L;
    for (std::size_t i = 0; i < count; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= count;
    my /= count;
    long double sxy = 0.0L, sxx = 0.0L, syy = 0.0L;
    for (std::size_t i = 0; i < count; ++i) {
        const long double dx = x[i] - mx;
        const long double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx <= 0.0L || syy <= 0.0L) return 0.0;
    return static_cast<double>(std::fabs(static_cast<double>(sxy / sqrtl(sxx * syy))));
}

}  // namespace oracle
