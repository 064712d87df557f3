#pragma once

#include "confspace/complex.hpp"
#include "confspace/truncated_series.hpp"

#include <string>
#include <utility>
#include <vector>

namespace confspace {

/// Poincare series of H^*(Sym_{n_1..n_m}(M)) in s_1..s_m and t.
TruncatedSeries sym_series(const ManifoldData& man, int m, int max_s, int max_t);

/// True iff every j-fold cup product of twisted classes vanishes (j >= 2).
bool cup_products_vanish(const ManifoldData& man, int j);

/// Homological density of the (m, k) spaces of 0-cycles as a series in t alone.
/// Throws PreconditionError when the product formula does not apply.
TruncatedSeries density_series(const ManifoldData& man, int m, int k, int max_t);

struct DensityVerdict {
    bool coincide = true;
    std::vector<std::pair<std::pair<int, int>, TruncatedSeries>> series;
};

/// Compares density series of all pairs with equal product mk.
DensityVerdict check_density_coincidence(const ManifoldData& man, const std::vector<std::pair<int, int>>& pairs,
                                         int max_t);

struct ProductCheckRow {
    Weight weight;
    std::map<int, size_t> from_slice;   // cohomological degree -> dim
    std::map<int, size_t> from_product; // same, from Sym x S^*
    bool equal() const { return from_slice == from_product; }
};

/// Compares slice cohomology with the Sym (x) S^*(collision classes) product
/// for every weight of total size <= max_weight.
std::vector<ProductCheckRow> unstable_product_check(const ManifoldData& man, int m, int k, int max_weight);

/// Sum over weights of the Euler characteristic of the (differential-free) complex.
TruncatedSeries euler_series_lhs(const ManifoldData& man, int m, int k, int max_s);

/// Closed product form of the Euler characteristic generating function.
TruncatedSeries euler_series_rhs(const ManifoldData& man, int m, int k, int max_s);

} // namespace confspace
