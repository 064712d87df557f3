#pragma once

#include "confspace/complex.hpp"

#include <map>
#include <string>
#include <vector>

namespace confspace {

/// dim H^i(C_n(M); Q) for 0 <= n <= n_max, 0 <= i <= i_max.
class BettiTable {
public:
    BettiTable(int n_max, int i_max) : n_max_(n_max), i_max_(i_max) {}

    int n_max() const { return n_max_; }
    int i_max() const { return i_max_; }

    size_t at(int n, int i) const;
    void set(int n, int i, size_t dim, std::string provenance);
    const std::string& provenance(int n, int i) const;

    /// Row n as a vector indexed by i.
    std::vector<size_t> row(int n) const;

    /// "n,i,dim" rows for every (n, i) in range.
    std::string to_csv() const;
    /// Aligned grid, one row per n.
    std::string to_pretty() const;

private:
    int n_max_;
    int i_max_;
    std::map<std::pair<int, int>, size_t> dims_;
    std::map<std::pair<int, int>, std::string> provenance_;
};

/// Computes each row in its own task; `jobs` bounds the concurrency.
BettiTable config_betti(const ManifoldData& man, int n_max, int i_max, int jobs = 1);

/// Cohomologically indexed homology of the stabilization cone at weight n.
std::map<int, size_t> cone_cohomology(const ManifoldData& man, int n);

struct ConeRow {
    int n;
    std::map<int, size_t> dims; // cohomological degree -> dim
    int max_nonzero;            // -1 if the row vanishes
    int min_nonzero;            // -1 if the row vanishes
};

std::vector<ConeRow> cone_vanishing(const ManifoldData& man, int n_max, int jobs = 1);

/// Degrees i < bound(n) in which the cone must vanish and the stabilization
/// map is surjective: n for d >= 3, n/2 for d = 2, none for d = 1.
double surjective_bound(int dim, int n);
/// Degrees i < bound(n) in which the stabilization map is an isomorphism
/// (d >= 3 only; returns 0 otherwise).
double iso_bound(int dim, int n);

struct RangeViolation {
    int n;
    int i;
    std::string what;
};

struct RangeReport {
    int dim;
    int n_max;
    std::vector<RangeViolation> violations;
    /// Largest i (per n) for which dim H^i(C_{n-1}) = dim H^i(C_n) was observed
    /// for all smaller i; reported, not asserted.
    std::map<int, int> observed_stable_below;
    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

RangeReport verify_ranges(const ManifoldData& man, int n_max, int jobs = 1);

} // namespace confspace
