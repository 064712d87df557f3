#pragma once

#include "confspace/complex.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace confspace {

class GuardLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Basis element r[s_1|...|s_p] of the reduced two-sided bar complex B(R, S, Q).
struct BarElement {
    Monomial r;
    std::vector<Monomial> s;

    friend auto operator<=>(const BarElement&, const BarElement&) = default;
};

/**
 * The reduced bar complex at a single weight. R = S^*(point generators),
 * S = S^*(unsuspended collision generators) acting on R through the
 * diagonal; a bar factor [s] contributes |s| + 1 to the total degree.
 */
struct BarSlice {
    Weight weight;
    std::map<int, std::vector<BarElement>> basis;
    ChainComplex chains;
};

inline constexpr size_t default_bar_guard = 200000;

/// Throws GuardLimitExceeded when the basis would exceed `guard` elements.
BarSlice build_bar_slice(const ComplexSpec& spec, const Weight& w, size_t guard = default_bar_guard);

/// Tor dimensions by total degree (nonzero entries only).
std::map<int, size_t> tor_dims_via_bar(const ComplexSpec& spec, const Weight& w, size_t guard = default_bar_guard);

struct OracleReport {
    Weight weight;
    std::map<int, size_t> koszul;
    std::map<int, size_t> bar;
    bool equal() const { return koszul == bar; }
};

OracleReport compare_oracle(const ComplexSpec& spec, const Weight& w, size_t guard = default_bar_guard);

} // namespace confspace
