#pragma once

#include "confspace/manifold.hpp"

#include <map>
#include <string>

namespace confspace {

/// Graded dimensions of Hom(Sigma H~_*(M+), S^2(H~_*(M+)) / im Delta_*).
struct ResidualActionReport {
    std::map<int, size_t> homology;  // q -> dim H~_q(M+)
    std::map<int, size_t> quotient;  // p -> dim (S^2 / im Delta_*)_p
    std::map<int, size_t> by_degree; // q -> dim Hom(H~_q, quotient_{q+1})
    size_t total = 0;

    std::string to_string() const;
    std::string to_csv() const;
};

/// Requires M orientable and even-dimensional (PreconditionError otherwise).
ResidualActionReport residual_action_dims(const ManifoldData& man);

} // namespace confspace
