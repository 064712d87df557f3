#pragma once

#include "confspace/gca.hpp"
#include "confspace/linalg.hpp"
#include "confspace/manifold.hpp"

#include <map>
#include <vector>

namespace confspace {

/// Spaces of 0-cycles with m colours and multiplicity bound k;
/// (m, k) = (1, 2) is the unordered configuration space.
struct ComplexSpec {
    ManifoldData manifold;
    int m = 1;
    int k = 2;
};

/// Throws PreconditionError for m < 1, k < 1 or (m, k) = (1, 1).
void check_spec(const ComplexSpec& spec);

enum class GeneratorKind { point, collision };

struct GeneratorOrigin {
    GeneratorKind kind;
    int color;      // 0-based; -1 for collision generators
    ClassId source; // H_c basis class the generator is dual to
};

/**
 * Generators of the Koszul complex and the images of the collision
 * generators under the differential.
 *
 * Point generators (one per colour and per twisted H_c class x of degree q)
 * sit at weight 1_i and homological degree d + q. Collision generators (one
 * per H_c class y of parity mk and degree q) sit at weight (k, ..., k) and
 * homological degree dmk + 1 + q; they exist only when d is even or k = 1.
 */
struct GeneratorAssignment {
    int dim = 0;
    int m = 1;
    int k = 2;
    bool cone = false;
    GeneratorSpace space{1};
    std::vector<GeneratorOrigin> origin;
    size_t num_point = 0;
    /// Differential of each collision generator, keyed by generator index.
    std::map<size_t, Polynomial> delta;

    bool is_collision(size_t i) const { return i >= num_point; }
    /// Generator space of the point generators alone.
    GeneratorSpace point_space() const;
};

GeneratorAssignment build_generators(const ComplexSpec& spec);

/// Generators of the complex computing the cone of multiplication by the
/// fundamental class: the point generator dual to [M] is dropped and
/// differentials are projected accordingly. Always (m, k) = (1, 2).
GeneratorAssignment build_cone_generators(const ManifoldData& manifold);

/// Dual of the mk-fold (left-associated) cup product applied to the class
/// dual to the given collision generator, as a polynomial in point generators.
Polynomial delta_on_generator(const ManifoldData& manifold, const GeneratorAssignment& gens, size_t generator);

struct WeightSlice {
    Weight weight;
    std::map<int, std::vector<Monomial>> basis;
    ChainComplex chains;
};

/// Differential of a single basis monomial, extended as a graded derivation.
Polynomial differential(const GeneratorAssignment& gens, const Monomial& mono);

WeightSlice build_slice(const GeneratorAssignment& gens, const Weight& w);
WeightSlice build_slice(const ComplexSpec& spec, const Weight& w);
WeightSlice build_cone_slice(const ManifoldData& manifold, int n);

/// Homology of the slice by homological degree (nonzero entries only).
std::map<int, size_t> homology_dims(const WeightSlice& s);

/// Re-indexes homological degree h at weight w to cohomological degree 2d|w| - h.
std::map<int, size_t> to_cohomological(const std::map<int, size_t>& by_homdeg, int dim, const Weight& w);

} // namespace confspace
