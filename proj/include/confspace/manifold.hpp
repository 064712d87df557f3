#pragma once

#include "confspace/rational.hpp"

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace confspace {

/// Parity of the tensor power of the orientation local system.
enum class Twist : int { untwisted = 0, twisted = 1 };

inline Twist operator+(Twist a, Twist b)
{
    return static_cast<Twist>((static_cast<int>(a) + static_cast<int>(b)) & 1);
}

inline Twist twist_of(long n)
{
    return static_cast<Twist>(((n % 2) + 2) % 2);
}

/// A basis class of H_c^deg(M; twist).
struct BasisClass {
    int deg = 0;
    std::string label;
};

/// Index of a basis class inside ManifoldData::hc[twist].
struct ClassId {
    Twist twist = Twist::untwisted;
    size_t index = 0;

    friend auto operator<=>(const ClassId&, const ClassId&) = default;
};

/// Sparse linear combination of basis classes of a single parity, keyed by index.
using Combination = std::map<size_t, Rational>;

/**
 * Compactly supported rational cohomology of a manifold, with and without
 * the orientation twist, together with its cup product.
 *
 * Basis classes of each parity are stored sorted by degree (stable in the
 * order they were supplied). Cup products are stored for every ordered pair;
 * missing pairs are zero.
 */
struct ManifoldData {
    std::string name;
    int dim = 0;
    bool orientable = true;
    std::array<std::vector<BasisClass>, 2> hc;
    std::map<std::pair<ClassId, ClassId>, Combination> cup_table;
    ClassId fundamental_class{Twist::twisted, 0};

    const std::vector<BasisClass>& classes(Twist t) const { return hc[static_cast<int>(t)]; }
    const BasisClass& at(ClassId id) const { return classes(id.twist).at(id.index); }
    int degree(ClassId id) const { return at(id).deg; }

    /// Number of basis classes of H_c^q(M; twist).
    int hc_dim(Twist t, int q) const;

    /// Cup product of two basis classes; empty when zero.
    Combination cup(ClassId x, ClassId y) const;

    /// Cup product extended linearly to combinations of parity a and b.
    Combination cup(Twist a, const Combination& x, Twist b, const Combination& y) const;

    /// Finds a class by parity, degree and label; throws InputError when absent.
    ClassId find(Twist t, int deg, std::string_view label) const;
};

/// Checks every invariant; throws ValidationError naming the first violation.
void validate(const ManifoldData& m);

/// Parses and validates the JSON manifold document.
ManifoldData load_manifold(std::string_view document);

/// dim H^q(M; twist) for 0 <= q <= d, obtained by Poincare-Lefschetz duality.
std::vector<int> ordinary_betti(const ManifoldData& m, Twist twist);

long euler_char(const ManifoldData& m, Twist twist);

/// Builtin test manifolds: euclidean(d), sphere(d), punctured_surface(g),
/// closed_surface(g), moebius.
ManifoldData builtin(std::string_view name, int param = 0);

/// Parses "euclidean:2", "moebius", ... into a builtin.
ManifoldData builtin_from_spec(std::string_view spec);

std::vector<std::string> builtin_names();

} // namespace confspace
