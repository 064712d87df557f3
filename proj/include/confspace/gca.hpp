#pragma once

#include "confspace/rational.hpp"
#include "confspace/truncated_series.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace confspace {

using Weight = std::vector<int>;

int total_weight(const Weight& w);

struct MultiDegree {
    Weight weight;
    int homdeg = 0;

    friend auto operator<=>(const MultiDegree&, const MultiDegree&) = default;
};

struct Generator {
    std::string label;
    MultiDegree degree;

    bool odd() const { return degree.homdeg % 2 != 0; }
};

/// Ordered generators of a free graded-commutative algebra. The order is the
/// canonical order used for monomials and Koszul signs.
class GeneratorSpace {
public:
    explicit GeneratorSpace(int num_weights) : num_weights_(num_weights) {}

    /// Appends a generator; throws PreconditionError on zero or malformed weight.
    size_t add(Generator g);

    int num_weights() const { return num_weights_; }
    size_t size() const { return gens_.size(); }
    const Generator& operator[](size_t i) const { return gens_[i]; }
    const std::vector<Generator>& generators() const { return gens_; }

private:
    int num_weights_;
    std::vector<Generator> gens_;
};

/// Exponent vector over a GeneratorSpace; stored sign-free.
struct Monomial {
    std::vector<int> exps;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

MultiDegree degree_of(const GeneratorSpace& g, const Monomial& m);
Monomial unit_monomial(const GeneratorSpace& g);
Monomial generator_monomial(const GeneratorSpace& g, size_t i, int power = 1);
std::string to_string(const GeneratorSpace& g, const Monomial& m);

struct SignedMonomial {
    int sign = 1;
    Monomial mono;
};

/// Product in the free graded-commutative algebra; nullopt when it vanishes.
std::optional<SignedMonomial> multiply(const GeneratorSpace& g, const Monomial& a, const Monomial& b);

/// Linear combination of monomials.
using Polynomial = std::map<Monomial, Rational>;

void add_term(Polynomial& p, const Monomial& m, const Rational& c);
Polynomial multiply(const GeneratorSpace& g, const Polynomial& a, const Polynomial& b);

/// All monomials of weight w, grouped by homological degree, each group in
/// lexicographic order of exponent vectors.
std::map<int, std::vector<Monomial>> monomial_basis(const GeneratorSpace& g, const Weight& w);

/// Visits every monomial of weight w (same order as monomial_basis).
void for_each_monomial(const GeneratorSpace& g, const Weight& w, const std::function<void(const Monomial&)>& visit);

/// Product over generators of (1 + t^h s^w) (h odd) or 1/(1 - t^h s^w) (h even).
TruncatedSeries hilbert_series(const GeneratorSpace& g, int max_s, int max_t);

/// All weight vectors with m entries and total size <= max_total, graded-lex order.
std::vector<Weight> weights_up_to(int m, int max_total);

} // namespace confspace
