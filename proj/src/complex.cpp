#include "confspace/complex.hpp"

#include <functional>

namespace confspace {

void check_spec(const ComplexSpec& spec)
{
    if (spec.m < 1 || spec.k < 1)
        throw PreconditionError("m and k must be positive");
    if (spec.m == 1 && spec.k == 1)
        throw PreconditionError("(m, k) = (1, 1) is degenerate");
}

GeneratorSpace GeneratorAssignment::point_space() const
{
    GeneratorSpace g(m);
    for (size_t i = 0; i < num_point; ++i)
        g.add(space[i]);
    return g;
}

namespace {

bool has_collisions(int d, int k)
{
    return d % 2 == 0 || k == 1;
}

std::string point_label(int m, int color, const std::string& label)
{
    return m == 1 ? "v_" + label : "v" + std::to_string(color + 1) + "_" + label;
}

GeneratorAssignment assign(const ManifoldData& man, int m, int k, bool cone)
{
    GeneratorAssignment g;
    g.dim = man.dim;
    g.m = m;
    g.k = k;
    g.cone = cone;
    g.space = GeneratorSpace(m);
    const int d = man.dim;

    const auto& twisted = man.classes(Twist::twisted);
    for (int color = 0; color < m; ++color)
        for (size_t i = 0; i < twisted.size(); ++i) {
            const ClassId id{Twist::twisted, i};
            if (cone && id == man.fundamental_class)
                continue;
            Weight w(m, 0);
            w[color] = 1;
            g.space.add({point_label(m, color, twisted[i].label), {w, d + twisted[i].deg}});
            g.origin.push_back({GeneratorKind::point, color, id});
        }
    g.num_point = g.space.size();

    if (has_collisions(d, k)) {
        const Twist parity = twist_of(static_cast<long>(m) * k);
        const auto& cls = man.classes(parity);
        for (size_t i = 0; i < cls.size(); ++i) {
            g.space.add({"w_" + cls[i].label, {Weight(m, k), d * m * k + 1 + cls[i].deg}});
            g.origin.push_back({GeneratorKind::collision, -1, {parity, i}});
        }
        for (size_t i = g.num_point; i < g.space.size(); ++i)
            g.delta[i] = delta_on_generator(man, g, i);
    }
    return g;
}

} // namespace

GeneratorAssignment build_generators(const ComplexSpec& spec)
{
    check_spec(spec);
    return assign(spec.manifold, spec.m, spec.k, false);
}

GeneratorAssignment build_cone_generators(const ManifoldData& manifold)
{
    return assign(manifold, 1, 2, true);
}

Polynomial delta_on_generator(const ManifoldData& man, const GeneratorAssignment& g, size_t generator)
{
    if (!g.is_collision(generator) || generator >= g.space.size())
        throw PreconditionError("delta_on_generator needs a collision generator");
    const ClassId target = g.origin[generator].source;
    const int factors = g.m * g.k;
    const auto& twisted = man.classes(Twist::twisted);

    // point generator index for (colour, twisted class)
    std::map<std::pair<int, size_t>, size_t> point_index;
    for (size_t i = 0; i < g.num_point; ++i)
        point_index[{g.origin[i].color, g.origin[i].source.index}] = i;

    Polynomial out;
    // Runs over tuples (x_1, ..., x_mk) of twisted classes, position p having
    // colour p / k; accumulates the left-associated cup product and the
    // ordered product of the matching point generators.
    std::function<void(int, const Combination&, const SignedMonomial&)> rec =
        [&](int pos, const Combination& partial, const SignedMonomial& mono) {
            if (pos == factors) {
                auto it = partial.find(target.index);
                if (it != partial.end())
                    add_term(out, mono.mono, mono.sign * it->second);
                return;
            }
            const int color = pos / g.k;
            const Twist have = twist_of(pos);
            for (size_t x = 0; x < twisted.size(); ++x) {
                auto pi = point_index.find({color, x});
                if (pi == point_index.end())
                    continue; // dropped in the cone
                Combination next;
                if (pos == 0)
                    next = {{x, Rational(1)}};
                else
                    next = man.cup(have, partial, Twist::twisted, Combination{{x, Rational(1)}});
                if (next.empty())
                    continue;
                auto prod = multiply(g.space, mono.mono, generator_monomial(g.space, pi->second));
                if (!prod)
                    continue;
                rec(pos + 1, next, {mono.sign * prod->sign, prod->mono});
            }
        };
    rec(0, {}, {1, unit_monomial(g.space)});
    return out;
}

Polynomial differential(const GeneratorAssignment& g, const Monomial& mono)
{
    Polynomial out;
    int prefix_deg = 0;
    for (size_t i = 0; i < mono.exps.size(); ++i) {
        const int e = mono.exps[i];
        if (e == 0)
            continue;
        if (g.is_collision(i)) {
            Monomial prefix = unit_monomial(g.space);
            Monomial rest = unit_monomial(g.space);
            for (size_t j = 0; j < mono.exps.size(); ++j)
                (j < i ? prefix : rest).exps[j] = mono.exps[j];
            rest.exps[i] = e - 1;
            // prefix * (e g^{e-1} dg) * suffix, with g^{e-1} folded into rest
            // since g commutes past dg whenever e > 1 (g is then even).
            const Rational coeff = Rational(prefix_deg % 2 == 0 ? e : -e);
            Polynomial left{{prefix, coeff}};
            Polynomial term = multiply(g.space, multiply(g.space, left, g.delta.at(i)), Polynomial{{rest, Rational(1)}});
            for (const auto& [m, c] : term)
                add_term(out, m, c);
        }
        prefix_deg += e * g.space[i].degree.homdeg;
    }
    return out;
}

WeightSlice build_slice(const GeneratorAssignment& g, const Weight& w)
{
    WeightSlice s;
    s.weight = w;
    s.basis = monomial_basis(g.space, w);
    std::map<int, std::map<Monomial, size_t>> index;
    for (const auto& [deg, monos] : s.basis) {
        s.chains.dims[deg] = monos.size();
        for (size_t i = 0; i < monos.size(); ++i)
            index[deg][monos[i]] = i;
    }
    if (g.delta.empty())
        return s;
    for (const auto& [deg, monos] : s.basis) {
        auto below = index.find(deg - 1);
        SparseRationalMatrix dmat(below == index.end() ? 0 : below->second.size(), monos.size());
        bool any = false;
        for (size_t col = 0; col < monos.size(); ++col)
            for (const auto& [m, c] : differential(g, monos[col])) {
                if (below == index.end())
                    throw ContractViolation("differential leaves the slice basis");
                dmat.add(below->second.at(m), col, c);
                any = true;
            }
        if (any)
            s.chains.differential[deg] = std::move(dmat);
    }
    check_square_zero(s.chains);
    return s;
}

WeightSlice build_slice(const ComplexSpec& spec, const Weight& w)
{
    return build_slice(build_generators(spec), w);
}

WeightSlice build_cone_slice(const ManifoldData& manifold, int n)
{
    return build_slice(build_cone_generators(manifold), Weight{n});
}

std::map<int, size_t> homology_dims(const WeightSlice& s)
{
    return homology_dims(s.chains);
}

std::map<int, size_t> to_cohomological(const std::map<int, size_t>& by_homdeg, int dim, const Weight& w)
{
    std::map<int, size_t> out;
    const int top = 2 * dim * total_weight(w);
    for (const auto& [h, n] : by_homdeg)
        out[top - h] = n;
    return out;
}

} // namespace confspace
