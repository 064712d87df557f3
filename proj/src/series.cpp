#include "confspace/series.hpp"

#include <functional>

namespace confspace {

namespace {

GeneratorSpace point_generators(const ManifoldData& man, int m)
{
    GeneratorSpace g(m);
    for (int color = 0; color < m; ++color)
        for (const auto& c : man.classes(Twist::twisted)) {
            Weight w(m, 0);
            w[color] = 1;
            g.add({c.label, {w, man.dim + c.deg}});
        }
    return g;
}

bool collisions_present(const ManifoldData& man, int k)
{
    return man.dim % 2 == 0 || k == 1;
}

// t-degrees of the stable collision classes: one per class of
// H^p(M; twist mk-1), placed in degree d(mk-1) - 1 + p.
std::vector<int> collision_t_degrees(const ManifoldData& man, int m, int k)
{
    const int mk = m * k;
    const auto betti = ordinary_betti(man, twist_of(mk - 1));
    std::vector<int> out;
    for (int p = 0; p < static_cast<int>(betti.size()); ++p)
        for (int i = 0; i < betti[p]; ++i)
            out.push_back(man.dim * (mk - 1) - 1 + p);
    return out;
}

TruncatedSeries free_factor(int num_s, int max_s, int max_t, const Weight& w, int tdeg)
{
    if (tdeg % 2 != 0) {
        auto f = TruncatedSeries::one(num_s, max_s, max_t);
        f.add_term({w, tdeg}, 1);
        return f;
    }
    return TruncatedSeries::binomial_power(num_s, max_s, max_t, w, tdeg, 1, -1);
}

void check_pair(int m, int k)
{
    if (m < 1 || k < 1 || (m == 1 && k == 1))
        throw PreconditionError("invalid (m, k) = (" + std::to_string(m) + ", " + std::to_string(k) + ")");
}

} // namespace

TruncatedSeries sym_series(const ManifoldData& man, int m, int max_s, int max_t)
{
    const auto g = point_generators(man, m);
    const int top = 2 * man.dim;
    const auto by_homdeg = hilbert_series(g, max_s, top * max_s);
    TruncatedSeries out(m, max_s, max_t);
    for (const auto& [key, c] : by_homdeg.terms())
        out.add_term({key.s, top * total_weight(key.s) - key.t}, c);
    return out;
}

bool cup_products_vanish(const ManifoldData& man, int j)
{
    if (j < 2)
        throw PreconditionError("cup_products_vanish needs j >= 2");
    const auto& twisted = man.classes(Twist::twisted);
    std::function<bool(int, const Combination&)> all_zero = [&](int pos, const Combination& partial) {
        if (partial.empty())
            return true;
        if (pos == j)
            return false;
        for (size_t x = 0; x < twisted.size(); ++x) {
            auto next = man.cup(twist_of(pos), partial, Twist::twisted, Combination{{x, Rational(1)}});
            if (!all_zero(pos + 1, next))
                return false;
        }
        return true;
    };
    for (size_t x = 0; x < twisted.size(); ++x)
        if (!all_zero(1, Combination{{x, Rational(1)}}))
            return false;
    return true;
}

TruncatedSeries density_series(const ManifoldData& man, int m, int k, int max_t)
{
    check_pair(m, k);
    auto out = TruncatedSeries::one(0, 0, max_t);
    if (!collisions_present(man, k))
        return out;
    if (!cup_products_vanish(man, m * k))
        throw PreconditionError("density not defined by the product formula: nonvanishing mk-fold cup products");
    for (int tdeg : collision_t_degrees(man, m, k)) {
        if (tdeg == 0)
            throw PreconditionError("density not defined: polynomial generator in degree 0");
        out = out * free_factor(0, 0, max_t, {}, tdeg);
    }
    return out;
}

DensityVerdict check_density_coincidence(const ManifoldData& man, const std::vector<std::pair<int, int>>& pairs,
                                         int max_t)
{
    DensityVerdict v;
    std::map<int, const TruncatedSeries*> first_by_mk;
    for (const auto& [m, k] : pairs)
        v.series.emplace_back(std::make_pair(m, k), density_series(man, m, k, max_t));
    for (const auto& [mk_pair, s] : v.series) {
        const int mk = mk_pair.first * mk_pair.second;
        auto [it, inserted] = first_by_mk.emplace(mk, &s);
        if (!inserted && !(*it->second == s))
            v.coincide = false;
    }
    return v;
}

std::vector<ProductCheckRow> unstable_product_check(const ManifoldData& man, int m, int k, int max_weight)
{
    check_pair(m, k);
    if (!collisions_present(man, k))
        throw PreconditionError("product formula needs d even or k = 1");
    if (!cup_products_vanish(man, m * k))
        throw PreconditionError("product formula needs vanishing mk-fold cup products");

    const int max_t = 2 * man.dim * max_weight;
    auto product = sym_series(man, m, max_weight, max_t);
    for (int tdeg : collision_t_degrees(man, m, k))
        product = product * free_factor(m, max_weight, max_t, Weight(m, k), tdeg);

    const ComplexSpec spec{man, m, k};
    const auto gens = build_generators(spec);
    std::vector<ProductCheckRow> rows;
    for (const auto& w : weights_up_to(m, max_weight)) {
        ProductCheckRow row;
        row.weight = w;
        row.from_slice = to_cohomological(homology_dims(build_slice(gens, w)), man.dim, w);
        for (int t = 0; t <= max_t; ++t) {
            const Rational c = product.coeff(w, t);
            if (c != 0)
                row.from_product[t] = c.get_num().get_ui();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

TruncatedSeries euler_series_lhs(const ManifoldData& man, int m, int k, int max_s)
{
    const auto gens = build_generators({man, m, k});
    TruncatedSeries out(m, max_s, 0);
    for (const auto& w : weights_up_to(m, max_s)) {
        long chi = 0;
        for_each_monomial(gens.space, w, [&](const Monomial& mono) {
            chi += degree_of(gens.space, mono).homdeg % 2 == 0 ? 1 : -1;
        });
        out.add_term({w, 0}, Rational(chi));
    }
    return out;
}

TruncatedSeries euler_series_rhs(const ManifoldData& man, int m, int k, int max_s)
{
    check_pair(m, k);
    const long chi = euler_char(man, Twist::untwisted);
    auto out = TruncatedSeries::one(m, max_s, 0);
    for (int i = 0; i < m; ++i) {
        Weight unit(m, 0);
        unit[i] = 1;
        out = out * TruncatedSeries::binomial_power(m, max_s, 0, unit, 0, 1, -chi);
    }
    if (collisions_present(man, k)) {
        const int mk = m * k;
        // (-1)^{d(mk-1)} is +1 for even d; for odd d (k = 1) it tracks the
        // parity of the collision generators.
        const long sign = (static_cast<long>(man.dim) * (mk - 1)) % 2 == 0 ? 1 : -1;
        const long chi_twisted = euler_char(man, twist_of(mk - 1));
        out = out * TruncatedSeries::binomial_power(m, max_s, 0, Weight(m, k), 0, 1, sign * chi_twisted);
    }
    return out;
}

} // namespace confspace
