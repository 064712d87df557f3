#include <doctest.h>

#include "confspace/gca.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace confspace;

namespace {

GeneratorSpace r2_pair()
{
    GeneratorSpace g(1);
    g.add({"v", {{1}, 4}});
    g.add({"w", {{2}, 7}});
    return g;
}

// two colours, a mix of odd and even generators
GeneratorSpace mixed()
{
    GeneratorSpace g(2);
    g.add({"x", {{1, 0}, 1}});
    g.add({"y", {{1, 0}, 3}});
    g.add({"z", {{0, 1}, 2}});
    g.add({"u", {{0, 1}, 1}});
    g.add({"e", {{1, 1}, 4}});
    g.add({"o", {{1, 1}, 5}});
    return g;
}

std::vector<Monomial> all_monomials(const GeneratorSpace& g, int max_total)
{
    std::vector<Monomial> out;
    for (const auto& w : weights_up_to(g.num_weights(), max_total))
        for_each_monomial(g, w, [&](const Monomial& m) { out.push_back(m); });
    return out;
}

} // namespace

TEST_CASE("generators must have positive weight")
{
    GeneratorSpace g(2);
    CHECK_THROWS_AS(g.add({"bad", {{0, 0}, 2}}), PreconditionError);
    CHECK_THROWS_AS(g.add({"neg", {{1, -1}, 2}}), PreconditionError);
    CHECK_THROWS_AS(g.add({"short", {{1}, 2}}), PreconditionError);
}

TEST_CASE("monomial_basis examples")
{
    GeneratorSpace odd(1);
    odd.add({"a", {{1}, 1}});
    CHECK(monomial_basis(odd, {2}).empty());

    GeneratorSpace even(1);
    even.add({"b", {{1}, 2}});
    auto b3 = monomial_basis(even, {3});
    REQUIRE(b3.size() == 1);
    CHECK(b3.at(6) == std::vector<Monomial>{generator_monomial(even, 0, 3)});

    auto g = r2_pair();
    auto basis = monomial_basis(g, {3});
    REQUIRE(basis.size() == 2);
    CHECK(basis.at(12) == std::vector<Monomial>{Monomial{{3, 0}}});
    CHECK(basis.at(11) == std::vector<Monomial>{Monomial{{1, 1}}});
    CHECK(to_string(g, Monomial{{1, 1}}) == "v*w");

    auto unit = monomial_basis(g, {0});
    REQUIRE(unit.size() == 1);
    CHECK(unit.at(0) == std::vector<Monomial>{unit_monomial(g)});
}

TEST_CASE("multiply signs")
{
    GeneratorSpace g(1);
    g.add({"x", {{1}, 1}});
    g.add({"y", {{1}, 3}});
    g.add({"z", {{1}, 2}});
    const auto x = generator_monomial(g, 0);
    const auto y = generator_monomial(g, 1);
    const auto z = generator_monomial(g, 2);

    CHECK_FALSE(multiply(g, x, x).has_value());
    auto xy = multiply(g, x, y);
    auto yx = multiply(g, y, x);
    REQUIRE(xy);
    REQUIRE(yx);
    CHECK(xy->mono == yx->mono);
    CHECK(xy->sign == 1);
    CHECK(yx->sign == -1);

    auto xz = multiply(g, x, z);
    auto zx = multiply(g, z, x);
    REQUIRE(xz);
    REQUIRE(zx);
    CHECK(xz->sign == 1);
    CHECK(zx->sign == 1);
    CHECK(xz->mono == zx->mono);

    auto zz = multiply(g, z, z);
    REQUIRE(zz);
    CHECK(zz->mono == generator_monomial(g, 2, 2));
}

TEST_CASE("multiply is associative and graded-commutative (exhaustive to weight 4)")
{
    const auto g = mixed();
    const auto monos = all_monomials(g, 4);
    auto weight_of = [&](const Monomial& m) { return total_weight(degree_of(g, m).weight); };
    for (const auto& a : monos)
        for (const auto& b : monos) {
            if (weight_of(a) + weight_of(b) > 4)
                continue;
            auto ab = multiply(g, a, b);
            auto ba = multiply(g, b, a);
            REQUIRE(ab.has_value() == ba.has_value());
            if (ab) {
                const int ha = degree_of(g, a).homdeg;
                const int hb = degree_of(g, b).homdeg;
                CHECK(ab->mono == ba->mono);
                CHECK(ab->sign == ((ha * hb) % 2 == 0 ? 1 : -1) * ba->sign);
                CHECK(degree_of(g, ab->mono).homdeg == ha + hb);
            }
            for (const auto& c : monos) {
                if (weight_of(a) + weight_of(b) + weight_of(c) > 4)
                    continue;
                Polynomial pa{{a, 1}}, pb{{b, 1}}, pc{{c, 1}};
                CHECK(multiply(g, multiply(g, pa, pb), pc) == multiply(g, pa, multiply(g, pb, pc)));
            }
        }
}

TEST_CASE("hilbert series examples")
{
    GeneratorSpace odd(1);
    odd.add({"a", {{1}, 1}});
    auto h = hilbert_series(odd, 4, 10);
    TruncatedSeries expect = TruncatedSeries::one(1, 4, 10);
    expect.add_term({{1}, 1}, 1);
    CHECK(h == expect);

    GeneratorSpace even(1);
    even.add({"b", {{1}, 2}});
    auto he = hilbert_series(even, 5, 10);
    for (int n = 0; n <= 5; ++n)
        CHECK(he.coeff({n}, 2 * n) == (2 * n <= 10 ? 1 : 0));
    CHECK(he.terms().size() == 6);

    auto hp = hilbert_series(r2_pair(), 2, 20);
    CHECK(hp.coeff({2}, 8) == 1);
    CHECK(hp.coeff({2}, 7) == 1);
    CHECK(hp.weight_total({2}) == 2);
}

TEST_CASE("hilbert series coefficients equal basis sizes")
{
    const auto g = mixed();
    const int max_s = 4, max_t = 30;
    const auto h = hilbert_series(g, max_s, max_t);
    for (const auto& w : weights_up_to(2, max_s)) {
        CAPTURE(w[0]);
        CAPTURE(w[1]);
        const auto basis = monomial_basis(g, w);
        for (int t = 0; t <= max_t; ++t) {
            auto it = basis.find(t);
            const size_t count = it == basis.end() ? 0 : it->second.size();
            CHECK(h.coeff(w, t) == Rational(static_cast<long>(count)));
        }
    }
}

TEST_CASE("basis sizes are invariant under generator relabeling")
{
    const auto g = mixed();
    std::vector<size_t> perm(g.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        GeneratorSpace p(2);
        for (size_t i : perm)
            p.add(g[i]);
        for (const auto& w : weights_up_to(2, 5)) {
            auto a = monomial_basis(g, w);
            auto b = monomial_basis(p, w);
            REQUIRE(a.size() == b.size());
            for (const auto& [h, v] : a)
                CHECK(b.at(h).size() == v.size());
        }
    }
}

TEST_CASE("monomial_basis is lexicographic and duplicate-free")
{
    const auto g = mixed();
    for (const auto& w : weights_up_to(2, 4))
        for (const auto& [h, v] : monomial_basis(g, w)) {
            CHECK(std::is_sorted(v.begin(), v.end()));
            CHECK(std::adjacent_find(v.begin(), v.end()) == v.end());
            for (const auto& m : v) {
                CHECK(degree_of(g, m).weight == w);
                CHECK(degree_of(g, m).homdeg == h);
            }
        }
}

TEST_CASE("weights_up_to")
{
    auto w = weights_up_to(2, 2);
    CHECK(w.size() == 6);
    CHECK(w.front() == Weight{0, 0});
    for (size_t i = 1; i < w.size(); ++i)
        CHECK(total_weight(w[i - 1]) <= total_weight(w[i]));
}
