#include <doctest.h>

#include "confspace/complex.hpp"

using namespace confspace;

namespace {

std::vector<int> homdegs(const GeneratorAssignment& g, bool collision)
{
    std::vector<int> out;
    for (size_t i = 0; i < g.space.size(); ++i)
        if (g.is_collision(i) == collision)
            out.push_back(g.space[i].degree.homdeg);
    return out;
}

size_t slice_size(const WeightSlice& s)
{
    size_t n = 0;
    for (const auto& [h, v] : s.basis)
        n += v.size();
    return n;
}

} // namespace

TEST_CASE("generators of R2, R3 and the Moebius band")
{
    auto r2 = build_generators({builtin("euclidean", 2), 1, 2});
    CHECK(r2.space.size() == 2);
    CHECK(r2.space[0].label == "v_mu");
    CHECK(r2.space[0].degree == MultiDegree{{1}, 4});
    CHECK(r2.space[1].label == "w_mu");
    CHECK(r2.space[1].degree == MultiDegree{{2}, 7});

    auto r3 = build_generators({builtin("euclidean", 3), 1, 2});
    CHECK(homdegs(r3, false) == std::vector<int>{6});
    CHECK(homdegs(r3, true).empty());

    // d odd, k = 1: collision generators survive
    auto r3c = build_generators({builtin("euclidean", 3), 2, 1});
    CHECK(homdegs(r3c, false) == std::vector<int>{6, 6});
    CHECK(homdegs(r3c, true) == std::vector<int>{10});
    CHECK(r3c.space[2].degree.weight == Weight{1, 1});

    auto mo = build_generators({builtin("moebius"), 1, 2});
    CHECK(homdegs(mo, false) == std::vector<int>{3, 4});
    CHECK(homdegs(mo, true).empty());

    auto mo21 = build_generators({builtin("moebius"), 2, 1});
    CHECK(homdegs(mo21, true).empty());
    auto mo31 = build_generators({builtin("moebius"), 3, 1});
    CHECK(homdegs(mo31, true) == std::vector<int>{2 * 3 + 1 + 1, 2 * 3 + 1 + 2});
}

TEST_CASE("degenerate specs are rejected")
{
    CHECK_THROWS_AS(build_generators({builtin("euclidean", 2), 1, 1}), PreconditionError);
    CHECK_THROWS_AS(build_generators({builtin("euclidean", 2), 0, 2}), PreconditionError);
    CHECK_THROWS_AS(build_generators({builtin("euclidean", 2), 1, 0}), PreconditionError);
}

TEST_CASE("delta of collision generators")
{
    auto r2 = build_generators({builtin("euclidean", 2), 1, 2});
    CHECK(r2.delta.at(1).empty());

    const auto man = builtin("punctured_surface", 1);
    auto t = build_generators({man, 1, 2});
    size_t w_mu = t.space.size();
    for (size_t i = t.num_point; i < t.space.size(); ++i)
        if (t.space[i].label == "w_mu")
            w_mu = i;
    REQUIRE(w_mu < t.space.size());
    const auto delta = delta_on_generator(man, t, w_mu);
    REQUIRE(delta.size() == 1);
    const auto& [mono, coeff] = *delta.begin();
    CHECK(abs(coeff) == 2);
    CHECK(to_string(t.space, mono) == "v_a1*v_b1");
    CHECK(delta == t.delta.at(w_mu));
}

TEST_CASE("R2 slice at weight 2")
{
    auto s = build_slice(ComplexSpec{builtin("euclidean", 2), 1, 2}, {2});
    REQUIRE(s.basis.size() == 2);
    CHECK(s.basis.at(8).size() == 1);
    CHECK(s.basis.at(7).size() == 1);
    for (const auto& [j, d] : s.chains.differential)
        CHECK(d.is_zero());
    CHECK(homology_dims(s) == std::map<int, size_t>{{7, 1}, {8, 1}});
    CHECK(to_cohomological(homology_dims(s), 2, {2}) == std::map<int, size_t>{{0, 1}, {1, 1}});
}

TEST_CASE("unit and single-point weights")
{
    for (const auto& name : {"euclidean:2", "sphere:3", "punctured_surface:2", "moebius", "closed_surface:1"}) {
        CAPTURE(name);
        const auto man = builtin_from_spec(name);
        for (auto [m, k] : {std::pair{1, 2}, {2, 1}, {3, 1}, {2, 2}}) {
            const ComplexSpec spec{man, m, k};
            auto gens = build_generators(spec);
            auto unit = build_slice(gens, Weight(m, 0));
            CHECK(homology_dims(unit) == std::map<int, size_t>{{0, 1}});
            for (int c = 0; c < m; ++c) {
                Weight w(m, 0);
                w[c] = 1;
                auto s = build_slice(gens, w);
                std::map<int, size_t> expect;
                for (size_t i = 0; i < gens.num_point; ++i)
                    if (gens.origin[i].color == c)
                        ++expect[gens.space[i].degree.homdeg];
                CHECK(homology_dims(s) == expect);
            }
        }
    }
}

TEST_CASE("slices match monomial bases and square to zero")
{
    for (const auto& name : {"euclidean:2", "euclidean:3", "sphere:2", "punctured_surface:1", "closed_surface:1",
                             "moebius"}) {
        CAPTURE(name);
        const auto man = builtin_from_spec(name);
        for (auto [m, k] : {std::pair{1, 2}, {2, 1}, {2, 2}, {3, 1}}) {
            auto gens = build_generators({man, m, k});
            for (const auto& w : weights_up_to(m, 3)) {
                auto s = build_slice(gens, w);
                CHECK(s.basis == monomial_basis(gens.space, w));
                CHECK_NOTHROW(check_square_zero(s.chains));
                // Euler characteristic of basis and homology agree
                long chi_b = 0, chi_h = 0;
                for (const auto& [h, v] : s.basis)
                    chi_b += (h % 2 == 0 ? 1 : -1) * static_cast<long>(v.size());
                for (const auto& [h, n] : homology_dims(s))
                    chi_h += (h % 2 == 0 ? 1 : -1) * static_cast<long>(n);
                CHECK(chi_b == chi_h);
            }
        }
    }
}

TEST_CASE("differential kills point generators and is a derivation")
{
    const auto man = builtin("punctured_surface", 1);
    auto gens = build_generators({man, 1, 2});
    for (size_t i = 0; i < gens.num_point; ++i)
        CHECK(differential(gens, generator_monomial(gens.space, i)).empty());
    for (size_t i = gens.num_point; i < gens.space.size(); ++i)
        CHECK(differential(gens, generator_monomial(gens.space, i)) == gens.delta.at(i));
}

TEST_CASE("cone complex")
{
    auto r2 = build_cone_generators(builtin("euclidean", 2));
    CHECK(r2.num_point == 0);
    REQUIRE(r2.space.size() == 1);
    CHECK(r2.space[0].label == "w_mu");
    auto s = build_cone_slice(builtin("euclidean", 2), 2);
    CHECK(slice_size(s) == 1);
    CHECK(s.basis.at(7).size() == 1);

    auto t = build_cone_generators(builtin("punctured_surface", 1));
    REQUIRE(t.num_point == 2);
    CHECK(t.space[0].label == "v_a1");
    CHECK(t.space[1].label == "v_b1");
    CHECK(t.space.size() - t.num_point == build_generators({builtin("punctured_surface", 1), 1, 2}).space.size() - 3);

    auto unit = build_cone_slice(builtin("sphere", 2), 0);
    CHECK(homology_dims(unit) == std::map<int, size_t>{{0, 1}});
}

TEST_CASE("cohomological reindexing")
{
    CHECK(to_cohomological({{12, 1}, {11, 2}}, 2, {3}) == std::map<int, size_t>{{0, 1}, {1, 2}});
    CHECK(to_cohomological({{10, 1}}, 3, {1, 1}) == std::map<int, size_t>{{2, 1}});
}
