#include <doctest.h>

#include "confspace/autaction.hpp"

#include <random>

using namespace confspace;

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Matrix inverse(Matrix a)
{
    const size_t n = a.size();
    Matrix inv(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        inv[i][i] = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (a[p][c] == 0)
            ++p;
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        const Rational s = a[c][c];
        for (size_t j = 0; j < n; ++j) {
            a[c][j] /= s;
            inv[c][j] /= s;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0)
                continue;
            const Rational f = a[i][c];
            for (size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

// Rewrites the untwisted cup table in the basis e'_i = sum_a p[i][a] e_a,
// where p only mixes classes of equal degree.
ManifoldData change_basis(const ManifoldData& m, const Matrix& p)
{
    const Matrix pinv = inverse(p);
    const auto n = m.hc[0].size();
    ManifoldData out = m;
    std::erase_if(out.cup_table, [](const auto& kv) {
        return kv.first.first.twist == Twist::untwisted && kv.first.second.twist == Twist::untwisted;
    });
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Combination old;
            for (size_t a = 0; a < n; ++a)
                for (size_t b = 0; b < n; ++b) {
                    if (p[i][a] == 0 || p[j][b] == 0)
                        continue;
                    for (const auto& [r, c] : m.cup({Twist::untwisted, a}, {Twist::untwisted, b}))
                        old[r] += p[i][a] * p[j][b] * c;
                }
            // express sum_r old[r] e_r in the new basis: e_r = sum_s pinv[r][s] e'_s
            Combination fresh;
            for (const auto& [r, c] : old)
                for (size_t s = 0; s < n; ++s)
                    if (pinv[r][s] != 0)
                        fresh[s] += c * pinv[r][s];
            std::erase_if(fresh, [](const auto& kv) { return kv.second == 0; });
            if (!fresh.empty())
                out.cup_table[{{Twist::untwisted, i}, {Twist::untwisted, j}}] = fresh;
        }
    return out;
}

Matrix random_degree_preserving(const ManifoldData& m, std::mt19937& rng)
{
    std::uniform_int_distribution<int> val(-3, 3);
    const auto& cls = m.hc[0];
    const size_t n = cls.size();
    Matrix p(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i) {
        p[i][i] = val(rng) >= 0 ? 1 : -2;
        for (size_t j = 0; j < i; ++j)
            if (cls[i].deg == cls[j].deg)
                p[i][j] = val(rng);
    }
    return p;
}

} // namespace

TEST_CASE("R2 has no residual action")
{
    auto rep = residual_action_dims(builtin("euclidean", 2));
    CHECK(rep.homology == std::map<int, size_t>{{2, 1}});
    CHECK(rep.quotient == std::map<int, size_t>{{4, 1}});
    CHECK(rep.total == 0);
    CHECK(residual_action_dims(builtin("euclidean", 4)).total == 0);
}

TEST_CASE("punctured surfaces give the Johnson target")
{
    for (size_t g = 1; g <= 3; ++g) {
        auto rep = residual_action_dims(builtin("punctured_surface", static_cast<int>(g)));
        CHECK(rep.total == 2 * g * g * (2 * g - 1));
        CHECK(rep.homology == std::map<int, size_t>{{1, 2 * g}, {2, 1}});
        // Lambda^2 H_1 minus the intersection form, plus H_1 (x) H_2
        CHECK(rep.quotient.at(3) == 2 * g);
        CHECK(rep.by_degree.at(2) == 2 * g);
        if (g > 1)
            CHECK(rep.by_degree.at(1) == 2 * g * (g * (2 * g - 1) - 1));
    }
}

TEST_CASE("preconditions")
{
    CHECK_THROWS_AS(residual_action_dims(builtin("moebius")), PreconditionError);
    CHECK_THROWS_AS(residual_action_dims(builtin("euclidean", 3)), PreconditionError);
}

TEST_CASE("residual action is invariant under change of basis")
{
    std::mt19937 rng(2026);
    for (const auto& name : {"punctured_surface:1", "punctured_surface:2", "punctured_surface:3", "closed_surface:2",
                             "sphere:2"}) {
        CAPTURE(name);
        const auto man = builtin_from_spec(name);
        const auto base = residual_action_dims(man);
        for (int trial = 0; trial < 5; ++trial) {
            const auto changed = change_basis(man, random_degree_preserving(man, rng));
            const auto rep = residual_action_dims(changed);
            CHECK(rep.by_degree == base.by_degree);
            CHECK(rep.quotient == base.quotient);
            CHECK(rep.total == base.total);
        }
    }
}

TEST_CASE("report formatting")
{
    auto rep = residual_action_dims(builtin("punctured_surface", 1));
    CHECK(rep.to_string().find("total: 2") != std::string::npos);
    CHECK(rep.to_csv() == "degree,dim\n2,2\ntotal,2\n");
}
