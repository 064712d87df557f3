#include "confspace/bar_oracle.hpp"

#include <algorithm>
#include <functional>

namespace confspace {

namespace {

struct BarAlgebras {
    GeneratorSpace r_space{1};
    GeneratorSpace s_space{1};
    std::vector<Polynomial> phi_gen; // image in R of each S generator
    Weight block;                    // weight of one collision, (k, ..., k)
};

Monomial restrict_to(const Monomial& m, size_t n)
{
    return Monomial{std::vector<int>(m.exps.begin(), m.exps.begin() + static_cast<long>(n))};
}

BarAlgebras make_algebras(const GeneratorAssignment& g)
{
    BarAlgebras a;
    a.r_space = g.point_space();
    a.s_space = GeneratorSpace(g.m);
    a.block = Weight(g.m, g.k);
    for (size_t i = g.num_point; i < g.space.size(); ++i) {
        Generator gen = g.space[i];
        gen.label = "y" + gen.label.substr(1);
        gen.degree.homdeg -= 1;
        a.s_space.add(gen);
        Polynomial img;
        for (const auto& [m, c] : g.delta.at(i))
            add_term(img, restrict_to(m, g.num_point), c);
        a.phi_gen.push_back(std::move(img));
    }
    return a;
}

class PhiCache {
public:
    explicit PhiCache(const BarAlgebras& a) : a_(a) {}

    // algebra map S -> R on a monomial, as the ordered product of generator images
    const Polynomial& operator()(const Monomial& s)
    {
        auto it = cache_.find(s);
        if (it != cache_.end())
            return it->second;
        Polynomial acc{{unit_monomial(a_.r_space), Rational(1)}};
        for (size_t i = 0; i < s.exps.size(); ++i)
            for (int e = 0; e < s.exps[i]; ++e)
                acc = multiply(a_.r_space, acc, a_.phi_gen[i]);
        return cache_.emplace(s, std::move(acc)).first->second;
    }

private:
    const BarAlgebras& a_;
    std::map<Monomial, Polynomial> cache_;
};

bool fits(const Weight& w, const Weight& u)
{
    for (size_t i = 0; i < w.size(); ++i)
        if (u[i] > w[i])
            return false;
    return true;
}

Weight minus(Weight w, const Weight& u)
{
    for (size_t i = 0; i < w.size(); ++i)
        w[i] -= u[i];
    return w;
}

Weight times(const Weight& u, int j)
{
    Weight out(u);
    for (auto& x : out)
        x *= j;
    return out;
}

} // namespace

BarSlice build_bar_slice(const ComplexSpec& spec, const Weight& w, size_t guard)
{
    const auto g = build_generators(spec);
    const auto alg = make_algebras(g);
    BarSlice slice;
    slice.weight = w;
    size_t count = 0;

    std::vector<Monomial> factors;
    std::function<void(const Weight&, int)> rec = [&](const Weight& left, int sdeg) {
        for_each_monomial(alg.r_space, left, [&](const Monomial& r) {
            if (++count > guard)
                throw GuardLimitExceeded("bar complex basis exceeds guard limit of " + std::to_string(guard));
            const int deg = degree_of(alg.r_space, r).homdeg + sdeg;
            slice.basis[deg].push_back({r, factors});
        });
        if (alg.s_space.size() == 0)
            return;
        for (int j = 1; fits(left, times(alg.block, j)); ++j) {
            const Weight u = times(alg.block, j);
            for_each_monomial(alg.s_space, u, [&](const Monomial& s) {
                factors.push_back(s);
                rec(minus(left, u), sdeg + degree_of(alg.s_space, s).homdeg + 1);
                factors.pop_back();
            });
        }
    };
    rec(w, 0);

    std::map<int, std::map<BarElement, size_t>> index;
    for (auto& [deg, elems] : slice.basis) {
        std::sort(elems.begin(), elems.end());
        slice.chains.dims[deg] = elems.size();
        for (size_t i = 0; i < elems.size(); ++i)
            index[deg][elems[i]] = i;
    }

    PhiCache phi(alg);
    for (const auto& [deg, elems] : slice.basis) {
        auto below = index.find(deg - 1);
        SparseRationalMatrix dmat(below == index.end() ? 0 : below->second.size(), elems.size());
        bool any = false;
        for (size_t col = 0; col < elems.size(); ++col) {
            const auto& e = elems[col];
            if (e.s.empty())
                continue;
            const int rdeg = degree_of(alg.r_space, e.r).homdeg;
            auto put = [&](const BarElement& target, const Rational& c) {
                if (below == index.end())
                    throw ContractViolation("bar differential leaves the basis");
                dmat.add(below->second.at(target), col, c);
                any = true;
            };

            // r[s1|...] -> (-1)^{|r|} (r . phi(s1)) [s2|...]
            {
                const Rational sign = rdeg % 2 == 0 ? 1 : -1;
                std::vector<Monomial> rest(e.s.begin() + 1, e.s.end());
                for (const auto& [m, c] : multiply(alg.r_space, Polynomial{{e.r, Rational(1)}}, phi(e.s[0])))
                    put({m, rest}, sign * c);
            }
            // merge s_i s_{i+1} with sign (-1)^{|r| + sum_{j<=i} (|s_j| + 1)}
            int eps = rdeg;
            for (size_t i = 0; i + 1 < e.s.size(); ++i) {
                eps += degree_of(alg.s_space, e.s[i]).homdeg + 1;
                auto prod = multiply(alg.s_space, e.s[i], e.s[i + 1]);
                if (!prod)
                    continue;
                std::vector<Monomial> merged;
                for (size_t j = 0; j < e.s.size(); ++j) {
                    if (j == i) {
                        merged.push_back(prod->mono);
                        ++j;
                    } else {
                        merged.push_back(e.s[j]);
                    }
                }
                put({e.r, merged}, Rational(prod->sign * (eps % 2 == 0 ? 1 : -1)));
            }
        }
        if (any)
            slice.chains.differential[deg] = std::move(dmat);
    }
    check_square_zero(slice.chains);
    return slice;
}

std::map<int, size_t> tor_dims_via_bar(const ComplexSpec& spec, const Weight& w, size_t guard)
{
    return homology_dims(build_bar_slice(spec, w, guard).chains);
}

OracleReport compare_oracle(const ComplexSpec& spec, const Weight& w, size_t guard)
{
    OracleReport rep;
    rep.weight = w;
    rep.bar = tor_dims_via_bar(spec, w, guard);
    rep.koszul = homology_dims(build_slice(spec, w));
    return rep;
}

} // namespace confspace
