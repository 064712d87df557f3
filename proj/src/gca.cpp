#include "confspace/gca.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace confspace {

int total_weight(const Weight& w)
{
    return std::accumulate(w.begin(), w.end(), 0);
}

size_t GeneratorSpace::add(Generator g)
{
    if (static_cast<int>(g.degree.weight.size()) != num_weights_)
        throw PreconditionError("generator " + g.label + " has a weight of the wrong length");
    if (std::any_of(g.degree.weight.begin(), g.degree.weight.end(), [](int x) { return x < 0; }) ||
        total_weight(g.degree.weight) == 0)
        throw PreconditionError("generator " + g.label + " must have positive weight");
    if (g.degree.homdeg < 0)
        throw PreconditionError("generator " + g.label + " has negative homological degree");
    gens_.push_back(std::move(g));
    return gens_.size() - 1;
}

MultiDegree degree_of(const GeneratorSpace& g, const Monomial& m)
{
    MultiDegree d{Weight(g.num_weights(), 0), 0};
    for (size_t i = 0; i < m.exps.size(); ++i) {
        if (m.exps[i] == 0)
            continue;
        const auto& gd = g[i].degree;
        for (int j = 0; j < g.num_weights(); ++j)
            d.weight[j] += m.exps[i] * gd.weight[j];
        d.homdeg += m.exps[i] * gd.homdeg;
    }
    return d;
}

Monomial unit_monomial(const GeneratorSpace& g)
{
    return Monomial{std::vector<int>(g.size(), 0)};
}

Monomial generator_monomial(const GeneratorSpace& g, size_t i, int power)
{
    auto m = unit_monomial(g);
    m.exps.at(i) = power;
    return m;
}

std::string to_string(const GeneratorSpace& g, const Monomial& m)
{
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < m.exps.size(); ++i) {
        if (m.exps[i] == 0)
            continue;
        if (any)
            os << "*";
        any = true;
        os << g[i].label;
        if (m.exps[i] > 1)
            os << "^" << m.exps[i];
    }
    return any ? os.str() : "1";
}

std::optional<SignedMonomial> multiply(const GeneratorSpace& g, const Monomial& a, const Monomial& b)
{
    SignedMonomial out{1, Monomial{std::vector<int>(g.size(), 0)}};
    // odd factors of a that sit after an odd factor of b in canonical order
    int odd_a_after = 0;
    int swaps = 0;
    for (size_t i = g.size(); i-- > 0;) {
        const bool odd = g[i].odd();
        if (odd && a.exps[i] + b.exps[i] > 1)
            return std::nullopt;
        if (odd) {
            if (b.exps[i] == 1)
                swaps += odd_a_after;
            if (a.exps[i] == 1)
                ++odd_a_after;
        }
        out.mono.exps[i] = a.exps[i] + b.exps[i];
    }
    out.sign = swaps % 2 == 0 ? 1 : -1;
    return out;
}

void add_term(Polynomial& p, const Monomial& m, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = p.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            p.erase(it);
    }
}

Polynomial multiply(const GeneratorSpace& g, const Polynomial& a, const Polynomial& b)
{
    Polynomial out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b)
            if (auto prod = multiply(g, ma, mb))
                add_term(out, prod->mono, prod->sign * ca * cb);
    return out;
}

namespace {

void enumerate(const GeneratorSpace& g, size_t i, Weight& remaining, Monomial& cur,
               const std::function<void(const Monomial&)>& visit)
{
    if (i == g.size()) {
        if (std::all_of(remaining.begin(), remaining.end(), [](int x) { return x == 0; }))
            visit(cur);
        return;
    }
    const auto& gw = g[i].degree.weight;
    int max_e = std::numeric_limits<int>::max();
    for (size_t j = 0; j < gw.size(); ++j)
        if (gw[j] > 0)
            max_e = std::min(max_e, remaining[j] / gw[j]);
    if (g[i].odd())
        max_e = std::min(max_e, 1);
    // exponent 0 first gives lexicographic order
    for (int e = 0; e <= max_e; ++e) {
        cur.exps[i] = e;
        for (size_t j = 0; j < gw.size(); ++j)
            remaining[j] -= e * gw[j];
        enumerate(g, i + 1, remaining, cur, visit);
        for (size_t j = 0; j < gw.size(); ++j)
            remaining[j] += e * gw[j];
    }
    cur.exps[i] = 0;
}

} // namespace

void for_each_monomial(const GeneratorSpace& g, const Weight& w, const std::function<void(const Monomial&)>& visit)
{
    if (static_cast<int>(w.size()) != g.num_weights())
        throw PreconditionError("weight vector has the wrong length");
    if (std::any_of(w.begin(), w.end(), [](int x) { return x < 0; }))
        return;
    Weight remaining = w;
    Monomial cur = unit_monomial(g);
    enumerate(g, 0, remaining, cur, visit);
}

std::map<int, std::vector<Monomial>> monomial_basis(const GeneratorSpace& g, const Weight& w)
{
    std::map<int, std::vector<Monomial>> out;
    for_each_monomial(g, w, [&](const Monomial& m) { out[degree_of(g, m).homdeg].push_back(m); });
    return out;
}

TruncatedSeries hilbert_series(const GeneratorSpace& g, int max_s, int max_t)
{
    auto series = TruncatedSeries::one(g.num_weights(), max_s, max_t);
    for (const auto& gen : g.generators()) {
        const auto& d = gen.degree;
        TruncatedSeries factor(g.num_weights(), max_s, max_t);
        if (gen.odd()) {
            factor = TruncatedSeries::one(g.num_weights(), max_s, max_t);
            factor.add_term({d.weight, d.homdeg}, 1);
        } else {
            factor = TruncatedSeries::binomial_power(g.num_weights(), max_s, max_t, d.weight, d.homdeg, 1, -1);
        }
        series = series * factor;
    }
    return series;
}

std::vector<Weight> weights_up_to(int m, int max_total)
{
    std::vector<Weight> out;
    Weight cur(m, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == m) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[i] = e;
            rec(i + 1, left - e);
        }
        cur[i] = 0;
    };
    rec(0, max_total);
    std::stable_sort(out.begin(), out.end(), [](const Weight& a, const Weight& b) {
        const int ta = total_weight(a), tb = total_weight(b);
        return ta != tb ? ta < tb : a > b;
    });
    return out;
}

} // namespace confspace
