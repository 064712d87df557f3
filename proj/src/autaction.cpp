#include "confspace/autaction.hpp"

#include "confspace/gca.hpp"
#include "confspace/linalg.hpp"

#include <sstream>

namespace confspace {

ResidualActionReport residual_action_dims(const ManifoldData& man)
{
    if (!man.orientable || man.dim % 2 != 0)
        throw PreconditionError("requires orientable, even-dimensional M");

    // H~_q(M+) is dual to H_c^q(M); one generator per class, in degree q
    const auto& classes = man.classes(Twist::untwisted);
    GeneratorSpace h(1);
    for (const auto& c : classes)
        h.add({c.label, {{1}, c.deg}});

    ResidualActionReport rep;
    for (const auto& c : classes)
        ++rep.homology[c.deg];

    const auto squares = monomial_basis(h, {2});
    for (const auto& [p, basis] : squares) {
        std::map<Monomial, size_t> index;
        for (size_t i = 0; i < basis.size(); ++i)
            index[basis[i]] = i;
        // columns: Delta_* of each class of degree p
        std::vector<size_t> targets;
        for (size_t y = 0; y < classes.size(); ++y)
            if (classes[y].deg == p)
                targets.push_back(y);
        SparseRationalMatrix image(basis.size(), targets.size());
        for (size_t col = 0; col < targets.size(); ++col)
            for (size_t x = 0; x < classes.size(); ++x)
                for (size_t x2 = 0; x2 < classes.size(); ++x2) {
                    const auto prod = man.cup({Twist::untwisted, x}, {Twist::untwisted, x2});
                    auto it = prod.find(targets[col]);
                    if (it == prod.end())
                        continue;
                    auto mono = multiply(h, generator_monomial(h, x), generator_monomial(h, x2));
                    if (mono)
                        image.add(index.at(mono->mono), col, mono->sign * it->second);
                }
        const size_t q = basis.size() - rank(image);
        if (q != 0)
            rep.quotient[p] = q;
    }

    for (const auto& [q, n] : rep.homology) {
        auto it = rep.quotient.find(q + 1);
        if (it == rep.quotient.end())
            continue;
        rep.by_degree[q] = n * it->second;
        rep.total += n * it->second;
    }
    return rep;
}

std::string ResidualActionReport::to_string() const
{
    std::ostringstream os;
    for (const auto& [q, n] : by_degree)
        os << "Hom(H~_" << q << ", (S^2/Delta)_" << q + 1 << "): " << n << "\n";
    os << "total: " << total << "\n";
    return os.str();
}

std::string ResidualActionReport::to_csv() const
{
    std::ostringstream os;
    os << "degree,dim\n";
    for (const auto& [q, n] : by_degree)
        os << q << "," << n << "\n";
    os << "total," << total << "\n";
    return os.str();
}

} // namespace confspace
