#include "confspace/stability.hpp"

#include "confspace/parallel.hpp"

#include <iomanip>
#include <sstream>

namespace confspace {

size_t BettiTable::at(int n, int i) const
{
    if (n < 0 || n > n_max_ || i < 0 || i > i_max_)
        throw PreconditionError("Betti table index out of range");
    auto it = dims_.find({n, i});
    return it == dims_.end() ? 0 : it->second;
}

void BettiTable::set(int n, int i, size_t dim, std::string provenance)
{
    if (n < 0 || n > n_max_ || i < 0 || i > i_max_)
        return;
    if (dim != 0)
        dims_[{n, i}] = dim;
    provenance_[{n, i}] = std::move(provenance);
}

const std::string& BettiTable::provenance(int n, int i) const
{
    static const std::string none;
    auto it = provenance_.find({n, i});
    return it == provenance_.end() ? none : it->second;
}

std::vector<size_t> BettiTable::row(int n) const
{
    std::vector<size_t> out(i_max_ + 1);
    for (int i = 0; i <= i_max_; ++i)
        out[i] = at(n, i);
    return out;
}

std::string BettiTable::to_csv() const
{
    std::ostringstream os;
    os << "n,i,dim\n";
    for (int n = 0; n <= n_max_; ++n)
        for (int i = 0; i <= i_max_; ++i)
            os << n << "," << i << "," << at(n, i) << "\n";
    return os.str();
}

std::string BettiTable::to_pretty() const
{
    std::ostringstream os;
    os << std::setw(4) << "n\\i";
    for (int i = 0; i <= i_max_; ++i)
        os << std::setw(6) << i;
    os << "\n";
    for (int n = 0; n <= n_max_; ++n) {
        os << std::setw(4) << n;
        for (int i = 0; i <= i_max_; ++i)
            os << std::setw(6) << at(n, i);
        os << "\n";
    }
    return os.str();
}

BettiTable config_betti(const ManifoldData& man, int n_max, int i_max, int jobs)
{
    if (n_max < 0 || i_max < 0)
        throw PreconditionError("bounds must be non-negative");
    const auto gens = build_generators({man, 1, 2});
    auto rows = parallel_map(static_cast<size_t>(n_max) + 1, jobs, [&](size_t n) {
        const Weight w{static_cast<int>(n)};
        return homology_dims(build_slice(gens, w));
    });
    BettiTable table(n_max, i_max);
    for (int n = 0; n <= n_max; ++n) {
        const int top = 2 * man.dim * n;
        for (int i = 0; i <= i_max; ++i) {
            auto it = rows[n].find(top - i);
            const size_t dim = it == rows[n].end() ? 0 : it->second;
            table.set(n, i, dim, "slice (1,2) weight " + std::to_string(n) + " homdeg " + std::to_string(top - i));
        }
    }
    return table;
}

std::map<int, size_t> cone_cohomology(const ManifoldData& man, int n)
{
    return to_cohomological(homology_dims(build_cone_slice(man, n)), man.dim, Weight{n});
}

std::vector<ConeRow> cone_vanishing(const ManifoldData& man, int n_max, int jobs)
{
    const auto gens = build_cone_generators(man);
    auto dims = parallel_map(static_cast<size_t>(n_max) + 1, jobs, [&](size_t n) {
        const Weight w{static_cast<int>(n)};
        return to_cohomological(homology_dims(build_slice(gens, w)), man.dim, w);
    });
    std::vector<ConeRow> out;
    for (int n = 0; n <= n_max; ++n) {
        ConeRow row{n, dims[n], -1, -1};
        if (!row.dims.empty()) {
            row.min_nonzero = row.dims.begin()->first;
            row.max_nonzero = row.dims.rbegin()->first;
        }
        out.push_back(std::move(row));
    }
    return out;
}

double surjective_bound(int dim, int n)
{
    if (dim >= 3)
        return n;
    if (dim == 2)
        return n / 2.0;
    return 0;
}

double iso_bound(int dim, int n)
{
    return dim >= 3 ? n - 1 : 0;
}

std::string RangeReport::to_string() const
{
    std::ostringstream os;
    os << "stability ranges for d = " << dim << ", n <= " << n_max << ": "
       << (ok() ? "consistent" : "VIOLATED") << "\n";
    for (const auto& v : violations)
        os << "  n=" << v.n << " i=" << v.i << ": " << v.what << "\n";
    for (const auto& [n, i] : observed_stable_below)
        os << "  n=" << n << ": dim H^i(C_" << n - 1 << ") = dim H^i(C_" << n << ") for all i < " << i << "\n";
    return os.str();
}

RangeReport verify_ranges(const ManifoldData& man, int n_max, int jobs)
{
    RangeReport rep{man.dim, n_max, {}, {}};
    const int i_max = 2 * man.dim * n_max;
    const auto table = config_betti(man, n_max, i_max, jobs);
    const auto cone = cone_vanishing(man, n_max, jobs);

    for (int n = 1; n <= n_max; ++n) {
        const double surj = surjective_bound(man.dim, n);
        const double iso = iso_bound(man.dim, n);
        int stable_below = i_max + 1;
        for (int i = 0; i <= i_max; ++i) {
            const size_t before = table.at(n - 1, i);
            const size_t after = table.at(n, i);
            if (before != after && stable_below > i)
                stable_below = i;
            if (i < surj && before < after)
                rep.violations.push_back({n, i, "dim H^i(C_{n-1}) < dim H^i(C_n) inside the surjective range"});
            if (i < iso && before != after)
                rep.violations.push_back({n, i, "dims differ inside the isomorphism range"});
            if (i < surj) {
                auto it = cone[n].dims.find(i);
                if (it != cone[n].dims.end())
                    rep.violations.push_back({n, i, "cone homology nonzero inside the vanishing range"});
            }
        }
        rep.observed_stable_below[n] = stable_below;
    }
    return rep;
}

} // namespace confspace
