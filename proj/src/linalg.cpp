#include "confspace/linalg.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

namespace confspace {

SparseRationalMatrix::SparseRationalMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

SparseRationalMatrix SparseRationalMatrix::from_entries(size_t rows, size_t cols, const std::vector<Entry>& entries)
{
    SparseRationalMatrix m(rows, cols);
    for (const auto& e : entries) {
        if (e.row >= rows || e.col >= cols)
            throw PreconditionError("matrix entry out of range");
        if (e.value == 0)
            throw PreconditionError("explicit zero entry");
        if (!m.data_[e.row].emplace(e.col, e.value).second)
            throw PreconditionError("duplicate matrix entry");
    }
    return m;
}

size_t SparseRationalMatrix::nnz() const
{
    size_t n = 0;
    for (const auto& r : data_)
        n += r.size();
    return n;
}

void SparseRationalMatrix::add(size_t r, size_t c, const Rational& value)
{
    if (r >= rows_ || c >= cols_)
        throw PreconditionError("matrix entry out of range");
    if (value == 0)
        return;
    auto& row = data_[r];
    auto [it, inserted] = row.try_emplace(c, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0)
            row.erase(it);
    }
}

Rational SparseRationalMatrix::at(size_t r, size_t c) const
{
    auto it = data_.at(r).find(c);
    return it == data_[r].end() ? Rational(0) : it->second;
}

std::vector<SparseRationalMatrix::Entry> SparseRationalMatrix::entries() const
{
    std::vector<Entry> out;
    for (size_t r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r])
            out.push_back({r, c, v});
    return out;
}

SparseRationalMatrix SparseRationalMatrix::transpose() const
{
    SparseRationalMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r])
            t.data_[c].emplace(r, v);
    return t;
}

SparseRationalMatrix SparseRationalMatrix::operator*(const SparseRationalMatrix& o) const
{
    if (cols_ != o.rows_)
        throw PreconditionError("matrix dimensions do not match");
    SparseRationalMatrix p(rows_, o.cols_);
    for (size_t r = 0; r < rows_; ++r)
        for (const auto& [k, v] : data_[r])
            for (const auto& [c, w] : o.data_[k])
                p.add(r, c, v * w);
    return p;
}

namespace {

using IntRow = std::vector<std::pair<size_t, Integer>>;

void make_primitive(IntRow& row)
{
    if (row.empty())
        return;
    Integer g = 0;
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1)
            return;
    }
    for (auto& [c, v] : row)
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

IntRow integer_row(const std::map<size_t, Rational>& row)
{
    Integer l = 1;
    for (const auto& [c, v] : row)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    IntRow out;
    out.reserve(row.size());
    for (const auto& [c, v] : row)
        out.emplace_back(c, Integer(v.get_num() * (l / v.get_den())));
    make_primitive(out);
    return out;
}

const Integer* find_col(const IntRow& row, size_t c)
{
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, size_t x) { return e.first < x; });
    return it != row.end() && it->first == c ? &it->second : nullptr;
}

// a*target - b*pivot, where b = target[c] and a = pivot[c], scaled down by gcd(a, b).
IntRow eliminate(const IntRow& target, const IntRow& pivot, size_t c)
{
    Integer a = *find_col(pivot, c);
    Integer b = *find_col(target, c);
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    a /= g;
    b /= g;
    IntRow out;
    out.reserve(target.size() + pivot.size());
    size_t i = 0, j = 0;
    while (i < target.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
            out.emplace_back(target[i].first, a * target[i].second);
            ++i;
        } else if (i == target.size() || pivot[j].first < target[i].first) {
            out.emplace_back(pivot[j].first, -b * pivot[j].second);
            ++j;
        } else {
            Integer v = a * target[i].second - b * pivot[j].second;
            if (v != 0)
                out.emplace_back(target[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    make_primitive(out);
    return out;
}

} // namespace

size_t rank(const SparseRationalMatrix& a)
{
    std::vector<IntRow> rows;
    std::vector<std::set<size_t>> col_rows(a.cols());
    std::set<std::pair<size_t, size_t>> by_length;
    for (size_t r = 0; r < a.rows(); ++r) {
        if (a.row(r).empty())
            continue;
        const size_t id = rows.size();
        rows.push_back(integer_row(a.row(r)));
        for (const auto& [c, v] : rows[id])
            col_rows[c].insert(id);
        by_length.emplace(rows[id].size(), id);
    }

    size_t result = 0;
    while (!by_length.empty()) {
        const size_t p = by_length.begin()->second;
        by_length.erase(by_length.begin());
        IntRow pivot = std::move(rows[p]);
        rows[p].clear();

        size_t c = pivot.front().first;
        for (const auto& [col, v] : pivot)
            if (col_rows[col].size() < col_rows[c].size())
                c = col;
        for (const auto& [col, v] : pivot)
            col_rows[col].erase(p);

        const std::vector<size_t> targets(col_rows[c].begin(), col_rows[c].end());
        for (size_t t : targets) {
            by_length.erase({rows[t].size(), t});
            for (const auto& [col, v] : rows[t])
                col_rows[col].erase(t);
            rows[t] = eliminate(rows[t], pivot, c);
            for (const auto& [col, v] : rows[t])
                col_rows[col].insert(t);
            if (!rows[t].empty())
                by_length.emplace(rows[t].size(), t);
        }
        ++result;
    }
    return result;
}

void check_square_zero(const ChainComplex& c)
{
    for (const auto& [j, d] : c.differential) {
        auto below = c.differential.find(j - 1);
        if (below == c.differential.end())
            continue;
        if (below->second.cols() != d.rows())
            throw ContractViolation("differential shapes do not compose at degree " + std::to_string(j));
        if (!(below->second * d).is_zero())
            throw ContractViolation("d^2 != 0 at degree " + std::to_string(j));
    }
}

std::map<int, size_t> homology_dims(const ChainComplex& c)
{
    check_square_zero(c);
    std::map<int, size_t> ranks;
    for (const auto& [j, d] : c.differential) {
        auto src = c.dims.find(j);
        auto dst = c.dims.find(j - 1);
        const size_t src_dim = src == c.dims.end() ? 0 : src->second;
        const size_t dst_dim = dst == c.dims.end() ? 0 : dst->second;
        if (d.cols() != src_dim || d.rows() != dst_dim)
            throw ContractViolation("differential at degree " + std::to_string(j) + " has the wrong shape");
        ranks[j] = rank(d);
    }
    std::map<int, size_t> out;
    for (const auto& [j, n] : c.dims) {
        const size_t out_rank = ranks.contains(j) ? ranks[j] : 0;
        const size_t in_rank = ranks.contains(j + 1) ? ranks[j + 1] : 0;
        const size_t h = n - out_rank - in_rank;
        if (h != 0)
            out[j] = h;
    }
    return out;
}

} // namespace confspace
