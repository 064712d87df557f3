#include "confspace/truncated_series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace confspace {

namespace {

int total(const std::vector<int>& s)
{
    return std::accumulate(s.begin(), s.end(), 0);
}

} // namespace

TruncatedSeries::TruncatedSeries(int num_s, int max_s, int max_t) : num_s_(num_s), max_s_(max_s), max_t_(max_t)
{
    if (num_s < 0 || max_s < 0 || max_t < 0)
        throw PreconditionError("truncation bounds must be non-negative");
}

TruncatedSeries TruncatedSeries::one(int num_s, int max_s, int max_t)
{
    TruncatedSeries r(num_s, max_s, max_t);
    r.add_term({std::vector<int>(num_s, 0), 0}, 1);
    return r;
}

bool TruncatedSeries::in_range(const SeriesKey& k) const
{
    if (static_cast<int>(k.s.size()) != num_s_ || k.t < 0 || k.t > max_t_)
        return false;
    if (std::any_of(k.s.begin(), k.s.end(), [](int e) { return e < 0; }))
        return false;
    return total(k.s) <= max_s_;
}

Rational TruncatedSeries::coeff(const SeriesKey& k) const
{
    if (!in_range(k))
        throw PreconditionError("coefficient requested beyond truncation");
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::add_term(const SeriesKey& k, const Rational& c)
{
    if (c == 0 || !in_range(k))
        return;
    auto& slot = terms_[k];
    slot += c;
    if (slot == 0)
        terms_.erase(k);
}

Rational TruncatedSeries::weight_total(const std::vector<int>& s) const
{
    Rational sum = 0;
    for (auto it = terms_.lower_bound({s, 0}); it != terms_.end() && it->first.s == s; ++it)
        sum += it->second;
    return sum;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const
{
    TruncatedSeries r(num_s_, std::min(max_s_, o.max_s_), std::min(max_t_, o.max_t_));
    for (const auto& [k, c] : terms_)
        r.add_term(k, c);
    for (const auto& [k, c] : o.terms_)
        r.add_term(k, c);
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const
{
    if (num_s_ != o.num_s_)
        throw PreconditionError("series in different numbers of variables");
    TruncatedSeries r(num_s_, std::min(max_s_, o.max_s_), std::min(max_t_, o.max_t_));
    SeriesKey k;
    k.s.resize(num_s_);
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) {
            for (int i = 0; i < num_s_; ++i)
                k.s[i] = ka.s[i] + kb.s[i];
            k.t = ka.t + kb.t;
            r.add_term(k, ca * cb);
        }
    return r;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const
{
    return num_s_ == o.num_s_ && max_s_ == o.max_s_ && max_t_ == o.max_t_ && terms_ == o.terms_;
}

TruncatedSeries TruncatedSeries::binomial_power(int num_s, int max_s, int max_t, const std::vector<int>& w, int h,
                                                const Rational& c, long e)
{
    TruncatedSeries r(num_s, max_s, max_t);
    const int step = total(w);
    if (step == 0 && h == 0)
        throw PreconditionError("binomial_power needs a term of positive degree");
    // (1 - x)^e = sum_j binom(e, j) (-x)^j, generalized binomial for e < 0
    Rational binom = 1;
    Rational power = 1;
    for (long j = 0;; ++j) {
        SeriesKey k{std::vector<int>(num_s), static_cast<int>(h * j)};
        for (int i = 0; i < num_s; ++i)
            k.s[i] = w[i] * static_cast<int>(j);
        if (total(k.s) > max_s || k.t > max_t)
            break;
        r.add_term(k, binom * power);
        if (e >= 0 && j >= e)
            break;
        binom = binom * Rational(e - j) / Rational(j + 1);
        power *= -c;
    }
    return r;
}

TruncatedSeries TruncatedSeries::truncated(int max_s, int max_t) const
{
    TruncatedSeries r(num_s_, std::min(max_s, max_s_), std::min(max_t, max_t_));
    for (const auto& [k, c] : terms_)
        r.add_term(k, c);
    return r;
}

namespace {

std::vector<std::pair<SeriesKey, Rational>> graded_order(const std::map<SeriesKey, Rational>& terms)
{
    std::vector<std::pair<SeriesKey, Rational>> out(terms.begin(), terms.end());
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        const int ta = total(a.first.s), tb = total(b.first.s);
        if (ta != tb)
            return ta < tb;
        return a.first < b.first;
    });
    return out;
}

} // namespace

std::string TruncatedSeries::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : graded_order(terms_)) {
        if (!first)
            os << " + ";
        first = false;
        os << c.get_str();
        if (k.t != 0)
            os << " * t^" << k.t;
        for (int i = 0; i < num_s_; ++i)
            if (k.s[i] != 0)
                os << " * s" << (i + 1) << "^" << k.s[i];
    }
    return os.str();
}

std::string TruncatedSeries::to_csv() const
{
    std::ostringstream os;
    for (int i = 0; i < num_s_; ++i)
        os << "s" << (i + 1) << ",";
    os << "t,coeff\n";
    for (const auto& [k, c] : graded_order(terms_)) {
        for (int e : k.s)
            os << e << ",";
        os << k.t << "," << c.get_str() << "\n";
    }
    return os.str();
}

} // namespace confspace
