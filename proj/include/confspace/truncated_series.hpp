#pragma once

#include "confspace/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace confspace {

/// Exponent of a term: s_1^{s[0]} ... s_m^{s[m-1]} t^t.
struct SeriesKey {
    std::vector<int> s;
    int t = 0;

    friend auto operator<=>(const SeriesKey&, const SeriesKey&) = default;
};

/**
 * Multivariate power series in weight variables s_1..s_m and a degree
 * variable t, truncated at total s-degree max_s and t-degree max_t.
 * Terms beyond the truncation are never stored.
 */
class TruncatedSeries {
public:
    TruncatedSeries(int num_s, int max_s, int max_t);

    static TruncatedSeries one(int num_s, int max_s, int max_t);

    int num_s() const { return num_s_; }
    int max_s() const { return max_s_; }
    int max_t() const { return max_t_; }

    bool in_range(const SeriesKey& k) const;

    Rational coeff(const SeriesKey& k) const;
    Rational coeff(const std::vector<int>& s, int t) const { return coeff({s, t}); }

    /// Adds c to the coefficient of k; silently ignores out-of-range keys.
    void add_term(const SeriesKey& k, const Rational& c);

    const std::map<SeriesKey, Rational>& terms() const { return terms_; }

    /// Sum over t of the coefficients at weight s (i.e. t -> 1).
    Rational weight_total(const std::vector<int>& s) const;

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    bool operator==(const TruncatedSeries& o) const;

    /// (1 - c s^w t^h)^e for integer e of either sign, via the binomial series.
    static TruncatedSeries binomial_power(int num_s, int max_s, int max_t, const std::vector<int>& w, int h,
                                          const Rational& c, long e);

    /// Same series with a new (smaller or equal) truncation.
    TruncatedSeries truncated(int max_s, int max_t) const;

    /// Terms ordered by total s-degree, then s exponents, then t; "coeff * t^i * s1^n1 ..." joined by " + ".
    std::string to_string() const;

    /// CSV rows "s1,...,sm,t,coeff" with header.
    std::string to_csv() const;

private:
    int num_s_;
    int max_s_;
    int max_t_;
    std::map<SeriesKey, Rational> terms_;
};

} // namespace confspace
