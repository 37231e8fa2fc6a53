#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace axiobench {

// Paired measurement differences (second series minus first).
struct PairedSample {
    std::vector<double> diffs;
};

inline double mean(const std::vector<double>& v) {
    if (v.empty())
        throw std::invalid_argument("mean: empty sample");
    double s = 0.0;
    for (double x : v)
        s += x;
    return s / static_cast<double>(v.size());
}

namespace detail {

struct RankSummary {
    double w_plus = 0.0;   // rank sum of positive differences
    std::size_t n = 0;     // nonzero differences
    double tie_term = 0.0; // sum of t^3 - t over tie groups
};

inline RankSummary signed_ranks(const std::vector<double>& diffs) {
    struct Entry {
        double mag;
        bool positive;
    };
    std::vector<Entry> entries;
    entries.reserve(diffs.size());
    for (double d : diffs) {
        if (!std::isfinite(d))
            throw std::invalid_argument("wilcoxon: non-finite difference");
        if (d != 0.0)
            entries.push_back({std::fabs(d), d > 0.0});
    }
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.mag < b.mag; });

    RankSummary rs;
    rs.n = entries.size();
    std::size_t i = 0;
    while (i < entries.size()) {
        std::size_t j = i;
        while (j < entries.size() && entries[j].mag == entries[i].mag)
            ++j;
        const double group = static_cast<double>(j - i);
        // ranks are 1-based: positions i..j-1 share the average rank
        const double avg_rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (std::size_t k = i; k < j; ++k)
            if (entries[k].positive)
                rs.w_plus += avg_rank;
        rs.tie_term += group * group * group - group;
        i = j;
    }
    return rs;
}

}  // namespace detail

// One-sided signed-rank z statistic for "differences are systematically
// positive". Zeros are discarded, tied magnitudes mid-ranked, variance
// tie-corrected; no continuity correction. Returns nullopt when fewer than
// 5 nonzero differences remain (not enough resolution to decide).
inline std::optional<double> wilcoxon_one_sided_z(const std::vector<double>& diffs) {
    const auto rs = detail::signed_ranks(diffs);
    if (rs.n < 5)
        return std::nullopt;
    const double n = static_cast<double>(rs.n);
    const double mean_w = n * (n + 1.0) / 4.0;
    const double var = n * (n + 1.0) * (2.0 * n + 1.0) / 24.0 - rs.tie_term / 48.0;
    if (var <= 0.0)
        return std::nullopt;
    return (rs.w_plus - mean_w) / std::sqrt(var);
}

inline std::optional<double> wilcoxon_one_sided_z(const PairedSample& p) {
    return wilcoxon_one_sided_z(p.diffs);
}

// Upper-tail normal probability for the z above.
inline double normal_one_sided_p(double z) {
    return 0.5 * std::erfc(z / std::sqrt(2.0));
}

// Exact one-sided p-value P(W+ >= observed) by enumerating all 2^n sign
// assignments under the null. Only valid for small untied samples: requires
// 1 <= n <= 14 after zero-discard and pairwise-distinct magnitudes.
inline double wilcoxon_exact_p(const std::vector<double>& diffs) {
    struct Entry {
        double mag;
        bool positive;
    };
    std::vector<Entry> entries;
    for (double d : diffs) {
        if (!std::isfinite(d))
            throw std::invalid_argument("wilcoxon_exact_p: non-finite difference");
        if (d != 0.0)
            entries.push_back({std::fabs(d), d > 0.0});
    }
    const std::size_t n = entries.size();
    if (n == 0)
        throw std::invalid_argument("wilcoxon_exact_p: no nonzero differences");
    if (n > 14)
        throw std::invalid_argument("wilcoxon_exact_p: sample too large for enumeration");
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.mag < b.mag; });
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (entries[i].mag == entries[i + 1].mag)
            throw std::invalid_argument("wilcoxon_exact_p: tied magnitudes");

    std::uint64_t observed = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (entries[i].positive)
            observed += i + 1;

    const std::uint64_t assignments = 1ull << n;
    std::uint64_t at_least = 0;
    for (std::uint64_t mask = 0; mask < assignments; ++mask) {
        std::uint64_t w = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1ull << i))
                w += i + 1;
        if (w >= observed)
            ++at_least;
    }
    return static_cast<double>(at_least) / static_cast<double>(assignments);
}

}  // namespace axiobench
