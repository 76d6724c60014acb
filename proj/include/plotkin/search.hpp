#pragma once

// Plotkin-sum scan over a bounds table, and coverage statistics.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plotkin/tables.hpp"

namespace plotkin {

enum class Classification { Improves, Matches, Below, NoTableEntry };

std::string to_string(Classification c);

struct Finding {
    unsigned q = 0;
    /// Ingredient length; both ingredients have length n.
    std::size_t n = 0;
    std::size_t k1 = 0;
    std::size_t k2 = 0;
    /// Coordinates removed from the sum by shortening (0 for a plain sum).
    std::size_t shortened = 0;
    int plotkin_d = 0;
    std::optional<int> table_d_low;
    std::optional<int> table_d_high;
    Classification cls = Classification::NoTableEntry;

    std::size_t length() const { return 2 * n - shortened; }
    std::size_t dimension() const { return k1 + k2 - shortened; }

    friend bool operator==(const Finding&, const Finding&) = default;
};

/// Classifies a Plotkin distance against the table entry at a cell.
/// Throws DataError when the distance exceeds a recorded upper bound,
/// which means the table contradicts itself.
Classification classify(int plotkin_d, const std::optional<Bounds>& cell);

/// Every ordered pair (k1, k2) with entries at (q, n, k1) and (q, n, k2),
/// for n in [nmin, nmax] (default 1 .. limit(q)/2) with 2n <= limit(q).
/// Sorted by (n, k1, k2).
std::vector<Finding> plotkin_scan(const BoundsTable& t, unsigned q,
                                  std::optional<std::pair<std::size_t, std::size_t>> n_range = std::nullopt,
                                  unsigned threads = 1);

/// Shortening a [2n, k, d] sum by s coordinates gives [2n-s, k-s, >= d].
/// For each table cell reachable this way, keeps the best shortened
/// finding when it beats every plain finding at that cell.
/// Sorted by (length, dimension).
std::vector<Finding> shortened_findings(const BoundsTable& t, const std::vector<Finding>& plain);

/// Plain findings followed by shortened ones.
std::vector<Finding> scan_with_shortening(const BoundsTable& t, unsigned q,
                                          std::optional<std::pair<std::size_t, std::size_t>> n_range = std::nullopt,
                                          unsigned threads = 1);

struct CoverageStats {
    unsigned q = 0;
    /// Cells (n, k) with n even and 1 <= k <= n <= limit(q).
    std::uint64_t total_even_entries = 0;
    /// Cells whose d_low is reached by a Plotkin sum of length-n/2 entries.
    std::uint64_t plotkin_achievable = 0;

    /// Percentage truncated to two decimals, e.g. "8.17".
    std::string percent() const;
};

CoverageStats coverage_stats(const BoundsTable& t, unsigned q);

/// Header line, then one tab-separated line per finding:
/// q, length, dimension, plotkin_d, table_d_low, table_d_high, class, n, k1, k2.
void write_findings_tsv(std::ostream& out, const std::vector<Finding>& findings);

}  // namespace plotkin
