#pragma once

// Bounds tables: best known lower and upper bounds on the minimum distance
// per (q, n, k), in a plain text snapshot format:
//
//   q n k d_low d_high      d_high may be "-" (unknown); '#' starts a comment

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "plotkin/matrix.hpp"

namespace plotkin {

struct TableKey {
    unsigned q = 0;
    std::size_t n = 0;
    std::size_t k = 0;
    friend auto operator<=>(const TableKey&, const TableKey&) = default;
};

struct Bounds {
    int d_low = 1;
    std::optional<int> d_high;
    friend bool operator==(const Bounds&, const Bounds&) = default;
};

class BoundsTable {
public:
    /// Largest length covered for alphabet size q: 256, 243, 256, 130,
    /// 100, 130, 130 for q = 2, 3, 4, 5, 7, 8, 9. Throws DataError otherwise.
    static std::size_t limit(unsigned q);
    static bool supported(unsigned q);

    /// Throws DataError on a duplicate key or a violated invariant.
    void insert(TableKey key, Bounds b);

    std::optional<Bounds> query(unsigned q, std::size_t n, std::size_t k) const;

    const std::map<TableKey, Bounds>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    friend bool operator==(const BoundsTable&, const BoundsTable&) = default;

private:
    std::map<TableKey, Bounds> entries_;
};

/// Errors carry "<source>:<line>: ".
BoundsTable parse_snapshot(std::istream& in, const std::string& source = "<input>");
BoundsTable load_snapshot(const std::string& path);

/// One line per entry in key order, single spaces, LF endings.
void save_snapshot(std::ostream& out, const BoundsTable& t);
void save_snapshot_file(const std::string& path, const BoundsTable& t);

}  // namespace plotkin
