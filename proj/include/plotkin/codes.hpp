#pragma once

// Linear codes over GF(q) and the constructions used to build them:
// Plotkin sum, shorten, puncture, extend, dual, cyclic and BCH codes.
//
// Every construction propagates what is known about the minimum distance
// and never claims more than it can justify.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "plotkin/galois.hpp"
#include "plotkin/matrix.hpp"

namespace plotkin {

struct CodeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Knowledge about a minimum distance: exact, bounded, or unknown.
struct DistanceInfo {
    enum class Kind { Exact, Bounds, Unknown };

    Kind kind = Kind::Unknown;
    int lo = 0;
    int hi = 0;

    static DistanceInfo exact(int d) { return {Kind::Exact, d, d}; }
    /// Collapses to Exact when lo == hi.
    static DistanceInfo bounds(int lo, int hi);
    static DistanceInfo unknown() { return {}; }

    bool known() const { return kind != Kind::Unknown; }
    /// "d=3", "d>=5", "5<=d<=7" or "d=?"
    std::string describe() const;

    friend bool operator==(const DistanceInfo&, const DistanceInfo&) = default;
};

struct Codeword {
    std::vector<Elem> symbols;
    std::size_t weight() const;
    friend auto operator<=>(const Codeword&, const Codeword&) = default;
};

class LinearCode {
public:
    /// Dependent rows are removed; the stored generator is in reduced
    /// row-echelon form with k rows.
    static LinearCode from_generator(const Mat& rows);

    const FieldPtr& field() const { return g_.field(); }
    const Mat& generator() const { return g_; }
    std::size_t length() const { return g_.cols(); }
    std::size_t dimension() const { return g_.rows(); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    const DistanceInfo& distance() const { return d_; }
    /// Generator polynomial when the code was built as a cyclic code.
    const std::optional<Poly>& cyclic_generator() const { return cyclic_g_; }

    LinearCode with_distance(DistanceInfo d) const;

    std::vector<Elem> encode(std::span<const Elem> message) const;
    bool contains(std::span<const Elem> word) const;

    /// "[n,k]"
    std::string parameters() const;

private:
    friend LinearCode cyclic_code(const FieldPtr&, std::size_t, const Poly&);
    Mat g_;
    std::vector<std::size_t> pivots_;
    DistanceInfo d_;
    std::optional<Poly> cyclic_g_;
};

/// {(u, u+v) : u in c1, v in c2}, parameters [2n, k1+k2, min(2 d1, d2)].
LinearCode plotkin_sum(const LinearCode& c1, const LinearCode& c2);

/// Codewords vanishing on `positions` (1-based), with those coordinates
/// removed. The resulting dimension is computed, not assumed.
LinearCode shorten(const LinearCode& c, const std::set<std::size_t>& positions);

/// Deletes the coordinates in `positions` (1-based).
LinearCode puncture(const LinearCode& c, const std::set<std::size_t>& positions);

/// Appends an overall parity coordinate so each codeword sums to zero.
LinearCode extend(const LinearCode& c);

LinearCode dual(const LinearCode& c);

/// Code generated by g, x g, ..., x^(n-deg g-1) g. g must be monic and
/// divide x^n - 1.
LinearCode cyclic_code(const FieldPtr& field, std::size_t n, const Poly& g);

/// BCH code of length n and designed distance delta with roots
/// alpha^b, ..., alpha^(b+delta-2), alpha of order n.
LinearCode bch_code(const FieldPtr& field, std::size_t n, std::size_t delta, std::size_t b = 1);

/// The splitting field GF(q^m) of x^n - 1 over `field` (m = ord_n(q)) and
/// an element of order n in it.
struct Splitting {
    FieldPtr ext;
    Elem alpha = 0;
};
Splitting splitting_field(const FieldPtr& field, std::size_t n);

/// Exponents i in [0, n) with g(alpha^i) = 0, or nullopt when the
/// splitting field is too large to build or gcd(n, q) != 1.
std::optional<std::set<std::size_t>> defining_set(const FieldPtr& field, std::size_t n, const Poly& g);

/// BCH bound with arbitrary step: 1 + the longest run {b, b+s, ...} inside
/// `zeros` over all steps s coprime to n.
int bch_bound(std::size_t n, const std::set<std::size_t>& zeros);

}  // namespace plotkin
