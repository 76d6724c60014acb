#include "plotkin/codes.hpp"

#include <algorithm>
#include <numeric>

namespace plotkin {

DistanceInfo DistanceInfo::bounds(int lo, int hi) {
    if (lo > hi) throw CodeError("distance bounds out of order");
    if (lo == hi) return exact(lo);
    return {Kind::Bounds, lo, hi};
}

std::string DistanceInfo::describe() const {
    switch (kind) {
        case Kind::Exact:
            return "d=" + std::to_string(lo);
        case Kind::Bounds:
            return std::to_string(lo) + "<=d<=" + std::to_string(hi);
        case Kind::Unknown:
            break;
    }
    return "d=?";
}

std::size_t Codeword::weight() const {
    return static_cast<std::size_t>(std::count_if(symbols.begin(), symbols.end(), [](Elem v) { return v != 0; }));
}

// ---------------------------------------------------------------------------

LinearCode LinearCode::from_generator(const Mat& rows) {
    if (!rows.field() || rows.cols() == 0) throw CodeError("generator matrix has no columns");
    auto r = rref(rows);
    LinearCode c;
    c.g_ = r.reduced.select_rows(r.rank);
    c.pivots_ = std::move(r.pivot_cols);
    return c;
}

LinearCode LinearCode::with_distance(DistanceInfo d) const {
    LinearCode c = *this;
    c.d_ = d;
    return c;
}

std::vector<Elem> LinearCode::encode(std::span<const Elem> message) const {
    return g_.left_multiply(message);
}

bool LinearCode::contains(std::span<const Elem> word) const {
    if (word.size() != length()) return false;
    const auto& F = *field();
    std::vector<Elem> w(word.begin(), word.end());
    for (std::size_t i = 0; i < dimension(); ++i) {
        const Elem s = w[pivots_[i]];
        if (s == 0) continue;
        const Elem t = F.neg(s);
        for (std::size_t c = 0; c < w.size(); ++c) w[c] = F.add(w[c], F.mul(t, g_.at(i, c)));
    }
    return std::all_of(w.begin(), w.end(), [](Elem v) { return v == 0; });
}

std::string LinearCode::parameters() const {
    return "[" + std::to_string(length()) + "," + std::to_string(dimension()) + "]";
}

// ---------------------------------------------------------------------------

namespace {

int singleton(std::size_t n, std::size_t k) { return static_cast<int>(n - k + 1); }

void check_positions(const LinearCode& c, const std::set<std::size_t>& positions) {
    for (auto p : positions)
        if (p < 1 || p > c.length())
            throw CodeError("position " + std::to_string(p) + " outside 1.." + std::to_string(c.length()));
    if (positions.size() >= c.length()) throw CodeError("cannot remove every coordinate");
}

// Lower bound carried through an operation whose codewords contain (up to
// deleted zero coordinates) codewords of the source code.
DistanceInfo subcode_info(const DistanceInfo& src, std::size_t n, std::size_t k) {
    if (!src.known() || k == 0) return DistanceInfo::unknown();
    const int hi = singleton(n, k);
    return DistanceInfo::bounds(std::min(src.lo, hi), hi);
}

}  // namespace

LinearCode plotkin_sum(const LinearCode& c1, const LinearCode& c2) {
    if (!c1.field()->same_as(*c2.field())) throw CodeError("Plotkin sum of codes over different fields");
    if (c1.length() != c2.length())
        throw CodeError("Plotkin sum needs equal lengths, got " + std::to_string(c1.length()) + " and " +
                        std::to_string(c2.length()));
    const std::size_t n = c1.length();
    const auto& G1 = c1.generator();
    const auto& G2 = c2.generator();
    Mat top = G1.hconcat(G1);
    Mat bottom = Mat(c1.field(), G2.rows(), n).hconcat(G2);
    LinearCode out = LinearCode::from_generator(top.vconcat(bottom));

    const auto& d1 = c1.distance();
    const auto& d2 = c2.distance();
    DistanceInfo d;
    if (c2.dimension() == 0 && d1.known()) {
        d = DistanceInfo::bounds(2 * d1.lo, 2 * d1.hi);
    } else if (c1.dimension() == 0 && d2.known()) {
        d = d2;
    } else if (d1.known() && d2.known()) {
        d = DistanceInfo::bounds(std::min(2 * d1.lo, d2.lo), std::min(2 * d1.hi, d2.hi));
    }
    return out.with_distance(d);
}

LinearCode shorten(const LinearCode& c, const std::set<std::size_t>& positions) {
    check_positions(c, positions);
    std::vector<std::size_t> cols;
    for (auto p : positions) cols.push_back(p - 1);
    auto sys = systematic_form(c.generator(), cols);
    // Rows pivoting inside S come first; the rest vanish on all of S.
    std::size_t inside = 0;
    while (inside < sys.rank && positions.count(sys.info_cols[inside] + 1)) ++inside;

    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < c.length(); ++j)
        if (!positions.count(j + 1)) keep.push_back(j);
    Mat rest(c.field(), 0, keep.size());
    std::vector<Elem> row(keep.size());
    for (std::size_t r = inside; r < sys.rank; ++r) {
        for (std::size_t j = 0; j < keep.size(); ++j) row[j] = sys.generator.at(r, keep[j]);
        rest.append_row(row);
    }
    LinearCode out = LinearCode::from_generator(rest);
    return out.with_distance(subcode_info(c.distance(), out.length(), out.dimension()));
}

LinearCode puncture(const LinearCode& c, const std::set<std::size_t>& positions) {
    check_positions(c, positions);
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < c.length(); ++j)
        if (!positions.count(j + 1)) keep.push_back(j);
    LinearCode out = LinearCode::from_generator(c.generator().select_cols(keep));
    const auto& d = c.distance();
    const int s = static_cast<int>(positions.size());
    if (d.known() && d.lo > s && out.dimension() > 0) {
        const int hi = std::min(d.hi, singleton(out.length(), out.dimension()));
        return out.with_distance(DistanceInfo::bounds(std::min(d.lo - s, hi), hi));
    }
    return out;
}

LinearCode extend(const LinearCode& c) {
    const auto& F = *c.field();
    const auto& G = c.generator();
    Mat ext(c.field(), G.rows(), G.cols() + 1);
    bool all_even = true;
    for (std::size_t r = 0; r < G.rows(); ++r) {
        Elem s = 0;
        for (std::size_t j = 0; j < G.cols(); ++j) {
            ext.set(r, j, G.at(r, j));
            s = F.add(s, G.at(r, j));
        }
        ext.set(r, G.cols(), F.neg(s));
        if (s != 0) all_even = false;
    }
    LinearCode out = LinearCode::from_generator(ext);
    const auto& d = c.distance();
    if (!d.known() || out.dimension() == 0) return out;
    if (all_even) return out.with_distance(d);

    int lo = d.lo;
    int hi = d.hi + 1;
    if (F.order() == 2) {
        // Every extended binary word has even weight.
        lo += lo % 2;
        hi = d.hi + d.hi % 2;
    } else if (const auto& g = c.cyclic_generator()) {
        // Words with nonzero sum gain a symbol; the rest form the cyclic
        // subcode with the extra zero at exponent 0.
        if (auto zeros = defining_set(c.field(), c.length(), *g)) {
            zeros->insert(0);
            const int even_bound = std::max(d.lo, bch_bound(c.length(), *zeros));
            lo = std::max(lo, std::min(d.lo + 1, even_bound));
        }
    }
    hi = std::min(hi, singleton(out.length(), out.dimension()));
    return out.with_distance(DistanceInfo::bounds(std::min(lo, hi), hi));
}

LinearCode dual(const LinearCode& c) {
    Mat ns = nullspace(c.generator());
    if (ns.rows() == 0) return LinearCode::from_generator(Mat(c.field(), 0, c.length()));
    return LinearCode::from_generator(ns);
}

// ---------------------------------------------------------------------------
// Cyclic and BCH codes

Splitting splitting_field(const FieldPtr& field, std::size_t n) {
    const std::uint64_t Q = field->order();
    if (gcd_u64(Q, n) != 1) throw CodeError("gcd(n, q) != 1: x^n - 1 has repeated roots");
    const auto m = multiplicative_order(Q, n);
    FieldPtr ext;
    try {
        ext = Field::extension(field, static_cast<int>(m));
    } catch (const FieldError& e) {
        throw CodeError("splitting field of x^" + std::to_string(n) + " - 1 over " + field->name() +
                        " is too large: " + e.what());
    }
    const std::uint64_t order = ext->order() - 1;
    return {ext, ext->exp(order / n)};
}

std::optional<std::set<std::size_t>> defining_set(const FieldPtr& field, std::size_t n, const Poly& g) {
    Splitting sp;
    try {
        sp = splitting_field(field, n);
    } catch (const CodeError&) {
        return std::nullopt;
    }
    const Poly gl = lift(g, sp.ext);
    std::set<std::size_t> zeros;
    Elem x = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (gl.eval(x) == 0) zeros.insert(i);
        x = sp.ext->mul(x, sp.alpha);
    }
    return zeros;
}

int bch_bound(std::size_t n, const std::set<std::size_t>& zeros) {
    if (zeros.size() >= n) return static_cast<int>(n) + 1;
    std::vector<char> in(n, 0);
    for (auto z : zeros) in[z % n] = 1;
    std::size_t best = 0;
    for (std::size_t s = 1; s < n; ++s) {
        if (gcd_u64(s, n) != 1) continue;
        // Walk the single cycle 0, s, 2s, ... starting just after a non-zero.
        std::size_t start = 0;
        while (in[start]) start = (start + s) % n;
        std::size_t run = 0;
        std::size_t pos = start;
        for (std::size_t t = 0; t < n; ++t) {
            pos = (pos + s) % n;
            run = in[pos] ? run + 1 : 0;
            best = std::max(best, run);
        }
    }
    if (n == 1) best = zeros.size();
    return static_cast<int>(best) + 1;
}

LinearCode cyclic_code(const FieldPtr& field, std::size_t n, const Poly& g) {
    if (n == 0) throw CodeError("cyclic code of length 0");
    if (!g.field()->same_as(*field)) throw CodeError("generator polynomial over a different field");
    if (!g.is_monic()) throw CodeError("generator polynomial must be monic");
    if (g.degree() > static_cast<int>(n))
        throw CodeError("generator degree " + std::to_string(g.degree()) + " exceeds length " + std::to_string(n));
    if (!poly_divmod(Poly::x_n_minus_one(field, n), g).second.is_zero())
        throw CodeError("g(x) = " + g.to_string() + " does not divide x^" + std::to_string(n) + " - 1");

    const std::size_t k = n - static_cast<std::size_t>(g.degree());
    Mat rows(field, k, n);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t i = 0; i < g.coeffs().size(); ++i) rows.set(r, r + i, g.coeffs()[i]);
    LinearCode c = k > 0 ? LinearCode::from_generator(rows) : LinearCode::from_generator(Mat(field, 0, n));
    c.cyclic_g_ = g;
    if (k == 0) return c;

    const int g_weight = static_cast<int>(std::count_if(g.coeffs().begin(), g.coeffs().end(), [](Elem v) { return v != 0; }));
    const int hi = std::min(singleton(n, k), g_weight);
    if (auto zeros = defining_set(field, n, g)) {
        const int lo = std::min(bch_bound(n, *zeros), hi);
        c.d_ = DistanceInfo::bounds(lo, hi);
    } else {
        c.d_ = DistanceInfo::bounds(1, hi);
    }
    return c;
}

LinearCode bch_code(const FieldPtr& field, std::size_t n, std::size_t delta, std::size_t b) {
    const std::uint64_t Q = field->order();
    if (n < 1 || gcd_u64(Q, n) != 1)
        throw CodeError("BCH code needs gcd(n, q) = 1 (n = " + std::to_string(n) + ", q = " + std::to_string(Q) + ")");
    if (delta < 2 || delta > n)
        throw CodeError("designed distance " + std::to_string(delta) + " outside 2.." + std::to_string(n));
    const auto sp = splitting_field(field, n);
    const std::uint64_t step = (sp.ext->order() - 1) / n;
    std::set<std::uint32_t> covered;
    Poly g = Poly::one(field);
    for (std::size_t i = b; i + 2 <= b + delta; ++i) {
        const auto e = static_cast<std::uint32_t>(i % n);
        if (covered.count(e)) continue;
        for (auto c : cyclotomic_coset(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(Q), e)) covered.insert(c);
        g = g * minimal_polynomial(field, sp.ext, step * e);
    }
    return cyclic_code(field, n, g);
}

}  // namespace plotkin
