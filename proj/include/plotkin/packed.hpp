#pragma once

// Packed vectors over GF(q) for the distance engines.
//
// Characteristic 2: one bit plane per GF(2) coordinate of the element
// encoding; addition is XOR and scalar multiplication a GF(2)-linear mix of
// planes. Characteristic 3: two planes (is-1, is-2) per GF(3) digit.
// Anything else falls back to one byte per symbol with lookup tables.
// In all kernels a row operation costs O(n / 64) word operations for a
// fixed field, and bits past the code length stay zero.

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "plotkin/galois.hpp"
#include "plotkin/matrix.hpp"

namespace plotkin::packed {

using Word = std::uint64_t;

inline std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

class Char2Ops {
public:
    Char2Ops(const Field& f, std::size_t n) : n_(n), t_(f.prime_degree()), w_(words_for(n)), q_(f.order()) {
        mix_.assign(std::size_t{q_} * t_, 0);
        for (Elem c = 0; c < q_; ++c)
            for (int b = 0; b < t_; ++b) {
                const Elem img = f.mul(c, Elem{1} << b);
                for (int j = 0; j < t_; ++j)
                    if (img >> j & 1) mix_[c * t_ + j] |= 1u << b;
            }
    }

    std::size_t length() const { return n_; }
    std::size_t stride() const { return w_ * t_; }
    Elem order() const { return q_; }

    void axpy(Word* y, const Word* x, Elem c) const {
        if (c == 0) return;
        if (c == 1) {
            for (std::size_t i = 0, e = stride(); i < e; ++i) y[i] ^= x[i];
            return;
        }
        const std::uint32_t* m = &mix_[c * t_];
        for (std::size_t w = 0; w < w_; ++w) {
            for (int j = 0; j < t_; ++j) {
                Word acc = 0;
                for (int b = 0; b < t_; ++b)
                    if (m[j] >> b & 1) acc ^= x[b * w_ + w];
                y[j * w_ + w] ^= acc;
            }
        }
    }

    void scale(Word* x, Elem c) const {
        if (c == 1) return;
        std::vector<Word> tmp(stride(), 0);
        axpy(tmp.data(), x, c);
        std::copy(tmp.begin(), tmp.end(), x);
    }

    std::size_t weight(const Word* x) const {
        std::size_t s = 0;
        for (std::size_t w = 0; w < w_; ++w) {
            Word any = 0;
            for (int b = 0; b < t_; ++b) any |= x[b * w_ + w];
            s += static_cast<std::size_t>(std::popcount(any));
        }
        return s;
    }

    /// weight(y + c x) without writing.
    std::size_t weight_axpy(const Word* y, const Word* x, Elem c) const {
        std::size_t s = 0;
        if (t_ == 1) {
            for (std::size_t w = 0; w < w_; ++w) s += static_cast<std::size_t>(std::popcount(y[w] ^ x[w]));
            return s;
        }
        const std::uint32_t* m = &mix_[c * t_];
        for (std::size_t w = 0; w < w_; ++w) {
            Word any = 0;
            for (int j = 0; j < t_; ++j) {
                Word acc = y[j * w_ + w];
                for (int b = 0; b < t_; ++b)
                    if (m[j] >> b & 1) acc ^= x[b * w_ + w];
                any |= acc;
            }
            s += static_cast<std::size_t>(std::popcount(any));
        }
        return s;
    }

    Elem get(const Word* x, std::size_t col) const {
        const std::size_t w = col / 64, bit = col % 64;
        Elem v = 0;
        for (int b = 0; b < t_; ++b) v |= static_cast<Elem>(x[b * w_ + w] >> bit & 1) << b;
        return v;
    }

    void set(Word* x, std::size_t col, Elem v) const {
        const std::size_t w = col / 64, bit = col % 64;
        for (int b = 0; b < t_; ++b) {
            Word& word = x[b * w_ + w];
            word = (word & ~(Word{1} << bit)) | (Word{v >> b & 1} << bit);
        }
    }

private:
    std::size_t n_;
    int t_;
    std::size_t w_;
    Elem q_;
    std::vector<std::uint32_t> mix_;  // mix_[c*t + j]: input planes feeding output plane j
};

class Char3Ops {
public:
    Char3Ops(const Field& f, std::size_t n) : n_(n), t_(f.prime_degree()), w_(words_for(n)), q_(f.order()) {
        pow3_.resize(t_);
        for (int b = 0; b < t_; ++b) pow3_[b] = b == 0 ? 1 : pow3_[b - 1] * 3;
        coef_.assign(std::size_t{q_} * t_ * t_, 0);
        for (Elem c = 0; c < q_; ++c)
            for (int b = 0; b < t_; ++b) {
                Elem img = f.mul(c, pow3_[b]);
                for (int j = 0; j < t_; ++j) {
                    coef_[(c * t_ + j) * t_ + b] = static_cast<std::uint8_t>(img % 3);
                    img /= 3;
                }
            }
    }

    std::size_t length() const { return n_; }
    std::size_t stride() const { return 2 * w_ * t_; }
    Elem order() const { return q_; }

    static void add3(Word& ap, Word& an, Word bp, Word bn) {
        const Word a0 = ~(ap | an), b0 = ~(bp | bn);
        const Word rp = (a0 & bp) | (ap & b0) | (an & bn);
        const Word rn = (a0 & bn) | (an & b0) | (ap & bp);
        ap = rp;
        an = rn;
    }

    void axpy(Word* y, const Word* x, Elem c) const {
        if (c == 0) return;
        for (std::size_t w = 0; w < w_; ++w) {
            for (int j = 0; j < t_; ++j) {
                Word ap = y[(2 * j) * w_ + w], an = y[(2 * j + 1) * w_ + w];
                term(ap, an, x, c, j, w);
                y[(2 * j) * w_ + w] = ap;
                y[(2 * j + 1) * w_ + w] = an;
            }
        }
    }

    void scale(Word* x, Elem c) const {
        if (c == 1) return;
        std::vector<Word> tmp(stride(), 0);
        axpy(tmp.data(), x, c);
        std::copy(tmp.begin(), tmp.end(), x);
    }

    std::size_t weight(const Word* x) const {
        std::size_t s = 0;
        for (std::size_t w = 0; w < w_; ++w) {
            Word any = 0;
            for (int b = 0; b < 2 * t_; ++b) any |= x[b * w_ + w];
            s += static_cast<std::size_t>(std::popcount(any));
        }
        return s;
    }

    std::size_t weight_axpy(const Word* y, const Word* x, Elem c) const {
        std::size_t s = 0;
        for (std::size_t w = 0; w < w_; ++w) {
            Word any = 0;
            for (int j = 0; j < t_; ++j) {
                Word ap = y[(2 * j) * w_ + w], an = y[(2 * j + 1) * w_ + w];
                term(ap, an, x, c, j, w);
                any |= ap | an;
            }
            s += static_cast<std::size_t>(std::popcount(any));
        }
        return s;
    }

    Elem get(const Word* x, std::size_t col) const {
        const std::size_t w = col / 64, bit = col % 64;
        Elem v = 0;
        for (int b = 0; b < t_; ++b) {
            const Elem d = static_cast<Elem>(x[(2 * b) * w_ + w] >> bit & 1) +
                           2 * static_cast<Elem>(x[(2 * b + 1) * w_ + w] >> bit & 1);
            v += d * pow3_[b];
        }
        return v;
    }

    void set(Word* x, std::size_t col, Elem v) const {
        const std::size_t w = col / 64, bit = col % 64;
        const Word mask = Word{1} << bit;
        for (int b = 0; b < t_; ++b) {
            const Elem d = v % 3;
            v /= 3;
            Word& p = x[(2 * b) * w_ + w];
            Word& m = x[(2 * b + 1) * w_ + w];
            p = (p & ~mask) | (d == 1 ? mask : 0);
            m = (m & ~mask) | (d == 2 ? mask : 0);
        }
    }

private:
    // (ap, an) += sum_b coef(c, j, b) * x_digit_b at word w
    void term(Word& ap, Word& an, const Word* x, Elem c, int j, std::size_t w) const {
        const std::uint8_t* row = &coef_[(c * t_ + j) * t_];
        for (int b = 0; b < t_; ++b) {
            const Word xp = x[(2 * b) * w_ + w], xn = x[(2 * b + 1) * w_ + w];
            if (row[b] == 1) add3(ap, an, xp, xn);
            else if (row[b] == 2) add3(ap, an, xn, xp);
        }
    }

    std::size_t n_;
    int t_;
    std::size_t w_;
    Elem q_;
    std::vector<Elem> pow3_;
    std::vector<std::uint8_t> coef_;  // coef_[(c*t + j)*t + b]: GF(3) matrix of x -> c x
};

class ByteOps {
public:
    ByteOps(const Field& f, std::size_t n) : n_(n), w_((n + 7) / 8), q_(f.order()) {
        if (q_ > 256) throw std::invalid_argument("byte kernel supports q <= 256");
        add_.resize(std::size_t{q_} * q_);
        mul_.resize(std::size_t{q_} * q_);
        for (Elem a = 0; a < q_; ++a)
            for (Elem b = 0; b < q_; ++b) {
                add_[a * q_ + b] = static_cast<std::uint8_t>(f.add(a, b));
                mul_[a * q_ + b] = static_cast<std::uint8_t>(f.mul(a, b));
            }
    }

    std::size_t length() const { return n_; }
    std::size_t stride() const { return w_; }
    Elem order() const { return q_; }

    void axpy(Word* y, const Word* x, Elem c) const {
        if (c == 0) return;
        auto* yb = reinterpret_cast<std::uint8_t*>(y);
        const auto* xb = reinterpret_cast<const std::uint8_t*>(x);
        const std::uint8_t* mc = &mul_[c * q_];
        for (std::size_t i = 0; i < n_; ++i) yb[i] = add_[yb[i] * q_ + mc[xb[i]]];
    }

    void scale(Word* x, Elem c) const {
        auto* xb = reinterpret_cast<std::uint8_t*>(x);
        const std::uint8_t* mc = &mul_[c * q_];
        for (std::size_t i = 0; i < n_; ++i) xb[i] = mc[xb[i]];
    }

    std::size_t weight(const Word* x) const {
        const auto* xb = reinterpret_cast<const std::uint8_t*>(x);
        std::size_t s = 0;
        for (std::size_t i = 0; i < n_; ++i) s += xb[i] != 0;
        return s;
    }

    std::size_t weight_axpy(const Word* y, const Word* x, Elem c) const {
        const auto* yb = reinterpret_cast<const std::uint8_t*>(y);
        const auto* xb = reinterpret_cast<const std::uint8_t*>(x);
        const std::uint8_t* mc = &mul_[c * q_];
        std::size_t s = 0;
        for (std::size_t i = 0; i < n_; ++i) s += add_[yb[i] * q_ + mc[xb[i]]] != 0;
        return s;
    }

    Elem get(const Word* x, std::size_t col) const { return reinterpret_cast<const std::uint8_t*>(x)[col]; }
    void set(Word* x, std::size_t col, Elem v) const {
        reinterpret_cast<std::uint8_t*>(x)[col] = static_cast<std::uint8_t>(v);
    }

private:
    std::size_t n_;
    std::size_t w_;
    Elem q_;
    std::vector<std::uint8_t> add_;
    std::vector<std::uint8_t> mul_;
};

/// Row storage for a kernel: rows() vectors of stride() words each.
template <class Ops>
class Rows {
public:
    Rows(const Ops& ops, std::size_t rows) : ops_(&ops), rows_(rows), data_(rows * ops.stride(), 0) {}

    static Rows from_matrix(const Ops& ops, const Mat& m) {
        Rows r(ops, m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (m.at(i, c)) ops.set(r.row(i), c, m.at(i, c));
        return r;
    }

    std::size_t rows() const { return rows_; }
    Word* row(std::size_t i) { return data_.data() + i * ops_->stride(); }
    const Word* row(std::size_t i) const { return data_.data() + i * ops_->stride(); }

    void swap(std::size_t a, std::size_t b) {
        if (a == b) return;
        std::swap_ranges(row(a), row(a) + ops_->stride(), row(b));
    }

    std::vector<Elem> unpack(std::size_t i) const { return unpack_vector(*ops_, row(i)); }

    static std::vector<Elem> unpack_vector(const Ops& ops, const Word* v) {
        std::vector<Elem> out(ops.length());
        for (std::size_t c = 0; c < out.size(); ++c) out[c] = ops.get(v, c);
        return out;
    }

private:
    const Ops* ops_;
    std::size_t rows_;
    std::vector<Word> data_;
};

/// Calls fn(ops) with the kernel matching the field.
template <class Fn>
decltype(auto) with_kernel(const Field& f, std::size_t n, Fn&& fn) {
    if (f.characteristic() == 2) return fn(Char2Ops(f, n));
    if (f.characteristic() == 3) return fn(Char3Ops(f, n));
    return fn(ByteOps(f, n));
}

}  // namespace plotkin::packed
