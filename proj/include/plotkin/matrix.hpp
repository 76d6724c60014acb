#pragma once

// Dense matrices over GF(q) and the generator-matrix text format.

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "plotkin/galois.hpp"

namespace plotkin {

class Mat {
public:
    Mat() = default;
    Mat(FieldPtr field, std::size_t rows, std::size_t cols);
    Mat(FieldPtr field, std::size_t cols, const std::vector<std::vector<Elem>>& rows);

    static Mat identity(FieldPtr field, std::size_t n);

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Elem v);

    std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

    void swap_rows(std::size_t a, std::size_t b);
    /// row[dst] += s * row[src]
    void add_scaled_row(std::size_t dst, std::size_t src, Elem s);
    void scale_row(std::size_t r, Elem s);
    void append_row(std::span<const Elem> values);

    Mat transpose() const;
    Mat select_rows(std::size_t count) const;
    /// Columns in the given order.
    Mat select_cols(std::span<const std::size_t> cols) const;
    /// [this | other]
    Mat hconcat(const Mat& other) const;
    /// this above other
    Mat vconcat(const Mat& other) const;

    /// v * this for a row vector v of length rows().
    std::vector<Elem> left_multiply(std::span<const Elem> v) const;

    friend Mat operator*(const Mat& a, const Mat& b);
    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    bool is_zero() const;

private:
    FieldPtr field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

struct RrefResult {
    Mat reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

/// Reduced row-echelon form. Pivots are chosen leftmost column first,
/// topmost candidate row first.
RrefResult rref(const Mat& m);

std::size_t rank(const Mat& m);

/// Basis (as rows) of {x : m * x^T = 0}.
Mat nullspace(const Mat& m);

struct SystematicForm {
    Mat generator;
    /// info_cols[i] is the pivot column of row i.
    std::vector<std::size_t> info_cols;
    std::size_t rank = 0;
};

/// Row-reduces g so that it is the identity on info_cols. Pivots are taken
/// from `preferred` (in the given order) first, then from the remaining
/// columns left to right.
SystematicForm systematic_form(const Mat& g, std::span<const std::size_t> preferred = {});

/// True when the row space of `a` contains every row of `b`.
bool rowspace_contains(const Mat& a, const Mat& b);

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Generator-matrix text format: first line `q n k`, then k lines of n
/// element encodings; `#` starts a comment.
Mat read_generator(std::istream& in);
Mat read_generator_file(const std::string& path);
void write_generator(std::ostream& out, const Mat& g);
void write_generator_file(const std::string& path, const Mat& g);

}  // namespace plotkin
