#include "plotkin/matrix.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace plotkin {

Mat::Mat(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Mat::Mat(FieldPtr field, std::size_t cols, const std::vector<std::vector<Elem>>& rows)
    : field_(std::move(field)), rows_(rows.size()), cols_(cols) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix rows");
        for (Elem v : r) {
            if (!field_->contains(v)) throw std::invalid_argument("matrix entry outside the field");
            data_.push_back(v);
        }
    }
}

Mat Mat::identity(FieldPtr field, std::size_t n) {
    Mat m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
    return m;
}

void Mat::set(std::size_t r, std::size_t c, Elem v) {
    if (!field_->contains(v)) throw std::invalid_argument("matrix entry outside the field");
    data_[r * cols_ + c] = v;
}

void Mat::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_, data_.begin() + b * cols_);
}

void Mat::add_scaled_row(std::size_t dst, std::size_t src, Elem s) {
    if (s == 0) return;
    const auto& F = *field_;
    Elem* d = data_.data() + dst * cols_;
    const Elem* x = data_.data() + src * cols_;
    if (F.characteristic() == 2 && s == 1) {
        for (std::size_t c = 0; c < cols_; ++c) d[c] ^= x[c];
        return;
    }
    for (std::size_t c = 0; c < cols_; ++c)
        if (x[c]) d[c] = F.add(d[c], F.mul(s, x[c]));
}

void Mat::scale_row(std::size_t r, Elem s) {
    for (auto& v : row(r)) v = field_->mul(v, s);
}

void Mat::append_row(std::span<const Elem> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

Mat Mat::transpose() const {
    Mat t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = at(r, c);
    return t;
}

Mat Mat::select_rows(std::size_t count) const {
    Mat m(field_, count, cols_);
    std::copy(data_.begin(), data_.begin() + count * cols_, m.data_.begin());
    return m;
}

Mat Mat::select_cols(std::span<const std::size_t> cols) const {
    Mat m(field_, rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < cols.size(); ++j) m.data_[r * cols.size() + j] = at(r, cols[j]);
    return m;
}

Mat Mat::hconcat(const Mat& other) const {
    if (rows_ != other.rows_) throw std::invalid_argument("hconcat row mismatch");
    Mat m(field_, rows_, cols_ + other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::copy(row(r).begin(), row(r).end(), m.row(r).begin());
        std::copy(other.row(r).begin(), other.row(r).end(), m.row(r).begin() + cols_);
    }
    return m;
}

Mat Mat::vconcat(const Mat& other) const {
    if (cols_ != other.cols_) throw std::invalid_argument("vconcat column mismatch");
    Mat m(field_, rows_ + other.rows_, cols_);
    std::copy(data_.begin(), data_.end(), m.data_.begin());
    std::copy(other.data_.begin(), other.data_.end(), m.data_.begin() + data_.size());
    return m;
}

std::vector<Elem> Mat::left_multiply(std::span<const Elem> v) const {
    if (v.size() != rows_) throw std::invalid_argument("vector length mismatch");
    const auto& F = *field_;
    std::vector<Elem> out(cols_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (v[r] == 0) continue;
        for (std::size_t c = 0; c < cols_; ++c) out[c] = F.add(out[c], F.mul(v[r], at(r, c)));
    }
    return out;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    Mat m(a.field_, a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        auto v = b.left_multiply(a.row(r));
        std::copy(v.begin(), v.end(), m.row(r).begin());
    }
    return m;
}

bool Mat::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Elem v) { return v == 0; });
}

// ---------------------------------------------------------------------------

namespace {

// Gauss-Jordan over the columns in `order`; returns pivot columns by row.
std::vector<std::size_t> eliminate(Mat& m, const std::vector<std::size_t>& order) {
    const auto& F = *m.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c : order) {
        if (row == m.rows()) break;
        std::size_t r = row;
        while (r < m.rows() && m.at(r, c) == 0) ++r;
        if (r == m.rows()) continue;
        m.swap_rows(row, r);
        const Elem lead = m.at(row, c);
        if (lead != 1) m.scale_row(row, F.inv(lead));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row) continue;
            const Elem v = m.at(i, c);
            if (v) m.add_scaled_row(i, row, F.neg(v));
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

}  // namespace

RrefResult rref(const Mat& m) {
    Mat r = m;
    std::vector<std::size_t> order(m.cols());
    for (std::size_t c = 0; c < order.size(); ++c) order[c] = c;
    auto pivots = eliminate(r, order);
    const std::size_t rk = pivots.size();
    return {std::move(r), rk, std::move(pivots)};
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

Mat nullspace(const Mat& m) {
    auto [r, rk, pivots] = rref(m);
    const auto& F = *m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    Mat basis(m.field(), 0, m.cols());
    std::vector<Elem> x(m.cols());
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::fill(x.begin(), x.end(), 0);
        x[f] = 1;
        for (std::size_t i = 0; i < rk; ++i) x[pivots[i]] = F.neg(r.at(i, f));
        basis.append_row(x);
    }
    return basis;
}

SystematicForm systematic_form(const Mat& g, std::span<const std::size_t> preferred) {
    std::vector<bool> used(g.cols(), false);
    std::vector<std::size_t> order;
    for (auto c : preferred) {
        if (c >= g.cols()) throw std::out_of_range("preferred column out of range");
        if (!used[c]) {
            used[c] = true;
            order.push_back(c);
        }
    }
    for (std::size_t c = 0; c < g.cols(); ++c)
        if (!used[c]) order.push_back(c);
    Mat r = g;
    auto pivots = eliminate(r, order);
    const std::size_t rk = pivots.size();
    return {std::move(r), std::move(pivots), rk};
}

bool rowspace_contains(const Mat& a, const Mat& b) {
    if (b.rows() == 0) return true;
    return rank(a.vconcat(b)) == rank(a);
}

// ---------------------------------------------------------------------------
// Text format

Mat read_generator(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    auto next_tokens = [&](std::vector<long long>& toks) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
            std::istringstream ls(line);
            toks.clear();
            std::string t;
            while (ls >> t) {
                try {
                    std::size_t used = 0;
                    long long v = std::stoll(t, &used);
                    if (used != t.size()) throw std::invalid_argument(t);
                    toks.push_back(v);
                } catch (const std::exception&) {
                    throw DataError("line " + std::to_string(lineno) + ": not an integer: '" + t + "'");
                }
            }
            if (!toks.empty()) return true;
        }
        return false;
    };
    std::vector<long long> toks;
    if (!next_tokens(toks)) throw DataError("empty generator file");
    if (toks.size() != 3) throw DataError("line " + std::to_string(lineno) + ": expected header 'q n k'");
    const long long q = toks[0], n = toks[1], k = toks[2];
    if (q < 2 || q > 65536 || n < 1 || k < 0)
        throw DataError("line " + std::to_string(lineno) + ": bad header values");
    FieldPtr F;
    try {
        F = Field::of_order(static_cast<std::uint32_t>(q));
    } catch (const FieldError& e) {
        throw DataError("line " + std::to_string(lineno) + ": " + e.what());
    }
    Mat m(F, 0, static_cast<std::size_t>(n));
    std::vector<Elem> row(static_cast<std::size_t>(n));
    for (long long i = 0; i < k; ++i) {
        if (!next_tokens(toks)) throw DataError("expected " + std::to_string(k) + " rows, got " + std::to_string(i));
        if (static_cast<long long>(toks.size()) != n)
            throw DataError("line " + std::to_string(lineno) + ": expected " + std::to_string(n) + " entries");
        for (long long j = 0; j < n; ++j) {
            if (toks[j] < 0 || toks[j] >= q)
                throw DataError("line " + std::to_string(lineno) + ": entry " + std::to_string(toks[j]) +
                                " outside GF(" + std::to_string(q) + ")");
            row[j] = static_cast<Elem>(toks[j]);
        }
        m.append_row(row);
    }
    if (next_tokens(toks)) throw DataError("line " + std::to_string(lineno) + ": trailing data");
    return m;
}

Mat read_generator_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path);
    return read_generator(in);
}

void write_generator(std::ostream& out, const Mat& g) {
    out << g.field()->order() << ' ' << g.cols() << ' ' << g.rows() << '\n';
    for (std::size_t r = 0; r < g.rows(); ++r) {
        for (std::size_t c = 0; c < g.cols(); ++c) {
            if (c) out << ' ';
            out << g.at(r, c);
        }
        out << '\n';
    }
}

void write_generator_file(const std::string& path, const Mat& g) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path);
    write_generator(out, g);
}

}  // namespace plotkin
