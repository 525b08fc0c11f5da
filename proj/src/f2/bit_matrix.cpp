#include "stabmod/f2/bit_matrix.hpp"

#include <bit>
#include <stdexcept>

namespace stabmod::f2 {

BitVector& BitVector::operator^=(const BitVector& other)
{
    if (other.size_ != size_)
        throw std::invalid_argument("BitVector: size mismatch in xor");
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] ^= other.words_[i];
    return *this;
}

bool BitVector::is_zero() const
{
    for (auto w : words_)
        if (w)
            return false;
    return true;
}

std::size_t BitVector::popcount() const
{
    std::size_t n = 0;
    for (auto w : words_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::size_t BitVector::first_set() const
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i])
            return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return size_;
}

std::vector<std::size_t> BitVector::support() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        auto w = words_[i];
        while (w) {
            out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

bool BitVector::dot(const BitVector& other) const
{
    if (other.size_ != size_)
        throw std::invalid_argument("BitVector: size mismatch in dot");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
        acc ^= words_[i] & other.words_[i];
    return std::popcount(acc) & 1;
}

std::string BitVector::to_string() const
{
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if (get(i))
            s[i] = '1';
    return s;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), data_(rows * ((cols + 63) / 64), 0)
{
}

BitMatrix BitMatrix::identity(std::size_t n)
{
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVector>& rows, std::size_t cols)
{
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        m.set_row(r, rows[r]);
    return m;
}

BitMatrix BitMatrix::from_columns(const std::vector<BitVector>& cols, std::size_t rows)
{
    BitMatrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        m.set_column(c, cols[c]);
    return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows)
{
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("BitMatrix::from_strings: ragged rows");
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, rows[r][c] == '1');
    }
    return m;
}

BitVector BitMatrix::row(std::size_t r) const
{
    BitVector v(cols_);
    auto src = row_words(r);
    auto dst = v.words();
    for (std::size_t i = 0; i < stride_; ++i)
        dst[i] = src[i];
    return v;
}

BitVector BitMatrix::column(std::size_t c) const
{
    BitVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (get(r, c))
            v.set(r, true);
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& v)
{
    if (v.size() != cols_)
        throw std::invalid_argument("BitMatrix::set_row: size mismatch");
    auto dst = row_words(r);
    auto src = v.words();
    for (std::size_t i = 0; i < stride_; ++i)
        dst[i] = src[i];
}

void BitMatrix::set_column(std::size_t c, const BitVector& v)
{
    if (v.size() != rows_)
        throw std::invalid_argument("BitMatrix::set_column: size mismatch");
    for (std::size_t r = 0; r < rows_; ++r)
        set(r, c, v.get(r));
}

void BitMatrix::add_row(std::size_t dst, std::size_t src)
{
    std::uint64_t* d = data_.data() + dst * stride_;
    const std::uint64_t* s = data_.data() + src * stride_;
    for (std::size_t i = 0; i < stride_; ++i)
        d[i] ^= s[i];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t i = 0; i < stride_; ++i)
        std::swap(data_[a * stride_ + i], data_[b * stride_ + i]);
}

BitMatrix BitMatrix::transpose() const
{
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        auto w = row_words(r);
        for (std::size_t i = 0; i < stride_; ++i) {
            auto word = w[i];
            while (word) {
                const std::size_t c = i * 64 + static_cast<std::size_t>(std::countr_zero(word));
                t.set(c, r, true);
                word &= word - 1;
            }
        }
    }
    return t;
}

BitMatrix BitMatrix::operator*(const BitMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("BitMatrix: dimension mismatch in product");
    BitMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        auto w = row_words(r);
        auto dst = out.row_words(r);
        for (std::size_t i = 0; i < stride_; ++i) {
            auto word = w[i];
            while (word) {
                const std::size_t k = i * 64 + static_cast<std::size_t>(std::countr_zero(word));
                auto src = rhs.row_words(k);
                for (std::size_t j = 0; j < out.stride_; ++j)
                    dst[j] ^= src[j];
                word &= word - 1;
            }
        }
    }
    return out;
}

BitVector BitMatrix::operator*(const BitVector& v) const
{
    if (v.size() != cols_)
        throw std::invalid_argument("BitMatrix: dimension mismatch in matrix-vector product");
    BitVector out(rows_);
    auto vw = v.words();
    for (std::size_t r = 0; r < rows_; ++r) {
        auto w = row_words(r);
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < stride_; ++i)
            acc ^= w[i] & vw[i];
        if (std::popcount(acc) & 1)
            out.set(r, true);
    }
    return out;
}

BitMatrix& BitMatrix::operator^=(const BitMatrix& rhs)
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("BitMatrix: dimension mismatch in sum");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] ^= rhs.data_[i];
    return *this;
}

bool BitMatrix::operator==(const BitMatrix& other) const
{
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

bool BitMatrix::is_zero() const
{
    for (auto w : data_)
        if (w)
            return false;
    return true;
}

std::size_t BitMatrix::popcount() const
{
    std::size_t n = 0;
    for (auto w : data_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

BitMatrix BitMatrix::submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const
{
    BitMatrix out(row_idx.size(), col_idx.size());
    for (std::size_t r = 0; r < row_idx.size(); ++r)
        for (std::size_t c = 0; c < col_idx.size(); ++c)
            if (get(row_idx[r], col_idx[c]))
                out.set(r, c, true);
    return out;
}

BitMatrix BitMatrix::select_columns(std::span<const std::size_t> col_idx) const
{
    BitMatrix out(rows_, col_idx.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < col_idx.size(); ++c)
            if (get(r, col_idx[c]))
                out.set(r, c, true);
    return out;
}

BitMatrix BitMatrix::select_rows(std::span<const std::size_t> row_idx) const
{
    BitMatrix out(row_idx.size(), cols_);
    for (std::size_t r = 0; r < row_idx.size(); ++r) {
        auto src = row_words(row_idx[r]);
        auto dst = out.row_words(r);
        for (std::size_t i = 0; i < stride_; ++i)
            dst[i] = src[i];
    }
    return out;
}

BitMatrix BitMatrix::hconcat(const BitMatrix& rhs) const
{
    if (rows_ != rhs.rows_)
        throw std::invalid_argument("BitMatrix::hconcat: row mismatch");
    BitMatrix out(rows_, cols_ + rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c))
                out.set(r, c, true);
        for (std::size_t c = 0; c < rhs.cols_; ++c)
            if (rhs.get(r, c))
                out.set(r, cols_ + c, true);
    }
    return out;
}

BitMatrix BitMatrix::vconcat(const BitMatrix& rhs) const
{
    if (cols_ != rhs.cols_)
        throw std::invalid_argument("BitMatrix::vconcat: column mismatch");
    BitMatrix out(rows_ + rhs.rows_, cols_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(rhs.data_.begin(), rhs.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return out;
}

BitMatrix BitMatrix::kron(const BitMatrix& rhs) const
{
    BitMatrix out(rows_ * rhs.rows_, cols_ * rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            if (!get(r, c))
                continue;
            for (std::size_t r2 = 0; r2 < rhs.rows_; ++r2)
                for (std::size_t c2 = 0; c2 < rhs.cols_; ++c2)
                    if (rhs.get(r2, c2))
                        out.set(r * rhs.rows_ + r2, c * rhs.cols_ + c2, true);
        }
    return out;
}

BitMatrix BitMatrix::block_diagonal(const std::vector<BitMatrix>& blocks)
{
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    BitMatrix out(rows, cols);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c)
                if (b.get(r, c))
                    out.set(r0 + r, c0 + c, true);
        r0 += b.rows();
        c0 += b.cols();
    }
    return out;
}

std::string BitMatrix::to_string() const
{
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
        s += row(r).to_string();
        s += '\n';
    }
    return s;
}

RrefResult rref(const BitMatrix& m)
{
    RrefResult res{m, {}};
    BitMatrix& a = res.reduced;
    std::size_t row = 0;
    for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
        std::size_t p = row;
        while (p < a.rows() && !a.get(p, c))
            ++p;
        if (p == a.rows())
            continue;
        a.swap_rows(row, p);
        for (std::size_t r = 0; r < a.rows(); ++r)
            if (r != row && a.get(r, c))
                a.add_row(r, row);
        res.pivots.push_back(c);
        ++row;
    }
    return res;
}

std::size_t rank(const BitMatrix& m)
{
    // Forward elimination only.
    BitMatrix a = m;
    std::size_t row = 0;
    for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
        std::size_t p = row;
        while (p < a.rows() && !a.get(p, c))
            ++p;
        if (p == a.rows())
            continue;
        a.swap_rows(row, p);
        for (std::size_t r = row + 1; r < a.rows(); ++r)
            if (a.get(r, c))
                a.add_row(r, row);
        ++row;
    }
    return row;
}

BitMatrix kernel_basis(const BitMatrix& m)
{
    auto [red, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<BitVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        BitVector v(m.cols());
        v.set(f, true);
        for (std::size_t k = 0; k < pivots.size(); ++k)
            if (red.get(k, f))
                v.set(pivots[k], true);
        basis.push_back(std::move(v));
    }
    return BitMatrix::from_rows(basis, m.cols());
}

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b)
{
    if (b.size() != m.rows())
        throw std::invalid_argument("solve: right-hand side length does not match row count");
    return LinearSolver(m).solve(b);
}

BitMatrix row_space_basis(const BitMatrix& m)
{
    auto [red, pivots] = rref(m);
    std::vector<std::size_t> idx(pivots.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        idx[i] = i;
    return red.select_rows(idx);
}

BitMatrix column_space_basis(const BitMatrix& m)
{
    auto [red, pivots] = rref(m);
    return m.select_columns(pivots);
}

std::optional<BitMatrix> inverse(const BitMatrix& m)
{
    if (m.rows() != m.cols())
        return std::nullopt;
    const std::size_t n = m.rows();
    auto [red, pivots] = rref(m.hconcat(BitMatrix::identity(n)));
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1))
        return std::nullopt;
    std::vector<std::size_t> rows(n), cols(n);
    for (std::size_t i = 0; i < n; ++i) {
        rows[i] = i;
        cols[i] = n + i;
    }
    return red.submatrix(rows, cols);
}

bool EchelonBasis::reduce(BitVector& v) const
{
    for (std::size_t k = 0; k < rows_.size(); ++k)
        if (v.get(pivots_[k]))
            v ^= rows_[k];
    return !v.is_zero();
}

bool EchelonBasis::insert(BitVector v)
{
    if (v.size() != dim_)
        throw std::invalid_argument("EchelonBasis: dimension mismatch");
    if (!reduce(v))
        return false;
    const std::size_t p = v.first_set();
    for (std::size_t k = 0; k < rows_.size(); ++k)
        if (rows_[k].get(p))
            rows_[k] ^= v;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

LinearSolver::LinearSolver(const BitMatrix& m) : rows_(m.rows()), cols_(m.cols())
{
    auto [red, pivots] = rref(m.hconcat(BitMatrix::identity(rows_)));
    // Pivots in the identity block mean the row of m reduced to zero there.
    std::vector<std::size_t> left(cols_), right(rows_), all_rows(rows_);
    for (std::size_t i = 0; i < cols_; ++i)
        left[i] = i;
    for (std::size_t i = 0; i < rows_; ++i) {
        right[i] = cols_ + i;
        all_rows[i] = i;
    }
    reduced_ = red.submatrix(all_rows, left);
    transform_ = red.submatrix(all_rows, right);
    for (auto p : pivots)
        if (p < cols_)
            pivots_.push_back(p);
}

std::optional<BitVector> LinearSolver::solve(const BitVector& b) const
{
    if (b.size() != rows_)
        throw std::invalid_argument("LinearSolver: right-hand side length does not match row count");
    const BitVector c = transform_ * b;
    for (std::size_t r = pivots_.size(); r < rows_; ++r)
        if (c.get(r))
            return std::nullopt;
    BitVector x(cols_);
    for (std::size_t k = 0; k < pivots_.size(); ++k)
        if (c.get(k))
            x.set(pivots_[k], true);
    return x;
}

} // namespace stabmod::f2
