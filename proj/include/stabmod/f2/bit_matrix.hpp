#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace stabmod::f2 {

/// Dense vector over F2, packed into 64-bit words.
class BitVector
{
public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    static BitVector unit(std::size_t size, std::size_t index)
    {
        BitVector v(size);
        v.set(index, true);
        return v;
    }

    std::size_t size() const { return size_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool value)
    {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    bool operator==(const BitVector& other) const = default;

    bool is_zero() const;
    std::size_t popcount() const;
    /// Index of the lowest set bit, or size() if zero.
    std::size_t first_set() const;
    std::vector<std::size_t> support() const;
    bool dot(const BitVector& other) const;

    std::span<std::uint64_t> words() { return words_; }
    std::span<const std::uint64_t> words() const { return words_; }

    std::string to_string() const;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct RrefResult;

/// Matrix over F2 stored row-major with each row packed into 64-bit words.
/// Linear maps V -> W are stored as dim(W) x dim(V) matrices acting on column vectors.
class BitMatrix
{
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(const std::vector<BitVector>& rows, std::size_t cols);
    static BitMatrix from_columns(const std::vector<BitVector>& cols, std::size_t rows);
    /// Rows given as strings of '0'/'1'.
    static BitMatrix from_strings(const std::vector<std::string>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    bool get(std::size_t r, std::size_t c) const
    {
        return (data_[r * stride_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool value)
    {
        const std::uint64_t mask = std::uint64_t{1} << (c & 63);
        auto& w = data_[r * stride_ + (c >> 6)];
        if (value)
            w |= mask;
        else
            w &= ~mask;
    }
    void flip(std::size_t r, std::size_t c) { data_[r * stride_ + (c >> 6)] ^= std::uint64_t{1} << (c & 63); }

    std::span<std::uint64_t> row_words(std::size_t r) { return {data_.data() + r * stride_, stride_}; }
    std::span<const std::uint64_t> row_words(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }

    BitVector row(std::size_t r) const;
    BitVector column(std::size_t c) const;
    void set_row(std::size_t r, const BitVector& v);
    void set_column(std::size_t c, const BitVector& v);
    /// row[dst] ^= row[src]
    void add_row(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);

    BitMatrix transpose() const;
    BitMatrix operator*(const BitMatrix& rhs) const;
    BitVector operator*(const BitVector& v) const;
    BitMatrix& operator^=(const BitMatrix& rhs);
    friend BitMatrix operator^(BitMatrix a, const BitMatrix& b) { return a ^= b; }
    friend BitMatrix operator+(BitMatrix a, const BitMatrix& b) { return a ^= b; }
    bool operator==(const BitMatrix& other) const;

    bool is_zero() const;
    std::size_t popcount() const;

    BitMatrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;
    BitMatrix select_columns(std::span<const std::size_t> col_idx) const;
    BitMatrix select_rows(std::span<const std::size_t> row_idx) const;
    /// [this | rhs]
    BitMatrix hconcat(const BitMatrix& rhs) const;
    /// [this ; rhs]
    BitMatrix vconcat(const BitMatrix& rhs) const;
    /// Kronecker product; basis index of (i, j) is i * rhs.dim + j.
    BitMatrix kron(const BitMatrix& rhs) const;
    static BitMatrix block_diagonal(const std::vector<BitMatrix>& blocks);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> data_;
};

struct RrefResult
{
    BitMatrix reduced;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Pivots are chosen at the lowest available row for the lowest column.
RrefResult rref(const BitMatrix& m);
std::size_t rank(const BitMatrix& m);
/// Rows form a basis of {v : m v = 0}.
BitMatrix kernel_basis(const BitMatrix& m);
/// Some x with m x = b, the one with all free variables zero; nullopt if inconsistent.
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b);
/// Rows form a basis of the row space of m (echelon form, zero rows dropped).
BitMatrix row_space_basis(const BitMatrix& m);
/// Columns form a basis of the column space of m, chosen among the columns of m.
BitMatrix column_space_basis(const BitMatrix& m);
std::optional<BitMatrix> inverse(const BitMatrix& m);

/// Incremental echelon basis of a subspace of F2^n; supports membership tests and reduction.
class EchelonBasis
{
public:
    explicit EchelonBasis(std::size_t ambient_dim = 0) : dim_(ambient_dim) {}

    std::size_t ambient_dim() const { return dim_; }
    std::size_t size() const { return rows_.size(); }

    /// Reduces v against the stored basis in place; returns true if the remainder is nonzero.
    bool reduce(BitVector& v) const;
    bool contains(BitVector v) const { return !reduce(v); }
    /// Adds v if independent; returns whether it was added.
    bool insert(BitVector v);

    const std::vector<BitVector>& reduced_rows() const { return rows_; }

private:
    std::size_t dim_;
    std::vector<BitVector> rows_;
    std::vector<std::size_t> pivots_;
};

/// Solver for repeated systems m x = b with fixed m; also reports coordinates.
class LinearSolver
{
public:
    explicit LinearSolver(const BitMatrix& m);

    std::optional<BitVector> solve(const BitVector& b) const;
    std::size_t rank() const { return pivots_.size(); }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    // Row-reduced [m | I] split into its two blocks.
    BitMatrix reduced_;
    BitMatrix transform_;
    std::vector<std::size_t> pivots_;
};

} // namespace stabmod::f2
