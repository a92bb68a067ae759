#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "errors.hpp"

namespace ttr {

// Arithmetic in F_p for a prime p < 2^31. All values are kept reduced in [0,p).
struct PrimeField {
    uint32_t p = 101;

    PrimeField() = default;
    explicit PrimeField(uint32_t prime);

    uint32_t reduce(int64_t x) const {
        int64_t r = x % static_cast<int64_t>(p);
        return static_cast<uint32_t>(r < 0 ? r + p : r);
    }
    uint32_t add(uint32_t a, uint32_t b) const {
        uint64_t s = static_cast<uint64_t>(a) + b;
        return static_cast<uint32_t>(s >= p ? s - p : s);
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p - b; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p - a; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p);
    }
    uint32_t pow(uint32_t a, uint64_t e) const;
    uint32_t inv(uint32_t a) const;

    bool operator==(const PrimeField&) const = default;
};

bool is_prime(uint32_t n);

// Dense row-major matrix over F_p. Matrices are value types; all operations
// return fresh objects.
class FpMat {
  public:
    FpMat() = default;
    FpMat(PrimeField f, uint32_t rows, uint32_t cols)
        : fld_(f), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

    static FpMat identity(PrimeField f, uint32_t n);

    uint32_t rows() const { return rows_; }
    uint32_t cols() const { return cols_; }
    const PrimeField& field() const { return fld_; }

    uint32_t at(uint32_t r, uint32_t c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
    uint32_t& at(uint32_t r, uint32_t c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    void set(uint32_t r, uint32_t c, int64_t v) { at(r, c) = fld_.reduce(v); }

    bool is_zero() const;
    FpMat transpose() const;
    FpMat operator*(const FpMat& other) const;
    FpMat operator+(const FpMat& other) const;
    FpMat operator-(const FpMat& other) const;
    FpMat scaled(uint32_t c) const;
    bool operator==(const FpMat&) const = default;

    std::vector<uint32_t> apply(const std::vector<uint32_t>& v) const;

    // Horizontal / vertical stacking.
    static FpMat hcat(const FpMat& l, const FpMat& r);
    static FpMat vcat(const FpMat& t, const FpMat& b);

  private:
    PrimeField fld_;
    uint32_t rows_ = 0, cols_ = 0;
    std::vector<uint32_t> a_;
};

struct RrefResult {
    FpMat mat;
    std::vector<uint32_t> pivots;  // pivot column per pivot row
    uint32_t rank = 0;
};

// Reduced row echelon form with deterministic pivoting (first nonzero in scan
// order). The input is left unchanged.
RrefResult rref(const FpMat& m);

uint32_t rank(const FpMat& m);

// Canonical basis of the right kernel {v : m v = 0}: one vector per free
// column, with value 1 at the free column and the forced values at pivots.
std::vector<std::vector<uint32_t>> nullspace(const FpMat& m);

// Some x with a x = b, free variables set to 0; nullopt if inconsistent.
std::optional<std::vector<uint32_t>> solve(const FpMat& a, const std::vector<uint32_t>& b);

// Inverse of a square matrix, nullopt when singular.
std::optional<FpMat> inverse(const FpMat& m);

// Incremental row-space accumulator. Rows are reduced against the pivots
// found so far; insertion order determines the pivot choice, so the resulting
// basis is deterministic.
class RowSpan {
  public:
    explicit RowSpan(PrimeField f, uint32_t width) : fld_(f), width_(width) {}

    // Returns true when the row enlarged the span.
    bool insert(std::vector<uint32_t> row);
    // Reduces v modulo the span (in place result).
    std::vector<uint32_t> reduce(std::vector<uint32_t> v) const;
    bool contains(const std::vector<uint32_t>& v) const;

    uint32_t dim() const { return static_cast<uint32_t>(rows_.size()); }
    uint32_t width() const { return width_; }
    const std::vector<std::vector<uint32_t>>& rows() const { return rows_; }
    const std::vector<uint32_t>& pivot_cols() const { return pivots_; }
    bool is_pivot(uint32_t col) const;

  private:
    PrimeField fld_;
    uint32_t width_;
    std::vector<std::vector<uint32_t>> rows_;  // kept fully reduced
    std::vector<uint32_t> pivots_;
};

}  // namespace ttr
