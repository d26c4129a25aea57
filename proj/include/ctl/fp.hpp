#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ctl/errors.hpp"

namespace ctl {

bool is_prime(std::uint32_t n);

/* One residue of F_p together with its characteristic. */
struct FScalar {
    std::uint32_t value = 0;
    std::uint32_t p = 2;

    FScalar() = default;
    FScalar(long long v, std::uint32_t p_);

    FScalar operator+(const FScalar& o) const;
    FScalar operator-(const FScalar& o) const;
    FScalar operator*(const FScalar& o) const;
    FScalar neg() const;
    FScalar inv() const;  // throws Error on zero
    bool operator==(const FScalar& o) const { return value == o.value && p == o.p; }
};

/* Dense matrix over F_p, row-major. 0xN and Nx0 shapes are legal and
 * represent maps to or from the zero space. */
class FMatrix {
public:
    FMatrix() : rows_(0), cols_(0), p_(2) {}
    FMatrix(int rows, int cols, std::uint32_t p);

    static FMatrix identity(int n, std::uint32_t p);
    /* Entries may be arbitrary integers; they are reduced mod p. */
    static FMatrix from_rows(std::uint32_t p, const std::vector<std::vector<long long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::uint32_t characteristic() const { return p_; }

    std::uint32_t at(int r, int c) const { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
    void set(int r, int c, long long v);

    FMatrix operator+(const FMatrix& o) const;
    FMatrix operator-(const FMatrix& o) const;
    FMatrix operator*(const FMatrix& o) const;
    FMatrix scaled(std::uint32_t s) const;
    FMatrix negated() const;
    FMatrix transpose() const;

    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const FMatrix& o) const;
    bool operator!=(const FMatrix& o) const { return !(*this == o); }

    int rank() const;
    /* Reduced row echelon form with the list of pivot columns.
     * Pivot choice is deterministic: first nonzero entry in column order. */
    struct Echelon;
    Echelon rref() const;

    /* Columns form a basis of the right null space; cols = this->cols() - rank().
     * Basis vectors are indexed by free columns in ascending order. */
    FMatrix kernel_basis() const;

    /* Original columns sitting at the pivot positions: a basis of the column space. */
    FMatrix image_basis() const;

    /* Particular solution of this * x = b with free variables fixed to zero,
     * or nullopt when the system is unsolvable. */
    std::optional<FMatrix> solve_right(const FMatrix& b) const;

    std::optional<FMatrix> inverse() const;

    FMatrix column(int c) const;

private:
    void check_compatible(const FMatrix& o) const;

    int rows_, cols_;
    std::uint32_t p_;
    std::vector<std::uint32_t> e_;
};

struct FMatrix::Echelon {
    FMatrix mat;
    std::vector<int> pivots;
};

FMatrix hstack(const FMatrix& a, const FMatrix& b);
FMatrix vstack(const FMatrix& a, const FMatrix& b);
FMatrix hstack(const std::vector<FMatrix>& parts, int rows, std::uint32_t p);
FMatrix block_diag(const std::vector<FMatrix>& parts, std::uint32_t p);

}  // namespace ctl
