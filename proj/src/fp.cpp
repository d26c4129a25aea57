#include "ctl/fp.hpp"

#include <string>

namespace ctl {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

static std::uint32_t reduce_mod(long long v, std::uint32_t p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

FScalar::FScalar(long long v, std::uint32_t p_) : p(p_) {
    if (!is_prime(p_)) throw Error("characteristic " + std::to_string(p_) + " is not prime");
    value = reduce_mod(v, p_);
}

static void check_same_p(std::uint32_t a, std::uint32_t b) {
    if (a != b)
        throw CharacteristicMismatch("mixed characteristics " + std::to_string(a) + " and " +
                                     std::to_string(b));
}

FScalar FScalar::operator+(const FScalar& o) const {
    check_same_p(p, o.p);
    return FScalar(static_cast<long long>(value) + o.value, p);
}

FScalar FScalar::operator-(const FScalar& o) const {
    check_same_p(p, o.p);
    return FScalar(static_cast<long long>(value) - o.value, p);
}

FScalar FScalar::operator*(const FScalar& o) const {
    check_same_p(p, o.p);
    return FScalar(static_cast<long long>(value) * o.value, p);
}

FScalar FScalar::neg() const { return FScalar(-static_cast<long long>(value), p); }

FScalar FScalar::inv() const {
    if (value == 0) throw Error("inverse of zero in F_" + std::to_string(p));
    /* Fermat: value^(p-2) mod p */
    std::uint64_t base = value, acc = 1;
    std::uint32_t e = p - 2;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return FScalar(static_cast<long long>(acc), p);
}

FMatrix::FMatrix(int rows, int cols, std::uint32_t p) : rows_(rows), cols_(cols), p_(p) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
    if (!is_prime(p)) throw Error("characteristic " + std::to_string(p) + " is not prime");
    e_.assign(static_cast<std::size_t>(rows) * cols, 0u);
}

FMatrix FMatrix::identity(int n, std::uint32_t p) {
    FMatrix m(n, n, p);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FMatrix FMatrix::from_rows(std::uint32_t p, const std::vector<std::vector<long long>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    FMatrix m(r, c, p);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw DimensionMismatch("ragged rows in matrix literal");
        for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

void FMatrix::set(int r, int c, long long v) {
    e_[static_cast<std::size_t>(r) * cols_ + c] = reduce_mod(v, p_);
}

void FMatrix::check_compatible(const FMatrix& o) const { check_same_p(p_, o.p_); }

FMatrix FMatrix::operator+(const FMatrix& o) const {
    check_compatible(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix add shapes differ");
    FMatrix m(rows_, cols_, p_);
    for (std::size_t i = 0; i < e_.size(); ++i)
        m.e_[i] = (e_[i] + o.e_[i]) % p_;
    return m;
}

FMatrix FMatrix::operator-(const FMatrix& o) const {
    check_compatible(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sub shapes differ");
    FMatrix m(rows_, cols_, p_);
    for (std::size_t i = 0; i < e_.size(); ++i)
        m.e_[i] = (e_[i] + p_ - o.e_[i]) % p_;
    return m;
}

FMatrix FMatrix::operator*(const FMatrix& o) const {
    check_compatible(o);
    if (cols_ != o.rows_)
        throw DimensionMismatch("matrix product " + std::to_string(rows_) + "x" +
                                std::to_string(cols_) + " * " + std::to_string(o.rows_) + "x" +
                                std::to_string(o.cols_));
    FMatrix m(rows_, o.cols_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            std::uint64_t a = at(i, k);
            if (!a) continue;
            for (int j = 0; j < o.cols_; ++j) {
                std::uint64_t v = m.e_[static_cast<std::size_t>(i) * o.cols_ + j];
                m.e_[static_cast<std::size_t>(i) * o.cols_ + j] =
                    static_cast<std::uint32_t>((v + a * o.at(k, j)) % p_);
            }
        }
    return m;
}

FMatrix FMatrix::scaled(std::uint32_t s) const {
    FMatrix m(rows_, cols_, p_);
    std::uint64_t f = s % p_;
    for (std::size_t i = 0; i < e_.size(); ++i)
        m.e_[i] = static_cast<std::uint32_t>(e_[i] * f % p_);
    return m;
}

FMatrix FMatrix::negated() const {
    FMatrix m(rows_, cols_, p_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = (p_ - e_[i]) % p_;
    return m;
}

FMatrix FMatrix::transpose() const {
    FMatrix m(cols_, rows_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.e_[static_cast<std::size_t>(j) * rows_ + i] = at(i, j);
    return m;
}

bool FMatrix::is_zero() const {
    for (auto v : e_)
        if (v) return false;
    return true;
}

bool FMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(rows_, p_);
}

bool FMatrix::operator==(const FMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && e_ == o.e_;
}

FMatrix::Echelon FMatrix::rref() const {
    Echelon out{*this, {}};
    FMatrix& m = out.mat;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int piv = -1;
        for (int i = r; i < rows_; ++i)
            if (m.at(i, c)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < cols_; ++j) {
                std::uint32_t t = m.at(r, j);
                m.e_[static_cast<std::size_t>(r) * cols_ + j] = m.at(piv, j);
                m.e_[static_cast<std::size_t>(piv) * cols_ + j] = t;
            }
        std::uint64_t inv = FScalar(m.at(r, c), p_).inv().value;
        for (int j = 0; j < cols_; ++j)
            m.e_[static_cast<std::size_t>(r) * cols_ + j] =
                static_cast<std::uint32_t>(m.at(r, j) * inv % p_);
        for (int i = 0; i < rows_; ++i) {
            if (i == r) continue;
            std::uint64_t f = m.at(i, c);
            if (!f) continue;
            for (int j = 0; j < cols_; ++j)
                m.e_[static_cast<std::size_t>(i) * cols_ + j] = static_cast<std::uint32_t>(
                    (m.at(i, j) + (p_ - 1ull) * f % p_ * m.at(r, j)) % p_);
        }
        out.pivots.push_back(c);
        ++r;
    }
    return out;
}

int FMatrix::rank() const { return static_cast<int>(rref().pivots.size()); }

FMatrix FMatrix::kernel_basis() const {
    Echelon ech = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : ech.pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    FMatrix k(cols_, static_cast<int>(free_cols.size()), p_);
    for (int j = 0; j < static_cast<int>(free_cols.size()); ++j) {
        int fc = free_cols[j];
        k.set(fc, j, 1);
        for (int pr = 0; pr < static_cast<int>(ech.pivots.size()); ++pr)
            k.set(ech.pivots[pr], j, -static_cast<long long>(ech.mat.at(pr, fc)));
    }
    return k;
}

FMatrix FMatrix::image_basis() const {
    Echelon ech = rref();
    FMatrix b(rows_, static_cast<int>(ech.pivots.size()), p_);
    for (int j = 0; j < static_cast<int>(ech.pivots.size()); ++j)
        for (int i = 0; i < rows_; ++i) b.set(i, j, at(i, ech.pivots[j]));
    return b;
}

std::optional<FMatrix> FMatrix::solve_right(const FMatrix& b) const {
    check_compatible(b);
    if (rows_ != b.rows_) throw DimensionMismatch("solve_right: row counts differ");
    Echelon ech = hstack(*this, b).rref();
    for (int c : ech.pivots)
        if (c >= cols_) return std::nullopt;
    FMatrix x(cols_, b.cols_, p_);
    for (int pr = 0; pr < static_cast<int>(ech.pivots.size()); ++pr)
        for (int j = 0; j < b.cols_; ++j) x.set(ech.pivots[pr], j, ech.mat.at(pr, cols_ + j));
    return x;
}

std::optional<FMatrix> FMatrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    auto x = solve_right(identity(rows_, p_));
    if (!x) return std::nullopt;
    /* solve_right gives a particular solution; for square full-rank it is the inverse */
    if (rank() != rows_) return std::nullopt;
    return x;
}

FMatrix FMatrix::column(int c) const {
    FMatrix v(rows_, 1, p_);
    for (int i = 0; i < rows_; ++i) v.set(i, 0, at(i, c));
    return v;
}

FMatrix hstack(const FMatrix& a, const FMatrix& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("hstack: row counts differ");
    FMatrix m(a.rows(), a.cols() + b.cols(), a.characteristic());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) m.set(i, j, a.at(i, j));
        for (int j = 0; j < b.cols(); ++j) m.set(i, a.cols() + j, b.at(i, j));
    }
    return m;
}

FMatrix vstack(const FMatrix& a, const FMatrix& b) {
    if (a.cols() != b.cols()) throw DimensionMismatch("vstack: col counts differ");
    FMatrix m(a.rows() + b.rows(), a.cols(), a.characteristic());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m.set(i, j, a.at(i, j));
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) m.set(a.rows() + i, j, b.at(i, j));
    return m;
}

FMatrix hstack(const std::vector<FMatrix>& parts, int rows, std::uint32_t p) {
    int cols = 0;
    for (const auto& m : parts) cols += m.cols();
    FMatrix out(rows, cols, p);
    int off = 0;
    for (const auto& m : parts) {
        if (m.rows() != rows) throw DimensionMismatch("hstack: row counts differ");
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < m.cols(); ++j) out.set(i, off + j, m.at(i, j));
        off += m.cols();
    }
    return out;
}

FMatrix block_diag(const std::vector<FMatrix>& parts, std::uint32_t p) {
    int rows = 0, cols = 0;
    for (const auto& m : parts) {
        rows += m.rows();
        cols += m.cols();
    }
    FMatrix out(rows, cols, p);
    int ro = 0, co = 0;
    for (const auto& m : parts) {
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) out.set(ro + i, co + j, m.at(i, j));
        ro += m.rows();
        co += m.cols();
    }
    return out;
}

}  // namespace ctl
