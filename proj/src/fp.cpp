#include "fp.hpp"

namespace ttr {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(uint32_t prime) : p(prime) {
    require(prime >= 2 && prime < (1u << 31) && is_prime(prime), ErrorCode::BadArgument,
            "field characteristic must be a prime in [2, 2^31): got " + std::to_string(prime));
}

uint32_t PrimeField::pow(uint32_t a, uint64_t e) const {
    uint32_t r = 1 % p, b = a % p;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

uint32_t PrimeField::inv(uint32_t a) const {
    require(a % p != 0, ErrorCode::BadArgument, "division by zero in F_p");
    return pow(a, p - 2);
}

FpMat FpMat::identity(PrimeField f, uint32_t n) {
    FpMat m(f, n, n);
    for (uint32_t i = 0; i < n; ++i) m.at(i, i) = 1 % f.p;
    return m;
}

bool FpMat::is_zero() const {
    for (uint32_t v : a_)
        if (v) return false;
    return true;
}

FpMat FpMat::transpose() const {
    FpMat t(fld_, cols_, rows_);
    for (uint32_t r = 0; r < rows_; ++r)
        for (uint32_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

FpMat FpMat::operator*(const FpMat& other) const {
    require(cols_ == other.rows_ && fld_ == other.fld_, ErrorCode::BadArgument,
            "matrix product shape mismatch");
    FpMat out(fld_, rows_, other.cols_);
    for (uint32_t r = 0; r < rows_; ++r)
        for (uint32_t k = 0; k < cols_; ++k) {
            uint32_t v = at(r, k);
            if (!v) continue;
            for (uint32_t c = 0; c < other.cols_; ++c)
                out.at(r, c) = fld_.add(out.at(r, c), fld_.mul(v, other.at(k, c)));
        }
    return out;
}

FpMat FpMat::operator+(const FpMat& other) const {
    require(rows_ == other.rows_ && cols_ == other.cols_, ErrorCode::BadArgument,
            "matrix sum shape mismatch");
    FpMat out = *this;
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = fld_.add(out.a_[i], other.a_[i]);
    return out;
}

FpMat FpMat::operator-(const FpMat& other) const { return *this + other.scaled(fld_.neg(1 % fld_.p)); }

FpMat FpMat::scaled(uint32_t c) const {
    FpMat out = *this;
    for (auto& v : out.a_) v = fld_.mul(v, c);
    return out;
}

std::vector<uint32_t> FpMat::apply(const std::vector<uint32_t>& v) const {
    require(v.size() == cols_, ErrorCode::BadArgument, "matrix apply shape mismatch");
    std::vector<uint32_t> out(rows_, 0);
    for (uint32_t r = 0; r < rows_; ++r)
        for (uint32_t c = 0; c < cols_; ++c)
            out[r] = fld_.add(out[r], fld_.mul(at(r, c), v[c]));
    return out;
}

FpMat FpMat::hcat(const FpMat& l, const FpMat& r) {
    require(l.rows() == r.rows(), ErrorCode::BadArgument, "hcat row mismatch");
    FpMat out(l.field(), l.rows(), l.cols() + r.cols());
    for (uint32_t i = 0; i < l.rows(); ++i) {
        for (uint32_t c = 0; c < l.cols(); ++c) out.at(i, c) = l.at(i, c);
        for (uint32_t c = 0; c < r.cols(); ++c) out.at(i, l.cols() + c) = r.at(i, c);
    }
    return out;
}

FpMat FpMat::vcat(const FpMat& t, const FpMat& b) {
    require(t.cols() == b.cols(), ErrorCode::BadArgument, "vcat column mismatch");
    FpMat out(t.field(), t.rows() + b.rows(), t.cols());
    for (uint32_t r = 0; r < t.rows(); ++r)
        for (uint32_t c = 0; c < t.cols(); ++c) out.at(r, c) = t.at(r, c);
    for (uint32_t r = 0; r < b.rows(); ++r)
        for (uint32_t c = 0; c < b.cols(); ++c) out.at(t.rows() + r, c) = b.at(r, c);
    return out;
}

RrefResult rref(const FpMat& m) {
    RrefResult res{m, {}, 0};
    FpMat& a = res.mat;
    const PrimeField& f = m.field();
    uint32_t row = 0;
    for (uint32_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        uint32_t piv = a.rows();
        for (uint32_t r = row; r < a.rows(); ++r)
            if (a.at(r, col)) {
                piv = r;
                break;
            }
        if (piv == a.rows()) continue;
        if (piv != row)
            for (uint32_t c = 0; c < a.cols(); ++c) std::swap(a.at(row, c), a.at(piv, c));
        uint32_t s = f.inv(a.at(row, col));
        for (uint32_t c = 0; c < a.cols(); ++c) a.at(row, c) = f.mul(a.at(row, c), s);
        for (uint32_t r = 0; r < a.rows(); ++r) {
            if (r == row || !a.at(r, col)) continue;
            uint32_t q = a.at(r, col);
            for (uint32_t c = 0; c < a.cols(); ++c)
                a.at(r, c) = f.sub(a.at(r, c), f.mul(q, a.at(row, c)));
        }
        res.pivots.push_back(col);
        ++row;
    }
    res.rank = row;
    return res;
}

uint32_t rank(const FpMat& m) { return rref(m).rank; }

std::vector<std::vector<uint32_t>> nullspace(const FpMat& m) {
    RrefResult r = rref(m);
    const PrimeField& f = m.field();
    std::vector<bool> is_piv(m.cols(), false);
    for (uint32_t c : r.pivots) is_piv[c] = true;
    std::vector<std::vector<uint32_t>> basis;
    for (uint32_t free = 0; free < m.cols(); ++free) {
        if (is_piv[free]) continue;
        std::vector<uint32_t> v(m.cols(), 0);
        v[free] = 1 % f.p;
        for (uint32_t i = 0; i < r.pivots.size(); ++i)
            v[r.pivots[i]] = f.neg(r.mat.at(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<uint32_t>> solve(const FpMat& a, const std::vector<uint32_t>& b) {
    require(b.size() == a.rows(), ErrorCode::BadArgument, "solve shape mismatch");
    FpMat rhs(a.field(), a.rows(), 1);
    for (uint32_t r = 0; r < a.rows(); ++r) rhs.at(r, 0) = b[r] % a.field().p;
    RrefResult r = rref(FpMat::hcat(a, rhs));
    for (uint32_t c : r.pivots)
        if (c == a.cols()) return std::nullopt;
    std::vector<uint32_t> x(a.cols(), 0);
    for (uint32_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.mat.at(i, a.cols());
    return x;
}

std::optional<FpMat> inverse(const FpMat& m) {
    require(m.rows() == m.cols(), ErrorCode::BadArgument, "inverse of non-square matrix");
    RrefResult r = rref(FpMat::hcat(m, FpMat::identity(m.field(), m.rows())));
    if (r.rank < m.rows() || (r.rank && r.pivots[r.rank - 1] >= m.cols())) return std::nullopt;
    FpMat inv(m.field(), m.rows(), m.cols());
    for (uint32_t i = 0; i < m.rows(); ++i)
        for (uint32_t c = 0; c < m.cols(); ++c) inv.at(i, c) = r.mat.at(i, m.cols() + c);
    return inv;
}

bool RowSpan::insert(std::vector<uint32_t> row) {
    require(row.size() == width_, ErrorCode::BadArgument, "row width mismatch");
    row = reduce(std::move(row));
    uint32_t lead = width_;
    for (uint32_t c = 0; c < width_; ++c)
        if (row[c]) {
            lead = c;
            break;
        }
    if (lead == width_) return false;
    uint32_t s = fld_.inv(row[lead]);
    for (auto& v : row) v = fld_.mul(v, s);
    for (size_t i = 0; i < rows_.size(); ++i) {
        uint32_t q = rows_[i][lead];
        if (!q) continue;
        for (uint32_t c = 0; c < width_; ++c)
            rows_[i][c] = fld_.sub(rows_[i][c], fld_.mul(q, row[c]));
    }
    // Keep rows ordered by pivot column.
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(row));
    pivots_.insert(pivots_.begin() + pos, lead);
    return true;
}

std::vector<uint32_t> RowSpan::reduce(std::vector<uint32_t> v) const {
    require(v.size() == width_, ErrorCode::BadArgument, "row width mismatch");
    for (size_t i = 0; i < rows_.size(); ++i) {
        uint32_t q = v[pivots_[i]];
        if (!q) continue;
        for (uint32_t c = 0; c < width_; ++c) v[c] = fld_.sub(v[c], fld_.mul(q, rows_[i][c]));
    }
    return v;
}

bool RowSpan::contains(const std::vector<uint32_t>& v) const {
    auto r = reduce(v);
    for (uint32_t x : r)
        if (x) return false;
    return true;
}

bool RowSpan::is_pivot(uint32_t col) const {
    for (uint32_t c : pivots_)
        if (c == col) return true;
    return false;
}

}  // namespace ttr
