#include "syang/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace syang {

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : fd_(f.data()), r_(rows), c_(cols), a_(rows * cols, 0)
{
}

Matrix Matrix::identity(Field f, std::size_t n)
{
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1;
    return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<std::vector<std::int64_t>>& rows)
{
    const std::size_t nc = rows.empty() ? 0 : rows[0].size();
    Matrix m(f, rows.size(), nc);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != nc) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t j = 0; j < nc; ++j) m.a_[i * nc + j] = f.data()->from_int(rows[i][j]);
    }
    return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols)
{
    Matrix m(f, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m.set(i, j, cols[j][i]);
    }
    return m;
}

void Matrix::set(std::size_t i, std::size_t j, const Fe& x)
{
    if (x.field_data() != fd_) throw FieldMismatch("matrix entry from another field");
    a_[i * c_ + j] = x.raw();
}

bool Matrix::is_zero() const
{
    for (auto x : a_)
        if (x != 0) return false;
    return true;
}

bool Matrix::is_identity() const
{
    if (r_ != c_) return false;
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j)
            if (a_[i * c_ + j] != (i == j ? 1u : 0u)) return false;
    return true;
}

void Matrix::check_shape(const Matrix& o, const char* what) const
{
    if (fd_ != o.fd_) throw FieldMismatch(what);
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument(std::string(what) + ": shape mismatch");
}

Matrix& Matrix::operator+=(const Matrix& o)
{
    check_shape(o, "matrix addition");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] = fd_->add(a_[i], o.a_[i]);
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o)
{
    check_shape(o, "matrix subtraction");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] = fd_->sub(a_[i], o.a_[i]);
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.fd_ != b.fd_) throw FieldMismatch("matrix product across fields");
    if (a.c_ != b.r_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix out(Field::from_data(a.fd_), a.r_, b.c_);
    const FieldData* fd = a.fd_;
    if (fd->m == 1) {
        // accumulate in 64 bits and reduce once per entry
        const std::uint64_t p = fd->p;
        const std::uint64_t sq = (p - 1) * (p - 1);
        const std::uint64_t batch = sq == 0 ? 1 : std::max<std::uint64_t>(1, (~std::uint64_t(0) - p) / sq);
        std::vector<std::uint64_t> acc(b.c_);
        for (std::size_t i = 0; i < a.r_; ++i) {
            std::fill(acc.begin(), acc.end(), 0);
            std::uint64_t pending = 0;
            for (std::size_t k = 0; k < a.c_; ++k) {
                const std::uint64_t x = a.a_[i * a.c_ + k];
                if (x == 0) continue;
                if (++pending == batch) {
                    for (auto& v : acc) v %= p;
                    pending = 1;
                }
                const std::uint32_t* row = &b.a_[k * b.c_];
                for (std::size_t j = 0; j < b.c_; ++j) acc[j] += x * row[j];
            }
            for (std::size_t j = 0; j < b.c_; ++j) out.a_[i * b.c_ + j] = std::uint32_t(acc[j] % p);
        }
        return out;
    }
    for (std::size_t i = 0; i < a.r_; ++i)
        for (std::size_t k = 0; k < a.c_; ++k) {
            const std::uint32_t x = a.a_[i * a.c_ + k];
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.c_; ++j) {
                std::uint32_t& o = out.a_[i * b.c_ + j];
                o = fd->add(o, fd->mul(x, b.a_[k * b.c_ + j]));
            }
        }
    return out;
}

Matrix operator*(Matrix a, const Fe& s)
{
    if (s.field_data() != a.fd_ && !a.a_.empty()) throw FieldMismatch("matrix scaling across fields");
    for (auto& x : a.a_) x = a.fd_->mul(x, s.raw());
    return a;
}

Matrix Matrix::operator-() const
{
    Matrix r = *this;
    for (auto& x : r.a_) x = fd_->neg(x);
    return r;
}

Vec Matrix::apply(const Vec& v) const
{
    if (v.size() != c_) throw std::invalid_argument("matrix-vector shape mismatch");
    Vec out(r_, Fe(fd_, 0));
    for (std::size_t i = 0; i < r_; ++i) {
        std::uint32_t acc = 0;
        for (std::size_t j = 0; j < c_; ++j) acc = fd_->add(acc, fd_->mul(a_[i * c_ + j], v[j].raw()));
        out[i] = Fe(fd_, acc);
    }
    return out;
}

Matrix Matrix::transpose() const
{
    Matrix t(Field::from_data(fd_), c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) t.a_[j * r_ + i] = a_[i * c_ + j];
    return t;
}

Matrix Matrix::block(std::size_t i0, std::size_t j0, std::size_t nr, std::size_t nc) const
{
    if (i0 + nr > r_ || j0 + nc > c_) throw std::out_of_range("matrix block");
    Matrix b(Field::from_data(fd_), nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b.a_[i * nc + j] = a_[(i0 + i) * c_ + j0 + j];
    return b;
}

Matrix Matrix::kron(const Matrix& b) const
{
    if (fd_ != b.fd_) throw FieldMismatch("kronecker product across fields");
    Matrix out(Field::from_data(fd_), r_ * b.r_, c_ * b.c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t ip = 0; ip < c_; ++ip) {
            const std::uint32_t x = a_[i * c_ + ip];
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.r_; ++j)
                for (std::size_t jp = 0; jp < b.c_; ++jp)
                    out.a_[(i * b.r_ + j) * out.c_ + ip * b.c_ + jp] = fd_->mul(x, b.a_[j * b.c_ + jp]);
        }
    return out;
}

std::string Matrix::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < r_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < c_; ++j) os << (j ? " " : "") << at(i, j);
    }
    os << ']';
    return os.str();
}

std::vector<std::size_t> rref(Matrix& a)
{
    const FieldData* fd = a.field_data();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t piv = row;
        while (piv < a.rows() && a.raw(piv, col) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.raw(piv, j), a.raw(row, j));
        const std::uint32_t inv = fd->inv(a.raw(row, col));
        for (std::size_t j = col; j < a.cols(); ++j) a.raw(row, j) = fd->mul(a.raw(row, j), inv);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row) continue;
            const std::uint32_t f = a.raw(i, col);
            if (f == 0) continue;
            const std::uint32_t nf = fd->neg(f);
            for (std::size_t j = col; j < a.cols(); ++j)
                a.raw(i, j) = fd->add(a.raw(i, j), fd->mul(nf, a.raw(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(const Matrix& a)
{
    Matrix b = a;
    return rref(b).size();
}

std::vector<Vec> kernel(const Matrix& a)
{
    Matrix b = a;
    const auto pivots = rref(b);
    const FieldData* fd = a.field_data();
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(a.cols(), Fe(fd, 0));
        v[free] = Fe(fd, 1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = Fe(fd, fd->neg(b.raw(r, free)));
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix inverse(const Matrix& a)
{
    if (!a.square()) throw NotInvertible("non-square matrix");
    const std::size_t n = a.rows();
    Matrix aug(a.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.raw(i, j) = a.raw(i, j);
        aug.raw(i, n + i) = 1;
    }
    const auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw NotInvertible("singular matrix");
    return aug.block(0, n, n, n);
}

std::vector<Vec> joint_kernel(const std::vector<Matrix>& maps, Field f, std::size_t n)
{
    std::size_t total = 0;
    for (const auto& m : maps) {
        if (m.cols() != n) throw std::invalid_argument("joint_kernel: source dimension mismatch");
        total += m.rows();
    }
    Matrix stacked(f, total, n);
    std::size_t off = 0;
    for (const auto& m : maps) {
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < n; ++j) stacked.raw(off + i, j) = m.raw(i, j);
        off += m.rows();
    }
    return kernel(stacked);
}

void EchelonBasis::reduce(std::vector<std::uint32_t>& v) const
{
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::uint32_t c = v[pivot_[i]];
        if (c == 0) continue;
        const std::uint32_t nc = fd_->neg(c);
        const auto& row = rows_[i];
        for (std::size_t j = pivot_[i]; j < len_; ++j)
            if (row[j] != 0) v[j] = fd_->add(v[j], fd_->mul(nc, row[j]));
    }
}

bool EchelonBasis::insert(std::vector<std::uint32_t> v)
{
    if (v.size() != len_) throw std::invalid_argument("echelon vector length");
    reduce(v);
    std::size_t piv = 0;
    while (piv < len_ && v[piv] == 0) ++piv;
    if (piv == len_) return false;
    const std::uint32_t inv = fd_->inv(v[piv]);
    for (std::size_t j = piv; j < len_; ++j) v[j] = fd_->mul(v[j], inv);
    rows_.push_back(std::move(v));
    pivot_.push_back(piv);
    return true;
}

bool EchelonBasis::insert(const Vec& v)
{
    std::vector<std::uint32_t> raw;
    raw.reserve(v.size());
    for (const auto& x : v) raw.push_back(x.raw());
    return insert(std::move(raw));
}

bool EchelonBasis::contains(std::vector<std::uint32_t> v) const
{
    reduce(v);
    for (auto x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace syang
