#pragma once

// Dense matrices over F_q with raw-encoded entries, plus the exact linear
// algebra the module code needs (rank, kernels, inverses, incremental echelon
// bases).

#include "syang/field.hpp"
#include "syang/series.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace syang {

using Vec = std::vector<Fe>;

class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, std::size_t rows, std::size_t cols);

    static Matrix identity(Field f, std::size_t n);
    static Matrix from_rows(Field f, const std::vector<std::vector<std::int64_t>>& rows);
    static Matrix from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols);

    Field field() const { return Field::from_data(fd_); }
    const FieldData* field_data() const { return fd_; }
    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool square() const { return r_ == c_; }

    Fe at(std::size_t i, std::size_t j) const { return Fe(fd_, a_[i * c_ + j]); }
    void set(std::size_t i, std::size_t j, const Fe& x);
    std::uint32_t raw(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
    std::uint32_t& raw(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const std::vector<std::uint32_t>& data() const { return a_; }

    bool is_zero() const;
    bool is_identity() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(Matrix a, const Fe& s);
    friend Matrix operator*(const Fe& s, Matrix a) { return std::move(a) * s; }
    Matrix operator-() const;
    Vec apply(const Vec& v) const;

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_ && (a.fd_ == b.fd_ || a.a_.empty());
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix transpose() const;
    Matrix block(std::size_t i0, std::size_t j0, std::size_t nr, std::size_t nc) const;
    /// Kronecker product with entries a_{ii'} b_{jj'} at ((i,j),(i',j')).
    Matrix kron(const Matrix& b) const;

    std::string to_string() const;

private:
    void check_shape(const Matrix& o, const char* what) const;
    const FieldData* fd_ = nullptr;
    std::size_t r_ = 0, c_ = 0;
    std::vector<std::uint32_t> a_;
};

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& a);
std::size_t rank(const Matrix& a);
/// Basis of {x : a x = 0}.
std::vector<Vec> kernel(const Matrix& a);
/// Throws NotInvertible.
Matrix inverse(const Matrix& a);
/// Joint kernel of a family of maps with the same source.
std::vector<Vec> joint_kernel(const std::vector<Matrix>& maps, Field f, std::size_t n);

/// Basis kept in reduced echelon form; insertion reports independence.
class EchelonBasis {
public:
    EchelonBasis(const FieldData* f, std::size_t len) : fd_(f), len_(len) {}
    /// Reduce v against the basis; if nonzero, add it and return true.
    bool insert(std::vector<std::uint32_t> v);
    bool insert(const Vec& v);
    /// True if v lies in the span.
    bool contains(std::vector<std::uint32_t> v) const;
    std::size_t size() const { return rows_.size(); }
    std::size_t length() const { return len_; }
    const std::vector<std::vector<std::uint32_t>>& rows() const { return rows_; }

private:
    void reduce(std::vector<std::uint32_t>& v) const;
    const FieldData* fd_;
    std::size_t len_;
    std::vector<std::vector<std::uint32_t>> rows_;  // each with a leading 1 at pivot_[i]
    std::vector<std::size_t> pivot_;
};

// Ring hooks for Series<Matrix>.
inline Matrix zero_like(const Matrix& x) { return Matrix(x.field(), x.rows(), x.cols()); }
inline Matrix one_like(const Matrix& x) { return Matrix::identity(x.field(), x.rows()); }
inline bool is_zero(const Matrix& x) { return x.is_zero(); }
inline Matrix unit_inverse(const Matrix& x) { return inverse(x); }

using MatrixTail = Series<Matrix>;

}  // namespace syang
