#include "saa/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace saa {

// ---------------------------------------------------------------- Vector

Vector::Vector(PrimeField field, std::span<const Residue> coords)
    : field_(field), coords_(coords.begin(), coords.end())
{
    for (auto& c : coords_)
        c = field_.reduce(c);
}

Vector::Vector(PrimeField field, std::initializer_list<std::int64_t> coords) : field_(field)
{
    coords_.reserve(coords.size());
    for (auto c : coords)
        coords_.push_back(field_.reduce(c));
}

Vector Vector::unit(PrimeField field, std::size_t size, std::size_t index)
{
    Vector v(field, size);
    v[index] = 1;
    return v;
}

bool Vector::is_zero() const noexcept
{
    for (auto c : coords_)
        if (c != 0)
            return false;
    return true;
}

void Vector::require_compatible(const Vector& o) const
{
    if (!(field_ == o.field_) || coords_.size() != o.coords_.size())
        throw std::invalid_argument("vector field or length mismatch");
}

void Vector::axpy(Residue c, std::span<const Residue> other)
{
    if (other.size() != coords_.size())
        throw std::invalid_argument("vector length mismatch");
    if (c == 0)
        return;
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (other[i] != 0)
            coords_[i] = field_.add(coords_[i], field_.mul(c, other[i]));
}

Vector& Vector::operator+=(const Vector& o)
{
    require_compatible(o);
    axpy(1, o.coords_);
    return *this;
}

Vector& Vector::operator-=(const Vector& o)
{
    require_compatible(o);
    axpy(field_.neg(1), o.coords_);
    return *this;
}

Vector Vector::scaled(Residue c) const
{
    Vector r(*this);
    for (auto& x : r.coords_)
        x = field_.mul(x, c);
    return r;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(PrimeField field, std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : field_(field), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
{
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("ragged matrix literal");
        for (auto v : r)
            data_.push_back(field_.reduce(v));
    }
}

Matrix Matrix::identity(PrimeField field, std::size_t n)
{
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(PrimeField field, std::size_t cols, const std::vector<Vector>& rows)
{
    Matrix m(field, 0, cols);
    for (const auto& r : rows) {
        if (!(r.field() == field))
            throw std::invalid_argument("row from a different field");
        m.append_row(r.coords());
    }
    return m;
}

void Matrix::append_row(std::span<const Residue> values)
{
    if (values.size() != cols_)
        throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

void Matrix::truncate_rows(std::size_t rows)
{
    if (rows < rows_) {
        rows_ = rows;
        data_.resize(rows_ * cols_);
    }
}

Matrix Matrix::transpose() const
{
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const
{
    if (!(field_ == o.field_) || cols_ != o.rows_)
        throw std::invalid_argument("matrix product shape or field mismatch");
    Matrix out(field_, rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            Residue a = (*this)(r, k);
            if (a == 0)
                continue;
            for (std::size_t c = 0; c < o.cols_; ++c)
                out(r, c) = field_.add(out(r, c), field_.mul(a, o(k, c)));
        }
    return out;
}

Vector Matrix::operator*(const Vector& v) const
{
    if (!(field_ == v.field()) || cols_ != v.size())
        throw std::invalid_argument("matrix-vector shape or field mismatch");
    Vector out(field_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Residue acc = 0;
        for (std::size_t c = 0; c < cols_; ++c)
            acc = field_.add(acc, field_.mul((*this)(r, c), v[c]));
        out[r] = acc;
    }
    return out;
}

// ---------------------------------------------------------------- elimination

std::vector<std::size_t> rref_in_place(Matrix& m)
{
    const auto& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
        std::size_t sel = lead;
        while (sel < m.rows() && m(sel, c) == 0)
            ++sel;
        if (sel == m.rows())
            continue;
        if (sel != lead) {
            auto a = m.row(sel);
            auto b = m.row(lead);
            std::swap_ranges(a.begin(), a.end(), b.begin());
        }
        auto pr = m.row(lead);
        Residue inv = f.inv(pr[c]);
        for (std::size_t k = c; k < m.cols(); ++k)
            pr[k] = f.mul(pr[k], inv);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead || m(r, c) == 0)
                continue;
            auto row = m.row(r);
            Residue factor = f.neg(row[c]);
            for (std::size_t k = c; k < m.cols(); ++k)
                if (pr[k] != 0)
                    row[k] = f.add(row[k], f.mul(factor, pr[k]));
        }
        pivots.push_back(c);
        ++lead;
    }
    return pivots;
}

Matrix rref(Matrix m)
{
    rref_in_place(m);
    return m;
}

Matrix nullspace(const Matrix& m)
{
    Matrix r = m;
    auto pivots = rref_in_place(r);
    const auto& f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;

    Matrix out(f, 0, m.cols());
    std::vector<Residue> v(m.cols());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::fill(v.begin(), v.end(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = f.neg(r(i, free));
        out.append_row(v);
    }
    rref_in_place(out);
    return out;
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::zero(PrimeField field, std::size_t ambient_dim)
{
    return Subspace(Matrix(field, 0, ambient_dim), {});
}

Subspace Subspace::full(PrimeField field, std::size_t ambient_dim)
{
    std::vector<std::size_t> pivots(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i)
        pivots[i] = i;
    return Subspace(Matrix::identity(field, ambient_dim), std::move(pivots));
}

Subspace Subspace::row_space(Matrix rows)
{
    auto pivots = rref_in_place(rows);
    rows.truncate_rows(pivots.size());
    return Subspace(std::move(rows), std::move(pivots));
}

Subspace Subspace::span(PrimeField field, std::size_t ambient_dim, const std::vector<Vector>& vectors)
{
    return row_space(Matrix::from_rows(field, ambient_dim, vectors));
}

void Subspace::reduce_in_place(std::span<Residue> v) const
{
    if (v.size() != ambient_dim())
        throw std::invalid_argument("vector length does not match ambient dimension");
    const auto& f = field();
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        Residue c = v[pivots_[i]];
        if (c == 0)
            continue;
        Residue factor = f.neg(c);
        auto row = basis_.row(i);
        for (std::size_t k = pivots_[i]; k < v.size(); ++k)
            if (row[k] != 0)
                v[k] = f.add(v[k], f.mul(factor, row[k]));
    }
}

Vector Subspace::reduce(const Vector& v) const
{
    if (!(v.field() == field()))
        throw std::invalid_argument("vector from a different field");
    Vector r = v;
    reduce_in_place(r.coords());
    return r;
}

bool Subspace::contains(const Vector& v) const
{
    return reduce(v).is_zero();
}

bool Subspace::contains(const Subspace& s) const
{
    if (!(s.field() == field()) || s.ambient_dim() != ambient_dim())
        throw std::invalid_argument("subspace ambient or field mismatch");
    std::vector<Residue> buf(ambient_dim());
    for (std::size_t i = 0; i < s.dim(); ++i) {
        auto row = s.basis_.row(i);
        std::copy(row.begin(), row.end(), buf.begin());
        reduce_in_place(buf);
        for (auto c : buf)
            if (c != 0)
                return false;
    }
    return true;
}

namespace {
void require_same_ambient(const Subspace& a, const Subspace& b)
{
    if (!(a.field() == b.field()) || a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("subspace ambient dimension or field mismatch");
}
}  // namespace

Subspace subspace_sum(const Subspace& a, const Subspace& b)
{
    require_same_ambient(a, b);
    Matrix m = a.basis();
    for (std::size_t i = 0; i < b.dim(); ++i)
        m.append_row(b.basis().row(i));
    return Subspace::row_space(std::move(m));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b)
{
    // Zassenhaus: rows [a | a] and [b | 0]; after reduction, rows whose left
    // half vanishes carry a basis of the intersection in their right half.
    require_same_ambient(a, b);
    const std::size_t d = a.ambient_dim();
    Matrix m(a.field(), 0, 2 * d);
    std::vector<Residue> buf(2 * d);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        auto r = a.basis().row(i);
        std::copy(r.begin(), r.end(), buf.begin());
        std::copy(r.begin(), r.end(), buf.begin() + d);
        m.append_row(buf);
    }
    for (std::size_t i = 0; i < b.dim(); ++i) {
        auto r = b.basis().row(i);
        std::copy(r.begin(), r.end(), buf.begin());
        std::fill(buf.begin() + d, buf.end(), 0);
        m.append_row(buf);
    }
    auto pivots = rref_in_place(m);
    Matrix out(a.field(), 0, d);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if (pivots[i] >= d)
            out.append_row(m.row(i).subspan(d, d));
    return Subspace::row_space(std::move(out));
}

// ---------------------------------------------------------------- form

GramMatrix::GramMatrix(PrimeField field, std::size_t half_dim)
    : half_dim_(half_dim), matrix_(field, 2 * half_dim, 2 * half_dim)
{
    for (std::size_t i = 0; i < half_dim; ++i) {
        matrix_(2 * i, 2 * i + 1) = 1;
        matrix_(2 * i + 1, 2 * i) = field.neg(1);
    }
}

Residue GramMatrix::pair(std::span<const Residue> u, std::span<const Residue> v) const
{
    if (u.size() != dim() || v.size() != dim())
        throw std::invalid_argument("vector length does not match form dimension");
    const auto& f = field();
    Residue acc = 0;
    for (std::size_t i = 0; i < half_dim_; ++i) {
        // u_x v_y - u_y v_x
        acc = f.add(acc, f.mul(u[2 * i], v[2 * i + 1]));
        acc = f.sub(acc, f.mul(u[2 * i + 1], v[2 * i]));
    }
    return acc;
}

FieldElement GramMatrix::pair(const Vector& u, const Vector& v) const
{
    if (!(u.field() == field()) || !(v.field() == field()))
        throw std::invalid_argument("vector from a different field");
    return {field(), pair(u.coords(), v.coords())};
}

Subspace perp(const Subspace& s, const GramMatrix& g)
{
    if (s.ambient_dim() != g.dim() || !(s.field() == g.field()))
        throw std::invalid_argument("subspace does not live in the form's space");
    // (u, v) = u^T G v, so v is in the perp iff (basis * G) v = 0.
    return Subspace::row_space(nullspace(s.basis() * g.matrix()));
}

Vector solve_against_form(const GramMatrix& g, std::span<const Residue> rhs)
{
    if (rhs.size() != g.dim())
        throw std::invalid_argument("right-hand side length does not match form dimension");
    const auto& f = g.field();
    Vector v(f, g.dim());
    for (std::size_t k = 0; k < g.half_dim(); ++k) {
        v[2 * k] = f.reduce(rhs[2 * k + 1]);
        v[2 * k + 1] = f.neg(f.reduce(rhs[2 * k]));
    }
    return v;
}

}  // namespace saa
