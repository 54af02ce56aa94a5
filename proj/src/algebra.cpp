#include "saa/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace saa {

namespace {

// Sorts (i, j, k) ascending; returns true for an odd permutation.
bool sort3(StructureTensor::Key& key)
{
    bool odd = false;
    for (int pass = 0; pass < 2; ++pass)
        for (int i = 0; i < 2; ++i)
            if (key[i + 1] < key[i]) {
                std::swap(key[i], key[i + 1]);
                odd = !odd;
            }
    return odd;
}

}  // namespace

Residue StructureTensor::value(std::size_t i, std::size_t j, std::size_t k) const
{
    if (i == j || j == k || i == k)
        return 0;
    Key key{i, j, k};
    bool odd = sort3(key);
    auto it = entries_.find(key);
    if (it == entries_.end())
        return 0;
    return odd ? field_.neg(it->second) : it->second;
}

void StructureTensor::set(std::size_t i, std::size_t j, std::size_t k, Residue v)
{
    if (i >= dim_ || j >= dim_ || k >= dim_)
        throw std::invalid_argument("tensor index out of range");
    v = field_.reduce(v);
    if (i == j || j == k || i == k) {
        if (v != 0)
            throw std::invalid_argument("alternating tensor must vanish on repeated arguments");
        return;
    }
    Key key{i, j, k};
    if (sort3(key))
        v = field_.neg(v);
    if (v == 0)
        entries_.erase(key);
    else
        entries_[key] = v;
}

Algebra::Algebra(PrimeField field, int n)
    : n_(n), form_(field, static_cast<std::size_t>(n)), tensor_(field, 2 * static_cast<std::size_t>(n))
{
}

Algebra Algebra::build(const Presentation& p)
{
    Algebra alg(p.field(), p.n());
    for (const auto& t : p.triples())
        alg.tensor_.set(t.a.coordinate(), t.b.coordinate(), t.c.coordinate(), t.value.residue());

    const std::size_t d = alg.dim();
    alg.table_.assign(d * d * d, 0);
    std::vector<Residue> rhs(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            if (i == j)
                continue;
            for (std::size_t k = 0; k < d; ++k)
                rhs[k] = alg.tensor_.value(i, j, k);
            auto v = solve_against_form(alg.form_, rhs);
            std::copy(v.coords().begin(), v.coords().end(), alg.table_.begin() + (i * d + j) * d);
        }
    return alg;
}

Algebra Algebra::from_table(PrimeField field, int n, std::vector<Vector> table)
{
    Algebra alg(field, n);
    const std::size_t d = alg.dim();
    if (table.size() != d * d)
        throw std::invalid_argument("product table must have dim^2 entries");
    alg.table_.reserve(d * d * d);
    for (const auto& v : table) {
        if (!(v.field() == field) || v.size() != d)
            throw std::invalid_argument("product table entry has wrong field or length");
        alg.table_.insert(alg.table_.end(), v.coords().begin(), v.coords().end());
    }
    for (std::size_t k = 0; k < d; ++k) {
        auto unit = Vector::unit(field, d, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                alg.tensor_.set(i, j, k, alg.form_.pair(alg.product(i, j), unit.coords()));
    }
    return alg;
}

Vector Algebra::multiply(const Vector& u, const Vector& v) const
{
    if (!(u.field() == field()) || !(v.field() == field()) || u.size() != dim() || v.size() != dim())
        throw std::invalid_argument("operands do not belong to this algebra");
    const std::size_t d = dim();
    const auto& f = field();
    Vector out(f, d);
    for (std::size_t i = 0; i < d; ++i) {
        if (u[i] == 0)
            continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (v[j] == 0)
                continue;
            out.axpy(f.mul(u[i], v[j]), product(i, j));
        }
    }
    return out;
}

FieldElement Algebra::pair(const Vector& u, const Vector& v) const
{
    return form_.pair(u, v);
}

Matrix Algebra::right_products(std::span<const Residue> u) const
{
    const std::size_t d = dim();
    if (u.size() != d)
        throw std::invalid_argument("vector length does not match algebra dimension");
    const auto& f = field();
    Matrix out(f, d, d);
    for (std::size_t i = 0; i < d; ++i) {
        if (u[i] == 0)
            continue;
        for (std::size_t k = 0; k < d; ++k) {
            auto prod = product(i, k);
            auto row = out.row(k);
            for (std::size_t c = 0; c < d; ++c)
                if (prod[c] != 0)
                    row[c] = f.add(row[c], f.mul(u[i], prod[c]));
        }
    }
    return out;
}

Presentation Algebra::presentation() const
{
    std::vector<Triple> triples;
    for (const auto& [key, v] : tensor_.entries())
        triples.push_back({BasisVector::from_coordinate(key[0]), BasisVector::from_coordinate(key[1]),
                           BasisVector::from_coordinate(key[2]), FieldElement(field(), v)});
    return Presentation(n_, field(), std::move(triples)).canonical();
}

Vector multiply(const Algebra& alg, const Vector& u, const Vector& v)
{
    return alg.multiply(u, v);
}

FieldElement form(const Algebra& alg, const Vector& u, const Vector& v)
{
    return alg.pair(u, v);
}

}  // namespace saa
