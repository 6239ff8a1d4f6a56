#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rootpoly/errors.hpp"

namespace rootpoly {

// Arbitrary-precision integers and rationals. cpp_rational keeps values in
// lowest terms with a positive denominator, which is exactly the invariant
// we need; no floating point is used anywhere in this project.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

Int num(const Rat& q);
Int den(const Rat& q);
bool is_integral(const Rat& q);
Int to_int(const Rat& q); // requires is_integral

QVec to_qvec(const IVec& v);
std::optional<IVec> to_ivec(const QVec& v); // nullopt if any entry fractional

Rat dot(const QVec& a, const QVec& b);
Int dot(const IVec& a, const IVec& b);
IVec add(const IVec& a, const IVec& b);
IVec sub(const IVec& a, const IVec& b);
QVec sub(const QVec& a, const QVec& b);
QVec add(const QVec& a, const QVec& b);
QVec scale(const QVec& a, const Rat& c);
bool is_zero(const QVec& v);
bool is_zero(const IVec& v);

// Lexicographic comparisons used for all canonical orderings.
bool lex_less(const QVec& a, const QVec& b);
bool lex_less(const IVec& a, const IVec& b);

// gcd of all entries (nonnegative); 0 for the zero vector.
Int content(const IVec& v);
// Divide by the content. Zero vectors pass through. The sign is not touched;
// callers fix orientation from their own context.
IVec primitive(const IVec& v);
// Clear denominators and divide by content: the unique primitive integer
// vector that is a positive multiple of v.
IVec primitive(const QVec& v);

std::string to_string(const IVec& v);
std::string to_string(const QVec& v);

struct IMat {
    std::size_t rows = 0, cols = 0;
    std::vector<Int> data; // row-major

    IMat() = default;
    IMat(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
    static IMat identity(std::size_t n);
    static IMat from_rows(const std::vector<IVec>& rs);

    Int& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
    IVec row(std::size_t i) const;
    std::vector<IVec> row_list() const;
};

struct QMat {
    std::size_t rows = 0, cols = 0;
    std::vector<Rat> data;

    QMat() = default;
    QMat(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
    static QMat from_rows(const std::vector<QVec>& rs);

    Rat& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
    QVec row(std::size_t i) const;
};

IMat mul(const IMat& a, const IMat& b);
IVec mul(const IMat& a, const IVec& v);
QVec mul(const QMat& a, const QVec& v);
IMat transpose(const IMat& m);

// Exact determinant (fraction-free Bareiss elimination).
Int determinant(const IMat& m);

// U * m * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithForm {
    IMat u, d, v;
    std::size_t rank = 0;
    std::vector<Int> diagonal() const;
};
SmithForm smith_normal_form(const IMat& m);

// One exact solution of a x = b, or nullopt when inconsistent.
std::optional<QVec> solve_rational(const QMat& a, const QVec& b);

std::size_t rank(const QMat& m);
std::size_t lattice_rank(const IMat& m); // rank over the rationals

// Basis of the rational kernel {x : m x = 0}, one QVec per free column.
std::vector<QVec> kernel(const QMat& m);
// Basis of the integer kernel {x in Z^cols : m x = 0}. The kernel of an
// integer matrix is saturated, so this is also a lattice basis.
std::vector<IVec> integer_kernel(const IMat& m);

// Basis of span_Q(rows) \cap Z^cols (the saturation of the row lattice).
std::vector<IVec> saturated_row_basis(const IMat& m);

// Basis of the lattice generated by the rows (Hermite-style via SNF).
std::vector<IVec> row_lattice_basis(const IMat& m);

// Coordinates of v in the given lattice basis if v lies in the lattice.
std::optional<IVec> in_lattice(const std::vector<IVec>& basis, const IVec& v);

} // namespace rootpoly
