#pragma once

#include <vector>

#include "hassesieve/integer.hpp"

namespace hassesieve {

/// Homogeneous binary form sum_i c[i] X^{d-i} Y^i with exact coefficients.
class BinaryForm {
public:
    BinaryForm() : c_(1, 0) {}
    explicit BinaryForm(std::vector<Integer> coeffs);
    static BinaryForm constant(const Integer& v) { return BinaryForm({v}); }
    /// a X^d + b Y^d
    static BinaryForm binomial(unsigned d, const Integer& a, const Integer& b);
    /// b^2 X^2 + bc XY + c^2 Y^2
    static BinaryForm quadratic_pair(const Integer& b, const Integer& c);

    unsigned degree() const { return unsigned(c_.size() - 1); }
    const Integer& coeff(unsigned i) const { return c_[i]; }  // of X^{d-i} Y^i
    const std::vector<Integer>& coeffs() const { return c_; }

    Integer eval(const Integer& X, const Integer& Y) const;
    BinaryForm operator*(const BinaryForm& o) const;
    bool operator==(const BinaryForm& o) const { return c_ == o.c_; }

    BinaryForm dX() const;
    BinaryForm dY() const;
    Integer content() const;
    bool is_zero() const;

private:
    std::vector<Integer> c_;
};

/// Formal resultant of two binary forms at their stated degrees
/// (Sylvester determinant, fraction-free Gaussian elimination).
Integer resultant(const BinaryForm& f, const BinaryForm& g);

/// Discriminant-style squarefree test: no repeated projective root over C.
bool is_squarefree(const BinaryForm& f);

/// Dense homogeneous ternary form of degree n: coefficient of X^i Y^j Z^{n-i-j}.
class TernaryForm {
public:
    explicit TernaryForm(unsigned n);
    /// G(X, Y) - L * Z^n for a binary form G of degree n.
    static TernaryForm curve_shape(const BinaryForm& G, const Integer& L);

    unsigned degree() const { return n_; }
    Integer& at(unsigned i, unsigned j);
    const Integer& at(unsigned i, unsigned j) const;

    Integer eval(const Integer& X, const Integer& Y, const Integer& Z) const;
    TernaryForm dX() const;
    TernaryForm dY() const;
    TernaryForm dZ() const;
    bool operator==(const TernaryForm& o) const = default;

private:
    unsigned n_;
    std::vector<Integer> c_;  // index (i, j) -> i*(n+1)+j, i+j <= n
};

} // namespace hassesieve
