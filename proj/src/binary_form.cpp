#include "hassesieve/binary_form.hpp"

#include <algorithm>

namespace hassesieve {

BinaryForm::BinaryForm(std::vector<Integer> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_ = {Integer(0)};
}

BinaryForm BinaryForm::binomial(unsigned d, const Integer& a, const Integer& b) {
    std::vector<Integer> c(d + 1, Integer(0));
    c.front() = a;
    c.back() = b;
    return BinaryForm(std::move(c));
}

BinaryForm BinaryForm::quadratic_pair(const Integer& b, const Integer& c) {
    return BinaryForm({b * b, b * c, c * c});
}

Integer BinaryForm::eval(const Integer& X, const Integer& Y) const {
    Integer acc = 0;
    Integer ypow = 1;
    std::vector<Integer> xpow(c_.size());
    xpow[c_.size() - 1] = 1;
    for (size_t i = c_.size() - 1; i-- > 0;) xpow[i] = xpow[i + 1] * X;
    for (size_t i = 0; i < c_.size(); ++i) {
        acc += c_[i] * xpow[i] * ypow;
        ypow *= Y;
    }
    return acc;
}

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
    std::vector<Integer> r(degree() + o.degree() + 1, Integer(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return BinaryForm(std::move(r));
}

BinaryForm BinaryForm::dX() const {
    if (degree() == 0) return BinaryForm({Integer(0)});
    unsigned d = degree();
    std::vector<Integer> r(d, Integer(0));
    for (unsigned i = 0; i < d; ++i) r[i] = c_[i] * (d - i);
    return BinaryForm(std::move(r));
}

BinaryForm BinaryForm::dY() const {
    if (degree() == 0) return BinaryForm({Integer(0)});
    unsigned d = degree();
    std::vector<Integer> r(d, Integer(0));
    for (unsigned i = 1; i <= d; ++i) r[i - 1] = c_[i] * i;
    return BinaryForm(std::move(r));
}

Integer BinaryForm::content() const {
    Integer g = 0;
    for (const Integer& ci : c_) g = gcd(g, ci);
    return g;
}

bool BinaryForm::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Integer& x) { return x == 0; });
}

namespace {

// Determinant by fraction-free (Bareiss) elimination.
Integer bareiss_det(std::vector<std::vector<Integer>> m) {
    size_t n = m.size();
    Integer prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

} // namespace

Integer resultant(const BinaryForm& f, const BinaryForm& g) {
    unsigned m = f.degree(), n = g.degree();
    if (m == 0) return ipow(f.coeff(0), n);
    if (n == 0) return ipow(g.coeff(0), m);
    size_t N = m + n;
    std::vector<std::vector<Integer>> syl(N, std::vector<Integer>(N, Integer(0)));
    for (unsigned row = 0; row < n; ++row)
        for (unsigned i = 0; i <= m; ++i) syl[row][row + i] = f.coeff(i);
    for (unsigned row = 0; row < m; ++row)
        for (unsigned i = 0; i <= n; ++i) syl[n + row][row + i] = g.coeff(i);
    return bareiss_det(std::move(syl));
}

namespace {

// primitive part of a univariate integer polynomial (coeff vector, ascending)
std::vector<Integer> primitive(std::vector<Integer> p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    Integer g = 0;
    for (const auto& ci : p) g = gcd(g, ci);
    if (g > 1)
        for (auto& ci : p) ci /= g;
    return p;
}

// gcd of univariate integer polynomials by primitive pseudo-remainders
std::vector<Integer> poly_gcd(std::vector<Integer> a, std::vector<Integer> b) {
    a = primitive(std::move(a));
    b = primitive(std::move(b));
    while (!b.empty()) {
        // pseudo-remainder of a by b
        std::vector<Integer> r = a;
        const Integer lc = b.back();
        while (r.size() >= b.size() && !r.empty()) {
            Integer q = r.back();
            size_t shift = r.size() - b.size();
            for (auto& ci : r) ci *= lc;
            for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= q * b[i];
            while (!r.empty() && r.back() == 0) r.pop_back();
            r = primitive(std::move(r));
        }
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

} // namespace

bool is_squarefree(const BinaryForm& f) {
    if (f.is_zero()) return false;
    // Work with h(t) = f(t, 1), coefficients ascending: a_i = coeff(d-i).
    // The root [1:0] shows up as a degree drop of h.
    unsigned d = f.degree();
    std::vector<Integer> h(d + 1);
    for (unsigned i = 0; i <= d; ++i) h[i] = f.coeff(d - i);
    // multiplicity of the root at infinity [1:0] = d - deg(h)
    unsigned degh = d;
    while (degh > 0 && h[degh] == 0) --degh;
    if (d - degh >= 2) return false;  // [1:0] is a repeated root
    h.resize(degh + 1);
    if (degh == 0) return d - degh < 2;  // constant: only the infinity root
    std::vector<Integer> dh(degh);
    for (unsigned i = 1; i <= degh; ++i) dh[i - 1] = h[i] * i;
    auto g = poly_gcd(h, dh);
    return g.size() <= 1;
}

TernaryForm::TernaryForm(unsigned n) : n_(n), c_((n + 1) * (n + 1), Integer(0)) {}

TernaryForm TernaryForm::curve_shape(const BinaryForm& G, const Integer& L) {
    TernaryForm F(G.degree());
    unsigned d = G.degree();
    for (unsigned i = 0; i <= d; ++i) F.at(d - i, i) = G.coeff(i);
    F.at(0, 0) -= L;
    return F;
}

Integer& TernaryForm::at(unsigned i, unsigned j) { return c_[i * (n_ + 1) + j]; }
const Integer& TernaryForm::at(unsigned i, unsigned j) const { return c_[i * (n_ + 1) + j]; }

Integer TernaryForm::eval(const Integer& X, const Integer& Y, const Integer& Z) const {
    std::vector<Integer> xp(n_ + 1), yp(n_ + 1), zp(n_ + 1);
    xp[0] = yp[0] = zp[0] = 1;
    for (unsigned i = 1; i <= n_; ++i) {
        xp[i] = xp[i - 1] * X;
        yp[i] = yp[i - 1] * Y;
        zp[i] = zp[i - 1] * Z;
    }
    Integer acc = 0;
    for (unsigned i = 0; i <= n_; ++i)
        for (unsigned j = 0; i + j <= n_; ++j) {
            const Integer& ci = at(i, j);
            if (ci != 0) acc += ci * xp[i] * yp[j] * zp[n_ - i - j];
        }
    return acc;
}

TernaryForm TernaryForm::dX() const {
    TernaryForm r(n_ ? n_ - 1 : 0);
    for (unsigned i = 1; i <= n_; ++i)
        for (unsigned j = 0; i + j <= n_; ++j) r.at(i - 1, j) = at(i, j) * i;
    return r;
}

TernaryForm TernaryForm::dY() const {
    TernaryForm r(n_ ? n_ - 1 : 0);
    for (unsigned i = 0; i <= n_; ++i)
        for (unsigned j = 1; i + j <= n_; ++j) r.at(i, j - 1) = at(i, j) * j;
    return r;
}

TernaryForm TernaryForm::dZ() const {
    TernaryForm r(n_ ? n_ - 1 : 0);
    for (unsigned i = 0; i <= n_; ++i)
        for (unsigned j = 0; i + j <= n_; ++j)
            if (n_ - i - j >= 1) r.at(i, j) = at(i, j) * (n_ - i - j);
    return r;
}

} // namespace hassesieve
