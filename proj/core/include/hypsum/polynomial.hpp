#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials and rational functions over exact
 *        rationals: arithmetic, gcd, shifts, resultants, dispersion, and the
 *        linear solver for Gosper's equation.
 *
 * Coefficients are stored constant term first with no trailing zeros, so the
 * leading coefficient of a nonzero polynomial is always nonzero. The degree
 * of the zero polynomial is the sentinel kNegInfDegree, which compares below
 * every attainable degree.
 */

#include <initializer_list>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypsum/rational.hpp"

namespace hypsum {

class Polynomial {
public:
    static constexpr int kNegInfDegree = std::numeric_limits<int>::min() / 2;

    Polynomial() = default;                    // zero polynomial
    Polynomial(const Rational& constant);      // NOLINT: implicit constant lift
    Polynomial(long constant);                 // NOLINT
    Polynomial(std::initializer_list<Rational> coeffs);
    explicit Polynomial(std::vector<Rational> coeffs);

    /// coeff * n^deg
    static Polynomial monomial(const Rational& coeff, int deg);

    /// Parses the polynomial text format: comma-separated coefficient list in
    /// rational text format, constant term first (e.g. "-1,0,1" for n^2 - 1).
    static Polynomial parse(std::string_view text);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? kNegInfDegree : static_cast<int>(coeffs_.size()) - 1; }
    bool is_constant() const { return coeffs_.size() <= 1; }

    /// Coefficient of n^i (zero outside the stored range).
    const Rational& coeff(int i) const;
    const Rational& leading_coeff() const;  ///< DomainError on the zero polynomial.
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational operator()(const Rational& point) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, const Polynomial& p);

    bool operator==(const Polynomial& rhs) const { return coeffs_ == rhs.coeffs_; }

    Polynomial monic() const;  ///< DomainError on the zero polynomial.

    std::string str() const;       ///< human form, e.g. "n^2 - 1"
    std::string list_str() const;  ///< coefficient-list text format

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

/// p(n + j), expanded exactly.
Polynomial shift(const Polynomial& p, long j);

/// Euclidean division; DomainError on zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& p, const Polynomial& d);

/// Exact quotient; throws DomainError if the remainder is nonzero.
Polynomial exact_div(const Polynomial& p, const Polynomial& d);

/// Monic greatest common divisor; DomainError when both inputs are zero.
Polynomial gcd(const Polynomial& p, const Polynomial& q);

/// Resultant of p and q via an exact Sylvester determinant.
Rational resultant(const Polynomial& p, const Polynomial& q);

/// The set { j >= 0 : deg gcd(p(n), q(n+j)) >= 1 }, sorted ascending.
/// Computed from Res_n(p(n), q(n+j)) by evaluation at dp*dq + 1 integer
/// points, exact interpolation in j, and nonnegative-integer root extraction
/// (rational-root divisibility filter below a Cauchy-style bound).
/// DomainError when p or q is zero.
std::vector<long> dispersion(const Polynomial& p, const Polynomial& q);

/// Smallest N such that every nonnegative integer root of
/// Res_n(p(n), q(n+j)) in j is <= N (Cauchy-style bound on root differences).
long dispersion_bound(const Polynomial& p, const Polynomial& q);

/// Polynomial x(n) with A(n) x(n+1) - B(n-1) x(n) = C(n), or nullopt when no
/// polynomial solution exists. The returned solution is re-checked against
/// the defining identity coefficientwise.
std::optional<Polynomial> solve_gosper_equation(const Polynomial& A,
                                                const Polynomial& B,
                                                const Polynomial& C);

/// Quotient of polynomials kept in lowest terms with a monic denominator.
class RationalFunction {
public:
    RationalFunction();  // zero
    RationalFunction(const Rational& constant);  // NOLINT
    RationalFunction(Polynomial num, Polynomial den);  ///< DomainError if den = 0.

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    bool defined_at(const Rational& point) const;
    Rational operator()(const Rational& point) const;  ///< PoleError at a root of den.

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    bool operator==(const RationalFunction& rhs) const = default;

    std::string str() const;

private:
    Polynomial num_;
    Polynomial den_;
};

/// r(n + j)
RationalFunction shift(const RationalFunction& r, long j);

}  // namespace hypsum
