#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace chromatica {

using Integer = mpz_class;

/// Dense univariate polynomial in t with arbitrary-precision integer
/// coefficients. coeffs()[i] is the coefficient of t^i. The representation is
/// canonical: no trailing zeros, and the zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Integer> coeffs);
    Poly(std::initializer_list<long> coeffs);

    static Poly constant(const Integer& c);
    static Poly monomial(const Integer& c, std::size_t degree);
    /// t - a
    static Poly linear_root(long a);

    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    /// Coefficient of t^i; zero beyond the degree.
    Integer coeff(std::size_t i) const;
    const Integer& leading() const;

    Integer eval(const Integer& x) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& q);
    Poly& operator-=(const Poly& q);
    Poly& operator*=(const Poly& q);

    friend Poly operator+(Poly p, const Poly& q) { return p += q; }
    friend Poly operator-(Poly p, const Poly& q) { return p -= q; }
    friend Poly operator*(const Poly& p, const Poly& q);
    friend bool operator==(const Poly& p, const Poly& q) { return p.coeffs_ == q.coeffs_; }
    friend bool operator!=(const Poly& p, const Poly& q) { return !(p == q); }

    Poly pow(unsigned exponent) const;

    /// "t^4 - 5t^3 + 8t^2 - 4t"; "0" for the zero polynomial.
    std::string to_string() const;
    /// ["0","-4","8","-5","1"]: ascending powers, decimal strings.
    std::string to_json() const;

private:
    void trim();

    std::vector<Integer> coeffs_;
};

Poly add(const Poly& p, const Poly& q);
Poly mul(const Poly& p, const Poly& q);

/// Quotient r with r * q == p. Throws NonDivisible when long division leaves a
/// remainder and InvalidArgument when q is zero.
Poly exact_div(const Poly& p, const Poly& q);

Integer eval(const Poly& p, const Integer& x);

}  // namespace chromatica
