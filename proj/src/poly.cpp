#include "chromatica/poly.hpp"

#include "chromatica/error.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace chromatica {

Poly::Poly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

Poly Poly::constant(const Integer& c) { return Poly(std::vector<Integer>{c}); }

Poly Poly::monomial(const Integer& c, std::size_t degree) {
    std::vector<Integer> v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v));
}

Poly Poly::linear_root(long a) { return Poly{-a, 1}; }

void Poly::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Integer Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

const Integer& Poly::leading() const {
    if (coeffs_.empty()) fail(ErrorCode::InvalidArgument, "zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Integer Poly::eval(const Integer& x) const {
    // Horner
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& q) {
    if (coeffs_.size() < q.coeffs_.size()) coeffs_.resize(q.coeffs_.size());
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] += q.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& q) {
    if (coeffs_.size() < q.coeffs_.size()) coeffs_.resize(q.coeffs_.size());
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] -= q.coeffs_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Integer> out(p.coeffs_.size() + q.coeffs_.size() - 1);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
        if (sgn(p.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), p.coeffs_[i].get_mpz_t(), q.coeffs_[j].get_mpz_t());
        }
    }
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& q) { return *this = *this * q; }

Poly Poly::pow(unsigned exponent) const {
    Poly result = Poly::constant(1);
    Poly base = *this;
    while (exponent > 0) {
        if (exponent & 1u) result *= base;
        exponent >>= 1;
        if (exponent > 0) base *= base;
    }
    return result;
}

std::string Poly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Integer& c = coeffs_[k];
        if (sgn(c) == 0) continue;
        Integer mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << '-';
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0 || mag != 1) os << mag.get_str();
        if (k >= 1) os << 't';
        if (k >= 2) os << '^' << k;
    }
    return os.str();
}

std::string Poly::to_json() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ',';
        out += '"';
        out += coeffs_[i].get_str();
        out += '"';
    }
    out += ']';
    return out;
}

Poly add(const Poly& p, const Poly& q) { return p + q; }
Poly mul(const Poly& p, const Poly& q) { return p * q; }

Poly exact_div(const Poly& p, const Poly& q) {
    if (q.is_zero()) fail(ErrorCode::InvalidArgument, "division by the zero polynomial");
    if (p.is_zero()) return {};
    if (p.degree() < q.degree())
        fail(ErrorCode::NonDivisible, "divisor " + q.to_string() + " has larger degree than " + p.to_string());

    std::vector<Integer> rem = p.coeffs();
    const auto& d = q.coeffs();
    const std::size_t dq = d.size() - 1;
    std::vector<Integer> quot(rem.size() - dq);
    Integer r;
    for (std::size_t k = quot.size(); k-- > 0;) {
        const Integer& top = rem[k + dq];
        if (sgn(top) == 0) continue;
        mpz_fdiv_qr(quot[k].get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), d[dq].get_mpz_t());
        if (sgn(r) != 0)
            fail(ErrorCode::NonDivisible, q.to_string() + " does not divide " + p.to_string());
        for (std::size_t j = 0; j <= dq; ++j) {
            mpz_submul(rem[k + j].get_mpz_t(), quot[k].get_mpz_t(), d[j].get_mpz_t());
        }
    }
    if (std::any_of(rem.begin(), rem.end(), [](const Integer& c) { return sgn(c) != 0; }))
        fail(ErrorCode::NonDivisible, q.to_string() + " does not divide " + p.to_string());
    return Poly(std::move(quot));
}

Integer eval(const Poly& p, const Integer& x) { return p.eval(x); }

}  // namespace chromatica
