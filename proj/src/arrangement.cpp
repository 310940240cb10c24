#include "chromatica/arrangement.hpp"

#include "chromatica/error.hpp"

#include <algorithm>
#include <set>

namespace chromatica {

ProjTriple::ProjTriple(Integer a, Integer b, Integer c) : c_{std::move(a), std::move(b), std::move(c)} {
    Integer g = 0;
    for (const auto& x : c_) g = gcd(g, x);
    if (sgn(g) == 0) fail(ErrorCode::InvalidArgument, "projective triple (0,0,0)");
    for (auto& x : c_) x /= g;
    auto lead = std::find_if(c_.begin(), c_.end(), [](const Integer& x) { return sgn(x) != 0; });
    if (sgn(*lead) < 0)
        for (auto& x : c_) x = -x;
}

ProjPoint meet(const ProjLine& a, const ProjLine& b) {
    const auto& p = a.coeffs();
    const auto& q = b.coeffs();
    Integer x = p[1] * q[2] - p[2] * q[1];
    Integer y = p[2] * q[0] - p[0] * q[2];
    Integer z = p[0] * q[1] - p[1] * q[0];
    if (sgn(x) == 0 && sgn(y) == 0 && sgn(z) == 0) fail(ErrorCode::InvalidArgument, "meet of a line with itself");
    return ProjPoint(std::move(x), std::move(y), std::move(z));
}

ProjLineArrangement::ProjLineArrangement(std::vector<ProjLine> lines) {
    for (auto& l : lines) add(l);
}

bool ProjLineArrangement::contains(const ProjLine& l) const {
    return std::find(lines_.begin(), lines_.end(), l) != lines_.end();
}

void ProjLineArrangement::add(const ProjLine& l) {
    if (contains(l)) fail(ErrorCode::LineAlreadyPresent, "line already in the arrangement");
    lines_.push_back(l);
}

Poly characteristic_graphic(const GraphicArrangement& a) { return chromatic(a.graph); }

ChamberCount chambers(const Poly& chi) { return {abs(chi.eval(-1)), abs(chi.eval(1))}; }

Poly rank2_characteristic(long m) {
    if (m < 1) fail(ErrorCode::Domain, "rank-2 arrangement needs m >= 1");
    return Poly{m - 1, -m, 1};
}

Integer add_edge_chambers(const Graph& g, const Integer& chambers_g, const Edge& e0) {
    EdgeAdditionRule rule = classify_edge_addition(g, e0);
    switch (rule.kind) {
        case EdgeAdditionRule::Kind::Bridge:
            return chambers_g * 2;
        case EdgeAdditionRule::Kind::MinimalCycle: {
            const auto m = static_cast<unsigned long>(rule.cycle_length);
            Integer numer = 1, denom = 1;
            mpz_mul_2exp(numer.get_mpz_t(), numer.get_mpz_t(), m - 1);
            numer -= 1;
            mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), m - 2);
            Integer scaled = chambers_g * numer;
            if (!mpz_divisible_p(scaled.get_mpz_t(), denom.get_mpz_t()))
                fail(ErrorCode::NonIntegral, "chamber multiplier does not divide " + chambers_g.get_str());
            return scaled / denom;
        }
        case EdgeAdditionRule::Kind::Fallback:
            break;
    }
    fail(ErrorCode::HypothesisViolated, "new edge closes more than one minimal cycle");
}

std::size_t intersect_count(const ProjLineArrangement& a, const ProjLine& l0) {
    if (a.contains(l0)) fail(ErrorCode::LineAlreadyPresent, "line already in the arrangement");
    std::set<ProjPoint> points;
    for (const auto& l : a.lines()) points.insert(meet(l0, l));
    return points.size();
}

Poly add_line_characteristic(const Poly& chi_a, long k) {
    if (chi_a.degree() != 3) fail(ErrorCode::Domain, "line addition needs a degree-3 characteristic polynomial");
    if (k < 0) fail(ErrorCode::Domain, "intersection count must be nonnegative");
    return chi_a - Poly{k - 1, -k, 1};
}

Poly characteristic_lines(const ProjLineArrangement& a) {
    if (a.size() == 0) fail(ErrorCode::EmptyArrangement, "no lines");
    Poly chi{0, 0, -1, 1};
    ProjLineArrangement built;
    built.add(a.lines().front());
    for (std::size_t i = 1; i < a.size(); ++i) {
        const auto& l = a.lines()[i];
        chi = add_line_characteristic(chi, static_cast<long>(intersect_count(built, l)));
        built.add(l);
    }
    return chi;
}

}  // namespace chromatica
