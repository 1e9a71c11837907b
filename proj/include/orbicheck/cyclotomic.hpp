#pragma once

#include "orbicheck/poly.hpp"
#include "orbicheck/rational.hpp"

#include <string>
#include <vector>

namespace orbicheck {

long euler_phi(long n);
long lcm_order(long a, long b);

/** N-th cyclotomic polynomial, monic over Q, memoized. */
const RatPoly& cyclotomic_poly(long n);

/**
 * Element of the cyclotomic field Q(zeta_N): a residue modulo Phi_N with
 * exactly phi(N) rational coefficients, always kept reduced, so elements of
 * equal order are equal iff their coefficient vectors are equal. Arithmetic
 * between different orders lifts both operands into Q(zeta_lcm) first and
 * yields a result of that order.
 */
class CycNum {
public:
    CycNum() : CycNum(Rational(0)) {}
    CycNum(int n) : CycNum(Rational(n)) {}
    CycNum(const Rational& q);

    /** Primitive n-th root of unity. */
    static CycNum zeta(long n);
    /** Residue from raw coefficients (any length); reduced modulo Phi_order. */
    static CycNum from_coeffs(long order, std::vector<Rational> coeffs);

    long order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    /** The value as a rational; throws std::domain_error if irrational. */
    Rational rational_value() const;

    /** Same value in Q(zeta_m); m must be a multiple of order(). */
    CycNum lifted(long m) const;

    CycNum operator+(const CycNum& o) const;
    CycNum operator-(const CycNum& o) const;
    CycNum operator-() const;
    CycNum operator*(const CycNum& o) const;
    CycNum operator/(const CycNum& o) const; // throws std::domain_error on /0
    CycNum inverse() const;
    CycNum pow(long k) const; // negative k inverts; 0^negative throws

    bool operator==(const CycNum& o) const;
    bool operator!=(const CycNum& o) const { return !(*this == o); }

    /** Lexicographic coefficient comparison; both operands must share an order. */
    static int cmp_same_order(const CycNum& a, const CycNum& b);

    /** Stable text key ("o8:0,1,0,0"), for hashing elements of a common order. */
    std::string key() const;

    /** Human/grammar form, e.g. "1/2 - 1/2*zeta(4)". */
    std::string str() const;

private:
    CycNum(long order, std::vector<Rational> reduced) : order_(order), c_(std::move(reduced)) {}

    long order_;
    std::vector<Rational> c_; // size == phi(order_), reduced mod Phi_order
};

using CycPoly = Poly<CycNum>;

inline CycPoly to_cyc_poly(const RatPoly& p) {
    std::vector<CycNum> c;
    c.reserve(p.coeffs().size());
    for (const auto& q : p.coeffs()) c.emplace_back(q);
    return CycPoly(std::move(c));
}

} // namespace orbicheck
