#pragma once

#include "orbicheck/rational.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orbicheck {

/**
 * Dense univariate polynomial over a field F, coefficients lowest degree first.
 * The zero polynomial has an empty coefficient list and degree -1.
 */
template <class F>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(const F& a) { return Poly(std::vector<F>{a}); }
    static Poly x() { return Poly(std::vector<F>{F(0), F(1)}); }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<F>& coeffs() const { return c_; }

    // coefficient of t^k (0 beyond the stored range)
    F coeff(size_t k) const { return k < c_.size() ? c_[k] : F(0); }
    const F& lead() const {
        if (c_.empty()) throw std::domain_error("lead coefficient of zero polynomial");
        return c_.back();
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator+(const Poly& o) const {
        std::vector<F> r(std::max(c_.size(), o.c_.size()), F(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] = r[i] + c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
        return Poly(std::move(r));
    }
    Poly operator-() const {
        std::vector<F> r(c_);
        for (auto& a : r) a = F(0) - a;
        return Poly(std::move(r));
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<F> r(c_.size() + o.c_.size() - 1, F(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
        return Poly(std::move(r));
    }
    Poly operator*(const F& s) const {
        std::vector<F> r(c_);
        for (auto& a : r) a = a * s;
        return Poly(std::move(r));
    }

    // quotient and remainder; divisor must be nonzero
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        Poly rem = *this;
        if (degree() < d.degree()) return {Poly(), rem};
        std::vector<F> q(static_cast<size_t>(degree() - d.degree()) + 1, F(0));
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            F f = rem.lead() / d.lead();
            size_t k = static_cast<size_t>(rem.degree() - d.degree());
            q[k] = f;
            // rem -= f * t^k * d
            std::vector<F> rc = rem.c_;
            for (size_t i = 0; i < d.c_.size(); ++i) rc[k + i] = rc[k + i] - f * d.c_[i];
            rc.pop_back(); // leading term cancels exactly
            rem = Poly(std::move(rc));
        }
        return {Poly(std::move(q)), rem};
    }
    Poly operator/(const Poly& d) const { return divmod(d).first; }
    Poly operator%(const Poly& d) const { return divmod(d).second; }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<F> r(c_.size() - 1, F(0));
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * F(static_cast<int>(i));
        return Poly(std::move(r));
    }

    F eval(const F& t) const {
        F acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
        return acc;
    }

    // p(q(x))
    Poly compose(const Poly& q) const {
        Poly acc;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * q + constant(c_[i]);
        return acc;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * (F(1) / lead());
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == F(0)) c_.pop_back();
    }
    std::vector<F> c_;
};

/** Monic gcd by the Euclidean algorithm; gcd of two zero polynomials is undefined. */
template <class F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
    if (a.is_zero() && b.is_zero())
        throw std::domain_error("gcd of two zero polynomials");
    while (!b.is_zero()) {
        Poly<F> r = a % b;
        a = std::move(b);
        b = std::move(r).monic(); // normalize each step to keep coefficients tame
    }
    return a.monic();
}

/** Product of the distinct irreducible factors: p / gcd(p, p'). */
template <class F>
Poly<F> squarefree_part(const Poly<F>& p) {
    if (p.is_zero()) throw std::domain_error("squarefree part of zero polynomial");
    Poly<F> d = p.derivative();
    if (d.is_zero()) return Poly<F>::constant(F(1)); // constants
    return (p / poly_gcd(p, d)).monic();
}

template <class F>
bool poly_divides(const Poly<F>& a, const Poly<F>& b) {
    if (a.is_zero()) return b.is_zero();
    return (b % a).is_zero();
}

template <class F>
std::string poly_str(const Poly<F>& p, const std::function<std::string(const F&)>& coeff_str,
                     const std::string& var = "t") {
    if (p.is_zero()) return "0";
    std::string out;
    for (size_t i = p.coeffs().size(); i-- > 0;) {
        const F& a = p.coeffs()[i];
        if (a == F(0)) continue;
        if (!out.empty()) out += " + ";
        std::string cs = coeff_str(a);
        if (i == 0) {
            out += cs;
        } else {
            std::string pw = (i == 1) ? var : var + "^" + std::to_string(i);
            out += (a == F(1)) ? pw : cs + "*" + pw;
        }
    }
    return out;
}

using RatPoly = Poly<Rational>;

} // namespace orbicheck
