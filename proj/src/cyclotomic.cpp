#include "orbicheck/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace orbicheck {

long euler_phi(long n) {
    if (n <= 0) throw std::domain_error("euler_phi needs a positive argument");
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

long lcm_order(long a, long b) {
    long g = a, h = b;
    while (h) { long t = g % h; g = h; h = t; }
    return a / g * b;
}

const RatPoly& cyclotomic_poly(long n) {
    static std::map<long, RatPoly> memo;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    if (n <= 0) throw std::domain_error("cyclotomic_poly needs a positive order");

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed bottom-up.
    RatPoly result;
    {
        std::vector<Rational> xn(static_cast<size_t>(n) + 1, Rational(0));
        xn[0] = Rational(-1);
        xn[static_cast<size_t>(n)] = Rational(1);
        result = RatPoly(std::move(xn));
        for (long d = 1; d < n; ++d) {
            if (n % d != 0) continue;
            // recursion depth is tiny; compute divisors first to keep the lock
            auto sub = memo.find(d);
            if (sub == memo.end()) {
                // build Phi_d inline with the same bottom-up rule
                std::vector<Rational> xd(static_cast<size_t>(d) + 1, Rational(0));
                xd[0] = Rational(-1);
                xd[static_cast<size_t>(d)] = Rational(1);
                RatPoly phid(std::move(xd));
                for (long e = 1; e < d; ++e) {
                    if (d % e != 0) continue;
                    phid = phid / memo.at(e); // divisors of d < d are already present
                }
                sub = memo.emplace(d, phid).first;
            }
            result = result / sub->second;
        }
    }
    auto ins = memo.emplace(n, std::move(result));
    return ins.first->second;
}

namespace {

// residue of p modulo Phi_n, padded to exactly phi(n) coefficients
std::vector<Rational> reduce_mod_phi(long n, const RatPoly& p) {
    RatPoly r = p % cyclotomic_poly(n);
    std::vector<Rational> c = r.coeffs();
    c.resize(static_cast<size_t>(euler_phi(n)), Rational(0));
    return c;
}

} // namespace

CycNum::CycNum(const Rational& q) : order_(1), c_{q} {}

CycNum CycNum::zeta(long n) {
    if (n <= 0) throw std::domain_error("zeta needs a positive order");
    return from_coeffs(n, {Rational(0), Rational(1)});
}

CycNum CycNum::from_coeffs(long order, std::vector<Rational> coeffs) {
    if (order <= 0) throw std::domain_error("cyclotomic order must be positive");
    return CycNum(order, reduce_mod_phi(order, RatPoly(std::move(coeffs))));
}

bool CycNum::is_zero() const {
    for (const auto& q : c_)
        if (q != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational CycNum::rational_value() const {
    if (!is_rational()) throw std::domain_error("not a rational value: " + str());
    return c_.empty() ? Rational(0) : c_[0];
}

CycNum CycNum::lifted(long m) const {
    if (m % order_ != 0)
        throw std::domain_error("cannot lift order " + std::to_string(order_) +
                                " into order " + std::to_string(m));
    if (m == order_) return *this;
    // zeta_N -> zeta_M^(M/N): substitute x -> x^(M/N) into the residue
    long step = m / order_;
    std::vector<Rational> big(c_.size() ? (c_.size() - 1) * static_cast<size_t>(step) + 1 : 0,
                              Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) big[i * static_cast<size_t>(step)] = c_[i];
    return CycNum(m, reduce_mod_phi(m, RatPoly(std::move(big))));
}

CycNum CycNum::operator+(const CycNum& o) const {
    long m = lcm_order(order_, o.order_);
    CycNum a = lifted(m), b = o.lifted(m);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

CycNum CycNum::operator-() const {
    CycNum a = *this;
    for (auto& q : a.c_) q = -q;
    return a;
}

CycNum CycNum::operator-(const CycNum& o) const { return *this + (-o); }

CycNum CycNum::operator*(const CycNum& o) const {
    long m = lcm_order(order_, o.order_);
    CycNum a = lifted(m), b = o.lifted(m);
    RatPoly prod = RatPoly(a.c_) * RatPoly(b.c_);
    return CycNum(m, reduce_mod_phi(m, prod));
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(zeta)");
    // extended Euclid against Phi (irreducible over Q, so the gcd is a constant)
    const RatPoly& phi = cyclotomic_poly(order_);
    RatPoly r0 = phi, r1 = RatPoly(c_);
    RatPoly s0, s1 = RatPoly::constant(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divmod(r1);
        RatPoly s2 = s0 - q * s1;
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
    }
    // r0 = u*orig + v*phi is a nonzero constant; inverse = s0 / r0
    Rational c = r0.coeff(0);
    RatPoly inv = s0 * RatPoly::constant(Rational(1) / c);
    return CycNum(order_, reduce_mod_phi(order_, inv));
}

CycNum CycNum::operator/(const CycNum& o) const {
    long m = lcm_order(order_, o.order_);
    return lifted(m) * o.lifted(m).inverse();
}

CycNum CycNum::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    CycNum base = *this, acc = CycNum(1);
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool CycNum::operator==(const CycNum& o) const {
    long m = lcm_order(order_, o.order_);
    return lifted(m).c_ == o.lifted(m).c_;
}

int CycNum::cmp_same_order(const CycNum& a, const CycNum& b) {
    if (a.order_ != b.order_)
        throw std::domain_error("cmp_same_order on mixed orders");
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] < b.c_[i]) return -1;
        if (a.c_[i] > b.c_[i]) return 1;
    }
    return 0;
}

std::string CycNum::key() const {
    std::string out = "o" + std::to_string(order_) + ":";
    for (const auto& q : c_) {
        out += rat_str(q);
        out += ',';
    }
    return out;
}

std::string CycNum::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
        const Rational& q = c_[i];
        if (q == 0) continue;
        bool neg = q < 0;
        Rational mag = neg ? Rational(-q) : q;
        std::string term;
        if (i == 0) {
            term = rat_str(mag);
        } else {
            std::string z = "zeta(" + std::to_string(order_) + ")";
            if (i > 1) z += "^" + std::to_string(i);
            term = (mag == 1) ? z : rat_str(mag) + "*" + z;
        }
        if (out.empty())
            out = neg ? "-" + term : term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    return out;
}

} // namespace orbicheck
