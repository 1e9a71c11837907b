// Exact arithmetic: cyclotomic numbers, linear algebra, polynomials, parsing.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbicheck/cyclotomic.hpp"
#include "orbicheck/errors.hpp"
#include "orbicheck/linalg.hpp"
#include "orbicheck/scalar_expr.hpp"

#include <random>
#include <vector>

using namespace orbicheck;

namespace {

Rational rand_rat(std::mt19937_64& rng) {
    long num = long(rng() % 19) - 9;
    long den = long(rng() % 9) + 1;
    return Rational(num, den);
}

CycNum rand_cyc(std::mt19937_64& rng) {
    static const long orders[] = {1, 3, 4, 8, 12};
    long n = orders[rng() % 5];
    std::vector<Rational> c(size_t(euler_phi(n)));
    for (auto& q : c) q = rand_rat(rng);
    return CycNum::from_coeffs(n, std::move(c));
}

CycMatrix rotation(long k) {
    CycNum z = CycNum::zeta(k);
    CycNum c = (z + z.inverse()) * CycNum(Rational(1, 2));
    CycNum s = (z - z.inverse()) / (CycNum(2) * CycNum::zeta(4));
    CycMatrix m(2, 2);
    m.at(0, 0) = c;
    m.at(0, 1) = -s;
    m.at(1, 0) = s;
    m.at(1, 1) = c;
    return m;
}

} // namespace

TEST_CASE("euler phi and cyclotomic polynomials") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(2) == 1);
    CHECK(euler_phi(8) == 4);
    CHECK(euler_phi(9) == 6);
    CHECK(euler_phi(12) == 4);
    CHECK(lcm_order(4, 6) == 12);
    for (long n = 1; n <= 16; ++n) {
        CHECK(cyclotomic_poly(n).degree() == euler_phi(n));
        CHECK(cyclotomic_poly(n).lead() == Rational(1));
    }
    // the product of Phi_d over divisors d of n is t^n - 1
    for (long n = 1; n <= 12; ++n) {
        RatPoly prod = RatPoly::constant(Rational(1));
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) prod = prod * cyclotomic_poly(d);
        std::vector<Rational> c(size_t(n) + 1, Rational(0));
        c[0] = Rational(-1);
        c[size_t(n)] = Rational(1);
        CHECK(prod == RatPoly(c));
    }
}

TEST_CASE("roots of unity behave like roots of unity") {
    CHECK(CycNum::zeta(1) == CycNum(1));
    CHECK(CycNum::zeta(2) == CycNum(-1));
    CHECK(CycNum::zeta(4) * CycNum::zeta(4) == CycNum(-1));
    CHECK(CycNum::zeta(8).pow(4) == CycNum(-1));
    CHECK(CycNum::zeta(8).pow(8) == CycNum(1));
    CHECK(CycNum::zeta(3).pow(3) == CycNum(1));
    // zeta_8 + zeta_8^-1 = sqrt(2)
    CycNum r = CycNum::zeta(8) + CycNum::zeta(8).inverse();
    CHECK(r * r == CycNum(2));
    CHECK_FALSE(r.is_rational());
    // zeta_12^2 is a primitive 6th root: same value after lifting orders
    CHECK(CycNum::zeta(12).pow(2) == CycNum::zeta(6));
    // 1 + zeta_3 + zeta_3^2 = 0
    CycNum z3 = CycNum::zeta(3);
    CHECK(CycNum(1) + z3 + z3 * z3 == CycNum(0));
}

TEST_CASE("mixed-order arithmetic lands in the lcm field") {
    CycNum a = CycNum::zeta(4), b = CycNum::zeta(3);
    CycNum s = a + b;
    CHECK(s.order() == 12);
    CHECK(s - b == a.lifted(12));
    CHECK((a * b).pow(12) == CycNum(1));
}

TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
        CycNum a = rand_cyc(rng), b = rand_cyc(rng), c = rand_cyc(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == CycNum(0));
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == CycNum(1));
            CHECK(a / a == CycNum(1));
        }
    }
}

TEST_CASE("rational detection survives lifting") {
    CycNum half(Rational(1, 2));
    CHECK(half.is_rational());
    CHECK(half.lifted(8).is_rational());
    CHECK(half.lifted(8).rational_value() == Rational(1, 2));
    CHECK_FALSE(CycNum::zeta(8).is_rational());
}

TEST_CASE("scalar grammar round-trips") {
    CHECK(parse_scalar("3") == CycNum(3));
    CHECK(parse_scalar("-7/2") == CycNum(Rational(-7, 2)));
    CHECK(parse_scalar("zeta(8)^-1") == CycNum::zeta(8).inverse());
    CHECK(parse_scalar("(zeta(8)+zeta(8)^-1)/2") * parse_scalar("(zeta(8)+zeta(8)^-1)/2") ==
          CycNum(Rational(1, 2)));
    CHECK(parse_scalar("2*zeta(4) - 1") == CycNum(2) * CycNum::zeta(4) - CycNum(1));
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        CycNum a = rand_cyc(rng);
        CHECK(parse_scalar(a.str()) == a);
    }
    CHECK_THROWS_AS(parse_scalar("zeta(0)"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1 +"), ParseError);
    CHECK_THROWS_AS(parse_scalar("(1"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
}

TEST_CASE("rotation matrices are exact") {
    for (long k = 1; k <= 12; ++k) {
        CycMatrix r = rotation(k);
        CHECK(r.det() == CycNum(1));
        CycMatrix acc = CycMatrix::identity(2);
        for (long i = 0; i < k; ++i) acc = acc * r;
        CHECK(acc.is_identity());
    }
    // the quarter turn is rational
    CycMatrix q = rotation(4);
    CHECK(q.at(0, 0) == CycNum(0));
    CHECK(q.at(0, 1) == CycNum(-1));
    CHECK(q.at(1, 0) == CycNum(1));
    CHECK(q.at(1, 1) == CycNum(0));
    // half of an eighth turn squared is a quarter turn, on the nose
    CHECK(rotation(8) * rotation(8) == rotation(4));
}

TEST_CASE("matrix inverse and determinant") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        CycMatrix m(3, 3);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) m.at(r, c) = CycNum(rand_rat(rng));
        auto inv = m.inverse();
        if (m.det().is_zero()) {
            CHECK_FALSE(inv.has_value());
        } else {
            REQUIRE(inv.has_value());
            CHECK((m * *inv).is_identity());
            CHECK((*inv * m).is_identity());
        }
    }
}

TEST_CASE("subspaces are canonical") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        // a subspace is the same object no matter how its span is presented
        std::vector<CycVector> basis;
        for (int i = 0; i < 2; ++i) {
            CycVector v(4);
            for (auto& x : v) x = CycNum(rand_rat(rng));
            basis.push_back(v);
        }
        Subspace s = Subspace::span(4, basis);
        std::vector<CycVector> mangled;
        // swapped order and a random linear combination appended
        mangled.push_back(basis[1]);
        mangled.push_back(basis[0]);
        CycVector combo(4);
        Rational a = rand_rat(rng), b = rand_rat(rng);
        for (int i = 0; i < 4; ++i)
            combo[size_t(i)] = basis[0][size_t(i)] * CycNum(a) + basis[1][size_t(i)] * CycNum(b);
        mangled.push_back(combo);
        CHECK(Subspace::span(4, mangled) == s);
        CHECK(s.contains(combo));
    }
}

TEST_CASE("rank, kernel, solve agree") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        CycMatrix m(3, 4);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 4; ++c) m.at(r, c) = CycNum(long(rng() % 5) - 2);
        Subspace k = kernel(m);
        CHECK(rank(m) + k.dim() == 4);
        for (const CycVector& b : k.basis()) {
            CycVector img = m * b;
            for (const CycNum& x : img) CHECK(x.is_zero());
        }
        // a consistent system solves and the solution checks out
        CycVector u(4);
        for (auto& x : u) x = CycNum(rand_rat(rng));
        CycVector v = m * u;
        auto sol = solve(m, v);
        REQUIRE(sol.has_value());
        CHECK(m * *sol == v);
    }
}

TEST_CASE("intersection of subspaces") {
    // two planes in Q^3 meeting in a line
    CycVector e1{CycNum(1), CycNum(0), CycNum(0)};
    CycVector e2{CycNum(0), CycNum(1), CycNum(0)};
    CycVector e3{CycNum(0), CycNum(0), CycNum(1)};
    Subspace xy = Subspace::span(3, {e1, e2});
    Subspace yz = Subspace::span(3, {e2, e3});
    Subspace line = intersect(xy, yz);
    CHECK(line.dim() == 1);
    CHECK(line.contains(e2));
    CHECK_FALSE(line.contains(e1));
    CHECK(intersect(xy, xy) == xy);
    CHECK(intersect(xy, Subspace::whole(3)) == xy);
}

TEST_CASE("polynomial gcd and squarefree part") {
    // (t-1)(t+2) and (t-1)(t+3) share exactly (t-1)
    RatPoly t = RatPoly::x();
    RatPoly one = RatPoly::constant(Rational(1));
    auto lin = [&](long a) { return t + RatPoly::constant(Rational(a)); };
    CHECK(poly_gcd(lin(-1) * lin(2), lin(-1) * lin(3)) == lin(-1));
    CHECK(poly_gcd(lin(1) * lin(1), lin(2)) == one);
    CHECK(squarefree_part(lin(-1) * lin(-1) * lin(2)) == lin(-1) * lin(2));
    CHECK(squarefree_part(t * t * t) == t);
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Rational> ac(size_t(1 + rng() % 5)), bc(size_t(1 + rng() % 5));
        for (auto& q : ac) q = rand_rat(rng);
        for (auto& q : bc) q = rand_rat(rng);
        RatPoly a(ac), b(bc);
        if (b.is_zero()) continue;
        auto [q, r] = a.divmod(b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
        if (!a.is_zero()) {
            RatPoly g = poly_gcd(a, b);
            CHECK(poly_divides(g, a));
            CHECK(poly_divides(g, b));
        }
    }
}

TEST_CASE("polynomial composition matches evaluation") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rational> pc(size_t(1 + rng() % 4)), qc(size_t(1 + rng() % 4));
        for (auto& x : pc) x = rand_rat(rng);
        for (auto& x : qc) x = rand_rat(rng);
        RatPoly p(pc), q(qc);
        Rational at = rand_rat(rng);
        CHECK(p.compose(q).eval(at) == p.eval(q.eval(at)));
    }
}

TEST_CASE("derivatives follow the product rule") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rational> pc(size_t(1 + rng() % 4)), qc(size_t(1 + rng() % 4));
        for (auto& x : pc) x = rand_rat(rng);
        for (auto& x : qc) x = rand_rat(rng);
        RatPoly p(pc), q(qc);
        CHECK((p * q).derivative() == p.derivative() * q + p * q.derivative());
    }
}
