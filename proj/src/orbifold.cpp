#include "orbicheck/orbifold.hpp"

#include "orbicheck/errors.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <utility>

namespace orbicheck {

namespace {

// ---------------------------------------------------------------------------
// shape helpers

/** gamma * (t, p(t)) = (A(t), B(t)) in coordinates. */
struct GraphAction {
    CycPoly A, B;
};

GraphAction graph_action(const CycMatrix& g, const RatPoly& p) {
    CycPoly X = CycPoly::x();
    CycPoly P = to_cyc_poly(p);
    return {X * g.at(0, 0) + P * g.at(0, 1), X * g.at(1, 0) + P * g.at(1, 1)};
}

/** Vanishes at exactly the parameters t where gamma * (t, p(t)) lands back on the curve. */
CycPoly graph_mismatch(const GraphAction& ga, const RatPoly& p) {
    return ga.B - to_cyc_poly(p).compose(ga.A);
}

std::string cyc_poly_str(const CycPoly& f) {
    return poly_str<CycNum>(f, [](const CycNum& c) { return "(" + c.str() + ")"; });
}

void validate_shape(const Chart& chart, const Shape& shape) {
    if (const auto* sp = std::get_if<Subspace>(&shape)) {
        if (sp->ambient_dim() != chart.dim)
            throw ValidationError("shape lives in dimension " + std::to_string(sp->ambient_dim()) +
                                  " but chart '" + chart.name + "' has dimension " +
                                  std::to_string(chart.dim));
        return;
    }
    const auto& g = std::get<GraphShape>(shape);
    if (chart.dim != 2)
        throw ValidationError("graph shapes require a 2-dimensional chart, got dimension " +
                              std::to_string(chart.dim));
    if (!(g.p.eval(Rational(0)) == Rational(0)))
        throw ValidationError("graph shapes must pass through the origin (p(0) = 0), got p = " +
                              poly_str<Rational>(g.p, [](const Rational& q) { return rat_str(q); }));
}

/** Whether the element maps the shape onto itself. */
bool preserves_shape(const Chart& chart, const Shape& shape, int idx) {
    const CycMatrix& m = chart.group.matrix(idx);
    if (const auto* sp = std::get_if<Subspace>(&shape)) return apply(m, *sp) == *sp;
    const RatPoly& p = std::get<GraphShape>(shape).p;
    return graph_mismatch(graph_action(m, p), p).is_zero();
}

/** Whether the element fixes every point of the shape. */
bool fixes_shape_pointwise(const Chart& chart, const Shape& shape, int idx) {
    const CycMatrix& m = chart.group.matrix(idx);
    if (const auto* sp = std::get_if<Subspace>(&shape)) {
        for (const CycVector& b : sp->basis())
            if (!(m * b == b)) return false;
        return true;
    }
    const RatPoly& p = std::get<GraphShape>(shape).p;
    GraphAction ga = graph_action(m, p);
    return ga.A == CycPoly::x() && ga.B == to_cyc_poly(p);
}

bool shape_contains_point(const Shape& shape, const CycVector& v) {
    if (const auto* sp = std::get_if<Subspace>(&shape)) return sp->contains(v);
    const RatPoly& p = std::get<GraphShape>(shape).p;
    return v.size() == 2 && to_cyc_poly(p).eval(v[0]) == v[1];
}

CycVector curve_point(const RatPoly& p, const CycNum& t) { return {t, to_cyc_poly(p).eval(t)}; }

// ---------------------------------------------------------------------------
// exact rational root finding (for crossing parameters of graph shapes)

std::vector<Integer> positive_divisors(const Integer& n, long cap) {
    Integer a = boost::multiprecision::abs(n);
    std::vector<Integer> small, large;
    long iters = 0;
    for (Integer d = 1; d * d <= a; ++d) {
        if (++iters > cap) throw CapExceeded("divisor enumeration exceeded its cap");
        if (a % d == 0) {
            small.push_back(d);
            if (d * d != a) large.push_back(a / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/** All rational roots of a nonzero rational polynomial, ascending. */
std::vector<Rational> rational_roots(const RatPoly& p, long cap) {
    if (p.is_zero()) throw std::domain_error("rational roots of the zero polynomial");
    std::vector<Rational> roots;
    if (p.degree() == 0) return roots;
    Integer den_lcm = 1;
    for (const Rational& c : p.coeffs()) den_lcm = boost::multiprecision::lcm(den_lcm, rat_den(c));
    std::vector<Integer> ic;
    ic.reserve(p.coeffs().size());
    for (const Rational& c : p.coeffs()) ic.push_back(rat_num(c) * (den_lcm / rat_den(c)));
    size_t low = 0;
    while (ic[low] == 0) ++low;
    if (low > 0) roots.push_back(Rational(0));
    if (ic.size() - low >= 2) {
        std::vector<Integer> d0 = positive_divisors(ic[low], cap);
        std::vector<Integer> dl = positive_divisors(ic.back(), cap);
        if (long(d0.size()) > cap / 2 / std::max<long>(1, long(dl.size())))
            throw CapExceeded("rational root candidate count exceeded its cap");
        for (const Integer& a : d0)
            for (const Integer& b : dl)
                for (int sgn : {1, -1}) {
                    Rational cand(sgn > 0 ? a : Integer(-a), b);
                    if (p.eval(cand) == Rational(0)) roots.push_back(cand);
                }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

/** Coefficient vector of f split into rational coordinate polynomials. */
std::vector<RatPoly> coordinate_polys(const CycPoly& f) {
    long m = 1;
    for (const CycNum& c : f.coeffs()) m = lcm_order(m, c.order());
    size_t phi = size_t(euler_phi(m));
    std::vector<std::vector<Rational>> coord(phi, std::vector<Rational>(f.coeffs().size(), Rational(0)));
    for (size_t i = 0; i < f.coeffs().size(); ++i) {
        CycNum lifted = f.coeffs()[i].lifted(m);
        for (size_t j = 0; j < phi; ++j) coord[j][i] = lifted.coeffs()[j];
    }
    std::vector<RatPoly> out;
    out.reserve(phi);
    for (auto& v : coord) out.emplace_back(std::move(v));
    return out;
}

/** Rational roots of a nonzero polynomial with cyclotomic coefficients. */
std::vector<Rational> rational_roots_cyc(const CycPoly& f, long cap = 1000000) {
    if (f.is_zero()) throw std::domain_error("rational roots of the zero polynomial");
    std::optional<RatPoly> g;
    for (const RatPoly& cp : coordinate_polys(f)) {
        if (cp.is_zero()) continue;
        g = g ? poly_gcd(*g, cp) : cp;
    }
    if (!g) throw InternalCheckError("nonzero polynomial with all-zero coordinates");
    return rational_roots(*g, cap);
}

} // namespace

// ---------------------------------------------------------------------------
// charts and subcharts

Chart make_chart(std::string name, int dim, MatrixGroup group) {
    if (dim < 1) throw ValidationError("chart dimension must be at least 1");
    if (group.dim() != dim)
        throw ValidationError("chart '" + name + "' has dimension " + std::to_string(dim) +
                              " but its group acts on dimension " + std::to_string(group.dim()));
    return Chart{std::move(name), dim, std::move(group)};
}

int shape_ambient_dim(const Shape& s) {
    if (const auto* sp = std::get_if<Subspace>(&s)) return sp->ambient_dim();
    return 2;
}

std::string shape_str(const Shape& s) {
    if (const auto* sp = std::get_if<Subspace>(&s)) return sp->str();
    const RatPoly& p = std::get<GraphShape>(s).p;
    return "graph{y = " + poly_str<Rational>(p, [](const Rational& q) { return rat_str(q); }) + "}";
}

Subgroup setwise_stabilizer(const Chart& chart, const Shape& shape) {
    validate_shape(chart, shape);
    Subgroup out;
    for (int i = 0; i < chart.group.order(); ++i)
        if (preserves_shape(chart, shape, i)) out.elems.push_back(i);
    return out;
}

Subchart make_subchart(std::string name, const Chart& chart, Shape shape, Subgroup lambda) {
    validate_shape(chart, shape);
    for (int e : lambda.elems)
        if (e < 0 || e >= chart.group.order())
            throw ValidationError("lambda index " + std::to_string(e) + " is outside the chart group");
    if (!std::is_sorted(lambda.elems.begin(), lambda.elems.end()) ||
        std::adjacent_find(lambda.elems.begin(), lambda.elems.end()) != lambda.elems.end())
        throw ValidationError("lambda must be a sorted duplicate-free index list");
    Subgroup closed = subgroup_closure(chart.group.table(), lambda.elems);
    if (closed.elems != lambda.elems)
        throw ValidationError("lambda is not closed under products in chart '" + chart.name + "'");
    for (int e : lambda.elems)
        if (!preserves_shape(chart, shape, e))
            throw ValidationError("lambda element " + chart.group.matrix(e).str() +
                                  " does not preserve the shape " + shape_str(shape));
    return Subchart{std::move(name), chart, std::move(shape), std::move(lambda)};
}

Subchart make_subchart_auto(std::string name, const Chart& chart, Shape shape) {
    Subgroup lambda = setwise_stabilizer(chart, shape);
    return make_subchart(std::move(name), chart, std::move(shape), std::move(lambda));
}

// ---------------------------------------------------------------------------
// isotropy

IsotropyData isotropy_data(const Subchart& sub) {
    IsotropyData d;
    d.lambda = sub.lambda;
    d.lambda_table = sub_table(sub.chart.group.table(), sub.lambda);
    for (size_t i = 0; i < sub.lambda.elems.size(); ++i)
        if (fixes_shape_pointwise(sub.chart, sub.shape, sub.lambda.elems[i])) {
            d.omega_pos.elems.push_back(int(i));
            d.omega.elems.push_back(sub.lambda.elems[i]);
        }
    if (!is_normal(d.lambda_table, d.omega_pos))
        throw InternalCheckError("the pointwise fixer is not normal in lambda");
    QuotientResult q = quotient(d.lambda_table, d.omega_pos);
    d.gamma_p = std::move(q.quotient);
    d.projection = std::move(q.projection);
    d.coset_rep = std::move(q.coset_rep);
    if (size_t(d.gamma_p.n) * d.omega.size() != d.lambda.size())
        throw InternalCheckError("coset count disagrees with the subgroup orders");
    for (int c = 1; c < d.gamma_p.n; ++c)
        if (fixes_shape_pointwise(sub.chart, sub.shape,
                                  sub.lambda.elems[size_t(d.coset_rep[size_t(c)])]))
            throw InternalCheckError("the induced action on the shape is not effective");
    d.omega_name = iso_classify(sub_table(d.lambda_table, d.omega_pos));
    d.lambda_name = iso_classify(d.lambda_table);
    d.gamma_p_name = iso_classify(d.gamma_p);
    return d;
}

bool is_full(const Subchart& sub) {
    return sub.lambda.size() == size_t(sub.chart.group.order());
}

// ---------------------------------------------------------------------------
// saturation

namespace {

SaturationResult saturate_linear(const Subchart& sub) {
    const MatrixGroup& G = sub.chart.group;
    const Subspace& V = std::get<Subspace>(sub.shape);
    for (int gi = 0; gi < G.order(); ++gi) {
        if (sub.lambda.contains(gi)) continue;
        const CycMatrix& gm = G.matrix(gi);
        Subspace W = intersect(V, apply(G.matrix(G.inv(gi)), V));
        if (W.dim() == 0) continue; // only the origin, which every element fixes
        bool matched = false;
        for (int li : sub.lambda.elems) {
            const CycMatrix& lm = G.matrix(li);
            bool agree = true;
            for (const CycVector& b : W.basis())
                if (!(gm * b == lm * b)) {
                    agree = false;
                    break;
                }
            if (agree) {
                matched = true;
                break;
            }
        }
        if (matched) continue;
        // Not saturated: find a point of W whose gamma-image no lambda reproduces.
        // Points sum t^i * basis[i]; each lambda rules out at most dim-1 values of t,
        // so the range below always contains a witness.
        long d = W.dim();
        long tmax = long(sub.lambda.size()) * d + 2;
        for (long t = 1; t <= tmax; ++t) {
            CycVector y(size_t(V.ambient_dim()), CycNum(0));
            Rational tp(1);
            for (long i = 0; i < d; ++i) {
                const CycVector& b = W.basis()[size_t(i)];
                for (size_t c = 0; c < y.size(); ++c) y[c] = y[c] + b[c] * CycNum(tp);
                tp *= t;
            }
            CycVector img = gm * y;
            bool covered = false;
            for (int li : sub.lambda.elems)
                if (G.matrix(li) * y == img) {
                    covered = true;
                    break;
                }
            if (!covered) {
                SaturationWitness w;
                w.gamma = gi;
                w.gamma_str = gm.str();
                w.point = y;
                w.detail = "the image " + vec_str(img) +
                           " lies in the shape but equals no lambda-image of the point";
                return {false, w};
            }
        }
        throw InternalCheckError("witness search exhausted its proven bound");
    }
    return {true, std::nullopt};
}

SaturationResult saturate_graph(const Subchart& sub) {
    const MatrixGroup& G = sub.chart.group;
    const RatPoly& p = std::get<GraphShape>(sub.shape).p;
    CycPoly P = to_cyc_poly(p);
    std::vector<GraphAction> lam_act;
    lam_act.reserve(sub.lambda.size());
    for (int li : sub.lambda.elems) lam_act.push_back(graph_action(G.matrix(li), p));
    for (int gi = 0; gi < G.order(); ++gi) {
        if (sub.lambda.contains(gi)) continue;
        const CycMatrix& gm = G.matrix(gi);
        GraphAction ga = graph_action(gm, p);
        CycPoly f = graph_mismatch(ga, p);
        if (f.is_zero()) {
            // gamma maps the whole curve onto itself; saturation needs one lambda
            // acting identically on it.
            bool matched = false;
            for (const GraphAction& la : lam_act)
                if (la.A == ga.A && la.B == ga.B) {
                    matched = true;
                    break;
                }
            if (matched) continue;
            long bound = 3;
            for (const GraphAction& la : lam_act) {
                CycPoly dA = ga.A - la.A, dB = ga.B - la.B;
                const CycPoly& nz = dA.is_zero() ? dB : dA;
                bound += 2 * (std::max<long>(nz.degree(), 0) + 1);
            }
            for (long step = 0; step <= bound; ++step) {
                long t = (step % 2 == 0) ? step / 2 : -(step + 1) / 2;
                CycNum ct{Rational(t)};
                CycNum u = ga.A.eval(ct), w = ga.B.eval(ct);
                bool covered = false;
                for (const GraphAction& la : lam_act)
                    if (la.A.eval(ct) == u && la.B.eval(ct) == w) {
                        covered = true;
                        break;
                    }
                if (!covered) {
                    SaturationWitness wit;
                    wit.gamma = gi;
                    wit.gamma_str = gm.str();
                    wit.point = curve_point(p, ct);
                    wit.graph_param = Rational(t);
                    wit.detail = "gamma maps the whole curve onto itself but agrees with no "
                                 "single lambda on it";
                    return {false, wit};
                }
            }
            throw InternalCheckError("curve witness search exhausted its proven bound");
        }
        // Finitely many crossing parameters: every root of f must be matched by
        // some lambda, i.e. be a common root of (A_gamma - A_lambda, B_gamma - B_lambda).
        CycPoly prod = CycPoly::constant(CycNum(1));
        for (const GraphAction& la : lam_act) {
            CycPoly dA = ga.A - la.A, dB = ga.B - la.B;
            if (dA.is_zero() && dB.is_zero())
                throw InternalCheckError("an element preserving the curve escaped the stabilizer");
            prod = prod * poly_gcd(dA, dB);
        }
        CycPoly sf = squarefree_part(f);
        CycPoly sp = squarefree_part(prod);
        if (poly_divides(sf, sp)) continue;
        CycPoly h = (sf / poly_gcd(sf, sp)).monic();
        SaturationWitness wit;
        wit.gamma = gi;
        wit.gamma_str = gm.str();
        std::vector<Rational> roots = rational_roots_cyc(h);
        if (!roots.empty()) {
            CycNum ct{roots.front()};
            wit.graph_param = roots.front();
            wit.point = curve_point(p, ct);
            wit.detail = "at parameter t = " + rat_str(roots.front()) +
                         " gamma maps the curve point back onto the curve, but no lambda does";
        } else {
            wit.detail = "the uncovered crossing parameters are irrational; they satisfy " +
                         cyc_poly_str(h) + " = 0";
        }
        return {false, wit};
    }
    return {true, std::nullopt};
}

} // namespace

SaturationResult is_saturated(const Subchart& sub) {
    if (std::holds_alternative<Subspace>(sub.shape)) return saturate_linear(sub);
    return saturate_graph(sub);
}

// ---------------------------------------------------------------------------
// splitting

SplitResult is_split(const Subchart&, const IsotropyData& iso) {
    SplitResult r;
    ComplementSearch cs = find_complement(iso.lambda_table, iso.omega_pos);
    r.subgroups_examined = cs.subgroups_examined;
    if (!cs.complement) return r;
    r.split = true;
    r.complement = cs.complement;
    GroupHom sec;
    sec.src_n = iso.gamma_p.n;
    sec.dst_n = iso.lambda_table.n;
    sec.map.assign(size_t(iso.gamma_p.n), -1);
    for (int h : cs.complement->elems) {
        int c = iso.projection.map[size_t(h)];
        if (sec.map[size_t(c)] != -1)
            throw InternalCheckError("complement hits a coset twice");
        sec.map[size_t(c)] = h;
    }
    for (int c = 0; c < iso.gamma_p.n; ++c)
        if (sec.map[size_t(c)] == -1) throw InternalCheckError("complement misses a coset");
    if (!check_hom(iso.gamma_p, iso.lambda_table, sec))
        throw InternalCheckError("section built from a complement is not a homomorphism");
    for (int c = 0; c < iso.gamma_p.n; ++c)
        if (iso.projection.map[size_t(sec.map[size_t(c)])] != c)
            throw InternalCheckError("section does not invert the projection");
    r.section = std::move(sec);
    return r;
}

// ---------------------------------------------------------------------------
// embedding construction

EmbeddingData build_embedding(const Subchart& sub, const IsotropyData& iso,
                              const GroupHom& section) {
    const MatrixGroup& G = sub.chart.group;
    EmbeddingData e;
    e.theta.src_n = iso.gamma_p.n;
    e.theta.dst_n = G.order();
    e.theta.map.reserve(size_t(iso.gamma_p.n));
    for (int c = 0; c < iso.gamma_p.n; ++c)
        e.theta.map.push_back(iso.lambda.elems[size_t(section.map[size_t(c)])]);
    // verify: homomorphism into the parent group
    if (!check_hom(iso.gamma_p, G.table(), e.theta))
        throw InternalCheckError("theta is not a homomorphism into the parent group");
    if (!hom_injective(e.theta)) throw InternalCheckError("theta is not injective");
    // verify: theta(c) acts on the shape exactly as the coset c does
    for (int c = 0; c < iso.gamma_p.n; ++c) {
        const CycMatrix& tm = G.matrix(e.theta.map[size_t(c)]);
        const CycMatrix& rep =
            G.matrix(iso.lambda.elems[size_t(iso.coset_rep[size_t(c)])]);
        if (const auto* sp = std::get_if<Subspace>(&sub.shape)) {
            for (const CycVector& b : sp->basis())
                if (!(tm * b == rep * b))
                    throw InternalCheckError("theta disagrees with its coset on the shape");
        } else {
            const RatPoly& p = std::get<GraphShape>(sub.shape).p;
            GraphAction ta = graph_action(tm, p), ra = graph_action(rep, p);
            if (!(ta.A == ra.A && ta.B == ra.B))
                throw InternalCheckError("theta disagrees with its coset on the curve");
        }
    }
    if (const auto* sp = std::get_if<Subspace>(&sub.shape)) e.lift_basis = sp->basis();
    else e.lift_graph = std::get<GraphShape>(sub.shape).p;
    return e;
}

// ---------------------------------------------------------------------------
// the full verdict

Verdict embeddability(const Subchart& sub) {
    Verdict v;
    v.is_suborbifold = true;
    v.isotropy = isotropy_data(sub);
    v.full = is_full(sub);
    v.saturation = is_saturated(sub);
    v.split = is_split(sub, v.isotropy);
    if (v.full && !v.saturation.saturated)
        throw InternalCheckError("a full subchart must be saturated");
    if ((v.isotropy.omega.size() == 1 || v.isotropy.gamma_p.n == 1) && !v.split.split)
        throw InternalCheckError("a sequence with trivial kernel or quotient must split");
    v.embeddable_topologically = v.saturation.saturated;
    v.embeddable_completely = v.saturation.saturated && v.split.split;
    if (v.embeddable_completely)
        v.embedding = build_embedding(sub, v.isotropy, *v.split.section);
    return v;
}

// ---------------------------------------------------------------------------
// equivariant homomorphisms

std::vector<GroupHom> enumerate_equivariant_homs(const Chart& src, const Chart& dst,
                                                 const CycMatrix& lift, long cap) {
    if (lift.rows() != dst.dim || lift.cols() != src.dim)
        throw ValidationError("lift must map the source chart into the target chart: expected " +
                              std::to_string(dst.dim) + "x" + std::to_string(src.dim) +
                              ", got " + std::to_string(lift.rows()) + "x" +
                              std::to_string(lift.cols()));
    if (rank(lift) != lift.cols()) throw ValidationError("lift must have full column rank");
    const CayleyTable& st = src.group.table();
    std::vector<int> gens = generating_sequence(st);
    // word decomposition: every element as parent * generator, filled breadth-first
    std::vector<int> parent(size_t(st.n), -1), via(size_t(st.n), -1);
    std::vector<int> order;
    order.push_back(st.id);
    std::vector<bool> seen(size_t(st.n), false);
    seen[size_t(st.id)] = true;
    for (size_t head = 0; head < order.size(); ++head) {
        int e = order[head];
        for (size_t k = 0; k < gens.size(); ++k) {
            int f = st.mul(e, gens[k]);
            if (seen[size_t(f)]) continue;
            seen[size_t(f)] = true;
            parent[size_t(f)] = e;
            via[size_t(f)] = int(k);
            order.push_back(f);
        }
    }
    if (order.size() != size_t(st.n))
        throw InternalCheckError("generating sequence does not reach the whole group");
    // candidate images per generator: exactly those matrices intertwined with it
    std::vector<std::vector<int>> cands(gens.size());
    long total = 1;
    for (size_t k = 0; k < gens.size(); ++k) {
        const CycMatrix& gm = src.group.matrix(gens[k]);
        CycMatrix rhs = lift * gm;
        for (int h = 0; h < dst.group.order(); ++h)
            if (dst.group.matrix(h) * lift == rhs) cands[k].push_back(h);
        if (cands[k].empty()) return {};
        if (total > cap / long(cands[k].size()))
            throw CapExceeded("equivariant image tuples exceed the cap");
        total *= long(cands[k].size());
    }
    std::vector<GroupHom> out;
    std::vector<size_t> pick(gens.size(), 0);
    while (true) {
        GroupHom h;
        h.src_n = st.n;
        h.dst_n = dst.group.order();
        h.map.assign(size_t(st.n), -1);
        h.map[size_t(st.id)] = dst.group.identity();
        for (size_t i = 1; i < order.size(); ++i) {
            int e = order[i];
            h.map[size_t(e)] = dst.group.mul(h.map[size_t(parent[size_t(e)])],
                                             cands[size_t(via[size_t(e)])][pick[size_t(via[size_t(e)])]]);
        }
        if (check_hom(st, dst.group.table(), h)) out.push_back(std::move(h));
        size_t k = 0;
        while (k < pick.size() && ++pick[k] == cands[k].size()) pick[k++] = 0;
        if (k == pick.size()) break;
    }
    std::sort(out.begin(), out.end(),
              [](const GroupHom& a, const GroupHom& b) { return a.map < b.map; });
    return out;
}

// ---------------------------------------------------------------------------
// recognition

std::vector<RecognitionCandidate> recognize_suborbifold(
    const Chart& chart, const RecognitionTarget& target,
    const std::optional<std::string>& required_gamma_p) {
    Shape shape(Subspace(chart.dim));
    std::optional<CycVector> ray;
    if (const auto* sp = std::get_if<Subspace>(&target)) {
        shape = *sp;
    } else if (const auto* gp = std::get_if<GraphShape>(&target)) {
        shape = *gp;
    } else {
        const RayTarget& rt = std::get<RayTarget>(target);
        if (int(rt.v.size()) != chart.dim)
            throw ValidationError("ray direction has wrong dimension");
        bool zero = true;
        for (const CycNum& c : rt.v)
            if (!c.is_zero()) zero = false;
        if (zero) throw ValidationError("ray direction must be nonzero");
        shape = Subspace::span(chart.dim, {rt.v});
        ray = rt.v;
    }
    validate_shape(chart, shape);
    Subgroup stab = setwise_stabilizer(chart, shape);
    CayleyTable st = sub_table(chart.group.table(), stab);
    std::vector<RecognitionCandidate> out;
    for (const Subgroup& hp : subgroups(st)) {
        Subgroup lam;
        lam.elems.reserve(hp.elems.size());
        for (int pos : hp.elems) lam.elems.push_back(stab.elems[size_t(pos)]);
        if (ray) {
            // a half-line arises only when some lambda folds the line end-over-end
            CycVector neg;
            neg.reserve(ray->size());
            for (const CycNum& c : *ray) neg.push_back(-c);
            bool folds = false;
            for (int li : lam.elems)
                if (chart.group.matrix(li) * *ray == neg) {
                    folds = true;
                    break;
                }
            if (!folds) continue;
        }
        Subchart cand = make_subchart("candidate", chart, shape, lam);
        Verdict v = embeddability(cand);
        if (!v.saturation.saturated) continue;
        if (required_gamma_p && v.isotropy.gamma_p_name != *required_gamma_p) continue;
        cand.name = chart.name + ":candidate" + std::to_string(out.size() + 1);
        out.push_back(RecognitionCandidate{std::move(cand), std::move(v)});
    }
    return out;
}

// ---------------------------------------------------------------------------
// randomized saturation oracle

OracleReport sampling_oracle(const Subchart& sub, int trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    // raw modular draws keep the stream identical across standard libraries
    auto rand_rational = [&rng]() {
        long num = long(rng() % 19) - 9;
        long den = long(rng() % 9) + 1;
        return Rational(num, den);
    };
    const MatrixGroup& G = sub.chart.group;
    OracleReport rep;
    auto check_point = [&](const CycVector& y) {
        ++rep.points_checked;
        for (int gi = 0; gi < G.order(); ++gi) {
            CycVector img = G.matrix(gi) * y;
            if (!shape_contains_point(sub.shape, img)) continue;
            bool covered = false;
            for (int li : sub.lambda.elems)
                if (G.matrix(li) * y == img) {
                    covered = true;
                    break;
                }
            if (!covered) {
                rep.saturated = false;
                rep.counterexample =
                    OracleCounterexample{gi, G.matrix(gi).str(), vec_str(y)};
                return false;
            }
        }
        return true;
    };
    if (const auto* sp = std::get_if<Subspace>(&sub.shape)) {
        // sample every stratum the shape shares with a translate, not just the
        // shape itself: saturation can fail only on such strata, and a uniform
        // draw from the shape misses proper ones with probability one
        std::vector<Subspace> strata;
        strata.push_back(*sp);
        for (int gi = 0; gi < G.order(); ++gi) {
            if (sub.lambda.contains(gi)) continue;
            Subspace w = intersect(*sp, apply(G.matrix(G.inv(gi)), *sp));
            if (w.dim() == 0) continue;
            bool dup = false;
            for (const Subspace& s : strata)
                if (s == w) {
                    dup = true;
                    break;
                }
            if (!dup) strata.push_back(w);
        }
        for (int t = 0; t < trials; ++t) {
            const Subspace& s = strata[size_t(t) % strata.size()];
            CycVector y(size_t(sp->ambient_dim()), CycNum(0));
            for (const CycVector& b : s.basis()) {
                CycNum c{rand_rational()};
                for (size_t i = 0; i < y.size(); ++i) y[i] = y[i] + b[i] * c;
            }
            if (!check_point(y)) return rep;
        }
        return rep;
    }
    const RatPoly& p = std::get<GraphShape>(sub.shape).p;
    // deterministic pre-pass over every rational crossing parameter, plus the
    // roots of any cyclotomic-polynomial divisor of a mismatch polynomial
    // (saturation of a curve can fail at irrational parameters, which random
    // rational draws never hit)
    std::set<Rational> specials{Rational(0)};
    std::vector<CycNum> root_of_unity_specials;
    for (int gi = 0; gi < G.order(); ++gi) {
        CycPoly f = graph_mismatch(graph_action(G.matrix(gi), p), p);
        if (f.is_zero()) continue;
        for (const Rational& r : rational_roots_cyc(f)) specials.insert(r);
        for (long d = 3; d <= 24; ++d) {
            if (euler_phi(d) > f.degree()) continue;
            if ((f % to_cyc_poly(cyclotomic_poly(d))).is_zero())
                root_of_unity_specials.push_back(CycNum::zeta(d));
        }
    }
    for (const Rational& t : specials)
        if (!check_point(curve_point(p, CycNum(t)))) return rep;
    for (const CycNum& t : root_of_unity_specials)
        if (!check_point(curve_point(p, t))) return rep;
    for (int t = 0; t < trials; ++t)
        if (!check_point(curve_point(p, CycNum(rand_rational())))) return rep;
    return rep;
}

} // namespace orbicheck
