#include "orbicheck/groups.hpp"

#include "orbicheck/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace orbicheck {

int CayleyTable::order_of(int a) const {
    int x = a, k = 1;
    while (x != id) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

bool Subgroup::contains(int e) const {
    return std::binary_search(elems.begin(), elems.end(), e);
}

AbstractGroup make_abstract(int n, std::vector<int> table) {
    if (n <= 0 || int(table.size()) != n * n)
        throw ValidationError("abstract group table has wrong size");
    AbstractGroup g;
    g.n = n;
    g.id = 0;
    g.t = std::move(table);
    for (int v : g.t)
        if (v < 0 || v >= n) throw ValidationError("abstract group table entry out of range");
    for (int a = 0; a < n; ++a)
        if (g.mul(0, a) != a || g.mul(a, 0) != a)
            throw ValidationError("index 0 is not an identity");
    g.inv.assign(size_t(n), -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (g.mul(a, b) == 0 && g.mul(b, a) == 0) { g.inv[size_t(a)] = b; break; }
        if (g.inv[size_t(a)] < 0) throw ValidationError("element without an inverse");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    throw ValidationError("multiplication table is not associative");
    return g;
}

bool check_hom(const CayleyTable& src, const CayleyTable& dst, const GroupHom& h) {
    if (h.src_n != src.n || h.dst_n != dst.n || int(h.map.size()) != src.n) return false;
    for (int v : h.map)
        if (v < 0 || v >= dst.n) return false;
    if (h.map[size_t(src.id)] != dst.id) return false;
    for (int a = 0; a < src.n; ++a)
        for (int b = 0; b < src.n; ++b)
            if (h.map[size_t(src.mul(a, b))] != dst.mul(h.map[size_t(a)], h.map[size_t(b)]))
                return false;
    return true;
}

bool hom_injective(const GroupHom& h) {
    std::set<int> seen(h.map.begin(), h.map.end());
    return int(seen.size()) == h.src_n;
}

Subgroup subgroup_closure(const CayleyTable& g, const std::vector<int>& seed) {
    std::set<int> have{g.id};
    std::vector<int> frontier{g.id};
    for (int s : seed)
        if (have.insert(s).second) frontier.push_back(s);
    // products of members eventually contain all inverses in a finite group
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(have.begin(), have.end());
        for (int a : cur)
            for (int b : cur) {
                int p = g.mul(a, b);
                if (have.insert(p).second) grew = true;
            }
    }
    Subgroup h;
    h.elems.assign(have.begin(), have.end());
    return h;
}

std::vector<Subgroup> subgroups(const CayleyTable& g, int cap) {
    if (g.n > cap)
        throw CapExceeded("subgroup enumeration needs group order <= " + std::to_string(cap) +
                          ", got " + std::to_string(g.n));
    // grow every known subgroup by one extra generator until no new ones appear
    std::set<std::vector<int>> seen;
    std::vector<Subgroup> found;
    Subgroup triv;
    triv.elems = {g.id};
    seen.insert(triv.elems);
    found.push_back(triv);
    std::vector<Subgroup> frontier{triv};
    while (!frontier.empty()) {
        std::vector<Subgroup> next;
        for (const auto& h : frontier) {
            for (int e = 0; e < g.n; ++e) {
                if (h.contains(e)) continue;
                std::vector<int> seed = h.elems;
                seed.push_back(e);
                Subgroup k = subgroup_closure(g, seed);
                if (seen.insert(k.elems).second) {
                    found.push_back(k);
                    next.push_back(k);
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size();
        return a.elems < b.elems;
    });
    return found;
}

std::optional<std::pair<int, int>> normality_witness(const CayleyTable& g, const Subgroup& h) {
    for (int a = 0; a < g.n; ++a)
        for (int e : h.elems) {
            int conj = g.mul(g.mul(a, e), g.inv[size_t(a)]);
            if (!h.contains(conj)) return std::make_pair(a, e);
        }
    return std::nullopt;
}

QuotientResult quotient(const CayleyTable& g, const Subgroup& n) {
    for (int e : n.elems)
        if (e < 0 || e >= g.n) throw ValidationError("subgroup element out of range");
    if (auto w = normality_witness(g, n))
        throw ValidationError("subgroup is not normal: conjugating element " +
                              std::to_string(w->second) + " by " + std::to_string(w->first) +
                              " leaves the subgroup");
    // left cosets; since N is normal these partition G compatibly
    std::map<std::vector<int>, std::vector<int>> cosets; // sorted member list -> members
    for (int a = 0; a < g.n; ++a) {
        std::vector<int> c;
        for (int e : n.elems) c.push_back(g.mul(a, e));
        std::sort(c.begin(), c.end());
        cosets[c].push_back(a);
    }
    // identity coset first, then ascending by smallest member
    std::vector<std::vector<int>> ordered;
    for (auto& [members, _] : cosets) ordered.push_back(members);
    std::sort(ordered.begin(), ordered.end(),
              [&](const std::vector<int>& a, const std::vector<int>& b) {
                  bool ia = std::binary_search(a.begin(), a.end(), g.id);
                  bool ib = std::binary_search(b.begin(), b.end(), g.id);
                  if (ia != ib) return ia;
                  return a.front() < b.front();
              });
    int q = int(ordered.size());
    std::vector<int> coset_of(size_t(g.n), -1);
    for (int ci = 0; ci < q; ++ci)
        for (int e : ordered[size_t(ci)]) coset_of[size_t(e)] = ci;
    std::vector<int> table(size_t(q) * q);
    for (int ci = 0; ci < q; ++ci)
        for (int cj = 0; cj < q; ++cj) {
            int prod = g.mul(ordered[size_t(ci)].front(), ordered[size_t(cj)].front());
            table[size_t(ci) * q + cj] = coset_of[size_t(prod)];
        }
    QuotientResult r;
    r.quotient = make_abstract(q, std::move(table));
    r.projection = GroupHom{g.n, q, coset_of};
    for (const auto& members : ordered) r.coset_rep.push_back(members.front());
    if (!check_hom(g, r.quotient, r.projection))
        throw InternalCheckError("quotient projection failed the homomorphism check");
    return r;
}

ComplementSearch find_complement(const CayleyTable& g, const Subgroup& n) {
    if (auto w = normality_witness(g, n))
        throw ValidationError("complement search needs a normal subgroup; witness: conjugate " +
                              std::to_string(w->second) + " by " + std::to_string(w->first));
    ComplementSearch out;
    size_t target = size_t(g.n) / n.size();
    for (const auto& h : subgroups(g)) {
        ++out.subgroups_examined;
        if (h.size() != target) continue;
        bool trivial_meet = true;
        for (int e : h.elems)
            if (e != g.id && n.contains(e)) { trivial_meet = false; break; }
        if (!trivial_meet) continue;
        // |H| * |N| = |G| with trivial intersection forces H N = G
        out.complement = h;
        return out;
    }
    return out;
}

std::vector<GroupHom> find_sections(const CayleyTable& g, const Subgroup& n,
                                    const AbstractGroup& q, const GroupHom& proj,
                                    long cap) {
    if (!check_hom(g, q, proj))
        throw ValidationError("find_sections needs a valid projection homomorphism");
    // fibers over each quotient element
    std::vector<std::vector<int>> fiber(size_t(q.n));
    for (int e = 0; e < g.n; ++e) fiber[size_t(proj.map[size_t(e)])].push_back(e);
    for (const auto& f : fiber)
        if (f.size() != n.size())
            throw ValidationError("projection fibers do not match the kernel size");
    if (fiber[size_t(q.id)] != n.elems)
        throw ValidationError("projection kernel differs from the given subgroup");
    // candidate maps: identity forced, every other value picked from its fiber
    double candidates = 1;
    for (int c = 0; c < q.n; ++c)
        if (c != q.id) candidates *= double(fiber[size_t(c)].size());
    if (candidates > double(cap))
        throw CapExceeded("section search would enumerate " + std::to_string(candidates) +
                          " candidates (cap " + std::to_string(cap) + ")");
    std::vector<GroupHom> sections;
    std::vector<int> choice(size_t(q.n), 0);
    std::vector<int> sigma(size_t(q.n), g.id);
    for (;;) {
        for (int c = 0; c < q.n; ++c)
            sigma[size_t(c)] = (c == q.id) ? g.id : fiber[size_t(c)][size_t(choice[size_t(c)])];
        bool hom = true;
        for (int a = 0; a < q.n && hom; ++a)
            for (int b = 0; b < q.n && hom; ++b)
                if (sigma[size_t(q.mul(a, b))] != g.mul(sigma[size_t(a)], sigma[size_t(b)]))
                    hom = false;
        if (hom) {
            GroupHom s{q.n, g.n, sigma};
            if (!hom_injective(s))
                throw InternalCheckError("section of a surjection must be injective");
            sections.push_back(std::move(s));
        }
        // next mixed-radix choice
        int c = 0;
        for (; c < q.n; ++c) {
            if (c == q.id) continue;
            if (++choice[size_t(c)] < int(fiber[size_t(c)].size())) break;
            choice[size_t(c)] = 0;
        }
        if (c == q.n) break;
    }
    return sections;
}

CayleyTable sub_table(const CayleyTable& g, const Subgroup& h) {
    std::map<int, int> pos;
    for (size_t i = 0; i < h.elems.size(); ++i) pos[h.elems[i]] = int(i);
    int m = int(h.size());
    CayleyTable t;
    t.n = m;
    t.t.assign(size_t(m) * m, -1);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int p = g.mul(h.elems[size_t(i)], h.elems[size_t(j)]);
            auto it = pos.find(p);
            if (it == pos.end()) throw ValidationError("element set is not closed under products");
            t.t[size_t(i) * m + j] = it->second;
        }
    auto idp = pos.find(g.id);
    if (idp == pos.end()) throw ValidationError("subgroup does not contain the identity");
    t.id = idp->second;
    t.inv.assign(size_t(m), -1);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (t.mul(i, j) == t.id && t.mul(j, i) == t.id) { t.inv[size_t(i)] = j; break; }
    return t;
}

std::vector<int> generating_sequence(const CayleyTable& g) {
    std::vector<int> gens;
    Subgroup span = subgroup_closure(g, {});
    while (int(span.size()) < g.n) {
        int pick = -1;
        for (int e = 0; e < g.n; ++e)
            if (!span.contains(e)) { pick = e; break; }
        gens.push_back(pick);
        span = subgroup_closure(g, gens);
    }
    return gens;
}

bool table_abelian(const CayleyTable& g) {
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            if (g.mul(a, b) != g.mul(b, a)) return false;
    return true;
}

// ---- table constructors ----

AbstractGroup cyclic_table(int n) {
    if (n <= 0) throw ValidationError("cyclic group order must be positive");
    std::vector<int> t(size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[size_t(a) * n + b] = (a + b) % n;
    return make_abstract(n, std::move(t));
}

AbstractGroup dihedral_table(int n) {
    // elements r^i s^e, index e*n + i; s r s = r^-1
    if (n <= 0) throw ValidationError("dihedral parameter must be positive");
    int m = 2 * n;
    std::vector<int> t(size_t(m) * m);
    auto idx = [n](int i, int e) { return e * n + ((i % n) + n) % n; };
    for (int e1 = 0; e1 < 2; ++e1)
        for (int i1 = 0; i1 < n; ++i1)
            for (int e2 = 0; e2 < 2; ++e2)
                for (int i2 = 0; i2 < n; ++i2) {
                    // r^i1 s^e1 r^i2 s^e2 = r^(i1 + i2*(-1)^e1) s^(e1+e2)
                    int i = i1 + (e1 ? -i2 : i2);
                    t[size_t(idx(i1, e1)) * m + idx(i2, e2)] = idx(i, (e1 + e2) % 2);
                }
    return make_abstract(m, std::move(t));
}

AbstractGroup dicyclic_table(int n) {
    // a^i b^e with a order 2n, b^2 = a^n, b a b^-1 = a^-1; index e*2n + i
    if (n < 2) throw ValidationError("dicyclic parameter must be at least 2");
    int two_n = 2 * n, m = 4 * n;
    std::vector<int> t(size_t(m) * m);
    auto idx = [two_n](int i, int e) { return e * two_n + ((i % two_n) + two_n) % two_n; };
    for (int e1 = 0; e1 < 2; ++e1)
        for (int i1 = 0; i1 < two_n; ++i1)
            for (int e2 = 0; e2 < 2; ++e2)
                for (int i2 = 0; i2 < two_n; ++i2) {
                    int i, e;
                    if (e1 == 0) { i = i1 + i2; e = e2; }
                    else if (e2 == 0) { i = i1 - i2; e = 1; }     // b a^i2 = a^-i2 b
                    else { i = i1 - i2 + n; e = 0; }              // b a^i2 b = a^(n - i2)
                    t[size_t(idx(i1, e1)) * m + idx(i2, e2)] = idx(i, e % 2);
                }
    return make_abstract(m, std::move(t));
}

AbstractGroup product_table(const AbstractGroup& a, const AbstractGroup& b) {
    int m = a.n * b.n;
    std::vector<int> t(size_t(m) * m);
    auto idx = [&](int x, int y) { return x * b.n + y; };
    for (int x1 = 0; x1 < a.n; ++x1)
        for (int y1 = 0; y1 < b.n; ++y1)
            for (int x2 = 0; x2 < a.n; ++x2)
                for (int y2 = 0; y2 < b.n; ++y2)
                    t[size_t(idx(x1, y1)) * m + idx(x2, y2)] =
                        idx(a.mul(x1, x2), b.mul(y1, y2));
    return make_abstract(m, std::move(t));
}

AbstractGroup semidirect_table(const AbstractGroup& a, int m, const std::vector<int>& alpha) {
    if (int(alpha.size()) != a.n) throw ValidationError("automorphism has wrong domain size");
    // alpha^k applied elementwise
    auto alpha_pow = std::vector<std::vector<int>>(size_t(m));
    alpha_pow[0].resize(size_t(a.n));
    for (int x = 0; x < a.n; ++x) alpha_pow[0][size_t(x)] = x;
    for (int k = 1; k < m; ++k) {
        alpha_pow[size_t(k)].resize(size_t(a.n));
        for (int x = 0; x < a.n; ++x)
            alpha_pow[size_t(k)][size_t(x)] = alpha[size_t(alpha_pow[size_t(k - 1)][size_t(x)])];
    }
    for (int x = 0; x < a.n; ++x) // alpha^m = id
        if (alpha[size_t(alpha_pow[size_t(m - 1)][size_t(x)])] != x)
            throw ValidationError("twisting map order does not divide the cyclic factor order");
    for (int x = 0; x < a.n; ++x) // automorphism check
        for (int y = 0; y < a.n; ++y)
            if (alpha[size_t(a.mul(x, y))] != a.mul(alpha[size_t(x)], alpha[size_t(y)]))
                throw ValidationError("twisting map is not an automorphism");
    int order = a.n * m;
    std::vector<int> t(size_t(order) * order);
    auto idx = [&](int x, int k) { return k * a.n + x; };
    for (int k1 = 0; k1 < m; ++k1)
        for (int x1 = 0; x1 < a.n; ++x1)
            for (int k2 = 0; k2 < m; ++k2)
                for (int x2 = 0; x2 < a.n; ++x2) {
                    // (x1, k1)(x2, k2) = (x1 * alpha^k1(x2), k1 + k2)
                    int x = a.mul(x1, alpha_pow[size_t(k1)][size_t(x2)]);
                    t[size_t(idx(x1, k1)) * order + idx(x2, k2)] = idx(x, (k1 + k2) % m);
                }
    return make_abstract(order, std::move(t));
}

} // namespace orbicheck
