#include "orbicheck/errors.hpp"
#include "orbicheck/groups.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace orbicheck {

namespace {

std::vector<int> element_order_histogram(const CayleyTable& g) {
    std::vector<int> h(size_t(g.n) + 1, 0);
    for (int a = 0; a < g.n; ++a) ++h[size_t(g.order_of(a))];
    return h;
}

struct IsoSearch {
    const CayleyTable& a;
    const CayleyTable& b;
    std::vector<int> gens;                 // generators of a
    std::vector<std::vector<int>> cand;    // candidate images per generator

    bool extend(std::vector<int>& image, std::vector<int>& used, size_t k) {
        if (k == gens.size())
            return std::find(image.begin(), image.end(), -1) == image.end();
        for (int h : cand[k]) {
            std::vector<int> img = image, usd = used;
            if (assign(img, usd, gens[k], h) && extend(img, usd, k + 1)) {
                image = img;
                used = usd;
                return true;
            }
        }
        return false;
    }

    // add g -> h to the partial isomorphism and close under products
    bool assign(std::vector<int>& image, std::vector<int>& used, int g0, int h0) {
        std::vector<std::pair<int, int>> queue{{g0, h0}};
        while (!queue.empty()) {
            auto [x, y] = queue.back();
            queue.pop_back();
            if (image[size_t(x)] != -1) {
                if (image[size_t(x)] != y) return false;
                continue;
            }
            if (used[size_t(y)] != -1) return false;
            image[size_t(x)] = y;
            used[size_t(y)] = x;
            for (int z = 0; z < a.n; ++z) {
                if (image[size_t(z)] == -1) continue;
                queue.emplace_back(a.mul(x, z), b.mul(y, image[size_t(z)]));
                queue.emplace_back(a.mul(z, x), b.mul(image[size_t(z)], y));
            }
        }
        return true;
    }
};

const std::vector<std::pair<std::string, AbstractGroup>>& catalog() {
    static std::vector<std::pair<std::string, AbstractGroup>> cat;
    static std::once_flag once;
    std::call_once(once, [] {
        // abelian groups in invariant-factor form (each factor divides the previous)
        std::map<int, std::vector<std::vector<int>>> chains;
        for (int n = 1; n <= 16; ++n) {
            std::vector<std::vector<int>> out;
            std::vector<int> cur;
            // depth-first over factor chains with product n
            struct Rec {
                void operator()(int rem, int limit, std::vector<int>& cur,
                                std::vector<std::vector<int>>& out) const {
                    if (rem == 1) { out.push_back(cur); return; }
                    // next factor divides both the previous factor and what is left
                    for (int d = limit; d >= 2; --d) {
                        if (limit % d != 0 || rem % d != 0) continue;
                        cur.push_back(d);
                        (*this)(rem / d, d, cur, out);
                        cur.pop_back();
                    }
                }
            } rec;
            rec(n, n, cur, out);
            chains[n] = out;
        }
        for (int n = 1; n <= 16; ++n) {
            for (const auto& chain : chains[n]) {
                AbstractGroup g = cyclic_table(chain.empty() ? 1 : chain[0]);
                std::string name = "Z" + std::to_string(chain.empty() ? 1 : chain[0]);
                for (size_t i = 1; i < chain.size(); ++i) {
                    g = product_table(g, cyclic_table(chain[i]));
                    name += "xZ" + std::to_string(chain[i]);
                }
                cat.emplace_back(name, std::move(g));
            }
        }
        // dihedral (order 2n; D2 is Z2xZ2 and already present)
        for (int n = 3; n <= 8; ++n)
            cat.emplace_back("D" + std::to_string(n), dihedral_table(n));
        // dicyclic: Q8, Dic3 (order 12), Q16
        cat.emplace_back("Q8", dicyclic_table(2));
        cat.emplace_back("Dic3", dicyclic_table(3));
        cat.emplace_back("Q16", dicyclic_table(4));
        // A4 = (Z2 x Z2) x| Z3 cycling the involutions
        {
            AbstractGroup v4 = product_table(cyclic_table(2), cyclic_table(2));
            cat.emplace_back("A4", semidirect_table(v4, 3, {0, 2, 3, 1}));
        }
        // remaining nonabelian groups of order 16
        {
            AbstractGroup z8 = cyclic_table(8);
            std::vector<int> times3(8), times5(8);
            for (int i = 0; i < 8; ++i) { times3[size_t(i)] = (3 * i) % 8; times5[size_t(i)] = (5 * i) % 8; }
            cat.emplace_back("SD16", semidirect_table(z8, 2, times3));
            cat.emplace_back("M16", semidirect_table(z8, 2, times5));
        }
        {
            AbstractGroup z4 = cyclic_table(4);
            cat.emplace_back("Z4:Z4", semidirect_table(z4, 4, {0, 3, 2, 1})); // twist by inversion
        }
        {
            // (Z4 x Z2) x| Z2 twisted by (a, b) -> (a, a + b); the center is
            // Z2 x Z2, distinguishing it from the central product below whose
            // twist (a, b) -> (a + 2b, b) has center Z4
            AbstractGroup a = product_table(cyclic_table(4), cyclic_table(2));
            std::vector<int> alpha(8);
            for (int x = 0; x < 4; ++x)
                for (int y = 0; y < 2; ++y) alpha[size_t(x * 2 + y)] = x * 2 + (x + y) % 2;
            cat.emplace_back("(Z4xZ2):Z2", semidirect_table(a, 2, alpha));
        }
        cat.emplace_back("D4xZ2", product_table(dihedral_table(4), cyclic_table(2)));
        cat.emplace_back("Q8xZ2", product_table(dicyclic_table(2), cyclic_table(2)));
        {
            // central product D4 o Z4: quotient of D4 x Z4 by the diagonal central Z2
            AbstractGroup big = product_table(dihedral_table(4), cyclic_table(4));
            // D4 index of r^2 is 2; Z4 index of 2 is 2; pair index = 2*4 + 2
            Subgroup center;
            center.elems = {0, 2 * 4 + 2};
            cat.emplace_back("D4oZ4", quotient(big, center).quotient);
        }
    });
    return cat;
}

} // namespace

bool isomorphic(const CayleyTable& a, const CayleyTable& b) {
    if (a.n != b.n) return false;
    if (table_abelian(a) != table_abelian(b)) return false;
    if (element_order_histogram(a) != element_order_histogram(b)) return false;
    IsoSearch search{a, b, generating_sequence(a), {}};
    for (int g : search.gens) {
        std::vector<int> c;
        int want = a.order_of(g);
        for (int h = 0; h < b.n; ++h)
            if (b.order_of(h) == want) c.push_back(h);
        search.cand.push_back(std::move(c));
    }
    std::vector<int> image(size_t(a.n), -1), used(size_t(b.n), -1);
    image[size_t(a.id)] = b.id;
    used[size_t(b.id)] = a.id;
    return search.extend(image, used, 0);
}

std::string iso_classify(const CayleyTable& g) {
    if (g.n > 16) return "unknown(order=" + std::to_string(g.n) + ")";
    for (const auto& [name, h] : catalog()) {
        if (h.n != g.n) continue;
        if (isomorphic(g, h)) return name;
    }
    return "unknown(order=" + std::to_string(g.n) + ")";
}

} // namespace orbicheck
