#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orbicheck {

/**
 * Multiplication table of a finite group over element indices 0..n-1.
 * The identity index is arbitrary (matrix groups keep canonical element order).
 */
struct CayleyTable {
    int n = 0;
    int id = 0;
    std::vector<int> t;   // n*n entries, t[a*n+b] = a*b
    std::vector<int> inv; // n entries

    int mul(int a, int b) const { return t[size_t(a) * n + b]; }
    int order_of(int a) const;
};

/** CayleyTable with identity fixed at index 0; validated on construction. */
struct AbstractGroup : CayleyTable {};

/** Subgroup as a sorted list of parent element indices. */
struct Subgroup {
    std::vector<int> elems;
    size_t size() const { return elems.size(); }
    bool contains(int e) const;
};

/** Homomorphism as an index map; validate with check_hom. */
struct GroupHom {
    int src_n = 0, dst_n = 0;
    std::vector<int> map; // src index -> dst index
};

/** Build and validate (associativity, identity at 0, inverses). */
AbstractGroup make_abstract(int n, std::vector<int> table);

/** Checks h(ab) = h(a)h(b) for all pairs and identity-to-identity. */
bool check_hom(const CayleyTable& src, const CayleyTable& dst, const GroupHom& h);
bool hom_injective(const GroupHom& h);

/** Smallest subgroup containing the seed indices. */
Subgroup subgroup_closure(const CayleyTable& g, const std::vector<int>& seed);

/** Every subgroup, sorted by (order, element list); group order must be <= cap. */
std::vector<Subgroup> subgroups(const CayleyTable& g, int cap = 64);

/** nullopt when normal, else a witness (g, h) with g h g^-1 outside H. */
std::optional<std::pair<int, int>> normality_witness(const CayleyTable& g, const Subgroup& h);
inline bool is_normal(const CayleyTable& g, const Subgroup& h) { return !normality_witness(g, h); }

struct QuotientResult {
    AbstractGroup quotient;        // cosets; identity coset at index 0
    GroupHom projection;           // parent index -> coset index
    std::vector<int> coset_rep;    // coset index -> smallest parent element index
};

/** G / N for normal N; throws ValidationError naming a conjugation witness otherwise. */
QuotientResult quotient(const CayleyTable& g, const Subgroup& n);

struct ComplementSearch {
    std::optional<Subgroup> complement; // H with H*N = G, H meet N = {e}
    int subgroups_examined = 0;
};

/** First complement of normal N in G in deterministic subgroup order, if any. */
ComplementSearch find_complement(const CayleyTable& g, const Subgroup& n);

/**
 * All homomorphic sections s: Q -> G of the projection q (s composed with q is
 * the identity). Enumerates |N|^(|Q|-1) candidate maps; throws CapExceeded
 * beyond the cap.
 */
std::vector<GroupHom> find_sections(const CayleyTable& g, const Subgroup& n,
                                    const AbstractGroup& q, const GroupHom& proj,
                                    long cap = 1000000);

/**
 * Isomorphism class name for |G| <= 16 ("Z4", "Z4xZ2", "D4", "Q8", ...);
 * "unknown(order=n)" outside the catalog.
 */
std::string iso_classify(const CayleyTable& g);

bool isomorphic(const CayleyTable& a, const CayleyTable& b);
bool table_abelian(const CayleyTable& g);

/** Deterministic small generating sequence (lowest-index greedy). */
std::vector<int> generating_sequence(const CayleyTable& g);

/** Table of the subgroup over positions 0..|H|-1 in its element list. */
CayleyTable sub_table(const CayleyTable& g, const Subgroup& h);

// table constructors (used by the iso catalog and tests)
AbstractGroup cyclic_table(int n);
AbstractGroup dihedral_table(int n);       // order 2n, n >= 1
AbstractGroup dicyclic_table(int n);       // order 4n, n >= 2; n=2 gives Q8
AbstractGroup product_table(const AbstractGroup& a, const AbstractGroup& b);
/** A x| Z_m twisted by an automorphism alpha of A with alpha^m = id. */
AbstractGroup semidirect_table(const AbstractGroup& a, int m, const std::vector<int>& alpha);

} // namespace orbicheck
