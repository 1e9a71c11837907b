#pragma once

#include "orbicheck/matrix_group.hpp"
#include "orbicheck/poly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace orbicheck {

/**
 * Local orbifold chart: a finite matrix group acting linearly on Q(zeta)^dim.
 * The action is effective by construction (the group is its matrix set).
 */
struct Chart {
    std::string name;
    int dim = 0;
    MatrixGroup group;
};

Chart make_chart(std::string name, int dim, MatrixGroup group);

/** Curve {(t, p(t))} in a 2-dimensional chart; p(0) = 0 so it passes through the origin. */
struct GraphShape {
    RatPoly p;
};

using Shape = std::variant<Subspace, GraphShape>;

int shape_ambient_dim(const Shape& s);
std::string shape_str(const Shape& s);

/**
 * Candidate suborbifold chart: an invariant shape plus the chosen acting
 * subgroup Lambda <= Gamma (every element of Lambda preserves the shape).
 */
struct Subchart {
    std::string name;
    Chart chart;
    Shape shape;
    Subgroup lambda; // indices into chart.group
};

/** Elements of Gamma mapping the shape onto itself. */
Subgroup setwise_stabilizer(const Chart& chart, const Shape& shape);

/** Validates that lambda preserves the shape. */
Subchart make_subchart(std::string name, const Chart& chart, Shape shape, Subgroup lambda);
/** Same with lambda = the full setwise stabilizer. */
Subchart make_subchart_auto(std::string name, const Chart& chart, Shape shape);

/**
 * The exact sequence 1 -> Omega -> Lambda -> Gamma_P -> 1: Omega is the
 * pointwise fixer of the shape, Gamma_P the quotient acting effectively on it.
 */
struct IsotropyData {
    Subgroup omega;             // parent group indices
    Subgroup lambda;            // parent group indices
    CayleyTable lambda_table;   // over positions in lambda.elems
    Subgroup omega_pos;         // positions of omega inside lambda.elems
    AbstractGroup gamma_p;
    GroupHom projection;        // lambda position -> gamma_p index
    std::vector<int> coset_rep; // gamma_p index -> lambda position of smallest member
    std::string omega_name, lambda_name, gamma_p_name;
};

IsotropyData isotropy_data(const Subchart& sub);

/** Lambda equals all of Gamma. */
bool is_full(const Subchart& sub);

struct SaturationWitness {
    int gamma = -1;                    // index in Gamma
    std::string gamma_str;
    std::optional<CycVector> point;    // a y with gamma*y in the shape but outside Lambda*y
    std::optional<Rational> graph_param;
    std::string detail;
};

struct SaturationResult {
    bool saturated = false;
    std::optional<SaturationWitness> witness;
};

/**
 * Whether every Gamma-orbit meets the shape in exactly a Lambda-orbit,
 * decided exactly per gamma on the locus the shape shares with gamma^-1(shape).
 */
SaturationResult is_saturated(const Subchart& sub);

struct SplitResult {
    bool split = false;
    std::optional<GroupHom> section;    // gamma_p -> lambda positions
    std::optional<Subgroup> complement; // positions in lambda.elems
    int subgroups_examined = 0;
};

/** Whether the isotropy sequence splits (a complement of Omega in Lambda exists). */
SplitResult is_split(const Subchart& sub, const IsotropyData& iso);

struct EmbeddingData {
    GroupHom theta;                      // gamma_p -> parent group indices
    std::vector<CycVector> lift_basis;   // linear shapes: basis of the subspace
    std::optional<RatPoly> lift_graph;   // graph shapes: the parameterization
};

/**
 * Theta = inclusion composed with the section; verified to be an injective
 * homomorphism satisfying Theta(c) * y = c * y on the shape.
 */
EmbeddingData build_embedding(const Subchart& sub, const IsotropyData& iso,
                              const GroupHom& section);

struct Verdict {
    bool is_suborbifold = false;
    bool full = false;
    SaturationResult saturation;
    SplitResult split;
    IsotropyData isotropy;
    bool embeddable_topologically = false;
    bool embeddable_completely = false;
    std::optional<EmbeddingData> embedding;
};

/** Full decision for one subchart, with embedding data when one exists. */
Verdict embeddability(const Subchart& sub);

/**
 * All homomorphisms T: Gamma_src -> Gamma_dst with T(g) * lift = lift * g,
 * i.e. making the injective linear map lift equivariant. Enumerates generator
 * images; throws CapExceeded past cap candidate tuples.
 */
std::vector<GroupHom> enumerate_equivariant_homs(const Chart& src, const Chart& dst,
                                                 const CycMatrix& lift, long cap = 1000000);

/** Half-line target: the shape is forced to span{v} with some lambda sending v to -v. */
struct RayTarget {
    CycVector v;
};

using RecognitionTarget = std::variant<Subspace, GraphShape, RayTarget>;

struct RecognitionCandidate {
    Subchart subchart;
    Verdict verdict;
};

/**
 * All (shape, Lambda) pairs realizing the target as a suborbifold chart whose
 * local quotient injects (saturated), optionally filtered by the isomorphism
 * class of Gamma_P. Lambda ranges over subgroups of the setwise stabilizer.
 */
std::vector<RecognitionCandidate> recognize_suborbifold(
    const Chart& chart, const RecognitionTarget& target,
    const std::optional<std::string>& required_gamma_p);

struct OracleCounterexample {
    int gamma = -1;
    std::string gamma_str;
    std::string point_str;
};

struct OracleReport {
    bool saturated = true;
    std::optional<OracleCounterexample> counterexample;
    int points_checked = 0;
};

/**
 * Randomized pointwise check of saturation: draws rational points of the shape
 * (per gamma, from the locus shared with gamma^-1(shape); for graphs, random
 * parameters plus every rational intersection parameter and the roots of
 * cyclotomic divisors of the mismatch polynomials), computes exact orbits, and
 * compares orbit-meet-shape with the Lambda-orbit. Deterministic for a fixed
 * seed. Finds any failure on a linear shape with high probability; for curves
 * it is complete for rational and root-of-unity crossing parameters.
 */
OracleReport sampling_oracle(const Subchart& sub, int trials, std::uint64_t seed);

} // namespace orbicheck
