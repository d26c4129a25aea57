#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ctl/fp.hpp"

namespace ctl {

class Representation;

struct Arrow {
    std::string name;
    int from = 0;
    int to = 0;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int vertex_index(const std::string& name) const;
    int arrow_index(const std::string& name) const;
    void validate() const;
};

/* One summand of a relation: a coefficient and a path given as the ordered
 * list of arrow indices in traversal order (first traversed first). */
struct RelationTerm {
    long long coeff = 1;
    std::vector<int> arrows;
};

/* All terms of one relation are parallel paths of length >= 2. */
struct Relation {
    std::vector<RelationTerm> terms;
};

struct AlgebraPresentation {
    Quiver quiver;
    std::uint32_t characteristic = 2;
    std::vector<Relation> relations;
};

/* A path of the quiver: arrows in traversal order. Length 0 paths are the
 * vertex idempotents. The matrix of a path acts right-to-left: traversing
 * a1 then a2 gives the operator M_{a2} * M_{a1}. */
struct QPath {
    int from = 0;
    int to = 0;
    std::vector<int> arrows;

    int length() const { return static_cast<int>(arrows.size()); }
};

/* Sparse combination of normal-form basis paths: (basis index, coefficient). */
using PathCombo = std::vector<std::pair<int, std::uint32_t>>;

/* The bound quiver algebra KQ/I with its normal-form path basis and the
 * canonical projective, injective and simple modules.
 *
 * The basis is computed stratum by stratum: paths are enumerated by
 * increasing length, and within each stratum the span generated by
 * relations composed with arbitrary paths on both sides is reduced away by
 * row reduction. Termination certificate: an empty stratum. */
class Algebra : public std::enable_shared_from_this<Algebra> {
public:
    /* length_cap < 0 selects the default 2 * arrows + 4.
     * Throws NonTerminating when the cap is exceeded. */
    static std::shared_ptr<const Algebra> build(AlgebraPresentation pres, int length_cap = -1);

    const AlgebraPresentation& presentation() const { return pres_; }
    const Quiver& quiver() const { return pres_.quiver; }
    std::uint32_t characteristic() const { return pres_.characteristic; }
    int num_vertices() const { return static_cast<int>(pres_.quiver.vertices.size()); }
    int num_arrows() const { return static_cast<int>(pres_.quiver.arrows.size()); }

    int dimension() const { return static_cast<int>(basis_.size()); }
    const std::vector<QPath>& basis() const { return basis_; }
    /* Basis indices of normal-form paths from one vertex to another. */
    const std::vector<int>& basis_paths(int from, int to) const;
    int length_cap() const { return cap_; }

    /* Normal form of an arbitrary enumerated path; paths beyond the
     * terminated stratum are zero in the algebra. */
    PathCombo reduce_path(const QPath& path) const;

    Representation projective(int vertex) const;
    Representation injective(int vertex) const;
    Representation simple(int vertex) const;
    Representation zero_module() const;

    /* Arrows reversed, relation paths reversed. Cached. */
    std::shared_ptr<const Algebra> opposite() const;

private:
    Algebra() = default;
    void compute_basis();

    AlgebraPresentation pres_;
    int cap_ = 0;
    std::vector<QPath> basis_;
    std::vector<std::vector<std::vector<int>>> by_pair_;  // [from][to] -> basis indices
    std::map<std::pair<int, std::vector<int>>, PathCombo> rewrite_;
    mutable std::shared_ptr<const Algebra> op_;
};

/* True iff every relation of the algebra evaluates to the zero matrix on
 * the given arrow matrices. */
bool verify_relations(const Algebra& alg, const std::vector<int>& dims,
                      const std::vector<FMatrix>& maps);

}  // namespace ctl
