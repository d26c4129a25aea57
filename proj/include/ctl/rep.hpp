#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ctl/quiver.hpp"

namespace ctl {

/* A finite dimensional left module over a bound quiver algebra: one vector
 * space dimension per vertex, one matrix per arrow. The matrix of an arrow
 * a: u -> v has shape dims[v] x dims[u] and acts on column vectors.
 * Immutable after construction; the constructor checks shapes and relations. */
class Representation {
public:
    Representation(std::shared_ptr<const Algebra> alg, std::vector<int> dims,
                   std::vector<FMatrix> maps, std::string name = "");

    const std::shared_ptr<const Algebra>& algebra() const { return alg_; }
    const std::string& name() const { return name_; }
    Representation named(std::string name) const;

    int dim(int vertex) const { return dims_[vertex]; }
    const std::vector<int>& dims() const { return dims_; }
    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }

    const FMatrix& map(int arrow) const { return maps_[arrow]; }
    const std::vector<FMatrix>& maps() const { return maps_; }

    /* Composite matrix of a path (product of arrow matrices, right to left). */
    FMatrix path_action(const QPath& path) const;

    /* Structural equality: same algebra object, dims and matrices. */
    bool operator==(const Representation& o) const;
    bool operator!=(const Representation& o) const { return !(*this == o); }

private:
    std::shared_ptr<const Algebra> alg_;
    std::string name_;
    std::vector<int> dims_;
    std::vector<FMatrix> maps_;
};

/* A homomorphism of representations: one matrix per vertex, intertwining
 * every arrow. Construction verifies membership in Hom. */
class ModuleMap {
public:
    ModuleMap(Representation source, Representation target, std::vector<FMatrix> components);

    static ModuleMap zero(const Representation& source, const Representation& target);
    static ModuleMap identity(const Representation& m);

    const Representation& source() const { return src_; }
    const Representation& target() const { return dst_; }
    const FMatrix& component(int vertex) const { return comp_[vertex]; }
    const std::vector<FMatrix>& components() const { return comp_; }

    bool is_zero() const;
    bool injective() const;   // full column rank at every vertex
    bool surjective() const;  // full row rank at every vertex
    bool is_isomorphism() const;

    ModuleMap compose_after(const ModuleMap& first) const;  // this o first
    ModuleMap operator+(const ModuleMap& o) const;
    ModuleMap operator-(const ModuleMap& o) const;
    ModuleMap scaled(std::uint32_t s) const;

private:
    Representation src_, dst_;
    std::vector<FMatrix> comp_;
};

void check_same_algebra(const Representation& a, const Representation& b);

struct DirectSum {
    Representation rep;
    std::vector<ModuleMap> inclusions;
    std::vector<ModuleMap> projections;
};
DirectSum direct_sum(const std::vector<Representation>& parts,
                     std::shared_ptr<const Algebra> alg);

/* Sub- and quotient representations cut out by per-vertex subspaces. */
struct SubQuotient {
    Representation rep;
    ModuleMap map;  // inclusion for sub, projection for quotient
};
SubQuotient sub_representation(const Representation& ambient,
                               const std::vector<FMatrix>& spanning);
SubQuotient quotient_representation(const Representation& ambient,
                                    const std::vector<FMatrix>& sub_spanning);

SubQuotient kernel_representation(const ModuleMap& f);
SubQuotient image_representation(const ModuleMap& f);    // sub of target
SubQuotient cokernel_representation(const ModuleMap& f);

/* Dual module over the opposite algebra (and dual of a map). Involutive. */
Representation dual_module(const Representation& m);
ModuleMap dual_map(const ModuleMap& f);

/* Inverse of an isomorphism; throws when some component is singular. */
ModuleMap inverse_map(const ModuleMap& f);

}  // namespace ctl
