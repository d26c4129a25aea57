#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ctl/rep.hpp"

namespace ctl {

/* Basis of Hom(source, target): solution space of the intertwining linear
 * system over all arrows. */
class HomSpace {
public:
    HomSpace(Representation source, Representation target);

    int dim() const { return static_cast<int>(basis_.size()); }
    const Representation& source() const { return src_; }
    const Representation& target() const { return dst_; }
    ModuleMap element(int k) const;
    /* Linear combination of basis elements with the given coefficients. */
    ModuleMap combine(const std::vector<std::uint32_t>& coeffs) const;
    /* Coordinates of a map in this basis; throws if it is not a member. */
    std::vector<std::uint32_t> coordinates(const ModuleMap& f) const;

private:
    Representation src_, dst_;
    std::vector<std::vector<FMatrix>> basis_;
    FMatrix flat_;  // columns = flattened basis elements
};

int hom_dim(const Representation& m, const Representation& n);

/* Projective cover P0 ->> M built from top(M) = M / rad(M),
 * rad(M) = sum of the images of the arrow maps. */
struct ProjCover {
    Representation p0;
    ModuleMap cover;                 // P0 ->> M
    std::vector<int> top_dims;       // multiplicity of P_v in P0, by vertex
};
ProjCover projective_cover(const Representation& m);

/* Kernel of the projective cover with its inclusion retained. */
struct SyzygyData {
    Representation omega;
    ModuleMap inclusion;  // omega -> P0
    ProjCover cover;
};
SyzygyData syzygy(const Representation& m);

Representation cosyzygy(const Representation& m);

/* Ext^1(C, A) presented by cocycles omega(C) -> A modulo those factoring
 * through the cover P0. Representatives are actual module maps. */
struct ExtSpace {
    int degree = 1;
    Representation source;  // C
    Representation target;  // A
    SyzygyData syz;         // of C
    HomSpace hom_omega;     // Hom(omega C, A)
    std::vector<int> rep_indices;  // indices into hom_omega's basis
    int dim() const { return static_cast<int>(rep_indices.size()); }
    ModuleMap cocycle(const std::vector<std::uint32_t>& coeffs) const;
};
ExtSpace ext_space(const Representation& c, const Representation& a);
/* Same, reusing an already computed projective presentation of the source. */
ExtSpace ext_space_from(SyzygyData syz, const Representation& a);

int ext_dim(const Representation& m, const Representation& n, int degree);

int projective_dimension(const Representation& m, int cap = 64);
int injective_dimension(const Representation& m, int cap = 64);
int global_dimension(const Algebra& alg, int cap = 64);

struct IsoOptions {
    std::uint64_t enum_cap = 1u << 16;  // exhaustive when p^h <= cap
    int random_trials = 512;
    std::uint64_t seed = 1;
};

bool is_isomorphic(const Representation& m, const Representation& n, IsoOptions opts = {});
bool is_indecomposable(const Representation& m, std::uint64_t enum_cap = 1u << 16);

/* The declared complete list of indecomposables of one algebra. */
class Catalog {
public:
    Catalog(std::shared_ptr<const Algebra> alg, std::vector<Representation> members);

    const std::shared_ptr<const Algebra>& algebra() const { return alg_; }
    int size() const { return static_cast<int>(members_.size()); }
    const Representation& member(int i) const { return members_[i]; }
    const Representation& member(const std::string& name) const;
    int index(const std::string& name) const;
    bool contains(const std::string& name) const;
    std::vector<std::string> names() const;
    std::set<std::string> name_set() const;

    /* dim Ext^1 between catalog members, cached. */
    int ext1(int i, int j) const;
    int ext1(const std::string& a, const std::string& b) const;
    const SyzygyData& syzygy_of(int i) const;

    Representation sum_of(const std::map<std::string, int>& multiset) const;

private:
    std::shared_ptr<const Algebra> alg_;
    std::vector<Representation> members_;
    std::map<std::string, int> index_;
    mutable std::vector<std::vector<int>> ext1_cache_;
    mutable std::vector<std::optional<SyzygyData>> syz_cache_;
};

/* Krull-Schmidt decomposition against a verified catalog: returns the
 * multiset of catalog names. Throws ResidueNotInCatalog when peeling
 * leaves a nonzero remainder with no splitting catalog summand. */
std::map<std::string, int> decompose(const Representation& m, const Catalog& catalog);

/* Decomposition with an explicit isomorphism from the direct sum of the
 * catalog members, in peel order, onto the module. */
struct OrderedDecomposition {
    std::vector<std::string> order;
    ModuleMap iso;  // direct_sum(order) -> M
};
OrderedDecomposition decompose_with_iso(const Representation& m, const Catalog& catalog);

struct MemberReport {
    std::string name;
    bool relations_ok = false;
    bool indecomposable = false;
    std::vector<std::string> isomorphic_to;  // should stay empty
};
struct CatalogReport {
    bool all_ok = false;
    int count = 0;
    std::vector<MemberReport> members;
};
CatalogReport catalog_verify(const Catalog& catalog);

}  // namespace ctl
