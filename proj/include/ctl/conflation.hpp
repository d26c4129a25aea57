#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ctl/homology.hpp"

namespace ctl {

/* A short exact sequence sub >--> mid -->> quot with explicit structure
 * maps. The constructor verifies, per vertex, injectivity of the inflation,
 * surjectivity of the deflation, zero composite and dimension exactness,
 * which together force image = kernel exactly. */
class Conflation {
public:
    Conflation(ModuleMap inflation, ModuleMap deflation);

    const Representation& sub() const { return infl_.source(); }
    const Representation& mid() const { return infl_.target(); }
    const Representation& quot() const { return defl_.target(); }
    const ModuleMap& inflation() const { return infl_; }
    const ModuleMap& deflation() const { return defl_; }

private:
    ModuleMap infl_, defl_;
};

Conflation split_conflation(const Representation& sub, const Representation& quot);
/* 0 >--> A ==>> A, the trivial witness when A already lies in the class. */
Conflation trivial_precover(const Representation& a);
/* A >--> A -->> 0. */
Conflation trivial_preenvelope(const Representation& a);
Conflation conflation_from_inclusion(const ModuleMap& inclusion);
Conflation conflation_from_surjection(const ModuleMap& surjection);
Conflation direct_sum_conflations(const std::vector<Conflation>& parts);

/* True iff a retraction r with r o inflation = id exists; exact linear solve. */
bool is_split(const Conflation& c);

struct Pullback {
    Representation rep;
    ModuleMap to_first;   // P -> B
    ModuleMap to_second;  // P -> C
    ModuleMap inclusion;  // P -> B (+) C
};
Pullback pullback(const ModuleMap& f, const ModuleMap& g);  // common target

struct Pushout {
    Representation rep;
    ModuleMap from_first;   // B -> Q
    ModuleMap from_second;  // C -> Q
    ModuleMap projection;   // B (+) C -> Q
};
Pushout pushout(const ModuleMap& f, const ModuleMap& g);  // common source

/* Conflation realizing the class with the given coordinates in the
 * representative basis of Ext^1(C, A): the pushout of the projective
 * presentation of C along the cocycle. Zero coordinates give the split one. */
Conflation realize_extension(const ExtSpace& ext, const std::vector<std::uint32_t>& coeffs);

/* Decompositions of the middle terms of all classes of Ext^1(C, A), the
 * zero class included. With scalar_dedup only one representative per
 * nonzero-scalar orbit is realized (the middle term is scalar invariant). */
std::set<std::map<std::string, int>> enumerate_middle_terms(const Representation& c,
                                                            const Representation& a,
                                                            const Catalog& catalog,
                                                            bool scalar_dedup,
                                                            std::uint64_t enum_cap = 1u << 16);

struct SearchBounds {
    std::uint64_t enum_cap = 1u << 16;  // max extension classes realized per space
    int mult_cap = -1;                  // per-member multiplicity; <0 = auto from ext dims
    int max_summands = 4;               // total summands of a candidate sum
    std::uint64_t seed = 1;
    int closure_rounds_cap = 8;
};

enum class SearchStatus {
    found,
    exhausted,   // bounds ran out; existence stays open
    impossible,  // proven: only split conflations exist and the trivial one fails
};

struct SearchResult {
    SearchStatus status = SearchStatus::exhausted;
    std::optional<Conflation> witness;
    std::map<std::string, int> partner_multiset;  // the enumerated sum it used
    std::vector<std::uint32_t> class_coeffs;
    bool cap_hit = false;
};

/* Special precover search: a conflation Y0 >--> E -->> A with E in add(X)
 * and Y0 a sum of Y-members. Deterministic order: catalog order, then
 * multiplicity-lexicographic, then class-coordinate-lexicographic. */
SearchResult search_special_precover(const Representation& a,
                                     const std::set<std::string>& x_members,
                                     const std::set<std::string>& y_members,
                                     const Catalog& catalog, const SearchBounds& bounds);

/* Dual: A >--> E -->> X0 with E in add(Y) and X0 a sum of X-members. */
SearchResult search_special_preenvelope(const Representation& a,
                                        const std::set<std::string>& x_members,
                                        const std::set<std::string>& y_members,
                                        const Catalog& catalog, const SearchBounds& bounds);

/* The pullback compositions of the theorem's proof. Each returns the
 * composed conflation together with the kernel column witnessing where the
 * new end term lives. */
struct ComposedWitness {
    Conflation main;
    Conflation column;
};

/* From Y1 >--> X1 -->> A and Y2 >--> X2 -->> X1 (same X1), the pullback
 * gives Y >--> X2 -->> A with a column Y2 >--> Y -->> Y1. */
ComposedWitness compose_precover(const Conflation& c1, const Conflation& c2);

/* From A >--> Y1 -->> X1 and Y2 >--> X2 -->> X1 (same X1), the pullback
 * gives A >--> Y -->> X2 with a column Y2 >--> Y -->> Y1. */
ComposedWitness compose_preenvelope(const Conflation& c1, const Conflation& c2);

/* Duals used for the second theorem variant.
 * From A >--> Y2 -->> X2 and Y2 >--> Y1 -->> X1 (same Y2), composing the
 * inflations gives A >--> Y1 -->> W with a column X2 >--> W -->> X1. */
ComposedWitness compose_preenvelope_dual(const Conflation& c1, const Conflation& c2);

/* From Y2 >--> X2 -->> A and Y2 >--> Y1 -->> X1 (same Y2), the pushout
 * gives Y1 >--> Q -->> A with a column X2 >--> Q -->> X1. */
ComposedWitness compose_precover_dual(const Conflation& c1, const Conflation& c2);

}  // namespace ctl
