#pragma once

#include "ctl/conflation.hpp"

namespace ctl {

/* A summand-closed class given by its indecomposable catalog members; the
 * intended semantics is the additive hull (finite sums and summands). */
struct ModuleClass {
    std::string name;
    std::set<std::string> members;
};

ModuleClass class_of_all(const Catalog& catalog);
ModuleClass class_of_projectives(const Catalog& catalog);
ModuleClass class_of_injectives(const Catalog& catalog);

/* Membership test for an arbitrary module: decompose and check summands. */
bool class_contains(const ModuleClass& cls, const Representation& m, const Catalog& catalog);

std::set<std::string> right_orth(const std::set<std::string>& members, const Catalog& catalog);
std::set<std::string> left_orth(const std::set<std::string>& members, const Catalog& catalog);

struct OrthCell {
    std::string x, y;
    int ext1 = 0;
};
struct PairCheck {
    bool ok = false;
    std::set<std::string> right_orth_of_x;
    std::set<std::string> left_orth_of_y;
    std::optional<OrthCell> counterexample;
};
PairCheck is_cotorsion_pair(const ModuleClass& x, const ModuleClass& y, const Catalog& catalog);

/* Checks Ext^i(X, Y) = 0 for 1 <= i <= gldim; refuses infinite gldim. */
bool is_hereditary(const ModuleClass& x, const ModuleClass& y, const Catalog& catalog,
                   int gldim_cap = 64);

enum class Completeness { certified, inconclusive, failed_witness };

struct MemberWitness {
    SearchResult precover;
    SearchResult preenvelope;
};
struct CompletenessCert {
    Completeness status = Completeness::inconclusive;
    std::map<std::string, MemberWitness> witnesses;  // per catalog member
    SearchBounds bounds;
    std::vector<std::string> failures;  // members with a proven missing witness
};
CompletenessCert is_complete(const ModuleClass& x, const ModuleClass& y,
                             const Catalog& catalog, const SearchBounds& bounds);

struct CertifiedPair {
    ModuleClass x, y;
    PairCheck pair;
    std::optional<bool> hereditary;
    std::optional<CompletenessCert> complete;

    bool certified_complete() const {
        return pair.ok && complete && complete->status == Completeness::certified;
    }
};
CertifiedPair certify_pair(const ModuleClass& x, const ModuleClass& y, const Catalog& catalog,
                           const SearchBounds& bounds, bool check_hereditary,
                           bool check_complete);

/* Saturating extension closure: start from the members of both classes
 * (trivial conflations), adjoin every catalog summand of a middle term of a
 * class in Ext^1(quot member, sum of already-present members), repeat to a
 * fixpoint. Sub sums are pruned to members with nonvanishing ext; vanishing
 * components only ever ride along split. */
struct ClosureResult {
    std::set<std::string> members;
    int rounds = 0;  // passes until the set stabilized
};
ClosureResult extension_closure_smd(const ModuleClass& quot_class,
                                    const ModuleClass& sub_class, const Catalog& catalog,
                                    const SearchBounds& bounds);

/* Special precover of an arbitrary module assembled from the per-member
 * completeness witnesses by direct sums and the decomposition isomorphism. */
Conflation precover_witness_for(const Representation& a, const CertifiedPair& pair,
                                const Catalog& catalog);
Conflation preenvelope_witness_for(const Representation& a, const CertifiedPair& pair,
                                   const Catalog& catalog);

enum class TheoremVariant { one, two };

/* The composed special precover of the proof: pair1-precover of A, then
 * pair2-precover of its middle term, then the pullback. Requires the
 * variant-one hypothesis Y2 inside X1. */
ComposedWitness theorem_precover(const Representation& a, const CertifiedPair& p1,
                                 const CertifiedPair& p2, const Catalog& catalog);
ComposedWitness theorem_preenvelope(const Representation& a, const CertifiedPair& p1,
                                    const CertifiedPair& p2, const Catalog& catalog);
/* Duals for the second variant (hypothesis X1 inside Y2). */
ComposedWitness theorem_precover_dual(const Representation& a, const CertifiedPair& p1,
                                      const CertifiedPair& p2, const Catalog& catalog);
ComposedWitness theorem_preenvelope_dual(const Representation& a, const CertifiedPair& p1,
                                         const CertifiedPair& p2, const Catalog& catalog);

struct TheoremReport {
    TheoremVariant variant = TheoremVariant::one;
    std::string pair1_name, pair2_name;
    std::vector<std::string> hypothesis;  // inclusion checked, as "A <= B"
    ModuleClass conclusion_x, conclusion_y;
    ClosureResult closure;
    PairCheck conclusion_pair;
    CompletenessCert conclusion_complete;
    std::optional<bool> conclusion_hereditary;
    std::set<std::string> cross_oracle;  // orthogonal of the intersection side
    bool cross_oracle_equal = false;
    int witnesses_audited = 0;
    bool witnesses_ok = false;
    SearchBounds bounds;

    bool certified() const {
        return conclusion_pair.ok && conclusion_complete.status == Completeness::certified &&
               cross_oracle_equal && witnesses_ok;
    }
};

/* Full mechanized check of the intersection theorem for two certified
 * complete cotorsion pairs. Throws HypothesisViolated (with the violating
 * members) when the inclusion hypothesis fails. */
TheoremReport theorem_check(TheoremVariant variant, const CertifiedPair& p1,
                            const CertifiedPair& p2, const Catalog& catalog,
                            const SearchBounds& bounds);

/* The converse-failure regression: all three pairs complete, yet the
 * cross-inclusion hypotheses fail, witnessed by explicit members. */
struct ConverseFailureReport {
    bool pairs_complete = false;
    std::vector<std::string> witnesses;        // members of X1 ^ X2 outside both orthogonals
    std::vector<std::string> violators_12;     // X1 members outside Y2
    std::vector<std::string> violators_21;     // X2 members outside Y1
    bool ok = false;
};
ConverseFailureReport converse_failure_check(const CertifiedPair& d, const CertifiedPair& d1,
                                             const CertifiedPair& d2, const Catalog& catalog);

/* Catalog members of projective (resp. injective) dimension <= n. */
ModuleClass class_by_pd(int n, const Catalog& catalog, int gldim_cap = 64);
ModuleClass class_by_id(int n, const Catalog& catalog, int gldim_cap = 64);

}  // namespace ctl
