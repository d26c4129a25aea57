#include "ctl/cotorsion.hpp"

#include <algorithm>
#include <functional>

namespace ctl {

ModuleClass class_of_all(const Catalog& catalog) {
    return ModuleClass{"all", catalog.name_set()};
}

ModuleClass class_of_projectives(const Catalog& catalog) {
    ModuleClass out{"proj", {}};
    for (int i = 0; i < catalog.size(); ++i)
        if (catalog.syzygy_of(i).omega.is_zero()) out.members.insert(catalog.member(i).name());
    return out;
}

ModuleClass class_of_injectives(const Catalog& catalog) {
    ModuleClass out{"inj", {}};
    for (int i = 0; i < catalog.size(); ++i)
        if (cosyzygy(catalog.member(i)).is_zero()) out.members.insert(catalog.member(i).name());
    return out;
}

bool class_contains(const ModuleClass& cls, const Representation& m, const Catalog& catalog) {
    if (m.is_zero()) return true;
    std::map<std::string, int> dec;
    try {
        dec = decompose(m, catalog);
    } catch (const ResidueNotInCatalog&) {
        return false;
    }
    for (const auto& [name, cnt] : dec)
        if (!cls.members.count(name)) return false;
    return true;
}

std::set<std::string> right_orth(const std::set<std::string>& members, const Catalog& catalog) {
    std::set<std::string> out;
    for (int j = 0; j < catalog.size(); ++j) {
        bool in = true;
        for (const auto& x : members)
            if (catalog.ext1(catalog.index(x), j) != 0) {
                in = false;
                break;
            }
        if (in) out.insert(catalog.member(j).name());
    }
    return out;
}

std::set<std::string> left_orth(const std::set<std::string>& members, const Catalog& catalog) {
    std::set<std::string> out;
    for (int i = 0; i < catalog.size(); ++i) {
        bool in = true;
        for (const auto& y : members)
            if (catalog.ext1(i, catalog.index(y)) != 0) {
                in = false;
                break;
            }
        if (in) out.insert(catalog.member(i).name());
    }
    return out;
}

PairCheck is_cotorsion_pair(const ModuleClass& x, const ModuleClass& y, const Catalog& catalog) {
    PairCheck out;
    out.right_orth_of_x = right_orth(x.members, catalog);
    out.left_orth_of_y = left_orth(y.members, catalog);
    out.ok = out.right_orth_of_x == y.members && out.left_orth_of_y == x.members;
    if (!out.ok) {
        /* name one witness cell: a member pair with nonvanishing ext, or a
         * missing member of an orthogonal */
        for (const auto& xm : x.members) {
            for (const auto& ym : y.members) {
                int d = catalog.ext1(catalog.index(xm), catalog.index(ym));
                if (d != 0) {
                    out.counterexample = OrthCell{xm, ym, d};
                    return out;
                }
            }
        }
        for (const auto& ym : out.right_orth_of_x)
            if (!y.members.count(ym)) {
                out.counterexample = OrthCell{"", ym, 0};
                return out;
            }
        for (const auto& xm : out.left_orth_of_y)
            if (!x.members.count(xm)) {
                out.counterexample = OrthCell{xm, "", 0};
                return out;
            }
    }
    return out;
}

bool is_hereditary(const ModuleClass& x, const ModuleClass& y, const Catalog& catalog,
                   int gldim_cap) {
    int gldim = 0;
    try {
        gldim = global_dimension(*catalog.algebra(), gldim_cap);
    } catch (const Diverges&) {
        throw InfiniteGlobalDimension(
            "hereditary check needs a finite global dimension; refused rather than truncated");
    }
    for (const auto& xm : x.members)
        for (const auto& ym : y.members)
            for (int i = 1; i <= gldim; ++i)
                if (ext_dim(catalog.member(xm), catalog.member(ym), i) != 0) return false;
    return true;
}

CompletenessCert is_complete(const ModuleClass& x, const ModuleClass& y,
                             const Catalog& catalog, const SearchBounds& bounds) {
    CompletenessCert cert;
    cert.bounds = bounds;
    bool all_found = true, any_failed = false;
    for (int i = 0; i < catalog.size(); ++i) {
        const Representation& a = catalog.member(i);
        MemberWitness w;
        w.precover = search_special_precover(a, x.members, y.members, catalog, bounds);
        w.preenvelope = search_special_preenvelope(a, x.members, y.members, catalog, bounds);
        if (w.precover.status != SearchStatus::found ||
            w.preenvelope.status != SearchStatus::found)
            all_found = false;
        if (w.precover.status == SearchStatus::impossible ||
            w.preenvelope.status == SearchStatus::impossible) {
            any_failed = true;
            cert.failures.push_back(a.name());
        }
        cert.witnesses.emplace(a.name(), std::move(w));
    }
    cert.status = any_failed ? Completeness::failed_witness
                             : (all_found ? Completeness::certified : Completeness::inconclusive);
    return cert;
}

CertifiedPair certify_pair(const ModuleClass& x, const ModuleClass& y, const Catalog& catalog,
                           const SearchBounds& bounds, bool check_hereditary,
                           bool check_complete) {
    CertifiedPair out;
    out.x = x;
    out.y = y;
    out.pair = is_cotorsion_pair(x, y, catalog);
    if (check_hereditary) out.hereditary = is_hereditary(x, y, catalog);
    if (check_complete) out.complete = is_complete(x, y, catalog, bounds);
    return out;
}

ClosureResult extension_closure_smd(const ModuleClass& quot_class,
                                    const ModuleClass& sub_class, const Catalog& catalog,
                                    const SearchBounds& bounds) {
    for (const auto& n : quot_class.members) catalog.index(n);
    for (const auto& n : sub_class.members) catalog.index(n);
    const std::uint32_t p = catalog.algebra()->characteristic();

    ClosureResult res;
    std::set<std::string>& s = res.members;
    s.insert(quot_class.members.begin(), quot_class.members.end());
    s.insert(sub_class.members.begin(), sub_class.members.end());

    while (true) {
        if (++res.rounds > bounds.closure_rounds_cap)
            throw CapExceeded("extension closure did not stabilize within " +
                              std::to_string(bounds.closure_rounds_cap) + " rounds");
        bool grew = false;
        for (const auto& qname : quot_class.members) {
            int qi = catalog.index(qname);

            std::vector<std::string> relevant;
            int max_ext = 0;
            for (int j = 0; j < catalog.size(); ++j) {
                const std::string uname = catalog.member(j).name();
                if (!s.count(uname)) continue;
                int d = catalog.ext1(qi, j);
                if (d > 0) {
                    relevant.push_back(uname);
                    max_ext = std::max(max_ext, d);
                }
            }
            if (relevant.empty()) continue;
            int mult_cap = bounds.mult_cap < 0 ? std::max(1, max_ext) : bounds.mult_cap;

            SyzygyData syz = catalog.syzygy_of(qi);
            auto process = [&](const std::map<std::string, int>& multi) {
                Representation y0 = catalog.sum_of(multi);
                ExtSpace es = ext_space_from(syz, y0);
                std::uint64_t count = 1;
                for (int k = 0; k < es.dim(); ++k) {
                    count *= p;
                    if (count > bounds.enum_cap)
                        throw CapExceeded("extension class enumeration over " + qname +
                                          " exceeds the cap");
                }
                /* canonical representatives only; middles are scalar invariant */
                std::vector<std::uint32_t> t(es.dim(), 0);
                while (true) {
                    bool more = false;
                    for (std::size_t i = 0; i < t.size(); ++i) {
                        if (++t[i] < p) {
                            more = true;
                            break;
                        }
                        t[i] = 0;
                    }
                    if (!more) break;
                    bool canonical = false;
                    for (std::uint32_t v : t) {
                        if (v == 0) continue;
                        canonical = v == 1;
                        break;
                    }
                    if (!canonical) continue;
                    auto dec = decompose(realize_extension(es, t).mid(), catalog);
                    for (const auto& [name, cnt] : dec)
                        if (s.insert(name).second) grew = true;
                }
            };
            std::function<void(std::size_t, int, std::map<std::string, int>&)> rec =
                [&](std::size_t pos, int budget, std::map<std::string, int>& cur) {
                    if (pos >= relevant.size() || budget == 0) return;
                    for (int c = std::min(budget, mult_cap); c >= 1; --c) {
                        cur[relevant[pos]] = c;
                        process(cur);
                        rec(pos + 1, budget - c, cur);
                        cur.erase(relevant[pos]);
                    }
                    rec(pos + 1, budget, cur);
                };
            std::map<std::string, int> cur;
            rec(0, bounds.max_summands, cur);
        }
        if (!grew) break;
    }
    return res;
}

Conflation precover_witness_for(const Representation& a, const CertifiedPair& pair,
                                const Catalog& catalog) {
    if (!pair.complete) throw Error("pair carries no completeness witnesses");
    if (a.is_zero()) return trivial_precover(a);
    OrderedDecomposition dec = decompose_with_iso(a, catalog);
    std::vector<Conflation> parts;
    for (const auto& name : dec.order) {
        const SearchResult& w = pair.complete->witnesses.at(name).precover;
        if (w.status != SearchStatus::found || !w.witness)
            throw Error("missing precover witness for " + name);
        parts.push_back(*w.witness);
    }
    Conflation sum = direct_sum_conflations(parts);
    ModuleMap deflation = dec.iso.compose_after(sum.deflation());
    return Conflation(sum.inflation(), std::move(deflation));
}

Conflation preenvelope_witness_for(const Representation& a, const CertifiedPair& pair,
                                   const Catalog& catalog) {
    if (!pair.complete) throw Error("pair carries no completeness witnesses");
    if (a.is_zero()) return trivial_preenvelope(a);
    OrderedDecomposition dec = decompose_with_iso(a, catalog);
    std::vector<Conflation> parts;
    for (const auto& name : dec.order) {
        const SearchResult& w = pair.complete->witnesses.at(name).preenvelope;
        if (w.status != SearchStatus::found || !w.witness)
            throw Error("missing preenvelope witness for " + name);
        parts.push_back(*w.witness);
    }
    Conflation sum = direct_sum_conflations(parts);
    ModuleMap inflation = sum.inflation().compose_after(inverse_map(dec.iso));
    return Conflation(std::move(inflation), sum.deflation());
}

namespace {

std::vector<std::string> inclusion_violators(const std::set<std::string>& small,
                                             const std::set<std::string>& big) {
    std::vector<std::string> out;
    for (const auto& n : small)
        if (!big.count(n)) out.push_back(n);
    return out;
}

void require_hypothesis(TheoremVariant variant, const CertifiedPair& p1,
                        const CertifiedPair& p2) {
    if (variant == TheoremVariant::one) {
        auto bad = inclusion_violators(p2.y.members, p1.x.members);
        if (!bad.empty())
            throw HypothesisViolated("hypothesis fails: " + p2.y.name + " is not inside " +
                                         p1.x.name,
                                     bad);
    } else {
        auto bad = inclusion_violators(p1.x.members, p2.y.members);
        if (!bad.empty())
            throw HypothesisViolated("hypothesis fails: " + p1.x.name + " is not inside " +
                                         p2.y.name,
                                     bad);
    }
}

}  // namespace

ComposedWitness theorem_precover(const Representation& a, const CertifiedPair& p1,
                                 const CertifiedPair& p2, const Catalog& catalog) {
    require_hypothesis(TheoremVariant::one, p1, p2);
    Conflation c1 = precover_witness_for(a, p1, catalog);
    Conflation c2 = precover_witness_for(c1.mid(), p2, catalog);
    return compose_precover(c1, c2);
}

ComposedWitness theorem_preenvelope(const Representation& a, const CertifiedPair& p1,
                                    const CertifiedPair& p2, const Catalog& catalog) {
    require_hypothesis(TheoremVariant::one, p1, p2);
    Conflation c1 = preenvelope_witness_for(a, p1, catalog);
    Conflation c2 = precover_witness_for(c1.quot(), p2, catalog);
    return compose_preenvelope(c1, c2);
}

ComposedWitness theorem_precover_dual(const Representation& a, const CertifiedPair& p1,
                                      const CertifiedPair& p2, const Catalog& catalog) {
    require_hypothesis(TheoremVariant::two, p1, p2);
    Conflation c1 = precover_witness_for(a, p2, catalog);
    Conflation c2 = preenvelope_witness_for(c1.sub(), p1, catalog);
    return compose_precover_dual(c1, c2);
}

ComposedWitness theorem_preenvelope_dual(const Representation& a, const CertifiedPair& p1,
                                         const CertifiedPair& p2, const Catalog& catalog) {
    require_hypothesis(TheoremVariant::two, p1, p2);
    Conflation c1 = preenvelope_witness_for(a, p2, catalog);
    Conflation c2 = preenvelope_witness_for(c1.mid(), p1, catalog);
    return compose_preenvelope_dual(c1, c2);
}

TheoremReport theorem_check(TheoremVariant variant, const CertifiedPair& p1,
                            const CertifiedPair& p2, const Catalog& catalog,
                            const SearchBounds& bounds) {
    if (!p1.certified_complete() || !p2.certified_complete())
        throw Error("theorem_check needs two certified complete cotorsion pairs");
    require_hypothesis(variant, p1, p2);

    TheoremReport rep;
    rep.variant = variant;
    rep.pair1_name = "(" + p1.x.name + ", " + p1.y.name + ")";
    rep.pair2_name = "(" + p2.x.name + ", " + p2.y.name + ")";
    rep.bounds = bounds;

    std::set<std::string> inter;
    if (variant == TheoremVariant::one) {
        rep.hypothesis.push_back(p2.y.name + " <= " + p1.x.name);
        for (const auto& n : p1.x.members)
            if (p2.x.members.count(n)) inter.insert(n);
        rep.conclusion_x = ModuleClass{p1.x.name + "^" + p2.x.name, inter};
        rep.closure = extension_closure_smd(p1.y, p2.y, catalog, bounds);
        rep.conclusion_y =
            ModuleClass{"Smd<" + p1.y.name + "," + p2.y.name + ">", rep.closure.members};
        rep.cross_oracle = right_orth(inter, catalog);
        rep.cross_oracle_equal = rep.cross_oracle == rep.closure.members;
    } else {
        rep.hypothesis.push_back(p1.x.name + " <= " + p2.y.name);
        for (const auto& n : p1.y.members)
            if (p2.y.members.count(n)) inter.insert(n);
        rep.conclusion_y = ModuleClass{p1.y.name + "^" + p2.y.name, inter};
        rep.closure = extension_closure_smd(p1.x, p2.x, catalog, bounds);
        rep.conclusion_x =
            ModuleClass{"Smd<" + p1.x.name + "," + p2.x.name + ">", rep.closure.members};
        rep.cross_oracle = left_orth(inter, catalog);
        rep.cross_oracle_equal = rep.cross_oracle == rep.closure.members;
    }

    rep.conclusion_pair = is_cotorsion_pair(rep.conclusion_x, rep.conclusion_y, catalog);
    rep.conclusion_complete = is_complete(rep.conclusion_x, rep.conclusion_y, catalog, bounds);
    if (p1.hereditary && p2.hereditary && *p1.hereditary && *p2.hereditary)
        rep.conclusion_hereditary = is_hereditary(rep.conclusion_x, rep.conclusion_y, catalog);

    /* independent witness generators along the proof's pullback diagrams */
    rep.witnesses_ok = true;
    for (int i = 0; i < catalog.size(); ++i) {
        const Representation& a = catalog.member(i);
        bool ok = true;
        if (variant == TheoremVariant::one) {
            ComposedWitness pc = theorem_precover(a, p1, p2, catalog);
            ok = ok && class_contains(rep.conclusion_x, pc.main.mid(), catalog);
            for (const auto& xm : rep.conclusion_x.members)
                if (ext_space(catalog.member(xm), pc.main.sub()).dim() != 0) ok = false;
            ComposedWitness pe = theorem_preenvelope(a, p1, p2, catalog);
            ok = ok && class_contains(rep.conclusion_x, pe.main.quot(), catalog);
            ok = ok && class_contains(rep.conclusion_y, pe.main.mid(), catalog);
        } else {
            ComposedWitness pc = theorem_precover_dual(a, p1, p2, catalog);
            ok = ok && class_contains(rep.conclusion_x, pc.main.mid(), catalog);
            ok = ok && class_contains(rep.conclusion_y, pc.main.sub(), catalog);
            ComposedWitness pe = theorem_preenvelope_dual(a, p1, p2, catalog);
            ok = ok && class_contains(rep.conclusion_y, pe.main.mid(), catalog);
            ok = ok && class_contains(rep.conclusion_x, pe.main.quot(), catalog);
        }
        if (!ok) rep.witnesses_ok = false;
        ++rep.witnesses_audited;
    }
    return rep;
}

ConverseFailureReport converse_failure_check(const CertifiedPair& d, const CertifiedPair& d1,
                                             const CertifiedPair& d2, const Catalog& catalog) {
    for (const CertifiedPair* p : {&d, &d1, &d2}) {
        if (p->x.members.empty() || p->y.members.empty())
            throw ParseError("malformed input: class '" +
                             (p->x.members.empty() ? p->x.name : p->y.name) + "' is empty");
    }
    ConverseFailureReport rep;
    rep.pairs_complete =
        d.certified_complete() && d1.certified_complete() && d2.certified_complete();
    rep.violators_12 = inclusion_violators(d1.x.members, d2.y.members);
    rep.violators_21 = inclusion_violators(d2.x.members, d1.y.members);
    for (const auto& n : d1.x.members) {
        if (!d2.x.members.count(n)) continue;
        if (!d1.y.members.count(n) && !d2.y.members.count(n)) rep.witnesses.push_back(n);
    }
    rep.ok = rep.pairs_complete && !rep.witnesses.empty() && !rep.violators_12.empty() &&
             !rep.violators_21.empty();
    (void)catalog;
    return rep;
}

ModuleClass class_by_pd(int n, const Catalog& catalog, int gldim_cap) {
    ModuleClass out{"pd<=" + std::to_string(n), {}};
    for (int i = 0; i < catalog.size(); ++i) {
        int d = 0;
        try {
            d = projective_dimension(catalog.member(i), gldim_cap);
        } catch (const Diverges&) {
            throw InfiniteGlobalDimension("member " + catalog.member(i).name() +
                                          " has unbounded projective dimension");
        }
        if (d <= n) out.members.insert(catalog.member(i).name());
    }
    return out;
}

ModuleClass class_by_id(int n, const Catalog& catalog, int gldim_cap) {
    ModuleClass out{"id<=" + std::to_string(n), {}};
    for (int i = 0; i < catalog.size(); ++i) {
        int d = 0;
        try {
            d = injective_dimension(catalog.member(i), gldim_cap);
        } catch (const Diverges&) {
            throw InfiniteGlobalDimension("member " + catalog.member(i).name() +
                                          " has unbounded injective dimension");
        }
        if (d <= n) out.members.insert(catalog.member(i).name());
    }
    return out;
}

}  // namespace ctl
