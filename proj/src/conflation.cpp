#include "ctl/conflation.hpp"

#include <algorithm>
#include <functional>

namespace ctl {

namespace {

FMatrix flatten_components(const std::vector<FMatrix>& comps, std::uint32_t p) {
    int n = 0;
    for (const auto& c : comps) n += c.rows() * c.cols();
    FMatrix out(n, 1, p);
    int off = 0;
    for (const auto& c : comps)
        for (int i = 0; i < c.rows(); ++i)
            for (int j = 0; j < c.cols(); ++j) out.set(off++, 0, c.at(i, j));
    return out;
}

/* unique D with D o pi = f, for pi surjective and ker pi <= ker f */
ModuleMap factor_through_quotient(const ModuleMap& pi, const ModuleMap& f) {
    std::vector<FMatrix> comps;
    for (std::size_t v = 0; v < pi.components().size(); ++v) {
        auto sol = pi.component(v).transpose().solve_right(f.component(v).transpose());
        if (!sol) throw ShapeMismatch("map does not factor through the quotient");
        comps.push_back(sol->transpose());
    }
    return ModuleMap(pi.target(), f.target(), std::move(comps));
}

/* unique L with incl o L = f, for incl injective and im f <= im incl */
ModuleMap factor_through_sub(const ModuleMap& incl, const ModuleMap& f) {
    std::vector<FMatrix> comps;
    for (std::size_t v = 0; v < incl.components().size(); ++v) {
        auto sol = incl.component(v).solve_right(f.component(v));
        if (!sol) throw ShapeMismatch("map does not factor through the subobject");
        comps.push_back(std::move(*sol));
    }
    return ModuleMap(f.source(), incl.source(), std::move(comps));
}

}  // namespace

Conflation::Conflation(ModuleMap inflation, ModuleMap deflation)
    : infl_(std::move(inflation)), defl_(std::move(deflation)) {
    if (infl_.target() != defl_.source())
        throw ShapeMismatch("conflation legs do not share the middle term");
    if (!infl_.injective()) throw ShapeMismatch("inflation is not injective");
    if (!defl_.surjective()) throw ShapeMismatch("deflation is not surjective");
    if (!defl_.compose_after(infl_).is_zero())
        throw ShapeMismatch("deflation o inflation is nonzero");
    for (int v = 0; v < static_cast<int>(infl_.components().size()); ++v)
        if (mid().dim(v) != sub().dim(v) + quot().dim(v))
            throw ShapeMismatch("conflation is not dim-exact at the middle term");
}

Conflation split_conflation(const Representation& sub, const Representation& quot) {
    DirectSum ds = direct_sum({sub, quot}, sub.algebra());
    return Conflation(ds.inclusions[0], ds.projections[1]);
}

Conflation trivial_precover(const Representation& a) {
    Representation zero = a.algebra()->zero_module();
    return Conflation(ModuleMap::zero(zero, a), ModuleMap::identity(a));
}

Conflation trivial_preenvelope(const Representation& a) {
    Representation zero = a.algebra()->zero_module();
    return Conflation(ModuleMap::identity(a), ModuleMap::zero(a, zero));
}

Conflation conflation_from_inclusion(const ModuleMap& inclusion) {
    SubQuotient q = quotient_representation(
        inclusion.target(), std::vector<FMatrix>(inclusion.components()));
    return Conflation(inclusion, q.map);
}

Conflation conflation_from_surjection(const ModuleMap& surjection) {
    SubQuotient k = kernel_representation(surjection);
    return Conflation(k.map, surjection);
}

Conflation direct_sum_conflations(const std::vector<Conflation>& parts) {
    if (parts.empty()) throw Error("direct sum of zero conflations");
    auto alg = parts[0].sub().algebra();
    std::vector<Representation> subs, mids, quots;
    for (const auto& c : parts) {
        subs.push_back(c.sub());
        mids.push_back(c.mid());
        quots.push_back(c.quot());
    }
    DirectSum s = direct_sum(subs, alg), m = direct_sum(mids, alg), q = direct_sum(quots, alg);
    std::vector<FMatrix> icomp, dcomp;
    for (int v = 0; v < alg->num_vertices(); ++v) {
        std::vector<FMatrix> ib, db;
        for (const auto& c : parts) {
            ib.push_back(c.inflation().component(v));
            db.push_back(c.deflation().component(v));
        }
        icomp.push_back(block_diag(ib, alg->characteristic()));
        dcomp.push_back(block_diag(db, alg->characteristic()));
    }
    return Conflation(ModuleMap(s.rep, m.rep, icomp), ModuleMap(m.rep, q.rep, dcomp));
}

bool is_split(const Conflation& c) {
    const std::uint32_t p = c.sub().algebra()->characteristic();
    HomSpace hom(c.mid(), c.sub());
    if (hom.dim() == 0) return c.sub().is_zero();
    FMatrix sys(0, 0, p);
    {
        std::vector<FMatrix> cols;
        for (int t = 0; t < hom.dim(); ++t)
            cols.push_back(flatten_components(
                hom.element(t).compose_after(c.inflation()).components(), p));
        sys = FMatrix(cols[0].rows(), hom.dim(), p);
        for (int j = 0; j < hom.dim(); ++j)
            for (int i = 0; i < sys.rows(); ++i) sys.set(i, j, cols[j].at(i, 0));
    }
    FMatrix id = flatten_components(ModuleMap::identity(c.sub()).components(), p);
    return sys.solve_right(id).has_value();
}

Pullback pullback(const ModuleMap& f, const ModuleMap& g) {
    if (f.target() != g.target()) throw ShapeMismatch("pullback needs a common target");
    auto alg = f.source().algebra();
    DirectSum sum = direct_sum({f.source(), g.source()}, alg);
    std::vector<FMatrix> comps;
    for (int v = 0; v < alg->num_vertices(); ++v)
        comps.push_back(hstack(f.component(v), g.component(v).negated()));
    ModuleMap combined(sum.rep, f.target(), std::move(comps));
    SubQuotient ker = kernel_representation(combined);
    return Pullback{ker.rep, sum.projections[0].compose_after(ker.map),
                    sum.projections[1].compose_after(ker.map), ker.map};
}

Pushout pushout(const ModuleMap& f, const ModuleMap& g) {
    if (f.source() != g.source()) throw ShapeMismatch("pushout needs a common source");
    auto alg = f.target().algebra();
    DirectSum sum = direct_sum({f.target(), g.target()}, alg);
    std::vector<FMatrix> comps;
    for (int v = 0; v < alg->num_vertices(); ++v)
        comps.push_back(vstack(f.component(v), g.component(v).negated()));
    ModuleMap combined(f.source(), sum.rep, std::move(comps));
    SubQuotient coker = cokernel_representation(combined);
    return Pushout{coker.rep, coker.map.compose_after(sum.inclusions[0]),
                   coker.map.compose_after(sum.inclusions[1]), coker.map};
}

Conflation realize_extension(const ExtSpace& ext, const std::vector<std::uint32_t>& coeffs) {
    const Representation& a = ext.target;
    const Representation& c = ext.source;
    const Representation& p0 = ext.syz.cover.p0;
    auto alg = a.algebra();
    const std::uint32_t p = alg->characteristic();

    ModuleMap phi = ext.cocycle(coeffs);  // omega C -> A

    DirectSum sum = direct_sum({a, p0}, alg);
    /* submodule generated by (phi(x), -incl(x)) */
    std::vector<FMatrix> span;
    for (int v = 0; v < alg->num_vertices(); ++v)
        span.push_back(vstack(phi.component(v), ext.syz.inclusion.component(v).negated()));
    SubQuotient q = quotient_representation(sum.rep, span);

    ModuleMap inflation = q.map.compose_after(sum.inclusions[0]);
    /* deflation induced by (0, cover) on the quotient */
    std::vector<FMatrix> zero_cover;
    for (int v = 0; v < alg->num_vertices(); ++v)
        zero_cover.push_back(hstack(FMatrix(c.dim(v), a.dim(v), p),
                                    ext.syz.cover.cover.component(v)));
    ModuleMap onto_c(sum.rep, c, std::move(zero_cover));
    ModuleMap deflation = factor_through_quotient(q.map, onto_c);
    return Conflation(std::move(inflation), std::move(deflation));
}

namespace {

/* ascending base-p counter; with dedup only tuples whose first nonzero
 * coordinate is 1 are kept (one representative per scalar orbit) */
bool next_tuple(std::vector<std::uint32_t>& t, std::uint32_t p) {
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (++t[i] < p) return true;
        t[i] = 0;
    }
    return false;
}

bool canonical_tuple(const std::vector<std::uint32_t>& t) {
    for (std::uint32_t v : t) {
        if (v == 0) continue;
        return v == 1;
    }
    return true;  // zero tuple
}

std::uint64_t class_count(std::uint32_t p, int d, bool dedup, std::uint64_t cap) {
    std::uint64_t total = 1;
    for (int i = 0; i < d; ++i) {
        total *= p;
        if (total > cap * p) return cap + 1;
    }
    return dedup ? 1 + (total - 1) / (p - 1) : total;
}

}  // namespace

std::set<std::map<std::string, int>> enumerate_middle_terms(const Representation& c,
                                                            const Representation& a,
                                                            const Catalog& catalog,
                                                            bool scalar_dedup,
                                                            std::uint64_t enum_cap) {
    ExtSpace es = ext_space(c, a);
    const std::uint32_t p = c.algebra()->characteristic();
    if (class_count(p, es.dim(), scalar_dedup, enum_cap) > enum_cap)
        throw CapExceeded("Ext space of dimension " + std::to_string(es.dim()) +
                          " exceeds the class enumeration cap");
    std::set<std::map<std::string, int>> out;
    std::vector<std::uint32_t> t(es.dim(), 0);
    do {
        if (scalar_dedup && !canonical_tuple(t)) continue;
        out.insert(decompose(realize_extension(es, t).mid(), catalog));
    } while (next_tuple(t, p));
    return out;
}

namespace {

/* count vectors with sum = total, entry caps, lexicographically descending:
 * catalog-earlier members are exhausted first */
void enumerate_multisets(const std::vector<std::string>& names, int total, int mult_cap,
                         std::size_t pos, std::map<std::string, int>& cur,
                         const std::function<bool(const std::map<std::string, int>&)>& visit,
                         bool& stop) {
    if (stop) return;
    if (total == 0) {
        stop = visit(cur);
        return;
    }
    if (pos >= names.size()) return;
    int take = std::min(total, mult_cap);
    for (int c = take; c >= 0 && !stop; --c) {
        if (c > 0) cur[names[pos]] = c;
        enumerate_multisets(names, total - c, mult_cap, pos + 1, cur, visit, stop);
        cur.erase(names[pos]);
    }
}

struct RelevantInfo {
    std::vector<std::string> names;  // catalog order
    int max_ext = 0;
};

}  // namespace

SearchResult search_special_precover(const Representation& a,
                                     const std::set<std::string>& x_members,
                                     const std::set<std::string>& y_members,
                                     const Catalog& catalog, const SearchBounds& bounds) {
    SearchResult res;
    const std::uint32_t p = a.algebra()->characteristic();

    /* A already in add(X): the trivial conflation 0 >--> A ==>> A */
    bool trivially_in = false;
    try {
        auto dec = decompose(a, catalog);
        trivially_in = true;
        for (const auto& [name, cnt] : dec)
            if (!x_members.count(name)) trivially_in = false;
    } catch (const ResidueNotInCatalog&) {
    }
    if (trivially_in) {
        res.status = SearchStatus::found;
        res.witness = trivial_precover(a);
        return res;
    }

    SyzygyData syz = syzygy(a);

    /* members with vanishing Ext^1(A, U) only ever contribute split summands,
     * so restricting the sums to the others loses no witness */
    RelevantInfo rel;
    for (int i = 0; i < catalog.size(); ++i) {
        const std::string name = catalog.member(i).name();
        if (!y_members.count(name)) continue;
        int d = ext_space_from(syz, catalog.member(i)).dim();
        if (d > 0) {
            rel.names.push_back(name);
            rel.max_ext = std::max(rel.max_ext, d);
        }
    }
    if (rel.names.empty()) {
        /* every admissible conflation splits; the trivial one already failed */
        res.status = SearchStatus::impossible;
        return res;
    }

    int mult_cap = bounds.mult_cap < 0 ? std::max(1, rel.max_ext) : bounds.mult_cap;
    for (int total = 1; total <= bounds.max_summands && res.status != SearchStatus::found;
         ++total) {
        std::map<std::string, int> cur;
        bool stop = false;
        enumerate_multisets(
            rel.names, total, mult_cap, 0, cur,
            [&](const std::map<std::string, int>& multi) -> bool {
                Representation y0 = catalog.sum_of(multi);
                ExtSpace es = ext_space_from(syz, y0);
                if (class_count(p, es.dim(), true, bounds.enum_cap) > bounds.enum_cap) {
                    res.cap_hit = true;
                    return false;
                }
                std::vector<std::uint32_t> t(es.dim(), 0);
                do {
                    if (!canonical_tuple(t)) continue;
                    Conflation conf = realize_extension(es, t);
                    std::map<std::string, int> md;
                    try {
                        md = decompose(conf.mid(), catalog);
                    } catch (const ResidueNotInCatalog&) {
                        continue;
                    }
                    bool inside = true;
                    for (const auto& [name, cnt] : md)
                        if (!x_members.count(name)) inside = false;
                    if (inside) {
                        res.status = SearchStatus::found;
                        res.witness = std::move(conf);
                        res.partner_multiset = multi;
                        res.class_coeffs = t;
                        return true;
                    }
                } while (next_tuple(t, p));
                return false;
            },
            stop);
    }
    return res;
}

SearchResult search_special_preenvelope(const Representation& a,
                                        const std::set<std::string>& x_members,
                                        const std::set<std::string>& y_members,
                                        const Catalog& catalog, const SearchBounds& bounds) {
    SearchResult res;
    const std::uint32_t p = a.algebra()->characteristic();

    bool trivially_in = false;
    try {
        auto dec = decompose(a, catalog);
        trivially_in = true;
        for (const auto& [name, cnt] : dec)
            if (!y_members.count(name)) trivially_in = false;
    } catch (const ResidueNotInCatalog&) {
    }
    if (trivially_in) {
        res.status = SearchStatus::found;
        res.witness = trivial_preenvelope(a);
        return res;
    }

    RelevantInfo rel;
    for (int i = 0; i < catalog.size(); ++i) {
        const std::string name = catalog.member(i).name();
        if (!x_members.count(name)) continue;
        int d = ext_space(catalog.member(i), a).dim();
        if (d > 0) {
            rel.names.push_back(name);
            rel.max_ext = std::max(rel.max_ext, d);
        }
    }
    if (rel.names.empty()) {
        res.status = SearchStatus::impossible;
        return res;
    }

    int mult_cap = bounds.mult_cap < 0 ? std::max(1, rel.max_ext) : bounds.mult_cap;
    for (int total = 1; total <= bounds.max_summands && res.status != SearchStatus::found;
         ++total) {
        std::map<std::string, int> cur;
        bool stop = false;
        enumerate_multisets(
            rel.names, total, mult_cap, 0, cur,
            [&](const std::map<std::string, int>& multi) -> bool {
                Representation x0 = catalog.sum_of(multi);
                ExtSpace es = ext_space(x0, a);
                if (class_count(p, es.dim(), true, bounds.enum_cap) > bounds.enum_cap) {
                    res.cap_hit = true;
                    return false;
                }
                std::vector<std::uint32_t> t(es.dim(), 0);
                do {
                    if (!canonical_tuple(t)) continue;
                    Conflation conf = realize_extension(es, t);
                    std::map<std::string, int> md;
                    try {
                        md = decompose(conf.mid(), catalog);
                    } catch (const ResidueNotInCatalog&) {
                        continue;
                    }
                    bool inside = true;
                    for (const auto& [name, cnt] : md)
                        if (!y_members.count(name)) inside = false;
                    if (inside) {
                        res.status = SearchStatus::found;
                        res.witness = std::move(conf);
                        res.partner_multiset = multi;
                        res.class_coeffs = t;
                        return true;
                    }
                } while (next_tuple(t, p));
                return false;
            },
            stop);
    }
    return res;
}

ComposedWitness compose_precover(const Conflation& c1, const Conflation& c2) {
    if (c2.quot() != c1.mid())
        throw ShapeMismatch("second conflation must end at the middle term of the first");
    Pullback pb = pullback(c1.inflation(), c2.deflation());
    Conflation main(pb.to_second, c1.deflation().compose_after(c2.deflation()));
    Conflation column = conflation_from_surjection(pb.to_first);
    return ComposedWitness{std::move(main), std::move(column)};
}

ComposedWitness compose_preenvelope(const Conflation& c1, const Conflation& c2) {
    if (c2.quot() != c1.quot())
        throw ShapeMismatch("conflations must share their quotient term");
    Pullback pb = pullback(c1.deflation(), c2.deflation());
    /* induced A -> P from (inflation, 0) */
    auto alg = c1.sub().algebra();
    std::vector<FMatrix> into_sum;
    for (int v = 0; v < alg->num_vertices(); ++v)
        into_sum.push_back(vstack(c1.inflation().component(v),
                                  FMatrix(c2.mid().dim(v), c1.sub().dim(v),
                                          alg->characteristic())));
    ModuleMap combined(c1.sub(), pb.inclusion.target(), std::move(into_sum));
    ModuleMap induced = factor_through_sub(pb.inclusion, combined);
    Conflation main(induced, pb.to_second);
    Conflation column = conflation_from_surjection(pb.to_first);
    return ComposedWitness{std::move(main), std::move(column)};
}

ComposedWitness compose_preenvelope_dual(const Conflation& c1, const Conflation& c2) {
    if (c2.sub() != c1.mid())
        throw ShapeMismatch("second conflation must start at the middle term of the first");
    ModuleMap composed = c2.inflation().compose_after(c1.inflation());
    Conflation main = conflation_from_inclusion(composed);
    /* column: W -->> X1 induced from the deflation of the second conflation */
    ModuleMap onto_x1 = factor_through_quotient(main.deflation(), c2.deflation());
    Conflation column = conflation_from_surjection(onto_x1);
    return ComposedWitness{std::move(main), std::move(column)};
}

ComposedWitness compose_precover_dual(const Conflation& c1, const Conflation& c2) {
    if (c2.sub() != c1.sub())
        throw ShapeMismatch("conflations must share their subterm");
    Pushout po = pushout(c1.inflation(), c2.inflation());
    auto alg = c1.sub().algebra();
    /* deflation Q -->> A induced by (deflation, 0) */
    std::vector<FMatrix> onto_a;
    for (int v = 0; v < alg->num_vertices(); ++v)
        onto_a.push_back(hstack(c1.deflation().component(v),
                                FMatrix(c1.quot().dim(v), c2.mid().dim(v),
                                        alg->characteristic())));
    ModuleMap combined(po.projection.source(), c1.quot(), std::move(onto_a));
    ModuleMap deflation = factor_through_quotient(po.projection, combined);
    Conflation main(po.from_second, deflation);
    Conflation column = conflation_from_inclusion(po.from_first);
    return ComposedWitness{std::move(main), std::move(column)};
}

}  // namespace ctl
