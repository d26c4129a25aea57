#include "ctl/homology.hpp"

#include <algorithm>
#include <random>

namespace ctl {

namespace {

int flat_size(const Representation& src, const Representation& dst) {
    int n = 0;
    for (int v = 0; v < src.algebra()->num_vertices(); ++v) n += src.dim(v) * dst.dim(v);
    return n;
}

/* Flatten per-vertex components, vertex by vertex, row-major inside each. */
FMatrix flatten(const std::vector<FMatrix>& comps, std::uint32_t p) {
    int n = 0;
    for (const auto& c : comps) n += c.rows() * c.cols();
    FMatrix out(n, 1, p);
    int off = 0;
    for (const auto& c : comps)
        for (int i = 0; i < c.rows(); ++i)
            for (int j = 0; j < c.cols(); ++j) out.set(off++, 0, c.at(i, j));
    return out;
}

}  // namespace

HomSpace::HomSpace(Representation source, Representation target)
    : src_(std::move(source)), dst_(std::move(target)),
      flat_(0, 0, src_.algebra()->characteristic()) {
    check_same_algebra(src_, dst_);
    const auto alg = src_.algebra();
    const std::uint32_t p = alg->characteristic();
    const int nv = alg->num_vertices();

    std::vector<int> offset(nv + 1, 0);
    for (int v = 0; v < nv; ++v) offset[v + 1] = offset[v] + src_.dim(v) * dst_.dim(v);
    const int unknowns = offset[nv];

    int eqs = 0;
    for (int a = 0; a < alg->num_arrows(); ++a) {
        const Arrow& ar = alg->quiver().arrows[a];
        eqs += src_.dim(ar.from) * dst_.dim(ar.to);
    }

    /* N_a F_u - F_v M_a = 0 for every arrow a: u -> v */
    FMatrix sys(eqs, unknowns, p);
    int eq = 0;
    for (int a = 0; a < alg->num_arrows(); ++a) {
        const Arrow& ar = alg->quiver().arrows[a];
        const int su = src_.dim(ar.from), sv = src_.dim(ar.to);
        const int tu = dst_.dim(ar.from), tv = dst_.dim(ar.to);
        const FMatrix& ma = src_.map(a);
        const FMatrix& na = dst_.map(a);
        for (int r = 0; r < tv; ++r)
            for (int c = 0; c < su; ++c) {
                int row = eq + r * su + c;
                for (int k = 0; k < tu; ++k)
                    sys.set(row, offset[ar.from] + k * su + c,
                            static_cast<long long>(na.at(r, k)));
                for (int k = 0; k < sv; ++k) {
                    int col = offset[ar.to] + r * sv + k;
                    long long cur = sys.at(row, col);
                    sys.set(row, col, cur - static_cast<long long>(ma.at(k, c)));
                }
            }
        eq += tv * su;
    }

    FMatrix kb = sys.kernel_basis();
    std::vector<FMatrix> flat_cols;
    for (int j = 0; j < kb.cols(); ++j) {
        FMatrix col = kb.column(j);
        std::vector<FMatrix> comps;
        for (int v = 0; v < nv; ++v) {
            const int su = src_.dim(v);
            FMatrix c(dst_.dim(v), su, p);
            for (int k = 0; k < su * dst_.dim(v); ++k)
                c.set(k / su, k % su, col.at(offset[v] + k, 0));
            comps.push_back(std::move(c));
        }
        basis_.push_back(comps);
        flat_cols.push_back(flatten(comps, p));
    }
    flat_ = FMatrix(flat_size(src_, dst_), static_cast<int>(flat_cols.size()), p);
    for (int j = 0; j < static_cast<int>(flat_cols.size()); ++j)
        for (int i = 0; i < flat_.rows(); ++i) flat_.set(i, j, flat_cols[j].at(i, 0));
}

ModuleMap HomSpace::element(int k) const { return ModuleMap(src_, dst_, basis_[k]); }

ModuleMap HomSpace::combine(const std::vector<std::uint32_t>& coeffs) const {
    if (static_cast<int>(coeffs.size()) != dim())
        throw DimensionMismatch("coefficient count does not match hom dimension");
    const auto alg = src_.algebra();
    std::vector<FMatrix> comps;
    for (int v = 0; v < alg->num_vertices(); ++v)
        comps.emplace_back(dst_.dim(v), src_.dim(v), alg->characteristic());
    for (int k = 0; k < dim(); ++k) {
        if (!coeffs[k]) continue;
        for (int v = 0; v < alg->num_vertices(); ++v)
            comps[v] = comps[v] + basis_[k][v].scaled(coeffs[k]);
    }
    return ModuleMap(src_, dst_, std::move(comps));
}

std::vector<std::uint32_t> HomSpace::coordinates(const ModuleMap& f) const {
    FMatrix target = flatten(f.components(), src_.algebra()->characteristic());
    auto sol = flat_.solve_right(target);
    if (!sol) throw Error("map is not in the hom space");
    std::vector<std::uint32_t> out;
    for (int k = 0; k < dim(); ++k) out.push_back(sol->at(k, 0));
    return out;
}

int hom_dim(const Representation& m, const Representation& n) {
    return HomSpace(m, n).dim();
}

ProjCover projective_cover(const Representation& m) {
    const auto alg = m.algebra();
    const int nv = alg->num_vertices();
    const std::uint32_t p = alg->characteristic();

    /* rad(M)_v = sum of images of arrows into v; top lifts are unit vectors
     * extending a basis of the radical, chosen greedily */
    std::vector<FMatrix> lifts;  // per vertex: columns = chosen lifts
    std::vector<int> top_dims(nv, 0);
    for (int v = 0; v < nv; ++v) {
        std::vector<FMatrix> incoming;
        for (int a = 0; a < alg->num_arrows(); ++a)
            if (alg->quiver().arrows[a].to == v) incoming.push_back(m.map(a));
        FMatrix rad = incoming.empty() ? FMatrix(m.dim(v), 0, p)
                                       : hstack(incoming, m.dim(v), p).image_basis();
        FMatrix b = rad;
        std::vector<int> chosen;
        for (int k = 0; k < m.dim(v) && b.cols() < m.dim(v); ++k) {
            FMatrix e(m.dim(v), 1, p);
            e.set(k, 0, 1);
            FMatrix cand = hstack(b, e);
            if (cand.rank() == b.cols() + 1) {
                b = std::move(cand);
                chosen.push_back(k);
            }
        }
        top_dims[v] = static_cast<int>(chosen.size());
        FMatrix lift(m.dim(v), top_dims[v], p);
        for (int j = 0; j < top_dims[v]; ++j) lift.set(chosen[j], j, 1);
        lifts.push_back(lift);
    }

    std::vector<Representation> summands;
    for (int v = 0; v < nv; ++v)
        for (int c = 0; c < top_dims[v]; ++c) summands.push_back(alg->projective(v));
    DirectSum ds = direct_sum(summands, alg);

    /* cover: the basis path q: v -> w of the c-th copy of P_v goes to q . lift_{v,c} */
    std::vector<FMatrix> comps;
    for (int w = 0; w < nv; ++w) comps.emplace_back(m.dim(w), ds.rep.dim(w), p);
    std::vector<int> off(nv, 0);
    for (int v = 0; v < nv; ++v)
        for (int c = 0; c < top_dims[v]; ++c)
            for (int w = 0; w < nv; ++w) {
                const auto& paths = alg->basis_paths(v, w);
                for (int k = 0; k < static_cast<int>(paths.size()); ++k) {
                    FMatrix image = m.path_action(alg->basis()[paths[k]]) * lifts[v].column(c);
                    for (int r = 0; r < m.dim(w); ++r)
                        comps[w].set(r, off[w] + k, image.at(r, 0));
                }
                off[w] += static_cast<int>(paths.size());
            }

    ModuleMap cover(ds.rep, m, comps);
    if (!cover.surjective()) throw Error("projective cover construction is not surjective");
    return ProjCover{ds.rep, std::move(cover), std::move(top_dims)};
}

SyzygyData syzygy(const Representation& m) {
    ProjCover pc = projective_cover(m);
    SubQuotient ker = kernel_representation(pc.cover);
    return SyzygyData{ker.rep, ker.map, std::move(pc)};
}

Representation cosyzygy(const Representation& m) {
    /* dual of the syzygy of the dual, over the opposite algebra and back */
    return dual_module(syzygy(dual_module(m)).omega);
}

ModuleMap ExtSpace::cocycle(const std::vector<std::uint32_t>& coeffs) const {
    if (static_cast<int>(coeffs.size()) != dim())
        throw DimensionMismatch("coefficient count does not match ext dimension");
    std::vector<std::uint32_t> full(hom_omega.dim(), 0);
    for (int k = 0; k < dim(); ++k) full[rep_indices[k]] = coeffs[k];
    return hom_omega.combine(full);
}

ExtSpace ext_space(const Representation& c, const Representation& a) {
    check_same_algebra(c, a);
    return ext_space_from(syzygy(c), a);
}

ExtSpace ext_space_from(SyzygyData syz, const Representation& a) {
    const Representation& c = syz.cover.cover.target();
    check_same_algebra(c, a);
    const std::uint32_t p = c.algebra()->characteristic();

    HomSpace hom_p0(syz.cover.p0, a);
    HomSpace hom_omega(syz.omega, a);

    /* image of restriction Hom(P0, A) -> Hom(omega, A) in hom_omega coordinates */
    FMatrix img(hom_omega.dim(), hom_p0.dim(), p);
    for (int t = 0; t < hom_p0.dim(); ++t) {
        ModuleMap restricted = hom_p0.element(t).compose_after(syz.inclusion);
        auto coords = hom_omega.coordinates(restricted);
        for (int i = 0; i < hom_omega.dim(); ++i) img.set(i, t, coords[i]);
    }

    /* representatives: hom_omega basis elements extending the image greedily */
    FMatrix span = img.image_basis();
    std::vector<int> reps;
    for (int k = 0; k < hom_omega.dim(); ++k) {
        FMatrix e(hom_omega.dim(), 1, p);
        e.set(k, 0, 1);
        FMatrix cand = hstack(span, e);
        if (cand.rank() == span.cols() + 1) {
            span = std::move(cand);
            reps.push_back(k);
        }
    }
    return ExtSpace{1, c, a, std::move(syz), std::move(hom_omega), std::move(reps)};
}

int ext_dim(const Representation& m, const Representation& n, int degree) {
    if (degree < 1) throw Error("ext degree must be >= 1");
    Representation cur = m;
    for (int i = 1; i < degree; ++i) {
        if (cur.is_zero()) return 0;
        cur = syzygy(cur).omega;
    }
    if (cur.is_zero()) return 0;
    return ext_space(cur, n).dim();
}

int projective_dimension(const Representation& m, int cap) {
    if (m.is_zero()) return 0;
    Representation cur = m;
    for (int d = 0; d <= cap; ++d) {
        SyzygyData s = syzygy(cur);
        if (s.omega.is_zero()) return d;
        cur = s.omega;
    }
    throw Diverges(cap);
}

int injective_dimension(const Representation& m, int cap) {
    return projective_dimension(dual_module(m), cap);
}

int global_dimension(const Algebra& alg, int cap) {
    int g = 0;
    for (int v = 0; v < alg.num_vertices(); ++v)
        g = std::max(g, projective_dimension(alg.simple(v), cap));
    return g;
}

namespace {

bool all_components_invertible(const ModuleMap& f) {
    for (const auto& c : f.components()) {
        if (c.rows() != c.cols()) return false;
        if (c.rank() != c.rows()) return false;
    }
    return true;
}

bool endo_nilpotent(const ModuleMap& f) {
    int n = f.source().total_dim();
    std::vector<FMatrix> acc(f.components());
    int steps = 1;
    while (steps < n + 1) {
        bool zero = true;
        for (const auto& c : acc)
            if (!c.is_zero()) zero = false;
        if (zero) return true;
        for (std::size_t v = 0; v < acc.size(); ++v) acc[v] = acc[v] * acc[v];
        steps *= 2;
    }
    for (const auto& c : acc)
        if (!c.is_zero()) return false;
    return true;
}

/* enumerate coefficient tuples over F_p in ascending base-p order */
bool next_tuple(std::vector<std::uint32_t>& t, std::uint32_t p) {
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (++t[i] < p) return true;
        t[i] = 0;
    }
    return false;
}

std::uint64_t pow_capped(std::uint64_t base, int exp, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        r *= base;
        if (r > cap) return cap + 1;
    }
    return r;
}

}  // namespace

bool is_isomorphic(const Representation& m, const Representation& n, IsoOptions opts) {
    check_same_algebra(m, n);
    if (m.dims() != n.dims()) return false;
    if (m.total_dim() == 0) return true;

    HomSpace hom(m, n);
    int h = hom.dim();
    if (h == 0) return false;
    const std::uint32_t p = m.algebra()->characteristic();

    if (pow_capped(p, h, opts.enum_cap) <= opts.enum_cap) {
        std::vector<std::uint32_t> t(h, 0);
        while (next_tuple(t, p))
            if (all_components_invertible(hom.combine(t))) return true;
        return false;
    }

    /* structured sweep: basis elements and pairwise sums */
    std::vector<std::uint32_t> t(h, 0);
    for (int i = 0; i < h; ++i) {
        t.assign(h, 0);
        t[i] = 1;
        if (all_components_invertible(hom.combine(t))) return true;
        for (int j = i + 1; j < h; ++j) {
            t.assign(h, 0);
            t[i] = 1;
            t[j] = 1;
            if (all_components_invertible(hom.combine(t))) return true;
        }
    }
    std::mt19937_64 rng(opts.seed);
    for (int trial = 0; trial < opts.random_trials; ++trial) {
        for (int i = 0; i < h; ++i) t[i] = static_cast<std::uint32_t>(rng() % p);
        if (all_components_invertible(hom.combine(t))) return true;
    }
    throw Inconclusive("isomorphism search exhausted its caps without a decision (dim Hom = " +
                       std::to_string(h) + ")");
}

bool is_indecomposable(const Representation& m, std::uint64_t enum_cap) {
    if (m.total_dim() == 0) return false;
    HomSpace end(m, m);
    int h = end.dim();
    const std::uint32_t p = m.algebra()->characteristic();
    if (pow_capped(p, h, enum_cap) > enum_cap)
        throw CapExceeded("endomorphism enumeration needs p^" + std::to_string(h) +
                          " elements, beyond the cap");
    /* local endomorphism ring: every element is nilpotent or invertible */
    std::vector<std::uint32_t> t(h, 0);
    while (next_tuple(t, p)) {
        ModuleMap f = end.combine(t);
        if (!all_components_invertible(f) && !endo_nilpotent(f)) return false;
    }
    return true;
}

Catalog::Catalog(std::shared_ptr<const Algebra> alg, std::vector<Representation> members)
    : alg_(std::move(alg)), members_(std::move(members)) {
    for (int i = 0; i < static_cast<int>(members_.size()); ++i) {
        const Representation& m = members_[i];
        if (m.algebra() != alg_) throw AlgebraMismatch("catalog member over a different algebra");
        if (m.name().empty()) throw ParseError("catalog members must be named");
        if (m.is_zero()) throw ParseError("zero module cannot be a catalog member");
        if (!index_.emplace(m.name(), i).second)
            throw ParseError("duplicate catalog name '" + m.name() + "'");
    }
    ext1_cache_.assign(members_.size(), std::vector<int>(members_.size(), -1));
    syz_cache_.assign(members_.size(), std::nullopt);
}

const Representation& Catalog::member(const std::string& name) const {
    return members_[index(name)];
}

int Catalog::index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw UnknownName("unknown catalog member '" + name + "'");
    return it->second;
}

bool Catalog::contains(const std::string& name) const { return index_.count(name) > 0; }

std::vector<std::string> Catalog::names() const {
    std::vector<std::string> out;
    for (const auto& m : members_) out.push_back(m.name());
    return out;
}

std::set<std::string> Catalog::name_set() const {
    std::set<std::string> out;
    for (const auto& m : members_) out.insert(m.name());
    return out;
}

const SyzygyData& Catalog::syzygy_of(int i) const {
    if (!syz_cache_[i]) syz_cache_[i] = syzygy(members_[i]);
    return *syz_cache_[i];
}

int Catalog::ext1(int i, int j) const {
    int& slot = ext1_cache_[i][j];
    if (slot < 0) slot = ext_space(members_[i], members_[j]).dim();
    return slot;
}

int Catalog::ext1(const std::string& a, const std::string& b) const {
    return ext1(index(a), index(b));
}

Representation Catalog::sum_of(const std::map<std::string, int>& multiset) const {
    std::vector<Representation> parts;
    for (const auto& [name, count] : multiset)
        for (int c = 0; c < count; ++c) parts.push_back(member(name));
    return direct_sum(parts, alg_).rep;
}

namespace {

/* One peeling step: a catalog member U with a split embedding into rest.
 * Candidates f, g run over hom bases; a composite g o f that is invertible
 * in End(U) yields the retraction r = (g o f)^-1 o g by a linear solve.
 * Complete for catalog members with local endomorphism rings. */
struct PeelStep {
    int member = -1;
    std::optional<ModuleMap> embedding;   // U -> rest
    std::optional<ModuleMap> complement;  // ker(f o r) -> rest
};

PeelStep peel_summand(const Representation& rest, const Catalog& catalog) {
    PeelStep step;
    for (int u = 0; u < catalog.size(); ++u) {
        const Representation& cand = catalog.member(u);
        bool fits = true;
        for (int v = 0; v < rest.algebra()->num_vertices(); ++v)
            if (cand.dim(v) > rest.dim(v)) fits = false;
        if (!fits) continue;

        HomSpace in(cand, rest), back(rest, cand);
        for (int i = 0; i < in.dim(); ++i) {
            ModuleMap f = in.element(i);
            for (int j = 0; j < back.dim(); ++j) {
                ModuleMap g = back.element(j);
                ModuleMap e = g.compose_after(f);  // element of End(cand)
                if (!all_components_invertible(e)) continue;
                std::vector<FMatrix> rcomp;
                for (int v = 0; v < rest.algebra()->num_vertices(); ++v) {
                    auto sol = e.component(v).solve_right(g.component(v));
                    if (!sol) throw Error("retraction solve failed unexpectedly");
                    rcomp.push_back(std::move(*sol));
                }
                ModuleMap r(rest, cand, std::move(rcomp));
                ModuleMap idem = f.compose_after(r);
                SubQuotient comp = kernel_representation(idem);
                step.member = u;
                step.embedding = std::move(f);
                step.complement = std::move(comp.map);
                return step;
            }
        }
    }
    return step;
}

}  // namespace

OrderedDecomposition decompose_with_iso(const Representation& m, const Catalog& catalog) {
    const auto alg = m.algebra();
    std::vector<std::string> order;
    /* per peeled summand: its embedding into m (composed through complements) */
    std::vector<ModuleMap> embeddings;
    Representation rest = m;
    ModuleMap into_m = ModuleMap::identity(m);
    while (rest.total_dim() > 0) {
        PeelStep step = peel_summand(rest, catalog);
        if (step.member < 0)
            throw ResidueNotInCatalog("nonzero remainder of total dimension " +
                                      std::to_string(rest.total_dim()) +
                                      " admits no splitting catalog summand");
        order.push_back(catalog.member(step.member).name());
        embeddings.push_back(into_m.compose_after(*step.embedding));
        into_m = into_m.compose_after(*step.complement);
        rest = step.complement->source();
    }

    std::vector<Representation> parts;
    for (const auto& name : order) parts.push_back(catalog.member(name));
    DirectSum ds = direct_sum(parts, alg);
    std::vector<FMatrix> comps;
    for (int v = 0; v < alg->num_vertices(); ++v) {
        std::vector<FMatrix> blocks;
        for (const auto& e : embeddings) blocks.push_back(e.component(v));
        comps.push_back(hstack(blocks, m.dim(v), alg->characteristic()));
    }
    ModuleMap iso(ds.rep, m, std::move(comps));
    if (!iso.is_isomorphism()) throw Error("decomposition assembly is not an isomorphism");
    return OrderedDecomposition{std::move(order), std::move(iso)};
}

std::map<std::string, int> decompose(const Representation& m, const Catalog& catalog) {
    std::map<std::string, int> out;
    for (const auto& name : decompose_with_iso(m, catalog).order) out[name] += 1;
    return out;
}

CatalogReport catalog_verify(const Catalog& catalog) {
    CatalogReport rep;
    rep.count = catalog.size();
    rep.all_ok = true;
    for (int i = 0; i < catalog.size(); ++i) {
        const Representation& m = catalog.member(i);
        MemberReport mr;
        mr.name = m.name();
        mr.relations_ok = verify_relations(*catalog.algebra(), m.dims(), m.maps());
        mr.indecomposable = is_indecomposable(m);
        for (int j = 0; j < i; ++j)
            if (is_isomorphic(m, catalog.member(j)))
                mr.isomorphic_to.push_back(catalog.member(j).name());
        if (!mr.relations_ok || !mr.indecomposable || !mr.isomorphic_to.empty())
            rep.all_ok = false;
        rep.members.push_back(std::move(mr));
    }
    return rep;
}

}  // namespace ctl
