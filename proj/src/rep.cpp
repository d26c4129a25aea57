#include "ctl/rep.hpp"

#include <numeric>

namespace ctl {

Representation::Representation(std::shared_ptr<const Algebra> alg, std::vector<int> dims,
                               std::vector<FMatrix> maps, std::string name)
    : alg_(std::move(alg)), name_(std::move(name)), dims_(std::move(dims)),
      maps_(std::move(maps)) {
    if (!alg_) throw Error("representation without an algebra");
    if (static_cast<int>(dims_.size()) != alg_->num_vertices())
        throw ShapeMismatch("dimension vector length does not match vertex count");
    if (static_cast<int>(maps_.size()) != alg_->num_arrows())
        throw ShapeMismatch("arrow map count does not match arrow count");
    const Quiver& q = alg_->quiver();
    for (int a = 0; a < alg_->num_arrows(); ++a) {
        if (maps_[a].rows() != dims_[q.arrows[a].to] || maps_[a].cols() != dims_[q.arrows[a].from])
            throw ShapeMismatch("matrix of arrow '" + q.arrows[a].name +
                                "' is inconsistent with the dimension vector");
        if (maps_[a].characteristic() != alg_->characteristic())
            throw CharacteristicMismatch("arrow matrix characteristic differs from the algebra");
    }
    if (!verify_relations(*alg_, dims_, maps_))
        throw ShapeMismatch("arrow matrices violate the algebra relations");
}

Representation Representation::named(std::string name) const {
    Representation r = *this;
    r.name_ = std::move(name);
    return r;
}

int Representation::total_dim() const {
    return std::accumulate(dims_.begin(), dims_.end(), 0);
}

FMatrix Representation::path_action(const QPath& path) const {
    FMatrix m = FMatrix::identity(dims_[path.from], alg_->characteristic());
    for (int a : path.arrows) m = maps_[a] * m;
    return m;
}

bool Representation::operator==(const Representation& o) const {
    return alg_ == o.alg_ && dims_ == o.dims_ && maps_ == o.maps_;
}

void check_same_algebra(const Representation& a, const Representation& b) {
    if (a.algebra() != b.algebra())
        throw AlgebraMismatch("representations live over different algebras");
}

ModuleMap::ModuleMap(Representation source, Representation target,
                     std::vector<FMatrix> components)
    : src_(std::move(source)), dst_(std::move(target)), comp_(std::move(components)) {
    check_same_algebra(src_, dst_);
    const auto alg = src_.algebra();
    if (static_cast<int>(comp_.size()) != alg->num_vertices())
        throw ShapeMismatch("module map needs one component per vertex");
    for (int v = 0; v < alg->num_vertices(); ++v)
        if (comp_[v].rows() != dst_.dim(v) || comp_[v].cols() != src_.dim(v))
            throw ShapeMismatch("module map component shape mismatch at vertex " +
                                alg->quiver().vertices[v]);
    for (int a = 0; a < alg->num_arrows(); ++a) {
        const Arrow& ar = alg->quiver().arrows[a];
        if (dst_.map(a) * comp_[ar.from] != comp_[ar.to] * src_.map(a))
            throw ShapeMismatch("components do not intertwine arrow '" + ar.name + "'");
    }
}

ModuleMap ModuleMap::zero(const Representation& source, const Representation& target) {
    check_same_algebra(source, target);
    std::vector<FMatrix> comps;
    for (int v = 0; v < source.algebra()->num_vertices(); ++v)
        comps.emplace_back(target.dim(v), source.dim(v), source.algebra()->characteristic());
    return ModuleMap(source, target, std::move(comps));
}

ModuleMap ModuleMap::identity(const Representation& m) {
    std::vector<FMatrix> comps;
    for (int v = 0; v < m.algebra()->num_vertices(); ++v)
        comps.push_back(FMatrix::identity(m.dim(v), m.algebra()->characteristic()));
    return ModuleMap(m, m, std::move(comps));
}

bool ModuleMap::is_zero() const {
    for (const auto& c : comp_)
        if (!c.is_zero()) return false;
    return true;
}

bool ModuleMap::injective() const {
    for (const auto& c : comp_)
        if (c.rank() != c.cols()) return false;
    return true;
}

bool ModuleMap::surjective() const {
    for (const auto& c : comp_)
        if (c.rank() != c.rows()) return false;
    return true;
}

bool ModuleMap::is_isomorphism() const {
    return src_.dims() == dst_.dims() && injective();
}

ModuleMap ModuleMap::compose_after(const ModuleMap& first) const {
    if (first.dst_ != src_) throw ShapeMismatch("composition of non-composable module maps");
    std::vector<FMatrix> comps;
    for (std::size_t v = 0; v < comp_.size(); ++v) comps.push_back(comp_[v] * first.comp_[v]);
    return ModuleMap(first.src_, dst_, std::move(comps));
}

ModuleMap ModuleMap::operator+(const ModuleMap& o) const {
    std::vector<FMatrix> comps;
    for (std::size_t v = 0; v < comp_.size(); ++v) comps.push_back(comp_[v] + o.comp_[v]);
    return ModuleMap(src_, dst_, std::move(comps));
}

ModuleMap ModuleMap::operator-(const ModuleMap& o) const {
    std::vector<FMatrix> comps;
    for (std::size_t v = 0; v < comp_.size(); ++v) comps.push_back(comp_[v] - o.comp_[v]);
    return ModuleMap(src_, dst_, std::move(comps));
}

ModuleMap ModuleMap::scaled(std::uint32_t s) const {
    std::vector<FMatrix> comps;
    for (const auto& c : comp_) comps.push_back(c.scaled(s));
    return ModuleMap(src_, dst_, std::move(comps));
}

DirectSum direct_sum(const std::vector<Representation>& parts,
                     std::shared_ptr<const Algebra> alg) {
    const int nv = alg->num_vertices();
    const int na = alg->num_arrows();
    const std::uint32_t p = alg->characteristic();
    for (const auto& m : parts)
        if (m.algebra() != alg) throw AlgebraMismatch("direct sum over mixed algebras");

    std::vector<int> dims(nv, 0);
    for (const auto& m : parts)
        for (int v = 0; v < nv; ++v) dims[v] += m.dim(v);

    std::vector<FMatrix> maps;
    for (int a = 0; a < na; ++a) {
        std::vector<FMatrix> blocks;
        for (const auto& m : parts) blocks.push_back(m.map(a));
        const Arrow& ar = alg->quiver().arrows[a];
        FMatrix block = block_diag(blocks, p);
        if (parts.empty()) block = FMatrix(dims[ar.to], dims[ar.from], p);
        maps.push_back(std::move(block));
    }

    std::string name;
    for (const auto& m : parts) name += (name.empty() ? "" : "+") + m.name();
    Representation sum(alg, dims, maps, name);

    DirectSum out{sum, {}, {}};
    std::vector<int> off(nv, 0);
    for (const auto& m : parts) {
        std::vector<FMatrix> inc, prj;
        for (int v = 0; v < nv; ++v) {
            FMatrix in(dims[v], m.dim(v), p);
            FMatrix pr(m.dim(v), dims[v], p);
            for (int k = 0; k < m.dim(v); ++k) {
                in.set(off[v] + k, k, 1);
                pr.set(k, off[v] + k, 1);
            }
            inc.push_back(std::move(in));
            prj.push_back(std::move(pr));
        }
        out.inclusions.emplace_back(m, sum, std::move(inc));
        out.projections.emplace_back(sum, m, std::move(prj));
        for (int v = 0; v < nv; ++v) off[v] += m.dim(v);
    }
    return out;
}

SubQuotient sub_representation(const Representation& ambient,
                               const std::vector<FMatrix>& spanning) {
    const auto alg = ambient.algebra();
    const int nv = alg->num_vertices();

    std::vector<FMatrix> basis;
    for (int v = 0; v < nv; ++v) basis.push_back(spanning[v].image_basis());

    std::vector<int> dims(nv);
    for (int v = 0; v < nv; ++v) dims[v] = basis[v].cols();

    std::vector<FMatrix> maps;
    for (int a = 0; a < alg->num_arrows(); ++a) {
        const Arrow& ar = alg->quiver().arrows[a];
        auto sol = basis[ar.to].solve_right(ambient.map(a) * basis[ar.from]);
        if (!sol) throw ShapeMismatch("spanning spaces are not closed under the arrow action");
        maps.push_back(std::move(*sol));
    }
    Representation rep(alg, dims, maps);
    ModuleMap incl(rep, ambient, basis);
    return SubQuotient{std::move(rep), std::move(incl)};
}

SubQuotient quotient_representation(const Representation& ambient,
                                    const std::vector<FMatrix>& sub_spanning) {
    const auto alg = ambient.algebra();
    const int nv = alg->num_vertices();
    const std::uint32_t p = alg->characteristic();

    std::vector<FMatrix> proj(nv, FMatrix(0, 0, p));
    std::vector<FMatrix> section(nv, FMatrix(0, 0, p));
    std::vector<int> dims(nv);
    for (int v = 0; v < nv; ++v) {
        FMatrix s = sub_spanning[v].image_basis();
        int n = ambient.dim(v);
        /* greedily extend the subspace by unit vectors to a full basis */
        FMatrix b = s;
        std::vector<int> chosen;
        for (int k = 0; k < n && b.cols() < n; ++k) {
            FMatrix e(n, 1, p);
            e.set(k, 0, 1);
            FMatrix cand = hstack(b, e);
            if (cand.rank() == b.cols() + 1) {
                b = std::move(cand);
                chosen.push_back(k);
            }
        }
        dims[v] = static_cast<int>(chosen.size());
        FMatrix sel(n, dims[v], p);
        for (int j = 0; j < dims[v]; ++j) sel.set(chosen[j], j, 1);
        section[v] = sel;
        auto inv = b.inverse();
        if (!inv) throw ShapeMismatch("quotient basis completion failed");
        /* quotient coordinates = trailing rows of the inverse base change */
        FMatrix pr(dims[v], n, p);
        for (int i = 0; i < dims[v]; ++i)
            for (int j = 0; j < n; ++j) pr.set(i, j, inv->at(s.cols() + i, j));
        proj[v] = pr;
    }

    std::vector<FMatrix> maps;
    for (int a = 0; a < alg->num_arrows(); ++a) {
        const Arrow& ar = alg->quiver().arrows[a];
        maps.push_back(proj[ar.to] * ambient.map(a) * section[ar.from]);
    }
    Representation rep(alg, dims, maps);
    ModuleMap pr(ambient, rep, proj);
    return SubQuotient{std::move(rep), std::move(pr)};
}

SubQuotient kernel_representation(const ModuleMap& f) {
    std::vector<FMatrix> spans;
    for (const auto& c : f.components()) spans.push_back(c.kernel_basis());
    return sub_representation(f.source(), spans);
}

SubQuotient image_representation(const ModuleMap& f) {
    std::vector<FMatrix> spans(f.components().begin(), f.components().end());
    return sub_representation(f.target(), spans);
}

SubQuotient cokernel_representation(const ModuleMap& f) {
    std::vector<FMatrix> spans(f.components().begin(), f.components().end());
    return quotient_representation(f.target(), spans);
}

Representation dual_module(const Representation& m) {
    auto op = m.algebra()->opposite();
    std::vector<FMatrix> maps;
    for (int a = 0; a < m.algebra()->num_arrows(); ++a) maps.push_back(m.map(a).transpose());
    std::string name = m.name().empty() ? "" : "D(" + m.name() + ")";
    return Representation(op, m.dims(), std::move(maps), std::move(name));
}

ModuleMap dual_map(const ModuleMap& f) {
    std::vector<FMatrix> comps;
    for (const auto& c : f.components()) comps.push_back(c.transpose());
    return ModuleMap(dual_module(f.target()), dual_module(f.source()), std::move(comps));
}

ModuleMap inverse_map(const ModuleMap& f) {
    std::vector<FMatrix> comps;
    for (const auto& c : f.components()) {
        auto inv = c.inverse();
        if (!inv) throw ShapeMismatch("inverse of a non-invertible module map");
        comps.push_back(std::move(*inv));
    }
    return ModuleMap(f.target(), f.source(), std::move(comps));
}

}  // namespace ctl
