#include "ctl/quiver.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "ctl/rep.hpp"

namespace ctl {

int Quiver::vertex_index(const std::string& name) const {
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
        if (vertices[i] == name) return i;
    throw UnknownName("unknown vertex '" + name + "'");
}

int Quiver::arrow_index(const std::string& name) const {
    for (int i = 0; i < static_cast<int>(arrows.size()); ++i)
        if (arrows[i].name == name) return i;
    throw UnknownName("unknown arrow '" + name + "'");
}

void Quiver::validate() const {
    std::set<std::string> seen;
    for (const auto& v : vertices)
        if (!seen.insert(v).second) throw ParseError("duplicate vertex name '" + v + "'");
    seen.clear();
    int nv = static_cast<int>(vertices.size());
    for (const auto& a : arrows) {
        if (!seen.insert(a.name).second) throw ParseError("duplicate arrow name '" + a.name + "'");
        if (a.from < 0 || a.from >= nv || a.to < 0 || a.to >= nv)
            throw ParseError("arrow '" + a.name + "' has endpoints outside the vertex set");
    }
}

static void validate_relations(const AlgebraPresentation& pres) {
    const Quiver& q = pres.quiver;
    for (const Relation& rel : pres.relations) {
        int from = -1, to = -1;
        for (const RelationTerm& t : rel.terms) {
            if (t.arrows.size() < 2)
                throw ParseError("relation path of length < 2 (ideal must be admissible)");
            for (std::size_t k = 0; k < t.arrows.size(); ++k) {
                int a = t.arrows[k];
                if (a < 0 || a >= static_cast<int>(q.arrows.size()))
                    throw ParseError("relation refers to an unknown arrow");
                if (k > 0 && q.arrows[t.arrows[k - 1]].to != q.arrows[a].from)
                    throw ParseError("relation path is not composable");
            }
            int tf = q.arrows[t.arrows.front()].from;
            int tt = q.arrows[t.arrows.back()].to;
            if (from < 0) {
                from = tf;
                to = tt;
            } else if (tf != from || tt != to) {
                throw ParseError("relation terms are not parallel paths");
            }
        }
    }
}

std::shared_ptr<const Algebra> Algebra::build(AlgebraPresentation pres, int length_cap) {
    pres.quiver.validate();
    if (!is_prime(pres.characteristic))
        throw ParseError("characteristic " + std::to_string(pres.characteristic) +
                         " is not prime");
    validate_relations(pres);
    auto alg = std::shared_ptr<Algebra>(new Algebra());
    alg->pres_ = std::move(pres);
    alg->cap_ = length_cap >= 0 ? length_cap : 2 * alg->num_arrows() + 4;
    alg->compute_basis();
    return alg;
}

namespace {

struct GenInfo {
    int src = 0, tgt = 0, maxlen = 0;
    std::vector<std::pair<std::uint32_t, std::vector<int>>> terms;  // (coeff mod p, arrows)
};

GenInfo make_gen(const Relation& rel, const Quiver& q, std::uint32_t p) {
    GenInfo g;
    for (const RelationTerm& t : rel.terms) {
        std::uint32_t c = FScalar(t.coeff, p).value;
        if (c == 0) continue;
        if (g.terms.empty()) {
            g.src = q.arrows[t.arrows.front()].from;
            g.tgt = q.arrows[t.arrows.back()].to;
        }
        g.maxlen = std::max(g.maxlen, static_cast<int>(t.arrows.size()));
        g.terms.push_back({c, t.arrows});
    }
    return g;
}

}  // namespace

void Algebra::compute_basis() {
    const Quiver& q = pres_.quiver;
    const int nv = num_vertices();
    const int na = num_arrows();
    const std::uint32_t p = pres_.characteristic;

    std::vector<Relation> gens = pres_.relations;

    for (int attempt = 0; attempt < 32; ++attempt) {
        basis_.clear();
        rewrite_.clear();
        by_pair_.assign(nv, std::vector<std::vector<int>>(nv));

        std::vector<GenInfo> gi;
        for (const Relation& rel : gens) {
            GenInfo g = make_gen(rel, q, p);
            if (!g.terms.empty()) gi.push_back(std::move(g));
        }

        std::vector<Relation> extras;
        std::vector<std::vector<QPath>> raw(1);
        for (int i = 0; i < nv; ++i) raw[0].push_back(QPath{i, i, {}});

        int L = 0;
        while (true) {
            if (L > cap_) throw NonTerminating(cap_);
            const std::vector<QPath>& stratum = raw[L];

            std::map<std::pair<int, int>, std::vector<int>> groups;
            for (int k = 0; k < static_cast<int>(stratum.size()); ++k)
                groups[{stratum[k].from, stratum[k].to}].push_back(k);

            int newly = 0;
            for (const auto& [ij, locals] : groups) {
                const auto [i, j] = ij;
                const int nraw = static_cast<int>(locals.size());
                const std::vector<int>& nf_list = by_pair_[i][j];
                const int nold = static_cast<int>(nf_list.size());

                std::map<std::vector<int>, int> local_of;
                for (int k = 0; k < nraw; ++k) local_of[stratum[locals[k]].arrows] = k;
                std::map<int, int> nf_pos;
                for (int k = 0; k < nold; ++k) nf_pos[nf_list[k]] = k;

                /* span generated by relations composed with paths on both sides */
                std::vector<std::vector<std::uint32_t>> rows;
                for (const GenInfo& g : gi) {
                    int free_len = L - g.maxlen;
                    if (free_len < 0) continue;
                    for (int lu = 0; lu <= free_len; ++lu) {
                        int lv = free_len - lu;
                        if (lu >= static_cast<int>(raw.size()) ||
                            lv >= static_cast<int>(raw.size()))
                            continue;
                        for (const QPath& u : raw[lu]) {
                            if (u.from != i || u.to != g.src) continue;
                            for (const QPath& v : raw[lv]) {
                                if (v.from != g.tgt || v.to != j) continue;
                                std::vector<std::uint32_t> row(nraw + nold, 0u);
                                for (const auto& [c, mid] : g.terms) {
                                    std::vector<int> w = u.arrows;
                                    w.insert(w.end(), mid.begin(), mid.end());
                                    w.insert(w.end(), v.arrows.begin(), v.arrows.end());
                                    if (static_cast<int>(w.size()) == L) {
                                        row[local_of.at(w)] = (row[local_of.at(w)] + c) % p;
                                    } else {
                                        const PathCombo& rc = rewrite_.at({i, w});
                                        for (const auto& [bi, bc] : rc) {
                                            int pos = nraw + nf_pos.at(bi);
                                            row[pos] = static_cast<std::uint32_t>(
                                                (row[pos] + static_cast<std::uint64_t>(c) * bc) %
                                                p);
                                        }
                                    }
                                }
                                rows.push_back(std::move(row));
                            }
                        }
                    }
                }

                std::vector<int> pivots;
                FMatrix red(0, 0, p);
                if (!rows.empty()) {
                    FMatrix m(static_cast<int>(rows.size()), nraw + nold, p);
                    for (int r = 0; r < m.rows(); ++r)
                        for (int c = 0; c < m.cols(); ++c) m.set(r, c, rows[r][c]);
                    auto ech = m.rref();
                    red = ech.mat;
                    pivots = ech.pivots;
                }

                std::vector<bool> reducible(nraw, false);
                bool restart_here = false;
                for (std::size_t r = 0; r < pivots.size(); ++r) {
                    if (pivots[r] < nraw) {
                        reducible[pivots[r]] = true;
                    } else {
                        /* a committed normal form collapsed: fold the row back in as an
                         * extra generator and redo the reduction from scratch */
                        Relation extra;
                        for (int c = nraw; c < red.cols(); ++c)
                            if (red.at(static_cast<int>(r), c))
                                extra.terms.push_back(RelationTerm{
                                    static_cast<long long>(red.at(static_cast<int>(r), c)),
                                    basis_[nf_list[c - nraw]].arrows});
                        extras.push_back(std::move(extra));
                        restart_here = true;
                    }
                }
                if (restart_here) continue;

                std::vector<int> new_idx(nraw, -1);
                for (int k = 0; k < nraw; ++k) {
                    if (reducible[k]) continue;
                    int idx = static_cast<int>(basis_.size());
                    basis_.push_back(stratum[locals[k]]);
                    by_pair_[i][j].push_back(idx);
                    rewrite_[{i, stratum[locals[k]].arrows}] = PathCombo{{idx, 1u}};
                    new_idx[k] = idx;
                    ++newly;
                }
                for (std::size_t r = 0; r < pivots.size(); ++r) {
                    if (pivots[r] >= nraw) continue;
                    PathCombo combo;
                    for (int c = pivots[r] + 1; c < red.cols(); ++c) {
                        std::uint32_t e = red.at(static_cast<int>(r), c);
                        if (!e) continue;
                        int bi = c < nraw ? new_idx[c] : nf_list[c - nraw];
                        combo.push_back({bi, (p - e) % p});
                    }
                    rewrite_[{i, stratum[locals[pivots[r]]].arrows}] = std::move(combo);
                }
            }

            if (!extras.empty()) break;
            if (newly == 0) return;  // empty stratum: the quotient is finite dimensional

            raw.push_back({});
            for (const QPath& w : raw[L])
                for (int a = 0; a < na; ++a)
                    if (q.arrows[a].from == w.to) {
                        QPath ext = w;
                        ext.arrows.push_back(a);
                        ext.to = q.arrows[a].to;
                        raw[L + 1].push_back(std::move(ext));
                    }
            ++L;
        }

        gens.insert(gens.end(), extras.begin(), extras.end());
    }
    throw Error("path basis reduction did not stabilize");
}

const std::vector<int>& Algebra::basis_paths(int from, int to) const {
    return by_pair_[from][to];
}

PathCombo Algebra::reduce_path(const QPath& path) const {
    auto it = rewrite_.find({path.from, path.arrows});
    if (it != rewrite_.end()) return it->second;
    if (path.arrows.empty()) throw UnknownName("vertex idempotent missing from rewrite table");
    QPath prefix{path.from, pres_.quiver.arrows[path.arrows.back()].from,
                 std::vector<int>(path.arrows.begin(), path.arrows.end() - 1)};
    int last = path.arrows.back();
    PathCombo pre = reduce_path(prefix);
    const std::uint32_t p = pres_.characteristic;
    std::map<int, std::uint32_t> acc;
    for (const auto& [bi, bc] : pre) {
        QPath ext = basis_[bi];
        ext.arrows.push_back(last);
        ext.to = pres_.quiver.arrows[last].to;
        for (const auto& [ei, ec] : reduce_path(ext)) {
            acc[ei] = static_cast<std::uint32_t>(
                (acc[ei] + static_cast<std::uint64_t>(bc) * ec) % p);
        }
    }
    PathCombo out;
    for (const auto& [bi, bc] : acc)
        if (bc) out.push_back({bi, bc});
    return out;
}

Representation Algebra::projective(int vertex) const {
    const int nv = num_vertices();
    const std::uint32_t p = characteristic();
    std::vector<int> dims(nv);
    for (int w = 0; w < nv; ++w) dims[w] = static_cast<int>(by_pair_[vertex][w].size());

    std::vector<FMatrix> maps;
    for (int ai = 0; ai < num_arrows(); ++ai) {
        const Arrow& a = pres_.quiver.arrows[ai];
        const auto& src_list = by_pair_[vertex][a.from];
        const auto& dst_list = by_pair_[vertex][a.to];
        std::map<int, int> dst_pos;
        for (int k = 0; k < static_cast<int>(dst_list.size()); ++k) dst_pos[dst_list[k]] = k;
        FMatrix m(static_cast<int>(dst_list.size()), static_cast<int>(src_list.size()), p);
        for (int c = 0; c < static_cast<int>(src_list.size()); ++c) {
            QPath ext = basis_[src_list[c]];
            ext.arrows.push_back(ai);
            ext.to = a.to;
            for (const auto& [bi, bc] : reduce_path(ext)) m.set(dst_pos.at(bi), c, bc);
        }
        maps.push_back(std::move(m));
    }
    return Representation(shared_from_this(), std::move(dims), std::move(maps),
                          "P" + pres_.quiver.vertices[vertex]);
}

Representation Algebra::injective(int vertex) const {
    const int nv = num_vertices();
    const std::uint32_t p = characteristic();
    std::vector<int> dims(nv);
    for (int w = 0; w < nv; ++w) dims[w] = static_cast<int>(by_pair_[w][vertex].size());

    std::vector<FMatrix> maps;
    for (int ai = 0; ai < num_arrows(); ++ai) {
        const Arrow& a = pres_.quiver.arrows[ai];
        const auto& from_list = by_pair_[a.to][vertex];   // paths a.to -> vertex
        const auto& into_list = by_pair_[a.from][vertex]; // paths a.from -> vertex
        std::map<int, int> into_pos;
        for (int k = 0; k < static_cast<int>(into_list.size()); ++k) into_pos[into_list[k]] = k;
        /* right composition: prepend the arrow, then transpose for the dual action */
        FMatrix r(static_cast<int>(into_list.size()), static_cast<int>(from_list.size()), p);
        for (int c = 0; c < static_cast<int>(from_list.size()); ++c) {
            const QPath& q0 = basis_[from_list[c]];
            QPath ext{a.from, vertex, {}};
            ext.arrows.push_back(ai);
            ext.arrows.insert(ext.arrows.end(), q0.arrows.begin(), q0.arrows.end());
            for (const auto& [bi, bc] : reduce_path(ext)) r.set(into_pos.at(bi), c, bc);
        }
        maps.push_back(r.transpose());
    }
    return Representation(shared_from_this(), std::move(dims), std::move(maps),
                          "I" + pres_.quiver.vertices[vertex]);
}

Representation Algebra::simple(int vertex) const {
    const int nv = num_vertices();
    std::vector<int> dims(nv, 0);
    dims[vertex] = 1;
    std::vector<FMatrix> maps;
    for (const Arrow& a : pres_.quiver.arrows)
        maps.emplace_back(dims[a.to], dims[a.from], characteristic());
    return Representation(shared_from_this(), std::move(dims), std::move(maps),
                          "S" + pres_.quiver.vertices[vertex]);
}

Representation Algebra::zero_module() const {
    std::vector<int> dims(num_vertices(), 0);
    std::vector<FMatrix> maps;
    for (int a = 0; a < num_arrows(); ++a) maps.emplace_back(0, 0, characteristic());
    return Representation(shared_from_this(), std::move(dims), std::move(maps), "0");
}

std::shared_ptr<const Algebra> Algebra::opposite() const {
    if (op_) return op_;
    AlgebraPresentation op;
    op.characteristic = pres_.characteristic;
    op.quiver.vertices = pres_.quiver.vertices;
    for (const Arrow& a : pres_.quiver.arrows)
        op.quiver.arrows.push_back(Arrow{a.name, a.to, a.from});
    for (const Relation& rel : pres_.relations) {
        Relation r;
        for (const RelationTerm& t : rel.terms) {
            RelationTerm rt;
            rt.coeff = t.coeff;
            rt.arrows.assign(t.arrows.rbegin(), t.arrows.rend());
            r.terms.push_back(std::move(rt));
        }
        op.relations.push_back(std::move(r));
    }
    auto built = Algebra::build(std::move(op), cap_);
    /* opposite of the opposite is the original instance */
    std::const_pointer_cast<Algebra>(built)->op_ = shared_from_this();
    op_ = built;
    return op_;
}

bool verify_relations(const Algebra& alg, const std::vector<int>& dims,
                      const std::vector<FMatrix>& maps) {
    const Quiver& q = alg.quiver();
    const std::uint32_t p = alg.characteristic();
    for (const Relation& rel : alg.presentation().relations) {
        bool first = true;
        FMatrix acc;
        for (const RelationTerm& t : rel.terms) {
            int from = q.arrows[t.arrows.front()].from;
            FMatrix prod = FMatrix::identity(dims[from], p);
            for (int a : t.arrows) prod = maps[a] * prod;
            prod = prod.scaled(FScalar(t.coeff, p).value);
            acc = first ? prod : acc + prod;
            first = false;
        }
        if (!first && !acc.is_zero()) return false;
    }
    return true;
}

}  // namespace ctl
