#pragma once

/* Test-only oracles, kept independent of the library's ext machinery. */

#include <cassert>
#include <random>

#include "ctl/rep.hpp"

namespace ctl_test {

/* For a relation-free quiver algebra, Ext^1(M,N) is the cokernel of
 *   Phi: sum_v Hom_K(M_v, N_v) -> sum_{a: u->v} Hom_K(M_u, N_v)
 *   Phi(f)_a = N_a f_u - f_v M_a
 * computed here by raw rank arithmetic. */
inline int ext1_two_term_oracle(const ctl::Representation& m, const ctl::Representation& n) {
    const auto alg = m.algebra();
    assert(alg->presentation().relations.empty());
    const std::uint32_t p = alg->characteristic();
    const int nv = alg->num_vertices();

    std::vector<int> off(nv + 1, 0);
    for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + m.dim(v) * n.dim(v);
    int unknowns = off[nv];

    int rows = 0;
    for (int a = 0; a < alg->num_arrows(); ++a) {
        const ctl::Arrow& ar = alg->quiver().arrows[a];
        rows += m.dim(ar.from) * n.dim(ar.to);
    }

    ctl::FMatrix phi(rows, unknowns, p);
    int eq = 0;
    for (int a = 0; a < alg->num_arrows(); ++a) {
        const ctl::Arrow& ar = alg->quiver().arrows[a];
        const int su = m.dim(ar.from), sv = m.dim(ar.to);
        const int tu = n.dim(ar.from), tv = n.dim(ar.to);
        for (int r = 0; r < tv; ++r)
            for (int c = 0; c < su; ++c) {
                int row = eq + r * su + c;
                for (int k = 0; k < tu; ++k)
                    phi.set(row, off[ar.from] + k * su + c,
                            static_cast<long long>(n.map(a).at(r, k)));
                for (int k = 0; k < sv; ++k) {
                    int col = off[ar.to] + r * sv + k;
                    phi.set(row, col,
                            static_cast<long long>(phi.at(row, col)) -
                                static_cast<long long>(m.map(a).at(k, c)));
                }
            }
        eq += tv * su;
    }
    return rows - phi.rank();
}

/* Random representation of a relation-free algebra. */
inline ctl::Representation random_rep(std::shared_ptr<const ctl::Algebra> alg,
                                      std::mt19937& rng, int max_dim) {
    assert(alg->presentation().relations.empty());
    const std::uint32_t p = alg->characteristic();
    std::vector<int> dims;
    for (int v = 0; v < alg->num_vertices(); ++v)
        dims.push_back(static_cast<int>(rng() % (max_dim + 1)));
    std::vector<ctl::FMatrix> maps;
    for (int a = 0; a < alg->num_arrows(); ++a) {
        const ctl::Arrow& ar = alg->quiver().arrows[a];
        ctl::FMatrix mat(dims[ar.to], dims[ar.from], p);
        for (int i = 0; i < mat.rows(); ++i)
            for (int j = 0; j < mat.cols(); ++j)
                mat.set(i, j, static_cast<long long>(rng() % p));
        maps.push_back(std::move(mat));
    }
    return ctl::Representation(alg, std::move(dims), std::move(maps));
}

}  // namespace ctl_test
