#pragma once

/* Shared in-memory fixtures for the unit tests: the commutative-square
 * algebra of the bundled example and a few one-liners. */

#include <memory>

#include "ctl/quiver.hpp"

namespace ctl_test {

/* 4 -> 3 -> 1, 4 -> 2 -> 1, with both length-2 paths identified. */
inline ctl::AlgebraPresentation square_presentation(std::uint32_t p) {
    ctl::AlgebraPresentation pres;
    pres.characteristic = p;
    pres.quiver.vertices = {"1", "2", "3", "4"};
    pres.quiver.arrows = {
        {"alpha", 3, 2},   // 4 -> 3
        {"alphap", 3, 1},  // 4 -> 2
        {"beta", 2, 0},    // 3 -> 1
        {"betap", 1, 0},   // 2 -> 1
    };
    ctl::Relation rel;
    rel.terms.push_back({1, {0, 2}});    // alpha then beta
    rel.terms.push_back({-1, {1, 3}});   // alphap then betap
    pres.relations.push_back(rel);
    return pres;
}

inline std::shared_ptr<const ctl::Algebra> square_algebra(std::uint32_t p) {
    return ctl::Algebra::build(square_presentation(p));
}

inline std::shared_ptr<const ctl::Algebra> a2_algebra(std::uint32_t p) {
    ctl::AlgebraPresentation pres;
    pres.characteristic = p;
    pres.quiver.vertices = {"1", "2"};
    pres.quiver.arrows = {{"a", 0, 1}};
    return ctl::Algebra::build(std::move(pres));
}

inline std::shared_ptr<const ctl::Algebra> loop_algebra(std::uint32_t p, int cap) {
    ctl::AlgebraPresentation pres;
    pres.characteristic = p;
    pres.quiver.vertices = {"1"};
    pres.quiver.arrows = {{"x", 0, 0}};
    return ctl::Algebra::build(std::move(pres), cap);
}

inline std::shared_ptr<const ctl::Algebra> semisimple_algebra(std::uint32_t p, int nv) {
    ctl::AlgebraPresentation pres;
    pres.characteristic = p;
    for (int i = 0; i < nv; ++i) pres.quiver.vertices.push_back(std::to_string(i + 1));
    return ctl::Algebra::build(std::move(pres));
}

/* Two parallel arrows 1 => 2, relation free. */
inline std::shared_ptr<const ctl::Algebra> kronecker_algebra(std::uint32_t p) {
    ctl::AlgebraPresentation pres;
    pres.characteristic = p;
    pres.quiver.vertices = {"1", "2"};
    pres.quiver.arrows = {{"a", 0, 1}, {"b", 0, 1}};
    return ctl::Algebra::build(std::move(pres));
}

}  // namespace ctl_test
