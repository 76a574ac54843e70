#pragma once

// Seeded instance generators shared by the property tests, the acceptance
// suite and the benchmarks.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <vector>

#include "pathloc/coalgebra.hpp"
#include "pathloc/quiver.hpp"

namespace pathloc::testing {

/// A quiver on vertices 0..n-1 given by arrow multiplicities m[i][j].
struct Shape {
  std::size_t n = 0;
  std::vector<std::uint8_t> mult;  // row-major n * n

  std::uint8_t at(std::size_t i, std::size_t j) const { return mult[i * n + j]; }
  std::size_t arrow_count() const;
  bool acyclic() const;
  friend bool operator==(const Shape&, const Shape&) = default;
  friend auto operator<=>(const Shape&, const Shape&) = default;
};

/// Vertices "v0".., arrows "a0".. in row-major order of (source, target).
std::shared_ptr<const Quiver> build(const Shape& s);

/// Calls `visit` on every shape with 1..max_vertices vertices, at most
/// max_arrows arrows and every multiplicity <= max_mult.
void for_each_shape(std::size_t max_vertices, std::size_t max_arrows, std::uint8_t max_mult,
                    const std::function<void(const Shape&)>& visit);

/// The lexicographically least relabelling, and the permutation taking
/// vertex i of `s` to vertex perm[i] of the canonical shape.
struct Canonical {
  Shape shape;
  std::vector<std::size_t> perm;
};
Canonical canonical(const Shape& s);

/// A random subpath-closed basis: every path of length <= max_len is a
/// generator with probability `p`, then closed under subpaths.
std::vector<Path> random_truncation(const Quiver& q, std::mt19937_64& rng, std::size_t max_len = 3,
                                    double p = 0.5);

/// Transports a basis along a vertex relabelling between two builds of
/// isomorphic shapes (from -> to, with perm as in Canonical).
std::vector<Path> transport(const Quiver& from, const Quiver& to, const std::vector<std::size_t>& perm,
                            const std::vector<Path>& basis);

/// Random quiver with `n` vertices; each ordered pair (loops included when
/// allowed) gets an arrow with probability p, up to `max_mult` copies.
Shape random_shape(std::mt19937_64& rng, std::size_t n, double p, std::uint8_t max_mult, bool acyclic);

/// Every nonempty vertex subset of an n-vertex quiver, as masks 1..2^n-1.
std::vector<VertexId> subset(std::uint32_t mask, std::size_t n);

std::uint64_t fingerprint(const Shape& s);

}  // namespace pathloc::testing
