#include "instances.hpp"

#include <algorithm>
#include <numeric>

namespace pathloc::testing {

std::size_t Shape::arrow_count() const {
  return std::accumulate(mult.begin(), mult.end(), std::size_t{0});
}

bool Shape::acyclic() const {
  // Kahn's algorithm on the support.
  std::vector<std::size_t> indeg(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) indeg[j] += at(i, j) ? 1 : 0;
  }
  std::vector<std::size_t> ready;
  for (std::size_t j = 0; j < n; ++j) {
    if (indeg[j] == 0) ready.push_back(j);
  }
  std::size_t seen = 0;
  while (!ready.empty()) {
    const std::size_t i = ready.back();
    ready.pop_back();
    ++seen;
    for (std::size_t j = 0; j < n; ++j) {
      if (at(i, j) && --indeg[j] == 0) ready.push_back(j);
    }
  }
  return seen == n;
}

std::shared_ptr<const Quiver> build(const Shape& s) {
  auto q = std::make_shared<Quiver>();
  for (std::size_t i = 0; i < s.n; ++i) q->add_vertex("v" + std::to_string(i));
  std::size_t k = 0;
  for (std::size_t i = 0; i < s.n; ++i) {
    for (std::size_t j = 0; j < s.n; ++j) {
      for (std::uint8_t r = 0; r < s.at(i, j); ++r) {
        q->add_arrow("a" + std::to_string(k++), vertex_at(i), vertex_at(j));
      }
    }
  }
  return q;
}

void for_each_shape(std::size_t max_vertices, std::size_t max_arrows, std::uint8_t max_mult,
                    const std::function<void(const Shape&)>& visit) {
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    Shape s{n, std::vector<std::uint8_t>(n * n, 0)};
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t left) {
      if (pos == s.mult.size()) {
        visit(s);
        return;
      }
      for (std::uint8_t m = 0; m <= max_mult && m <= left; ++m) {
        s.mult[pos] = m;
        rec(pos + 1, left - m);
      }
      s.mult[pos] = 0;
    };
    rec(0, max_arrows);
  }
}

Canonical canonical(const Shape& s) {
  std::vector<std::size_t> perm(s.n);
  std::iota(perm.begin(), perm.end(), 0);
  Canonical best{s, perm};
  Shape image{s.n, std::vector<std::uint8_t>(s.mult.size())};
  do {
    for (std::size_t i = 0; i < s.n; ++i) {
      for (std::size_t j = 0; j < s.n; ++j) image.mult[perm[i] * s.n + perm[j]] = s.at(i, j);
    }
    if (image.mult < best.shape.mult) best = {image, perm};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Path> random_truncation(const Quiver& q, std::mt19937_64& rng, std::size_t max_len, double p) {
  std::bernoulli_distribution keep(p);
  std::vector<Path> gens;
  for (VertexId v : q.vertices()) {
    for (const Path& path : enumerate_paths(q, v, max_len)) {
      if (!path.is_trivial() && keep(rng)) gens.push_back(path);
    }
  }
  return close_under_subpaths(q, gens);
}

std::vector<Path> transport(const Quiver& from, const Quiver& to, const std::vector<std::size_t>& perm,
                            const std::vector<Path>& basis) {
  // Arrow r of the parallel class (i, j) goes to arrow r of (perm i, perm j).
  auto rank_in_class = [](const Quiver& q, ArrowId a) {
    std::size_t r = 0;
    for (ArrowId b : q.out_arrows(q.source(a))) {
      if (b == a) break;
      if (q.target(b) == q.target(a)) ++r;
    }
    return r;
  };
  auto image = [&](ArrowId a) {
    const VertexId s = vertex_at(perm[index(from.source(a))]);
    const VertexId t = vertex_at(perm[index(from.target(a))]);
    std::size_t r = rank_in_class(from, a);
    for (ArrowId b : to.out_arrows(s)) {
      if (to.target(b) == t && r-- == 0) return b;
    }
    return arrow_at(to.arrow_count());  // unreachable for isomorphic shapes
  };
  std::vector<Path> out;
  for (const Path& p : basis) {
    if (p.is_trivial()) {
      out.push_back(Path::trivial(vertex_at(perm[index(p.source())])));
      continue;
    }
    std::vector<ArrowId> arrows;
    for (ArrowId a : p.arrows()) arrows.push_back(image(a));
    out.push_back(to.path(arrows));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Shape random_shape(std::mt19937_64& rng, std::size_t n, double p, std::uint8_t max_mult, bool acyclic) {
  std::bernoulli_distribution edge(p);
  std::uniform_int_distribution<int> copies(1, max_mult);
  Shape s{n, std::vector<std::uint8_t>(n * n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (acyclic && i >= j) continue;  // arrows only go up in index
      if (edge(rng)) s.mult[i * n + j] = static_cast<std::uint8_t>(copies(rng));
    }
  }
  return s;
}

std::vector<VertexId> subset(std::uint32_t mask, std::size_t n) {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (mask >> i & 1u) out.push_back(vertex_at(i));
  }
  return out;
}

std::uint64_t fingerprint(const Shape& s) {
  std::uint64_t h = 1469598103934665603ull ^ s.n;
  for (std::uint8_t m : s.mult) h = (h ^ m) * 1099511628211ull;
  return h;
}

}  // namespace pathloc::testing
