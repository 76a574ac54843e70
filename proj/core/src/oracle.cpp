#include "pathloc/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <tuple>
#include <unordered_map>

#include "pathloc/errors.hpp"

namespace pathloc {

namespace {

class Interner {
 public:
  std::uint32_t operator()(const Path& p) {
    auto [it, fresh] = ids_.try_emplace(p, static_cast<std::uint32_t>(ids_.size()));
    return it->second;
  }

 private:
  std::unordered_map<Path, std::uint32_t, PathHash> ids_;
};

// Every factorization c = u * v as (u, v).
std::vector<std::pair<Path, Path>> splits(const Path& c) {
  std::vector<std::pair<Path, Path>> out;
  out.reserve(c.length() + 1);
  for (std::size_t k = 0; k <= c.length(); ++k) out.emplace_back(c.initial(k), c.subpath(k, c.length()));
  return out;
}

std::vector<Term> normalized(std::vector<Term> terms) {
  std::map<std::pair<std::size_t, Path>, Rational> acc;
  for (Term& t : terms) acc[{t.index, std::move(t.c)}] += t.coef;
  std::vector<Term> out;
  for (auto& [key, k] : acc) {
    if (k != Rational(0)) out.push_back(Term{key.first, key.second, k});
  }
  return out;
}

std::map<VertexId, std::vector<std::size_t>> by_weight(const LinearComodule& m) {
  std::map<VertexId, std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < m.dimension(); ++i) out[m.weight(i)].push_back(i);
  return out;
}

void same_coalgebra(const CoalgebraPtr& a, const CoalgebraPtr& b) {
  if (a != b && !(*a == *b)) throw DomainError("comodules over different coalgebras");
}

}  // namespace

// ------------------------------------------------------- LinearComodule

LinearComodule::LinearComodule(CoalgebraPtr c, std::vector<std::vector<Term>> coaction)
    : coalgebra_(std::move(c)) {
  if (!coalgebra_) throw DomainError("comodule without a coalgebra");
  coaction_.reserve(coaction.size());
  for (auto& terms : coaction) coaction_.push_back(normalized(std::move(terms)));
  const std::size_t n = coaction_.size();
  weights_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<VertexId> w;
    bool ok = true;
    for (const Term& t : coaction_[i]) {
      if (t.index >= n) throw InternalError("coaction term outside the basis");
      if (!coalgebra_->contains(t.c)) throw InternalError("coaction term outside the coalgebra");
      if (!t.c.is_trivial()) continue;
      if (t.index != i || t.coef != Rational(1) || w) ok = false;
      w = t.c.source();
    }
    if (!ok || !w) throw InternalError("counit law fails or basis vector is not homogeneous");
    weights_.push_back(*w);
  }
  // (rho (x) id) rho == (id (x) delta) rho.
  for (std::size_t i = 0; i < n; ++i) {
    std::map<std::tuple<std::size_t, Path, Path>, Rational> diff;
    for (const Term& t : coaction_[i]) {
      for (const Term& s : coaction_[t.index]) diff[{s.index, s.c, t.c}] += t.coef * s.coef;
      for (auto& [u, v] : splits(t.c)) diff[{t.index, v, u}] -= t.coef;
    }
    for (const auto& [key, k] : diff) {
      if (k != Rational(0)) throw InternalError("coassociativity fails");
    }
  }
}

LinearComodule realize(const PathComodule& m) {
  std::vector<std::map<Path, std::size_t>> idx(m.components().size());
  std::size_t n = 0;
  for (std::size_t i = 0; i < m.components().size(); ++i) {
    for (const Path& p : m.surviving(i)) idx[i].emplace(p, n++);
  }
  std::vector<std::vector<Term>> coaction(n);
  for (std::size_t i = 0; i < m.components().size(); ++i) {
    for (const auto& [p, k] : idx[i]) {
      for (auto& [u, v] : splits(p)) {
        auto it = idx[i].find(v);
        if (it != idx[i].end()) coaction[k].push_back(Term{it->second, u, 1});
      }
    }
  }
  return LinearComodule(m.coalgebra(), std::move(coaction));
}

LinearComodule realize(const LocalizationContext& ctx, const HSimple& h) {
  std::map<Path, std::size_t> idx;
  for (const Path& p : h.basis) idx.emplace(p, idx.size());
  std::vector<std::vector<Term>> coaction(idx.size());
  for (const auto& [u, k] : idx) {
    for (const auto& [p, j] : idx) {
      if (p.length() < u.length() || p.source() != u.source()) continue;
      if (p.initial(u.length()) != u) continue;
      coaction[k].push_back(Term{j, p.subpath(u.length(), p.length()), 1});
    }
  }
  return LinearComodule(ctx.coalgebra(), std::move(coaction));
}

// ----------------------------------------------------------- Hom, socle

MorphismSpace hom_space(const LinearComodule& m, const LinearComodule& n) {
  same_coalgebra(m.coalgebra(), n.coalgebra());
  MorphismSpace out;
  out.domain_dim = m.dimension();
  out.codomain_dim = n.dimension();
  // Morphisms preserve weights, so only f[a][b] with equal weights can be
  // nonzero.
  const auto n_classes = by_weight(n);
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> unknown_of;
  for (std::size_t a = 0; a < n.dimension(); ++a) {
    for (std::size_t b = 0; b < m.dimension(); ++b) {
      if (n.weight(a) != m.weight(b)) continue;
      unknown_of.emplace(std::pair{a, b}, unknowns.size());
      unknowns.emplace_back(a, b);
    }
  }
  Eliminator e(unknowns.size());
  Interner paths;
  for (std::size_t b = 0; b < m.dimension(); ++b) {
    std::map<std::pair<std::size_t, std::uint32_t>, std::map<std::size_t, Rational>> eqs;
    // rho_N(f(b)) ...
    if (auto own = n_classes.find(m.weight(b)); own != n_classes.end()) {
      for (std::size_t a : own->second) {
        const std::size_t u = unknown_of.at({a, b});
        for (const Term& t : n.coaction(a)) eqs[{t.index, paths(t.c)}][u] += t.coef;
      }
    }
    // ... minus (f (x) id) rho_M(b).
    for (const Term& t : m.coaction(b)) {
      auto cls = n_classes.find(m.weight(t.index));
      if (cls == n_classes.end()) continue;
      for (std::size_t k : cls->second) {
        eqs[{k, paths(t.c)}][unknown_of.at({k, t.index})] -= t.coef;
      }
    }
    for (const auto& [key, row] : eqs) e.add(from_map(row));
  }
  for (const SparseVec& v : e.nullspace()) {
    SparseVec flat;
    for (const auto& [u, k] : v) flat.emplace_back(unknowns[u].first * m.dimension() + unknowns[u].second, k);
    std::sort(flat.begin(), flat.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    out.basis.push_back(std::move(flat));
  }
  out.basis = span_basis(out.domain_dim * out.codomain_dim, out.basis);
  return out;
}

std::size_t hom_dim(const LinearComodule& m, const LinearComodule& n) {
  return hom_space(m, n).dimension();
}

std::vector<SparseVec> socle_subspace(const LinearComodule& m) {
  Eliminator e(m.dimension());
  Interner paths;
  std::map<std::pair<std::size_t, std::uint32_t>, std::map<std::size_t, Rational>> eqs;
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    for (const Term& t : m.coaction(i)) {
      if (!t.c.is_trivial()) eqs[{t.index, paths(t.c)}][i] += t.coef;
    }
  }
  for (const auto& [key, row] : eqs) e.add(from_map(row));
  return span_basis(m.dimension(), e.nullspace());
}

LinearComodule subcomodule(const LinearComodule& m, const std::vector<SparseVec>& rref) {
  Eliminator span(m.dimension());
  for (const auto& w : rref) span.add(w);
  std::vector<std::vector<Term>> coaction(rref.size());
  for (std::size_t r = 0; r < rref.size(); ++r) {
    std::map<Path, std::map<std::size_t, Rational>> by_c;
    for (const auto& [i, k] : rref[r]) {
      for (const Term& t : m.coaction(i)) by_c[t.c][t.index] += k * t.coef;
    }
    for (auto& [c, acc] : by_c) {
      const SparseVec v = from_map(acc);
      if (v.empty()) continue;
      if (!span.reduce(v).empty()) throw InternalError("span is not a subcomodule");
      const auto coords = coordinates(rref, v);
      for (std::size_t s = 0; s < coords.size(); ++s) {
        if (coords[s] != Rational(0)) coaction[r].push_back(Term{s, c, coords[s]});
      }
    }
  }
  return LinearComodule(m.coalgebra(), std::move(coaction));
}

LinearComodule quotient(const LinearComodule& m, const std::vector<SparseVec>& rref) {
  std::map<std::size_t, const SparseVec*> row_of_pivot;
  for (const auto& r : rref) row_of_pivot.emplace(r.front().first, &r);
  std::vector<std::size_t> new_index(m.dimension(), m.dimension());
  std::size_t n = 0;
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    if (!row_of_pivot.contains(i)) new_index[i] = n++;
  }
  std::vector<std::vector<Term>> coaction(n);
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    if (new_index[i] == m.dimension()) continue;
    auto& out = coaction[new_index[i]];
    for (const Term& t : m.coaction(i)) {
      auto it = row_of_pivot.find(t.index);
      if (it == row_of_pivot.end()) {
        out.push_back(Term{new_index[t.index], t.c, t.coef});
        continue;
      }
      // e_pivot = -(rest of its row) modulo W.
      for (const auto& [l, k] : *it->second) {
        if (l != t.index) out.push_back(Term{new_index[l], t.c, -k * t.coef});
      }
    }
  }
  return LinearComodule(m.coalgebra(), std::move(coaction));
}

LoewySeries socle_series(const LinearComodule& m) {
  LoewySeries s;
  LinearComodule q = m;
  while (q.dimension() > 0) {
    const auto soc = socle_subspace(q);
    if (soc.empty()) throw InternalError("nonzero comodule with zero socle");
    VertexMultiset layer;
    for (const auto& v : soc) ++layer[q.weight(v.front().first)];
    s.layers.push_back(std::move(layer));
    q = quotient(q, soc);
  }
  return s;
}

// ------------------------------------------------------------ iso test

namespace {

__extension__ using u128 = unsigned __int128;

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % kPrime);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mul_mod(a, a)) {
    if (e & 1) r = mul_mod(r, a);
  }
  return r;
}

std::uint64_t to_mod(const Integer& z) {
  const long long v = z.convert_to<long long>();
  const long long r = v % static_cast<long long>(kPrime);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<long long>(kPrime) : r);
}

std::uint64_t to_mod(const Rational& q) {
  return mul_mod(to_mod(q.numerator()), pow_mod(to_mod(q.denominator()), kPrime - 2));
}

std::size_t rank_mod(std::vector<std::vector<std::uint64_t>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    const std::uint64_t inv = pow_mod(a[rank][c], kPrime - 2);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      const std::uint64_t f = mul_mod(a[r][c], inv);
      for (std::size_t k = c; k < cols; ++k) {
        a[r][k] = (a[r][k] + kPrime - mul_mod(f, a[rank][k])) % kPrime;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

bool is_isomorphic(const LinearComodule& a, const LinearComodule& b) {
  same_coalgebra(a.coalgebra(), b.coalgebra());
  const std::size_t d = a.dimension();
  if (d != b.dimension()) return false;
  if (d == 0) return true;
  const MorphismSpace hom = hom_space(a, b);
  if (hom.basis.empty()) return false;
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::uint64_t> coef(1, kPrime - 1);
  // An invertible element exists iff the generic element is invertible;
  // a random one is, except on a hypersurface of density <= d / p.
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<std::vector<std::uint64_t>> f(d, std::vector<std::uint64_t>(d, 0));
    for (const SparseVec& v : hom.basis) {
      const std::uint64_t k = coef(rng);
      for (const auto& [col, val] : v) {
        auto& cell = f[col / d][col % d];
        cell = (cell + mul_mod(k, to_mod(val))) % kPrime;
      }
    }
    if (rank_mod(std::move(f)) == d) return true;
  }
  return false;
}

Stabilized stabilize(const std::function<std::size_t(std::size_t)>& at_cap, std::size_t cap) {
  Stabilized s;
  s.cap = cap;
  const std::size_t lo = at_cap(cap);
  if (at_cap(cap + 1) == lo) s.value = lo;
  return s;
}

Stabilized ext1_dim(const CoalgebraPtr& c, VertexId y, VertexId x, std::size_t cap) {
  auto compute = [&](std::optional<std::size_t> k) {
    const LinearComodule ex = realize(injective(c, x, k));
    const LinearComodule q = quotient(ex, socle_subspace(ex));
    return hom_dim(realize(simple(c, y)), q);
  };
  if (!c->infinite_into_witness(x)) return Stabilized{compute(std::nullopt), 0};
  return stabilize([&](std::size_t k) { return compute(k); }, cap);
}

// ------------------------------------------------------------ functors

LinearComodule quotient_functor(const LocalizationContext& ctx, const LinearComodule& m) {
  same_coalgebra(m.coalgebra(), ctx.coalgebra());
  const CellQuiver& cq = ctx.cells();
  std::vector<std::size_t> new_index(m.dimension(), m.dimension());
  std::size_t n = 0;
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    if (ctx.in_x(m.weight(i))) new_index[i] = n++;
  }
  std::vector<std::vector<Term>> coaction(n);
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    if (new_index[i] == m.dimension()) continue;
    for (const Term& t : m.coaction(i)) {
      if (!ctx.in_x(t.c.source()) || !ctx.in_x(t.c.target())) continue;
      coaction[new_index[i]].push_back(Term{new_index[t.index], cq.descend(t.c), t.coef});
    }
  }
  return LinearComodule(cq.coalgebra, std::move(coaction));
}

LinearComodule cotensor_section(const LocalizationContext& ctx, const LinearComodule& n) {
  const CellQuiver& cq = ctx.cells();
  same_coalgebra(n.coalgebra(), cq.coalgebra);
  const PathCoalgebra& c = *ctx.coalgebra();

  // Ambient: n_i (x) p with p in Ce ending at the weight of n_i; the
  // kernel is forced into this part by the trivial-path equations.
  std::vector<std::pair<std::size_t, Path>> cells;
  std::map<std::pair<std::size_t, Path>, std::size_t> index_of;
  for (std::size_t i = 0; i < n.dimension(); ++i) {
    for (Path& p : c.paths_into(cq.to_c.at(index(n.weight(i))))) {
      index_of.emplace(std::pair{i, p}, cells.size());
      cells.emplace_back(i, std::move(p));
    }
  }
  std::vector<std::vector<Term>> ambient_coaction(cells.size());
  for (std::size_t u = 0; u < cells.size(); ++u) {
    const auto& [i, p] = cells[u];
    for (auto& [head, tail] : splits(p)) {
      ambient_coaction[u].push_back(Term{index_of.at({i, tail}), head, 1});
    }
  }
  const LinearComodule ambient(ctx.coalgebra(), std::move(ambient_coaction));

  // (rho_N (x) id) - (id (x) lambda) on N (x) Ce.
  Interner ece_paths;
  Interner c_paths;
  std::map<std::tuple<std::size_t, std::uint32_t, std::uint32_t>, std::map<std::size_t, Rational>> eqs;
  for (std::size_t u = 0; u < cells.size(); ++u) {
    const auto& [i, p] = cells[u];
    const std::uint32_t pid = c_paths(p);
    for (const Term& t : n.coaction(i)) eqs[{t.index, ece_paths(t.c), pid}][u] += t.coef;
    for (auto& [head, tail] : splits(p)) {
      if (!ctx.in_x(tail.source())) continue;
      eqs[{i, ece_paths(cq.descend(tail)), c_paths(head)}][u] -= 1;
    }
  }
  Eliminator e(cells.size());
  for (const auto& [key, row] : eqs) e.add(from_map(row));
  return subcomodule(ambient, span_basis(cells.size(), e.nullspace()));
}

LinearComodule ec_over_ece(const LocalizationContext& ctx) {
  const CellQuiver& cq = ctx.cells();
  std::map<Path, std::size_t> idx;
  for (VertexId x : ctx.torsion_free()) {
    for (const Path& p : ctx.coalgebra()->paths_from(x)) idx.emplace(p, 0);
  }
  std::size_t n = 0;
  for (auto& [p, k] : idx) k = n++;
  std::vector<std::vector<Term>> coaction(n);
  for (const auto& [p, k] : idx) {
    for (auto& [head, tail] : splits(p)) {
      if (ctx.in_x(tail.source())) coaction[k].push_back(Term{idx.at(tail), cq.descend(head), 1});
    }
  }
  return LinearComodule(cq.coalgebra, std::move(coaction));
}

LinearComodule h_finite(const LocalizationContext& ctx, const LinearComodule& n) {
  const CellQuiver& cq = ctx.cells();
  same_coalgebra(n.coalgebra(), cq.coalgebra);
  if (auto v = colocalizing_exists(ctx); !v.exists) {
    throw UnsupportedContext("H does not exist: eC is not quasi-finite");
  }
  // Basis of eC in the same order as ec_over_ece.
  std::vector<Path> ec;
  for (VertexId x : ctx.torsion_free()) {
    for (const Path& p : ctx.coalgebra()->paths_from(x)) ec.push_back(p);
  }
  std::sort(ec.begin(), ec.end());
  std::map<Path, std::size_t> idx;
  for (std::size_t a = 0; a < ec.size(); ++a) idx.emplace(ec[a], a);

  const LinearComodule e = ec_over_ece(ctx);
  const MorphismSpace hom = hom_space(n, e);
  const std::size_t dn = n.dimension();

  // Left C-coaction of eC: lambda(p) = sum over p = u * v of v (x) u, so
  // the c-component of lambda o f is f followed by "strip the terminal c".
  std::map<Path, std::vector<std::pair<std::size_t, std::size_t>>> strip;
  for (std::size_t a = 0; a < ec.size(); ++a) {
    for (auto& [head, tail] : splits(ec[a])) strip[tail].emplace_back(a, idx.at(head));
  }
  Eliminator span(hom.codomain_dim * dn);
  for (const auto& f : hom.basis) span.add(f);

  std::vector<std::vector<Term>> coaction(hom.dimension());
  for (std::size_t j = 0; j < hom.dimension(); ++j) {
    for (const auto& [c, moves] : strip) {
      std::map<std::size_t, std::size_t> to;
      for (auto [from, dest] : moves) to.emplace(from, dest);
      std::map<std::size_t, Rational> acc;
      for (const auto& [col, val] : hom.basis[j]) {
        auto it = to.find(col / dn);
        if (it != to.end()) acc[it->second * dn + col % dn] += val;
      }
      const SparseVec g = from_map(acc);
      if (g.empty()) continue;
      if (!span.reduce(g).empty()) throw InternalError("left coaction leaves the morphism space");
      const auto coords = coordinates(hom.basis, g);
      for (std::size_t k = 0; k < coords.size(); ++k) {
        if (coords[k] != Rational(0)) coaction[k].push_back(Term{j, c, coords[k]});
      }
    }
  }
  return LinearComodule(ctx.coalgebra(), std::move(coaction));
}

}  // namespace pathloc
