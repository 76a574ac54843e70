#include "pathloc/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "pathloc/errors.hpp"
#include "pathloc/oracle.hpp"

namespace pathloc {

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(), [](const Check& c) { return c.state == CheckState::Failed; }));
}

std::size_t VerifyReport::skipped() const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(), [](const Check& c) { return c.state == CheckState::Skipped; }));
}

namespace {

struct Skip {
  std::string why;
};

// Runs one check. The body throws Skip to skip, returns a failure detail
// (empty on success). Capacity errors skip; other library errors fail.
void run(VerifyReport& report, std::string name, const std::function<std::string()>& body) {
  Check c{std::move(name), CheckState::Passed, {}};
  try {
    c.detail = body();
    if (!c.detail.empty()) c.state = CheckState::Failed;
  } catch (const Skip& s) {
    c.state = CheckState::Skipped;
    c.detail = s.why;
  } catch (const CapacityError& e) {
    c.state = CheckState::Skipped;
    c.detail = e.what();
  } catch (const Error& e) {
    c.state = CheckState::Failed;
    c.detail = std::string("error: ") + e.what();
  }
  report.checks.push_back(std::move(c));
}

std::string fmt(const Quiver& q, const VertexMultiset& m) {
  std::string out = "{";
  bool first = true;
  for (const auto& [v, k] : m) {
    for (std::size_t i = 0; i < k; ++i) {
      out += (first ? "" : ",") + q.label(v);
      first = false;
    }
  }
  return out + "}";
}

std::optional<std::size_t> verify_cap(const PathCoalgebra& c, VertexId v) {
  if (!c.infinite_into_witness(v)) return std::nullopt;
  return c.quiver().vertex_count() + 1;
}

struct Corpus {
  std::vector<std::string> names;
  std::vector<PathComodule> modules;
};

// S_v, E_v and E_v / Soc E_v for every vertex; infinite E_v truncated.
Corpus corpus(const CoalgebraPtr& c) {
  Corpus out;
  for (VertexId v : c->quiver().vertices()) {
    const std::string l = c->quiver().label(v);
    PathComodule e = injective(c, v, verify_cap(*c, v));
    out.names.push_back("S_" + l);
    out.modules.push_back(simple(c, v));
    out.names.push_back("E_" + l);
    out.modules.push_back(e);
    out.names.push_back("E_" + l + "/Soc");
    out.modules.push_back(quotient_by_socle(e, 1));
  }
  return out;
}

bool truncated(const PathCoalgebra& c, VertexId v) { return verify_cap(c, v).has_value(); }

const CoalgebraFacts& facts_for(const CoalgebraPtr& c, const CoalgebraFacts* given,
                                std::optional<CoalgebraFacts>& local, const VerifyOptions& opts) {
  if (given) return *given;
  local = coalgebra_facts(c, opts.oracle, opts.oracle_limit);
  return *local;
}

// The oracle's quotient E / Soc^n E, by iterating oracle socles.
LinearComodule oracle_quotient_by_socle(LinearComodule m, std::size_t n) {
  for (std::size_t k = 0; k < n && m.dimension() > 0; ++k) m = quotient(m, socle_subspace(m));
  return m;
}

}  // namespace

// ------------------------------------------------------------ coalgebra

void check_coalgebra(const CoalgebraPtr& c, VerifyReport& report, const VerifyOptions& opts) {
  const Quiver& q = c->quiver();
  const auto vertices = q.vertices();
  std::optional<CoalgebraFacts> local;
  const CoalgebraFacts& facts = facts_for(c, opts.facts, local, opts);

  run(report, "basis is subpath-closed", [&]() -> std::string {
    const auto r = validate(*c);
    return r.ok() ? "" : "missing " + q.format(r.missing.front());
  });

  run(report, "path counts match adjacency powers", [&]() -> std::string {
    if (!c->is_full()) throw Skip{"finite basis"};
    const std::size_t n = q.vertex_count();
    const std::size_t max_len = 4;
    // power[s][t] = number of length-k walks s -> t.
    std::vector<std::vector<std::size_t>> power(n, std::vector<std::size_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) power[i][i] = 1;
    std::vector<std::size_t> total(n, 1);
    for (std::size_t k = 1; k <= max_len; ++k) {
      std::vector<std::vector<std::size_t>> next(n, std::vector<std::size_t>(n, 0));
      for (std::size_t s = 0; s < n; ++s) {
        for (ArrowId a : q.arrows()) next[s][index(q.target(a))] += power[s][index(q.source(a))];
      }
      power = std::move(next);
      for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t t = 0; t < n; ++t) total[t] += power[s][t];
      }
    }
    for (VertexId v : vertices) {
      if (enumerate_paths(q, v, max_len).size() != total[index(v)]) return "at " + q.label(v);
    }
    return "";
  });

  run(report, "socle series of E_x agrees with the oracle", [&]() -> std::string {
    if (!opts.oracle) throw Skip{"oracle disabled"};
    std::size_t compared = 0;
    for (VertexId x : vertices) {
      const PathComodule e = injective(c, x, verify_cap(*c, x));
      if (e.dimension() > opts.oracle_limit) continue;
      const LoewySeries comb = socle_series(e);
      if (!truncated(*c, x)) {
        const auto slices = injective_basis(*c, x);
        for (std::size_t d = 0; d < slices.size(); ++d) {
          if (comb.layer(d + 1).empty() != slices[d].paths.empty()) return "grading of E_" + q.label(x);
        }
      }
      if (!(socle_series(realize(e)) == comb)) return "E_" + q.label(x);
      ++compared;
    }
    if (compared == 0) throw Skip{"every E_x exceeds the oracle limit"};
    return "";
  });

  run(report, "quotient-socle law", [&]() -> std::string {
    for (const PathComodule& m : corpus(c).modules) {
      const LoewySeries s = socle_series(m);
      for (std::size_t n = 0; n <= opts.max_layer; ++n) {
        const LoewySeries t = socle_series(quotient_by_socle(m, n));
        for (std::size_t k = 1; k <= s.loewy_length() + 1; ++k) {
          if (t.layer(k) != s.layer(n + k)) return "layer " + std::to_string(n + k);
        }
      }
    }
    return "";
  });

  run(report, "subcomodule socle law", [&]() -> std::string {
    for (VertexId x : vertices) {
      const PathComodule e = injective(c, x, verify_cap(*c, x));
      for (const Path& p : e.surviving(0)) {
        if (p.length() > opts.max_layer) continue;
        std::set<Path> chain;
        for (std::size_t j = 0; j <= p.length(); ++j) chain.insert(p.terminal(j));
        const PathComodule sub(c, {Component{x, chain, {}}});
        for (const Path& s : chain) {
          if (sub.layer(0, s) != e.layer(0, s)) return "below " + q.format(p);
        }
      }
    }
    return "";
  });

  run(report, "socle series of a direct sum is the layerwise union", [&]() -> std::string {
    const Corpus k = corpus(c);
    const PathComodule sum = direct_sum(k.modules);
    LoewySeries expect;
    for (const PathComodule& m : k.modules) {
      const LoewySeries s = socle_series(m);
      if (expect.layers.size() < s.layers.size()) expect.layers.resize(s.layers.size());
      for (std::size_t i = 0; i < s.layers.size(); ++i) {
        expect.layers[i] = multiset_union(expect.layers[i], s.layers[i]);
      }
    }
    return socle_series(sum) == expect ? "" : "layers differ";
  });

  run(report, "n-predecessors lie on Gamma paths of length n", [&]() -> std::string {
    for (VertexId x : vertices) {
      for (std::size_t n = 1; n <= opts.max_layer; ++n) {
        for (const auto& [y, r] : n_predecessors(*c, x, n).entries) {
          if (!gamma_path_exists(facts.gamma, y, x, n, [](VertexId) { return true; })) {
            return q.label(y) + " -> " + q.label(x) + " at n=" + std::to_string(n);
          }
        }
      }
    }
    return "";
  });

  run(report, "hereditary: Gamma paths of length n give n-predecessors", [&]() -> std::string {
    if (!is_hereditary(*c)) throw Skip{"not hereditary"};
    for (VertexId x : vertices) {
      for (std::size_t n = 1; n <= opts.max_layer; ++n) {
        const auto pred = n_predecessors(*c, x, n).entries;
        for (VertexId y : vertices) {
          const bool path = gamma_path_exists(facts.gamma, y, x, n, [](VertexId) { return true; });
          if (path != pred.contains(y)) return q.label(y) + " -> " + q.label(x) + " at n=" + std::to_string(n);
        }
      }
    }
    return "";
  });

  run(report, "n-predecessor counts match oracle Hom(S_y, E_x/Soc^n E_x)", [&]() -> std::string {
    if (!opts.oracle) throw Skip{"oracle disabled"};
    std::size_t compared = 0;
    for (VertexId x : vertices) {
      const PathComodule e = injective(c, x, verify_cap(*c, x));
      if (e.dimension() > opts.oracle_limit) continue;
      LinearComodule quo = realize(e);
      for (std::size_t n = 1; n <= opts.max_layer; ++n) {
        quo = oracle_quotient_by_socle(quo, 1);
        if (truncated(*c, x) && n >= *verify_cap(*c, x)) break;
        const auto pred = n_predecessors(*c, x, n).entries;
        for (VertexId y : vertices) {
          const std::size_t want = pred.contains(y) ? pred.at(y) : 0;
          if (hom_dim(realize(simple(c, y)), quo) != want) {
            return q.label(y) + " into E_" + q.label(x) + " at n=" + std::to_string(n);
          }
        }
        ++compared;
      }
    }
    if (compared == 0) throw Skip{"every E_x exceeds the oracle limit"};
    return "";
  });

  run(report, "Ext^1 dimensions match Gamma multiplicities", [&]() -> std::string {
    if (!opts.oracle) throw Skip{"oracle disabled"};
    for (VertexId x : vertices) {
      if (injective(c, x, verify_cap(*c, x)).dimension() > opts.oracle_limit) throw Skip{"E_x too large"};
      for (VertexId y : vertices) {
        const Stabilized s = ext1_dim(c, y, x, 2);
        if (!s.value) return "undetermined at cap for " + q.label(y) + ", " + q.label(x);
        if (*s.value != facts.gamma.multiplicity(y, x)) return q.label(y) + " -> " + q.label(x);
      }
    }
    return "";
  });

  run(report, "Rad(E_x, E_y) nonzero iff y precedes x", [&]() -> std::string {
    if (!facts.hom_injectives) throw Skip{"no oracle Hom table for this coalgebra"};
    for (VertexId x : vertices) {
      for (VertexId y : vertices) {
        const std::size_t hom = (*facts.hom_injectives)[index(x)][index(y)];
        const bool rad = hom > (x == y ? 1u : 0u);
        if (rad != facts.predecessor[index(y)][index(x)].has_value()) {
          return "E_" + q.label(x) + ", E_" + q.label(y);
        }
      }
    }
    return "";
  });
}

// --------------------------------------------------------- localization

void check_localization(const LocalizationContext& ctx, VerifyReport& report,
                        const VerifyOptions& opts) {
  const CoalgebraPtr& c = ctx.coalgebra();
  const Quiver& q = ctx.quiver();
  std::optional<CoalgebraFacts> local;
  const CoalgebraFacts& facts = facts_for(c, opts.facts, local, opts);
  const bool hereditary = is_hereditary(*c);
  auto torsion = [&](VertexId v) { return ctx.is_torsion(v); };
  auto need_cells = [&]() -> const CellQuiver& { return ctx.cells(); };

  run(report, "TS = id on simples", [&]() -> std::string {
    const CellQuiver& cq = need_cells();
    for (VertexId x : ctx.torsion_free()) {
      const SectionResult s = section_on_simple(ctx, x);
      if (!s.finite) continue;
      const PathComodule t = quotient_T(ctx, *s.comodule);
      VertexMultiset want{{*cq.from_c[index(x)], 1}};
      if (t.dimension() != 1 || socle_series(t).layer(1) != want) return "S_" + q.label(x);
    }
    return "";
  });

  run(report, "T(E_x) = E-bar_x for x in X", [&]() -> std::string {
    const CellQuiver& cq = need_cells();
    std::size_t compared = 0;
    for (VertexId x : ctx.torsion_free()) {
      const VertexId cx = *cq.from_c[index(x)];
      if (truncated(*c, x) || cq.coalgebra->infinite_into_witness(cx)) continue;
      const PathComodule t = quotient_T(ctx, injective(c, x));
      if (!(t == injective(cq.coalgebra, cx))) return "E_" + q.label(x);
      ++compared;
    }
    if (compared == 0 && !ctx.torsion_free().empty()) throw Skip{"every E_x is infinite"};
    return "";
  });

  run(report, "Soc S(S_x) = S_x and S(S_x) is torsion-free", [&]() -> std::string {
    for (VertexId x : ctx.torsion_free()) {
      const SectionResult s = section_on_simple(ctx, x);
      if (!s.finite) continue;
      if (socle_series(*s.comodule).layer(1) != VertexMultiset{{x, 1}}) return "socle of S(S_" + q.label(x) + ")";
      if (torsion_subcomodule(ctx, *s.comodule).dimension() != 0) return "torsion in S(S_" + q.label(x) + ")";
    }
    return "";
  });

  const Corpus k = corpus(c);

  run(report, "T(Soc M) lies in Soc T(M)", [&]() -> std::string {
    need_cells();
    for (std::size_t i = 0; i < k.modules.size(); ++i) {
      const PathComodule& m = k.modules[i];
      const PathComodule tsoc = quotient_T(ctx, socle_part(m, 1));
      VertexMultiset all;
      for (const auto& l : socle_series(tsoc).layers) all = multiset_union(all, l);
      if (!multiset_included(all, socle_series(quotient_T(ctx, m)).layer(1))) return k.names[i];
    }
    return "";
  });

  run(report, "torsion-free M: Soc M = T(Soc M) = Soc T(M)", [&]() -> std::string {
    const CellQuiver& cq = need_cells();
    for (std::size_t i = 0; i < k.modules.size(); ++i) {
      const PathComodule& m = k.modules[i];
      if (torsion_subcomodule(ctx, m).dimension() != 0) continue;
      const VertexMultiset soc = socle_series(m).layer(1);
      const VertexMultiset t_soc = cq.to_c_labels(socle_series(quotient_T(ctx, socle_part(m, 1))).layer(1));
      const VertexMultiset soc_t = cq.to_c_labels(socle_series(quotient_T(ctx, m)).layer(1));
      if (soc != t_soc || soc != soc_t) return k.names[i];
    }
    return "";
  });

  run(report, "T(E_y) = 0 iff y has no torsion-free predecessor", [&]() -> std::string {
    for (VertexId y : ctx.torsion()) {
      const PathComodule e = injective(c, y, verify_cap(*c, y));
      std::size_t t_dim = 0;
      for (const Path& p : e.surviving(0)) t_dim += ctx.in_x(p.source()) ? 1 : 0;
      bool free_pred = false;
      for (VertexId x : ctx.torsion_free()) free_pred |= facts.predecessor[index(x)][index(y)].has_value();
      if ((t_dim == 0) == free_pred) return "E_" + q.label(y);
    }
    return "";
  });

  run(report, "Soc T(E_y) is bounded by its immediate predecessors", [&]() -> std::string {
    const CellQuiver& cq = need_cells();
    std::map<VertexId, VertexMultiset> soc;
    for (VertexId y : ctx.torsion()) {
      soc[y] = cq.to_c_labels(socle_series(quotient_T(ctx, injective(c, y, verify_cap(*c, y)))).layer(1));
    }
    for (VertexId y : ctx.torsion()) {
      VertexMultiset bound;
      for (const auto& [e, m] : facts.gamma.arrows()) {
        if (e.second != y) continue;
        for (std::size_t i = 0; i < m; ++i) {
          bound = ctx.in_x(e.first) ? multiset_union(bound, {{e.first, 1}}) : multiset_union(bound, soc[e.first]);
        }
      }
      if (!multiset_included(soc[y], bound)) return "containment at " + q.label(y);
      if (hereditary && soc[y] != bound) return "equality at " + q.label(y) + ": " + fmt(q, soc[y]) + " vs " + fmt(q, bound);
      // Each socle class is a torsion-internal route from a predecessor.
      for (const auto& [x, mult] : soc[y]) {
        if (!ctx.in_x(x) || !facts.predecessor[index(x)][index(y)]) return "socle vertex " + q.label(x);
        bool route = false;
        for (std::size_t n = 1; n <= q.vertex_count() && !route; ++n) {
          route = gamma_path_exists(facts.gamma, x, y, n, torsion);
        }
        if (!route) return "no torsion route " + q.label(x) + " -> " + q.label(y);
      }
      if (hereditary) {
        for (VertexId x : ctx.torsion_free()) {
          bool route = false;
          for (std::size_t n = 1; n <= q.vertex_count() && !route; ++n) {
            route = gamma_path_exists(facts.gamma, x, y, n, torsion);
          }
          if (route && !soc[y].contains(x)) return "hereditary converse at " + q.label(x) + " -> " + q.label(y);
        }
      }
    }
    return "";
  });

  run(report, "S(S_x) = E_x iff every predecessor of x is torsion", [&]() -> std::string {
    for (VertexId x : ctx.torsion_free()) {
      bool all_torsion_routes = true;
      for (const Path& p : c->paths_into(x, verify_cap(*c, x))) {
        const auto verts = p.vertices();
        if (!p.is_trivial() && !std::all_of(verts.begin(), verts.end() - 1, torsion)) all_torsion_routes = false;
      }
      bool free_pred = false;
      for (VertexId y : ctx.torsion_free()) free_pred |= facts.predecessor[index(y)][index(x)].has_value();
      if (all_torsion_routes == free_pred) return "at " + q.label(x);
      const SectionResult s = section_on_simple(ctx, x);
      if (s.finite && !truncated(*c, x) && (*s.comodule == injective(c, x)) != all_torsion_routes) {
        return "section at " + q.label(x);
      }
    }
    return "";
  });

  run(report, "T is additive on socle sequences", [&]() -> std::string {
    need_cells();
    for (std::size_t i = 0; i < k.modules.size(); ++i) {
      const PathComodule& m = k.modules[i];
      for (std::size_t n = 1; n <= 2; ++n) {
        const std::size_t whole = quotient_T(ctx, m).dimension();
        const std::size_t parts = quotient_T(ctx, socle_part(m, n)).dimension() +
                                  quotient_T(ctx, quotient_by_socle(m, n)).dimension();
        if (whole != parts) return k.names[i];
      }
    }
    return "";
  });

  run(report, "torsion socle layers of S(S_x)", [&]() -> std::string {
    for (VertexId x : ctx.torsion_free()) {
      for (std::size_t n = 1; n <= opts.max_layer; ++n) {
        const VertexMultiset layer = section_predecessor_layers(ctx, x, n);
        if (layer != torsion_path_sources(ctx, x, n)) return "path count at " + q.label(x);
        const auto pred = n_predecessors(*c, x, n).entries;
        for (const auto& [y, m] : layer) {
          if (!ctx.is_torsion(y)) return "torsion-free " + q.label(y);
          if (!pred.contains(y) || pred.at(y) < m) return "not an n-predecessor: " + q.label(y);
          if (!gamma_path_exists(facts.gamma, y, x, n, torsion)) return "no torsion Gamma path " + q.label(y);
        }
        if (n == 1) {
          VertexMultiset torsion_pred;
          for (const auto& [y, m] : pred) {
            if (ctx.is_torsion(y)) torsion_pred[y] = m;
          }
          if (layer != torsion_pred) return "first layer at " + q.label(x);
        }
        if (hereditary) {
          for (VertexId y : ctx.torsion()) {
            if (gamma_path_exists(facts.gamma, y, x, n, torsion) && !layer.contains(y)) {
              return "hereditary converse " + q.label(y) + " -> " + q.label(x);
            }
          }
        }
      }
    }
    return "";
  });

  run(report, "E_x/S_x torsion-free iff no torsion arrow into x iff S(S_x) = S_x", [&]() -> std::string {
    for (VertexId x : ctx.torsion_free()) {
      const PathComodule e = injective(c, x, verify_cap(*c, x));
      const bool a = torsion_subcomodule(ctx, quotient_by_socle(e, 1)).dimension() == 0;
      bool b = true;
      for (VertexId y : ctx.torsion()) b &= !facts.gamma.has_arrow(y, x);
      const SectionResult s = section_on_simple(ctx, x);
      const bool cc = s.finite && s.comodule->dimension() == 1;
      if (a != b || b != cc) return "at " + q.label(x);
    }
    return "";
  });

  run(report, "H(S_x) dimension identity", [&]() -> std::string {
    if (!colocalizing_exists(ctx).exists) throw Skip{"H does not exist"};
    need_cells();
    for (VertexId x : ctx.torsion_free()) {
      const HSimple h = h_on_simple(ctx, x);
      if (h.dimension() != h_dimension_from_quotients(ctx, x)) return "at " + q.label(x);
      bool arrow_out = false;
      for (VertexId y : ctx.torsion()) arrow_out |= facts.gamma.has_arrow(x, y);
      if (h.is_simple() == arrow_out) return "simplicity at " + q.label(x);
    }
    return "";
  });
}

// ------------------------------------------------------------ batteries

void check_batteries(const LocalizationContext& ctx, VerifyReport& report, const VerifyOptions& opts) {
  std::optional<CoalgebraFacts> local;
  const CoalgebraFacts& facts = facts_for(ctx.coalgebra(), opts.facts, local, opts);
  const EquivalenceBattery left = is_left_semicentral(ctx, &facts);
  const EquivalenceBattery right = is_right_semicentral(ctx, &facts);
  const EquivalenceBattery central = is_central(ctx, &facts, &left, &right);

  auto describe = [](const EquivalenceBattery& b) {
    std::string out;
    for (const Clause& c : b.clauses) {
      if (c.state == ClauseState::Skipped) continue;
      out += (out.empty() ? "" : "; ") + c.label + "=" + (c.state == ClauseState::True ? "T" : "F");
    }
    return out;
  };
  for (const EquivalenceBattery* b : {&left, &right, &central}) {
    run(report, b->name + " battery is coherent",
        [&]() -> std::string { return b->coherent() ? "" : describe(*b); });
  }
  run(report, "central implies both semicentral", [&]() -> std::string {
    return !central.verdict() || (left.verdict() && right.verdict()) ? "" : "verdicts";
  });
  run(report, "left/right duality under the opposite quiver", [&]() -> std::string {
    const CoalgebraPtr op = share(opposite(*ctx.coalgebra()));
    std::optional<CoalgebraFacts> op_local;
    const CoalgebraFacts& op_facts = facts_for(op, opts.opposite_facts, op_local, opts);
    const LocalizationContext op_ctx(op, ctx.torsion_free(), ctx.cap());
    if (left.verdict() != is_right_semicentral(op_ctx, &op_facts).verdict()) return "left vs opposite right";
    if (right.verdict() != is_left_semicentral(op_ctx, &op_facts).verdict()) return "right vs opposite left";
    return "";
  });
}

// --------------------------------------------------------------- oracle

void check_oracle_localization(const LocalizationContext& ctx, VerifyReport& report,
                               const VerifyOptions& opts) {
  const CoalgebraPtr& c = ctx.coalgebra();
  const Quiver& q = ctx.quiver();
  const std::size_t limit = opts.oracle_limit;
  auto oracle_on = [&]() {
    if (!opts.oracle) throw Skip{"oracle disabled"};
    return ctx.cells();
  };

  run(report, "oracle: T agrees with the e-action", [&]() -> std::string {
    const CellQuiver& cq = oracle_on();
    const Corpus k = corpus(c);
    std::size_t compared = 0;
    for (std::size_t i = 0; i < k.modules.size(); ++i) {
      const PathComodule& m = k.modules[i];
      if (m.dimension() > limit) continue;
      const PathComodule t = quotient_T(ctx, m);
      const LinearComodule lt = realize(t);
      const LinearComodule ot = quotient_functor(ctx, realize(m));
      if (!(socle_series(lt) == socle_series(t)) || !(socle_series(ot) == socle_series(t))) {
        return "Loewy series of T(" + k.names[i] + ")";
      }
      if (!is_isomorphic(lt, ot)) return "T(" + k.names[i] + ")";
      ++compared;
    }
    (void)cq;
    if (compared == 0) throw Skip{"corpus exceeds the oracle limit"};
    return "";
  });

  run(report, "oracle: S agrees with the cotensor kernel", [&]() -> std::string {
    const CellQuiver& cq = oracle_on();
    for (VertexId x : ctx.torsion_free()) {
      const VertexId cx = *cq.from_c[index(x)];
      const SectionResult s = section_on_simple(ctx, x);
      if (!s.finite) continue;
      const LinearComodule ks = cotensor_section(ctx, realize(simple(cq.coalgebra, cx)));
      if (!is_isomorphic(ks, realize(*s.comodule))) return "S(S_" + q.label(x) + ")";
      if (!(socle_series(ks) == socle_series(*s.comodule))) return "Loewy series of S(S_" + q.label(x) + ")";
      if (cq.coalgebra->infinite_into_witness(cx)) continue;
      const PathComodule ebar = injective(cq.coalgebra, cx);
      if (ebar.dimension() > limit) continue;
      if (!is_isomorphic(cotensor_section(ctx, realize(ebar)), realize(injective(c, x)))) {
        return "S(E-bar_" + q.label(x) + ")";
      }
    }
    return "";
  });

  run(report, "oracle: H(S_x) agrees with Hom(S_x, eC)^*", [&]() -> std::string {
    const CellQuiver& cq = oracle_on();
    if (!colocalizing_exists(ctx).exists) throw Skip{"H does not exist"};
    const LinearComodule ec = ec_over_ece(ctx);
    if (ec.dimension() > limit) throw Skip{"eC exceeds the oracle limit"};
    for (VertexId x : ctx.torsion_free()) {
      const VertexId cx = *cq.from_c[index(x)];
      const HSimple h = h_on_simple(ctx, x);
      const LinearComodule sx = realize(simple(cq.coalgebra, cx));
      if (hom_dim(sx, ec) != h.dimension()) return "dim H(S_" + q.label(x) + ")";
      const LinearComodule hx = h_finite(ctx, sx);
      if (!is_isomorphic(hx, realize(ctx, h))) return "H(S_" + q.label(x) + ")";
      if (!is_isomorphic(quotient_functor(ctx, hx), sx)) return "TH(S_" + q.label(x) + ")";
    }
    return "";
  });
}

VerifyReport verify(const LocalizationContext& ctx, const VerifyOptions& opts) {
  VerifyReport report;
  std::optional<CoalgebraFacts> local;
  VerifyOptions o = opts;
  o.facts = &facts_for(ctx.coalgebra(), opts.facts, local, opts);
  check_coalgebra(ctx.coalgebra(), report, o);
  check_localization(ctx, report, o);
  check_batteries(ctx, report, o);
  check_oracle_localization(ctx, report, o);
  return report;
}

}  // namespace pathloc
