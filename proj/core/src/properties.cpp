#include "pathloc/properties.hpp"

#include <algorithm>

#include "pathloc/errors.hpp"
#include "pathloc/oracle.hpp"

namespace pathloc {

bool EquivalenceBattery::verdict() const {
  return std::none_of(clauses.begin(), clauses.end(),
                      [](const Clause& c) { return c.state == ClauseState::False; });
}

bool EquivalenceBattery::coherent() const {
  bool seen_true = false;
  bool seen_false = false;
  for (const Clause& c : clauses) {
    seen_true |= c.state == ClauseState::True;
    seen_false |= c.state == ClauseState::False;
  }
  return !(seen_true && seen_false);
}

const Clause* EquivalenceBattery::find(const std::string& label) const {
  for (const Clause& c : clauses) {
    if (c.label == label) return &c;
  }
  return nullptr;
}

CoalgebraFacts coalgebra_facts(const CoalgebraPtr& c, bool with_oracle, std::size_t oracle_limit) {
  const Quiver& q = c->quiver();
  CoalgebraFacts f;
  f.gamma = ext_quiver(*c);
  const std::size_t n = q.vertex_count();
  f.predecessor.assign(n, std::vector<std::optional<std::size_t>>(n));
  for (VertexId y : q.vertices()) {
    for (VertexId x : q.vertices()) f.predecessor[index(y)][index(x)] = is_predecessor(*c, y, x);
  }
  if (!with_oracle || !c->is_finite_dimensional()) return f;
  std::vector<LinearComodule> injectives;
  for (VertexId v : q.vertices()) {
    PathComodule e = injective(c, v);
    if (e.dimension() > oracle_limit) return f;
    injectives.push_back(realize(e));
  }
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) table[u][v] = hom_dim(injectives[u], injectives[v]);
  }
  f.hom_injectives = std::move(table);
  return f;
}

namespace {

class ClauseBuilder {
 public:
  explicit ClauseBuilder(std::string label) { clause_.label = std::move(label); }
  // Records the first counterexample.
  void fail(const std::string& evidence) {
    if (clause_.state != ClauseState::False) clause_.evidence = evidence;
    clause_.state = ClauseState::False;
  }
  Clause done() {
    if (clause_.state == ClauseState::Skipped) clause_.state = ClauseState::True;
    return std::move(clause_);
  }
  static Clause skipped(std::string label, std::string why) {
    return Clause{std::move(label), ClauseState::Skipped, std::move(why)};
  }

 private:
  Clause clause_;
};

PathComodule injective_of(const LocalizationContext& ctx, VertexId v) {
  return injective(ctx.coalgebra(), v, ctx.cap_for(v));
}

// dim T(M): through the cell quiver when it is finite, otherwise by
// counting X-sourced classes directly.
std::size_t t_dimension(const LocalizationContext& ctx, const PathComodule& m) {
  try {
    return quotient_T(ctx, m).dimension();
  } catch (const CapacityError&) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < m.components().size(); ++i) {
      for (const Path& p : m.surviving(i)) d += ctx.in_x(p.source()) ? 1 : 0;
    }
    return d;
  }
}

// Basis paths from or into X up to |Q0| arrows; a shortest path leaving
// (entering) X is never longer.
std::vector<Path> short_paths(const LocalizationContext& ctx, VertexId v, bool from) {
  const std::size_t cap = ctx.quiver().vertex_count();
  return from ? ctx.coalgebra()->paths_from(v, cap) : ctx.coalgebra()->paths_into(v, cap);
}

std::string label(const LocalizationContext& ctx, VertexId v) { return ctx.quiver().label(v); }

const CoalgebraFacts& facts_or(const LocalizationContext& ctx, const CoalgebraFacts* given,
                               std::optional<CoalgebraFacts>& local) {
  if (given) return *given;
  local = coalgebra_facts(ctx.coalgebra());
  return *local;
}

Clause no_gamma_arrow(const LocalizationContext& ctx, const ExtQuiver& g, bool from_x) {
  ClauseBuilder b(from_x ? "no Gamma arrow from X to a torsion vertex"
                         : "no Gamma arrow from a torsion vertex to X");
  for (const auto& [e, m] : g.arrows()) {
    const bool leaves = ctx.in_x(e.first) && ctx.is_torsion(e.second);
    const bool enters = ctx.is_torsion(e.first) && ctx.in_x(e.second);
    if (from_x ? leaves : enters) b.fail(label(ctx, e.first) + " -> " + label(ctx, e.second));
  }
  return b.done();
}

Clause no_gamma_path(const LocalizationContext& ctx, const ExtQuiver& g, bool from_x) {
  ClauseBuilder b(from_x ? "no Gamma path from X to a torsion vertex"
                         : "no Gamma path from a torsion vertex to X");
  for (VertexId x : ctx.torsion_free()) {
    for (VertexId y : ctx.torsion()) {
      const bool hit = from_x ? gamma_reachable(g, x, y) : gamma_reachable(g, y, x);
      if (hit) b.fail(from_x ? label(ctx, x) + " ~> " + label(ctx, y) : label(ctx, y) + " ~> " + label(ctx, x));
    }
  }
  return b.done();
}

}  // namespace

EquivalenceBattery is_left_semicentral(const LocalizationContext& ctx, const CoalgebraFacts* given) {
  std::optional<CoalgebraFacts> local;
  const CoalgebraFacts& facts = facts_or(ctx, given, local);
  EquivalenceBattery bat{"left semicentral", {}};

  {
    ClauseBuilder b("eC = eCe");
    for (VertexId x : ctx.torsion_free()) {
      for (const Path& p : short_paths(ctx, x, true)) {
        if (ctx.is_torsion(p.target())) b.fail(ctx.quiver().format(p));
      }
    }
    bat.clauses.push_back(b.done());
  }
  bat.clauses.push_back(no_gamma_arrow(ctx, facts.gamma, true));
  bat.clauses.push_back(no_gamma_path(ctx, facts.gamma, true));
  {
    ClauseBuilder b("T(E_y) = 0 for every torsion y");
    for (VertexId y : ctx.torsion()) {
      if (t_dimension(ctx, injective_of(ctx, y)) != 0) b.fail(label(ctx, y));
    }
    bat.clauses.push_back(b.done());
  }
  {
    ClauseBuilder b("torsion class closed under injective envelopes");
    for (VertexId y : ctx.torsion()) {
      const PathComodule e = injective_of(ctx, y);
      if (torsion_subcomodule(ctx, e).dimension() != e.dimension()) b.fail("E_" + label(ctx, y));
    }
    bat.clauses.push_back(b.done());
  }
  {
    ClauseBuilder b("no torsion vertex has a torsion-free predecessor");
    for (VertexId y : ctx.torsion()) {
      for (VertexId x : ctx.torsion_free()) {
        if (facts.predecessor[index(x)][index(y)]) b.fail(label(ctx, x) + " precedes " + label(ctx, y));
      }
    }
    bat.clauses.push_back(b.done());
  }
  if (facts.hom_injectives) {
    ClauseBuilder b("Hom(E_y, E_x) = 0 for torsion y and x in X");
    for (VertexId y : ctx.torsion()) {
      for (VertexId x : ctx.torsion_free()) {
        if ((*facts.hom_injectives)[index(y)][index(x)] != 0) {
          b.fail("Hom(E_" + label(ctx, y) + ", E_" + label(ctx, x) + ") != 0");
        }
      }
    }
    bat.clauses.push_back(b.done());
  } else {
    bat.clauses.push_back(ClauseBuilder::skipped("Hom(E_y, E_x) = 0 for torsion y and x in X",
                                                 "no oracle data for this coalgebra"));
  }
  if (colocalizing_exists(ctx).exists) {
    ClauseBuilder b("H(S_x) = S_x for every x in X");
    for (VertexId x : ctx.torsion_free()) {
      if (!h_on_simple(ctx, x).is_simple()) b.fail(label(ctx, x));
    }
    bat.clauses.push_back(b.done());
  } else {
    bat.clauses.push_back(ClauseBuilder::skipped("H(S_x) = S_x for every x in X",
                                                 "H does not exist"));
  }
  return bat;
}

EquivalenceBattery is_right_semicentral(const LocalizationContext& ctx, const CoalgebraFacts* given) {
  std::optional<CoalgebraFacts> local;
  const CoalgebraFacts& facts = facts_or(ctx, given, local);
  EquivalenceBattery bat{"right semicentral", {}};

  {
    ClauseBuilder b("Ce = eCe");
    for (VertexId x : ctx.torsion_free()) {
      for (const Path& p : short_paths(ctx, x, false)) {
        if (ctx.is_torsion(p.source())) b.fail(ctx.quiver().format(p));
      }
    }
    bat.clauses.push_back(b.done());
  }
  bat.clauses.push_back(no_gamma_arrow(ctx, facts.gamma, false));
  bat.clauses.push_back(no_gamma_path(ctx, facts.gamma, false));
  {
    ClauseBuilder b("T(E_x) = E_x for every x in X");
    for (VertexId x : ctx.torsion_free()) {
      const PathComodule e = injective_of(ctx, x);
      if (t_dimension(ctx, e) != e.dimension()) b.fail(label(ctx, x));
    }
    bat.clauses.push_back(b.done());
  }
  {
    ClauseBuilder b("S(S_x) = S_x for every x in X");
    for (VertexId x : ctx.torsion_free()) {
      const SectionResult s = section_on_simple(ctx, x);
      if (!s.finite || s.comodule->dimension() != 1) b.fail(label(ctx, x));
    }
    bat.clauses.push_back(b.done());
  }
  {
    ClauseBuilder b("torsion part is (1-e)M");
    for (VertexId v : ctx.quiver().vertices()) {
      const PathComodule e = injective_of(ctx, v);
      for (const PathComodule& m : {simple(ctx.coalgebra(), v), e, quotient_by_socle(e, 1)}) {
        const PathComodule t = torsion_subcomodule(ctx, m);
        for (std::size_t i = 0; i < m.components().size(); ++i) {
          const auto all = m.surviving(i);
          const auto kept = t.surviving(i);
          std::vector<Path> torsion_source;
          for (const Path& p : all) {
            if (ctx.is_torsion(p.source())) torsion_source.push_back(p);
          }
          if (kept != torsion_source) b.fail("a comodule built on E_" + label(ctx, v));
        }
      }
    }
    bat.clauses.push_back(b.done());
  }
  if (facts.hom_injectives) {
    ClauseBuilder b("Hom(E_x, E_y) = 0 for x in X and torsion y");
    for (VertexId x : ctx.torsion_free()) {
      for (VertexId y : ctx.torsion()) {
        if ((*facts.hom_injectives)[index(x)][index(y)] != 0) {
          b.fail("Hom(E_" + label(ctx, x) + ", E_" + label(ctx, y) + ") != 0");
        }
      }
    }
    bat.clauses.push_back(b.done());
  } else {
    bat.clauses.push_back(ClauseBuilder::skipped("Hom(E_x, E_y) = 0 for x in X and torsion y",
                                                 "no oracle data for this coalgebra"));
  }
  {
    ClauseBuilder b("no vertex of X has a torsion predecessor");
    for (VertexId x : ctx.torsion_free()) {
      for (VertexId y : ctx.torsion()) {
        if (facts.predecessor[index(y)][index(x)]) b.fail(label(ctx, y) + " precedes " + label(ctx, x));
      }
    }
    bat.clauses.push_back(b.done());
  }
  return bat;
}

EquivalenceBattery is_central(const LocalizationContext& ctx, const CoalgebraFacts* given,
                              const EquivalenceBattery* left_given,
                              const EquivalenceBattery* right_given) {
  std::optional<CoalgebraFacts> local;
  const CoalgebraFacts& facts = facts_or(ctx, given, local);
  EquivalenceBattery bat{"central", {}};

  const EquivalenceBattery left = left_given ? *left_given : is_left_semicentral(ctx, &facts);
  const EquivalenceBattery right = right_given ? *right_given : is_right_semicentral(ctx, &facts);
  {
    ClauseBuilder b("left and right semicentral");
    if (!left.verdict()) b.fail("not left semicentral");
    if (!right.verdict()) b.fail("not right semicentral");
    bat.clauses.push_back(b.done());
  }
  {
    ClauseBuilder b("every Gamma arrow stays inside X or inside the torsion vertices");
    for (const auto& [e, m] : facts.gamma.arrows()) {
      if (ctx.in_x(e.first) != ctx.in_x(e.second)) b.fail(label(ctx, e.first) + " -> " + label(ctx, e.second));
    }
    bat.clauses.push_back(b.done());
  }
  {
    ClauseBuilder b("each component of Gamma is all torsion or all torsion-free");
    const auto comp = weak_components(facts.gamma);
    std::vector<int> kind(ctx.quiver().vertex_count(), -1);
    for (VertexId v : ctx.quiver().vertices()) {
      int& k = kind[comp[index(v)]];
      const int here = ctx.in_x(v) ? 1 : 0;
      if (k == -1) k = here;
      if (k != here) b.fail("component of " + label(ctx, v));
    }
    bat.clauses.push_back(b.done());
  }
  {
    ClauseBuilder b("T(E_y) = 0 for torsion y and S(S_x) = S_x for x in X");
    for (VertexId y : ctx.torsion()) {
      if (t_dimension(ctx, injective_of(ctx, y)) != 0) b.fail("T(E_" + label(ctx, y) + ")");
    }
    for (VertexId x : ctx.torsion_free()) {
      const SectionResult s = section_on_simple(ctx, x);
      if (!s.finite || s.comodule->dimension() != 1) b.fail("S(S_" + label(ctx, x) + ")");
    }
    bat.clauses.push_back(b.done());
  }
  if (bat.verdict()) {
    ClauseBuilder b("Gamma of eCe is Gamma of C restricted to X");
    const CellQuiver& cq = localized_coalgebra(ctx);
    const ExtQuiver local_gamma = ext_quiver(*cq.coalgebra);
    for (VertexId x : ctx.torsion_free()) {
      for (VertexId y : ctx.torsion_free()) {
        const auto cx = *cq.from_c[index(x)];
        const auto cy = *cq.from_c[index(y)];
        if (local_gamma.multiplicity(cx, cy) != facts.gamma.multiplicity(x, y)) {
          b.fail(label(ctx, x) + " -> " + label(ctx, y));
        }
      }
    }
    bat.clauses.push_back(b.done());
  } else {
    bat.clauses.push_back(ClauseBuilder::skipped("Gamma of eCe is Gamma of C restricted to X",
                                                 "only a consequence of centrality"));
  }
  return bat;
}

}  // namespace pathloc
