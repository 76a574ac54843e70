#include "pathloc/problem.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>

#include "pathloc/errors.hpp"
#include "pathloc/extquiver.hpp"
#include "pathloc/oracle.hpp"
#include "pathloc/properties.hpp"
#include "pathloc/verify.hpp"

namespace pathloc {

namespace {

// ---------------------------------------------------------------- lexer

enum class Tok { Word, Colon, Arrow, Star, Comma };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;  // 1-based, in code points
};

std::string describe(const Token* t) {
  if (!t) return "end of line";
  return "'" + t->text + "'";
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }
bool is_punct(char c) { return c == ':' || c == '*' || c == '#' || c == ','; }

std::vector<Token> lex_line(std::string_view line, std::size_t lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  std::size_t column = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if ((static_cast<unsigned char>(line[i]) & 0xC0) != 0x80) ++column;
    }
  };
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (is_space(c)) {
      advance(1);
      continue;
    }
    const std::size_t col = column;
    if (c == ':' || c == '*' || c == ',') {
      out.push_back({c == ':' ? Tok::Colon : c == '*' ? Tok::Star : Tok::Comma, std::string(1, c), lineno, col});
      advance(1);
      continue;
    }
    if (line.substr(i, 2) == "->") {
      out.push_back({Tok::Arrow, "->", lineno, col});
      advance(2);
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j]) && !is_punct(line[j]) && line.substr(j, 2) != "->") ++j;
    out.push_back({Tok::Word, std::string(line.substr(i, j - i)), lineno, col});
    advance(j - i);
  }
  return out;
}

// --------------------------------------------------------------- parser

class Parser {
 public:
  explicit Parser(std::string_view text) {
    std::size_t lineno = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t end = std::min(text.find('\n', start), text.size());
      ++lineno;
      auto toks = lex_line(text.substr(start, end - start), lineno);
      if (!toks.empty()) lines_.push_back(std::move(toks));
      end_column_ = utf8_length(text.substr(start, end - start)) + 1;
      start = end + 1;
    }
    last_line_ = lineno;
  }

  Problem parse() {
    if (lines_.empty()) throw SyntaxError(1, 1, "'quiver'", "end of input");
    const auto& head = lines_.front();
    if (head[0].kind != Tok::Word || head[0].text != "quiver") {
      throw SyntaxError(head[0].line, head[0].column, "'quiver'", describe(&head[0]));
    }
    end_of(head, 1);
    for (std::size_t l = 1; l < lines_.size(); ++l) statement(lines_[l]);
    if (!coalgebra_seen_) throw SyntaxError(last_line_, end_column_, "'coalgebra'", "end of input");

    Problem p;
    p.quiver = quiver_;
    p.localize = localize_;
    p.cap = cap_;
    p.notices = std::move(notices_);
    p.coalgebra = coalgebra_;
    return p;
  }

 private:
  void end_of(const std::vector<Token>& toks, std::size_t at) {
    if (at < toks.size()) throw SyntaxError(toks[at].line, toks[at].column, "end of line", describe(&toks[at]));
  }

  const Token& word(const std::vector<Token>& toks, std::size_t at, const std::string& what) {
    if (at >= toks.size()) {
      const Token& last = toks.back();
      throw SyntaxError(last.line, last.column + utf8_length(last.text), what, "end of line");
    }
    if (toks[at].kind != Tok::Word) throw SyntaxError(toks[at].line, toks[at].column, what, describe(&toks[at]));
    return toks[at];
  }

  void expect(const std::vector<Token>& toks, std::size_t at, Tok kind, const std::string& what) {
    if (at >= toks.size()) {
      const Token& last = toks.back();
      throw SyntaxError(last.line, last.column + utf8_length(last.text), what, "end of line");
    }
    if (toks[at].kind != kind) throw SyntaxError(toks[at].line, toks[at].column, what, describe(&toks[at]));
  }

  static std::size_t utf8_length(std::string_view s) {
    return static_cast<std::size_t>(std::count_if(
        s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
  }

  void fresh_id(const Token& t) {
    if (quiver_->find_vertex(t.text) || quiver_->find_arrow(t.text)) {
      throw SemanticError(t.line, t.column, t.text, "duplicate id");
    }
  }

  VertexId known_vertex(const Token& t) {
    if (auto v = quiver_->find_vertex(t.text)) return *v;
    throw SemanticError(t.line, t.column, t.text, "unknown vertex");
  }

  void quiver_open(const Token& t) {
    if (coalgebra_seen_) {
      throw SemanticError(t.line, t.column, t.text, "the quiver is fixed once the coalgebra is declared");
    }
  }

  void statement(const std::vector<Token>& toks) {
    const Token& kw = toks[0];
    const std::string& k = kw.kind == Tok::Word ? kw.text : std::string();
    if (k == "vertex") {
      quiver_open(kw);
      const Token& id = word(toks, 1, "vertex id");
      end_of(toks, 2);
      fresh_id(id);
      quiver_->add_vertex(id.text);
    } else if (k == "arrow") {
      quiver_open(kw);
      const Token& id = word(toks, 1, "arrow id");
      expect(toks, 2, Tok::Colon, "':'");
      const Token& src = word(toks, 3, "source vertex");
      expect(toks, 4, Tok::Arrow, "'->'");
      const Token& tgt = word(toks, 5, "target vertex");
      end_of(toks, 6);
      fresh_id(id);
      quiver_->add_arrow(id.text, known_vertex(src), known_vertex(tgt));
    } else if (k == "coalgebra") {
      once(coalgebra_seen_, kw);
      coalgebra(toks);
    } else if (k == "localize") {
      once(localize_seen_, kw);
      word(toks, 1, "vertex id");
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (toks[i].kind == Tok::Comma) continue;
        const Token& id = word(toks, i, "vertex id");
        const VertexId v = known_vertex(id);
        if (std::find(localize_.begin(), localize_.end(), v) != localize_.end()) {
          throw SemanticError(id.line, id.column, id.text, "vertex listed twice");
        }
        localize_.push_back(v);
      }
    } else if (k == "cap") {
      once(cap_seen_, kw);
      const Token& n = word(toks, 1, "integer");
      end_of(toks, 2);
      std::size_t value = 0;
      const auto [ptr, ec] = std::from_chars(n.text.data(), n.text.data() + n.text.size(), value);
      if (ec != std::errc() || ptr != n.text.data() + n.text.size()) {
        throw SyntaxError(n.line, n.column, "integer", describe(&n));
      }
      if (value == 0) throw SemanticError(n.line, n.column, n.text, "cap must be positive");
      cap_ = value;
    } else {
      throw SyntaxError(kw.line, kw.column, "one of 'vertex', 'arrow', 'coalgebra', 'localize', 'cap'",
                        describe(&kw));
    }
  }

  void once(bool& seen, const Token& kw) {
    if (seen) throw SemanticError(kw.line, kw.column, kw.text, "duplicate declaration");
    seen = true;
  }

  void coalgebra(const std::vector<Token>& toks) {
    const Token& mode = word(toks, 1, "'full', 'paths' or 'basis'");
    if (mode.text == "full") {
      end_of(toks, 2);
      coalgebra_ = share(PathCoalgebra::full(quiver_));
      return;
    }
    if (mode.text != "paths" && mode.text != "basis") {
      throw SyntaxError(mode.line, mode.column, "'full', 'paths' or 'basis'", describe(&mode));
    }
    std::vector<std::pair<Path, const Token*>> listed;
    std::size_t i = 2;
    while (i < toks.size()) {
      if (toks[i].kind == Tok::Comma) {
        ++i;
        continue;
      }
      const Token& first = word(toks, i, "path");
      std::vector<const Token*> parts{&first};
      ++i;
      while (i < toks.size() && toks[i].kind == Tok::Star) {
        parts.push_back(&word(toks, i + 1, "arrow id"));
        i += 2;
      }
      listed.emplace_back(path_of(parts), &first);
    }
    if (listed.empty()) word(toks, 2, "path");

    std::vector<Path> gens;
    for (const auto& [p, t] : listed) gens.push_back(p);
    if (mode.text == "basis") {
      std::set<Path> have(gens.begin(), gens.end());
      for (const Path& p : close_under_subpaths(*quiver_, gens)) {
        if (have.contains(p)) continue;
        const Token* at = &mode;
        for (const auto& [g, t] : listed) {
          if (contains_subpath(g, p)) {
            at = t;
            break;
          }
        }
        throw SemanticError(at->line, at->column, quiver_->format(p), "basis is missing the subpath");
      }
      coalgebra_ = share(PathCoalgebra::finite(quiver_, close_under_subpaths(*quiver_, gens)));
      return;
    }
    const auto closed = close_under_subpaths(*quiver_, gens);
    const std::set<Path> given(gens.begin(), gens.end());
    std::string added;
    for (const Path& p : closed) {
      if (!given.contains(p)) added += (added.empty() ? "" : ",") + quiver_->format(p);
    }
    if (!added.empty()) notices_.push_back("closed the path list under subpaths, adding " + added);
    coalgebra_ = share(PathCoalgebra::finite(quiver_, closed));
  }

  static bool contains_subpath(const Path& g, const Path& p) {
    for (std::size_t a = 0; a + p.length() <= g.length(); ++a) {
      if (g.subpath(a, a + p.length()) == p) return true;
    }
    return false;
  }

  Path path_of(const std::vector<const Token*>& parts) {
    if (parts.size() == 1) {
      if (auto v = quiver_->find_vertex(parts[0]->text)) return Path::trivial(*v);
    }
    std::vector<ArrowId> arrows;
    for (const Token* t : parts) {
      auto a = quiver_->find_arrow(t->text);
      if (!a) {
        const bool vertex = quiver_->find_vertex(t->text).has_value();
        throw SemanticError(t->line, t->column, t->text, vertex ? "vertex inside a product" : "unknown id");
      }
      if (!arrows.empty() && quiver_->target(arrows.back()) != quiver_->source(*a)) {
        throw SemanticError(t->line, t->column, t->text, "arrow does not compose with its predecessor");
      }
      arrows.push_back(*a);
    }
    return quiver_->path(arrows);
  }

  std::vector<std::vector<Token>> lines_;
  // Position just past the last character of the input.
  std::size_t last_line_ = 0;
  std::size_t end_column_ = 1;
  std::shared_ptr<Quiver> quiver_ = std::make_shared<Quiver>();
  CoalgebraPtr coalgebra_;
  bool coalgebra_seen_ = false;
  bool localize_seen_ = false;
  bool cap_seen_ = false;
  std::vector<VertexId> localize_;
  std::size_t cap_ = 16;
  std::vector<std::string> notices_;
};

}  // namespace

std::vector<VertexId> Problem::torsion_free() const {
  return localize.empty() ? quiver->vertices() : localize;
}

LocalizationContext Problem::context() const { return LocalizationContext(coalgebra, torsion_free(), cap); }

Problem parse_problem(std::string_view text) { return Parser(text).parse(); }

std::string print_problem(const Problem& p) {
  const Quiver& q = *p.quiver;
  std::string out = "quiver\n";
  for (VertexId v : q.vertices()) out += "vertex " + q.label(v) + "\n";
  for (ArrowId a : q.arrows()) {
    out += "arrow " + q.label(a) + " : " + q.label(q.source(a)) + " -> " + q.label(q.target(a)) + "\n";
  }
  if (p.coalgebra->is_full()) {
    out += "coalgebra full\n";
  } else {
    out += "coalgebra basis";
    for (const Path& b : p.coalgebra->basis()) out += " " + q.format(b);
    out += "\n";
  }
  if (!p.localize.empty()) {
    out += "localize";
    for (VertexId v : p.localize) out += " " + q.label(v);
    out += "\n";
  }
  if (p.cap != 16) out += "cap " + std::to_string(p.cap) + "\n";
  return out;
}

bool equivalent(const Problem& a, const Problem& b) {
  return *a.quiver == *b.quiver && *a.coalgebra == *b.coalgebra && a.torsion_free() == b.torsion_free() &&
         a.cap == b.cap;
}

// --------------------------------------------------------------- runner

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

class Report {
 public:
  void kv(const std::string& key, const std::string& value) { out_ += key + " = " + value + "\n"; }
  void kv(const std::string& key, std::size_t value) { kv(key, std::to_string(value)); }
  void kv(const std::string& key, bool value) { kv(key, std::string(value ? "true" : "false")); }
  void kv(const std::string& key, const char* value) { kv(key, std::string(value)); }
  std::string take() { return std::move(out_); }

 private:
  std::string out_;
};

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ",") + s;
  return out;
}

std::string list(const Quiver& q, const std::vector<VertexId>& vs) {
  std::vector<std::string> items;
  for (VertexId v : vs) items.push_back(q.label(v));
  return join(items);
}

std::string list(const Quiver& q, const VertexMultiset& m) {
  std::vector<std::string> items;
  for (const auto& [v, k] : m) {
    for (std::size_t i = 0; i < k; ++i) items.push_back(q.label(v));
  }
  return join(items);
}

std::string list(const Quiver& q, const std::vector<Path>& ps) {
  std::vector<std::string> items;
  for (const Path& p : ps) items.push_back(q.format(p));
  return join(items);
}

struct NamedModule {
  std::string name;
  PathComodule module;
  bool truncated = false;
};

std::optional<std::size_t> cap_of(const Problem& p, VertexId v) {
  return p.coalgebra->infinite_into_witness(v) ? std::optional(p.cap) : std::nullopt;
}

std::string trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return std::string(s);
}

NamedModule module_from_spec(const Problem& p, const std::string& spec) {
  std::vector<PathComodule> parts;
  bool truncated = false;
  std::string_view rest = spec;
  while (true) {
    const std::size_t comma = rest.find(',');
    const std::string item = trim(rest.substr(0, comma));
    if (item.size() < 3 || item[1] != '_' || (item[0] != 'S' && item[0] != 'E')) {
      throw UsageError("bad module spec '" + item + "': expected S_v, E_v or E_v/n");
    }
    std::string label = item.substr(2);
    std::size_t n = 0;
    const std::size_t slash = label.rfind('/');
    if (item[0] == 'E' && slash != std::string::npos) {
      const std::string digits = label.substr(slash + 1);
      const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
      if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw UsageError("bad module spec '" + item + "': expected E_v/n");
      }
      label.resize(slash);
    }
    const auto v = p.quiver->find_vertex(label);
    if (!v) throw UsageError("bad module spec '" + item + "': unknown vertex '" + label + "'");
    if (item[0] == 'S') {
      parts.push_back(simple(p.coalgebra, *v));
    } else {
      const auto cap = cap_of(p, *v);
      truncated |= cap.has_value();
      parts.push_back(quotient_by_socle(injective(p.coalgebra, *v, cap), n));
    }
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  PathComodule m = parts.size() == 1 ? parts[0] : direct_sum(parts);
  std::string name;
  for (char c : spec) {
    if (!is_space(c)) name += c == ',' ? '+' : c;
  }
  return {name, std::move(m), truncated};
}

std::vector<VertexId> selected(const Problem& p, const RunOptions& opts, const std::vector<VertexId>& pool) {
  if (!opts.vertex) return pool;
  const auto v = p.quiver->find_vertex(*opts.vertex);
  if (!v) throw UsageError("unknown vertex '" + *opts.vertex + "'");
  if (std::find(pool.begin(), pool.end(), *v) == pool.end()) {
    throw UsageError("vertex '" + *opts.vertex + "' is not valid for this command");
  }
  return {*v};
}

std::vector<NamedModule> modules(const Problem& p, const RunOptions& opts) {
  std::vector<NamedModule> out;
  if (opts.modules.empty()) {
    for (VertexId v : selected(p, opts, p.quiver->vertices())) {
      out.push_back(module_from_spec(p, "E_" + p.quiver->label(v)));
    }
  }
  for (const auto& spec : opts.modules) out.push_back(module_from_spec(p, spec));
  return out;
}

void loewy_lines(Report& r, const std::string& prefix, const Quiver& q, const LoewySeries& s) {
  for (std::size_t i = 1; i <= s.loewy_length(); ++i) r.kv(prefix + "." + std::to_string(i), list(q, s.layer(i)));
}

std::string dimension_text(const PathCoalgebra& c) {
  return c.is_finite_dimensional() ? std::to_string(c.dimension()) : "infinite";
}

// ------------------------------------------------------------- commands

void cmd_ext_quiver(const Problem& p, const RunOptions&, Report& r) {
  const Quiver& q = *p.quiver;
  const ExtQuiver g = ext_quiver(*p.coalgebra);
  std::vector<std::string> arrows;
  for (const auto& [e, m] : g.arrows()) {
    for (std::size_t i = 0; i < m; ++i) arrows.push_back(q.label(e.first) + "->" + q.label(e.second));
  }
  r.kv("ext_quiver.vertices", list(q, q.vertices()));
  r.kv("ext_quiver.arrows", join(arrows));
  const auto comp = weak_components(g);
  r.kv("ext_quiver.components", comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1);
  r.kv("coalgebra.dim", dimension_text(*p.coalgebra));
  r.kv("coalgebra.hereditary", is_hereditary(*p.coalgebra));
}

void cmd_loewy(const Problem& p, const RunOptions& opts, Report& r) {
  for (const NamedModule& m : modules(p, opts)) {
    const std::string k = "loewy." + m.name;
    const LoewySeries s = socle_series(m.module);
    r.kv(k + ".dim", m.module.dimension());
    r.kv(k + ".truncated", m.truncated);
    r.kv(k + ".length", s.loewy_length());
    loewy_lines(r, k + ".layer", *p.quiver, s);
  }
}

void cmd_predecessors(const Problem& p, const RunOptions& opts, Report& r) {
  const Quiver& q = *p.quiver;
  for (VertexId x : selected(p, opts, q.vertices())) {
    const std::string k = "predecessors." + q.label(x);
    for (std::size_t n = 1; n <= std::max<std::size_t>(opts.n, 1); ++n) {
      const auto entries = n_predecessors(*p.coalgebra, x, n).entries;
      r.kv(k + "." + std::to_string(n), list(q, VertexMultiset(entries.begin(), entries.end())));
    }
    for (VertexId y : q.vertices()) {
      const auto n = is_predecessor(*p.coalgebra, y, x);
      r.kv("is_predecessor." + q.label(y) + "." + q.label(x), n ? std::to_string(*n) : "false");
    }
  }
}

void cmd_localize(const Problem& p, const RunOptions&, Report& r) {
  const LocalizationContext ctx = p.context();
  const Quiver& q = *p.quiver;
  r.kv("localize.X", list(q, ctx.torsion_free()));
  r.kv("localize.torsion", list(q, ctx.torsion()));
  try {
    const CellQuiver& cq = ctx.cells();
    r.kv("localize.cells.finite", true);
    r.kv("localize.ece.vertices", list(*cq.quiver, cq.quiver->vertices()));
    r.kv("localize.ece.cells", list(q, cq.cells));
    for (std::size_t i = 0; i < cq.cells.size(); ++i) {
      const Path& cell = cq.cells[i];
      r.kv("localize.ece.cell." + std::to_string(i + 1),
           q.format(cell) + " : " + q.label(cell.source()) + " -> " + q.label(cell.target()));
    }
    r.kv("localize.ece.full", cq.coalgebra->is_full());
    r.kv("localize.ece.dim", dimension_text(*cq.coalgebra));
  } catch (const CapacityError& e) {
    r.kv("localize.cells.finite", false);
    r.kv("localize.cells.witness", e.witness());
  }
  const auto coloc = colocalizing_exists(ctx);
  r.kv("localize.colocalizing", coloc.exists);
}

void cmd_section(const Problem& p, const RunOptions& opts, Report& r) {
  const LocalizationContext ctx = p.context();
  const Quiver& q = *p.quiver;
  for (VertexId x : selected(p, opts, ctx.torsion_free())) {
    const std::string k = "section.S_" + q.label(x);
    const SectionResult s = section_on_simple(ctx, x);
    r.kv(k + ".finite", s.finite);
    if (!s.finite) {
      r.kv(k + ".dim", "infinite");
      if (s.witness) r.kv(k + ".witness", q.format(*s.witness));
      continue;
    }
    r.kv(k + ".dim", s.comodule->dimension());
    r.kv(k + ".basis", list(q, s.comodule->surviving(0)));
    loewy_lines(r, k + ".loewy", q, socle_series(*s.comodule));
  }
}

std::string summand(const CellQuiver& cq, const PathComodule& m, std::size_t i) {
  const Quiver& q = *cq.quiver;
  const VertexId a = m.components()[i].anchor;
  const auto surviving = m.surviving(i);
  if (surviving.size() == 1) return "S_" + q.label(a);
  if (!cq.coalgebra->infinite_into_witness(a) && surviving == cq.coalgebra->paths_into(a)) {
    return "Ebar_" + q.label(a);
  }
  return "M_" + q.label(a) + "[" + std::to_string(surviving.size()) + "]";
}

void cmd_quotient(const Problem& p, const RunOptions& opts, Report& r) {
  const LocalizationContext ctx = p.context();
  const CellQuiver& cq = ctx.cells();
  const Quiver& cq_q = *cq.quiver;
  for (const NamedModule& m : modules(p, opts)) {
    const std::string k = "quotient." + m.name;
    const PathComodule t = quotient_T(ctx, m.module);
    r.kv(k + ".dim", t.dimension());
    r.kv(k + ".truncated", m.truncated);
    std::vector<std::string> summands;
    for (std::size_t i = 0; i < t.components().size(); ++i) {
      if (!t.surviving(i).empty()) summands.push_back(summand(cq, t, i));
    }
    r.kv(k + ".summands", join(summands));
    r.kv(k + ".components", t.components().size());
    for (std::size_t i = 0; i < t.components().size(); ++i) {
      const std::string c = k + ".component." + std::to_string(i + 1);
      r.kv(c + ".anchor", cq_q.label(t.components()[i].anchor));
      r.kv(c + ".basis", list(cq_q, t.surviving(i)));
    }
    loewy_lines(r, k + ".loewy", cq_q, socle_series(t));
  }
}

void cmd_torsion_sub(const Problem& p, const RunOptions& opts, Report& r) {
  const LocalizationContext ctx = p.context();
  const Quiver& q = *p.quiver;
  for (const NamedModule& m : modules(p, opts)) {
    const std::string k = "torsion_sub." + m.name;
    const PathComodule t = torsion_subcomodule(ctx, m.module);
    r.kv(k + ".dim", t.dimension());
    r.kv(k + ".truncated", m.truncated);
    std::vector<Path> basis;
    for (std::size_t i = 0; i < t.components().size(); ++i) {
      for (const Path& s : t.surviving(i)) basis.push_back(s);
    }
    r.kv(k + ".basis", list(q, basis));
    loewy_lines(r, k + ".loewy", q, socle_series(t));
  }
}

constexpr std::size_t kOracleLimit = 200;

void cmd_coloc(const Problem& p, const RunOptions& opts, Report& r) {
  const LocalizationContext ctx = p.context();
  const Quiver& q = *p.quiver;
  const auto verdict = colocalizing_exists(ctx);
  r.kv("coloc.exists", verdict.exists);
  if (!verdict.exists) {
    if (verdict.witness) r.kv("coloc.witness", q.format(*verdict.witness));
    return;
  }
  const CellQuiver& cq = ctx.cells();
  std::optional<LinearComodule> ec;
  std::optional<LinearComodule> whole;
  if (!opts.no_oracle && p.coalgebra->is_finite_dimensional() && p.coalgebra->dimension() <= kOracleLimit) {
    ec = ec_over_ece(ctx);
    std::vector<PathComodule> parts;
    for (VertexId v : q.vertices()) parts.push_back(injective(p.coalgebra, v));
    whole = realize(direct_sum(parts));
  }
  for (VertexId x : selected(p, opts, ctx.torsion_free())) {
    const std::string k = "coloc.H_" + q.label(x);
    const HSimple h = h_on_simple(ctx, x);
    r.kv(k + ".dim", h.dimension());
    r.kv(k + ".simple", h.is_simple());
    r.kv(k + ".basis", list(q, h.basis));
    if (ec) {
      const std::string s = "coloc.S_" + q.label(x);
      r.kv(s + ".hom_c", hom_dim(realize(simple(p.coalgebra, x)), *whole));
      r.kv(s + ".hom_ec", hom_dim(realize(simple(cq.coalgebra, *cq.from_c[index(x)])), *ec));
    }
  }
}

bool battery_lines(Report& r, const std::string& key, const EquivalenceBattery& b) {
  r.kv(key + ".verdict", b.verdict());
  r.kv(key + ".coherent", b.coherent());
  for (std::size_t i = 0; i < b.clauses.size(); ++i) {
    const Clause& c = b.clauses[i];
    const std::string k = key + ".clause." + std::to_string(i + 1);
    r.kv(k + ".label", c.label);
    r.kv(k + ".state", c.state == ClauseState::True ? "true" : c.state == ClauseState::False ? "false" : "skipped");
    if (!c.evidence.empty()) r.kv(k + ".evidence", c.evidence);
  }
  return b.coherent();
}

int cmd_battery(const Problem& p, const RunOptions& opts, Report& r, int which) {
  const LocalizationContext ctx = p.context();
  const CoalgebraFacts facts = coalgebra_facts(p.coalgebra, !opts.no_oracle, kOracleLimit);
  bool ok = false;
  switch (which) {
    case 0: ok = battery_lines(r, "left_semicentral", is_left_semicentral(ctx, &facts)); break;
    case 1: ok = battery_lines(r, "right_semicentral", is_right_semicentral(ctx, &facts)); break;
    default: ok = battery_lines(r, "central", is_central(ctx, &facts)); break;
  }
  return ok ? kExitOk : kExitVerify;
}

int cmd_verify(const Problem& p, const RunOptions& opts, Report& r) {
  const LocalizationContext ctx = p.context();
  VerifyOptions vo;
  vo.oracle = !opts.no_oracle;
  vo.max_layer = std::max<std::size_t>(opts.n, 3);
  const VerifyReport report = verify(ctx, vo);
  r.kv("verify.checks", report.checks.size());
  r.kv("verify.failed", report.failures());
  r.kv("verify.skipped", report.skipped());
  for (std::size_t i = 0; i < report.checks.size(); ++i) {
    const Check& c = report.checks[i];
    const std::string k = "verify.check." + std::to_string(i + 1);
    r.kv(k + ".name", c.name);
    r.kv(k + ".state", c.state == CheckState::Passed ? "passed" : c.state == CheckState::Failed ? "failed" : "skipped");
    if (!c.detail.empty()) r.kv(k + ".detail", c.detail);
  }
  return report.failures() == 0 ? kExitOk : kExitVerify;
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{
      "ext-quiver", "loewy", "predecessors", "localize", "section", "quotient", "torsion-sub", "coloc",
      "check-left-semicentral", "check-right-semicentral", "check-central", "verify"};
  return names;
}

RunResult run(const std::string& command, std::string_view text, const RunOptions& opts) {
  RunResult result;
  const auto& known = commands();
  if (std::find(known.begin(), known.end(), command) == known.end()) {
    result.exit_code = kExitUsage;
    result.err = "error: unsupported command '" + command + "'\n";
    return result;
  }
  try {
    const Problem p = parse_problem(text);
    for (const auto& n : p.notices) result.err += "notice: " + n + "\n";
    Report r;
    int code = kExitOk;
    if (command == "ext-quiver") cmd_ext_quiver(p, opts, r);
    else if (command == "loewy") cmd_loewy(p, opts, r);
    else if (command == "predecessors") cmd_predecessors(p, opts, r);
    else if (command == "localize") cmd_localize(p, opts, r);
    else if (command == "section") cmd_section(p, opts, r);
    else if (command == "quotient") cmd_quotient(p, opts, r);
    else if (command == "torsion-sub") cmd_torsion_sub(p, opts, r);
    else if (command == "coloc") cmd_coloc(p, opts, r);
    else if (command == "check-left-semicentral") code = cmd_battery(p, opts, r, 0);
    else if (command == "check-right-semicentral") code = cmd_battery(p, opts, r, 1);
    else if (command == "check-central") code = cmd_battery(p, opts, r, 2);
    else code = cmd_verify(p, opts, r);
    result.out = r.take();
    result.exit_code = code;

    if (opts.dot_path) {
      std::map<VertexId, Fill> fills;
      const auto x = p.torsion_free();
      for (VertexId v : p.quiver->vertices()) {
        fills[v] = std::find(x.begin(), x.end(), v) != x.end() ? Fill::White : Fill::Black;
      }
      std::ofstream f(*opts.dot_path, std::ios::binary);
      f << export_dot(*p.quiver, fills);
      if (!f) throw UsageError("cannot write '" + *opts.dot_path + "'");
    }
  } catch (const SyntaxError& e) {
    result = {kExitUsage, {}, result.err + "syntax error: " + e.what() + "\n"};
  } catch (const UsageError& e) {
    result = {kExitUsage, {}, result.err + "error: " + e.what() + "\n"};
  } catch (const CapacityError& e) {
    result = {kExitCapacity, {}, result.err + "capacity: " + e.what() + "\n"};
  } catch (const InternalError& e) {
    result = {kExitVerify, {}, result.err + "internal: " + e.what() + "\n"};
  } catch (const Error& e) {
    result = {kExitSemantic, {}, result.err + "error: " + e.what() + "\n"};
  } catch (const std::exception& e) {
    result = {kExitVerify, {}, result.err + "internal: " + e.what() + "\n"};
  }
  return result;
}

}  // namespace pathloc
