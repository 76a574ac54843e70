#pragma once

// Finite directed multigraphs and their paths.
//
// Paths compose left to right: p = a1 a2 ... an with target(ai) ==
// source(ai+1), so source(p) = source(a1) and target(p) = target(an).
// Vertices and arrows iterate in insertion order; paths order by
// (length, arrow-id sequence), where arrow ids are insertion indices.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace pathloc {

enum class VertexId : std::uint32_t {};
enum class ArrowId : std::uint32_t {};

constexpr std::size_t index(VertexId v) noexcept { return static_cast<std::size_t>(v); }
constexpr std::size_t index(ArrowId a) noexcept { return static_cast<std::size_t>(a); }
constexpr VertexId vertex_at(std::size_t i) noexcept { return static_cast<VertexId>(i); }
constexpr ArrowId arrow_at(std::size_t i) noexcept { return static_cast<ArrowId>(i); }

class Quiver;

/// A path of a quiver, stored as its arrow sequence together with the
/// sequence of visited vertices (length + 1 of them).
class Path {
 public:
  using ArrowSeq = boost::container::small_vector<ArrowId, 6>;
  using VertexSeq = boost::container::small_vector<VertexId, 7>;

  /// The trivial path e_v.
  static Path trivial(VertexId v);

  std::size_t length() const noexcept { return arrows_.size(); }
  bool is_trivial() const noexcept { return arrows_.empty(); }
  VertexId source() const noexcept { return vertices_.front(); }
  VertexId target() const noexcept { return vertices_.back(); }
  std::span<const ArrowId> arrows() const noexcept { return {arrows_.data(), arrows_.size()}; }
  /// Visited vertices, source first. Size is length() + 1.
  std::span<const VertexId> vertices() const noexcept { return {vertices_.data(), vertices_.size()}; }

  /// Arrows [first, last) as a path; first == last yields the trivial path
  /// at the vertex in position `first`.
  Path subpath(std::size_t first, std::size_t last) const;
  /// The suffix with `len` arrows (ends at target()).
  Path terminal(std::size_t len) const { return subpath(length() - len, length()); }
  /// The prefix with `len` arrows (starts at source()).
  Path initial(std::size_t len) const { return subpath(0, len); }

  /// this * other; requires target() == other.source().
  Path then(const Path& other) const;

  friend bool operator==(const Path&, const Path&) = default;
  friend std::strong_ordering operator<=>(const Path& a, const Path& b);

 private:
  friend class Quiver;
  Path() = default;

  ArrowSeq arrows_;
  VertexSeq vertices_;
};

struct PathHash {
  std::size_t operator()(const Path& p) const noexcept;
};

struct Arrow {
  std::string label;
  VertexId source;
  VertexId target;
};

/// A finite quiver. Labels are unique among vertices and among arrows.
/// Loops and parallel arrows are allowed.
class Quiver {
 public:
  VertexId add_vertex(std::string label);
  ArrowId add_arrow(std::string label, VertexId source, VertexId target);

  std::size_t vertex_count() const noexcept { return vertex_labels_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  std::vector<VertexId> vertices() const;
  std::vector<ArrowId> arrows() const;

  const std::string& label(VertexId v) const;
  const std::string& label(ArrowId a) const;
  const Arrow& arrow(ArrowId a) const;
  VertexId source(ArrowId a) const { return arrow(a).source; }
  VertexId target(ArrowId a) const { return arrow(a).target; }

  std::optional<VertexId> find_vertex(std::string_view label) const;
  std::optional<ArrowId> find_arrow(std::string_view label) const;
  /// Throws DomainError for an unknown label.
  VertexId vertex(std::string_view label) const;
  ArrowId arrow_id(std::string_view label) const;

  std::span<const ArrowId> in_arrows(VertexId v) const;
  std::span<const ArrowId> out_arrows(VertexId v) const;

  void check(VertexId v) const;
  void check(ArrowId a) const;

  Path path(std::span<const ArrowId> arrows) const;
  Path path(std::initializer_list<ArrowId> arrows) const {
    return path(std::span<const ArrowId>(arrows.begin(), arrows.size()));
  }
  /// Parses "x" (trivial) or "a*b*c".
  Path parse_path(std::string_view text) const;
  std::string format(const Path& p) const;

  /// Same vertices, every arrow reversed (labels kept).
  Quiver opposite() const;

  friend bool operator==(const Quiver&, const Quiver&);

 private:
  std::vector<std::string> vertex_labels_;
  std::vector<Arrow> arrows_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, ArrowId> arrow_index_;
  std::vector<std::vector<ArrowId>> in_;
  std::vector<std::vector<ArrowId>> out_;
};

/// All paths of length <= max_len ending at `target`, each exactly once,
/// sorted by (length, arrow sequence).
std::vector<Path> enumerate_paths(const Quiver& q, VertexId target, std::size_t max_len);

/// Same, for paths starting at `source`.
std::vector<Path> enumerate_paths_from(const Quiver& q, VertexId source, std::size_t max_len);

/// Depth-first walk over paths ending at `target`, grown backwards one
/// arrow at a time. `visit` is called on every path (the trivial one
/// first) and returns whether the walk may extend it further.
void walk_paths_into(const Quiver& q, VertexId target, std::size_t max_len,
                     const std::function<bool(const Path&)>& visit);

/// True iff q has no directed cycle. Loops count as cycles.
bool is_acyclic(const Quiver& q);

/// Some directed cycle all of whose vertices satisfy `allowed`, through
/// `through` when given. The cycle starts and ends at the same vertex.
std::optional<Path> find_cycle(const Quiver& q, const std::function<bool(VertexId)>& allowed,
                               std::optional<VertexId> through = std::nullopt);

/// Vertices reachable from `from` by walking arrows forward (or backward)
/// where every vertex stepped onto satisfies `allowed`. The start set is
/// included unconditionally.
std::vector<bool> reachable(const Quiver& q, const std::vector<VertexId>& from,
                            const std::function<bool(VertexId)>& allowed, bool backwards = false);

enum class Fill { White, Black };

/// Graphviz rendering. Every vertex needs an entry in `fills`.
std::string export_dot(const Quiver& q, const std::map<VertexId, Fill>& fills);

}  // namespace pathloc
