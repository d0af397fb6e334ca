#pragma once

// Smooth rational tropical curves L in R^r: a tree of vertices, bounded edges
// and rays, every direction primitive and every weight 1.

#include <compare>
#include <string>
#include <vector>

#include "msl/lattice.hpp"

namespace msl {

enum class CellKind { Vertex = 0, Edge = 1, Ray = 2 };

/// A closed cell of L: vertex, bounded edge or ray, by index.
struct Cell {
  CellKind kind = CellKind::Vertex;
  int index = 0;
  auto operator<=>(const Cell&) const = default;
};

std::string to_string(const Cell& c);

/// A point of L: a vertex, or a cell interior with a lattice-length
/// coordinate measured from the tail (edges) or base vertex (rays).
struct CellRef {
  Cell cell;
  Rational coordinate;
};

/// An edge or ray leaving a vertex, with its primitive outgoing direction.
struct Branch {
  Cell cell;
  IntVector direction;
};

struct TargetCurve {
  struct Edge {
    int tail = 0;
    int head = 0;
    IntVector direction;  // primitive, from tail to head
    Rational length;
  };
  struct Ray {
    int vertex = 0;
    IntVector direction;  // primitive, outgoing
  };

  int ambient_dim = 0;
  std::vector<RatVector> vertices;
  std::vector<Edge> edges;
  std::vector<Ray> rays;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int valence(int v) const;
  /// Bounded edges first (by index), then rays (by index).
  std::vector<Branch> branches(int v) const;
  /// Vertices of a closed cell: one for a vertex or ray, two for an edge.
  std::vector<int> cell_vertices(const Cell& c) const;
  /// Direction of the cell as seen from its endpoint v (edge or ray).
  IntVector direction_from(const Cell& c, int v) const;
  RatVector point(const CellRef& ref) const;
};

/// Single vertex at the origin of R^q with rays -e_1, ..., -e_q, e_1 + ... + e_q.
TargetCurve standard_line(int q);

struct Violation {
  std::string code;
  std::string message;
};

/// Structured list of smoothness violations; empty means smooth. Never throws.
std::vector<Violation> validate_smooth(const TargetCurve& l);

enum class LinkKind { VertexLink, EdgeLink };

struct LocalLink {
  LinkKind kind = LinkKind::EdgeLink;
  int q = 0;
  std::vector<IntVector> directions;
};

LocalLink link_at(const TargetCurve& l, const CellRef& c);

struct DirectionMatch {
  Branch branch;
  Integer multiplicity;
};

/// The branch at `vertex` with w = m * direction, m > 0.
/// Throws DomainError("direction not along L") if there is none.
DirectionMatch ray_of_direction(const TargetCurve& l, int vertex, std::span<const Integer> w);

/// Indices of the rays of L with w = m * direction, m > 0. Several rays may
/// share a direction.
std::vector<int> rays_with_direction(const TargetCurve& l, std::span<const Integer> w);

}  // namespace msl
