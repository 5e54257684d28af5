#pragma once

#include <vector>

#include "rauzy/polygon.hpp"

namespace rauzy {

// Linear map of the plane, row-major.
struct Linear2 {
  double a = 1, b = 0, c = 0, d = 1;
  Vec2 operator()(Vec2 p) const { return {a * p.x + b * p.y, c * p.x + d * p.y}; }
  friend Linear2 operator*(const Linear2& l, const Linear2& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
  }
  double operator_norm() const;
};

// R(dst) ⊇ shift + L·R(src).
struct IfsEdge {
  int dst = 0;
  int src = 0;
  Vec2 shift;
};

// Graph-directed system of planar contractions sharing one linear part L:
// R(v) = ∪_{edges into v} (shift + L·R(src)).
class GraphIFS {
 public:
  GraphIFS() = default;
  GraphIFS(int vertices, Linear2 linear, std::vector<IfsEdge> edges);

  int vertices() const { return vertices_; }
  const Linear2& linear() const { return linear_; }
  const std::vector<IfsEdge>& edges() const { return edges_; }
  const std::vector<std::vector<int>>& incoming() const { return incoming_; }
  double contraction() const { return rho_; }

  // Disks containing the attractor pieces (fixed point of the radius recursion).
  Vec2 center(int v) const { return centers_[v]; }
  double radius(int v) const { return radii_[v]; }

  // Images of {0} under all depth-long compositions ending at v.
  std::vector<Vec2> cloud(int v, int depth) const;
  std::vector<std::vector<Vec2>> clouds(int depth) const;

 private:
  int vertices_ = 0;
  Linear2 linear_;
  std::vector<IfsEdge> edges_;
  std::vector<std::vector<int>> incoming_;
  double rho_ = 0;
  std::vector<Vec2> centers_;
  std::vector<double> radii_;
};

// A tile sign·R(vertex) + shift carrying a partition label.
struct TilePiece {
  int vertex = 0;
  int sign = 1;
  Vec2 shift;
  int label = 0;
};

struct Classification {
  enum class Status { Unique, Ambiguous, Outside } status = Status::Outside;
  int label = -1;
  std::vector<int> candidates;  // labels still alive when the descent stopped
};

// Decides which tile contains a point by descending the IFS with certified disks.
// A label is certain once every other tile has been excluded; points within `margin` of
// two tiles are reported ambiguous.
class TileClassifier {
 public:
  TileClassifier(const GraphIFS* ifs, std::vector<TilePiece> pieces, double margin = 1e-7);

  // `confirm` keeps descending after a single label remains, to certify closeness to that tile.
  Classification classify(Vec2 x, bool confirm = false) const;
  const std::vector<TilePiece>& pieces() const { return pieces_; }

 private:
  const GraphIFS* ifs_;
  std::vector<TilePiece> pieces_;
  double margin_;
};

}  // namespace rauzy
