#include "rauzy/graph_ifs.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace rauzy {

double Linear2::operator_norm() const {
  // Largest singular value from the eigenvalues of ᵗL·L.
  const double p = a * a + c * c, q = a * b + c * d, r = b * b + d * d;
  const double tr = p + r, det = p * r - q * q;
  const double disc = std::sqrt(std::max(0.0, tr * tr / 4 - det));
  return std::sqrt(tr / 2 + disc);
}

GraphIFS::GraphIFS(int vertices, Linear2 linear, std::vector<IfsEdge> edges)
    : vertices_(vertices), linear_(linear), edges_(std::move(edges)), incoming_(vertices) {
  for (std::size_t i = 0; i < edges_.size(); ++i) incoming_.at(edges_[i].dst).push_back(static_cast<int>(i));
  for (int v = 0; v < vertices_; ++v)
    if (incoming_[v].empty()) throw std::invalid_argument("IFS vertex without incoming edges");
  rho_ = linear_.operator_norm();
  if (!(rho_ < 1)) throw std::invalid_argument("IFS linear part is not a contraction");

  const auto pts = clouds(12);
  centers_.assign(vertices_, Vec2{});
  for (int v = 0; v < vertices_; ++v) {
    for (Vec2 p : pts[v]) centers_[v] += p;
    centers_[v] = (1.0 / static_cast<double>(pts[v].size())) * centers_[v];
  }
  auto step = [&](const std::vector<double>& r) {
    std::vector<double> out(vertices_, 0.0);
    for (const auto& e : edges_)
      out[e.dst] = std::max(out[e.dst], dist(e.shift + linear_(centers_[e.src]), centers_[e.dst]) + rho_ * r[e.src]);
    return out;
  };
  radii_.assign(vertices_, 0.0);
  for (int it = 0; it < 2000; ++it) {
    auto next = step(radii_);
    double change = 0;
    for (int v = 0; v < vertices_; ++v) change = std::max(change, std::abs(next[v] - radii_[v]));
    radii_ = std::move(next);
    if (change < 1e-14) break;
  }
  // Inflate until the disks are mapped into themselves; then they contain the attractor.
  for (double slack = 1e-9;; slack *= 10) {
    std::vector<double> r = radii_;
    for (auto& x : r) x = x * (1 + slack) + slack;
    const auto img = step(r);
    bool invariant = true;
    for (int v = 0; v < vertices_; ++v) invariant &= img[v] <= r[v];
    if (invariant) {
      radii_ = r;
      break;
    }
  }
}

std::vector<std::vector<Vec2>> GraphIFS::clouds(int depth) const {
  std::vector<std::vector<Vec2>> cur(vertices_, std::vector<Vec2>{Vec2{}});
  for (int i = 0; i < depth; ++i) {
    std::vector<std::vector<Vec2>> next(vertices_);
    for (const auto& e : edges_)
      for (Vec2 p : cur[e.src]) next[e.dst].push_back(e.shift + linear_(p));
    cur = std::move(next);
  }
  return cur;
}

std::vector<Vec2> GraphIFS::cloud(int v, int depth) const { return clouds(depth).at(v); }

TileClassifier::TileClassifier(const GraphIFS* ifs, std::vector<TilePiece> pieces, double margin)
    : ifs_(ifs), pieces_(std::move(pieces)), margin_(margin) {}

Classification TileClassifier::classify(Vec2 x, bool confirm) const {
  struct Node {
    int vertex;
    int label;
    Vec2 target;  // x pulled into the frame of the piece
    Vec2 shift;
  };
  constexpr double kTol = 1e-12;
  constexpr std::size_t kMaxNodes = 200000;
  const GraphIFS& ifs = *ifs_;
  std::vector<Node> nodes;
  for (const auto& p : pieces_) {
    const Vec2 local = p.sign > 0 ? x - p.shift : p.shift - x;
    nodes.push_back({p.vertex, p.label, local, Vec2{}});
  }
  Linear2 power;  // L^j
  double scale = 1;  // ρ^j
  Classification out;
  for (int level = 0; level < 1000; ++level) {
    std::vector<Node> alive;
    double max_radius = 0;
    for (const auto& nd : nodes) {
      const double r = scale * ifs.radius(nd.vertex);
      if (dist(nd.target, nd.shift + power(ifs.center(nd.vertex))) <= r + kTol) {
        alive.push_back(nd);
        max_radius = std::max(max_radius, r);
      }
    }
    std::set<int> labels;
    for (const auto& nd : alive) labels.insert(nd.label);
    out.candidates.assign(labels.begin(), labels.end());
    if (labels.empty()) {
      out.status = Classification::Status::Outside;
      out.label = -1;
      return out;
    }
    if (labels.size() == 1 && (!confirm || max_radius < margin_)) {
      out.status = Classification::Status::Unique;
      out.label = *labels.begin();
      return out;
    }
    if (max_radius < margin_ || alive.size() > kMaxNodes) {
      out.status = Classification::Status::Ambiguous;
      out.label = -1;
      return out;
    }
    nodes.clear();
    for (const auto& nd : alive)
      for (int ei : ifs.incoming()[nd.vertex]) {
        const IfsEdge& e = ifs.edges()[ei];
        nodes.push_back({e.src, nd.label, nd.target, nd.shift + power(e.shift)});
      }
    power = power * ifs.linear();
    scale *= ifs.contraction();
  }
  out.status = Classification::Status::Ambiguous;
  return out;
}

}  // namespace rauzy
