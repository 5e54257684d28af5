#include "rauzy/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <set>
#include <sstream>

#include "rauzy/parallel.hpp"

namespace rauzy {

Linear2 contraction_map(const PisotContext& ctx) {
  const Vec2 cx = ctx.proj.apply_power(Vec2{1, 0}, 1);
  const Vec2 cy = ctx.proj.apply_power(Vec2{0, 1}, 1);
  return {cx.x, cy.x, cx.y, cy.y};
}

namespace {

GraphIFS letter_ifs(const PisotContext& ctx, bool prefix) {
  ctx.require_planar();
  const int n = ctx.n();
  std::vector<IfsEdge> edges;
  for (int a = 1; a <= n; ++a)
    for (const auto& occ : occurrences(ctx.sub, a))
      edges.push_back({a - 1, occ.source - 1, ctx.proj.kc(abelianize(prefix ? occ.prefix : occ.suffix, n))});
  return GraphIFS(n, contraction_map(ctx), std::move(edges));
}

int type_position(const std::vector<WedgeType>& types, WedgeType t) {
  const auto it = std::find(types.begin(), types.end(), t);
  if (it == types.end()) throw std::invalid_argument("type " + t.to_string() + " of wrong dimension");
  return static_cast<int>(it - types.begin());
}

}  // namespace

GraphIFS prefix_ifs(const PisotContext& ctx) { return letter_ifs(ctx, true); }
GraphIFS suffix_ifs(const PisotContext& ctx) { return letter_ifs(ctx, false); }

GraphIFS wedge_ifs(const PisotContext& ctx) {
  ctx.require_planar();
  const auto& types = ctx.top.types();
  std::vector<IfsEdge> edges;
  for (std::size_t c = 0; c < types.size(); ++c)
    for (const auto& t : ctx.top.image(types[c]))
      edges.push_back({static_cast<int>(c), type_position(types, t.type), ctx.proj.kc(ctx.matrix.apply(t.offset))});
  return GraphIFS(static_cast<int>(types.size()), contraction_map(ctx), std::move(edges));
}

WedgeSuffixGraph build_wedge_suffix_graph(const PisotContext& ctx) {
  WedgeSuffixGraph g;
  g.n = ctx.n();
  g.vertices = wedge_types(g.n, ctx.nbar());
  g.outgoing.resize(g.vertices.size());
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    for (const auto& t : occurrence_tuples(ctx.sub, g.vertices[i])) {
      if (t.wedge.zero) continue;
      g.outgoing[i].push_back(static_cast<int>(g.edges.size()));
      g.edges.push_back({g.vertices[i], t.wedge.type, t.suffix_sum, t.wedge.sign});
    }
  return g;
}

bool suffix_graph_matches_tables(const PisotContext& ctx, const WedgeSuffixGraph& g) {
  const int n = ctx.n();
  using Entry = std::tuple<std::uint16_t, std::uint16_t, LatticePoint>;
  std::multiset<Entry> from_graph, from_tables;
  for (const auto& e : g.edges) from_graph.insert({e.to.mask(), e.from.mask(), ctx.inverse.apply(e.suffix)});
  for (WedgeType b : g.vertices)
    for (const auto& t : ctx.top.image(b.complement(n)))
      from_tables.insert({b.mask(), t.type.complement(n).mask(), t.offset});
  return from_graph == from_tables;
}

bool CoincidenceTable::complete() const {
  return std::all_of(entries.begin(), entries.end(), [](const CoincidenceEntry& e) { return e.k.has_value(); });
}

std::optional<int> CoincidenceTable::lookup(WedgeType a, WedgeType b) const {
  if (a == b) return 0;
  if (b < a) std::swap(a, b);
  for (const auto& e : entries)
    if (e.first == a && e.second == b) return e.k;
  return std::nullopt;
}

std::string CoincidenceTable::to_csv() const {
  std::ostringstream os;
  os << "a,b,k\n";
  for (const auto& e : entries) {
    os << e.first.to_string() << ',' << e.second.to_string() << ',';
    if (e.k) os << *e.k;
    else os << "undecided";
    os << '\n';
  }
  return os.str();
}

CoincidenceTable strong_coincidence(const PisotContext& ctx, int depth_cap) {
  ctx.require_planar();
  const int n = ctx.n();
  const auto g = build_wedge_suffix_graph(ctx);
  const auto& types = g.vertices;
  const std::size_t nt = types.size();

  double max_suffix = 0;
  for (const auto& e : g.edges) max_suffix = std::max(max_suffix, std::abs(ctx.proj.pe(e.suffix)));
  const double beta = static_cast<double>(ctx.pisot.beta_value());
  const double bound = 2 * max_suffix * beta / (beta - 1) * (1 + 1e-9) + 1e-9;

  CoincidenceTable table;
  table.depth_cap = depth_cap;
  for (std::size_t i = 0; i < nt; ++i)
    for (std::size_t j = i + 1; j < nt; ++j) {
      Chain transverse(n, ctx.d() - 1);
      transverse.add(Face{LatticePoint{}, types[i].complement(n)}, 1);
      transverse.add(Face{LatticePoint{}, types[j].complement(n)}, 1);
      if (!projects_well(ctx, transverse).pass) {
        table.excluded.push_back({types[i], types[j]});
        continue;
      }
      struct State {
        int a, b;
        LatticePoint delta;
        auto operator<=>(const State&) const = default;
      };
      std::set<State> seen;
      std::vector<State> frontier{{static_cast<int>(i), static_cast<int>(j), LatticePoint{}}};
      seen.insert(frontier.front());
      std::optional<int> found;
      for (int depth = 1; depth <= depth_cap && !found && !frontier.empty(); ++depth) {
        std::vector<State> next;
        for (const State& s : frontier) {
          const LatticePoint base = ctx.matrix.apply(s.delta);
          for (int ea : g.outgoing[s.a]) {
            if (found) break;
            for (int eb : g.outgoing[s.b]) {
              const auto& x = g.edges[ea];
              const auto& y = g.edges[eb];
              const LatticePoint delta = base + x.suffix - y.suffix;
              if (x.to == y.to && is_zero(delta)) found = depth;
              if (found) break;
              if (std::abs(ctx.proj.pe(delta)) > bound) continue;
              State t{type_position(types, x.to), type_position(types, y.to), delta};
              if (seen.insert(t).second) next.push_back(t);
            }
          }
          if (found) break;
        }
        frontier = std::move(next);
      }
      table.entries.push_back({types[i], types[j], found});
    }
  return table;
}

std::vector<Vec2> dumont_thomas_cloud(const PisotContext& ctx, CloudGraph graph, WedgeType target, int depth) {
  switch (graph) {
    case CloudGraph::Prefix:
    case CloudGraph::Suffix: {
      const auto letters = target.letters();
      if (letters.size() != 1) throw std::invalid_argument("letter clouds take a single letter");
      const GraphIFS ifs = graph == CloudGraph::Prefix ? prefix_ifs(ctx) : suffix_ifs(ctx);
      return ifs.cloud(letters[0] - 1, depth);
    }
    case CloudGraph::Wedge: {
      ctx.require_planar();
      // Reversed suffix graph: R(c) = ∪_{ā → c̄, s} π_c l(s) + M R(ā*).
      const auto g = build_wedge_suffix_graph(ctx);
      std::vector<IfsEdge> edges;
      for (const auto& e : g.edges)
        edges.push_back({type_position(g.vertices, e.to), type_position(g.vertices, e.from), ctx.proj.kc(e.suffix)});
      const GraphIFS ifs(static_cast<int>(g.vertices.size()), contraction_map(ctx), std::move(edges));
      return ifs.cloud(type_position(g.vertices, target.complement(ctx.n())), depth);
    }
  }
  return {};
}

Word ChiMorphism::image(int letter) const {
  switch (letter) {
    case 1: return flip1 ? Word{4, 3} : Word{3, 4};
    case 5: return flip5 ? Word{2, 3} : Word{3, 2};
    case 2:
    case 3:
    case 4: return {letter};
    default: throw InputError("χ is defined on letters 1..5");
  }
}

Word chi_apply(const Word& w, const ChiMorphism& chi) {
  Word out;
  for (int a : w) {
    const Word img = chi.image(a);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

bool in_chi_family(const Substitution& s) {
  if (s.size() != 5) return false;
  if (s.image(2) != Word{3} || s.image(3) != Word{4} || s.image(5) != Word{1}) return false;
  const Word& one = s.image(1);
  const Word& four = s.image(4);
  if (one.size() < 2 || one.back() != 2 || four.empty() || four.back() != 5) return false;
  const std::size_t t = one.size() - 2;
  if (four.size() != t + 1) return false;
  return std::all_of(one.begin(), one.end() - 1, [](int a) { return a == 1; }) &&
         std::all_of(four.begin(), four.end() - 1, [](int a) { return a == 1; });
}

void require_chi_family(const Substitution& s) {
  if (!in_chi_family(s)) throw InputError("χ constructions need a substitution of the family 1→1^{t+1}2, 2→3, 3→4, 4→1^t5, 5→1");
}

namespace {

Word chi_fixed_prefix(const Substitution& s, std::size_t length, const ChiMorphism& chi) {
  // |χ(a)| ≥ 1, so length letters of u give at least length letters of w.
  Word w = chi_apply(fixed_point_prefix(s, 1, length), chi);
  w.resize(length);
  return w;
}

}  // namespace

std::vector<Vec2> modified_cloud(const PisotContext& ctx, int a, std::size_t length, const ChiMorphism& chi) {
  require_chi_family(ctx.sub);
  const Word w = chi_fixed_prefix(ctx.sub, length, chi);
  std::vector<Vec2> out;
  LatticePoint acc{};
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == a) out.push_back(ctx.proj.kc(acc));
    ++acc[w[i] - 1];
  }
  return out;
}

std::vector<TilePiece> ExchangeSystem::tilde_pieces(const PisotContext& ctx) {
  require_chi_family(ctx.sub);
  const auto& types = ctx.top.types();
  std::vector<TilePiece> out;
  for (int a : {2, 3, 4}) {
    std::vector<int> rest;
    for (int b : {2, 3, 4})
      if (b != a) rest.push_back(b);
    out.push_back({type_position(types, WedgeType::from_letters(rest)), -1, -ctx.proj.kc_unit(a), a});
  }
  return out;
}

std::vector<TilePiece> ExchangeSystem::classical_pieces(const PisotContext& ctx) {
  std::vector<TilePiece> out;
  for (int a = 1; a <= ctx.n(); ++a) out.push_back({a - 1, 1, Vec2{}, a});
  return out;
}

ExchangeSystem::ExchangeSystem(const PisotContext& ctx, double margin)
    : prefix(prefix_ifs(ctx)),
      wedge(wedge_ifs(ctx)),
      tilde(&wedge, tilde_pieces(ctx), margin),
      classical(&prefix, classical_pieces(ctx), margin) {}

OrbitResult exchange_orbit(const PisotContext& ctx, const ExchangeSystem& sys, Vec2 start, int steps) {
  OrbitResult out;
  out.endpoint = start;
  for (int i = 0; i < steps; ++i) {
    const Classification c = sys.tilde.classify(out.endpoint);
    if (c.status == Classification::Status::Ambiguous) {
      out.stop = OrbitResult::Stop::Ambiguous;
      return out;
    }
    if (c.status == Classification::Status::Outside) {
      out.stop = OrbitResult::Stop::Escaped;
      return out;
    }
    out.coding.push_back(c.label);
    out.endpoint += ctx.proj.kc_unit(c.label);
  }
  return out;
}

namespace {

// Confirmed membership cannot tell a point of the tile from one just outside it; a point whose
// neighbours at `radius` leave the union is treated as a boundary hit.
bool near_boundary(const TileClassifier& cls, Vec2 y, double radius) {
  constexpr int kDirections = 8;
  for (int k = 0; k < kDirections; ++k) {
    const double th = 2 * M_PI * k / kDirections;
    if (cls.classify(y + Vec2{radius * std::cos(th), radius * std::sin(th)}, true).status ==
        Classification::Status::Outside)
      return true;
  }
  return false;
}

}  // namespace

FirstReturnReport first_return_check(const PisotContext& ctx, const ExchangeSystem& sys, std::size_t samples,
                                     std::uint64_t seed, int max_steps, double tol) {
  require_chi_family(ctx.sub);
  constexpr int kPathDepth = 160;
  const GraphIFS& ifs = sys.prefix;
  const ChiMorphism chi;
  // Tile measures μ solve β·μ_v = Σ_{e into v} μ_src; weighting edges by μ_src makes paths Lebesgue-distributed.
  const int nv = ifs.vertices();
  std::vector<double> mu(nv, 1.0);
  for (int it = 0; it < 500; ++it) {
    std::vector<double> next(nv, 0.0);
    for (const auto& e : ifs.edges()) next[e.dst] += mu[e.src];
    double total = 0;
    for (double m : next) total += m;
    for (int v = 0; v < nv; ++v) mu[v] = next[v] / total;
  }
  auto run = [&](std::size_t i) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto pick = [&](const std::vector<double>& weights) {
      double total = 0;
      for (double w : weights) total += w;
      double r = unit(rng) * total;
      for (std::size_t k = 0; k < weights.size(); ++k) {
        if (r < weights[k]) return k;
        r -= weights[k];
      }
      return weights.size() - 1;
    };
    ReturnSample s;
    s.letter = static_cast<int>(pick(mu)) + 1;
    int v = s.letter - 1;
    Linear2 power;
    for (int j = 0; j < kPathDepth; ++j) {
      const auto& in = ifs.incoming()[v];
      std::vector<double> w;
      for (int ei : in) w.push_back(mu[ifs.edges()[ei].src]);
      const IfsEdge& e = ifs.edges()[in[pick(w)]];
      s.start += power(e.shift);
      power = power * ifs.linear();
      v = e.src;
    }
    s.start += power(ifs.center(v));
    Vec2 y = s.start;
    for (int t = 1; t <= max_steps; ++t) {
      const Classification c = sys.tilde.classify(y);
      if (c.status != Classification::Status::Unique) {
        s.ambiguous = true;
        return s;
      }
      y += ctx.proj.kc_unit(c.label);
      const Classification back = sys.classical.classify(y, true);
      if (back.status == Classification::Status::Ambiguous ||
          (back.status == Classification::Status::Unique && near_boundary(sys.classical, y, 10 * tol))) {
        s.ambiguous = true;
        return s;
      }
      if (back.status == Classification::Status::Unique) {
        s.time = t;
        s.error = dist(y, s.start + ctx.proj.kc_unit(s.letter));
        s.verified = t == static_cast<int>(chi.image(s.letter).size()) && s.error <= tol;
        return s;
      }
    }
    return s;
  };
  const auto results = parallel_map<ReturnSample>(samples, run);
  FirstReturnReport rep;
  rep.samples = samples;
  rep.tol = tol;
  for (const auto& s : results) {
    if (s.verified) ++rep.verified;
    else if (s.ambiguous) ++rep.ambiguous;
    else {
      ++rep.failed;
      if (rep.failures.size() < 16) rep.failures.push_back(s);
    }
  }
  return rep;
}

CodingReport coding_cross_check(const PisotContext& ctx, const ExchangeSystem& sys, std::size_t length) {
  require_chi_family(ctx.sub);
  CodingReport rep;
  rep.length = length;
  rep.expected = chi_fixed_prefix(ctx.sub, length, ChiMorphism{});
  LatticePoint acc{};
  for (std::size_t i = 0; i < length; ++i) {
    const Classification c = sys.tilde.classify(ctx.proj.kc(acc));
    int symbol = rep.expected[i];
    if (c.status == Classification::Status::Unique) {
      symbol = c.label;
      if (symbol != rep.expected[i]) rep.mismatches.push_back(i);
    } else if (c.status == Classification::Status::Ambiguous) {
      ++rep.ambiguous;
    } else {
      rep.mismatches.push_back(i);
    }
    rep.coding.push_back(symbol);
    ++acc[symbol - 1];
  }
  return rep;
}

}  // namespace rauzy
