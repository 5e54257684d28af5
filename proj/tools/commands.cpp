#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "rauzy/dynamics.hpp"
#include "rauzy/fractal.hpp"
#include "rauzy/kernels.hpp"
#include "rauzy/nice.hpp"
#include "rauzy/report.hpp"
#include "rauzy/svg.hpp"

namespace rauzy::cli {

namespace {

std::string percent(double f) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f%%", 100 * f);
  return buf;
}

Json header_json(const RunConfig& cfg, const Substitution& s) {
  Json j;
  j["command"] = cfg.command;
  j["substitution"] = format_substitution(s);
  return j;
}

SvgCanvas canvas_for(const PisotContext& ctx) {
  SvgCanvas c;
  c.order = ctx.top.types();
  return c;
}

void emit(const RunConfig& cfg, const Json& j) {
  if (!cfg.report.empty()) write_text(cfg.report, dump_report(j));
}

int cmd_classify(const RunConfig& cfg, const Substitution& s, std::ostream& out) {
  Json j = header_json(cfg, s);
  const IntMatrix m = incidence_matrix(s);
  j["primitive"] = is_primitive(m);
  int code = kPass;
  try {
    const PisotContext ctx = PisotContext::build(s);
    j["pisot"] = pisot_json(ctx.pisot);
    const NiceReport nice = check_nice(ctx, cfg.tol);
    j["hypotheses"] = nice_json(nice, ctx.n(), cfg.tol);
    out << "nice=" << (nice.nice() ? "true" : "false") << " f=" << ctx.pisot.f.to_string() << " g=" << ctx.pisot.g.to_string()
        << " unit=" << (ctx.pisot.unit ? "true" : "false") << " reducible=" << (ctx.pisot.reducible ? "true" : "false") << "\n";
    out << "N=" << nice.n.pass << " P=" << nice.p.pass << " S1=" << nice.s1.pass << " S2=" << nice.s2.pass << "\n";
    for (const auto& w : nice.s1.overlaps)
      out << "S1 overlap: " << face_json(w.first, ctx.n()).dump() << " " << face_json(w.second, ctx.n()).dump()
          << " area " << w.area << "\n";
    if (!nice.nice()) code = kChecksFailed;
  } catch (const NotPisot& e) {
    j["pisot"] = {{"error", e.what()}};
    out << "not Pisot: " << e.what() << "\n";
    code = kChecksFailed;
  }
  emit(cfg, j);
  return code;
}

int cmd_render(const RunConfig& cfg, const PisotContext& ctx, std::ostream& out) {
  const Chain seed = parse_seed(cfg.faces, ctx.n());
  Json j = header_json(cfg, ctx.sub);
  j["faces"] = cfg.faces;
  j["mode"] = cfg.mode;
  std::vector<FacePolygon> faces;
  if (cfg.mode == "polygon") {
    const Patch p = stepped_surface(ctx, seed, cfg.exponent, cfg.iters);
    j["exponent"] = cfg.exponent;
    j["iterations"] = cfg.iters;
    faces = p.polygons;
  } else {
    if (!seed_contained(ctx, seed, cfg.exponent)) throw SeedRejected("seed is not contained in its image under E^m");
    const ApproxTile t = renormalize(ctx, apply_map_power(ctx.top, seed, cfg.level), cfg.level);
    j["level"] = cfg.level;
    faces = t.polygons;
  }
  std::vector<Polygon> polys;
  double total = 0;
  for (const auto& fp : faces) {
    polys.push_back(fp.corners());
    total += fp.area();
  }
  const double overlap = total > 0 ? overlap_audit(polys, cfg.tol).total / total : 0;
  bool pass = overlap <= cfg.tol;
  Json audit{{"faces", faces.size()}, {"area", total}, {"overlap", overlap}, {"tol", cfg.tol}};
  if (cfg.radius > 0) {
    const TilingAudit cover = tiling_audit(polys, disk_polygon({0, 0}, cfg.radius), cfg.tol);
    audit["disk"] = {{"radius", cfg.radius}, {"uncovered", cover.uncovered}, {"overlap", cover.overlap}};
    pass = pass && cover.pass();
  }
  audit["pass"] = pass;
  j["audit"] = audit;
  if (!cfg.svg.empty()) write_text(cfg.svg, faces_svg(faces, canvas_for(ctx)));
  out << "faces " << faces.size() << " area " << total << " overlap " << overlap << (pass ? " pass" : " FAIL") << "\n";
  emit(cfg, j);
  return pass ? kPass : kChecksFailed;
}

int cmd_fractal(const RunConfig& cfg, const PisotContext& ctx, std::ostream& out) {
  ctx.require_planar();
  const WedgeType a = WedgeType::parse(cfg.type);
  if (std::find(ctx.top.types().begin(), ctx.top.types().end(), a) == ctx.top.types().end())
    throw InputError("type '" + cfg.type + "' is not a " + std::to_string(ctx.d() - 1) + "-face type");
  const ApproxTile tile = rauzy_approx(ctx, a, cfg.level);
  Json j = header_json(cfg, ctx.sub);
  j["type"] = a.to_string();
  j["level"] = cfg.level;
  j["polygons"] = tile.polygons.size();
  j["area"] = tile.area();
  bool pass = true;
  if (cfg.level >= 1) {
    const SetEquationReport se = set_equation_check(ctx, a, cfg.level - 1);
    j["set_equation"] = set_equation_json(se);
    pass = se.pass;
  }
  const MeasureEigenReport me = measure_eigen_check(ctx);
  j["measure_eigenvector"] = {{"residual", me.residual}, {"tol", me.tol}, {"pass", me.pass()}};
  pass = pass && me.pass();
  if (!cfg.svg.empty()) write_text(cfg.svg, faces_svg(tile.polygons, canvas_for(ctx)));
  out << a.to_string() << " level " << cfg.level << " polygons " << tile.polygons.size() << " area " << tile.area()
      << (pass ? " pass" : " FAIL") << "\n";
  emit(cfg, j);
  return pass ? kPass : kChecksFailed;
}

int cmd_matrices(const RunConfig& cfg, const PisotContext& ctx, std::ostream& out) {
  const int k = cfg.dim > 0 ? cfg.dim : ctx.n() - ctx.d() + 1;
  if (k < 1 || k >= ctx.n()) throw InputError("--dim must lie in 1.." + std::to_string(ctx.n() - 1));
  const ExteriorMatrices em = exterior_matrices(ctx.sub, k);
  out << "# B_" << k << "\n" << em.exterior.to_csv();
  out << "# M_" << k << "*\n" << em.dual.to_csv();
  out << "# M_" << ctx.n() - k << "\n" << em.geometric.to_csv();
  if (em.conjugator) {
    out << "# N\n";
    for (std::size_t i = 0; i < em.conjugator->size(); ++i) out << (i ? "," : "") << (*em.conjugator)[i];
    out << "\n";
  } else {
    out << "# N not found\n";
  }
  Json j = header_json(cfg, ctx.sub);
  j["dim"] = k;
  j["conjugator"] = em.conjugator ? Json(*em.conjugator) : Json(nullptr);
  emit(cfg, j);
  return kPass;
}

int cmd_scc(const RunConfig& cfg, const PisotContext& ctx, std::ostream& out) {
  const CoincidenceTable t = strong_coincidence(ctx);
  out << t.to_csv();
  Json j = header_json(cfg, ctx.sub);
  j["table"] = coincidence_json(t);
  emit(cfg, j);
  return t.complete() ? kPass : kChecksFailed;
}

int cmd_orbit(const RunConfig& cfg, const PisotContext& ctx, std::ostream& out) {
  require_chi_family(ctx.sub);
  const ExchangeSystem sys(ctx);
  const OrbitResult r = exchange_orbit(ctx, sys, {cfg.x, cfg.y}, cfg.iters);
  out << word_to_string(r.coding) << "\n";
  const char* stop = r.stop == OrbitResult::Stop::Completed ? "completed"
                     : r.stop == OrbitResult::Stop::Ambiguous ? "ambiguous"
                                                              : "escaped";
  if (r.stop != OrbitResult::Stop::Completed) out << "# stopped after " << r.coding.size() << " steps: " << stop << "\n";
  Json j = header_json(cfg, ctx.sub);
  j["start"] = {cfg.x, cfg.y};
  j["steps"] = cfg.iters;
  j["coding"] = word_to_string(r.coding);
  j["stop"] = stop;
  j["endpoint"] = {r.endpoint.x, r.endpoint.y};
  emit(cfg, j);
  return r.stop == OrbitResult::Stop::Escaped ? kChecksFailed : kPass;
}

int cmd_return(const RunConfig& cfg, const PisotContext& ctx, std::ostream& out) {
  require_chi_family(ctx.sub);
  const ExchangeSystem sys(ctx);
  const FirstReturnReport r = first_return_check(ctx, sys, cfg.count, cfg.seed);
  const bool pass = r.verified_fraction() >= 0.99 && r.failed == 0;
  out << "verified " << percent(r.verified_fraction()) << " (" << r.verified << "/" << r.samples << "), ambiguous "
      << r.ambiguous << ", failed " << r.failed << (pass ? " pass" : " FAIL") << "\n";
  Json j = header_json(cfg, ctx.sub);
  j["seed"] = cfg.seed;
  j["first_return"] = first_return_json(r);
  j["min_verified_fraction"] = 0.99;
  j["pass"] = pass;
  emit(cfg, j);
  return pass ? kPass : kChecksFailed;
}

int cmd_coding(const RunConfig& cfg, const PisotContext& ctx, std::ostream& out) {
  require_chi_family(ctx.sub);
  const ExchangeSystem sys(ctx);
  const CodingReport r = coding_cross_check(ctx, sys, cfg.count);
  out << word_to_string(r.coding) << "\n";
  if (!r.mismatches.empty()) out << "# mismatches " << r.mismatches.size() << "\n";
  Json j = header_json(cfg, ctx.sub);
  j["coding"] = coding_json(r);
  emit(cfg, j);
  return r.mismatches.empty() ? kPass : kChecksFailed;
}

}  // namespace

int execute(const RunConfig& cfg, std::ostream& out) {
  const Substitution s = load_substitution(cfg.sub_path);
  if (cfg.command == "classify") return cmd_classify(cfg, s, out);
  const PisotContext ctx = PisotContext::build(s);
  if (cfg.command == "render") return cmd_render(cfg, ctx, out);
  if (cfg.command == "fractal") return cmd_fractal(cfg, ctx, out);
  if (cfg.command == "matrices") return cmd_matrices(cfg, ctx, out);
  if (cfg.command == "scc") return cmd_scc(cfg, ctx, out);
  if (cfg.command == "orbit") return cmd_orbit(cfg, ctx, out);
  if (cfg.command == "return") return cmd_return(cfg, ctx, out);
  if (cfg.command == "coding") return cmd_coding(cfg, ctx, out);
  throw InputError("unknown command '" + cfg.command + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Reducible Pisot substitutions: classification, dual maps, Rauzy fractals and dynamics"};
  app.name(args.empty() ? "rauzy" : args.front());
  app.require_subcommand(1);
  const auto level = CLI::Range(0, kMaxLevel);
  const auto positive = CLI::PositiveNumber;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--sub", cfg.sub_path, "substitution file")->required();
    sub->add_option("--report", cfg.report, "JSON report path");
    sub->add_option("--tol", cfg.tol, "audit tolerance")->check(positive);
  };
  auto* classify = app.add_subcommand("classify", "Pisot split, unit/reducible flags and hypotheses N, P, S1, S2");
  common(classify);
  auto* render = app.add_subcommand("render", "stepped-surface or renormalized patch grown from a seed");
  common(render);
  render->add_option("--faces", cfg.faces, "seed faces based at 0, e.g. 2^3+2^4+3^4")->required();
  render->add_option("--mode", cfg.mode, "polygon or fractal")->check(CLI::IsMember({"polygon", "fractal"}));
  render->add_option("--exponent", cfg.exponent, "m with U ⊆ E^m U")->check(CLI::Range(1, 12));
  render->add_option("--iters", cfg.iters, "iterations of E^m (polygon mode)")->check(CLI::Range(0, kMaxLevel));
  render->add_option("--level", cfg.level, "renormalization level (fractal mode)")->check(level);
  render->add_option("--radius", cfg.radius, "coverage disk radius")->check(CLI::NonNegativeNumber);
  render->add_option("--svg", cfg.svg, "SVG output path");
  auto* fractal = app.add_subcommand("fractal", "level-k approximation of the Rauzy fractal of one face type");
  common(fractal);
  fractal->add_option("--type", cfg.type, "face type, e.g. 2^3");
  fractal->add_option("--level", cfg.level, "renormalization level")->check(level);
  fractal->add_option("--svg", cfg.svg, "SVG output path");
  auto* matrices = app.add_subcommand("matrices", "exterior, dual and geometric matrices as CSV");
  common(matrices);
  matrices->add_option("--dim", cfg.dim, "k of O_k (default n − d + 1)");
  auto* scc = app.add_subcommand("scc", "strong coincidence table as CSV");
  common(scc);
  auto* orbit = app.add_subcommand("orbit", "coding of a domain-exchange orbit");
  common(orbit);
  orbit->add_option("--iters", cfg.iters, "steps")->check(CLI::Range(0, 1000000));
  orbit->add_option("--x", cfg.x, "start point, first K_c coordinate");
  orbit->add_option("--y", cfg.y, "start point, second K_c coordinate");
  auto* ret = app.add_subcommand("return", "first-return check on sampled points");
  common(ret);
  ret->add_option("--n", cfg.count, "samples")->check(CLI::Range(1, 10000000));
  ret->add_option("--seed", cfg.seed, "RNG master seed");
  auto* coding = app.add_subcommand("coding", "orbit coding of 0 against χ(u)");
  common(coding);
  coding->add_option("--n", cfg.count, "symbols")->check(CLI::Range(1, 10000000));

  try {
    std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rest.begin(), rest.end());
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  try {
    return execute(cfg, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace rauzy::cli
