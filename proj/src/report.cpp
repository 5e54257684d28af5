#include "rauzy/report.hpp"

namespace rauzy {

Json face_json(const Face& f, int n) {
  Json j;
  j["base"] = to_string(f.base, n);
  j["type"] = f.type.to_string();
  return j;
}

Json pisot_json(const PisotData& pd) {
  Json j;
  j["charpoly"] = pd.charpoly.to_string();
  j["f"] = pd.f.to_string();
  j["g"] = pd.g.to_string();
  j["degree"] = pd.d;
  j["beta"] = {{"lo", decimal_string(pd.beta.lo)}, {"hi", decimal_string(pd.beta.hi)}};
  j["unit"] = pd.unit;
  j["reducible"] = pd.reducible;
  j["contraction_upper"] = static_cast<double>(pd.contraction_upper());
  return j;
}

Json nice_json(const NiceReport& r, int n, double eps) {
  Json j;
  j["N"] = {{"pass", r.n.pass}, {"reason", r.n.reason}};
  Json p;
  p["pass"] = r.p.pass;
  p["images_positive"] = r.p.images_positive;
  p["primitive"] = r.p.primitive;
  p["offending"] = r.p.offending;
  if (r.p.orientation) p["orientation"] = *r.p.orientation;
  j["P"] = p;
  Json s1;
  s1["pass"] = r.s1.pass;
  s1["tol"] = eps;
  s1["non_geometric"] = r.s1.non_geometric;
  s1["overlaps"] = Json::array();
  for (const auto& w : r.s1.overlaps)
    s1["overlaps"].push_back({{"first", face_json(w.first, n)}, {"second", face_json(w.second, n)}, {"area", w.area}});
  j["S1"] = s1;
  Json s2;
  s2["pass"] = r.s2.pass;
  s2["tol"] = eps;
  s2["radius"] = r.s2.radius;
  s2["translations"] = r.s2.translations;
  s2["pairs_checked"] = r.s2.pairs_checked;
  s2["failures"] = Json::array();
  for (const auto& f : r.s2.failures)
    s2["failures"].push_back({{"first", face_json(f.first, n)}, {"second", face_json(f.second, n)}, {"reason", f.reason}});
  j["S2"] = s2;
  j["nice"] = r.nice();
  return j;
}

Json tiling_json(const TilingAudit& a) {
  Json j;
  j["pass"] = a.pass();
  j["polygons"] = a.polygons;
  j["region_area"] = a.region_area;
  j["overlap"] = a.overlap;
  j["uncovered"] = a.uncovered;
  j["tol"] = a.tol;
  return j;
}

Json series_json(const ConvergenceSeries& s, double tol) {
  Json j;
  j["levels"] = s.levels;
  j["distances"] = s.distances;
  j["decreasing"] = s.decreasing();
  j["last"] = s.last();
  j["tol"] = tol;
  j["pass"] = s.decreasing() && s.last() <= tol;
  return j;
}

Json set_equation_json(const SetEquationReport& r) {
  Json j;
  j["pass"] = r.pass;
  j["lhs_polygons"] = r.lhs_polygons;
  j["rhs_polygons"] = r.rhs_polygons;
  j["max_mismatch"] = r.max_mismatch;
  j["overlap"] = r.overlap;
  j["tol"] = r.tol;
  return j;
}

Json coincidence_json(const CoincidenceTable& t) {
  Json j;
  j["complete"] = t.complete();
  j["depth_cap"] = t.depth_cap;
  j["pairs"] = Json::array();
  for (const auto& e : t.entries) {
    Json row{{"first", e.first.to_string()}, {"second", e.second.to_string()}};
    row["k"] = e.k ? Json(*e.k) : Json(nullptr);
    j["pairs"].push_back(row);
  }
  j["excluded"] = Json::array();
  for (const auto& [a, b] : t.excluded) j["excluded"].push_back({a.to_string(), b.to_string()});
  return j;
}

Json first_return_json(const FirstReturnReport& r) {
  Json j;
  j["samples"] = r.samples;
  j["verified"] = r.verified;
  j["ambiguous"] = r.ambiguous;
  j["failed"] = r.failed;
  j["verified_fraction"] = r.verified_fraction();
  j["tol"] = r.tol;
  j["failures"] = Json::array();
  for (const auto& s : r.failures)
    j["failures"].push_back({{"letter", s.letter}, {"start", {s.start.x, s.start.y}}, {"time", s.time}, {"error", s.error}});
  return j;
}

Json coding_json(const CodingReport& r) {
  Json j;
  j["length"] = r.length;
  j["ambiguous"] = r.ambiguous;
  j["mismatches"] = r.mismatches;
  j["coding"] = word_to_string(r.coding);
  return j;
}

std::string dump_report(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace rauzy
