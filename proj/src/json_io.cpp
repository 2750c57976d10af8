#include "hyperzero/json_io.hpp"

#include <limits>

#include "hyperzero/errors.hpp"

namespace hz {

json to_json(const Octonion& x) {
  json arr = json::array();
  for (std::size_t idx = 0; idx < 8; ++idx) arr.push_back(x[idx]);
  return arr;
}

json to_json(const RealPoly& p) { return json{{"coeffs", p.coeffs()}}; }

json to_json(const OctPoly& p) {
  json coeffs = json::array();
  for (const Octonion& a : p.coeffs()) coeffs.push_back(to_json(a));
  return json{{"coeffs", coeffs}};
}

json to_json(const TruncatedSeries& s) {
  json coeffs = json::array();
  for (const Octonion& a : s.coeffs) coeffs.push_back(to_json(a));
  json out{{"coeffs", coeffs}, {"order", s.order}};
  if (std::isinf(s.radius))
    out["radius"] = "inf";
  else
    out["radius"] = s.radius;
  return out;
}

json to_json(const ConjugacyClass& c) { return json{{"t", c.t}, {"n", c.n}}; }

json to_json(const Remainder& r) {
  if (!r.linear) return json{{"kind", "constant"}, {"r", to_json(r.b)}};
  return json{{"kind", "linear"}, {"a", to_json(r.a)}, {"b", to_json(r.b)}};
}

json to_json(const ZeroRecord& rec) {
  const char* kind = rec.kind == ZeroKind::Real ? "real"
                     : rec.kind == ZeroKind::Isolated ? "isolated"
                                                      : "spherical";
  json out{{"class", to_json(rec.cls)},
           {"kind", kind},
           {"multiplicity", rec.multiplicity}};
  out["point"] = rec.kind == ZeroKind::Spherical ? json(nullptr) : to_json(rec.point);
  return out;
}

json to_json(const FtaSummary& summary) {
  json records = json::array();
  for (const ZeroRecord& rec : summary.records) records.push_back(to_json(rec));
  return json{{"degree", summary.degree},
              {"real", summary.real_count},
              {"isolated", summary.isolated_count},
              {"spherical", summary.spherical_count},
              {"classes", summary.class_count()},
              {"total_multiplicity", summary.total_multiplicity},
              {"records", records}};
}

json to_json(const ClassSpectrum& spectrum) {
  json out = json::array();
  for (const ClassSpectrum::Entry& entry : spectrum.entries)
    out.push_back(json{{"t", entry.cls.t}, {"n", entry.cls.n}, {"mult", entry.multiplicity}});
  return out;
}

json to_json(const Factorization& f) {
  json factors = json::array();
  for (const Octonion& a : f.factors) factors.push_back(to_json(a));
  return json{{"factors", factors}, {"constant", to_json(f.constant)}};
}

json to_json(const SpherePrediction& pred) {
  return json{{"class", to_json(pred.cls)},
              {"case", to_string(pred.case_tag)},
              {"borderline", pred.borderline},
              {"predicted", to_json(pred.predicted)}};
}

json to_json(const VerifyReport& report) {
  json failures = json::array();
  for (const TrialFailure& f : report.failures)
    failures.push_back(json{{"trial", f.trial}, {"what", f.what}});
  return json{{"trials", report.trials},
              {"passes", report.passes},
              {"borderline", report.borderline},
              {"failures", failures},
              {"worst_residual", report.worst_normal_residual},
              {"worst_point_error", report.worst_point_error}};
}

json to_json(const TailBoundReport& report) {
  json violating = json::array();
  for (const TailBoundEntry& e : report.violating)
    violating.push_back(
        json{{"n", e.n}, {"lhs", e.lhs}, {"bound", e.bound}, {"ratio", e.ratio}});
  return json{{"rho", report.rho},
              {"n_rho", report.n_rho},
              {"checked", report.checked},
              {"violations", report.violations},
              {"max_ratio", report.max_ratio},
              {"violating", violating}};
}

Octonion octonion_from_json(const json& j) {
  if (!j.is_array() || j.size() != 8)
    throw ParseError("octonion JSON must be an array of 8 numbers", 0);
  Octonion x;
  for (std::size_t idx = 0; idx < 8; ++idx) x[idx] = j[idx].get<double>();
  return x;
}

OctPoly oct_poly_from_json(const json& j) {
  std::vector<Octonion> coeffs;
  for (const json& c : j.at("coeffs")) coeffs.push_back(octonion_from_json(c));
  return OctPoly(std::move(coeffs));
}

TruncatedSeries series_from_json(const json& j) {
  std::vector<Octonion> coeffs;
  for (const json& c : j.at("coeffs")) coeffs.push_back(octonion_from_json(c));
  const std::size_t order = j.at("order").get<std::size_t>();
  double radius = std::numeric_limits<double>::infinity();
  if (j.contains("radius") && !j["radius"].is_string())
    radius = j["radius"].get<double>();
  return TruncatedSeries(std::move(coeffs), order, radius);
}

}  // namespace hz
