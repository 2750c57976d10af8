#pragma once

#include <json.hpp>

#include "hyperzero/camshaft.hpp"
#include "hyperzero/oct_poly.hpp"
#include "hyperzero/octonion.hpp"
#include "hyperzero/series.hpp"
#include "hyperzero/zero_analysis.hpp"

namespace hz {

using json = nlohmann::json;

json to_json(const Octonion& x);
json to_json(const RealPoly& p);
json to_json(const OctPoly& p);
json to_json(const TruncatedSeries& s);
json to_json(const ConjugacyClass& c);
json to_json(const Remainder& r);
json to_json(const ZeroRecord& rec);
json to_json(const FtaSummary& summary);
json to_json(const ClassSpectrum& spectrum);
json to_json(const Factorization& f);
json to_json(const SpherePrediction& pred);
json to_json(const VerifyReport& report);
json to_json(const TailBoundReport& report);

Octonion octonion_from_json(const json& j);
OctPoly oct_poly_from_json(const json& j);
TruncatedSeries series_from_json(const json& j);

}  // namespace hz
