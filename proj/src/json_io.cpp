#include "bnconv/json_io.hpp"

namespace bnconv {

using nlohmann::json;

json big_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

json to_json(const LaurentPoly& p) {
  json coeffs = json::object();
  for (const auto& [e, c] : p.terms()) coeffs[std::to_string(e)] = big_to_json(c);
  return {{"render", p.to_string()}, {"coeffs", coeffs}};
}

json to_json(const GradedDim& v) {
  json out = json::object();
  for (const auto& [k, d] : v.dims()) out[std::to_string(k)] = big_to_json(d);
  return out;
}

json to_json(const IrrepLabel& l) { return l.weight(); }

json to_json(const BNClass& c) {
  json out = json::array();
  for (const auto& t : c.terms()) {
    json term{{"weight", to_json(t.label)}, {"dim", big_to_json(t.dim)}, {"mult", t.mult}};
    if (t.name) term["name"] = *t.name;
    out.push_back(std::move(term));
  }
  return out;
}

json to_json(const RepElement& r) {
  json out = json::array();
  for (const auto& [w, m] : r.terms()) {
    const IrrepLabel l(r.group(), w);
    out.push_back({{"weight", w}, {"dim", big_to_json(weyl_dim(l))}, {"mult", m}});
  }
  return out;
}

json to_json(const StalkTable& t) {
  json out = json::array();
  for (const auto& row : t.rows())
    out.push_back({{"stratum", row.stratum.name}, {"dim", row.stratum.dim}, {"stalk", to_json(row.stalk)}});
  return out;
}

}  // namespace bnconv
