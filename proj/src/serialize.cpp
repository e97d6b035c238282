#include "enriques/serialize.hpp"

#include <nlohmann/json.hpp>

namespace enriques {

using ordered_json = nlohmann::ordered_json;

std::string rational_frac_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string qseries_to_json(const QSeries& a) {
  ordered_json j;
  j["exp_denom"] = a.exp_denom();
  j["trunc"] = a.trunc();
  ordered_json coeffs = ordered_json::array();
  for (const auto& [e, c] : a.coeffs()) coeffs.push_back({e, rational_frac_string(c)});
  j["coeffs"] = coeffs;
  return j.dump();
}

QSeries qseries_from_json(const std::string& text) {
  auto j = ordered_json::parse(text);
  QSeries r(j.at("exp_denom").get<long>(), j.at("trunc").get<long>());
  for (const auto& entry : j.at("coeffs"))
    r.set(entry.at(0).get<long>(), rational_from_string(entry.at(1).get<std::string>()));
  return r;
}

std::string ring_element_to_json(const RingElement& e) {
  ordered_json j;
  j["ring"] = ring_tag_name(e.tag);
  j["weight"] = e.weight;
  ordered_json terms = ordered_json::array();
  for (const auto& [m, c] : e.terms)
    terms.push_back({m[0], m[1], m[2], m[3], rational_frac_string(c)});
  j["terms"] = terms;
  return j.dump();
}

std::string e8qseries_to_json(const E8QSeries& a) {
  ordered_json j;
  j["trunc"] = a.trunc();
  j["norm_bound"] = a.norm_bound();
  ordered_json entries = ordered_json::array();
  for (const auto& [e, slot] : a.coeffs())
    for (const auto& [v, c] : slot) {
      ordered_json coords = ordered_json::array();
      for (int i = 0; i < 8; ++i) coords.push_back(v[i]);
      entries.push_back({e, coords, rational_frac_string(c)});
    }
  j["entries"] = entries;
  return j.dump();
}

std::string mukai_vector_to_json(const MukaiVector& v) {
  ordered_json beta;
  beta["k"] = v.beta.k;
  beta["d"] = v.beta.d;
  ordered_json alpha = ordered_json::array();
  for (int i = 0; i < 8; ++i) alpha.push_back(v.beta.alpha[i]);
  beta["alpha"] = alpha;
  ordered_json j;
  j["r"] = v.r;
  j["beta"] = beta;
  j["n"] = v.n;
  return j.dump();
}

std::string omega_table_to_json(const OmegaTable& t) {
  ordered_json j;
  j["max_g"] = t.max_g;
  j["max_n"] = t.max_n;
  ordered_json z = ordered_json::array();
  for (const auto& [key, v] : t.z_form) z.push_back({key.first, key.second, rational_frac_string(v)});
  ordered_json p = ordered_json::array();
  for (const auto& [key, v] : t.p_form) p.push_back({key.first, key.second, rational_frac_string(v)});
  j["z_form"] = z;
  j["p_form"] = p;
  return j.dump();
}

OmegaTable omega_table_from_json(const std::string& text) {
  auto j = ordered_json::parse(text);
  OmegaTable t;
  t.max_g = j.at("max_g").get<long>();
  t.max_n = j.at("max_n").get<long>();
  for (const auto& e : j.at("z_form"))
    t.z_form[{e.at(0).get<long>(), e.at(1).get<long>()}] =
        rational_from_string(e.at(2).get<std::string>());
  for (const auto& e : j.at("p_form"))
    t.p_form[{e.at(0).get<long>(), e.at(1).get<long>()}] =
        rational_from_string(e.at(2).get<std::string>());
  return t;
}

std::string csv_escape(const std::string& field) {
  bool needs_quote = field.find_first_of(",\"\r\n") != std::string::npos;
  if (!needs_quote) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(fields[i]);
  }
  out += "\r\n";
  return out;
}

}  // namespace enriques
