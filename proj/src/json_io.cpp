#include "qpart/json_io.hpp"

namespace qpart {

using nlohmann::json;

namespace {

json terms_json(const Polynomial& p) {
  json out = json::array();
  for (const auto& t : p.terms())
    out.push_back({{"monomial", t.mono.to_string()}, {"coefficient", t.coeff.get_str()}});
  return out;
}

json params_json(const Params& p) {
  json out = json::object();
  for (const auto& [k, v] : p) out[k] = v;
  return out;
}

}  // namespace

json to_json(const Polynomial& p) { return {{"terms", terms_json(p)}}; }

json to_json(const TruncatedSeries& s) {
  return {{"trunc", s.trunc()}, {"terms", terms_json(s.body())}};
}

json to_json(const Partition& p) { return p.parts(); }

json to_json(const Witness& w) {
  return {{"monomial", w.mono.to_string()},
          {"lhs", w.lhs.get_str()},
          {"rhs", w.rhs.get_str()},
          {"lhs_side", w.lhs_side},
          {"rhs_side", w.rhs_side}};
}

json to_json(const VerificationReport& r, bool timing) {
  json out = {{"identity", r.name},
              {"kind", std::string(kind_name(describe(r.name).kind))},
              {"params", params_json(r.params)},
              {"pass", r.pass},
              {"notes", r.notes}};
  if (r.trunc) out["trunc"] = *r.trunc;
  if (r.witness) out["witness"] = to_json(*r.witness);
  if (timing) out["seconds"] = r.seconds;
  return out;
}

json to_json(const SuiteReport& r, bool timing) {
  json criteria = json::array();
  for (const auto& c : r.criteria) {
    json item = {{"id", c.id},
                 {"title", c.title},
                 {"pass", c.pass},
                 {"checks", c.checks},
                 {"failures", c.failures}};
    if (c.witness) {
      item["witness"] = to_json(c.witness->witness);
      item["witness"]["identity"] = c.witness->identity;
      item["witness"]["params"] = params_json(c.witness->params);
    }
    if (timing) item["seconds"] = c.seconds;
    criteria.push_back(std::move(item));
  }
  return {{"profile", std::string(profile_name(r.profile))},
          {"seed", r.seed},
          {"pass", r.pass()},
          {"criteria", std::move(criteria)}};
}

json catalog_json() {
  json list = json::array();
  for (const auto& d : catalog()) {
    json params = json::array();
    for (const auto& p : d.params)
      params.push_back({{"name", p.name}, {"min", p.min}, {"max", p.max}, {"default", p.fallback}});
    json item = {{"name", d.name},
                 {"kind", std::string(kind_name(d.kind))},
                 {"params", params},
                 {"sides", d.sides},
                 {"anchor", d.anchor},
                 {"term_degree", d.term_degree}};
    if (d.kind != IdentityKind::polynomial) item["default_trunc"] = d.default_trunc;
    list.push_back(std::move(item));
  }
  return {{"identities", list}};
}

}  // namespace qpart
