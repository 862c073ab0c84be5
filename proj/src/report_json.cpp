#include "sbd/report_json.hpp"

namespace sbd {

using nlohmann::json;

namespace {

json one_based(const std::vector<int>& xs) {
  json a = json::array();
  for (int x : xs) a.push_back(x + 1);
  return a;
}

json block_list(const Design& d, const std::vector<int>& block_ids) {
  json a = json::array();
  for (int b : block_ids) a.push_back(one_based(d.block_points(b)));
  return a;
}

json fraction_json(const Fraction& f) {
  return json{{"num", f.num}, {"den", f.den}, {"str", f.str()}};
}

}  // namespace

json params_json(const DesignParams& p) {
  return json{{"v", p.v}, {"k", p.k}, {"lambda", p.lambda}, {"n", p.order()}};
}

json design_json(const Design& d) {
  json blocks = json::array();
  for (const BitVec& b : d.blocks()) blocks.push_back(one_based(b.bits()));
  return json{{"type", "design"}, {"params", params_json(d.params())},
              {"blocks", blocks}};
}

json fixed_structure_json(const Design& d, const Perm& p, const FixedData& f) {
  return json{{"type", "fixed_structure"},
              {"params", params_json(d.params())},
              {"perm", format_cycles(p)},
              {"perm_order", perm_order(p)},
              {"fixed_points", one_based(f.fixed_points)},
              {"fixed_blocks", block_list(d, f.fixed_blocks)},
              {"fixed_point_count", f.fixed_points.size()},
              {"fixed_block_count", f.fixed_blocks.size()}};
}

json lemma_report_json(const LemmaReport& r) {
  json entries = json::array();
  for (const LemmaEntry& e : r.entries)
    entries.push_back(json{{"id", e.id},
                           {"applicable", e.applicable},
                           {"holds", e.holds},
                           {"witness", e.witness}});
  return json{{"type", "lemma_report"},
              {"entries", entries},
              {"all_applicable_hold", r.all_applicable_hold()}};
}

json prime_report_json(const PrimeReport& r) {
  json trace = json::array();
  for (const TraceStep& s : r.trace) {
    json step{{"rule", s.rule}, {"input", s.input}, {"output", s.output},
              {"note", s.note}};
    if (s.f) step["f"] = *s.f;
    if (s.value) step["value"] = *s.value;
    trace.push_back(step);
  }
  json g_sets = json::object();
  for (const auto& [f, gs] : r.g_sets) g_sets[std::to_string(f)] = gs;
  json rep{{"type", "prime_report"},
           {"params", params_json(r.params)},
           {"prime", r.prime},
           {"bound_max", r.bound_max},
           {"candidates", r.candidate_f},
           {"g_sets", g_sets},
           {"survivors", r.survivors},
           {"verdict", r.contradiction() ? "contradiction" : "feasible"},
           {"trace", trace},
           {"inapplicable", r.inapplicable}};
  if (r.g_base) rep["g_base"] = *r.g_base;
  return rep;
}

json theorem_report_json(const TheoremReport& r) {
  json caps = json::object();
  for (const auto& [p, cap] : r.exponent_caps)
    caps[std::to_string(p)] = cap ? json(*cap) : json("unbounded");
  json facts = json::array();
  for (const KnownFact& f : r.facts_used)
    facts.push_back(json{{"order", f.element_order},
                         {"fixed_count", f.fixed_count},
                         {"source", f.source},
                         {"external", f.external}});
  return json{{"type", "theorem_report"},
              {"params", params_json(r.params)},
              {"allowed_primes", r.allowed_primes},
              {"exponent_caps", caps},
              {"elementary_abelian_2_cap",
               r.elementary_abelian_2_cap ? json(*r.elementary_abelian_2_cap)
                                          : json("unknown")},
              {"abelian_2_rank_cap",
               r.abelian_2_rank_cap ? json(*r.abelian_2_rank_cap) : json("unknown")},
              {"forbidden_element_orders", r.forbidden_element_orders},
              {"prime_exclusions", r.prime_exclusions},
              {"facts", facts},
              {"depends_on_external", r.depends_on_external},
              {"notes", r.notes}};
}

json integrality_json(const IntegralityReport& r) {
  return json{{"type", "integrality"},
              {"v", r.v},
              {"prime", r.prime},
              {"exponent", r.exponent},
              {"group_order", r.group_order},
              {"nonidentity", r.nonidentity},
              {"fixed_count", r.fixed_count},
              {"r", fraction_json(r.r)},
              {"verdict", r.possible ? "possible" : "impossible"}};
}

json commuting_json(const CommutingPairReport& r) {
  return json{{"type", "commuting_pair"},
              {"p", r.p},
              {"q", r.q},
              {"f_p", r.f_p},
              {"f_q", r.f_q},
              {"set_from_p", r.set_from_p},
              {"set_from_q", r.set_from_q},
              {"c_set", r.c_set},
              {"verdict", r.possible ? "possible" : "impossible"}};
}

json burnside_json(const BurnsideResult& r) {
  return json{{"type", "burnside"},
              {"group_order", r.group_order},
              {"fixed_sum", r.fixed_sum},
              {"orbit_count", fraction_json(r.orbit_count)},
              {"is_integral", r.is_integral}};
}

json aut_json(const AutGroupResult& r) {
  json gens = json::array();
  for (const Perm& g : r.generators) gens.push_back(format_cycles(g));
  return json{{"type", "aut_group"},
              {"order", r.order},
              {"generators", gens},
              {"node_count", r.node_count}};
}

}  // namespace sbd
