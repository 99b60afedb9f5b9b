#include "boxball/serialize.hpp"

namespace boxball {

Json to_json(const Permutation& w) { return Json(w.values()); }

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const Tableau& t) { return Json(t.rows()); }

Json to_json(const BbsState& s) {
  Json content = Json::array();
  for (int v : s.content()) {
    if (v == BbsState::kEmpty) {
      content.push_back(nullptr);
    } else {
      content.push_back(v);
    }
  }
  return Json{{"offset", s.offset()}, {"content", std::move(content)}};
}

Json to_json(const SkewArray& a) {
  Json rows = Json::array();
  for (const auto& r : a.rows()) rows.push_back(Json{{"offset", r.offset}, {"entries", r.entries}});
  return rows;
}

Json to_json(const RsPair& pq) { return Json{{"P", to_json(pq.p)}, {"Q", to_json(pq.q)}}; }

Json to_json(const GreeneProfile& g) {
  return Json{{"incr", g.incr},
              {"decr", g.decr},
              {"local_incr", g.local_incr},
              {"local_decr", g.local_decr}};
}

Json to_json(const KnuthMoveLabel& l) {
  const char* kind = l.kind == MoveKind::kKB ? "KB" : (l.kind == MoveKind::kK1Proper ? "K1" : "K2");
  return Json{{"position", l.position},
              {"kind", kind},
              {"direction", l.direction == MoveDirection::kPlus ? "+" : "-"}};
}

Json to_json(const KnuthClassGraph& g) {
  Json vertices = Json::array();
  for (const auto& v : g.vertices) {
    vertices.push_back(Json{{"w", to_json(v.w)},
                            {"sd", to_json(v.sd)},
                            {"shape", to_json(v.sd_shape)},
                            {"steady_time", v.steady_time}});
  }
  Json edges = Json::array();
  for (const auto& e : g.edges) {
    edges.push_back(Json{{"a", e.a}, {"b", e.b}, {"label", to_json(e.label)}});
  }
  return Json{{"P", to_json(g.insertion)}, {"vertices", vertices}, {"edges", edges}};
}

Json to_json(const VerificationReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    violations.push_back(Json{{"witness", v.witness}, {"detail", v.detail}});
  }
  Json summary = Json::object();
  for (const auto& [k, v] : r.summary) summary[k] = v;
  Json table = Json::object();
  for (const auto& [k, v] : r.table) table[k] = v;
  return Json{{"claim_id", r.claim_id},
              {"n", r.n},
              {"conjecture", r.conjecture},
              {"checked", r.checked},
              {"passed", r.passed()},
              {"violations", violations},
              {"summary", summary},
              {"table", table},
              {"elapsed_s", r.elapsed.count()}};
}

Permutation permutation_from_json(const Json& j) {
  try {
    return Permutation(j.get<std::vector<int>>());
  } catch (const Json::exception& e) {
    throw DomainError(std::string("permutation JSON: ") + e.what());
  }
}

Partition partition_from_json(const Json& j) {
  try {
    return Partition(j.get<std::vector<int>>());
  } catch (const Json::exception& e) {
    throw DomainError(std::string("partition JSON: ") + e.what());
  }
}

Tableau tableau_from_json(const Json& j) {
  try {
    return Tableau(j.get<std::vector<std::vector<int>>>());
  } catch (const Json::exception& e) {
    throw DomainError(std::string("tableau JSON: ") + e.what());
  }
}

BbsState state_from_json(const Json& j) {
  try {
    std::vector<int> content;
    for (const auto& v : j.at("content")) {
      content.push_back(v.is_null() ? BbsState::kEmpty : v.get<int>());
    }
    return BbsState(j.at("offset").get<long>(), std::move(content));
  } catch (const Json::exception& e) {
    throw DomainError(std::string("state JSON: ") + e.what());
  }
}

}  // namespace boxball
