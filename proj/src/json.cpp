#include "pghopf/json.hpp"

#include "pghopf/grammar.hpp"

namespace pghopf {

using nlohmann::json;

namespace {

json valuation_json(Valuation v) { return v.is_infinite() ? json("inf") : json(v.value()); }

json fibre_summary(const FibreReport& f) { return {{"kind", f.kind()}, {"fpower_ranks", f.fpower_ranks}}; }

}  // namespace

json to_json(const MatK& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(format(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

MatK matrix_from_json(const json& j, const Field& field) {
  std::vector<std::vector<RatFunc>> rows;
  for (const auto& row : j) {
    auto& out = rows.emplace_back();
    for (const auto& e : row) out.push_back(parse_element(e.get<std::string>(), field));
  }
  return MatK::from_rows(rows);
}

json to_json(const IntegralityWitness& w) {
  return {{"row", w.row + 1}, {"col", w.col + 1}, {"valuation", valuation_json(w.valuation)}};
}

json to_json(const HopfPresentation& h) {
  return {{"gens", h.gens}, {"A", to_json(h.A)}, {"relations", h.relations()}, {"text", h.to_text()}};
}

json to_json(const ThetaEmbedding& e) {
  const auto images = embedding_generators(e);
  json map = json::array();
  for (std::size_t i = 0; i < images.size(); ++i) map.push_back({{"source", e.source_gens[i]}, {"image", images[i]}});
  return {{"theta", to_json(e.theta)}, {"target_gens", e.target_gens}, {"generators", map}};
}

json to_json(const FibreReport& f) {
  json reduced = json::array();
  for (const auto& row : f.reduced) {
    json r = json::array();
    for (const auto& x : row) r.push_back(to_string(x));
    reduced.push_back(std::move(r));
  }
  return {{"reduced", reduced},       {"fpower_ranks", f.fpower_ranks}, {"etale_rank", f.etale_rank},
          {"connected", f.connected}, {"etale", f.etale},               {"kind", f.kind()}};
}

json to_json(const OrderOutcome& o) {
  if (const auto* bad = std::get_if<NotIntegral>(&o)) {
    return {{"integral", false}, {"A", to_json(bad->A)}, {"witness", to_json(bad->witness)}};
  }
  const auto& ok = std::get<OrderResult>(o);
  return {{"integral", true},
          {"A", to_json(ok.A)},
          {"presentation", to_json(ok.presentation)},
          {"embedding", to_json(ok.embedding)},
          {"fibre", to_json(special_fibre(ok.A))}};
}

json to_json(const OrderRecord& r) {
  json out = {{"family", to_string(r.family)},
              {"p", r.theta.field().characteristic()},
              {"i", r.i},
              {"j", r.j},
              {"theta", format(r.theta)}};
  const auto mono = monogenic_flag(r);
  out["monogenic"] = mono ? json(*mono) : json(nullptr);
  const OrderOutcome o = oracle_outcome(r);
  if (const auto* ok = std::get_if<OrderResult>(&o)) {
    out["fibre"] = fibre_summary(special_fibre(ok->A));
  } else {
    out["fibre"] = nullptr;
  }
  return out;
}

json to_json(const AgreementReport& r) {
  json dis = json::array();
  for (const auto& d : r.disagreements) {
    dis.push_back({{"i", d.record.i},
                   {"j", d.record.j},
                   {"theta", format(d.record.theta)},
                   {"v_theta", valuation_json(d.record.theta.valuation())},
                   {"predicate", d.predicate},
                   {"oracle", d.oracle},
                   {"witness", d.witness ? to_json(*d.witness) : json(nullptr)}});
  }
  return {{"family", to_string(r.family)},
          {"p", r.p},
          {"predicate", r.variant == PredicateVariant::implemented ? "implemented" : "printed_simplification"},
          {"total", r.total},
          {"agreements", r.agreements},
          {"disagreements", dis}};
}

json to_json(const Rank1Result& r) {
  return {{"is_order", r.is_order},
          {"b", format(r.b)},
          {"normalized_b", format(r.normalized_b)},
          {"shift", r.shift},
          {"a", format(r.a)},
          {"description", r.description}};
}

}  // namespace pghopf
