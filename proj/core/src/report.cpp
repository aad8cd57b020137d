#include "linkobs/report.hpp"

#include <chrono>
#include <ctime>

namespace linkobs {

namespace {

std::string iso_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json base_record(const std::string& claim, int n, std::uint64_t seed, Json parameters,
                 bool pass) {
  Json j;
  j["claim"] = claim;
  j["n"] = n;
  j["seed"] = seed;
  j["parameters"] = std::move(parameters);
  j["pass"] = pass;
  j["evidence"] = Json::object();
  j["witnesses"] = Json::object();
  j["timestamp"] = iso_timestamp();
  return j;
}

Json lemma_evidence(const Lemma21Report& rep) {
  Json e;
  e["top_cells"] = rep.top_cells;
  e["lower_cells"] = rep.lower_cells;
  e["coboundary_rank"] = rep.rank;
  e["cohomology_dim"] = rep.cohomology_dim;
  e["all_top_duals_cohomologous"] = rep.all_top_duals_cohomologous;
  return e;
}

}  // namespace

Json record_lemma21(const Lemma21Report& rep) {
  Json j = base_record("lemma21", rep.n, 0, Json::object(), rep.pass);
  j["evidence"] = lemma_evidence(rep);
  return j;
}

Json record_thm22(const Thm22Report& rep) {
  Json params;
  params["trials"] = rep.trials;
  Json j = base_record("thm22", rep.n, rep.seed, std::move(params), rep.pass);
  Json& e = j["evidence"];
  e["totals"] = rep.totals;
  e["parities"] = rep.parities;
  e["all_odd"] = rep.all_odd;
  e["invariance_pairs_checked"] = rep.invariance_pairs_checked;
  e["all_differences_coboundaries"] = rep.all_differences_coboundaries;
  e["lemma21"] = lemma_evidence(rep.lemma);
  return j;
}

Json record_thm12(const Thm12Report& rep) {
  Json params;
  params["base_params"] = rep.base_params;
  Json j = base_record("thm12", rep.n, rep.seed, std::move(params), rep.pass);
  Json& e = j["evidence"];
  e["embedding_ok"] = rep.embedding_ok;
  e["lambda_count"] = rep.lambda_count;
  e["lk2_values"] = rep.lk_values;
  e["sum_mod2"] = rep.sum_mod2;
  e["nontrivial_lambdas"] = Json::array();
  for (std::size_t i : rep.nontrivial) {
    const LinkPair& lp = rep.lambdas[i];
    Json item;
    std::string tau_prime, tau;
    for (VertexId v : lp.tau_prime.vertices()) {
      if (!tau_prime.empty()) tau_prime += ' ';
      tau_prime += rep.map.complex.label(v);
    }
    for (VertexId v : lp.tau.vertices()) {
      if (!tau.empty()) tau += ' ';
      tau += rep.map.complex.label(v);
    }
    item["tau_prime"] = tau_prime;
    item["tau"] = tau;
    e["nontrivial_lambdas"].push_back(std::move(item));
  }
  e["filling_route_mismatches"] = rep.filling_route_mismatches;
  e["lambda_enumeration"] =
      rep.n <= 2 ? "two-family enumeration, exhaustively cross-checked against the sphere-pair sweep"
                 : "two-family enumeration (sphere-pair exhaustiveness not machine-checked for n = 3)";
  j["witnesses"]["embedding"] = map_to_text(rep.map);
  return j;
}

Json record_prop13(const Prop13Report& rep) {
  Json j = base_record("prop13", rep.n, rep.seed, Json::object(), rep.pass);
  Json& e = j["evidence"];
  e["base_pairs"] = rep.base_pairs;
  e["base_nontrivial"] = rep.base_nontrivial;
  e["relabel"] = rep.relabel;
  e["checks"] = Json::array();
  for (const auto& check : rep.checks) {
    Json c;
    c["name"] = check.name;
    c["removed"] = check.removed;
    c["embedding_ok"] = check.embedding_ok;
    c["surviving_lambdas"] = check.surviving_lambdas;
    c["zero_count"] = check.zero_count;
    c["all_zero"] = check.all_zero;
    e["checks"].push_back(std::move(c));
  }
  e["maximal_simplices"] = rep.maximal_simplices;
  e["n1_type"] = rep.n1_type;
  e["n2_type"] = rep.n2_type;
  e["unclassified"] = rep.unclassified;
  for (const auto& check : rep.checks)
    j["witnesses"][check.name + "_embedding"] = map_to_text(check.map);
  return j;
}

Json record_suspension(const SuspensionReport& rep) {
  Json j = base_record("suspension-claims", rep.n, rep.seed, Json::object(), rep.pass);
  Json& e = j["evidence"];
  e["copies"] = rep.copies;
  e["expected_copies"] = rep.expected_copies;
  e["sharing_value"] = rep.sharing_value;
  e["sharing_ok"] = rep.sharing_ok;
  e["lambda_union"] = rep.lambda_union;
  e["embedding_ok"] = rep.embedding_ok;
  e["lk2_values"] = rep.lk_values;
  e["nontrivial_count"] = rep.nontrivial_count;
  e["lk2_integer_sum"] = rep.lk_integer_sum;
  e["sum_mod4"] = rep.sum_mod4;
  e["sum_mod4_note"] = "single-embedding evidence, not a proof";
  j["witnesses"]["embedding"] = map_to_text(rep.map);
  return j;
}

Json record_remark14(const Remark14Report& rep) {
  Json params;
  params["trials"] = rep.trials;
  Json j = base_record("remark14", rep.n, rep.seed, std::move(params), rep.pass);
  Json& e = j["evidence"];
  e["iso_to_n2"] = rep.iso_to_n2;
  e["lemma21_analogue"] = lemma_evidence(rep.lemma_analogue);
  e["parities"] = rep.parities;
  e["all_odd"] = rep.all_odd;
  return j;
}

std::string dump_record(const Json& record) { return record.dump(2) + "\n"; }

Json strip_timestamp(const Json& record) {
  Json j = record;
  j.erase("timestamp");
  return j;
}

Json report_schema() {
  Json fields;
  fields["claim"] = {{"type", "string"},
                     {"enum", {"lemma21", "thm22", "thm12", "prop13", "remark14",
                               "suspension-claims"}}};
  fields["n"] = {{"type", "integer"}};
  fields["seed"] = {{"type", "integer"}};
  fields["parameters"] = {{"type", "object"}};
  fields["pass"] = {{"type", "boolean"}};
  fields["evidence"] = {{"type", "object"}};
  fields["witnesses"] = {{"type", "object"}};
  fields["timestamp"] = {{"type", "string"}};
  Json schema;
  schema["record"] = "linkobs verification record";
  schema["version"] = 1;
  schema["fields"] = std::move(fields);
  return schema;
}

std::vector<std::string> validate_record(const Json& record) {
  std::vector<std::string> errors;
  if (!record.is_object()) return {"record is not a JSON object"};
  Json schema = report_schema();
  for (const auto& [name, spec] : schema["fields"].items()) {
    if (!record.contains(name)) {
      errors.push_back("missing field: " + name);
      continue;
    }
    const Json& value = record[name];
    const std::string type = spec["type"];
    bool ok = (type == "string" && value.is_string()) ||
              (type == "integer" && value.is_number_integer()) ||
              (type == "boolean" && value.is_boolean()) ||
              (type == "object" && value.is_object());
    if (!ok) errors.push_back("field " + name + " is not of type " + type);
    if (ok && spec.contains("enum")) {
      bool matched = false;
      for (const auto& option : spec["enum"])
        if (option == value) matched = true;
      if (!matched) errors.push_back("field " + name + " has unexpected value");
    }
  }
  return errors;
}

}  // namespace linkobs
