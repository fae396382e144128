// SPDX-License-Identifier: Apache-2.0
#include "invmap/report_io.hpp"

#include <json.hpp>

namespace invmap {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string to_json(const CheckOutcome& outcome) {
  ordered_json j;
  j["verdict"] = outcome.accepted ? "accepted" : "rejected";
  if (outcome.accepted) {
    ordered_json order = ordered_json::array();
    for (const auto& entry : outcome.certificate->order)
      order.push_back({{"output", entry.output_index}, {"pivot", entry.pivot}});
    j["certificate"] = std::move(order);
  } else {
    j["reason"] = to_string(outcome.reason);
    j["unmarked_outputs"] = outcome.unmarked;
  }
  return dump(j);
}

std::string to_text(const CheckOutcome& outcome) {
  if (!outcome.accepted) {
    std::string out = "rejected: " + to_string(outcome.reason) + "\n";
    out += "unmarked outputs:";
    for (auto i : outcome.unmarked) out += " f" + std::to_string(i);
    out += "\n";
    return out;
  }
  std::string out = "accepted\norder:";
  for (const auto& entry : outcome.certificate->order)
    out += " (f" + std::to_string(entry.output_index) + ", x" + std::to_string(entry.pivot) + ")";
  out += "\n";
  return out;
}

std::string to_json(const CycleReport& report) {
  ordered_json j;
  j["n"] = report.n;
  ordered_json cycles = ordered_json::array();
  for (const auto& c : report.cycles)
    cycles.push_back({{"length", c.length}, {"representative", c.representative}});
  j["cycles"] = std::move(cycles);
  j["total_states_covered"] = report.total_states_covered;
  j["tails_present"] = report.tails_present;
  return dump(j);
}

std::string to_text(const CycleReport& report) {
  std::string out = "n = " + std::to_string(report.n) + "\n";
  for (const auto& c : report.cycles)
    out += "cycle length " + std::to_string(c.length) + ", representative " +
           std::to_string(c.representative) + "\n";
  out += "states on cycles: " + std::to_string(report.total_states_covered) + "\n";
  out += "tails present: " + std::string(report.tails_present ? "yes" : "no") + "\n";
  return out;
}

std::string to_json(const SequenceReport& report) {
  ordered_json j;
  j["period"] = report.period;
  j["ones"] = report.ones;
  j["zeros"] = report.zeros;
  j["balance_ok"] = report.balance_ok;
  ordered_json runs = ordered_json::array();
  for (const auto& row : report.run_histogram)
    runs.push_back(
        {{"length", row.length}, {"zero_runs", row.zero_runs}, {"one_runs", row.one_runs}});
  j["run_histogram"] = std::move(runs);
  j["total_runs"] = report.total_runs;
  j["run_ok"] = report.run_ok;
  if (report.autocorrelation) {
    j["autocorrelation"] = *report.autocorrelation;
    j["two_level"] = *report.two_level;
  } else {
    j["autocorrelation"] = nullptr;
    j["two_level"] = nullptr;
  }
  return dump(j);
}

std::string to_text(const SequenceReport& report) {
  std::string out;
  out += "period: " + std::to_string(report.period) + "\n";
  out += "ones: " + std::to_string(report.ones) + ", zeros: " + std::to_string(report.zeros) +
         ", balance_ok: " + (report.balance_ok ? "yes" : "no") + "\n";
  out += "runs (length: zero-runs/one-runs):";
  for (const auto& row : report.run_histogram)
    out += " " + std::to_string(row.length) + ": " + std::to_string(row.zero_runs) + "/" +
           std::to_string(row.one_runs);
  out += "\n";
  out += "run_ok: " + std::string(report.run_ok ? "yes" : "no") + "\n";
  if (report.autocorrelation) {
    out += "autocorrelation:";
    for (auto v : *report.autocorrelation) out += " " + std::to_string(v);
    out += "\ntwo_level: " + std::string(*report.two_level ? "yes" : "no") + "\n";
  } else {
    out += "autocorrelation: skipped\n";
  }
  return out;
}

std::string to_json(const SearchResult& result) {
  ordered_json j;
  j["n"] = result.n;
  j["rng_seed"] = result.rng_seed;
  j["period_target"] = result.period_target;
  j["candidates_tried"] = result.candidates_tried;
  j["accepted_by_checker"] = result.accepted_by_checker;
  ordered_json found = ordered_json::array();
  for (const auto& f : result.found) {
    found.push_back({{"candidate_index", f.candidate_index},
                     {"total_cost", f.total_cost},
                     {"verified_period", f.verified_period},
                     {"mapping", mapping_to_text(f.mapping)}});
  }
  j["found"] = std::move(found);
  return dump(j);
}

std::string to_text(const SearchResult& result) {
  std::string out;
  out += "n: " + std::to_string(result.n) + ", seed: " + std::to_string(result.rng_seed) +
         ", period target: " + std::to_string(result.period_target) + "\n";
  out += "candidates tried: " + std::to_string(result.candidates_tried) +
         ", accepted by checker: " + std::to_string(result.accepted_by_checker) +
         ", found: " + std::to_string(result.found.size()) + "\n";
  for (const auto& f : result.found) {
    out += "-- candidate " + std::to_string(f.candidate_index) + ", cost " +
           std::to_string(f.total_cost) + ", period " + std::to_string(f.verified_period) + "\n";
    out += mapping_to_text(f.mapping);
  }
  return out;
}

SearchConfig search_config_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid search config JSON: ") + e.what());
  }
  SearchConfig cfg;
  for (const auto& [key, value] : j.items()) {
    if (key == "n")
      cfg.n = value.get<unsigned>();
    else if (key == "op_budget")
      cfg.op_budget = value.get<unsigned>();
    else if (key == "max_modified")
      cfg.max_modified = value.get<unsigned>();
    else if (key == "rng_seed")
      cfg.rng_seed = value.get<std::uint64_t>();
    else if (key == "candidate_limit")
      cfg.candidate_limit = value.get<std::uint64_t>();
    else if (key == "period_target")
      cfg.period_target = value.get<std::uint64_t>();
    else if (key == "threads")
      cfg.threads = value.get<unsigned>();
    else if (key == "backbone")
      cfg.backbone = mapping_from_text(value.get<std::string>());
    else
      throw std::invalid_argument("unknown search config key: " + key);
  }
  return cfg;
}

std::string to_json(const SearchConfig& cfg) {
  ordered_json j;
  j["n"] = cfg.n;
  j["op_budget"] = cfg.op_budget;
  j["max_modified"] = cfg.max_modified;
  j["rng_seed"] = cfg.rng_seed;
  j["candidate_limit"] = cfg.candidate_limit;
  if (cfg.period_target) j["period_target"] = *cfg.period_target;
  j["threads"] = cfg.threads;
  if (cfg.backbone) j["backbone"] = mapping_to_text(*cfg.backbone);
  return dump(j);
}

}  // namespace invmap
