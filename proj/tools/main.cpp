// SPDX-License-Identifier: Apache-2.0
//
// invmap: construct, verify, analyze, and search invertible Boolean mappings
// given in algebraic normal form.
//
// Exit codes: 0 = success / analytic positive, 1 = analytic negative
// (condition rejected, not a permutation, target missed), 2 = usage or
// input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <invmap/invcheck.hpp>
#include <invmap/polyperm.hpp>
#include <invmap/report_io.hpp>
#include <invmap/search.hpp>
#include <invmap/seqstats.hpp>
#include <invmap/stg.hpp>

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

invmap::VectorialMapping load_mapping(const std::string& path) {
  return invmap::mapping_from_text(read_input(path));
}

std::vector<std::uint64_t> parse_uint_list(const std::string& text, const char* what) {
  std::vector<std::uint64_t> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    const std::string token =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument(std::string("invalid ") + what + " list: '" + text + "'");
    values.push_back(std::stoull(token));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return values;
}

void emit(bool json, const std::string& json_text, const std::string& plain_text) {
  std::cout << (json ? json_text : plain_text);
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------

int cmd_check(const std::string& path, bool json) {
  const auto outcome = invmap::check_theorem1(load_mapping(path));
  emit(json, invmap::to_json(outcome), invmap::to_text(outcome));
  return outcome.accepted ? 0 : kExitNegative;
}

int cmd_oracle(const std::string& path, unsigned cap, bool json) {
  const auto result = invmap::brute_force_invertible(load_mapping(path), cap);
  ordered_json j;
  j["invertible"] = result.invertible;
  std::string text;
  if (result.invertible) {
    j["collision"] = nullptr;
    text = "invertible\n";
  } else {
    j["collision"] = {result.collision->a, result.collision->b};
    text = "not invertible: states " + std::to_string(result.collision->a) + " and " +
           std::to_string(result.collision->b) + " share an image\n";
  }
  emit(json, dump(j), text);
  return result.invertible ? 0 : kExitNegative;
}

int cmd_invert(const std::string& path, std::uint64_t state, bool json) {
  const auto m = load_mapping(path);
  if (m.width() < invmap::kMaxEvalWidth && state >= (std::uint64_t{1} << m.width()))
    throw std::invalid_argument("state out of range for width " + std::to_string(m.width()));
  const auto outcome = invmap::check_theorem1(m);
  if (!outcome.accepted) {
    std::cerr << "mapping does not satisfy the sufficient condition; no certificate to invert with\n";
    return kExitNegative;
  }
  const auto preimage = invmap::invert_state(m, *outcome.certificate, state);
  ordered_json j;
  j["state"] = state;
  j["preimage"] = preimage;
  emit(json, dump(j), "preimage: " + std::to_string(preimage) + "\n");
  return 0;
}

int cmd_cycles(const std::string& path, unsigned cap, bool json) {
  const auto report = invmap::cycle_structure(load_mapping(path), cap);
  emit(json, invmap::to_json(report), invmap::to_text(report));
  return 0;
}

int cmd_simulate(const std::string& path, std::uint64_t seed, unsigned bit, std::uint64_t len,
                 bool json) {
  const auto seq = invmap::output_sequence(load_mapping(path), seed, bit, len);
  std::string bits;
  bits.reserve(seq.size());
  for (auto b : seq) bits += static_cast<char>('0' + b);
  ordered_json j;
  j["bits"] = bits;
  emit(json, dump(j), bits + "\n");
  return 0;
}

int cmd_golomb(const std::string& path, std::uint64_t seed, unsigned bit,
               std::uint64_t autocorr_limit, bool json) {
  const auto m = load_mapping(path);
  const auto period = invmap::period_from(m, seed);
  // Statistics are defined on one full period of the eventual cycle; skip
  // any tail first.
  invmap::State start = seed;
  for (std::uint64_t t = 0; t < period.tail_length; ++t) start = invmap::apply(m, start);
  const auto seq = invmap::output_sequence(m, start, bit, period.cycle_length);
  const bool with_autocorr = period.cycle_length <= autocorr_limit;
  const auto report = invmap::analyze_sequence(seq, with_autocorr);
  emit(json, invmap::to_json(report), invmap::to_text(report));
  return 0;
}

int cmd_search(invmap::SearchConfig cfg, const std::string& config_path,
               const std::string& out_dir, bool json) {
  if (!config_path.empty()) {
    auto loaded = invmap::search_config_from_json(read_input(config_path));
    loaded.threads = cfg.threads;  // thread count is an execution detail
    cfg = loaded;
  }
  const auto result = invmap::run_search(cfg);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (const auto& f : result.found) {
      std::ofstream out(std::filesystem::path(out_dir) /
                        ("find_" + std::to_string(f.candidate_index) + ".map"));
      out << invmap::mapping_to_text(f.mapping);
    }
  }
  emit(json, invmap::to_json(result), invmap::to_text(result));
  return 0;
}

int cmd_rivest(const std::string& coeffs, unsigned width, bool json) {
  const invmap::IntPolynomial p(parse_uint_list(coeffs, "coefficient"), width);
  const bool permutation = invmap::is_rivest_permutation(p);
  ordered_json j;
  j["permutation"] = permutation;
  emit(json, dump(j), std::string("permutation: ") + (permutation ? "yes" : "no") + "\n");
  return permutation ? 0 : kExitNegative;
}

int cmd_relabel(const std::string& path, const std::string& perm, bool json) {
  const auto m = load_mapping(path);
  const auto indices = parse_uint_list(perm, "permutation");
  std::vector<std::uint32_t> image(indices.begin(), indices.end());
  const auto result = invmap::relabel(m, invmap::VariableRelabeling(std::move(image)));
  const auto text = invmap::mapping_to_text(result);
  ordered_json j;
  j["mapping"] = text;
  emit(json, dump(j), text);
  return 0;
}

int cmd_nlfsr(const std::string& feedback, unsigned width, bool json) {
  const auto fb = invmap::parse_anf(feedback, width);
  const auto m = invmap::nlfsr_to_mapping(fb, width);
  const bool invertible = invmap::nlfsr_feedback_invertible(fb);
  const auto text = invmap::mapping_to_text(m);
  ordered_json j;
  j["mapping"] = text;
  j["feedback_invertible"] = invertible;
  emit(json, dump(j),
       text + "feedback invertible: " + (invertible ? "yes" : "no") + "\n");
  return invertible ? 0 : kExitNegative;
}

int cmd_cost(const std::string& path, bool json) {
  const auto m = load_mapping(path);
  ordered_json rows = ordered_json::array();
  std::uint64_t total = 0;
  std::string text;
  for (unsigned i = 0; i < m.width(); ++i) {
    const auto cost = invmap::op_cost(m.output(i));
    total += cost.total();
    rows.push_back({{"output", i},
                    {"xor", cost.xor_count},
                    {"and", cost.and_count},
                    {"total", cost.total()}});
    text += "f" + std::to_string(i) + ": xor " + std::to_string(cost.xor_count) + ", and " +
            std::to_string(cost.and_count) + ", total " + std::to_string(cost.total()) + "\n";
  }
  ordered_json j;
  j["outputs"] = std::move(rows);
  j["total"] = total;
  text += "mapping total: " + std::to_string(total) + "\n";
  emit(json, dump(j), text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invertible Boolean mapping toolkit"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit JSON instead of plain text");

  std::string path, perm, feedback, coeffs, config_path, out_dir;
  std::uint64_t state = 0, seed = 1, len = 0, autocorr_limit = 4096;
  unsigned bit = 0, width = 0, cap = invmap::kDefaultExhaustiveCap;

  auto* check = app.add_subcommand("check", "test the sufficient invertibility condition");
  check->add_option("file", path, "mapping file ('-' for stdin)")->required();

  auto* oracle = app.add_subcommand("oracle", "exhaustive bijectivity test");
  oracle->add_option("file", path)->required();
  oracle->add_option("--cap", cap, "exhaustive width cap (default 24)");

  auto* invert = app.add_subcommand("invert", "recover the preimage of a state");
  invert->add_option("file", path)->required();
  invert->add_option("--state", state, "output state to invert")->required();

  auto* cycles = app.add_subcommand("cycles", "full cycle decomposition of the state graph");
  cycles->add_option("file", path)->required();
  cycles->add_option("--cap", cap, "exhaustive width cap (default 24)");

  auto* simulate = app.add_subcommand("simulate", "emit one output bit along an orbit");
  simulate->add_option("file", path)->required();
  simulate->add_option("--seed", seed, "initial state")->required();
  simulate->add_option("--bit", bit, "output bit (default 0)");
  simulate->add_option("--len", len, "number of steps")->required();

  auto* golomb = app.add_subcommand("golomb", "randomness postulates over one full period");
  golomb->add_option("file", path)->required();
  golomb->add_option("--seed", seed, "initial state")->required();
  golomb->add_option("--bit", bit, "output bit (default 0)");
  golomb->add_option("--autocorr-limit", autocorr_limit,
                     "skip the quadratic autocorrelation for longer periods");

  invmap::SearchConfig cfg;
  auto* search = app.add_subcommand("search", "seeded random search for full-period mappings");
  search->add_option("--config", config_path, "JSON config file (overrides the flags)");
  search->add_option("--n", cfg.n, "mapping width");
  search->add_option("--budget", cfg.op_budget, "max total gate count of the perturbation");
  search->add_option("--max-modified", cfg.max_modified, "max outputs differing from the backbone");
  search->add_option("--seed", cfg.rng_seed, "RNG seed (default 1)");
  search->add_option("--limit", cfg.candidate_limit, "candidates to evaluate");
  std::uint64_t period_target = 0;
  auto* target_opt = search->add_option("--period-target", period_target,
                                        "required cycle length from state 1 (default 2^n - 1)");
  search->add_option("--threads", cfg.threads, "worker threads (result is thread-count independent)");
  search->add_option("--out-dir", out_dir, "write each find as a mapping file here");

  auto* rivest = app.add_subcommand("rivest", "permutation-polynomial criterion modulo 2^n");
  rivest->add_option("--coeffs", coeffs, "a0,a1,...,ad")->required();
  rivest->add_option("--width", width, "modulus exponent n")->required();

  auto* relabel = app.add_subcommand("relabel", "rename variables inside every output");
  relabel->add_option("file", path)->required();
  relabel->add_option("--perm", perm, "image list i0,i1,...")->required();

  auto* nlfsr = app.add_subcommand("nlfsr", "expand a feedback function into a register mapping");
  nlfsr->add_option("--feedback", feedback, "ANF expression")->required();
  nlfsr->add_option("--width", width, "register length")->required();

  auto* cost = app.add_subcommand("cost", "gate counts of every output");
  cost->add_option("file", path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (app.got_subcommand(check)) return cmd_check(path, json);
    if (app.got_subcommand(oracle)) return cmd_oracle(path, cap, json);
    if (app.got_subcommand(invert)) return cmd_invert(path, state, json);
    if (app.got_subcommand(cycles)) return cmd_cycles(path, cap, json);
    if (app.got_subcommand(simulate)) return cmd_simulate(path, seed, bit, len, json);
    if (app.got_subcommand(golomb)) return cmd_golomb(path, seed, bit, autocorr_limit, json);
    if (app.got_subcommand(search)) {
      if (!target_opt->empty()) cfg.period_target = period_target;
      return cmd_search(cfg, config_path, out_dir, json);
    }
    if (app.got_subcommand(rivest)) return cmd_rivest(coeffs, width, json);
    if (app.got_subcommand(relabel)) return cmd_relabel(path, perm, json);
    if (app.got_subcommand(nlfsr)) return cmd_nlfsr(feedback, width, json);
    if (app.got_subcommand(cost)) return cmd_cost(path, json);
  } catch (const invmap::ParseError& e) {
    std::cerr << "parse error";
    if (e.line) std::cerr << " at line " << e.line;
    std::cerr << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
