#include "zeroseq/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "zeroseq/decomp.hpp"
#include "zeroseq/extremal.hpp"
#include "zeroseq/numtheory.hpp"
#include "zeroseq/oracle.hpp"
#include "zeroseq/scan.hpp"
#include "zeroseq/seq.hpp"
#include "zeroseq/thresholds.hpp"

namespace zeroseq {

namespace {

using nlohmann::json;

constexpr const char* kSchema = "zeroseq/1";

struct OutputOptions {
  bool pretty = false;
  bool timing = false;
  std::string format = "json";
};

void print_text(const json& j, std::ostream& out, int indent) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    if (v.is_object()) {
      out << pad << it.key() << ":\n";
      print_text(v, out, indent + 1);
    } else if (v.is_array()) {
      out << pad << it.key() << ":";
      for (const auto& e : v) {
        if (e.is_structured()) {
          out << " " << e.dump();
        } else {
          out << " " << (e.is_string() ? e.get<std::string>() : e.dump());
        }
      }
      out << "\n";
    } else if (v.is_string()) {
      out << pad << it.key() << ": " << v.get<std::string>() << "\n";
    } else {
      out << pad << it.key() << ": " << v.dump() << "\n";
    }
  }
}

void emit(json payload, const OutputOptions& opts, long long elapsed_ms, std::ostream& out) {
  payload["schema"] = kSchema;
  if (opts.timing) payload["elapsed_ms"] = elapsed_ms;
  if (opts.format == "text") {
    print_text(payload, out, 0);
  } else {
    out << (opts.pretty ? payload.dump(2) : payload.dump()) << "\n";
  }
}

SignedSeq read_sequence(const std::string& path, std::istream& in, int r, int s) {
  std::string text;
  if (!path.empty()) {
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open sequence file: " + path);
    text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  } else {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  return parse_seq(text, r, s);
}

json witness_payload(const std::optional<BlockWitness>& w) {
  if (!w) return json{{"result", "none"}};
  return json{{"indices", w->indices}, {"weight", w->weight}};
}

json phase_payload(const EnumPhase& phase) {
  return json{{"n", phase.n},
              {"space", phase.space},
              {"eligible", phase.eligible},
              {"no_block", phase.no_block}};
}

void dump_counterexamples(const EnumPhase& phase, std::ostream& err) {
  int shown = 0;
  for (std::uint64_t enc : phase.no_block_encodings) {
    if (shown++ >= 5) break;
    err << "counterexample: " << format_seq(decode_pm1(enc, static_cast<int>(phase.n))) << "\n";
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"zero-sum block toolkit: sharp window thresholds, extremal families,\n"
               "bounded-gap decompositions and number-theoretic block scans"};
  app.name("zeroseq");
  app.require_subcommand(0, 1);

  OutputOptions opts;
  app.add_flag("--pretty", opts.pretty, "indent JSON output");
  app.add_flag("--timing", opts.timing, "add elapsed_ms to the payload");
  app.add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  std::string input_path;

  // threshold
  auto* c_threshold = app.add_subcommand(
      "threshold", "sharp length threshold: block mode (--k --t --q) guarantees a k-window of "
                   "|sum| <= t, gap mode (--d --k) a zero-sum d-bounded gap set of size k");
  int th_k = 0, th_t = -1, th_q = -1, th_d = 0;
  c_threshold->add_option("--k", th_k, "window / gap-set size")->required();
  c_threshold->add_option("--t", th_t, "weight bound (block mode)");
  c_threshold->add_option("--q", th_q, "total-weight bound (block mode)");
  c_threshold->add_option("--d", th_d, "gap bound (gap mode)");

  // find-block
  auto* c_find_block = app.add_subcommand(
      "find-block", "leftmost k-window with |sum| <= t; guaranteed to exist once the sequence "
                    "length reaches the sharp threshold for (k, t, q)");
  int fb_k = 0, fb_t = 0, fb_q = -1;
  c_find_block->add_option("--k", fb_k, "window length")->required();
  c_find_block->add_option("--t", fb_t, "weight bound")->required();
  c_find_block->add_option("--q", fb_q, "optional total bound; reports whether the guarantee applies");
  c_find_block->add_option("--input,-i", input_path, "sequence file (default: stdin)");

  // find-gap-block
  auto* c_find_gap = app.add_subcommand(
      "find-gap-block", "zero-sum d-bounded gap set of size k, by the constructive residue-class "
                        "search with an exhaustive fallback");
  int fg_d = 0, fg_k = 0;
  c_find_gap->add_option("--d", fg_d, "gap bound")->required();
  c_find_gap->add_option("--k", fg_k, "set size (even)")->required();
  c_find_gap->add_option("--input,-i", input_path, "sequence file (default: stdin)");

  // find-ap
  auto* c_find_ap = app.add_subcommand(
      "find-ap", "lexicographically least zero-sum k-term arithmetic progression");
  int fa_k = 0;
  c_find_ap->add_option("--k", fa_k, "progression length")->required();
  c_find_ap->add_option("--input,-i", input_path, "sequence file (default: stdin)");

  // extremal
  auto* c_extremal = app.add_subcommand(
      "extremal", "longest sequences with |total| = q avoiding every k-window of |sum| <= t");
  c_extremal->require_subcommand(1);
  auto* c_ex_gen = c_extremal->add_subcommand("gen", "emit every member, one per line");
  auto* c_ex_check = c_extremal->add_subcommand("check", "test membership of the input sequence");
  int ex_k = 0, ex_t = 0, ex_q = 0;
  for (auto* sub : {c_ex_gen, c_ex_check}) {
    sub->add_option("--k", ex_k, "window length")->required();
    sub->add_option("--t", ex_t, "weight bound")->required();
    sub->add_option("--q", ex_q, "total-weight bound")->required();
  }
  c_ex_check->add_option("--input,-i", input_path, "sequence file (default: stdin)");

  // extremal-gap
  auto* c_exgap = app.add_subcommand(
      "extremal-gap", "longest sequences attaining the (d-1)/(d+1) total bound without a "
                      "zero-sum d-bounded gap set of size k");
  c_exgap->require_subcommand(1);
  auto* c_eg_gen = c_exgap->add_subcommand("gen", "emit every member, one per line");
  auto* c_eg_check = c_exgap->add_subcommand("check", "test membership of the input sequence");
  int eg_d = 0, eg_k = 0;
  for (auto* sub : {c_eg_gen, c_eg_check}) {
    sub->add_option("--d", eg_d, "gap bound")->required();
    sub->add_option("--k", eg_k, "set size (even, >= 6)")->required();
  }
  c_eg_check->add_option("--input,-i", input_path, "sequence file (default: stdin)");

  // decompose
  auto* c_decompose = app.add_subcommand(
      "decompose", "split n*m values (layer-major) into n interval-transversal sets of size m "
                   "whose weights all lie in the tight [lambda, Lambda] band around total/n");
  int dc_n = 0, dc_m = 0, dc_r = 1, dc_s = 1;
  c_decompose->add_option("--n", dc_n, "sets / cells per layer")->required();
  c_decompose->add_option("--m", dc_m, "layers")->required();
  c_decompose->add_option("--r", dc_r, "negative letter magnitude")->capture_default_str();
  c_decompose->add_option("--s", dc_s, "positive letter value")->capture_default_str();
  c_decompose->add_option("--input,-i", input_path, "value file (default: stdin)");

  // liouville
  auto* c_liouville = app.add_subcommand(
      "liouville", "zero-sum k-windows of the prime-factor-parity sign sequence up to limit; "
                   "--d scans the dilated subsequence at stride d");
  long long lv_limit = 0;
  int lv_k = 0;
  long long lv_d = 1;
  c_liouville->add_option("--limit", lv_limit, "sieve limit")->required();
  c_liouville->add_option("--k", lv_k, "window length (even)")->required();
  c_liouville->add_option("--d", lv_d, "stride")->capture_default_str();

  // legendre
  auto* c_legendre = app.add_subcommand(
      "legendre", "zero-sum k-windows of the quadratic-residue sign sequence of primes mod p");
  long long lg_p = 0, lg_limit = 0;
  int lg_k = 0;
  c_legendre->add_option("--p", lg_p, "odd prime modulus")->required();
  c_legendre->add_option("--limit", lg_limit, "prime limit")->required();
  c_legendre->add_option("--k", lg_k, "window length (even)")->required();

  // verify
  auto* c_verify = app.add_subcommand(
      "verify", "independent brute-force verification of the sharp-threshold, decomposition and "
                "progression statements");
  c_verify->require_subcommand(1);
  int vf_workers = 0;
  int vf_budget_log2 = 26;
  c_verify->add_option("--workers", vf_workers, "enumeration threads (0 = all)")->capture_default_str();
  c_verify->add_option("--budget-log2", vf_budget_log2, "max enumerated space per phase")
      ->capture_default_str();

  auto* c_vf_block = c_verify->add_subcommand(
      "block", "exhaust both sides of the sharp block threshold for (k, t, q)");
  int vb_k = 0, vb_t = 0, vb_q = 0;
  c_vf_block->add_option("--k", vb_k)->required();
  c_vf_block->add_option("--t", vb_t)->required();
  c_vf_block->add_option("--q", vb_q)->required();

  auto* c_vf_gap = c_verify->add_subcommand(
      "gap", "exhaust both sides of the sharp gap-block threshold for (d, k)");
  int vg_d = 0, vg_k = 0;
  c_vf_gap->add_option("--d", vg_d)->required();
  c_vf_gap->add_option("--k", vg_k)->required();

  auto* c_vf_decomp = c_verify->add_subcommand(
      "decomp", "contract checks for the bounded-band decomposition on random instances");
  int vd_n = 0, vd_m = 0, vd_r = 1, vd_s = 1, vd_trials = 1000;
  std::uint64_t vd_seed = 0x5eed;
  bool vd_exhaustive = false;
  c_vf_decomp->add_option("--n", vd_n)->required();
  c_vf_decomp->add_option("--m", vd_m)->required();
  c_vf_decomp->add_option("--r", vd_r)->capture_default_str();
  c_vf_decomp->add_option("--s", vd_s)->capture_default_str();
  c_vf_decomp->add_option("--trials", vd_trials)->capture_default_str();
  c_vf_decomp->add_option("--seed", vd_seed)->capture_default_str();
  c_vf_decomp->add_flag("--exhaustive", vd_exhaustive, "enumerate every value pattern (small grids)");

  auto* c_vf_ap = c_verify->add_subcommand(
      "ap", "zero-sum k-term progression inside the block-free extremal pattern, k == 2 (mod 4), "
            "k/2 composite");
  int va_k = 0;
  c_vf_ap->add_option("--k", va_k)->required();

  // Let options given after a nested subcommand reach their parent
  // (e.g. `verify block ... --workers 4`).
  auto enable_fallthrough = [](auto&& self, CLI::App* node) -> void {
    for (CLI::App* sub : node->get_subcommands({})) {
      sub->fallthrough();
      self(self, sub);
    }
  };
  enable_fallthrough(enable_fallthrough, &app);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const auto started = std::chrono::steady_clock::now();
  auto elapsed_ms = [&]() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 started)
        .count();
  };

  try {
    if (c_threshold->parsed()) {
      json payload;
      if (c_threshold->count("--d")) {
        if (c_threshold->count("--t") || c_threshold->count("--q"))
          throw std::invalid_argument("threshold: gap mode takes --d and --k only");
        GapParams p = gap_params(th_d, th_k);
        payload = {{"d", th_d}, {"k", th_k}, {"s", p.s_residue}, {"n_threshold", gap_threshold(th_d, th_k)}};
      } else {
        if (!c_threshold->count("--t") || !c_threshold->count("--q"))
          throw std::invalid_argument("threshold: block mode needs --k, --t and --q");
        payload = {{"k", th_k},
                   {"t", th_t},
                   {"q", th_q},
                   {"s", residue_s(th_k, th_t, th_q)},
                   {"n_threshold", block_threshold(th_k, th_t, th_q)}};
      }
      emit(std::move(payload), opts, elapsed_ms(), out);
      return 0;
    }

    if (c_find_block->parsed()) {
      SignedSeq f = read_sequence(input_path, in, 1, 1);
      auto w = scan_bounded_block(f, fb_k, fb_t);
      json payload = witness_payload(w);
      if (c_find_block->count("--q")) {
        long long total = f.total();
        payload["guaranteed"] = f.size() >= block_threshold(fb_k, fb_t, fb_q) &&
                                (total < 0 ? -total : total) <= fb_q;
      }
      emit(std::move(payload), opts, elapsed_ms(), out);
      return w ? 0 : 1;
    }

    if (c_find_gap->parsed()) {
      SignedSeq f = read_sequence(input_path, in, 1, 1);
      auto w = find_zs_gap_block(f, fg_d, fg_k);
      emit(witness_payload(w), opts, elapsed_ms(), out);
      return w ? 0 : 1;
    }

    if (c_find_ap->parsed()) {
      SignedSeq f = read_sequence(input_path, in, 1, 1);
      auto w = find_zs_ap(f, fa_k);
      emit(witness_payload(w), opts, elapsed_ms(), out);
      return w ? 0 : 1;
    }

    if (c_extremal->parsed()) {
      if (c_ex_gen->parsed()) {
        for (const SignedSeq& f : enumerate_block_family(ex_k, ex_t, ex_q)) out << format_seq(f) << "\n";
        return 0;
      }
      SignedSeq f = read_sequence(input_path, in, 1, 1);
      bool member = is_block_family_member(f, ex_k, ex_t, ex_q);
      emit(json{{"member", member}}, opts, elapsed_ms(), out);
      return member ? 0 : 1;
    }

    if (c_exgap->parsed()) {
      if (c_eg_gen->parsed()) {
        for (const SignedSeq& f : enumerate_gap_family(eg_d, eg_k)) out << format_seq(f) << "\n";
        return 0;
      }
      SignedSeq f = read_sequence(input_path, in, 1, 1);
      bool member = is_gap_family_member(f, eg_d, eg_k);
      emit(json{{"member", member}}, opts, elapsed_ms(), out);
      return member ? 0 : 1;
    }

    if (c_decompose->parsed()) {
      SignedSeq f = read_sequence(input_path, in, dc_r, dc_s);
      std::vector<BlockWitness> sets = decompose_interval(f, dc_n, dc_m);
      Rational q = Rational(f.total(), dc_n);
      json paths = json::array();
      json weights = json::array();
      for (const BlockWitness& w : sets) {
        paths.push_back(w.indices);
        weights.push_back(w.weight);
      }
      json payload = {{"paths", paths},
                      {"weights", weights},
                      {"lambda", lambda_floor(q, dc_r, dc_s, dc_m)},
                      {"Lambda", lambda_ceil(q, dc_r, dc_s, dc_m)}};
      emit(std::move(payload), opts, elapsed_ms(), out);
      return 0;
    }

    if (c_liouville->parsed()) {
      ZsBlockReport report = liouville_ap_zs(lv_limit, lv_k, lv_d);
      json payload = {{"limit", lv_limit},      {"k", lv_k},
                      {"d", lv_d},              {"count", report.count},
                      {"first_starts", report.first_starts}, {"partial_sum", report.partial_sum}};
      emit(std::move(payload), opts, elapsed_ms(), out);
      return report.count > 0 ? 0 : 1;
    }

    if (c_legendre->parsed()) {
      ZsBlockReport report = legendre_zs_blocks(lg_p, lg_limit, lg_k);
      json payload = {{"p", lg_p},   {"limit", lg_limit},
                      {"k", lg_k},   {"count", report.count},
                      {"first_starts", report.first_starts}, {"partial_sum", report.partial_sum}};
      emit(std::move(payload), opts, elapsed_ms(), out);
      return report.count > 0 ? 0 : 1;
    }

    if (c_verify->parsed()) {
      if (vf_budget_log2 < 1 || vf_budget_log2 > 62)
        throw std::invalid_argument("verify: --budget-log2 must be in [1, 62]");
      std::uint64_t budget = 1ull << vf_budget_log2;

      if (c_vf_block->parsed()) {
        BlockVerifyReport report = verify_block_threshold(vb_k, vb_t, vb_q, vf_workers, budget);
        json payload = {{"kind", "block-threshold"},
                        {"k", report.k},
                        {"t", report.t},
                        {"q", report.q},
                        {"s", report.s_residue},
                        {"n_threshold", report.n_threshold},
                        {"at_threshold", phase_payload(report.at_threshold)},
                        {"below", phase_payload(report.below)},
                        {"family_size", report.family_size},
                        {"sets_equal", report.sets_equal},
                        {"pass", report.pass}};
        emit(std::move(payload), opts, elapsed_ms(), out);
        if (!report.pass) dump_counterexamples(report.at_threshold, err);
        return report.pass ? 0 : 1;
      }

      if (c_vf_gap->parsed()) {
        GapVerifyReport report = verify_gap_threshold(vg_d, vg_k, vf_workers, budget);
        json payload = {{"kind", "gap-threshold"},
                        {"d", report.d},
                        {"k", report.k},
                        {"s", report.s_residue},
                        {"n_threshold", report.n_threshold},
                        {"at_threshold", phase_payload(report.at_threshold)},
                        {"below", phase_payload(report.below)},
                        {"family_size", report.family_size},
                        {"sets_equal", report.sets_equal},
                        {"pass", report.pass}};
        emit(std::move(payload), opts, elapsed_ms(), out);
        if (!report.pass) dump_counterexamples(report.at_threshold, err);
        return report.pass ? 0 : 1;
      }

      if (c_vf_decomp->parsed()) {
        DecompVerifyReport report =
            verify_decomposition(vd_n, vd_m, vd_r, vd_s, vd_trials, vd_seed, vd_exhaustive);
        json payload = {{"kind", "decomposition"},
                        {"n", report.n},
                        {"m", report.m},
                        {"r", report.r},
                        {"s", report.s},
                        {"trials", report.trials},
                        {"exhaustive_instances", report.exhaustive_instances},
                        {"violations", report.violations},
                        {"lambda_attained", report.lambda_attained},
                        {"Lambda_attained", report.Lambda_attained},
                        {"zs_checked", report.zs_checked},
                        {"band_checked", report.band_checked},
                        {"cross_checked", report.cross_checked},
                        {"pass", report.pass}};
        emit(std::move(payload), opts, elapsed_ms(), out);
        return report.pass ? 0 : 1;
      }

      if (c_vf_ap->parsed()) {
        ApVerifyReport report = verify_ap_proposition(va_k);
        json payload = {{"kind", "ap-proposition"},
                        {"k", report.k},
                        {"n", report.n},
                        {"ap", json{{"indices", report.ap.indices}, {"weight", report.ap.weight}}},
                        {"divisors_checked", report.divisors_checked},
                        {"block_free", report.block_free},
                        {"pass", report.pass}};
        emit(std::move(payload), opts, elapsed_ms(), out);
        return report.pass ? 0 : 1;
      }
    }

    err << app.help() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace zeroseq
