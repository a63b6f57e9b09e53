#include "fwh/cli.hpp"

#include <cstdint>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fwh/certificates.hpp"
#include "fwh/fermat_waring.hpp"
#include "fwh/grassmann.hpp"
#include "fwh/partition.hpp"
#include "fwh/probe.hpp"
#include "fwh/reports.hpp"
#include "fwh/rng.hpp"

namespace fwh {
namespace {

struct ParsedField {
  bool rational = false;
  std::uint64_t p = 0;
};

ParsedField parse_field(const std::string& text, bool allow_rational) {
  if (text == "q" || text == "Q") {
    if (!allow_rational)
      throw std::invalid_argument(
          "this subcommand needs a prime field; pass --field p<prime>, e.g. "
          "--field p10007");
    return {true, 0};
  }
  if (text.size() > 1 && (text[0] == 'p' || text[0] == 'P') &&
      text.find_first_not_of("0123456789", 1) == std::string::npos) {
    FpField f{std::stoull(text.substr(1))};  // validates primality and range
    return {false, f.p};
  }
  throw std::invalid_argument("bad --field '" + text +
                              "': expected q or p<prime>, e.g. p10007");
}

int emit(const Json& j, const std::string& text, bool json_mode,
         const std::string& out_path, std::ostream& out, std::ostream& err,
         int verdict_code) {
  const std::string payload = json_mode ? j.dump(2) + "\n" : text;
  if (out_path.empty()) {
    out << payload;
    return verdict_code;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot open --out file '" << out_path << "'\n";
    return 1;
  }
  file << payload;
  return verdict_code;
}

TheoremMode mode_of(int theorem) {
  if (theorem == 1) return TheoremMode::theorem1;
  if (theorem == 2) return TheoremMode::theorem2;
  throw std::invalid_argument("--theorem must be 1 or 2");
}

/// A partition whose diagonal plane is reproduced exactly by every redraw:
/// all constrained classes have size 2 (their single mu is pinned to a d-th
/// root of -1) and the distinguished class, if any, is a singleton.
bool fully_pinned(const Partition& p) {
  for (std::size_t a = 0; a < p.classes.size(); ++a) {
    const bool distinguished = p.distinguished == static_cast<long>(a) + 1;
    const std::size_t limit = distinguished ? 1 : 2;
    if (p.classes[a].size() > limit) return false;
  }
  return true;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Fermat-Waring hyperbolic hypersurfaces: genericity "
               "certificates, construction, codimension counts, and probes"};
  app.require_subcommand(1);

  std::uint64_t seed = kDefaultSeed;
  bool json_mode = false;
  std::string out_path;
  app.add_option("--seed", seed, "master RNG seed")->capture_default_str();
  app.add_flag("--json", json_mode, "emit JSON instead of text");
  app.add_option("--out", out_path, "write the report to this file");

  long n = 0, m = 0, a = 0, b = 0, c = 0, k = 0, l = 0, r = 0;
  int theorem = 0;
  long override_m = 0, override_d = 0, height = 100;
  bool analytic = false, expand = false, estimate = false, bad = false;
  std::uint64_t q = 2, trials = 0;
  std::string field_text, mode_text;

  auto* certify_cmd = app.add_subcommand(
      "certify", "enumerate bad-intersection strata and check slack >= 0");
  certify_cmd->fallthrough();
  certify_cmd->add_option("--n", n, "target dimension n >= 2")->required();
  certify_cmd->add_option("--theorem", theorem, "1 or 2")->required();
  certify_cmd->add_option("--override-m", override_m,
                          "use this m instead of the canonical 2n-1 or 2n");
  certify_cmd->add_flag("--analytic", analytic,
                        "allow closed-form row counts beyond the enumeration "
                        "cap (verdict flagged as analytic)");

  auto* build_cmd = app.add_subcommand(
      "build", "draw a seeded general-position power-sum hypersurface");
  build_cmd->fallthrough();
  build_cmd->add_option("--n", n, "target dimension n >= 2")->required();
  build_cmd->add_option("--theorem", theorem, "1 or 2")->required();
  build_cmd->add_option("--field", field_text, "q or p<prime> (default q)");
  build_cmd->add_option("--d", override_d,
                        "override the degree (must be >= the mode's bound)");
  build_cmd->add_option("--height", height, "coefficient height")
      ->capture_default_str();
  build_cmd->add_flag("--expand", expand,
                      "expand the power sum into a sparse polynomial");

  auto* codim_cmd = app.add_subcommand(
      "codim", "codimension of an incidence stratum, optionally estimated");
  codim_cmd->fallthrough();
  codim_cmd->add_option("--m", m, "ambient dimension")->required();
  codim_cmd->add_option("--a", a, "subspace codimension")->required();
  codim_cmd->add_option("--b", b, "coordinate-plane parameter")->required();
  codim_cmd->add_option("--c", c, "intersection parameter")->required();
  codim_cmd->add_flag("--estimate", estimate,
                      "measure the codimension over F_q and compare");
  codim_cmd->add_option("--q", q, "field size for --estimate (default 2)");
  codim_cmd->add_option("--mode", mode_text,
                        "exhaustive or sampled (default exhaustive)");
  codim_cmd->add_option("--trials", trials,
                        "sample count for sampled mode (default 100000)");

  auto* count_cmd = app.add_subcommand(
      "count-rank", "count k x l matrices over F_q of rank <= r");
  count_cmd->fallthrough();
  count_cmd->add_option("--k", k, "rows")->required();
  count_cmd->add_option("--l", l, "columns")->required();
  count_cmd->add_option("--r", r, "rank bound")->required();
  count_cmd->add_option("--q", q, "field size")->required();
  count_cmd->add_option("--mode", mode_text,
                        "formula, exhaustive, or both (default both)");

  auto* probe_cmd = app.add_subcommand(
      "probe", "Monte-Carlo intersection probe of a seeded plane section");
  probe_cmd->fallthrough();
  probe_cmd->add_option("--n", n, "target dimension n >= 2")->required();
  probe_cmd->add_option("--theorem", theorem, "1 or 2")->required();
  probe_cmd->add_option("--trials", trials, "probe trials (default 1000)");
  probe_cmd->add_option("--field", field_text, "p<prime> (default p10007)");
  probe_cmd->add_flag("--bad", bad,
                      "adversarial self-test: plant a non-generic V and "
                      "check the probe flags it");

  auto* family_cmd = app.add_subcommand(
      "family-dim", "projective dimension of the coefficient family");
  family_cmd->fallthrough();
  family_cmd->add_option("--n", n, "target dimension")->required();
  family_cmd->add_option("--m", m, "number of linear forms")->required();

  std::vector<const char*> argv;
  argv.push_back("fwh");
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(certify_cmd)) {
      std::optional<long> om;
      if (certify_cmd->count("--override-m")) om = override_m;
      const auto rep = certify(n, mode_of(theorem), om, analytic);
      Json j = to_json(rep);
      j["command"] = "certify";
      std::ostringstream text;
      render_text(text, rep);
      return emit(j, text.str(), json_mode, out_path, out, err,
                  rep.pass ? 0 : 2);
    }

    if (app.got_subcommand(build_cmd)) {
      std::optional<long> od;
      if (build_cmd->count("--d")) od = override_d;
      if (!build_cmd->count("--field")) field_text = "q";
      const auto pf = parse_field(field_text, true);
      auto run = [&](auto field) {
        const auto spec = build_hypersurface(n, mode_of(theorem), seed, field,
                                             height, od);
        Json j = to_json(spec);
        j["command"] = "build";
        std::ostringstream text;
        render_text(text, spec);
        if (expand) {
          const auto poly = expand_power_sum(spec);
          j["expansion"] = to_json(poly);
          render_text(text, poly);
        }
        return emit(j, text.str(), json_mode, out_path, out, err, 0);
      };
      return pf.rational ? run(QField{}) : run(FpField{pf.p});
    }

    if (app.got_subcommand(codim_cmd)) {
      const GammaParams params{m, a, b, c};
      const long predicted = codim_gamma(params);
      if (!estimate) {
        Json j{{"command", "codim"}, {"m", m},        {"a", a},
               {"b", b},             {"c", c},        {"codim", predicted}};
        return emit(j, std::to_string(predicted) + "\n", json_mode, out_path,
                    out, err, 0);
      }
      if (!codim_cmd->count("--mode")) mode_text = "exhaustive";
      EstimateMode em;
      if (mode_text == "exhaustive") {
        em = EstimateMode::exhaustive;
      } else if (mode_text == "sampled") {
        em = EstimateMode::sampled;
        if (trials == 0) trials = 100000;
      } else {
        throw std::invalid_argument("--mode must be exhaustive or sampled");
      }
      const auto est = estimate_gamma_codim(params, q, em, trials, seed);
      Json j = to_json(est);
      j["command"] = "codim";
      std::ostringstream text;
      render_text(text, est);
      return emit(j, text.str(), json_mode, out_path, out, err,
                  est.verdict ? 0 : 2);
    }

    if (app.got_subcommand(count_cmd)) {
      if (!count_cmd->count("--mode")) mode_text = "both";
      CountMode cm;
      if (mode_text == "formula")
        cm = CountMode::formula;
      else if (mode_text == "exhaustive")
        cm = CountMode::exhaustive;
      else if (mode_text == "both")
        cm = CountMode::both;
      else
        throw std::invalid_argument(
            "--mode must be formula, exhaustive, or both");
      const RankStratumQuery query{k, l, r, q};
      const Integer count = count_rank_le(query, cm);
      Json j{{"command", "count-rank"},
             {"k", k},
             {"l", l},
             {"r", r},
             {"q", q},
             {"mode", mode_text},
             {"count", count.str()},
             {"stratum_codim", rank_stratum_codim(k, l, r)}};
      return emit(j, count.str() + "\n", json_mode, out_path, out, err, 0);
    }

    if (app.got_subcommand(probe_cmd)) {
      if (!probe_cmd->count("--trials")) trials = 1000;
      if (!probe_cmd->count("--field")) field_text = "p10007";
      const auto pf = parse_field(field_text, false);
      const FpField field{pf.p};
      const auto spec =
          build_hypersurface(n, mode_of(theorem), seed, field, 100);
      if (!bad) {
        const auto v = plane_section_model(spec);
        const auto rep = probe(v, spec.mode, spec.d, trials, seed);
        Json j = to_json(rep);
        j["command"] = "probe";
        j["field"] = field_json(field);
        std::ostringstream text;
        render_text(text, rep);
        return emit(j, text.str(), json_mode, out_path, out, err,
                    rep.clean ? 0 : 2);
      }

      // Adversarial self-test: plant a V containing a 2-dim subspace of a
      // diagonal plane and insist the probe notices.
      std::vector<Partition> pool;
      for_each_partition(spec.m, spec.mode, [&](const Partition& p) {
        if (p.l() >= 2) pool.push_back(p);
      });
      if (pool.empty())
        throw std::invalid_argument(
            "probe --bad: no partitions with l >= 2 at m=" +
            std::to_string(spec.m) + "; use a larger n or theorem 2");
      std::size_t pick = 0;
      for (std::size_t i = 0; i < pool.size(); ++i)
        if (fully_pinned(pool[i])) {
          pick = i;
          break;
        }
      const Partition& target = pool[pick];
      const auto mu = sample_mu(target, spec.d, field, seed);
      const auto bad_v = construct_bad_V(target, mu, n, seed);
      const auto rep = probe(bad_v, spec.mode, spec.d, trials, seed);
      const bool caught = !rep.clean;
      Json j{{"command", "probe"},
             {"self_test", "adversarial"},
             {"target_partition", to_json(target)},
             {"caught", caught},
             {"verdict", caught ? "pass" : "fail"},
             {"report", to_json(rep)}};
      std::ostringstream text;
      text << "adversarial self-test: planted a V meeting the plane of "
              "partition "
           << pick << " in dim >= 2\n";
      const std::uint64_t g =
          std::gcd(static_cast<std::uint64_t>(spec.d), field.p - 1);
      if (!fully_pinned(target) || g != 1) {
        const std::string w =
            "detection is probabilistic here (mu redraws do not pin the "
            "plane); prefer an odd degree with gcd(d, p-1) = 1";
        j["warning"] = w;
        text << "warning: " << w << "\n";
      }
      render_text(text, rep);
      text << "self-test: " << (caught ? "pass (flagged)" : "fail (missed)")
           << "\n";
      return emit(j, text.str(), json_mode, out_path, out, err,
                  caught ? 0 : 2);
    }

    if (app.got_subcommand(family_cmd)) {
      const long dim = family_dimension(n, m);
      Json j{{"command", "family-dim"}, {"n", n}, {"m", m}, {"dimension", dim}};
      return emit(j, std::to_string(dim) + "\n", json_mode, out_path, out, err,
                  0);
    }

    err << "error: no subcommand dispatched\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace fwh
