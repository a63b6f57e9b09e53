#include "fwh/reports.hpp"

#include <iomanip>

namespace fwh {

Json to_json(const Partition& p) {
  Json classes = Json::array();
  for (const auto& cls : p.classes) classes.push_back(cls);
  return Json{{"m", p.m},
              {"mode", mode_name(p.mode)},
              {"i0", p.i0},
              {"classes", std::move(classes)},
              {"distinguished", p.distinguished}};
}

Json to_json(const CertificateReport& rep) {
  Json rows = Json::array();
  for (const auto& row : rep.rows) {
    rows.push_back(Json{{"l", row.l},
                        {"k0", row.k0},
                        {"class_sizes", row.class_sizes},
                        {"count", row.count.str()},
                        {"moduli", row.moduli},
                        {"s", row.s},
                        {"slack", row.slack}});
  }
  Json j{{"n", rep.n},
         {"m", rep.m},
         {"d", rep.d},
         {"mode", mode_name(rep.mode)},
         {"overridden", rep.overridden},
         {"analytic", rep.analytic},
         {"total_partitions", rep.total_partitions.str()},
         {"rows", std::move(rows)},
         {"pass", rep.pass},
         {"verdict", rep.pass ? "pass" : "fail"}};
  j["min_slack"] = rep.min_slack ? Json(*rep.min_slack) : Json(nullptr);
  j["worst"] = rep.worst ? to_json(*rep.worst) : Json(nullptr);
  return j;
}

void render_text(std::ostream& os, const CertificateReport& rep) {
  os << "certify: n=" << rep.n << " m=" << rep.m
     << (rep.overridden ? " (override)" : "") << " d=" << rep.d
     << " mode=" << mode_name(rep.mode)
     << (rep.analytic ? " [analytic: signature table only]" : "") << "\n";
  os << "partitions with a bad-intersection stratum: " << rep.total_partitions
     << "\n";
  os << std::left << std::setw(4) << "l" << std::setw(5) << "k0"
     << std::setw(18) << "class sizes" << std::setw(16) << "count"
     << std::setw(8) << "moduli" << std::setw(6) << "s" << "slack\n";
  for (const auto& row : rep.rows) {
    std::string sizes;
    for (std::size_t i = 0; i < row.class_sizes.size(); ++i) {
      if (i) sizes += "+";
      sizes += std::to_string(row.class_sizes[i]);
    }
    os << std::left << std::setw(4) << row.l << std::setw(5) << row.k0
       << std::setw(18) << sizes << std::setw(16) << row.count.str()
       << std::setw(8) << row.moduli << std::setw(6) << row.s << row.slack
       << "\n";
  }
  if (rep.min_slack) os << "min slack: " << *rep.min_slack << "\n";
  if (rep.worst) {
    const Partition& w = *rep.worst;
    os << "tightest stratum witness: l=" << w.l() << " k0=" << w.k0()
       << " classes ";
    for (std::size_t a = 0; a < w.classes.size(); ++a) {
      if (a) os << " | ";
      if (w.distinguished == static_cast<long>(a) + 1) os << "*";
      os << "{";
      for (std::size_t i = 0; i < w.classes[a].size(); ++i) {
        if (i) os << ",";
        os << w.classes[a][i];
      }
      os << "}";
    }
    os << "\n";
  }
  os << "verdict: " << (rep.pass ? "pass" : "fail") << "\n";
}

Json to_json(const GammaEstimate& est) {
  Json j{{"params", Json{{"m", est.params.m},
                         {"a", est.params.a},
                         {"b", est.params.b},
                         {"c", est.params.c}}},
         {"q", est.q},
         {"mode", est.mode == EstimateMode::exhaustive ? "exhaustive"
                                                       : "sampled"},
         {"seed", est.seed},
         {"fraction_num", est.fraction_num.str()},
         {"fraction_den", est.fraction_den.str()},
         {"predicted_codim", est.predicted_codim},
         {"slack", est.slack},
         {"verdict", est.verdict ? "pass" : "fail"}};
  j["measured_exponent"] =
      est.measured_exponent ? Json(*est.measured_exponent) : Json(nullptr);
  j["rounded_exponent"] =
      est.rounded_exponent ? Json(*est.rounded_exponent) : Json(nullptr);
  return j;
}

void render_text(std::ostream& os, const GammaEstimate& est) {
  os << "gamma(m=" << est.params.m << ", a=" << est.params.a
     << ", b=" << est.params.b << ", c=" << est.params.c << ") over F_"
     << est.q << " ["
     << (est.mode == EstimateMode::exhaustive ? "exhaustive" : "sampled")
     << "]\n";
  os << "fraction: " << est.fraction_num << "/" << est.fraction_den << "\n";
  if (est.measured_exponent) {
    os << "measured exponent: " << *est.measured_exponent << " (rounds to "
       << *est.rounded_exponent << ")\n";
  } else {
    os << "measured exponent: undefined (no members seen)\n";
  }
  os << "predicted codim: " << est.predicted_codim
     << "  slack: " << est.slack << "\n";
  os << "verdict: " << (est.verdict ? "pass" : "fail") << "\n";
}

}  // namespace fwh
