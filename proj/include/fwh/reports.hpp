#ifndef FWH_REPORTS_HPP
#define FWH_REPORTS_HPP

#include <ostream>

#include <json.hpp>

#include "fwh/certificates.hpp"
#include "fwh/fermat_waring.hpp"
#include "fwh/grassmann.hpp"
#include "fwh/polynomial.hpp"
#include "fwh/probe.hpp"

namespace fwh {

using Json = nlohmann::json;

Json to_json(const Partition& p);
Json to_json(const CertificateReport& rep);
Json to_json(const GammaEstimate& est);

void render_text(std::ostream& os, const CertificateReport& rep);
void render_text(std::ostream& os, const GammaEstimate& est);

inline Json scalar_json(const Rational& x) {
  const Integer num = numerator(x), den = denominator(x);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}
inline Json scalar_json(const Fp& x) { return x.value(); }
inline Json scalar_json(const Cx& x) {
  return Json::array({x.value().real(), x.value().imag()});
}

inline Json field_json(const QField&) { return Json{{"kind", "Q"}}; }
inline Json field_json(const FpField& f) {
  return Json{{"kind", "Fp"}, {"p", f.p}};
}
inline Json field_json(const CxField& f) {
  return Json{{"kind", "C"}, {"tol", f.tol}};
}

template <FieldDescriptor K>
Json to_json(const SparsePolynomial<K>& poly) {
  Json terms = Json::array();
  for (const auto& [exps, coef] : poly.terms()) {
    Json term;
    term["exps"] = exps;
    term["coef"] = scalar_json(coef);
    terms.push_back(std::move(term));
  }
  return Json{{"nvars", poly.nvars()},
              {"degree", poly.degree()},
              {"terms", std::move(terms)}};
}

template <FieldDescriptor K>
Json to_json(const HypersurfaceSpec<K>& spec) {
  Json forms = Json::array();
  for (const auto& form : spec.forms) {
    Json coeffs = Json::array();
    for (const auto& c : form.coeffs) coeffs.push_back(scalar_json(c));
    forms.push_back(std::move(coeffs));
  }
  return Json{{"n", spec.n},
              {"m", spec.m},
              {"d", spec.d},
              {"mode", mode_name(spec.mode)},
              {"overridden", spec.overridden},
              {"seed", spec.seed},
              {"height", spec.height},
              {"field", field_json(spec.field)},
              {"forms", std::move(forms)}};
}

template <FieldDescriptor K>
void render_text(std::ostream& os, const HypersurfaceSpec<K>& spec) {
  os << "hypersurface: n=" << spec.n << " m=" << spec.m << " d=" << spec.d
     << " mode=" << mode_name(spec.mode) << " field=" << spec.field.name()
     << " seed=" << spec.seed << " height=" << spec.height
     << (spec.overridden ? " (non-canonical)" : "") << "\n";
  for (std::size_t j = 0; j < spec.forms.size(); ++j) {
    os << "  h_" << j + 1 << " =";
    bool first = true;
    for (std::size_t i = 0; i < spec.forms[j].coeffs.size(); ++i) {
      const auto& c = spec.forms[j].coeffs[i];
      if (c == spec.field.zero()) continue;
      os << (first ? " " : " + ") << "(" << c << ")z" << i;
      first = false;
    }
    if (first) os << " 0";
    os << "\n";
  }
}

template <FieldDescriptor K>
void render_text(std::ostream& os, const SparsePolynomial<K>& poly) {
  os << "polynomial: " << poly.nvars() << " vars, degree " << poly.degree()
     << ", " << poly.terms().size() << " terms\n";
  for (const auto& [exps, coef] : poly.terms()) {
    os << "  (" << coef << ")";
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      os << " z" << i;
      if (exps[i] > 1) os << "^" << exps[i];
    }
    os << "\n";
  }
}

template <FieldDescriptor K>
Json to_json(const ProbeReport<K>& rep) {
  Json histogram = Json::array();
  for (std::size_t i = 0; i < rep.pool.size(); ++i) {
    Json bucket;
    bucket["partition"] = to_json(rep.pool[i]);
    bucket["draws"] = rep.histogram[i].draws;
    bucket["max_dim"] = rep.histogram[i].max_dim;
    histogram.push_back(std::move(bucket));
  }
  Json j{{"m", rep.m},
         {"n", rep.n},
         {"d", rep.d},
         {"mode", mode_name(rep.mode)},
         {"trials", rep.trials},
         {"seed", rep.seed},
         {"max_dim", rep.max_dim},
         {"histogram", std::move(histogram)},
         {"flagged_partitions", rep.flagged_partitions},
         {"verdict", rep.vacuous ? "vacuous-clean"
                                 : (rep.clean ? "clean" : "flagged")}};
  if (!rep.warning.empty()) j["warning"] = rep.warning;
  return j;
}

template <FieldDescriptor K>
void render_text(std::ostream& os, const ProbeReport<K>& rep) {
  os << "probe: m=" << rep.m << " n=" << rep.n << " d=" << rep.d << " mode="
     << mode_name(rep.mode) << " trials=" << rep.trials << " seed=" << rep.seed
     << "\n";
  if (!rep.warning.empty()) os << "warning: " << rep.warning << "\n";
  for (std::size_t i = 0; i < rep.pool.size(); ++i) {
    const auto& p = rep.pool[i];
    os << "  partition " << i << " (l=" << p.l() << ", k0=" << p.k0()
       << "): draws=" << rep.histogram[i].draws
       << " max_dim=" << rep.histogram[i].max_dim << "\n";
  }
  os << "max intersection dim: " << rep.max_dim << "\n";
  os << "verdict: "
     << (rep.vacuous ? "vacuous-clean" : (rep.clean ? "clean" : "flagged"))
     << "\n";
}

}  // namespace fwh

#endif  // FWH_REPORTS_HPP
