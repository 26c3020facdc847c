#pragma once

#include <json.hpp>
#include <ostream>
#include <string>

#include "gorcol/decide.hpp"

namespace gorcol {

using Json = nlohmann::ordered_json;

// Machine reports are a single JSON document with fixed top-level keys
// (command, seed, algebra, payload, verdicts); the human format is an
// indented rendering of the same document, so both are deterministic.

template <class F>
Json algebra_json(const Presentation<F>& p, const AlgebraPtr<F>& alg) {
  Json j;
  if (p.field.characteristic() == 0)
    j["field"] = "rational";
  else
    j["field"] = "prime " + std::to_string(p.field.characteristic());
  j["vars"] = p.vars;
  j["lambda"] = alg->length();
  j["embedding_dim"] = embedding_dim(alg);
  j["hilbert"] = hilbert_function(alg);
  j["socle_dim"] = socle_dim(alg);
  j["gorenstein"] = is_gorenstein(alg);
  j["truncation"] = alg->found_n;
  return j;
}

template <class F>
Json witness_json(const F& k, const WitnessResult<F>& w) {
  Json j;
  j["verdict"] = verdict_str(w.verdict);
  j["family_dim"] = w.family_dim;
  j["trials"] = w.trials_used;
  j["exhaustive"] = w.exhaustive;
  j["seed"] = w.seed;
  if (w.witness) {
    Json rows = Json::array();
    for (int r = 0; r < w.witness->mat.rows(); ++r) {
      Json row = Json::array();
      for (int c = 0; c < w.witness->mat.cols(); ++c)
        row.push_back(k.str(w.witness->mat.at(r, c)));
      rows.push_back(row);
    }
    j["witness_matrix"] = rows;
  }
  return j;
}

template <class F>
Json cover_json(const F& k, const CoverReport<F>& rep,
                const std::vector<std::string>& vars) {
  Json j;
  j["lambda_R"] = rep.checks.lambda_r;
  j["lambda_S"] = rep.checks.lambda_s;
  j["excess"] = rep.checks.excess;
  j["gorenstein"] = rep.checks.gorenstein;
  j["surjective_ring_map"] = rep.checks.surjective_ring_map;
  j["omega_colength"] = rep.checks.omega_colength;
  j["kernel_dim"] = rep.kernel.space.dim();
  j["kernel_sq_zero"] = rep.checks.kernel_sq_zero;
  j["excess_equals_omega_colength"] = rep.checks.excess_equals_colength;
  j["lemma_consistent"] = rep.checks.lemma_consistent;
  j["omega_copy_verified"] = rep.checks.w_is_omega;
  j["kernel_times_image_zero"] = rep.checks.kernel_times_image_zero;
  j["teter_identity"] = rep.checks.teter_identity;
  j["psi_omega_selfdual"] = rep.checks.selfdual_certified;
  if (!rep.c_gens.empty()) {
    Json gens = Json::array();
    for (const auto& g : rep.c_gens) gens.push_back(g.str(vars));
    j["c_gens"] = gens;
  }
  if (rep.colon_identity.has_value()) j["colon_identity"] = *rep.colon_identity;
  return j;
}

template <class F>
Json teter_json(const F& k, const TeterReport<F>& rep) {
  Json j;
  j["gorenstein"] = rep.gorenstein;
  j["teter_route"] = witness_json(k, rep.teter_route);
  Json hv;
  hv["two_invertible"] = rep.hv_char_ok;
  hv["socle_in_m2"] = rep.hv_socle_ok;
  hv["applicable"] = rep.hv_char_ok && rep.hv_socle_ok;
  hv["route"] = witness_json(k, rep.hv_route);
  j["huneke_vraciu"] = hv;
  if (rep.g_exact)
    j["conclusion"] = "g = " + std::to_string(*rep.g_exact);
  else if (rep.g_ge_2_certified)
    j["conclusion"] = "g >= 2";
  else
    j["conclusion"] = "open";
  return j;
}

template <class F>
Json bounds_json(const BoundsReport<F>& rep) {
  // the report writer re-asserts the chain before emission
  internal_check(rep.lower_trace <= rep.lower_selfdual &&
                     rep.lower_selfdual <= rep.upper_best &&
                     rep.upper_best <= rep.lambda,
                 "bound chain must be monotone");
  Json j;
  j["lambda"] = rep.lambda;
  j["lower_trace"] = rep.lower_trace;
  j["lower_selfdual"] = rep.lower_selfdual;
  j["selfdual_is_true_min"] = rep.selfdual_is_true_min;
  j["lower_best"] = rep.lower_best;
  j["upper_idealization"] = rep.upper_idealization;
  if (rep.upper_ci) j["upper_ci"] = *rep.upper_ci;
  if (rep.upper_theorem) j["upper_theorem"] = *rep.upper_theorem;
  if (rep.upper_constructed) j["upper_constructed"] = *rep.upper_constructed;
  j["upper_best"] = rep.upper_best;
  if (rep.g_certified) j["g_certified"] = *rep.g_certified;
  j["char_two_routes_disabled"] = rep.char_two;
  j["oracle_used"] = rep.oracle_used;
  j["b_in_m6"] = rep.hyp_b_in_m6;
  j["notes"] = rep.notes;
  return j;
}

template <class F>
Json colength2_json(const F& k, const Colength2Report<F>& rep) {
  Json j;
  j["b_in_m6"] = rep.hyp_b_in_m6;
  j["two_invertible"] = rep.hyp_char_ok;
  j["gorenstein"] = rep.gorenstein;
  if (rep.level1) j["colength_1"] = teter_json(k, *rep.level1);
  Json cands = Json::array();
  for (const auto& c : rep.level2) {
    Json cj;
    Json cov = Json::array();
    for (const auto& e : c.covector) cov.push_back(k.str(e));
    cj["covector"] = cov;
    cj["selfdual"] = verdict_str(c.selfdual.verdict);
    cj["b_in_a3"] = c.b_in_a3;
    cj["b_in_ad"] = c.b_in_ad;
    cj["colon_in_a2"] = c.colon_in_a2;
    cj["pipeline"] = c.pipeline;
    if (c.excess) cj["excess"] = *c.excess;
    cands.push_back(cj);
  }
  j["colength_2_scan"] = cands;
  j["scan_exhaustive"] = rep.scan_exhaustive;
  if (rep.g_upper) j["g_upper"] = *rep.g_upper;
  j["g_ge_3_certified"] = rep.g_ge_3_certified;
  return j;
}

// Human rendering: an indented walk of the same document.
inline void render_human(const Json& j, std::ostream& os, int indent = 0) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [key, val] : j.items()) {
      if (val.is_object() || (val.is_array() && !val.empty() &&
                              (val.front().is_object() || val.front().is_array()))) {
        os << pad << key << ":\n";
        render_human(val, os, indent + 2);
      } else if (val.is_array()) {
        os << pad << key << ": ";
        bool first = true;
        os << "[";
        for (const auto& e : val) {
          if (!first) os << ", ";
          first = false;
          os << (e.is_string() ? e.get<std::string>() : e.dump());
        }
        os << "]\n";
      } else {
        os << pad << key << ": "
           << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    int idx = 0;
    for (const auto& e : j) {
      if (e.is_object() || e.is_array()) {
        os << pad << "- [" << idx << "]\n";
        render_human(e, os, indent + 2);
      } else {
        os << pad << "- " << (e.is_string() ? e.get<std::string>() : e.dump())
           << "\n";
      }
      ++idx;
    }
  } else {
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

inline void emit_report(const Json& report, bool as_json, std::ostream& os) {
  if (as_json) {
    os << report.dump(2) << "\n";
  } else {
    render_human(report, os);
  }
}

}  // namespace gorcol
