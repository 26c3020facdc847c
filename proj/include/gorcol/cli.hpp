#pragma once

#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "gorcol/algfile.hpp"
#include "gorcol/report.hpp"

namespace gorcol::cli {

struct Options {
  std::uint64_t seed = 0;
  int trials = 20;
  int max_colength = 2;
  int max_n = 50;
  int max_extra = 3;
  bool json = false;
  std::string file;
  std::string cover_file;
  std::string ideal_label = "a";
};

namespace detail {

template <class F>
std::vector<Polynomial<F>> parse_texts(const F& k,
                                       const std::vector<std::string>& texts,
                                       const std::vector<std::string>& vars,
                                       const std::string& what) {
  std::vector<Polynomial<F>> out;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    try {
      out.push_back(parse_polynomial(k, texts[i], vars));
    } catch (const ParseError& e) {
      throw InputError(what + " entry " + std::to_string(i + 1) + ": " +
                       e.what());
    }
  }
  return out;
}

template <class F>
IdealRep<F> named_ideal(const F& k, const AlgebraFileData& data,
                        const AlgebraPtr<F>& alg, const std::string& label) {
  if (label == "m") return maximal_ideal(alg);
  auto it = data.aux.find(label);
  if (it == data.aux.end()) {
    if (label == "a") return maximal_ideal(alg);  // default when no aux a
    throw InputError("no aux ideal labelled '" + label + "' in the input file");
  }
  return ideal_span_polys(alg,
                          parse_texts(k, it->second, data.vars, "aux " + label));
}

template <class F>
int run_typed(const F& field, const AlgebraFileData& data,
              const std::string& command, const Options& opt,
              std::ostream& out) {
  SearchConfig cfg;
  cfg.seed = opt.seed;
  cfg.trials = opt.trials;
  cfg.max_colength = opt.max_colength;
  cfg.max_extra = opt.max_extra;

  Presentation<F> p{field, data.vars,
                    parse_texts(field, data.ideal_texts, data.vars, "ideal"),
                    opt.max_n};
  AlgebraPtr<F> base = build_algebra(p);

  Json report;
  report["command"] = command;
  report["seed"] = opt.seed;
  report["algebra"] = algebra_json(p, base);
  Json payload;
  Json verdicts = Json::array();
  int exit_code = 0;

  try {
    if (command == "analyze") {
      Json basis = Json::array();
      for (const auto& b : base->basis) basis.push_back(b.str(p.vars));
      payload["basis"] = basis;
      payload["trace_colength"] = trace_of_canonical(base).colength();
    } else if (command == "bounds") {
      auto rep = g_bounds(p, base, cfg);
      payload = bounds_json(rep);
      if (rep.g_certified)
        verdicts.push_back("g-certified(" + std::to_string(*rep.g_certified) +
                           ")");
      else
        verdicts.push_back("probable-no");
    } else if (command == "teter") {
      auto rep = teter_check(base, cfg);
      payload = teter_json(field, rep);
      if (rep.g_exact)
        verdicts.push_back("g-certified(" + std::to_string(*rep.g_exact) + ")");
      else if (rep.g_ge_2_certified)
        verdicts.push_back("certified-no");
      else
        verdicts.push_back("probable-no");
    } else if (command == "selfdual") {
      IdealRep<F> a = named_ideal(field, data, base, opt.ideal_label);
      payload["ideal"] = opt.ideal_label;
      payload["colength"] = a.colength();
      auto res = self_dual_witness(base, a, cfg);
      payload["search"] = witness_json(field, res);
      verdicts.push_back(verdict_str(res.verdict));
    } else if (command == "construct-idealization") {
      auto rep = idealization(base);
      payload = cover_json(field, rep, p.vars);
      verdicts.push_back("certified-yes");
    } else if (command == "construct-ci") {
      auto ci = ci_cover(p, base, cfg);
      payload = cover_json(field, ci.report, p.vars);
      Json gens = Json::array();
      for (const auto& g : ci.c_gens) gens.push_back(g.str(p.vars));
      payload["c_gens"] = gens;
      payload["attempts"] = ci.attempts;
      verdicts.push_back("certified-yes");
    } else if (command == "construct-thm51") {
      auto it_a = data.aux.find("a");
      if (it_a == data.aux.end())
        throw InputError("construct thm51 needs an 'aux a = ...' line");
      auto a_gens = parse_texts(field, it_a->second, p.vars, "aux a");
      auto d_gens = a_gens;
      if (auto it_d = data.aux.find("d"); it_d != data.aux.end())
        d_gens = parse_texts(field, it_d->second, p.vars, "aux d");
      IdealRep<F> abar = ideal_span_polys(base, a_gens);
      auto wit = symmetric_witness(base, abar, cfg);
      ModuleMap<F> h = zero_map(canonical_module(base), regular_module(base));
      if (wit.verdict == Certainty::CertifiedYes) {
        h = *wit.witness;
      } else {
        auto plain = self_dual_witness(base, abar, cfg);
        if (plain.verdict != Certainty::CertifiedYes)
          throw HypothesisError("a-bar is self-dual",
                                "no self-duality witness found for a-bar");
        h = symmetrize(base, *plain.witness);
        if (!(image(h) == abar.space))
          throw HypothesisError(
              "symmetrization preserves the image",
              "h = f + f* has a smaller image; (0 : a) <= a^2 fails");
      }
      auto rep = thm51_construct(p, base, a_gens, d_gens, h);
      payload = cover_json(field, rep, p.vars);
      verdicts.push_back("certified-yes");
    } else if (command == "construct-teter-cover") {
      IdealRep<F> a = named_ideal(field, data, base, "a");
      auto wit = self_dual_witness(base, a, cfg);
      if (wit.verdict != Certainty::CertifiedYes)
        throw HypothesisError("a is self-dual",
                              "no self-duality witness found for a");
      auto retract = find_retract(base, a, cfg);
      if (!retract)
        throw HypothesisError("an algebra retract exists for a",
                              "no retract found complementing a");
      auto rep = teter_cover(base, a, *wit.witness, *retract);
      payload = cover_json(field, rep, p.vars);
      verdicts.push_back("certified-yes");
    } else if (command == "verify-cover") {
      std::vector<std::string> cover_texts;
      if (!opt.cover_file.empty()) {
        AlgebraFileData cdata = parse_alg_file(opt.cover_file);
        if (cdata.vars != data.vars ||
            cdata.rational != data.rational || cdata.prime != data.prime)
          throw InputError("cover file must declare the same field and vars");
        cover_texts = cdata.ideal_texts;
      } else if (auto it = data.aux.find("cover"); it != data.aux.end()) {
        cover_texts = it->second;
      } else {
        throw InputError("verify-cover needs --cover <file> or an aux cover line");
      }
      auto c_gens = parse_texts(field, cover_texts, p.vars, "cover ideal");
      auto rep = verify_cover(p, base, c_gens);
      payload = cover_json(field, rep, p.vars);
      const bool all_good = rep.checks.gorenstein && rep.checks.w_is_omega &&
                            rep.checks.teter_identity &&
                            rep.checks.selfdual_certified &&
                            rep.checks.lemma_consistent;
      verdicts.push_back(all_good ? "certified-yes" : "hypothesis-failed");
    } else if (command == "colength2") {
      auto rep = colength_two_decision(p, base, cfg);
      payload = colength2_json(field, rep);
      if (rep.g_upper)
        verdicts.push_back("certified-yes");
      else if (rep.g_ge_3_certified)
        verdicts.push_back("certified-no");
      else
        verdicts.push_back("probable-no");
    } else if (command == "oracle") {
      EnumConfig ecfg;
      ecfg.max_extra = opt.max_extra;
      auto ideals = enumerate_ideals(base, ecfg);
      payload["ideal_count"] = ideals.size();
      auto mins = min_selfdual_colength_exhaustive(base, ecfg, cfg);
      Json mj;
      mj["value"] = mins.value;
      mj["witness_count"] = mins.ideals.size();
      payload["min_selfdual_colength"] = mj;
      auto upper = gcolength_upper_exhaustive(p, base, ecfg);
      if (upper) {
        Json uj;
        uj["excess"] = upper->excess;
        Json gens = Json::array();
        for (const auto& g : upper->c_gens) gens.push_back(g.str(p.vars));
        uj["c_gens"] = gens;
        payload["gcolength_upper"] = uj;
        if (upper->excess == mins.value) {
          payload["g_certified"] = mins.value;
          verdicts.push_back("g-certified(" + std::to_string(mins.value) + ")");
        } else {
          verdicts.push_back("probable-no");
        }
      } else {
        payload["gcolength_upper"] = nullptr;
        verdicts.push_back("probable-no");
      }
    } else {
      throw InputError("unknown command '" + command + "'");
    }
  } catch (const HypothesisError& e) {
    payload["hypothesis"] = e.hypothesis;
    payload["message"] = e.what();
    verdicts.push_back("hypothesis-failed");
    exit_code = 3;
  }

  report["payload"] = payload;
  report["verdicts"] = verdicts;
  emit_report(report, opt.json, out);
  return exit_code;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  Options opt;
  CLI::App app{"exact Gorenstein-colength computations for Artinian local algebras",
               "gorcol"};
  app.require_subcommand(1);

  std::string command;
  auto add_common = [&](CLI::App* sub, bool with_file = true) {
    if (with_file)
      sub->add_option("file", opt.file, "input .alg file")->required();
    sub->add_option("--seed", opt.seed, "random seed (default 0)");
    sub->add_option("--trials", opt.trials, "random trials per search");
    sub->add_option("--max-colength", opt.max_colength, "self-dual scan depth");
    sub->add_option("--max-n", opt.max_n, "truncation cap for T/m^N");
    sub->add_option("--max-extra", opt.max_extra, "oracle cover excess bound");
    sub->add_flag("--json", opt.json, "machine-readable report");
  };

  for (const char* name : {"analyze", "bounds", "teter", "colength2", "oracle"}) {
    auto* sub = app.add_subcommand(name);
    add_common(sub);
    sub->callback([&command, name] { command = name; });
  }
  {
    auto* sub = app.add_subcommand("selfdual");
    add_common(sub);
    sub->add_option("--ideal", opt.ideal_label,
                    "aux label of the ideal to test ('m' for the maximal ideal)");
    sub->callback([&command] { command = "selfdual"; });
  }
  {
    auto* sub = app.add_subcommand("verify-cover");
    add_common(sub);
    sub->add_option("--cover", opt.cover_file, ".alg file with the cover ideal");
    sub->callback([&command] { command = "verify-cover"; });
  }
  {
    auto* con = app.add_subcommand("construct");
    con->require_subcommand(1);
    for (const char* name : {"idealization", "ci", "thm51", "teter-cover"}) {
      auto* sub = con->add_subcommand(name);
      add_common(sub);
      sub->callback([&command, name] { command = std::string("construct-") + name; });
    }
  }

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    AlgebraFileData data = parse_alg_file(opt.file);
    if (data.rational) {
      return detail::run_typed(RationalField{}, data, command, opt, out);
    }
    return detail::run_typed(PrimeField(data.prime), data, command, opt, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const HypothesisError& e) {
    err << "hypothesis not satisfied (" << e.hypothesis << "): " << e.what()
        << "\n";
    return 3;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace gorcol::cli
