// Acceptance suite: one test case per criterion, each printed as a
// PASS/FAIL line by the listener below, with the stated runtime budget
// enforced. Run via ctest or directly: ./acceptance
#include <catch2/catch_amalgamated.hpp>

#include <chrono>
#include <cstdio>

#include "gorcol/cli.hpp"
#include "gorcol/decide.hpp"
#include "gorcol/oracle.hpp"
#include "helpers.hpp"

using namespace gorcol;
using gorcol::testing::algebra;
using gorcol::testing::presentation;
using gorcol::testing::staircase_corpus;

namespace {

class AcceptanceReporter : public Catch::EventListenerBase {
 public:
  using Catch::EventListenerBase::EventListenerBase;
  void testCaseEnded(const Catch::TestCaseStats& stats) override {
    std::printf("[acceptance] %s: %s\n", stats.testInfo->name.c_str(),
                stats.totals.assertions.allOk() ? "PASS" : "FAIL");
    std::fflush(stdout);
  }
};
CATCH_REGISTER_LISTENER(AcceptanceReporter)

struct Budget {
  std::chrono::steady_clock::time_point start;
  double seconds;
  explicit Budget(double s) : start(std::chrono::steady_clock::now()), seconds(s) {}
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

const std::vector<std::string> XYZ = {"X", "Y", "Z"};
const std::vector<std::string> XY = {"x", "y"};
const std::vector<std::string> SQUARE_XYZ = {"X^2", "X*Y", "X*Z",
                                             "Y^2", "Y*Z", "Z^2"};
const std::vector<std::string> PAPER_COVER = {"X^2 - Y^2", "X^2 - Z^2", "X*Y",
                                              "X*Z", "Y*Z"};

template <class F>
std::vector<Polynomial<F>> parse_all(const F& k,
                                     const std::vector<std::string>& texts,
                                     const std::vector<std::string>& vars) {
  std::vector<Polynomial<F>> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(k, t, vars));
  return out;
}

// presentations for the F_5 corpus: all monomial quotients of F_5[x,y]
// with lambda <= bound
template <class F>
std::vector<Presentation<F>> staircase_presentations(const F& k, int bound) {
  std::vector<Presentation<F>> out;
  for (int n = 1; n <= bound; ++n)
    for (const auto& part : gorcol::testing::partitions_of(n))
      out.push_back(
          presentation(k, XY, gorcol::testing::staircase_gens(part)));
  return out;
}

}  // namespace

TEST_CASE("criterion 01: worked example end to end") {
  Budget budget(1.0);
  RationalField q;
  auto p = presentation(q, XYZ, SQUARE_XYZ);
  auto base = build_algebra(p);
  REQUIRE(base->length() == 4);

  auto rep = verify_cover(p, base, parse_all(q, PAPER_COVER, XYZ));
  REQUIRE(rep.checks.lambda_s == 5);
  REQUIRE(rep.checks.gorenstein);
  REQUIRE(rep.checks.excess == 1);
  REQUIRE(rep.checks.kernel_sq_zero);
  REQUIRE(rep.checks.excess_equals_colength);
  REQUIRE(rep.checks.lemma_consistent);
  REQUIRE(rep.checks.teter_identity);
  REQUIRE(rep.checks.selfdual_certified);

  SearchConfig cfg;
  cfg.seed = 1;
  auto bounds = g_bounds(p, base, cfg);
  REQUIRE(bounds.lower_trace == 1);
  REQUIRE(bounds.upper_best == 1);
  REQUIRE(bounds.g_certified == 1);
  REQUIRE(budget.elapsed() < budget.seconds);
}

TEST_CASE("criterion 02: complete-intersection cover attains e(b) = 8") {
  Budget budget(2.0);
  RationalField q;
  auto p = presentation(q, XYZ, SQUARE_XYZ);
  auto base = build_algebra(p);
  int attained = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    SearchConfig cfg;
    cfg.seed = seed;
    auto ci = ci_cover(p, base, cfg);
    REQUIRE(ci.report.checks.gorenstein);
    REQUIRE(ci.report.checks.lambda_s >= base->length() + 1);
    if (ci.report.checks.lambda_s == 8) ++attained;
  }
  REQUIRE(attained >= 8);
  REQUIRE(budget.elapsed() < budget.seconds);
}

TEST_CASE("criterion 03: idealization identity over the corpus") {
  Budget budget(5.0);
  PrimeField f5(5);
  int count = 0;
  for (const auto& p : staircase_presentations(f5, 10)) {
    auto base = build_algebra(p);
    auto rep = idealization(base);
    REQUIRE(rep.checks.gorenstein);
    REQUIRE(rep.checks.lambda_s == 2 * rep.checks.lambda_r);
    ++count;
  }
  {
    RationalField q;
    auto p = presentation(q, XYZ, SQUARE_XYZ);
    auto rep = idealization(build_algebra(p));
    REQUIRE(rep.checks.gorenstein);
    REQUIRE(rep.checks.lambda_s == 8);
    ++count;
  }
  REQUIRE(count >= 20);
  REQUIRE(budget.elapsed() < budget.seconds);
}

TEST_CASE("criterion 04: duality invariant suite") {
  Budget budget(30.0);
  PrimeField f5(5);
  RationalField q;

  // corpus-wide invariants of the canonical module
  auto check_omega = [](auto base) {
    auto omega = canonical_module(base);
    auto reg = regular_module(base);
    REQUIRE(matlis_dual(omega)->dim() == omega->dim());
    REQUIRE(module_socle(*omega).dim() == 1);
    REQUIRE(hom_basis(omega, omega).dim() == base->length());
    // faithful: no nonzero ring element kills omega
    const auto& k = base->field;
    const int lam = base->length();
    Matrix<decltype(base->field)> flat(k, lam * lam, lam);
    for (int j = 0; j < lam; ++j) {
      auto t = transpose(base->table[j]);
      for (int r = 0; r < lam; ++r)
        for (int c = 0; c < lam; ++c) flat.at(c * lam + r, j) = t.at(r, c);
    }
    REQUIRE(kernel_space(flat).dim() == 0);
    // double dual has identical action matrices
    auto dd = matlis_dual(matlis_dual(omega));
    for (std::size_t i = 0; i < dd->action.size(); ++i)
      REQUIRE(dd->action[i] == omega->action[i]);
    // duals preserve length on a submodule and a quotient
    auto m = maximal_ideal(base);
    auto [sub, incl] = submodule(reg, m.space);
    REQUIRE(matlis_dual(sub)->dim() == sub->dim());
    auto [quo, proj] = quotient_module(reg, m.space);
    REQUIRE(matlis_dual(quo)->dim() == quo->dim());
  };
  for (const auto& p : staircase_presentations(f5, 10)) check_omega(build_algebra(p));
  check_omega(algebra(q, XYZ, SQUARE_XYZ));

  // lambda(0 : a) = lambda(R/a) over every enumerated ideal (F_2 and F_3)
  EnumConfig ecfg;
  for (long pr : {2L, 3L}) {
    PrimeField fp(pr);
    for (const auto& p : staircase_presentations(fp, 6)) {
      auto base = build_algebra(p);
      auto omega = canonical_module(base);
      for (const auto& a : enumerate_ideals(base, ecfg))
        REQUIRE(module_annihilator(*omega, a).dim() == a.colength());
    }
  }
  REQUIRE(budget.elapsed() < budget.seconds);
}

TEST_CASE("criterion 05: involution suite, 200 random maps") {
  Budget budget(30.0);
  PrimeField f5(5);
  std::vector<AlgebraPtr<PrimeField>> corpus;
  for (const auto& p : staircase_presentations(f5, 10))
    corpus.push_back(build_algebra(p));
  Rng rng(424242);
  int done = 0;
  std::size_t which = 0;
  while (done < 200) {
    const auto& base = corpus[which % corpus.size()];
    ++which;
    auto omega = canonical_module(base);
    auto reg = regular_module(base);
    auto homs = hom_basis(omega, reg);
    if (homs.dim() == 0) continue;
    const int d = base->length();
    auto draw = [&]() {
      Matrix<PrimeField> m(f5, d, d);
      for (const auto& h : homs.basis) m = add(m, scale(h, rng.element(f5)));
      return make_map(omega, reg, std::move(m), false);
    };
    auto f = draw(), g = draw();
    auto fs = star(f);
    REQUIRE(star(fs).mat == f.mat);                       // involution
    REQUIRE(star(map_add(f, g)).mat == add(fs.mat, star(g).mat));  // linear
    for (int u = 0; u < d; ++u)
      for (int v = 0; v < d; ++v) {
        auto lhs = module_act(*omega, fs.mat.col(u), unit_vec(f5, d, v));
        auto rhs = module_act(*omega, f.mat.col(v), unit_vec(f5, d, u));
        REQUIRE(eq_vec(f5, lhs, rhs));                    // defining identity
      }
    // Remark 4.2(1): ker f = (0 : f*(omega)) and f*(omega) = (0 : ker f)
    auto im_star = ideal_from_space(base, image(fs));
    REQUIRE(kernel(f) == module_annihilator(*omega, im_star));
    auto ker_f = kernel(f);
    Matrix<PrimeField> stacked(f5, 0, base->length());
    for (int i = 0; i < ker_f.dim(); ++i) {
      Matrix<PrimeField> cols(f5, d, base->length());
      for (int j = 0; j < base->length(); ++j)
        cols.set_col(j, module_act(*omega, unit_vec(f5, base->length(), j),
                                   ker_f.basis_row(i)));
      stacked = stacked.rows() == 0 ? cols : vstack(stacked, cols);
    }
    Subspace<PrimeField> ann_ker =
        stacked.rows() == 0 ? Subspace<PrimeField>::full(f5, base->length())
                            : kernel_space(stacked);
    REQUIRE(image(fs) == ann_ker);
    ++done;
  }
  REQUIRE(done == 200);
  REQUIRE(budget.elapsed() < budget.seconds);
}

TEST_CASE("criterion 06: symmetrization suite with a shrinking-case instance") {
  Budget budget(60.0);
  PrimeField f5(5);
  SearchConfig cfg;
  cfg.seed = 6;
  int witnesses = 0, claim4_exercised = 0;
  for (const auto& p : staircase_presentations(f5, 10)) {
    auto base = build_algebra(p);
    // candidate self-dual ideals: R, m, and every colength-2 hyperplane
    std::vector<IdealRep<PrimeField>> candidates;
    candidates.push_back(unit_ideal(base));
    candidates.push_back(maximal_ideal(base));
    {
      auto m = maximal_ideal(base);
      auto m2 = product_ideal(base, m, m);
      auto reps = detail::cotangent_reps(base, m, m2);
      bool exhaustive = false;
      for (const auto& phi : detail::hyperplane_covectors(
               f5, static_cast<int>(reps.size()), exhaustive, cfg))
        candidates.push_back(detail::lift_hyperplane(base, m2, reps, phi));
    }
    for (const auto& a : candidates) {
      auto res = self_dual_witness(base, a, cfg);
      if (res.verdict != Certainty::CertifiedYes) continue;
      ++witnesses;
      auto h = symmetrize(base, *res.witness);
      auto checks = verify_symmetrization(base, *res.witness, h);
      REQUIRE(checks.teter);
      REQUIRE(checks.kernel_meet);
      REQUIRE(checks.kernel_chain);
      if (checks.shrinking_applies) {
        REQUIRE(checks.shrinking);
        ++claim4_exercised;
      }
    }
  }
  REQUIRE(witnesses > 0);
  REQUIRE(claim4_exercised > 0);
  REQUIRE(budget.elapsed() < budget.seconds);
}

TEST_CASE("criterion 07: Theorem 5.1 pipeline") {
  Budget budget(120.0);
  SearchConfig cfg;
  cfg.seed = 17;

  {
    PrimeField f3(3);
    auto p = presentation(f3, XYZ, SQUARE_XYZ);
    auto base = build_algebra(p);
    auto wit = symmetric_witness(base, maximal_ideal(base), cfg);
    REQUIRE(wit.verdict == Certainty::CertifiedYes);
    auto m_gens = parse_all(f3, {"X", "Y", "Z"}, XYZ);
    auto rep = thm51_construct(p, base, m_gens, m_gens, *wit.witness);
    REQUIRE(rep.colon_identity == true);          // (c : a) = b
    REQUIRE(rep.checks.gorenstein);               // dim soc(T/c) = 1
    REQUIRE(rep.checks.lambda_s - rep.checks.lambda_r == 1);  // length identity
    REQUIRE(rep.checks.kernel_sq_zero);           // b^2 <= c
  }
  {
    // the discovered colength-2 instance: b = (x^6, y^6, x^5 y^4) in
    // F_7[x,y] carries the self-dual ideal a = (x, y^2)
    PrimeField f7(7);
    SearchConfig c7;
    c7.seed = 11;
    c7.trials = 24;
    auto p = presentation(f7, XY, {"x^6", "y^6", "x^5*y^4"});
    auto base = build_algebra(p);
    for (const auto& g : p.gens) REQUIRE(g.min_degree() >= 6);  // b <= m^6
    auto a = ideal_span_polys(base, parse_all(f7, {"x", "y^2"}, XY));
    REQUIRE(a.colength() == 2);
    auto wit = self_dual_witness(base, a, c7);
    REQUIRE(wit.verdict == Certainty::CertifiedYes);
    // Cor 5.3 conditions with d = a
    auto a_gens = parse_all(f7, {"x", "y^2"}, XY);
    auto a2_gens = detail::pairwise_products(a_gens, a_gens);
    const int nprime = detail::certified_truncation(f7, 2, a2_gens, 50, "a^2");
    auto w = truncated_power_algebra(f7, XY, nprime);
    auto A = ideal_span_polys(w, a_gens);
    auto A2 = ideal_span_polys(w, a2_gens);
    auto A3 = ideal_span_polys(w, detail::pairwise_products(a2_gens, a_gens));
    auto B = ideal_span_polys(w, p.gens);
    REQUIRE(A3.space.contains(B.space));   // b <= a^3 (Cor 5.4 route)
    REQUIRE(A2.space.contains(B.space));   // b <= a d
    REQUIRE(A2.space.contains(colon_ideal(w, B, A).space));  // (b:a) <= a^2
    auto h = is_teter_map(*wit.witness) ? *wit.witness
                                        : symmetrize(base, *wit.witness);
    auto rep = thm51_construct(p, base, a_gens, a_gens, h);
    REQUIRE(rep.checks.gorenstein);
    REQUIRE(rep.checks.excess == 2);
    REQUIRE(rep.colon_identity == true);
    REQUIRE(rep.checks.kernel_sq_zero);
  }
  REQUIRE(budget.elapsed() < budget.seconds);
}

TEST_CASE("criterion 08: oracle certification sweep over F_2") {
  Budget budget(600.0);
  PrimeField f2(2);
  EnumConfig ecfg;
  ecfg.enum_cap = 1LL << 22;
  SearchConfig cfg;
  cfg.seed = 8;
  cfg.trials = 64;

  for (const auto& p : staircase_presentations(f2, 6)) {
    auto base = build_algebra(p);
    auto mins = min_selfdual_colength_exhaustive(base, ecfg, cfg);
    auto upper = gcolength_upper_exhaustive(p, base, ecfg);
    // bracket: lower <= upper whenever the search found a cover
    if (upper) REQUIRE(mins.value <= upper->excess);
    if (is_gorenstein(base)) {
      REQUIRE(mins.value == 0);
      REQUIRE(upper.has_value());
      REQUIRE(upper->excess == 0);
    } else {
      auto teter = teter_check(base, cfg);
      if (teter.g_exact == 1) {  // a Teter ring: bracket must close at 1
        REQUIRE(mins.value == 1);
        REQUIRE(upper.has_value());
        REQUIRE(upper->excess == 1);
      }
    }
    // randomized witness search agrees with the exhaustive verdicts
    for (const auto& a : enumerate_ideals(base, ecfg)) {
      auto r1 = self_dual_witness(base, a, cfg);
      SearchConfig other = cfg;
      other.seed = cfg.seed + 1000;
      auto r2 = self_dual_witness(base, a, other);
      REQUIRE(r1.verdict != Certainty::ProbableNo);
      REQUIRE(r1.verdict == r2.verdict);
      if (a.colength() == mins.value) {
        bool in_mins = false;
        for (const auto& w : mins.ideals)
          if (w.space == a.space) in_mins = true;
        REQUIRE(in_mins == (r1.verdict == Certainty::CertifiedYes));
      }
      if (a.colength() < mins.value)
        REQUIRE(r1.verdict == Certainty::CertifiedNo);
    }
  }

  // the named instance: F_2[x,y]/(x^2,xy,y^2) certified at 1 via a cover
  // equivalent to F_2[x,y]/(x^2,y^2)
  {
    auto p = presentation(f2, XY, {"x^2", "x*y", "y^2"});
    auto base = build_algebra(p);
    auto mins = min_selfdual_colength_exhaustive(base, ecfg, cfg);
    auto upper = gcolength_upper_exhaustive(p, base, ecfg);
    REQUIRE(mins.value == 1);
    REQUIRE(upper.has_value());
    REQUIRE(upper->excess == 1);
    auto known = verify_cover(p, base, parse_all(f2, {"x^2", "y^2"}, XY));
    REQUIRE(known.checks.gorenstein);
    REQUIRE(known.checks.excess == 1);
  }
  REQUIRE(budget.elapsed() < budget.seconds);
}

TEST_CASE("criterion 09: bound chains are monotone on every report") {
  Budget budget(300.0);
  SearchConfig cfg;
  cfg.seed = 9;
  auto check_chain = [](const auto& rep) {
    REQUIRE(rep.lower_trace <= rep.lower_selfdual);
    REQUIRE(rep.lower_selfdual <= rep.upper_best);
    REQUIRE(rep.upper_best <= rep.lambda);
    REQUIRE(rep.lower_best <= rep.upper_best);
  };
  {
    PrimeField f2(2);
    for (const auto& p : staircase_presentations(f2, 5))
      check_chain(g_bounds(p, build_algebra(p), cfg));
  }
  {
    PrimeField f3(3);
    auto p = presentation(f3, XYZ, SQUARE_XYZ);
    check_chain(g_bounds(p, build_algebra(p), cfg));
  }
  {
    RationalField q;
    auto p = presentation(q, XYZ, SQUARE_XYZ);
    check_chain(g_bounds(p, build_algebra(p), cfg));
    auto p2 = presentation(q, {"x"}, {"x^3"});
    check_chain(g_bounds(p2, build_algebra(p2), cfg));
  }
  {
    PrimeField f7(7);
    auto p = presentation(f7, XY, {"x^6", "y^6", "x^5*y^4"});
    SearchConfig c7;
    c7.seed = 11;
    c7.trials = 24;
    check_chain(g_bounds(p, build_algebra(p), c7));
  }
  REQUIRE(budget.elapsed() < budget.seconds);
}

TEST_CASE("criterion 10: CLI determinism byte for byte") {
  Budget budget(120.0);
  auto run_once = [](std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    REQUIRE(code == 0);
    return out.str();
  };
  const std::string data = GORCOL_DATA_DIR;
  std::vector<std::vector<std::string>> invocations = {
      {"analyze", data + "/e1.alg", "--json"},
      {"bounds", data + "/e1_f3.alg", "--json", "--seed", "42"},
      {"teter", data + "/short_f2.alg", "--json", "--seed", "42"},
      {"selfdual", data + "/e1_f3.alg", "--ideal", "m", "--json", "--seed", "1"},
      {"construct", "idealization", data + "/short_f2.alg", "--json"},
      {"construct", "ci", data + "/e1.alg", "--json", "--seed", "4"},
      {"construct", "thm51", data + "/e1_f3.alg", "--json", "--seed", "2"},
      {"construct", "teter-cover", data + "/teter_f3.alg", "--json", "--seed", "2"},
      {"verify-cover", data + "/e1.alg", "--cover", data + "/e1_cover.alg",
       "--json"},
      {"colength2", data + "/deep_f7.alg", "--json", "--seed", "11", "--trials",
       "24"},
      {"oracle", data + "/short_f2.alg", "--json", "--seed", "3"},
  };
  for (const auto& inv : invocations) REQUIRE(run_once(inv) == run_once(inv));
  REQUIRE(budget.elapsed() < budget.seconds);
}
