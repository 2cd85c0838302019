// Acceptance run: one PASS/FAIL line per criterion, nonzero exit when any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "gapl/errors.hpp"
#include "gapl/refutation.hpp"
#include "gapl/serialize.hpp"
#include "gapl/solver.hpp"
#include "oracles.hpp"

using namespace gapl;
using namespace gapl::test;

namespace {

// wall-clock budgets, seconds
constexpr double kSl2Budget = 1.0;
constexpr double kBnBudget = 60.0;
constexpr double kRefuteBudget = 30.0;
constexpr double kLargeRefuteBudget = 300.0;

constexpr int kMaxIrrep = 10;
constexpr std::size_t kMaxSumDim = 30;
constexpr int kRandomSums = 40;
constexpr int kMutations = 20;
constexpr int kProbes = 100;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

class Criterion {
 public:
  explicit Criterion(int id) : id_(id) {}
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool report(const std::string& title) const {
    const bool ok = failures_.empty();
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << id_ << ": " << title;
    for (const auto& n : notes_) std::cout << "; " << n;
    std::cout << "\n";
    for (const auto& f : failures_) std::cout << "      " << f << "\n";
    return ok;
  }

 private:
  int id_;
  std::vector<std::string> failures_, notes_;
};

void guarded(Criterion& c, const std::string& what, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    c.expect(false, what + ": " + e.what());
  }
}

std::string fmt(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << "s";
  return os.str();
}

// structures that the APL checks of criterion 7 run over
std::vector<AntiPreLieAlgebra> accepted;
std::vector<Certificate> certificates;
std::vector<std::vector<SolutionBranch>> certificate_branches;
std::vector<ForcedValues> small_bn;

bool rho_is_hom(const AntiPreLieAlgebra& A) {
  LieAlgebra L = subadjacent_lie(A);
  auto rep = negative_left_mult_rep(A);
  const std::size_t d = A.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec br = L.bracket(L.basis_vector(i), L.basis_vector(j));
      Matrix lhs(d, d);
      for (std::size_t k = 0; k < d; ++k)
        if (!br[k].is_zero()) lhs = lhs + br[k] * rep.rho[k];
      if (!(lhs == commutator(rep.rho[i], rep.rho[j]))) return false;
    }
  return true;
}

bool criterion1() {
  Criterion c(1);
  guarded(c, "sl2", [&] {
    AlgebraHandle h = make_algebra("sl2");
    auto t0 = std::chrono::steady_clock::now();
    GradedSolution sol = solve_graded(h.algebra, h.cartan_vectors());
    double t = seconds_since(t0);
    c.expect(sol.outcome.kind == OutcomeKind::Unique, "outcome is " + outcome_name(sol.outcome.kind));
    c.expect(sol.structures.size() == 1, std::to_string(sol.structures.size()) + " structures");
    if (!sol.structures.empty()) c.expect(sol.structures[0] == reference_sl2_structure(), "table differs");
    c.expect(t < kSl2Budget, "took " + fmt(t));
    c.note(fmt(t));
    accepted.insert(accepted.end(), sol.structures.begin(), sol.structures.end());
    certificates.push_back(sol.outcome.certificate);
    certificate_branches.push_back(sol.outcome.branches);
  });
  return c.report("solve-graded sl2 returns exactly the reference structure");
}

bool criterion2() {
  Criterion c(2);
  std::ostringstream times;
  for (int n = 2; n <= 6; ++n) {
    guarded(c, "b" + std::to_string(n), [&] {
      const std::string tag = "b" + std::to_string(n) + ": ";
      auto t0 = std::chrono::steady_clock::now();
      ForcedValues f = bn_forced_values(n, n <= 3);
      double t = seconds_since(t0);
      times << (n > 2 ? " " : "") << "b" << n << "=" << fmt(t);
      c.expect(t < kBnBudget, tag + "took " + fmt(t));
      auto want = expected_forced(n);
      c.expect(f.forced == want, tag + "forced values differ");
      c.expect(std::set<std::string>(f.unforced.begin(), f.unforced.end()) == expected_unforced(n),
               tag + "unforced slots differ from z_p o z_q, p, q >= 2");
      if (n <= 3) {
        c.expect(f.membership.size() == want.size() && f.cofactors.size() == want.size(),
                 tag + "missing ideal membership certificates");
        for (const auto& [slot, ok] : f.membership) c.expect(ok, tag + slot + " has no membership certificate");
        small_bn.push_back(f);
      }
      ReportCheck rc = verify_forced(f);
      c.expect(rc.ok, tag + rc.error);
      certificates.push_back(f.outcome.certificate);
      certificate_branches.push_back(f.outcome.branches);
    });
  }
  c.note(times.str());
  return c.report("forced values on b_2..b_6, free z_p o z_q, Groebner certificates for n <= 3");
}

bool criterion3() {
  Criterion c(3);
  struct Case {
    const char* id;
    std::optional<std::pair<Rational, Rational>> scalars;
  };
  const std::pair<Rational, Rational> sl{-4, 2};
  const std::vector<Case> cases = {{"sl3", sl},         {"sl4", sl},     {"sl5", sl},
                                   {"so5", {{-8, 4}}},  {"so7", {}},     {"so9", {}},
                                   {"sp6", {}},         {"so8", {}},     {"g2", {{Rational(4, 5), Rational(-2, 5)}}},
                                   {"f4", {}},          {"e6", {}}};
  double slowest = 0;
  for (const auto& k : cases) {
    guarded(c, k.id, [&] {
      const std::string tag = std::string(k.id) + ": ";
      auto t0 = std::chrono::steady_clock::now();
      RefutationReport r = refute(k.id);
      ReportCheck rc = verify_report(decode<RefutationReport>(parse_json(dump_json(encode(r)))));
      double t = seconds_since(t0);
      slowest = std::max(slowest, t);
      c.expect(rc.ok, tag + "verification: " + rc.error);
      c.expect(r.a1 == r.a2, tag + "a1 != a2");
      c.expect(r.c * r.a3 != -r.c * r.a1, tag + "no contradiction");
      c.expect(!r.reconstructed, tag + "unexpectedly reconstructed");
      if (k.scalars) c.expect(r.lhs == k.scalars->first && r.rhs == k.scalars->second,
                              tag + r.lhs.str() + " vs " + r.rhs.str());
      c.expect(t < kRefuteBudget, tag + "took " + fmt(t));
    });
  }
  c.note("slowest " + fmt(slowest));
  for (const char* id : {"e7", "e8"}) {
    guarded(c, id, [&] {
      const std::string tag = std::string(id) + ": ";
      auto t0 = std::chrono::steady_clock::now();
      RefutationReport r = refute(id);
      ReportCheck rc = verify_report(r);
      double t = seconds_since(t0);
      c.expect(rc.ok, tag + "verification: " + rc.error);
      c.expect(r.reconstructed, tag + "reconstructed flag missing");
      c.expect(r.a1 == r.a2 && r.c * r.a3 != -r.c * r.a1, tag + "no contradiction");
      c.expect(t < kLargeRefuteBudget, tag + "took " + fmt(t));
      c.note(std::string(id) + " " + fmt(t));
    });
  }
  return c.report("verified refutations of the eleven hosts, e7/e8 flagged reconstructed");
}

bool criterion4() {
  Criterion c(4);
  for (const char* id : {"sl3", "sl4", "sl5", "so5", "so7", "so9", "sp6", "so8", "g2", "f4", "e6", "e7", "e8"}) {
    guarded(c, id, [&] {
      AlgebraHandle h = make_algebra(id);
      c.expect(validate_lie(*h.algebra).ok(), std::string(id) + " fails the Lie axioms");
    });
  }
  struct Case {
    char type;
    int n;
  };
  for (Case k : {Case{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3}, {'B', 4}, {'C', 3}, {'D', 4},
                 {'G', 2}, {'F', 4}, {'E', 6}}) {
    const std::string tag = std::string(1, k.type) + std::to_string(k.n) + ": ";
    guarded(c, tag, [&] {
      CartanMatrix cm = cartan_matrix(k.type, k.n);
      ChevalleyData d = make_from_cartan_matrix(cm);
      const std::size_t orbit = orbit_root_count(cm);
      c.expect(orbit == expected_root_count(k.type, k.n), tag + "orbit oracle disagrees with the closed form");
      c.expect(d.roots.size() == orbit, tag + std::to_string(d.roots.size()) + " roots");
      c.expect(d.algebra->dim() == orbit + cm.rank(), tag + "dimension");
      c.expect(validate_lie(*d.algebra).ok(), tag + "fails the Lie axioms");
      if (k.type == 'G') c.expect(d.roots.size() == 12 && d.algebra->dim() == 14, "G2 is not 12 roots in dim 14");
    });
  }
  return c.report("all constructed algebras satisfy the Lie axioms, root counts match the Weyl orbit");
}

bool criterion5() {
  Criterion c(5);
  guarded(c, "irreps", [&] {
    for (int m = 0; m <= kMaxIrrep; ++m) {
      Sl2Action a = make_standard_irrep(m);
      c.expect(sl2_relation_failures(a).empty(), "V(" + std::to_string(m) + ") fails the relations");
      auto d = decompose_rep(a);
      c.expect(d.summands.size() == 1 && d.summands[0].highest_weight == m && d.summands[0].multiplicity == 1,
               "V(" + std::to_string(m) + ") does not decompose to itself");
      auto w = weight_multiset(a);
      for (std::size_t i = 0; i < w.size(); ++i)
        c.expect(w[i] == -w[w.size() - 1 - i], "weights of V(" + std::to_string(m) + ") not symmetric");
    }
  });
  guarded(c, "direct sums", [&] {
    std::uniform_int_distribution<int> weight(0, 7);
    for (int trial = 0; trial < kRandomSums; ++trial) {
      std::map<int, std::size_t> want;
      std::optional<Sl2Action> acc;
      for (;;) {
        int m = weight(rng());
        if ((acc ? acc->dim : 0) + m + 1 > kMaxSumDim) break;
        Sl2Action v = make_standard_irrep(m);
        acc = acc ? direct_sum(*acc, v) : v;
        ++want[m];
      }
      Sl2Action a = scramble(*acc);
      std::map<int, std::size_t> got;
      for (const auto& s : decompose_rep(a).summands) got[s.highest_weight] += s.multiplicity;
      c.expect(got == want, "sum " + std::to_string(trial) + " decomposed wrongly");
      auto w = weight_multiset(a);
      for (std::size_t i = 0; i < w.size(); ++i)
        c.expect(w[i] == -w[w.size() - 1 - i], "sum " + std::to_string(trial) + " weights not symmetric");
    }
  });
  return c.report("irreps V(0)..V(10) and random direct sums up to dimension 30 decompose correctly");
}

bool criterion6() {
  Criterion c(6);
  std::size_t replayed = 0;
  for (std::size_t i = 0; i < certificates.size(); ++i) {
    guarded(c, "certificate", [&] {
      Certificate back = decode<Certificate>(parse_json(dump_json(encode(certificates[i]))));
      CertificateCheck cc = verify_certificate(back, certificate_branches[i]);
      c.expect(cc.ok, "certificate " + std::to_string(i) + ": " + cc.error);
      for (const auto& b : certificate_branches[i])
        c.expect(check_branch_soundness(back.system, b), "certificate " + std::to_string(i) + ": unsound branch");
      ++replayed;
    });
  }
  guarded(c, "witness", [&] {
    auto v = registry({"a", "b"});
    MultiPoly a = var(v, "a"), b = var(v, "b");
    PolynomialSystem s{v, {a * b - cst(v, 1), a * a + b * b, a * a - b * b - cst(v, 1)}, {"p0", "p1", "p2"}};
    SolveOutcome o = solve_system(s);
    c.expect(o.kind == OutcomeKind::Infeasible, "toy system not infeasible");
    c.expect(verify_certificate(o.certificate).ok, "infeasibility certificate does not replay");
    auto w = prove_infeasible(s.equations);
    c.expect(w && check_witness(decode<GroebnerWitness>(parse_json(dump_json(encode(*w))))),
             "Groebner witness does not replay");
    ++replayed;
  });
  std::size_t probes = 0;
  for (const auto& f : small_bn) {
    guarded(c, "groebner", [&] {
      const std::string tag = "b" + std::to_string(f.n) + ": ";
      c.expect(f.groebner.has_value(), tag + "no Groebner basis");
      if (!f.groebner) return;
      c.expect(s_polynomials_reduce_to_zero(*f.groebner), tag + "an S-polynomial does not reduce to 0");
      const auto& eqs = f.system.equations;
      std::uniform_int_distribution<std::size_t> pick(0, eqs.size() - 1);
      std::uniform_int_distribution<std::size_t> pick_var(0, f.system.vars->size() - 1);
      for (int p = 0; p < kProbes; ++p) {
        MultiPoly g(f.system.vars);
        for (int t = 0; t < 3; ++t) {
          MultiPoly m = cst(f.system.vars, small_rational(4)) +
                        small_rational(4) * MultiPoly::variable(f.system.vars, pick_var(rng()));
          g += m * eqs[pick(rng())];
        }
        c.expect(normal_form(g, *f.groebner).is_zero(), tag + "probe " + std::to_string(p) + " has nonzero normal form");
        ++probes;
      }
    });
  }
  c.expect(probes >= kProbes, "only " + std::to_string(probes) + " membership probes ran");
  c.note(std::to_string(replayed) + " certificates, " + std::to_string(probes) + " probes");
  return c.report("certificates and witnesses replay, S-polynomials and membership probes reduce to 0");
}

bool criterion7() {
  Criterion c(7);
  guarded(c, "apl", [&] {
    AntiPreLieAlgebra ref = reference_sl2_structure();
    c.expect(validate_apl(ref).ok(), "reference structure rejected");
    AntiPreLieAlgebra zero{ref.basis, BilinearTable(3)};
    c.expect(validate_apl(zero).ok(), "zero product rejected");
    accepted.push_back(ref);
    accepted.push_back(zero);

    std::uniform_int_distribution<int> idx(0, 2);
    int rejected = 0;
    for (int t = 0; t < kMutations; ++t) {
      AntiPreLieAlgebra B = ref;
      std::size_t i = idx(rng()), j = idx(rng()), k = idx(rng());
      Vec v = to_dense(B.product.at(i, j), 3);
      v[k] += Rational(t + 1, 2);
      B.product.set(i, j, v);
      if (!validate_apl(B).ok()) ++rejected;
    }
    c.expect(rejected == kMutations, std::to_string(rejected) + "/" + std::to_string(kMutations) + " mutations rejected");
    std::size_t homs = 0;
    for (const auto& A : accepted) {
      c.expect(rho_is_hom(A), "rho is not a homomorphism");
      ++homs;
    }
    c.note(std::to_string(rejected) + " mutations rejected, rho checked on " + std::to_string(homs) + " structures");
  });
  return c.report("validate_apl accepts the reference and zero products, rejects mutations, rho is a homomorphism");
}

}  // namespace

int main() {
  bool ok = true;
  ok &= criterion1();
  ok &= criterion2();
  ok &= criterion3();
  ok &= criterion4();
  ok &= criterion5();
  ok &= criterion6();
  ok &= criterion7();
  std::cout << (ok ? "all criteria pass" : "some criteria fail") << "\n";
  return ok ? 0 : 1;
}
