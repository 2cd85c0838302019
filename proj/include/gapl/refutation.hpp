#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gapl/grading.hpp"
#include "gapl/groebner.hpp"
#include "gapl/solver.hpp"
#include "gapl/zoo.hpp"

namespace gapl {

// Product slots are written "(a*b)[c]": the coefficient of c in a o b.
std::string slot_label(const std::string& a, const std::string& b, const std::string& c);

struct ForcedValues {
  int n = 0;
  std::map<std::string, Rational> forced;  // equal and constant on every branch
  std::vector<std::string> unforced;       // template slots left open
  std::vector<std::string> free_vars;
  ProductTemplate tmpl;
  PolynomialSystem system;
  SolveOutcome outcome;
  // for small n: every forced slot reduces to its value modulo a Groebner basis of the system
  std::optional<GroebnerBasis> groebner;
  std::map<std::string, bool> membership;
  // slot - value = sum_i cofactors[slot][i] * system.equations[i]
  std::map<std::string, std::vector<MultiPoly>> cofactors;
  std::map<std::string, MultiPoly> slots;  // template entry of each forced slot

  // coefficient of x in x o z_j
  Rational x_times_z(int j) const;
};

int max_bn_rank();  // GAPL_MAX_BN, default 8
ForcedValues bn_forced_values(int n, bool groebner_certify = true);

// the template conditions on b_n: z o z in the z span, z o x in Cx, z o y in Cy, x o y in the z span
Restrictions bn_restrictions(const LieAlgebra& bn);

struct BnFrame {
  std::string name;
  int n = 0;
  Vec x_img, y_img;
  std::vector<Vec> z_imgs;
  bool reconstructed = false;       // Cartan completion computed, not transcribed
  LinMap iso;                       // frame span -> b_n, filled by verify_frame_iso
};

struct BracketRelation {
  Rational c;  // [x1, x2] = c * x3
};

struct FrameSet {
  AlgebraHandle host;
  std::vector<BnFrame> frames;  // exactly three
  BracketRelation relation;
};

FrameSet standard_frames(const std::string& algebra_id);

// builds frame.iso and checks it is a Lie isomorphism onto b_n
bool verify_frame_iso(const std::shared_ptr<const LieAlgebra>& host, BnFrame& frame);
bool verify_frame_conditions(const LieAlgebra& L, const RootDatum& datum, const BnFrame& frame);

struct RefutationReport {
  std::string algebra;
  int n = 0;
  std::vector<BnFrame> frames;
  Rational c;
  Vec x3;
  Vec w;
  std::string w_desc;
  Rational a1, a2, a3;
  Rational lhs, rhs;  // c*a3 and -c*a1
  std::vector<Rational> x_times_z;  // forced coefficients consumed, j = 1..n
  bool reconstructed = false;
};

std::optional<RefutationReport> contradiction_search(const LieAlgebra& L, const std::vector<BnFrame>& frames,
                                                     const Rational& c, const std::vector<Rational>& x_times_z);

RefutationReport refute(const std::string& algebra_id);

struct ReportCheck {
  bool ok = true;
  std::string error;
};

// recomputes every scalar of the report inside the host algebra
ReportCheck verify_report(const RefutationReport& r);

// rebuilds the b_n system and replays the certificate and membership cofactors
ReportCheck verify_forced(const ForcedValues& f);

std::string text_proof(const RefutationReport& r);

}  // namespace gapl
