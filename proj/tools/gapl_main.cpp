#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gapl/errors.hpp"
#include "gapl/refutation.hpp"
#include "gapl/serialize.hpp"
#include "gapl/solver.hpp"
#include "gapl/zoo.hpp"

using namespace gapl;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUndecided = 2, kUsage = 3 };

const std::vector<std::string> kRefuteAll = {"sl3", "sl4", "sl5", "so5", "so7", "so9", "sp6",
                                             "so8", "g2",  "f4",  "e6",  "e7",  "e8"};

struct Options {
  std::string target;
  std::string out;
  std::string text;
  std::string out_dir;
  std::string irreps;
  bool all = false;
  bool no_groebner = false;
  int n = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  out << body;
}

// JSON to --out when given, else stdout
void emit(const Options& o, const Json& j) {
  if (o.out.empty())
    std::cout << dump_json(j);
  else
    write_file(o.out, dump_json(j));
}

std::string product_lines(const AntiPreLieAlgebra& A) {
  LieAlgebra labels(A.basis);
  std::ostringstream os;
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) {
      Vec v = to_dense(A.product.at(i, j), A.dim());
      if (is_zero(v)) continue;
      os << "  " << A.basis[i] << "*" << A.basis[j] << " = " << describe(labels, v) << "\n";
    }
  std::string s = os.str();
  return s.empty() ? "  (zero product)\n" : s;
}

int run_construct(const Options& o) {
  AlgebraHandle h = make_algebra(o.target);
  emit(o, encode(*h.algebra));
  return kOk;
}

int run_roots(const Options& o) {
  AlgebraHandle h = make_algebra(o.target);
  Json j = encode(root_decomposition(*h.algebra, h.cartan_vectors()));
  j["algebra"] = o.target;
  emit(o, j);
  return kOk;
}

int run_solve_graded(const Options& o) {
  AlgebraHandle h = make_algebra(o.target);
  GradedSolution sol = solve_graded(h.algebra, h.cartan_vectors());
  Json structures = Json::array();
  for (const auto& A : sol.structures) structures.push_back(encode(A));
  emit(o, {{"algebra", o.target}, {"outcome", encode(sol.outcome)}, {"structures", structures}});
  if (!o.out.empty()) {
    std::cout << o.target << ": " << outcome_name(sol.outcome.kind) << ", " << sol.outcome.branches.size()
              << " branch(es), " << sol.structures.size() << " structure(s)\n";
    for (const auto& A : sol.structures) std::cout << product_lines(A);
  }
  return kOk;
}

int run_bn_solve(const Options& o) {
  ForcedValues f = bn_forced_values(o.n, !o.no_groebner);
  emit(o, encode(f));
  if (!o.out.empty()) {
    std::cout << "b" << o.n << ": " << f.forced.size() << " forced, " << f.unforced.size() << " unforced\n";
    for (const auto& [slot, v] : f.forced)
      if (!v.is_zero()) std::cout << "  " << slot << " = " << v.str() << "\n";
  }
  return kOk;
}

int run_refute(const Options& o) {
  if (o.all) {
    if (!o.out_dir.empty()) std::filesystem::create_directories(o.out_dir);
    int status = kOk;
    for (const auto& id : kRefuteAll) {
      try {
        RefutationReport r = refute(id);
        ReportCheck c = verify_report(r);
        std::cout << id << ": " << r.lhs.str() << " != " << r.rhs.str()
                  << (r.reconstructed ? " (reconstructed frames)" : "") << (c.ok ? " verified" : " FAILED: " + c.error)
                  << "\n";
        if (!c.ok) status = kFailed;
        if (!o.out_dir.empty()) {
          write_file(o.out_dir + "/" + id + ".json", dump_json(encode(r)));
          write_file(o.out_dir + "/" + id + ".txt", text_proof(r));
        }
      } catch (const Undecided& e) {
        std::cout << id << ": undecided: " << e.what() << "\n";
        if (status == kOk) status = kUndecided;
      } catch (const StageError& e) {
        std::cout << id << ": " << e.what() << "\n";
        status = kFailed;
      }
    }
    return status;
  }
  RefutationReport r = refute(o.target);
  ReportCheck c = verify_report(r);
  emit(o, encode(r));
  if (!o.text.empty())
    write_file(o.text, text_proof(r));
  else if (!o.out.empty())
    std::cout << text_proof(r);
  if (!c.ok) {
    std::cerr << "report failed verification: " << c.error << "\n";
    return kFailed;
  }
  return kOk;
}

Sl2Action parse_irreps(const std::string& list) {
  std::optional<Sl2Action> acc;
  std::stringstream ss(list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    int m = 0;
    try {
      std::size_t used = 0;
      m = std::stoi(tok, &used);
      if (used != tok.size() || m < 0) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InvalidInput("bad highest weight '" + tok + "'");
    }
    Sl2Action v = make_standard_irrep(m);
    acc = acc ? direct_sum(*acc, v) : v;
  }
  if (!acc) throw InvalidInput("empty --irreps list");
  return *acc;
}

Json decompose_artifact(const Sl2Action& a) {
  Json j = encode(decompose_rep(a));
  j["action"] = encode(a);
  return j;
}

int run_decompose(const Options& o) {
  if (o.irreps.empty() == o.target.empty()) throw InvalidInput("give either an action file or --irreps");
  Sl2Action a = o.irreps.empty() ? decode<Sl2Action>(parse_json(read_file(o.target))) : parse_irreps(o.irreps);
  auto failures = sl2_relation_failures(a);
  if (!failures.empty()) {
    for (const auto& f : failures) std::cerr << "sl2 relation fails: " << f << "\n";
    return kFailed;
  }
  emit(o, decompose_artifact(a));
  return kOk;
}

Json validation_artifact(const Json& subject, bool& ok) {
  // a product table when it says so, otherwise a Lie algebra
  const bool apl = subject.is_object() && subject.contains("products");
  ValidationReport r = apl ? validate_apl(decode<AntiPreLieAlgebra>(subject)) : validate_lie(decode<LieAlgebra>(subject));
  ok = r.ok();
  Json j = encode(r);
  j["subject"] = subject;
  return j;
}

int run_validate(const Options& o) {
  bool ok = false;
  Json j = validation_artifact(parse_json(read_file(o.target)), ok);
  emit(o, j);
  std::cerr << (ok ? "valid" : "invalid") << "\n";
  return ok ? kOk : kFailed;
}

// one of the artifacts above, recognized by its keys
ReportCheck verify_artifact(const Json& j) {
  auto fail = [](std::string e) { return ReportCheck{false, std::move(e)}; };
  auto has = [&](std::initializer_list<const char*> keys) {
    if (!j.is_object()) return false;
    for (const char* k : keys)
      if (!j.contains(k)) return false;
    return true;
  };
  if (has({"frames", "lhs", "rhs"})) return verify_report(decode<RefutationReport>(j));
  if (has({"forced", "outcome", "n"})) return verify_forced(decode<ForcedValues>(j));
  if (has({"algebra", "outcome", "structures"})) {
    AlgebraHandle h = make_algebra(j.at("algebra").get<std::string>());
    SolveOutcome out = decode<SolveOutcome>(j.at("outcome"));
    RootDatum datum = root_decomposition(*h.algebra, h.cartan_vectors());
    ProductTemplate t = build_template(h.algebra, datum);
    PolynomialSystem sys = generate_constraints(t);
    if (out.certificate.system.vars->names() != sys.vars->names() ||
        out.certificate.system.equations != sys.equations)
      return fail("certificate system differs from the constraints of " + h.id);
    CertificateCheck cc = verify_certificate(out.certificate, out.branches);
    if (!cc.ok) return fail("certificate: " + cc.error);
    std::vector<AntiPreLieAlgebra> expected;
    for (const auto& b : out.branches) {
      if (!b.free_vars.empty() || !b.residual.empty()) continue;
      std::map<std::size_t, Rational> values;
      for (const auto& [v, p] : b.assignment) values.emplace(v, p.constant_term());
      expected.push_back({h.algebra->basis(), t.realize(values)});
    }
    const Json& st = j.at("structures");
    if (!st.is_array() || st.size() != expected.size()) return fail("structure count differs from the branches");
    for (std::size_t i = 0; i < expected.size(); ++i) {
      AntiPreLieAlgebra A = decode<AntiPreLieAlgebra>(st[i]);
      if (!(A == expected[i])) return fail("structure " + std::to_string(i) + " differs from its branch");
      if (!validate_apl(A).ok()) return fail("structure " + std::to_string(i) + " is not anti-pre-Lie");
      if (!check_compatibility(A, *h.algebra)) return fail("structure " + std::to_string(i) + " is not compatible");
      if (!check_graded_product(A.product, datum)) return fail("structure " + std::to_string(i) + " is not graded");
    }
    return {};
  }
  if (has({"system", "root"})) {
    CertificateCheck cc = verify_certificate(decode<Certificate>(j));
    return cc.ok ? ReportCheck{} : fail(cc.error);
  }
  if (has({"kind", "branches", "certificate"})) {
    SolveOutcome out = decode<SolveOutcome>(j);
    CertificateCheck cc = verify_certificate(out.certificate, out.branches);
    return cc.ok ? ReportCheck{} : fail(cc.error);
  }
  if (has({"generators", "cofactors"}))
    return check_witness(decode<GroebnerWitness>(j)) ? ReportCheck{} : fail("witness does not combine to 1");
  if (has({"summands", "action"})) {
    Sl2Action a = decode<Sl2Action>(j.at("action"));
    if (!sl2_relation_failures(a).empty()) return fail("action violates the sl2 relations");
    return decompose_artifact(a) == j ? ReportCheck{} : fail("decomposition differs from a recomputation");
  }
  if (has({"subject", "failures"})) {
    bool ok = false;
    return validation_artifact(j.at("subject"), ok) == j ? ReportCheck{} : fail("report differs from a revalidation");
  }
  if (has({"algebra", "cartan", "components"})) {
    AlgebraHandle h = make_algebra(j.at("algebra").get<std::string>());
    Json fresh = encode(root_decomposition(*h.algebra, h.cartan_vectors()));
    fresh["algebra"] = j.at("algebra");
    return fresh == j ? ReportCheck{} : fail("root data differ from a recomputation");
  }
  if (has({"basis", "brackets"})) {
    ValidationReport r = validate_lie(decode<LieAlgebra>(j));
    return r.ok() ? ReportCheck{} : fail("Lie axioms fail");
  }
  if (has({"basis", "products"})) {
    ValidationReport r = validate_apl(decode<AntiPreLieAlgebra>(j));
    return r.ok() ? ReportCheck{} : fail("anti-pre-Lie axioms fail");
  }
  throw ParseError("at (root): unrecognized artifact");
}

int run_verify(const Options& o) {
  ReportCheck c = verify_artifact(parse_json(read_file(o.target)));
  if (!c.ok) {
    std::cout << "FAILED: " << c.error << "\n";
    return kFailed;
  }
  std::cout << "ok\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Root graded anti-pre-Lie structures: construction, solving and refutation"};
  app.require_subcommand(1);
  Options o;

  auto target = [&](CLI::App* sub, const char* what) {
    sub->add_option("target", o.target, what)->required();
    sub->add_option("-o,--out", o.out, "write JSON here instead of stdout");
  };
  target(app.add_subcommand("construct", "build a Lie algebra"), "algebra id, e.g. sl3, so7, g2, b4");
  target(app.add_subcommand("roots", "root space decomposition"), "algebra id");
  target(app.add_subcommand("solve-graded", "solve for root graded anti-pre-Lie structures"), "algebra id");
  auto* bn = app.add_subcommand("bn-solve", "forced product values on b_n");
  bn->add_option("n", o.n, "rank")->required();
  bn->add_option("-o,--out", o.out, "write JSON here instead of stdout");
  bn->add_flag("--no-groebner", o.no_groebner, "skip the ideal membership certificates");
  auto* ref = app.add_subcommand("refute", "prove that no compatible structure exists");
  ref->add_option("target", o.target, "algebra id");
  ref->add_option("-o,--out", o.out, "write JSON here instead of stdout");
  ref->add_option("--text", o.text, "write the text proof here");
  ref->add_flag("--all", o.all, "refute every supported algebra");
  ref->add_option("--out-dir", o.out_dir, "with --all: write <id>.json and <id>.txt here");
  target(app.add_subcommand("verify", "replay an artifact produced by another verb"), "JSON file");
  auto* dec = app.add_subcommand("decompose-rep", "decompose a finite dimensional sl2 representation");
  dec->add_option("target", o.target, "JSON file with dim, E, F, H");
  dec->add_option("--irreps", o.irreps, "comma separated highest weights to sum instead");
  dec->add_option("-o,--out", o.out, "write JSON here instead of stdout");
  target(app.add_subcommand("validate", "check Lie or anti-pre-Lie axioms of a JSON table"), "JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  try {
    if (verb == "refute" && o.all == !o.target.empty()) throw InvalidInput("give an algebra id or --all");
    if (verb == "construct") return run_construct(o);
    if (verb == "roots") return run_roots(o);
    if (verb == "solve-graded") return run_solve_graded(o);
    if (verb == "bn-solve") return run_bn_solve(o);
    if (verb == "refute") return run_refute(o);
    if (verb == "verify") return run_verify(o);
    if (verb == "decompose-rep") return run_decompose(o);
    if (verb == "validate") return run_validate(o);
  } catch (const Undecided& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    return kUndecided;
  } catch (const ParseError& e) {
    std::cerr << "parse error " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  } catch (const Json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
