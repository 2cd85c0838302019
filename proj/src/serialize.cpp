#include "gapl/serialize.hpp"

#include <set>

#include "gapl/errors.hpp"

namespace gapl {

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // e.what() carries "at line L, column C"
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

namespace {

// cursor into a JSON document that remembers its path for error messages
struct At {
  const Json& j;
  std::string path;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("at " + (path.empty() ? std::string("/") : path) + ": " + what);
  }
  At operator[](const char* key) const {
    if (!j.is_object()) fail("expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(std::string("missing key \"") + key + "\"");
    return {*it, path + "/" + key};
  }
  bool has(const char* key) const { return j.is_object() && j.contains(key); }
  At operator[](std::size_t i) const { return {j.at(i), path + "/" + std::to_string(i)}; }
  std::size_t size() const {
    if (!j.is_array()) fail("expected an array");
    return j.size();
  }
  const Json& object() const {
    if (!j.is_object()) fail("expected an object");
    return j;
  }
  std::string str() const {
    if (!j.is_string()) fail("expected a string");
    return j.get<std::string>();
  }
  std::size_t index() const {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
      fail("expected a non-negative integer");
    return j.get<std::size_t>();
  }
  long long integer() const {
    if (!j.is_number_integer()) fail("expected an integer");
    return j.get<long long>();
  }
  bool boolean() const {
    if (!j.is_boolean()) fail("expected a boolean");
    return j.get<bool>();
  }
  Rational rational() const {
    if (!j.is_string()) fail("expected a rational string \"p/q\"");
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const Error& e) {
      fail(e.what());
    }
  }
  Vec vec() const {
    Vec v(size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = (*this)[i].rational();
    return v;
  }
  std::vector<std::string> strings() const {
    std::vector<std::string> out(size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (*this)[i].str();
    return out;
  }
};

At root(const Json& j) { return {j, ""}; }

Json names(const std::vector<std::string>& v) { return Json(v); }

std::size_t label_index(const At& a, const std::vector<std::string>& basis) {
  const std::string s = a.str();
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == s) return i;
  a.fail("unknown basis label \"" + s + "\"");
}

std::vector<std::string> unique_basis(const At& a) {
  auto basis = a.strings();
  std::set<std::string> seen(basis.begin(), basis.end());
  if (seen.size() != basis.size()) a.fail("duplicate basis label");
  return basis;
}

Json encode_sparse(const SparseVec& v, const std::vector<std::string>& basis) {
  Json out = Json::array();
  for (const auto& [k, c] : v)
    if (!c.is_zero()) out.push_back({{"k", basis[k]}, {"c", c.str()}});
  return out;
}

SparseVec decode_sparse(const At& a, const std::vector<std::string>& basis) {
  Vec v(basis.size());
  for (std::size_t t = 0; t < a.size(); ++t) v[label_index(a[t]["k"], basis)] += a[t]["c"].rational();
  return to_sparse(v);
}

Json encode_table(const BilinearTable& t, const std::vector<std::string>& basis, bool upper_only) {
  Json out = Json::array();
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = upper_only ? i + 1 : 0; j < t.dim(); ++j) {
      Json value = encode_sparse(t.at(i, j), basis);
      if (!value.empty()) out.push_back({{"i", basis[i]}, {"j", basis[j]}, {"value", value}});
    }
  return out;
}

// polynomials: list of terms {"c": "p/q", "m": {"var": exponent}}
Json encode_poly(const MultiPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json m = Json::object();
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v]) m[p.vars()->name(v)] = e[v];
    out.push_back({{"c", c.str()}, {"m", m}});
  }
  return out;
}

MultiPoly decode_poly(const At& a, const VarsPtr& vars) {
  MultiPoly p(vars);
  for (std::size_t t = 0; t < a.size(); ++t) {
    Exponent e(vars->size(), 0);
    At m = a[t]["m"];
    for (const auto& [name, d] : m.object().items()) {
      auto v = vars->find(name);
      if (!v) m.fail("unknown variable \"" + name + "\"");
      At ex{d, m.path + "/" + name};
      const long long k = ex.integer();
      if (k < 0 || k > 60000) ex.fail("exponent out of range");
      e[*v] = static_cast<std::uint16_t>(k);
    }
    p.add_term(e, a[t]["c"].rational());
  }
  return p;
}

Json encode_polys(const std::vector<MultiPoly>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(encode_poly(p));
  return out;
}

std::vector<MultiPoly> decode_polys(const At& a, const VarsPtr& vars) {
  std::vector<MultiPoly> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(decode_poly(a[i], vars));
  return out;
}

VarsPtr decode_vars(const At& a) {
  auto names = a.strings();
  std::set<std::string> seen(names.begin(), names.end());
  if (seen.size() != names.size()) a.fail("duplicate variable name");
  return std::make_shared<VarRegistry>(names);
}

std::size_t var_index(const At& a, const VarsPtr& vars) {
  auto v = vars->find(a.str());
  if (!v) a.fail("unknown variable \"" + a.str() + "\"");
  return *v;
}

Json encode_node(const CertNode& n, const VarsPtr& vars) {
  Json steps = Json::array();
  for (const auto& s : n.steps) {
    Json js;
    switch (s.kind) {
      case Step::Kind::Reduce:
        js = {{"kind", "reduce"}, {"polys", encode_polys(s.polys)}};
        break;
      case Step::Kind::Derive: {
        Json cof = Json::array();
        for (const auto& c : s.cofactors) cof.push_back(encode_polys(c));
        js = {{"kind", "derive"}, {"polys", encode_polys(s.polys)}, {"cofactors", cof}};
        break;
      }
      case Step::Kind::Substitute: {
        Json batch = Json::array();
        for (const auto& b : s.batch)
          batch.push_back({{"var", vars->name(b.var)}, {"value", encode_poly(b.value)}, {"from_eq", b.from_eq}});
        js = {{"kind", "substitute"}, {"batch", batch}};
        break;
      }
    }
    steps.push_back(js);
  }
  Json out = {{"steps", steps}};
  switch (n.end) {
    case CertNode::End::Branch: {
      Json children = Json::array();
      for (const auto& c : n.children) children.push_back(encode_node(c, vars));
      out["end"] = "branch";
      out["eq"] = n.eq;
      out["var"] = vars->name(n.var);
      out["factors"] = encode_polys(n.factors);
      out["children"] = children;
      break;
    }
    case CertNode::End::ConstantContradiction:
      out["end"] = "constant_contradiction";
      out["eq"] = n.eq;
      out["value"] = n.value.str();
      break;
    case CertNode::End::GroebnerWitness:
      out["end"] = "groebner_witness";
      out["cofactors"] = encode_polys(n.cofactors);
      break;
    case CertNode::End::Leaf:
      out["end"] = "leaf";
      out["leaf"] = n.leaf;
      break;
  }
  return out;
}

CertNode decode_node(const At& a, const VarsPtr& vars) {
  CertNode n;
  At steps = a["steps"];
  for (std::size_t i = 0; i < steps.size(); ++i) {
    At s = steps[i];
    Step st;
    const std::string kind = s["kind"].str();
    if (kind == "reduce") {
      st.kind = Step::Kind::Reduce;
      st.polys = decode_polys(s["polys"], vars);
    } else if (kind == "derive") {
      st.kind = Step::Kind::Derive;
      st.polys = decode_polys(s["polys"], vars);
      At cof = s["cofactors"];
      for (std::size_t c = 0; c < cof.size(); ++c) st.cofactors.push_back(decode_polys(cof[c], vars));
    } else if (kind == "substitute") {
      st.kind = Step::Kind::Substitute;
      At batch = s["batch"];
      for (std::size_t b = 0; b < batch.size(); ++b)
        st.batch.push_back({var_index(batch[b]["var"], vars), decode_poly(batch[b]["value"], vars),
                            batch[b]["from_eq"].index()});
    } else {
      s["kind"].fail("unknown step kind \"" + kind + "\"");
    }
    n.steps.push_back(std::move(st));
  }
  const std::string end = a["end"].str();
  if (end == "branch") {
    n.end = CertNode::End::Branch;
    n.eq = a["eq"].index();
    n.var = var_index(a["var"], vars);
    n.factors = decode_polys(a["factors"], vars);
    At ch = a["children"];
    for (std::size_t c = 0; c < ch.size(); ++c) n.children.push_back(decode_node(ch[c], vars));
  } else if (end == "constant_contradiction") {
    n.end = CertNode::End::ConstantContradiction;
    n.eq = a["eq"].index();
    n.value = a["value"].rational();
  } else if (end == "groebner_witness") {
    n.end = CertNode::End::GroebnerWitness;
    n.cofactors = decode_polys(a["cofactors"], vars);
  } else if (end == "leaf") {
    n.end = CertNode::End::Leaf;
    n.leaf = a["leaf"].index();
  } else {
    a["end"].fail("unknown node end \"" + end + "\"");
  }
  return n;
}

Json encode_frame(const BnFrame& f) {
  Json zs = Json::array();
  for (const auto& z : f.z_imgs) zs.push_back(encode(z));
  return {{"name", f.name}, {"n", f.n}, {"x", encode(f.x_img)}, {"y", encode(f.y_img)}, {"z", zs},
          {"reconstructed", f.reconstructed}};
}

BnFrame decode_frame(const At& a) {
  BnFrame f;
  f.name = a["name"].str();
  f.n = static_cast<int>(a["n"].integer());
  f.x_img = a["x"].vec();
  f.y_img = a["y"].vec();
  At zs = a["z"];
  for (std::size_t i = 0; i < zs.size(); ++i) f.z_imgs.push_back(zs[i].vec());
  f.reconstructed = a["reconstructed"].boolean();
  return f;
}

OutcomeKind decode_kind(const At& a) {
  const std::string k = a.str();
  if (k == "unique") return OutcomeKind::Unique;
  if (k == "family") return OutcomeKind::Family;
  if (k == "infeasible") return OutcomeKind::Infeasible;
  a.fail("unknown outcome kind \"" + k + "\"");
}

}  // namespace

Json encode(const Rational& r) { return r.str(); }

Json encode(const Vec& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(c.str());
  return out;
}

Json encode(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(encode(m.row(i)));
  return out;
}

Json encode(const LieAlgebra& L) {
  return {{"basis", names(L.basis())}, {"brackets", encode_table(L.table(), L.basis(), true)}};
}

Json encode(const AntiPreLieAlgebra& A) {
  return {{"basis", names(A.basis)}, {"products", encode_table(A.product, A.basis, false)}};
}

Json encode(const RootDatum& d) {
  Json cartan = Json::array(), comps = Json::array();
  for (const auto& h : d.cartan) cartan.push_back(encode(h));
  for (const auto& c : d.components) {
    Json basis = Json::array();
    for (const auto& b : c.basis) basis.push_back(encode(b));
    comps.push_back({{"functional", encode(c.functional)}, {"basis", basis}});
  }
  return {{"cartan", cartan}, {"components", comps}, {"root_count", d.root_count()}};
}

Json encode(const ValidationReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"axiom", f.axiom}, {"i", f.i}, {"j", f.j}, {"k", f.k}, {"residual", encode(f.residual)}});
  return {{"ok", r.ok()}, {"failures", failures}, {"notes", r.notes}};
}

Json encode(const Sl2Action& a) {
  return {{"dim", a.dim}, {"E", encode(a.E)}, {"F", encode(a.F)}, {"H", encode(a.H)}};
}

Json encode(const RepDecomposition& d) {
  Json out = Json::array();
  for (const auto& s : d.summands) {
    Json vs = Json::array();
    for (const auto& v : s.highest_weight_vectors) vs.push_back(encode(v));
    out.push_back({{"highest_weight", s.highest_weight}, {"multiplicity", s.multiplicity}, {"highest_weight_vectors", vs}});
  }
  return {{"summands", out}};
}

Json encode(const PolynomialSystem& s) {
  return {{"variables", names(s.vars->names())}, {"equations", encode_polys(s.equations)}, {"provenance", s.provenance}};
}

Json encode(const Certificate& c) {
  return {{"system", encode(c.system)}, {"root", encode_node(c.root, c.system.vars)}};
}

namespace {

Json encode_branch(const SolutionBranch& b, const VarsPtr& vars) {
  Json assignment = Json::object();
  for (const auto& [v, p] : b.assignment) assignment[vars->name(v)] = encode_poly(p);
  std::vector<std::string> free;
  for (std::size_t v : b.free_vars) free.push_back(vars->name(v));
  return {{"assignment", assignment}, {"free_vars", free}, {"residual", encode_polys(b.residual)}};
}

SolutionBranch decode_branch(const At& a, const VarsPtr& vars) {
  SolutionBranch b;
  At as = a["assignment"];
  for (const auto& [name, p] : as.object().items()) {
    auto v = vars->find(name);
    if (!v) as.fail("unknown variable \"" + name + "\"");
    b.assignment.emplace(*v, decode_poly(At{p, as.path + "/" + name}, vars));
  }
  At fv = a["free_vars"];
  for (std::size_t i = 0; i < fv.size(); ++i) b.free_vars.push_back(var_index(fv[i], vars));
  b.residual = decode_polys(a["residual"], vars);
  return b;
}

}  // namespace

Json encode(const SolveOutcome& o) {
  Json branches = Json::array();
  for (const auto& b : o.branches) branches.push_back(encode_branch(b, o.certificate.system.vars));
  return {{"kind", outcome_name(o.kind)}, {"branches", branches}, {"certificate", encode(o.certificate)}};
}

Json encode(const GroebnerWitness& w) {
  VarsPtr vars;
  for (const auto& g : w.generators)
    if (g.vars()) vars = g.vars();
  return {{"variables", vars ? names(vars->names()) : Json::array()},
          {"generators", encode_polys(w.generators)},
          {"cofactors", encode_polys(w.cofactors)}};
}

Json encode(const ForcedValues& f) {
  Json forced = Json::object(), membership = Json::object();
  for (const auto& [k, v] : f.forced) forced[k] = v.str();
  for (const auto& [k, v] : f.membership) membership[k] = v;
  Json out = {{"n", f.n},
              {"forced", forced},
              {"unforced", f.unforced},
              {"free_vars", f.free_vars},
              {"outcome", encode(f.outcome)},
              {"groebner_membership", membership}};
  if (f.groebner) out["groebner_basis"] = encode_polys(f.groebner->generators);
  Json slots = Json::object(), cof = Json::object();
  for (const auto& [k, p] : f.slots) slots[k] = encode_poly(p);
  for (const auto& [k, c] : f.cofactors) cof[k] = encode_polys(c);
  out["slots"] = slots;
  out["membership_cofactors"] = cof;
  return out;
}

Json encode(const RefutationReport& r) {
  Json frames = Json::array();
  for (const auto& f : r.frames) frames.push_back(encode_frame(f));
  Json xz = Json::array();
  for (const auto& c : r.x_times_z) xz.push_back(c.str());
  return {{"algebra", r.algebra}, {"n", r.n},         {"frames", frames},   {"c", r.c.str()},
          {"x3", encode(r.x3)},   {"w", encode(r.w)}, {"w_desc", r.w_desc}, {"a1", r.a1.str()},
          {"a2", r.a2.str()},     {"a3", r.a3.str()}, {"lhs", r.lhs.str()}, {"rhs", r.rhs.str()},
          {"x_times_z", xz},      {"reconstructed", r.reconstructed}};
}

template <>
Rational decode<Rational>(const Json& j) {
  return root(j).rational();
}

template <>
Vec decode<Vec>(const Json& j) {
  return root(j).vec();
}

template <>
Matrix decode<Matrix>(const Json& j) {
  At a = root(j);
  const std::size_t r = a.size();
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < r; ++i) rows.push_back(a[i].vec());
  const std::size_t c = r ? rows[0].size() : 0;
  for (std::size_t i = 0; i < r; ++i)
    if (rows[i].size() != c) a[i].fail("ragged matrix row");
  return Matrix::from_rows(rows, c);
}

template <>
LieAlgebra decode<LieAlgebra>(const Json& j) {
  At a = root(j);
  auto basis = unique_basis(a["basis"]);
  LieAlgebra L(basis);
  At br = a["brackets"];
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t t = 0; t < br.size(); ++t) {
    const std::size_t i = label_index(br[t]["i"], basis), jj = label_index(br[t]["j"], basis);
    if (i == jj) br[t].fail("bracket of a basis vector with itself must vanish");
    if (!seen.insert({std::min(i, jj), std::max(i, jj)}).second) br[t].fail("bracket listed twice");
    L.set_bracket(i, jj, decode_sparse(br[t]["value"], basis));
  }
  return L;
}

template <>
AntiPreLieAlgebra decode<AntiPreLieAlgebra>(const Json& j) {
  At a = root(j);
  AntiPreLieAlgebra A;
  A.basis = unique_basis(a["basis"]);
  A.product = BilinearTable(A.basis.size());
  At pr = a["products"];
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t t = 0; t < pr.size(); ++t) {
    const std::size_t i = label_index(pr[t]["i"], A.basis), jj = label_index(pr[t]["j"], A.basis);
    if (!seen.insert({i, jj}).second) pr[t].fail("product listed twice");
    A.product.set(i, jj, decode_sparse(pr[t]["value"], A.basis));
  }
  return A;
}

template <>
RootDatum decode<RootDatum>(const Json& j) {
  At a = root(j);
  RootDatum d;
  At cartan = a["cartan"];
  for (std::size_t i = 0; i < cartan.size(); ++i) d.cartan.push_back(cartan[i].vec());
  At comps = a["components"];
  std::size_t dim = 0;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    Component comp;
    comp.functional = comps[c]["functional"].vec();
    At basis = comps[c]["basis"];
    for (std::size_t b = 0; b < basis.size(); ++b) comp.basis.push_back(basis[b].vec());
    if (!d.lookup.emplace(comp.functional, c).second) comps[c].fail("duplicate functional");
    if (!comp.basis.empty()) dim = comp.basis[0].size();
    d.components.push_back(std::move(comp));
  }
  if (d.components.empty() || !is_zero(d.components[0].functional)) comps.fail("zero component must come first");
  d.adapted = true;
  d.basis_component.assign(dim, 0);
  std::vector<bool> hit(dim, false);
  for (std::size_t c = 0; c < d.components.size(); ++c)
    for (const auto& b : d.components[c].basis) {
      std::size_t nz = 0, at = 0;
      for (std::size_t k = 0; k < b.size(); ++k)
        if (!b[k].is_zero()) ++nz, at = k;
      if (b.size() != dim) comps.fail("component vectors of different lengths");
      if (nz == 1 && b[at].is_one() && !hit[at]) {
        hit[at] = true;
        d.basis_component[at] = c;
      } else {
        d.adapted = false;
      }
    }
  if (!d.adapted) d.basis_component.clear();
  return d;
}

template <>
ValidationReport decode<ValidationReport>(const Json& j) {
  At a = root(j);
  ValidationReport r;
  At f = a["failures"];
  for (std::size_t t = 0; t < f.size(); ++t)
    r.failures.push_back({f[t]["axiom"].str(), f[t]["i"].index(), f[t]["j"].index(), f[t]["k"].index(),
                          f[t]["residual"].vec()});
  r.notes = a["notes"].strings();
  return r;
}

template <>
Sl2Action decode<Sl2Action>(const Json& j) {
  At a = root(j);
  Sl2Action s;
  s.dim = a["dim"].index();
  s.E = decode<Matrix>(a["E"].j);
  s.F = decode<Matrix>(a["F"].j);
  s.H = decode<Matrix>(a["H"].j);
  for (const Matrix* m : {&s.E, &s.F, &s.H})
    if (m->rows() != s.dim || m->cols() != s.dim) a.fail("matrix size differs from dim");
  return s;
}

template <>
RepDecomposition decode<RepDecomposition>(const Json& j) {
  At a = root(j)["summands"];
  RepDecomposition d;
  for (std::size_t t = 0; t < a.size(); ++t) {
    Summand s;
    s.highest_weight = static_cast<int>(a[t]["highest_weight"].integer());
    s.multiplicity = a[t]["multiplicity"].index();
    At vs = a[t]["highest_weight_vectors"];
    for (std::size_t i = 0; i < vs.size(); ++i) s.highest_weight_vectors.push_back(vs[i].vec());
    d.summands.push_back(std::move(s));
  }
  return d;
}

template <>
PolynomialSystem decode<PolynomialSystem>(const Json& j) {
  At a = root(j);
  PolynomialSystem s;
  s.vars = decode_vars(a["variables"]);
  s.equations = decode_polys(a["equations"], s.vars);
  s.provenance = a["provenance"].strings();
  if (s.provenance.size() != s.equations.size()) a["provenance"].fail("one tag per equation expected");
  return s;
}

template <>
Certificate decode<Certificate>(const Json& j) {
  At a = root(j);
  Certificate c;
  c.system = decode<PolynomialSystem>(a["system"].j);
  c.root = decode_node(a["root"], c.system.vars);
  return c;
}

template <>
SolveOutcome decode<SolveOutcome>(const Json& j) {
  At a = root(j);
  SolveOutcome o;
  o.kind = decode_kind(a["kind"]);
  o.certificate = decode<Certificate>(a["certificate"].j);
  At br = a["branches"];
  for (std::size_t i = 0; i < br.size(); ++i) o.branches.push_back(decode_branch(br[i], o.certificate.system.vars));
  return o;
}

template <>
GroebnerWitness decode<GroebnerWitness>(const Json& j) {
  At a = root(j);
  auto vars = decode_vars(a["variables"]);
  GroebnerWitness w;
  w.generators = decode_polys(a["generators"], vars);
  w.cofactors = decode_polys(a["cofactors"], vars);
  return w;
}

template <>
ForcedValues decode<ForcedValues>(const Json& j) {
  At a = root(j);
  ForcedValues f;
  f.n = static_cast<int>(a["n"].integer());
  At forced = a["forced"];
  for (const auto& [k, v] : forced.object().items()) f.forced.emplace(k, At{v, forced.path + "/" + k}.rational());
  f.unforced = a["unforced"].strings();
  f.free_vars = a["free_vars"].strings();
  f.outcome = decode<SolveOutcome>(a["outcome"].j);
  f.system = f.outcome.certificate.system;
  At mem = a["groebner_membership"];
  for (const auto& [k, v] : mem.object().items()) f.membership.emplace(k, At{v, mem.path + "/" + k}.boolean());
  At slots = a["slots"];
  for (const auto& [k, v] : slots.object().items())
    f.slots.emplace(k, decode_poly(At{v, slots.path + "/" + k}, f.system.vars));
  At cof = a["membership_cofactors"];
  for (const auto& [k, v] : cof.object().items())
    f.cofactors.emplace(k, decode_polys(At{v, cof.path + "/" + k}, f.system.vars));
  if (a.has("groebner_basis")) {
    GroebnerBasis gb;
    gb.generators = decode_polys(a["groebner_basis"], f.system.vars);
    f.groebner = gb;
  }
  return f;
}

template <>
RefutationReport decode<RefutationReport>(const Json& j) {
  At a = root(j);
  RefutationReport r;
  r.algebra = a["algebra"].str();
  r.n = static_cast<int>(a["n"].integer());
  At fr = a["frames"];
  for (std::size_t i = 0; i < fr.size(); ++i) r.frames.push_back(decode_frame(fr[i]));
  r.c = a["c"].rational();
  r.x3 = a["x3"].vec();
  r.w = a["w"].vec();
  r.w_desc = a["w_desc"].str();
  r.a1 = a["a1"].rational();
  r.a2 = a["a2"].rational();
  r.a3 = a["a3"].rational();
  r.lhs = a["lhs"].rational();
  r.rhs = a["rhs"].rational();
  At xz = a["x_times_z"];
  for (std::size_t i = 0; i < xz.size(); ++i) r.x_times_z.push_back(xz[i].rational());
  r.reconstructed = a["reconstructed"].boolean();
  return r;
}

}  // namespace gapl
