#include "gapl/refutation.hpp"

#include <cstdlib>
#include <set>
#include <sstream>

#include "gapl/errors.hpp"

namespace gapl {

std::string slot_label(const std::string& a, const std::string& b, const std::string& c) {
  return "(" + a + "*" + b + ")[" + c + "]";
}

int max_bn_rank() {
  if (const char* s = std::getenv("GAPL_MAX_BN")) return std::atoi(s);
  return 8;
}

Rational ForcedValues::x_times_z(int j) const {
  auto it = forced.find(slot_label("x", "z" + std::to_string(j), "x"));
  if (it == forced.end()) throw InvalidInput("x o z" + std::to_string(j) + " is not forced");
  return it->second;
}

Restrictions bn_restrictions(const LieAlgebra& bn) {
  const std::size_t x = bn.index("x"), y = bn.index("y"), n = bn.dim() - 2;
  std::vector<std::size_t> zs;
  for (std::size_t k = 1; k <= n; ++k) zs.push_back(bn.index("z" + std::to_string(k)));
  Restrictions r;
  for (std::size_t p : zs) {
    for (std::size_t q : zs) r[{p, q}] = zs;
    r[{p, x}] = r[{x, p}] = {x};
    r[{p, y}] = r[{y, p}] = {y};
  }
  r[{x, y}] = r[{y, x}] = zs;
  r[{x, x}] = r[{y, y}] = {};
  return r;
}

namespace {

std::string bn_name(const LieAlgebra& L, const Unknown& u) {
  const std::string &a = L.label(u.i), &b = L.label(u.j), &k = L.label(u.k);
  if (a[0] == 'z' && b == "x") return "alpha" + a.substr(1);
  if (a[0] == 'z' && b == "y") return "beta" + a.substr(1);
  if (a == "x" && b == "y") return "gamma" + k.substr(1);
  return "lambda_" + a.substr(1) + "_" + b.substr(1) + "^" + k.substr(1);
}

}  // namespace

ForcedValues bn_forced_values(int n, bool groebner_certify) {
  if (n < 2 || n > max_bn_rank())
    throw InvalidInput("b_n rank " + std::to_string(n) + " outside 2.." + std::to_string(max_bn_rank()));
  ForcedValues out;
  out.n = n;
  auto L = make_bn(n);
  std::vector<Vec> cartan;
  for (int k = 1; k <= n; ++k) cartan.push_back(L->vec("z" + std::to_string(k)));
  RootDatum datum = root_decomposition(*L, cartan);
  out.tmpl = build_template(L, datum, bn_restrictions(*L), bn_name);
  out.system = generate_constraints(out.tmpl);
  out.outcome = solve_system(out.system);
  if (out.outcome.kind == OutcomeKind::Infeasible) throw StageError("forced", "b_n system is infeasible");

  std::set<std::size_t> free_vars;
  for (const auto& b : out.outcome.branches) free_vars.insert(b.free_vars.begin(), b.free_vars.end());
  for (std::size_t v : free_vars) out.free_vars.push_back(out.tmpl.vars->name(v));

  const std::size_t d = L->dim();
  std::vector<std::tuple<std::string, MultiPoly, Rational>> certify;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const MultiPoly& e = out.tmpl.entry(i, j)[k];
        if (e.is_constant()) continue;
        const std::string label = slot_label(L->label(i), L->label(j), L->label(k));
        std::optional<Rational> value;
        bool forced = true;
        for (const auto& b : out.outcome.branches) {
          MultiPoly v = e.substitute(b.assignment);
          if (!v.is_constant() || (value && *value != v.constant_term())) {
            forced = false;
            break;
          }
          value = v.constant_term();
        }
        if (forced && value) {
          out.forced.emplace(label, *value);
          out.slots.emplace(label, e);
          certify.emplace_back(label, e, *value);
        } else {
          out.unforced.push_back(label);
        }
      }

  if (groebner_certify && n <= 3) {
    out.groebner = buchberger(out.system.equations, {}, default_groebner_budget(), true);
    for (const auto& [label, e, value] : certify) {
      auto cof = membership_cofactors(e - MultiPoly(e.vars(), value), *out.groebner);
      out.membership[label] = cof.has_value();
      if (cof) out.cofactors.emplace(label, std::move(*cof));
    }
  }
  return out;
}

ReportCheck verify_forced(const ForcedValues& f) {
  auto fail = [](std::string e) { return ReportCheck{false, std::move(e)}; };
  if (f.n < 2) return fail("n must be at least 2");
  ForcedValues fresh = bn_forced_values(f.n, false);
  if (!f.system.vars || f.system.vars->names() != fresh.system.vars->names())
    return fail("variables differ from the b_n template");
  if (f.system.equations != fresh.system.equations) return fail("equations differ from the b_n constraints");
  if (f.forced != fresh.forced) return fail("forced values differ from a fresh solve");
  if (f.unforced != fresh.unforced) return fail("unforced slots differ from a fresh solve");
  CertificateCheck cc = verify_certificate(f.outcome.certificate, f.outcome.branches);
  if (!cc.ok) return fail("certificate: " + cc.error);
  if (f.outcome.certificate.system.equations != f.system.equations) return fail("certificate is for another system");
  for (const auto& [label, ok] : f.membership) {
    if (!ok) return fail("no membership certificate for " + label);
    auto slot = f.slots.find(label);
    auto cof = f.cofactors.find(label);
    auto value = f.forced.find(label);
    if (slot == f.slots.end() || cof == f.cofactors.end() || value == f.forced.end())
      return fail("incomplete membership data for " + label);
    if (slot->second != fresh.slots.at(label)) return fail("slot expression differs for " + label);
    if (cof->second.size() != f.system.equations.size()) return fail("cofactor count differs for " + label);
    MultiPoly sum(f.system.vars);
    for (std::size_t i = 0; i < cof->second.size(); ++i) sum += cof->second[i] * f.system.equations[i];
    if (sum != slot->second - MultiPoly(f.system.vars, value->second))
      return fail("membership combination does not reproduce " + label);
  }
  return {};
}

namespace {

struct HostView {
  const AlgebraHandle& h;
  Matrix E(int i, int j) const { return h.classical->realization.unit(i, j); }
  Vec v(const Matrix& m) const { return h.classical->realization.coords(m); }
  Vec e(int i) const { return h.algebra->basis_vector(h.chevalley->e(i - 1)); }
  Vec f(int i) const { return h.algebra->basis_vector(h.chevalley->f(i - 1)); }
  Vec hh(int i) const { return h.algebra->basis_vector(h.chevalley->h(i - 1)); }
  Vec br(const Vec& a, const Vec& b) const { return h.algebra->bracket(a, b); }
};

BnFrame frame(std::string name, int n, Vec x, Vec y, std::vector<Vec> zs) {
  BnFrame f;
  f.name = std::move(name);
  f.n = n;
  f.x_img = std::move(x);
  f.y_img = std::move(y);
  f.z_imgs = std::move(zs);
  return f;
}

// fills z_3.. with Cartan elements killing the root of x, independent of z_1, z_2
void complete_cartan(const AlgebraHandle& h, BnFrame& f) {
  const auto cartan = h.cartan_vectors();
  const std::size_t n = cartan.size();
  Matrix delta(1, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec hx = h.algebra->bracket(cartan[i], f.x_img);
    // hx = delta_i * x
    for (std::size_t k = 0; k < hx.size(); ++k)
      if (!f.x_img[k].is_zero()) {
        delta(0, i) = hx[k] / f.x_img[k];
        break;
      }
  }
  SpanIndex span(h.algebra->dim());
  for (const auto& z : f.z_imgs) span.insert(z);
  for (const auto& coeffs : kernel(delta)) {
    if (f.z_imgs.size() == n) break;
    Vec z = zero_vec(h.algebra->dim());
    for (std::size_t i = 0; i < n; ++i) axpy(z, coeffs[i], cartan[i]);
    if (span.insert(z)) f.z_imgs.push_back(z);
  }
  f.n = static_cast<int>(n);
  f.reconstructed = true;
}

}  // namespace

FrameSet standard_frames(const std::string& id) {
  FrameSet out;
  out.host = make_algebra(id);
  const AlgebraHandle& h = out.host;
  HostView H{h};
  std::vector<BnFrame>& fr = out.frames;

  if (h.classical && h.classical->family == 'A') {
    const int n = h.classical->rank;
    if (n < 2) throw InvalidInput("sl2 has no refutation frames");
    auto hk = [&](int k) { return H.v(H.E(k, k) - H.E(k + 1, k + 1)); };
    std::vector<Vec> z1, z2, z3;
    for (int k = 1; k <= n; ++k) z1.push_back(hk(k));
    z2 = {hk(2), hk(1)};
    z3 = {H.v(H.E(1, 1) - H.E(3, 3)), H.v(H.E(3, 3) - H.E(2, 2))};
    if (n >= 3) {
      z2.push_back(H.v(H.E(1, 1) - H.E(4, 4)));
      z3.push_back(H.v(H.E(2, 2) - H.E(4, 4)));
    }
    for (int k = 4; k <= n; ++k) {
      z2.push_back(hk(k));
      z3.push_back(hk(k));
    }
    fr.push_back(frame("frame 1", n, H.v(H.E(1, 2)), H.v(H.E(2, 1)), z1));
    fr.push_back(frame("frame 2", n, H.v(H.E(2, 3)), H.v(H.E(3, 2)), z2));
    fr.push_back(frame("frame 3", n, H.v(H.E(1, 3)), H.v(H.E(3, 1)), z3));
  } else if (h.classical && h.classical->family == 'B' && h.classical->rank == 2) {
    auto M = [&](std::initializer_list<std::tuple<int, int, int>> ts) {
      Matrix m(5, 5);
      for (auto [c, i, j] : ts) m = m + Rational(c) * H.E(i, j);
      return H.v(m);
    };
    fr.push_back(frame("frame 1", 2, M({{2, 1, 0}, {-1, 0, 3}}), M({{1, 0, 1}, {-2, 3, 0}}),
                       {M({{2, 1, 1}, {-2, 3, 3}}), M({{-1, 1, 1}, {1, 2, 2}, {1, 3, 3}, {-1, 4, 4}})}));
    fr.push_back(frame("frame 2", 2, M({{2, 2, 0}, {-1, 0, 4}}), M({{1, 0, 2}, {-2, 4, 0}}),
                       {M({{2, 2, 2}, {-2, 4, 4}}), M({{1, 1, 1}, {-1, 2, 2}, {-1, 3, 3}, {1, 4, 4}})}));
    fr.push_back(frame("frame 3", 2, M({{1, 2, 3}, {-1, 1, 4}}), M({{1, 3, 2}, {-1, 4, 1}}),
                       {M({{1, 1, 1}, {1, 2, 2}, {-1, 3, 3}, {-1, 4, 4}}), M({{-1, 1, 1}, {1, 3, 3}})}));
  } else if (h.classical) {
    const int n = h.classical->rank;
    auto hi = [&](int i) { return H.E(i, i) - H.E(n + i, n + i); };
    auto pair = [&](int i, int j) { return H.v(H.E(i, j) - H.E(n + j, n + i)); };
    std::vector<Vec> z1 = {H.v(hi(1) - hi(2)), H.v(hi(2) - hi(3))};
    std::vector<Vec> z2 = {H.v(hi(2) - hi(3)), H.v(hi(1) - hi(2)), H.v(hi(1))};
    std::vector<Vec> z3 = {H.v(hi(1) - hi(3)), H.v(hi(3)), H.v(hi(2))};
    z1.push_back(H.v(hi(3)));
    for (int i = 4; i <= n; ++i) {
      z1.push_back(H.v(hi(i)));
      z2.push_back(H.v(hi(i)));
      z3.push_back(H.v(hi(i)));
    }
    fr.push_back(frame("frame 1", n, pair(1, 2), pair(2, 1), z1));
    fr.push_back(frame("frame 2", n, pair(2, 3), pair(3, 2), z2));
    fr.push_back(frame("frame 3", n, pair(1, 3), pair(3, 1), z3));
  } else if (h.chevalley) {
    const int n = static_cast<int>(h.chevalley->cartan.rank());
    const Vec x3 = scale(H.br(H.e(1), H.e(2)), Rational(-1));
    const Vec y3 = H.br(H.f(1), H.f(2));
    if (id == "g2") {
      fr.push_back(frame("frame 1", 2, H.e(1), H.f(1), {H.hh(1), scale(H.hh(2), Rational(1, 3))}));
      fr.push_back(frame("frame 2", 2, H.e(2), H.f(2), {H.hh(2), H.hh(1)}));
      fr.push_back(frame("frame 3", 2, x3, y3, {add(scale(H.hh(1), Rational(3)), H.hh(2)), H.hh(2)}));
    } else if (id == "f4") {
      fr.push_back(frame("frame 1", 4, H.e(1), H.f(1), {H.hh(1), H.hh(2), H.hh(3), H.hh(4)}));
      fr.push_back(frame("frame 2", 4, scale(H.e(2), Rational(-1)), scale(H.f(2), Rational(-1)),
                         {H.hh(2), H.hh(1), sub(scale(H.hh(1), Rational(2)), H.hh(3)), H.hh(4)}));
      fr.push_back(frame("frame 3", 4, x3, y3,
                         {add(H.hh(1), H.hh(2)), scale(H.hh(3), Rational(1, 2)), sub(H.hh(1), H.hh(2)), H.hh(4)}));
    } else if (id == "e6") {
      std::vector<Vec> z1, z2 = {H.hh(2), H.hh(1), sub(H.hh(1), H.hh(3))},
                          z3 = {add(H.hh(1), H.hh(2)), H.hh(3), sub(H.hh(1), H.hh(2))};
      for (int i = 1; i <= 6; ++i) z1.push_back(H.hh(i));
      for (int i = 4; i <= 6; ++i) {
        z2.push_back(H.hh(i));
        z3.push_back(H.hh(i));
      }
      fr.push_back(frame("frame 1", 6, H.e(1), H.f(1), z1));
      fr.push_back(frame("frame 2", 6, scale(H.e(2), Rational(-1)), scale(H.f(2), Rational(-1)), z2));
      fr.push_back(frame("frame 3", 6, x3, y3, z3));
    } else if (id == "e7" || id == "e8") {
      fr.push_back(frame("frame 1", 2, H.e(1), H.f(1), {H.hh(1), H.hh(2)}));
      fr.push_back(frame("frame 2", 2, scale(H.e(2), Rational(-1)), scale(H.f(2), Rational(-1)), {H.hh(2), H.hh(1)}));
      fr.push_back(frame("frame 3", 2, x3, y3, {add(H.hh(1), H.hh(2)), H.hh(3)}));
      for (auto& f : fr) complete_cartan(h, f);
    } else {
      throw InvalidInput("no refutation frames for '" + id + "'");
    }
    (void)n;
  } else {
    throw InvalidInput("no refutation frames for '" + id + "'");
  }

  for (auto& f : fr)
    if (!verify_frame_iso(h.algebra, f))
      throw StageError("frames", f.name + " of " + id + " is not isomorphic to b_" + std::to_string(f.n));

  const Vec x12 = h.algebra->bracket(fr[0].x_img, fr[1].x_img);
  std::optional<Rational> c;
  for (std::size_t k = 0; k < x12.size(); ++k)
    if (!fr[2].x_img[k].is_zero()) {
      c = x12[k] / fr[2].x_img[k];
      break;
    }
  if (!c || c->is_zero() || x12 != scale(fr[2].x_img, *c))
    throw StageError("frames", "[x1, x2] is not a nonzero multiple of x3 in " + id);
  out.relation.c = *c;
  return out;
}

bool verify_frame_iso(const std::shared_ptr<const LieAlgebra>& host, BnFrame& f) {
  if (static_cast<int>(f.z_imgs.size()) != f.n) return false;
  std::vector<Vec> vs = {f.x_img, f.y_img};
  std::vector<std::string> labels = {"x", "y"};
  for (int k = 0; k < f.n; ++k) {
    vs.push_back(f.z_imgs[k]);
    labels.push_back("z" + std::to_string(k + 1));
  }
  try {
    Subalgebra s = subalgebra_on_basis(host, vs, labels);
    f.iso = LinMap{s.algebra, make_bn(f.n), Matrix::identity(vs.size())};
    return check_iso(f.iso);
  } catch (const Error&) {
    return false;
  }
}

bool verify_frame_conditions(const LieAlgebra& L, const RootDatum& datum, const BnFrame& f) {
  (void)L;
  auto dx = datum.weight_of(f.x_img), dy = datum.weight_of(f.y_img);
  if (!dx || !dy || is_zero(*dx) || *dy != scale(*dx, Rational(-1))) return false;
  if (datum.find(*dx)->basis.size() != 1 || datum.find(*dy)->basis.size() != 1) return false;
  if (datum.is_root(scale(*dx, Rational(2)))) return false;
  SpanIndex span(f.x_img.size());
  for (const auto& z : f.z_imgs) {
    auto dz = datum.weight_of(z);
    if (is_zero(z) || !dz || !is_zero(*dz)) return false;
    if (!span.insert(z)) return false;
  }
  return true;
}

namespace {

// a_k(w): coefficient of x_k in x_k o w under the forced values
std::optional<Rational> frame_scalar(const BnFrame& f, const Vec& w, const std::vector<Rational>& xz) {
  auto mu = solve(Matrix::from_cols(f.z_imgs, w.size()), w);
  if (!mu) return std::nullopt;
  Rational a(0);
  for (int j = 0; j < f.n; ++j) a += (*mu)[j] * xz.at(j);
  return a;
}

Vec normalize_lead(Vec v) {
  for (const auto& c : v)
    if (!c.is_zero()) return scale(v, c.inv());
  return v;
}

}  // namespace

std::optional<RefutationReport> contradiction_search(const LieAlgebra& L, const std::vector<BnFrame>& frames,
                                                     const Rational& c, const std::vector<Rational>& xz) {
  if (frames.size() != 3) throw InvalidInput("contradiction search needs three frames");
  const int n = frames[0].n;
  const std::size_t dim = L.dim();
  SpanIndex common(dim);
  for (const auto& z : frames[0].z_imgs) common.insert(z);
  for (const auto& f : frames)
    for (const auto& z : f.z_imgs)
      if (f.n != n || !common.contains(z)) return std::nullopt;

  const Matrix Z1 = Matrix::from_cols(frames[0].z_imgs, dim);
  auto functional = [&](const BnFrame& f) {
    Vec a(n);
    for (int i = 0; i < n; ++i) a[i] = *frame_scalar(f, frames[0].z_imgs[i], xz);
    return a;
  };
  const Vec A1 = functional(frames[0]), A2 = functional(frames[1]);

  std::vector<Vec> candidates = {frames[2].z_imgs[0]};
  std::vector<Vec> ker;
  for (const auto& s : kernel(Matrix::from_rows({sub(A1, A2)}, n))) ker.push_back(normalize_lead(Z1 * s));
  candidates.insert(candidates.end(), ker.begin(), ker.end());
  for (std::size_t i = 0; i < ker.size(); ++i)
    for (std::size_t j = i + 1; j < ker.size(); ++j) candidates.push_back(normalize_lead(add(ker[i], ker[j])));

  for (const auto& w : candidates) {
    auto a1 = frame_scalar(frames[0], w, xz), a2 = frame_scalar(frames[1], w, xz), a3 = frame_scalar(frames[2], w, xz);
    if (!a1 || !a2 || !a3 || *a1 != *a2 || *a3 == -*a1) continue;
    RefutationReport r;
    r.n = n;
    r.frames = frames;
    r.c = c;
    r.x3 = frames[2].x_img;
    r.w = w;
    r.w_desc = describe(L, w);
    r.a1 = *a1;
    r.a2 = *a2;
    r.a3 = *a3;
    r.lhs = c * *a3;
    r.rhs = -(c * *a1);
    r.x_times_z = xz;
    for (const auto& f : frames) r.reconstructed = r.reconstructed || f.reconstructed;
    return r;
  }
  return std::nullopt;
}

RefutationReport refute(const std::string& id) {
  if (id == "sl2") throw InvalidInput("sl2 carries a root graded structure; there is nothing to refute");
  FrameSet fs;
  try {
    fs = standard_frames(id);
  } catch (const StageError&) {
    throw;
  } catch (const Error& e) {
    throw StageError("construct", e.what());
  }
  RootDatum datum;
  try {
    datum = root_decomposition(*fs.host.algebra, fs.host.cartan_vectors());
  } catch (const Error& e) {
    throw StageError("decompose", e.what());
  }
  for (const auto& f : fs.frames)
    if (!verify_frame_conditions(*fs.host.algebra, datum, f))
      throw StageError("conditions", f.name + " of " + id + " fails the grading conditions");
  ForcedValues forced;
  try {
    forced = bn_forced_values(fs.frames[0].n, false);
  } catch (const Error& e) {
    throw StageError("forced", e.what());
  }
  std::vector<Rational> xz;
  for (int j = 1; j <= forced.n; ++j) xz.push_back(forced.x_times_z(j));
  auto r = contradiction_search(*fs.host.algebra, fs.frames, fs.relation.c, xz);
  if (!r) throw StageError("search", "no witness found for " + id);
  r->algebra = id;
  return *r;
}

ReportCheck verify_report(const RefutationReport& r) {
  ReportCheck out;
  auto bad = [&](std::string what) {
    out.ok = false;
    out.error = std::move(what);
    return out;
  };
  AlgebraHandle h;
  try {
    h = make_algebra(r.algebra);
  } catch (const Error& e) {
    return bad(e.what());
  }
  if (r.frames.size() != 3) return bad("report needs three frames");
  RootDatum datum = root_decomposition(*h.algebra, h.cartan_vectors());
  for (auto f : r.frames) {
    if (f.x_img.size() != h.algebra->dim()) return bad("frame vectors have the wrong dimension");
    if (!verify_frame_iso(h.algebra, f)) return bad(f.name + " is not isomorphic to b_n");
    if (!verify_frame_conditions(*h.algebra, datum, f)) return bad(f.name + " fails the grading conditions");
  }
  if (h.algebra->bracket(r.frames[0].x_img, r.frames[1].x_img) != scale(r.x3, r.c) || r.c.is_zero())
    return bad("[x1, x2] != c * x3");
  if (r.x3 != r.frames[2].x_img) return bad("x3 differs from the third frame");
  ForcedValues forced = bn_forced_values(r.n, false);
  for (int j = 1; j <= r.n; ++j)
    if (static_cast<int>(r.x_times_z.size()) != r.n || forced.x_times_z(j) != r.x_times_z[j - 1])
      return bad("forced coefficients differ from the b_n solution");
  Rational a[3];
  for (int k = 0; k < 3; ++k) {
    auto v = frame_scalar(r.frames[k], r.w, r.x_times_z);
    if (!v) return bad("w is not in the Cartan span of " + r.frames[k].name);
    a[k] = *v;
  }
  if (a[0] != r.a1 || a[1] != r.a2 || a[2] != r.a3) return bad("stored scalars differ from the recomputed ones");
  if (r.a1 != r.a2) return bad("a1 != a2");
  if (r.lhs != r.c * r.a3 || r.rhs != -(r.c * r.a1)) return bad("stored sides are inconsistent");
  if (r.lhs == r.rhs) return bad("no contradiction: both sides agree");
  return out;
}

namespace {

// "c name" with unit coefficients dropped
std::string times(const Rational& c, const std::string& name) {
  if (name.empty() || c.is_zero()) return c.str();
  if (c.is_one()) return name;
  if (c == Rational(-1)) return "-" + name;
  return c.str() + " " + name;
}

std::string minus(const std::string& lhs, const Rational& c, const std::string& name) {
  if (c.sign() < 0) return lhs + " + " + times(-c, name);
  return lhs + " - " + times(c, name);
}

}  // namespace

std::string text_proof(const RefutationReport& r) {
  const AlgebraHandle h = make_algebra(r.algebra);
  const LieAlgebra& L = *h.algebra;
  std::ostringstream os;
  os << "Claim: " << r.algebra << " has no compatible root graded anti-pre-Lie structure.\n\n";
  os << "Three subalgebras isomorphic to b_" << r.n << " over a common Cartan subalgebra h";
  os << (r.reconstructed ? " (Cartan completions computed)" : "") << ":\n";
  for (std::size_t k = 0; k < r.frames.size(); ++k) {
    const auto& f = r.frames[k];
    os << "  " << f.name << ": x" << k + 1 << " = " << describe(L, f.x_img) << ", y" << k + 1 << " = "
       << describe(L, f.y_img) << "\n";
    for (std::size_t j = 0; j < f.z_imgs.size(); ++j)
      os << "    z" << j + 1 << " <- " << describe(L, f.z_imgs[j]) << "\n";
  }
  os << "\nIn b_" << r.n << " every such structure satisfies";
  for (int j = 0; j < r.n; ++j) {
    if (j == 2 && r.n > 3) {
      os << ", x o zj = " << times(r.x_times_z[j], "x") << " (j >= 3)";
      break;
    }
    os << (j ? ", " : " ") << "x o z" << j + 1 << " = " << times(r.x_times_z[j], "x");
  }
  os << ".\n";
  os << "Take w = " << r.w_desc << ". Pulling back through each frame:\n";
  os << "  x1 o w = " << times(r.a1, "x1") << ", x2 o w = " << times(r.a2, "x2") << ", x3 o w = "
     << times(r.a3, "x3") << "\n";
  os << "and [x1, x2] = " << times(r.c, "x3") << ". With x1 o x2 = t x3 and x2 o x1 = "
     << "(" << minus("t", r.c, "") << ") x3:\n";
  os << "  " << times(r.c, "x3 o w") << " = [x1, x2] o w = x2 o (x1 o w) - x1 o (x2 o w)\n";
  os << "    = " << minus(times(r.a1, "x2 o x1"), r.a2, "x1 o x2") << " = " << times(r.rhs, "x3") << "\n";
  os << "so " << times(r.lhs, "x3") << " = " << times(r.rhs, "x3") << ", a contradiction.\n";
  return os.str();
}

}  // namespace gapl
