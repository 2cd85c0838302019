#include "gapl/rational.hpp"

#include <functional>

#include "gapl/errors.hpp"

namespace gapl {

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string n = slash == std::string::npos ? s : s.substr(0, slash);
  std::string d = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!n.empty() && n[0] == '+') n.erase(n.begin());
  if (!valid_int(n) || !valid_int(d) || d[0] == '-')
    throw ParseError("malformed rational '" + std::string(text) + "'");
  mpz_class zn(n, 10), zd(d, 10);
  if (zd == 0) throw DivisionByZero();
  mpq_class q(zn, zd);
  q.canonicalize();
  return Rational(q);
}

Rational Rational::inv() const {
  if (is_zero()) throw DivisionByZero();
  mpq_class q = 1 / v_;
  return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::size_t Rational::hash() const {
  std::size_t h = mpz_get_ui(v_.get_num_mpz_t());
  h ^= static_cast<std::size_t>(sign()) * 0x9e3779b97f4a7c15ULL;
  h = h * 1000003u ^ mpz_get_ui(v_.get_den_mpz_t());
  return h;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Rational scalar_arith(ScalarOp op, const Rational& a, const Rational& b) {
  switch (op) {
    case ScalarOp::Add: return a + b;
    case ScalarOp::Mul: return a * b;
    case ScalarOp::Neg: return -a;
    case ScalarOp::Inv: return a.inv();
  }
  return a;
}

bool rational_sqrt(const Rational& q, Rational& root) {
  if (q.sign() < 0) return false;
  mpz_class n = q.num(), d = q.den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = Rational(mpq_class(rn, rd));
  return true;
}

}  // namespace gapl
