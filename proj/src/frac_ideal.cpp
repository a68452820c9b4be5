#include "charone/frac_ideal.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <stdexcept>

#include "charone/idem_core.hpp"

namespace charone {

  namespace {

    void require_same_prime(Integer const& p, Integer const& q) {
      if (p != q) {
        throw std::invalid_argument("prime mismatch: " + to_string(p) + " vs "
                                    + to_string(q));
      }
    }

    void require_same_lattice_params(QuadLattice const& M,
                                     QuadLattice const& N) {
      require_same_prime(M.prime(), N.prime());
      if (M.d() != N.d()) {
        throw std::invalid_argument("field mismatch: d = "
                                    + std::to_string(M.d()) + " vs "
                                    + std::to_string(N.d()));
      }
    }

    bool is_squarefree(std::int64_t d) {
      std::int64_t n = d < 0 ? -d : d;
      for (std::int64_t q = 2; q * q <= n; ++q) {
        if (n % (q * q) == 0) {
          return false;
        }
      }
      return true;
    }

    std::int64_t to_int64(Integer const& n) {
      return n.convert_to<std::int64_t>();
    }

    bool p_integral(QuadNumber const& x, Integer const& p) {
      return is_padic_integer(x.a, p) && is_padic_integer(x.b, p);
    }

    GammaMax through(GroupEmbedding const& j, GammaMax const& x) {
      if (x.is_zero()) {
        return GammaMax::zero(j.target());
      }
      return GammaMax::unit(j(x.value()));
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // LocalRational
  ////////////////////////////////////////////////////////////////////////

  LocalRational::LocalRational(Rational q, Integer p)
      : _q(std::move(q)), _p(std::move(p)) {
    if (!is_padic_integer(_q, _p)) {
      throw std::domain_error(to_string(_q) + " is not in Z_(" + to_string(_p)
                              + ")");
    }
  }

  std::int64_t LocalRational::valuation() const {
    return padic_valuation(_q, _p);
  }

  bool LocalRational::is_unit() const {
    return _q != 0 && valuation() == 0;
  }

  LocalRational operator+(LocalRational const& x, LocalRational const& y) {
    require_same_prime(x.prime(), y.prime());
    return LocalRational(x.value() + y.value(), x.prime());
  }

  LocalRational operator*(LocalRational const& x, LocalRational const& y) {
    require_same_prime(x.prime(), y.prime());
    return LocalRational(x.value() * y.value(), x.prime());
  }

  ////////////////////////////////////////////////////////////////////////
  // QfracIdeal
  ////////////////////////////////////////////////////////////////////////

  QfracIdeal QfracIdeal::zero(Integer p) {
    return QfracIdeal(std::move(p), std::nullopt);
  }

  QfracIdeal QfracIdeal::power(Integer p, std::int64_t n) {
    return QfracIdeal(std::move(p), n);
  }

  QfracIdeal QfracIdeal::generated_by(Integer p, std::span<Rational const> gens) {
    std::optional<std::int64_t> n;
    for (auto const& q : gens) {
      if (q == 0) {
        continue;
      }
      std::int64_t v = padic_valuation(q, p);
      n              = n ? std::min(*n, v) : v;
    }
    return QfracIdeal(std::move(p), n);
  }

  std::int64_t QfracIdeal::exponent() const {
    if (!_n) {
      throw std::logic_error("the zero ideal has no exponent");
    }
    return *_n;
  }

  bool QfracIdeal::contains(Rational const& q) const {
    if (q == 0) {
      return true;
    }
    return _n && padic_valuation(q, _p) >= *_n;
  }

  QfracIdeal qf_add(QfracIdeal const& I, QfracIdeal const& J) {
    require_same_prime(I.prime(), J.prime());
    if (I.is_zero()) {
      return J;
    }
    if (J.is_zero()) {
      return I;
    }
    return QfracIdeal::power(I.prime(), std::min(I.exponent(), J.exponent()));
  }

  QfracIdeal qf_mul(QfracIdeal const& I, QfracIdeal const& J) {
    require_same_prime(I.prime(), J.prime());
    if (I.is_zero() || J.is_zero()) {
      return QfracIdeal::zero(I.prime());
    }
    return QfracIdeal::power(I.prime(), I.exponent() + J.exponent());
  }

  bool qf_leq(QfracIdeal const& I, QfracIdeal const& J) {
    require_same_prime(I.prime(), J.prime());
    if (I.is_zero()) {
      return true;
    }
    return !J.is_zero() && I.exponent() >= J.exponent();
  }

  std::string to_string(QfracIdeal const& I) {
    if (I.is_zero()) {
      return "0";
    }
    std::string p = to_string(I.prime());
    return p + "^" + std::to_string(I.exponent()) + "Z_(" + p + ")";
  }

  QfracSemiring::QfracSemiring(Integer p) : _p(std::move(p)) {
    if (_p < 2 || !is_prime(to_int64(_p))) {
      throw std::invalid_argument(to_string(_p) + " is not prime");
    }
  }

  std::vector<QfracIdeal> QfracSemiring::window(std::int64_t radius) const {
    std::vector<QfracIdeal> out{zero()};
    for (std::int64_t n = -radius; n <= radius; ++n) {
      out.push_back(QfracIdeal::power(_p, n));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // QuadField
  ////////////////////////////////////////////////////////////////////////

  QuadField::QuadField(std::int64_t d) : _d(d) {
    if (d == 0 || d == 1 || !is_squarefree(d)) {
      throw std::invalid_argument("d = " + std::to_string(d)
                                  + " is not a squarefree integer other than "
                                    "0 and 1");
    }
  }

  QuadNumber QuadField::inverse(QuadNumber const& x) const {
    Rational n = norm(x);
    if (n == 0) {
      throw std::domain_error("zero has no inverse");
    }
    return {x.a / n, -x.b / n};
  }

  QuadNumber QuadField::power(QuadNumber const& x, std::uint64_t k) const {
    QuadNumber out = one();
    for (std::uint64_t i = 0; i < k; ++i) {
      out = mul(out, x);
    }
    return out;
  }

  QuadNumber QuadField::parse(std::string_view text) const {
    std::string s;
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        s.push_back(c);
      }
    }
    if (s.empty()) {
      throw std::invalid_argument("empty field element");
    }
    std::vector<std::string> terms;
    std::size_t              start = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
      if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/' && s[i - 1] != '*'
          && s[i - 1] != '(') {
        terms.push_back(s.substr(start, i - start));
        start = i;
      }
    }
    terms.push_back(s.substr(start));

    std::string const root = "sqrt(" + std::to_string(_d) + ")";
    QuadNumber        out  = zero();
    for (std::string term : terms) {
      bool negative = false;
      if (!term.empty() && (term[0] == '+' || term[0] == '-')) {
        negative = term[0] == '-';
        term.erase(0, 1);
      }
      std::string unit;
      if (term.size() >= root.size()
          && term.compare(term.size() - root.size(), root.size(), root) == 0) {
        unit = root;
      } else if (_d == -1 && !term.empty() && term.back() == 'i') {
        unit = "i";
      } else if (term.find("sqrt(") != std::string::npos) {
        throw std::invalid_argument("field element '" + std::string(text)
                                    + "' uses a root other than " + root);
      }
      Rational coefficient = 1;
      if (!unit.empty()) {
        std::string head = term.substr(0, term.size() - unit.size());
        if (!head.empty()) {
          if (head.back() == '*') {
            head.pop_back();
          }
          coefficient = parse_rational(head);
        }
      } else {
        coefficient = parse_rational(term);
      }
      if (negative) {
        coefficient = -coefficient;
      }
      if (unit.empty()) {
        out.a += coefficient;
      } else {
        out.b += coefficient;
      }
    }
    return out;
  }

  std::string QuadField::format(QuadNumber const& x) const {
    std::string root = _d == -1 ? "i" : "sqrt(" + std::to_string(_d) + ")";
    if (x.b == 0) {
      return to_string(x.a);
    }
    std::string imag;
    Rational    b = x.b < 0 ? Rational(-x.b) : x.b;
    imag          = b == 1 ? root : to_string(b) + "*" + root;
    if (x.a == 0) {
      return (x.b < 0 ? "-" : "") + imag;
    }
    return to_string(x.a) + (x.b < 0 ? "-" : "+") + imag;
  }

  ////////////////////////////////////////////////////////////////////////
  // QuadLattice
  ////////////////////////////////////////////////////////////////////////

  QuadLattice QuadLattice::zero(Integer p, std::int64_t d) {
    return QuadLattice(std::move(p), d, {});
  }

  QuadLattice QuadLattice::generated_by(Integer                     p,
                                        std::int64_t                d,
                                        std::span<QuadNumber const> gens) {
    (void)QuadField(d);
    std::vector<QuadNumber> rows;
    for (auto const& g : gens) {
      if (!(g.a == 0 && g.b == 0)) {
        rows.push_back(g);
      }
    }
    if (rows.empty()) {
      return zero(std::move(p), d);
    }

    std::optional<std::size_t> pivot;
    std::int64_t               s = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].a == 0) {
        continue;
      }
      std::int64_t v = padic_valuation(rows[i].a, p);
      if (!pivot || v < s) {
        pivot = i;
        s     = v;
      }
    }

    std::vector<Rational> rest;
    QuadNumber            top;
    if (pivot) {
      Rational ps = rpow(p, s);
      Rational u  = rows[*pivot].a / ps;
      top         = {ps, rows[*pivot].b / u};
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == *pivot) {
          continue;
        }
        Rational factor = rows[i].a / ps;
        Rational y      = rows[i].b - factor * top.b;
        if (y != 0) {
          rest.push_back(y);
        }
      }
    } else {
      for (auto const& r : rows) {
        rest.push_back(r.b);
      }
    }

    std::vector<QuadNumber> basis;
    if (rest.empty()) {
      basis.push_back(top);
    } else {
      std::int64_t t = padic_valuation(rest.front(), p);
      for (auto const& y : rest) {
        t = std::min(t, padic_valuation(y, p));
      }
      if (pivot) {
        basis.push_back({top.a, canonical_residue(top.b, p, t)});
      }
      basis.push_back({0, rpow(p, t)});
    }
    return QuadLattice(std::move(p), d, std::move(basis));
  }

  QuadLattice QuadLattice::principal(Integer p, std::int64_t d, QuadNumber const& x) {
    return generated_by(std::move(p), d, std::span<QuadNumber const>(&x, 1));
  }

  QuadLattice QuadLattice::identity(Integer p, std::int64_t d) {
    return principal(std::move(p), d, QuadNumber{1, 0});
  }

  QuadLattice QuadLattice::order(Integer p, std::int64_t d) {
    std::vector<QuadNumber> gens{{1, 0}, {0, 1}};
    return generated_by(std::move(p), d, gens);
  }

  bool QuadLattice::contains(QuadNumber const& x) const {
    if (x.a == 0 && x.b == 0) {
      return true;
    }
    switch (_basis.size()) {
      case 0:
        return false;
      case 1: {
        QuadNumber const& g = _basis[0];
        Rational          alpha;
        if (g.a != 0) {
          alpha = x.a / g.a;
        } else {
          if (x.a != 0) {
            return false;
          }
          alpha = x.b / g.b;
        }
        return x.b == alpha * g.b && is_padic_integer(alpha, _p);
      }
      default: {
        Rational alpha = x.a / _basis[0].a;
        Rational beta  = (x.b - alpha * _basis[0].b) / _basis[1].b;
        return is_padic_integer(alpha, _p) && is_padic_integer(beta, _p);
      }
    }
  }

  QuadLattice lat_add(QuadLattice const& M, QuadLattice const& N) {
    require_same_lattice_params(M, N);
    std::vector<QuadNumber> gens = M.basis();
    gens.insert(gens.end(), N.basis().begin(), N.basis().end());
    return QuadLattice::generated_by(M.prime(), M.d(), gens);
  }

  QuadLattice lat_mul(QuadLattice const& M, QuadLattice const& N) {
    require_same_lattice_params(M, N);
    QuadField               F(M.d());
    std::vector<QuadNumber> gens;
    for (auto const& x : M.basis()) {
      for (auto const& y : N.basis()) {
        gens.push_back(F.mul(x, y));
      }
    }
    return QuadLattice::generated_by(M.prime(), M.d(), gens);
  }

  bool lat_leq(QuadLattice const& M, QuadLattice const& N) {
    require_same_lattice_params(M, N);
    return std::all_of(M.basis().begin(), M.basis().end(),
                       [&](QuadNumber const& x) { return N.contains(x); });
  }

  QuadLattice principal(Integer p, std::int64_t d, QuadNumber const& x) {
    return QuadLattice::principal(std::move(p), d, x);
  }

  std::string to_string(QuadLattice const& M) {
    if (M.rank() == 0) {
      return "0";
    }
    QuadField   F(M.d());
    std::string out = "<";
    for (std::size_t i = 0; i < M.rank(); ++i) {
      out += (i ? ", " : "") + F.format(M.basis()[i]);
    }
    return out + ">";
  }

  QuadLatticeSemiring::QuadLatticeSemiring(Integer p, std::int64_t d)
      : _p(std::move(p)), _d(d) {
    (void)QuadField(d);
    if (_p < 2 || !is_prime(to_int64(_p))) {
      throw std::invalid_argument(to_string(_p) + " is not prime");
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Valuations and homomorphisms
  ////////////////////////////////////////////////////////////////////////

  RationalValuation padic_valuation_on_q(Integer p) {
    OrderedGroup Z = OrderedGroup::integers();
    return {Z, [p, Z](Rational const& q) {
              if (q == 0) {
                return GammaMax::zero(Z);
              }
              return GammaMax::power(Z, Rational(-padic_valuation(q, p)));
            }};
  }

  RationalValuation trivial_valuation_on_q() {
    OrderedGroup T = OrderedGroup::trivial();
    return {T, [T](Rational const& q) {
              return q == 0 ? GammaMax::zero(T) : GammaMax::one(T);
            }};
  }

  IdealHom<QfracIdeal> hom_from_valuation(RationalValuation const& w,
                                          Integer const&           p) {
    GammaMax one = GammaMax::one(w.target);
    for (Rational r : {Rational(1), Rational(p)}) {
      if (!gm_leq(w(r), one)) {
        throw std::domain_error("valuation exceeds 1 on Z_(" + to_string(p)
                                + ") at " + to_string(r));
      }
    }
    return {w.target, [w, p](QfracIdeal const& I) {
              require_same_prime(I.prime(), p);
              if (I.is_zero()) {
                return GammaMax::zero(w.target);
              }
              return w(rpow(p, I.exponent()));
            }};
  }

  IdealHom<QuadLattice> hom_from_valuation(QuadValuation const& w,
                                           Integer const&       p,
                                           std::int64_t         d) {
    GammaMax one = GammaMax::one(w.target);
    for (Rational r : {Rational(1), Rational(p)}) {
      if (!gm_leq(w(QuadNumber{r, 0}), one)) {
        throw std::domain_error("valuation exceeds 1 on Z_(" + to_string(p)
                                + ") at " + to_string(r));
      }
    }
    return {w.target, [w, p, d](QuadLattice const& M) {
              require_same_prime(M.prime(), p);
              if (M.d() != d) {
                throw std::invalid_argument("field mismatch");
              }
              GammaMax out = GammaMax::zero(w.target);
              for (auto const& g : M.basis()) {
                out = out + w(g);
              }
              return out;
            }};
  }

  RationalValuation valuation_from_hom(IdealHom<QfracIdeal> const& f,
                                       Integer const&              p) {
    return {f.target, [f, p](Rational const& q) {
              return f(QfracIdeal::generated_by(
                  p, std::span<Rational const>(&q, 1)));
            }};
  }

  QuadValuation valuation_from_hom(IdealHom<QuadLattice> const& f,
                                   Integer const&               p,
                                   std::int64_t                 d) {
    return {f.target,
            [f, p, d](QuadNumber const& x) { return f(principal(p, d, x)); }};
  }

  namespace {

    template <class S, class Hom, class Name>
    Verdict check_hom_on(S const&                                  s,
                         Hom const&                                f,
                         std::span<typename S::value_type const>   samples,
                         Name const&                               name) {
      if (!f(s.zero()).is_zero()) {
        return Verdict::fail("f(0) != 0");
      }
      if (!f(s.one()).is_one()) {
        return Verdict::fail("f(1) != 1");
      }
      for (auto const& I : samples) {
        for (auto const& J : samples) {
          if (!(f(s.add(I, J)) == f(I) + f(J))) {
            return Verdict::fail("f(I+J) != f(I)+f(J) at I=" + name(I)
                                 + ", J=" + name(J));
          }
          if (!(f(s.mul(I, J)) == f(I) * f(J))) {
            return Verdict::fail("f(IJ) != f(I)f(J) at I=" + name(I)
                                 + ", J=" + name(J));
          }
        }
      }
      return Verdict::pass();
    }

  }  // namespace

  Verdict check_ideal_hom(IdealHom<QfracIdeal> const& f,
                          std::span<QfracIdeal const> samples) {
    if (samples.empty()) {
      return Verdict::pass();
    }
    QfracSemiring S(samples.front().prime());
    return check_hom_on(S, f, samples,
                        [](QfracIdeal const& I) { return to_string(I); });
  }

  Verdict check_ideal_hom(IdealHom<QuadLattice> const& f,
                          std::span<QuadLattice const> samples) {
    if (samples.empty()) {
      return Verdict::pass();
    }
    QuadLatticeSemiring S(samples.front().prime(), samples.front().d());
    return check_hom_on(S, f, samples,
                        [](QuadLattice const& M) { return to_string(M); });
  }

  std::function<bool(QfracIdeal const&)>
  subsemigroup_of_submodule(std::optional<QfracIdeal> const& N) {
    return [N](QfracIdeal const& M) { return !N || qf_leq(M, *N); };
  }

  std::function<bool(QuadLattice const&)>
  subsemigroup_of_submodule(std::optional<QuadLattice> const& N) {
    return [N](QuadLattice const& M) { return !N || lat_leq(M, *N); };
  }

  ////////////////////////////////////////////////////////////////////////
  // Extensions
  ////////////////////////////////////////////////////////////////////////

  ExtensionDatum extension_oracle(Integer const& p, std::int64_t d) {
    QuadField F(d);
    if (p < 2 || !is_prime(to_int64(p))) {
      throw std::invalid_argument(to_string(p) + " is not prime");
    }
    std::int64_t const pp = to_int64(p);
    if (pp == 2 && ((d % 4) + 4) % 4 == 1) {
      throw std::invalid_argument(
          "unsupported: p = 2 with d = 1 mod 4 (Z[√d] is not maximal at 2)");
    }

    ExtensionDatum datum{p, d, "", {}};
    if (pp == 2 || d % pp == 0) {
      datum.kind = "ramified";
      QuadNumber pi
          = (pp == 2 && d % 2 != 0) ? QuadNumber{1, 1} : QuadNumber{0, 1};
      datum.extensions.push_back({2, 1, pi, Rational(1, 2)});
      return datum;
    }

    std::optional<std::int64_t> root;
    for (std::int64_t t = 0; t < pp; ++t) {
      if ((((t * t - d) % pp) + pp) % pp == 0) {
        root = t;
        break;
      }
    }
    if (!root) {
      datum.kind = "inert";
      datum.extensions.push_back({1, 2, QuadNumber{Rational(p), 0}, Rational(1)});
      return datum;
    }

    datum.kind = "split";
    std::optional<QuadNumber> pi;
    std::int64_t const        bound = 4 * pp + 8;
    for (std::int64_t b = 1; b <= bound && !pi; ++b) {
      for (std::int64_t a = 0; a <= bound && !pi; ++a) {
        Rational n = F.norm({a, b});
        if (n == Rational(p) || n == -Rational(p)) {
          pi = QuadNumber{a, b};
        }
      }
    }
    if (!pi) {
      // t - √d generates the prime above p containing it once p^2 does not
      // divide its norm.
      std::int64_t t = *root;
      if ((t * t - d) % (pp * pp) == 0) {
        t += pp;
      }
      pi = QuadNumber{t, -1};
    }
    datum.extensions.push_back({1, 1, *pi, Rational(1)});
    datum.extensions.push_back({1, 1, F.conjugate(*pi), Rational(1)});
    return datum;
  }

  std::int64_t pi_adic_valuation(ExtensionDatum const& datum,
                                 Extension const&      ext,
                                 QuadNumber const&     x) {
    if (x.a == 0 && x.b == 0) {
      throw std::domain_error("v_pi(0) is undefined");
    }
    QuadField    F(datum.d);
    Integer const& p = datum.p;
    std::int64_t k   = 0;
    bool         set = false;
    for (Rational const* c : {&x.a, &x.b}) {
      if (*c != 0) {
        std::int64_t v = padic_valuation(*c, p);
        k              = set ? std::min(k, v) : v;
        set            = true;
      }
    }
    Rational   scale = rpow(p, -k);
    QuadNumber y{x.a * scale, x.b * scale};
    QuadNumber bar = F.conjugate(ext.pi);
    Rational   n   = F.norm(ext.pi);
    std::int64_t t = 0;
    while (true) {
      QuadNumber q = F.mul(y, bar);
      q            = {q.a / n, q.b / n};
      if (!p_integral(q, p)) {
        break;
      }
      y = q;
      ++t;
    }
    return k * ext.e + t;
  }

  QuadValuation extension_valuation(ExtensionDatum const& datum,
                                    Extension const&      ext) {
    OrderedGroup   Z = OrderedGroup::integers();
    OrderedGroup   Q = OrderedGroup::rationals();
    GroupEmbedding j = embed(Z, Q, ext.scale);
    return {Q, [datum, ext, Z, j](QuadNumber const& x) {
              if (x.a == 0 && x.b == 0) {
                return GammaMax::zero(j.target());
              }
              GammaMax raw = GammaMax::power(
                  Z, Rational(-pi_adic_valuation(datum, ext, x)));
              return through(j, raw);
            }};
  }

  std::vector<QuadNumber> sample_battery(Integer const& p, std::int64_t d) {
    QuadField             F(d);
    Rational              P(p);
    std::vector<Rational> coefficients{1,     -1,         2,
                                       P,     1 / P,      Rational(3, 2),
                                       Rational(2, 3),    P * P,
                                       1 / (P + 1)};
    std::vector<QuadNumber> out;
    auto push = [&](QuadNumber const& x) {
      if (std::find(out.begin(), out.end(), x) == out.end()) {
        out.push_back(x);
      }
    };
    for (auto const& a : coefficients) {
      push({a, 0});
    }
    for (auto const& b : coefficients) {
      push({0, b});
    }
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 5; ++j) {
        push({coefficients[i], coefficients[j]});
      }
    }
    // Two units summing to p, and elements whose sum cancels a leading term.
    push({P - 1, 0});
    push({-1, P});
    push({P, -1});
    for (auto const& ext : extension_oracle(p, d).extensions) {
      push(ext.pi);
      push(F.conjugate(ext.pi));
      push(F.mul(ext.pi, ext.pi));
      push(F.mul(F.inverse(ext.pi), QuadNumber{P, 0}));
    }
    return out;
  }

  std::vector<QuadLattice> random_lattices(Integer const& p,
                                           std::int64_t   d,
                                           std::size_t    count,
                                           std::uint64_t  seed,
                                           std::int64_t   radius) {
    std::mt19937_64 rng(seed);
    auto            below = [&](std::uint64_t n) { return rng() % n; };
    auto            unit  = [&]() {
      while (true) {
        Integer num = Integer(below(9) + 1);
        Integer den = Integer(below(4) + 1);
        if (num % p != 0 && den % p != 0) {
          Rational u(num, den);
          return below(2) ? u : Rational(-u);
        }
      }
    };
    auto coordinate = [&]() -> Rational {
      if (below(5) == 0) {
        return 0;
      }
      auto e = static_cast<std::int64_t>(below(2 * radius + 1)) - radius;
      return unit() * rpow(p, e);
    };
    std::vector<QuadLattice> out;
    while (out.size() < count) {
      std::size_t             n = below(3) + 1;
      std::vector<QuadNumber> gens;
      for (std::size_t i = 0; i < n; ++i) {
        gens.push_back({coordinate(), coordinate()});
      }
      QuadLattice M = QuadLattice::generated_by(p, d, gens);
      if (M.rank() > 0) {
        out.push_back(M);
      }
    }
    return out;
  }

  bool ExtensionReport::passed() const {
    if (!consistency) {
      return false;
    }
    return std::all_of(checks.begin(), checks.end(), [](auto const& c) {
      return c.valuation && c.restriction && c.hom;
    });
  }

  ExtensionReport extend_valuation(Integer const& p,
                                   std::int64_t   d,
                                   std::uint64_t  seed) {
    ExtensionReport report{extension_oracle(p, d), {}, Verdict::pass()};
    QuadField       F(d);
    auto const      battery = sample_battery(p, d);
    auto const      v       = padic_valuation_on_q(p);
    auto const      fv      = hom_from_valuation(v, p);
    GroupEmbedding  j
        = embed(OrderedGroup::integers(), OrderedGroup::rationals(), Rational(1));
    auto name = [&](QuadNumber const& x) { return F.format(x); };

    std::vector<QuadLattice> lattices{QuadLattice::identity(p, d),
                                      QuadLattice::order(p, d)};
    for (std::size_t i = 0; i < battery.size() && i < 16; ++i) {
      lattices.push_back(principal(p, d, battery[i]));
    }
    auto extra = random_lattices(p, d, 16, seed);
    lattices.insert(lattices.end(), extra.begin(), extra.end());

    std::vector<Rational> rationals;
    for (auto const& x : battery) {
      if (x.b == 0) {
        rationals.push_back(x.a);
      }
    }

    for (auto const& ext : report.datum.extensions) {
      ExtensionCheck check{ext, Verdict::pass(), Verdict::pass(),
                           Verdict::pass()};
      auto const     w = extension_valuation(report.datum, ext);
      check.valuation  = is_valuation_on(
          F, std::span<QuadNumber const>(battery), w, name);

      for (auto const& q : rationals) {
        GammaMax lhs = w(QuadNumber{q, 0});
        GammaMax rhs = through(j, v(q));
        if (!(lhs == rhs)) {
          check.restriction = Verdict::fail(
              "w(" + to_string(q) + ") = " + to_string(lhs) + " but j(v("
              + to_string(q) + ")) = " + to_string(rhs));
          break;
        }
      }

      auto const fw = hom_from_valuation(w, p, d);
      check.hom     = check_ideal_hom(fw, lattices);
      if (check.hom) {
        for (std::int64_t n = -8; n <= 8; ++n) {
          QfracIdeal  I = QfracIdeal::power(p, n);
          QuadLattice L = principal(p, d, QuadNumber{rpow(p, n), 0});
          if (!(fw(L) == through(j, fv(I)))) {
            check.hom = Verdict::fail("f_w(" + to_string(L)
                                      + ") != j(f_v(" + to_string(I) + "))");
            break;
          }
        }
      }
      report.checks.push_back(std::move(check));
    }

    int degree = 0;
    for (auto const& ext : report.datum.extensions) {
      degree += ext.e * ext.f;
    }
    if (degree != 2) {
      report.consistency
          = Verdict::fail("sum of e*f is " + std::to_string(degree));
      return report;
    }
    for (auto const& x : battery) {
      if (x.a == 0 && x.b == 0) {
        continue;
      }
      std::int64_t expected = padic_valuation(F.norm(x), p);
      std::int64_t total    = 0;
      for (auto const& ext : report.datum.extensions) {
        total += ext.f * pi_adic_valuation(report.datum, ext, x);
      }
      if (total != expected) {
        report.consistency = Verdict::fail(
            "v_p(N(" + name(x) + ")) = " + std::to_string(expected)
            + " but the extensions give " + std::to_string(total));
        return report;
      }
    }
    auto const& exts = report.datum.extensions;
    for (std::size_t a = 0; a < exts.size(); ++a) {
      for (std::size_t b = a + 1; b < exts.size(); ++b) {
        auto wa = extension_valuation(report.datum, exts[a]);
        auto wb = extension_valuation(report.datum, exts[b]);
        bool differ
            = std::any_of(battery.begin(), battery.end(),
                          [&](QuadNumber const& x) { return !(wa(x) == wb(x)); });
        if (!differ) {
          report.consistency = Verdict::fail(
              "extensions " + name(exts[a].pi) + " and " + name(exts[b].pi)
              + " agree on the battery");
          return report;
        }
      }
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Integral relations
  ////////////////////////////////////////////////////////////////////////

  std::vector<IntegralRelation>
  check_integral_relation(Integer const&              p,
                          std::int64_t                d,
                          std::span<QuadNumber const> samples,
                          std::size_t                 degree_bound) {
    QuadField                     F(d);
    QuadLattice const             one = QuadLattice::identity(p, d);
    std::vector<IntegralRelation> out;
    for (auto const& x : samples) {
      IntegralRelation        rel{x, std::nullopt, std::nullopt, std::nullopt,
                           false};
      std::vector<QuadNumber> powers{F.one()};
      QuadLattice             L = one;
      for (std::size_t k = 1; k <= degree_bound; ++k) {
        powers.push_back(F.mul(powers.back(), x));
        QuadLattice next = QuadLattice::generated_by(p, d, powers);
        if (next == L) {
          rel.module = L;
          break;
        }
        L = next;
      }
      if (rel.module) {
        if (x.b == 0) {
          rel.c0 = QuadLattice::zero(p, d);
          rel.c1 = principal(p, d, x);
        } else {
          rel.c0 = principal(p, d, QuadNumber{F.norm(x), 0});
          rel.c1 = principal(p, d, QuadNumber{F.trace(x), 0});
        }
        QuadLattice X   = principal(p, d, x);
        QuadLattice lhs = lat_mul(X, X);
        QuadLattice rhs = lat_add(*rel.c0, lat_mul(*rel.c1, X));
        rel.verified    = lat_leq(*rel.c0, one) && lat_leq(*rel.c1, one)
                       && lat_leq(lhs, rhs);
      }
      out.push_back(std::move(rel));
    }
    return out;
  }

  Verdict check_principal_invertibility(Integer const&               p,
                                        std::int64_t                 d,
                                        std::span<QuadNumber const>  samples,
                                        std::span<QuadLattice const> lattices) {
    QuadField         F(d);
    QuadLattice const one = QuadLattice::identity(p, d);
    for (auto const& x : samples) {
      if (x.a == 0 && x.b == 0) {
        continue;
      }
      QuadLattice X    = principal(p, d, x);
      QuadLattice Xinv = principal(p, d, F.inverse(x));
      if (!(lat_mul(X, Xinv) == one)) {
        return Verdict::fail("principal(" + F.format(x)
                             + ") is not invertible: product is "
                             + to_string(lat_mul(X, Xinv)));
      }
    }
    for (auto const& M : lattices) {
      QuadLattice sum = QuadLattice::zero(p, d);
      for (auto const& g : M.basis()) {
        sum = lat_add(sum, principal(p, d, g));
      }
      if (!(sum == M)) {
        return Verdict::fail(to_string(M)
                             + " is not the sum of its principal parts");
      }
      if (M.rank() == 2
          && !(M.basis()[1].a == 0
               && M.basis()[0].a == rpow(p, padic_valuation(M.basis()[0].a, p))
               && M.basis()[1].b
                      == rpow(p, padic_valuation(M.basis()[1].b, p)))) {
        return Verdict::fail(to_string(M) + " is not in triangular form");
      }
    }
    return Verdict::pass();
  }

}  // namespace charone
