// Finitely generated Z_(p)-submodules of Q and of Q(√d) as idempotent
// semirings, their homomorphisms into Γ_max, and extensions of the p-adic
// valuation to Q(√d).

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "charone/gamma_max.hpp"
#include "charone/numeric.hpp"
#include "charone/ordered_group.hpp"
#include "charone/verdict.hpp"

namespace charone {

  // An element of Z_(p).
  class LocalRational {
   public:
    // Throws std::domain_error when q is not p-integral.
    LocalRational(Rational q, Integer p);

    Rational const& value() const noexcept {
      return _q;
    }
    Integer const& prime() const noexcept {
      return _p;
    }
    // v_p; throws on zero.
    std::int64_t valuation() const;
    bool         is_unit() const;

    bool operator==(LocalRational const&) const = default;

   private:
    Rational _q;
    Integer  _p;
  };

  LocalRational operator+(LocalRational const& x, LocalRational const& y);
  LocalRational operator*(LocalRational const& x, LocalRational const& y);

  ////////////////////////////////////////////////////////////////////////
  // S_f(Q, Z_(p))
  ////////////////////////////////////////////////////////////////////////

  // 0 or p^n Z_(p).
  class QfracIdeal {
   public:
    static QfracIdeal zero(Integer p);
    static QfracIdeal power(Integer p, std::int64_t n);
    static QfracIdeal generated_by(Integer p, std::span<Rational const> gens);

    Integer const& prime() const noexcept {
      return _p;
    }
    bool is_zero() const noexcept {
      return !_n.has_value();
    }
    // Throws std::logic_error on zero.
    std::int64_t exponent() const;
    bool         contains(Rational const& q) const;

    bool operator==(QfracIdeal const&) const = default;

   private:
    QfracIdeal(Integer p, std::optional<std::int64_t> n)
        : _p(std::move(p)), _n(n) {}

    Integer                     _p;
    std::optional<std::int64_t> _n;
  };

  // Throw std::invalid_argument on a prime mismatch.
  QfracIdeal qf_add(QfracIdeal const& I, QfracIdeal const& J);
  QfracIdeal qf_mul(QfracIdeal const& I, QfracIdeal const& J);
  // I ⊆ J.
  bool       qf_leq(QfracIdeal const& I, QfracIdeal const& J);

  std::string to_string(QfracIdeal const& I);

  class QfracSemiring {
   public:
    using value_type = QfracIdeal;

    explicit QfracSemiring(Integer p);

    Integer const& prime() const noexcept {
      return _p;
    }
    QfracIdeal zero() const {
      return QfracIdeal::zero(_p);
    }
    QfracIdeal one() const {
      return QfracIdeal::power(_p, 0);
    }
    QfracIdeal add(QfracIdeal const& I, QfracIdeal const& J) const {
      return qf_add(I, J);
    }
    QfracIdeal mul(QfracIdeal const& I, QfracIdeal const& J) const {
      return qf_mul(I, J);
    }

    // 0 and p^n Z_(p) for |n| <= radius.
    std::vector<QfracIdeal> window(std::int64_t radius) const;

   private:
    Integer _p;
  };

  ////////////////////////////////////////////////////////////////////////
  // Q(√d)
  ////////////////////////////////////////////////////////////////////////

  // a + b√d.
  struct QuadNumber {
    Rational a;
    Rational b;

    bool operator==(QuadNumber const&) const = default;
  };

  class QuadField {
   public:
    using value_type = QuadNumber;

    // d squarefree, d != 0, 1.
    explicit QuadField(std::int64_t d);

    std::int64_t d() const noexcept {
      return _d;
    }

    QuadNumber zero() const {
      return {0, 0};
    }
    QuadNumber one() const {
      return {1, 0};
    }
    QuadNumber add(QuadNumber const& x, QuadNumber const& y) const {
      return {x.a + y.a, x.b + y.b};
    }
    QuadNumber sub(QuadNumber const& x, QuadNumber const& y) const {
      return {x.a - y.a, x.b - y.b};
    }
    QuadNumber mul(QuadNumber const& x, QuadNumber const& y) const {
      return {x.a * y.a + _d * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    QuadNumber conjugate(QuadNumber const& x) const {
      return {x.a, -x.b};
    }
    Rational norm(QuadNumber const& x) const {
      return x.a * x.a - _d * x.b * x.b;
    }
    Rational trace(QuadNumber const& x) const {
      return 2 * x.a;
    }
    // Throws std::domain_error on zero.
    QuadNumber inverse(QuadNumber const& x) const;
    QuadNumber power(QuadNumber const& x, std::uint64_t k) const;

    // "a/b+c/e*sqrt(d)", "sqrt(d)", "-3/2", "i" when d = -1.
    QuadNumber  parse(std::string_view text) const;
    std::string format(QuadNumber const& x) const;

   private:
    std::int64_t _d;
  };

  ////////////////////////////////////////////////////////////////////////
  // S_f(Q(√d), Z_(p))
  ////////////////////////////////////////////////////////////////////////

  // A finitely generated Z_(p)-submodule of Q(√d) in canonical form.  Write
  // elements as vectors (a, b).  Rank 2: basis (p^s, c), (0, p^t) with c the
  // canonical residue modulo p^t.  Rank 1: (p^s, c) or (0, p^t).
  class QuadLattice {
   public:
    static QuadLattice zero(Integer p, std::int64_t d);
    static QuadLattice generated_by(Integer                     p,
                                    std::int64_t                d,
                                    std::span<QuadNumber const> gens);
    static QuadLattice principal(Integer p, std::int64_t d, QuadNumber const& x);
    // Z_(p) · 1, the multiplicative identity.
    static QuadLattice identity(Integer p, std::int64_t d);
    // Z_(p)[√d].
    static QuadLattice order(Integer p, std::int64_t d);

    Integer const& prime() const noexcept {
      return _p;
    }
    std::int64_t d() const noexcept {
      return _d;
    }
    std::size_t rank() const noexcept {
      return _basis.size();
    }
    std::vector<QuadNumber> const& basis() const noexcept {
      return _basis;
    }

    bool contains(QuadNumber const& x) const;

    bool operator==(QuadLattice const&) const = default;

   private:
    QuadLattice(Integer p, std::int64_t d, std::vector<QuadNumber> basis)
        : _p(std::move(p)), _d(d), _basis(std::move(basis)) {}

    Integer                 _p;
    std::int64_t            _d;
    std::vector<QuadNumber> _basis;
  };

  // Throw std::invalid_argument on a parameter mismatch.
  QuadLattice lat_add(QuadLattice const& M, QuadLattice const& N);
  QuadLattice lat_mul(QuadLattice const& M, QuadLattice const& N);
  // M ⊆ N.
  bool        lat_leq(QuadLattice const& M, QuadLattice const& N);
  QuadLattice principal(Integer p, std::int64_t d, QuadNumber const& x);

  std::string to_string(QuadLattice const& M);

  class QuadLatticeSemiring {
   public:
    using value_type = QuadLattice;

    QuadLatticeSemiring(Integer p, std::int64_t d);

    Integer const& prime() const noexcept {
      return _p;
    }
    std::int64_t d() const noexcept {
      return _d;
    }
    QuadLattice zero() const {
      return QuadLattice::zero(_p, _d);
    }
    QuadLattice one() const {
      return QuadLattice::identity(_p, _d);
    }
    QuadLattice add(QuadLattice const& M, QuadLattice const& N) const {
      return lat_add(M, N);
    }
    QuadLattice mul(QuadLattice const& M, QuadLattice const& N) const {
      return lat_mul(M, N);
    }

   private:
    Integer      _p;
    std::int64_t _d;
  };

  ////////////////////////////////////////////////////////////////////////
  // Valuations and homomorphisms
  ////////////////////////////////////////////////////////////////////////

  template <class T>
  struct FieldValuation {
    OrderedGroup                         target = OrderedGroup::trivial();
    std::function<GammaMax(T const&)>    map;

    GammaMax operator()(T const& x) const {
      return map(x);
    }
  };

  using RationalValuation = FieldValuation<Rational>;
  using QuadValuation     = FieldValuation<QuadNumber>;

  // x -> γ^(-v_p(x)), so that Z_(p) = {x : w(x) <= 1}.
  RationalValuation padic_valuation_on_q(Integer p);
  // Every nonzero element to 1.
  RationalValuation trivial_valuation_on_q();

  template <class Ideal>
  struct IdealHom {
    OrderedGroup                          target = OrderedGroup::trivial();
    std::function<GammaMax(Ideal const&)> map;

    GammaMax operator()(Ideal const& I) const {
      return map(I);
    }
  };

  // N -> max of w over a generating set.  Throws std::domain_error when w
  // exceeds 1 somewhere on Z_(p) (checked on 1 and p).
  IdealHom<QfracIdeal>  hom_from_valuation(RationalValuation const& w,
                                           Integer const&           p);
  IdealHom<QuadLattice> hom_from_valuation(QuadValuation const& w,
                                           Integer const&       p,
                                           std::int64_t         d);

  // x -> f(x Z_(p)).
  RationalValuation valuation_from_hom(IdealHom<QfracIdeal> const& f,
                                       Integer const&              p);
  QuadValuation     valuation_from_hom(IdealHom<QuadLattice> const& f,
                                       Integer const&               p,
                                       std::int64_t                 d);

  // Additivity and multiplicativity on every pair of samples.
  Verdict check_ideal_hom(IdealHom<QfracIdeal> const&   f,
                          std::span<QfracIdeal const>   samples);
  Verdict check_ideal_hom(IdealHom<QuadLattice> const&  f,
                          std::span<QuadLattice const>  samples);

  // The saturated subsemigroup {N' : N' ⊆ N}; nullopt stands for the whole
  // field.
  std::function<bool(QfracIdeal const&)>
  subsemigroup_of_submodule(std::optional<QfracIdeal> const& N);
  std::function<bool(QuadLattice const&)>
  subsemigroup_of_submodule(std::optional<QuadLattice> const& N);

  ////////////////////////////////////////////////////////////////////////
  // Extensions of the p-adic valuation to Q(√d)
  ////////////////////////////////////////////////////////////////////////

  struct Extension {
    int        e = 1;
    int        f = 1;
    // A uniformizer: v_π(π) = 1, and π is a unit at the other prime above p.
    QuadNumber pi;
    // The value group Z of v_π embeds into Q with scale 1/e.
    Rational   scale;
  };

  struct ExtensionDatum {
    Integer                p;
    std::int64_t           d = 0;
    // "split", "inert" or "ramified".
    std::string            kind;
    std::vector<Extension> extensions;
  };

  // Throws std::invalid_argument for p not prime, d not squarefree, or p = 2
  // with d = 1 mod 4.
  ExtensionDatum extension_oracle(Integer const& p, std::int64_t d);

  // v_π(x); throws std::domain_error on zero.
  std::int64_t  pi_adic_valuation(ExtensionDatum const& datum,
                                  Extension const&      ext,
                                  QuadNumber const&     x);
  // x -> γ^(-v_π(x)/e) in Q_max.
  QuadValuation extension_valuation(ExtensionDatum const& datum,
                                    Extension const&      ext);

  // Units, prime powers, mixed denominators and additive degeneracies.
  std::vector<QuadNumber> sample_battery(Integer const& p, std::int64_t d);

  // Random nonzero lattices with generator exponents in [-radius, radius].
  std::vector<QuadLattice> random_lattices(Integer const& p,
                                           std::int64_t   d,
                                           std::size_t    count,
                                           std::uint64_t  seed,
                                           std::int64_t   radius = 6);

  struct ExtensionCheck {
    Extension extension;
    // w is a valuation on the battery.
    Verdict   valuation;
    // w restricted to Q equals j∘v.
    Verdict   restriction;
    // hom_from_valuation(w) is a semiring homomorphism extending
    // hom_from_valuation(v).
    Verdict   hom;
  };

  struct ExtensionReport {
    ExtensionDatum              datum;
    std::vector<ExtensionCheck> checks;
    // Σ e·f = 2, v_p(N(x)) agrees with the extensions, and distinct
    // extensions differ on the battery.
    Verdict                     consistency;

    bool passed() const;
  };

  ExtensionReport extend_valuation(Integer const& p,
                                   std::int64_t   d,
                                   std::uint64_t  seed = 0);

  ////////////////////////////////////////////////////////////////////////
  // Integral relations and principal invertibility
  ////////////////////////////////////////////////////////////////////////

  struct IntegralRelation {
    QuadNumber                 x;
    // Z_(p)[x] is a lattice stable under x; empty when none was found.
    std::optional<QuadLattice> module;
    // X^2 <= c0 + c1 X with c_i in S_f(Z_(p), Z_(p)).
    std::optional<QuadLattice> c0;
    std::optional<QuadLattice> c1;
    bool                       verified = false;
  };

  // The degree bound limits the search for a stable module Z_(p)[x].
  std::vector<IntegralRelation>
  check_integral_relation(Integer const&              p,
                          std::int64_t                d,
                          std::span<QuadNumber const> samples,
                          std::size_t                 degree_bound = 8);

  // principal(x) · principal(1/x) = identity for every nonzero sample, and
  // every lattice of `lattices` is the sum of the principal lattices of its
  // basis.
  Verdict check_principal_invertibility(Integer const&               p,
                                        std::int64_t                 d,
                                        std::span<QuadNumber const>  samples,
                                        std::span<QuadLattice const> lattices);

}  // namespace charone
