// Contractions M_{R<=1}, integral and quasiintegral elements, quasiintegral
// closure and extensibility, on finite tables and on windows of Γ_max.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "charone/finite_semiring.hpp"
#include "charone/gamma_max.hpp"
#include "charone/idem_core.hpp"
#include "charone/valuation.hpp"
#include "charone/verdict.hpp"

namespace charone {

  ////////////////////////////////////////////////////////////////////////
  // Contractions
  ////////////////////////////////////////////////////////////////////////

  // x ~ y iff x <= ry and y <= sx for scalars r, s, searched in `scalars`.
  template <IdempotentSemiring S>
  bool contraction_related_on(S const&                                s,
                              std::span<typename S::value_type const> scalars,
                              typename S::value_type const&           x,
                              typename S::value_type const&           y) {
    auto below = [&](auto const& u, auto const& v) {
      for (auto const& r : scalars) {
        if (leq(s, u, s.mul(r, v))) {
          return true;
        }
      }
      return false;
    };
    return below(x, y) && below(y, x);
  }

  // b̄ <= ā iff b <= ra for a scalar r.
  template <IdempotentSemiring S>
  bool contraction_leq_on(S const&                                s,
                          std::span<typename S::value_type const> scalars,
                          typename S::value_type const&           b,
                          typename S::value_type const&           a) {
    for (auto const& r : scalars) {
      if (leq(s, b, s.mul(r, a))) {
        return true;
      }
    }
    return false;
  }

  // The contraction of a module M inside a finite algebra A over the scalars
  // R (a subsemiring of A).
  struct Contraction {
    Subset                   scalars;
    Subset                   members;
    // Class id per element; npos outside M.
    std::vector<std::size_t> class_of;
    // Smallest member of each class.
    std::vector<Element>     representative;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::size_t number_of_classes() const noexcept {
      return representative.size();
    }
  };

  Contraction contract(FiniteSemiring const& A,
                       Subset const&         scalars,
                       Subset const&         members);
  Contraction contract(FiniteSemiring const& A, Subset const& scalars);

  // b̄ <= ā.  Throws std::invalid_argument for elements outside M.
  bool contraction_leq(FiniteSemiring const& A,
                       Contraction const&    c,
                       Element               b,
                       Element               a);

  // A_{R<=1} as a semiring with the map A -> A_{R<=1}.  Throws
  // std::invalid_argument unless M is all of A.
  Quotient contraction_semiring(FiniteSemiring const& A, Contraction const& c);

  // {b : b̄ <= ā}.
  Subset contraction_down_set(FiniteSemiring const& A,
                              Contraction const&    c,
                              Element               a);

  // Γ_max over a saturated subsemiring R: R = {x <= 1} keeps every element
  // apart, R = Γ_max (or any R with an element above 1) collapses the units.
  class GammaContraction {
   public:
    // Throws std::invalid_argument unless R is {x <= 1} or everything.
    GammaContraction(GammaMaxSemifield K, DownSet R);

    GammaMaxSemifield const& semifield() const noexcept {
      return _K;
    }
    DownSet const& scalars() const noexcept {
      return _R;
    }
    // A canonical representative of x̄.
    GammaMax class_of(GammaMax const& x) const;
    // b̄ <= ā.
    bool     leq(GammaMax const& b, GammaMax const& a) const;

   private:
    GammaMaxSemifield _K;
    DownSet           _R;
  };

  // The closed-form classes against the raw relation on the window, with
  // scalars drawn from a window twice as wide.
  Verdict check_contraction_on_window(GammaContraction const& c,
                                      std::int64_t            radius);

  ////////////////////////////////////////////////////////////////////////
  // Integral elements
  ////////////////////////////////////////////////////////////////////////

  // Least saturated subsemiring containing the scalars and x.
  Subset r_angle_x(FiniteSemiring const& A, Subset const& scalars, Element x);

  template <class T>
  struct IntegralWitnessOf {
    // x^degree <= Σ coefficients[i] x^i.
    std::size_t    degree = 0;
    std::vector<T> coefficients;
  };

  using IntegralWitness      = IntegralWitnessOf<Element>;
  using GammaIntegralWitness = IntegralWitnessOf<GammaMax>;

  // Whether x^n <= c_0 + ... + c_{n-1} x^{n-1} has a solution for some n up
  // to max_degree.  The first solution in order of degree, then of
  // coefficients with c_0 varying fastest, is returned.
  std::optional<IntegralWitness> integral_witness(FiniteSemiring const& A,
                                                  Subset const&         scalars,
                                                  Element               x,
                                                  std::size_t max_degree);

  // Exact: R<x> is a finite module.  The witness comes from the inequality
  // characterization; std::logic_error is thrown if the two disagree.
  std::optional<IntegralWitness> is_integral(FiniteSemiring const& A,
                                             Subset const&         scalars,
                                             Element               x);

  std::string format_witness(FiniteSemiring const& A, IntegralWitness const& w);

  enum class SearchStatus { Found, UnknownBeyondBound };

  struct GammaIntegrality {
    SearchStatus                        status = SearchStatus::UnknownBeyondBound;
    std::optional<GammaIntegralWitness> witness;
  };

  // Bounded search with coefficients from R inside window(radius).
  GammaIntegrality is_integral(GammaMaxSemifield const& K,
                               DownSet const&           R,
                               GammaMax const&          x,
                               std::size_t              max_degree = 8,
                               std::int64_t             radius     = 8);

  ////////////////////////////////////////////////////////////////////////
  // Quasiintegral elements
  ////////////////////////////////////////////////////////////////////////

  // Some nonzero s̄ with s̄ x̄ <= s̄; returns the representative of the first
  // such class.  Throws std::domain_error unless A is simple.
  std::optional<Element> is_quasiintegral(FiniteSemiring const& A,
                                          Subset const&         scalars,
                                          Element               x);

  // A saturated R<x>-submodule of A, finite over R and faithful (nonzero,
  // with no nonzero annihilator in R<x>).  Works without simplicity.  Throws
  // std::length_error above kSubmoduleGuard elements.
  std::optional<Subset> quasiintegral_module(FiniteSemiring const& A,
                                             Subset const&         scalars,
                                             Element               x);

  // Nonzero s with sx <= rs for some scalar r, s and r from the window.
  std::optional<GammaMax> is_quasiintegral(GammaContraction const& c,
                                           GammaMax const&         x,
                                           std::int64_t            radius = 8);

  ////////////////////////////////////////////////////////////////////////
  // Closure and extensibility
  ////////////////////////////////////////////////////////////////////////

  // Elementwise.  For unitgenerated A the result is compared with the
  // intersection of the valuation subsemirings containing R; a mismatch
  // throws std::logic_error.
  Subset quasiintegral_closure(FiniteSemiring const& A, Subset const& scalars);

  // Closed form, compared on the window with the elementwise test and with
  // the intersection of the valuation subsemirings containing R.
  DownSet quasiintegral_closure(GammaContraction const& c,
                                std::int64_t            radius = 8);

  // Intersection of the valuation subsemirings of a unitgenerated A that
  // contain R.
  Subset valuation_ring_intersection(FiniteSemiring const& A,
                                     Subset const&         scalars);

  // Every quasiintegral element is integral.  Non-simple A uses the module
  // definition of quasiintegrality.
  bool is_extensible(FiniteSemiring const& A, Subset const& scalars);
  // Over the window, with the bounded integrality search.
  bool is_extensible(GammaContraction const& c, std::int64_t radius = 8);

  ////////////////////////////////////////////////////////////////////////
  // Checks
  ////////////////////////////////////////////////////////////////////////

  // x quasiintegral iff v(x̄) <= 1 for every homomorphism from A_{R<=1} into a
  // totally ordered idempotent semifield, and iff v(x) <= 1 for every such
  // homomorphism from A with v(R) <= 1.  A must be simple and A_{R<=1} small
  // enough for order enumeration.
  Verdict check_quasiintegral_valuation_criterion(FiniteSemiring const& A,
                                                  Subset const&         scalars);

  struct LemmaCheck {
    std::string name;
    std::string instance;
    Verdict     verdict;
  };

  // The contraction-lemma battery: contraction_isomorphism,
  // inclusion_injective, extensible_contraction and integers_contraction,
  // each on its finite, Z_max and S_f(Q, Z_(5)) instances.
  std::vector<LemmaCheck> check_contraction_lemmas(std::int64_t radius = 8);

  // A ⊆ B over R: x ~ y in B implies x ~ y in A.
  Verdict check_inclusion_injective(FiniteSemiring const& B,
                                    Subset const&         A,
                                    Subset const&         scalars);

}  // namespace charone
