#ifndef HMF_IDEAL_HPP
#define HMF_IDEAL_HPP

#include "hmf/field.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hmf {

/* Integer coordinates of an element of O_F in the integral basis. */
using IntVec = std::array<std::int64_t, 2>;

/* Nonzero integral ideal stored as a lattice in Hermite normal form.
 *
 * Rows of the lower triangular matrix `hnf` generate the ideal as a
 * Z-module: row 0 = (a, 0), row 1 = (b, c) means I = Z*a + Z*(b + c*omega),
 * with 0 <= b < a.  For Q only hnf[0][0] is used.  The absolute norm is the
 * product of the diagonal. */
class Ideal {
  public:
    /* Ideal generated (as an O-module) by integral elements. */
    static Ideal generated_by(NumberField const & F, std::vector<FieldElement> const & gens);
    static Ideal principal(NumberField const & F, FieldElement const & gen);
    static Ideal unit(NumberField const & F);

    int degree() const { return degree_; }
    std::int64_t norm() const;
    std::array<std::array<std::int64_t, 2>, 2> const & hnf() const { return hnf_; }

    bool contains(IntVec x) const;
    bool contains(FieldElement const & x) const;
    /* Lattice inclusion. */
    bool is_subset_of(Ideal const & other) const;
    bool is_unit_ideal() const { return norm() == 1; }
    /* Canonical representative: 0 <= x_i < hnf[i][i]. */
    IntVec reduce(IntVec x) const;

    /* Z-basis elements as field elements. */
    std::vector<FieldElement> basis(NumberField const & F) const;

    std::string to_string() const;

    friend bool operator==(Ideal const & a, Ideal const & b) = default;
    friend auto operator<=>(Ideal const & a, Ideal const & b) = default;

  private:
    Ideal(int degree, std::array<std::array<std::int64_t, 2>, 2> hnf) : degree_(degree), hnf_(hnf) {}
    friend Ideal lattice_from_vectors(int degree, std::vector<IntVec> const & vecs);

    int degree_ = 1;
    std::array<std::array<std::int64_t, 2>, 2> hnf_{};
};

Ideal lattice_from_vectors(int degree, std::vector<IntVec> const & vecs);

Ideal ideal_multiply(NumberField const & F, Ideal const & a, Ideal const & b);
Ideal ideal_sum(NumberField const & F, Ideal const & a, Ideal const & b);
Ideal ideal_power(NumberField const & F, Ideal const & a, int k);

IntVec to_intvec(FieldElement const & x);
FieldElement from_intvec(NumberField const & F, IntVec v);

/* Fractional ideal numerator / denominator with integral numerator. */
struct FractionalIdeal {
    Ideal numerator;
    std::int64_t denominator = 1;

    bool contains(NumberField const & F, FieldElement const & x) const;
};

/* O' = (1/f'(omega)) O for the monogenic basis; O for Q. */
FractionalIdeal inverse_different(NumberField const & F);
FieldElement inverse_different_generator(NumberField const & F);

/* Stable label "p:i": rational prime below, index among its factors. */
struct PrimeLabel {
    std::int64_t p = 0;
    int index = 0;

    static PrimeLabel parse(std::string_view text);
    std::string to_string() const;
    friend auto operator<=>(PrimeLabel const &, PrimeLabel const &) = default;
};

struct PrimeIdeal {
    Ideal ideal;
    std::int64_t p = 0;
    int residue_degree = 1;
    int ramification = 1;
    PrimeLabel label;
    std::optional<FieldElement> generator;

    std::int64_t norm() const { return ideal.norm(); }
};

/* Kummer-Dedekind factorisation of pO_F; factors sorted by HNF so labels
 * are stable.  Throws IndexDivisorError if p divides [O_F : Z[omega]]. */
std::vector<PrimeIdeal> factor_rational_prime(NumberField const & F, std::int64_t p);

PrimeIdeal prime_from_label(NumberField const & F, PrimeLabel label);

/* Search for a generator of a principal ideal among elements of bounded
 * size; absent when none is found (non-principal or outside the search). */
std::optional<FieldElement> find_generator(NumberField const & F, Ideal const & a);

int valuation(NumberField const & F, Ideal const & a, PrimeIdeal const & pr);
int valuation(NumberField const & F, FieldElement const & x, PrimeIdeal const & pr);

struct IdealFactor {
    PrimeIdeal prime;
    int exponent;
};
std::vector<IdealFactor> factor_ideal(NumberField const & F, Ideal const & a);

}  // namespace hmf

#endif  // HMF_IDEAL_HPP
