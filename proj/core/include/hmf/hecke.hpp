#ifndef HMF_HECKE_HPP
#define HMF_HECKE_HPP

#include "hmf/ideal.hpp"
#include "hmf/rational.hpp"

#include <cstdint>
#include <vector>

namespace hmf {

/* Element of the local Hecke algebra H_p at an unramified prime, written
 * in the basis T(p^0), T(p^2), T(p^4), ...  The structure constants only
 * depend on the norm N(p). */
struct LocalHeckeElement {
    PrimeLabel prime;
    std::int64_t prime_norm = 2;
    std::vector<Rational> coeffs;

    static LocalHeckeElement unit(PrimeLabel prime, std::int64_t prime_norm);
    /* T(p^{2k}). */
    static LocalHeckeElement basis(PrimeLabel prime, std::int64_t prime_norm, int k);

    Rational coefficient(std::size_t k) const { return k < coeffs.size() ? coeffs[k] : Rational(0); }
    void trim();

    friend bool operator==(LocalHeckeElement const & a, LocalHeckeElement const & b);
    friend LocalHeckeElement operator+(LocalHeckeElement const & a, LocalHeckeElement const & b);
    friend LocalHeckeElement operator*(Rational const & s, LocalHeckeElement const & a);
};

/* Even Laurent polynomial invariant under X -> 1/X, stored as the
 * coefficients of 1, X^2 + X^-2, X^4 + X^-4, ... */
struct SymLaurentPoly {
    std::vector<Rational> coeffs;

    Rational coefficient(std::size_t k) const { return k < coeffs.size() ? coeffs[k] : Rational(0); }
    void trim();
    friend bool operator==(SymLaurentPoly const & a, SymLaurentPoly const & b);
};

/* Dense polynomial in one variable, coefficient i multiplies x^i. */
struct Polynomial {
    std::vector<Rational> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    double eval(double x) const;
    Rational eval(Rational const & x) const;
    bool is_even() const;
};

/* Product in H_p via T(p^{2k}) * T(p^2) = T(p^{2k+2}) + N T(p^{2k}) + N^2 T(p^{2k-2}). */
LocalHeckeElement multiply(LocalHeckeElement const & a, LocalHeckeElement const & b);

/* T(p^{2k}) -> N^k * sum_{j=0}^{2k} X^{2k-2j}. */
SymLaurentPoly to_sym_laurent(LocalHeckeElement const & a);
LocalHeckeElement from_sym_laurent(SymLaurentPoly const & f, PrimeLabel prime, std::int64_t prime_norm);

SymLaurentPoly laurent_multiply(SymLaurentPoly const & a, SymLaurentPoly const & b);

/* The even polynomial S_{p,2k} of degree 2k with
 * S(sqrt(N) (X + 1/X)) = N^k sum_{j=0}^{2k} X^{2(k-j)}. */
Polynomial s_poly(std::int64_t prime_norm, int k);

}  // namespace hmf

#endif  // HMF_HECKE_HPP
