#ifndef HMF_FIELD_HPP
#define HMF_FIELD_HPP

#include "hmf/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hmf {

/* An element of F written in the integral basis (1, omega) -- or (1) for
 * the rationals.  Coordinates are exact rationals; the element carries no
 * reference to its field, so ring operations go through NumberField. */
struct FieldElement {
    std::vector<Rational> coords;

    FieldElement() = default;
    explicit FieldElement(std::vector<Rational> c) : coords(std::move(c)) {}

    std::size_t degree() const { return coords.size(); }
    Rational const & operator[](std::size_t i) const { return coords[i]; }
    Rational & operator[](std::size_t i) { return coords[i]; }

    bool is_zero() const;
    bool is_integral() const;

    friend bool operator==(FieldElement const & a, FieldElement const & b);
    friend FieldElement operator+(FieldElement const & a, FieldElement const & b);
    friend FieldElement operator-(FieldElement const & a, FieldElement const & b);
    friend FieldElement operator-(FieldElement const & a);
    friend FieldElement operator*(Rational const & s, FieldElement const & a);
};

/* Totally real field of degree 1 or 2: Q, or Q(sqrt m) with m > 1
 * squarefree.  The integral basis is (1, omega) where omega is a root of
 * x^2 - t x - n, namely omega = (1+sqrt m)/2 when m = 1 mod 4 and
 * omega = sqrt m otherwise.  Embedding 0 sends sqrt m to the positive root. */
class NumberField {
  public:
    static NumberField rational();
    static NumberField real_quadratic(std::int64_t m);
    /* Accepts "Q", "rational", "Q(sqrt m)", "Q(sqrt(m))", "Q(sqrtm)". */
    static NumberField parse(std::string_view spec);

    int degree() const { return degree_; }
    std::int64_t radicand() const { return m_; }
    std::int64_t discriminant() const { return disc_; }
    /* omega^2 = omega_trace * omega + omega_shift (quadratic case). */
    std::int64_t omega_trace() const { return t_; }
    std::int64_t omega_shift() const { return n_; }
    /* Defining polynomial of omega, coefficients from the constant term up. */
    std::vector<std::int64_t> defining_polynomial() const;

    std::string spec() const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement omega() const;
    FieldElement from_integer(std::int64_t a) const;
    FieldElement from_rational(Rational const & q) const;
    FieldElement make(Rational const & c0, Rational const & c1 = 0) const;
    /* "a", "a/b", "x0,x1" (basis coordinates) or "x0+x1*w". */
    FieldElement parse_element(std::string_view text) const;
    std::string format(FieldElement const & x) const;

    FieldElement mul(FieldElement const & a, FieldElement const & b) const;
    FieldElement conjugate(FieldElement const & a) const;
    FieldElement inverse(FieldElement const & a) const;
    FieldElement div(FieldElement const & a, FieldElement const & b) const;
    FieldElement pow(FieldElement const & a, std::int64_t k) const;

    Rational trace(FieldElement const & x) const;
    Rational norm(FieldElement const & x) const;
    std::vector<double> embed(FieldElement const & x) const;
    /* Real images of omega under the embeddings. */
    std::vector<double> omega_images() const;

    /* f'(omega) for the defining polynomial; 1 for Q. */
    FieldElement different_generator() const;

    bool operator==(NumberField const & o) const { return degree_ == o.degree_ && m_ == o.m_; }

  private:
    NumberField(int degree, std::int64_t m, std::int64_t disc, std::int64_t t, std::int64_t n)
        : degree_(degree), m_(m), disc_(disc), t_(t), n_(n) {}

    void check(FieldElement const & x) const;

    int degree_;
    std::int64_t m_;
    std::int64_t disc_;
    std::int64_t t_;
    std::int64_t n_;
};

}  // namespace hmf

#endif  // HMF_FIELD_HPP
