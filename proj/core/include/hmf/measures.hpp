#ifndef HMF_MEASURES_HPP
#define HMF_MEASURES_HPP

#include "hmf/hecke.hpp"
#include "hmf/ideal.hpp"
#include "hmf/quadrature.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hmf {

/* pl0, pl1: Plancherel measures in the eigenvalue lambda.
 * V10, V11: the reference measures V_{1,xi}.
 * npl0, npl1: Plancherel measures in a signed spectral coordinate s, where
 * s < 0 stands for nu = i|s| (continuous part) and s > 0 for real nu
 * (discrete series atoms at (b-1)/2).  lambda = 1/4 - nu^2 is decreasing
 * in s. */
enum class MeasureKind { pl0, pl1, V10, V11, npl0, npl1 };

MeasureKind parse_measure_kind(std::string_view text);
std::string to_string(MeasureKind kind);

struct Atom {
    double location;
    double mass;
};

class SpectralMeasure {
  public:
    explicit SpectralMeasure(MeasureKind kind) : kind_(kind) {}
    static SpectralMeasure plancherel(int xi);
    static SpectralMeasure reference(int xi);
    static SpectralMeasure nu_plancherel(int xi);

    MeasureKind kind() const { return kind_; }
    int parity() const;
    bool in_nu_coordinate() const { return kind_ == MeasureKind::npl0 || kind_ == MeasureKind::npl1; }

    /* Density of the continuous part (0 off its support). */
    double density(double x) const;
    /* Atoms with location in the closed interval [a, b], ordered by location. */
    std::vector<Atom> atoms(double a, double b) const;

    /* Mass of the continuous part on [a, b]. */
    Estimate continuous_mass(double a, double b) const;
    /* Mass of the closed interval [a, b]: continuous part plus atoms. */
    Estimate measure_interval(double a, double b) const;

    /* Integral of f over [a, b] (closed) against the measure. */
    Estimate integrate(std::function<double(double)> const & f, double a, double b) const;
    /* Integral of f over the half line [a, inf) for the lambda kinds; f must
     * decay fast enough for the continuous part to converge. */
    Estimate integrate_half_line(std::function<double(double)> const & f, double a) const;

  private:
    MeasureKind kind_;
};

/* The forbidden box endpoints: b/2 (1 - b/2) for b > 1, b = xi mod 2. */
bool is_discrete_series_point(double lambda, int xi);

/* The Sato-Tate measure Phi_p on [0, 2 sqrt N(p)]. */
class SatoTateMeasure {
  public:
    SatoTateMeasure(PrimeLabel prime, std::int64_t prime_norm);

    PrimeLabel prime() const { return prime_; }
    std::int64_t prime_norm() const { return norm_; }
    double support_end() const;

    double density(double lambda) const;
    /* Phi_p([0, x]); 0 below the support and 1 above it. */
    double cdf(double x) const;
    /* Phi_p([a, b]) with [a, b] intersected with the support. */
    double interval(double a, double b) const;

    /* Phi_p(f) for a polynomial f, evaluated on the even part of f
     * (odd monomials integrate to zero).  Gauss-Chebyshev of the second
     * kind with enough nodes to be exact for the degree. */
    double polynomial(Polynomial const & f) const;
    /* Same value in exact arithmetic: Phi(lambda^{2m}) = Catalan(m) N^m. */
    Rational polynomial_exact(Polynomial const & f) const;

  private:
    PrimeLabel prime_;
    std::int64_t norm_;
};

BigInt catalan(unsigned m);

/* Omega_t = [-t, t]^Q x prod_{j in E} [A_j, B_j] with parities xi.
 * Coordinates are 0-based. */
struct Box {
    struct Fixed {
        int index;
        double a;
        double b;
    };
    std::vector<int> xi;
    std::vector<int> q;
    std::vector<Fixed> e;

    int dimension() const { return static_cast<int>(xi.size()); }
    /* Throws InvalidArgument unless Q, E partition the coordinates, Q is
     * nonempty and no fixed endpoint is a discrete series point. */
    void validate() const;
    std::pair<double, double> interval(int j, double t) const;
    bool contains(std::vector<double> const & lambda, double t) const;

    std::string to_json() const;
    static Box from_json(std::string_view text);
};

enum class BoxMeasureKind { plancherel, reference };

/* Product over coordinates, in index order, of the parity-selected measure
 * of the coordinate interval. */
Estimate box_measure(BoxMeasureKind kind, Box const & box, double t);

/* (npl value, pl value of the image interval under lambda = 1/4 - nu^2)
 * for the signed coordinate interval [s_a, s_b]. */
std::pair<double, double> npl_consistency(double s_a, double s_b, int xi);

/* lambda = 1/4 - nu^2 in the signed coordinate. */
double lambda_from_signed_nu(double s);

}  // namespace hmf

#endif  // HMF_MEASURES_HPP
