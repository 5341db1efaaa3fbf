#include "hmf/measures.hpp"

#include "hmf/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

namespace hmf {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double quarter = 0.25;
constexpr double inf = std::numeric_limits<double>::infinity();
// 4u/(e^{2 pi u} +- 1) is below 1e-30 past this point
constexpr double correction_cutoff = 12.0;

double tanh_weight(double u) { return 2.0 * u * std::tanh(pi * u); }

double coth_weight(double u)
{
    if (u == 0.0) return 2.0 / pi;
    return 2.0 * u / std::tanh(pi * u);
}

// 2u(1 - tanh(pi u)) and 2u(coth(pi u) - 1)
double even_correction(double u) { return 4.0 * u / (std::exp(2.0 * pi * u) + 1.0); }

double odd_correction(double u)
{
    if (u == 0.0) return 2.0 / pi;
    return 4.0 * u / std::expm1(2.0 * pi * u);
}

// sign(x - 1/4) sqrt|x - 1/4|, an antiderivative of |x - 1/4|^{-1/2} / 2
double v_antiderivative(double x)
{
    double d = x - quarter;
    return d < 0 ? -std::sqrt(-d) : std::sqrt(d);
}

// Real part of the npl integrand along nu = i y, including d nu = i dy.
double npl_integrand(double y, int xi)
{
    std::complex<double> const I(0.0, 1.0);
    std::complex<double> nu = I * y;
    std::complex<double> v;
    if (xi == 0) v = 2.0 * I * std::tan(pi * nu) * nu * I;
    else v = -2.0 * I * (1.0 / std::tan(pi * nu)) * nu * I;
    return v.real();
}

void check_interval(double a, double b)
{
    if (std::isnan(a) || std::isnan(b)) throw InvalidArgument("interval endpoint is NaN");
    if (!std::isfinite(a) || !std::isfinite(b))
        throw InvalidArgument("unbounded interval; use the half-line helper");
    if (a > b) throw InvalidArgument("interval [" + std::to_string(a) + ", " + std::to_string(b) + "] is reversed");
}

}  // namespace

MeasureKind parse_measure_kind(std::string_view text)
{
    if (text == "pl0") return MeasureKind::pl0;
    if (text == "pl1") return MeasureKind::pl1;
    if (text == "V10" || text == "v10") return MeasureKind::V10;
    if (text == "V11" || text == "v11") return MeasureKind::V11;
    if (text == "npl0") return MeasureKind::npl0;
    if (text == "npl1") return MeasureKind::npl1;
    throw InvalidArgument("unknown measure kind '" + std::string(text) + "'");
}

std::string to_string(MeasureKind kind)
{
    switch (kind) {
    case MeasureKind::pl0: return "pl0";
    case MeasureKind::pl1: return "pl1";
    case MeasureKind::V10: return "V10";
    case MeasureKind::V11: return "V11";
    case MeasureKind::npl0: return "npl0";
    case MeasureKind::npl1: return "npl1";
    }
    return "?";
}

SpectralMeasure SpectralMeasure::plancherel(int xi) { return SpectralMeasure(xi ? MeasureKind::pl1 : MeasureKind::pl0); }
SpectralMeasure SpectralMeasure::reference(int xi) { return SpectralMeasure(xi ? MeasureKind::V11 : MeasureKind::V10); }
SpectralMeasure SpectralMeasure::nu_plancherel(int xi)
{
    return SpectralMeasure(xi ? MeasureKind::npl1 : MeasureKind::npl0);
}

int SpectralMeasure::parity() const
{
    return (kind_ == MeasureKind::pl1 || kind_ == MeasureKind::V11 || kind_ == MeasureKind::npl1) ? 1 : 0;
}

double SpectralMeasure::density(double x) const
{
    switch (kind_) {
    case MeasureKind::pl0: return x > quarter ? std::tanh(pi * std::sqrt(x - quarter)) : 0.0;
    case MeasureKind::pl1: return x > quarter ? 1.0 / std::tanh(pi * std::sqrt(x - quarter)) : 0.0;
    case MeasureKind::V10:
        if (x >= 1.25) return 0.5;
        return x >= 0.0 ? 0.5 / std::sqrt(std::abs(x - quarter)) : 0.0;
    case MeasureKind::V11:
        if (x >= 1.25) return 0.5;
        return x > quarter ? 0.5 / std::sqrt(x - quarter) : 0.0;
    case MeasureKind::npl0: return x < 0 ? tanh_weight(-x) : 0.0;
    case MeasureKind::npl1: return x < 0 ? coth_weight(-x) : 0.0;
    }
    return 0.0;
}

std::vector<Atom> SpectralMeasure::atoms(double a, double b) const
{
    std::vector<Atom> out;
    if (a > b) return out;
    int b0 = parity() ? 3 : 2;
    if (in_nu_coordinate()) {
        if (!std::isfinite(b)) throw InvalidArgument("infinitely many atoms in an unbounded nu interval");
        for (long k = b0;; k += 2) {
            double loc = (k - 1) / 2.0;
            if (loc > b) break;
            if (loc >= a) out.push_back({loc, static_cast<double>(k - 1)});
        }
        return out;
    }
    if (!std::isfinite(a)) throw InvalidArgument("infinitely many atoms in an unbounded lambda interval");
    bool reference = kind_ == MeasureKind::V10 || kind_ == MeasureKind::V11;
    for (long k = b0;; k += 2) {
        double loc = (2.0 * k - static_cast<double>(k) * k) / 4.0;
        if (loc < a) break;
        if (loc <= b) out.push_back({loc, reference ? (k - 1) / 2.0 : static_cast<double>(k - 1)});
    }
    std::reverse(out.begin(), out.end());
    return out;
}

Estimate SpectralMeasure::continuous_mass(double a, double b) const
{
    check_interval(a, b);
    switch (kind_) {
    case MeasureKind::pl0:
    case MeasureKind::pl1: {
        double lo = std::max(a, quarter);
        if (b <= lo) return {};
        double ua = std::sqrt(lo - quarter), ub = std::sqrt(b - quarter);
        Estimate out{b - lo, 0.0};
        if (ua < correction_cutoff) {
            double hi = std::min(ub, correction_cutoff);
            Estimate c = kind_ == MeasureKind::pl0 ? hmf::integrate(even_correction, ua, hi, 1e-13)
                                                   : hmf::integrate(odd_correction, ua, hi, 1e-13);
            out.value += kind_ == MeasureKind::pl0 ? -c.value : c.value;
            out.error += c.error + 1e-30;
        }
        return out;
    }
    case MeasureKind::V10:
    case MeasureKind::V11: {
        double start = kind_ == MeasureKind::V10 ? 0.0 : quarter;
        double v = 0.0;
        double lo = std::max(a, start), hi = std::min(b, 1.25);
        if (hi > lo) v += v_antiderivative(hi) - v_antiderivative(lo);
        if (b > 1.25) v += 0.5 * (b - std::max(a, 1.25));
        return {v, 0.0};
    }
    case MeasureKind::npl0:
    case MeasureKind::npl1: {
        if (a >= 0) return {};
        double ylo = std::max(-b, 0.0), yhi = -a;
        int xi = parity();
        return hmf::integrate([xi](double y) { return npl_integrand(y, xi); }, ylo, yhi, 1e-12);
    }
    }
    return {};
}

Estimate SpectralMeasure::measure_interval(double a, double b) const
{
    Estimate out = continuous_mass(a, b);
    for (auto const & at : atoms(a, b)) out.value += at.mass;
    return out;
}

Estimate SpectralMeasure::integrate(std::function<double(double)> const & f, double a, double b) const
{
    if (std::isnan(a) || std::isnan(b) || a > b) throw InvalidArgument("invalid integration interval");
    if (!std::isfinite(a)) throw InvalidArgument("integration interval must have a finite lower end");
    Estimate out;
    switch (kind_) {
    case MeasureKind::pl0:
    case MeasureKind::pl1: {
        double lo = std::max(a, quarter);
        if (b > lo) {
            double ua = std::sqrt(lo - quarter);
            double ub = std::isfinite(b) ? std::sqrt(b - quarter) : inf;
            bool even = kind_ == MeasureKind::pl0;
            out += hmf::integrate(
                [&](double u) { return f(quarter + u * u) * (even ? tanh_weight(u) : coth_weight(u)); }, ua, ub,
                1e-10);
        }
        break;
    }
    case MeasureKind::V10:
    case MeasureKind::V11: {
        // lambda = 1/4 -+ u^2 turns |lambda - 1/4|^{-1/2} d lambda / 2 into du
        double start = kind_ == MeasureKind::V10 ? 0.0 : quarter;
        double lo = std::max(a, start), hi = std::min(b, 1.25);
        if (hi > lo && lo < quarter) {
            double top = std::min(hi, quarter);
            out += hmf::integrate([&](double u) { return f(quarter - u * u); }, std::sqrt(quarter - top),
                                  std::sqrt(quarter - lo), 1e-10);
        }
        if (hi > lo && hi > quarter) {
            double bottom = std::max(lo, quarter);
            out += hmf::integrate([&](double u) { return f(quarter + u * u); }, std::sqrt(bottom - quarter),
                                  std::sqrt(hi - quarter), 1e-10);
        }
        if (b > 1.25) {
            Estimate tail = hmf::integrate(f, std::max(a, 1.25), b, 1e-10);
            out.value += 0.5 * tail.value;
            out.error += 0.5 * tail.error;
        }
        break;
    }
    case MeasureKind::npl0:
    case MeasureKind::npl1: {
        if (!std::isfinite(b)) throw InvalidArgument("nu integration needs a bounded interval");
        if (a < 0) {
            int xi = parity();
            out += hmf::integrate([&](double y) { return f(-y) * npl_integrand(y, xi); }, std::max(-b, 0.0), -a,
                                  1e-10);
        }
        break;
    }
    }
    double top = std::isfinite(b) ? b : std::max(a, quarter);
    for (auto const & at : atoms(a, top)) out.value += at.mass * f(at.location);
    return out;
}

Estimate SpectralMeasure::integrate_half_line(std::function<double(double)> const & f, double a) const
{
    if (in_nu_coordinate()) throw InvalidArgument("half-line integration is only defined in the lambda coordinate");
    return integrate(f, a, inf);
}

bool is_discrete_series_point(double lambda, int xi)
{
    if (!(lambda <= quarter)) return false;
    double k = std::round(1.0 + std::sqrt(1.0 - 4.0 * lambda));
    if (k < 2 || static_cast<long>(k) % 2 != xi % 2) return false;
    return (2.0 * k - k * k) / 4.0 == lambda;
}

SatoTateMeasure::SatoTateMeasure(PrimeLabel prime, std::int64_t prime_norm) : prime_(prime), norm_(prime_norm)
{
    if (prime_norm < 2) throw InvalidArgument("prime norm must be at least 2");
}

double SatoTateMeasure::support_end() const { return 2.0 * std::sqrt(static_cast<double>(norm_)); }

double SatoTateMeasure::density(double lambda) const
{
    double N = static_cast<double>(norm_);
    if (lambda < 0 || lambda > support_end()) return 0.0;
    return std::sqrt(std::max(0.0, 4.0 * N - lambda * lambda)) / (pi * N);
}

double SatoTateMeasure::cdf(double x) const
{
    double N = static_cast<double>(norm_);
    double end = support_end();
    if (x <= 0) return 0.0;
    if (x >= end) return 1.0;
    double v = (0.5 * x * std::sqrt(std::max(0.0, 4.0 * N - x * x)) + 2.0 * N * std::asin(x / end)) / (pi * N);
    return std::clamp(v, 0.0, 1.0);
}

double SatoTateMeasure::interval(double a, double b) const
{
    if (std::isnan(a) || std::isnan(b)) throw InvalidArgument("interval endpoint is NaN");
    if (a > b) return 0.0;
    return cdf(b) - cdf(a);
}

double SatoTateMeasure::polynomial(Polynomial const & f) const
{
    // (2/pi) int_{-1}^{1} g(2 sqrt(N) x) sqrt(1 - x^2) dx for the even part g of f
    Polynomial g = f;
    for (std::size_t i = 1; i < g.coeffs.size(); i += 2) g.coeffs[i] = 0;
    int n = std::max(1, g.degree() + 1);
    double scale = support_end();
    double sum = 0.0;
    for (int i = 1; i <= n; ++i) {
        double th = i * pi / (n + 1);
        double s = std::sin(th);
        sum += s * s * g.eval(scale * std::cos(th));
    }
    return 2.0 * sum / (n + 1);
}

Rational SatoTateMeasure::polynomial_exact(Polynomial const & f) const
{
    Rational out = 0;
    BigInt Nm = 1;
    for (std::size_t i = 0; i < f.coeffs.size(); i += 2) {
        out += f.coeffs[i] * Rational(catalan(static_cast<unsigned>(i / 2)) * Nm);
        Nm *= static_cast<long>(norm_);
    }
    return out;
}

BigInt catalan(unsigned m)
{
    BigInt c;
    mpz_bin_uiui(c.get_mpz_t(), 2 * m, m);
    return c / (m + 1);
}

void Box::validate() const
{
    int d = dimension();
    if (d < 1) throw InvalidArgument("box needs at least one coordinate");
    for (int x : xi)
        if (x != 0 && x != 1) throw InvalidArgument("parity entries must be 0 or 1");
    if (q.empty()) throw InvalidArgument("box needs at least one growing coordinate");
    std::vector<int> seen(d, 0);
    auto mark = [&](int j) {
        if (j < 0 || j >= d) throw InvalidArgument("box coordinate " + std::to_string(j) + " out of range");
        if (seen[j]++) throw InvalidArgument("box coordinate " + std::to_string(j) + " listed twice");
    };
    for (int j : q) mark(j);
    for (auto const & f : e) {
        mark(f.index);
        if (!(f.a <= f.b)) throw InvalidArgument("fixed interval of coordinate " + std::to_string(f.index) + " is reversed");
        if (!std::isfinite(f.a) || !std::isfinite(f.b)) throw InvalidArgument("fixed interval must be bounded");
        for (double x : {f.a, f.b})
            if (is_discrete_series_point(x, xi[f.index]))
                throw InvalidArgument("endpoint " + std::to_string(x) + " of coordinate " + std::to_string(f.index) +
                                      " is a discrete series eigenvalue");
    }
    for (int j = 0; j < d; ++j)
        if (!seen[j]) throw InvalidArgument("box coordinate " + std::to_string(j) + " is neither growing nor fixed");
}

std::pair<double, double> Box::interval(int j, double t) const
{
    for (auto const & f : e)
        if (f.index == j) return {f.a, f.b};
    if (std::find(q.begin(), q.end(), j) == q.end())
        throw InvalidArgument("box coordinate " + std::to_string(j) + " not defined");
    if (t < 0) throw InvalidArgument("box growth parameter must be nonnegative");
    return {-t, t};
}

bool Box::contains(std::vector<double> const & lambda, double t) const
{
    if (static_cast<int>(lambda.size()) != dimension()) throw InvalidArgument("eigenvalue vector has wrong length");
    for (int j : q)
        if (lambda[j] < -t || lambda[j] > t) return false;
    for (auto const & f : e)
        if (lambda[f.index] < f.a || lambda[f.index] > f.b) return false;
    return true;
}

std::string Box::to_json() const
{
    nlohmann::json j;
    j["xi"] = xi;
    j["q"] = q;
    j["e"] = nlohmann::json::array();
    for (auto const & f : e) j["e"].push_back({{"index", f.index}, {"a", f.a}, {"b", f.b}});
    return j.dump();
}

Box Box::from_json(std::string_view text)
{
    Box box;
    try {
        auto j = nlohmann::json::parse(text);
        box.xi = j.at("xi").get<std::vector<int>>();
        box.q = j.at("q").get<std::vector<int>>();
        if (j.contains("e"))
            for (auto const & f : j.at("e"))
                box.e.push_back({f.at("index").get<int>(), f.at("a").get<double>(), f.at("b").get<double>()});
    } catch (nlohmann::json::exception const & ex) {
        throw InvalidArgument(std::string("bad box spec: ") + ex.what());
    }
    box.validate();
    return box;
}

Estimate box_measure(BoxMeasureKind kind, Box const & box, double t)
{
    box.validate();
    Estimate out{1.0, 0.0};
    for (int j = 0; j < box.dimension(); ++j) {
        auto [a, b] = box.interval(j, t);
        SpectralMeasure mu = kind == BoxMeasureKind::plancherel ? SpectralMeasure::plancherel(box.xi[j])
                                                                : SpectralMeasure::reference(box.xi[j]);
        Estimate m = mu.measure_interval(a, b);
        out.error = out.error * std::abs(m.value) + m.error * std::abs(out.value);
        out.value *= m.value;
    }
    return out;
}

double lambda_from_signed_nu(double s) { return s < 0 ? quarter + s * s : quarter - s * s; }

std::pair<double, double> npl_consistency(double s_a, double s_b, int xi)
{
    if (s_a > s_b) return {0.0, 0.0};
    double npl = SpectralMeasure::nu_plancherel(xi).measure_interval(s_a, s_b).value;
    double pl = SpectralMeasure::plancherel(xi)
                    .measure_interval(lambda_from_signed_nu(s_b), lambda_from_signed_nu(s_a))
                    .value;
    return {npl, pl};
}

}  // namespace hmf
