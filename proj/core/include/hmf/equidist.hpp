#ifndef HMF_EQUIDIST_HPP
#define HMF_EQUIDIST_HPP

#include "hmf/dataset.hpp"
#include "hmf/measures.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hmf {

/* Closed window J_p = [a, b] for the Hecke value at one prime. */
struct HeckeWindow {
    PrimeLabel prime;
    std::int64_t prime_norm = 2;
    double a = 0.0;
    double b = 0.0;
};

/* "2:0=0:1,3:0=1:2" -> windows, with norms looked up in F. */
std::vector<HeckeWindow> parse_windows(NumberField const & F, std::string_view text);

/* Weighted count of records of parity box.xi with lambda_inf in Omega_t
 * and lambda_p in J_p for every window.  Compensated summation over fixed
 * chunks, so the value does not depend on the thread count. */
double count(Dataset const & ds, Box const & box, double t, std::vector<HeckeWindow> const & J, unsigned threads = 1);

struct Prediction {
    /* 2 sqrt|D_F| vol / (2 pi)^d */
    double constant = 0.0;
    double plancherel = 0.0;
    double sato_tate = 1.0;
    double total = 0.0;
    /* V_1(Omega_t) */
    double reference = 0.0;
};

Prediction predict(NumberField const & F, double covolume, Box const & box, double t,
                   std::vector<HeckeWindow> const & J);

/* N(I) prod_{p | I} (1 + 1/Np). */
Rational level_index(NumberField const & F, Ideal const & I);

/* Inverse-CDF sampler over a fixed node table. */
class TableSampler {
  public:
    TableSampler(std::vector<double> nodes, std::vector<double> cdf);
    double operator()(double u) const;
    std::vector<double> const & nodes() const { return nodes_; }
    std::vector<double> const & cdf() const { return cdf_; }

  private:
    std::vector<double> nodes_;
    std::vector<double> cdf_;
};

/* Phi_p inverse CDF on `nodes` equally spaced points of [0, 2 sqrt Np]. */
TableSampler sato_tate_sampler(SatoTateMeasure const & mu, int nodes = 10'000);

struct SynthOptions {
    std::int64_t count = 1000;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    int table_nodes = 10'000;
};

/* M records: lambda_j from pl_{xi_j} restricted to the coordinate interval
 * of Omega_t (atoms with their relative mass), lambda_p from Phi_p, unit
 * weights.  Record i uses its own generator seeded from (seed, i). */
Dataset synthesize(NumberField const & F, Box const & box, double t, std::vector<PrimeLabel> const & primes,
                   SynthOptions const & options);

/* Sets every weight so that the total weight equals `total`. */
void calibrate_weights(Dataset & ds, double total);

struct ReportRow {
    double t;
    double count;
    double prediction;
    double ratio;
    double v1;
};

struct Report {
    std::vector<ReportRow> rows;
    double final_ratio = 0.0;
    double max_deviation = 0.0;  // max |count - prediction| / V_1(Omega_t)

    void write_csv(std::ostream & out) const;
    std::string summary_json() const;
};

Report run_report(NumberField const & F, Dataset const & ds, Box const & box, std::vector<double> const & t_grid,
                  std::vector<HeckeWindow> const & J, double covolume, unsigned threads = 1);

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace hmf

#endif  // HMF_EQUIDIST_HPP
