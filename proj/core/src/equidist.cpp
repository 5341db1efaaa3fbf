#include "hmf/equidist.hpp"

#include "hmf/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <thread>

namespace hmf {

namespace {

constexpr std::size_t chunk_size = 4096;

struct Neumaier {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x)
    {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) comp += (sum - t) + x;
        else comp += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

// Runs body(i) for i in [0, n) on up to `threads` workers, rethrowing the
// first failure.
template <class Body>
void parallel_for(std::size_t n, unsigned threads, Body body)
{
    unsigned T = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (T == 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::exception_ptr> errors(T);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < T; ++w)
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < n; i += T) body(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto & th : pool) th.join();
    for (auto const & e : errors)
        if (e) std::rethrow_exception(e);
}

double uniform01(std::mt19937_64 & gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

std::string number(double x)
{
    if (std::isnan(x)) return "nan";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// Sampler for pl_xi restricted to [a, b]: atoms by relative mass, the
// continuous part through an inverse-CDF table in u = sqrt(lambda - 1/4).
struct CoordinateSampler {
    std::vector<Atom> atoms;
    std::vector<double> cumulative;  // atoms first, then the continuous part
    double total = 0.0;
    std::optional<TableSampler> continuous;

    CoordinateSampler(int xi, double a, double b, int nodes)
    {
        SpectralMeasure mu = SpectralMeasure::plancherel(xi);
        atoms = mu.atoms(a, b);
        double acc = 0.0;
        for (auto const & at : atoms) {
            acc += at.mass;
            cumulative.push_back(acc);
        }
        double cont = mu.continuous_mass(a, b).value;
        total = acc + cont;
        if (!(total > 0)) throw InvalidArgument("box coordinate [" + number(a) + ", " + number(b) + "] has zero Plancherel measure");
        if (cont > 0) {
            double ua = std::sqrt(std::max(a, 0.25) - 0.25), ub = std::sqrt(b - 0.25);
            std::vector<double> u(static_cast<std::size_t>(nodes)), cdf(static_cast<std::size_t>(nodes));
            auto w = [xi](double x) {
                if (xi == 0) return 2.0 * x * std::tanh(std::numbers::pi * x);
                return x == 0.0 ? 2.0 / std::numbers::pi : 2.0 * x / std::tanh(std::numbers::pi * x);
            };
            double h = (ub - ua) / (nodes - 1);
            u[0] = ua;
            cdf[0] = 0.0;
            for (int i = 1; i < nodes; ++i) {
                u[i] = ua + i * h;
                cdf[i] = cdf[i - 1] + 0.5 * h * (w(u[i - 1]) + w(u[i]));
            }
            u.back() = ub;
            double top = cdf.back();
            for (auto & c : cdf) c /= top;
            cdf.back() = 1.0;
            continuous.emplace(std::move(u), std::move(cdf));
        }
    }

    double operator()(std::mt19937_64 & gen) const
    {
        double v = uniform01(gen) * total;
        for (std::size_t i = 0; i < atoms.size(); ++i)
            if (v < cumulative[i]) return atoms[i].location;
        if (!continuous) return atoms.back().location;
        double u = (*continuous)(uniform01(gen));
        return 0.25 + u * u;
    }
};

}  // namespace

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::vector<HeckeWindow> parse_windows(NumberField const & F, std::string_view text)
{
    std::vector<HeckeWindow> out;
    std::string s(text);
    std::size_t start = 0;
    while (start < s.size()) {
        std::size_t end = s.find(',', start);
        if (end == std::string::npos) end = s.size();
        std::string item = s.substr(start, end - start);
        start = end + 1;
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw InvalidArgument("window '" + item + "' must look like p:i=a:b");
        PrimeLabel label = PrimeLabel::parse(item.substr(0, eq));
        std::string range = item.substr(eq + 1);
        auto colon = range.find(':', 1);
        if (colon == std::string::npos) throw InvalidArgument("window range '" + range + "' must look like a:b");
        HeckeWindow w;
        w.prime = label;
        w.prime_norm = prime_from_label(F, label).norm();
        try {
            w.a = std::stod(range.substr(0, colon));
            w.b = std::stod(range.substr(colon + 1));
        } catch (std::exception const &) {
            throw InvalidArgument("bad window range '" + range + "'");
        }
        if (w.a > w.b) throw InvalidArgument("window range '" + range + "' is reversed");
        out.push_back(w);
    }
    return out;
}

double count(Dataset const & ds, Box const & box, double t, std::vector<HeckeWindow> const & J, unsigned threads)
{
    box.validate();
    if (ds.records.empty()) return 0.0;
    auto labels = ds.prime_labels();
    for (auto const & w : J)
        if (std::find(labels.begin(), labels.end(), w.prime) == labels.end())
            throw MissingPrimeError("dataset has no values at prime " + w.prime.to_string());

    std::size_t n = ds.records.size();
    std::size_t chunks = (n + chunk_size - 1) / chunk_size;
    std::vector<Neumaier> partial(chunks);
    parallel_for(chunks, threads, [&](std::size_t c) {
        Neumaier acc;
        std::size_t end = std::min(n, (c + 1) * chunk_size);
        for (std::size_t i = c * chunk_size; i < end; ++i) {
            auto const & r = ds.records[i];
            if (r.xi != box.xi || !box.contains(r.lambda_inf, t)) continue;
            bool inside = true;
            for (auto const & w : J) {
                auto it = r.lambda_p.find(w.prime);
                if (it == r.lambda_p.end())
                    throw MissingPrimeError("record " + std::to_string(i) + " has no value at " + w.prime.to_string());
                if (it->second < w.a || it->second > w.b) {
                    inside = false;
                    break;
                }
            }
            if (inside) acc.add(r.weight);
        }
        partial[c] = acc;
    });
    Neumaier total;
    for (auto const & p : partial) {
        total.add(p.sum);
        total.add(p.comp);
    }
    return total.value();
}

Prediction predict(NumberField const & F, double covolume, Box const & box, double t,
                   std::vector<HeckeWindow> const & J)
{
    if (!(covolume > 0)) throw InvalidArgument("covolume must be positive");
    box.validate();
    if (box.dimension() != F.degree()) throw InvalidArgument("box dimension differs from the field degree");
    Prediction p;
    double d = F.degree();
    p.constant = 2.0 * std::sqrt(std::abs(static_cast<double>(F.discriminant()))) * covolume /
                 std::pow(2.0 * std::numbers::pi, d);
    p.plancherel = box_measure(BoxMeasureKind::plancherel, box, t).value;
    p.reference = box_measure(BoxMeasureKind::reference, box, t).value;
    for (auto const & w : J) p.sato_tate *= SatoTateMeasure(w.prime, w.prime_norm).interval(w.a, w.b);
    p.total = p.constant * p.plancherel * p.sato_tate;
    return p;
}

Rational level_index(NumberField const & F, Ideal const & I)
{
    Rational out(static_cast<long>(I.norm()));
    for (auto const & f : factor_ideal(F, I)) out *= Rational(f.prime.norm() + 1, f.prime.norm());
    out.canonicalize();
    return out;
}

TableSampler::TableSampler(std::vector<double> nodes, std::vector<double> cdf)
    : nodes_(std::move(nodes)), cdf_(std::move(cdf))
{
    if (nodes_.size() < 2 || nodes_.size() != cdf_.size()) throw InvalidArgument("sampler table needs two or more nodes");
}

double TableSampler::operator()(double u) const
{
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    if (it == cdf_.begin()) return nodes_.front();
    if (it == cdf_.end()) return nodes_.back();
    std::size_t i = static_cast<std::size_t>(it - cdf_.begin());
    double c0 = cdf_[i - 1], c1 = cdf_[i];
    double f = c1 > c0 ? (u - c0) / (c1 - c0) : 0.0;
    return nodes_[i - 1] + f * (nodes_[i] - nodes_[i - 1]);
}

TableSampler sato_tate_sampler(SatoTateMeasure const & mu, int nodes)
{
    if (nodes < 2) throw InvalidArgument("sampler table needs two or more nodes");
    std::vector<double> x(static_cast<std::size_t>(nodes)), c(static_cast<std::size_t>(nodes));
    double end = mu.support_end();
    for (int i = 0; i < nodes; ++i) {
        x[i] = end * i / (nodes - 1);
        c[i] = mu.cdf(x[i]);
    }
    x.back() = end;
    c.back() = 1.0;
    return TableSampler(std::move(x), std::move(c));
}

Dataset synthesize(NumberField const & F, Box const & box, double t, std::vector<PrimeLabel> const & primes,
                   SynthOptions const & options)
{
    if (options.count < 1) throw InvalidArgument("synthetic dataset needs at least one record");
    box.validate();
    int d = box.dimension();
    if (d != F.degree()) throw InvalidArgument("box dimension differs from the field degree");

    std::vector<CoordinateSampler> coords;
    for (int j = 0; j < d; ++j) {
        auto [a, b] = box.interval(j, t);
        coords.emplace_back(box.xi[j], a, b, options.table_nodes);
    }
    std::vector<TableSampler> hecke;
    for (auto const & l : primes)
        hecke.push_back(sato_tate_sampler(SatoTateMeasure(l, prime_from_label(F, l).norm()), options.table_nodes));

    Dataset ds;
    ds.field = F.spec();
    ds.provenance["source"] = "synthetic";
    ds.provenance["seed"] = std::to_string(options.seed);
    ds.records.resize(static_cast<std::size_t>(options.count));
    parallel_for(ds.records.size(), options.threads, [&](std::size_t i) {
        std::mt19937_64 gen(splitmix64(options.seed ^ splitmix64(static_cast<std::uint64_t>(i))));
        EigenRecord r;
        r.xi = box.xi;
        for (int j = 0; j < d; ++j) r.lambda_inf.push_back(coords[j](gen));
        for (std::size_t k = 0; k < primes.size(); ++k) r.lambda_p[primes[k]] = hecke[k](uniform01(gen));
        r.weight = 1.0;
        r.src = "synth";
        ds.records[i] = std::move(r);
    });
    return ds;
}

void calibrate_weights(Dataset & ds, double total)
{
    if (ds.records.empty()) return;
    if (!(total >= 0)) throw InvalidArgument("calibration total must be nonnegative");
    double w = total / static_cast<double>(ds.records.size());
    for (auto & r : ds.records) r.weight = w;
}

void Report::write_csv(std::ostream & out) const
{
    out << "t,count,prediction,ratio,v1\n";
    for (auto const & r : rows)
        out << number(r.t) << ',' << number(r.count) << ',' << number(r.prediction) << ',' << number(r.ratio) << ','
            << number(r.v1) << '\n';
}

std::string Report::summary_json() const
{
    nlohmann::ordered_json j;
    j["rows"] = rows.size();
    j["final_ratio"] = std::isfinite(final_ratio) ? nlohmann::ordered_json(final_ratio) : nlohmann::ordered_json();
    j["max_deviation"] = max_deviation;
    return j.dump();
}

Report run_report(NumberField const & F, Dataset const & ds, Box const & box, std::vector<double> const & t_grid,
                  std::vector<HeckeWindow> const & J, double covolume, unsigned threads)
{
    Report rep;
    for (double t : t_grid) {
        ReportRow row;
        row.t = t;
        row.count = count(ds, box, t, J, threads);
        Prediction p = predict(F, covolume, box, t, J);
        row.prediction = p.total;
        row.ratio = p.total > 0 ? row.count / p.total : std::nan("");
        row.v1 = p.reference;
        if (p.reference > 0) rep.max_deviation = std::max(rep.max_deviation, std::abs(row.count - p.total) / p.reference);
        rep.rows.push_back(row);
    }
    rep.final_ratio = rep.rows.empty() ? std::nan("") : rep.rows.back().ratio;
    return rep;
}

}  // namespace hmf
