#include "hmf/cli.hpp"

#include "hmf/character.hpp"
#include "hmf/cosets.hpp"
#include "hmf/dataset.hpp"
#include "hmf/equidist.hpp"
#include "hmf/errors.hpp"
#include "hmf/global_hecke.hpp"
#include "hmf/hecke.hpp"
#include "hmf/kloosterman.hpp"
#include "hmf/measures.hpp"
#include "hmf/satake.hpp"
#include "hmf/tau.hpp"
#include "hmf/units.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

namespace hmf::cli {

namespace {

using json = nlohmann::ordered_json;

struct Globals {
    std::string field = "Q";
    std::string level = "1";
    std::string out;
    std::string format;
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

std::string read_file(std::string const & path)
{
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool ends_with(std::string const & s, std::string const & suffix)
{
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::pair<double, double> parse_interval(std::string const & text)
{
    auto colon = text.find(':', 1);
    if (colon == std::string::npos) throw InvalidArgument("interval '" + text + "' must look like a:b");
    try {
        std::size_t p1 = 0, p2 = 0;
        std::string a = text.substr(0, colon), b = text.substr(colon + 1);
        double x = std::stod(a, &p1), y = std::stod(b, &p2);
        if (p1 != a.size() || p2 != b.size()) throw std::invalid_argument(text);
        return {x, y};
    } catch (std::exception const &) {
        throw InvalidArgument("interval '" + text + "' must look like a:b");
    }
}

std::vector<std::string> split(std::string const & text, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == sep) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

json exact(Rational const & q)
{
    if (q.get_den() == 1 && mpz_fits_slong_p(q.get_num_mpz_t())) return q.get_num().get_si();
    return q.get_str();
}

std::string csv_number(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Box load_box(std::string const & spec, std::optional<double> & t)
{
    std::string text = !spec.empty() && spec.front() == '{' ? spec : read_file(spec);
    Box box = Box::from_json(text);
    if (!t) {
        auto j = nlohmann::json::parse(text);
        if (j.contains("t")) t = j.at("t").get<double>();
    }
    return box;
}

struct Context {
    Globals const & g;

    NumberField field() const { return NumberField::parse(g.field); }

    Ideal level(NumberField const & F) const
    {
        FieldElement x = F.parse_element(g.level);
        if (x.is_zero() || !x.is_integral()) throw InvalidArgument("level must be a nonzero integral element");
        return Ideal::principal(F, x);
    }

    DirichletCharacter character(NumberField const & F, std::string const & path) const
    {
        Ideal I = level(F);
        if (path.empty()) return DirichletCharacter::trivial(F, I);
        return DirichletCharacter::from_json(F, I, read_file(path));
    }

    bool csv(bool default_csv = false) const
    {
        if (g.format == "csv") return true;
        if (g.format == "json") return false;
        if (ends_with(g.out, ".csv")) return true;
        return default_csv;
    }
};

void emit(std::ostream & out, json const & j) { out << j.dump() << '\n'; }

// ---- field --------------------------------------------------------------

struct FieldArgs {
    std::int64_t p = 2;
    std::string x;
    std::string modulus;
};

void add_field_commands(CLI::App & app, Context & ctx, std::ostream & out, FieldArgs & a)
{
    auto * field = app.add_subcommand("field", "Number field arithmetic");
    field->require_subcommand(1);

    field->add_subcommand("info", "Discriminant, basis, units and inverse different")->callback([&ctx, &out] {
        NumberField F = ctx.field();
        json j;
        j["field"] = F.spec();
        j["degree"] = F.degree();
        j["discriminant"] = F.discriminant();
        j["polynomial"] = F.defining_polynomial();
        j["omega_images"] = F.omega_images();
        UnitGroupData U = unit_group(F);
        j["fundamental_unit"] = U.fundamental ? json(F.format(*U.fundamental)) : json();
        j["fundamental_unit_norm"] = exact(U.fundamental_norm);
        j["inverse_different_generator"] = F.format(inverse_different_generator(F));
        emit(out, j);
    });

    auto * factor = field->add_subcommand("factor", "Prime ideals above a rational prime");
    factor->add_option("--p", a.p, "Rational prime")->required();
    factor->callback([&ctx, &out, &a] {
        NumberField F = ctx.field();
        json arr = json::array();
        for (auto const & pr : factor_rational_prime(F, a.p)) {
            json j;
            j["label"] = pr.label.to_string();
            j["norm"] = pr.norm();
            j["e"] = pr.ramification;
            j["f"] = pr.residue_degree;
            j["hnf"] = pr.ideal.hnf();
            j["generator"] = pr.generator ? json(F.format(*pr.generator)) : json();
            arr.push_back(j);
        }
        emit(out, arr);
    });

    auto * element = field->add_subcommand("element", "Trace, norm and embeddings of an element");
    element->add_option("--x", a.x, "Element: a, a/b, x0,x1 or x0+x1*w")->required();
    element->callback([&ctx, &out, &a] {
        NumberField F = ctx.field();
        FieldElement e = F.parse_element(a.x);
        json j;
        j["element"] = F.format(e);
        j["trace"] = exact(F.trace(e));
        j["norm"] = exact(F.norm(e));
        j["embeddings"] = F.embed(e);
        emit(out, j);
    });

    auto * residue = field->add_subcommand("residue", "Size and unit count of O/c");
    residue->add_option("--modulus", a.modulus, "Generator of c")->required();
    residue->callback([&ctx, &out, &a] {
        NumberField F = ctx.field();
        FieldElement g = F.parse_element(a.modulus);
        if (g.is_zero() || !g.is_integral()) throw InvalidArgument("modulus must be a nonzero integral element");
        ResidueRing R(F, Ideal::principal(F, g));
        json j;
        j["modulus"] = R.modulus().to_string();
        j["size"] = R.size();
        j["units"] = R.unit_count();
        emit(out, j);
    });
}

// ---- hecke --------------------------------------------------------------

struct HeckeArgs {
    std::int64_t p = 2;
    int k = 1;
    int m = 1;
    std::string label;
    double nu = 0.0;
    bool imag = false;
    double lambda = 0.0;
    std::string op;
    std::string values;
};

void add_hecke_commands(CLI::App & app, Context & ctx, std::ostream & out, HeckeArgs & h)
{
    auto * hecke = app.add_subcommand("hecke", "Local Hecke algebra and eigenvalue parametrization");
    hecke->require_subcommand(1);

    auto * verify = hecke->add_subcommand("verify-relation", "Brute-force coset convolution T(p^2k) * T(p^2m) over Q");
    verify->add_option("--p", h.p, "Rational prime")->required();
    verify->add_option("--k", h.k, "First exponent")->required();
    verify->add_option("--m", h.m, "Second exponent")->required();
    verify->callback([&ctx, &out, &h] {
        ConvolutionResult r = brute_force_convolution(h.p, h.k, h.m, ctx.g.threads);
        PrimeLabel label{h.p, 0};
        LocalHeckeElement algebraic =
            multiply(LocalHeckeElement::basis(label, h.p, h.k), LocalHeckeElement::basis(label, h.p, h.m));
        if (!(algebraic == r.product))
            throw IdentityFailure("coset convolution disagrees with the Hecke relation");
        json j;
        for (std::size_t n = r.product.coeffs.size(); n-- > 0;) {
            if (r.product.coeffs[n] == 0) continue;
            BigInt key = ipow(BigInt(static_cast<long>(h.p)), static_cast<unsigned>(2 * n));
            j["T" + key.get_str()] = exact(r.product.coeffs[n]);
        }
        emit(out, j);
    });

    auto * spoly = hecke->add_subcommand("spoly", "Coefficients of S_{p,2k}, constant term first");
    spoly->add_option("--p", h.label, "Prime label p:i")->required();
    spoly->add_option("--k", h.k, "Half degree")->required()->check(CLI::NonNegativeNumber);
    spoly->callback([&ctx, &out, &h] {
        NumberField F = ctx.field();
        PrimeIdeal pr = prime_from_label(F, PrimeLabel::parse(h.label));
        Polynomial s = s_poly(pr.norm(), h.k);
        json j;
        j["prime"] = pr.label.to_string();
        j["norm"] = pr.norm();
        j["k"] = h.k;
        json coeffs = json::array();
        for (auto const & c : s.coeffs) coeffs.push_back(exact(c));
        j["coefficients"] = coeffs;
        emit(out, j);
    });

    auto * lam = hecke->add_subcommand("lambda", "Hecke value lambda_p from nu_p");
    lam->add_option("--p", h.label, "Prime label p:i")->required();
    lam->add_option("--nu", h.nu, "nu (real) or theta with --imag")->required();
    lam->add_flag("--imag", h.imag, "nu = i * theta");
    lam->callback([&ctx, &out, &h] {
        NumberField F = ctx.field();
        PrimeIdeal pr = prime_from_label(F, PrimeLabel::parse(h.label));
        SatakeParam nu = h.imag ? SatakeParam::imag(pr.label, pr.norm(), h.nu) : SatakeParam::real(pr.label, pr.norm(), h.nu);
        json j;
        j["prime"] = pr.label.to_string();
        j["lambda"] = lambda_from_nu(nu).lambda;
        emit(out, j);
    });

    auto * nu = hecke->add_subcommand("nu", "Canonical nu_p from lambda_p");
    nu->add_option("--p", h.label, "Prime label p:i")->required();
    nu->add_option("--lambda", h.lambda, "lambda_p in [0, 1 + Np]")->required();
    nu->callback([&ctx, &out, &h] {
        NumberField F = ctx.field();
        PrimeIdeal pr = prime_from_label(F, PrimeLabel::parse(h.label));
        SatakeParam s = nu_from_lambda({pr.label, pr.norm(), h.lambda});
        json j;
        j["prime"] = pr.label.to_string();
        j["imaginary"] = s.imaginary;
        j["value"] = s.value;
        emit(out, j);
    });

    auto * eig = hecke->add_subcommand("eigenvalue", "Eigenvalue of T(a^2) from Hecke values");
    eig->add_option("--op", h.op, "Exponents, e.g. 2:0=1,3:0=1")->required();
    eig->add_option("--lambda", h.values, "Hecke values, e.g. 2:0=3/4,3:0=252/243")->required();
    eig->callback([&ctx, &out, &h] {
        NumberField F = ctx.field();
        GlobalHeckeOperator op;
        for (auto const & item : split(h.op, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos) throw InvalidArgument("operator entry '" + item + "' must look like p:i=k");
            PrimeLabel l = PrimeLabel::parse(item.substr(0, eq));
            op.add(l, prime_from_label(F, l).norm(), std::stoi(item.substr(eq + 1)));
        }
        std::map<PrimeLabel, Rational> lambda;
        for (auto const & item : split(h.values, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos) throw InvalidArgument("value entry '" + item + "' must look like p:i=x");
            lambda[PrimeLabel::parse(item.substr(0, eq))] = parse_rational(item.substr(eq + 1));
        }
        Rational v = global_eigenvalue(op, lambda);
        json j;
        j["exact"] = v.get_str();
        j["value"] = v.get_d();
        j["bound"] = op.coset_bound();
        emit(out, j);
    });
}

// ---- measure ------------------------------------------------------------

struct MeasureArgs {
    std::string kind = "pl0";
    std::string interval;
    std::string label;
    int spoly = -1;
    int moment = -1;
    std::string spec;
    std::optional<double> t;
    int xi = 0;
};

void add_measure_commands(CLI::App & app, Context & ctx, std::ostream & out, MeasureArgs & m)
{
    auto * measure = app.add_subcommand("measure", "Spectral and Sato-Tate measures");
    measure->require_subcommand(1);

    auto * eval = measure->add_subcommand("eval", "Mass of a closed interval");
    eval->add_option("--kind", m.kind, "pl0, pl1, V10, V11, npl0 or npl1");
    eval->add_option("--interval", m.interval, "a:b")->required();
    eval->callback([&out, &m] {
        auto [a, b] = parse_interval(m.interval);
        SpectralMeasure mu(parse_measure_kind(m.kind));
        Estimate e = mu.measure_interval(a, b);
        json j;
        j["kind"] = to_string(mu.kind());
        j["a"] = a;
        j["b"] = b;
        j["value"] = e.value;
        j["error"] = e.error;
        emit(out, j);
    });

    auto * phi = measure->add_subcommand("phi", "Sato-Tate measure of an interval, S-polynomial or moment");
    phi->add_option("--p", m.label, "Prime label p:i")->required();
    auto * g = phi->add_option_group("target");
    g->add_option("--interval", m.interval, "a:b");
    g->add_option("--spoly", m.spoly, "k for S_{p,2k}");
    g->add_option("--moment", m.moment, "n for lambda^n");
    g->require_option(1);
    phi->callback([&ctx, &out, &m] {
        NumberField F = ctx.field();
        PrimeIdeal pr = prime_from_label(F, PrimeLabel::parse(m.label));
        SatoTateMeasure mu(pr.label, pr.norm());
        json j;
        j["prime"] = pr.label.to_string();
        j["norm"] = pr.norm();
        if (!m.interval.empty()) {
            auto [a, b] = parse_interval(m.interval);
            j["value"] = mu.interval(a, b);
        } else {
            Polynomial f;
            if (m.spoly >= 0) {
                f = s_poly(pr.norm(), m.spoly);
            } else {
                if (m.moment < 0) throw InvalidArgument("moment must be nonnegative");
                f.coeffs.assign(static_cast<std::size_t>(m.moment) + 1, 0);
                f.coeffs.back() = 1;
            }
            j["value"] = mu.polynomial(f);
            j["exact"] = exact(mu.polynomial_exact(f));
        }
        emit(out, j);
    });

    auto * box = measure->add_subcommand("box", "Plancherel and reference measure of Omega_t");
    box->add_option("--spec", m.spec, "Box JSON (inline or file)")->required();
    box->add_option("--t", m.t, "Growth parameter");
    box->callback([&out, &m] {
        Box b = load_box(m.spec, m.t);
        if (!m.t) throw InvalidArgument("box needs --t or a \"t\" entry");
        Estimate pl = box_measure(BoxMeasureKind::plancherel, b, *m.t);
        Estimate v1 = box_measure(BoxMeasureKind::reference, b, *m.t);
        json j;
        j["t"] = *m.t;
        j["pl"] = pl.value;
        j["pl_error"] = pl.error;
        j["v1"] = v1.value;
        emit(out, j);
    });

    auto * npl = measure->add_subcommand("npl", "Plancherel mass in the nu coordinate and of its lambda image");
    npl->add_option("--interval", m.interval, "s_a:s_b with s < 0 meaning nu = i|s|")->required();
    npl->add_option("--xi", m.xi, "Parity 0 or 1")->check(CLI::Range(0, 1));
    npl->callback([&out, &m] {
        auto [a, b] = parse_interval(m.interval);
        auto [nv, pv] = npl_consistency(a, b, m.xi);
        json j;
        j["npl"] = nv;
        j["pl"] = pv;
        j["difference"] = std::abs(nv - pv);
        emit(out, j);
    });
}

// ---- kloosterman --------------------------------------------------------

struct KloostermanArgs {
    std::string c;
    std::string r = "1";
    std::string rp = "1";
    std::string chi;
    std::int64_t max_norm = 500;
    double eps = 0.1;
    std::string exceptional;
    std::string xi;
};

void add_kloosterman_commands(CLI::App & app, Context & ctx, std::ostream & out, KloostermanArgs & k)
{
    auto * kl = app.add_subcommand("kloosterman", "Kloosterman sums at the cusp infinity");
    kl->require_subcommand(1);

    auto * eval = kl->add_subcommand("eval", "K_chi(r, r'; c)");
    eval->add_option("--c", k.c, "Modulus c in the level")->required();
    eval->add_option("--r", k.r, "r in the inverse different");
    eval->add_option("--rp", k.rp, "r' in the inverse different");
    eval->add_option("--chi", k.chi, "Character file");
    eval->callback([&ctx, &out, &k] {
        NumberField F = ctx.field();
        DirichletCharacter chi = ctx.character(F, k.chi);
        auto v = kloosterman(F, chi, {F.parse_element(k.c), F.parse_element(k.r), F.parse_element(k.rp)});
        json j;
        j["re"] = v.real();
        j["im"] = v.imag();
        j["abs"] = std::abs(v);
        emit(out, j);
    });

    auto * sym = kl->add_subcommand("symmetry", "Check conj K(r,r';c) = K(r',r;-c) = chi(-1) K(r',r;c)");
    sym->add_option("--c", k.c, "Modulus c in the level")->required();
    sym->add_option("--r", k.r, "r in the inverse different");
    sym->add_option("--rp", k.rp, "r' in the inverse different");
    sym->add_option("--chi", k.chi, "Character file");
    sym->callback([&ctx, &out, &k] {
        NumberField F = ctx.field();
        DirichletCharacter chi = ctx.character(F, k.chi);
        auto rep = symmetry_check(F, chi, {F.parse_element(k.c), F.parse_element(k.r), F.parse_element(k.rp)});
        json j;
        j["re"] = rep.value.real();
        j["im"] = rep.value.imag();
        j["max_deviation"] = rep.max_deviation();
        j["ok"] = rep.ok();
        emit(out, j);
    });

    auto * scan = kl->add_subcommand("scan", "Weil-type bound ratios over moduli of bounded norm");
    scan->add_option("--max-norm", k.max_norm, "Largest N(c)");
    scan->add_option("--eps", k.eps, "Exponent slack epsilon");
    scan->add_option("--r", k.r, "r in the inverse different");
    scan->add_option("--rp", k.rp, "r' in the inverse different");
    scan->add_option("--chi", k.chi, "Character file");
    scan->add_option("--exceptional", k.exceptional, "Exceptional primes, e.g. 2:0,3:0");
    scan->callback([&ctx, &out, &k] {
        NumberField F = ctx.field();
        DirichletCharacter chi = ctx.character(F, k.chi);
        WeilScanOptions opt;
        opt.max_norm = k.max_norm;
        opt.eps = k.eps;
        opt.threads = ctx.g.threads;
        if (!k.exceptional.empty()) {
            std::vector<PrimeLabel> S;
            for (auto const & s : split(k.exceptional, ',')) S.push_back(PrimeLabel::parse(s));
            opt.exceptional = S;
        }
        WeilScanResult res = weil_scan(F, chi, F.parse_element(k.r), F.parse_element(k.rp), opt);
        if (ctx.csv(true)) {
            out << "c,norm,abs,bound,ratio,weil_ratio,prime\n";
            for (auto const & row : res.rows)
                out << '"' << F.format(row.c) << "\"," << row.norm << ',' << csv_number(row.abs_value) << ','
                    << csv_number(row.bound) << ',' << csv_number(row.ratio) << ',' << csv_number(row.weil_ratio) << ','
                    << (row.prime_modulus ? 1 : 0) << '\n';
        } else {
            json j;
            json rows = json::array();
            for (auto const & row : res.rows)
                rows.push_back({{"c", F.format(row.c)}, {"norm", row.norm}, {"abs", row.abs_value},
                                {"bound", row.bound}, {"ratio", row.ratio}, {"weil_ratio", row.weil_ratio},
                                {"prime", row.prime_modulus}});
            j["rows"] = rows;
            j["max_ratio"] = res.max_ratio;
            j["skipped"] = res.skipped.size();
            emit(out, j);
        }
    });

    auto * delta = kl->add_subcommand("delta", "Delta term at the cusp infinity");
    delta->add_option("--r", k.r, "r in the inverse different");
    delta->add_option("--rp", k.rp, "r' in the inverse different");
    delta->add_option("--xi", k.xi, "Parities, e.g. 0,1 (default all 0)");
    delta->add_option("--chi", k.chi, "Character file");
    delta->callback([&ctx, &out, &k] {
        NumberField F = ctx.field();
        DirichletCharacter chi = ctx.character(F, k.chi);
        std::vector<int> xi(static_cast<std::size_t>(F.degree()), 0);
        if (!k.xi.empty()) {
            xi.clear();
            for (auto const & s : split(k.xi, ',')) xi.push_back(std::stoi(s));
        }
        auto v = delta_term(F, chi, F.parse_element(k.r), F.parse_element(k.rp), xi);
        json j;
        j["re"] = v.real();
        j["im"] = v.imag();
        emit(out, j);
    });
}

// ---- equidist -----------------------------------------------------------

struct EquidistArgs {
    std::string box;
    std::optional<double> t;
    std::string primes;
    std::int64_t count = 1000;
    std::optional<double> calibrate;
    std::int64_t upto = 1000;
    std::string table;
    std::string data;
    std::string t_grid;
    std::string intervals;
    double covolume = 1.0;
};

void write_dataset(Context & ctx, std::ostream & out, Dataset const & ds)
{
    if (ctx.csv()) write_csv(out, ds);
    else write_jsonl(out, ds);
}

void add_equidist_commands(CLI::App & app, Context & ctx, std::ostream & out, EquidistArgs & e)
{
    auto * eq = app.add_subcommand("equidist", "Eigenvalue datasets, counts and predictions");
    eq->require_subcommand(1);

    auto * synth = eq->add_subcommand("synth", "Synthetic dataset drawn from pl and Phi_p");
    synth->add_option("--box", e.box, "Box JSON (inline or file)")->required();
    synth->add_option("--t", e.t, "Growth parameter");
    synth->add_option("--primes", e.primes, "Prime labels, e.g. 2:0,3:0");
    synth->add_option("--count", e.count, "Number of records");
    synth->add_option("--covolume", e.calibrate, "Calibrate the total weight to the prediction for this covolume");
    synth->callback([&ctx, &out, &e] {
        NumberField F = ctx.field();
        Box box = load_box(e.box, e.t);
        if (!e.t) throw InvalidArgument("box needs --t or a \"t\" entry");
        std::vector<PrimeLabel> primes;
        for (auto const & s : split(e.primes, ',')) primes.push_back(PrimeLabel::parse(s));
        SynthOptions opt;
        opt.count = e.count;
        opt.seed = ctx.g.seed;
        opt.threads = ctx.g.threads;
        Dataset ds = synthesize(F, box, *e.t, primes, opt);
        if (e.calibrate) calibrate_weights(ds, predict(F, *e.calibrate, box, *e.t, {}).total);
        write_dataset(ctx, out, ds);
    });

    auto * tau = eq->add_subcommand("tau", "Ramanujan tau dataset with Hecke identity checks");
    tau->add_option("--upto", e.upto, "Largest n");
    tau->add_option("--table", e.table, "Also write p,tau_p,lambda_p,tp2 to this CSV file");
    tau->callback([&ctx, &out, &e] {
        auto t = ramanujan_tau(e.upto);
        verify_tau_identities(t);
        auto primes = tau_primes(t);
        if (!e.table.empty()) {
            std::ofstream f(e.table);
            if (!f) throw InvalidArgument("cannot write '" + e.table + "'");
            write_tau_table(f, primes);
        }
        write_dataset(ctx, out, tau_dataset(primes));
    });

    auto * count_cmd = eq->add_subcommand("count", "Weighted count N(Omega_t; J)");
    count_cmd->add_option("--data", e.data, "Dataset (.jsonl or .csv)")->required();
    count_cmd->add_option("--box", e.box, "Box JSON (inline or file)")->required();
    count_cmd->add_option("--t", e.t, "Growth parameter");
    count_cmd->add_option("--intervals", e.intervals, "Windows, e.g. 2:0=0:1,3:0=1:2");
    count_cmd->callback([&ctx, &out, &e] {
        NumberField F = ctx.field();
        Box box = load_box(e.box, e.t);
        if (!e.t) throw InvalidArgument("box needs --t or a \"t\" entry");
        Dataset ds = load_dataset(e.data);
        ds.validate(F);
        json j;
        j["count"] = count(ds, box, *e.t, parse_windows(F, e.intervals), ctx.g.threads);
        emit(out, j);
    });

    auto * pred = eq->add_subcommand("predict", "Main-term prediction for Omega_t and J");
    pred->add_option("--box", e.box, "Box JSON (inline or file)")->required();
    pred->add_option("--t", e.t, "Growth parameter");
    pred->add_option("--intervals", e.intervals, "Windows, e.g. 2:0=0:1,3:0=1:2");
    pred->add_option("--covolume", e.covolume, "vol(Gamma \\ G)");
    pred->callback([&ctx, &out, &e] {
        NumberField F = ctx.field();
        Box box = load_box(e.box, e.t);
        if (!e.t) throw InvalidArgument("box needs --t or a \"t\" entry");
        Prediction p = predict(F, e.covolume, box, *e.t, parse_windows(F, e.intervals));
        json j;
        j["constant"] = p.constant;
        j["pl"] = p.plancherel;
        j["sato_tate"] = p.sato_tate;
        j["prediction"] = p.total;
        j["v1"] = p.reference;
        emit(out, j);
    });

    auto * idx = eq->add_subcommand("level-index", "N(I) prod (1 + 1/Np) for the --level ideal");
    idx->callback([&ctx, &out] {
        NumberField F = ctx.field();
        Rational v = level_index(F, ctx.level(F));
        json j;
        j["level_index"] = exact(v);
        emit(out, j);
    });

    auto * run = eq->add_subcommand("run", "Report of count against prediction over a t grid");
    run->add_option("--data", e.data, "Dataset (.jsonl or .csv)")->required();
    run->add_option("--box", e.box, "Box JSON (inline or file)")->required();
    run->add_option("--t-grid", e.t_grid, "Comma separated t values");
    run->add_option("--intervals", e.intervals, "Windows, e.g. 2:0=0:1,3:0=1:2");
    run->add_option("--covolume", e.covolume, "vol(Gamma \\ G)");
    run->callback([&ctx, &out, &e] {
        NumberField F = ctx.field();
        Box box = load_box(e.box, e.t);
        std::vector<double> grid;
        for (auto const & s : split(e.t_grid, ',')) grid.push_back(std::stod(s));
        if (e.t_grid.empty() && e.t) grid.push_back(*e.t);
        Dataset ds = load_dataset(e.data);
        ds.validate(F);
        Report rep = run_report(F, ds, box, grid, parse_windows(F, e.intervals), e.covolume, ctx.g.threads);
        if (ctx.csv(true)) rep.write_csv(out);
        else out << rep.summary_json() << '\n';
    });
}

}  // namespace

int dispatch(std::vector<std::string> const & args, std::ostream & out, std::ostream & err)
{
    Globals g;
    Context ctx{g};
    std::ostringstream buffer;

    CLI::App app{"Hecke operators, spectral measures and Kloosterman sums over totally real fields", "hmf"};
    app.set_help_all_flag("--help-all", "Expand all help");
    app.require_subcommand(1);
    app.add_option("--field", g.field, "Q or Q(sqrt m)")->capture_default_str();
    app.add_option("--level", g.level, "Generator of the level ideal I")->capture_default_str();
    app.add_option("--out", g.out, "Write output to this file instead of stdout");
    app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", g.seed, "Random seed");
    app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);
    app.fallthrough();

    FieldArgs field_args;
    HeckeArgs hecke_args;
    MeasureArgs measure_args;
    KloostermanArgs kl_args;
    EquidistArgs eq_args;
    add_field_commands(app, ctx, buffer, field_args);
    add_hecke_commands(app, ctx, buffer, hecke_args);
    add_measure_commands(app, ctx, buffer, measure_args);
    add_kloosterman_commands(app, ctx, buffer, kl_args);
    add_equidist_commands(app, ctx, buffer, eq_args);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (CLI::CallForHelp const & e) {
        return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const & e) {
        return app.exit(e, out, err);
    } catch (CLI::ParseError const & e) {
        app.exit(e, err, err);
        return 2;
    } catch (DomainError const & e) {
        err << nlohmann::json{{"code", e.code()}, {"message", e.what()}}.dump() << '\n';
        return 1;
    } catch (std::exception const & e) {
        err << nlohmann::json{{"code", "error"}, {"message", e.what()}}.dump() << '\n';
        return 1;
    }

    if (g.out.empty()) {
        out << buffer.str();
    } else {
        std::ofstream f(g.out);
        if (!f) {
            err << nlohmann::json{{"code", "io"}, {"message", "cannot write '" + g.out + "'"}}.dump() << '\n';
            return 1;
        }
        f << buffer.str();
    }
    return 0;
}

}  // namespace hmf::cli
