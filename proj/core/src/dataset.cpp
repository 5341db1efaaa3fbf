#include "hmf/dataset.hpp"

#include "hmf/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace hmf {

namespace {

std::string number(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::vector<std::string> split_csv(std::string const & line)
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

double parse_double(std::string const & s, std::size_t line)
{
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (std::exception const &) {
        throw InvalidArgument("line " + std::to_string(line) + ": bad number '" + s + "'");
    }
}

bool ends_with(std::string const & s, std::string const & suffix)
{
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

double Dataset::total_weight() const
{
    double sum = 0.0, comp = 0.0;
    for (auto const & r : records) {
        double t = sum + r.weight;
        comp += std::abs(sum) >= std::abs(r.weight) ? (sum - t) + r.weight : (r.weight - t) + sum;
        sum = t;
    }
    return sum + comp;
}

std::vector<PrimeLabel> Dataset::prime_labels() const
{
    std::vector<PrimeLabel> out;
    if (records.empty()) return out;
    for (auto const & [k, v] : records.front().lambda_p) out.push_back(k);
    return out;
}

void Dataset::validate(NumberField const & F) const
{
    if (records.empty()) return;
    std::size_t d = records.front().lambda_inf.size();
    if (d != static_cast<std::size_t>(F.degree()))
        throw InvalidArgument("records have " + std::to_string(d) + " archimedean coordinates but " + F.spec() +
                              " has degree " + std::to_string(F.degree()));
    std::map<PrimeLabel, std::int64_t> norms;
    for (auto const & [k, v] : records.front().lambda_p) norms[k] = prime_from_label(F, k).norm();
    for (std::size_t i = 0; i < records.size(); ++i) {
        auto const & r = records[i];
        std::string where = "record " + std::to_string(i) + ": ";
        if (r.lambda_inf.size() != d || r.xi.size() != d) throw InvalidArgument(where + "dimension mismatch");
        for (int x : r.xi)
            if (x != 0 && x != 1) throw InvalidArgument(where + "parity must be 0 or 1");
        if (!(r.weight >= 0)) throw InvalidArgument(where + "negative weight");
        if (r.lambda_p.size() != norms.size()) throw InvalidArgument(where + "prime label set differs");
        for (auto const & [k, v] : r.lambda_p) {
            auto it = norms.find(k);
            if (it == norms.end()) throw InvalidArgument(where + "prime label set differs");
            if (!(v >= 0 && v <= 1.0 + static_cast<double>(it->second)))
                throw InvalidArgument(where + "lambda_p for " + k.to_string() + " outside [0, 1 + Np]");
        }
    }
}

void write_jsonl(std::ostream & out, Dataset const & ds)
{
    for (auto const & r : ds.records) {
        nlohmann::ordered_json j;
        j["lambda_inf"] = r.lambda_inf;
        j["xi"] = r.xi;
        nlohmann::ordered_json lp = nlohmann::ordered_json::object();
        for (auto const & [k, v] : r.lambda_p) lp[k.to_string()] = v;
        j["lambda_p"] = lp;
        j["weight"] = r.weight;
        if (!r.src.empty()) j["src"] = r.src;
        out << j.dump() << '\n';
    }
}

Dataset read_jsonl(std::istream & in)
{
    Dataset ds;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            auto j = nlohmann::json::parse(line);
            EigenRecord r;
            r.lambda_inf = j.at("lambda_inf").get<std::vector<double>>();
            r.xi = j.contains("xi") ? j.at("xi").get<std::vector<int>>() : std::vector<int>(r.lambda_inf.size(), 0);
            if (j.contains("lambda_p"))
                for (auto const & [k, v] : j.at("lambda_p").items()) r.lambda_p[PrimeLabel::parse(k)] = v.get<double>();
            r.weight = j.value("weight", 1.0);
            r.src = j.value("src", std::string());
            ds.records.push_back(std::move(r));
        } catch (nlohmann::json::exception const & ex) {
            throw InvalidArgument("line " + std::to_string(lineno) + ": " + ex.what());
        }
    }
    return ds;
}

void write_csv(std::ostream & out, Dataset const & ds)
{
    std::size_t d = ds.records.empty() ? 0 : ds.records.front().lambda_inf.size();
    auto labels = ds.prime_labels();
    std::vector<std::string> head;
    for (std::size_t j = 1; j <= d; ++j) head.push_back("lambda_" + std::to_string(j));
    for (std::size_t j = 1; j <= d; ++j) head.push_back("xi_" + std::to_string(j));
    for (auto const & l : labels) head.push_back(l.to_string());
    head.push_back("weight");
    for (std::size_t i = 0; i < head.size(); ++i) out << (i ? "," : "") << head[i];
    out << '\n';
    for (auto const & r : ds.records) {
        for (std::size_t j = 0; j < d; ++j) out << number(r.lambda_inf[j]) << ',';
        for (std::size_t j = 0; j < d; ++j) out << r.xi[j] << ',';
        for (auto const & l : labels) out << number(r.lambda_p.at(l)) << ',';
        out << number(r.weight) << '\n';
    }
}

Dataset read_csv(std::istream & in)
{
    Dataset ds;
    std::string line;
    if (!std::getline(in, line)) return ds;
    auto head = split_csv(line);
    std::size_t d = 0;
    while (d < head.size() && head[d] == "lambda_" + std::to_string(d + 1)) ++d;
    if (d == 0) throw InvalidArgument("CSV header must start with lambda_1");
    for (std::size_t j = 0; j < d; ++j)
        if (d + j >= head.size() || head[d + j] != "xi_" + std::to_string(j + 1))
            throw InvalidArgument("CSV header must list xi_1..xi_" + std::to_string(d) + " after the eigenvalues");
    if (head.back() != "weight") throw InvalidArgument("CSV header must end with weight");
    std::vector<PrimeLabel> labels;
    for (std::size_t k = 2 * d; k + 1 < head.size(); ++k) labels.push_back(PrimeLabel::parse(head[k]));
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto cells = split_csv(line);
        if (cells.size() != head.size())
            throw InvalidArgument("line " + std::to_string(lineno) + ": expected " + std::to_string(head.size()) +
                                  " columns");
        EigenRecord r;
        for (std::size_t j = 0; j < d; ++j) r.lambda_inf.push_back(parse_double(cells[j], lineno));
        for (std::size_t j = 0; j < d; ++j) r.xi.push_back(static_cast<int>(parse_double(cells[d + j], lineno)));
        for (std::size_t k = 0; k < labels.size(); ++k) r.lambda_p[labels[k]] = parse_double(cells[2 * d + k], lineno);
        r.weight = parse_double(cells.back(), lineno);
        ds.records.push_back(std::move(r));
    }
    return ds;
}

Dataset load_dataset(std::string const & path)
{
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open dataset '" + path + "'");
    return ends_with(path, ".csv") ? read_csv(in) : read_jsonl(in);
}

void save_dataset(std::string const & path, Dataset const & ds)
{
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot write dataset '" + path + "'");
    if (ends_with(path, ".csv")) write_csv(out, ds);
    else write_jsonl(out, ds);
}

}  // namespace hmf
