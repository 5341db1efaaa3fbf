#ifndef HMF_DATASET_HPP
#define HMF_DATASET_HPP

#include "hmf/ideal.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace hmf {

/* One automorphic representation: archimedean eigenvalues lambda_j,
 * parities xi_j, Hecke values lambda_p and the weight |c^r(pi)|^2. */
struct EigenRecord {
    std::vector<double> lambda_inf;
    std::vector<int> xi;
    std::map<PrimeLabel, double> lambda_p;
    double weight = 1.0;
    std::string src;
};

struct Dataset {
    std::string field = "Q";
    std::string level = "1";
    std::vector<EigenRecord> records;
    std::map<std::string, std::string> provenance;

    std::size_t size() const { return records.size(); }
    double total_weight() const;
    /* Prime labels of the first record (all records share them). */
    std::vector<PrimeLabel> prime_labels() const;

    /* Throws InvalidArgument unless every record has dimension d, the
     * same prime labels, parities in {0, 1}, a nonnegative weight and
     * lambda_p in [0, 1 + N(p)]. */
    void validate(NumberField const & F) const;
};

/* {"lambda_inf":[...],"xi":[...],"lambda_p":{"2:0":0.75},"weight":1.0,"src":"tau"} per line. */
void write_jsonl(std::ostream & out, Dataset const & ds);
Dataset read_jsonl(std::istream & in);

/* Header lambda_1..lambda_d, xi_1..xi_d, one column per prime label, weight. */
void write_csv(std::ostream & out, Dataset const & ds);
Dataset read_csv(std::istream & in);

/* Reads by extension: .csv is CSV, anything else JSON Lines. */
Dataset load_dataset(std::string const & path);
void save_dataset(std::string const & path, Dataset const & ds);

}  // namespace hmf

#endif  // HMF_DATASET_HPP
