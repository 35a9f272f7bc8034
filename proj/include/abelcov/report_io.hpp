#ifndef ABELCOV_REPORT_IO_HPP
#define ABELCOV_REPORT_IO_HPP

#include <json.hpp>
#include <string>

#include "abelcov/classify.hpp"
#include "abelcov/monodromy.hpp"

namespace abelcov {

// Interchange format for a datum:
//   {"group": [n1,...,nk], "theta": [[x1,...,xk], ...]}
// Residues are reduced on input (negatives and overshoots accepted).
MonodromyDatum datum_from_json(const nlohmann::json& j);
MonodromyDatum datum_from_json_text(const std::string& text);
MonodromyDatum datum_from_file(const std::string& path); // "-" reads stdin

nlohmann::ordered_json datum_to_json(const AbelianGroup& g, const std::vector<Residues>& theta);

// Stable key order: datum, genus, dim_Z, dim_SG, star, multiplicities,
// factors, compact_pairs, possible_sf_dims{all,feasible}, verdict, sf_vs_sg,
// identification_witnesses, rules, assertions, warnings.
nlohmann::ordered_json report_to_json(const ValidatedDatum& datum, const ClassificationReport& report);

std::string report_to_markdown(const ValidatedDatum& datum, const ClassificationReport& report);

} // namespace abelcov

#endif
