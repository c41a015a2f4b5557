#ifndef PRIPS_IO_HPP
#define PRIPS_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "prips/classify.hpp"
#include "prips/complex.hpp"
#include "prips/homology.hpp"
#include "prips/obstructions.hpp"
#include "prips/realizer.hpp"
#include "prips/rips.hpp"

namespace prips {

using Json = nlohmann::ordered_json;

/// Malformed input; the message carries the line number where known.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Header `x,y`, then one point per line. Blank lines and `#` comments are
/// skipped. Duplicate points throw GeometryError.
PointCloud read_points_csv(std::istream& in);

/// {"r": "1", "points": [["x", "y"], ...]}; numbers are accepted as well as
/// strings.
PointCloud points_from_json(const Json& j);
Json points_to_json(const PointCloud& cloud);

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// Graph JSON plus sorted facets, and the mode stamp when given.
Json complex_to_json(const FlagComplex& k, std::optional<ThresholdMode> mode = std::nullopt);

/// Reads the graph part; listed facets must equal the maximal cliques.
FlagComplex complex_from_json(const Json& j);

Json betti_to_json(const BettiVector& b);
Json report_to_json(const ClassificationReport& r);
Json outcome_to_json(const RealizationOutcome& o);

Json catalog_to_json(std::span<const CatalogEntry> entries);
std::vector<CatalogEntry> catalog_from_json(const Json& j);

std::string read_file(const std::filesystem::path& path);

/// CSV unless the extension is .json.
PointCloud load_points(const std::filesystem::path& path);

Json parse_json(const std::string& text, const std::string& origin);

/// Two-space indented JSON with a trailing newline.
std::string dump(const Json& j);

}  // namespace prips

#endif  // PRIPS_IO_HPP
