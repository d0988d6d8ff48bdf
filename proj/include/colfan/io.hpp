#pragma once

// JSON file formats. Vectors in files are integer-only; serialization is
// canonical, so serialize(parse(f)) == f for canonically written files.

#include "colfan/galois.hpp"
#include "colfan/monoid.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace colfan::io {

/// The file does not match its schema.
class SchemaError : public InputError {
 public:
  using InputError::InputError;
};

std::string read_file(const std::string& path);

SphericalDatum parse_datum(std::string_view text);
std::string serialize_datum(const SphericalDatum& datum);

/// Cones of a fan file as written (the maximal cones); no validation beyond
/// color resolution and lengths.
std::vector<ColoredCone> parse_fan(std::string_view text, const SphericalDatum& datum);
std::string serialize_fan(const SphericalDatum& datum, const std::vector<ColoredCone>& maximal);

/// Generators of an action file; not yet validated.
std::vector<GroupElement> parse_action(std::string_view text, const SphericalDatum& datum);
std::string serialize_action(const SphericalDatum& datum, const std::vector<GroupElement>& generators);

MorphismData parse_morphism(std::string_view text, const SphericalDatum& source, const SphericalDatum& target);
std::string serialize_morphism(const SphericalDatum& source, const SphericalDatum& target, const MorphismData& m);

/// {"matrix": [[...], ...]}
RatMat parse_matrix_file(std::string_view text);

/// "1,-2,3" -> (1,-2,3)
RatVec parse_csv_vector(std::string_view csv);

}  // namespace colfan::io
