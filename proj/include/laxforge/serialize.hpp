#pragma once

// JSON documents for every artifact. Positions are 1-based, basis labels are
// "i3" / "mu2", coefficients use the canonical Laurent grammar. Objects are
// key-sorted, so dump() output is deterministic and round-trips byte for byte.

#include <string>

#include "json.hpp"
#include "laxforge/spectral.hpp"

namespace laxforge {

using Json = nlohmann::json;

/// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

/// Throws SchemaError on malformed text.
Json parse_json(const std::string& text);

Json algebra_to_json(const AlgebraData& alg);
/// Rebuilds the algebra from {m, n} and checks the rest of the document matches.
AlgebraPtr algebra_from_json(const Json& j);

/// [[row, col, "laurent"], ...]
Json entries_to_json(const GradedMatrix& X);
GradedMatrix entries_from_json(const Json& j, const GradedSpace& space);

Json rational_entries_to_json(const RationalMatrix& X);
RationalMatrix rational_entries_from_json(const Json& j, const GradedSpace& space);

Json representation_to_json(const Representation& rep);
/// Parses and validates against the defining relations.
RepresentationPtr representation_from_json(const Json& j);

/// Keys "b,a" with basis labels, e.g. "mu1,i1".
Json sigma_to_json(const SigmaSet& s);
SigmaSet sigma_from_json(const Json& j, const RepresentationPtr& rep);

Json rtensor_to_json(const RTensor& r, const AlgebraData& alg, const std::string& rep_name);
RTensor rtensor_from_json(const Json& j, const RepresentationPtr& rep);

Json report_to_json(const CheckReport& r);
CheckReport report_from_json(const Json& j);

/// Entries [[row, col, {"num": [...], "den": [...]}], ...], z-coefficients ascending.
Json spectral_to_json(const SpectralRMatrix& r);
SpectralRMatrix spectral_from_json(const Json& j);

/// {algebra, kind, s, z, dim, entries} for an exact evaluation.
Json rational_matrix_doc(const AlgebraData& alg, const std::string& kind, const RationalMatrix& X,
                         const std::string& s0, const std::string& z0);

}  // namespace laxforge
