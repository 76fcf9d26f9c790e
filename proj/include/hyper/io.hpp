#pragma once

// JSON documents for hypergroups, Cayley tables, functions and reports.
//
// Hypergroup document:
//   {
//     "labels":      ["e", "a", ...],
//     "identity":    "e",
//     "involution":  {"e": "e", "a": "b", ...},
//     "convolution": {"a|b": {"e": "1/2", "a": 0.25, ...}, ...},
//     "haar":        {"e": 1, "a": 3, ...}            (optional)
//   }
// Masses are JSON numbers or exact "p/q" strings; omitted masses are zero.
// Serialization writes every value that is exactly a small rational as
// "p/q" (integers as plain numbers), so parse∘serialize reproduces the tensor
// bit for bit.

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyper/constructors.hpp"
#include "hyper/core.hpp"
#include "hyper/gelfand.hpp"
#include "hyper/sobolev.hpp"
#include "hyper/spectral.hpp"

namespace hyper::io {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file. Throws StructuralError on I/O or syntax errors.
Json load_json(const std::filesystem::path& path);
/// Pretty-printed with a trailing newline.
std::string dump(const Json& doc);
void save_json(const std::filesystem::path& path, const Json& doc);

/// Exact encoding of a real: integer, "p/q" string, or a plain number.
Json encode_real(double value);
/// Accepts numbers and "p/q" strings. Throws SchemaError naming `path`.
double decode_real(const Json& value, const std::string& path);

Json serialize(const FiniteHypergroup& h);

/// Schema check only: no axiom validation, supplied Haar weights kept as is.
FiniteHypergroup parse_structure(const Json& doc);

/// Schema check, axiom validation and Haar weights: supplied weights are
/// verified, missing ones computed. Throws SchemaError or AxiomError.
FiniteHypergroup parse(const Json& doc, double tol = kDefaultValidationTol);

Json serialize_cayley(const CayleyTable& table);
/// {"elements": [labels], "table": [[label, ...], ...]}; rows are x·y.
CayleyTable parse_cayley(const Json& doc);

/// {"values": {label: value}} with values as numbers, "p/q" or [re, im].
/// Omitted labels are zero.
PointFunction parse_function(const FiniteHypergroup& h, const Json& doc);
Json serialize_function(const FiniteHypergroup& h, const PointFunction& f);

Json encode_complex(Complex z);
Complex decode_complex(const Json& value, const std::string& path);

Json serialize_coefficients(const FourierCoefficients& coeffs);
/// {"coefficients": [[re, im], ...]}.
FourierCoefficients parse_coefficients(const Json& doc);

/// {"gamma": [γ_0, γ_1, ...]} in canonical dual order.
std::vector<double> parse_gamma(const Json& doc);

Json serialize_report(const FiniteHypergroup& h, const ValidationReport& report);
Json serialize_partition(const FiniteHypergroup& g, const DoubleCosetPartition& partition);
Json serialize_dual(const GelfandPair& pair, const DualData& dual);
Json serialize_embedding(const EmbeddingReport& report);

}  // namespace hyper::io
