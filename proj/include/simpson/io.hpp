#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "simpson/decomposition.hpp"
#include "simpson/distribution.hpp"

namespace simpson::io {

inline constexpr const char* kSchemaVersion = "1.0";
/// Looser than the in-memory tolerance to absorb decimal serialization.
inline constexpr double kLoadTolerance = 1e-9;

struct Provenance {
    Quadruple seed;
    std::string construction = "prop1";
};

struct DistributionDocument {
    JointDistribution joint;
    std::optional<Provenance> provenance;
};

/// JSON document: schema_version, n, p_treated and one entry per outcome
/// {x, a, b, p}, with b the bit string b1..bn and p a 17-significant-digit
/// decimal string.
std::string to_json(const JointDistribution& joint,
                    const std::optional<Provenance>& provenance = std::nullopt);

/// Throws FormatError on malformed documents, missing or duplicate
/// outcomes, or a total further than kLoadTolerance from one.
DistributionDocument from_json(const std::string& text);

/// "x,a,b1,...,bn,count" header, then one row per nonzero cell in
/// lexicographic (x, a, b1..bn) order; LF line endings.
std::string to_csv(const Dataset& data);

/// Throws FormatError on a bad header, malformed row or duplicate cell.
Dataset from_csv(const std::string& text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);

/// "%.17g", which round-trips every double.
std::string format_probability(double p);

}  // namespace simpson::io
