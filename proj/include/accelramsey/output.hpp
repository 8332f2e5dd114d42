#pragma once

// Deterministic CSV / JSON emission of sweep results.

#include "accelramsey/config.hpp"
#include "accelramsey/sweep.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace accelramsey {

inline constexpr std::string_view kCodeVersion = "1.0.0";

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes) noexcept;

/// "%.{p-1}e"; "inf" / "-inf" / "nan" for non-finite values.
std::string format_number(double value, int precision);

const std::vector<std::string>& record_columns();

/// One record as column strings, in record_columns() order (empty = absent).
std::vector<std::string> record_fields(const SweepRecord& record, int precision);

/// Config, conventions, version, hash, checks and flag summary. Stable for
/// identical inputs.
nlohmann::json make_metadata(const SweepOutput& output, const RunConfig& config);

void write_csv(std::ostream& out, const SweepOutput& output, const RunConfig& config);
void write_json(std::ostream& out, const SweepOutput& output, const RunConfig& config);

/// Writes to config.output.path (stdout when empty) in config.output.format.
/// Throws Error{io} if the file cannot be written.
void write_output(const SweepOutput& output, const RunConfig& config);

}  // namespace accelramsey
