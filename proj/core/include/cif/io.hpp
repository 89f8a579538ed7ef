#pragma once

#include <filesystem>
#include <string>

#include "cif/study.hpp"

namespace cif {

inline constexpr char kDumpMagic[4] = {'C', 'I', 'F', 'D'};
inline constexpr std::uint32_t kDumpVersion = 1;

struct FieldDump {
  State state;
  double time = 0.0;
};

/// Little-endian binary dump; see docs/formats.md. Throws Error on I/O failure.
void write_field_dump(const State& state, double time, const std::filesystem::path& path);
/// Throws FormatError for a bad magic or a truncated file and
/// UnsupportedVersion for an unknown version.
FieldDump read_field_dump(const std::filesystem::path& path);

/// Header `time,hs_norm,kinetic,div_norm,penalty_norm,min_rho`, one row per
/// recorded time, 17 significant digits.
void write_diagnostics_csv(const RunReport& report, const std::filesystem::path& path);
std::string diagnostics_csv(const RunReport& report);
/// Reads a file produced by write_diagnostics_csv back into the series of a
/// report (metadata is not stored). Throws FormatError on malformed input.
RunReport read_diagnostics_csv(const std::filesystem::path& path);

/// Header `eps,distance,constraint_constant,final_time,status`; the last row
/// carries the reference run with eps set to the reference value.
void write_study_csv(const StudyReport& study, const std::filesystem::path& path);

}  // namespace cif
