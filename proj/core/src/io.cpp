#include "cif/io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

#include <fmt/format.h>

#include "cif/errors.hpp"

namespace cif {
namespace {

static_assert(std::endian::native == std::endian::little || std::endian::native == std::endian::big);

template <class T>
T to_little(T value) {
  if constexpr (std::endian::native == std::endian::little) {
    return value;
  } else {
    unsigned char b[sizeof(T)];
    std::memcpy(b, &value, sizeof(T));
    for (std::size_t i = 0; i < sizeof(T) / 2; ++i) std::swap(b[i], b[sizeof(T) - 1 - i]);
    std::memcpy(&value, b, sizeof(T));
    return value;
  }
}

template <class T>
void put(std::string& out, T value) {
  value = to_little(value);
  char b[sizeof(T)];
  std::memcpy(b, &value, sizeof(T));
  out.append(b, sizeof(T));
}

class Reader {
 public:
  Reader(const std::string& data, const std::filesystem::path& path) : data_(data), path_(path) {}

  template <class T>
  T get(const char* what) {
    if (pos_ + sizeof(T) > data_.size()) {
      throw FormatError(fmt::format("{}: truncated file while reading {}", path_.string(), what));
    }
    T value;
    std::memcpy(&value, data_.data() + pos_, sizeof(T));
    pos_ += sizeof(T);
    return to_little(value);
  }

  std::size_t remaining() const { return data_.size() - pos_; }

 private:
  const std::string& data_;
  const std::filesystem::path& path_;
  std::size_t pos_ = 0;
};

void write_text(const std::filesystem::path& path, const std::string& text, bool binary) {
  std::ofstream out(path, binary ? std::ios::binary | std::ios::trunc : std::ios::trunc);
  if (!out) throw Error(fmt::format("cannot open '{}' for writing", path.string()));
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(fmt::format("write to '{}' failed", path.string()));
}

std::string read_all(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(fmt::format("cannot open '{}' for reading", path.string()));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void put_field(std::string& out, const ScalarField& f) {
  for (std::size_t i = 0; i < f.size(); ++i) put(out, f[i]);
}

ScalarField get_field(Reader& r, const Grid& g) {
  std::vector<double> values(g.size());
  for (auto& v : values) v = r.get<double>("field data");
  return ScalarField(g, std::move(values));
}

}  // namespace

void write_field_dump(const State& state, double time, const std::filesystem::path& path) {
  const Grid& g = state.grid();
  const std::uint32_t ncomp = state.p_tilde ? 4 : 3;
  std::string out;
  out.reserve(32 + ncomp * g.size() * sizeof(double));
  out.append(kDumpMagic, 4);
  put(out, kDumpVersion);
  put(out, static_cast<std::uint32_t>(g.n()));
  put(out, ncomp);
  put(out, time);
  put(out, state.rho_bar);
  put_field(out, state.rho_tilde);
  if (state.p_tilde) put_field(out, *state.p_tilde);
  put_field(out, state.v[0]);
  put_field(out, state.v[1]);
  write_text(path, out, true);
}

FieldDump read_field_dump(const std::filesystem::path& path) {
  const std::string data = read_all(path);
  if (data.size() < 4 || std::memcmp(data.data(), kDumpMagic, 4) != 0) {
    throw FormatError(fmt::format("{}: not a field dump (bad magic)", path.string()));
  }
  Reader r(data, path);
  for (int i = 0; i < 4; ++i) r.get<char>("magic");
  const auto version = r.get<std::uint32_t>("version");
  if (version != kDumpVersion) {
    throw UnsupportedVersion(
        fmt::format("{}: dump version {} is not supported (expected {})", path.string(), version,
                    kDumpVersion));
  }
  const auto n = r.get<std::uint32_t>("n");
  const auto ncomp = r.get<std::uint32_t>("ncomp");
  if (ncomp != 3 && ncomp != 4) {
    throw FormatError(fmt::format("{}: ncomp must be 3 or 4, got {}", path.string(), ncomp));
  }
  const double time = r.get<double>("time");
  const double rho_bar = r.get<double>("rho_bar");
  const Grid g = [&] {
    try {
      return Grid(n);
    } catch (const PreconditionError& e) {
      throw FormatError(fmt::format("{}: {}", path.string(), e.what()));
    }
  }();
  if (r.remaining() < static_cast<std::size_t>(ncomp) * g.size() * sizeof(double)) {
    throw FormatError(fmt::format("{}: truncated file ({} bytes of field data, expected {})",
                                  path.string(), r.remaining(),
                                  static_cast<std::size_t>(ncomp) * g.size() * sizeof(double)));
  }
  if (r.remaining() > static_cast<std::size_t>(ncomp) * g.size() * sizeof(double)) {
    throw FormatError(fmt::format("{}: trailing bytes after field data", path.string()));
  }
  FieldDump d{State{get_field(r, g), VectorField(g), std::nullopt, rho_bar}, time};
  if (ncomp == 4) d.state.p_tilde = get_field(r, g);
  d.state.v[0] = get_field(r, g);
  d.state.v[1] = get_field(r, g);
  return d;
}

std::string diagnostics_csv(const RunReport& report) {
  std::string out = "time,hs_norm,kinetic,div_norm,penalty_norm,min_rho\n";
  for (std::size_t i = 0; i < report.times.size(); ++i) {
    out += fmt::format("{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", report.times[i],
                       report.hs_norm[i], report.kinetic[i], report.div_norm[i],
                       report.penalty_norm[i], report.min_rho[i]);
  }
  return out;
}

void write_diagnostics_csv(const RunReport& report, const std::filesystem::path& path) {
  write_text(path, diagnostics_csv(report), false);
}

RunReport read_diagnostics_csv(const std::filesystem::path& path) {
  std::istringstream in(read_all(path));
  std::string line;
  if (!std::getline(in, line) || line != "time,hs_norm,kinetic,div_norm,penalty_norm,min_rho") {
    throw FormatError(fmt::format("{}: missing or unexpected CSV header", path.string()));
  }
  RunReport r;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    double v[6];
    const char* p = line.c_str();
    for (int k = 0; k < 6; ++k) {
      char* end = nullptr;
      v[k] = std::strtod(p, &end);
      if (end == p || (k < 5 && *end != ',') || (k == 5 && *end != '\0')) {
        throw FormatError(fmt::format("{}:{}: malformed row", path.string(), lineno));
      }
      p = end + 1;
    }
    r.record(Snapshot{v[0], v[1], v[2], v[3], v[4], v[5]});
  }
  return r;
}

void write_study_csv(const StudyReport& study, const std::filesystem::path& path) {
  std::string out = "eps,distance,constraint_constant,final_time,status\n";
  for (std::size_t i = 0; i < study.runs.size(); ++i) {
    const auto& r = study.runs[i];
    const double c = i < study.constraint_constants.size() ? study.constraint_constants[i] : 0.0;
    const double d = i < study.distance.distances.size() ? study.distance.distances[i] : 0.0;
    out += fmt::format("{:.17g},{:.17g},{:.17g},{:.17g},{}\n", study.eps_values[i], d, c,
                       r.final_time(), r.succeeded() ? "ok" : to_string(r.failure->kind));
  }
  const auto& ref = study.reference;
  out += fmt::format("{:.17g},0,0,{:.17g},{}\n", ref.eps, ref.final_time(),
                     ref.succeeded() ? "reference" : to_string(ref.failure->kind));
  write_text(path, out, false);
}

}  // namespace cif
