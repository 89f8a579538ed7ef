#include "cif/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <fmt/format.h>

#include "cif/errors.hpp"

namespace cif {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(std::string_view key, const std::string& where, const std::string& msg) {
  throw ConfigError(fmt::format("{} ({}): {}", key, where, msg));
}

double parse_real(std::string_view v, std::string_view key, const std::string& where) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out)) {
    fail(key, where, fmt::format("expected a number, got '{}'", v));
  }
  return out;
}

long long parse_integer(std::string_view v, std::string_view key, const std::string& where) {
  long long out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    fail(key, where, fmt::format("expected an integer, got '{}'", v));
  }
  return out;
}

bool parse_bool(std::string_view v, std::string_view key, const std::string& where) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  fail(key, where, fmt::format("expected true or false, got '{}'", v));
}

std::vector<double> parse_list(std::string_view v, std::string_view key, const std::string& where) {
  std::vector<double> out;
  if (trim(v).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = v.find(',', start);
    out.push_back(parse_real(trim(v.substr(start, comma - start)), key, where));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

using Setter = std::function<void(Config&, std::string_view, const std::string&)>;

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = {
      {"grid.n",
       [](Config& c, std::string_view v, const std::string& w) {
         const long long n = parse_integer(v, "grid.n", w);
         if (n < 8 || n % 2 != 0) fail("grid.n", w, "n must be even ≥ 8");
         c.grid_n = static_cast<std::size_t>(n);
       }},
      {"grid.length",
       [](Config& c, std::string_view v, const std::string& w) {
         c.grid_length = parse_real(v, "grid.length", w);
         if (!(c.grid_length > 0.0)) fail("grid.length", w, "must be positive");
       }},
      {"scheme.kind",
       [](Config& c, std::string_view v, const std::string& w) {
         try {
           c.scheme_kind = parse_scheme_kind(v);
         } catch (const ConfigError& e) {
           fail("scheme.kind", w, e.what());
         }
       }},
      {"scheme.eps",
       [](Config& c, std::string_view v, const std::string& w) {
         const double e = parse_real(v, "scheme.eps", w);
         if (!(e > 0.0)) fail("scheme.eps", w, "must be positive");
         c.scheme_eps = e;
       }},
      {"scheme.mollifier",
       [](Config& c, std::string_view v, const std::string& w) {
         try {
           c.mollifier = parse_mollifier(v);
         } catch (const Error& e) {
           fail("scheme.mollifier", w, e.what());
         }
       }},
      {"scheme.splitting",
       [](Config& c, std::string_view v, const std::string& w) {
         if (v == "strang") {
           c.splitting = Splitting::Strang;
         } else if (v == "lie") {
           c.splitting = Splitting::Lie;
         } else {
           fail("scheme.splitting", w, fmt::format("expected strang or lie, got '{}'", v));
         }
       }},
      {"scheme.literal_sandwich",
       [](Config& c, std::string_view v, const std::string& w) {
         c.literal_sandwich = parse_bool(v, "scheme.literal_sandwich", w);
       }},
      {"law.id", [](Config& c, std::string_view v, const std::string&) { c.law_id = v; }},
      {"law.params",
       [](Config& c, std::string_view v, const std::string& w) {
         c.law_params = parse_list(v, "law.params", w);
       }},
      {"init.preset",
       [](Config& c, std::string_view v, const std::string& w) {
         if (v != "taylor_green" && v != "shear" && v != "quiescent_density_bump" &&
             v != "custom_file") {
           fail("init.preset", w,
                fmt::format("unknown preset '{}' (expected taylor_green, shear, "
                            "quiescent_density_bump or custom_file)",
                            v));
         }
         c.init_preset = v;
       }},
      {"init.amplitude",
       [](Config& c, std::string_view v, const std::string& w) {
         c.init_amplitude = parse_real(v, "init.amplitude", w);
         if (!(c.init_amplitude >= 0.0 && c.init_amplitude < 1.0)) {
           fail("init.amplitude", w, "must lie in [0, 1)");
         }
       }},
      {"init.v0_1",
       [](Config& c, std::string_view v, const std::string& w) {
         if (v != "none" && v != "gradient") {
           fail("init.v0_1", w, fmt::format("expected none or gradient, got '{}'", v));
         }
         c.init_v0_1 = v;
       }},
      {"init.file", [](Config& c, std::string_view v, const std::string&) { c.init_file = v; }},
      {"time.t_final",
       [](Config& c, std::string_view v, const std::string& w) {
         c.t_final = parse_real(v, "time.t_final", w);
         if (!(c.t_final >= 0.0)) fail("time.t_final", w, "must be >= 0");
       }},
      {"time.cfl",
       [](Config& c, std::string_view v, const std::string& w) {
         c.cfl = parse_real(v, "time.cfl", w);
         if (!(c.cfl > 0.0 && c.cfl <= 1.0)) fail("time.cfl", w, "must lie in (0, 1]");
       }},
      {"time.dt_override",
       [](Config& c, std::string_view v, const std::string& w) {
         const double dt = parse_real(v, "time.dt_override", w);
         if (!(dt > 0.0)) fail("time.dt_override", w, "must be positive");
         c.dt_override = dt;
       }},
      {"output.dir", [](Config& c, std::string_view v, const std::string&) { c.output_dir = v; }},
      {"output.every_steps",
       [](Config& c, std::string_view v, const std::string& w) {
         const long long k = parse_integer(v, "output.every_steps", w);
         if (k < 1) fail("output.every_steps", w, "must be >= 1");
         c.output_every = static_cast<std::size_t>(k);
       }},
      {"output.fields",
       [](Config& c, std::string_view v, const std::string& w) {
         c.output_fields = parse_bool(v, "output.fields", w);
       }},
      {"output.sobolev_s",
       [](Config& c, std::string_view v, const std::string& w) {
         c.sobolev_s = parse_real(v, "output.sobolev_s", w);
         if (!(c.sobolev_s >= 0.0)) fail("output.sobolev_s", w, "must be >= 0");
       }},
      {"study.eps_list",
       [](Config& c, std::string_view v, const std::string& w) {
         c.study_eps_list = parse_list(v, "study.eps_list", w);
         for (double e : c.study_eps_list) {
           if (!(e > 0.0)) fail("study.eps_list", w, "values must be positive");
         }
       }},
  };
  return table;
}

constexpr const char* kRequired[] = {"grid.n", "scheme.kind", "law.id", "time.t_final"};

}  // namespace

std::vector<double> parse_real_list(std::string_view text, std::string_view key) {
  auto out = parse_list(text, key, "argument");
  if (out.empty()) fail(key, "argument", "empty list");
  for (double e : out) {
    if (!(e > 0.0)) fail(key, "argument", "values must be positive");
  }
  return out;
}

Config parse_config(std::string_view text, const std::vector<std::string>& overrides) {
  Config c;
  std::map<std::string, std::string, std::less<>> where;

  auto assign = [&](std::string_view line, const std::string& loc, bool allow_repeat) {
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(fmt::format("{}: expected 'key = value', got '{}'", loc, line));
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end()) fail(key, loc, "unknown key");
    if (!allow_repeat && where.count(key)) {
      fail(key, loc, fmt::format("already set at {}", where.find(key)->second));
    }
    it->second(c, value, loc);
    where[std::string(key)] = loc;
  };

  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    assign(line, fmt::format("line {}", lineno), false);
  }
  for (std::size_t i = 0; i < overrides.size(); ++i) {
    assign(trim(overrides[i]), fmt::format("--override {}", i + 1), true);
  }

  for (const char* key : kRequired) {
    if (!where.count(key)) fail(key, "missing", "required key is not set");
  }
  const bool needs_eps = c.scheme_kind == SchemeKind::ContinuousProjection ||
                         c.scheme_kind == SchemeKind::ArtificialCompressibility;
  if (needs_eps && !c.scheme_eps) {
    fail("scheme.eps", "missing",
         fmt::format("required for scheme {} (scheme.kind set at {})", to_string(c.scheme_kind),
                     where.find("scheme.kind")->second));
  }
  try {
    const PressureLaw law = make_pressure_law(c.law_id, c.law_params);
    if (c.scheme_kind == SchemeKind::ReductionOracle && !law.has_phi()) {
      fail("law.id", where.find("law.id")->second,
           fmt::format("law '{}' depends on v; the oracle needs f = f(rho)", c.law_id));
    }
  } catch (const ConfigError& e) {
    const std::string key = where.count("law.params") ? "law.params" : "law.id";
    if (std::string_view(e.what()).starts_with(key)) throw;
    fail(key, where.find(key)->second, e.what());
  }
  if (c.init_preset == "custom_file" && c.init_file.empty()) {
    fail("init.file", "missing", "required when init.preset = custom_file");
  }
  if (c.init_v0_1 != "none" && !needs_eps) {
    fail("init.v0_1", where.find("init.v0_1")->second, "only schemes b and c accept v0_1");
  }
  return c;
}

Config load_config(const std::string& path, const std::vector<std::string>& overrides) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(fmt::format("cannot read config file '{}'", path));
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_config(ss.str(), overrides);
  } catch (const ConfigError& e) {
    throw ConfigError(fmt::format("{}: {}", path, e.what()));
  }
}

}  // namespace cif
