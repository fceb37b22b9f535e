#include "hsl/config.hpp"

#include <fstream>
#include <sstream>

#include "hsl/error.hpp"
#include "hsl/spectral.hpp"

namespace hsl {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw Error(ErrorCode::ConfigError, "line " + std::to_string(line) + ": " + msg);
}

std::vector<double> reals(const std::string& s, std::size_t want, int line) {
  std::istringstream in(s);
  std::vector<double> v;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(tok, &used);
    } catch (const std::exception&) {
      fail(line, "not a number: '" + tok + "'");
    }
    if (used != tok.size()) fail(line, "not a number: '" + tok + "'");
    v.push_back(x);
  }
  if (v.size() != want) fail(line, "expected " + std::to_string(want) + " numbers, got '" + s + "'");
  return v;
}

Cx complex(const std::string& s, int line) {
  const auto v = reals(s, 2, line);
  return {v[0], v[1]};
}

std::pair<std::string, std::string> split_colon(const std::string& s, int line) {
  const auto c = s.find(':');
  if (c == std::string::npos) fail(line, "expected 'a : b'");
  return {trim(s.substr(0, c)), trim(s.substr(c + 1))};
}

int int_at_least(const std::string& s, int lo, int line) {
  const double v = reals(s, 1, line)[0];
  if (v < lo || v > 1e9 || v != static_cast<int>(v)) fail(line, "expected an integer >= " + std::to_string(lo));
  return static_cast<int>(v);
}

int positive_int(const std::string& s, int line) { return int_at_least(s, 1, line); }

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string raw, section;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') fail(line, "unterminated section header");
      section = trim(s.substr(1, s.size() - 2));
      if (section != "torus" && section != "spectrum" && section != "darboux" && section != "mu" &&
          section != "export" && section != "verify")
        fail(line, "unknown section [" + section + "]");
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) fail(line, "expected key = value");
    const std::string key = trim(s.substr(0, eq));
    const std::string val = trim(s.substr(eq + 1));
    const std::string full = section.empty() ? key : section + "." + key;
    if (section == "darboux") cfg.darboux_set = true;

    if (full == "torus.omega1" || full == "omega1") {
      cfg.lattice.omega1 = complex(val, line);
    } else if (full == "torus.omega2" || full == "omega2") {
      cfg.lattice.omega2 = complex(val, line);
    } else if (full == "torus.beta0" || full == "beta0") {
      cfg.beta0 = complex(val, line);
    } else if (full == "torus.coeff" || full == "coeff") {
      const auto [d, q] = split_colon(val, line);
      const auto qv = reals(q, 4, line);
      cfg.coeffs.push_back({complex(d, line), Quaternion(qv[0], qv[1], qv[2], qv[3])});
    } else if (full == "torus.homogeneous" || full == "homogeneous") {
      const auto v = reals(val, 2, line);
      if (v[0] <= 0.0 || v[1] <= 0.0) fail(line, "radii must be positive");
      cfg.homogeneous = {v[0], v[1]};
    } else if (full == "spectrum.steps") {
      cfg.sweep_steps = positive_int(val, line);
    } else if (full == "spectrum.max_norm") {
      cfg.max_norm = reals(val, 1, line)[0];
    } else if (full == "darboux.mode") {
      if (val != "mono" && val != "poly") fail(line, "mode must be mono or poly");
      cfg.darboux_mode = val;
    } else if (full == "darboux.A") {
      cfg.A = complex(val, line);
    } else if (full == "darboux.B") {
      cfg.B = complex(val, line);
    } else if (full == "darboux.freq") {
      cfg.freq = static_cast<std::size_t>(int_at_least(val, 0, line));
    } else if (full == "darboux.t") {
      cfg.t = reals(val, 1, line)[0];
    } else if (full == "darboux.weight") {
      const auto [t, u] = split_colon(val, line);
      cfg.weights.push_back({reals(t, 1, line)[0], complex(u, line)});
    } else if (full == "mu.mu") {
      cfg.mus.push_back(complex(val, line));
    } else if (full == "export.grid") {
      cfg.export_grid = positive_int(val, line);
    } else if (full == "export.projection") {
      cfg.projection = val;
    } else if (full == "verify.grid") {
      cfg.verify_grid = positive_int(val, line);
    } else if (full == "verify.fd_step") {
      cfg.fd_step = reals(val, 1, line)[0];
    } else if (full == "verify.tol") {
      cfg.tol = reals(val, 1, line)[0];
    } else {
      fail(line, "unknown key '" + full + "'");
    }
  }
  if (cfg.homogeneous) {
    const double r1 = cfg.homogeneous->first, r2 = cfg.homogeneous->second;
    cfg.lattice = {Cx(1.0 / r1, 0.0), Cx(0.0, 1.0 / r2)};
    cfg.beta0 = Cx(r1, -r2);
  } else if (cfg.coeffs.empty()) {
    throw Error(ErrorCode::ConfigError, "no coeff lines and no homogeneous shortcut");
  }
  // β0 ∈ Γ* validated on load
  try {
    Spectrum(cfg.lattice, cfg.beta0);
  } catch (const Error& e) {
    throw Error(ErrorCode::ConfigError, e.what());
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

HslTorus RunConfig::torus() const {
  try {
    if (homogeneous) return homogeneous_torus(homogeneous->first, homogeneous->second);
    return HslTorus::create(lattice, beta0, coeffs);
  } catch (const Error& e) {
    throw Error(ErrorCode::ConfigError, e.what());
  }
}

}  // namespace hsl
