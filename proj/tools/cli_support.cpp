#include "cli_support.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace meanforge::cli {

std::map<std::string, std::string> parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::domain_error("cannot open config file: " + path);
  }
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!key.empty()) kv[key] = value;
  }
  return kv;
}

CliConfig config_from_environment() {
  CliConfig cfg;
  const char* path = std::getenv("MEANFORGE_CONFIG");
  if (!path || !*path) return cfg;
  const auto kv = parse_config_file(path);
  auto get = [&](const char* key) -> const std::string* {
    const auto it = kv.find(key);
    return it == kv.end() ? nullptr : &it->second;
  };
  if (const auto* v = get("format")) {
    if (*v == "json") {
      cfg.format = OutputFormat::json;
    } else if (*v == "csv") {
      cfg.format = OutputFormat::csv;
    } else {
      throw std::domain_error("config format must be csv or json");
    }
  }
  if (const auto* v = get("abs_tol")) cfg.quad.abs_tol = std::stod(*v);
  if (const auto* v = get("rel_tol")) cfg.quad.rel_tol = std::stod(*v);
  if (const auto* v = get("max_depth")) cfg.quad.max_depth = std::stoi(*v);
  if (const auto* v = get("max_evals")) cfg.quad.max_evals = std::stol(*v);
  if (const auto* v = get("threads")) cfg.threads = std::stoi(*v);
  return cfg;
}

std::vector<double> parse_range(const std::string& spec) {
  if (spec.empty()) return {};
  const bool log_spaced = spec.rfind("log:", 0) == 0;
  const std::string body = log_spaced ? spec.substr(4) : spec;

  const auto colons = std::count(body.begin(), body.end(), ':');
  if (colons == 2) {
    double lo, hi;
    int n;
    if (std::sscanf(body.c_str(), "%lf:%lf:%d", &lo, &hi, &n) != 3 || n < 1) {
      throw std::domain_error("bad range spec: " + spec);
    }
    std::vector<double> out;
    out.reserve(n);
    if (n == 1) {
      out.push_back(lo);
      return out;
    }
    if (log_spaced) {
      if (!(lo > 0.0 && hi > 0.0)) {
        throw std::domain_error("log range needs positive endpoints: " + spec);
      }
      const double step = std::log(hi / lo) / (n - 1);
      for (int i = 0; i < n; ++i) out.push_back(lo * std::exp(step * i));
    } else {
      const double step = (hi - lo) / (n - 1);
      for (int i = 0; i < n; ++i) out.push_back(lo + step * i);
    }
    return out;
  }
  if (colons != 0) throw std::domain_error("bad range spec: " + spec);

  std::vector<double> out;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw std::domain_error("bad range spec: " + spec);
    std::size_t used = 0;
    out.push_back(std::stod(tok, &used));
    if (used != tok.size()) throw std::domain_error("bad number: " + tok);
  }
  if (out.empty()) throw std::domain_error("empty range spec: " + spec);
  return out;
}

std::complex<double> parse_complex(const std::string& spec) {
  const auto comma = spec.find(',');
  if (comma == std::string::npos) {
    return {std::stod(spec), 0.0};
  }
  return {std::stod(spec.substr(0, comma)), std::stod(spec.substr(comma + 1))};
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_complex(std::complex<double> z) {
  if (z.imag() == 0.0) return format_number(z.real());
  return format_number(z.real()) + "," + format_number(z.imag());
}

std::string csv_header() {
  return "identity,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_res,rel_res,"
         "err_est,evals,converged";
}

std::string csv_row(const repr::ResidualReport& r) {
  std::string out = r.identity + "," + r.inputs;
  for (double v : {r.lhs.real(), r.lhs.imag(), r.rhs.real(), r.rhs.imag(),
                   r.abs_residual, r.rel_residual, r.rhs_err_estimate}) {
    out += "," + format_number(v);
  }
  out += "," + std::to_string(r.evals);
  out += r.converged ? ",1" : ",0";
  return out;
}

std::string json_row(const repr::ResidualReport& r) {
  nlohmann::ordered_json j;
  j["identity"] = r.identity;
  j["params"] = r.inputs;
  j["lhs_re"] = r.lhs.real();
  j["lhs_im"] = r.lhs.imag();
  j["rhs_re"] = r.rhs.real();
  j["rhs_im"] = r.rhs.imag();
  j["abs_res"] = r.abs_residual;
  j["rel_res"] = r.rel_residual;
  j["err_est"] = r.rhs_err_estimate;
  j["evals"] = r.evals;
  j["converged"] = r.converged;
  return j.dump();
}

Tolerance identity_tolerance(const std::string& identity) {
  if (identity == "h-alpha") return {1e-8, false};
  if (identity == "weighted-geometric") return {1e-6, false};
  if (identity == "am-gm") return {1e-6, true};
  if (identity == "log-mean") return {1e-5, false};
  if (identity == "a-l") return {1e-5, true};
  if (identity == "geometric-rho") return {1e-6, false};
  if (identity == "harmonic-shift") return {1e-8, true};
  if (identity == "harmonic-a-h") return {1e-10, true};
  if (identity == "harmonic-shift-pair") return {1e-8, true};
  if (identity == "gn") return {1e-6, false};
  if (identity == "log-integral") return {1e-8, false};
  if (identity == "identric") return {1e-12, false};
  if (identity == "contour") return {1e-4, true};
  throw std::domain_error("unknown identity: " + identity);
}

bool row_passes(const repr::ResidualReport& r) {
  if (!r.converged) return false;
  const Tolerance tol = identity_tolerance(r.identity);
  const double res = tol.absolute ? r.abs_residual : r.rel_residual;
  return res <= tol.value;
}

}  // namespace meanforge::cli
