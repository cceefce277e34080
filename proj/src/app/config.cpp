// Copyright 2026 The tpq Authors
// SPDX-License-Identifier: Apache-2.0

#include "tpq/app/config.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <initializer_list>
#include <limits>
#include <string_view>

namespace tpq::app {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ConfigError(where + ": " + what);
}

void reject_unknown(const json& obj, const std::string& where,
                    std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) fail(where, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      fail(where, "unknown key '" + key + "'");
    }
  }
}

double to_number(const json& v, const std::string& where) {
  if (!v.is_number()) fail(where, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(where, "must be finite");
  return x;
}

int to_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) fail(where, "expected an integer");
  const auto x = v.get<std::int64_t>();
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) {
    fail(where, "out of range");
  }
  return static_cast<int>(x);
}

std::string to_text(const json& v, const std::string& where) {
  if (!v.is_string()) fail(where, "expected a string");
  return v.get<std::string>();
}

template <typename T, typename F>
std::vector<T> to_list(const json& v, const std::string& where, F&& item) {
  if (!v.is_array()) fail(where, "expected an array");
  std::vector<T> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(item(v[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

// Calls f(value, "section.key") when the key is present.
template <typename F>
void with(const json& obj, const std::string& section, const char* key, F&& f) {
  if (auto it = obj.find(key); it != obj.end()) f(*it, section + "." + key);
}

void parse_model(const json& m, RunConfig& cfg) {
  reject_unknown(m, "model", {"dimension", "extents", "N", "Jx", "Jy", "Jz", "hx"});
  std::optional<int> dimension;
  std::optional<int> n;
  with(m, "model", "dimension", [&](const json& v, const std::string& w) { dimension = to_int(v, w); });
  with(m, "model", "N", [&](const json& v, const std::string& w) { n = to_int(v, w); });
  with(m, "model", "extents", [&](const json& v, const std::string& w) {
    cfg.lattice.extents = to_list<int>(v, w, to_int);
  });
  if (!m.contains("extents")) {
    if (!n) fail("model", "either extents or N is required");
    if (dimension.value_or(1) != 1) fail("model", "extents are required in 2D");
    cfg.lattice.extents = {*n};
  }
  if (dimension && *dimension != cfg.lattice.dimension()) {
    fail("model", "dimension " + std::to_string(*dimension) + " does not match " +
                      std::to_string(cfg.lattice.dimension()) + " extents");
  }
  for (int e : cfg.lattice.extents) {
    if (e < 1) fail("model.extents", "extents must be positive");
  }
  if (n && *n != cfg.lattice.num_sites()) {
    fail("model", "product of extents is " + std::to_string(cfg.lattice.num_sites()) +
                      " but N = " + std::to_string(*n));
  }
  with(m, "model", "Jx", [&](const json& v, const std::string& w) { cfg.lattice.jx = to_number(v, w); });
  with(m, "model", "Jy", [&](const json& v, const std::string& w) { cfg.lattice.jy = to_number(v, w); });
  with(m, "model", "Jz", [&](const json& v, const std::string& w) { cfg.lattice.jz = to_number(v, w); });
  with(m, "model", "hx", [&](const json& v, const std::string& w) { cfg.lattice.hx = to_number(v, w); });
  try {
    cfg.lattice.validate_geometry();  // N = 1 is left to validate_for
  } catch (const InvalidArgument& e) {
    fail("model", e.what());
  }
}

void parse_random_circuit(const json& r, RunConfig& cfg) {
  reject_unknown(r, "random_circuit", {"depth", "entangler", "seed", "input"});
  with(r, "random_circuit", "depth", [&](const json& v, const std::string& w) {
    cfg.depth = to_int(v, w);
    if (cfg.depth < 1) fail(w, "must be >= 1");
  });
  with(r, "random_circuit", "entangler", [&](const json& v, const std::string& w) {
    const std::string s = to_text(v, w);
    if (s == "cz") {
      cfg.entangler = Entangler::CZ;
    } else if (s == "cnot") {
      cfg.entangler = Entangler::CNOT;
    } else {
      fail(w, "expected 'cz' or 'cnot'");
    }
  });
  with(r, "random_circuit", "seed", [&](const json& v, const std::string& w) {
    if (!v.is_number_unsigned()) fail(w, "expected a non-negative integer");
    cfg.seed = v.get<std::uint64_t>();
  });
  with(r, "random_circuit", "input", [&](const json& v, const std::string& w) {
    const std::string s = to_text(v, w);
    if (s == "circuit") {
      cfg.input = InputState::RandomCircuit;
    } else if (s == "haar") {
      cfg.input = InputState::Haar;
    } else {
      fail(w, "expected 'circuit' or 'haar'");
    }
  });
}

void parse_backend(const json& b, RunConfig& cfg) {
  reject_unknown(b, "backend",
                 {"kind", "epsilon", "n_steps", "domain", "threshold", "regularization"});
  DilatedBackend dilated;
  FableBackend fable;
  QiteBackend qite;
  with(b, "backend", "epsilon", [&](const json& v, const std::string& w) {
    dilated.epsilon = to_number(v, w);
    if (dilated.epsilon <= 0) fail(w, "must be > 0");
  });
  with(b, "backend", "threshold", [&](const json& v, const std::string& w) {
    fable.threshold = to_number(v, w);
    if (fable.threshold < 0) fail(w, "must be >= 0");
  });
  with(b, "backend", "n_steps", [&](const json& v, const std::string& w) {
    qite.n_steps = to_int(v, w);
    if (qite.n_steps < 1) fail(w, "must be >= 1");
  });
  with(b, "backend", "domain", [&](const json& v, const std::string& w) {
    qite.domain = to_int(v, w);
    if (qite.domain < 0 || qite.domain > cfg.lattice.num_sites()) {
      fail(w, "must lie in [0, N]");
    }
  });
  with(b, "backend", "regularization", [&](const json& v, const std::string& w) {
    qite.regularization = to_number(v, w);
    if (qite.regularization < 0) fail(w, "must be >= 0");
  });
  const std::string kind = b.contains("kind") ? to_text(b["kind"], "backend.kind") : "exact";
  if (kind == "exact") {
    cfg.backend = ExactBackend{};
  } else if (kind == "dilated") {
    cfg.backend = dilated;
  } else if (kind == "fable") {
    cfg.backend = fable;
  } else if (kind == "qite") {
    cfg.backend = qite;
  } else {
    fail("backend.kind", "expected exact, dilated, fable or qite");
  }
}

PauliSum parse_observable(const json& v, int num_sites) {
  const std::string where = "estimate.observable";
  PauliSum sum;
  if (v.is_string()) {
    if (v.get<std::string>() != "H") fail(where, "the only named observable is \"H\"");
    return sum;
  }
  if (!v.is_array() || v.empty()) fail(where, "expected \"H\" or a non-empty array of terms");
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string w = where + "[" + std::to_string(i) + "]";
    reject_unknown(v[i], w, {"coefficient", "pauli"});
    const double c = v[i].contains("coefficient") ? to_number(v[i]["coefficient"], w) : 1.0;
    if (!v[i].contains("pauli")) fail(w, "missing 'pauli'");
    try {
      sum.terms.push_back(PauliTerm::parse(c, to_text(v[i]["pauli"], w + ".pauli")));
    } catch (const InvalidArgument& e) {
      fail(w, e.what());
    }
  }
  if (sum.width() > num_sites) fail(where, "acts on qubits outside the lattice");
  return sum;
}

void parse_estimate(const json& e, RunConfig& cfg) {
  reject_unknown(e, "estimate", {"betas", "R", "shots", "observable"});
  with(e, "estimate", "betas", [&](const json& v, const std::string& w) {
    cfg.betas = to_list<double>(v, w, to_number);
    if (cfg.betas.empty()) fail(w, "must not be empty");
    for (double b : cfg.betas) {
      if (b < 0) fail(w, "beta must be >= 0");
    }
  });
  with(e, "estimate", "R", [&](const json& v, const std::string& w) {
    cfg.realizations = to_int(v, w);
    if (cfg.realizations < 1) fail(w, "must be >= 1");
  });
  with(e, "estimate", "shots", [&](const json& v, const std::string& w) {
    cfg.shots = to_int(v, w);
    if (cfg.shots < 0) fail(w, "must be >= 0");
  });
  with(e, "estimate", "observable", [&](const json& v, const std::string&) {
    PauliSum a = parse_observable(v, cfg.lattice.num_sites());
    if (!a.terms.empty()) cfg.observable = std::move(a);
  });
}

void parse_scan(const json& s, RunConfig& cfg) {
  reject_unknown(s, "scan", {"depths", "seeds", "epsilons", "sizes", "beta", "R_values",
                             "base_seeds", "methods", "timing_runs"});
  ScanConfig& sc = cfg.scan;
  with(s, "scan", "depths", [&](const json& v, const std::string& w) {
    sc.depths = to_list<int>(v, w, to_int);
    for (int d : sc.depths) {
      if (d < 0) fail(w, "depths must be >= 0");
    }
  });
  with(s, "scan", "seeds", [&](const json& v, const std::string& w) {
    sc.seeds = to_int(v, w);
    if (sc.seeds < 1) fail(w, "must be >= 1");
  });
  with(s, "scan", "epsilons", [&](const json& v, const std::string& w) {
    sc.epsilons = to_list<double>(v, w, to_number);
    for (double x : sc.epsilons) {
      if (x <= 0) fail(w, "epsilons must be > 0");
    }
  });
  with(s, "scan", "sizes", [&](const json& v, const std::string& w) {
    sc.sizes = to_list<int>(v, w, to_int);
    for (int n : sc.sizes) {
      if (n < 2) fail(w, "sizes must be >= 2");
    }
  });
  with(s, "scan", "beta", [&](const json& v, const std::string& w) {
    sc.beta = to_number(v, w);
    if (sc.beta < 0) fail(w, "must be >= 0");
  });
  with(s, "scan", "R_values", [&](const json& v, const std::string& w) {
    sc.r_values = to_list<int>(v, w, to_int);
    for (int r : sc.r_values) {
      if (r < 1) fail(w, "R values must be >= 1");
    }
  });
  with(s, "scan", "base_seeds", [&](const json& v, const std::string& w) {
    sc.base_seeds = to_int(v, w);
    if (sc.base_seeds < 1) fail(w, "must be >= 1");
  });
  with(s, "scan", "methods", [&](const json& v, const std::string& w) {
    sc.methods = to_list<std::string>(v, w, to_text);
    for (const auto& m : sc.methods) {
      if (m != "qite" && m != "inexact_qite" && m != "dilated" && m != "fable") {
        fail(w, "unknown method '" + m + "'");
      }
    }
  });
  with(s, "scan", "timing_runs", [&](const json& v, const std::string& w) {
    sc.timing_runs = to_int(v, w);
    if (sc.timing_runs < 1) fail(w, "must be >= 1");
  });
}

bool needs_dense(const BackendSpec& b) { return !std::holds_alternative<QiteBackend>(b); }

}  // namespace

Subcommand parse_subcommand(const std::string& name) {
  if (name == "sweep-beta") return Subcommand::SweepBeta;
  if (name == "entropy-scan") return Subcommand::EntropyScan;
  if (name == "dilation-scan") return Subcommand::DilationScan;
  if (name == "error-scan") return Subcommand::ErrorScan;
  if (name == "resources") return Subcommand::Resources;
  throw ConfigError("unknown subcommand '" + name + "'");
}

std::string subcommand_name(Subcommand cmd) {
  switch (cmd) {
    case Subcommand::SweepBeta: return "sweep-beta";
    case Subcommand::EntropyScan: return "entropy-scan";
    case Subcommand::DilationScan: return "dilation-scan";
    case Subcommand::ErrorScan: return "error-scan";
    case Subcommand::Resources: return "resources";
  }
  return {};
}

TpqRunSpec RunConfig::run_spec() const {
  TpqRunSpec s;
  s.lattice = lattice;
  s.observable = observable;
  s.betas = betas;
  s.realizations = realizations;
  s.depth = depth;
  s.entangler = entangler;
  s.input = input;
  s.backend = backend;
  s.base_seed = seed;
  s.shots = shots;
  return s;
}

RunConfig parse_config(const json& doc) {
  reject_unknown(doc, "config",
                 {"model", "random_circuit", "backend", "estimate", "scan", "output"});
  if (!doc.contains("model")) throw ConfigError("config: missing 'model' section");
  RunConfig cfg;
  parse_model(doc["model"], cfg);
  if (doc.contains("random_circuit")) parse_random_circuit(doc["random_circuit"], cfg);
  if (doc.contains("backend")) parse_backend(doc["backend"], cfg);
  if (doc.contains("estimate")) parse_estimate(doc["estimate"], cfg);
  if (doc.contains("scan")) parse_scan(doc["scan"], cfg);
  if (doc.contains("output")) {
    reject_unknown(doc["output"], "output", {"path"});
    with(doc["output"], "output", "path",
         [&](const json& v, const std::string& w) { cfg.output_path = to_text(v, w); });
  }
  cfg.document = doc;
  cfg.sha256 = sha256_hex(doc.dump());
  return cfg;
}

json read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config file '" + path + "': " + e.what());
  }
}

void validate_for(const RunConfig& cfg, Subcommand cmd) {
  const int n = cfg.lattice.num_sites();
  auto dense_limit = [](int sites, const std::string& what) {
    if (sites > kDefaultMaxDenseQubits) {
      throw ConfigError(what + " needs the dense Hamiltonian; N = " + std::to_string(sites) +
                        " exceeds " + std::to_string(kDefaultMaxDenseQubits));
    }
  };
  if (cmd == Subcommand::EntropyScan) {
    if (cfg.scan.depths.empty()) throw ConfigError("scan.depths is required");
    return;
  }
  try {
    cfg.run_spec().validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
  switch (cmd) {
    case Subcommand::SweepBeta:
      if (needs_dense(cfg.backend)) dense_limit(n, backend_name(cfg.backend) + " backend");
      break;
    case Subcommand::EntropyScan:
      break;
    case Subcommand::DilationScan:
      if (cfg.scan.epsilons.empty()) throw ConfigError("scan.epsilons is required");
      dense_limit(n, "dilation-scan");
      break;
    case Subcommand::ErrorScan:
      if (cfg.scan.depths.empty()) throw ConfigError("scan.depths is required");
      if (cfg.scan.sizes.size() < 2) throw ConfigError("scan.sizes needs at least two sizes");
      for (int d : cfg.scan.depths) {
        if (d < 1) throw ConfigError("scan.depths must be >= 1 for error-scan");
      }
      for (int s : cfg.scan.sizes) dense_limit(s, "error-scan");
      if (needs_dense(cfg.backend)) {
        if (!cfg.scan.r_values.empty()) dense_limit(n, "error-scan averaging");
      }
      break;
    case Subcommand::Resources:
      if (cfg.scan.sizes.empty()) throw ConfigError("scan.sizes is required");
      for (const auto& m : cfg.scan.methods) {
        if (m == "dilated" || m == "fable") {
          for (int s : cfg.scan.sizes) dense_limit(s, m + " resources");
        }
      }
      break;
  }
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xf]);
  }
  return out;
}

}  // namespace tpq::app
