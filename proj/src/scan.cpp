// Copyright 2026 The spinvqd Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinvqd/scan.hpp"

#include <json.hpp>

#include <array>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "spinvqd/errors.hpp"
#include "spinvqd/oracle.hpp"

namespace spinvqd {

namespace {

using json = nlohmann::json;

std::string num(double v) {
  std::array<char, 64> buf{};
  const auto r = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), r.ptr);
}

ReferenceKind parse_spin(const std::string& s) {
  if (s == "singlet")
    return ReferenceKind::ClosedShellSinglet;
  if (s == "triplet")
    return ReferenceKind::OpenShellTriplet;
  throw DomainError("unknown spin manifold '" + s + "' (expected singlet or triplet)");
}

template <class T> T get_or(const json& j, const char* key, T fallback) {
  return j.contains(key) ? j.at(key).get<T>() : fallback;
}

void log_line(int verbosity, const std::string& msg) {
  static std::mutex mu;
  if (verbosity <= 0)
    return;
  std::lock_guard lock(mu);
  std::cerr << msg << '\n';
}

GeometryResult run_geometry(const RunConfig& cfg, const GeometryEntry& g, const ScanOptions& opt) {
  GeometryResult res;
  res.geometry = g;
  try {
    const MolecularIntegrals m = read_fcidump(g.fcidump.string());
    const auto levels = fci_spectrum(m, 0);
    VqdConfig vcfg = cfg.vqd;
    if (opt.seed)
      vcfg.seed = *opt.seed;
    for (ReferenceKind spin : cfg.spins) {
      const double target_s2 = spin == ReferenceKind::ClosedShellSinglet ? 0.0 : 2.0;
      std::vector<SpectrumEntry> sector;
      for (const auto& e : levels)
        if (std::abs(e.s2 - target_s2) < 1e-6)
          sector.push_back(e);
      const auto labels = level_labels(sector);
      log_line(opt.verbosity, "[" + num(g.bond_length) + "] " + reference_name(spin) + " " +
                                  cfg.method.name() + " start");
      auto outcomes = vqd_sweep(m, spin, cfg.method, vcfg, cfg.adapt);
      for (auto& o : outcomes) {
        StateRow row;
        row.bond_length = g.bond_length;
        row.spin = spin;
        if (!sector.empty()) {
          std::size_t best = 0;
          for (std::size_t k = 1; k < sector.size(); ++k)
            if (std::abs(sector[k].energy - o.energy) < std::abs(sector[best].energy - o.energy))
              best = k;
          row.label = labels[best];
          row.fci_energy = sector[best].energy;
        }
        log_line(opt.verbosity, "[" + num(g.bond_length) + "] " + reference_name(spin) +
                                    " state " + std::to_string(o.index) + " E=" + num(o.energy) +
                                    " (" + row.label + ") ops=" + std::to_string(o.operator_count));
        row.outcome = std::move(o);
        res.rows.push_back(std::move(row));
      }
    }
    res.ok = true;
  } catch (const std::exception& e) {
    res.ok = false;
    res.error = e.what();
    res.rows.clear();
    log_line(opt.verbosity, "[" + num(g.bond_length) + "] failed: " + res.error);
  }
  return res;
}

} // namespace

// ---- config ----

RunConfig RunConfig::from_json(const std::string& text, const std::filesystem::path& base) {
  RunConfig cfg;
  try {
    const json j = json::parse(text);
    if (!j.is_object())
      throw FormatError("run config must be a JSON object");
    if (!j.contains("geometries") || !j.contains("method"))
      throw FormatError("run config needs 'geometries' and 'method'");
    for (const auto& g : j.at("geometries")) {
      GeometryEntry e;
      e.bond_length = g.at("bond_length").get<double>();
      std::filesystem::path p = g.at("fcidump").get<std::string>();
      e.fcidump = p.is_absolute() ? p : base / p;
      cfg.geometries.push_back(std::move(e));
    }
    cfg.method = parse_method(j.at("method").get<std::string>());
    if (j.contains("spins")) {
      cfg.spins.clear();
      for (const auto& s : j.at("spins"))
        cfg.spins.push_back(parse_spin(s.get<std::string>()));
    }
    cfg.vqd.n_states = get_or(j, "n_states", cfg.vqd.n_states);
    cfg.vqd.beta = get_or(j, "beta", cfg.vqd.beta);
    cfg.vqd.seed = get_or<std::uint64_t>(j, "seed", cfg.vqd.seed);
    if (j.contains("adapt")) {
      const auto& a = j.at("adapt");
      cfg.adapt.epsilon = get_or(a, "epsilon", cfg.adapt.epsilon);
      cfg.adapt.max_ops = get_or(a, "max_ops", cfg.adapt.max_ops);
      const auto rule = get_or<std::string>(a, "score_rule", "effective_gradient");
      if (rule == "effective_gradient")
        cfg.adapt.rule = ScoreRule::EffectiveGradient;
      else if (rule == "absolute_sum")
        cfg.adapt.rule = ScoreRule::AbsoluteSum;
      else
        throw DomainError("unknown ADAPT score_rule '" + rule + "'");
    }
    cfg.adapt.beta = cfg.vqd.beta;
    if (j.contains("optimizer")) {
      const auto& o = j.at("optimizer");
      auto& oc = cfg.vqd.optimizer;
      oc.pgtol = get_or(o, "pgtol", oc.pgtol);
      oc.max_iter = get_or(o, "max_iter", oc.max_iter);
      oc.memory = get_or(o, "memory", oc.memory);
      oc.lower = get_or(o, "lower", oc.lower);
      oc.upper = get_or(o, "upper", oc.upper);
      oc.ftol = get_or(o, "ftol", oc.ftol);
      oc.max_linesearch = get_or(o, "max_linesearch", oc.max_linesearch);
    }
    if (j.contains("output_dir")) {
      std::filesystem::path p = j.at("output_dir").get<std::string>();
      cfg.output_dir = p.is_absolute() ? p : base / p;
    }
  } catch (const json::exception& e) {
    throw FormatError(std::string("run config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

RunConfig RunConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw FormatError("cannot open run config " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str(), path.parent_path());
}

void RunConfig::validate() const {
  if (geometries.empty())
    throw DomainError("run config lists no geometries");
  for (std::size_t i = 1; i < geometries.size(); ++i)
    if (!(geometries[i].bond_length > geometries[i - 1].bond_length))
      throw DomainError("geometries must be strictly increasing");
  if (spins.empty())
    throw DomainError("run config lists no spin manifolds");
  vqd.validate();
  adapt.validate();
}

// ---- resources ----

ResourceRow report_resources(const AnsatzState& a, const OperatorPool& pool,
                             const std::string& method) {
  std::map<int, std::vector<const ExcitationGenerator*>> blocks;
  for (const auto& s : a.slots)
    blocks[s.block].push_back(&pool.generators.at(s.pool_index));
  ResourceRow r{method, static_cast<int>(a.size()), 0, 0};
  for (const auto& [b, gens] : blocks) {
    r.gadgets += gadget_count(gens);
    r.naive_cx += naive_cx_count(gens);
  }
  return r;
}

ResourceRow report_resources(const MethodSpec& method, int n_orb) {
  if (method.method == Method::ADAPT)
    throw DomainError("ADAPT resources depend on the grown ansatz");
  const auto flavor = method.method == Method::UCCGSD ? PoolFlavor::sUCCGSD : PoolFlavor::sUpCCGSD;
  const OperatorPool pool = build_pool(flavor, n_orb);
  const int layers = method.method == Method::UCCGSD ? 1 : method.k;
  return report_resources(build_layered_ansatz(pool, layers, 0), pool, method.name());
}

// ---- execution ----

ScanResult execute_scan(const RunConfig& cfg, const ScanOptions& opt) {
  cfg.validate();
  ScanResult out;
  out.geometries.resize(cfg.geometries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cfg.geometries.size(); i = next++)
      out.geometries[i] = run_geometry(cfg, cfg.geometries[i], opt);
  };
  const int n = std::max(1, std::min<int>(opt.workers, static_cast<int>(cfg.geometries.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < n; ++t)
      pool.emplace_back(worker);
  }
  for (const auto& g : out.geometries)
    if (!g.ok)
      ++out.failures;
  return out;
}

void write_energies_csv(std::ostream& os, const RunConfig& cfg, const ScanResult& r) {
  os << "geometry_angstrom,spin,state,label,method,energy_ha,fci_energy_ha,error_mha,s2,"
        "operators,iterations,converged\n";
  for (const auto& g : r.geometries)
    for (const auto& row : g.rows) {
      const auto& o = row.outcome;
      os << num(row.bond_length) << ',' << reference_name(row.spin) << ',' << o.index << ','
         << row.label << ',' << cfg.method.name() << ',' << num(o.energy) << ','
         << num(row.fci_energy) << ',' << num((o.energy - row.fci_energy) * 1000.0) << ','
         << num(o.s2) << ',' << o.operator_count << ',' << o.iterations << ','
         << (o.converged ? 1 : 0) << '\n';
    }
}

void write_npe_csv(std::ostream& os, const RunConfig& cfg, const ScanResult& r) {
  struct Acc {
    std::vector<double> errors;
    std::set<std::string> labels;
  };
  std::map<std::pair<int, int>, Acc> acc;
  for (const auto& g : r.geometries)
    for (const auto& row : g.rows) {
      auto& a = acc[{static_cast<int>(row.spin), row.outcome.index}];
      a.errors.push_back((row.outcome.energy - row.fci_energy) * 1000.0);
      a.labels.insert(row.label);
    }
  os << "spin,state,labels,method,npe_mha,geometries\n";
  for (const auto& [key, a] : acc) {
    std::string labels;
    for (const auto& l : a.labels)
      labels += (labels.empty() ? "" : "|") + l;
    os << reference_name(static_cast<ReferenceKind>(key.first)) << ',' << key.second << ','
       << labels << ',' << cfg.method.name() << ',' << num(npe(a.errors)) << ','
       << a.errors.size() << '\n';
  }
}

void write_resources_csv(std::ostream& os, const RunConfig& cfg, const ScanResult& r) {
  os << "geometry_angstrom,spin,state,method,operators,gadgets,naive_cx,note\n";
  std::map<int, OperatorPool> pools;
  const auto flavor =
      cfg.method.method == Method::UCCGSD ? PoolFlavor::sUCCGSD : PoolFlavor::sUpCCGSD;
  for (const auto& g : r.geometries)
    for (const auto& row : g.rows) {
      const int n_orb = row.outcome.state.n_qubits() / 2;
      auto it = pools.find(n_orb);
      if (it == pools.end())
        it = pools.emplace(n_orb, build_pool(flavor, n_orb)).first;
      const ResourceRow rr = report_resources(row.outcome.ansatz, it->second, cfg.method.name());
      os << num(row.bond_length) << ',' << reference_name(row.spin) << ',' << row.outcome.index
         << ',' << rr.method << ',' << rr.operators << ',' << rr.gadgets << ',' << rr.naive_cx
         << ",uncompiled\n";
    }
}

void write_growth_csv(std::ostream& os, const ScanResult& r) {
  os << "geometry_angstrom,spin,state,iteration,operator,pool_index,epsilon,value_ha,energy_ha,"
        "optimizer_iterations\n";
  for (const auto& g : r.geometries)
    for (const auto& row : g.rows)
      for (const auto& s : row.outcome.growth)
        os << num(row.bond_length) << ',' << reference_name(row.spin) << ',' << row.outcome.index
           << ',' << s.iteration << ',' << (s.label.empty() ? "-" : s.label) << ','
           << (s.label.empty() ? std::string("-") : std::to_string(s.pool_index)) << ','
           << num(s.epsilon) << ',' << num(s.value) << ',' << num(s.energy) << ','
           << s.iterations << '\n';
}

int run_scan(const RunConfig& cfg, const ScanOptions& opt) {
  const ScanResult r = execute_scan(cfg, opt);
  const auto dir = opt.output_dir ? *opt.output_dir : cfg.output_dir;
  std::filesystem::create_directories(dir);
  auto write = [&](const char* name, auto&& fn) {
    std::ofstream f(dir / name, std::ios::binary);
    if (!f)
      throw ResourceError("cannot write " + (dir / name).string());
    fn(f);
  };
  write("energies.csv", [&](std::ostream& os) { write_energies_csv(os, cfg, r); });
  write("npe.csv", [&](std::ostream& os) { write_npe_csv(os, cfg, r); });
  write("resources.csv", [&](std::ostream& os) { write_resources_csv(os, cfg, r); });
  if (cfg.method.method == Method::ADAPT)
    write("growth_trace.csv", [&](std::ostream& os) { write_growth_csv(os, r); });
  for (const auto& g : r.geometries)
    if (!g.ok)
      std::cerr << "geometry " << num(g.geometry.bond_length) << " failed: " << g.error << '\n';
  return r.failures == 0 ? 0 : 1;
}

} // namespace spinvqd
