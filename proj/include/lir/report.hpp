#ifndef LIR_REPORT_HPP
#define LIR_REPORT_HPP

#include <fstream>
#include <iostream>
#include <sstream>

#include "lir/bounds.hpp"
#include "lir/search.hpp"

namespace lir {

// Effective run parameters; every report header echoes these so no bounded
// enumeration can masquerade as a complete one.
struct RunConfig {
  u64 sieve_limit = 10'000'000;
  u64 smooth_bound = 10'000'000;
  u32 b_exp = 64;
  u64 j_explicit = 50;
  std::string format = "tsv";  // tsv | jsonl
  unsigned workers = 1;

  std::string echo() const {
    std::ostringstream os;
    os << "sieve_limit=" << sieve_limit << " smooth_bound=" << smooth_bound
       << " b_exp=" << b_exp << " j_explicit=" << j_explicit << " format=" << format
       << " workers=" << workers;
    return os.str();
  }
};

inline void report_header(std::ostream& os, const std::string& subcommand,
                          const RunConfig& cfg, const std::string& extra = "") {
  os << "# lir " << subcommand << " | " << cfg.echo();
  if (!extra.empty()) os << " | " << extra;
  os << "\n";
}

inline void write_triplets_tsv(std::ostream& os, const std::vector<CandidateTriplet>& ts) {
  os << "a\tn+a\n";
  for (auto& c : ts) os << c.a << "\t" << (c.n + c.a) << "\n";
}

// Folded view grouping the pairs the way the published tables print them:
// one line per a with all its n+a values.
inline void write_triplets_folded(std::ostream& os, const std::vector<CandidateTriplet>& ts) {
  std::map<u64, std::set<u64>> rows;
  for (auto& c : ts) rows[c.a].insert(c.n + c.a);
  for (auto& [a, nas] : rows) {
    os << a << "\t";
    bool first = true;
    for (u64 v : nas) {
      if (!first) os << ",";
      os << v;
      first = false;
    }
    os << "\n";
  }
}

inline void write_triplets_jsonl(std::ostream& os, const std::vector<CandidateTriplet>& ts) {
  for (auto& c : ts) {
    os << "{\"n\":" << c.n << ",\"k\":" << c.k << ",\"a\":" << c.a << ",\"m\":" << c.m
       << ",\"primes\":[";
    for (std::size_t i = 0; i < c.prime_witnesses.size(); ++i)
      os << (i ? "," : "") << c.prime_witnesses[i];
    os << "],\"filters\":[";
    for (std::size_t i = 0; i < c.filters_passed.size(); ++i)
      os << (i ? "," : "") << '"' << c.filters_passed[i] << '"';
    os << "]}\n";
  }
}

inline void write_bound_report(std::ostream& os, const BoundReport& r) {
  os << "suite=" << r.suite << " range=[" << r.lo << "," << r.hi << "]"
     << " points=" << r.points_checked << " violations=" << r.violations.size()
     << " min_slack=" << r.min_slack << " status=" << r.status_name() << "\n";
  for (auto& v : r.violations)
    os << "  violation x=" << v.x << " lhs=" << v.lhs << " rhs=" << v.rhs
       << (v.note.empty() ? "" : " " + v.note) << "\n";
}

// Flat key=value configuration file; unknown keys are rejected so typos in a
// config cannot silently change a run.
inline void load_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open config file " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw input_error("bad config line: " + line);
    std::string key = line.substr(0, eq), val = line.substr(eq + 1);
    if (key == "sieve_limit") cfg.sieve_limit = std::stoull(val);
    else if (key == "smooth_bound") cfg.smooth_bound = std::stoull(val);
    else if (key == "b_exp") cfg.b_exp = static_cast<u32>(std::stoul(val));
    else if (key == "j_explicit") cfg.j_explicit = std::stoull(val);
    else if (key == "format") cfg.format = val;
    else if (key == "workers") cfg.workers = static_cast<unsigned>(std::stoul(val));
    else throw input_error("unknown config key: " + key);
  }
}

}  // namespace lir

#endif  // LIR_REPORT_HPP
