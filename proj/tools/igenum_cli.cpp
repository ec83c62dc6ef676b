// igenum: command-line access to unlabeled graphs of five intersection-graph
// classes, each encoded as the accepted strings of a levelled BDD.
//
// Exit codes: 0 success, 1 I/O failure, 2 invalid specification or empty
// class, 3 resource limit, 4 verification mismatch.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "igenum/bdd.hpp"
#include "igenum/enumeration.hpp"
#include "igenum/errors.hpp"
#include "igenum/oracle.hpp"

namespace {

using namespace igenum;

enum ExitCode : int { kOk = 0, kIo = 1, kInvalid = 2, kResource = 3, kMismatch = 4 };

// Lists larger than this need an explicit --limit.
constexpr std::uint64_t kListThreshold = 10000;

struct SpecOptions {
  std::string cls;
  int n = 0;
  std::optional<int> k;
  std::optional<int> biclique;
  std::optional<int> m;

  EnumerationSpec resolve() const {
    EnumerationSpec spec;
    const auto parsed = parse_class(cls);
    if (!parsed) throw std::invalid_argument("unknown class '" + cls + "'");
    spec.cls = *parsed;
    spec.n = n;
    if (biclique) {
      if (spec.cls != GraphClass::Chain) {
        throw std::invalid_argument("--max-biclique applies to chain graphs only");
      }
      if (k) throw std::invalid_argument("give either -k or --max-biclique");
      spec.k = biclique;
    } else {
      spec.k = k;
    }
    spec.m = m;
    validate(spec);
    return spec;
  }
};

void add_spec_options(CLI::App& cmd, SpecOptions& o) {
  std::string names;
  for (auto cls : kAllClasses) names += std::string(names.empty() ? "" : ", ") + std::string(class_name(cls));
  cmd.add_option("--class", o.cls, "graph class: " + names)->required();
  cmd.add_option("-n", o.n, "vertex count")->required();
  cmd.add_option("-k,--max-clique", o.k, "maximum clique size (maximum biclique for chain)");
  cmd.add_option("--max-biclique", o.biclique, "maximum biclique size, chain only");
  cmd.add_option("-m,--edges", o.m, "exact edge count");
}

std::string render(const ClassMachine& machine, const BinaryString& labels, const std::string& format) {
  const BinaryString natural = machine.to_natural(labels);
  if (format == "string") return natural.str() + "\n";
  return machine.decode(natural).to_edge_list();
}

int cmd_count(const SpecOptions& o, bool with_stats) {
  const ClassMachine machine(o.resolve());
  const auto d = machine.build();
  std::cout << count(d) << "\n";
  if (with_stats) {
    const auto s = stats(d);
    for (std::size_t level = 0; level < s.nodes_per_level.size(); ++level) {
      std::cout << "level " << level + 1 << " " << s.nodes_per_level[level] << "\n";
    }
    std::cout << "total_nodes " << s.total_nodes << "\n";
    std::cout << "build_ms " << std::fixed << std::setprecision(3)
              << std::chrono::duration<double, std::milli>(s.build_time).count() << "\n";
  }
  return kOk;
}

int cmd_sample(const SpecOptions& o, std::optional<std::uint64_t> seed, int num,
               const std::string& format) {
  const ClassMachine machine(o.resolve());
  const auto d = machine.build();
  const Sampler sampler(d);
  std::mt19937_64 rng(seed ? *seed : std::random_device{}());
  for (int i = 0; i < num; ++i) {
    if (i > 0 && format == "edges") std::cout << "\n";
    std::cout << render(machine, sampler.draw(rng), format);
  }
  return kOk;
}

int cmd_list(const SpecOptions& o, std::optional<std::uint64_t> limit, const std::string& format) {
  const ClassMachine machine(o.resolve());
  const auto d = machine.build();
  const BigInt total = count(d);
  if (!limit && total > kListThreshold) {
    std::cerr << "refusing to list " << total << " graphs; pass --limit to acknowledge\n";
    std::cout << total << "\n";
    return kResource;
  }
  std::uint64_t printed = 0;
  for_each_accepted(d, [&](const BinaryString& labels) {
    if (limit && printed >= *limit) return false;
    if (printed > 0 && format == "edges") std::cout << "\n";
    std::cout << render(machine, labels, format);
    ++printed;
    return true;
  });
  return kOk;
}

std::pair<int, int> parse_range(const std::string& text) {
  static const std::regex range(R"(^\s*(\d+)\s*(?:\.\.\s*(\d+))?\s*$)");
  std::smatch match;
  if (!std::regex_match(text, match, range)) {
    throw std::invalid_argument("expected N or A..B, got '" + text + "'");
  }
  const int lo = std::stoi(match[1]);
  const int hi = match[2].matched ? std::stoi(match[2]) : lo;
  if (lo < 1 || hi < lo) throw std::invalid_argument("empty vertex range '" + text + "'");
  return {lo, hi};
}

std::vector<EnumerationSpec> verify_specs(GraphClass cls, int n, bool constrained) {
  std::vector<EnumerationSpec> out;
  EnumerationSpec base;
  base.cls = cls;
  base.n = n;
  out.push_back(base);
  if (!constrained) return out;
  if (cls != GraphClass::BipartitePermutation) {
    for (int k = cls == GraphClass::Chain ? 2 : 1; k <= n; ++k) {
      auto s = base;
      s.k = k;
      out.push_back(s);
    }
  }
  for (int m = 0; m <= max_edges(n); ++m) {
    auto s = base;
    s.m = m;
    out.push_back(s);
  }
  return out;
}

std::string opt_text(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

int cmd_verify(const std::string& range, const std::vector<std::string>& classes, bool all_classes,
               bool constrained) {
  const auto [lo, hi] = parse_range(range);
  if (hi > kOracleMaxVertices) {
    throw ResourceLimitError("the oracle enumerates at most " + std::to_string(kOracleMaxVertices) +
                             " vertices; requested " + std::to_string(hi));
  }
  std::vector<GraphClass> selected;
  if (all_classes || classes.empty()) {
    selected.assign(kAllClasses.begin(), kAllClasses.end());
  } else {
    for (const auto& name : classes) {
      const auto cls = parse_class(name);
      if (!cls) throw std::invalid_argument("unknown class '" + name + "'");
      selected.push_back(*cls);
    }
  }

  std::cout << std::left << std::setw(23) << "class" << std::setw(4) << "n" << std::setw(4) << "k"
            << std::setw(5) << "m" << std::setw(9) << "oracle" << std::setw(9) << "bdd"
            << std::setw(9) << "strings" << "status\n";
  int failures = 0;
  std::size_t checks = 0;
  for (auto cls : selected) {
    for (int n = lo; n <= hi; ++n) {
      for (const auto& spec : verify_specs(cls, n, constrained)) {
        const auto r = cross_check(spec);
        ++checks;
        const bool unconstrained = !spec.k && !spec.m;
        if (!r.ok()) ++failures;
        if (!unconstrained && r.ok()) continue;  // constrained rows only when they fail
        std::cout << std::setw(23) << class_name(cls) << std::setw(4) << n << std::setw(4)
                  << opt_text(spec.k) << std::setw(5) << opt_text(spec.m) << std::setw(9)
                  << r.oracle_count << std::setw(9) << r.bdd_count << std::setw(9)
                  << (r.string_checked ? (r.string_equal ? "equal" : "DIFFER") : "skipped")
                  << (r.ok() ? "ok" : "MISMATCH") << "\n";
        if (!r.ok()) {
          std::cout << "  missing or extra graphs: " << r.mismatches.size()
                    << ", duplicated graphs: " << r.duplicates.size() << "\n";
        }
      }
    }
  }
  std::cout << checks << " cross-checks, " << failures << " failed\n\n";

  // Formula findings do not depend on the requested range.
  constexpr int kFindingsMaxN = 7;
  const auto f = formula_findings(kFindingsMaxN);
  std::cout << "edge-count formulas over valid strings with n <= " << kFindingsMaxN << ":\n"
            << "  K2 (LLRR) has " << f.k2_edges << " edge\n"
            << "  proper interval, sum of h over L positions: K2 gives "
            << f.k2_interval_height_sum << "; disagrees on " << f.interval_literal_mismatches
            << " of " << f.interval_strings << " strings\n"
            << "  proper interval, sum of (h - 1) over L positions: disagrees on "
            << f.interval_corrected_mismatches << " of " << f.interval_strings << "\n"
            << "  bipartite permutation, sum of h(2i): K2 gives " << f.k2_permutation_height_sum
            << "; disagrees on " << f.permutation_literal_mismatches << " of "
            << f.permutation_strings << " strings\n"
            << "  bipartite permutation, half the sum of h(2i): disagrees on "
            << f.permutation_corrected_mismatches << " of " << f.permutation_strings << "\n"
            << "  bipartite permutation, front/back split of the sum differs from the full sum on "
            << f.permutation_split_disagreements << " of " << f.permutation_strings << "\n\n";

  bool header = false;
  for (const auto& r : reading_findings(std::min(hi, kFindingsMaxN))) {
    if (std::find(selected.begin(), selected.end(), r.cls) == selected.end() || r.n < lo) continue;
    if (!header) {
      std::cout << "plain readings (strings accepted / distinct graphs / oracle):\n";
      header = true;
    }
    const char* rule = r.cls == GraphClass::Cochain ? "no trailing R" : "at least its plain reversal";
    std::cout << "  " << std::setw(10) << class_name(r.cls) << " n=" << r.n << " " << rule << ": "
              << r.literal_strings << " / " << r.literal_distinct << " / " << r.oracle_count
              << "\n";
  }
  return failures == 0 ? kOk : kMismatch;
}

int cmd_export(const SpecOptions& o, const std::string& path) {
  const ClassMachine machine(o.resolve());
  const std::string dot = export_dot(machine.build());
  std::ofstream out(path);
  if (!out || !(out << dot) || !out.flush()) {
    std::cerr << "cannot write " << path << "\n";
    return kIo;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unlabeled graphs of five intersection-graph classes through levelled BDDs"};
  app.require_subcommand(1);

  SpecOptions count_opts, sample_opts, list_opts, export_opts;
  bool with_stats = false;
  auto* count_cmd = app.add_subcommand("count", "print the number of graphs");
  add_spec_options(*count_cmd, count_opts);
  count_cmd->add_flag("--stats", with_stats, "also print per-level node counts");

  std::optional<std::uint64_t> seed;
  int num = 1;
  std::string sample_format = "edges";
  auto* sample_cmd = app.add_subcommand("sample", "draw graphs uniformly at random");
  add_spec_options(*sample_cmd, sample_opts);
  sample_cmd->add_option("--seed", seed, "random seed (default: nondeterministic)");
  sample_cmd->add_option("--num", num, "number of samples")->check(CLI::PositiveNumber);
  sample_cmd->add_option("--format", sample_format, "edges or string")
      ->check(CLI::IsMember({"edges", "string"}));

  std::optional<std::uint64_t> limit;
  std::string list_format = "edges";
  auto* list_cmd = app.add_subcommand("list", "print every graph");
  add_spec_options(*list_cmd, list_opts);
  list_cmd->add_option("--limit", limit, "print at most this many graphs");
  list_cmd->add_option("--format", list_format, "edges or string")
      ->check(CLI::IsMember({"edges", "string"}));

  std::string range;
  std::vector<std::string> verify_classes;
  bool all_classes = false;
  bool constrained = false;
  auto* verify_cmd = app.add_subcommand("verify", "cross-check against the brute-force oracle");
  verify_cmd->add_option("-n", range, "vertex count or range A..B")->required();
  verify_cmd->add_option("--class", verify_classes, "classes to check (repeatable)");
  verify_cmd->add_flag("--all-classes", all_classes, "check every class (the default)");
  verify_cmd->add_flag("--constrained", constrained, "also check every feasible k and m");

  std::string path;
  auto* export_cmd = app.add_subcommand("export", "write the BDD as DOT");
  add_spec_options(*export_cmd, export_opts);
  export_cmd->add_option("-o", path, "output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (count_cmd->parsed()) return cmd_count(count_opts, with_stats);
    if (sample_cmd->parsed()) return cmd_sample(sample_opts, seed, num, sample_format);
    if (list_cmd->parsed()) return cmd_list(list_opts, limit, list_format);
    if (verify_cmd->parsed()) return cmd_verify(range, verify_classes, all_classes, constrained);
    if (export_cmd->parsed()) return cmd_export(export_opts, path);
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const EmptyLanguageError& e) {
    std::cerr << "no graphs: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid specification: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  }
  return kInvalid;
}
