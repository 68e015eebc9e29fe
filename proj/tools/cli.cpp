#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include "hcd/constructions.hpp"
#include "hcd/errors.hpp"
#include "hcd/io.hpp"
#include "hcd/permanent.hpp"
#include "hcd/search.hpp"

namespace hcd::cli {

namespace {

// Flags shared by the computing subcommands.
struct Common {
  unsigned workers = 1;
  std::uint64_t guard_limit = default_incidence_limit();
  double time_budget = 0.0;  // seconds, 0 = none
  bool verbose = false;

  Guard guard() const {
    Guard g;
    g.incidence_limit = guard_limit;
    g.time_budget = std::chrono::milliseconds(static_cast<long long>(time_budget * 1000.0));
    return g;
  }
};

struct ParamFlags {
  std::string kind;
  std::size_t n = 0;
  std::uint32_t q = 0;
  std::size_t w = 0;
  std::size_t t = 0;

  DesignParams params() const {
    DesignParams p{kind == "A" ? Kind::A : Kind::H, n, q, w, t};
    p.validate();
    return p;
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--workers", c.workers, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--guard-limit", c.guard_limit, "Cap on candidate-witness incidences (env HD_GUARD_LIMIT)");
  cmd->add_option("--time-budget", c.time_budget, "Wall-clock budget in seconds (0 = none)");
  cmd->add_flag("-v,--verbose", c.verbose, "Extra diagnostics on stderr");
}

void add_params(CLI::App* cmd, ParamFlags& p) {
  cmd->add_option("--kind", p.kind, "Design kind")->required()->check(CLI::IsMember({"H", "A"}));
  cmd->add_option("--n", p.n, "Word length")->required();
  cmd->add_option("--q", p.q, "Alphabet size")->required();
  cmd->add_option("--w", p.w, "Weight w")->required();
  cmd->add_option("--t", p.t, "Weight t")->required();
}

// Signals a non-exception exit with the given code.
struct Exit {
  int code;
};

Design load_design(const std::string& path, ParamPolicy policy = ParamPolicy::kStrict) {
  return parse_design(read_text_file(path), policy);
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

std::string describe(const Design& d) {
  const Cardinality c = expected_cardinality(d.params());
  return d.params().to_string() + " with " + std::to_string(d.size()) + " words (expected " +
         std::to_string(c.numerator) + (c.integral() ? "" : "/" + std::to_string(c.denominator)) + ")";
}

// Re-verifies a freshly built design before it is written.
void check_output(const Design& d, std::ostream& err) {
  const VerificationReport r = verify(d);
  if (!r.valid) {
    err << "error: output " << d.params().to_string() << " failed verification at "
        << r.violations.front().witness.to_string() << "\n";
    throw Exit{kNegative};
  }
}

std::optional<Partition> partition_for(const DesignParams& params, const std::string& path,
                                       const Common& common) {
  if (!path.empty()) {
    Partition p = parse_partition(read_text_file(path));
    if (p.params != params) {
      throw std::invalid_argument("partition file is " + p.params.to_string() + ", expected " +
                                  params.to_string());
    }
    return p;
  }
  return partition_into_designs(params, {common.guard()});
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, verify, search and count H- and A-designs on the hypercube Q_q^n", "hdesign"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  Common common;

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check a design file; exit 0 valid, 1 invalid, 2 parse error");
  std::string verify_path;
  bool allow_t0 = false;
  verify_cmd->add_option("file", verify_path, "Design file")->required();
  verify_cmd->add_flag("--allow-t0", allow_t0, "Accept t = 0");
  add_common(verify_cmd, common);

  // construct
  auto* construct_cmd = app.add_subcommand("construct", "Build a design and write it in canonical form");
  std::string variant;
  std::size_t m = 0;
  std::uint32_t q = 0;
  std::uint32_t q_inner = 0;
  std::size_t cor_t = 0;
  std::uint32_t cor_s = 0;
  std::size_t st_n = 0;
  std::size_t st_w = 0;
  std::string outer_path;
  std::vector<std::string> inner_paths;
  std::string input_path;
  std::string base_path;
  std::string blocks_path;
  std::string construct_out;
  construct_cmd->add_option("variant", variant, "mds | i | ii | iii | corollary2 | steiner")
      ->required()
      ->check(CLI::IsMember({"mds", "i", "ii", "iii", "corollary2", "steiner"}));
  construct_cmd->add_option("--m", m, "mds: word length");
  construct_cmd->add_option("--q", q, "mds: alphabet size");
  construct_cmd->add_option("--outer", outer_path, "i: outer H(n,q,w,t) design file");
  construct_cmd->add_option("--inner", inner_paths,
                            "i: inner H(w,q',w,t) code file; repeat to assign codes round-robin");
  construct_cmd->add_option("--input", input_path, "ii, iii: input A design file");
  construct_cmd->add_option("--qprime", q_inner, "ii: inner alphabet size q'");
  construct_cmd->add_option("--t", cor_t, "corollary2: t; steiner: t");
  construct_cmd->add_option("--s", cor_s, "corollary2: s");
  construct_cmd->add_option("--base", base_path, "corollary2: base design file (needed for t >= 2)");
  construct_cmd->add_option("--blocks", blocks_path, "steiner: block file");
  construct_cmd->add_option("--n", st_n, "steiner: number of points");
  construct_cmd->add_option("--w", st_w, "steiner: block size");
  construct_cmd->add_option("-o,--output", construct_out, "Output file (default stdout)");
  add_common(construct_cmd, common);

  // search
  auto* search_cmd = app.add_subcommand("search", "Find designs by exact cover; exit 1 if none exists");
  ParamFlags search_params;
  SearchOptions search_opts;
  std::size_t max_solutions = 1;
  std::vector<std::string> forbid_words;
  std::vector<std::string> require_words;
  std::optional<std::uint64_t> seed;
  std::string search_out;
  std::string search_dir;
  add_params(search_cmd, search_params);
  search_cmd->add_option("--max-solutions", max_solutions, "Stop after this many designs (0 = all)");
  search_cmd->add_option("--min-distance", search_opts.min_distance, "Minimum pairwise distance");
  search_cmd->add_option("--forbid", forbid_words, "Word that must not appear");
  search_cmd->add_option("--require", require_words, "Word that must appear");
  search_cmd->add_flag("--symmetry-breaking", search_opts.symmetry_breaking,
                       "Fix symbols under the first witness (existence only)");
  search_cmd->add_option("--seed-search", seed, "Permute top-level branch order");
  search_cmd->add_option("-o,--output", search_out, "Write the first design to this file");
  search_cmd->add_option("--output-dir", search_dir, "Write every design found as design_NNNN.hd");
  add_common(search_cmd, common);

  // count
  auto* count_cmd = app.add_subcommand("count", "Count designs exactly");
  ParamFlags count_params;
  std::string via = "enumeration";
  std::string count_partition;
  add_params(count_cmd, count_params);
  count_cmd->add_option("--via", via, "enumeration | permanent | both")
      ->check(CLI::IsMember({"enumeration", "permanent", "both"}));
  count_cmd->add_option("--partition", count_partition,
                        "Partition file into designs of the opposite kind (searched when absent)");
  add_common(count_cmd, common);

  // partition
  auto* partition_cmd = app.add_subcommand("partition", "Split a whole face layer into designs");
  ParamFlags partition_params;
  std::string partition_out;
  add_params(partition_cmd, partition_params);
  partition_cmd->add_option("-o,--output", partition_out, "Output file (default stdout)");
  add_common(partition_cmd, common);

  // permanent
  auto* permanent_cmd = app.add_subcommand("permanent", "k-dimensional permanent of an array file");
  std::string array_path;
  permanent_cmd->add_option("file", array_path, "Array file")->required();
  add_common(permanent_cmd, common);

  // hypergraph
  auto* hypergraph_cmd = app.add_subcommand("hypergraph", "Write GH (H partition) or GA (A partition)");
  std::string hg_partition;
  std::string hg_out;
  hypergraph_cmd->add_option("--partition", hg_partition, "Partition file")->required();
  hypergraph_cmd->add_option("-o,--output", hg_out, "Output file (default stdout)");

  std::vector<const char*> argv{"hdesign"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (verify_cmd->parsed()) {
      const Design d = load_design(verify_path, allow_t0 ? ParamPolicy::kAllowZeroT : ParamPolicy::kStrict);
      const VerificationReport r = verify(d, {common.workers});
      if (r.valid) {
        out << "valid " << describe(d) << "\n";
        return kOk;
      }
      out << "invalid " << d.params().to_string() << ": " << r.violations.size() << " violation(s)\n";
      for (const Violation& v : r.violations) {
        out << "witness " << v.witness.to_string() << " count " << v.count << "\n";
      }
      return kNegative;
    }

    if (construct_cmd->parsed()) {
      auto need = [&](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(std::string("construct ") + variant + " needs " + what);
      };
      std::optional<Design> built;
      if (variant == "mds") {
        need(m != 0 && q != 0, "--m and --q");
        built = mds_distance2(m, q);
      } else if (variant == "i") {
        need(!outer_path.empty() && !inner_paths.empty(), "--outer and --inner");
        const Design outer = load_design(outer_path);
        std::vector<Design> inner;
        for (const auto& p : inner_paths) inner.push_back(load_design(p));
        built = construct_i(outer, inner);
      } else if (variant == "ii") {
        need(!input_path.empty() && q_inner != 0, "--input and --qprime");
        err << "note: each word is paired with every b in Q_q'^t (t entries, one per fixed position)\n";
        built = construct_ii(load_design(input_path, ParamPolicy::kAllowZeroT), q_inner);
      } else if (variant == "iii") {
        need(!input_path.empty(), "--input");
        built = construct_iii(load_design(input_path, ParamPolicy::kAllowZeroT));
      } else if (variant == "corollary2") {
        need(cor_t != 0 && cor_s != 0, "--t and --s");
        std::optional<Design> base;
        if (!base_path.empty()) base = load_design(base_path);
        built = corollary2(cor_t, cor_s, base);
      } else {
        need(!blocks_path.empty() && st_n != 0 && st_w != 0, "--blocks, --n, --w and --t");
        const auto blocks = parse_blocks(read_text_file(blocks_path));
        built = from_steiner(blocks, st_n, st_w, cor_t);
      }
      check_output(*built, err);
      emit(format_design(*built), construct_out, out);
      err << describe(*built) << "\n";
      return kOk;
    }

    if (search_cmd->parsed()) {
      const DesignParams params = search_params.params();
      if (!search_out.empty() && max_solutions != 1) {
        throw std::invalid_argument("--output writes one design; use --output-dir with --max-solutions");
      }
      search_opts.max_solutions = max_solutions;
      for (const auto& w : forbid_words) search_opts.forbidden.push_back(Codeword::parse(w, params.q));
      for (const auto& w : require_words) search_opts.required.push_back(Codeword::parse(w, params.q));
      search_opts.branch_seed = seed;
      search_opts.guard = common.guard();
      search_opts.workers = common.workers;
      const std::vector<Design> found = search_design(params, search_opts);
      if (found.empty()) {
        err << "no design " << params.to_string()
            << (search_opts.min_distance ? " with minimum distance " + std::to_string(search_opts.min_distance) : "")
            << " exists (search exhausted)\n";
        return kNegative;
      }
      out << "# " << found.size() << " design(s) " << params.to_string() << "\n";
      for (std::size_t i = 0; i < found.size(); ++i) {
        if (i != 0) out << "\n";
        out << format_design(found[i]);
      }
      if (!search_out.empty()) write_text_file(search_out, format_design(found.front()));
      if (!search_dir.empty()) {
        std::filesystem::create_directories(search_dir);
        for (std::size_t i = 0; i < found.size(); ++i) {
          std::ostringstream name;
          name << "design_" << std::setw(4) << std::setfill('0') << (i + 1) << ".hd";
          write_text_file(std::filesystem::path(search_dir) / name.str(), format_design(found[i]));
        }
      }
      return kOk;
    }

    if (count_cmd->parsed()) {
      const DesignParams params = count_params.params();
      std::optional<std::uint64_t> direct;
      std::optional<std::uint64_t> via_permanent;
      if (via != "permanent") direct = count_designs(params, {common.guard(), common.workers});
      if (via != "enumeration") {
        DesignParams part_params = params;
        part_params.kind = opposite(params.kind);
        const std::optional<Partition> part = partition_for(part_params, count_partition, common);
        if (!part) {
          err << "no partition of the weight-" << part_params.word_weight() << " faces into "
              << part_params.to_string() << " designs exists; permanent count unavailable\n";
          return kNegative;
        }
        PermanentOptions popts;
        popts.workers = common.workers;
        via_permanent = params.kind == Kind::H ? count_h_designs_via_permanent(*part, popts)
                                               : count_a_designs_via_permanent(*part, popts);
      }
      if (direct && via_permanent && *direct != *via_permanent) {
        err << "mismatch: enumeration counts " << *direct << ", permanent counts " << *via_permanent << "\n";
        return kNegative;
      }
      if (common.verbose) {
        if (direct) err << "enumeration: " << *direct << "\n";
        if (via_permanent) err << "permanent: " << *via_permanent << "\n";
      }
      out << (direct ? *direct : *via_permanent) << "\n";
      return kOk;
    }

    if (partition_cmd->parsed()) {
      const DesignParams params = partition_params.params();
      const std::optional<Partition> part = partition_into_designs(params, {common.guard()});
      if (!part) {
        err << "no partition into " << params.to_string() << " designs exists (search exhausted)\n";
        return kNegative;
      }
      emit(format_partition(*part), partition_out, out);
      return kOk;
    }

    if (permanent_cmd->parsed()) {
      const AdjacencyArray a = parse_array(read_text_file(array_path));
      PermanentOptions popts;
      popts.workers = common.workers;
      out << permanent_k(a, popts) << "\n";
      return kOk;
    }

    if (hypergraph_cmd->parsed()) {
      const Partition part = parse_partition(read_text_file(hg_partition));
      const PartiteHypergraph g = part.params.kind == Kind::H ? build_gh(part) : build_ga(part);
      emit(format_hypergraph(g), hg_out, out);
      if (g.has_collapsed_edges()) {
        err << "warning: some edges are induced by more than one witness face\n";
      }
      return kOk;
    }
  } catch (const Exit& e) {
    return e.code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const GuardExceeded& e) {
    err << "guard_exceeded: " << e.what() << "\n";
    return kGuard;
  } catch (const VerificationFailed& e) {
    err << "verification failed: " << e.what() << "\n";
    return kNegative;
  } catch (const MalformedDesign& e) {
    err << "malformed design: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace hcd::cli
