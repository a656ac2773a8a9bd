#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ulam/bounds.hpp"
#include "ulam/channel.hpp"
#include "ulam/codefile.hpp"
#include "ulam/deletion_code.hpp"
#include "ulam/enumeration.hpp"
#include "ulam/mapping.hpp"
#include "ulam/metrics.hpp"
#include "ulam/permutation.hpp"

namespace {

using nlohmann::ordered_json;
using namespace ulam;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;   // FAIL/AMBIGUOUS outcomes and failed verification
constexpr int kExitUsage = 2;  // bad flags, unreadable files, malformed input

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open " + path);
  }
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) {
      lines.push_back(line);
    }
  }
  return lines;
}

ParsedCodeFile read_code_path(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open " + path);
  }
  return read_code_file(in);
}

std::optional<GeneratorSet> parse_generator(const std::string& name) {
  if (name == "adjacent-transposition") {
    return GeneratorSet::kAdjacentTransposition;
  }
  if (name == "translocation") {
    return GeneratorSet::kTranslocation;
  }
  if (name == "generalized-adjacent-transposition") {
    return GeneratorSet::kGeneralizedAdjacentTransposition;
  }
  if (name == "generalized-transposition") {
    return GeneratorSet::kGeneralizedTransposition;
  }
  return std::nullopt;
}

int run_distance(const std::string& metric, const std::string& path) {
  const auto lines = read_lines(path);
  if (lines.size() != 2) {
    throw std::invalid_argument("distance needs a file with exactly two lines");
  }
  const Permutation a = parse_permutation(lines[0]);
  const Permutation b = parse_permutation(lines[1]);
  if (metric == "hamming") {
    std::cout << hamming_distance(a, b) << '\n';
  } else if (metric == "ulam") {
    std::cout << ulam_distance(a, b) << '\n';
  } else if (metric == "levenshtein") {
    std::cout << levenshtein_distance(a, b) << '\n';
  } else if (metric == "kendall") {
    std::cout << kendall_tau_distance(a, b) << '\n';
  } else if (metric.starts_with("bfs:")) {
    const auto gens = parse_generator(metric.substr(4));
    if (!gens) {
      throw std::invalid_argument("unknown generator set: " + metric.substr(4));
    }
    const std::optional<int> d = bfs_group_distance(a, b, *gens);
    if (!d) {
      std::cout << "FAIL\n";
      return kExitFail;
    }
    std::cout << *d << '\n';
  } else {
    throw std::invalid_argument("unknown metric: " + metric);
  }
  return kExitOk;
}

int run_map(const std::string& dir, int n_flag, const std::string& path) {
  const auto lines = read_lines(path);
  for (const std::string& line : lines) {
    if (dir == "forward") {
      if (n_flag > 0) {
        std::istringstream is(line);
        std::vector<int> received;
        int x = 0;
        while (is >> x) {
          received.push_back(x);
        }
        if (!is.eof()) {
          throw std::invalid_argument("malformed line: " + line);
        }
        if (static_cast<int>(received.size()) == n_flag) {
          std::cout << to_string(successor_word(Permutation(received))) << '\n';
        } else {
          std::cout << to_string(erased_successor_word(received, n_flag)) << '\n';
        }
      } else {
        std::cout << to_string(successor_word(parse_permutation(line))) << '\n';
      }
    } else {
      const Permutation w = parse_permutation(line);
      if (!is_successor_word(w)) {
        std::cerr << "not in the mapping image: " << line << '\n';
        return kExitFail;
      }
      std::cout << to_string(invert_successor_word(w).base()) << '\n';
    }
  }
  return kExitOk;
}

ordered_json gabrys_report(int n, int t) {
  const BigInt n_fact = big_factorial(n);
  try {
    const BigRat g = gabrys_size(n, t);
    ordered_json out;
    std::ostringstream exact;
    exact << g;
    out["exact"] = exact.str();
    out["approx"] = g.convert_to<double>();
    out["exceeds_n_factorial"] = g > BigRat(n_fact);
    return out;
  } catch (const std::domain_error&) {
    return nullptr;
  }
}

int run_construct(int n, int t, const std::string& label_flag,
                  const std::string& construction, const std::string& metric,
                  const std::string& out_path, const std::string& format) {
  const FieldParams params = make_field_params(n + 1, 3 * t - 1);
  Codebook base = [&] {
    if (construction == "greedy") {
      return build_greedy(params, 3 * t + 1);
    }
    if (label_flag == "auto") {
      return build_syndrome_class(params, best_label(n, t));
    }
    SyndromeLabel label;
    std::istringstream is(label_flag);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      label.push_back(std::stoi(tok));
    }
    return build_syndrome_class(params, label);
  }();
  const std::size_t base_size = base.size();
  const DeletionCode code = build_deletion_code(n, t, std::move(base));

  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      throw std::invalid_argument("cannot write " + out_path);
    }
    if (metric == "hamming") {
      write_base_codebook(out, n, t, code.base());
    } else {
      write_deletion_code(out, code);
    }
  }

  std::ostringstream label_text;
  if (code.base().construction() == Construction::kGreedy) {
    label_text << "greedy";
  } else {
    for (std::size_t i = 0; i < code.base().label().size(); ++i) {
      label_text << (i ? "," : "") << code.base().label()[i];
    }
  }
  std::ostringstream size_bound;
  size_bound << BigRat(big_factorial(n),
                       boost::multiprecision::pow(BigInt(params.prime),
                                                  static_cast<unsigned>(3 * t - 1)));

  if (format == "json") {
    ordered_json report;
    report["schema_version"] = 1;
    report["command"] = "construct";
    report["n"] = n;
    report["t"] = t;
    report["p"] = params.prime;
    report["r"] = params.syndrome_rows;
    report["label"] = label_text.str();
    report["construction"] =
        code.base().construction() == Construction::kGreedy ? "greedy" : "syndrome";
    report["base_dmin"] = code.base().min_distance();
    report["base_size"] = base_size;
    report["code_size"] = code.size();
    report["size_lower_bound"] = size_bound.str();
    report["redundancy_bits"] = code.redundancy_bits();
    report["gabrys"] = gabrys_report(n, t);
    std::cout << report.dump(2) << '\n';
  } else {
    std::cout << "n " << n << '\n'
              << "t " << t << '\n'
              << "p " << params.prime << '\n'
              << "r " << params.syndrome_rows << '\n'
              << "label " << label_text.str() << '\n'
              << "construction "
              << (code.base().construction() == Construction::kGreedy ? "greedy" : "syndrome")
              << '\n'
              << "base_dmin " << code.base().min_distance() << '\n'
              << "base_size " << base_size << '\n'
              << "code_size " << code.size() << '\n';
    if (code.base().construction() == Construction::kSyndrome) {
      std::cout << "size_lower_bound " << size_bound.str() << '\n';
    }
    std::cout << "redundancy_bits " << code.redundancy_bits() << '\n';
    const ordered_json g = gabrys_report(n, t);
    if (g.is_null()) {
      std::cout << "gabrys -\n";
    } else {
      std::cout << "gabrys " << g["exact"].get<std::string>() << '\n';
    }
  }
  return kExitOk;
}

int run_encode(const std::string& code_path, std::size_t index) {
  const DeletionCode code = load_deletion_code(read_code_path(code_path));
  std::cout << to_string(code.word(index)) << '\n';
  return kExitOk;
}

int run_decode(const std::string& code_path, const std::string& received_line) {
  const DeletionCode code = load_deletion_code(read_code_path(code_path));
  std::istringstream is(received_line);
  std::vector<int> received;
  int x = 0;
  while (is >> x) {
    received.push_back(x);
  }
  if (!is.eof()) {
    throw std::invalid_argument("malformed received line: " + received_line);
  }
  const DeletionDecodeResult r = decode_deletions(code, received);
  switch (r.status) {
    case DeletionDecodeResult::Status::kDecoded:
      std::cout << to_string(*r.word) << '\n';
      return kExitOk;
    case DeletionDecodeResult::Status::kFail:
      std::cout << "FAIL\n";
      return kExitFail;
    case DeletionDecodeResult::Status::kAmbiguous:
      std::cout << "AMBIGUOUS\n";
      return kExitFail;
  }
  return kExitFail;
}

int run_simulate(const std::string& code_path, std::uint64_t trials, std::uint64_t seed,
                 bool exhaustive) {
  const DeletionCode code = load_deletion_code(read_code_path(code_path));
  std::uint64_t successes = 0;
  std::uint64_t failures = 0;
  std::uint64_t ambiguous = 0;
  std::uint64_t miscorrections = 0;
  std::uint64_t ran = 0;

  const auto tally = [&](const Permutation& sent, const std::vector<int>& received) {
    const DeletionDecodeResult r = decode_deletions(code, received);
    ++ran;
    switch (r.status) {
      case DeletionDecodeResult::Status::kDecoded:
        if (*r.word == sent) {
          ++successes;
        } else {
          ++miscorrections;
        }
        break;
      case DeletionDecodeResult::Status::kFail:
        ++failures;
        break;
      case DeletionDecodeResult::Status::kAmbiguous:
        ++ambiguous;
        break;
    }
  };

  if (exhaustive) {
    for (const Permutation& c : code.words()) {
      for (const auto& sub : deletion_ball(c, code.t())) {
        tally(c, sub);
      }
    }
  } else {
    if (code.size() == 0) {
      throw std::invalid_argument("cannot sample from an empty code");
    }
    Rng rng(seed);
    for (std::uint64_t i = 0; i < trials; ++i) {
      const Permutation& c = code.word(rng.below(code.size()));
      const DeletionPattern pattern = sample_pattern(code.n(), code.t(), rng);
      tally(c, delete_at(c, pattern));
    }
  }

  ordered_json report;
  report["schema_version"] = 1;
  report["command"] = "simulate";
  report["mode"] = exhaustive ? "exhaustive" : "random";
  if (!exhaustive) {
    report["seed"] = seed;
  }
  report["n"] = code.n();
  report["t"] = code.t();
  report["code_size"] = code.size();
  report["trials"] = ran;
  report["successes"] = successes;
  report["failures"] = failures;
  report["ambiguous"] = ambiguous;
  report["miscorrections"] = miscorrections;
  std::cout << report.dump(2) << '\n';
  return kExitOk;
}

int run_verify(const std::string& path, int dmin_flag, bool ulam_flag, int t_flag) {
  const ParsedCodeFile file = read_code_path(path);
  const bool check_ulam = ulam_flag || (dmin_flag == 0 && file.header.metric == "ulam");
  if (check_ulam) {
    const int t = t_flag > 0 ? t_flag : file.header.t;
    if (verify_deletion_code(file.words, t)) {
      std::cout << "ok: " << file.words.size() << " words pairwise ulam distance > " << t
                << '\n';
      return kExitOk;
    }
    std::cout << "violation: some pair has ulam distance <= " << t << '\n';
    return kExitFail;
  }
  const int dmin = dmin_flag > 0 ? dmin_flag : file.header.dmin;
  bool ok = true;
  for (std::size_t i = 0; ok && i < file.words.size(); ++i) {
    for (std::size_t j = i + 1; ok && j < file.words.size(); ++j) {
      ok = hamming_distance(file.words[i], file.words[j]) >= dmin;
    }
  }
  if (ok) {
    std::cout << "ok: " << file.words.size() << " words pairwise hamming distance >= " << dmin
              << '\n';
    return kExitOk;
  }
  std::cout << "violation: some pair has hamming distance < " << dmin << '\n';
  return kExitFail;
}

int run_bounds(int n, int t, bool graph) {
  ordered_json report;
  report["schema_version"] = 1;
  report["command"] = "bounds";
  report["n"] = n;
  report["t"] = t;
  std::ostringstream gv;
  gv << gv_lower(n, t);
  report["gv_lower"] = gv.str();
  std::ostringstream sphere;
  sphere << sphere_upper(n, t);
  report["sphere_upper"] = sphere.str();
  report["gabrys"] = gabrys_report(n, t);
  if (graph) {
    const ConfusabilityGraph g = build_confusability_graph(n, t);
    const std::vector<Permutation> independent = greedy_independent_set(g);
    const BollobasBound b =
        bollobas_bound(static_cast<std::int64_t>(g.vertex_count()), g.max_degree(),
                       static_cast<std::int64_t>(g.triangle_count()));
    ordered_json measured;
    measured["vertices"] = g.vertex_count();
    measured["max_degree"] = g.max_degree();
    measured["edges"] = g.edge_count();
    measured["triangles"] = g.triangle_count();
    measured["greedy_alpha"] = independent.size();
    measured["greedy_is_valid_code"] = verify_deletion_code(independent, t);
    measured["bollobas_value"] = b.value;
    measured["bollobas_triangles_clamped"] = b.triangles_clamped;
    report["measured"] = measured;
  } else {
    report["measured"] = nullptr;
  }
  std::cout << report.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"permutation codes for symbol deletions in the Ulam metric"};
  app.require_subcommand(1);

  std::string metric = "ulam";
  std::string path;
  auto* distance = app.add_subcommand("distance", "distance between two permutations");
  distance->add_option("--metric", metric,
                       "hamming|ulam|levenshtein|kendall|bfs:<generator-set>");
  distance->add_option("file", path, "file with two one-line permutations")->required();

  std::string dir;
  int n_flag = 0;
  std::string map_path;
  auto* map = app.add_subcommand("map", "successor words of permutations");
  map->add_option("--dir", dir, "forward|inverse")->required()
      ->check(CLI::IsMember({"forward", "inverse"}));
  map->add_option("--n", n_flag, "expected length; shorter forward lines become erased words");
  map->add_option("file", map_path, "file with one permutation per line")->required();

  int cn = 0;
  int ct = 0;
  std::string label_flag = "auto";
  std::string construction = "syndrome";
  std::string cmetric = "ulam";
  std::string out_path;
  std::string cformat = "text";
  auto* construct = app.add_subcommand("construct", "build a deletion-correcting code");
  construct->add_option("--n", cn, "permutation length")->required();
  construct->add_option("--t", ct, "deletions to correct")->required();
  construct->add_option("--label", label_flag, "auto or comma-separated residues");
  construct->add_option("--construction", construction, "syndrome|greedy")
      ->check(CLI::IsMember({"syndrome", "greedy"}));
  construct->add_option("--metric", cmetric, "which code the output file stores")
      ->check(CLI::IsMember({"ulam", "hamming"}));
  construct->add_option("-o,--output", out_path, "write the code file here");
  construct->add_option("--format", cformat, "report format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string code_path;
  std::uint64_t index = 0;
  auto* encode = app.add_subcommand("encode", "look up a codeword by index");
  encode->add_option("--code", code_path, "code file")->required();
  encode->add_option("--index", index, "codeword index")->required();

  std::string decode_code_path;
  std::string received_line;
  auto* decode = app.add_subcommand("decode", "recover a codeword from a subsequence");
  decode->add_option("--code", decode_code_path, "code file")->required();
  decode->add_option("received", received_line, "received symbols, space separated")
      ->required();

  std::string sim_code_path;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  auto* simulate = app.add_subcommand("simulate", "run the deletion channel");
  simulate->add_option("--code", sim_code_path, "code file")->required();
  simulate->add_option("--trials", trials, "random trials to run");
  simulate->add_option("--seed", seed, "random seed");
  simulate->add_flag("--exhaustive", exhaustive, "sweep every codeword and pattern");

  std::string verify_path;
  int dmin_flag = 0;
  bool ulam_flag = false;
  int t_flag = 0;
  auto* verify = app.add_subcommand("verify", "check a stored code's distance claims");
  verify->add_option("--dmin", dmin_flag, "check pairwise hamming distance >= dmin");
  verify->add_flag("--ulam", ulam_flag, "check pairwise ulam distance > t");
  verify->add_option("--t", t_flag, "threshold for --ulam (default: header t)");
  verify->add_option("file", verify_path, "code file")->required();

  int bn = 0;
  int bt = 0;
  bool graph = false;
  auto* bounds = app.add_subcommand("bounds", "size bounds and graph statistics");
  bounds->add_option("--n", bn, "permutation length")->required();
  bounds->add_option("--t", bt, "deletions")->required();
  bounds->add_flag("--graph", graph, "build the confusability graph too");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (distance->parsed()) {
      return run_distance(metric, path);
    }
    if (map->parsed()) {
      return run_map(dir, n_flag, map_path);
    }
    if (construct->parsed()) {
      return run_construct(cn, ct, label_flag, construction, cmetric, out_path, cformat);
    }
    if (encode->parsed()) {
      return run_encode(code_path, index);
    }
    if (decode->parsed()) {
      return run_decode(decode_code_path, received_line);
    }
    if (simulate->parsed()) {
      return run_simulate(sim_code_path, trials, seed, exhaustive);
    }
    if (verify->parsed()) {
      return run_verify(verify_path, dmin_flag, ulam_flag, t_flag);
    }
    if (bounds->parsed()) {
      return run_bounds(bn, bt, graph);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
