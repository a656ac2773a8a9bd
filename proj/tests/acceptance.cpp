// Acceptance harness: each criterion prints one PASS/FAIL line with its
// elapsed time against a pinned budget. Run with --criterion N for a single
// one; no arguments runs them all. Exit status 0 only when everything
// selected passed within budget.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ulam/base_code.hpp"
#include "ulam/bounds.hpp"
#include "ulam/channel.hpp"
#include "ulam/deletion_code.hpp"
#include "ulam/enumeration.hpp"
#include "ulam/mapping.hpp"
#include "ulam/metrics.hpp"
#include "ulam/permutation.hpp"

namespace {

using namespace ulam;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& what) {
    ok = false;
    if (detail.size() < 400) {
      if (!detail.empty()) {
        detail += "; ";
      }
      detail += what;
    }
  }

  void require(bool cond, const std::string& what) {
    if (!cond) {
      fail(what);
    }
  }
};

std::vector<Permutation> symmetric_group(int n) {
  std::vector<Permutation> all;
  all.reserve(factorial64(n));
  for_each_permutation(n, [&](std::span<const int> w) {
    all.emplace_back(std::vector<int>(w.begin(), w.end()));
  });
  return all;
}

Permutation random_permutation(int n, Rng& rng) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    std::swap(v[i], v[static_cast<int>(rng.below(i + 1))]);
  }
  return Permutation(std::move(v));
}

// --- subprocess helpers for the CLI criteria ---

std::string cli_binary_path(const char* argv0) {
  if (const char* env = std::getenv("ULAMCODES_BIN")) {
    return env;
  }
  return (std::filesystem::path(argv0).parent_path() / "ulamcodes").string();
}

struct CommandResult {
  int exit_code = -1;
  std::string out;
};

CommandResult run_command(const std::string& cmd) {
  CommandResult result;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) {
    return result;
  }
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
    result.out.append(buf, got);
  }
  const int rc = pclose(pipe);
  result.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return result;
}

std::string quoted(const std::string& path) { return "\"" + path + "\""; }

// --- criterion 1: reference values carried through the whole pipeline ---

Outcome criterion_worked_examples() {
  Outcome o;

  // Single edit actions on a fixed permutation.
  const Permutation start({1, 6, 4, 3, 2, 5});
  o.require(apply_transposition(start, {2, 5}) == Permutation({1, 2, 4, 3, 6, 5}),
            "transposition (2,5) result");
  o.require(apply_translocation(start, {2, 5}) == Permutation({1, 4, 3, 2, 6, 5}),
            "translocation (2,5) result");
  o.require(apply_generalized_transposition(start, {2, 3, 5, 6}) ==
                Permutation({1, 2, 5, 3, 6, 4}),
            "block swap [2,3]x[5,6] result");
  o.require(apply_generalized_transposition(start, {2, 3, 4, 6}) ==
                Permutation({1, 3, 2, 5, 6, 4}),
            "adjacent block swap [2,3]x[4,6] result");

  // Successor words of two reference permutations and their distances.
  const Permutation pi({1, 3, 4, 2, 5});
  const Permutation sigma({4, 2, 3, 5, 1});
  const Permutation f_pi = successor_word(pi);
  const Permutation f_sigma = successor_word(sigma);
  o.require(f_pi == Permutation({3, 5, 4, 2, 6, 1}), "successor word of pi");
  o.require(f_sigma == Permutation({6, 3, 5, 2, 1, 4}), "successor word of sigma");
  o.require(hamming_distance(f_pi, f_sigma) == 5, "image hamming distance 5");
  o.require(ulam_distance(pi, sigma) == 2, "ulam distance 2");

  // A two-deletion decode reproduced end to end: the observed erased word
  // and the recovered permutation both match the reference values.
  const Permutation sent({1, 3, 4, 2, 5, 6, 9, 8, 7});
  const Permutation image = successor_word(sent);
  o.require(image == Permutation({3, 5, 4, 2, 6, 9, 10, 7, 8, 1}), "successor word of sent");
  const FieldParams params = make_field_params(10, 5);
  Codebook base(params, Construction::kSyndrome, syndrome(image, params), 7, {image});
  const DeletionCode code = build_deletion_code(9, 2, std::move(base));
  o.require(code.size() == 1 && code.word(0) == sent, "one-word code contains sent");

  const std::vector<int> received = delete_at(sent, DeletionPattern{{2, 8}});
  o.require(received == std::vector<int>({1, 4, 2, 5, 6, 9, 7}), "received subsequence");
  o.require(erased_successor_word(received, 9) ==
                parse_erased_word("4 5 * 2 6 9 10 * 7 1"),
            "observed erased word");
  const DeletionDecodeResult r = decode_deletions(code, received);
  o.require(r.status == DeletionDecodeResult::Status::kDecoded && r.word && *r.word == sent,
            "decode recovers sent");
  return o;
}

// --- criterion 2: translocation distance equals n - LCS on all of S_5 ---

Outcome criterion_translocation_oracle() {
  Outcome o;
  const int n = 5;
  const auto all = symmetric_group(n);
  const auto table = bfs_distances_from(Permutation::identity(n), GeneratorSet::kTranslocation);
  for (std::size_t i = 0; i < all.size(); ++i) {
    const Permutation a_inv = all[i].inverse();
    for (std::size_t j = i; j < all.size(); ++j) {
      const int via_bfs = table[permutation_rank(a_inv.compose(all[j]))];
      const int via_lcs = n - lcs_length(all[i].entries(), all[j].entries());
      if (via_bfs != via_lcs) {
        o.fail("pair " + to_string(all[i]) + " / " + to_string(all[j]) + ": bfs " +
               std::to_string(via_bfs) + " vs " + std::to_string(via_lcs));
      }
    }
  }
  return o;
}

// --- criterion 3: images move at most three hamming positions per translocation ---

Outcome criterion_image_expansion() {
  Outcome o;
  const int n = 5;
  const auto all = symmetric_group(n);
  std::vector<Permutation> images;
  images.reserve(all.size());
  for (const Permutation& p : all) {
    images.push_back(successor_word(p));
  }

  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const int dh = hamming_distance(images[i], images[j]);
      const int du = n - lcs_length(all[i].entries(), all[j].entries());
      if (dh > 3 * du) {
        o.fail("pair " + to_string(all[i]) + " / " + to_string(all[j]));
      }
    }
  }

  // One translocation changes the image in exactly three positions.
  for (const Permutation& p : all) {
    for (int from = 1; from <= n; ++from) {
      for (int to = 1; to <= n; ++to) {
        if (from == to) {
          continue;
        }
        const int dh = hamming_distance(successor_word(p),
                                        successor_word(apply_translocation(p, {from, to})));
        if (dh != 3) {
          o.fail("translocation (" + std::to_string(from) + "," + std::to_string(to) +
                 ") of " + to_string(p) + " moved " + std::to_string(dh) + " positions");
        }
      }
    }
  }

  // Random spot checks far beyond enumeration range.
  const int big_n = 100;
  const int trials = 10000;
  Rng rng(1);
  for (int trial = 0; trial < trials; ++trial) {
    const Permutation a = random_permutation(big_n, rng);
    const Permutation b = random_permutation(big_n, rng);
    const int dh = hamming_distance(successor_word(a), successor_word(b));
    const int du = big_n - lcs_length(a.entries(), b.entries());
    if (dh > 3 * du) {
      o.fail("random trial " + std::to_string(trial));
    }
  }
  return o;
}

// --- criterion 4: image expansion against the other metrics, all of S_5 ---

Outcome criterion_metric_corollaries() {
  Outcome o;
  const int n = 5;
  const auto all = symmetric_group(n);
  std::vector<Permutation> images;
  images.reserve(all.size());
  for (const Permutation& p : all) {
    images.push_back(successor_word(p));
  }
  const Permutation id = Permutation::identity(n);
  const auto block_adjacent =
      bfs_distances_from(id, GeneratorSet::kGeneralizedAdjacentTransposition);
  const auto block_any = bfs_distances_from(id, GeneratorSet::kGeneralizedTransposition);

  for (std::size_t i = 0; i < all.size(); ++i) {
    const Permutation a_inv = all[i].inverse();
    for (std::size_t j = i; j < all.size(); ++j) {
      const std::uint64_t m = permutation_rank(a_inv.compose(all[j]));
      const int dh = hamming_distance(images[i], images[j]);
      const int du = n - lcs_length(all[i].entries(), all[j].entries());
      const int dl = levenshtein_distance(all[i], all[j]);
      const int dk = kendall_tau_distance(all[i], all[j]);
      const int dka = block_adjacent[m];
      const int dc = block_any[m];
      if (2 * dh > 3 * dl) {
        o.fail("levenshtein bound at pair " + std::to_string(i) + "," + std::to_string(j));
      }
      if (dh > 3 * dka) {
        o.fail("block-adjacent bound at pair " + std::to_string(i) + "," + std::to_string(j));
      }
      if (dh > 4 * dc) {
        o.fail("block-swap bound at pair " + std::to_string(i) + "," + std::to_string(j));
      }
      if (!(dka <= du && du <= dk)) {
        o.fail("metric sandwich at pair " + std::to_string(i) + "," + std::to_string(j));
      }
    }
  }
  return o;
}

// --- criterion 5: the successor mapping is injective with a known image ---

Outcome criterion_mapping_image() {
  Outcome o;
  std::set<std::uint64_t> seen;
  for (const Permutation& p : symmetric_group(6)) {
    const Permutation w = successor_word(p);
    seen.insert(permutation_rank(w));
    if (invert_successor_word(w).base() != p) {
      o.fail("round trip failed at " + to_string(p));
    }
  }
  o.require(seen.size() == 720, "images of S_6 not all distinct");

  std::uint64_t members = 0;
  std::uint64_t total = 0;
  for_each_permutation(7, [&](std::span<const int> w) {
    ++total;
    if (is_successor_word(Permutation(std::vector<int>(w.begin(), w.end())))) {
      ++members;
    }
  });
  o.require(total == 5040, "S_7 enumeration size");
  o.require(members == 720, "image membership count " + std::to_string(members));
  return o;
}

// --- criterion 6: syndrome classes partition S_m with the promised distance ---

Outcome criterion_base_code_classes() {
  Outcome o;
  for (int m = 6; m <= 8; ++m) {
    for (int t = 1; t <= 2; ++t) {
      const int rows = 3 * t - 1;
      const int target = 3 * t + 1;
      const FieldParams params = make_field_params(m, rows);
      std::map<SyndromeLabel, std::vector<Permutation>> classes;
      for_each_permutation(m, [&](std::span<const int> w) {
        classes[syndrome(w, params)].emplace_back(std::vector<int>(w.begin(), w.end()));
      });

      std::uint64_t covered = 0;
      std::uint64_t largest = 0;
      for (auto& [label, words] : classes) {
        covered += words.size();
        largest = std::max<std::uint64_t>(largest, words.size());
        const Codebook book(params, Construction::kSyndrome, label, target,
                            std::move(words));
        if (!verify_min_distance(book, target)) {
          o.fail("class below distance " + std::to_string(target) + " at m=" +
                 std::to_string(m) + " t=" + std::to_string(t));
        }
      }
      o.require(covered == factorial64(m),
                "classes do not partition at m=" + std::to_string(m));

      std::uint64_t label_count = 1;
      for (int k = 0; k < rows; ++k) {
        label_count *= params.prime;
      }
      o.require(largest * label_count >= factorial64(m),
                "largest class below the pigeonhole floor at m=" + std::to_string(m) +
                    " t=" + std::to_string(t));
    }
  }
  return o;
}

// --- criterion 7: every deletion of every codeword decodes back ---

Outcome criterion_end_to_end() {
  Outcome o;
  for (int n = 6; n <= 8; ++n) {
    for (int t = 1; t <= 2; ++t) {
      const FieldParams params = make_field_params(n + 1, 3 * t - 1);
      const DeletionCode code =
          build_deletion_code(n, t, build_syndrome_class(params, best_label(n, t)));
      o.require(code.size() >= 1, "empty code at n=" + std::to_string(n));

      std::uint64_t decodes = 0;
      for (const Permutation& c : code.words()) {
        for (const auto& received : deletion_ball(c, t)) {
          const DeletionDecodeResult r = decode_deletions(code, received);
          ++decodes;
          if (r.status != DeletionDecodeResult::Status::kDecoded || !r.word ||
              *r.word != c) {
            o.fail("decode failed for " + to_string(c) + " at n=" + std::to_string(n) +
                   " t=" + std::to_string(t));
          }
        }
      }
      const std::uint64_t balls =
          t == 1 ? static_cast<std::uint64_t>(n)
                 : static_cast<std::uint64_t>(n) * (n - 1) / 2;
      o.require(decodes == balls * code.size(),
                "deletion sweep incomplete at n=" + std::to_string(n));
      o.require(verify_deletion_code(code.words(), t),
                "pairwise separation failed at n=" + std::to_string(n) +
                    " t=" + std::to_string(t));
    }
  }
  return o;
}

// --- criterion 8: code sizes meet the pigeonhole floor; report the numbers ---

Outcome criterion_size_report(const std::string& bin) {
  Outcome o;
  std::printf("      n  t  p  size      floor                 redundancy  reference_size\n");
  const auto row = [&](int n, int t) {
    const FieldParams params = make_field_params(n + 1, 3 * t - 1);
    const DeletionCode code =
        build_deletion_code(n, t, build_syndrome_class(params, best_label(n, t)));
    BigInt label_count(1);
    for (int k = 0; k < 3 * t - 1; ++k) {
      label_count *= params.prime;
    }
    o.require(BigInt(code.size()) * label_count >= big_factorial(n),
              "size below floor at n=" + std::to_string(n) + " t=" + std::to_string(t));

    std::ostringstream floor_text;
    floor_text << BigRat(big_factorial(n), label_count);
    std::string reference = "-";
    try {
      std::ostringstream g;
      g << gabrys_size(n, t);
      reference = g.str();
    } catch (const std::domain_error&) {
    }
    std::printf("      %d  %d  %-2d %-8zu  %-20s  %-10.4f  %s\n", n, t, params.prime,
                code.size(), floor_text.str().c_str(), code.redundancy_bits(),
                reference.c_str());
  };
  for (int n = 4; n <= 8; ++n) {
    row(n, 1);
  }
  for (int n = 6; n <= 8; ++n) {
    row(n, 2);
  }

  // The CLI report prints the same redundancy and reference size together.
  const CommandResult r = run_command(quoted(bin) + " construct --n 6 --t 2");
  o.require(r.exit_code == 0, "construct exited " + std::to_string(r.exit_code));
  o.require(r.out.find("redundancy_bits ") != std::string::npos,
            "construct report lacks redundancy_bits");
  o.require(r.out.find("gabrys ") != std::string::npos,
            "construct report lacks the reference size");
  return o;
}

// --- criterion 9: measured graph bounds bracket the greedy code ---

Outcome criterion_bounds_consistency() {
  Outcome o;
  const std::vector<std::pair<int, int>> points = {{4, 1}, {5, 1}, {5, 2}, {6, 1}};
  for (const auto& [n, t] : points) {
    const ConfusabilityGraph g = build_confusability_graph(n, t);
    const std::vector<Permutation> greedy = greedy_independent_set(g);
    const BigInt lower = gv_lower(n, t);
    const BigInt upper = sphere_upper(n, t);
    const std::string where = " at n=" + std::to_string(n) + " t=" + std::to_string(t);
    o.require(BigInt(greedy.size()) >= lower, "greedy below the covering bound" + where);
    o.require(BigInt(greedy.size()) <= upper, "greedy above the packing bound" + where);
    const BigInt degree_cap = big_binomial(n, t) * big_factorial(t) * big_binomial(n, t);
    o.require(BigInt(g.max_degree()) <= degree_cap, "degree above the ball product" + where);
    o.require(verify_deletion_code(greedy, t), "greedy set is not a code" + where);
    const BollobasBound b =
        bollobas_bound(static_cast<std::int64_t>(g.vertex_count()), g.max_degree(),
                       static_cast<std::int64_t>(g.triangle_count()));
    o.require(std::isfinite(b.value), "log-factor bound not finite" + where);
  }
  return o;
}

// --- criterion 10: CLI reports are byte-identical across runs ---

Outcome criterion_determinism(const std::string& bin) {
  Outcome o;
  namespace fs = std::filesystem;
  const fs::path dir =
      fs::temp_directory_path() / ("ulamcodes-acceptance-" + std::to_string(getpid()));
  fs::create_directories(dir);
  const std::string code_file = (dir / "code.txt").string();

  const CommandResult built =
      run_command(quoted(bin) + " construct --n 5 --t 1 -o " + quoted(code_file));
  o.require(built.exit_code == 0, "construct exited " + std::to_string(built.exit_code));

  const std::string simulate =
      quoted(bin) + " simulate --code " + quoted(code_file) + " --trials 200 --seed 42";
  const CommandResult s1 = run_command(simulate);
  const CommandResult s2 = run_command(simulate);
  o.require(s1.exit_code == 0 && s2.exit_code == 0, "simulate exit codes");
  o.require(!s1.out.empty(), "simulate produced no output");
  o.require(s1.out == s2.out, "simulate runs differ");

  const std::string bounds = quoted(bin) + " bounds --n 5 --t 1 --graph";
  const CommandResult b1 = run_command(bounds);
  const CommandResult b2 = run_command(bounds);
  o.require(b1.exit_code == 0 && b2.exit_code == 0, "bounds exit codes");
  o.require(!b1.out.empty(), "bounds produced no output");
  o.require(b1.out == b2.out, "bounds runs differ");

  fs::remove_all(dir);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  int selected = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--criterion" && i + 1 < argc) {
      selected = std::atoi(argv[++i]);
    }
  }
  const std::string bin = cli_binary_path(argv[0]);

  struct Criterion {
    int number;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "worked-examples", 1, criterion_worked_examples},
      {2, "translocation-distance-oracle", 30, criterion_translocation_oracle},
      {3, "image-expansion-bound", 60, criterion_image_expansion},
      {4, "metric-corollaries", 300, criterion_metric_corollaries},
      {5, "mapping-image", 60, criterion_mapping_image},
      {6, "base-code-classes", 600, criterion_base_code_classes},
      {7, "end-to-end-decoding", 600, criterion_end_to_end},
      {8, "code-size-report", 600, [&] { return criterion_size_report(bin); }},
      {9, "bounds-consistency", 300, criterion_bounds_consistency},
      {10, "determinism", 600, [&] { return criterion_determinism(bin); }},
  };

  bool all_ok = true;
  for (const Criterion& c : criteria) {
    if (selected != 0 && c.number != selected) {
      continue;
    }
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (elapsed >= c.budget_seconds) {
      o.fail("over time budget");
    }
    std::printf("[%2d] %s %s (%.2f s, budget %.0f s)%s%s\n", c.number,
                o.ok ? "PASS" : "FAIL", c.name, elapsed, c.budget_seconds,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
    all_ok = all_ok && o.ok;
  }
  return all_ok ? 0 : 1;
}
