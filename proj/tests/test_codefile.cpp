#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "ulam/codefile.hpp"
#include "ulam/deletion_code.hpp"

using namespace ulam;

namespace {

DeletionCode make_code(int n, int t) {
  const FieldParams params = make_field_params(n + 1, 3 * t - 1);
  return build_deletion_code(n, t, build_syndrome_class(params, best_label(n, t)));
}

}  // namespace

TEST_CASE("base codebook files round trip") {
  const FieldParams params = make_field_params(6, 2);
  const Codebook book = build_syndrome_class(params, {3, 5});
  std::ostringstream out;
  write_base_codebook(out, 5, 1, book);

  std::istringstream in(out.str());
  const ParsedCodeFile file = read_code_file(in);
  CHECK(file.header.n == 5);
  CHECK(file.header.t == 1);
  CHECK(file.header.p == 7);
  CHECK(file.header.r == 2);
  CHECK(file.header.dmin == 4);
  CHECK(file.header.metric == "hamming");
  CHECK(file.header.label == SyndromeLabel{3, 5});
  CHECK(file.header.construction == Construction::kSyndrome);

  const Codebook loaded = load_base_codebook(file);
  CHECK(loaded.words() == book.words());
  CHECK(loaded.label() == book.label());
  CHECK(loaded.min_distance() == book.min_distance());
}

TEST_CASE("the header line is stable text") {
  const FieldParams params = make_field_params(6, 2);
  const Codebook book = build_syndrome_class(params, {3, 5});
  std::ostringstream out;
  write_base_codebook(out, 5, 1, book);
  const std::string text = out.str();
  CHECK(text.substr(0, text.find('\n')) ==
        "5 1 7 2 label=3,5 construction=syndrome dmin=4 metric=hamming");
}

TEST_CASE("deletion code files round trip through the rebuild") {
  const DeletionCode code = make_code(5, 1);
  std::ostringstream out;
  write_deletion_code(out, code);

  std::istringstream in(out.str());
  const ParsedCodeFile file = read_code_file(in);
  CHECK(file.header.metric == "ulam");
  CHECK(file.header.n == 5);
  CHECK(file.header.t == 1);
  CHECK(file.words.size() == code.size());

  const DeletionCode loaded = load_deletion_code(file);
  CHECK(loaded.words() == code.words());
  CHECK(loaded.base().words() == code.base().words());
}

TEST_CASE("greedy construction round trips with its tag") {
  const Codebook base = build_greedy(make_field_params(6, 0), 4);
  const DeletionCode code = build_deletion_code(5, 1, base);
  std::ostringstream out;
  write_deletion_code(out, code);
  const std::string text = out.str();
  CHECK(text.substr(0, text.find('\n')) ==
        "5 1 7 0 label=greedy construction=greedy dmin=4 metric=ulam");

  std::istringstream in(text);
  const DeletionCode loaded = load_deletion_code(read_code_file(in));
  CHECK(loaded.words() == code.words());
}

TEST_CASE("an empty label is legal when there are no rows") {
  const Codebook book = build_syndrome_class(make_field_params(4, 0), {});
  std::ostringstream out;
  write_base_codebook(out, 3, 1, book);
  const std::string text = out.str();
  CHECK(text.substr(0, text.find('\n')) ==
        "3 1 5 0 label= construction=syndrome dmin=2 metric=hamming");
  std::istringstream in(text);
  const Codebook loaded = load_base_codebook(read_code_file(in));
  CHECK(loaded.size() == 24);
}

TEST_CASE("malformed files are rejected") {
  CHECK_THROWS_AS(
      [] {
        std::istringstream in("");
        read_code_file(in);
      }(),
      std::invalid_argument);
  CHECK_THROWS_AS(
      [] {
        std::istringstream in("5 1 7 2 label=3,5 construction=syndrome dmin=4");
        read_code_file(in);
      }(),
      std::invalid_argument);
  CHECK_THROWS_AS(
      [] {
        std::istringstream in(
            "5 1 7 2 label=3,5 construction=syndrome dmin=4 metric=euclid\n");
        read_code_file(in);
      }(),
      std::invalid_argument);
  CHECK_THROWS_AS(
      [] {
        std::istringstream in(
            "5 1 7 2 label=3,5 construction=syndrome dmin=4 shape=round\n");
        read_code_file(in);
      }(),
      std::invalid_argument);
  CHECK_THROWS_AS(
      [] {
        std::istringstream in(
            "5 1 7 2 label=greedy construction=syndrome dmin=4 metric=hamming\n");
        read_code_file(in);
      }(),
      std::invalid_argument);
  CHECK_THROWS_AS(
      [] {
        std::istringstream in(
            "5 1 7 2 label=3,5 construction=syndrome dmin=4 metric=hamming\n1 2 2\n");
        read_code_file(in);
      }(),
      std::invalid_argument);
}

TEST_CASE("loads cross-check the header against the content") {
  const DeletionCode code = make_code(5, 1);
  std::ostringstream out;
  write_deletion_code(out, code);
  const std::string good = out.str();

  SUBCASE("a tampered word is caught") {
    std::string bad = good;
    const auto first_word = bad.find('\n') + 1;
    const auto second_word = bad.find('\n', first_word) + 1;
    bad.replace(first_word, second_word - first_word - 1, "2 1 3 4 5");
    std::istringstream in(bad);
    const ParsedCodeFile file = read_code_file(in);
    CHECK_THROWS_AS(load_deletion_code(file), std::invalid_argument);
  }

  SUBCASE("a wrong prime is caught") {
    std::string bad = good;
    bad[4] = '5';  // prime field of the header
    std::istringstream in(bad);
    const ParsedCodeFile file = read_code_file(in);
    CHECK_THROWS_AS(load_deletion_code(file), std::invalid_argument);
  }

  SUBCASE("metric mismatch is caught") {
    std::istringstream in(good);
    const ParsedCodeFile file = read_code_file(in);
    CHECK_THROWS_AS(load_base_codebook(file), std::invalid_argument);
  }

  SUBCASE("a base file word violating the label is caught") {
    const FieldParams params = make_field_params(6, 2);
    const Codebook book = build_syndrome_class(params, {3, 5});
    std::ostringstream base_out;
    write_base_codebook(base_out, 5, 1, book);
    std::string bad = base_out.str();
    const auto first_word = bad.find('\n') + 1;
    const auto second_word = bad.find('\n', first_word) + 1;
    bad.replace(first_word, second_word - first_word - 1, "1 2 3 4 5 6");
    std::istringstream in(bad);
    const ParsedCodeFile file = read_code_file(in);
    CHECK_THROWS_AS(load_base_codebook(file), std::invalid_argument);
  }
}
