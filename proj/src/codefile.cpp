#include "ulam/codefile.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ulam {

namespace {

int parse_int(const std::string& tok, const char* what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (...) {
    throw std::invalid_argument(std::string("bad ") + what + ": " + tok);
  }
  if (used != tok.size()) {
    throw std::invalid_argument(std::string("bad ") + what + ": " + tok);
  }
  return v;
}

SyndromeLabel parse_label(const std::string& value) {
  SyndromeLabel label;
  std::string tok;
  std::istringstream is(value);
  while (std::getline(is, tok, ',')) {
    label.push_back(parse_int(tok, "label residue"));
  }
  return label;
}

std::string label_text(const Codebook& book) {
  if (book.construction() == Construction::kGreedy) {
    return "greedy";
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < book.label().size(); ++i) {
    if (i > 0) {
      os << ',';
    }
    os << book.label()[i];
  }
  return os.str();
}

void write_header(std::ostream& out, int n, int t, const Codebook& book,
                  const std::string& metric) {
  out << n << ' ' << t << ' ' << book.params().prime << ' '
      << book.params().syndrome_rows << " label=" << label_text(book) << " construction="
      << (book.construction() == Construction::kSyndrome ? "syndrome" : "greedy")
      << " dmin=" << book.min_distance() << " metric=" << metric << '\n';
}

}  // namespace

ParsedCodeFile read_code_file(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument("empty code file");
  }
  std::istringstream header_stream(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (header_stream >> tok) {
    tokens.push_back(tok);
  }
  if (tokens.size() != 8) {
    throw std::invalid_argument("header must have 8 fields");
  }
  ParsedCodeFile file;
  file.header.n = parse_int(tokens[0], "n");
  file.header.t = parse_int(tokens[1], "t");
  file.header.p = parse_int(tokens[2], "p");
  file.header.r = parse_int(tokens[3], "r");
  bool greedy_label = false;
  for (std::size_t i = 4; i < tokens.size(); ++i) {
    const auto eq = tokens[i].find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("bad header field: " + tokens[i]);
    }
    const std::string key = tokens[i].substr(0, eq);
    const std::string value = tokens[i].substr(eq + 1);
    if (key == "label") {
      if (value == "greedy") {
        greedy_label = true;
      } else {
        file.header.label = parse_label(value);
      }
    } else if (key == "construction") {
      if (value == "syndrome") {
        file.header.construction = Construction::kSyndrome;
      } else if (value == "greedy") {
        file.header.construction = Construction::kGreedy;
      } else {
        throw std::invalid_argument("bad construction: " + value);
      }
    } else if (key == "dmin") {
      file.header.dmin = parse_int(value, "dmin");
    } else if (key == "metric") {
      if (value != "hamming" && value != "ulam") {
        throw std::invalid_argument("bad metric: " + value);
      }
      file.header.metric = value;
    } else {
      throw std::invalid_argument("unknown header key: " + key);
    }
  }
  if (file.header.metric.empty()) {
    throw std::invalid_argument("header missing metric");
  }
  if (greedy_label != (file.header.construction == Construction::kGreedy)) {
    throw std::invalid_argument("label and construction fields disagree");
  }
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    file.words.push_back(parse_permutation(line));
  }
  return file;
}

void write_base_codebook(std::ostream& out, int n, int t, const Codebook& book) {
  write_header(out, n, t, book, "hamming");
  for (const Permutation& w : book.words()) {
    out << to_string(w) << '\n';
  }
}

void write_deletion_code(std::ostream& out, const DeletionCode& code) {
  write_header(out, code.n(), code.t(), code.base(), "ulam");
  for (const Permutation& w : code.words()) {
    out << to_string(w) << '\n';
  }
}

Codebook load_base_codebook(const ParsedCodeFile& file) {
  const CodeFileHeader& h = file.header;
  if (h.metric != "hamming") {
    throw std::invalid_argument("expected a metric=hamming file");
  }
  const FieldParams params = make_field_params(h.n + 1, h.r);
  if (params.prime != h.p) {
    throw std::invalid_argument("header prime does not match the word length");
  }
  Codebook book(params, h.construction,
                h.construction == Construction::kSyndrome ? h.label : SyndromeLabel{},
                h.dmin, file.words);
  if (h.construction == Construction::kSyndrome) {
    if (static_cast<int>(h.label.size()) != h.r) {
      throw std::invalid_argument("label length must equal r");
    }
    if (h.dmin != h.r + 2) {
      throw std::invalid_argument("syndrome class distance must be r + 2");
    }
    for (const Permutation& w : book.words()) {
      if (syndrome(w, params) != h.label) {
        throw std::invalid_argument("stored word violates the header label");
      }
    }
  }
  return book;
}

DeletionCode load_deletion_code(const ParsedCodeFile& file) {
  const CodeFileHeader& h = file.header;
  if (h.metric != "ulam") {
    throw std::invalid_argument("expected a metric=ulam file");
  }
  const FieldParams params = make_field_params(h.n + 1, h.r);
  if (params.prime != h.p) {
    throw std::invalid_argument("header prime does not match the word length");
  }
  const Codebook base = h.construction == Construction::kSyndrome
                            ? build_syndrome_class(params, h.label)
                            : build_greedy(params, h.dmin);
  if (h.dmin != base.min_distance()) {
    throw std::invalid_argument("header dmin does not match the construction");
  }
  DeletionCode code = build_deletion_code(h.n, h.t, base);
  if (code.words() != file.words) {
    throw std::invalid_argument("stored words do not match the rebuilt code");
  }
  return code;
}

}  // namespace ulam
