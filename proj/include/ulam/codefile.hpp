#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ulam/base_code.hpp"
#include "ulam/deletion_code.hpp"

namespace ulam {

// Code files carry one header line
//
//   <n> <t> <p> <r> label=<c1,c2,...> construction=<syndrome|greedy>
//   dmin=<d> metric=<hamming|ulam>
//
// followed by one codeword per line in one-line form. n is the length of the
// permutations being protected; metric=hamming stores base codewords of
// length n+1, metric=ulam stores the deletion codewords of length n. The
// label value is the comma-joined syndrome residues, or the word "greedy"
// for greedy construction.
struct CodeFileHeader {
  int n = 0;
  int t = 0;
  int p = 0;
  int r = 0;
  int dmin = 0;
  Construction construction = Construction::kSyndrome;
  SyndromeLabel label;
  std::string metric;
};

struct ParsedCodeFile {
  CodeFileHeader header;
  std::vector<Permutation> words;
};

ParsedCodeFile read_code_file(std::istream& in);

void write_base_codebook(std::ostream& out, int n, int t, const Codebook& book);
void write_deletion_code(std::ostream& out, const DeletionCode& code);

// Reassembles the Codebook of a metric=hamming file. Word syndromes are
// rechecked against the label for syndrome files.
Codebook load_base_codebook(const ParsedCodeFile& file);

// Reassembles the DeletionCode of a metric=ulam file. Deletion code files
// do not store the base codebook, so it is rebuilt from the header
// deterministically; the stored words must match the rebuilt code exactly.
DeletionCode load_deletion_code(const ParsedCodeFile& file);

}  // namespace ulam
