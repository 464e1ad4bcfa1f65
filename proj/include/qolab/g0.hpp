#ifndef QOLAB_G0_HPP
#define QOLAB_G0_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qolab/relation.hpp"

namespace qolab {

// Canonical witnesses of density in the full binary tree: level n carries a
// word of length n, and every word of length-lex index below the horizon is
// a prefix of the word at its own index.
struct DenseSequences {
  std::vector<std::string> words;  // words[n] has length n

  int levels() const { return static_cast<int>(words.size()); }
};

// Length-then-lexicographic enumeration of binary words, right-padded with
// '0' to the level length.
DenseSequences dense_sequences(int levels);

// Validates lengths; density is a separate check since file-supplied
// sequences need not be canonical.
DenseSequences dense_sequences_from_words(std::vector<std::string> words);

bool density_holds(const DenseSequences& seqs);

// Truncation at word length N: one vertex per binary word of length N
// (big-endian bit encoding), one edge per flip of the bit following a
// stored word.
struct G0Level {
  int word_length = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // a < b, sorted

  std::uint64_t vertex_count() const { return 1ull << word_length; }
};

// Levels up to 20; the matrix view below is limited to 14.
G0Level g0_level(int word_length, const DenseSequences& seqs);
G0Level g0_level(int word_length);

Graph g0_graph(const G0Level& level);

struct G0Stats {
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
  bool connected = false;
  bool bipartite = false;
  int chi = 0;  // 0, 1, or 2 computed directly; trees never need more
};

G0Stats g0_stats(const G0Level& level);

std::uint32_t g0_vertex_of_word(const std::string& word);
std::string g0_word_of_vertex(std::uint32_t vertex, int word_length);

// Complete backtracking search for an edge-preserving map; returns the
// lexicographically least homomorphism or nullopt.
std::optional<std::vector<int>> hom_search(const Graph& g, const Graph& h,
                                           Budget* budget = nullptr);

// Dense-sequence text exchange: one word per line, '-' for the empty word.
std::string serialize_dense_sequences(const DenseSequences& seqs);
DenseSequences parse_dense_sequences(const std::string& text);

}  // namespace qolab

#endif
