#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "evmvec/simplify.hpp"

namespace evmvec {

// Every ordered token pair "A B" over a vocabulary, enumerated outer-a
// inner-b in vocabulary order. 35 simplified tokens give 1225 bigrams.
struct BigramUniverse {
  std::vector<std::string> bigrams;
  std::unordered_map<std::string, std::size_t> index;

  std::size_t size() const { return bigrams.size(); }
  std::optional<std::size_t> index_of(const std::string& bigram) const {
    auto it = index.find(bigram);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
};

BigramUniverse build_universe(const std::vector<std::string>& vocab_tokens);

BigramUniverse build_universe(const SimplifiedVocabulary& vocab);

// Raw-mode universe: distinct mnemonics observed in the training sequences,
// sorted lexicographically, then paired like build_universe.
BigramUniverse build_raw_universe(
    const std::vector<std::vector<std::string>>& training_token_seqs);

// Adjacent-pair counts for one contract. total is the contract's bigram
// count max(len-1, 0) and always equals the sum of counts, whether or not
// every bigram later lands in a universe.
struct BigramCounts {
  std::unordered_map<std::string, long> counts;
  long total = 0;
  std::string source_id;
};

BigramCounts count_bigrams(std::span<const std::string> tokens,
                           std::string source_id);

BigramCounts count_bigrams(const SimplifiedTokenSequence& seq);

std::string make_bigram(const std::string& a, const std::string& b);

}  // namespace evmvec
