#include "evmvec/ngram.hpp"

#include <algorithm>
#include <set>

#include "evmvec/errors.hpp"

namespace evmvec {

std::string make_bigram(const std::string& a, const std::string& b) {
  std::string s;
  s.reserve(a.size() + 1 + b.size());
  s += a;
  s += ' ';
  s += b;
  return s;
}

BigramUniverse build_universe(const std::vector<std::string>& vocab_tokens) {
  if (vocab_tokens.empty()) throw ValidationError("empty vocabulary");
  BigramUniverse u;
  u.bigrams.reserve(vocab_tokens.size() * vocab_tokens.size());
  for (const std::string& a : vocab_tokens)
    for (const std::string& b : vocab_tokens) {
      u.index.emplace(make_bigram(a, b), u.bigrams.size());
      u.bigrams.push_back(make_bigram(a, b));
    }
  return u;
}

BigramUniverse build_universe(const SimplifiedVocabulary& vocab) {
  return build_universe(vocab.tokens());
}

BigramUniverse build_raw_universe(
    const std::vector<std::vector<std::string>>& training_token_seqs) {
  std::set<std::string> distinct;
  for (const auto& seq : training_token_seqs)
    distinct.insert(seq.begin(), seq.end());
  if (distinct.empty())
    throw ValidationError("no tokens observed in training corpus");
  return build_universe(
      std::vector<std::string>(distinct.begin(), distinct.end()));
}

BigramCounts count_bigrams(std::span<const std::string> tokens,
                           std::string source_id) {
  BigramCounts out;
  out.source_id = std::move(source_id);
  if (tokens.size() >= 2) {
    for (std::size_t i = 0; i + 1 < tokens.size(); ++i)
      ++out.counts[make_bigram(tokens[i], tokens[i + 1])];
    out.total = static_cast<long>(tokens.size() - 1);
  }
  return out;
}

BigramCounts count_bigrams(const SimplifiedTokenSequence& seq) {
  return count_bigrams(std::span<const std::string>(seq.tokens),
                       seq.source_id);
}

}  // namespace evmvec
