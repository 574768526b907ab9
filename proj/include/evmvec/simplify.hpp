#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "evmvec/disasm.hpp"

namespace evmvec {

// The fixed 35-token alphabet produced by instruction simplification. Token
// order is canonical and determines every downstream vector layout.
class SimplifiedVocabulary {
public:
  const std::vector<std::string>& tokens() const { return tokens_; }
  std::size_t size() const { return tokens_.size(); }
  std::optional<std::size_t> index_of(std::string_view token) const;
  bool contains(std::string_view token) const {
    return index_of(token).has_value();
  }

private:
  friend const SimplifiedVocabulary& vocabulary();
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, std::size_t> index_;
};

// The shared vocabulary instance, parsed once from the shipped table.
const SimplifiedVocabulary& vocabulary();

// The table itself, as shipped (vocabulary order, category rules, and the
// explicit drop list). This is what `evmvec vocab --mapping` prints.
std::string_view simplification_table_text();

// Category/identity mapping for one uppercase mnemonic; nullopt means the
// instruction is dropped from the simplified stream.
std::optional<std::string_view> simplify_opcode(std::string_view mnemonic);

struct SimplifiedTokenSequence {
  std::vector<std::string> tokens;
  std::string source_id;
  std::size_t dropped_count = 0;
};

// Order-preserving map over the sequence; unmapped instructions are removed
// and counted.
SimplifiedTokenSequence simplify_sequence(const OpcodeSequence& seq);

SimplifiedTokenSequence simplify_tokens(const std::vector<std::string>& mnemonics,
                                        std::string source_id);

}  // namespace evmvec
