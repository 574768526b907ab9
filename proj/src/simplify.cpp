#include "evmvec/simplify.hpp"

#include "evmvec/errors.hpp"
#include "evmvec/textfmt.hpp"

namespace evmvec {

// Single source of truth for the simplified vocabulary and the mapping
// rules. Line grammar:
//   token  <NAME>            vocabulary entry, order fixes vector layout
//   prefix <PREFIX> <TOKEN>  any mnemonic starting with PREFIX maps to TOKEN
//   map    <MNEMONIC> <TOKEN>
//   drop   <MNEMONIC>        explicitly removed from the token stream
// Mnemonics that match no rule and are not vocabulary members are dropped.
// Vocabulary members always map to themselves, so simplification is
// idempotent.
static constexpr std::string_view kTableText = R"(# simplified instruction vocabulary (35 tokens; order is canonical)
token PUSH
token DUP
token SWAP
token LOG
token COUNT
token PREDICT
token JUDGE
token COMPARISON
token ADDRESS
token JUMPDEST
token JUMP
token JUMPI
token CALLVALUE
token CALLDATALOAD
token CALLDATASIZE
token CALLDATACOPY
token CALL
token CODESIZE
token CODECOPY
token GASPRICE
token CREATE
token EXTCODESIZE
token EXTCODECOPY
token GAS
token STOP
token EQ
token CALLCODE
token DELEGATECALL
token STATICCALL
token SELFDESTRUCT
token REVERT
token MSTORE
token SHA3
token POP
token RETURN

# stack/data operation families collapse onto one token each
prefix PUSH PUSH
prefix DUP DUP
prefix SWAP SWAP
prefix LOG LOG

# arithmetic -> COUNT
map ADD COUNT
map MUL COUNT
map SUB COUNT
map DIV COUNT
map SDIV COUNT
map MOD COUNT
map SMOD COUNT
map ADDMOD COUNT
map MULMOD COUNT
map EXP COUNT

# block-environment reads -> PREDICT
map BLOCKHASH PREDICT
map COINBASE PREDICT
map TIMESTAMP PREDICT
map NUMBER PREDICT
map DIFFICULTY PREDICT
map GASLIMIT PREDICT

# bitwise logic -> JUDGE
map AND JUDGE
map OR JUDGE
map XOR JUDGE
map NOT JUDGE

# relational tests -> COMPARISON (EQ stays its own token)
map LT COMPARISON
map GT COMPARISON
map SLT COMPARISON
map SGT COMPARISON
map ISZERO COMPARISON

# address/balance queries -> ADDRESS
map ADDRESS ADDRESS
map BALANCE ADDRESS
map ORIGIN ADDRESS
map CALLER ADDRESS

# storage family and termination filler, removed from the token stream
drop MLOAD
drop MSTORE8
drop SLOAD
drop SSTORE
drop INVALID
)";

namespace {

struct MappingTable {
  SimplifiedVocabulary vocab;
  std::vector<std::pair<std::string, std::string>> prefixes;
  std::unordered_map<std::string, std::string> exact;
  std::vector<std::string> dropped;
};

MappingTable parse_table(std::string_view text) {
  MappingTable t;
  std::size_t line_no = 0;
  for (std::string_view raw : split_lines(text)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    auto tok = split_tokens(line);
    auto fail = [&](const char* why) {
      throw Error("simplification table line " + std::to_string(line_no) +
                  ": " + why);
    };
    if (tok[0] == "token" && tok.size() == 2) {
      std::string name(tok[1]);
      if (!t.vocab.index_.emplace(name, t.vocab.tokens_.size()).second)
        fail("duplicate vocabulary token");
      t.vocab.tokens_.push_back(std::move(name));
    } else if (tok[0] == "prefix" && tok.size() == 3) {
      t.prefixes.emplace_back(std::string(tok[1]), std::string(tok[2]));
    } else if (tok[0] == "map" && tok.size() == 3) {
      t.exact.emplace(std::string(tok[1]), std::string(tok[2]));
    } else if (tok[0] == "drop" && tok.size() == 2) {
      t.dropped.emplace_back(tok[1]);
    } else {
      fail("unrecognized directive");
    }
  }
  return t;
}

const MappingTable& mapping_table() {
  static const MappingTable t = parse_table(kTableText);
  return t;
}

}  // namespace

std::optional<std::size_t> SimplifiedVocabulary::index_of(
    std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const SimplifiedVocabulary& vocabulary() { return mapping_table().vocab; }

std::string_view simplification_table_text() { return kTableText; }

std::optional<std::string_view> simplify_opcode(std::string_view mnemonic) {
  const MappingTable& t = mapping_table();
  for (const auto& [prefix, target] : t.prefixes)
    if (mnemonic.starts_with(prefix)) return std::string_view(target);
  auto it = t.exact.find(std::string(mnemonic));
  if (it != t.exact.end()) return std::string_view(it->second);
  auto idx = t.vocab.index_of(mnemonic);
  if (idx) return std::string_view(t.vocab.tokens()[*idx]);
  return std::nullopt;
}

SimplifiedTokenSequence simplify_tokens(
    const std::vector<std::string>& mnemonics, std::string source_id) {
  SimplifiedTokenSequence out;
  out.source_id = std::move(source_id);
  out.tokens.reserve(mnemonics.size());
  for (const std::string& m : mnemonics) {
    if (auto tok = simplify_opcode(m))
      out.tokens.emplace_back(*tok);
    else
      ++out.dropped_count;
  }
  return out;
}

SimplifiedTokenSequence simplify_sequence(const OpcodeSequence& seq) {
  return simplify_tokens(mnemonics(seq), seq.source_id);
}

}  // namespace evmvec
