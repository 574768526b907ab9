#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace evmvec {

// Byte -> mnemonic table for the EVM instruction set, frozen per fork
// revision so later forks stay additive. immediate_size is nonzero only for
// PUSH1..PUSH32.
struct OpcodeInfo {
  std::string_view mnemonic;
  int immediate_size;
  bool known;  // false for bytes with no assigned instruction
};

const OpcodeInfo& opcode_info(std::uint8_t byte);

// Canonical byte for a mnemonic (INVALID -> 0xfe). nullopt for unknown names.
std::optional<std::uint8_t> opcode_byte(std::string_view mnemonic);

bool is_known_mnemonic(std::string_view mnemonic);

// PUSHk immediate width (1..32) or 0 for anything else, including PUSH0.
int push_immediate_size(std::string_view mnemonic);

// Fork revision the table is frozen to.
std::string_view opcode_table_revision();

}  // namespace evmvec
