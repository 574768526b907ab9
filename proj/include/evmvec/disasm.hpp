#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace evmvec {

// Raw contract code plus an opaque identifier carried through the pipeline.
struct Bytecode {
  std::vector<std::uint8_t> bytes;
  std::string source_id;
};

// Hex text with optional 0x prefix, even digit count. Throws
// MalformedInputError naming the first bad character position.
Bytecode decode_hex(std::string_view text, std::string source_id);

std::string encode_hex(std::span<const std::uint8_t> bytes);

struct Instruction {
  std::size_t offset = 0;
  std::uint8_t opcode = 0;  // raw byte; preserved so serialization is exact
  std::string mnemonic;
  std::vector<std::uint8_t> immediate;

  bool operator==(const Instruction&) const = default;
};

// Decoded instruction stream. Offsets strictly increase and instruction
// spans (1 + immediate size) tile the originating byte array exactly.
struct OpcodeSequence {
  std::vector<Instruction> items;
  std::string source_id;
};

// Total over all byte arrays: unknown bytes decode as INVALID, a PUSH cut off
// by end-of-code keeps its actual (shorter) immediate.
OpcodeSequence disassemble(const Bytecode& bytecode);

// Exact inverse of disassemble at the byte level.
std::vector<std::uint8_t> serialize(const OpcodeSequence& seq);

// Text format: one instruction per line, "MNEMONIC" or "PUSHk 0xIMMEDIATE";
// a single-line stream of the same tokens is also accepted. Mnemonics are
// case-insensitive on input and canonically uppercase on output.
OpcodeSequence parse_opcode_text(std::string_view text, std::string source_id);

std::string to_text(const OpcodeSequence& seq);

// Mnemonics with immediates stripped (the raw-mode token stream).
std::vector<std::string> mnemonics(const OpcodeSequence& seq);

}  // namespace evmvec
