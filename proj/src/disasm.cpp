#include "evmvec/disasm.hpp"

#include <algorithm>

#include "evmvec/errors.hpp"
#include "evmvec/opcode_table.hpp"
#include "evmvec/textfmt.hpp"

namespace evmvec {

namespace {

int hex_nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::vector<std::uint8_t> hex_to_bytes(std::string_view digits,
                                       std::size_t err_offset) {
  if (digits.size() % 2 != 0)
    throw MalformedInputError("odd number of hex digits (" +
                              std::to_string(digits.size()) + ")");
  std::vector<std::uint8_t> out;
  out.reserve(digits.size() / 2);
  for (std::size_t i = 0; i < digits.size(); i += 2) {
    int hi = hex_nibble(digits[i]);
    int lo = hex_nibble(digits[i + 1]);
    if (hi < 0)
      throw MalformedInputError("invalid hex character '" +
                                std::string(1, digits[i]) + "' at position " +
                                std::to_string(err_offset + i));
    if (lo < 0)
      throw MalformedInputError("invalid hex character '" +
                                std::string(1, digits[i + 1]) +
                                "' at position " +
                                std::to_string(err_offset + i + 1));
    out.push_back(static_cast<std::uint8_t>((hi << 4) | lo));
  }
  return out;
}

}  // namespace

Bytecode decode_hex(std::string_view text, std::string source_id) {
  std::string_view digits = trim(text);
  std::size_t offset = digits.data() - text.data();
  if (digits.starts_with("0x") || digits.starts_with("0X")) {
    digits.remove_prefix(2);
    offset += 2;
  }
  return Bytecode{hex_to_bytes(digits, offset), std::move(source_id)};
}

std::string encode_hex(std::span<const std::uint8_t> bytes) {
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(hex[b >> 4]);
    out.push_back(hex[b & 0xF]);
  }
  return out;
}

OpcodeSequence disassemble(const Bytecode& bytecode) {
  OpcodeSequence seq;
  seq.source_id = bytecode.source_id;
  const auto& bytes = bytecode.bytes;
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    const std::uint8_t op = bytes[pos];
    const OpcodeInfo& info = opcode_info(op);
    Instruction ins;
    ins.offset = pos;
    ins.opcode = op;
    ins.mnemonic = std::string(info.mnemonic);
    const std::size_t want = static_cast<std::size_t>(info.immediate_size);
    const std::size_t have = std::min(want, bytes.size() - pos - 1);
    ins.immediate.assign(bytes.begin() + pos + 1, bytes.begin() + pos + 1 + have);
    pos += 1 + have;
    seq.items.push_back(std::move(ins));
  }
  return seq;
}

std::vector<std::uint8_t> serialize(const OpcodeSequence& seq) {
  std::vector<std::uint8_t> out;
  for (const Instruction& ins : seq.items) {
    out.push_back(ins.opcode);
    out.insert(out.end(), ins.immediate.begin(), ins.immediate.end());
  }
  return out;
}

OpcodeSequence parse_opcode_text(std::string_view text, std::string source_id) {
  OpcodeSequence seq;
  seq.source_id = std::move(source_id);
  std::size_t offset = 0;
  std::size_t line_no = 0;
  // A PUSHk whose immediate token is omitted reads as the value 0; filling
  // the full width keeps instruction spans tiling the serialized bytes.
  auto fill_missing_immediate = [&] {
    if (seq.items.empty()) return;
    Instruction& prev = seq.items.back();
    const int width = push_immediate_size(prev.mnemonic);
    if (width > 0 && prev.immediate.empty()) {
      prev.immediate.assign(static_cast<std::size_t>(width), 0);
      offset += static_cast<std::size_t>(width);
    }
  };
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    for (std::string_view token : split_tokens(line)) {
      if (token.starts_with("0x") || token.starts_with("0X")) {
        // immediate position: must follow a PUSHk with room for one
        if (seq.items.empty())
          throw MalformedInputError("line " + std::to_string(line_no) +
                                    ": immediate '" + std::string(token) +
                                    "' without a preceding instruction");
        Instruction& prev = seq.items.back();
        const int width = push_immediate_size(prev.mnemonic);
        if (width == 0)
          throw MalformedInputError("line " + std::to_string(line_no) + ": '" +
                                    prev.mnemonic +
                                    "' does not take an immediate");
        if (!prev.immediate.empty())
          throw MalformedInputError("line " + std::to_string(line_no) + ": '" +
                                    prev.mnemonic +
                                    "' given a second immediate");
        std::string digits(token.substr(2));
        if (digits.empty())
          throw MalformedInputError("line " + std::to_string(line_no) +
                                    ": empty immediate token");
        if (digits.size() % 2 != 0) digits.insert(digits.begin(), '0');
        std::vector<std::uint8_t> bytes;
        try {
          bytes = hex_to_bytes(digits, 0);
        } catch (const MalformedInputError&) {
          throw MalformedInputError("line " + std::to_string(line_no) +
                                    ": bad immediate '" + std::string(token) +
                                    "'");
        }
        if (bytes.size() > static_cast<std::size_t>(width))
          throw MalformedInputError(
              "line " + std::to_string(line_no) + ": immediate '" +
              std::string(token) + "' wider than " + prev.mnemonic);
        // numeric reading: left-pad to the instruction's full width
        prev.immediate.assign(static_cast<std::size_t>(width) - bytes.size(), 0);
        prev.immediate.insert(prev.immediate.end(), bytes.begin(), bytes.end());
        offset += static_cast<std::size_t>(width);
        continue;
      }
      const std::string mnemonic = to_upper(token);
      auto byte = opcode_byte(mnemonic);
      if (!byte)
        throw MalformedInputError("line " + std::to_string(line_no) +
                                  ": unknown mnemonic '" + std::string(token) +
                                  "'");
      fill_missing_immediate();
      Instruction ins;
      ins.offset = offset;
      ins.opcode = *byte;
      ins.mnemonic = mnemonic;
      offset += 1;  // immediate, if any, extends this when it arrives
      seq.items.push_back(std::move(ins));
    }
  }
  fill_missing_immediate();
  return seq;
}

std::string to_text(const OpcodeSequence& seq) {
  std::string out;
  for (const Instruction& ins : seq.items) {
    out += ins.mnemonic;
    if (!ins.immediate.empty()) {
      out += " 0x";
      out += encode_hex(ins.immediate);
    }
    out += '\n';
  }
  return out;
}

std::vector<std::string> mnemonics(const OpcodeSequence& seq) {
  std::vector<std::string> out;
  out.reserve(seq.items.size());
  for (const Instruction& ins : seq.items) out.push_back(ins.mnemonic);
  return out;
}

}  // namespace evmvec
