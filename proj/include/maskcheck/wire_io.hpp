#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "maskcheck/wire.hpp"

namespace maskcheck {

/// Malformed wire file. `offset` is the byte position reported by the JSON
/// parser when the failure is syntactic.
class WireFormatError : public Error {
public:
    WireFormatError(const std::string& what, std::optional<std::size_t> offset = std::nullopt)
        : Error(what), offset_(offset) {}
    std::optional<std::size_t> offset() const noexcept { return offset_; }

private:
    std::optional<std::size_t> offset_;
};

// { "q": int, "alphabet": int, "order": "s0_major", "table": [int, ...] }
// with table[i] = w(i / q, i % q). "alphabet" defaults to 2 and "order" to
// "s0_major" when absent.
WireFunction parse_wire_json(std::string_view text, std::uint64_t max_cells = kDefaultMaxCells);
WireFunction load_wire_file(const std::string& path, std::uint64_t max_cells = kDefaultMaxCells);

std::string wire_to_json(const WireFunction& w);

}  // namespace maskcheck
