#pragma once

#include <cstdint>
#include <string_view>

#include "ordlab/ordinal.hpp"

// Cursor-style helpers shared by the ordinal and set literal parsers.
namespace ordlab::detail {

void skip_ws(std::string_view s, std::size_t& pos);
std::uint64_t parse_nat(std::string_view s, std::size_t& pos);
bool consume(std::string_view s, std::size_t& pos, char c);
void expect(std::string_view s, std::size_t& pos, char c);
Ordinal parse_ordinal_at(std::string_view s, std::size_t& pos, unsigned deg);

}  // namespace ordlab::detail
