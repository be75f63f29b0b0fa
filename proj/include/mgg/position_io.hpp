#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mgg/game.hpp"

namespace mgg {

/// A root position together with the convention it is meant to be played
/// under; this is what a position file describes.
struct PositionRecord {
  Position position;
  Convention convention = Convention::normal;

  friend bool operator==(const PositionRecord&, const PositionRecord&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Parses the `mgg-pos 1` text format. '#' lines and blank lines are
/// ignored; weight and edge lines may appear in any order within their
/// block.
PositionRecord parse_position(std::string_view text);

/// Canonical text: weights by ascending vertex, edges in canonical order.
/// Only root positions (nothing removed) are representable.
std::string serialize_position(const PositionRecord& record);

PositionRecord read_position_file(const std::filesystem::path& path);
void write_position_file(const std::filesystem::path& path, const PositionRecord& record);

std::optional<Game> parse_game(std::string_view name);
std::optional<Convention> parse_convention(std::string_view name);

}  // namespace mgg
