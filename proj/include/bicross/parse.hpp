#pragma once

#include "bicross/matched_pair.hpp"

#include <map>

namespace bicross {

struct ParseError : std::runtime_error {
  size_t line;
  ParseError(size_t line_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

/// Parsed input file: named groups plus the matched pair they define.
///
/// Line grammar (UTF-8, # comments, blank lines ignored):
///   group <name> table <n>          followed by n rows of n 0-based indices
///   group <name> perm <degree> <cycles>...
///   group <name> family Z | Z1m <m> | ZmZ <m>
///   subgroup <name> of <group> elements <elem>...
///   subgroup <name> of <group> generators <elem>...
///   matchedpair <G> <K> <H>         derive from the exact factorization
///   matchedpair explicit <H> <K>    followed by tr/tl lines
///   tr <h> <k> -> <k'>
///   tl <h> <k> -> <h'>
///   matchedpair builtin ZmZ <m> [swapped]
///
/// Permutation elements use cycle notation ("(1,2)(3,4)", "e"); table
/// elements are 0-based indices; Z elements are integers; Z[1/m] elements
/// are rationals p/q; Z[1/m]x|Z elements are written k|n.
struct ParsedInput {
  std::map<std::string, GroupPtr> groups;
  std::optional<MatchedPair> pair;
};

ParsedInput parse_input(const std::string& text);
ParsedInput parse_input_file(const std::string& path);

}  // namespace bicross
