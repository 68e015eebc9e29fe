#pragma once

// Text formats. All files are UTF-8 with LF line endings; lines starting
// with '#' are comments.
//
//   design <H|A> n=<n> q=<q> w=<w> t=<t>
//   <one codeword per line>
//
//   partition <H|A> n=<n> q=<q> w=<w> t=<t> parts=<k>
//   part 1
//   <codewords>
//   part 2 ...
//
//   array k=<k> n=<N>
//   <one cell per line: k space-separated 1-based indices>
//
// Hypergraph files are array files whose cell lines may carry a trailing
// "# label" naming the witness face(s) of the edge.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "hcd/design.hpp"
#include "hcd/permanent.hpp"
#include "hcd/search.hpp"

namespace hcd {

std::string format_design(const Design& d);
// Throws ParseError (with the offending line) on any syntax problem,
// duplicate line or word that does not fit the header.
Design parse_design(std::string_view text, ParamPolicy policy = ParamPolicy::kStrict);

std::string format_partition(const Partition& p);
Partition parse_partition(std::string_view text, ParamPolicy policy = ParamPolicy::kStrict);

std::string format_array(const AdjacencyArray& m);
AdjacencyArray parse_array(std::string_view text);

// Array format plus vertex-label comments and per-edge witness trailers.
std::string format_hypergraph(const PartiteHypergraph& g);

// One block per line, space-separated 1-based point indices.
std::vector<std::vector<std::size_t>> parse_blocks(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace hcd
