#pragma once

#include "riocf/rational.hpp"

#include <vector>

namespace riocf {

// Bundled integer sequences for offline identification. Terms are exact and
// were cross-checked against independent recurrences; triangles are stored
// flattened row by row.
struct SequenceEntry {
    std::string name;
    std::string provenance;
    std::vector<Integer> terms;
};

const std::vector<SequenceEntry>& sequence_table();

// Names of every bundled sequence the query is an exact prefix of.
// Queries shorter than 6 terms are accepted but prone to false positives;
// the CLI marks them as weak.
std::vector<std::string> identify_sequence(const std::vector<Integer>& terms);

}  // namespace riocf
