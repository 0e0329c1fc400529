#ifndef FUZZYEULER_IO_HPP
#define FUZZYEULER_IO_HPP

#include <string>

#include <json.hpp>

#include "fuzzyeuler/fuzzy_number.hpp"

namespace fuzzyeuler {

/// Document form of a fuzzy number:
///   {"levels": [...], "lower": [...], "upper": [...]}
/// The shorthand {"tri": [a, b, c]} parses to the triangular number with
/// support [a, c] and peak b on the default grid. Sequences are arrays of
/// such documents.
nlohmann::json to_json(const FuzzyNumber& u);
FuzzyNumber fuzzy_number_from_json(const nlohmann::json& doc,
                                   std::size_t grid_size = kDefaultGridSize);

nlohmann::json to_json(const FuzzySequence& seq);
FuzzySequence fuzzy_sequence_from_json(const nlohmann::json& doc,
                                       std::size_t grid_size = kDefaultGridSize);

FuzzySequence load_sequence(const std::string& path,
                            std::size_t grid_size = kDefaultGridSize);
void save_sequence(const std::string& path, const FuzzySequence& seq);

}  // namespace fuzzyeuler

#endif
