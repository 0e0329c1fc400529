#include "fuzzyeuler/io.hpp"

#include <fstream>
#include <stdexcept>

namespace fuzzyeuler {

using nlohmann::json;

json to_json(const FuzzyNumber& u) {
    return json{{"levels", u.levels()}, {"lower", u.lower()}, {"upper", u.upper()}};
}

FuzzyNumber fuzzy_number_from_json(const json& doc, std::size_t grid_size) {
    if (!doc.is_object())
        throw std::invalid_argument("fuzzy number document must be an object");
    if (doc.contains("tri")) {
        const auto& t = doc.at("tri");
        if (!t.is_array() || t.size() != 3)
            throw std::invalid_argument("\"tri\" shorthand needs exactly [a, b, c]");
        return FuzzyNumber::triangular(t[0].get<double>(), t[1].get<double>(),
                                       t[2].get<double>(), grid_size);
    }
    return FuzzyNumber(doc.at("levels").get<std::vector<double>>(),
                       doc.at("lower").get<std::vector<double>>(),
                       doc.at("upper").get<std::vector<double>>());
}

json to_json(const FuzzySequence& seq) {
    json arr = json::array();
    for (const auto& u : seq) arr.push_back(to_json(u));
    return arr;
}

FuzzySequence fuzzy_sequence_from_json(const json& doc, std::size_t grid_size) {
    if (!doc.is_array() || doc.empty())
        throw std::invalid_argument("fuzzy sequence document must be a nonempty array");
    FuzzySequence seq;
    seq.reserve(doc.size());
    for (const auto& item : doc) seq.push_back(fuzzy_number_from_json(item, grid_size));
    return seq;
}

FuzzySequence load_sequence(const std::string& path, std::size_t grid_size) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    json doc;
    in >> doc;
    return fuzzy_sequence_from_json(doc, grid_size);
}

void save_sequence(const std::string& path, const FuzzySequence& seq) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << to_json(seq).dump(2) << '\n';
}

}  // namespace fuzzyeuler
