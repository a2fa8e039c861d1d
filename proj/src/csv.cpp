#include "rankforge/csv.hpp"

#include <charconv>
#include <fstream>

namespace rankforge {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else if (c != '\r') {
            field += c;
        }
    }
    fields.push_back(std::move(field));
    return fields;
}

namespace {

double parse_cell(const std::string& cell, std::size_t row, const std::string& column) {
    double out = 0.0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    while (first != last && (*first == ' ' || *first == '\t')) ++first;
    while (last != first && (*(last - 1) == ' ' || *(last - 1) == '\t')) --last;
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last || first == last) {
        throw Error("row " + std::to_string(row) + ", column '" + column +
                    "': cannot parse '" + cell + "' as a number");
    }
    return out;
}

}  // namespace

DecisionMatrix load_matrix_csv(const std::filesystem::path& path,
                               const std::vector<Objective>& objectives,
                               const std::vector<double>& weights) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open matrix file '" + path.string() + "'");

    std::string line;
    if (!std::getline(in, line)) throw Error("matrix file '" + path.string() + "' is empty");
    auto header = split_csv_line(line);
    if (header.size() < 2) {
        throw Error("matrix header needs at least one criterion column after the name column");
    }
    std::vector<std::string> criteria(header.begin() + 1, header.end());

    if (objectives.size() != criteria.size()) {
        throw Error("objectives has length " + std::to_string(objectives.size()) +
                    " but the CSV has " + std::to_string(criteria.size()) + " criteria");
    }
    std::vector<double> effective_weights = weights;
    if (effective_weights.empty()) {
        effective_weights.assign(criteria.size(), 1.0);
    } else if (effective_weights.size() != criteria.size()) {
        throw Error("weights has length " + std::to_string(effective_weights.size()) +
                    " but the CSV has " + std::to_string(criteria.size()) + " criteria");
    }

    std::vector<std::string> alternatives;
    std::vector<std::vector<double>> values;
    std::size_t row = 1;  // header is row 1
    while (std::getline(in, line)) {
        ++row;
        if (line.empty() || line == "\r") continue;
        auto fields = split_csv_line(line);
        if (fields.size() != header.size()) {
            throw Error("row " + std::to_string(row) + " has " + std::to_string(fields.size()) +
                        " fields, expected " + std::to_string(header.size()));
        }
        alternatives.push_back(fields[0]);
        std::vector<double> cells(criteria.size());
        for (std::size_t j = 0; j < criteria.size(); ++j) {
            cells[j] = parse_cell(fields[j + 1], row, criteria[j]);
        }
        values.push_back(std::move(cells));
    }
    if (alternatives.empty()) {
        throw Error("matrix file '" + path.string() + "' has no data rows");
    }
    return DecisionMatrix(std::move(alternatives), std::move(criteria), values, objectives,
                          std::move(effective_weights));
}

}  // namespace rankforge
