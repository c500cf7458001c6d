#include "catwalk/table_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

namespace catwalk {

void write_table_csv(const BcTable& table, std::ostream& out) {
    for (int n = 0; n <= table.n_max(); ++n) {
        for (int m = 0; m <= table.n_max(); ++m) {
            if (m > 0) out << ',';
            if (m <= n) out << table.at(n, m).str();
        }
        out << '\n';
    }
}

void write_table_json(const BcTable& table, std::ostream& out) {
    nlohmann::json rows = nlohmann::json::array();
    for (int n = 0; n <= table.n_max(); ++n) {
        nlohmann::json row = nlohmann::json::array();
        for (int m = 0; m <= n; ++m) row.push_back(table.at(n, m).str());
        rows.push_back(std::move(row));
    }
    out << rows.dump() << '\n';
}

BcTable read_table_csv(std::istream& in) {
    std::vector<std::vector<Natural>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() && in.eof()) break;
        std::vector<Natural> row;
        std::size_t start = 0;
        const int n = static_cast<int>(rows.size());
        for (int m = 0;; ++m) {
            const std::size_t comma = line.find(',', start);
            const std::string field = line.substr(
                start, comma == std::string::npos ? std::string::npos : comma - start);
            if (m <= n) {
                if (field.empty())
                    throw std::invalid_argument("table csv: missing cell (" +
                                                std::to_string(n) + ", " +
                                                std::to_string(m) + ")");
                row.push_back(parse_natural(field));
            } else if (!field.empty()) {
                throw std::invalid_argument("table csv: unexpected value in column " +
                                            std::to_string(m) + " of row " +
                                            std::to_string(n));
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        rows.push_back(std::move(row));
    }
    return BcTable(std::move(rows));
}

BcTable read_table_json(std::istream& in) {
    nlohmann::json parsed;
    in >> parsed;
    if (!parsed.is_array())
        throw std::invalid_argument("table json: expected an array of arrays");
    std::vector<std::vector<Natural>> rows;
    rows.reserve(parsed.size());
    for (const auto& row : parsed) {
        if (!row.is_array())
            throw std::invalid_argument("table json: expected an array of arrays");
        std::vector<Natural> cells;
        cells.reserve(row.size());
        for (const auto& cell : row) {
            if (!cell.is_string())
                throw std::invalid_argument("table json: cells must be decimal strings");
            cells.push_back(parse_natural(cell.get<std::string>()));
        }
        rows.push_back(std::move(cells));
    }
    return BcTable(std::move(rows));
}

namespace {

bool has_suffix(const std::string& path, const std::string& suffix) {
    return path.size() >= suffix.size() &&
           path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

void save_table(const BcTable& table, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_table: cannot open " + path);
    if (has_suffix(path, ".csv")) write_table_csv(table, out);
    else if (has_suffix(path, ".json")) write_table_json(table, out);
    else throw std::invalid_argument("save_table: path must end in .csv or .json");
    if (!out) throw std::runtime_error("save_table: write failed for " + path);
}

BcTable load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_table: cannot open " + path);
    if (has_suffix(path, ".csv")) return read_table_csv(in);
    if (has_suffix(path, ".json")) return read_table_json(in);
    throw std::invalid_argument("load_table: path must end in .csv or .json");
}

}  // namespace catwalk
