#include "covlab/panel.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace covlab {

namespace {

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream stream(line);
    while (std::getline(stream, field, ',')) {
        out.push_back(trim(field));
    }
    if (!line.empty() && line.back() == ',') {
        out.emplace_back("");
    }
    return out;
}

struct RawTable {
    std::vector<std::string> dates;
    std::vector<std::string> columns;
    Matrix values;
};

// Shared loader: header row, first column "date", remaining columns numeric,
// dates strictly increasing after normalization.
RawTable load_table(const std::string& path) {
    std::ifstream file(path);
    if (!file) {
        throw std::runtime_error("load_panel: cannot open '" + path + "'");
    }
    std::string line;
    if (!std::getline(file, line)) {
        throw std::runtime_error("load_panel: '" + path + "' is empty");
    }
    auto header = split_csv_line(line);
    if (header.size() < 2) {
        throw std::runtime_error("load_panel: '" + path + "' needs a date column and at least one value column");
    }
    RawTable table;
    table.columns.assign(header.begin() + 1, header.end());

    std::vector<std::vector<double>> rows;
    int lineNo = 1;
    while (std::getline(file, line)) {
        ++lineNo;
        if (trim(line).empty()) continue;
        auto fields = split_csv_line(line);
        if (fields.size() != header.size()) {
            std::ostringstream msg;
            msg << "load_panel: row " << lineNo << " of '" << path << "' has "
                << fields.size() << " fields, expected " << header.size();
            throw std::runtime_error(msg.str());
        }
        std::string date = normalize_date(fields[0]);
        if (!table.dates.empty() && date <= table.dates.back()) {
            std::ostringstream msg;
            if (date == table.dates.back()) {
                msg << "load_panel: duplicate date '" << date << "' at row " << lineNo;
            } else {
                msg << "load_panel: dates not strictly increasing at row " << lineNo
                    << " ('" << date << "' after '" << table.dates.back() << "')";
            }
            throw std::runtime_error(msg.str());
        }
        std::vector<double> row(header.size() - 1);
        for (std::size_t j = 1; j < fields.size(); ++j) {
            if (fields[j].empty()) {
                std::ostringstream msg;
                msg << "load_panel: missing value at (row " << lineNo << ", col "
                    << header[j] << ") in '" << path << "'";
                throw std::runtime_error(msg.str());
            }
            try {
                std::size_t consumed = 0;
                row[j - 1] = std::stod(fields[j], &consumed);
                if (consumed != fields[j].size()) throw std::invalid_argument("trailing junk");
            } catch (const std::exception&) {
                std::ostringstream msg;
                msg << "load_panel: non-numeric value '" << fields[j] << "' at (row "
                    << lineNo << ", col " << header[j] << ")";
                throw std::runtime_error(msg.str());
            }
            if (!std::isfinite(row[j - 1])) {
                std::ostringstream msg;
                msg << "load_panel: non-finite value at (row " << lineNo << ", col "
                    << header[j] << ")";
                throw std::runtime_error(msg.str());
            }
        }
        table.dates.push_back(std::move(date));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw std::runtime_error("load_panel: '" + path + "' has no data rows");
    }
    table.values.resize(static_cast<Index>(rows.size()), static_cast<Index>(table.columns.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            table.values(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
        }
    }
    return table;
}

void write_table(const std::string& path, const std::vector<std::string>& dates,
                 const std::vector<std::string>& columns, const Matrix& values) {
    std::ofstream file(path);
    if (!file) {
        throw std::runtime_error("save_panel: cannot write '" + path + "'");
    }
    file << "date";
    for (const auto& c : columns) file << ',' << c;
    file << '\n';
    file << std::setprecision(17);
    for (Index t = 0; t < values.rows(); ++t) {
        file << dates[static_cast<std::size_t>(t)];
        for (Index j = 0; j < values.cols(); ++j) file << ',' << values(t, j);
        file << '\n';
    }
}

}  // namespace

std::string normalize_date(const std::string& raw) {
    std::string s = trim(raw);
    if (s.size() >= 10 && s[4] == '-' && s[7] == '-') {
        s = s.substr(0, 7);  // YYYY-MM-DD -> YYYY-MM
    }
    auto is_digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
    bool ok = s.size() == 7 && s[4] == '-' && is_digit(s[0]) && is_digit(s[1]) &&
              is_digit(s[2]) && is_digit(s[3]) && is_digit(s[5]) && is_digit(s[6]);
    if (!ok) {
        throw std::runtime_error("load_panel: date label '" + raw + "' is not YYYY-MM");
    }
    return s;
}

ReturnsPanel load_returns(const std::string& path) {
    auto table = load_table(path);
    return ReturnsPanel{std::move(table.dates), std::move(table.columns), std::move(table.values)};
}

FactorPanel load_factors(const std::string& path) {
    auto table = load_table(path);
    return FactorPanel{std::move(table.dates), std::move(table.columns), std::move(table.values)};
}

RiskFreeSeries load_riskfree(const std::string& path) {
    auto table = load_table(path);
    if (table.columns.size() != 1) {
        throw std::runtime_error("load_panel: risk-free file must have exactly two columns date,rf");
    }
    return RiskFreeSeries{std::move(table.dates), table.values.col(0)};
}

void save_returns_csv(const ReturnsPanel& panel, const std::string& path) {
    write_table(path, panel.dates, panel.assets, panel.values);
}

void save_factors_csv(const FactorPanel& panel, const std::string& path) {
    write_table(path, panel.dates, panel.factors, panel.values);
}

void save_matrix_csv(const Matrix& M, const std::vector<std::string>& labels,
                     const std::string& path) {
    std::ofstream file(path);
    if (!file) {
        throw std::runtime_error("save_matrix_csv: cannot write '" + path + "'");
    }
    file << "label";
    for (const auto& l : labels) file << ',' << l;
    file << '\n';
    file << std::setprecision(17);
    for (Index i = 0; i < M.rows(); ++i) {
        file << labels[static_cast<std::size_t>(i)];
        for (Index j = 0; j < M.cols(); ++j) file << ',' << M(i, j);
        file << '\n';
    }
}

Matrix load_matrix_csv(const std::string& path) {
    std::ifstream file(path);
    if (!file) {
        throw std::runtime_error("load_matrix_csv: cannot open '" + path + "'");
    }
    std::string line;
    std::getline(file, line);  // header
    std::vector<std::vector<double>> rows;
    while (std::getline(file, line)) {
        if (trim(line).empty()) continue;
        auto fields = split_csv_line(line);
        std::vector<double> row;
        for (std::size_t j = 1; j < fields.size(); ++j) row.push_back(std::stod(fields[j]));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) return Matrix();
    Matrix M(static_cast<Index>(rows.size()), static_cast<Index>(rows[0].size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            M(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
    return M;
}

ReturnsPanel to_excess(const ReturnsPanel& returns, const RiskFreeSeries& riskfree) {
    std::unordered_map<std::string, Index> rfIndex;
    for (std::size_t i = 0; i < riskfree.dates.size(); ++i) {
        rfIndex.emplace(riskfree.dates[i], static_cast<Index>(i));
    }
    ReturnsPanel out = returns;
    for (Index t = 0; t < out.periods(); ++t) {
        auto it = rfIndex.find(out.dates[static_cast<std::size_t>(t)]);
        if (it == rfIndex.end()) {
            throw std::runtime_error("to_excess: date " + out.dates[static_cast<std::size_t>(t)] +
                                     " missing from risk-free series");
        }
        out.values.row(t).array() -= riskfree.values(it->second);
    }
    return out;
}

FactorPanel align_factors(const ReturnsPanel& returns, const FactorPanel& factors) {
    std::unordered_map<std::string, Index> idx;
    for (std::size_t i = 0; i < factors.dates.size(); ++i) {
        idx.emplace(factors.dates[i], static_cast<Index>(i));
    }
    FactorPanel out;
    out.factors = factors.factors;
    out.dates = returns.dates;
    out.values.resize(returns.periods(), factors.values.cols());
    for (Index t = 0; t < returns.periods(); ++t) {
        auto it = idx.find(returns.dates[static_cast<std::size_t>(t)]);
        if (it == idx.end()) {
            throw std::runtime_error("align_factors: date " +
                                     returns.dates[static_cast<std::size_t>(t)] +
                                     " missing from factor panel");
        }
        out.values.row(t) = factors.values.row(it->second);
    }
    return out;
}

std::vector<WindowView> rolling_windows(const ReturnsPanel& returns,
                                        const FactorPanel* factors, Index windowLen) {
    const Index T = returns.periods();
    if (windowLen < 2) {
        throw std::invalid_argument("rolling_windows: window length must be >= 2");
    }
    if (T <= windowLen) {
        std::ostringstream msg;
        msg << "rolling_windows: insufficient history (T=" << T
            << " <= window length " << windowLen << ")";
        throw std::invalid_argument(msg.str());
    }
    if (factors != nullptr &&
        static_cast<Index>(factors->dates.size()) != T) {
        throw std::invalid_argument("rolling_windows: factor panel not aligned with returns");
    }
    std::vector<WindowView> windows;
    windows.reserve(static_cast<std::size_t>(T - windowLen));
    for (Index i = 0; i + windowLen < T; ++i) {
        WindowView w;
        w.trainStart = i;
        w.trainEnd = i + windowLen - 1;
        w.testIndex = i + windowLen;
        w.returns = &returns;
        w.factors = factors;
        windows.push_back(w);
    }
    return windows;
}

}  // namespace covlab
