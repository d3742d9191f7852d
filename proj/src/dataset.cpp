#include "evofs/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "evofs/io.hpp"

namespace evofs {

namespace {

constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

bool parse_number(const std::string& raw, double& out) {
    const std::string s = trim(raw);
    if (s.empty()) return false;
    std::size_t consumed = 0;
    try {
        out = std::stod(s, &consumed);
    } catch (const std::exception&) {
        return false;
    }
    return consumed == s.size();
}

void encode_labels(Dataset& ds, const std::vector<std::string>& raw_labels) {
    std::set<std::string> unique(raw_labels.begin(), raw_labels.end());
    ds.label_names.assign(unique.begin(), unique.end());
    std::map<std::string, int> code;
    for (std::size_t i = 0; i < ds.label_names.size(); ++i)
        code[ds.label_names[i]] = static_cast<int>(i);
    ds.labels.reserve(raw_labels.size());
    for (const auto& s : raw_labels) ds.labels.push_back(code[s]);
}

std::uint64_t fnv1a_mix(std::uint64_t h, const void* data, std::size_t len) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= bytes[i];
        h *= 1099511628211ULL;
    }
    return h;
}

// Content hash of a row mixed with the plan seed; drives fold assignment.
std::uint64_t row_key(const Dataset& ds, std::size_t r, std::uint64_t seed) {
    std::uint64_t h = 14695981039346656037ULL;
    h = fnv1a_mix(h, &seed, sizeof(seed));
    for (std::size_t c = 0; c < ds.cols; ++c) {
        const double v = ds.at(r, c);
        h = fnv1a_mix(h, &v, sizeof(v));
    }
    const int label = ds.labels[r];
    h = fnv1a_mix(h, &label, sizeof(label));
    return h;
}

}  // namespace

std::vector<double> Dataset::column(std::size_t c) const {
    std::vector<double> out(rows);
    for (std::size_t r = 0; r < rows; ++r) out[r] = at(r, c);
    return out;
}

bool Dataset::has_missing() const {
    return std::any_of(values.begin(), values.end(), [](double v) { return std::isnan(v); });
}

Dataset Dataset::from_rows(const std::vector<std::vector<double>>& rows,
                           const std::vector<std::string>& labels,
                           std::vector<std::string> feature_names) {
    if (rows.size() != labels.size())
        throw std::invalid_argument("dataset: rows and labels must agree");
    Dataset ds;
    ds.rows = rows.size();
    ds.cols = rows.empty() ? 0 : rows[0].size();
    ds.values.reserve(ds.rows * ds.cols);
    for (const auto& row : rows) {
        if (row.size() != ds.cols) throw std::invalid_argument("dataset: ragged rows");
        ds.values.insert(ds.values.end(), row.begin(), row.end());
    }
    if (feature_names.empty()) {
        for (std::size_t c = 0; c < ds.cols; ++c) feature_names.push_back("f" + std::to_string(c));
    }
    if (feature_names.size() != ds.cols)
        throw std::invalid_argument("dataset: feature name count mismatch");
    ds.feature_names = std::move(feature_names);
    encode_labels(ds, labels);
    ds.source = "<memory>";
    return ds;
}

Dataset load_csv(const std::string& path, const LoadOptions& options) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_csv: cannot open " + path);

    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("load_csv: empty file " + path);
    std::vector<std::string> header = split_line(line);
    for (auto& h : header) h = trim(h);
    {
        std::set<std::string> seen;
        for (const auto& h : header)
            if (!seen.insert(h).second)
                throw std::runtime_error("load_csv: duplicate header name '" + h + "'");
    }

    const std::size_t ncols = header.size();
    const std::size_t label_col =
        options.label_column < 0 ? ncols - 1 : static_cast<std::size_t>(options.label_column);
    if (label_col >= ncols) throw std::runtime_error("load_csv: label column out of range");

    Dataset ds;
    ds.source = path;
    for (std::size_t c = 0; c < ncols; ++c)
        if (c != label_col) ds.feature_names.push_back(header[c]);
    ds.cols = ds.feature_names.size();

    std::vector<std::string> raw_labels;
    std::size_t row_no = 0;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        auto cells = split_line(line);
        if (cells.size() != ncols)
            throw std::runtime_error("load_csv: row " + std::to_string(row_no + 1) + " has " +
                                     std::to_string(cells.size()) + " cells, expected " +
                                     std::to_string(ncols));
        for (std::size_t c = 0; c < ncols; ++c) {
            if (c == label_col) {
                raw_labels.push_back(trim(cells[c]));
                continue;
            }
            const std::string cell = trim(cells[c]);
            if (cell.empty()) {
                ds.values.push_back(kMissing);
                continue;
            }
            double v = 0.0;
            if (!parse_number(cell, v))
                throw std::runtime_error("load_csv: non-numeric cell at row " +
                                         std::to_string(row_no + 1) + ", column '" + header[c] +
                                         "'");
            ds.values.push_back(v);
        }
        ++row_no;
    }
    if (row_no == 0) throw std::runtime_error("load_csv: no data rows in " + path);
    ds.rows = row_no;
    encode_labels(ds, raw_labels);
    ds.transform_log.push_back("load_csv(" + path + ")");
    return ds;
}

Dataset impute_missing(Dataset ds) {
    for (std::size_t c = 0; c < ds.cols; ++c) {
        double sum = 0.0;
        std::size_t seen = 0;
        for (std::size_t r = 0; r < ds.rows; ++r) {
            const double v = ds.at(r, c);
            if (!std::isnan(v)) {
                sum += v;
                ++seen;
            }
        }
        if (seen == 0)
            throw std::runtime_error("impute_missing: column '" + ds.feature_names[c] +
                                     "' has no observed values");
        if (seen == ds.rows) continue;
        const double mean = sum / static_cast<double>(seen);
        for (std::size_t r = 0; r < ds.rows; ++r)
            if (std::isnan(ds.at(r, c))) ds.at(r, c) = mean;
    }
    ds.transform_log.push_back("impute_missing(mean)");
    return ds;
}

Dataset normalize_minmax(Dataset ds) {
    if (ds.has_missing()) throw std::runtime_error("normalize_minmax: impute missing values first");
    for (std::size_t c = 0; c < ds.cols; ++c) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (std::size_t r = 0; r < ds.rows; ++r) {
            lo = std::min(lo, ds.at(r, c));
            hi = std::max(hi, ds.at(r, c));
        }
        if (lo == hi) {
            for (std::size_t r = 0; r < ds.rows; ++r) ds.at(r, c) = 0.5;
            continue;
        }
        const double span = hi - lo;
        for (std::size_t r = 0; r < ds.rows; ++r) ds.at(r, c) = (ds.at(r, c) - lo) / span;
    }
    ds.transform_log.push_back("normalize_minmax");
    return ds;
}

void save_csv(const Dataset& ds, const std::string& path) {
    std::string out;
    for (std::size_t c = 0; c < ds.cols; ++c) {
        out += ds.feature_names[c];
        out += ',';
    }
    out += "label\n";
    for (std::size_t r = 0; r < ds.rows; ++r) {
        for (std::size_t c = 0; c < ds.cols; ++c) {
            out += format_double(ds.at(r, c), 17);
            out += ',';
        }
        out += ds.label_names[ds.labels[r]];
        out += '\n';
    }
    write_file_atomic(path, out);
}

std::vector<std::size_t> split(const Dataset& ds, const SplitPlan& plan) {
    if (plan.scheme == SplitScheme::Holdout) {
        if (!(plan.test_fraction > 0.0 && plan.test_fraction < 1.0))
            throw std::invalid_argument("split: holdout fraction must lie in (0,1)");
        if (ds.rows < 2) throw std::invalid_argument("split: holdout needs at least 2 rows");
    } else {
        if (plan.folds < 2) throw std::invalid_argument("split: k-fold needs k >= 2");
        if (ds.rows < plan.folds) throw std::invalid_argument("split: fewer rows than folds");
    }

    // Group rows by class (or one group when unstratified), ordered by the
    // seed-derived content key inside each group.
    const std::size_t groups = plan.stratified ? ds.class_count() : 1;
    std::vector<std::vector<std::size_t>> by_group(groups);
    for (std::size_t r = 0; r < ds.rows; ++r)
        by_group[plan.stratified ? static_cast<std::size_t>(ds.labels[r]) : 0].push_back(r);
    std::vector<std::uint64_t> key(ds.rows);
    for (std::size_t r = 0; r < ds.rows; ++r) key[r] = row_key(ds, r, plan.seed);
    for (auto& group : by_group) {
        std::sort(group.begin(), group.end(), [&](std::size_t a, std::size_t b) {
            return key[a] != key[b] ? key[a] < key[b] : a < b;
        });
    }

    std::vector<std::size_t> assignment(ds.rows, 0);
    if (plan.scheme == SplitScheme::KFold) {
        for (const auto& group : by_group)
            if (plan.stratified && !group.empty() && group.size() < plan.folds)
                throw std::runtime_error("split: a class has fewer rows than folds");
        std::size_t cursor = 0;  // global round-robin keeps fold sizes within 1
        for (const auto& group : by_group)
            for (std::size_t r : group) assignment[r] = cursor++ % plan.folds;
        return assignment;
    }

    // Holdout: total test count, apportioned per group by largest remainder.
    const auto total_test =
        static_cast<std::size_t>(std::llround(plan.test_fraction * static_cast<double>(ds.rows)));
    std::vector<std::size_t> quota(groups, 0);
    std::vector<std::pair<double, std::size_t>> remainder;
    std::size_t assigned = 0;
    for (std::size_t g = 0; g < groups; ++g) {
        const double exact = plan.test_fraction * static_cast<double>(by_group[g].size());
        quota[g] = std::min(static_cast<std::size_t>(exact), by_group[g].size());
        assigned += quota[g];
        remainder.push_back({exact - static_cast<double>(quota[g]), g});
    }
    std::sort(remainder.begin(), remainder.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    for (std::size_t i = 0; assigned < total_test && i < remainder.size(); ++i) {
        const std::size_t g = remainder[i].second;
        if (quota[g] < by_group[g].size()) {
            ++quota[g];
            ++assigned;
        }
    }
    for (std::size_t g = 0; g < groups; ++g)
        for (std::size_t i = 0; i < quota[g]; ++i) assignment[by_group[g][i]] = 1;
    return assignment;
}

RoughSetTable discretize_equal_width(const Dataset& ds, std::size_t bins) {
    if (bins < 2) throw std::invalid_argument("discretize_equal_width: bins must be >= 2");
    RoughSetTable table;
    table.attributes.resize(ds.rows, std::vector<int>(ds.cols));
    table.decisions = ds.labels;
    for (std::size_t r = 0; r < ds.rows; ++r) {
        for (std::size_t c = 0; c < ds.cols; ++c) {
            auto bin = static_cast<long>(std::floor(ds.at(r, c) * static_cast<double>(bins)));
            bin = std::clamp(bin, 0L, static_cast<long>(bins) - 1);
            table.attributes[r][c] = static_cast<int>(bin);
        }
    }
    return table;
}

}  // namespace evofs
