#include "pendulum/emit.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace pendulum {

std::string format_value(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string to_csv(const SpectrumTable& table, const nlohmann::json& metadata) {
    std::string out = "# " + metadata.dump() + "\n";
    out += "global_index,parity,r,a,energy\n";
    for (const auto& row : table.rows) {
        out += std::to_string(row.label.global_index);
        out += ',';
        out += to_string(row.label.parity);
        out += ',';
        out += std::to_string(row.label.order_r);
        out += ',';
        out += format_value(row.a);
        out += ',';
        out += format_value(row.energy);
        out += '\n';
    }
    return out;
}

std::string to_csv(const FigureDataset& ds) {
    std::string out = "# " + ds.metadata.dump() + "\n";
    out += "series," + ds.x_label + "," + ds.y_label + "\n";
    for (const auto& row : ds.rows) {
        out += row.series;
        out += ',';
        out += format_value(row.x);
        out += ',';
        out += format_value(row.y);
        out += '\n';
    }
    return out;
}

namespace {

// JSON has no infinity; the emitted documents use the same spelling as CSV.
nlohmann::json json_value(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

}  // namespace

nlohmann::json to_json(const SpectrumTable& table, const nlohmann::json& metadata) {
    nlohmann::json doc;
    doc["metadata"] = metadata;
    auto& rows = doc["rows"] = nlohmann::json::array();
    for (const auto& row : table.rows) {
        rows.push_back({{"global_index", row.label.global_index},
                        {"parity", to_string(row.label.parity)},
                        {"r", row.label.order_r},
                        {"a", row.a},
                        {"energy", row.energy}});
    }
    return doc;
}

nlohmann::json to_json(const FigureDataset& ds) {
    nlohmann::json doc;
    doc["metadata"] = ds.metadata;
    doc["figure_id"] = ds.figure_id;
    doc["x_label"] = ds.x_label;
    doc["y_label"] = ds.y_label;
    auto& rows = doc["rows"] = nlohmann::json::array();
    for (const auto& row : ds.rows) {
        rows.push_back({{"series", row.series}, {"x", json_value(row.x)}, {"y", json_value(row.y)}});
    }
    return doc;
}

nlohmann::json metadata_from_csv(const std::string& csv) {
    if (csv.size() < 2 || csv[0] != '#') {
        throw std::invalid_argument("metadata_from_csv: missing '#' metadata line");
    }
    const auto eol = csv.find('\n');
    return nlohmann::json::parse(csv.substr(2, eol - 2));
}

}  // namespace pendulum
