#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pendulum/mathieu.hpp"

namespace pendulum {

/// Labeled (series, x, y) rows behind one published figure, with a metadata
/// block (config echo + provenance) that travels with the data.
struct FigureDataset {
    std::string figure_id;
    std::string x_label;
    std::string y_label;
    struct Row {
        std::string series;
        double x = 0.0;
        double y = 0.0;
    };
    std::vector<Row> rows;
    nlohmann::json metadata;
};

/// Shortest-faithful decimal: 17 significant digits, locale-independent.
/// Identical inputs format to identical bytes.
std::string format_value(double v);

/// CSV with a '#'-prefixed JSON metadata header line.
std::string to_csv(const SpectrumTable& table, const nlohmann::json& metadata);
std::string to_csv(const FigureDataset& ds);

/// Single self-describing JSON document.
nlohmann::json to_json(const SpectrumTable& table, const nlohmann::json& metadata);
nlohmann::json to_json(const FigureDataset& ds);

/// Parse the metadata line back out of a CSV emitted above.
nlohmann::json metadata_from_csv(const std::string& csv);

}  // namespace pendulum
