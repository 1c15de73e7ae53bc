#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ucc/curve.hpp"
#include "ucc/dataset.hpp"

namespace ucc {

/// Column layout of tabular inputs.
///   bands:  y, y_hat, z_lower, z_upper   (half-band widths)
///   bounds: y, y_hat, lower, upper       (absolute interval endpoints)
enum class ColumnMode { bands, bounds };

/// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

/// Parses CSV with a header row; columns may appear in any order and extra
/// columns are ignored.  Lines starting with '#' and blank lines are skipped.
/// Throws ParseError with the 1-based physical line, MissingColumn, or the
/// validation errors of the dataset constructors.
Dataset load_csv(std::istream& in, ColumnMode mode, std::string name = "");
Dataset load_csv(const std::string& path, ColumnMode mode);

void save_csv(const Dataset& ds, std::ostream& out, ColumnMode mode = ColumnMode::bands);
void save_csv(const Dataset& ds, const std::string& path, ColumnMode mode = ColumnMode::bands);

/// JSON mirror of the CSV layout: an array of objects with the same keys.
Dataset dataset_from_json(const nlohmann::json& j, ColumnMode mode, std::string name = "");
nlohmann::json dataset_to_json(const Dataset& ds, ColumnMode mode = ColumnMode::bands);

/// Loads a dataset file, sniffing JSON vs CSV and the column mode from the
/// content.  This is what the CLI uses.
Dataset load_dataset(const std::string& path);

/// Curve export: a comment line `# axes=<x:y> n=<N> n_infinite=<M>` followed
/// by a `k,x,y` header and one row per vertex.  With `with_label` the comment
/// line also carries `model=<label>` (whitespace in the label becomes '_') so
/// a file holding several blocks can name the ones after the first.  The JSON
/// form mirrors it.
std::string curve_to_csv(const UccCurve& curve, bool with_label = false);
nlohmann::json curve_to_json(const UccCurve& curve);

/// Reads back an exported curve (vertex multiplicities and the base
/// fingerprint are not part of the format and come back empty).  A file may
/// hold several blocks, each opened by its own `# axes=...` line;
/// curve_from_csv returns the first.
UccCurve curve_from_csv(std::istream& in);
std::vector<UccCurve> curves_from_csv(std::istream& in);

bool looks_like_curve_csv(const std::string& first_line);

std::string read_file(const std::string& path);   // FileNotFound on failure
void write_file(const std::string& path, const std::string& content);

}  // namespace ucc
