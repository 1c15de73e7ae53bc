#include "ucc/io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "ucc/errors.hpp"

namespace ucc {

namespace {

constexpr std::array<const char*, 4> kBandColumns = {"y", "y_hat", "z_lower", "z_upper"};
constexpr std::array<const char*, 4> kBoundColumns = {"y", "y_hat", "lower", "upper"};

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split_csv(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            cells.push_back(trim(line.substr(start)));
            break;
        }
        cells.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return cells;
}

double parse_cell(std::string_view cell, long line_no) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc() || ptr != cell.data() + cell.size()) {
        std::ostringstream msg;
        msg << "ParseError at line " << line_no << ": not a number: '" << cell << "'";
        throw Error(ErrorCode::ParseError, msg.str(), line_no);
    }
    return v;
}

const std::array<const char*, 4>& columns_for(ColumnMode mode) {
    return mode == ColumnMode::bands ? kBandColumns : kBoundColumns;
}

Dataset assemble(ColumnMode mode, std::array<std::vector<double>, 4>&& cols, std::string name) {
    if (mode == ColumnMode::bands) {
        return from_columns(std::move(cols[0]), std::move(cols[1]), std::move(cols[2]),
                            std::move(cols[3]), std::move(name));
    }
    return from_bounds(cols[0], cols[1], cols[2], cols[3], std::move(name));
}

}  // namespace

std::string format_double(double v) {
    std::array<char, 32> buf;
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    (void)ec;
    return std::string(buf.data(), ptr);
}

Dataset load_csv(std::istream& in, ColumnMode mode, std::string name) {
    const auto& wanted = columns_for(mode);
    std::array<int, 4> position = {-1, -1, -1, -1};
    std::array<std::vector<double>, 4> cols;

    std::string line;
    long line_no = 0;
    bool have_header = false;
    std::size_t header_width = 0;

    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view content = trim(line);
        if (content.empty() || content.front() == '#') continue;

        const auto cells = split_csv(content);
        if (!have_header) {
            for (std::size_t w = 0; w < wanted.size(); ++w) {
                for (std::size_t c = 0; c < cells.size(); ++c) {
                    if (cells[c] == wanted[w]) {
                        position[w] = static_cast<int>(c);
                        break;
                    }
                }
                if (position[w] < 0) {
                    throw Error(ErrorCode::MissingColumn,
                                std::string("MissingColumn: '") + wanted[w] + "' not in header");
                }
            }
            header_width = cells.size();
            have_header = true;
            continue;
        }
        if (cells.size() != header_width) {
            std::ostringstream msg;
            msg << "ParseError at line " << line_no << ": expected " << header_width
                << " fields, got " << cells.size();
            throw Error(ErrorCode::ParseError, msg.str(), line_no);
        }
        for (std::size_t w = 0; w < wanted.size(); ++w) {
            cols[w].push_back(parse_cell(cells[static_cast<std::size_t>(position[w])], line_no));
        }
    }
    if (!have_header) {
        throw Error(ErrorCode::EmptyDataset, "EmptyDataset: no header line found");
    }
    return assemble(mode, std::move(cols), std::move(name));
}

namespace {

std::string path_stem(const std::string& path) {
    const auto slash = path.find_last_of("/\\");
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    const auto dot = base.find_last_of('.');
    if (dot != std::string::npos && dot > 0) base.resize(dot);
    return base;
}

}  // namespace

Dataset load_csv(const std::string& path, ColumnMode mode) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::FileNotFound, "FileNotFound: cannot open '" + path + "'");
    return load_csv(in, mode, path_stem(path));
}

void save_csv(const Dataset& ds, std::ostream& out, ColumnMode mode) {
    const auto& names = columns_for(mode);
    out << names[0] << ',' << names[1] << ',' << names[2] << ',' << names[3] << '\n';
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const auto r = ds.record(i);
        const double c2 = mode == ColumnMode::bands ? r.z_lower : r.y_hat - r.z_lower;
        const double c3 = mode == ColumnMode::bands ? r.z_upper : r.y_hat + r.z_upper;
        out << format_double(r.y) << ',' << format_double(r.y_hat) << ',' << format_double(c2)
            << ',' << format_double(c3) << '\n';
    }
}

void save_csv(const Dataset& ds, const std::string& path, ColumnMode mode) {
    std::ostringstream out;
    save_csv(ds, out, mode);
    write_file(path, out.str());
}

Dataset dataset_from_json(const nlohmann::json& j, ColumnMode mode, std::string name) {
    if (!j.is_array()) {
        throw Error(ErrorCode::ParseError, "ParseError: expected a JSON array of records");
    }
    const auto& wanted = columns_for(mode);
    std::array<std::vector<double>, 4> cols;
    long index = 0;
    for (const auto& rec : j) {
        for (std::size_t w = 0; w < wanted.size(); ++w) {
            if (!rec.contains(wanted[w])) {
                throw Error(ErrorCode::MissingColumn,
                            std::string("MissingColumn: '") + wanted[w] + "' not in record " +
                                std::to_string(index));
            }
            const auto& v = rec[wanted[w]];
            if (!v.is_number()) {
                std::ostringstream msg;
                msg << "ParseError at record " << index << ": '" << wanted[w]
                    << "' is not a number";
                throw Error(ErrorCode::ParseError, msg.str(), index);
            }
            cols[w].push_back(v.get<double>());
        }
        ++index;
    }
    return assemble(mode, std::move(cols), std::move(name));
}

nlohmann::json dataset_to_json(const Dataset& ds, ColumnMode mode) {
    const auto& names = columns_for(mode);
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const auto r = ds.record(i);
        nlohmann::json rec;
        rec[names[0]] = r.y;
        rec[names[1]] = r.y_hat;
        rec[names[2]] = mode == ColumnMode::bands ? r.z_lower : r.y_hat - r.z_lower;
        rec[names[3]] = mode == ColumnMode::bands ? r.z_upper : r.y_hat + r.z_upper;
        arr.push_back(std::move(rec));
    }
    return arr;
}

Dataset load_dataset(const std::string& path) {
    const std::string content = read_file(path);
    const auto first = content.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && content[first] == '[') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(content);
        } catch (const nlohmann::json::parse_error& e) {
            throw Error(ErrorCode::ParseError, std::string("ParseError: ") + e.what());
        }
        const bool bands = !j.empty() && j.front().is_object() && j.front().contains("z_lower");
        return dataset_from_json(j, bands ? ColumnMode::bands : ColumnMode::bounds,
                                 path_stem(path));
    }
    // CSV: mode from the header names.
    std::istringstream header_scan(content);
    std::string line;
    ColumnMode mode = ColumnMode::bands;
    while (std::getline(header_scan, line)) {
        const auto t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        mode = t.find("z_lower") != std::string_view::npos ? ColumnMode::bands
                                                           : ColumnMode::bounds;
        break;
    }
    std::istringstream in(content);
    return load_csv(in, mode, path_stem(path));
}

std::string curve_to_csv(const UccCurve& curve, bool with_label) {
    std::ostringstream out;
    out << "# axes=" << curve.axes.name();
    if (with_label && !curve.model_label.empty()) {
        std::string label = curve.model_label;
        std::replace_if(label.begin(), label.end(),
                        [](unsigned char c) { return std::isspace(c) != 0; }, '_');
        out << " model=" << label;
    }
    out << " n=" << curve.n << " n_infinite=" << curve.n_infinite << '\n';
    out << "k,x,y\n";
    for (const auto& p : curve.points) {
        out << format_double(p.k) << ',' << format_double(p.x) << ',' << format_double(p.y)
            << '\n';
    }
    return out.str();
}

nlohmann::json curve_to_json(const UccCurve& curve) {
    nlohmann::json j;
    j["axes"] = curve.axes.name();
    if (!curve.model_label.empty()) j["model"] = curve.model_label;
    j["n"] = curve.n;
    j["n_infinite"] = curve.n_infinite;
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : curve.points) {
        pts.push_back({{"k", p.k}, {"x", p.x}, {"y", p.y}});
    }
    j["points"] = std::move(pts);
    return j;
}

bool looks_like_curve_csv(const std::string& first_line) {
    return first_line.rfind("# axes=", 0) == 0;
}

std::vector<UccCurve> curves_from_csv(std::istream& in) {
    std::vector<UccCurve> curves;
    UccCurve curve;
    std::string line;
    long line_no = 0;
    bool have_meta = false;
    bool have_header = false;
    const auto flush = [&] {
        if (!have_meta && !have_header) return;  // nothing started yet
        if (!have_meta || !have_header || curve.points.empty()) {
            throw Error(ErrorCode::ParseError, "ParseError: incomplete curve file");
        }
        curves.push_back(std::move(curve));
        curve = UccCurve{};
        have_meta = have_header = false;
    };
    while (std::getline(in, line)) {
        ++line_no;
        const auto content = trim(line);
        if (content.empty()) continue;
        if (content.front() == '#') {
            std::istringstream meta{std::string(content.substr(1))};
            std::string token;
            std::vector<std::pair<std::string, std::string>> fields;
            bool starts_block = false;
            while (meta >> token) {
                const auto eq = token.find('=');
                if (eq == std::string::npos) continue;
                fields.emplace_back(token.substr(0, eq), token.substr(eq + 1));
                if (fields.back().first == "axes") starts_block = true;
            }
            if (starts_block) flush();  // every axes= line opens a fresh block
            for (const auto& [key, value] : fields) {
                if (key == "axes") {
                    curve.axes = AxisPair::parse(value);
                    have_meta = true;
                } else if (key == "model") {
                    curve.model_label = value;
                } else if (key == "n") {
                    curve.n = std::stol(value);
                } else if (key == "n_infinite") {
                    curve.n_infinite = std::stol(value);
                }
            }
            continue;
        }
        if (!have_header) {
            if (content != "k,x,y") {
                throw Error(ErrorCode::ParseError,
                            "ParseError: curve file must start with a k,x,y header", line_no);
            }
            have_header = true;
            continue;
        }
        const auto cells = split_csv(content);
        if (cells.size() != 3) {
            throw Error(ErrorCode::ParseError, "ParseError: curve rows have three fields",
                        line_no);
        }
        curve.points.push_back({parse_cell(cells[0], line_no), parse_cell(cells[1], line_no),
                                parse_cell(cells[2], line_no), 0});
    }
    flush();
    if (curves.empty()) {
        throw Error(ErrorCode::ParseError, "ParseError: incomplete curve file");
    }
    return curves;
}

UccCurve curve_from_csv(std::istream& in) { return curves_from_csv(in).front(); }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::FileNotFound, "FileNotFound: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::FileNotFound, "FileNotFound: cannot write '" + path + "'");
    out << content;
}

}  // namespace ucc
